mod common;

use operad_core::algebra::{rat, Zero};
use operad_core::duality::{
    cp_formula, generating_function, koszul_gf_check, pairing_weight, quadratic_dual, theorem_main_check, DimSeries,
};
use operad_core::presentation::{Presentation, RelationModule};
use operad_core::trees::{parse_tree, Mode};

fn dims(p: &Presentation) -> Vec<usize> {
    RelationModule::new(p).unwrap().operad_dims(4)
}

fn series(p: &Presentation) -> DimSeries {
    DimSeries::from_arity_two(&dims(p), p.mode)
}

#[test]
fn dual_dimensions() {
    let dual = |p: Presentation| dims(&quadratic_dual(&p).unwrap());
    assert_eq!(dual(common::ass()), [1, 1, 1]);
    assert_eq!(dual(common::lie()), [1, 1, 1]);
    assert_eq!(dual(common::comm()), [1, 2, 6]);
    assert_eq!(dual(common::ns_poisson()), [2, 4, 8]);
    assert_eq!(dual(common::digebra()), [2, 5, 14]);
}

#[test]
fn dual_is_an_involution_on_dimensions() {
    for p in [common::ass(), common::lie(), common::comm(), common::ns_poisson(), common::digebra()] {
        let dd = quadratic_dual(&quadratic_dual(&p).unwrap()).unwrap();
        assert_eq!(dims(&dd), dims(&p), "{}", p.name);
        assert_eq!(RelationModule::new(&dd).unwrap().basis.len(), RelationModule::new(&p).unwrap().basis.len());
    }
}

#[test]
fn relation_space_dimensions_are_complementary() {
    for p in [common::ass(), common::lie(), common::comm(), common::ns_poisson(), common::digebra()] {
        let rm = RelationModule::new(&p).unwrap();
        let d = quadratic_dual(&p).unwrap();
        let rd = RelationModule::new(&d).unwrap();
        let space = rm.tree_basis(3).len();
        let orbit = |rm: &RelationModule| space - rm.operad_dims(3)[1];
        assert_eq!(orbit(&rm) + orbit(&rd), space, "{}", p.name);
    }
}

#[test]
fn formula_values() {
    assert_eq!(cp_formula(1, 1, 1, Mode::NonSigma), 1);
    assert_eq!(cp_formula(1, 2, 6, Mode::Symmetric), 1);
    assert_eq!(cp_formula(1, 1, 1, Mode::Symmetric), 6);
    assert_eq!(cp_formula(2, 4, 8, Mode::NonSigma), 8);
    assert_eq!(cp_formula(2, 3, 4, Mode::NonSigma), 14);
}

#[test]
fn main_check_holds() {
    for p in [common::ass(), common::lie(), common::comm(), common::ns_poisson(), common::digebra()] {
        let m = theorem_main_check(&p).unwrap();
        assert!(m.holds, "{} {m:?}", p.name);
        assert_eq!(m.dual_name, format!("{}!", p.name));
    }
    assert!(theorem_main_check(&common::ainfty()).is_err());
}

#[test]
fn generating_function_coefficients() {
    let lie = series(&common::lie());
    let g = generating_function(&lie, 4);
    // x + x^2/2 + 2x^3/6 + 6x^4/24
    assert_eq!(g, [rat(0), rat(1), rat(1) / rat(2), rat(1) / rat(3), rat(1) / rat(4)]);
}

#[test]
fn koszul_pairs_have_zero_residual() {
    let ass = series(&common::ass());
    let zero = |r: Vec<_>| r.iter().all(|x: &operad_core::algebra::Rational| x.is_zero());
    assert!(zero(koszul_gf_check(&ass, &ass, 4)));
    let ass6 = DimSeries::from_arity_two(&RelationModule::new(&common::ass()).unwrap().operad_dims(6), Mode::NonSigma);
    assert!(zero(koszul_gf_check(&ass6, &ass6, 6)));
    assert!(zero(koszul_gf_check(&series(&common::lie()), &series(&common::comm()), 4)));
    let nsp = series(&common::ns_poisson());
    assert!(zero(koszul_gf_check(&nsp, &nsp, 4)));
    let dig = common::digebra();
    assert!(zero(koszul_gf_check(&series(&dig), &series(&quadratic_dual(&dig).unwrap()), 4)));
    assert!(!zero(koszul_gf_check(&ass, &nsp, 4)));
}

#[test]
fn pairing_weights() {
    let rm = RelationModule::new(&common::ass()).unwrap();
    let t = |s: &str| parse_tree(s, &rm.generators).unwrap();
    assert_eq!(pairing_weight(&t("x(x(1,2),3)")), 1);
    assert_eq!(pairing_weight(&t("x(1,x(2,3))")), -1);
}
