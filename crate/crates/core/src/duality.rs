//! Quadratic duals, the dimension formula for `C(4)` and the generating
//! function test `g_P(−g_{P!}(−x)) = x`.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{self, rat, Rational, SparseMatrix};
use crate::coherence::coherence_constraints;
use crate::error::{Error, Result};
use crate::presentation::{act_element, Presentation, Relation, RelationModule};
use crate::trees::{perm_sign, permutations, Element, GeneratorSymbol, Label, Mode, Symmetry, Tree};

/// Dimensions `dim P(n)` for `n = 1, 2, …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimSeries {
    pub dims: Vec<u64>,
    pub mode: Mode,
}

impl DimSeries {
    /// Prepends `dim P(1) = 1` to the dimensions for arities `2..`.
    pub fn from_arity_two(rest: &[usize], mode: Mode) -> Self {
        let mut dims = alloc::vec![1u64];
        dims.extend(rest.iter().map(|&d| d as u64));
        DimSeries { dims, mode }
    }
}

/// Weight of a canonical arity-3 monomial in the pairing with its dual:
/// the sign of its leaf word, negated when the inner vertex is the right
/// child of the root.
pub fn pairing_weight(t: &Tree) -> i32 {
    let Tree::Node(_, kids) = t else {
        return 1;
    };
    let leaves = t.leaves();
    let right = matches!(kids.last(), Some(Tree::Node(..)));
    perm_sign(&leaves) * if right { -1 } else { 1 }
}

fn dual_symmetry(s: Symmetry) -> Symmetry {
    match s {
        Symmetry::Sign => Symmetry::Trivial,
        Symmetry::Trivial => Symmetry::Sign,
        Symmetry::None => Symmetry::None,
    }
}

fn rename(t: &Tree, labels: &[Arc<Label>]) -> Tree {
    match t {
        Tree::Leaf(_) => t.clone(),
        Tree::Node(l, cs) => Tree::Node(labels[l.index].clone(), cs.iter().map(|c| rename(c, labels)).collect()),
    }
}

fn check_quadratic(p: &Presentation) -> Result<()> {
    if !p.is_quadratic() {
        return Err(Error::NotQuadratic(alloc::format!("`{}` needs binary generators and ternary relations", p.name)));
    }
    if p.mode == Mode::Symmetric {
        if let Some(g) = p.generators.iter().find(|g| g.symmetry == Symmetry::None) {
            return Err(Error::NotQuadratic(alloc::format!("generator `{}` has no declared Σ₂-action", g.name)));
        }
    }
    Ok(())
}

/// The quadratic dual: dual generators `name!` (with the Σ₂-action twisted
/// by the sign in symmetric mode) and the annihilator of the relations.
pub fn quadratic_dual(p: &Presentation) -> Result<Presentation> {
    check_quadratic(p)?;
    let rm = RelationModule::new(p)?;
    let free = rm.tree_basis(3);
    let rels: Vec<&Element> = rm.basis.iter().map(|b| &b.element).collect();
    let mut m = SparseMatrix::zeros(free.len(), rels.len());
    for (j, r) in rels.iter().enumerate() {
        for (t, c) in r.iter() {
            let i = free.binary_search(t).expect("relation monomial in basis");
            m.set(i, j, c * rat(i64::from(pairing_weight(t))));
        }
    }
    let perp = algebra::kernel(&m);

    let generators: Vec<GeneratorSymbol> = p
        .generators
        .iter()
        .map(|g| GeneratorSymbol {
            name: alloc::format!("{}!", g.name),
            arity: g.arity,
            degree: g.degree,
            symmetry: if p.mode == Mode::Symmetric { dual_symmetry(g.symmetry) } else { g.symmetry },
        })
        .collect();
    let labels: Vec<Arc<Label>> = generators.iter().enumerate().map(|(i, g)| Label::generator(i, g)).collect();
    // In symmetric mode only Σ-orbit generators are stated.
    let mut orbit_span = algebra::Subspace::zero(free.len());
    let mut relations = Vec::new();
    for v in perp.basis() {
        if orbit_span.contains_vector(v) {
            continue;
        }
        let mut renamed = Element::zero(3);
        for (t, c) in free.iter().zip(v) {
            renamed.add_term(rename(t, &labels), c.clone());
        }
        let orbit: Vec<Vec<Rational>> = match p.mode {
            Mode::NonSigma => alloc::vec![v.clone()],
            Mode::Symmetric => permutations(3)
                .iter()
                .map(|s| {
                    let img = act_element(&renamed, s, p.mode);
                    let mut w = alloc::vec![Rational::zero(); free.len()];
                    for (t, c) in img.iter() {
                        let back = rename(t, &rm.generators);
                        w[free.binary_search(&back).expect("canonical monomial")] += c;
                    }
                    w
                })
                .collect(),
        };
        orbit_span = orbit_span.extend(orbit);
        let label = alloc::format!("q{}", relations.len() + 1);
        relations.push(Relation { label, element: renamed });
    }
    let dual = Presentation::new(&alloc::format!("{}!", p.name), p.mode, generators, relations)?;
    let closure = RelationModule::new(&dual)?.basis.len();
    if closure != perp.dim() {
        return Err(Error::InternalInconsistency(alloc::format!(
            "annihilator of dimension {} is not Σ-stable (closure {closure})",
            perp.dim()
        )));
    }
    Ok(dual)
}

/// `dim C(4)` predicted from `dim P(2)`, `dim P(3)`, `dim P(4)`.
pub fn cp_formula(p2: i64, p3: i64, p4: i64, mode: Mode) -> i64 {
    match mode {
        Mode::NonSigma => p4 + 5 * p2 * (p2 * p2 - p3),
        Mode::Symmetric => p4 + 5 * p2 * (3 * p2 * p2 - 2 * p3),
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `Σ dims[n]/w(n) xⁿ` truncated at degree `n_max`, with `w(n) = n!` in
/// symmetric mode and `1` otherwise. Arities past the end of `dims` count
/// as zero.
pub fn generating_function(s: &DimSeries, n_max: usize) -> Vec<Rational> {
    let mut g = alloc::vec![Rational::zero(); n_max + 1];
    for (n, c) in g.iter_mut().enumerate().skip(1) {
        let d = s.dims.get(n - 1).copied().unwrap_or(0);
        let w = match s.mode {
            Mode::NonSigma => BigInt::one(),
            Mode::Symmetric => factorial(n),
        };
        *c = Rational::new(BigInt::from(d), w);
    }
    g
}

fn mul_trunc(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len();
    let mut out = alloc::vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficients of `x¹ … x^N` in `g_a(−g_b(−x)) − x`.
pub fn koszul_gf_check(a: &DimSeries, b: &DimSeries, n_max: usize) -> Vec<Rational> {
    let ga = generating_function(a, n_max);
    let gb = generating_function(b, n_max);
    let h: Vec<Rational> =
        gb.iter().enumerate().map(|(n, c)| if n % 2 == 0 { -c.clone() } else { c.clone() }).collect();
    let mut out = alloc::vec![Rational::zero(); n_max + 1];
    let mut power = alloc::vec![Rational::zero(); n_max + 1];
    power[0] = Rational::one();
    for c in ga.iter().skip(1) {
        power = mul_trunc(&power, &h);
        for (o, p) in out.iter_mut().zip(&power) {
            *o += c * p;
        }
    }
    if n_max >= 1 {
        out[1] -= Rational::one();
    }
    out.remove(0);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MainCheck {
    pub dim_c4: usize,
    pub dim_dual4: usize,
    pub dual_name: String,
    pub holds: bool,
}

/// Compares `dim C(4)` with `dim P^!(4)`.
pub fn theorem_main_check(p: &Presentation) -> Result<MainCheck> {
    check_quadratic(p)?;
    let dual = quadratic_dual(p)?;
    let dim_c4 = coherence_constraints(p, 4)?.dim_c;
    let dim_dual4 = RelationModule::new(&dual)?.operad_dims(4)[2];
    Ok(MainCheck { dim_c4, dim_dual4, dual_name: dual.name.clone(), holds: dim_c4 == dim_dual4 })
}
