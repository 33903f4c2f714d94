//! `ker π ⊇ O`, `D = ker π / O` and the indecomposables `C` of `D`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::{self, apply, is_zero_vec, normalize, Rational, Subspace};
use crate::error::{Error, Result};
use crate::presentation::{PiMatrix, Presentation, RelationModule};
use crate::trees::{compose, Element, LabelKind, Mode, Tree};

#[derive(Debug, Clone)]
pub struct CoherenceReport {
    pub arity: usize,
    pub dim_ker: usize,
    pub dim_o: usize,
    pub dim_d: usize,
    pub dim_dec: usize,
    pub dim_c: usize,
    /// Representatives of `C(n)`, normalized so the first nonzero
    /// coordinate is one, as combinations of module monomials.
    pub constraints: Vec<Element>,
    pub constraint_vectors: Vec<Vec<Rational>>,
}

/// Per-arity data: `π(n)`, its kernel and `O(n)`.
#[derive(Debug, Clone)]
pub struct ArityData {
    pub pi: PiMatrix,
    pub kernel: Subspace,
    pub obvious: Subspace,
}

impl ArityData {
    pub fn new(rm: &RelationModule, n: usize) -> Result<Self> {
        let pi = rm.assemble_pi(n);
        let kernel = algebra::kernel(&pi.matrix);
        let obvious = obvious_relations_in(rm, &pi)?;
        Ok(ArityData { pi, kernel, obvious })
    }

    pub fn d_representatives(&self) -> Result<Subspace> {
        algebra::quotient_representatives(&self.kernel, &self.obvious)
    }
}

/// Span of `π_v(w) − π_u(w)` over trees `w` carrying two relation vertices
/// `u`, `v`. Both orders of substituting one relation inside (or beside)
/// another are covered.
pub fn obvious_relations_in(rm: &RelationModule, pi: &PiMatrix) -> Result<Subspace> {
    let n = pi.arity;
    let mut gens = Vec::new();
    for w in rm.doubly_decorated(n) {
        let paths = w.vertex_paths(LabelKind::Rel);
        let a = pi.row_vector(&rm.substitute(&w, &paths[1]));
        let b = pi.row_vector(&rm.substitute(&w, &paths[0]));
        let v: Vec<Rational> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
        if !is_zero_vec(&apply(&v, &pi.matrix)) {
            return Err(Error::InternalInconsistency(alloc::format!("obvious relation from {w} is not in ker π")));
        }
        if !is_zero_vec(&v) {
            gens.push(v);
        }
    }
    Ok(Subspace::from_spanning(pi.rows.len(), gens))
}

pub fn obvious_relations(p: &Presentation, n: usize) -> Result<Subspace> {
    let rm = RelationModule::new(p)?;
    obvious_relations_in(&rm, &rm.assemble_pi(n))
}

fn element_of(pi: &PiMatrix, v: &[Rational]) -> Element {
    let mut e = Element::zero(pi.arity);
    for (t, c) in pi.rows.iter().zip(v) {
        e.add_term(t.clone(), c.clone());
    }
    e
}

/// Closure of a subspace of `F(E)⟨R⟩(n)` under the adjacent transpositions.
fn sigma_closure(rm: &RelationModule, pi: &PiMatrix, mut s: Subspace) -> Subspace {
    let n = pi.arity;
    loop {
        let before = s.dim();
        let mut extra = Vec::new();
        for v in s.basis() {
            let e = element_of(pi, v);
            for i in 1..n {
                let mut sigma: Vec<u32> = (1..=n as u32).collect();
                sigma.swap(i - 1, i);
                let mut img = Element::zero(n);
                for (t, c) in e.iter() {
                    img.add_scaled(&rm.act(t, &sigma), c);
                }
                extra.push(pi.row_vector(&img));
            }
        }
        s = s.extend(extra);
        if s.dim() == before {
            return s;
        }
    }
}

/// Compositions of lower-arity `D` representatives with single generators on
/// either side, plus `O(n)`; `lower_d` maps each arity to its `π` data and
/// `D` representatives.
pub fn decomposables_of_d(
    rm: &RelationModule,
    data: &ArityData,
    lower_d: &BTreeMap<usize, (PiMatrix, Subspace)>,
) -> Result<Subspace> {
    let pi = &data.pi;
    let n = pi.arity;
    let mode = rm.mode();
    let mut vecs = Vec::new();
    for (&m, (lower_pi, reps)) in lower_d.range(..n) {
        for g in &rm.generators {
            if m + g.arity - 1 != n {
                continue;
            }
            let gt = Tree::Node(g.clone(), (1..=g.arity as u32).map(Tree::Leaf).collect());
            for z in reps.basis() {
                let ze = element_of(lower_pi, z);
                // z ∘_i g
                for i in 1..=m {
                    let mut out = Element::zero(n);
                    for (t, c) in ze.iter() {
                        let (u, s) = compose(t, i, &gt, mode)?;
                        out.add_scaled(&rm.canonical(&u), &(c * s));
                    }
                    vecs.push(pi.row_vector(&out));
                }
                // g ∘_i z
                for i in 1..=g.arity {
                    let mut out = Element::zero(n);
                    for (t, c) in ze.iter() {
                        let (u, s) = compose(&gt, i, t, mode)?;
                        out.add_scaled(&rm.canonical(&u), &(c * s));
                    }
                    vecs.push(pi.row_vector(&out));
                }
            }
        }
    }
    let mut dec = Subspace::from_spanning(pi.rows.len(), vecs);
    if mode == Mode::Symmetric && dec.dim() > 0 {
        dec = sigma_closure(rm, pi, dec);
    }
    for v in dec.basis() {
        if !data.kernel.contains_vector(v) {
            return Err(Error::InternalInconsistency("decomposable outside ker π".into()));
        }
    }
    Ok(dec.sum(&data.obvious))
}

/// Coherence data for every arity from the relation arity up to `n`.
pub fn coherence_tower(p: &Presentation, n: usize) -> Result<Vec<CoherenceReport>> {
    let rm = RelationModule::new(p)?;
    let Some(k) = rm.relation_arity() else {
        return Ok(Vec::new());
    };
    let mut lower: BTreeMap<usize, (PiMatrix, Subspace)> = BTreeMap::new();
    let mut out = Vec::new();
    for m in k..=n {
        let data = ArityData::new(&rm, m)?;
        let dec_o = decomposables_of_d(&rm, &data, &lower)?;
        let reps = algebra::quotient_representatives(&data.kernel, &dec_o)?;
        let dim_ker = data.kernel.dim();
        let dim_o = data.obvious.dim();
        let mut constraint_vectors = Vec::new();
        let mut constraints = Vec::new();
        for v in reps.basis() {
            let mut v = v.clone();
            normalize(&mut v);
            debug_assert!(v.iter().any(|x| !x.is_zero()));
            constraints.push(element_of(&data.pi, &v));
            constraint_vectors.push(v);
        }
        out.push(CoherenceReport {
            arity: m,
            dim_ker,
            dim_o,
            dim_d: dim_ker - dim_o,
            dim_dec: dec_o.dim() - dim_o,
            dim_c: dim_ker - dec_o.dim(),
            constraints,
            constraint_vectors,
        });
        let d_reps = data.d_representatives()?;
        lower.insert(m, (data.pi, d_reps));
    }
    Ok(out)
}

pub fn coherence_constraints(p: &Presentation, n: usize) -> Result<CoherenceReport> {
    let Some(k) = p.relation_arity() else {
        return Err(Error::InvalidPresentation("no relations".into()));
    };
    if n < k {
        return Err(Error::InvalidPresentation(alloc::format!("arity {n} is below the relation arity {k}")));
    }
    Ok(coherence_tower(p, n)?.pop().expect("tower reaches n"))
}
