//! Presentations `⟨E; R⟩`, the free module on the relations and the map
//! `π(n)` from it to the free operad.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::{self, rat, Rational, SparseMatrix, Subspace};
use crate::error::{Error, Result};
use crate::trees::{
    self, canonicalize, enumerate_with_relations, gen_labels, graft_sign, parse_element, permutations, Element,
    GeneratorSymbol, Label, LabelKind, Mode, Symmetry, Tree,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub label: String,
    pub element: Element,
}

/// Generators and stated relations. Relation elements are stored in
/// canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub name: String,
    pub mode: Mode,
    pub generators: Vec<GeneratorSymbol>,
    pub relations: Vec<Relation>,
}

fn valid_ident(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '!' || c == '\'')
}

impl Presentation {
    /// Builds a presentation from relation texts in prefix notation.
    pub fn parse(name: &str, mode: Mode, generators: Vec<GeneratorSymbol>, relations: &[(&str, &str)]) -> Result<Self> {
        let labels = gen_labels(&generators, mode)?;
        let mut rels = Vec::new();
        for (label, text) in relations {
            let element = parse_element(text, &labels)?;
            rels.push(Relation { label: label.to_string(), element });
        }
        Self::new(name, mode, generators, rels)
    }

    pub fn new(name: &str, mode: Mode, generators: Vec<GeneratorSymbol>, relations: Vec<Relation>) -> Result<Self> {
        let invalid = |m: String| Err(Error::InvalidPresentation(m));
        let labels = gen_labels(&generators, mode)?;
        let mut names: Vec<&str> = Vec::new();
        for g in &generators {
            if !valid_ident(&g.name) {
                return invalid(alloc::format!("bad generator name `{}`", g.name));
            }
            if g.arity < 2 {
                return invalid(alloc::format!("generator `{}` has arity below 2", g.name));
            }
            if mode == Mode::NonSigma && g.symmetry != Symmetry::None {
                return invalid(alloc::format!("generator `{}` declares a symmetry in non-Σ mode", g.name));
            }
            if mode == Mode::Symmetric && g.degree != 0 {
                return invalid(alloc::format!("graded generator `{}` in symmetric mode", g.name));
            }
            names.push(&g.name);
        }
        let mut canon = Vec::new();
        for r in &relations {
            if !valid_ident(&r.label) {
                return invalid(alloc::format!("bad relation label `{}`", r.label));
            }
            names.push(&r.label);
            if r.element.is_zero() {
                return invalid(alloc::format!("relation `{}` is zero", r.label));
            }
            let mut e = Element::zero(r.element.arity);
            let mut degree = None;
            for (t, c) in r.element.iter() {
                if t.count_kind(LabelKind::Rel) > 0 {
                    return invalid(alloc::format!("relation `{}` mentions a relation", r.label));
                }
                // rebind labels so that externally built trees agree with ours
                let t = rebind(t, &labels)?;
                if mode == Mode::NonSigma && t.leaves() != (1..=t.arity() as u32).collect::<Vec<_>>() {
                    return invalid(alloc::format!(
                        "relation `{}`: non-Σ leaves must read 1..n left to right",
                        r.label
                    ));
                }
                if *degree.get_or_insert(t.degree()) != t.degree() {
                    return invalid(alloc::format!("relation `{}` is not homogeneous in degree", r.label));
                }
                let (t, s) = canonicalize(&t, mode);
                e.add_term(t, c * rat(i64::from(s)));
            }
            if e.is_zero() {
                return invalid(alloc::format!("relation `{}` vanishes in canonical form", r.label));
            }
            canon.push(Relation { label: r.label.clone(), element: e });
        }
        let mut sorted = names.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return invalid("duplicate generator or relation name".into());
        }
        if let Some(first) = canon.first() {
            if canon.iter().any(|r| r.element.arity != first.element.arity) {
                return invalid("relations of several arities".into());
            }
        }
        Ok(Presentation { name: name.into(), mode, generators, relations: canon })
    }

    pub fn relation_arity(&self) -> Option<usize> {
        self.relations.first().map(|r| r.element.arity)
    }

    pub fn is_quadratic(&self) -> bool {
        self.generators.iter().all(|g| g.arity == 2) && self.relation_arity().is_none_or(|a| a == 3)
    }

    pub fn labels(&self) -> Vec<Arc<Label>> {
        gen_labels(&self.generators, self.mode).expect("validated on construction")
    }
}

fn rebind(t: &Tree, labels: &[Arc<Label>]) -> Result<Tree> {
    match t {
        Tree::Leaf(_) => Ok(t.clone()),
        Tree::Node(l, cs) => {
            let Some(nl) = labels.iter().find(|x| x.name == l.name) else {
                return Err(Error::InvalidPresentation(alloc::format!("unknown generator `{}`", l.name)));
            };
            if nl.arity != cs.len() {
                return Err(Error::InvalidPresentation(alloc::format!("`{}` used with wrong arity", l.name)));
            }
            let kids = cs.iter().map(|c| rebind(c, labels)).collect::<Result<Vec<_>>>()?;
            Ok(Tree::Node(nl.clone(), kids))
        }
    }
}

/// One element of the chosen basis of the relation space `R(k)`.
#[derive(Debug, Clone)]
pub struct RelationBasisElement {
    pub label: Arc<Label>,
    /// Index of the stated relation it came from.
    pub relation: usize,
    /// Leaf permutation applied to that relation (identity in non-Σ mode).
    pub sigma: Vec<u32>,
    pub element: Element,
}

/// Everything needed to work with `F(E)⟨R⟩`: generator labels, the basis of
/// the relation space and, in symmetric mode, how that basis transforms under
/// permutation of the relation inputs.
#[derive(Debug, Clone)]
pub struct RelationModule {
    pub presentation: Presentation,
    pub generators: Vec<Arc<Label>>,
    pub basis: Vec<RelationBasisElement>,
    /// `action[s][τ]`: the element `b_s` with inputs permuted by `τ`
    /// (indexed like `permutations(k)`), written in the basis.
    action: Vec<Vec<Vec<(usize, Rational)>>>,
}

fn perm_name(label: &str, sigma: &[u32]) -> String {
    if sigma.iter().enumerate().all(|(i, &s)| s as usize == i + 1) {
        return label.to_string();
    }
    let sep = if sigma.len() > 9 { "-" } else { "" };
    let digits: Vec<String> = sigma.iter().map(|s| alloc::format!("{s}")).collect();
    alloc::format!("{label}.{}", digits.join(sep))
}

/// Coordinates of elements over a fixed list of monomials.
struct Coords {
    index: BTreeMap<Tree, usize>,
}

impl Coords {
    fn new(basis: &[Tree]) -> Self {
        Coords { index: basis.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect() }
    }

    fn vector(&self, e: &Element) -> Vec<Rational> {
        let mut v = alloc::vec![Rational::zero(); self.index.len()];
        for (t, c) in e.iter() {
            v[self.index[t]] += c;
        }
        v
    }
}

/// Solves `target = Σ c_s rows[s]` exactly; `None` if not in the span.
fn solve(rows: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    // Augment the transposed system [rowsᵀ | target] and reduce.
    let n = rows.len();
    let dim = target.len();
    let mut a: Vec<Vec<Rational>> = (0..dim)
        .map(|j| {
            let mut r: Vec<Rational> = rows.iter().map(|row| row[j].clone()).collect();
            r.push(target[j].clone());
            r
        })
        .collect();
    let pivots = algebra::rref(&mut a);
    if pivots.contains(&n) {
        return None;
    }
    let mut x = alloc::vec![Rational::zero(); n];
    for (row, &p) in a.iter().zip(&pivots) {
        x[p] = row[n].clone();
    }
    Some(x)
}

impl RelationModule {
    pub fn new(p: &Presentation) -> Result<Self> {
        let generators = p.labels();
        let mut basis: Vec<RelationBasisElement> = Vec::new();
        let Some(k) = p.relation_arity() else {
            return Ok(RelationModule { presentation: p.clone(), generators, basis, action: Vec::new() });
        };
        let free = enumerate_with_relations(&generators, &[], k, p.mode, 0);
        let coords = Coords::new(&free);
        let mut span = Subspace::zero(free.len());
        let sigmas = match p.mode {
            Mode::NonSigma => alloc::vec![(1..=k as u32).collect::<Vec<_>>()],
            Mode::Symmetric => permutations(k),
        };
        for (j, r) in p.relations.iter().enumerate() {
            let degree = r.element.iter().next().map_or(0, |(t, _)| t.degree());
            for (si, sigma) in sigmas.iter().enumerate() {
                let e = act_element(&r.element, sigma, p.mode);
                let v = coords.vector(&e);
                if span.contains_vector(&v) {
                    if si == 0 {
                        return Err(Error::InvalidPresentation(alloc::format!(
                            "relation `{}` is dependent on the others",
                            r.label
                        )));
                    }
                    continue;
                }
                span = span.extend([v]);
                let name = perm_name(&r.label, sigma);
                let label = Label::relation(basis.len(), &name, k, degree);
                basis.push(RelationBasisElement { label, relation: j, sigma: sigma.clone(), element: e });
            }
        }
        let mut action = Vec::new();
        if p.mode == Mode::Symmetric {
            let rows: Vec<Vec<Rational>> = basis.iter().map(|b| coords.vector(&b.element)).collect();
            for b in &basis {
                let mut per = Vec::new();
                for tau in permutations(k) {
                    // children reordered so that new position p holds old child τ(p):
                    // old leaf i of b now points at position τ⁻¹(i)
                    let mut inv = alloc::vec![0u32; k];
                    for (pidx, &t) in tau.iter().enumerate() {
                        inv[t as usize - 1] = pidx as u32 + 1;
                    }
                    let e = act_element(&b.element, &inv, p.mode);
                    let x = solve(&rows, &coords.vector(&e))
                        .ok_or_else(|| Error::InternalInconsistency("relation space is not Σ-stable".into()))?;
                    per.push(x.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect());
                }
                action.push(per);
            }
        }
        Ok(RelationModule { presentation: p.clone(), generators, basis, action })
    }

    pub fn mode(&self) -> Mode {
        self.presentation.mode
    }

    pub fn relation_labels(&self) -> Vec<Arc<Label>> {
        self.basis.iter().map(|b| b.label.clone()).collect()
    }

    pub fn relation_arity(&self) -> Option<usize> {
        self.presentation.relation_arity()
    }

    /// Basis of `F(E)(n)`.
    pub fn tree_basis(&self, n: usize) -> Vec<Tree> {
        enumerate_with_relations(&self.generators, &[], n, self.mode(), 0)
    }

    /// Basis of `F(E)⟨R⟩(n)`: trees with exactly one relation vertex.
    pub fn module_basis(&self, n: usize) -> Vec<Tree> {
        enumerate_with_relations(&self.generators, &self.relation_labels(), n, self.mode(), 1)
    }

    /// Trees with exactly two relation vertices.
    pub fn doubly_decorated(&self, n: usize) -> Vec<Tree> {
        enumerate_with_relations(&self.generators, &self.relation_labels(), n, self.mode(), 2)
    }

    /// Writes a tree (any number of relation vertices, children in any
    /// order) as a combination of canonical trees.
    pub fn canonical(&self, t: &Tree) -> Element {
        let mut e = Element::zero(t.arity());
        for (t, c) in self.canon_terms(t) {
            e.add_term(t, c);
        }
        e
    }

    fn canon_terms(&self, t: &Tree) -> Vec<(Tree, Rational)> {
        let mode = self.mode();
        if mode == Mode::NonSigma {
            return alloc::vec![(t.clone(), Rational::one())];
        }
        match t {
            Tree::Leaf(_) => alloc::vec![(t.clone(), Rational::one())],
            Tree::Node(l, cs) => {
                // expand children
                let mut combos: Vec<(Vec<Tree>, Rational)> = alloc::vec![(Vec::new(), Rational::one())];
                for c in cs {
                    let opts = self.canon_terms(c);
                    let mut next = Vec::new();
                    for (prefix, pc) in &combos {
                        for (ct, cc) in &opts {
                            let mut p = prefix.clone();
                            p.push(ct.clone());
                            next.push((p, pc * cc));
                        }
                    }
                    combos = next;
                }
                let mut out = Vec::new();
                for (mut kids, c) in combos {
                    match l.kind {
                        LabelKind::Gen => {
                            let mut c = c;
                            if l.symmetry != Symmetry::None
                                && kids.len() == 2
                                && kids[0].min_leaf() > kids[1].min_leaf()
                            {
                                kids.swap(0, 1);
                                if l.symmetry == Symmetry::Sign {
                                    c = -c;
                                }
                            }
                            out.push((Tree::Node(l.clone(), kids), c));
                        }
                        LabelKind::Rel => {
                            let k = kids.len();
                            let mut order: Vec<usize> = (0..k).collect();
                            order.sort_by_key(|&i| kids[i].min_leaf());
                            let tau: Vec<u32> = order.iter().map(|&i| i as u32 + 1).collect();
                            let ti = permutations(k).iter().position(|p| *p == tau).unwrap();
                            let sorted: Vec<Tree> = order.iter().map(|&i| kids[i].clone()).collect();
                            for (s, x) in &self.action[l.index][ti] {
                                out.push((Tree::Node(self.basis[*s].label.clone(), sorted.clone()), &c * x));
                            }
                        }
                    }
                }
                out
            }
        }
    }

    /// Substitutes the relation at the vertex `path` of `t`, with Koszul
    /// signs; the result is canonical.
    pub fn substitute(&self, t: &Tree, path: &[usize]) -> Element {
        let Tree::Node(l, kids) = t.at(path) else {
            panic!("substitution path ends at a leaf");
        };
        assert_eq!(l.kind, LabelKind::Rel, "substitution at a generator vertex");
        let b = &self.basis[l.index].element;
        let k = kids.len();
        let blocks: Vec<(u32, &Tree)> = (0..k).rev().map(|i| (i as u32 + 1, &kids[i])).collect();
        let mut out = Element::zero(t.arity());
        for (term, c) in b.iter() {
            let ks = graft_sign(term, &blocks);
            let replaced = t.replace_at(path, term.graft(kids));
            let coeff = c * rat(i64::from(ks));
            for (u, x) in self.canon_terms(&replaced) {
                out.add_term(u, &coeff * x);
            }
        }
        out
    }

    /// Predicted sizes of the tree basis and the module basis at arity 4
    /// for binary generators and ternary relations:
    /// `(5e³, 5er)` in non-Σ mode and `(15e³, 10er)` in symmetric mode,
    /// with `e = dim E(2)` and `r = dim R(3)`.
    pub fn arity_four_formula(&self) -> Option<(usize, usize)> {
        let binary = self.presentation.generators.iter().all(|g| g.arity == 2);
        if !binary || self.relation_arity() != Some(3) {
            return None;
        }
        let e: usize = self
            .presentation
            .generators
            .iter()
            .map(|g| if self.mode() == Mode::Symmetric && g.symmetry == Symmetry::None { 2 } else { 1 })
            .sum();
        let r = self.basis.len();
        Some(match self.mode() {
            Mode::NonSigma => (5 * e * e * e, 5 * e * r),
            Mode::Symmetric => (15 * e * e * e, 10 * e * r),
        })
    }

    /// `π` of a single module monomial.
    pub fn pi(&self, m: &Tree) -> Element {
        let paths = m.vertex_paths(LabelKind::Rel);
        assert_eq!(paths.len(), 1, "module monomials have exactly one relation vertex");
        self.substitute(m, &paths[0])
    }

    pub fn assemble_pi(&self, n: usize) -> PiMatrix {
        let rows = self.module_basis(n);
        let cols = self.tree_basis(n);
        let coords = Coords::new(&cols);
        let mut m = SparseMatrix::new(rows.iter().map(Tree::encode).collect(), cols.iter().map(Tree::encode).collect());
        for (i, r) in rows.iter().enumerate() {
            for (t, c) in self.pi(r).iter() {
                m.add(i, coords.index[t], c);
            }
        }
        PiMatrix { arity: n, rows, cols, matrix: m }
    }

    /// `dim P(n)` for `2 ≤ n ≤ max`.
    pub fn operad_dims(&self, max: usize) -> Vec<usize> {
        (2..=max)
            .map(|n| {
                let pm = self.assemble_pi(n);
                pm.cols.len() - algebra::rank(&pm.matrix)
            })
            .collect()
    }

    /// Leaf relabelling by `σ` followed by canonicalization.
    pub fn act(&self, t: &Tree, sigma: &[u32]) -> Element {
        self.canonical(&t.relabel(&|i| sigma[i as usize - 1]))
    }
}

/// Relabels the leaves of every term by `σ` and canonicalizes.
pub fn act_element(e: &Element, sigma: &[u32], mode: Mode) -> Element {
    let mut out = Element::zero(e.arity);
    for (t, c) in e.iter() {
        let (u, s) = trees::act(t, sigma, mode);
        out.add_term(u, c * rat(i64::from(s)));
    }
    out
}

/// The matrix of `π(n)` with its row and column monomials.
#[derive(Debug, Clone)]
pub struct PiMatrix {
    pub arity: usize,
    pub rows: Vec<Tree>,
    pub cols: Vec<Tree>,
    pub matrix: SparseMatrix,
}

impl PiMatrix {
    pub fn row_index(&self, t: &Tree) -> Option<usize> {
        self.rows.binary_search(t).ok()
    }

    pub fn col_index(&self, t: &Tree) -> Option<usize> {
        self.cols.binary_search(t).ok()
    }

    /// Coordinates of a module element over the rows.
    pub fn row_vector(&self, e: &Element) -> Vec<Rational> {
        let mut v = alloc::vec![Rational::zero(); self.rows.len()];
        for (t, c) in e.iter() {
            let i = self.row_index(t).expect("module monomial outside the basis");
            v[i] += c;
        }
        v
    }

    /// Coordinates of a free-operad element over the columns.
    pub fn col_vector(&self, e: &Element) -> Vec<Rational> {
        let mut v = alloc::vec![Rational::zero(); self.cols.len()];
        for (t, c) in e.iter() {
            let i = self.col_index(t).expect("monomial outside the basis");
            v[i] += c;
        }
        v
    }
}

pub fn module_basis(p: &Presentation, n: usize) -> Result<Vec<Tree>> {
    Ok(RelationModule::new(p)?.module_basis(n))
}

pub fn assemble_pi(p: &Presentation, n: usize) -> Result<PiMatrix> {
    Ok(RelationModule::new(p)?.assemble_pi(n))
}

pub fn operad_dims(p: &Presentation, max: usize) -> Result<Vec<usize>> {
    Ok(RelationModule::new(p)?.operad_dims(max))
}
