//! Word equations on decorated Tel-A-graphs.
//!
//! Edges carry formal invertible coefficients. Walking a closed path and
//! multiplying the coefficients (last step leftmost) gives a free-group word
//! that must equal the identity.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graphs::{TelAGraph, TelAKind};
use crate::presentation::{PiMatrix, RelationModule};
use crate::trees::{LabelKind, Mode, Tree};

/// Opaque invertible coefficient. `decoration` is a template in which `_`
/// stands for the base, e.g. `(Δ⊗1⊗1)(_)` or `1⊗_`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoeffSymbol {
    pub base: String,
    pub decoration: String,
    pub inverse: bool,
}

impl CoeffSymbol {
    pub fn new(base: &str, decoration: &str) -> Self {
        CoeffSymbol { base: base.into(), decoration: decoration.into(), inverse: false }
    }

    pub fn plain(base: &str) -> Self {
        Self::new(base, "_")
    }

    pub fn identity() -> Self {
        Self::plain("1")
    }

    /// The base `1` is the unit whatever the decoration.
    pub fn is_identity(&self) -> bool {
        self.base == "1"
    }

    pub fn inverted(&self) -> Self {
        CoeffSymbol { inverse: !self.inverse, ..self.clone() }
    }

    /// The symbol without its inverse flag, and the exponent it stood for.
    fn letter(&self) -> Letter {
        let s = CoeffSymbol { inverse: false, ..self.clone() };
        (s, if self.inverse { -1 } else { 1 })
    }

    fn body(&self) -> String {
        self.decoration.replace('_', &self.base)
    }
}

impl fmt::Display for CoeffSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.inverse, self.decoration == "_") {
            (false, _) => f.write_str(&self.body()),
            (true, true) => write!(f, "{}^-1", self.body()),
            (true, false) => write!(f, "[{}]^-1", self.body()),
        }
    }
}

/// A symbol (never flagged inverse) with exponent `±1`.
pub type Letter = (CoeffSymbol, i8);
pub type Word = Vec<Letter>;

pub fn word_of(symbols: &[CoeffSymbol]) -> Word {
    symbols.iter().filter(|s| !s.is_identity()).map(CoeffSymbol::letter).collect()
}

pub fn inverse(w: &[Letter]) -> Word {
    w.iter().rev().map(|(s, e)| (s.clone(), -e)).collect()
}

pub fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for (s, e) in w {
        match out.last() {
            Some((t, f)) if t == s && *f == -e => {
                out.pop();
            }
            _ => out.push((s.clone(), *e)),
        }
    }
    out
}

/// Same reduction scanning right to left.
pub fn free_reduce_from_right(w: &[Letter]) -> Word {
    let mut rev: Word = w.iter().rev().cloned().collect();
    rev = free_reduce(&rev);
    rev.reverse();
    rev
}

/// Free reduction followed by cancellation of inverse pairs at the two ends.
pub fn cyclic_reduce(w: &[Letter]) -> Word {
    let mut v = free_reduce(w);
    while v.len() >= 2 {
        let (a, b) = (&v[0], &v[v.len() - 1]);
        if a.0 == b.0 && a.1 == -b.1 {
            v.pop();
            v.remove(0);
        } else {
            break;
        }
    }
    v
}

pub fn format_word(w: &[Letter]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let parts: Vec<String> =
        w.iter().map(|(s, e)| if *e < 0 { s.inverted().to_string() } else { s.to_string() }).collect();
    parts.join(" · ")
}

/// `word = 1` attached to the cycle with the given index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordEquation {
    pub word: Word,
    pub cycle: usize,
}

impl WordEquation {
    pub fn new(word: Word, cycle: usize) -> Self {
        WordEquation { word: free_reduce(&word), cycle }
    }

    /// Rotated to begin with a run of positive letters; that run is the left
    /// side and the inverse of the remainder the right side.
    pub fn two_sided(&self) -> (Word, Word) {
        let w = cyclic_reduce(&self.word);
        let n = w.len();
        let start = (0..n).find(|&i| w[i].1 > 0 && w[(i + n - 1) % n].1 < 0);
        let Some(start) = start else {
            return if w.iter().all(|l| l.1 > 0) { (w, Vec::new()) } else { (Vec::new(), inverse(&w)) };
        };
        let rot: Word = w[start..].iter().chain(&w[..start]).cloned().collect();
        let split = rot.iter().position(|l| l.1 < 0).unwrap_or(n);
        (rot[..split].to_vec(), inverse(&rot[split..]))
    }
}

impl fmt::Display for WordEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = 1", format_word(&self.word))
    }
}

/// Equal up to free and cyclic reduction, rotation and inversion.
pub fn word_equivalent(a: &WordEquation, b: &WordEquation) -> bool {
    let x = cyclic_reduce(&a.word);
    let y = cyclic_reduce(&b.word);
    if x.len() != y.len() {
        return false;
    }
    if x.is_empty() {
        return true;
    }
    let rotations = |w: &Word, target: &Word| (0..w.len()).any(|k| w[k..].iter().chain(&w[..k]).eq(target.iter()));
    rotations(&x, &y) || rotations(&inverse(&x), &y)
}

/// Oriented graph with a word on every edge, read along its arrow.
#[derive(Debug, Clone)]
pub struct DecoratedGraph {
    pub graph: TelAGraph,
    pub edge_words: Vec<Word>,
}

pub fn decorate(g: &TelAGraph, labels: &[Option<CoeffSymbol>]) -> Result<DecoratedGraph> {
    if g.orientation.is_none() {
        return Err(Error::OrientationMissing);
    }
    let mut edge_words = Vec::with_capacity(g.edge_count());
    for e in 0..g.edge_count() {
        match labels.get(e).and_then(Option::as_ref) {
            Some(s) => edge_words.push(word_of(core::slice::from_ref(s))),
            None => return Err(Error::MissingLabel(e)),
        }
    }
    Ok(DecoratedGraph { graph: g.clone(), edge_words })
}

/// Decorates from the entries of `π(n)`, keyed by `(row, column)`.
///
/// In a dual graph the column `j` joining rows `r → r'` forces
/// `x_{r'} = d(r',j)⁻¹·d(r,j)·x_r` up to sign; in a graphlike graph the row
/// `r` joining columns `u → v` carries `d(r,v)·d(r,u)⁻¹`. Scalar signs are
/// not part of the words.
pub fn decorate_entries(g: &TelAGraph, entries: &BTreeMap<(usize, usize), CoeffSymbol>) -> Result<DecoratedGraph> {
    let Some(o) = &g.orientation else {
        return Err(Error::OrientationMissing);
    };
    let mut edge_words = Vec::with_capacity(g.edge_count());
    for (e, ed) in g.edges.iter().enumerate() {
        let (t, h) = o.arrows[e];
        let key = |v: usize| match g.kind {
            TelAKind::Dual => (v, ed.source),
            TelAKind::Graphlike => (ed.source, v),
        };
        let (Some(dt), Some(dh)) = (entries.get(&key(t)), entries.get(&key(h))) else {
            return Err(Error::MissingLabel(e));
        };
        let w = match g.kind {
            TelAKind::Dual => word_of(&[dh.inverted(), dt.clone()]),
            TelAKind::Graphlike => word_of(&[dh.clone(), dt.inverted()]),
        };
        edge_words.push(free_reduce(&w));
    }
    Ok(DecoratedGraph { graph: g.clone(), edge_words })
}

/// One reduced equation per cycle of the graph's cycle basis.
pub fn derive_equations(dg: &DecoratedGraph) -> Vec<WordEquation> {
    let g = &dg.graph;
    let arrows = &g.orientation.as_ref().expect("decorated graphs are oriented").arrows;
    g.cycle_basis()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let mut word: Word = Vec::new();
            for s in &c.steps {
                let along = arrows[s.edge] == (s.from, s.to) || s.from == s.to;
                let seg = if along { dg.edge_words[s.edge].clone() } else { inverse(&dg.edge_words[s.edge]) };
                word = seg.into_iter().chain(word).collect();
            }
            WordEquation::new(word, k)
        })
        .collect()
}

fn shape(t: &Tree) -> String {
    match t {
        Tree::Leaf(_) => "1".into(),
        Tree::Node(l, cs) => {
            let inner: Vec<String> = cs.iter().map(shape).collect();
            format!("{}({})", l.name, inner.join(","))
        }
    }
}

/// Coefficients of `π(n)` for a relation whose terms carry invertible
/// coefficients. `bases` maps `(relation label, term)` to a base name; other
/// terms get the unit. Grafting a generator into input `i` of the relation
/// decorates slot `i` with `Δ`, and `p` inputs to the left and `q` to the
/// right of the relation vertex wrap the symbol as `1⊗…⊗1`.
pub fn quantized_entries(
    rm: &RelationModule,
    pm: &PiMatrix,
    bases: &BTreeMap<(String, Tree), String>,
) -> Result<BTreeMap<(usize, usize), CoeffSymbol>> {
    if rm.mode() != Mode::NonSigma {
        return Err(Error::InvalidPresentation("quantized coefficients need a non-Σ presentation".into()));
    }
    let n = pm.arity;
    let mut out = BTreeMap::new();
    for (i, m) in pm.rows.iter().enumerate() {
        let path = m.vertex_paths(LabelKind::Rel).remove(0);
        let sub = m.at(&path);
        let Tree::Node(l, kids) = sub else { unreachable!() };
        let b = &rm.basis[l.index];
        let rel = &rm.presentation.relations[b.relation].label;
        let leaves = sub.leaves();
        let p = (*leaves.iter().min().unwrap() - 1) as usize;
        let q = n - *leaves.iter().max().unwrap() as usize;
        let slots: Vec<String> = kids
            .iter()
            .map(|k| match k {
                Tree::Leaf(_) => "1".into(),
                Tree::Node(_, cs) if cs.iter().all(|c| matches!(c, Tree::Leaf(_))) => "Δ".into(),
                t => format!("Δ[{}]", shape(t)),
            })
            .collect();
        let mut deco =
            if slots.iter().all(|s| s == "1") { "_".to_string() } else { format!("({})(_)", slots.join("⊗")) };
        if p + q > 0 {
            deco = format!("{}{}{}", "1⊗".repeat(p), deco, "⊗1".repeat(q));
        }
        for (term, _) in b.element.iter() {
            let replaced = m.replace_at(&path, term.graft(kids));
            for (t, _) in rm.canonical(&replaced).iter() {
                let col = pm
                    .col_index(t)
                    .ok_or_else(|| Error::InternalInconsistency(format!("tree {t} missing from π columns")))?;
                let base = bases.get(&(rel.clone(), term.clone())).map_or("1", String::as_str);
                let sym = CoeffSymbol::new(base, if base == "1" { "_" } else { &deco });
                if out.insert((i, col), sym).is_some() {
                    return Err(Error::InternalInconsistency(format!("two terms of {m} meet column {col}")));
                }
            }
        }
    }
    Ok(out)
}
