//! Basis monomials of free operads.
//!
//! A monomial is a rooted tree whose internal vertices carry generator (or
//! relation) labels and whose leaves carry input numbers. In non-Σ mode the
//! leaves always read `1..n` from left to right. The canonical string
//! `gen(child,child,…)` is both the wire format and the basis order.

mod element;
mod enumerate;
mod parse;

pub use element::Element;
pub use enumerate::{enumerate_basis, enumerate_with_relations, gen_labels, set_partitions};
pub use parse::{parse_element, parse_tree, SymbolResolver};

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::algebra::{rat, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    NonSigma,
    Symmetric,
}

/// Σ₂-action on a binary generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symmetry {
    None,
    Trivial,
    Sign,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSymbol {
    pub name: String,
    pub arity: usize,
    pub degree: i32,
    pub symmetry: Symmetry,
}

impl GeneratorSymbol {
    pub fn new(name: &str, arity: usize) -> Self {
        GeneratorSymbol { name: name.into(), arity, degree: 0, symmetry: Symmetry::None }
    }

    pub fn with_degree(mut self, degree: i32) -> Self {
        self.degree = degree;
        self
    }

    pub fn with_symmetry(mut self, symmetry: Symmetry) -> Self {
        self.symmetry = symmetry;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LabelKind {
    Gen,
    Rel,
}

/// Vertex label. Names are unique across generators and relations, so the
/// name alone decides equality in encodings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Label {
    pub name: String,
    pub kind: LabelKind,
    pub index: usize,
    pub arity: usize,
    pub degree: i32,
    pub symmetry: Symmetry,
}

impl Label {
    pub fn generator(index: usize, g: &GeneratorSymbol) -> Arc<Label> {
        Arc::new(Label {
            name: g.name.clone(),
            kind: LabelKind::Gen,
            index,
            arity: g.arity,
            degree: g.degree,
            symmetry: g.symmetry,
        })
    }

    pub fn relation(index: usize, name: &str, arity: usize, degree: i32) -> Arc<Label> {
        Arc::new(Label { name: name.into(), kind: LabelKind::Rel, index, arity, degree, symmetry: Symmetry::None })
    }

    fn odd(&self) -> bool {
        self.degree % 2 != 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf(u32),
    Node(Arc<Label>, Vec<Tree>),
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        self.encode().cmp(&other.encode())
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf(i) => write!(f, "{i}"),
            Tree::Node(l, cs) => {
                write!(f, "{}(", l.name)?;
                for (k, c) in cs.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl Tree {
    pub fn node(label: Arc<Label>, children: Vec<Tree>) -> Tree {
        Tree::Node(label, children)
    }

    pub fn encode(&self) -> String {
        alloc::format!("{self}")
    }

    pub fn arity(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Node(_, cs) => cs.iter().map(Tree::arity).sum(),
        }
    }

    pub fn degree(&self) -> i32 {
        match self {
            Tree::Leaf(_) => 0,
            Tree::Node(l, cs) => l.degree + cs.iter().map(Tree::degree).sum::<i32>(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Tree::Leaf(_) => 0,
            Tree::Node(_, cs) => 1 + cs.iter().map(Tree::vertex_count).sum::<usize>(),
        }
    }

    pub fn min_leaf(&self) -> u32 {
        match self {
            Tree::Leaf(i) => *i,
            Tree::Node(_, cs) => cs.iter().map(Tree::min_leaf).min().unwrap_or(u32::MAX),
        }
    }

    /// Leaf labels read left to right.
    pub fn leaves(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<u32>) {
        match self {
            Tree::Leaf(i) => out.push(*i),
            Tree::Node(_, cs) => cs.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    pub fn count_kind(&self, kind: LabelKind) -> usize {
        match self {
            Tree::Leaf(_) => 0,
            Tree::Node(l, cs) => usize::from(l.kind == kind) + cs.iter().map(|c| c.count_kind(kind)).sum::<usize>(),
        }
    }

    pub fn relabel(&self, f: &dyn Fn(u32) -> u32) -> Tree {
        match self {
            Tree::Leaf(i) => Tree::Leaf(f(*i)),
            Tree::Node(l, cs) => Tree::Node(l.clone(), cs.iter().map(|c| c.relabel(f)).collect()),
        }
    }

    /// Renumbers leaves `1..n` in left-to-right order.
    pub fn planarize(&self) -> Tree {
        fn go(t: &Tree, next: &mut u32) -> Tree {
            match t {
                Tree::Leaf(_) => {
                    *next += 1;
                    Tree::Leaf(*next)
                }
                Tree::Node(l, cs) => Tree::Node(l.clone(), cs.iter().map(|c| go(c, next)).collect()),
            }
        }
        go(self, &mut 0)
    }

    /// Paths (child index sequences) to vertices of the given kind, in
    /// preorder.
    pub fn vertex_paths(&self, kind: LabelKind) -> Vec<Vec<usize>> {
        fn go(t: &Tree, kind: LabelKind, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if let Tree::Node(l, cs) = t {
                if l.kind == kind {
                    out.push(path.clone());
                }
                for (i, c) in cs.iter().enumerate() {
                    path.push(i);
                    go(c, kind, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(self, kind, &mut Vec::new(), &mut out);
        out
    }

    pub fn at(&self, path: &[usize]) -> &Tree {
        path.iter().fold(self, |t, &i| match t {
            Tree::Node(_, cs) => &cs[i],
            Tree::Leaf(_) => panic!("path runs through a leaf"),
        })
    }

    pub fn replace_at(&self, path: &[usize], new: Tree) -> Tree {
        match path.split_first() {
            None => new,
            Some((&i, rest)) => match self {
                Tree::Node(l, cs) => {
                    let mut cs = cs.clone();
                    cs[i] = cs[i].replace_at(rest, new);
                    Tree::Node(l.clone(), cs)
                }
                Tree::Leaf(_) => panic!("path runs through a leaf"),
            },
        }
    }

    /// Replaces leaf `ℓ` of `self` by `blocks[ℓ - 1]`.
    pub fn graft(&self, blocks: &[Tree]) -> Tree {
        match self {
            Tree::Leaf(i) => blocks[*i as usize - 1].clone(),
            Tree::Node(l, cs) => Tree::Node(l.clone(), cs.iter().map(|c| c.graft(blocks)).collect()),
        }
    }
}

/// Odd-degree flags of the vertices of `t` in mirror preorder (root, then
/// children from right to left).
fn odd_flags(t: &Tree, out: &mut Vec<bool>) {
    if let Tree::Node(l, cs) = t {
        out.push(l.odd());
        for c in cs.iter().rev() {
            odd_flags(c, out);
        }
    }
}

/// Koszul sign of grafting: the source order lists the vertices of `frame`
/// in mirror preorder followed by each block (in the order given) in its own
/// mirror preorder; the target order is the mirror preorder of the grafted
/// tree where `blocks[k] = (ℓ, b)` replaces leaf `ℓ` of `frame`.
pub fn graft_sign(frame: &Tree, blocks: &[(u32, &Tree)]) -> i32 {
    let mut frame_len = Vec::new();
    odd_flags(frame, &mut frame_len);
    let mut start = frame_len.len();
    let mut spans: Vec<(u32, usize, Vec<bool>)> = Vec::new();
    for (leaf, b) in blocks {
        let mut fl = Vec::new();
        odd_flags(b, &mut fl);
        let n = fl.len();
        spans.push((*leaf, start, fl));
        start += n;
    }
    let mut seq = Vec::new();
    let mut counter = 0usize;
    fn walk(t: &Tree, counter: &mut usize, spans: &[(u32, usize, Vec<bool>)], seq: &mut Vec<usize>) {
        match t {
            Tree::Node(l, cs) => {
                if l.odd() {
                    seq.push(*counter);
                }
                *counter += 1;
                for c in cs.iter().rev() {
                    walk(c, counter, spans, seq);
                }
            }
            Tree::Leaf(i) => {
                if let Some((_, s, fl)) = spans.iter().find(|(l, _, _)| l == i) {
                    seq.extend(fl.iter().enumerate().filter(|(_, o)| **o).map(|(k, _)| s + k));
                }
            }
        }
    }
    walk(frame, &mut counter, &spans, &mut seq);
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Canonical representative under the generator symmetries, with the sign
/// picked up on the way. Relation vertices keep their child order.
pub fn canonicalize(t: &Tree, mode: Mode) -> (Tree, i32) {
    if mode == Mode::NonSigma {
        return (t.clone(), 1);
    }
    match t {
        Tree::Leaf(_) => (t.clone(), 1),
        Tree::Node(l, cs) => {
            let mut sign = 1;
            let mut kids: Vec<Tree> = cs
                .iter()
                .map(|c| {
                    let (c, s) = canonicalize(c, mode);
                    sign *= s;
                    c
                })
                .collect();
            if l.kind == LabelKind::Gen
                && l.symmetry != Symmetry::None
                && kids.len() == 2
                && kids[0].min_leaf() > kids[1].min_leaf()
            {
                kids.swap(0, 1);
                if l.symmetry == Symmetry::Sign {
                    sign = -sign;
                }
            }
            (Tree::Node(l.clone(), kids), sign)
        }
    }
}

/// `outer ∘_slot inner`: the leaf labelled `slot` is replaced by `inner`,
/// leaves of `inner` are shifted by `slot - 1`, and leaves of `outer` above
/// `slot` by `arity(inner) - 1`. Returns the canonical tree and the sign.
pub fn compose(outer: &Tree, slot: usize, inner: &Tree, mode: Mode) -> Result<(Tree, Rational)> {
    let n = outer.arity();
    if slot == 0 || slot > n {
        return Err(Error::SlotOutOfRange { slot, arity: n });
    }
    let m = inner.arity() as u32;
    let s = slot as u32;
    let shifted_inner = inner.relabel(&|i| i + s - 1);
    let frame = outer.relabel(&|i| if i > s { i + m - 1 } else { i });
    // After relabelling, the slot leaf keeps the label `slot`.
    let mut blocks = Vec::new();
    for i in 1..=(n as u32 + m - 1) {
        blocks.push(Tree::Leaf(i));
    }
    blocks[slot - 1] = shifted_inner.clone();
    let grafted = frame.graft(&blocks);
    let ksign = graft_sign(&frame, &[(s, &shifted_inner)]);
    let (t, csign) = canonicalize(&grafted, mode);
    Ok((t, rat(i64::from(ksign * csign))))
}

/// Leaf relabelling by `σ` (leaf `i` becomes `σ[i-1]`), then
/// canonicalization.
pub fn act(t: &Tree, sigma: &[u32], mode: Mode) -> (Tree, i32) {
    canonicalize(&t.relabel(&|i| sigma[i as usize - 1]), mode)
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (1..=n as u32).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Sign of a permutation given as a sequence of distinct integers.
pub fn perm_sign(p: &[u32]) -> i32 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}
