use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{permutations, GeneratorSymbol, Label, Mode, Symmetry, Tree};
use crate::error::{Error, Result};

/// Basis of `F(E)(n)` sorted by canonical string.
pub fn enumerate_basis(gens: &[GeneratorSymbol], n: usize, mode: Mode) -> Result<Vec<Tree>> {
    let labels = gen_labels(gens, mode)?;
    Ok(enumerate_with_relations(&labels, &[], n, mode, 0))
}

pub fn gen_labels(gens: &[GeneratorSymbol], mode: Mode) -> Result<Vec<Arc<Label>>> {
    gens.iter()
        .enumerate()
        .map(|(i, g)| {
            if mode == Mode::Symmetric && g.arity != 2 && g.symmetry != Symmetry::None {
                return Err(Error::UnsupportedArity(g.name.clone()));
            }
            Ok(Label::generator(i, g))
        })
        .collect()
}

/// Trees of arity `n` built from `gens` and `rels` with exactly `rel_count`
/// relation vertices, sorted by canonical string. Relation vertices take
/// their children ordered by smallest leaf in symmetric mode.
pub fn enumerate_with_relations(
    gens: &[Arc<Label>],
    rels: &[Arc<Label>],
    n: usize,
    mode: Mode,
    rel_count: usize,
) -> Vec<Tree> {
    let gen_ar: Vec<(Arc<Label>, usize)> = gens.iter().map(|l| (l.clone(), l.arity)).collect();
    let rels: Vec<(Arc<Label>, usize)> = rels.iter().map(|l| (l.clone(), l.arity)).collect();
    let rels = &rels[..];
    let mut out = match mode {
        Mode::NonSigma => planar(&gen_ar, rels, n, rel_count).into_iter().map(|t| t.planarize()).collect(),
        Mode::Symmetric => {
            let leaves: Vec<u32> = (1..=n as u32).collect();
            labelled(&gen_ar, rels, &leaves, rel_count)
        }
    };
    out.sort();
    out.dedup();
    out
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { alloc::vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn product(lists: &[Vec<Tree>]) -> Vec<Vec<Tree>> {
    let mut out: Vec<Vec<Tree>> = alloc::vec![Vec::new()];
    for l in lists {
        let mut next = Vec::new();
        for prefix in &out {
            for t in l {
                let mut p = prefix.clone();
                p.push(t.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

fn planar(gens: &[(Arc<Label>, usize)], rels: &[(Arc<Label>, usize)], n: usize, r: usize) -> Vec<Tree> {
    let mut out = Vec::new();
    if n == 1 && r == 0 {
        out.push(Tree::Leaf(0));
        return out;
    }
    let mut push = |label: &Arc<Label>, k: usize, r_children: usize| {
        if k > n {
            return;
        }
        for sizes in compositions(n - k, k) {
            for rs in compositions(r_children, k) {
                let lists: Vec<Vec<Tree>> =
                    sizes.iter().zip(&rs).map(|(&s, &rr)| planar(gens, rels, s + 1, rr)).collect();
                if lists.iter().any(Vec::is_empty) {
                    continue;
                }
                for kids in product(&lists) {
                    out.push(Tree::Node(label.clone(), kids));
                }
            }
        }
    };
    for (l, k) in gens {
        push(l, *k, r);
    }
    if r > 0 {
        for (l, k) in rels {
            push(l, *k, r - 1);
        }
    }
    out
}

/// Partitions of `s` into exactly `k` nonempty blocks, blocks ordered by
/// their smallest element.
pub fn set_partitions(s: &[u32], k: usize) -> Vec<Vec<Vec<u32>>> {
    if k == 0 {
        return if s.is_empty() { alloc::vec![Vec::new()] } else { Vec::new() };
    }
    if s.len() < k {
        return Vec::new();
    }
    let (first, rest) = (s[0], &s[1..]);
    let mut out = Vec::new();
    // `first` alone in a block
    for mut p in set_partitions(rest, k - 1) {
        p.insert(0, alloc::vec![first]);
        out.push(p);
    }
    // `first` joins one of the blocks of a partition of the rest
    for p in set_partitions(rest, k) {
        for i in 0..k {
            let mut q = p.clone();
            q[i].insert(0, first);
            q.sort_by_key(|b| b[0]);
            out.push(q);
        }
    }
    out
}

fn labelled(gens: &[(Arc<Label>, usize)], rels: &[(Arc<Label>, usize)], leaves: &[u32], r: usize) -> Vec<Tree> {
    let mut out = Vec::new();
    if leaves.len() == 1 && r == 0 {
        out.push(Tree::Leaf(leaves[0]));
        return out;
    }
    let mut push_blocks = |label: &Arc<Label>, blocks: &[Vec<u32>], r_children: usize| {
        for rs in compositions(r_children, blocks.len()) {
            let lists: Vec<Vec<Tree>> = blocks.iter().zip(&rs).map(|(b, &rr)| labelled(gens, rels, b, rr)).collect();
            if lists.iter().any(Vec::is_empty) {
                continue;
            }
            for kids in product(&lists) {
                out.push(Tree::Node(label.clone(), kids));
            }
        }
    };
    for (l, k) in gens {
        for p in set_partitions(leaves, *k) {
            if l.symmetry != Symmetry::None {
                push_blocks(l, &p, r);
            } else {
                for sigma in permutations(*k) {
                    let ordered: Vec<Vec<u32>> = sigma.iter().map(|&i| p[i as usize - 1].clone()).collect();
                    push_blocks(l, &ordered, r);
                }
            }
        }
    }
    if r > 0 {
        for (l, k) in rels {
            for p in set_partitions(leaves, *k) {
                push_blocks(l, &p, r - 1);
            }
        }
    }
    out
}
