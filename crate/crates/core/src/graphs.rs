//! Bipartite incidence graphs of `π(n)`, Tel-A-graphs, orientations and
//! cycle bases.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::algebra::{self, apply, is_zero_vec, rat, Rational, SparseMatrix, Subspace};
use crate::error::{Error, Result};

/// Tree monomials on one side, module monomials on the other, one edge per
/// nonzero entry of `π(n)`.
#[derive(Debug, Clone)]
pub struct BipartiteGraph {
    pub tree_labels: Vec<String>,
    pub relation_labels: Vec<String>,
    /// `(tree, relation, coefficient)` in row-major order of the matrix.
    pub edges: Vec<(usize, usize, Rational)>,
}

pub fn bipartite(m: &SparseMatrix) -> BipartiteGraph {
    BipartiteGraph {
        tree_labels: m.col_labels().to_vec(),
        relation_labels: m.row_labels().to_vec(),
        edges: m.entries().map(|((r, c), x)| (*c, *r, x.clone())).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Graphlike,
    DualGraphlike,
    Both,
    Neither,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TelAKind {
    /// Vertices are tree monomials, edges are module monomials.
    Graphlike,
    /// Vertices are module monomials, edges are tree monomials.
    Dual,
}

impl BipartiteGraph {
    fn degrees(&self) -> (Vec<usize>, Vec<usize>) {
        let mut t = alloc::vec![0; self.tree_labels.len()];
        let mut r = alloc::vec![0; self.relation_labels.len()];
        for (a, b, _) in &self.edges {
            t[*a] += 1;
            r[*b] += 1;
        }
        (t, r)
    }

    pub fn classify(&self) -> Classification {
        let (t, r) = self.degrees();
        let graphlike = r.iter().all(|&d| d == 2);
        let dual = t.iter().all(|&d| d == 2);
        match (graphlike, dual) {
            (true, true) => Classification::Both,
            (true, false) => Classification::Graphlike,
            (false, true) => Classification::DualGraphlike,
            (false, false) => Classification::Neither,
        }
    }

    pub fn admits(&self, kind: TelAKind) -> bool {
        matches!(
            (self.classify(), kind),
            (Classification::Both, _)
                | (Classification::Graphlike, TelAKind::Graphlike)
                | (Classification::DualGraphlike, TelAKind::Dual)
        )
    }
}

pub fn classify(bg: &BipartiteGraph) -> Classification {
    bg.classify()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TelAEdge {
    pub ends: [usize; 2],
    /// Matrix entries at the two ends.
    pub coeffs: [Rational; 2],
    pub label: String,
    /// Row (graphlike) or column (dual) of `π(n)` this edge came from.
    pub source: usize,
}

/// Result of a successful orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    /// `(tail, head)` of every edge.
    pub arrows: Vec<(usize, usize)>,
    /// Sign attached to every vertex: columns of `π` for graphlike graphs,
    /// rows (relations) for dual ones.
    pub signs: Vec<i32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TelAGraph {
    pub kind: TelAKind,
    pub vertex_labels: Vec<String>,
    pub edges: Vec<TelAEdge>,
    pub orientation: Option<Orientation>,
}

pub fn tel_a(bg: &BipartiteGraph, kind: TelAKind) -> Result<TelAGraph> {
    if !bg.admits(kind) {
        return Err(Error::WrongKind);
    }
    let (vertex_labels, edge_labels) = match kind {
        TelAKind::Graphlike => (&bg.tree_labels, &bg.relation_labels),
        TelAKind::Dual => (&bg.relation_labels, &bg.tree_labels),
    };
    let mut incid: Vec<Vec<(usize, Rational)>> = alloc::vec![Vec::new(); edge_labels.len()];
    for (t, r, x) in &bg.edges {
        match kind {
            TelAKind::Graphlike => incid[*r].push((*t, x.clone())),
            TelAKind::Dual => incid[*t].push((*r, x.clone())),
        }
    }
    let edges = incid
        .into_iter()
        .enumerate()
        .map(|(e, mut ends)| {
            ends.sort_by_key(|(v, _)| *v);
            TelAEdge {
                ends: [ends[0].0, ends[1].0],
                coeffs: [ends[0].1.clone(), ends[1].1.clone()],
                label: edge_labels[e].clone(),
                source: e,
            }
        })
        .collect();
    Ok(TelAGraph { kind, vertex_labels: vertex_labels.clone(), edges, orientation: None })
}

/// One step of a closed walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub edge: usize,
    pub from: usize,
    pub to: usize,
}

/// Closed walk given by its steps; `steps[0].from` is the base vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    pub steps: Vec<Step>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.from).collect()
    }

    pub fn reversed(&self) -> Cycle {
        Cycle { steps: self.steps.iter().rev().map(|s| Step { edge: s.edge, from: s.to, to: s.from }).collect() }
    }

    /// Rotates to start at the lowest vertex and, of its two cycle edges,
    /// leaves along the lower-indexed one.
    pub fn normalized(&self) -> Cycle {
        if self.steps.is_empty() {
            return self.clone();
        }
        let base = self.steps.iter().map(|s| s.from).min().unwrap();
        let best = |c: &Cycle| -> Cycle {
            let i = c.steps.iter().position(|s| s.from == base).unwrap();
            let mut steps = c.steps[i..].to_vec();
            steps.extend_from_slice(&c.steps[..i]);
            Cycle { steps }
        };
        let a = best(self);
        let b = best(&self.reversed());
        if (b.steps[0].edge, b.steps[0].to) < (a.steps[0].edge, a.steps[0].to) {
            b
        } else {
            a
        }
    }
}

impl TelAGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Incident `(edge, other end)` pairs in edge order; a self-loop appears
    /// once.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = alloc::vec![Vec::new(); self.vertex_count()];
        for (e, ed) in self.edges.iter().enumerate() {
            let [a, b] = ed.ends;
            adj[a].push((e, b));
            if a != b {
                adj[b].push((e, a));
            }
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = alloc::vec![0; self.vertex_count()];
        for e in &self.edges {
            d[e.ends[0]] += 1;
            d[e.ends[1]] += 1;
        }
        d
    }

    /// Component index of every vertex, numbered by lowest vertex.
    pub fn components(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut comp = alloc::vec![usize::MAX; self.vertex_count()];
        let mut next = 0;
        for s in 0..self.vertex_count() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for &(_, w) in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        q.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().max().map_or(0, |m| m + 1)
    }

    pub fn cycle_rank(&self) -> usize {
        self.edge_count() + self.component_count() - self.vertex_count()
    }

    /// Breadth-first spanning forest: roots are the lowest unvisited
    /// vertices, incident edges are explored in index order. Returns the
    /// parent step of each vertex and the visit order.
    fn bfs_forest(&self) -> (Vec<Option<(usize, usize)>>, Vec<bool>) {
        let adj = self.adjacency();
        let n = self.vertex_count();
        let mut parent: Vec<Option<(usize, usize)>> = alloc::vec![None; n];
        let mut seen = alloc::vec![false; n];
        let mut tree_edge = alloc::vec![false; self.edge_count()];
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for &(e, w) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = Some((e, v));
                        tree_edge[e] = true;
                        q.push_back(w);
                    }
                }
            }
        }
        (parent, tree_edge)
    }

    fn path_to_root(parent: &[Option<(usize, usize)>], mut v: usize) -> Vec<(usize, usize)> {
        // (vertex, edge to parent) pairs
        let mut out = Vec::new();
        while let Some((e, p)) = parent[v] {
            out.push((v, e));
            v = p;
        }
        out.push((v, usize::MAX));
        out
    }

    /// Closed walk made of the edge `e = (u, v)` and the forest path from
    /// `v` back to `u`.
    fn fundamental_cycle(&self, parent: &[Option<(usize, usize)>], e: usize) -> Cycle {
        let [u, v] = self.edges[e].ends;
        let pu = Self::path_to_root(parent, u);
        let pv = Self::path_to_root(parent, v);
        let on_u: Vec<usize> = pu.iter().map(|(x, _)| *x).collect();
        // lowest common ancestor: first vertex of pv that is on pu
        let lca_v = pv.iter().position(|(x, _)| on_u.contains(x)).unwrap();
        let lca = pv[lca_v].0;
        let lca_u = pu.iter().position(|(x, _)| *x == lca).unwrap();
        let mut steps = alloc::vec![Step { edge: e, from: u, to: v }];
        // up from v to the lca
        for (x, pe) in &pv[..lca_v] {
            let p = parent[*x].unwrap().1;
            steps.push(Step { edge: *pe, from: *x, to: p });
        }
        // down from the lca to u
        for (x, pe) in pu[..lca_u].iter().rev() {
            let p = parent[*x].unwrap().1;
            steps.push(Step { edge: *pe, from: p, to: *x });
        }
        Cycle { steps }.normalized()
    }

    /// Fundamental cycles of the breadth-first spanning forest, one per
    /// non-tree edge in edge order.
    pub fn cycle_basis(&self) -> Vec<Cycle> {
        let (parent, tree_edge) = self.bfs_forest();
        (0..self.edge_count()).filter(|&e| !tree_edge[e]).map(|e| self.fundamental_cycle(&parent, e)).collect()
    }

    /// Direction of an edge used for chains: the orientation if present,
    /// otherwise `ends[0] → ends[1]`.
    fn arrow(&self, e: usize) -> (usize, usize) {
        match &self.orientation {
            Some(o) => o.arrows[e],
            None => (self.edges[e].ends[0], self.edges[e].ends[1]),
        }
    }

    /// Coefficient vector over edges: `+1` for steps along the arrow,
    /// `-1` against it.
    pub fn chain(&self, c: &Cycle) -> Vec<Rational> {
        let mut v = alloc::vec![Rational::zero(); self.edge_count()];
        for s in &c.steps {
            let (t, h) = self.arrow(s.edge);
            let along = (s.from, s.to) == (t, h);
            let loop_edge = t == h;
            v[s.edge] += if along || loop_edge { Rational::one() } else { -Rational::one() };
        }
        v
    }

    /// Shortest cycle length; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        if self.edges.iter().any(|e| e.ends[0] == e.ends[1]) {
            return Some(1);
        }
        let adj = self.adjacency();
        for s in 0..self.vertex_count() {
            let mut dist = alloc::vec![usize::MAX; self.vertex_count()];
            let mut via = alloc::vec![usize::MAX; self.vertex_count()];
            dist[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for &(e, w) in &adj[v] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        via[w] = e;
                        q.push_back(w);
                    } else if via[v] != e {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Cycle basis of minimal total length: candidate cycles through every
    /// vertex and edge built from shortest paths, taken greedily by length.
    pub fn minimal_cycle_basis(&self) -> Vec<Cycle> {
        let n = self.vertex_count();
        let adj = self.adjacency();
        let mut candidates: Vec<Cycle> = Vec::new();
        for s in 0..n {
            let mut parent: Vec<Option<(usize, usize)>> = alloc::vec![None; n];
            let mut seen = alloc::vec![false; n];
            seen[s] = true;
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for &(e, w) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = Some((e, v));
                        q.push_back(w);
                    }
                }
            }
            for e in 0..self.edge_count() {
                let [u, v] = self.edges[e].ends;
                if !seen[u] || parent[u].map(|p| p.0) == Some(e) || parent[v].map(|p| p.0) == Some(e) {
                    continue;
                }
                let pu = Self::path_to_root(&parent, u);
                let pv = Self::path_to_root(&parent, v);
                // keep only cycles where both paths meet exactly at `s`
                let shared = pu.iter().filter(|(x, _)| pv.iter().any(|(y, _)| x == y)).count();
                if shared != 1 && u != v {
                    continue;
                }
                candidates.push(self.fundamental_cycle(&parent, e));
            }
        }
        candidates.sort_by(|a, b| {
            (a.len(), a.steps.iter().map(|s| s.edge).collect::<Vec<_>>())
                .cmp(&(b.len(), b.steps.iter().map(|s| s.edge).collect::<Vec<_>>()))
        });
        let target = self.cycle_rank();
        let mut span = Subspace::zero(self.edge_count());
        let mut out = Vec::new();
        for c in candidates {
            if out.len() == target {
                break;
            }
            let v = self.chain(&c);
            if !span.contains_vector(&v) {
                span = span.extend([v]);
                out.push(c);
            }
        }
        out
    }

    /// Span of the chains of a set of cycles.
    pub fn cycle_span(&self, cycles: &[Cycle]) -> Subspace {
        Subspace::from_spanning(self.edge_count(), cycles.iter().map(|c| self.chain(c)).collect())
    }

    /// Finds vertex signs `s` with `s_u·a_u = −s_v·a_v` on every edge by
    /// propagation along the spanning forest. Graphlike edges then point
    /// from the `−1` end to the `+1` end, dual edges the other way.
    pub fn orient(&self) -> Result<TelAGraph> {
        for ed in &self.edges {
            for (k, x) in ed.coeffs.iter().enumerate() {
                if x.abs() != Rational::one() {
                    let (row, col) = match self.kind {
                        TelAKind::Graphlike => (ed.source, ed.ends[k]),
                        TelAKind::Dual => (ed.ends[k], ed.source),
                    };
                    return Err(Error::NotPlusMinusOne { row, col });
                }
            }
        }
        let unit = |x: &Rational| if x.is_positive() { 1 } else { -1 };
        let (parent, tree_edge) = self.bfs_forest();
        let n = self.vertex_count();
        let mut signs = alloc::vec![0i32; n];
        // visit in BFS order by walking up to an already signed vertex
        let order = {
            let adj = self.adjacency();
            let mut order = Vec::new();
            let mut seen = alloc::vec![false; n];
            for s in 0..n {
                if seen[s] {
                    continue;
                }
                seen[s] = true;
                let mut q = VecDeque::from([s]);
                while let Some(v) = q.pop_front() {
                    order.push(v);
                    for &(_, w) in &adj[v] {
                        if !seen[w] {
                            seen[w] = true;
                            q.push_back(w);
                        }
                    }
                }
            }
            order
        };
        for &v in &order {
            match parent[v] {
                None => signs[v] = 1,
                Some((e, p)) => {
                    let ed = &self.edges[e];
                    let (ap, av) = if ed.ends[0] == p {
                        (unit(&ed.coeffs[0]), unit(&ed.coeffs[1]))
                    } else {
                        (unit(&ed.coeffs[1]), unit(&ed.coeffs[0]))
                    };
                    signs[v] = -signs[p] * ap * av;
                }
            }
        }
        for (e, ed) in self.edges.iter().enumerate() {
            if tree_edge[e] {
                continue;
            }
            let x = signs[ed.ends[0]] * unit(&ed.coeffs[0]);
            let y = signs[ed.ends[1]] * unit(&ed.coeffs[1]);
            if x != -y {
                let witness = self.fundamental_cycle(&parent, e).steps.iter().map(|s| s.edge).collect();
                return Err(Error::NoConsistentOrientation { witness });
            }
        }
        let arrows = self
            .edges
            .iter()
            .map(|ed| {
                let first_plus = signs[ed.ends[0]] * unit(&ed.coeffs[0]) == 1;
                let [a, b] = ed.ends;
                match (self.kind, first_plus) {
                    (TelAKind::Graphlike, true) | (TelAKind::Dual, false) => (b, a),
                    (TelAKind::Graphlike, false) | (TelAKind::Dual, true) => (a, b),
                }
            })
            .collect();
        let mut g = self.clone();
        g.orientation = Some(Orientation { arrows, signs });
        Ok(g)
    }

    /// Row vector of `π(n)` coordinates attached to a cycle of a graphlike
    /// graph: each edge contributes its relation with the traversal sign.
    pub fn cycle_relation(&self, c: &Cycle, rows: usize) -> Vec<Rational> {
        let chain = self.chain(c);
        let mut v = alloc::vec![Rational::zero(); rows];
        for (e, x) in chain.iter().enumerate() {
            if !x.is_zero() {
                v[self.edges[e].source] += x;
            }
        }
        v
    }

    /// Signed vertex sums of the components of an oriented dual graph, each
    /// checked to lie in the left kernel of `m`.
    pub fn component_sums(&self, m: &SparseMatrix) -> Result<Vec<Vec<Rational>>> {
        if self.kind != TelAKind::Dual {
            return Err(Error::WrongKind);
        }
        let Some(o) = &self.orientation else {
            return Err(Error::OrientationMissing);
        };
        if m.rows() != self.vertex_count() {
            return Err(Error::DimensionMismatch { expected: self.vertex_count(), found: m.rows() });
        }
        let comp = self.components();
        let mut out = alloc::vec![alloc::vec![Rational::zero(); m.rows()]; self.component_count()];
        for (v, &c) in comp.iter().enumerate() {
            out[c][v] = rat(i64::from(o.signs[v]));
        }
        for v in &out {
            if !is_zero_vec(&apply(v, m)) {
                return Err(Error::InternalInconsistency("component sum is not in ker π".into()));
            }
        }
        Ok(out)
    }

    /// `(rank over Q, rank over Z, torsion free)` of `H₁`.
    pub fn h1_dims(&self) -> (usize, usize, bool) {
        // boundary matrix, one row per edge
        let mut d = SparseMatrix::zeros(self.edge_count(), self.vertex_count());
        for (e, ed) in self.edges.iter().enumerate() {
            let [a, b] = ed.ends;
            if a != b {
                d.set(e, a, -Rational::one());
                d.set(e, b, Rational::one());
            }
        }
        let rank_q = self.edge_count() - algebra::rank(&d);
        // The fundamental cycles restricted to the non-tree edges form an
        // identity matrix, so they are a Z-basis of the integral cycles.
        let (_, tree_edge) = self.bfs_forest();
        let basis = self.cycle_basis();
        let non_tree: Vec<usize> = (0..self.edge_count()).filter(|&e| !tree_edge[e]).collect();
        let unimodular = basis.iter().enumerate().all(|(i, c)| {
            let ch = self.chain(c);
            non_tree.iter().enumerate().all(|(j, &e)| {
                let x = ch[e].abs();
                if i == j {
                    x.is_one()
                } else {
                    x.is_zero()
                }
            })
        });
        (rank_q, basis.len(), unimodular && basis.len() == rank_q)
    }
}

pub fn cycle_basis(g: &TelAGraph) -> Vec<Cycle> {
    g.cycle_basis()
}

pub fn orient(g: &TelAGraph) -> Result<TelAGraph> {
    g.orient()
}

pub fn h1_dims(g: &TelAGraph) -> (usize, usize, bool) {
    g.h1_dims()
}

/// The diagrams whose commutativity decides coherence at arity `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub arity: usize,
    pub diagrams: Vec<String>,
    pub dim_d: usize,
    pub dim_c: usize,
}

impl Certificate {
    /// The number of diagrams matches `dim D(n)` from the coherence module.
    pub fn consistent(&self) -> bool {
        self.diagrams.len() == self.dim_d
    }
}

impl core::fmt::Display for Certificate {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        writeln!(
            f,
            "arity {}: {} diagrams, dim D = {}, dim C = {}",
            self.arity,
            self.diagrams.len(),
            self.dim_d,
            self.dim_c
        )?;
        for (i, d) in self.diagrams.iter().enumerate() {
            writeln!(f, "D{}: {}", i + 1, d)?;
        }
        Ok(())
    }
}

impl TelAGraph {
    /// `v0 --[e]--> v1 <--[e']-- v2 … v0`, arrows as oriented.
    pub fn render_cycle(&self, c: &Cycle) -> String {
        let mut out = String::new();
        for s in &c.steps {
            let along = self.arrow(s.edge) == (s.from, s.to);
            let e = &self.edges[s.edge].label;
            out += &self.vertex_labels[s.from];
            out += &if along { alloc::format!(" --[{e}]--> ") } else { alloc::format!(" <--[{e}]-- ") };
        }
        if let Some(s) = c.steps.first() {
            out += &self.vertex_labels[s.from];
        }
        out
    }
}

pub fn coherence_certificate(p: &crate::presentation::Presentation, n: usize) -> Result<Certificate> {
    let rm = crate::presentation::RelationModule::new(p)?;
    let pm = rm.assemble_pi(n);
    let g = tel_a(&bipartite(&pm.matrix), TelAKind::Graphlike)?.orient()?;
    let cycles = g.minimal_cycle_basis();
    let report = crate::coherence::coherence_tower(p, n)?
        .pop()
        .ok_or_else(|| Error::InternalInconsistency("empty coherence tower".into()))?;
    Ok(Certificate {
        arity: n,
        diagrams: cycles.iter().map(|c| g.render_cycle(c)).collect(),
        dim_d: report.dim_d,
        dim_c: report.dim_c,
    })
}
