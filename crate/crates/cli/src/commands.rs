//! Subcommand implementations. Each returns the report text and the files
//! to be written; nothing here touches the filesystem.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use operad_core::algebra::{kernel, normalize, rank, Rational, SparseMatrix, Zero};
use operad_core::coherence::coherence_tower;
use operad_core::duality::{cp_formula, koszul_gf_check, quadratic_dual, theorem_main_check, DimSeries};
use operad_core::graphs::{bipartite, Classification, TelAGraph, TelAKind};
use operad_core::presentation::RelationModule;
use operad_core::trees::{parse_tree, Mode, Tree};
use operad_core::words::{decorate_entries, derive_equations, format_word, quantized_entries, CoeffSymbol};

use crate::builtins::{self, Loaded};
use crate::csvio::write_matrix;
use crate::dot::to_dot;
use crate::error::{CliError, Result};
use crate::format::{parse_labels, PresFile};
use crate::view::View;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const ARITY_CAP: usize = 7;

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub mode: Option<Mode>,
    pub dot: bool,
    pub dual: bool,
    pub orient: bool,
    pub csv: bool,
    pub force: bool,
    pub labels: Option<String>,
    pub no_aliases: bool,
}

#[derive(Debug, Clone, Default)]
pub struct Output {
    pub text: String,
    pub files: Vec<(String, String)>,
}

pub fn header(l: &Loaded, arity: Option<usize>) -> String {
    let a = arity.map_or(String::new(), |n| format!(" arity {n}"));
    format!("# cohere {VERSION} presentation {} sha256:{}{a}\n", l.presentation().name, l.hash)
}

fn check_arity(n: usize, opts: &Options) -> Result<()> {
    if n > ARITY_CAP && !opts.force {
        return Err(CliError::Usage(format!("arity {n} exceeds the cap {ARITY_CAP}; pass --force to override")));
    }
    Ok(())
}

fn file_stem(l: &Loaded) -> String {
    l.presentation().name.replace('!', "_dual")
}

pub fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Linear combination of labels, e.g. `-1 + 2 - 5`.
fn fmt_combo(v: &[Rational], labels: &[String]) -> String {
    let mut out = String::new();
    for (x, l) in v.iter().zip(labels) {
        if x.is_zero() {
            continue;
        }
        let neg = *x < Rational::zero();
        let a = if neg { -x.clone() } else { x.clone() };
        let coeff = if a == Rational::from_integer(1.into()) { String::new() } else { format!("{a}*") };
        if out.is_empty() {
            out += if neg { "-" } else { "" };
        } else {
            out += if neg { " - " } else { " + " };
        }
        out += &format!("{coeff}{l}");
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub fn cmd_basis(l: &Loaded, n: usize, opts: &Options) -> Result<Output> {
    check_arity(n, opts)?;
    let rm = RelationModule::new(l.presentation())?;
    let trees = rm.tree_basis(n);
    let module = rm.module_basis(n);
    let mut t = header(l, Some(n));
    writeln!(t, "trees: {}", trees.len()).unwrap();
    for (i, x) in trees.iter().enumerate() {
        writeln!(t, "  t{} {x}", i + 1).unwrap();
    }
    writeln!(t, "module monomials: {}", module.len()).unwrap();
    for (i, x) in module.iter().enumerate() {
        writeln!(t, "  m{} {x}", i + 1).unwrap();
    }
    if n == 4 {
        if let Some((ft, fm)) = rm.arity_four_formula() {
            let ok = ft == trees.len() && fm == module.len();
            writeln!(t, "formula check: trees {ft}, module {fm}: {}", if ok { "ok" } else { "MISMATCH" }).unwrap();
        }
    }
    Ok(Output { text: t, files: Vec::new() })
}

pub fn cmd_pimatrix(l: &Loaded, n: usize, opts: &Options) -> Result<Output> {
    check_arity(n, opts)?;
    let v = View::new(l, n, !opts.no_aliases)?;
    let csv = write_matrix(&v.matrix)?;
    let r = rank(&v.matrix);
    let ker = kernel(&v.matrix);
    let mut t = header(l, Some(n));
    writeln!(t, "pi({n}): {} x {}", v.matrix.rows(), v.matrix.cols()).unwrap();
    writeln!(t, "rank {r}, kernel dimension {} = {} - {r}", ker.dim(), v.matrix.rows()).unwrap();
    for b in ker.basis() {
        let mut b = b.clone();
        normalize(&mut b);
        writeln!(t, "kernel vector: {}", fmt_combo(&b, v.matrix.row_labels())).unwrap();
    }
    if opts.csv {
        t += &csv;
    }
    let files = vec![(format!("{}_pi{n}.csv", file_stem(l)), csv)];
    Ok(Output { text: t, files })
}

#[derive(Serialize)]
struct CoherenceJson {
    arity: usize,
    dim_ker: usize,
    #[serde(rename = "dim_O")]
    dim_o: usize,
    #[serde(rename = "dim_D")]
    dim_d: usize,
    dim_dec: usize,
    #[serde(rename = "dim_C")]
    dim_c: usize,
    constraints: Vec<String>,
}

pub fn cmd_coherence(l: &Loaded, n: usize, opts: &Options) -> Result<Output> {
    check_arity(n, opts)?;
    let reports = coherence_tower(l.presentation(), n)?;
    let mut t = header(l, Some(n));
    let mut json = Vec::new();
    for r in &reports {
        writeln!(
            t,
            "arity {}: dim ker = {}, dim O = {}, dim D = {}, dim dec = {}, dim C = {}",
            r.arity, r.dim_ker, r.dim_o, r.dim_d, r.dim_dec, r.dim_c
        )
        .unwrap();
        let view =
            if opts.no_aliases { None } else { Some(View::new(l, r.arity, true)?).filter(|v| v.aliases.is_some()) };
        for (c, vec) in r.constraints.iter().zip(&r.constraint_vectors) {
            writeln!(t, "  constraint: {c}").unwrap();
            if let Some(v) = &view {
                let a = v.aliases.as_ref().unwrap();
                let mut w = vec![Rational::zero(); vec.len()];
                for (i, x) in vec.iter().enumerate() {
                    let k = v.row_view(i);
                    w[k] = x * Rational::from_integer(a.rows[k].2.into());
                }
                normalize(&mut w);
                writeln!(t, "    in published labels: {}", fmt_combo(&w, v.matrix.row_labels())).unwrap();
            }
        }
        json.push(CoherenceJson {
            arity: r.arity,
            dim_ker: r.dim_ker,
            dim_o: r.dim_o,
            dim_d: r.dim_d,
            dim_dec: r.dim_dec,
            dim_c: r.dim_c,
            constraints: r.constraints.iter().map(|c| c.to_string()).collect(),
        });
    }
    let body = serde_json::to_string_pretty(&json)? + "\n";
    Ok(Output { text: t, files: vec![(format!("{}_coherence{n}.json", file_stem(l)), body)] })
}

fn class_name(c: Classification) -> &'static str {
    match c {
        Classification::Graphlike => "graphlike",
        Classification::DualGraphlike => "dual graphlike",
        Classification::Both => "graphlike and dual graphlike",
        Classification::Neither => "neither",
    }
}

/// Bipartite incidence graph as DOT, used when no Tel-A-graph exists.
fn bipartite_dot(m: &SparseMatrix, name: &str) -> String {
    let mut out = format!("graph \"{name}\" {{\n");
    for (i, l) in m.row_labels().iter().enumerate() {
        writeln!(out, "  r{i} [label=\"{l}\", shape=box];").unwrap();
    }
    for (j, l) in m.col_labels().iter().enumerate() {
        writeln!(out, "  t{j} [label=\"{l}\"];").unwrap();
    }
    for ((r, c), x) in m.entries() {
        writeln!(out, "  r{r} -- t{c} [label=\"{x}\"];").unwrap();
    }
    out + "}\n"
}

fn describe_graph(t: &mut String, g: &TelAGraph) {
    let deg = g.degrees();
    let regular = deg.first().filter(|d| deg.iter().all(|e| e == *d));
    writeln!(t, "vertices {}, edges {}, components {}", g.vertex_count(), g.edge_count(), g.component_count()).unwrap();
    match regular {
        Some(d) => writeln!(t, "{d}-regular").unwrap(),
        None => writeln!(t, "degrees {deg:?}").unwrap(),
    }
    match g.girth() {
        Some(x) => writeln!(t, "girth {x}").unwrap(),
        None => writeln!(t, "girth infinite (forest)").unwrap(),
    }
    let (q, z, free) = g.h1_dims();
    writeln!(
        t,
        "cycle rank {} = |E| - |V| + components; H1 rank over Q {q}, over Z {z}, torsion free {free}",
        g.cycle_rank()
    )
    .unwrap();
}

pub fn cmd_graph(l: &Loaded, n: usize, opts: &Options) -> Result<Output> {
    check_arity(n, opts)?;
    let v = View::new(l, n, !opts.no_aliases)?;
    let bg = bipartite(&v.matrix);
    let class = bg.classify();
    let mut t = header(l, Some(n));
    writeln!(t, "classification: {}", class_name(class)).unwrap();
    let kind = if opts.dual { TelAKind::Dual } else { TelAKind::Graphlike };
    let stem = file_stem(l);
    let mut files = Vec::new();
    if !bg.admits(kind) {
        writeln!(
            t,
            "no {} Tel-A-graph; bipartite graph has {} relation and {} tree vertices, {} edges",
            if opts.dual { "dual" } else { "graphlike" },
            bg.relation_labels.len(),
            bg.tree_labels.len(),
            bg.edges.len()
        )
        .unwrap();
        if opts.dot {
            files.push((format!("{stem}_{n}_bipartite.dot"), bipartite_dot(&v.matrix, &format!("{stem} {n}"))));
        }
        return Ok(Output { text: t, files });
    }
    let mut g = operad_core::graphs::tel_a(&bg, kind)?;
    describe_graph(&mut t, &g);
    if opts.orient {
        g = g.orient()?;
        let o = g.orientation.as_ref().unwrap();
        let flipped: Vec<&str> =
            o.signs.iter().enumerate().filter(|(_, s)| **s < 0).map(|(i, _)| g.vertex_labels[i].as_str()).collect();
        let what = if kind == TelAKind::Dual { "relations" } else { "trees" };
        writeln!(t, "orientation found; flipped {what}: {{{}}}", flipped.join(", ")).unwrap();
        match kind {
            TelAKind::Dual => {
                for s in g.component_sums(&v.matrix)? {
                    writeln!(t, "component sum: {}", fmt_combo(&s, v.matrix.row_labels())).unwrap();
                }
            }
            TelAKind::Graphlike => {
                let cycles = g.minimal_cycle_basis();
                let mut lens: Vec<usize> = cycles.iter().map(|c| c.len()).collect();
                lens.sort_unstable();
                writeln!(t, "minimal cycle basis lengths {lens:?}").unwrap();
                for (i, c) in cycles.iter().enumerate() {
                    writeln!(t, "  D{}: {}", i + 1, g.render_cycle(c)).unwrap();
                }
            }
        }
    }
    if opts.dot {
        let suffix = if opts.dual { "_dual" } else { "" };
        files.push((format!("{stem}_{n}{suffix}.dot"), to_dot(&g, &format!("{stem} {n}"))));
    }
    Ok(Output { text: t, files })
}

pub fn cmd_koszul(l: &Loaded) -> Result<Output> {
    let p = l.presentation();
    let dual = quadratic_dual(p)?;
    let rm = RelationModule::new(p)?;
    let rd = RelationModule::new(&dual)?;
    let dims = rm.operad_dims(4);
    let ddims = rd.operad_dims(4);
    let mut t = header(l, None);
    writeln!(t, "dual operad {}", dual.name).unwrap();
    for g in &dual.generators {
        writeln!(t, "  generator {} arity {}", g.name, g.arity).unwrap();
    }
    for r in &dual.relations {
        writeln!(t, "  relation {} : {}", r.label, r.element).unwrap();
    }
    writeln!(t, "n    P(n)  P!(n)").unwrap();
    for (k, (a, b)) in dims.iter().zip(&ddims).enumerate() {
        writeln!(t, "{:<4} {a:<5} {b}", k + 2).unwrap();
    }
    let f = cp_formula(dims[0] as i64, dims[1] as i64, dims[2] as i64, p.mode);
    let main = theorem_main_check(p)?;
    writeln!(t, "formula dim C(4) = {f}; computed dim C(4) = {}; dim P!(4) = {}", main.dim_c4, main.dim_dual4).unwrap();
    let a = DimSeries::from_arity_two(&dims, p.mode);
    let b = DimSeries::from_arity_two(&ddims, p.mode);
    let res = koszul_gf_check(&a, &b, 4);
    writeln!(t, "generating function residual through x^4: {}", fmt_vec(&res)).unwrap();
    let dual_file = PresFile::from_presentation(dual);
    Ok(Output { text: t, files: vec![(format!("{}_dual.pres", file_stem(l)), dual_file.write())] })
}

/// Decorations of `π(n)` entries keyed by view coordinates.
pub fn entry_labels(l: &Loaded, v: &View, source: &str) -> Result<BTreeMap<(usize, usize), CoeffSymbol>> {
    if source == "derived" {
        let mut bases = BTreeMap::new();
        let syms = v.rm.generators.clone();
        for c in &l.file.coeffs {
            let term: Tree = parse_tree(&c.term, &syms)?;
            bases.insert((c.relation.clone(), term), c.base.clone());
        }
        let ents = quantized_entries(&v.rm, &v.pm, &bases)?;
        return Ok(ents.into_iter().map(|((r, c), s)| ((v.row_view(r), v.col_view(c)), s)).collect());
    }
    let (origin, text) = builtins::read_source(builtins::LABELS, source)?;
    let table = v
        .aliases
        .as_ref()
        .ok_or_else(|| CliError::Usage("label files address rows and columns by alias; this arity has none".into()))?;
    let mut out = BTreeMap::new();
    for e in parse_labels(&origin, &text)? {
        let r = table.row(&e.row).ok_or_else(|| CliError::Alias(format!("unknown row `{}`", e.row)))?;
        let c = table.col(&e.col).ok_or_else(|| CliError::Alias(format!("unknown column `{}`", e.col)))?;
        out.insert((r, c), CoeffSymbol::new(&e.base, &e.decoration));
    }
    Ok(out)
}

pub fn cmd_words(l: &Loaded, n: usize, opts: &Options) -> Result<Output> {
    check_arity(n, opts)?;
    let source =
        opts.labels.as_deref().ok_or_else(|| CliError::Usage("words needs --labels <file|builtin|derived>".into()))?;
    let v = View::new(l, n, !opts.no_aliases)?;
    let bg = bipartite(&v.matrix);
    let kind = if bg.admits(TelAKind::Dual) { TelAKind::Dual } else { TelAKind::Graphlike };
    let g = operad_core::graphs::tel_a(&bg, kind)?.orient()?;
    let ents = entry_labels(l, &v, source)?;
    let dg = decorate_entries(&g, &ents)?;
    let eqs = derive_equations(&dg);
    let mut t = header(l, Some(n));
    writeln!(
        t,
        "{} Tel-A-graph, cycle rank {}, {} equations",
        if kind == TelAKind::Dual { "dual" } else { "graphlike" },
        g.cycle_rank(),
        eqs.len()
    )
    .unwrap();
    for (i, e) in eqs.iter().enumerate() {
        writeln!(t, "E{}: {e}", i + 1).unwrap();
        let (lhs, rhs) = e.two_sided();
        writeln!(t, "    {} = {}", format_word(&lhs), format_word(&rhs)).unwrap();
    }
    Ok(Output { text: t, files: Vec::new() })
}
