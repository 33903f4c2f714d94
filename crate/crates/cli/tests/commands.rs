use operad_cli::aliases::AliasTable;
use operad_cli::builtins::{load, Loaded};
use operad_cli::checks::{digebra_golden_cycles, parse_identity, DIGEBRA_CYCLES, PENTAGON_IDENTITY};
use operad_cli::commands::{cmd_basis, cmd_coherence, cmd_graph, cmd_koszul, cmd_pimatrix, cmd_words, Options};
use operad_cli::csvio::read_matrix;
use operad_cli::error::CliError;
use operad_cli::format::PresFile;
use operad_cli::view::View;
use operad_core::presentation::RelationModule;
use operad_core::trees::Mode;

fn l(name: &str) -> Loaded {
    load(name, None).unwrap()
}

fn file(out: &operad_cli::commands::Output, name: &str) -> String {
    out.files.iter().find(|(n, _)| n == name).unwrap_or_else(|| panic!("no file {name}")).1.clone()
}

#[test]
fn basis_reports_the_formula() {
    let out = cmd_basis(&l("digebra"), 4, &Options::default()).unwrap();
    assert!(out.text.contains("trees: 40"));
    assert!(out.text.contains("module monomials: 50"));
    assert!(out.text.contains("formula check: trees 40, module 50: ok"));
}

#[test]
fn arity_cap() {
    let err = cmd_basis(&l("ass"), 8, &Options::default()).unwrap_err();
    assert!(matches!(err, CliError::Usage(_)));
    let forced = Options { force: true, ..Options::default() };
    assert!(cmd_basis(&l("ass"), 8, &forced).unwrap().text.contains("trees: 429"));
}

#[test]
fn pimatrix_writes_the_aliased_csv() {
    let out = cmd_pimatrix(&l("ass"), 4, &Options::default()).unwrap();
    let csv = file(&out, "ass_pi4.csv");
    assert_eq!(read_matrix(&csv).unwrap(), read_matrix(operad_cli::checks::ASS_PI4).unwrap());
    assert!(out.text.contains("rank 4, kernel dimension 1 = 5 - 4"));
    let raw = cmd_pimatrix(&l("ass"), 4, &Options { no_aliases: true, ..Options::default() }).unwrap();
    let raw = read_matrix(&file(&raw, "ass_pi4.csv")).unwrap();
    let rm = RelationModule::new(&l("ass").file.presentation).unwrap();
    let cols: Vec<String> = rm.tree_basis(4).iter().map(|t| t.encode()).collect();
    assert_eq!(raw.col_labels(), cols);
}

#[test]
fn coherence_json() {
    let out = cmd_coherence(&l("ass"), 5, &Options::default()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&file(&out, "ass_coherence5.json")).unwrap();
    let last = &v.as_array().unwrap()[2];
    assert_eq!(last["arity"], 5);
    assert_eq!(last["dim_ker"], 8);
    assert_eq!(last["dim_O"], 3);
    assert_eq!(last["dim_D"], 5);
    assert_eq!(last["dim_dec"], 5);
    assert_eq!(last["dim_C"], 0);
    assert_eq!(v[1]["constraints"].as_array().unwrap().len(), 1);
    let lie = cmd_coherence(&l("lie"), 4, &Options::default()).unwrap();
    assert!(lie.text.contains("in published labels: 1 + 2 - 3 + 4 + 5 - 6 - 7 + 8 - 9 + 10"));
}

#[test]
fn graph_dot_files_are_stable() {
    let opts = |dual| Options { dual, orient: true, dot: true, ..Options::default() };
    let ass = cmd_graph(&l("ass"), 4, &opts(false)).unwrap();
    assert_eq!(file(&ass, "ass_4.dot"), include_str!("golden/pentagon.dot"));
    let lie = cmd_graph(&l("lie"), 4, &opts(true)).unwrap();
    assert_eq!(file(&lie, "lie_4_dual.dot"), include_str!("golden/petersen.dot"));
    assert!(lie.text.contains("flipped relations: {3, 6, 7, 9}"));
    let ainfty = cmd_graph(&l("ainfty-mu3"), 7, &opts(true)).unwrap();
    assert_eq!(file(&ainfty, "ainfty-mu3_7_dual.dot"), include_str!("golden/mobius.dot"));
}

#[test]
fn graph_without_a_tel_a_graph_falls_back_to_bipartite() {
    let out = cmd_graph(&l("lie"), 4, &Options { dot: true, ..Options::default() }).unwrap();
    assert!(out.text.contains("no graphlike Tel-A-graph"));
    assert!(file(&out, "lie_4_bipartite.dot").starts_with("graph"));
}

#[test]
fn graphlike_orientation_lists_diagrams() {
    let out = cmd_graph(&l("ns-poisson"), 4, &Options { orient: true, ..Options::default() }).unwrap();
    assert!(out.text.contains("minimal cycle basis lengths [5, 5, 5, 5, 5, 5, 5, 5]"));
    assert_eq!(out.text.matches("  D").count(), 8);
}

#[test]
fn koszul_writes_a_loadable_dual() {
    let out = cmd_koszul(&l("lie")).unwrap();
    assert!(out.text.contains("residual through x^4: (0, 0, 0, 0)"));
    let dual = PresFile::parse("lie_dual.pres", &file(&out, "lie_dual.pres")).unwrap();
    assert_eq!(RelationModule::new(&dual.presentation).unwrap().operad_dims(4), [1, 1, 1]);
}

#[test]
fn words_from_labels_and_derived() {
    let pentagon = parse_identity(PENTAGON_IDENTITY).unwrap();
    for labels in ["ass-phi", "derived"] {
        let out = cmd_words(&l("ass"), 4, &Options { labels: Some(labels.into()), ..Options::default() }).unwrap();
        assert!(out.text.contains("1 equations"), "{labels}");
        let e1 = out.text.lines().find(|x| x.starts_with("E1: ")).unwrap();
        let letters = |t: &str| t.matches("Phi").count();
        assert_eq!(letters(e1), letters(&pentagon.to_string()));
    }
    let none = cmd_words(&l("ass"), 4, &Options::default());
    assert!(matches!(none, Err(CliError::Usage(_))));
}

#[test]
fn mode_override_drops_aliases() {
    let sym = load("ass", Some(Mode::Symmetric)).unwrap();
    assert!(sym.file.col_aliases.is_empty());
    let v = View::new(&sym, 4, true).unwrap();
    assert!(v.aliases.is_none());
    assert_eq!(v.matrix.cols(), 120);
    assert_ne!(sym.hash, l("ass").hash);
}

#[test]
fn alias_tables_are_bijections() {
    for (name, n) in [("ass", 4), ("lie", 4), ("ainfty-mu3", 7)] {
        let v = View::new(&l(name), n, true).unwrap();
        let t = v.aliases.as_ref().unwrap();
        for i in 0..v.pm.rows.len() {
            assert_eq!(t.rows[v.row_view(i)].0, i);
        }
        for j in 0..v.pm.cols.len() {
            assert_eq!(t.cols[v.col_view(j)].0, j);
        }
    }
    // aliases for other arities are ignored
    let v = View::new(&l("ass"), 5, true).unwrap();
    assert!(v.aliases.is_none());
}

#[test]
fn broken_alias_tables_are_rejected() {
    let mut f = l("ass").file;
    f.col_aliases.pop();
    let rm = RelationModule::new(&f.presentation).unwrap();
    let pm = rm.assemble_pi(4);
    assert!(matches!(AliasTable::resolve(&rm, &pm, &f), Err(CliError::Alias(_))));
    let mut g = l("ass").file;
    g.col_aliases[1].tree = g.col_aliases[0].tree.clone();
    assert!(matches!(AliasTable::resolve(&rm, &pm, &g), Err(CliError::Alias(_))));
}

#[test]
fn pictured_digebra_cycles_parse() {
    let cycles = digebra_golden_cycles(DIGEBRA_CYCLES).unwrap();
    assert_eq!(cycles.len(), 14);
    let lens: Vec<usize> = cycles.iter().map(Vec::len).collect();
    assert_eq!(lens.iter().sum::<usize>(), 4 * 4 + 5 * 4 + 6 * 6);
}
