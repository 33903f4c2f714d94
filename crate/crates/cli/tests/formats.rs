use operad_cli::builtins::{self, PRESENTATIONS};
use operad_cli::csvio::{read_matrix, write_matrix};
use operad_cli::error::CliError;
use operad_cli::format::{parse_labels, PresFile};
use operad_core::algebra::{frac, rat, SparseMatrix};

#[test]
fn builtin_files_round_trip() {
    for (name, text) in PRESENTATIONS {
        let f = PresFile::parse(name, text).unwrap();
        let again = PresFile::parse(name, &f.write()).unwrap();
        assert_eq!(f, again, "{name}");
        assert_eq!(again.write(), f.write());
    }
}

#[test]
fn hashes_ignore_comments_and_spacing() {
    let a =
        PresFile::parse("a", "operad t\nmode nonsigma\ngen x arity 2\nrel r : x(1,x(2,3)) - x(x(1,2),3)\n").unwrap();
    let b = PresFile::parse(
        "b",
        "# note\noperad t\n\nmode   nonsigma\ngen x arity 2  # binary\nrel r : x(1, x(2,3)) - x(x(1,2), 3)\n",
    )
    .unwrap();
    assert_eq!(builtins::hash_text(&a.write()), builtins::hash_text(&b.write()));
    assert_eq!(builtins::hash_text("").len(), 16);
}

#[test]
fn syntax_errors_name_the_line() {
    let line = |text: &str| match PresFile::parse("t.pres", text) {
        Err(CliError::Syntax { line, .. }) => line,
        other => panic!("expected a syntax error, got {other:?}"),
    };
    assert_eq!(line("operad t\nmode nonsigma\ngen x arity two\n"), 3);
    assert_eq!(line("operad t\nmode sideways\n"), 2);
    assert_eq!(line("operad t\nmode nonsigma\ngen x arity 2\nrel r : x(1,x(2,3) - x(x(1,2),3)\n"), 4);
    assert_eq!(line("operad t\nmode nonsigma\ngen x arity 2\nbogus\n"), 4);
    assert_eq!(line("operad t\nmode nonsigma\ngen x arity 2\nrel r : x(1,2)\nalias row r(1,2) 1 maybe\n"), 5);
}

#[test]
fn label_files() {
    let e = parse_labels("l", "# c\nentry 1 a Phi\nentry 1 b Phi (Δ⊗1⊗1)(_)\n").unwrap();
    assert_eq!(e.len(), 2);
    assert_eq!(e[0].decoration, "_");
    assert_eq!(e[1].decoration, "(Δ⊗1⊗1)(_)");
    match parse_labels("l", "entry 1 a\n") {
        Err(CliError::Syntax { line: 1, .. }) => {}
        other => panic!("{other:?}"),
    }
    let shipped = builtins::read_source(builtins::LABELS, "ass-phi").unwrap().1;
    assert_eq!(parse_labels("ass-phi", &shipped).unwrap().len(), 10);
}

#[test]
fn csv_round_trip() {
    let mut m = SparseMatrix::new(vec!["1".into(), "2".into()], vec!["a".into(), "b".into(), "c".into()]);
    m.set(0, 0, rat(-1));
    m.set(1, 2, frac(3, 4));
    let text = write_matrix(&m).unwrap();
    assert_eq!(text.lines().next(), Some(",a,b,c"));
    assert_eq!(text.lines().nth(2), Some("2,0,0,3/4"));
    assert_eq!(read_matrix(&text).unwrap(), m);
    assert!(read_matrix(",a\n1,x\n").is_err());
}

#[test]
fn unknown_sources() {
    assert!(matches!(builtins::load("no-such-operad", None), Err(CliError::Usage(_))));
}
