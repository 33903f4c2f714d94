use std::process::Command;

fn cohere(args: &[&str]) -> (bool, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cohere")).args(args).output().unwrap();
    (out.status.success(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn writes_outputs_into_the_requested_directory() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let (ok, stdout, _) = cohere(&["pimatrix", "lie", "--out", d]);
    assert!(ok);
    assert!(stdout.contains("wrote"));
    let csv = std::fs::read_to_string(dir.path().join("lie_pi4.csv")).unwrap();
    assert_eq!(csv, include_str!("golden/lie_pi4.csv").replace("\r\n", "\n"));
    // only the target file, no temporaries left behind
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn errors_exit_nonzero() {
    let (ok, _, stderr) = cohere(&["basis", "ass", "9"]);
    assert!(!ok);
    assert!(stderr.contains("--force"));
    let (ok, _, stderr) = cohere(&["basis", "missing-operad"]);
    assert!(!ok);
    assert!(stderr.starts_with("error:"));
}

#[test]
fn check_all_passes() {
    let (ok, stdout, _) = cohere(&["check-all"]);
    assert!(ok, "{stdout}");
    assert_eq!(stdout.lines().filter(|l| l.ends_with(": PASS")).count(), 10);
}

#[test]
fn reads_presentation_files() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("t.pres");
    std::fs::write(&p, "operad t\nmode nonsigma\ngen x arity 2\nrel r : x(1,x(2,3)) - x(x(1,2),3)\n").unwrap();
    let (ok, stdout, _) = cohere(&["koszul", p.to_str().unwrap(), "--out", dir.path().to_str().unwrap()]);
    assert!(ok);
    assert!(stdout.contains("dual operad t!"));
    assert!(dir.path().join("t_dual.pres").exists());
}
