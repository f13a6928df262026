use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_continuants")).args(args).output().expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn cfg(name: &str) -> String {
    fixture(name).to_str().unwrap().to_string()
}

#[test]
fn golden_outputs() {
    let fib = cfg("fib.cfg");
    let qfib = cfg("qfib.cfg");
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec!["qfib", "--n", "3"], "1 + q\n"),
        (vec!["qfib", "--n", "4", "--closed"], "q^-1 + 1 + q\n"),
        (vec!["periodic", "--config", &fib, "--m", "5", "--verify"], "8\nPASS closed = rec = oracle = matpow\n"),
        (vec!["periodic", "--config", &fib, "--m", "5", "--j", "-1", "--strategy", "matpow"], "5\n"),
        (vec!["continuant", "--config", &fib, "--n", "-1"], "0\n"),
        (vec!["continuant", "--config", &fib, "--n", "10", "--strategy", "oracle"], "89\n"),
        (vec!["continuant", "--config", &qfib, "--n", "6", "--strategy", "transfer"], "q^-2 + 2*q^-1 + 3 + 3*q + 3*q^2 + q^3\n"),
        (vec!["chebyshev", "--n", "2"], "[-1, 0, 4]\n"),
        (vec!["chebyshev", "--n", "1", "--method", "hyper"], "[0, 2]\n"),
        (vec!["chebyshev", "--n", "3", "--method", "genfun"], "[0, -4, 0, 8]\n"),
        (vec!["chebyshev", "--n", "-1"], "[]\n"),
        (vec!["chebyshev", "--n", "-2"], "[-1]\n"),
        (
            vec!["qrat", "--r", "13", "--s", "8"],
            "digits: [1, 1, 1, 1, 1, 1]\nnumerator: 1 + 2*q + 3*q^2 + 3*q^3 + 3*q^4 + q^5\ndenominator: 1 + 2*q + 2*q^2 + 2*q^3 + q^4\n",
        ),
        (vec!["quatpow", "--q", "1,1,0,0", "--n", "4"], "-4,0,0,0\n"),
        (vec!["quatpow", "--q", "0,1,0,0", "--n", "2", "--naive"], "-1,0,0,0\n"),
    ];
    for (args, want) in cases {
        assert_eq!(stdout_of(&args), want, "{args:?}");
    }
}

#[test]
fn every_fixture_verifies() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut names: Vec<_> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    names.sort();
    assert_eq!(names.len(), 20);
    for path in names {
        let out = run(&["verify", "--config", path.to_str().unwrap()]);
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(out.status.success(), "{}:\n{text}", path.display());
        assert!(!text.contains("FAIL"));
        assert_eq!(text.lines().count(), 6, "{text}");
    }
}

#[test]
fn verify_report_shape() {
    let text = stdout_of(&["verify", "--config", &cfg("qfib.cfg")]);
    let names: Vec<_> = text.lines().map(|l| l.split(" (").next().unwrap()).collect();
    assert_eq!(
        names,
        [
            "PASS recurrence = oracle",
            "PASS closed = recurrence",
            "PASS shift",
            "PASS transfer entries",
            "PASS trace/det",
            "PASS CF quotient"
        ]
    );
}

#[test]
fn bench_output() {
    let csv = stdout_of(&["bench", "--l", "3", "--m-list", "10,1000", "--seed", "7", "--csv", "-"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("strategy,l,m,ns,ops,digest"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 8);
    for pair in rows.chunks(4) {
        assert!(pair.iter().all(|r| r[5] == pair[0][5]));
    }
    // Digests and op counts do not depend on timing.
    let again = stdout_of(&["bench", "--l", "3", "--m-list", "10,1000", "--seed", "7", "--csv", "-"]);
    let strip = |s: &str| s.lines().map(|l| l.split(',').enumerate().filter(|(i, _)| *i != 3).map(|(_, f)| f.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>();
    assert_eq!(strip(&csv), strip(&again));

    let table = stdout_of(&["bench", "--m-list", "10"]);
    assert!(table.starts_with("strategy"));
    assert_eq!(table.lines().count(), 5);

    let path = std::env::temp_dir().join(format!("continuants-bench-{}.csv", std::process::id()));
    stdout_of(&["bench", "--m-list", "10", "--csv", path.to_str().unwrap()]);
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(written.lines().count(), 5);
}

#[test]
fn errors_exit_nonzero() {
    for args in [
        vec!["qfib", "--n", "0"],
        vec!["qrat", "--r", "4", "--s", "6"],
        vec!["quatpow", "--q", "0,0,0,0", "--n", "2"],
        vec!["chebyshev", "--n", "-3"],
        vec!["verify", "--config", "/nonexistent.cfg"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    }
    assert!(!run(&["frobnicate"]).status.success());
}

#[test]
fn config_errors_name_line_and_field() {
    let path = std::env::temp_dir().join(format!("continuants-bad-{}.cfg", std::process::id()));
    std::fs::write(&path, "ring = rational\nl = 2\na = [1, 1, 1]\nb = [1, 1]\nc = [-1, -1]\n").unwrap();
    let out = run(&["verify", "--config", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(err.contains("line 3, field `a`: length mismatch"), "{err}");
}
