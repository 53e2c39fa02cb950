use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn epgt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_epgt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_then_validate_sun() {
    let dir = tempfile::tempdir().unwrap();
    let paths = dir.path().join("s4.paths");
    let graph = dir.path().join("s4.graph");
    let out = epgt(&[
        "construct",
        "sun",
        "--k",
        "4",
        "-o",
        s(&paths),
        "--graph-out",
        s(&graph),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(fs::read_to_string(&paths).unwrap().lines().count(), 8);
    let out = epgt(&[
        "validate",
        "--paths",
        s(&paths),
        "--graph",
        s(&graph),
        "--max-bends",
        "1",
        "--labeled",
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("3 rows x 4 columns"));
    let out = epgt(&[
        "--kv",
        "validate",
        "--paths",
        s(&paths),
        "--graph",
        s(&graph),
        "--max-bends",
        "0",
    ]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).lines().all(|l| l.contains('=')));
}

#[test]
fn every_construction_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let paths = dir.path().join("c.paths");
    let graph = dir.path().join("c.graph");
    let cases: Vec<Vec<&str>> = vec![
        vec!["sun", "--k", "7"],
        vec!["k2n", "--n", "6"],
        vec!["claw-witness"],
        vec!["gallery", "--name", "net"],
        vec!["gallery", "--name", "butterfly"],
        vec!["random", "--count", "12", "--window", "6x6", "--seed", "3"],
    ];
    for case in cases {
        let mut args = vec!["construct"];
        args.extend(&case);
        args.extend(["-o", s(&paths), "--graph-out", s(&graph)]);
        assert_eq!(code(&epgt(&args)), 0, "{case:?}");
        let out = epgt(&[
            "validate",
            "--paths",
            s(&paths),
            "--graph",
            s(&graph),
            "--max-bends",
            "1",
            "--labeled",
        ]);
        assert_eq!(code(&out), 0, "{case:?}: {}", stdout(&out));
    }
}

#[test]
fn render_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let paths = dir.path().join("s4.paths");
    let svg = dir.path().join("s4.svg");
    assert_eq!(
        code(&epgt(&["construct", "sun", "--k", "4", "-o", s(&paths)])),
        0
    );
    assert_eq!(
        code(&epgt(&["render", "--paths", s(&paths), "-o", s(&svg)])),
        0
    );
    let text = fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<?xml"));
    assert!(text.contains("<svg"));
    assert_eq!(text.matches("<polyline").count(), 8);
    assert!(text.trim_end().ends_with("</svg>"));
}

#[test]
fn color_and_classify() {
    let dir = tempfile::tempdir().unwrap();
    let paths = dir.path().join("s.paths");
    assert_eq!(
        code(&epgt(&["construct", "sun", "--k", "6", "-o", s(&paths)])),
        0
    );
    let out = epgt(&["color", "--paths", s(&paths), "--explain"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("verifier: PASS"));
    assert!(text.contains("H[y=3]:"));
    let out = epgt(&["classify-clique", "--paths", s(&paths)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("edge-clique"));

    assert_eq!(
        code(&epgt(&[
            "construct",
            "gallery",
            "--name",
            "truepie",
            "-o",
            s(&paths)
        ])),
        0
    );
    let out = epgt(&["classify-c4", "--paths", s(&paths)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("true-pie center"));
    let out = epgt(&["classify-c4", "--paths", s(&paths), "--members", "0,2,1,3"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn search_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.graph");
    fs::write(&graph, "n 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let out = epgt(&[
        "search",
        "--graph",
        s(&graph),
        "--window",
        "3x3",
        "--max-bends",
        "1",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("P0:"));
    fs::write(&graph, "n 3\n0 1\n1 2\n0 2\n").unwrap();
    let out = epgt(&[
        "search",
        "--graph",
        s(&graph),
        "--window",
        "1x1",
        "--max-bends",
        "0",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn bounded_checks() {
    let out = epgt(&["helly-check", "--window", "3x3", "--max-seg", "2"]);
    assert_eq!(code(&out), 0);
    let out = epgt(&[
        "helly-check",
        "--window",
        "3x3",
        "--max-seg",
        "2",
        "--strong",
    ]);
    assert_eq!(code(&out), 0);
    let out = epgt(&["--threads", "2", "remarks", "--window", "3x3"]);
    assert_eq!(code(&out), 0);
    let out = epgt(&["--kv", "lemmas", "--window", "3x3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("all_ok=true"));
    let out = epgt(&["--kv", "k27-count", "--window", "3x3"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn error_exit_codes() {
    assert_eq!(code(&epgt(&["frobnicate"])), 64);
    assert_eq!(code(&epgt(&["construct", "sun"])), 64);
    assert_eq!(
        code(&epgt(&[
            "helly-check",
            "--window",
            "4by4",
            "--max-seg",
            "2"
        ])),
        64
    );
    assert_eq!(
        code(&epgt(&["color", "--paths", "/nonexistent/x.paths"])),
        66
    );

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.paths");
    fs::write(&bad, "P0: (0,0) (1,0)\nP1: (0,0) (2,0)\n").unwrap();
    let out = epgt(&["color", "--paths", s(&bad)]);
    assert_eq!(code(&out), 66);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}
