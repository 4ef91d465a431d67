use std::path::{Path, PathBuf};
use std::process::Command;

use nefhodge::cli::run;

fn tables() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data/tables")
}

fn nefhodge(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("nefhodge").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

const SQUARE: &str = "4 2\n1 1\n1 -1\n-1 1\n-1 -1\n";
const TRIANGLE: &str = "3 2\n3 0\n0 1\n-1 -1\n";

#[test]
fn reflexive_verdicts_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let sq = write(dir.path(), "square.txt", SQUARE);
    let tri = write(dir.path(), "triangle.txt", TRIANGLE);
    assert_eq!(nefhodge(&["reflexive", &sq]), (0, "reflexive: yes\n".into(), String::new()));
    let (code, out, _) = nefhodge(&["reflexive", &tri]);
    assert_eq!((code, out.as_str()), (1, "reflexive: no\n"));

    let (code, _, err) = nefhodge(&["nef", &tri, "-r", "1"]);
    assert_eq!(code, 1);
    assert!(err.contains("reflexive"));
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "3 2\n1 0\n0 x\n");
    let (code, _, err) = nefhodge(&["points", &bad]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");

    let missing = dir.path().join("nope.txt");
    assert_eq!(nefhodge(&["dual", missing.to_str().unwrap()]).0, 2);
    assert_eq!(nefhodge(&["frobnicate"]).0, 2);
    assert_eq!(nefhodge(&["nef"]).0, 2);
    let (code, out, _) = nefhodge(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("scan"));
}

#[test]
fn dual_and_points() {
    let dir = tempfile::tempdir().unwrap();
    let sq = write(dir.path(), "square.txt", SQUARE);
    let (code, out, _) = nefhodge(&["dual", &sq]);
    assert_eq!(code, 0);
    let cross = write(dir.path(), "cross.txt", &out);
    assert_eq!(nefhodge(&["points", &cross]).1, "points: 5\n");
    let (_, listed, _) = nefhodge(&["points", &sq, "--list"]);
    assert!(listed.starts_with("9 2\n"));
    assert_eq!(listed.lines().count(), 10);
}

#[test]
fn newton_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let block = tables().join("single_02.w");
    let poly = dir.path().join("sextic.txt");
    let (code, out, _) = nefhodge(&["newton", block.to_str().unwrap(), "--out", poly.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, ""));
    let poly = poly.to_str().unwrap();
    assert_eq!(nefhodge(&["points", poly]).1, "points: 462\n");
    assert_eq!(nefhodge(&["reflexive", poly]).0, 0);

    let (_, stdout_copy, _) = nefhodge(&["newton", block.to_str().unwrap()]);
    assert_eq!(stdout_copy, std::fs::read_to_string(poly).unwrap());

    let (code, table, _) = nefhodge(&["nef", poly, "-r", "2", "--hodge"]);
    assert_eq!(code, 0);
    let rows: Vec<Vec<&str>> = table.lines().skip(1).map(|l| l.split('\t').collect()).collect();
    assert_eq!(rows.len(), 31);
    assert!(rows.iter().any(|r| r[2..] == ["1", "73", "144", "462", "6", "7", "6"]));
    assert!(rows.iter().any(|r| r[2..] == ["1", "89", "176", "462", "6", "7", "6"]));
}

#[test]
fn nef_without_hodge_prints_placeholders() {
    let dir = tempfile::tempdir().unwrap();
    let sq = write(dir.path(), "square.txt", SQUARE);
    let (code, out, _) = nefhodge(&["nef", &sq, "-r", "1"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[1], "square.txt\t{0,1,2,3}\t-\t-\t-\t9\t4\t5\t4");

    let (_, ordered, _) = nefhodge(&["nef", &sq, "-r", "2", "--ordered"]);
    let (_, unordered, _) = nefhodge(&["nef", &sq, "-r", "2"]);
    assert_eq!(ordered.lines().count() - 1, 2 * (unordered.lines().count() - 1));
}

#[test]
fn subpolytopes_of_a_dilated_square() {
    let dir = tempfile::tempdir().unwrap();
    let big = write(dir.path(), "big.txt", "4 2\n2 2\n2 -2\n-2 2\n-2 -2\n");
    let subs = dir.path().join("subs");
    let (code, out, err) = nefhodge(&["subpoly", &big, "--max-drop", "16", "--out-dir", subs.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(err.starts_with("found "));
    let rows: Vec<Vec<&str>> = out.lines().skip(1).map(|l| l.split('\t').collect()).collect();
    assert!(!rows.is_empty());
    // the 3x3 square is one of them
    assert!(rows.iter().any(|r| r[1] == "9" && r[2] == "4"));
    for (i, _) in rows.iter().enumerate() {
        let f = subs.join(format!("sub{i}.txt"));
        assert_eq!(nefhodge(&["reflexive", f.to_str().unwrap()]).0, 0);
    }
}

#[test]
fn scan_is_independent_of_thread_count() {
    let dir = tempfile::tempdir().unwrap();
    let t = tables();
    let manifest = write(
        dir.path(),
        "m.txt",
        &format!(
            "W {} full 2\nW {} minkowski 2\nW {} full 1\n",
            t.join("single_01.w").display(),
            t.join("minkowski_02.w").display(),
            t.join("single_02.w").display()
        ),
    );
    let (c1, one, _) = nefhodge(&["scan", &manifest, "--jobs", "1"]);
    let (c3, three, _) = nefhodge(&["scan", &manifest, "--jobs", "3"]);
    assert_eq!((c1, c3), (0, 0));
    assert_eq!(one, three);
    assert!(one.contains("single_01.w:full\t{"));
    assert!(one.contains("\t1\t61\t120\t407\t6\t7\t6\n"));
    // the sextic hypersurface is a fourfold: (h11, h31, −χ)
    assert!(one.contains("single_02.w:full\t{0,1,2,3,4,5}\t1\t426\t-2610\t462"));
}

#[test]
fn scan_isolates_failures() {
    let dir = tempfile::tempdir().unwrap();
    let t = tables();
    let tri = write(dir.path(), "triangle.txt", TRIANGLE);
    let sq = write(dir.path(), "square.txt", SQUARE);
    let manifest = write(
        dir.path(),
        "m.txt",
        &format!(
            "# mixed\nW missing.w full 2\nnonsense line\nP {tri} 1\nW {} full 2\nP {sq} 1\n",
            t.join("single_01.w").display()
        ),
    );
    let plot = dir.path().join("plot.tsv");
    let (code, out, err) = nefhodge(&["scan", &manifest, "--plot", plot.to_str().unwrap()]);
    assert_eq!(code, 0);
    for ln in [2, 3, 4] {
        assert!(err.contains(&format!("m.txt:{ln}:")), "{err}");
    }
    assert!(out.contains("single_01.w:full"));
    assert!(out.contains("square.txt\t{0,1,2,3}"));
    assert_eq!(std::fs::read_to_string(&plot).unwrap(), "h11\th21\n1\t61\n");

    let bad = write(dir.path(), "bad.txt", "W missing.w full 2\n");
    assert_eq!(nefhodge(&["scan", &bad]).0, 2);
}

#[test]
fn binary_reports_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let sq = write(dir.path(), "square.txt", SQUARE);
    let tri = write(dir.path(), "triangle.txt", TRIANGLE);
    let bin = env!("CARGO_BIN_EXE_nefhodge");
    let ok = Command::new(bin).args(["reflexive", &sq]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "reflexive: yes\n");
    assert_eq!(Command::new(bin).args(["reflexive", &tri]).status().unwrap().code(), Some(1));
    assert_eq!(Command::new(bin).arg("bogus").status().unwrap().code(), Some(2));
}
