use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use covera_core::designs::{classify, Design, DesignKind};

fn covera(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_covera")).args(args).output().unwrap()
}

fn covera_threads(args: &[&str], threads: usize) -> Output {
    Command::new(env!("CARGO_BIN_EXE_covera"))
        .args(args)
        .env("COVERA_THREADS", threads.to_string())
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn golden(n: u8) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join(format!("tests/golden/table{n}.tsv"));
    fs::read_to_string(path).unwrap()
}

#[test]
fn tables_match_golden_for_any_thread_count() {
    for n in 1..=4u8 {
        let want = golden(n);
        for threads in [1, 3, 8] {
            let o = covera_threads(&["table", &n.to_string(), "--format", "tsv"], threads);
            assert_eq!(code(&o), 0);
            assert_eq!(stdout(&o), want, "table {n} with {threads} threads");
        }
    }
}

#[test]
fn table_text_and_json() {
    let o = covera(&["table", "3", "--k-max", "7"]);
    assert_eq!(stdout(&o), "k=6  21\nk=7  24, 25, 30^c\n");

    let o = covera(&["table", "4", "--k-max", "44", "--format", "json"]);
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let vs: Vec<u64> = lines.iter().map(|l| l["v"].as_u64().unwrap()).collect();
    assert_eq!(vs, vec![141, 156, 157, 172, 173]);
    assert!(lines.iter().all(|l| l["q"] == 4));

    let o = covera(&["table", "1", "--k-max", "5", "--refined"]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&covera(&["table", "9"])), 2);
}

#[test]
fn bound_winners() {
    let o = covera(&["bound", "17", "5", "1", "--side", "cover"]);
    assert!(stdout(&o).contains("winner cover: thm_1_1 = 15"));
    let o = covera(&["bound", "34", "10", "1", "--side", "cover"]);
    assert!(stdout(&o).contains("winner cover: thm_5_3 = 15"));
    let o = covera(&["bound", "5", "3", "1", "--side", "pack"]);
    assert!(stdout(&o).contains("winner pack: johnson2_weak = 2"));
}

#[test]
fn bound_formats() {
    let o = covera(&["bound", "17", "5", "1", "--format", "tsv"]);
    let text = stdout(&o);
    assert!(text.starts_with("kind\tname\tside\tapplicable\trounded\tvalue\n"));
    assert!(text.contains("entry\tthm_1_1\tcover\ttrue\t15\t85/6\n"));

    let o = covera(&["bound", "17", "5", "1", "--format", "json"]);
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 17 + 2);
    assert!(lines.iter().any(|l| l["winner"] == "thm_1_1" && l["value"] == 15));
}

#[test]
fn trivial_parameters_are_usage_errors() {
    for args in [["bound", "4", "4", "1"], ["bound", "5", "2", "1"], ["bound", "9", "3", "0"]] {
        let o = covera(&args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("trivial"));
    }
    assert_eq!(code(&covera(&["bound", "x", "3", "1"])), 2);
    assert_eq!(code(&covera(&["--help"])), 0);
}

#[test]
fn construct_and_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&[&str], (usize, usize, usize)); 4] = [
        (&["plane", "3"], (9, 3, 12)),
        (&["blowup", "4", "9"], (144, 36, 20)),
        (&["restrict", "4", "9", "141"], (141, 36, 20)),
        (&["blowup", "2", "5"], (20, 10, 6)),
    ];
    for (i, (args, (v, k, b))) in cases.into_iter().enumerate() {
        let path = dir.path().join(format!("d{i}.txt"));
        let mut full = vec!["construct"];
        full.extend_from_slice(args);
        full.extend(["--out", path.to_str().unwrap()]);
        let o = covera(&full);
        assert_eq!(code(&o), 0, "{args:?}");
        let d = Design::parse(&fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!((d.v(), d.k(), d.len()), (v, k, b));
        assert!(classify(&d).is_covering());

        let o = covera(&["verify", path.to_str().unwrap()]);
        assert_eq!(code(&o), 0, "verify {args:?}: {}", stdout(&o));
        assert!(!stdout(&o).contains("VIOLATION"));
    }
}

#[test]
fn construct_to_stdout_is_parseable() {
    let o = covera(&["construct", "plane", "4"]);
    assert_eq!(code(&o), 0);
    let d = Design::parse(&stdout(&o)).unwrap();
    assert_eq!(classify(&d).kind, DesignKind::ExactDesign);
    assert_eq!(d.len(), 20);
}

#[test]
fn construct_rejects_bad_orders() {
    assert_eq!(code(&covera(&["construct", "plane", "6"])), 2);
    assert_eq!(code(&covera(&["construct", "blowup", "3", "0"])), 2);
    assert_eq!(code(&covera(&["construct", "restrict", "2", "5", "30"])), 2);
}

const FANO: &str = "7 3 1\n1 2 3\n1 4 5\n1 6 7\n2 4 6\n2 5 7\n3 4 7\n3 5 6\n";

#[test]
fn verify_fano() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fano.txt");
    fs::write(&path, FANO).unwrap();
    let o = covera(&["verify", path.to_str().unwrap()]);
    let text = stdout(&o);
    assert_eq!(code(&o), 0);
    assert!(text.contains("b=7"));
    assert!(text.contains("classification: exact design"));
    assert!(text.contains("bose_lower: 7 (ok)"));

    let o = covera(&["verify", path.to_str().unwrap(), "--subset", "1,2,3,4,5,6,7"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("certificate: premise holds"));

    let o = covera(&["verify", path.to_str().unwrap(), "--subset", "1,2", "--weights", "1,1/2"]);
    assert_eq!(code(&o), 0);

    let o = covera(&["verify", path.to_str().unwrap(), "--subset", "1,2", "--weights", "1,-1"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn verify_reports_parse_errors_with_lines() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "7 3 1\n1 2 3\n1 4\n").unwrap();
    let o = covera(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    let missing = dir.path().join("missing.txt");
    assert_eq!(code(&covera(&["verify", missing.to_str().unwrap()])), 2);
}

#[test]
fn verify_design_that_is_neither() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("neither.txt");
    fs::write(&path, "5 3 1\n1 2 3\n1 2 4\n").unwrap();
    let o = covera(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("neither"));
}

#[test]
fn search_results() {
    let o = covera(&["search", "7", "3", "1", "--side", "cover"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("C_1(7,3) = 7"));
    let design_text: String = text.lines().skip(1).map(|l| format!("{l}\n")).collect();
    let d = Design::parse(&design_text).unwrap();
    assert_eq!(classify(&d).kind, DesignKind::ExactDesign);

    let o = covera(&["search", "5", "3", "1", "--side", "pack"]);
    assert!(stdout(&o).starts_with("D_1(5,3) = 2"));

    let o = covera(&["search", "12", "4", "1", "--side", "cover", "--max-nodes", "10"]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("budget exceeded"));

    let o = covera(&["search", "10", "4", "1", "--max-seconds", "-1"]);
    assert_eq!(code(&o), 2);
    assert_eq!(code(&covera(&["search", "30", "3", "1"])), 2);
}

#[test]
fn search_writes_witness_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.txt");
    let o = covera(&["search", "6", "3", "1", "-o", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let d = Design::parse(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(d.len(), 6);
    assert_eq!(code(&covera(&["verify", path.to_str().unwrap()])), 0);
}
