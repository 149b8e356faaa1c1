//! End-to-end checks of the `mtclab` binary: file formats, subcommands,
//! determinism, and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mtclab"))
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn gen_is_deterministic_and_valid() {
    let run = || {
        let out = bin()
            .args(["gen", "--parts", "2,2,1", "--seed", "42"])
            .output()
            .unwrap();
        assert!(out.status.success());
        stdout(&out)
    };
    let a = run();
    let b = run();
    assert_eq!(a, b);
    assert!(a.starts_with("mtd 1\n"));
    let parsed = mtclab_core::parse_mtd(&a).unwrap();
    assert_eq!(parsed.digraph().arc_count(), 8);
    assert_eq!(mtclab_core::serialize_mtd(&parsed), a);
}

#[test]
fn gen_reads_seed_from_environment() {
    let with_flag = bin()
        .args(["gen", "--parts", "2,2,2", "--seed", "7"])
        .output()
        .unwrap();
    let with_env = bin()
        .args(["gen", "--parts", "2,2,2"])
        .env("MTCLAB_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(stdout(&with_flag), stdout(&with_env));
}

#[test]
fn gen_rejects_too_few_parts() {
    let out = bin().args(["gen", "--parts", "3,1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn compete_both_methods_agree_on_fixtures() {
    for name in ["t3.mtd", "star5.mtd", "sink4.mtd"] {
        let out = bin()
            .args(["compete", "-i"])
            .arg(data(name))
            .args(["--method", "both"])
            .output()
            .unwrap();
        assert!(out.status.success(), "{name}");
        assert!(stdout(&out).contains("methods-agree: true"), "{name}");
    }
}

#[test]
fn compete_writes_dot() {
    let dir = std::env::temp_dir().join("mtclab-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let dot_path = dir.join("star5.dot");
    let out = bin()
        .args(["compete", "-i"])
        .arg(data("star5.mtd"))
        .arg("--dot")
        .arg(&dot_path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("c12 vertices=5 edges=4"));
    let dot = std::fs::read_to_string(&dot_path).unwrap();
    assert_eq!(dot.matches(" -- ").count(), 4);
    assert_eq!(dot.matches("cluster_").count(), 3);
}

#[test]
fn classify_reports_structure() {
    let out = bin()
        .args(["classify", "-i"])
        .arg(data("sink4.mtd"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("sinks: s\n"));
    assert!(text.contains("loose: true\n"));
    assert!(text.contains("part X1: NON_COMPETING\n"));
}

#[test]
fn recognize_star5_is_interval() {
    let out = bin()
        .args(["recognize", "-i"])
        .arg(data("star5.mtd"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("chordal: yes"));
    assert!(text.contains("c4free: yes"));
    assert!(text.contains("asteroidal-triple: none"));
    assert!(text.contains("interval: yes"));

    let only = bin()
        .args(["recognize", "-i"])
        .arg(data("star5.mtd"))
        .args(["--class", "chordal"])
        .output()
        .unwrap();
    let text = stdout(&only);
    assert!(text.contains("chordal: yes"));
    assert!(!text.contains("interval:"));
}

#[test]
fn verify_passes_on_fixtures() {
    for name in ["t3.mtd", "star5.mtd", "sink4.mtd"] {
        let out = bin()
            .args(["verify", "-i"])
            .arg(data(name))
            .output()
            .unwrap();
        assert!(out.status.success(), "{name}");
        assert!(!stdout(&out).contains("FAIL"), "{name}");
    }
    let one = bin()
        .args(["verify", "-i"])
        .arg(data("star5.mtd"))
        .args(["--theorem", "T-S4"])
        .output()
        .unwrap();
    assert!(one.status.success());
    assert_eq!(stdout(&one), "check T-S4: PASS\n");

    let unknown = bin()
        .args(["verify", "-i"])
        .arg(data("star5.mtd"))
        .args(["--theorem", "NOPE"])
        .output()
        .unwrap();
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn fuzz_small_run_passes() {
    let out = bin()
        .args(["fuzz", "--parts-menu", "2,2,1;2,2,2", "--seeds", "0..9"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("instances: 20"));
    assert!(text.contains("failures: 0"));
    assert!(text.contains("theorem C-ADJ:"));
}

#[test]
fn io_and_syntax_errors_exit_2() {
    let missing = bin()
        .args(["verify", "-i", "/nonexistent.mtd"])
        .output()
        .unwrap();
    assert_eq!(missing.status.code(), Some(2));

    let dir = std::env::temp_dir().join("mtclab-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.mtd");
    std::fs::write(&bad, "mtd 1\npart X1 a\narc a a\n").unwrap();
    let out = bin().args(["verify", "-i"]).arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
