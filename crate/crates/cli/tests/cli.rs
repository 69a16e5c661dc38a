//! End-to-end checks of the `pso` binary: golden outputs, format round
//! trips, and the exit-code contract.

use std::io::Write;
use std::process::{Command, Output};

fn pso(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pso"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn compose_comp_of_circle_generators() {
    let out = pso(&["compose", "--op", "comp", "--slot", "1", "bd:2", "bd:2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n 3\nfaces\n-\n1\n2\n3\n1 2\n1 3\n2 3\n");
}

#[test]
fn compose_subst_and_join() {
    let out = pso(&[
        "compose",
        "--op",
        "subst",
        "--slot",
        "1",
        "discrete:2",
        "simplex:2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n 3\nfaces\n-\n1\n2\n3\n1 2\n");

    let out = pso(&["compose", "--op", "join", "pt", "pt"]);
    assert_eq!(stdout(&out), "n 2\nfaces\n-\n1\n2\n1 2\n");
}

#[test]
fn compose_pair_shorthand() {
    let out = pso(&[
        "compose",
        "--op",
        "pair",
        "--slot",
        "1",
        "simplex:2/bd:2",
        "simplex:2/bd:2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("n 3\nfaces\n"));
    assert!(text.contains("---"));
    assert!(text.contains("1 2 3"));
}

#[test]
fn facets_and_analyze() {
    let out = pso(&["facets", "bd:3"]);
    assert_eq!(stdout(&out), "n 3\nfaces\n1 2\n1 3\n2 3\n");

    let out = pso(&["analyze", "pure:4,2"]);
    let text = stdout(&out);
    assert!(text.contains("dimension: 1"));
    assert!(text.contains("simplicial=true"));
    assert!(text.contains("euler characteristic: -2"));
}

#[test]
fn convert_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cx.cpx");
    // non-canonical input: unordered faces via the facets keyword
    std::fs::write(&path, "n 3\nfacets\n3\n1 2\n").unwrap();

    let canonical = stdout(&pso(&["convert", "--to", "text", path.to_str().unwrap()]));
    let json = stdout(&pso(&["convert", "--to", "json", path.to_str().unwrap()]));
    let json_path = dir.path().join("cx.json");
    std::fs::write(&json_path, &json).unwrap();
    let back = stdout(&pso(&[
        "convert",
        "--to",
        "text",
        json_path.to_str().unwrap(),
    ]));
    assert_eq!(back, canonical);
    assert_eq!(canonical, "n 3\nfaces\n-\n1\n2\n3\n1 2\n");
}

#[test]
fn laws_clean_run_exits_zero() {
    let out = pso(&["laws", "--operad", "perm", "--max-arity", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("law=sequential"));
    assert!(text.contains("0 violations"));

    let sampled = pso(&[
        "laws",
        "--operad",
        "scpx-subst",
        "--max-arity",
        "4",
        "--sampled",
        "50",
        "--seed",
        "9",
        "--workers",
        "2",
    ]);
    assert!(sampled.status.success());
}

#[test]
fn decompose_reports_witness_and_certificate() {
    let out = pso(&["decompose", "--variant", "subst", "pure:4,2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "indecomposable\n");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.cpx");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "n 3\nfacets\n1 2\n3").unwrap();
    let out = pso(&[
        "decompose",
        "--variant",
        "subst",
        path.to_str().unwrap(),
        "--workers",
        "2",
    ]);
    let text = stdout(&out);
    assert!(text.contains("decomposable at slot 1"));
    assert!(text.contains("outer:"));
}

#[test]
fn jconstruct_and_pl() {
    let out = pso(&["jconstruct", "--j", "2,1,1", "bd:3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "n 4\nfaces\n-\n1\n2\n3\n4\n1 2\n1 3\n2 3\n1 4\n2 4\n3 4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n"
    );
    let cert = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(cert.contains("sphere(2)"));

    let out = pso(&["pl", "bd:4"]);
    assert!(stdout(&out).contains("verdict: sphere(2)"));
    let out = pso(&["pl", "simplex:3"]);
    assert!(stdout(&out).contains("verdict: ball(2)"));
    let out = pso(&["pl", "pure:4,2"]);
    assert!(stdout(&out).contains("verdict: other"));
}

#[test]
fn enumerate_counts() {
    let out = pso(&["enumerate", "4", "--count-only"]);
    assert_eq!(stdout(&out), "168\n");
    let out = pso(&["enumerate", "2"]);
    assert_eq!(stdout(&out).lines().count(), 6);
}

#[test]
fn exit_codes() {
    // domain/parse errors exit 1
    let out = pso(&["analyze", "/nonexistent/file.cpx"]);
    assert_eq!(out.status.code(), Some(1));
    let out = pso(&["compose", "--op", "subst", "--slot", "5", "pt", "pt"]);
    assert_eq!(out.status.code(), Some(1));
    // resource bounds exit 2
    let out = pso(&["enumerate", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = pso(&["decompose", "--variant", "subst", "trivial:7"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown operad names exit 1
    let out = pso(&["laws", "--operad", "nope"]);
    assert_eq!(out.status.code(), Some(1));
    // help exits 0
    let out = pso(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn ambient_cap_env_var_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_pso"))
        .args(["compose", "--op", "join", "simplex:2", "simplex:2"])
        .env("PSO_AMBIENT_CAP", "3")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2), "ambient 4 above the cap 3");
}

#[test]
fn laws_list_names_every_operad() {
    let out = pso(&["laws", "--list"]);
    let text = stdout(&out);
    for name in [
        "perm",
        "idemcom",
        "idemcom-c",
        "hypg-subst",
        "scpx-subst",
        "scpx-comp",
        "transv-hat-subst",
        "relscpx",
    ] {
        assert!(text.contains(name), "missing {name}");
    }
}
