use std::path::PathBuf;
use std::process::Command;

use pogcomp::document::PogDocument;
use pogcomp::json;
use pogcomp_core::completion::verify_completion;
use pogcomp_core::graph::PartiallyOrientedGraph;
use pogcomp_core::oracle::{enumerate_graphs, ALL_RELATIONS};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tempfile::TempDir;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["pogcomp"];
    argv.extend_from_slice(args);
    let code = pogcomp::run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p: PathBuf = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn graph_file(dir: &TempDir, name: &str, h: &PartiallyOrientedGraph) -> String {
    write(dir, name, &json(&PogDocument::from_graph(h, None)))
}

fn pog(n: usize, e: &[(usize, usize)], a: &[(usize, usize)]) -> PartiallyOrientedGraph {
    PartiallyOrientedGraph::new(n, e, a).unwrap()
}

#[test]
fn check_inward_path() {
    let dir = TempDir::new().unwrap();
    let f = graph_file(&dir, "p.json", &pog(3, &[], &[(0, 1), (2, 1)]));
    let r = run(&["check", &f]);
    assert_eq!(r.code, 1);
    assert!(r.out.starts_with("UNCOMPLETABLE\n"));
    let cert: serde_json::Value = serde_json::from_str(r.out.trim_start_matches("UNCOMPLETABLE\n")).unwrap();
    assert_eq!(cert["certificate"], "opposing_unbalanced_arcs");
    assert_eq!(cert["positive"], serde_json::json!([0, 1]));
    assert_eq!(cert["negative"], serde_json::json!([2, 1]));
}

#[test]
fn check_completable() {
    let dir = TempDir::new().unwrap();
    let f = graph_file(&dir, "p.json", &pog(3, &[(1, 2)], &[(0, 1)]));
    let r = run(&["check", &f]);
    assert_eq!(r.code, 0);
    assert!(r.out.starts_with("COMPLETABLE\n"));
}

#[test]
fn check_claw_and_cycle_certificates() {
    let dir = TempDir::new().unwrap();
    let f = graph_file(&dir, "claw.json", &pog(4, &[(0, 1), (0, 2), (0, 3)], &[]));
    let r = run(&["check", &f]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("\"not_proper_interval\""));
    assert!(r.out.contains("\"claw\""));
    let f = graph_file(&dir, "c3.json", &pog(3, &[], &[(0, 1), (1, 2), (2, 0)]));
    let r = run(&["check", &f]);
    assert!(r.out.contains("\"directed_cycle\""), "{}", r.out);
}

#[test]
fn catalog_cycle() {
    let r = run(&["catalog", "Cycle", "--size", "4"]);
    assert_eq!(r.code, 0);
    let (doc, h) = PogDocument::parse(&r.out).unwrap();
    assert_eq!(doc.name.as_deref(), Some("Cycle(4)"));
    assert_eq!(h.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    assert!(h.arcs().is_empty());
}

#[test]
fn catalog_dual_and_errors() {
    let r = run(&["catalog", "F3_vi", "--size", "3", "--dual"]);
    let (_, h) = PogDocument::parse(&r.out).unwrap();
    assert_eq!(h.arcs(), vec![(1, 0), (1, 2)]);
    for args in [
        &["catalog", "Cycle", "--size", "3"][..],
        &["catalog", "Cycle"],
        &["catalog", "Nope"],
        &["catalog", "Tent", "--size", "5"],
    ] {
        let r = run(args);
        assert_eq!(r.code, 2, "{args:?}");
        let e: serde_json::Value = serde_json::from_str(&r.err).unwrap();
        assert_eq!(e["error"], "usage");
    }
}

#[test]
fn complete_path_with_one_arc() {
    let dir = TempDir::new().unwrap();
    let h = pog(3, &[(1, 2)], &[(0, 1)]);
    let f = graph_file(&dir, "p.json", &h);
    let r = run(&["complete", &f]);
    assert_eq!(r.code, 0);
    let (_, d) = PogDocument::parse(&r.out).unwrap();
    assert_eq!((d.arc_count(), d.edge_count()), (2, 0));
    assert!(verify_completion(&h, &d));

    let out = dir.path().join("out.json");
    let r = run(&["complete", &f, "-o", out.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert!(r.out.is_empty());
    let (_, d2) = PogDocument::parse(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(d, d2);
}

#[test]
fn complete_failure_prints_certificate() {
    let dir = TempDir::new().unwrap();
    let f = graph_file(&dir, "p.json", &pog(3, &[], &[(0, 1), (2, 1)]));
    let r = run(&["complete", &f]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("opposing_unbalanced_arcs"));
}

#[test]
fn classify_and_extract() {
    let dir = TempDir::new().unwrap();
    let f = graph_file(&dir, "p.json", &pog(3, &[], &[(1, 0), (1, 2)]));
    let r = run(&["classify", &f]);
    assert_eq!(r.code, 0);
    let e: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(e["family"], "F3_vi");
    assert_eq!(e["dual"], true);

    let f = graph_file(&dir, "q.json", &pog(3, &[(1, 2)], &[(0, 1)]));
    let r = run(&["classify", &f]);
    assert_eq!(r.code, 1);
    assert_eq!(r.out, "not an obstruction: completable\n");
    let r = run(&["extract", &f]);
    assert_eq!(r.code, 1);
    assert!(r.out.starts_with("COMPLETABLE\n"));

    // C4 with a redundant arc, plus an isolated vertex
    let h = pog(5, &[(1, 2), (2, 3), (0, 3)], &[(0, 1)]);
    let f = graph_file(&dir, "c.json", &h);
    let r = run(&["classify", &f]);
    assert_eq!(r.out, "not an obstruction: uncompletable but not minimal\n");
    let r = run(&["extract", &f]);
    assert_eq!(r.code, 0, "{}", r.out);
    let x: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(x["vertices"], serde_json::json!([0, 1, 2, 3]));
    assert_eq!(x["relaxed_arcs"], serde_json::json!([[0, 1]]));
    assert_eq!(x["classification"]["name"], "Cycle(4)");
}

#[test]
fn straight_enum_and_classes() {
    let dir = TempDir::new().unwrap();
    let f = graph_file(&dir, "claw.json", &pog(4, &[(0, 1), (0, 2), (0, 3)], &[]));
    let r = run(&["straight-enum", &f]);
    assert_eq!(r.code, 1);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["proper_interval"], false);
    assert_eq!(v["witness"]["kind"], "claw");

    let f = graph_file(&dir, "p4.json", &pog(4, &[(0, 1), (1, 2), (2, 3)], &[]));
    let r = run(&["straight-enum", &f]);
    assert_eq!(r.code, 0);
    let r = run(&["implication-classes", &f]);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["edges"], serde_json::json!([[0, 1], [1, 2], [2, 3]]));
}

#[test]
fn export_dot() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "p.json",
        r#"{"n": 3, "edges": [[0, 1]], "arcs": [[2, 1]], "name": "p3"}"#,
    );
    let r = run(&["export-dot", &f]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("0 -> 1 [dir=none];"));
    assert!(r.out.contains("2 -> 1;"));
}

#[test]
fn invalid_input_exits_two_with_json() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "bad.json",
        "{\n  \"n\": 3,\n  \"edges\": [\n    [0, 3]\n  ],\n  \"arcs\": []\n}",
    );
    let r = run(&["check", &f]);
    assert_eq!(r.code, 2);
    assert!(r.out.is_empty());
    let e: serde_json::Value = serde_json::from_str(&r.err).unwrap();
    assert_eq!(e["error"], "parse");
    assert_eq!(e["line"], 4);

    let f = write(&dir, "syntax.json", "{\"n\": 3,\n\"edges\": [[0 1]]}");
    let e: serde_json::Value = serde_json::from_str(&run(&["check", &f]).err).unwrap();
    assert_eq!(e["line"], 2);

    let r = run(&["check", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("\"io\""));

    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["check"]).code, 2);
}

#[test]
fn help_and_version_succeed() {
    let r = run(&["--help"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("enumerate"));
    assert_eq!(run(&["--version"]).code, 0);
}

#[test]
fn enumerate_limits_and_report() {
    assert_eq!(run(&["enumerate", "--max-n", "6"]).code, 2);
    assert_eq!(run(&["enumerate", "--max-n", "7", "--long-running"]).code, 2);
    assert_eq!(run(&["enumerate", "--max-n", "3", "--threads", "0"]).code, 2);

    let r = run(&["enumerate", "--max-n", "3"]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["counts"], serde_json::json!([0, 0, 0, 3]));
    let names: Vec<_> = v["obstructions"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| o["classification"]["family"].clone())
        .collect();
    assert!(names.iter().all(|n| n == "F2_viii" || n == "F3_vi"), "{names:?}");

    let dir = TempDir::new().unwrap();
    let path = dir.path().join("report.json");
    let r = run(&["enumerate", "--max-n", "4", "--report", path.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["max_n"], 4);
    assert_eq!(v["obstructions"].as_array().unwrap().len(), 12);
}

#[test]
fn output_is_deterministic() {
    let a = run(&["enumerate", "--max-n", "5", "--threads", "1"]);
    let b = run(&["enumerate", "--max-n", "5", "--threads", "3"]);
    assert_eq!(a.out, b.out);

    let dir = TempDir::new().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..50 {
        let n = rng.gen_range(1..10);
        let mut edges = Vec::new();
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                match rng.gen_range(0..5) {
                    0 | 1 => edges.push((u, v)),
                    2 => arcs.push((u, v)),
                    3 => arcs.push((v, u)),
                    _ => {}
                }
            }
        }
        let f = graph_file(&dir, &format!("g{i}.json"), &pog(n, &edges, &arcs));
        for cmd in [
            "check",
            "complete",
            "classify",
            "extract",
            "straight-enum",
            "implication-classes",
            "export-dot",
        ] {
            let x = run(&[cmd, &f]);
            let y = run(&[cmd, &f]);
            assert_eq!((x.code, &x.out, &x.err), (y.code, &y.out, &y.err), "{cmd} {f}");
        }
    }
}

#[test]
fn documents_round_trip_exhaustively() {
    for h in enumerate_graphs(5, &ALL_RELATIONS, |_| true).into_iter().flatten() {
        let text = json(&PogDocument::from_graph(&h, None));
        let (_, back) = PogDocument::parse(&text).unwrap();
        assert_eq!(back, h);
        let compact = serde_json::to_string(&PogDocument::from_graph(&h, Some("x".into()))).unwrap();
        assert_eq!(PogDocument::parse(&compact).unwrap().1, h);
    }
}

#[test]
fn documents_round_trip_randomly() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..500 {
        let n = rng.gen_range(6..40);
        let mut h = PartiallyOrientedGraph::empty(n);
        for _ in 0..rng.gen_range(0..3 * n) {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v && !h.is_adjacent(u, v) {
                h = if rng.gen_bool(0.5) {
                    let mut e = h.edges();
                    e.push((u, v));
                    PartiallyOrientedGraph::new(n, &e, &h.arcs()).unwrap()
                } else {
                    let mut a = h.arcs();
                    a.push((u, v));
                    PartiallyOrientedGraph::new(n, &h.edges(), &a).unwrap()
                };
            }
        }
        let text = json(&PogDocument::from_graph(&h, None));
        assert_eq!(PogDocument::parse(&text).unwrap().1, h);
    }
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_pogcomp");
    let dir = TempDir::new().unwrap();
    let f = graph_file(&dir, "p.json", &pog(3, &[], &[(0, 1), (2, 1)]));
    let st = Command::new(exe).args(["check", &f]).output().unwrap();
    assert_eq!(st.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&st.stdout).starts_with("UNCOMPLETABLE"));
    let st = Command::new(exe).args(["catalog", "Claw"]).output().unwrap();
    assert_eq!(st.status.code(), Some(0));
    let st = Command::new(exe)
        .args(["check", "/nonexistent/file.json"])
        .output()
        .unwrap();
    assert_eq!(st.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&st.stderr).contains("\"error\""));
}
