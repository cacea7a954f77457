use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn vsdo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vsdo"))
        .args(args)
        .output()
        .unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = vsdo(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn path(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn triangle(dir: &TempDir) -> PathBuf {
    let g = path(dir, "tri.gr");
    fs::write(&g, "c shortcut\np sp 3 3\na 1 2 1\na 2 3 1\na 1 3 5\n").unwrap();
    g
}

#[test]
fn verify_triangle_is_exact() {
    let dir = TempDir::new().unwrap();
    let g = triangle(&dir);
    let report: Value =
        serde_json::from_str(&ok(&["verify", "-g", s(&g), "-s", "1", "--eps", "0.5"])).unwrap();
    assert_eq!(report["violations"], 0);
    assert_eq!(report["max_ratio"], 1.0);
    assert_eq!(report["queries"], 6);
}

#[test]
fn build_query_and_batch_agree() {
    let dir = TempDir::new().unwrap();
    let g = path(&dir, "g.gr");
    let o = path(&dir, "g.vsdo");
    ok(&[
        "gen",
        "--type",
        "path-shortcut",
        "--n",
        "60",
        "--m",
        "200",
        "--maxw",
        "30",
        "--seed",
        "4",
        "-o",
        s(&g),
    ]);
    let report: Value = serde_json::from_str(&ok(&[
        "build",
        "-g",
        s(&g),
        "-s",
        "1",
        "--eps",
        "0.25",
        "-o",
        s(&o),
    ]))
    .unwrap();
    assert_eq!(report["n"], 60);
    assert!(report["oracle_bytes"].as_u64().unwrap() > 0);
    assert_eq!(&fs::read(&o).unwrap()[..5], b"VSDO1");

    let pairs: Vec<(usize, usize)> = (2..=60)
        .step_by(7)
        .flat_map(|x| (1..=60).step_by(5).map(move |t| (x, t)))
        .collect();
    let q = path(&dir, "q.tsv");
    fs::write(
        &q,
        pairs
            .iter()
            .map(|(x, t)| format!("{x}\t{t}\n"))
            .collect::<String>(),
    )
    .unwrap();
    let batch = ok(&["batch", "-o", s(&o), "-q", s(&q)]);
    let lines: Vec<&str> = batch.lines().collect();
    assert_eq!(lines.len(), pairs.len());
    for (line, (x, t)) in lines.iter().zip(&pairs) {
        let single = ok(&[
            "query",
            "-o",
            s(&o),
            "-x",
            &x.to_string(),
            "-t",
            &t.to_string(),
        ]);
        assert_eq!(*line, format!("{x}\t{t}\t{}", single.trim()));
    }
}

#[test]
fn failed_target_prints_inf() {
    let dir = TempDir::new().unwrap();
    let g = triangle(&dir);
    let o = path(&dir, "tri.vsdo");
    ok(&["build", "-g", s(&g), "-s", "1", "--eps", "1", "-o", s(&o)]);
    assert_eq!(
        ok(&["query", "-o", s(&o), "-x", "3", "-t", "3"]).trim(),
        "INF"
    );
    assert_eq!(
        ok(&["query", "-o", s(&o), "-x", "2", "-t", "3"]).trim(),
        "5"
    );
}

#[test]
fn verify_fifty_seeded_instances() {
    let dir = TempDir::new().unwrap();
    let families = ["gnp", "layered", "path-shortcut", "grid"];
    let eps = ["1.0", "0.5", "0.1"];
    for i in 0..50usize {
        let g = path(&dir, &format!("i{i}.gr"));
        let n = (2 + i * 31 % 159).to_string();
        let m = (((i % 8) + 1) * (2 + i * 31 % 159)).to_string();
        let maxw = ["1", "10", "1000"][i % 3];
        ok(&[
            "gen",
            "--type",
            families[i % 4],
            "--n",
            &n,
            "--m",
            &m,
            "--maxw",
            maxw,
            "--seed",
            &i.to_string(),
            "-o",
            s(&g),
        ]);
        let out = vsdo(&["verify", "-g", s(&g), "-s", "1", "--eps", eps[i % 3]]);
        assert_eq!(out.status.code(), Some(0), "instance {i}");
        let report: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(report["violations"], 0);
    }
}

#[test]
fn gen_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (path(&dir, "a.gr"), path(&dir, "b.gr"));
    for p in [&a, &b] {
        ok(&[
            "gen",
            "--type",
            "gnp",
            "--n",
            "40",
            "--maxw",
            "9",
            "--seed",
            "3",
            "-o",
            s(p),
        ]);
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn stats_and_bench_reports() {
    let dir = TempDir::new().unwrap();
    let g = path(&dir, "g.gr");
    let o = path(&dir, "g.vsdo");
    ok(&[
        "gen",
        "--type",
        "layered",
        "--n",
        "200",
        "--maxw",
        "50",
        "--seed",
        "1",
        "-o",
        s(&g),
    ]);
    ok(&[
        "build",
        "-g",
        s(&g),
        "-s",
        "1",
        "--eps",
        "0.5",
        "--sz-provider",
        "fast",
        "-o",
        s(&o),
    ]);
    let st: Value = serde_json::from_str(&ok(&["stats", "-o", s(&o)])).unwrap();
    assert_eq!(st["n"], 200);
    assert_eq!(st["sz_provider"], "fast");
    assert!(st["depth"].as_u64().unwrap() >= 1);
    let bench: Value = serde_json::from_str(&ok(&[
        "bench",
        "-g",
        s(&g),
        "-s",
        "1",
        "--eps",
        "0.5",
        "--queries",
        "500",
        "--seed",
        "2",
    ]))
    .unwrap();
    assert_eq!(bench["queries"], 500);
    assert!(bench["query_p99_us"].as_f64().unwrap() >= bench["query_p50_us"].as_f64().unwrap());
}

#[test]
fn usage_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let g = triangle(&dir);
    assert_eq!(vsdo(&["query"]).status.code(), Some(2));
    assert_eq!(
        vsdo(&[
            "verify",
            "-g",
            s(&g),
            "-s",
            "1",
            "--eps",
            "0.5",
            "--max-n",
            "2"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        vsdo(&["verify", "-g", s(&g), "-s", "4", "--eps", "0.5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        vsdo(&[
            "build",
            "-g",
            s(&g),
            "-s",
            "1",
            "--eps",
            "0.5",
            "--sz-provider",
            "magic",
            "-o",
            "x"
        ])
        .status
        .code(),
        Some(2)
    );
    let bad = path(&dir, "bad.vsdo");
    fs::write(&bad, b"NOTANORACLE").unwrap();
    let out = vsdo(&["query", "-o", s(&bad), "-x", "2", "-t", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("magic"));
}
