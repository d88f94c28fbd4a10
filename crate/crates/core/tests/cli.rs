use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use subsetsum::instances::Metadata;
use subsetsum::{Instance, SubsetMask};

fn subsetsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subsetsum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_powers2_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w10.json");
    let res = subsetsum(&[
        "gen",
        "--family",
        "powers2",
        "--n",
        "10",
        "--out",
        path_str(&out),
    ]);
    assert!(res.status.success());
    let inst = Instance::from_json(&fs::read_to_string(&out).unwrap()).unwrap();
    let expected: Vec<String> = (0..10).map(|i| (1u32 << i).to_string()).collect();
    assert_eq!(
        inst.elements()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>(),
        expected
    );
    assert_eq!(inst.target().to_string(), "1024");
    let meta = Metadata::from_json(&fs::read_to_string(dir.path().join("w10.meta.json")).unwrap())
        .unwrap();
    assert_eq!(meta.family, "powers2");
    assert!(meta.distinct_verified);
    assert_eq!(meta.planted_mask, None);
}

#[test]
fn gen_planted_sidecar_and_solve() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.json");
    let args = [
        "gen",
        "--family",
        "planted",
        "--n",
        "16",
        "--seed",
        "3",
        "--size",
        "5",
        "--out",
        path_str(&out),
    ];
    assert!(subsetsum(&args).status.success());
    let first = fs::read(&out).unwrap();
    let meta_text = fs::read_to_string(dir.path().join("p.meta.json")).unwrap();
    let meta = Metadata::from_json(&meta_text).unwrap();
    let planted = SubsetMask::from_hex(meta.planted_mask.as_deref().unwrap()).unwrap();
    let inst = Instance::from_json(&String::from_utf8(first.clone()).unwrap()).unwrap();
    assert!(inst.verify(planted).unwrap());
    assert_eq!(planted.len(), 5);

    assert!(subsetsum(&args).status.success());
    assert_eq!(fs::read(&out).unwrap(), first);
    assert_eq!(
        fs::read_to_string(dir.path().join("p.meta.json")).unwrap(),
        meta_text
    );

    let res = subsetsum(&["solve", "--in", path_str(&out), "--algo", "mitm"]);
    assert_eq!(res.status.code(), Some(0));
    let text = stdout(&res);
    let first_line = text.lines().next().unwrap();
    let parts: Vec<&str> = first_line.split(' ').collect();
    assert_eq!(parts[0], "SOLUTION");
    assert!(inst
        .verify(SubsetMask::from_hex(parts[1]).unwrap())
        .unwrap());
    assert_eq!(parts[2], inst.target().to_string());

    let res = subsetsum(&["check", "--in", path_str(&out), "--mask", parts[1]]);
    assert_eq!(res.status.code(), Some(0));
    assert!(stdout(&res).starts_with("VALID"));
    let res = subsetsum(&["check", "--in", path_str(&out), "--mask", "0"]);
    assert_eq!(res.status.code(), Some(1));
}

#[test]
fn solve_brute_powers2_n10() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w10.json");
    subsetsum(&[
        "gen",
        "--family",
        "powers2",
        "--n",
        "10",
        "--out",
        path_str(&out),
    ]);
    let res = subsetsum(&["solve", "--in", path_str(&out), "--algo", "brute"]);
    assert_eq!(res.status.code(), Some(1));
    assert_eq!(stdout(&res), "NOSOLUTION\nC=1024 M=1 T=2048\n");
}

#[test]
fn empty_instance_any_algo() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.json");
    fs::write(&path, "{\"n\":0,\"a\":[],\"b\":\"0\"}\n").unwrap();
    for algo in ["brute", "mitm", "dp"] {
        let res = subsetsum(&["solve", "--in", path_str(&path), "--algo", algo]);
        assert_eq!(res.status.code(), Some(0), "{algo}");
        assert_eq!(stdout(&res).lines().next(), Some("SOLUTION 0 0"));
    }
}

#[test]
fn trace_dump_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("i.json");
    fs::write(
        &path,
        Instance::from_i64(&[3, 34, 4, 12, 5, 2], 9).to_json(),
    )
    .unwrap();
    let trace = dir.path().join("t.txt");
    let res = subsetsum(&[
        "solve",
        "--in",
        path_str(&path),
        "--algo",
        "mitm",
        "--trace",
        path_str(&trace),
    ]);
    assert_eq!(res.status.code(), Some(0));
    let dump = fs::read_to_string(&trace).unwrap();
    let lines: Vec<&str> = dump.lines().collect();
    assert_eq!(lines[0], "LIST 8");
    assert_eq!(lines[1], "LIST 8");
    assert!(lines.last().unwrap().starts_with("EMIT "));
    assert!(lines
        .iter()
        .any(|l| l.starts_with("CMP ") && l.ends_with(" EQ")));
    let events = subsetsum::instrumentation::read_trace(dump.as_bytes()).unwrap();
    let inst = Instance::from_json(&fs::read_to_string(&path).unwrap()).unwrap();
    assert!(subsetsum::instrumentation::lemma3_check(
        &events,
        &inst,
        subsetsum::Encoding::SPlusVsBMinusSMinus
    )
    .unwrap());
}

#[test]
fn trace_refused_above_24() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    subsetsum(&[
        "gen",
        "--family",
        "powers2",
        "--n",
        "26",
        "--out",
        path_str(&path),
    ]);
    let trace = dir.path().join("t.txt");
    let res = subsetsum(&[
        "solve",
        "--in",
        path_str(&path),
        "--trace",
        path_str(&trace),
    ]);
    assert_eq!(res.status.code(), Some(2));
}

#[test]
fn errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{\"n\":2,\"a\":[\"1\"],\"b\":\"1\"}").unwrap();
    assert_eq!(
        subsetsum(&["solve", "--in", path_str(&bad)]).status.code(),
        Some(2)
    );
    let missing = dir.path().join("missing.json");
    assert_eq!(
        subsetsum(&["solve", "--in", path_str(&missing)])
            .status
            .code(),
        Some(2)
    );
    let big = dir.path().join("big.json");
    subsetsum(&[
        "gen",
        "--family",
        "powers2",
        "--n",
        "31",
        "--out",
        path_str(&big),
    ]);
    let res = subsetsum(&["solve", "--in", path_str(&big), "--algo", "brute"]);
    assert_eq!(res.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&res.stderr).contains("cap of 30"));
    let unwritable = dir.path().join("no/such/dir/x.json");
    assert_eq!(
        subsetsum(&[
            "gen",
            "--family",
            "powers2",
            "--n",
            "3",
            "--out",
            path_str(&unwritable)
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn bench_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("m.csv");
    let res = subsetsum(&[
        "bench",
        "--algo",
        "mitm",
        "--family",
        "powers2",
        "--n-min",
        "16",
        "--n-max",
        "32",
        "--step",
        "2",
        "--out",
        path_str(&csv),
    ]);
    assert!(res.status.success());
    let text = fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,family,algo,seed,trial,C,M,T,wall_time");
    assert_eq!(lines.len(), 10);
    for line in &lines[1..] {
        let f: Vec<&str> = line.split(',').collect();
        let n: u32 = f[0].parse().unwrap();
        assert_eq!(f[6], (1u64 << n.div_ceil(2)).to_string());
    }

    // refuses to overwrite without --force
    let again = subsetsum(&[
        "bench",
        "--algo",
        "mitm",
        "--family",
        "powers2",
        "--n-min",
        "4",
        "--n-max",
        "8",
        "--out",
        path_str(&csv),
    ]);
    assert_eq!(again.status.code(), Some(2));
    assert_eq!(fs::read_to_string(&csv).unwrap(), text);

    let res = subsetsum(&["report", path_str(&csv)]);
    assert_eq!(res.status.code(), Some(0));
    assert!(stdout(&res).contains("T >= M >= 1 violations: 0"));
}

#[test]
fn bench_random_trials_use_distinct_seeds() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("r.csv");
    let res = subsetsum(&[
        "bench",
        "--algo",
        "brute",
        "--family",
        "random",
        "--n-min",
        "4",
        "--n-max",
        "7",
        "--trials",
        "3",
        "--seed",
        "11",
        "--out",
        path_str(&csv),
    ]);
    assert!(res.status.success());
    let text = fs::read_to_string(&csv).unwrap();
    let rows: Vec<Vec<String>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(String::from).collect())
        .collect();
    assert_eq!(rows.len(), 12);
    for chunk in rows.chunks(3) {
        let seeds: std::collections::HashSet<&str> = chunk.iter().map(|r| r[3].as_str()).collect();
        assert_eq!(seeds.len(), 3);
        assert_eq!(
            chunk.iter().map(|r| r[4].as_str()).collect::<Vec<_>>(),
            ["0", "1", "2"]
        );
    }
}

#[test]
fn bench_skips_capped_rows() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("c.csv");
    let res = subsetsum(&[
        "bench",
        "--algo",
        "brute",
        "--family",
        "powers2",
        "--n-min",
        "4",
        "--n-max",
        "8",
        "--step",
        "2",
        "--brute-max-n",
        "6",
        "--out",
        path_str(&csv),
    ]);
    assert!(res.status.success());
    assert!(String::from_utf8_lossy(&res.stderr).contains("warning: skipping n=8"));
    assert_eq!(fs::read_to_string(&csv).unwrap().lines().count(), 3);
}

#[test]
fn report_flags_constructed_violation() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("v.csv");
    let mut text = String::from("n,family,algo,seed,trial,C,M,T,wall_time\n");
    for n in 8..=11u32 {
        text += &format!(
            "{n},powers2,brute,0,0,{},1,{},0.000000\n",
            1u64 << n,
            2u64 << n
        );
    }
    text += "4,powers2,brute,0,0,4,5,4,0.000000\n";
    fs::write(&csv, text).unwrap();
    let res = subsetsum(&["report", path_str(&csv)]);
    assert_ne!(res.status.code(), Some(0));
    assert_ne!(res.status.code(), Some(2));
    assert!(stdout(&res).contains("FAIL"));
}

#[test]
fn report_needs_four_points() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("few.csv");
    fs::write(
        &csv,
        "n,family,algo,seed,trial,C,M,T,wall_time\n8,powers2,brute,0,0,256,1,512,0.0\n9,powers2,brute,0,0,512,1,1024,0.0\n",
    )
    .unwrap();
    assert_eq!(
        subsetsum(&["report", path_str(&csv)]).status.code(),
        Some(2)
    );
}
