use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use fworm::graph::decode_graph6;
use serde_json::Value;

fn fworm(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fworm"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fworm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn gen(args: &[&str]) -> String {
    let mut full = vec!["gen"];
    full.extend(args);
    let out = fworm(&full, None);
    assert!(out.status.success());
    stdout(&out)
}

#[test]
fn gen_outputs_decode() {
    let k9 = decode_graph6(gen(&["complete", "9"]).as_bytes()).unwrap();
    assert_eq!((k9.order(), k9.size()), (9, 36));
    let p = decode_graph6(gen(&["product", "c5", "k3"]).as_bytes()).unwrap();
    assert_eq!((p.order(), p.size()), (15, 60));
    let g = decode_graph6(gen(&["groetzsch"]).as_bytes()).unwrap();
    assert_eq!(g.order(), 11);
    assert!(g.is_triangle_free());
}

#[test]
fn gen_rejects_bad_params() {
    assert_eq!(
        fworm(&["gen", "complete", "x"], None).status.code(),
        Some(2)
    );
    assert_eq!(fworm(&["gen", "nonsense"], None).status.code(), Some(2));
    assert_eq!(fworm(&["gen", "cycle", "2"], None).status.code(), Some(2));
}

#[test]
fn construct_writes_graph_and_layout() {
    let layout = scratch("gap.json");
    let dot = scratch("gap.dot");
    let out = fworm(
        &[
            "construct",
            "gap",
            "--g",
            "groetzsch",
            "--n",
            "4",
            "--layout",
            layout.to_str().unwrap(),
            "--dot",
            dot.to_str().unwrap(),
        ],
        None,
    );
    assert!(out.status.success());
    assert_eq!(decode_graph6(&out.stdout).unwrap().order(), 36);
    let l: Value = serde_json::from_str(&std::fs::read_to_string(&layout).unwrap()).unwrap();
    assert_eq!(l["universal"].as_array().unwrap().len(), 3);
    assert!(std::fs::read_to_string(&dot).unwrap().contains("V*0"));

    let out = fworm(&["construct", "gadget", "--pattern", "c4"], None);
    assert_eq!(decode_graph6(&out.stdout).unwrap().order(), 10);
    let out = fworm(&["construct", "c1", "--g", "k2", "--pattern", "c4"], None);
    assert_eq!(decode_graph6(&out.stdout).unwrap().order(), 128);
    let out = fworm(
        &[
            "construct",
            "c1",
            "--g",
            "k2",
            "--pattern",
            "c4",
            "--n0",
            "1",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("V_0-sequence"));
}

#[test]
fn spectrum_reports() {
    let k9 = gen(&["complete", "9"]);
    let out = fworm(&["spectrum", "-p", "k4", "--no-timing"], Some(&k9));
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["w_minus"], 3);
    assert_eq!(r["w_plus"], 3);
    assert_eq!(r["feasible"]["3"], "feasible");
    assert_eq!(r["feasible"]["4"], "infeasible");
    assert!(r.get("elapsed_ms").is_none());

    let c5 = gen(&["cycle", "5"]);
    let r = json(&fworm(&["spectrum", "-p", "k3", "--no-timing"], Some(&c5)));
    let feasible: Vec<&str> = r["feasible"]
        .as_object()
        .unwrap()
        .iter()
        .filter(|(_, s)| *s == "feasible")
        .map(|(k, _)| k.as_str())
        .collect();
    assert_eq!(feasible, ["1", "2", "3", "4", "5"]);

    let gap = stdout(&fworm(
        &["construct", "gap", "--g", "groetzsch", "--n", "4"],
        None,
    ));
    let r = json(&fworm(&["spectrum", "-p", "k4", "--no-timing"], Some(&gap)));
    assert_eq!(r["feasible"]["3"], "feasible");
    assert_eq!(r["feasible"]["4"], "infeasible");
    assert_eq!(r["feasible"]["5"], "feasible");
    assert_eq!(r["gaps"][0]["start"], 4);
}

#[test]
fn spectrum_is_deterministic_without_timing() {
    let g = gen(&["petersen"]);
    let a = fworm(
        &["spectrum", "-p", "c5", "--no-timing", "--threads", "1"],
        Some(&g),
    );
    let b = fworm(&["spectrum", "-p", "c5", "--no-timing"], Some(&g));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_and_solve_exit_codes() {
    let graph = scratch("k4.g6");
    std::fs::write(&graph, gen(&["complete", "4"])).unwrap();
    let g = graph.to_str().unwrap();
    let good = scratch("good.json");
    std::fs::write(&good, r#"{"colors": [0, 0, 1, 1]}"#).unwrap();
    let bad = scratch("bad.json");
    std::fs::write(&bad, "[0, 1, 2, 2]").unwrap();
    let out = fworm(
        &[
            "verify",
            g,
            "-p",
            "k3",
            "--coloring",
            good.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["verdict"], "ok");
    let out = fworm(
        &["verify", g, "-p", "k3", "--coloring", bad.to_str().unwrap()],
        None,
    );
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["verdict"], "rainbow_copy");

    assert_eq!(
        fworm(&["solve", g, "-p", "k3", "-k", "2"], None)
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        fworm(&["solve", g, "-p", "k3", "-k", "3"], None)
            .status
            .code(),
        Some(1)
    );
    let big = gen(&["complete", "9"]);
    let out = fworm(
        &["solve", "-p", "k4", "-k", "3", "--node-limit", "1"],
        Some(&big),
    );
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["status"], "unknown");
    assert_eq!(
        fworm(&["solve", g, "-p", "nope", "-k", "2"], None)
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn witnesses_verify_against_their_graphs() {
    let cases: [&[&str]; 5] = [
        &["witness", "gadget", "--pattern", "diamond", "--outer", "2"],
        &["witness", "c1", "--g", "c5", "--pattern", "k4"],
        &[
            "witness",
            "c1",
            "--g",
            "c5",
            "--pattern",
            "c4",
            "--colors",
            "5",
        ],
        &["witness", "gap-low", "--g", "c5", "--n", "4"],
        &[
            "witness",
            "gap-high",
            "--g",
            "groetzsch",
            "--n",
            "4",
            "--colors",
            "7",
        ],
    ];
    for (idx, args) in cases.iter().enumerate() {
        let graph = scratch(&format!("w{idx}.g6"));
        let coloring = scratch(&format!("w{idx}.json"));
        let mut full = args.to_vec();
        full.extend(["--graph-out", graph.to_str().unwrap()]);
        let out = fworm(&full, None);
        assert!(out.status.success(), "{args:?}");
        std::fs::write(&coloring, &out.stdout).unwrap();
        let pattern = args
            .iter()
            .position(|a| *a == "--pattern")
            .map(|p| args[p + 1])
            .unwrap_or("k4");
        let check = fworm(
            &[
                "verify",
                graph.to_str().unwrap(),
                "-p",
                pattern,
                "--coloring",
                coloring.to_str().unwrap(),
            ],
            None,
        );
        assert_eq!(check.status.code(), Some(0), "{args:?}: {}", stdout(&check));
    }
    let out = json(&fworm(
        &[
            "witness",
            "gap-high",
            "--g",
            "groetzsch",
            "--n",
            "4",
            "--colors",
            "7",
        ],
        None,
    ));
    let mut used: Vec<u64> = out["colors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_u64().unwrap())
        .collect();
    used.sort_unstable();
    used.dedup();
    assert_eq!(used.len(), 8);
}
