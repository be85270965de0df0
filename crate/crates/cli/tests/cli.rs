use std::path::Path;
use std::process::{Command, Output};

fn kyoung(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kyoung")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn kconj_and_kskew_goldens() {
    let o = kyoung(&["kconj", "4,3,2,2,1,1", "--k", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "[3,2,2,1,1,1,1,1,1]\n");

    let o = kyoung(&["kskew", "4,3,2,2,1,1", "--k", "4"]);
    assert_eq!(stdout(&o), "[9,5,3,2,1,1]/[5,2,1]\n");

    let o = kyoung(&["kskew", "[4,2,1,1]", "--k", "4", "--json"]);
    assert_eq!(stdout(&o), "{\"outer\":[6,2,1,1],\"inner\":[2]}\n");
}

#[test]
fn covers_both_directions() {
    let o = kyoung(&["covers", "4,2,1,1", "--k", "4", "--dir", "up"]);
    assert_eq!(stdout(&o), "[4,2,1,1,1]\n[4,2,2,1]\n");
    let o = kyoung(&["covers", "4,2,1,1", "--k", "4", "--dir", "down"]);
    assert_eq!(stdout(&o), "[4,1,1,1]\n[4,2,1]\n");
}

#[test]
fn ideal_outputs() {
    let o = kyoung(&["ideal", "--m", "3", "--n", "3", "--k", "5"]);
    assert_eq!(stdout(&o).lines().count(), 20);

    let o = kyoung(&["ideal", "--m", "3", "--n", "3", "--k", "4", "--csv"]);
    let text = stdout(&o);
    assert!(text.starts_with("i,count\n0,1\n"));
    assert_eq!(text.lines().count(), 11);

    let o = kyoung(&["ideal", "--m", "3", "--n", "3", "--k", "3", "--dot"]);
    let text = stdout(&o);
    assert!(text.starts_with("digraph kyoung {"));
    assert_eq!(text.matches("[label=").count(), 10);

    let o = kyoung(&["ideal", "--m", "1", "--n", "1", "--k", "1", "--json"]);
    assert_eq!(stdout(&o), "{\"k\":1,\"ranks\":[[[]],[[1]]],\"edges\":[[0,1]]}\n");

    let o = kyoung(&["ideal", "--m", "3", "--n", "3", "--k", "3", "--dot", "--csv"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn rankgen_forms() {
    let o = kyoung(&["rankgen", "--m", "3", "--n", "3", "--k", "3"]);
    assert_eq!(stdout(&o), "1 + q + q^2 + q^3 + q^4 + q^5 + q^6 + q^7 + q^8 + q^9\n");
    let o = kyoung(&["rankgen", "--m", "3", "--n", "3", "--k", "5", "--gamma", "--json"]);
    assert_eq!(stdout(&o), "[0,0,0,1,1,1,1]\n");
}

#[test]
fn exit_codes_for_bad_input() {
    for args in [
        vec!["kconj", "5,1", "--k", "3"],
        vec!["kconj", "1,2", "--k", "3"],
        vec!["kconj", "x", "--k", "3"],
        vec!["rankgen", "--m", "4", "--n", "3", "--k", "3"],
        vec!["verify", "conjecture-u", "--m", "4"],
        vec!["verify", "sieved", "--m", "3", "--a", "3", "--b", "5"],
        vec!["verify", "no-such-check"],
        vec!["frobnicate"],
    ] {
        let o = kyoung(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_writes_deterministic_reports() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let o = kyoung(&[
            "verify",
            "conjecture-gen",
            "--m",
            "4",
            "--b",
            "5..12",
            "--n",
            "2..10",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        std::fs::read(path).unwrap()
    };
    let first = run("a.json");
    assert_eq!(first, run("b.json"));
    let reports: serde_json::Value = serde_json::from_slice(&first).unwrap();
    let r = &reports[0];
    assert_eq!(r["check"], "conjecture-gen");
    assert_eq!(r["kind"], "conjecture");
    assert_eq!(r["fail"], 0);
    let total = r["pass"].as_u64().unwrap() + r["skip"].as_u64().unwrap();
    assert_eq!(r["grid"].as_u64().unwrap(), total);
    assert_eq!(r["elapsed_ms"], 0);
}

#[test]
fn verify_csv_and_unwritable_path() {
    let o = kyoung(&["verify", "sieved-gaussian", "--primes", "3,5", "--k", "12", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("check,kind,grid,pass,fail,skip\nsieved-gaussian,theorem,"));

    let missing = Path::new("/nonexistent-dir/report.json");
    let o = kyoung(&["verify", "sieved", "--m", "3", "--a", "3", "--b", "4", "--out", missing.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn structure_sweep_with_small_bounds() {
    let o = kyoung(&["verify", "structure", "--m", "3", "--n", "4", "--k", "4", "--max-degree", "6", "--samples", "20"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let reports: Vec<serde_json::Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(reports.len(), 12);
    assert!(reports.iter().all(|r| r["fail"] == 0 && r["kind"] == "theorem"));
}

#[test]
fn sweep_from_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("u.csv");
    let config = dir.path().join("u.json");
    let body = serde_json::json!({
        "check": "conjecture-u",
        "m": 3,
        "k": "4..15",
        "n_extra": 3,
        "format": "csv",
        "out": out,
    });
    std::fs::write(&config, body.to_string()).unwrap();
    let o = kyoung(&["sweep", "--config", config.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.lines().nth(1).unwrap().starts_with("conjecture-u,conjecture,"));

    std::fs::write(&config, "{\"check\":\"conjecture-u\",\"typo\":1}").unwrap();
    let o = kyoung(&["sweep", "--config", config.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}
