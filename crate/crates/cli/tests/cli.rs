use std::process::{Command, Output};

fn aalpha(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aalpha")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn spectrum_lambda(args: &[&str]) -> f64 {
    let mut full = vec!["spectrum", "--json"];
    full.extend_from_slice(args);
    let o = aalpha(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    v["results"][0]["lambda"].as_f64().unwrap()
}

#[test]
fn spectrum_examples() {
    assert!((spectrum_lambda(&["--family", "fst:3,3", "--alpha", "1/2"]) - 2.5).abs() < 1e-12);
    assert!((spectrum_lambda(&["--graph6", "Bw", "--alpha", "0"]) - 2.0).abs() < 1e-12);
    // largest root of x² − 3x − 16
    let expected = (3.0 + 73f64.sqrt()) / 2.0;
    assert!((spectrum_lambda(&["--family", "indjoin:4,8", "--alpha", "0"]) - expected).abs() < 1e-12);
}

#[test]
fn spectrum_report_embeds_config() {
    let o = aalpha(&["--seed", "7", "spectrum", "--family", "path:4", "--alpha", "0,7/9", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["config"]["seed"], 7);
    assert_eq!(v["config"]["workers"], 1);
    assert_eq!(v["results"][1]["alpha"], "7/9");
    assert_eq!(v["results"].as_array().unwrap().len(), 2);
}

#[test]
fn spectrum_from_edge_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c4.txt");
    std::fs::write(&path, "# four-cycle\n4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let lambda = spectrum_lambda(&["--edges", path.to_str().unwrap(), "--alpha", "0.3"]);
    assert!((lambda - 2.0).abs() < 1e-12);

    std::fs::write(&path, "4\n0 1\n1 9\n").unwrap();
    let o = aalpha(&["spectrum", "--edges", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bad_inputs_exit_one() {
    for args in [
        &["spectrum", "--graph6", "B"][..],
        &["spectrum", "--family", "g12:1,1"],
        &["spectrum", "--family", "path:3", "--alpha", "1"],
        &["spectrum"],
        &["verify", "no-such-check"],
        &["sweep", "--family", "path:3", "--step", "0"],
        &["enumerate", "--connected", "12"],
        &["--workers", "0", "enumerate", "--trees", "4"],
        &["frobnicate"],
    ] {
        assert_eq!(aalpha(args).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(aalpha(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_exit_status_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("main.json");
    let o = aalpha(&["verify", "main", "--n", "11,12", "--alpha", "1/2,9/10", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["status"], "PASS");
    assert_eq!(v["config"]["theorem"], "main");
    assert_eq!(v["config"]["params"]["orders"], serde_json::json!([11, 12]));
    assert_eq!(v["per_alpha"].as_array().unwrap().len(), 4);
    assert!(v["per_alpha"][0]["winners"].as_array().is_some_and(|w| !w.is_empty()));

    // the printed expansions do not match the matrices, so this one reports findings
    let o = aalpha(&["verify", "quotient"]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "FINDINGS");
    assert!(!v["findings"].as_array().unwrap().is_empty());
}

#[test]
fn verify_is_reproducible() {
    let run = || {
        let o = aalpha(&["--seed", "11", "verify", "delta-gap", "--n", "11", "--instances", "8"]);
        assert_eq!(o.status.code(), Some(0));
        let mut v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        strip(&mut v);
        v
    };
    assert_eq!(run(), run());
}

fn strip(v: &mut serde_json::Value) {
    match v {
        serde_json::Value::Object(m) => {
            m.remove("wall_time");
            m.values_mut().for_each(strip);
        }
        serde_json::Value::Array(a) => a.iter_mut().for_each(strip),
        _ => {}
    }
}

#[test]
fn sweep_rows() {
    let o = aalpha(&[
        "sweep", "--family", "g12:2,1,1,2", "--family", "g13:2,0,2,2", "--from", "0.5", "--to", "0.95", "--step", "0.05",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 21);

    let o = aalpha(&["sweep", "--family", "cycle:8", "--from", "0", "--to", "0.9", "--step", "0.3"]);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 4);
    for row in rows {
        let lambda: f64 = row.split(',').nth(2).unwrap().parse().unwrap();
        assert!((lambda - 2.0).abs() < 1e-12, "{row}");
    }
}

#[test]
fn sweep_star_matches_closed_form() {
    let o = aalpha(&["sweep", "--family", "star:9", "--from", "0", "--to", "0.8", "--step", "0.4"]);
    let text = stdout(&o);
    for row in text.lines().skip(1) {
        let f: Vec<&str> = row.split(',').collect();
        let (a, lambda): (f64, f64) = (f[1].parse().unwrap(), f[2].parse().unwrap());
        // K_{1,8}: largest root of x² − 9αx + 8(2α − 1)
        let closed = 0.5 * (9.0 * a + (81.0 * a * a - 32.0 * (2.0 * a - 1.0)).sqrt());
        assert!((lambda - closed).abs() < 1e-12, "{row}");
    }
}

#[test]
fn enumerate_counts() {
    let o = aalpha(&["enumerate", "--trees", "4"]);
    assert_eq!(stdout(&o).lines().count(), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("2 graphs"));
    assert_eq!(stdout(&aalpha(&["enumerate", "--connected", "5"])).lines().count(), 21);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.g6");
    let o = aalpha(&["enumerate", "--trees", "11", "--indep", "7", "-o", path.to_str().unwrap()]);
    assert!(o.status.success());
    let lines = std::fs::read_to_string(&path).unwrap();
    let count = lines.lines().count();
    assert!(count > 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains(&format!("{count} graphs")));
}
