use std::fs;

use chowcalc_cli::run;
use serde_json::Value as Json;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("chowcalc").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Json {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args:?} failed: {err}{out}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn todd_example() {
    let (code, out, _) = call(&["todd", "--dim", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"components\":[\"1\",\"2\",\"11/6\",\"1\"]}\n");
}

#[test]
fn bound_example() {
    let v = json(&["bound", "--rank", "2", "--c1", "-1", "--ch2", "-9/2"]);
    assert_eq!(v["ch3_bound"], "2635/6");
    assert_eq!(v["euler_bound"], "1279/3");
    assert_eq!(v["splitting_radius"], "5/2");
    let v = json(&["bound", "--rank", "2", "--c1", "-1", "--ch2", "-9/2", "--splitting", "0,-1"]);
    assert_eq!(v["q"], "23/2");
    assert_eq!(v["q_int"], "12");
    assert_eq!(v["h_bounds"], serde_json::json!(["1", "115/2", "115/2", "0"]));
}

#[test]
fn literal_mode_flag() {
    let clamped = json(&["bound", "--rank", "2", "--c1", "0", "--ch2", "10", "--splitting", "0,0"]);
    assert_eq!(clamped["h_bounds"][1], "0");
    let literal = json(&["bound", "--rank", "2", "--c1", "0", "--ch2", "10", "--splitting", "0,0", "--literal"]);
    assert_eq!(literal["literal_mode"], true);
    assert_eq!(literal["q"], "-4");
}

#[test]
fn resolution_example() {
    let v = json(&["resolution", "--c2", "5", "--s", "1", "--verify"]);
    assert_eq!(v["chern_consistent"], true);
    assert_eq!(v["c3"], "19");
    assert_eq!(v["character"], serde_json::json!(["2", "-1", "-9/2", "71/6"]));
    assert_eq!(v["presentation"]["dim_hom"], "97");
    assert_eq!(v["presentation"]["dim_g"], "66");
    let v = json(&["resolution", "--c2", "5", "--s", "1"]);
    assert!(v.get("chern_consistent").is_none());
}

#[test]
fn conversions_and_euler() {
    let v = json(&["chern", "--rank", "2", "--c1", "-1", "--c2", "5", "--c3", "19"]);
    assert_eq!(v["components"], serde_json::json!(["2", "-1", "-9/2", "71/6"]));
    let v = json(&["chern", "--ch", "2,-1,-9/2,71/6"]);
    assert_eq!(v["classes"]["c3"], "19");
    let v = json(&["chern", "--dim", "2", "--rank", "2", "--c1", "0", "--c2", "5"]);
    assert_eq!(v["components"], serde_json::json!(["2", "0", "-5"]));
    assert_eq!(json(&["euler", "--ch", "2,0,-5"])["euler"], "-3");
    assert_eq!(json(&["euler", "--ch", "1,0,0,0", "--twist", "2"])["euler"], "10");
    let v = json(&["restrict", "--ch", "2,-1,-9/2,71/6"]);
    assert_eq!(v["restricted"], serde_json::json!(["2", "-1", "-9/2"]));
    assert_eq!(v["euler_restricted"], v["euler_pushforward"]);
}

#[test]
fn enumerations() {
    let v = json(&["splitting-types", "--rank", "2", "--c1", "0"]);
    assert_eq!(v["count"], "2");
    let v = json(&["partitions", "--length", "4"]);
    assert_eq!(v["count"], "14");
    let v = json(&["enumerate-c3", "--rank", "1", "--c1", "0", "--c2", "0"]);
    assert_eq!((v["c3_min"].as_str(), v["c3_max"].as_str()), (Some("-34"), Some("34")));
    let v = json(&["monad", "--rank", "2", "--c1", "0", "--ch2", "-5"]);
    assert_eq!(v["monad"]["display"], "O(-1)^5 -> O(0)^12 -> O(1)^5");
}

#[test]
fn csv_output_has_header() {
    let (code, out, _) = call(&["partitions", "--length", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("partition,points,total"));
    assert_eq!(lines.count(), 3);
    let (_, out, _) = call(&["catalog", "resolutions", "--c2", "5..6", "--format", "csv"]);
    assert!(out.starts_with("kind,schema_version,in.c2,in.s,out.c3,out.chern_consistent,"));
    assert_eq!(out.lines().count(), 3);
}

#[test]
fn exit_codes() {
    // usage errors
    assert_eq!(call(&[]).0, 2);
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["todd", "--dim", "three"]).0, 2);
    assert_eq!(call(&["bound", "--rank", "2", "--c1", "-1", "--ch2", "1/0"]).0, 2);
    assert_eq!(call(&["catalog", "strata", "--c2", "9..5", "--l", "0..1"]).0, 2);
    assert_eq!(call(&["catalog", "strata", "--l", "0..1"]).0, 2);
    assert_eq!(call(&["chern", "--rank", "2"]).0, 2);
    // domain errors carry a machine-readable object
    let (code, out, err) = call(&["resolution", "--c2", "5", "--s", "2"]);
    assert_eq!(code, 1);
    assert!(err.contains("domain error"));
    let v: Json = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"]["kind"], "domain");
    assert_eq!(call(&["todd", "--dim", "4"]).0, 1);
    assert_eq!(call(&["chern", "--ch", "2,0,1/3"]).0, 1);
    assert_eq!(call(&["monad", "--rank", "2", "--c1", "-2", "--ch2", "0"]).0, 1);
    assert_eq!(call(&["splitting-types", "--rank", "0", "--c1", "0"]).0, 1);
    // help is not an error
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn catalog_files_and_diff() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let c = dir.path().join("c.json");
    let a_s = a.to_str().unwrap();
    let b_s = b.to_str().unwrap();
    let c_s = c.to_str().unwrap();
    for path in [a_s, b_s] {
        let v = json(&["catalog", "strata", "--c2", "5..10", "--l", "0..3", "--out", path]);
        assert_eq!(v["entries"], "99");
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let v = json(&["catalog", "diff", a_s, b_s]);
    assert_eq!(v["identical"], true);
    assert_eq!(v["only_left"], serde_json::json!([]));
    assert_eq!(json(&["diff", a_s, b_s])["identical"], true);

    json(&["catalog", "strata", "--c2", "5..9", "--l", "0..3", "--out", c_s]);
    let v = json(&["diff", a_s, c_s]);
    assert_eq!(v["identical"], false);
    assert_eq!(v["only_left"].as_array().unwrap().len(), 2 * 11);

    // unreadable or malformed inputs
    assert_eq!(call(&["diff", a_s, "/nonexistent/x.json"]).0, 1);
    fs::write(&c, "{}").unwrap();
    let (code, out, _) = call(&["diff", a_s, c_s]);
    assert_eq!(code, 1);
    assert!(out.contains("\"catalog\""));
    // unwritable output path
    let (code, out, _) = call(&["catalog", "resolutions", "--c2", "5..6", "--out", "/nonexistent/dir/x.json"]);
    assert_eq!(code, 1);
    assert!(out.contains("\"io\""));
}

#[test]
fn config_presets_are_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("grid.conf");
    fs::write(&cfg, "# defaults\nc2 = 5..6\nl = 0..1\n").unwrap();
    let cfg_s = cfg.to_str().unwrap();
    let (_, from_cfg, _) = call(&["catalog", "strata", "--config", cfg_s]);
    let v: Json = serde_json::from_str(&from_cfg).unwrap();
    assert_eq!(v["params"]["c2"], "5..6");
    assert_eq!(v["entries"].as_array().unwrap().len(), 2 * 2);
    let (_, overridden, _) = call(&["catalog", "strata", "--config", cfg_s, "--c2", "5..5"]);
    let v: Json = serde_json::from_str(&overridden).unwrap();
    assert_eq!(v["params"]["c2"], "5..5");
    assert_eq!(v["params"]["l"], "0..1");
    assert_eq!(call(&["catalog", "strata", "--config", "/nonexistent.conf"]).0, 1);
}

#[test]
fn catalog_entry_counts() {
    let (_, out, _) = call(&["catalog", "strata", "--c2", "4..4", "--l", "0..3"]);
    let v: Json = serde_json::from_str(&out).unwrap();
    assert_eq!(v["entries"], serde_json::json!([]));
    let (_, out, _) = call(&["catalog", "monads", "--rank", "1..2", "--charge", "0..2"]);
    let v: Json = serde_json::from_str(&out).unwrap();
    // r = 1: d = 0, c = 0..2; r = 2: d = 0 (c = 0..2), d = -1 (c = 1..2)
    assert_eq!(v["entries"].as_array().unwrap().len(), 3 + 3 + 2);
    let (_, out, _) = call(&["catalog", "bounds", "--rank", "1..2", "--c1", "-1..0", "--c2", "0..3"]);
    let v: Json = serde_json::from_str(&out).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 2 * 2 * 4);
}
