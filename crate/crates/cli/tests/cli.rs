use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tvsat::linalg::{CharPoly, CharPolyRepr};
use tvsat::make_context;

fn tvsat(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tvsat")).args(args).env("TVSAT_CACHE", cache).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn charpoly_of_cable_is_the_quintic() {
    let dir = tempfile::tempdir().unwrap();
    let o = tvsat(dir.path(), &["charpoly", "--p", "5", "--format", "json", "sat(double(1,U),P21)"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let repr: CharPolyRepr = serde_json::from_str(&stdout(&o)).unwrap();
    let ctx = make_context(5, None).unwrap();
    let got = CharPoly::from_repr(&ctx, &repr).unwrap();
    let (a, ab) = (ctx.a_pow(1), ctx.a_pow(-1));
    let want = CharPoly::from_roots(&ctx, &[ctx.one(), ctx.int(-1), a, ab.clone(), -ab]);
    assert_eq!(got, want);
}

#[test]
fn approximate_roots_are_labelled() {
    let dir = tempfile::tempdir().unwrap();
    let o = tvsat(dir.path(), &["charpoly", "--p", "5", "--digits", "3", "double(1,U)"]);
    let text = stdout(&o);
    assert!(text.contains("approximate"));
    assert!(text.contains("0.809 - 0.588i") && text.contains("0.809 + 0.588i"), "{text}");
}

#[test]
fn hopf_entry_is_quantum_nine() {
    let dir = tempfile::tempdir().unwrap();
    let o = tvsat(dir.path(), &["recoupling", "hopf", "2", "2", "--p", "5", "--format", "json"]);
    let repr = serde_json::from_str(&stdout(&o)).unwrap();
    let ctx = make_context(5, None).unwrap();
    assert_eq!(ctx.scalar_from_repr(&repr).unwrap(), tvsat::recoupling::qint(&ctx, 9));
}

#[test]
fn figure_eight_at_color_two_is_identity() {
    let dir = tempfile::tempdir().unwrap();
    let o = tvsat(dir.path(), &["module", "--p", "5", "--color", "2", "--format", "json", "double(1,U)"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["matrix"]["rows"], 1);
    let ctx = make_context(5, None).unwrap();
    let entry = serde_json::from_value(v["matrix"]["entries"][0].clone()).unwrap();
    assert!(ctx.scalar_from_repr(&entry).unwrap().is_one());
}

#[test]
fn json_round_trips_byte_identically() {
    let dir = tempfile::tempdir().unwrap();
    let o = tvsat(dir.path(), &["module", "--p", "5", "--format", "json", "sat(double(1,U),P21)"]);
    let text = stdout(&o);
    let repr: tvsat::engine::TVModuleRepr = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&repr).unwrap() + "\n", text);
}

#[test]
fn output_is_deterministic_and_cached() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["module", "--p", "5", "sum(double(1,U),double(-1,U))"];
    let cold = stdout(&tvsat(dir.path(), &args));
    let stat = stdout(&tvsat(dir.path(), &["cache", "stat", "--format", "json"]));
    let v: Value = serde_json::from_str(&stat).unwrap();
    assert!(v["entries"].as_u64().unwrap() >= 3);
    let warm = stdout(&tvsat(dir.path(), &args));
    assert_eq!(cold, warm);
    let cleared = stdout(&tvsat(dir.path(), &["cache", "clear", "--format", "json"]));
    let v: Value = serde_json::from_str(&cleared).unwrap();
    assert!(v["removed"].as_u64().unwrap() >= 3);
    assert!(stdout(&tvsat(dir.path(), &["cache", "stat"])).contains("0 entries"));
}

#[test]
fn cover_and_branched_ranges() {
    let dir = tempfile::tempdir().unwrap();
    let o = tvsat(dir.path(), &["cover", "--p", "5", "--from", "1", "--to", "4", "double(1,U)"]);
    assert_eq!(stdout(&o).lines().count(), 4);
    let o = tvsat(dir.path(), &["branched", "--p", "5", "--to", "2", "--format", "json", "U"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(tvsat(dir.path(), &["cover", "--p", "5", "--from", "3", "--to", "2", "U"]).status.code(), Some(1));
}

#[test]
fn genus_check_reports() {
    let dir = tempfile::tempdir().unwrap();
    let o = tvsat(dir.path(), &["genus-check", "--p", "5", "double(1,U)"]);
    assert!(stdout(&o).contains("satisfied"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let code = |args: &[&str]| tvsat(dir.path(), args).status.code();
    assert_eq!(code(&["module", "U"]), Some(1), "missing --p");
    assert_eq!(code(&["module", "--p", "5", "sat(U,P99)"]), Some(1), "unknown pattern");
    assert_eq!(code(&["module", "--p", "5", "double(1,"]), Some(1), "syntax");
    assert_eq!(code(&["frobnicate"]), Some(1));
    assert_eq!(code(&["module", "--p", "2", "U"]), Some(2), "invalid level");
    assert_eq!(code(&["module", "--p", "5", "--color", "9", "U"]), Some(2), "not a color");
    assert_eq!(code(&["recoupling", "theta", "0", "0", "2", "--p", "5"]), Some(2), "inadmissible");
    assert_eq!(code(&["module", "--p", "5", "--color", "2", "sat(U,P31)"]), Some(2), "uncolored-only pattern");
    assert_eq!(code(&["--help"]), Some(0));
}
