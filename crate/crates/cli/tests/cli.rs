use std::path::{Path, PathBuf};
use std::process::Command;

use proptest::prelude::*;
use quadriline_cli::report::parse_rectangle;
use quadriline_cli::{execute, ConfigFile, RatioRequest, Request};
use quadriline_core::{ConfigurationInput, Field, InputLine, Rational, F13};
use serde_json::{json, Value};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

/// Runs the binary, returning exit code, parsed stdout (if JSON) and stderr.
fn run(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_quadriline")).args(args).output().expect("binary runs");
    let stdout = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap_or(-1), stdout, String::from_utf8_lossy(&out.stderr).into_owned())
}

fn ok(args: &[&str]) -> Value {
    let (code, v, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    v
}

fn input(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

/// Every vertex of `rect` (or of each generator of a family) lies on the
/// corresponding line of the file, exactly.
fn assert_on_lines<T: Field>(file: &str, rect: &Value) {
    if let Some(family) = rect.get("family") {
        for g in family["spanned_by"].as_array().expect("generators") {
            assert_on_lines::<T>(file, g);
        }
        return;
    }
    let cfg = ConfigFile::read(&data(file)).unwrap().to_input::<T>().unwrap();
    let p = parse_rectangle::<T>(rect).expect("rectangle parses");
    let c = p.coords();
    let lines = [&cfg.first.0, &cfg.second.0, &cfg.first.1, &cfg.second.1];
    for (i, l) in lines.iter().enumerate() {
        assert!(l.contains_projective(&c[2 * i], &c[2 * i + 1], &c[8]), "{file}: vertex {i} of {p}");
    }
    assert!(p.is_rectangle());
}

#[test]
fn worked_rectangle_by_slope_and_aspect() {
    let by_slope = ok(&["rect", "--input", &input("cfg1.json"), "--slope", "1/0"]);
    assert_eq!(by_slope["vertices"], json!([["-1/3", "1/3"], ["-1/3", "0"], ["1/3", "0"], ["1/3", "1/3"]]));
    assert_eq!(by_slope["aspect"], "-1/2");
    assert_eq!(by_slope["center"], json!(["0", "1/6"]));
    let by_aspect = ok(&["rect", "--input", &input("cfg1.json"), "--aspect", "-1/2"]);
    assert_eq!(by_aspect["projective"], by_slope["projective"]);
    assert_eq!(by_aspect["slope"], "1/0");
}

#[test]
fn translated_input_gives_translated_rectangle() {
    let v = ok(&["rect", "--input", &input("cfg1_shifted.json"), "--slope", "1/0"]);
    assert_eq!(v["vertices"], json!([["-1/3", "7/3"], ["-1/3", "2"], ["1/3", "2"], ["1/3", "7/3"]]));
    assert_eq!(v["center"], json!(["0", "13/6"]));
}

#[test]
fn rectangle_at_infinity() {
    let v = ok(&["rect", "--input", &input("cfg2.json"), "--slope", "1/2"]);
    assert_eq!(v["at_infinity"], true);
    assert_eq!(v["projective"].as_array().unwrap().len(), 9);
    assert_eq!(v["projective"][8], "0");
    assert!(v.get("vertices").is_none());
    assert_on_lines::<Rational>("cfg2.json", &v);
}

#[test]
fn vertical_and_fractional_inputs_map_back_exactly() {
    for file in ["vertical.json", "fractions.json", "cfg1_shifted.json"] {
        for slope in ["0/1", "1/0", "1/1", "-2/3", "5"] {
            let v = ok(&["rect", "--input", &input(file), "--slope", slope]);
            assert_on_lines::<Rational>(file, &v);
            if file == "vertical.json" && slope == "0/1" {
                // Horizontal sides on x = 0 and y = 0: a line of rectangles.
                assert_eq!(v["family"]["dimension"], 1);
            }
            let wanted = if slope.contains('/') { slope.to_string() } else { format!("{slope}/1") };
            assert_eq!(v["request"]["slope"], wanted);
        }
        for aspect in ["1/1", "-1/2", "3/1"] {
            let v = ok(&["rect", "--input", &input(file), "--aspect", aspect]);
            assert_on_lines::<Rational>(file, &v);
        }
    }
}

#[test]
fn classify_reports() {
    let v = ok(&["classify", "--input", &input("cfg1.json")]);
    assert_eq!(v["class"]["degenerate"], false);
    assert_eq!(v["normalized"]["E"], "1/0");
    assert_eq!(v["normalized"]["F"], "3/2");
    assert_eq!(v["normalized"]["degeneracy"], "3");
    let v = ok(&["classify", "--input", &input("cfg3.json")]);
    assert_eq!(v["class"]["twin_pairs"], true);
    assert_eq!(v["class"]["slope_path_at_infinity"], true);
    assert_eq!(v["at_infinity"]["slopes"], "all");
    let v = ok(&["classify", "--input", &input("cfg2.json")]);
    assert_eq!(v["class"]["degenerate"], true);
    assert_eq!(v["class"]["locus_shape"], "two-lines");
    let v = ok(&["classify", "--input", &input("vertical.json")]);
    assert!(v["plane_map"]["reflection_t"].is_string());
}

#[test]
fn all_parallel_routing() {
    let v = ok(&["classify", "--input", &input("parallel_shared.json")]);
    assert_eq!((v["all_parallel"].clone(), v["midline_shared"].clone()), (json!(true), json!(true)));
    assert_eq!(v["midline"]["c"], "0");
    let v = ok(&["locus", "--input", &input("parallel_split.json")]);
    assert_eq!(v["midline_shared"], false);
    assert_eq!(v["rectangles_exist"], false);
    let v = ok(&["classify", "--input", &input("parallel_f7.json")]);
    assert_eq!(v["field"], "F_7");
    assert_eq!(v["midline_shared"], true);
}

#[test]
fn path_samples_have_their_ratios() {
    let v = ok(&["path", "--input", &input("vertical.json"), "--kind", "slope", "--samples", "9"]);
    let rects = v["rectangles"].as_array().unwrap();
    assert_eq!(rects.len(), 9);
    // x = 0 and y = 0 are orthogonal, so the slope path takes its orthogonal form.
    assert_eq!(v["case"], "orthogonal");
    for r in rects {
        assert_eq!(r["slope"], r["requested_slope"]);
        assert_on_lines::<Rational>("vertical.json", r);
    }
    let v = ok(&["path", "--input", &input("cfg2.json"), "--kind", "aspect", "--samples", "6"]);
    for r in v["rectangles"].as_array().unwrap() {
        assert_eq!(r["aspect"], r["requested_aspect"]);
        // Degenerate: constant slope along the aspect path.
        assert_eq!(r["slope"], "-2/1");
    }
    let v = ok(&["path", "--input", &input("cfg3.json"), "--samples", "4"]);
    assert_eq!(v["at_infinity"], true);
}

#[test]
fn locus_of_cfg2() {
    let v = ok(&["locus", "--input", &input("cfg2.json")]);
    assert_eq!(v["aspect_centers"]["slope"], "4/5");
    assert_eq!(v["gauss_newton"]["slope"], "4/5");
    assert_eq!(v["slope_centers"]["slope"], "-8/5");
    assert_eq!(v["diagonal_g"]["slope"], "-8/5");
    assert_eq!(v["aspect_on_gauss_newton"], true);
    assert!(v["special_rectangles"]["center"].is_object());
    let v = ok(&["locus", "--input", &input("cfg1.json")]);
    assert_eq!(v["slope_centers"]["type"], "conic");
    assert!(v["special_rectangles"]["unavailable"].is_string());
}

#[test]
fn census_over_f13() {
    for file in ["cfg1_f13.json", "cfg2_f13.json"] {
        let v = ok(&["census", "--input", &input(file)]);
        assert_eq!(v["modulus"], 13);
        assert_eq!(v["all_ok"], true, "{file}: {v}");
    }
    let v = ok(&["rect", "--input", &input("cfg1_f13.json"), "--slope", "1/0"]);
    assert_on_lines::<F13>("cfg1_f13.json", &v);
}

fn svg(file: &str, extra: &[&str]) -> String {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("figure.svg");
    let (inp, out_s) = (input(file), out.to_string_lossy().into_owned());
    let mut args = vec!["render", "--input", &inp, "--out", &out_s];
    args.extend_from_slice(extra);
    ok(&args);
    std::fs::read_to_string(out).unwrap()
}

#[test]
fn render_figures() {
    let cfg2 = svg("cfg2.json", &["--diagonals"]);
    assert!(cfg2.starts_with("<?xml"));
    assert!(cfg2.contains("data-slope=\"4/5\"") && cfg2.contains("data-slope=\"-8/5\""));
    assert_eq!(cfg2.matches("class=\"locus-line\"").count(), 2);
    assert_eq!(cfg2.matches("class=\"diagonal\"").count(), 3);
    let cfg1 = svg("cfg1.json", &["--samples", "5"]);
    assert!(cfg1.contains("class=\"locus-curve\""));
    assert_eq!(cfg1.matches("class=\"rectangle\"").count(), 5);
    let bare = svg("cfg1.json", &["--samples", "0"]);
    assert_eq!(bare.matches("class=\"rectangle\"").count(), 0);
    assert_eq!(bare.matches("class=\"line\"").count(), 4);
    // Every number is a plain decimal with at most twelve significant digits.
    for attr in cfg1.split('"').skip(1).step_by(2) {
        for token in attr.split([' ', 'M', 'L', 'Z']) {
            if let Ok(x) = token.parse::<f64>() {
                let digits = token.trim_start_matches('-').replace('.', "");
                let significant = digits.trim_start_matches('0').trim_end_matches('0');
                assert!(significant.len() <= 12, "{token}");
                assert!(x.is_finite());
            }
        }
    }
}

#[test]
fn exit_codes() {
    let cases: [(&[&str], i32); 8] = [
        (&["classify", "--input", "/does/not/exist.json"], 2),
        (&["classify", "--input", &input("concurrent.json")], 2),
        (&["census", "--input", &input("cfg1.json")], 2),
        (&["render", "--input", &input("cfg1_f13.json"), "--out", "/tmp/never.svg"], 2),
        (&["rect", "--input", &input("cfg1.json"), "--slope", "0/0"], 2),
        (&["rect", "--input", &input("cfg1.json")], 2),
        (&["render", "--input", &input("cfg1.json"), "--out", "/does/not/exist/x.svg"], 2),
        (&["frobnicate"], 2),
    ];
    for (args, code) in cases {
        let (got, _, err) = run(args);
        assert_eq!(got, code, "{args:?}: {err}");
    }
    let dir = tempfile::tempdir().unwrap();
    for (name, text) in [
        ("bad_json.json", "{\"field\": "),
        ("bad_literal.json", r#"{"field": "rational", "pairs": [[{"a": "1/0", "b": 1, "c": 0}, {"a": 0, "b": 1, "c": 0}], [{"a": 1, "b": 1, "c": 1}, {"a": 1, "b": -1, "c": 0}]]}"#),
        ("big_prime.json", r#"{"field": {"prime": 101}, "pairs": [[{"a": 1, "b": 1, "c": 0}, {"a": 0, "b": 1, "c": 0}], [{"a": 1, "b": 1, "c": 1}, {"a": 1, "b": -1, "c": 0}]]}"#),
    ] {
        let path = dir.path().join(name);
        std::fs::write(&path, text).unwrap();
        let (got, _, err) = run(&["classify", "--input", &path.to_string_lossy()]);
        assert_eq!(got, 2, "{name}: {err}");
        if name == "bad_literal.json" {
            assert!(err.contains("pairs[0][0].a"), "{err}");
        }
    }
}

fn literal() -> impl Strategy<Value = i64> {
    -6i64..=6
}

fn line() -> impl Strategy<Value = (i64, i64, i64)> {
    (literal(), literal(), literal()).prop_filter("a = b = 0", |(a, b, _)| *a != 0 || *b != 0)
}

fn file_of(lines: [(i64, i64, i64); 4]) -> ConfigFile {
    let l = |(a, b, c): (i64, i64, i64)| json!({"a": a, "b": b, "c": c});
    let text = json!({"field": "rational", "pairs": [[l(lines[0]), l(lines[1])], [l(lines[2]), l(lines[3])]]});
    ConfigFile::parse(&text.to_string()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn emitted_vertices_satisfy_input_lines(
        lines in [line(), line(), line(), line()],
        s in -4i64..=4, t in 0i64..=3, by_slope in any::<bool>(),
    ) {
        prop_assume!(s != 0 || t != 0);
        let file = file_of(lines);
        let ratio = format!("{s}/{t}");
        let req = Request::Rect(if by_slope { RatioRequest::Slope(ratio) } else { RatioRequest::Aspect(ratio) });
        let Ok(outcome) = execute(&file, &req) else {
            // Parallel or concurrent inputs are rejected as preconditions.
            return Ok(());
        };
        let input: ConfigurationInput<Rational> = file.to_input().unwrap();
        let vertex_lines: [&InputLine<Rational>; 4] = [&input.first.0, &input.second.0, &input.first.1, &input.second.1];
        let reps: Vec<Value> = match outcome.report.get("family") {
            Some(f) => f["spanned_by"].as_array().unwrap().clone(),
            None => vec![outcome.report.clone()],
        };
        for rep in reps {
            let p = parse_rectangle::<Rational>(&rep).unwrap();
            prop_assert_eq!(&quadriline_core::ProjectiveRectangle::new(p.coords().clone()).unwrap(), &p);
            let c = p.coords();
            for (i, l) in vertex_lines.iter().enumerate() {
                prop_assert!(l.contains_projective(&c[2 * i], &c[2 * i + 1], &c[8]));
            }
        }
    }
}
