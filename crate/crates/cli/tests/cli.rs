use std::path::PathBuf;
use std::process::{Command, Output};

use tqft::catalan::IntersectionRecord;
use tqft::eco::CountRecord;
use tqft::frobenius::AlgebraSpec;
use tqft::toprec::CorrelatorReport;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn tqft(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tqft"))
        .args(args)
        .env_remove("TQFT_MAX_DEGREE")
        .env_remove("TQFT_TRUNCATION")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn catalan_count_both_methods() {
    let o = tqft(&["graphs", "count", "--genus", "0", "--degrees", "8", "--method", "both"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let counts: Vec<&str> = out.lines().skip(1).map(|l| l.split_whitespace().last().unwrap()).collect();
    assert_eq!(counts, ["14", "14"]);
}

#[test]
fn center_of_s3_torus() {
    let o = tqft(&["algebra", "tqft", "zoo:ZC[S3]", "--genus", "1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "3");
}

#[test]
fn wkb_through_hbar_squared() {
    let o = tqft(&["wkb", "verify", "--order", "2"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 3);
    assert!(out.lines().all(|l| l.contains("vanishes: true")));
}

#[test]
fn json_round_trips() {
    let o = tqft(&["--format", "json", "graphs", "count", "--genus", "0", "--degrees", "2,2"]);
    let r: CountRecord = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((r.g, r.n, r.mu.as_slice(), r.count.as_str()), (0, 2, &[2, 2][..], "2"));

    let o = tqft(&["--format", "json", "intersect", "--g", "1", "--n", "1"]);
    assert_eq!(code(&o), 0);
    let r: Vec<IntersectionRecord> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r, vec![IntersectionRecord { g: 1, n: 1, d: vec![1], value: "1/24".into() }]);

    let o = tqft(&["--format", "json", "toprec", "run", "--curve-preset", "airy", "--max-complexity", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports: Vec<CorrelatorReport> = serde_json::from_value(v["correlators"].clone()).unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[1].entries[0].coefficient, "-1/8");

    let o = tqft(&["--format", "json", "wkb", "verify", "--order", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[1]["vanishes"], serde_json::Value::Bool(true));
}

#[test]
fn zoo_output_feeds_back_in() {
    let o = tqft(&["algebra", "zoo", "DW[Z/3]"]);
    assert_eq!(code(&o), 0);
    let spec: AlgebraSpec = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(spec.dim, 3);
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("dw_z3.json");
    std::fs::write(&path, stdout(&o)).unwrap();
    let file = path.to_string_lossy();
    assert_eq!(code(&tqft(&["algebra", "validate", &file])), 0);
    // |Hom(pi_1 Sigma_2, Z/3)| / 3 = 3^4 / 3
    let o = tqft(&["algebra", "tqft", &file, "--genus", "2"]);
    assert_eq!(stdout(&o).trim(), "27");
}

#[test]
fn tqft_with_vectors() {
    let o = tqft(&["algebra", "tqft", "zoo:K^2", "--genus", "0", "--vectors", r#"[["2","1/3"],[5,3],[1,1]]"#]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "11");
}

#[test]
fn hom_and_eval() {
    let o = tqft(&["graphs", "hom", &data("path3.json"), &data("segment.json")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("size"));
    assert_eq!(stdout(&o).lines().next().unwrap().split_whitespace().last(), Some("2"));
    let o = tqft(&["--format", "json", "graphs", "hom", &data("segment.json"), &data("path3.json")]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["size"], 0);

    let colors = r#"[["1","2"],[1,3],["1/2",1]]"#;
    let o = tqft(&["graphs", "eval", &data("path3.json"), "--algebra", "zoo:K^2", "--colors", colors]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "13/2");
}

#[test]
fn curve_file_matches_preset() {
    let file = tqft(&["--format", "json", "toprec", "run", "--curve", &data("airy.json"), "--max-complexity", "2"]);
    let preset = tqft(&["--format", "json", "toprec", "run", "--curve-preset", "airy", "--max-complexity", "2"]);
    assert_eq!(code(&file), 0);
    assert_eq!(stdout(&file), stdout(&preset));
}

#[test]
fn twisted_run_reports_factorization() {
    let o = tqft(&["toprec", "run", "--curve-preset", "catalan", "--max-complexity", "2", "--algebra", "zoo:ZC[Z/2]"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).trim_end().ends_with("factorizes: true"));
}

#[test]
fn check_failures_exit_one() {
    let o = tqft(&["algebra", "validate", &data("degenerate.json")]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn input_errors_exit_two() {
    let cases: Vec<Vec<String>> = vec![
        vec!["algebra".into(), "validate".into(), data("truncated.json")],
        vec!["algebra".into(), "validate".into(), data("missing.json")],
        vec!["algebra".into(), "zoo".into(), "Q8".into()],
        vec!["graphs".into(), "count".into(), "--genus".into(), "0".into(), "--degrees".into(), "2,x".into()],
        vec![
            "graphs".into(),
            "count".into(),
            "--genus".into(),
            "0".into(),
            "--degrees".into(),
            "14".into(),
            "--method".into(),
            "brute".into(),
        ],
        vec!["graphs".into(), "count".into(), "--genus".into(), "0".into(), "--frobnicate".into()],
        vec!["toprec".into(), "run".into(), "--max-complexity".into(), "1".into()],
        vec!["intersect".into(), "--g".into(), "0".into(), "--n".into(), "2".into()],
        vec!["algebra".into(), "tqft".into(), "zoo:Mat2".into(), "--genus".into(), "1".into()],
    ];
    for args in cases {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let o = tqft(&args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn env_overrides_guards() {
    let o = Command::new(env!("CARGO_BIN_EXE_tqft"))
        .args(["graphs", "count", "--genus", "0", "--degrees", "14", "--method", "both"])
        .env("TQFT_MAX_DEGREE", "14")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().skip(1).all(|l| l.ends_with("429")));

    // truncation 6 is too short for complexity 3
    let o = Command::new(env!("CARGO_BIN_EXE_tqft"))
        .args(["toprec", "run", "--curve-preset", "catalan", "--max-complexity", "3"])
        .env("TQFT_TRUNCATION", "6")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}
