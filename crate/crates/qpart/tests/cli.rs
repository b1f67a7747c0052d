use std::process::Command;

use qpart::cli::{run, EXIT_EVAL, EXIT_OK, EXIT_USAGE, EXIT_VERIFY};

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn qpart(args: &[&str]) -> Outcome {
    qpart_env(args, None)
}

fn qpart_env(args: &[&str], max_enum: Option<&str>) -> Outcome {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("qpart").chain(args.iter().copied());
    let code = run(argv, max_enum, &mut out, &mut err);
    Outcome { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

#[test]
fn expand_prints_coefficients() {
    let o = qpart(&["expand", "1/((q;q^2)_inf^2*(q^2;q^2)_inf)", "--order", "5"]);
    assert_eq!((o.code, o.out.as_str()), (EXIT_OK, "1 2 4 8 14 24\n"));
    assert_eq!(qpart(&["expand", "q^0", "-N", "2"]).out, "1 0 0\n");
}

#[test]
fn expand_error_codes() {
    let o = qpart(&["expand", "1/(q^0;q)_inf"]);
    assert_eq!(o.code, EXIT_EVAL);
    assert!(o.err.contains("invalid specialization"), "{}", o.err);
    let o = qpart(&["expand", "(q;q"]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.err.contains("parse error at 1:5"), "{}", o.err);
    assert!(o.out.is_empty());
}

#[test]
fn expand_formats_agree() {
    let csv = qpart(&["expand", "(-q;q)_inf", "-N", "6", "--format", "csv"]).out;
    let json = qpart(&["expand", "(-q;q)_inf", "-N", "6", "--format", "json"]).out;
    let text = qpart(&["expand", "(-q;q)_inf", "-N", "6"]).out;
    let from_csv: Vec<&str> = csv.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let from_json: Vec<&str> = v["coefficients"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    let from_text: Vec<&str> = text.split_whitespace().collect();
    assert_eq!(from_text, ["1", "1", "1", "2", "2", "3", "4"]);
    assert_eq!(from_csv, from_text);
    assert_eq!(from_json, from_text);
}

#[test]
fn count_rows() {
    assert_eq!(qpart(&["count", "F2", "--n", "4"]).out, "F2(4) = 10\n");
    assert_eq!(qpart(&["count", "mex_bar", "--n", "4"]).out, "mex_bar(4) = 4\n");
    let o = qpart(&["count", "F", "--n", "0..5", "--format", "csv"]);
    let counts: Vec<&str> = o.out.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(counts, ["1", "2", "4", "8", "14", "24"]);
    let o = qpart(&["count", "pbar_odd", "--n", "3..4", "--format", "json"]);
    let rows: Vec<serde_json::Value> = o.out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows[1], serde_json::json!({"family": "pbar_odd", "n": 4, "count": "6"}));
}

#[test]
fn count_rejects_bad_input() {
    assert_eq!(qpart(&["count", "G", "--n", "3"]).code, EXIT_USAGE);
    assert_eq!(qpart(&["count", "F", "--n", "3..1"]).code, EXIT_USAGE);
    assert_eq!(qpart(&["count", "F", "--n", "21"]).code, EXIT_USAGE);
    let o = qpart_env(&["count", "F", "--n", "21"], Some("21"));
    assert_eq!(o.out, "F(21) = 9904\n");
}

#[test]
fn enumerate_lists() {
    let o = qpart(&["enumerate", "H", "--n", "4"]);
    assert_eq!(o.out, "4_b\n3_b+1_b\n3_b+1_r\n3_r+1_b\n3_r+1_r\n2_b+1_b+1_r\n");
    assert_eq!(qpart(&["enumerate", "F", "--n", "0"]).out, "(empty)\n");
    let f4 = qpart(&["enumerate", "F", "--n", "4"]).out;
    assert_eq!(f4.lines().count(), 14);
    assert_eq!(f4.lines().last(), Some("1_r+1_r+1_r+1_r"));
    let o = qpart(&["enumerate", "F", "--n", "25"]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.err.contains("QPART_MAX_ENUM"));
    assert_eq!(qpart(&["enumerate", "F0", "--n", "2"]).code, EXIT_USAGE);
}

#[test]
fn verify_exit_codes() {
    let o = qpart(&["verify", "--ids", "EQ_F_ID", "--order", "50"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.out.starts_with("EQ_F_ID") && o.out.contains("Verified"));
    assert_eq!(qpart(&["verify", "--ids", "COR_F1", "--order", "12"]).code, EXIT_VERIFY);
    assert_eq!(qpart(&["verify", "--ids", "NOT_A_CHECK"]).code, EXIT_VERIFY);
}

#[test]
fn verify_json_names_both_variants() {
    let o = qpart(&["verify", "--ids", "THM_F0_PRODUCT", "--order", "40", "--format", "json"]);
    assert_eq!(o.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(o.out.trim()).unwrap();
    assert_eq!(v["status"], "VariantResolved");
    assert_eq!(v["order"], 40);
    let outcomes = v["variantOutcomes"].as_array().unwrap();
    assert_eq!(outcomes.len(), 2);
    assert_eq!(outcomes[0]["status"], "Diverges");
    assert_eq!(outcomes[0]["firstDivergence"], 6);
    assert_eq!(outcomes[1]["status"], "Verified");
    assert!(v["millis"].is_u64());
}

#[test]
fn verify_csv_has_a_row_per_outcome() {
    let o = qpart(&["verify", "--ids", "THM_H_WT_D,EQ_EULER", "-N", "30", "--format", "csv"]);
    let rows: Vec<&str> = o.out.lines().collect();
    assert_eq!(rows.len(), 1 + 1 + 3);
    assert!(rows[1].starts_with("EQ_EULER,,30,,Verified"));
    assert!(rows[3].contains(",Diverges,enumeration,1,"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(qpart(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(qpart(&["count", "F"]).code, EXIT_USAGE);
    assert_eq!(qpart(&["expand", "q", "--format", "xml"]).code, EXIT_USAGE);
    assert_eq!(qpart(&["--help"]).code, EXIT_OK);
}

#[test]
fn binary_reads_the_environment() {
    let bin = env!("CARGO_BIN_EXE_qpart");
    let out = Command::new(bin).args(["count", "H", "--n", "21"]).env("QPART_MAX_ENUM", "21").output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "H(21) = 544\n");
    let out = Command::new(bin).args(["count", "H", "--n", "21"]).env_remove("QPART_MAX_ENUM").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}
