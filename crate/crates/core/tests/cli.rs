use serde_json::Value;
use virasoro::cli::{run_command, CommandOutcome};

fn run(args: &[&str]) -> CommandOutcome {
    run_command(std::iter::once("virasoro").chain(args.iter().copied()))
}

fn vn() -> String {
    concat!(env!("CARGO_MANIFEST_DIR"), "/examples/vn.json").to_string()
}

fn json(out: &CommandOutcome) -> Value {
    serde_json::from_str(&out.stdout).expect("JSON output")
}

/// The n = 4 pair whose superdiagonals are (1,1,1) and (1,0,1).
const INVALID_N: &str = r#"{"dimension": 4, "xi": 0,
  "D1": [[1,1,0,0],[0,1,1,0],[0,0,1,1],[0,0,0,1]],
  "D2": [[1,1,0,0],[0,1,0,0],[0,0,1,1],[0,0,0,1]]}"#;

#[test]
fn normal_order_example() {
    let out = run(&["normal-order", "d(2)*d(-2)"]);
    assert_eq!(out.status, 0);
    assert_eq!(out.stdout, "d(-2)*d(2) + 4*d(0) + 1/2*z\n");
    assert!(out.stderr.is_empty());
}

#[test]
fn normal_order_moves_z() {
    let out = run(&["normal-order", "z*d(3)"]);
    assert_eq!(out.stdout, "d(3)*z\n");
}

#[test]
fn hom_example() {
    let out = run(&["--format", "json", "hom", "--p", "(z-1)^2", "--q", "(z-1)*(z-2)"]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    let doc = json(&out);
    assert_eq!(doc["dimension"], 1);
    assert_eq!(doc["gcd"], "z - 1");
    assert_eq!(doc["multiplier"], "z - 2");
    let text = run(&["hom", "--p", "(z-1)^2", "--q", "(z-1)*(z-2)"]);
    assert_eq!(text.stdout, "dim Hom = 1; gcd: z - 1; multiplier: z - 2\n");
}

#[test]
fn surjectivity() {
    assert_eq!(run(&["hom", "--surjective", "--r", "z+2", "--q", "(z-1)^2"]).stdout, "surjective: true\n");
    assert_eq!(run(&["hom", "--surjective", "--r", "z-1", "--q", "(z-1)^2"]).stdout, "surjective: false\n");
}

#[test]
fn hom_flag_combinations_are_usage_errors() {
    assert_eq!(run(&["hom", "--surjective", "--q", "z"]).status, 2);
    assert_eq!(run(&["hom", "--q", "z"]).status, 2);
    assert_eq!(run(&["hom", "--p", "z", "--r", "z", "--q", "z"]).status, 2);
}

#[test]
fn hom_rejects_non_monic() {
    let out = run(&["hom", "--p", "2*z", "--q", "z"]);
    assert_eq!(out.status, 1);
    assert!(out.stdout.is_empty());
}

#[test]
fn whittaker_example() {
    let out = run(&["whittaker", &vn(), "--psi", "1,1", "--level", "4"]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "dim Wh = 1; basis: v[1]\n");
}

#[test]
fn whittaker_lists_several_vectors_one_per_line() {
    let family = r#"{"family": "direct-sum", "summands": [{"psi": [1, 1], "xi": 0}, {"psi": [1, 1], "xi": 1}]}"#;
    let out = run(&["whittaker", family, "--psi", "1,1", "--level", "2"]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines, ["dim Wh = 2", "w[1]", "w[2]"]);
}

#[test]
fn whittaker_rejects_zero_functional() {
    let out = run(&["whittaker", &vn(), "--psi", "0,0", "--level", "2"]);
    assert_eq!(out.status, 1);
    assert!(out.stdout.is_empty());
    assert_eq!(out.stderr.lines().count(), 1);
}

#[test]
fn parse_errors_carry_positions() {
    let out = run(&["normal-order", "d(1,2)"]);
    assert_eq!(out.status, 2);
    assert!(out.stderr.contains("position 4"), "{}", out.stderr);
    assert!(out.stdout.is_empty());
}

#[test]
fn unknown_subcommands_and_flags() {
    assert_eq!(run(&["frobnicate"]).status, 2);
    assert_eq!(run(&["normal-order", "--bogus", "z"]).status, 2);
    assert_eq!(run(&["--format", "yaml", "normal-order", "z"]).status, 2);
    assert_eq!(run(&[]).status, 2);
}

#[test]
fn help_succeeds() {
    let out = run(&["--help"]);
    assert_eq!(out.status, 0);
    assert!(out.stdout.contains("whittaker"));
}

#[test]
fn act_on_verma() {
    let verma = r#"{"family": "verma", "xi": 0, "h": 0}"#;
    assert_eq!(run(&["act", verma, "d(1)", "d[-1]v+"]).stdout, "0\n");
    let verma = r#"{"family": "verma", "xi": 0, "h": "1/2"}"#;
    assert_eq!(run(&["act", verma, "d(1)", "d[-1]v+"]).stdout, "v+\n");
}

#[test]
fn act_on_induced_module() {
    let out = run(&["act", &vn(), "d(1)", "v[2]"]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "v[2] + v[1]\n");
}

#[test]
fn missing_file_is_reported() {
    let out = run(&["validate-n", "/nonexistent/n.json"]);
    assert_eq!(out.status, 2);
    assert!(out.stderr.contains("cannot read"));
}

#[test]
fn validate_accepts_and_rejects() {
    let ok = run(&["validate-n", &vn()]);
    assert_eq!(ok.status, 0, "{}", ok.stderr);
    assert!(ok.stdout.starts_with("valid (n = 2)"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, INVALID_N).unwrap();
    let bad = run(&["validate-n", path.to_str().unwrap()]);
    assert_eq!(bad.status, 1);
    assert!(bad.stdout.is_empty());
    assert_eq!(bad.stderr.lines().count(), 1, "{}", bad.stderr);
    assert!(bad.stderr.contains("[D2, D3]"), "{}", bad.stderr);
}

#[test]
fn decompose_factors() {
    let out = run(&["decompose", "--factors", "1:2,-1/2:1"]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    assert!(out.stdout.ends_with("total length 3; annihilator z^3 - 3/2*z^2 + 1/2\n"), "{}", out.stdout);
    assert_eq!(run(&["decompose", "--factors", "1:2,1:1"]).status, 1);
    assert_eq!(run(&["decompose", "--factors", "1:0"]).status, 1);
    assert_eq!(run(&["decompose", "--factors", "1-2"]).status, 2);
}

#[test]
fn extract_wxi() {
    let out = run(&["--format", "json", "extract-wxi", "d[-1]w[0]", "--xi", "0"]);
    assert_eq!(out.status, 0, "{}", out.stderr);
    let doc = json(&out);
    assert_eq!(doc["result"], "2*w[1]");
    assert_eq!(run(&["extract-wxi", "0", "--xi", "0"]).status, 1);
}

#[test]
fn empty_verify_report_has_empty_arrays() {
    let out = run(&["--format", "json", "verify", "--cases", "0"]);
    assert_eq!(out.status, 0);
    let doc = json(&out);
    assert_eq!(doc["properties"], Value::Array(vec![]));
    assert_eq!(doc["total_failures"], 0);
}

#[test]
fn verify_failures_set_the_status() {
    let out = run(&["verify", "--suite", "core", "--cases", "1", "--bracket", "corrupted"]);
    assert_eq!(out.status, 1);
    assert!(out.stdout.contains("FAILED"));
}

#[test]
fn json_payloads_are_fixed_points() {
    let commands: [&[&str]; 4] = [
        &["--format", "json", "normal-order", "d(3)*d(-3) - z"],
        &["--format", "json", "hom", "--p", "z^2", "--q", "z"],
        &["--format", "json", "validate-n", &INVALID_N.replace("[1,1,0,0],[0,1,0,0]", "[1,1,0,0],[0,1,1,0]")],
        &["--format", "json", "verify", "--suite", "lemmas", "--cases", "1"],
    ];
    for argv in commands {
        let out = run(argv);
        let doc = json(&out);
        let again = serde_json::to_string_pretty(&doc).unwrap() + "\n";
        assert_eq!(out.stdout, again, "{argv:?}");
    }
}

#[test]
fn binary_reports_status() {
    let bin = env!("CARGO_BIN_EXE_virasoro");
    let ok = std::process::Command::new(bin).args(["normal-order", "d(1)*d(-1)"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "d(-1)*d(1) + 2*d(0)\n");
    let bad = std::process::Command::new(bin).args(["normal-order", "d("]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
