use std::process::{Command, Output};

use cyclomahonian::identities::VerificationReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclomahonian"))
        .args(args)
        .env_remove("CYCLOMAHONIAN_TRUNC")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn poly_outputs() {
    for (args, expected) in [
        (&["poly", "--n", "2"][..], "1 + t*q*p\n"),
        (&["poly", "--n", "3", "--m", "2"][..], "1 - t^2*q^3\n"),
        (&["poly", "--n", "1"][..], "1\n"),
        (
            &["poly", "--n", "3", "--t1", "--q1"][..],
            "1 + 2*p + 2*p^2 + p^3\n",
        ),
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&o), expected, "{args:?}");
    }
}

#[test]
fn poly_cap_is_a_usage_error() {
    let o = run(&["poly", "--n", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", "--suite", "nosuch"]).status.code(), Some(2));
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    let o = run(&["verify", "--suite", "wachs,carlitz", "--n-max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.ends_with("11 checks, 0 failed\n"), "{text}");
    // the printed third q = 1 line does not hold for m = 3
    let o = run(&[
        "verify",
        "--suite",
        "q1_triple",
        "--m-set",
        "3",
        "--n-max",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn json_lines_round_trip_byte_exact() {
    let o = run(&[
        "verify",
        "--suite",
        "wachs,util,qlucas",
        "--n-max",
        "5",
        "--m-set",
        "2,3",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().count() > 10);
    for line in text.lines() {
        let report: VerificationReport = serde_json::from_str(line).unwrap();
        assert_eq!(report.to_json(), line);
    }
}

#[test]
fn truncation_defaults_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_cyclomahonian"))
        .args(["verify", "--suite", "carlitz", "--n-max", "1"])
        .env("CYCLOMAHONIAN_TRUNC", "3")
        .output()
        .unwrap();
    assert!(stdout(&o).contains("L=3"));
}

#[test]
fn output_independent_of_jobs_and_copied_to_file() {
    let dir = std::env::temp_dir().join(format!("cyclomahonian-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.json");
    let base = [
        "verify",
        "--suite",
        "main,case_i2",
        "--n-max",
        "6",
        "--format",
        "json",
    ];
    let one = run(&[&base[..], &["--jobs", "1"]].concat());
    let four = run(&[&base[..], &["--jobs", "4", "--out", path.to_str().unwrap()]].concat());
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(std::fs::read(&path).unwrap(), four.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bijection_trace_and_sweep() {
    let o = run(&["bijection", "--word", "4,5,4,1,2,2,2,5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("sigma  28135674\n"));
    assert!(text.contains("lambda (8,4,4)\n"));
    assert!(text.contains("5=2+3") && text.contains("25=9+16") && text.contains("10=10"));

    let o = run(&["bijection", "--word", "0,0"]);
    assert!(stdout(&o).contains("sigma  12\n") && stdout(&o).contains("lambda ()\n"));

    let o = run(&["bijection", "--n", "3", "--max-letter", "4", "--exhaustive"]);
    assert_eq!(stdout(&o), "125 words, all pass\n");

    assert_eq!(run(&["bijection", "--word", "1,x"]).status.code(), Some(2));
    assert_eq!(run(&["bijection"]).status.code(), Some(2));
}
