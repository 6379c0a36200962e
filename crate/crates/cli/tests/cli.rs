use std::process::{Command, Output};

fn kroncomb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kroncomb"))
        .args(args)
        .env_remove("KRONCOMB_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn compute_fixtures() {
    let cases: &[(&[&str], &str)] = &[
        (&["qbinom", "3", "3"], "[1,1,2,3,3,3,3,2,1,1]\n"),
        (&["pstat", "3", "3", "1"], "[0,1,2,4,5,6,5,4,2,1]\n"),
        (&["kron", "[1]", "[1]", "[1]"], "1\n"),
        (&["kron", "[2,2]", "[2,2]", "[3,1]"], "0\n"),
        (&["kron", "[3,2,1]", "[3,2,1]", "[3,2,1]"], "5\n"),
        (&["lr", "[5,5,3,2]", "[2,1]", "[4,4,3,1]"], "1\n"),
        (&["lr", "[3,2,1]", "[2,1]", "[2,1]"], "2\n"),
        (&["almkvist", "2"], "[1,1,0,1,1]\n"),
        (&["bpoly", "2"], "[1,1,1,2,2,2,1,1,1]\n"),
        (&["char", "[2,1]", "[1,1,1]"], "2\n"),
    ];
    for (args, want) in cases {
        let out = kroncomb(args);
        assert!(out.status.success(), "{args:?}");
        assert_eq!(stdout(&out), *want, "{args:?}");
    }
}

#[test]
fn text_and_csv_formats() {
    let out = kroncomb(&["--format", "text", "qbinom", "2", "2"]);
    assert_eq!(stdout(&out), "qbinom(2,2) = 1+q+2q^2+q^3+q^4\n");
    let out = kroncomb(&["--format", "text", "kron", "[2,1]", "[2,1]", "[2,1]"]);
    assert_eq!(stdout(&out), "g([2,1],[2,1],[2,1]) = 1  [lr]\n");
    let out = kroncomb(&["--format", "csv", "verify", "thm1.2", "--m", "3"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "check_id,status,l,m,route,witness,elapsed_ms"
    );
    assert!(lines.next().unwrap().starts_with("thm1.2,finding,3,3,,"));
}

#[test]
fn exit_codes() {
    assert_eq!(
        kroncomb(&["verify", "lemma3.1", "--n-max", "6"])
            .status
            .code(),
        Some(0)
    );
    // known failures at m = 3, 4, 6 are findings and do not fail the run
    assert_eq!(
        kroncomb(&["verify", "thm1.2", "--m-min", "3", "--m-max", "6"])
            .status
            .code(),
        Some(0)
    );

    let unknown = kroncomb(&["verify", "thm9.9"]);
    assert_eq!(unknown.status.code(), Some(2));
    let err = String::from_utf8(unknown.stderr).unwrap();
    for id in ["thm1.1", "lemma6.2", "oracle-xcheck", "scan-gamma"] {
        assert!(err.contains(id), "{err}");
    }

    assert_eq!(
        kroncomb(&["lr", "[1,2]", "[1]", "[1]"]).status.code(),
        Some(2)
    );
    assert_eq!(kroncomb(&["qbinom", "x", "3"]).status.code(), Some(2));

    // a grid point that cannot be evaluated is a fail carrying the error
    let bad = kroncomb(&[
        "verify", "thm1.1", "--l-min", "0", "--l-max", "0", "--m", "1",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("\"status\":\"fail\""));
    assert!(stdout(&bad).contains("invalid rectangle"));
}

#[test]
fn guards_refuse_and_can_be_lifted() {
    let out = kroncomb(&["kron", "[5,4,3,1]", "[5,4,3,1]", "[4,3,3,3]"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("oracle Kronecker guard"), "{err}");

    let out = kroncomb(&["lr", "[9,8]", "[9]", "[8]"]);
    assert_eq!(out.status.code(), Some(2));
    let out = kroncomb(&["--unsafe-no-guard", "lr", "[9,8]", "[9]", "[8]"]);
    assert_eq!(stdout(&out), "1\n");

    let out = kroncomb(&["verify", "oracle-xcheck", "--n-max", "13"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_output_is_deterministic_across_job_counts() {
    let args = ["verify", "lemma6.2", "--n-max", "6"];
    let one = kroncomb(&[&["--jobs", "1"][..], &args[..]].concat());
    let four = kroncomb(&[&["--jobs", "4"][..], &args[..]].concat());
    assert_eq!(one.stdout, four.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_kroncomb"))
        .args(args)
        .env("KRONCOMB_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(env.stdout, one.stdout);
    assert_eq!(stdout(&one).lines().count(), 6);
}

#[test]
fn report_schema() {
    let out = kroncomb(&[
        "verify", "thm5.2", "--m", "27", "--n-min", "26", "--n-max", "26",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let reports: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(reports.len(), 2);
    for r in &reports {
        let keys: Vec<&String> = r.as_object().unwrap().keys().collect();
        assert_eq!(
            keys,
            ["check_id", "elapsed_ms", "parameters", "status", "witness"]
        );
        assert_eq!(r["check_id"], "thm5.2");
        assert_eq!(r["status"], "pass");
    }
    assert_eq!(
        reports[0]["witness"]["window"],
        serde_json::json!([26, 703])
    );
    assert!(reports[1]["witness"]["missed"].as_u64().unwrap() > 0);
}

#[test]
fn timing_flag_only_affects_elapsed() {
    let out = kroncomb(&[
        "--timing", "verify", "cor4.1", "--l-max", "2", "--m-max", "2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 4);
}
