use std::process::{Command, Output};

fn fibrecon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibrecon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn trace_matches_golden_file() {
    let out = fibrecon(&["trace", "01101"]);
    assert_eq!(out.status.code(), Some(0));
    let golden = include_bytes!("golden/trace_01101.txt");
    assert_eq!(out.stdout, golden.as_slice());
}

#[test]
fn documented_exit_codes() {
    let cases: &[(&[&str], i32, &str)] = &[
        (&["generate", "4"], 0, "01101 (5 symbols)\n"),
        (&["generate", "0"], 0, "0 (1 symbols)\n"),
        (
            &["generate", "--grammar", "bif", "3"],
            0,
            "101 (3 symbols)\n",
        ),
        (&["reverse", "01101"], 0, "101\n"),
        (
            &["reverse", "100"],
            1,
            "rejected: forbidden n-gram 00 at 1\n",
        ),
        (&["reverse", "10"], 1, "rejected: trailing zero\n"),
        (&["member", "0"], 0, "member: generation 0\n"),
        (&["member", "0110110101101"], 0, "member: generation 6\n"),
        (&["member", "1101", "--show-passes"], 1, "pass 1: 001\n"),
    ];
    for (args, code, prefix) in cases {
        let out = fibrecon(args);
        assert_eq!(out.status.code(), Some(*code), "{args:?}");
        assert!(
            stdout(&out).starts_with(prefix),
            "{args:?}: {}",
            stdout(&out)
        );
    }
}

#[test]
fn misuse_exits_with_two_and_writes_stderr() {
    for args in [
        &["generate", "four"][..],
        &["reverse", "01201"],
        &["member", "abc"],
        &["trace", "0 1"],
        &["ambiguity", "extra"],
        &[],
    ] {
        let out = fibrecon(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn trace_reports_gap_and_rejections() {
    let out = fibrecon(&["trace", "10101101"]);
    assert!(stdout(&out).contains("max head gap: 3\n"));

    let out = fibrecon(&["trace", "0"]);
    let text = stdout(&out);
    assert_eq!(text.matches("\n\n").count(), 1);
    assert!(text.starts_with("T1 ▷[0]◁\nT2 ▷0◁ (by 1)\n"));
    assert!(text.contains("verdict: rejected: trailing zero"));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn ambiguity_report() {
    let text = stdout(&fibrecon(&["ambiguity"]));
    assert!(text.contains("fib: unambiguous"));
    assert!(text.contains("bif: ambiguous at 1"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["trace", "0110110101101"][..],
        &["member", "101011010110110101101", "--show-passes"],
    ] {
        assert_eq!(fibrecon(args).stdout, fibrecon(args).stdout);
    }
}
