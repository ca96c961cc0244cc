//! CLI-facing acceptance checks: stall detection surfaces as exit code 2,
//! and golden outputs are byte-stable across runs. The kernel-level
//! acceptance suite lives in the homweyl crate.

use std::process::{Command, Output};

fn homweyl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homweyl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(criterion: &str, ok: bool) {
    println!(
        "acceptance {criterion}: {}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "acceptance {criterion} failed");
}

#[test]
fn criterion_8_cli_stall_exit_code() {
    let flatten = homweyl(&["flatten", "--n", "2", "--k", "1,-1", "(y1 + y2)*x1"]);
    let const_gens = homweyl(&["const-gens", "--n", "2", "--k", "1,-1", "(y1 + y2)*x1"]);
    report(
        "8 (cli) stalled inputs exit with code 2",
        flatten.status.code() == Some(2) && const_gens.status.code() == Some(2),
    );
}

#[test]
fn criterion_9_cli_outputs_byte_stable() {
    let commands: &[&[&str]] = &[
        &["mul", "--n", "1", "x1", "y1"],
        &["alpha", "--n", "1", "--k", "2", "y1"],
        &["two-to-one", "--n", "1", "--k", "1", "x1", "x1^2"],
        &[
            "two-to-one",
            "--n",
            "1",
            "--k",
            "1",
            "--format",
            "json",
            "y1*x1",
            "x1^2 + y1",
        ],
        &["principal", "--n", "1", "--k", "1", "1", "x1", "x1^2"],
        &["degrees", "--n", "2", "x1*x2 + x2^2"],
        &["check-hom", "--n", "2", "--random", "50", "--seed", "42"],
    ];
    let golden_first_lines = [
        "y1*x1 + 1",
        "y1 + 2",
        "t = y1*x1^2 + x1",
        "{\"new_in_old\":",
        "t = y1^2*x1^2 + y1*x1 + 1",
        "deg_x = (1,1)",
        "checked = 50",
    ];
    let mut ok = true;
    for (args, golden) in commands.iter().zip(golden_first_lines) {
        let first = homweyl(args);
        let second = homweyl(args);
        if !first.status.success() || first.stdout != second.stdout {
            eprintln!("output of {args:?} is not byte-stable");
            ok = false;
            continue;
        }
        let text = String::from_utf8(first.stdout).unwrap();
        if !text.starts_with(golden) {
            eprintln!("output of {args:?} drifted from golden prefix {golden:?}: {text}");
            ok = false;
        }
    }
    report("9 (cli) golden outputs byte-stable across runs", ok);
}
