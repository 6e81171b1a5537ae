//! Black-box tests of the `gatecmp` binary: exit codes, output layout, and
//! run-to-run determinism.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gatecmp"))
        .args(args)
        .output()
        .expect("spawn gatecmp")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no exit code")
}

fn read(dir: &Path, name: &str) -> String {
    std::fs::read_to_string(dir.join(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

#[test]
fn eval_defaults_succeed() {
    let out = run(&["eval"]);
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("phase"), "{text}");
    assert!(text.contains("zeno"), "{text}");
}

#[test]
fn eval_honors_flags() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "eval",
        "--omega",
        "50",
        "--delta-r",
        "14.9",
        "--Delta-r",
        "6.4",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let csv = read(dir.path(), "eval.csv");
    assert!(csv.contains("5.6"), "expected ≈0.569 success in:\n{csv}");
    assert!(csv.ends_with('\n'));
    assert!(!csv.contains('\r'));
}

#[test]
fn config_file_sets_values_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "omega = 80\ngamma_r = 0.1\ndelta_r = 14.9\n").unwrap();

    let base = run(&["eval", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&base), 0);
    let base_text = String::from_utf8(base.stdout).unwrap();
    assert!(base_text.contains("omega = 80"), "{base_text}");

    let over = run(&["eval", "--config", cfg.to_str().unwrap(), "--omega", "50"]);
    assert_eq!(code(&over), 0);
    let over_text = String::from_utf8(over.stdout).unwrap();
    assert!(over_text.contains("omega = 50"), "{over_text}");
    assert_ne!(base_text, over_text);
}

#[test]
fn missing_config_file_is_a_config_error() {
    let out = run(&["eval", "--config", "/nonexistent/path.cfg"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn malformed_config_is_a_config_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");
    std::fs::write(&cfg, "omega = fast\n").unwrap();
    let out = run(&["eval", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn unknown_config_key_is_a_config_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");
    std::fs::write(&cfg, "omegaa = 50\n").unwrap();
    let out = run(&["eval", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn unknown_figure_exits_4() {
    let out = run(&["figure", "--figure", "9z"]);
    assert_eq!(code(&out), 4);
}

#[test]
fn figure_without_id_is_a_config_error() {
    let out = run(&["figure"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn unknown_command_exits_4() {
    let out = run(&["flibbertigibbet"]);
    assert_eq!(code(&out), 4);
}

#[test]
fn unknown_verify_suite_is_a_config_error() {
    let out = run(&["verify", "--suite", "nope"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_suite_passes() {
    let out = run(&["verify", "--suite", "shift"]);
    assert_eq!(code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("shift") && text.contains("PASS"), "{text}");
}

#[test]
fn switch_csv_layout() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["switch", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let csv = read(dir.path(), "switch.csv");
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("t_over_a,R_sq,E_sq_norm,out_env"));
    let first = lines.next().unwrap();
    assert_eq!(first.split(',').count(), 4);
    for field in first.split(',') {
        // 9 significant digits in scientific notation
        let mantissa = field.split('e').next().unwrap();
        let digits = mantissa.chars().filter(|c| c.is_ascii_digit()).count();
        assert_eq!(digits, 9, "field {field}");
    }
}

#[test]
fn figure_output_is_byte_identical_across_runs() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [&a, &b] {
        let out = run(&["figure", "--figure", "4a", "--out", dir.path().to_str().unwrap()]);
        assert_eq!(code(&out), 0);
    }
    assert_eq!(read(a.path(), "4a.csv"), read(b.path(), "4a.csv"));
}

#[test]
fn plot_flag_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "figure",
        "--figure",
        "A2a",
        "--out",
        dir.path().to_str().unwrap(),
        "--plot",
    ]);
    assert_eq!(code(&out), 0);
    assert!(dir.path().join("A2a.csv").exists());
    let svg = read(dir.path(), "A2a.svg");
    assert!(svg.starts_with("<svg"), "not an svg: {}", &svg[..40.min(svg.len())]);
}

#[test]
fn degenerate_sweep_rows_carry_error_token() {
    let dir = tempfile::tempdir().unwrap();
    // Delta_r = 1 makes delta_r = 2/3 the degenerate point of the phase
    // denominator; figure 4a's axis brackets it.
    let out = run(&["figure", "--figure", "4b", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let csv = read(dir.path(), "4b.csv");
    assert!(csv.lines().count() > 100);
    // Every row is either fully numeric or flags the degeneracy explicitly.
    for line in csv.lines().skip(1) {
        let last = line.rsplit(',').next().unwrap();
        assert!(
            last == "ERR:DegenerateTuning" || last.parse::<f64>().is_ok(),
            "bad row: {line}"
        );
    }
}

#[test]
fn no_temp_files_left_behind() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["figure", "--figure", "5", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        let name = entry.unwrap().file_name();
        let name = name.to_string_lossy().into_owned();
        assert!(!name.ends_with(".tmp"), "leftover temp file {name}");
    }
}
