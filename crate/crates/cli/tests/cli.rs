use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use bumpkit::poly::{PolynomialReport, SparsePolynomial};
use bumpkit::report::PermutationReport;
use bumpkit::verify::SuiteReport;

fn bumpkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bumpkit")).args(args).env_remove("BUMPKIT_MAX_N").output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn stats_example_permutation() {
    let out = bumpkit(&["stats", "475382691"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("bump:           11\n"));
    assert!(text.contains("shape:          (4,2,1,1,1)\n"));
    assert!(text.contains("bump sequence:  (0,0,1,2,0,3,1,0,4)\n"));
    assert!(text.contains("alpha sequence: (5,3,2,1,0)"));
}

#[test]
fn stats_small_cases() {
    let one = stdout(&bumpkit(&["stats", "1"]));
    assert!(one.contains("bump:           0\n"));
    let sigma = stdout(&bumpkit(&["stats", "51324"]));
    assert!(sigma.contains("bump:           3\n"));
    assert!(sigma.contains("bump sequence:  (0,1,0,2,0)\n"));
    let commas = stdout(&bumpkit(&["stats", "5,1,3,2,4"]));
    assert_eq!(commas, sigma);
}

#[test]
fn stats_json_round_trips() {
    let out = bumpkit(&["stats", "10,2,3,1,9,8,4,5,6,7", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let report: PermutationReport = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(report.n, 10);
    assert_eq!(report, PermutationReport::new(&report.permutation));
    assert_eq!(serde_json::to_string(&report).unwrap(), text.trim());
}

#[test]
fn bad_permutations_are_usage_errors() {
    for args in [&["stats", ""][..], &["stats", "1223"], &["stats", "0,1"], &["render", "diagram", ""]] {
        let out = bumpkit(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(bumpkit(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn poly_text() {
    assert_eq!(stdout(&bumpkit(&["poly", "bn", "4"])), "1 + 9q + 4q^2 + 9q^3 + q^6\n");
    assert_eq!(stdout(&bumpkit(&["poly", "bn", "4", "--method", "enum"])), "1 + 9q + 4q^2 + 9q^3 + q^6\n");
    assert_eq!(stdout(&bumpkit(&["poly", "tn", "5"])), "1 + q + q^2 + q^3 + q^4 + q^6 + q^10\n");
    assert_eq!(stdout(&bumpkit(&["poly", "tn", "5", "--method", "product"])), "1 + q + q^2 + q^3 + q^4 + q^6 + q^10\n");
    assert_eq!(stdout(&bumpkit(&["poly", "bn", "0"])), "1\n");
    assert_eq!(stdout(&bumpkit(&["poly", "bn321", "4"])), "1 + 9q + 4q^2\n");
    assert_eq!(stdout(&bumpkit(&["poly", "head", "6"])), "1 + q + q^2 + 2q^3 + 2q^4 + 2q^5 + 4q^6\n");
    assert_eq!(stdout(&bumpkit(&["poly", "weakbump", "3"])), "1 + 4q + q^2\n");
    assert_eq!(stdout(&bumpkit(&["poly", "bivariate", "2"])), "t + q\n");
}

#[test]
fn poly_json_round_trips() {
    let text = stdout(&bumpkit(&["poly", "bn", "8", "--format", "json"]));
    let report: PolynomialReport<SparsePolynomial> = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(report.n, 8);
    assert_eq!(report.coeffs.coeff(11), 4096u32.into());
    assert_eq!(serde_json::to_string(&report).unwrap(), text.trim());
    assert!(text.starts_with(r#"{"n":8,"coeffs":{"0":"1","1":"49","#));
}

#[test]
fn poly_caps_and_methods() {
    let out = bumpkit(&["poly", "bn", "9", "--method", "enum"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
    assert_eq!(bumpkit(&["poly", "tn", "5", "--method", "closed"]).status.code(), Some(2));
    let raised = Command::new(env!("CARGO_BIN_EXE_bumpkit"))
        .args(["poly", "bn", "3", "--method", "enum"])
        .env("BUMPKIT_MAX_N", "2")
        .output()
        .unwrap();
    assert_eq!(raised.status.code(), Some(2));
}

#[test]
fn mean_bump_report() {
    let text = stdout(&bumpkit(&["poly", "mean", "3"]));
    assert!(text.starts_with("mean bump over S_3: 7/6"));
}

#[test]
fn render_diagram_ascii() {
    let out = bumpkit(&["render", "diagram", "51324", "--format", "ascii"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("  +-0-+-1-+-0-+-2-+-0-+\n"));
    assert!(text.contains("top (left to right):   (0,1,0,2,0)"));
}

#[test]
fn render_shadows_svg_to_file() {
    let dir = scratch("render");
    let path = dir.join("shadows.svg");
    let out = bumpkit(&["render", "shadows", "475382691", "--format", "svg", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let svg = fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches("class=\"intermediate\"").count(), 11);
    assert_eq!(svg.matches("class=\"dot\"").count(), 9);
    // deterministic
    let again = stdout(&bumpkit(&["render", "shadows", "475382691"]));
    assert_eq!(again, svg);
    assert_eq!(bumpkit(&["render", "shadows", "21", "--format", "ascii"]).status.code(), Some(2));
}

#[test]
fn render_to_unwritable_path_fails() {
    let out = bumpkit(&["render", "diagram", "21", "-o", "/nonexistent-dir/x.svg"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_default_range() {
    let out = bumpkit(&["verify", "--max-n", "6"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    let lines: Vec<SuiteReport> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(lines.len() > 10_000);
    assert!(lines.iter().all(|l| l.report.agree));
    for line in text.lines().take(50) {
        let parsed: SuiteReport = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&parsed).unwrap(), line);
    }
    assert_eq!(text, stdout(&bumpkit(&["verify", "--max-n", "6"])));
}

#[test]
fn verify_partition_suite_and_caps() {
    let out = bumpkit(&["verify", "--suites", "hook-identity", "--max-n", "30"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), (1..=30).map(partitions).sum::<usize>());
    assert_eq!(bumpkit(&["verify", "--max-n", "99"]).status.code(), Some(2));
    assert_eq!(bumpkit(&["verify", "--suites", "no-such-suite"]).status.code(), Some(2));
    assert!(stdout(&bumpkit(&["verify", "--list"])).contains("hook-identity"));
}

fn partitions(n: usize) -> usize {
    bumpkit::partitions_of(n).count()
}

#[test]
fn golden_files_are_current() {
    let out = bumpkit(&["golden"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden");
    let table1 = fs::read_to_string(golden.join("table1.txt")).unwrap();
    for line in [
        "B_1(q) = 1",
        "B_2(q) = 1 + q",
        "B_3(q) = 1 + 4q + q^3",
        "B_4(q) = 1 + 9q + 4q^2 + 9q^3 + q^6",
        "B_5(q) = 1 + 16q + 25q^2 + 36q^3 + 25q^4 + 16q^6 + q^10",
        "T_1(q) = 1",
        "T_2(q) = 1 + q",
        "T_3(q) = 1 + q + q^3",
        "T_4(q) = 1 + q + q^2 + q^3 + q^6",
        "T_5(q) = 1 + q + q^2 + q^3 + q^4 + q^6 + q^10",
    ] {
        assert!(table1.lines().any(|l| l == line), "{line}");
    }
    let b8 = fs::read_to_string(golden.join("b8.txt")).unwrap();
    assert_eq!(
        b8.trim_end(),
        "B_8(q) = 1 + 49q + 400q^2 + 1225q^3 + 4292q^4 + 4900q^5 + 4361q^6 + 9864q^7 + 3136q^8 + 4900q^9 \
         + 1225q^10 + 4096q^11 + 196q^12 + 784q^13 + 441q^15 + 400q^16 + 49q^21 + q^28"
    );
}

#[test]
fn golden_detects_drift_and_regenerates() {
    let dir = scratch("golden");
    let d = dir.to_str().unwrap();
    assert_eq!(bumpkit(&["golden", "--dir", d]).status.code(), Some(1));
    assert!(bumpkit(&["golden", "--dir", d, "--regenerate"]).status.success());
    assert!(bumpkit(&["golden", "--dir", d]).status.success());
    fs::write(dir.join("b8.txt"), "B_8(q) = 1\n").unwrap();
    let out = bumpkit(&["golden", "--dir", d]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL  b8.txt"));
}
