use std::process::Command;

fn bin(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_convex-count"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn matrix_formats() {
    let (out, _, code) = bin(&["matrix", "partition", "--n", "4", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out, "0,1,2,4\n1,0,1,2\n0,1,0,1\n0,0,1,0\n");
    let (out, _, _) = bin(&["matrix", "kangulation", "--k", "3", "--r", "2"]);
    assert!(out.ends_with("1 1\n1 1\n"), "{out}");
}

#[test]
fn counts_and_bfile() {
    let (out, _, code) = bin(&["counts", "geometric", "--n-max", "5", "--bfile"]);
    assert_eq!((out.as_str(), code), ("2 2\n3 8\n4 48\n5 352\n", 0));
    let (out, _, _) = bin(&["counts", "connected", "--n-max", "5", "--format", "csv"]);
    let totals: Vec<&str> = out.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(totals, ["1", "4", "23", "156"]);
}

#[test]
fn charpoly_methods_agree() {
    let outs: Vec<String> = ["recurrence", "closed", "determinant"]
        .iter()
        .map(|m| bin(&["charpoly", "geometric", "--n", "5", "--method", m, "--format", "csv"]).0)
        .collect();
    assert!(outs.windows(2).all(|w| w[0] == w[1]));
    assert_eq!(outs[0], "power,coefficient\n0,32\n1,-16\n2,-16\n3,-8\n4,10\n5,-1\n");
}

#[test]
fn verify_exit_codes() {
    let (out, _, code) = bin(&["verify", "vectors", "--n-max", "7"]);
    assert_eq!(code, 0, "{out}");
    let (_, _, code) = bin(&["verify", "lemma1", "--max", "12"]);
    assert_eq!(code, 0);
    let (out, _, code) = bin(&["verify", "oracle", "--n-max", "6"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn usage_errors_go_to_stderr() {
    let (out, err, code) = bin(&["charpoly", "geometric", "--n", "12", "--method", "determinant"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("guard"), "{err}");
    let (_, _, code) = bin(&["frobnicate"]);
    assert_eq!(code, 2);
    let (_, _, code) = bin(&["--help"]);
    assert_eq!(code, 0);
}

#[test]
fn eigen_respects_precision_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_convex-count"))
        .args(["eigen", "geometric", "--n", "2", "--format", "json"])
        .env("CONVEX_COUNT_PRECISION", "80")
        .output()
        .unwrap();
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("\"precision_bits\": \"80\""), "{s}");
    assert!(s.contains("\"lambda\": \"4.828427124746"), "{s}");
}

#[test]
fn identical_invocations_identical_output() {
    let args = ["verify", "relation", "--n-max", "6", "--format", "json"];
    assert_eq!(bin(&args), bin(&args));
}
