//! Writing OEIS b-files, and everything else the command line prints, through
//! the library entry point.

use std::fmt::Write;

use convex_count::cli::{run as cli, OutputRecord};

pub fn run() -> String {
    let mut out = String::new();
    let (bfile, code) = cli(["convex-count", "counts", "geometric", "--n-max", "12", "--bfile"]);
    assert_eq!(code, 0);
    writeln!(out, "{bfile}").unwrap();

    let (bfile, _) = cli(["convex-count", "counts", "kangulation", "--k", "4", "--n-max", "8", "--bfile"]);
    writeln!(out, "{bfile}").unwrap();

    let (json, _) = cli(["convex-count", "charpoly", "partition", "--n", "4", "--format", "json"]);
    let record = OutputRecord::from_json(&json).unwrap();
    assert_eq!(record.to_json() + "\n", json);
    writeln!(out, "{json}").unwrap();
    out
}

fn main() {
    print!("{}", run());
}
