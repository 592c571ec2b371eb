//! Connected non-crossing graphs, by visibility degree.

use std::fmt::Write;

use convex_count::closed_form::connected_entry;
use convex_count::production::count_sequence;
use convex_count::{GraphClass, GraphClassSpec};

pub fn run() -> String {
    let mut out = String::new();
    let class = GraphClass::Connected;
    writeln!(out, "{}", class.matrix(6).unwrap()).unwrap();
    let spec = GraphClassSpec::new(class).unwrap();
    for l in count_sequence(&spec, 9).unwrap() {
        let n = l.level as i64;
        let formula: Vec<_> = (1..n).map(|j| connected_entry(n, j)).collect();
        assert_eq!(formula, l.vector.entries());
        writeln!(out, "n={:<2} {:>10}  {}", l.level, l.total, l.vector).unwrap();
    }
    out
}

fn main() {
    print!("{}", run());
}
