//! All non-crossing graphs on n points in convex position, split by the
//! visibility degree of the root.

use std::fmt::Write;

use convex_count::closed_form::{closed_form_vector, geometric_entry};
use convex_count::production::{build_geometric_matrix, count_sequence};
use convex_count::{GraphClass, GraphClassSpec};

pub fn run() -> String {
    let mut out = String::new();
    writeln!(out, "G_5 =\n{}", build_geometric_matrix(5).unwrap()).unwrap();

    let spec = GraphClassSpec::new(GraphClass::Geometric).unwrap();
    for l in count_sequence(&spec, 10).unwrap() {
        assert_eq!(closed_form_vector(&GraphClass::Geometric, l.level).unwrap(), l.vector);
        writeln!(out, "n={:<3} {:>12}  {}", l.level, l.total, l.vector).unwrap();
    }

    // a single entry straight from the formula, no matrix involved
    writeln!(out, "graphs on 30 points with root visibility degree 0: {}", geometric_entry(30, 1)).unwrap();
    out
}

fn main() {
    print!("{}", run());
}
