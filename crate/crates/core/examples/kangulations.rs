//! Dissections of a convex polygon into k-gons, counted by the degree of the
//! root vertex.
//!
//! `cargo run --example kangulations`

use std::fmt::Write;

use convex_count::closed_form::closed_form_vector;
use convex_count::production::{count_sequence, k_angulation_total};
use convex_count::{GraphClass, GraphClassSpec};

pub fn run() -> String {
    let mut out = String::new();
    for k in [3, 4, 5] {
        let class = GraphClass::KAngulation { k };
        writeln!(out, "k = {k}").unwrap();
        writeln!(out, "{}", class.matrix(5).unwrap()).unwrap();
        let spec = GraphClassSpec::new(class.clone()).unwrap();
        for level in count_sequence(&spec, 7).unwrap() {
            let r = level.level;
            let formula = k_angulation_total(k, r as i64).unwrap();
            // closed form and matrix iteration must agree
            assert_eq!(closed_form_vector(&class, r).unwrap(), level.vector);
            assert_eq!(formula, level.total);
            writeln!(out, "  r={r:<2} total={:<8} by degree {}", level.total, level.vector).unwrap();
        }
    }
    out
}

fn main() {
    print!("{}", run());
}
