//! Characteristic polynomials three ways: the banded recurrence, the
//! per-class closed form and fraction-free elimination.

use std::fmt::Write;

use convex_count::spectral::{class_charpoly, CharPolyMethod};
use convex_count::GraphClass;

pub fn run() -> String {
    let mut out = String::new();
    let classes = [
        GraphClass::KAngulation { k: 4 },
        GraphClass::Geometric,
        GraphClass::Connected,
        GraphClass::NonCrossingPartition,
    ];
    for class in &classes {
        writeln!(out, "{class}").unwrap();
        for n in 0..=6 {
            let polys: Vec<_> = CharPolyMethod::ALL
                .iter()
                .map(|&m| class_charpoly(class, n, m).unwrap())
                .collect();
            assert!(polys.windows(2).all(|w| w[0] == w[1]));
            writeln!(out, "  d_{n} = {}", polys[0]).unwrap();
        }
    }

    // past the point where elimination is practical
    let g = class_charpoly(&GraphClass::Geometric, 30, CharPolyMethod::Closed).unwrap();
    let r = class_charpoly(&GraphClass::Geometric, 30, CharPolyMethod::Recurrence).unwrap();
    assert_eq!(g, r);
    writeln!(out, "constant term of g_30: {}", g.coeff(0)).unwrap();
    out
}

fn main() {
    print!("{}", run());
}
