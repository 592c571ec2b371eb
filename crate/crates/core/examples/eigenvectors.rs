//! Largest real eigenvalue of each production matrix and the eigenvector
//! built from the characteristic polynomials, with its residual.
//!
//! Precision is read from CONVEX_COUNT_PRECISION (bits, default 256).

use std::fmt::Write;

use convex_count::spectral::{
    dominant_eigenvalue_with_precision, eigenvector_from_charpoly, real_eigenpairs, to_decimal, Precision,
};
use convex_count::GraphClass;

pub fn run() -> String {
    let mut out = String::new();
    let precision = Precision::from_env();
    writeln!(out, "precision: {} bits", precision.bits).unwrap();

    for class in [GraphClass::KAngulation { k: 3 }, GraphClass::Geometric, GraphClass::Connected, GraphClass::NonCrossingPartition] {
        writeln!(out, "{class}").unwrap();
        for n in [2, 4, 8, 16] {
            let m = class.matrix(n).unwrap();
            let dom = dominant_eigenvalue_with_precision(&m, precision).unwrap();
            let pair = eigenvector_from_charpoly(&m, &dom.value()).unwrap();
            writeln!(
                out,
                "  n={n:<2} λ = {}  ({} real roots, residual {:.1e})",
                to_decimal(&dom.value(), 20),
                dom.real_roots,
                pair.residual
            )
            .unwrap();
        }
    }

    let g2 = GraphClass::Geometric.matrix(2).unwrap();
    writeln!(out, "G_2 eigenpairs (2 ± 2√2):").unwrap();
    for pair in real_eigenpairs(&g2, precision).unwrap() {
        let xs: Vec<String> = pair.vector.iter().map(|x| to_decimal(x, 12)).collect();
        writeln!(out, "  λ = {:<16} x = ({})", to_decimal(&pair.lambda, 12), xs.join(", ")).unwrap();
    }
    out
}

fn main() {
    print!("{}", run());
}
