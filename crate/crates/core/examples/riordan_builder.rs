//! Building transfer matrices from Riordan data (d(0), A, Z).
//!
//! When Z is the A-sequence shifted by one the result is Hessenberg-Toeplitz,
//! which is how every class matrix in this crate arises. A different Z only
//! changes row 0.

use std::fmt::Write;

use convex_count::production::{build_from_riordan, RiordanTriple};
use convex_count::spectral::{charpoly_recurrence, matrix_charpoly};
use convex_count::{BigInt, CountVector, Error};

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| x.into()).collect()
}

pub fn run() -> String {
    let mut out = String::new();

    // Catalan: A = Z = (1, 1, 1, ...)
    let catalan = RiordanTriple::new(1.into(), ints(&[1; 6]), ints(&[1; 6])).unwrap();
    let m = build_from_riordan(&catalan, 6).unwrap();
    writeln!(out, "Catalan transfer matrix\n{m}").unwrap();
    let mut v = CountVector::from_u64s(0, &[1, 0, 0, 0, 0, 0]);
    for _ in 0..5 {
        v = m.apply(&v).unwrap();
        writeln!(out, "  {v}  sum {}", v.total()).unwrap();
    }

    // Motzkin paths: A = (1, 1, 1), Z = (1, 1)
    let motzkin = RiordanTriple::new(1.into(), ints(&[1, 1, 0, 0, 0]), ints(&[1, 1, 1, 0, 0])).unwrap();
    let m = build_from_riordan(&motzkin, 5).unwrap();
    writeln!(out, "Motzkin transfer matrix\n{m}").unwrap();

    // A row-0 override is not Toeplitz, so only the determinant applies.
    let odd = RiordanTriple::new(1.into(), ints(&[2, 1, 1, 1]), ints(&[1, 1, 1, 1])).unwrap();
    let m = build_from_riordan(&odd, 4).unwrap();
    assert_eq!(charpoly_recurrence(&m, 4), Err(Error::NotToeplitz));
    writeln!(out, "Z = (2, 1, 1, 1): det(A - λI) = {}", matrix_charpoly(&m)).unwrap();

    assert_eq!(RiordanTriple::new(1.into(), ints(&[1]), ints(&[0, 1])), Err(Error::ImproperRiordan));
    out
}

fn main() {
    print!("{}", run());
}
