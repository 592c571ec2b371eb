//! The relation matrix: plug in the number of connected pieces c_2, c_3, ...
//! and read off how many graphs are built from them.
//!
//! Connected graphs give all geometric graphs; spanning trees give forests;
//! spanning paths give forests of paths.

use std::fmt::Write;

use convex_count::oracle::{enumerate_spanning_structures, EnumOptions, SpanningKind};
use convex_count::production::{count_sequence, relation_coefficients};
use convex_count::{BigInt, GraphClass, GraphClassSpec};

fn totals(counts: Vec<BigInt>, n_max: usize) -> Vec<BigInt> {
    let spec = GraphClassSpec::new(GraphClass::Relation { counts }).unwrap();
    count_sequence(&spec, n_max).unwrap().into_iter().map(|l| l.total).collect()
}

pub fn run() -> String {
    let mut out = String::new();
    let opts = EnumOptions::default();

    let connected: Vec<BigInt> = count_sequence(&GraphClassSpec::new(GraphClass::Connected).unwrap(), 9)
        .unwrap()
        .into_iter()
        .map(|l| l.total)
        .collect();
    writeln!(out, "c (connected)      = {connected:?}").unwrap();
    writeln!(out, "band a_2..a_9      = {:?}", relation_coefficients(&connected, 9).unwrap()).unwrap();
    writeln!(out, "geometric totals   = {:?}", totals(connected, 9)).unwrap();

    for (source, target) in [(SpanningKind::Tree, SpanningKind::Forest), (SpanningKind::Path, SpanningKind::PathForest)] {
        let c: Vec<BigInt> = (2..=6)
            .map(|i| enumerate_spanning_structures(i, source, &opts).unwrap())
            .collect();
        let from_matrix = totals(c.clone(), 6);
        let counted: Vec<BigInt> = (1..=6)
            .map(|n| enumerate_spanning_structures(n, target, &opts).unwrap())
            .collect();
        assert_eq!(from_matrix, counted);
        writeln!(out, "{:<6} c = {c:?} -> {} totals {from_matrix:?}", source.name(), target.name()).unwrap();
    }
    out
}

fn main() {
    print!("{}", run());
}
