//! Non-crossing partitions of [n] by the isolation degree of the root, from
//! the production matrix and from direct enumeration.

use std::fmt::Write;

use convex_count::closed_form::partition_entry;
use convex_count::oracle::{enumerate_partitions, isolation_degree, partition_histogram, EnumOptions, RootConvention};
use convex_count::production::count_sequence;
use convex_count::{GraphClass, GraphClassSpec};

pub fn run() -> String {
    let mut out = String::new();
    let opts = EnumOptions::default();
    let spec = GraphClassSpec::new(GraphClass::NonCrossingPartition).unwrap();
    for l in count_sequence(&spec, 8).unwrap() {
        let brute = partition_histogram(l.level, RootConvention::IncludeRoot, &opts).unwrap();
        assert_eq!(brute, l.vector);
        let n = l.level as i64;
        assert_eq!(partition_entry(n, n + 1), 1.into());
        writeln!(out, "n={} catalan={:<5} {}", l.level, l.total, l.vector).unwrap();
    }

    writeln!(out, "\npartitions of [4]:").unwrap();
    for p in enumerate_partitions(4, &opts).unwrap() {
        writeln!(out, "  {p}  isolation degree {}", isolation_degree(&p)).unwrap();
    }
    out
}

fn main() {
    print!("{}", run());
}
