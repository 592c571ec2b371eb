//! Enumerating the objects themselves and comparing degree histograms with
//! the matrix counts.

use std::fmt::Write;

use convex_count::oracle::{
    connected_histogram, dissection_histogram, enumerate_dissections, enumerate_noncrossing_graphs,
    geometric_histogram, relation_histogram, visibility_degree, EnumOptions, RootConvention,
};
use convex_count::production::count_sequence;
use convex_count::{GraphClass, GraphClassSpec};

fn matrix_vector(class: GraphClass, level: usize) -> convex_count::CountVector {
    let spec = GraphClassSpec::new(class).unwrap();
    count_sequence(&spec, level).unwrap().pop().unwrap().vector
}

pub fn run() -> String {
    let mut out = String::new();
    let opts = EnumOptions::default();

    for g in enumerate_noncrossing_graphs(3, &opts).unwrap() {
        writeln!(out, "{g}  visibility degree {}", visibility_degree(&g)).unwrap();
    }

    for n in 2..=7 {
        let geo = geometric_histogram(n, &opts).unwrap();
        let con = connected_histogram(n, &opts).unwrap();
        assert_eq!(geo, matrix_vector(GraphClass::Geometric, n));
        assert_eq!(con, matrix_vector(GraphClass::Connected, n));
        writeln!(out, "n={n} geometric {geo}  connected {con}").unwrap();
    }

    let rel = relation_histogram(5, RootConvention::IncludeRoot, &opts).unwrap();
    writeln!(out, "isolation degrees over all graphs on 5 points: {rel}").unwrap();

    for d in enumerate_dissections(4, 2, &opts).unwrap() {
        writeln!(out, "{d}  root degree {}", d.root_degree()).unwrap();
    }
    writeln!(out, "quadrangulations with 3 faces: {}", dissection_histogram(4, 3, &opts).unwrap()).unwrap();
    out
}

fn main() {
    print!("{}", run());
}
