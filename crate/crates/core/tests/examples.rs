//! Runs every example's `run()` so the examples stay compiling and correct.

#[allow(dead_code)]
#[path = "../examples/kangulations.rs"]
mod kangulations;
#[allow(dead_code)]
#[path = "../examples/geometric_graphs.rs"]
mod geometric_graphs;
#[allow(dead_code)]
#[path = "../examples/connected_graphs.rs"]
mod connected_graphs;
#[allow(dead_code)]
#[path = "../examples/noncrossing_partitions.rs"]
mod noncrossing_partitions;
#[allow(dead_code)]
#[path = "../examples/relation_matrix.rs"]
mod relation_matrix;
#[allow(dead_code)]
#[path = "../examples/riordan_builder.rs"]
mod riordan_builder;
#[allow(dead_code)]
#[path = "../examples/characteristic_polynomials.rs"]
mod characteristic_polynomials;
#[allow(dead_code)]
#[path = "../examples/eigenvectors.rs"]
mod eigenvectors;
#[allow(dead_code)]
#[path = "../examples/brute_force_oracle.rs"]
mod brute_force_oracle;
#[allow(dead_code)]
#[path = "../examples/bfile_export.rs"]
mod bfile_export;

#[test]
fn all_examples_run() {
    let outputs = [
        kangulations::run(),
        geometric_graphs::run(),
        connected_graphs::run(),
        noncrossing_partitions::run(),
        relation_matrix::run(),
        riordan_builder::run(),
        characteristic_polynomials::run(),
        eigenvectors::run(),
        brute_force_oracle::run(),
        bfile_export::run(),
    ];
    assert!(outputs.iter().all(|o| !o.is_empty()));
}
