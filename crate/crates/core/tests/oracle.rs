use convex_count::closed_form::kangulation_entry;
use convex_count::oracle::*;
use convex_count::production::{count_sequence, k_angulation_total};
use convex_count::{BigInt, CountVector, GraphClass, GraphClassSpec};

fn matrix_vectors(class: GraphClass, n_max: usize) -> Vec<CountVector> {
    let spec = GraphClassSpec::new(class).unwrap();
    count_sequence(&spec, n_max).unwrap().into_iter().map(|l| l.vector).collect()
}

fn connected_counts(n_max: usize) -> Vec<BigInt> {
    matrix_vectors(GraphClass::Connected, n_max).iter().map(CountVector::total).collect()
}

#[test]
fn geometric_and_connected_histograms() {
    let opts = EnumOptions::default();
    for v in matrix_vectors(GraphClass::Geometric, 7) {
        assert_eq!(geometric_histogram(v.level(), &opts).unwrap(), v);
    }
    for v in matrix_vectors(GraphClass::Connected, 7) {
        assert_eq!(connected_histogram(v.level(), &opts).unwrap(), v);
    }
}

#[test]
fn partition_histograms() {
    let opts = EnumOptions::default();
    for v in matrix_vectors(GraphClass::NonCrossingPartition, 9) {
        assert_eq!(partition_histogram(v.level(), RootConvention::IncludeRoot, &opts).unwrap(), v);
    }
}

#[test]
fn only_root_inclusive_convention_matches() {
    let expected = |n: usize| Ok(matrix_vectors(GraphClass::NonCrossingPartition, n).pop().unwrap());
    let found = matching_isolation_conventions(6, &EnumOptions::default(), expected).unwrap();
    assert_eq!(found, [RootConvention::IncludeRoot]);
}

#[test]
fn relation_histograms_over_all_graphs() {
    let opts = EnumOptions::default();
    for v in matrix_vectors(GraphClass::Relation { counts: connected_counts(7) }, 7) {
        assert_eq!(relation_histogram(v.level(), RootConvention::IncludeRoot, &opts).unwrap(), v);
    }
}

#[test]
fn dissection_histograms_and_totals() {
    let opts = EnumOptions::default();
    for k in 3..=5i64 {
        let r_max = 10 / (k as usize - 2);
        for v in matrix_vectors(GraphClass::KAngulation { k }, r_max) {
            let r = v.level();
            assert_eq!(dissection_histogram(k, r, &opts).unwrap(), v, "k={k} r={r}");
            let formula: Vec<BigInt> = (1..=r as i64).map(|j| kangulation_entry(k, r as i64, j)).collect();
            assert_eq!(v.entries(), &formula[..]);
            let count = enumerate_dissections(k, r, &opts).unwrap().len();
            assert_eq!(k_angulation_total(k, r as i64).unwrap(), BigInt::from(count));
        }
    }
}

#[test]
fn spanning_structure_counts() {
    let opts = EnumOptions::default();
    let count = |n, kind| enumerate_spanning_structures(n, kind, &opts).unwrap();
    let trees: Vec<BigInt> = (2..=7).map(|n| count(n, SpanningKind::Tree)).collect();
    assert_eq!(trees, [1, 3, 12, 55, 273, 1428].map(BigInt::from));
    // quadrangulations with n-1 faces have the same count as trees on n points
    for n in 2..=6 {
        assert_eq!(count(n, SpanningKind::Tree), k_angulation_total(4, n as i64 - 1).unwrap());
    }
    assert_eq!(count(1, SpanningKind::Forest), BigInt::from(1));
    assert!(enumerate_spanning_structures(9, SpanningKind::Path, &opts).is_err());
}

#[test]
fn enumerations_are_duplicate_free() {
    let opts = EnumOptions::default();
    for n in 1..=6 {
        assert_eq!(first_duplicate(enumerate_noncrossing_graphs(n, &opts).unwrap()), None);
        assert_eq!(first_duplicate(enumerate_partitions(n, &opts).unwrap()), None);
        assert_eq!(first_duplicate(enumerate_dissections(3, n, &opts).unwrap()), None);
    }
}

#[test]
fn worker_count_does_not_change_results() {
    let h: Vec<CountVector> = [1, 2, 3, 8]
        .into_iter()
        .map(|w| geometric_histogram(7, &EnumOptions::with_workers(w)).unwrap())
        .collect();
    assert!(h.windows(2).all(|p| p[0] == p[1]));
    let a = enumerate_connected(6, &EnumOptions::with_workers(1)).unwrap();
    let b = enumerate_connected(6, &EnumOptions::with_workers(5)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn guards_are_soft() {
    let opts = EnumOptions::default();
    assert!(matches!(
        enumerate_noncrossing_graphs(10, &opts),
        Err(convex_count::Error::GuardExceeded { .. })
    ));
    assert!(enumerate_partitions(13, &opts).is_err());
    assert_eq!(enumerate_partitions(13, &opts.forced()).unwrap().len(), 742900);
}
