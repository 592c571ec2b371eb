//! Brute-force enumeration of every class at small sizes, used as ground
//! truth for the matrices and formulas.

mod dissections;
mod graphs;
mod partitions;

use std::collections::HashSet;
use std::hash::Hash;

use num_bigint::BigInt;

pub use dissections::{enumerate_dissections, Dissection, DISSECTION_GUARD};
pub use graphs::{
    crosses, enumerate_connected, enumerate_noncrossing_graphs, enumerate_spanning_structures,
    graph_histogram, noncrossing_graphs, visibility_degree, Chords, NonCrossingGraphs, PlaneGraph,
    SpanningKind, GRAPH_GUARD, MAX_VERTICES, SPANNING_GUARD,
};
pub use partitions::{enumerate_partitions, NonCrossingPartitionValue, PARTITION_GUARD};

use crate::error::{Error, Result};
use crate::exact::CountVector;

/// Enumeration settings shared by every oracle.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumOptions {
    /// Skip the soft size guards.
    pub force: bool,
    /// Worker threads; `None` uses the available parallelism.
    pub workers: Option<usize>,
}

impl EnumOptions {
    pub fn forced(&self) -> Self {
        Self {
            force: true,
            ..*self
        }
    }

    pub fn with_workers(workers: usize) -> Self {
        Self {
            force: false,
            workers: Some(workers),
        }
    }

    pub fn worker_count(&self) -> usize {
        self.workers
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
            .max(1)
    }
}

pub(crate) fn check_guard(what: &'static str, value: usize, limit: usize, force: bool) -> Result<()> {
    if value > limit && !force {
        return Err(Error::GuardExceeded { what, value, limit });
    }
    Ok(())
}

/// Whether the root vertex `p_n` itself may count towards its own
/// isolation degree.
///
/// `IncludeRoot` is the variant whose histograms match the partition
/// production matrix, and is the default.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum RootConvention {
    #[default]
    IncludeRoot,
    ExcludeRoot,
}

/// Isolated vertices (degree 0, or singleton blocks) that no edge or block
/// spans, as seen from a point inserted between `p_1` and `p_n`.
pub trait IsolationDegree {
    fn isolation_degree_with(&self, convention: RootConvention) -> usize;

    fn isolation_degree(&self) -> usize {
        self.isolation_degree_with(RootConvention::default())
    }
}

pub fn isolation_degree<T: IsolationDegree + ?Sized>(x: &T) -> usize {
    x.isolation_degree()
}

/// Counts of `degrees` into `len` bins as a vector at `level`. `None` if a
/// degree falls outside.
pub fn histogram<I>(level: usize, len: usize, degrees: I) -> Option<CountVector>
where
    I: IntoIterator<Item = usize>,
{
    let mut h = vec![0u64; len];
    for d in degrees {
        *h.get_mut(d)? += 1;
    }
    Some(CountVector::new(level, h.into_iter().map(BigInt::from).collect()))
}

/// First item seen twice, if any.
pub fn first_duplicate<T, I>(items: I) -> Option<T>
where
    T: Hash + Eq + Clone,
    I: IntoIterator<Item = T>,
{
    let mut seen = HashSet::new();
    items.into_iter().find(|x| !seen.insert(x.clone()))
}

/// Visibility-degree histogram of all non-crossing graphs on `n` points.
pub fn geometric_histogram(n: usize, opts: &EnumOptions) -> Result<CountVector> {
    let len = n.saturating_sub(1);
    let h = graph_histogram(n, len, opts, |_| true, visibility_degree)?;
    Ok(to_vector(n, h))
}

/// Visibility-degree histogram of the connected non-crossing graphs.
pub fn connected_histogram(n: usize, opts: &EnumOptions) -> Result<CountVector> {
    let len = n.saturating_sub(1);
    let h = graph_histogram(n, len, opts, PlaneGraph::is_connected, visibility_degree)?;
    Ok(to_vector(n, h))
}

/// Isolation-degree histogram of all non-crossing graphs on `n` points.
pub fn relation_histogram(n: usize, convention: RootConvention, opts: &EnumOptions) -> Result<CountVector> {
    let h = graph_histogram(n, n + 1, opts, |_| true, |g| g.isolation_degree_with(convention))?;
    Ok(to_vector(n, h))
}

/// Isolation-degree histogram of the non-crossing partitions of `[n]`.
pub fn partition_histogram(n: usize, convention: RootConvention, opts: &EnumOptions) -> Result<CountVector> {
    let parts = enumerate_partitions(n, opts)?;
    Ok(histogram(n, n + 1, parts.iter().map(|p| p.isolation_degree_with(convention)))
        .expect("isolation degree is at most n"))
}

/// Root-degree histogram of the k-angulations with `r` k-gons.
pub fn dissection_histogram(k: i64, r: usize, opts: &EnumOptions) -> Result<CountVector> {
    let ds = enumerate_dissections(k, r, opts)?;
    Ok(histogram(r, r, ds.iter().map(Dissection::root_degree)).expect("root degree is below r"))
}

/// The conventions whose partition histograms equal `expected(n)` for every
/// `n` in `1..=n_max`.
pub fn matching_isolation_conventions<F>(n_max: usize, opts: &EnumOptions, expected: F) -> Result<Vec<RootConvention>>
where
    F: Fn(usize) -> Result<CountVector>,
{
    let mut out = Vec::new();
    for convention in [RootConvention::IncludeRoot, RootConvention::ExcludeRoot] {
        let mut all = true;
        for n in 1..=n_max {
            if partition_histogram(n, convention, opts)? != expected(n)? {
                all = false;
                break;
            }
        }
        if all {
            out.push(convention);
        }
    }
    Ok(out)
}

fn to_vector(level: usize, h: Vec<u64>) -> CountVector {
    CountVector::new(level, h.into_iter().map(BigInt::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn histogram_bins() {
        let h = histogram(3, 3, [0, 2, 2]).unwrap();
        assert_eq!(h, CountVector::from_u64s(3, &[1, 0, 2]));
        assert!(histogram(3, 2, [2]).is_none());
    }

    #[test]
    fn duplicates() {
        assert_eq!(first_duplicate([1, 2, 3, 2]), Some(2));
        assert_eq!(first_duplicate([1, 2, 3]), None);
    }

    #[test]
    fn small_histograms() {
        let o = EnumOptions::default();
        assert_eq!(geometric_histogram(4, &o).unwrap(), CountVector::from_u64s(4, &[24, 16, 8]));
        assert_eq!(connected_histogram(4, &o).unwrap(), CountVector::from_u64s(4, &[16, 6, 1]));
        assert_eq!(
            partition_histogram(3, RootConvention::IncludeRoot, &o).unwrap(),
            CountVector::from_u64s(3, &[2, 2, 0, 1])
        );
        assert_eq!(
            relation_histogram(3, RootConvention::IncludeRoot, &o).unwrap(),
            CountVector::from_u64s(3, &[5, 2, 0, 1])
        );
        assert_eq!(dissection_histogram(3, 3, &o).unwrap(), CountVector::from_u64s(3, &[2, 2, 1]));
    }

    #[test]
    fn exclude_root_does_not_match_partition_matrix() {
        let o = EnumOptions::default();
        let h = partition_histogram(3, RootConvention::ExcludeRoot, &o).unwrap();
        assert_ne!(h, CountVector::from_u64s(3, &[2, 2, 0, 1]));
    }
}
