//! Non-crossing graphs on points in convex position, enumerated by
//! include/exclude branching over the chords in lexicographic order.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{check_guard, EnumOptions, IsolationDegree, RootConvention};
use crate::error::Result;

/// Largest vertex count a graph's edge bitmask can hold.
pub const MAX_VERTICES: usize = 16;
pub const GRAPH_GUARD: usize = 9;
pub const SPANNING_GUARD: usize = 8;

/// A graph on vertices `1..=n` in counter-clockwise convex position.
/// Bit `i` of `edges` is the `i`-th chord of [`Chords::new(n)`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaneGraph {
    n: usize,
    edges: u128,
}

/// `a < c < b < d` or `c < a < d < b`.
pub fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// All chords `(a, b)`, `1 <= a < b <= n`, in lexicographic order, with
/// the bitmask of chords each one crosses.
#[derive(Clone, Debug)]
pub struct Chords {
    pub n: usize,
    pub pairs: Vec<(usize, usize)>,
    pub crossing: Vec<u128>,
}

impl Chords {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        let pairs: Vec<_> = (1..=n)
            .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
            .collect();
        let crossing = pairs
            .iter()
            .map(|&e| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|&(_, &f)| crosses(e, f))
                    .fold(0u128, |m, (i, _)| m | (1 << i))
            })
            .collect();
        Self { n, pairs, crossing }
    }

    pub fn index(&self, a: usize, b: usize) -> Option<usize> {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        self.pairs.iter().position(|&p| p == (a, b))
    }
}

impl PlaneGraph {
    /// `None` if an edge is out of range, a loop, or crosses another edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Option<Self> {
        if n > MAX_VERTICES {
            return None;
        }
        let chords = Chords::new(n);
        let mut mask = 0u128;
        for &(a, b) in edges {
            let i = chords.index(a, b)?;
            if chords.crossing[i] & mask != 0 {
                return None;
            }
            mask |= 1 << i;
        }
        Some(Self { n, edges: mask })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, edges: 0 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_mask(&self) -> u128 {
        self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        let mut i = 0;
        for a in 1..=self.n {
            for b in a + 1..=self.n {
                if self.edges >> i & 1 == 1 {
                    out.push((a, b));
                }
                i += 1;
            }
        }
        out
    }

    pub fn is_noncrossing(&self) -> bool {
        let e = self.edges();
        e.iter()
            .enumerate()
            .all(|(i, &x)| e[i + 1..].iter().all(|&y| !crosses(x, y)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n + 1];
        for (a, b) in self.edges() {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Bit `j` set when some edge `(a, b)` has `a < j < b`.
    fn spanned(&self) -> u32 {
        self.edges()
            .into_iter()
            .fold(0u32, |m, (a, b)| m | ((1u32 << b) - (1u32 << (a + 1))))
    }

    pub fn components(&self) -> usize {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut count = self.n;
        for (a, b) in self.edges() {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                count -= 1;
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.components() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components() == self.n
    }
}

impl fmt::Display for PlaneGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {{", self.n)?;
        for (i, (a, b)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}-{b}")?;
        }
        f.write_str("}")
    }
}

/// Vertices visible from a point inserted between `p_1` and `p_n`, minus 2.
/// A vertex is hidden exactly when some edge spans it.
pub fn visibility_degree(g: &PlaneGraph) -> usize {
    let hidden = g.spanned().count_ones() as usize;
    (g.n - hidden).saturating_sub(2)
}

impl IsolationDegree for PlaneGraph {
    fn isolation_degree_with(&self, convention: RootConvention) -> usize {
        let spanned = self.spanned();
        let deg = self.degrees();
        (1..=self.n)
            .filter(|&j| deg[j] == 0 && spanned >> j & 1 == 0)
            .filter(|&j| convention == RootConvention::IncludeRoot || j != self.n)
            .count()
    }
}

/// Depth-first include/exclude walk over the chords from a fixed prefix.
/// Excluding a chord is explored before including it, so the empty graph
/// comes first.
pub struct NonCrossingGraphs<'a> {
    chords: &'a Chords,
    stack: Vec<(usize, u128)>,
}

impl<'a> NonCrossingGraphs<'a> {
    fn from_prefix(chords: &'a Chords, depth: usize, mask: u128) -> Self {
        Self {
            chords,
            stack: vec![(depth, mask)],
        }
    }
}

impl Iterator for NonCrossingGraphs<'_> {
    type Item = PlaneGraph;

    fn next(&mut self) -> Option<PlaneGraph> {
        while let Some((i, mask)) = self.stack.pop() {
            if i == self.chords.pairs.len() {
                return Some(PlaneGraph {
                    n: self.chords.n,
                    edges: mask,
                });
            }
            if self.chords.crossing[i] & mask == 0 {
                self.stack.push((i + 1, mask | 1 << i));
            }
            self.stack.push((i + 1, mask));
        }
        None
    }
}

/// Compatible chord subsets of the first `depth` chords, in walk order.
fn prefixes(chords: &Chords, depth: usize) -> Vec<u128> {
    let mut out = vec![0u128];
    for i in 0..depth {
        out = out
            .into_iter()
            .flat_map(|m| {
                let inc = (chords.crossing[i] & m == 0).then_some(m | 1 << i);
                std::iter::once(m).chain(inc)
            })
            .collect();
    }
    out
}

/// Fans the walk out over prefix branches, maps every graph of a branch
/// through `per_branch`, and returns the per-branch results in walk order.
fn fan_out<T, F>(n: usize, opts: &EnumOptions, per_branch: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(NonCrossingGraphs<'_>) -> T + Sync,
{
    check_guard("non-crossing graph enumeration n", n, GRAPH_GUARD, opts.force)?;
    check_guard("vertex count", n, MAX_VERTICES, false)?;
    let chords = Chords::new(n);
    let workers = opts.worker_count();
    let mut depth = 0;
    while depth < chords.pairs.len() && (1usize << depth) < 8 * workers {
        depth += 1;
    }
    let branches = prefixes(&chords, depth);
    let run = |m: &u128| per_branch(NonCrossingGraphs::from_prefix(&chords, depth, *m));
    if workers <= 1 {
        return Ok(branches.iter().map(run).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    Ok(pool.install(|| branches.par_iter().map(run).collect()))
}

/// Every non-crossing graph on `n` points, each exactly once, in a fixed
/// order independent of the worker count.
pub fn enumerate_noncrossing_graphs(n: usize, opts: &EnumOptions) -> Result<Vec<PlaneGraph>> {
    Ok(fan_out(n, opts, |it| it.collect::<Vec<_>>())?
        .into_iter()
        .flatten()
        .collect())
}

/// Sequential lazy enumeration.
pub fn noncrossing_graphs(chords: &Chords) -> NonCrossingGraphs<'_> {
    NonCrossingGraphs::from_prefix(chords, 0, 0)
}

pub fn enumerate_connected(n: usize, opts: &EnumOptions) -> Result<Vec<PlaneGraph>> {
    Ok(fan_out(n, opts, |it| it.filter(PlaneGraph::is_connected).collect::<Vec<_>>())?
        .into_iter()
        .flatten()
        .collect())
}

/// Histogram of `degree` over the graphs accepted by `keep`, with `len`
/// bins; degrees past the last bin are an error in the caller's model and
/// panic.
pub fn graph_histogram<K, D>(
    n: usize,
    len: usize,
    opts: &EnumOptions,
    keep: K,
    degree: D,
) -> Result<Vec<u64>>
where
    K: Fn(&PlaneGraph) -> bool + Sync,
    D: Fn(&PlaneGraph) -> usize + Sync,
{
    let parts = fan_out(n, opts, |it| {
        let mut h = vec![0u64; len];
        for g in it.filter(|g| keep(g)) {
            let d = degree(&g);
            assert!(d < len, "degree {d} outside {len} bins for {g}");
            h[d] += 1;
        }
        h
    })?;
    Ok(parts.into_iter().fold(vec![0; len], |mut acc, h| {
        acc.iter_mut().zip(h).for_each(|(a, b)| *a += b);
        acc
    }))
}

/// Which spanning structures to count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpanningKind {
    Tree,
    Path,
    Forest,
    PathForest,
}

impl SpanningKind {
    pub const ALL: [Self; 4] = [Self::Tree, Self::Path, Self::Forest, Self::PathForest];

    pub fn name(&self) -> &'static str {
        match self {
            Self::Tree => "tree",
            Self::Path => "path",
            Self::Forest => "forest",
            Self::PathForest => "path-forest",
        }
    }

    pub fn accepts(&self, g: &PlaneGraph) -> bool {
        match self {
            Self::Tree => g.is_connected() && g.edge_count() + 1 == g.n(),
            Self::Path => g.is_connected() && g.edge_count() + 1 == g.n() && g.max_degree() <= 2,
            Self::Forest => g.is_forest(),
            Self::PathForest => g.is_forest() && g.max_degree() <= 2,
        }
    }
}

impl std::str::FromStr for SpanningKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown spanning structure {s:?}"))
    }
}

/// Number of non-crossing spanning structures of `kind` on `n` points.
pub fn enumerate_spanning_structures(
    n: usize,
    kind: SpanningKind,
    opts: &EnumOptions,
) -> Result<BigInt> {
    check_guard("spanning structure n", n, SPANNING_GUARD, opts.force)?;
    let parts = fan_out(n, &opts.forced(), |it| it.filter(|g| kind.accepts(g)).count())?;
    Ok(BigInt::from(parts.into_iter().sum::<usize>()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::isolation_degree;

    fn count(n: usize) -> usize {
        enumerate_noncrossing_graphs(n, &EnumOptions::default()).unwrap().len()
    }

    #[test]
    fn small_totals() {
        assert_eq!(count(1), 1);
        assert_eq!(count(2), 2);
        assert_eq!(count(3), 8);
        assert_eq!(count(4), 48);
        assert_eq!(count(5), 352);
    }

    #[test]
    fn connected_totals() {
        let c = |n| enumerate_connected(n, &EnumOptions::default()).unwrap().len();
        assert_eq!(c(2), 1);
        assert_eq!(c(3), 4);
        assert_eq!(c(4), 23);
    }

    #[test]
    fn crossing_predicate() {
        assert!(crosses((1, 3), (2, 4)));
        assert!(crosses((2, 4), (1, 3)));
        assert!(!crosses((1, 3), (3, 4)));
        assert!(!crosses((1, 4), (2, 3)));
        assert!(PlaneGraph::from_edges(4, &[(1, 3), (2, 4)]).is_none());
    }

    #[test]
    fn visibility_examples() {
        assert_eq!(visibility_degree(&PlaneGraph::empty(6)), 4);
        let g = PlaneGraph::from_edges(5, &[(1, 5)]).unwrap();
        assert_eq!(visibility_degree(&g), 0);
        // 12 points; only 1, 2, 6, 11 and 12 stay visible.
        let g = PlaneGraph::from_edges(
            12,
            &[(2, 6), (3, 5), (6, 11), (7, 9), (8, 10), (1, 2), (11, 12)],
        );
        assert!(g.is_none(), "7-9 and 8-10 cross");
        let g = PlaneGraph::from_edges(12, &[(2, 6), (3, 5), (6, 11), (7, 9), (9, 10), (1, 2)])
            .unwrap();
        assert_eq!(visibility_degree(&g), 3);
    }

    #[test]
    fn isolation_examples() {
        // 12 points where only 8 and 12 are isolated and unspanned.
        let g = PlaneGraph::from_edges(
            12,
            &[(1, 2), (2, 3), (4, 6), (4, 7), (3, 7), (9, 10), (10, 11)],
        )
        .unwrap();
        assert_eq!(isolation_degree(&g), 2);
        assert_eq!(g.isolation_degree_with(RootConvention::ExcludeRoot), 1);
        assert_eq!(isolation_degree(&PlaneGraph::empty(4)), 4);
        let g = PlaneGraph::from_edges(3, &[(1, 3)]).unwrap();
        assert_eq!(isolation_degree(&g), 0);
    }

    #[test]
    fn spanning_examples() {
        let o = EnumOptions::default();
        assert_eq!(enumerate_spanning_structures(3, SpanningKind::Path, &o).unwrap(), 3.into());
        assert_eq!(enumerate_spanning_structures(2, SpanningKind::Tree, &o).unwrap(), 1.into());
        assert_eq!(enumerate_spanning_structures(4, SpanningKind::Tree, &o).unwrap(), 12.into());
        assert_eq!(enumerate_spanning_structures(3, SpanningKind::Forest, &o).unwrap(), 7.into());
        assert!(enumerate_spanning_structures(9, SpanningKind::Tree, &o).is_err());
    }

    #[test]
    fn guard() {
        assert!(enumerate_noncrossing_graphs(10, &EnumOptions::default()).is_err());
    }

    #[test]
    fn order_independent_of_workers() {
        let a = enumerate_noncrossing_graphs(5, &EnumOptions::with_workers(1)).unwrap();
        let b = enumerate_noncrossing_graphs(5, &EnumOptions::with_workers(4)).unwrap();
        assert_eq!(a, b);
        let seq: Vec<_> = noncrossing_graphs(&Chords::new(5)).collect();
        assert_eq!(a, seq);
        assert_eq!(a[0], PlaneGraph::empty(5));
    }

    #[test]
    fn enumerated_graphs_are_noncrossing() {
        let all = enumerate_noncrossing_graphs(6, &EnumOptions::default()).unwrap();
        assert!(all.iter().all(PlaneGraph::is_noncrossing));
    }
}
