//! Non-crossing set partitions of `[n]`.

use std::fmt;

use super::{check_guard, EnumOptions, IsolationDegree, RootConvention};
use crate::error::Result;

pub const PARTITION_GUARD: usize = 12;

/// Blocks are sorted internally and ordered by their least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NonCrossingPartitionValue {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl NonCrossingPartitionValue {
    /// `None` unless the blocks are disjoint, cover `1..=n` and do not cross.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Option<Self> {
        let mut seen = vec![false; n + 1];
        for b in &mut blocks {
            b.sort_unstable();
            for &x in b.iter() {
                if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
                    return None;
                }
            }
        }
        if blocks.iter().any(Vec::is_empty) || seen[1..].iter().any(|s| !s) {
            return None;
        }
        blocks.sort();
        let p = Self { n, blocks };
        p.is_noncrossing().then_some(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// No `a < b < c < d` with `a, c` in one block and `b, d` in another.
    pub fn is_noncrossing(&self) -> bool {
        let label = self.labels();
        let n = self.n;
        for a in 1..=n {
            for b in a + 1..=n {
                for c in b + 1..=n {
                    if label[a] != label[c] || label[a] == label[b] {
                        continue;
                    }
                    if (c + 1..=n).any(|d| label[d] == label[b]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn labels(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n + 1];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                label[x] = i;
            }
        }
        label
    }
}

impl fmt::Display for NonCrossingPartitionValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            let items: Vec<String> = b.iter().map(ToString::to_string).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        f.write_str("}")
    }
}

impl IsolationDegree for NonCrossingPartitionValue {
    fn isolation_degree_with(&self, convention: RootConvention) -> usize {
        let mut spanned = vec![false; self.n + 1];
        for b in &self.blocks {
            let (lo, hi) = (b[0], b[b.len() - 1]);
            for s in spanned.iter_mut().take(hi).skip(lo + 1) {
                *s = true;
            }
        }
        self.blocks
            .iter()
            .filter(|b| b.len() == 1)
            .map(|b| b[0])
            .filter(|&j| !spanned[j])
            .filter(|&j| convention == RootConvention::IncludeRoot || j != self.n)
            .count()
    }
}

/// Every non-crossing partition of `[n]` exactly once.
///
/// Elements are placed left to right. Each one either opens a new block or
/// joins a block still open on the stack; joining closes every block opened
/// after it, since those could only be continued across the new element.
pub fn enumerate_partitions(n: usize, opts: &EnumOptions) -> Result<Vec<NonCrossingPartitionValue>> {
    check_guard("partition enumeration n", n, PARTITION_GUARD, opts.force)?;
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut open: Vec<usize> = Vec::new();
    place(1, n, &mut blocks, &mut open, &mut out);
    Ok(out)
}

fn place(
    x: usize,
    n: usize,
    blocks: &mut Vec<Vec<usize>>,
    open: &mut Vec<usize>,
    out: &mut Vec<NonCrossingPartitionValue>,
) {
    if x > n {
        out.push(NonCrossingPartitionValue {
            n,
            blocks: blocks.clone(),
        });
        return;
    }
    blocks.push(vec![x]);
    open.push(blocks.len() - 1);
    place(x + 1, n, blocks, open, out);
    open.pop();
    blocks.pop();

    for depth in (0..open.len()).rev() {
        let b = open[depth];
        let closed = open.split_off(depth + 1);
        blocks[b].push(x);
        place(x + 1, n, blocks, open, out);
        blocks[b].pop();
        open.extend(closed);
    }
}
