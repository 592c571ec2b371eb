//! Production matrices for each graph class and the counting engine
//! `v^{i+1} = A v^i`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, pow2, CountVector, HTMatrix};

/// Graph classes with a known production matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphClass {
    /// Dissections of a convex polygon into `k`-gons; levels count k-gons.
    KAngulation { k: i64 },
    /// All plane graphs, rooted by visibility degree.
    Geometric,
    /// Connected plane graphs, rooted by visibility degree.
    Connected,
    /// Non-crossing partitions, rooted by isolation degree.
    NonCrossingPartition,
    /// The relation matrix over isolation degree, parameterized by the
    /// counts `c_2, c_3, …` of the connected components it inserts.
    Relation { counts: Vec<BigInt> },
}

impl GraphClass {
    pub fn name(&self) -> &'static str {
        match self {
            Self::KAngulation { .. } => "kangulation",
            Self::Geometric => "geometric",
            Self::Connected => "connected",
            Self::NonCrossingPartition => "partition",
            Self::Relation { .. } => "relation",
        }
    }

    /// Level of the initial vector.
    pub fn start_level(&self) -> usize {
        match self {
            Self::Geometric | Self::Connected => 2,
            Self::KAngulation { .. } | Self::NonCrossingPartition | Self::Relation { .. } => 1,
        }
    }

    /// Number of root degrees that can occur at `level`.
    pub fn reachable_len(&self, level: usize) -> usize {
        match self {
            Self::KAngulation { .. } => level,
            Self::Geometric | Self::Connected => level.saturating_sub(1),
            Self::NonCrossingPartition | Self::Relation { .. } => level + 1,
        }
    }

    /// Production matrix truncated to `size × size`.
    pub fn matrix(&self, size: usize) -> Result<HTMatrix> {
        match self {
            Self::KAngulation { k } => build_k_angulation_matrix(*k, size),
            Self::Geometric => build_geometric_matrix(size),
            Self::Connected => build_connected_matrix(size),
            Self::NonCrossingPartition => build_partition_matrix(size),
            Self::Relation { counts } => build_relation_matrix(size, counts),
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::KAngulation { k } => write!(f, "kangulation(k={k})"),
            other => f.write_str(other.name()),
        }
    }
}

/// A class together with its initial vector `v^c` and start level `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphClassSpec {
    pub class: GraphClass,
    pub initial: CountVector,
    pub start: usize,
}

impl GraphClassSpec {
    /// Standard initial data: `(2,0,…)` at 2 vertices for geometric graphs,
    /// `(1,0,…)` at 2 vertices for connected graphs, `(0,1,0,…)` at 1 vertex
    /// for partitions and the relation matrix, `(1,0,…)` at one k-gon.
    pub fn new(class: GraphClass) -> Result<Self> {
        if let GraphClass::KAngulation { k } = class {
            if k < 3 {
                return Err(Error::InvalidK(k));
            }
        }
        let start = class.start_level();
        let initial = match class {
            GraphClass::Geometric => CountVector::unit(start, 1, 0, BigInt::from(2)),
            GraphClass::Connected | GraphClass::KAngulation { .. } => {
                CountVector::unit(start, 1, 0, BigInt::one())
            }
            GraphClass::NonCrossingPartition | GraphClass::Relation { .. } => {
                CountVector::unit(start, 2, 1, BigInt::one())
            }
        };
        Ok(Self {
            class,
            initial,
            start,
        })
    }
}

/// One level of a counting run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelCount {
    pub level: usize,
    /// Trimmed to the degrees reachable at this level.
    pub vector: CountVector,
    pub total: BigInt,
}

/// Riordan data `(d(0), A, Z)`. `a[0]` becomes the subdiagonal and `a[m]`
/// the band at offset `m - 1`; `z` is row 0 of the transfer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiordanTriple {
    pub d0: BigInt,
    pub z: Vec<BigInt>,
    pub a: Vec<BigInt>,
}

impl RiordanTriple {
    pub fn new(d0: BigInt, z: Vec<BigInt>, a: Vec<BigInt>) -> Result<Self> {
        if a.first().is_none_or(Zero::is_zero) {
            return Err(Error::ImproperRiordan);
        }
        Ok(Self { d0, z, a })
    }

    /// Read `Z` from row 0 and `A = (a_{-1}, a_0, a_1, …)` from the band.
    pub fn from_matrix(m: &HTMatrix, d0: BigInt) -> Result<Self> {
        let mut a = vec![m.subdiagonal().clone()];
        a.extend(m.upper_band().iter().cloned());
        Self::new(d0, m.row(0), a)
    }
}

/// `K_r`: subdiagonal 1, offset `m >= 0` holds `C(k-2+m, k-3)`.
pub fn build_k_angulation_matrix(k: i64, r: usize) -> Result<HTMatrix> {
    if k < 3 {
        return Err(Error::InvalidK(k));
    }
    let upper = (0..r as i64).map(|m| binomial(k - 2 + m, k - 3)).collect();
    HTMatrix::toeplitz(r, BigInt::one(), upper)
}

/// `G_n`: subdiagonal 2, offset `m >= 0` holds `2^{m+1}`.
pub fn build_geometric_matrix(n: usize) -> Result<HTMatrix> {
    let upper = (0..n as u32).map(|m| pow2(m + 1)).collect();
    HTMatrix::toeplitz(n, BigInt::from(2), upper)
}

/// `C_n`: subdiagonal 1, offset `m >= 0` holds `2^{m+2} - 1`.
pub fn build_connected_matrix(n: usize) -> Result<HTMatrix> {
    let upper = (0..n as u32).map(|m| pow2(m + 2) - 1).collect();
    HTMatrix::toeplitz(n, BigInt::one(), upper)
}

/// `B_n`: subdiagonal 1, zero diagonal, offset `m >= 1` holds `2^{m-1}`.
///
/// Row 0 `(0, 1, 2, 4, …)` coincides with the Toeplitz continuation of the
/// band, so no override is stored.
pub fn build_partition_matrix(n: usize) -> Result<HTMatrix> {
    let upper = (0..n as u32)
        .map(|m| if m == 0 { BigInt::zero() } else { pow2(m - 1) })
        .collect();
    HTMatrix::toeplitz(n, BigInt::one(), upper)
}

/// `a_j = Σ_{i=2}^{j} C(j-2, i-2) c_i` for `j = 2..=upto`, where
/// `counts[0] = c_2`.
pub fn relation_coefficients(counts: &[BigInt], upto: usize) -> Result<Vec<BigInt>> {
    if upto < 2 {
        return Ok(Vec::new());
    }
    let needed = upto - 1;
    if counts.len() < needed {
        return Err(Error::SequenceTooShort {
            needed,
            got: counts.len(),
        });
    }
    Ok((2..=upto as i64)
        .map(|j| {
            (2..=j)
                .map(|i| binomial(j - 2, i - 2) * &counts[(i - 2) as usize])
                .sum()
        })
        .collect())
}

/// `R_n`: subdiagonal 1, zero diagonal, offset `m >= 1` holds `a_{m+1}`.
/// `counts` supplies `c_2, …, c_n`.
pub fn build_relation_matrix(n: usize, counts: &[BigInt]) -> Result<HTMatrix> {
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    let a = relation_coefficients(counts, n)?;
    let upper = std::iter::once(BigInt::zero())
        .chain(a.into_iter().take(n - 1))
        .collect();
    HTMatrix::toeplitz(n, BigInt::one(), upper)
}

/// The transfer matrix of a Riordan triple: row 0 is `z_1, …, z_n`, row
/// `i >= 1` is the A-sequence shifted right by `i - 1`.
pub fn build_from_riordan(t: &RiordanTriple, n: usize) -> Result<HTMatrix> {
    if t.a.first().is_none_or(Zero::is_zero) {
        return Err(Error::ImproperRiordan);
    }
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    if t.z.len() < n {
        return Err(Error::SequenceTooShort {
            needed: n,
            got: t.z.len(),
        });
    }
    if t.a.len() < n {
        return Err(Error::SequenceTooShort {
            needed: n,
            got: t.a.len(),
        });
    }
    // Band offset m is a_{m+2} in the A-sequence's 1-based numbering. The top
    // offset n-1 only occurs at (0, n-1), which the Z-sequence fixes.
    let mut upper: Vec<BigInt> = t.a.iter().skip(1).take(n).cloned().collect();
    if upper.len() < n {
        upper.push(t.z[n - 1].clone());
    }
    HTMatrix::with_first_row(n, t.a[0].clone(), upper, Some(t.z[..n].to_vec()))
}

/// Iterate the class matrix from the initial vector up to level `n_max`.
///
/// The matrix is sized `n_max + 2` so no reachable degree is truncated. For
/// the relation class the supplied counts must cover `c_2, …, c_{n_max}`;
/// band entries past that only ever multiply zero vector entries at levels up
/// to `n_max`, so they are filled with zeros.
pub fn count_sequence(spec: &GraphClassSpec, n_max: usize) -> Result<Vec<LevelCount>> {
    if n_max < spec.start {
        return Err(Error::InvalidParameter(format!(
            "n_max = {n_max} is below the start level {}",
            spec.start
        )));
    }
    let size = n_max + 2;
    let matrix = match &spec.class {
        GraphClass::Relation { counts } => {
            let needed = n_max.saturating_sub(1);
            if counts.len() < needed {
                return Err(Error::SequenceTooShort {
                    needed,
                    got: counts.len(),
                });
            }
            let mut padded = counts[..needed].to_vec();
            padded.resize(size - 1, BigInt::zero());
            build_relation_matrix(size, &padded)?
        }
        class => class.matrix(size)?,
    };
    let mut v = spec
        .initial
        .resized(size)
        .ok_or_else(|| Error::InvalidParameter("initial vector longer than matrix".into()))?;
    let mut out = Vec::with_capacity(n_max + 1 - spec.start);
    loop {
        let len = spec.class.reachable_len(v.level());
        let vector = v.resized(len).ok_or_else(|| {
            Error::InvalidParameter(format!(
                "nonzero entry beyond reachable degree at level {}",
                v.level()
            ))
        })?;
        let total = vector.total();
        out.push(LevelCount {
            level: v.level(),
            vector,
            total,
        });
        if v.level() >= n_max {
            break;
        }
        v = matrix.apply(&v)?;
    }
    Ok(out)
}

/// `C((k-1)r, r) / ((k-2)r + 1)`, the number of k-angulations with `r` k-gons.
pub fn k_angulation_total(k: i64, r: i64) -> Result<BigInt> {
    if k < 3 {
        return Err(Error::InvalidK(k));
    }
    if r < 1 {
        return Err(Error::InvalidParameter(format!("r must be >= 1, got {r}")));
    }
    let num = binomial((k - 1) * r, r);
    let den = BigInt::from((k - 2) * r + 1);
    let (q, rem) = num.div_rem(&den);
    assert!(rem.is_zero(), "k-angulation count must be an integer");
    Ok(q)
}
