use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::IntPolynomial;
use crate::error::{Error, Result};

/// Finite upper Hessenberg-Toeplitz matrix.
///
/// The band holds `a_{-1}, a_0, a_1, …, a_{n-1}`; entry `(i, j)` is
/// `a_{j-i}` for `j >= i - 1` and zero below the subdiagonal. Row 0 may be
/// replaced by an explicit override when a Riordan Z-sequence is not the
/// Toeplitz continuation of the A-sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HTMatrix {
    size: usize,
    /// `band[m + 1] = a_m` for `m = -1, 0, …, size - 1`.
    band: Vec<BigInt>,
    first_row: Option<Vec<BigInt>>,
}

impl HTMatrix {
    /// Pure Hessenberg-Toeplitz matrix from `a_{-1}` and `a_0, …, a_{size-1}`.
    pub fn toeplitz(size: usize, subdiagonal: BigInt, upper: Vec<BigInt>) -> Result<Self> {
        Self::with_first_row(size, subdiagonal, upper, None)
    }

    /// Like [`HTMatrix::toeplitz`] with an explicit row 0. An override equal
    /// to the Toeplitz row is dropped, so `is_toeplitz` reflects the entries.
    pub fn with_first_row(
        size: usize,
        subdiagonal: BigInt,
        upper: Vec<BigInt>,
        first_row: Option<Vec<BigInt>>,
    ) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyMatrix);
        }
        if upper.len() < size {
            return Err(Error::SequenceTooShort {
                needed: size,
                got: upper.len(),
            });
        }
        let mut band = Vec::with_capacity(size + 1);
        band.push(subdiagonal);
        band.extend(upper.into_iter().take(size));
        let first_row = match first_row {
            Some(row) if row.len() < size => {
                return Err(Error::SequenceTooShort {
                    needed: size,
                    got: row.len(),
                })
            }
            Some(mut row) => {
                row.truncate(size);
                (row[..] != band[1..]).then_some(row)
            }
            None => None,
        };
        Ok(Self {
            size,
            band,
            first_row,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `a_{-1}`
    pub fn subdiagonal(&self) -> &BigInt {
        &self.band[0]
    }

    /// Band value `a_offset` for `offset` in `-1..size`.
    pub fn band(&self, offset: isize) -> Option<&BigInt> {
        usize::try_from(offset + 1).ok().and_then(|i| self.band.get(i))
    }

    /// `a_0, …, a_{size-1}`
    pub fn upper_band(&self) -> &[BigInt] {
        &self.band[1..]
    }

    pub fn first_row_override(&self) -> Option<&[BigInt]> {
        self.first_row.as_deref()
    }

    pub fn is_toeplitz(&self) -> bool {
        self.first_row.is_none()
    }

    pub fn entry(&self, i: usize, j: usize) -> BigInt {
        assert!(i < self.size && j < self.size, "index out of range");
        if i == 0 {
            if let Some(row) = &self.first_row {
                return row[j].clone();
            }
        }
        if j + 1 < i {
            return BigInt::zero();
        }
        self.band[j + 1 - i].clone()
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.size)
            .map(|i| (0..self.size).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        (0..self.size).map(|j| self.entry(i, j)).collect()
    }

    /// Leading `k × k` principal submatrix.
    pub fn truncate(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.size {
            return Err(Error::InvalidParameter(format!(
                "cannot truncate size {} matrix to {k}",
                self.size
            )));
        }
        Self::with_first_row(
            k,
            self.band[0].clone(),
            self.band[1..=k].to_vec(),
            self.first_row.clone(),
        )
    }

    /// `v^{i+1} = A v^i`; the level of the result is one more than `v`'s.
    pub fn apply(&self, v: &CountVector) -> Result<CountVector> {
        if v.len() != self.size {
            return Err(Error::DimensionMismatch {
                matrix: self.size,
                vector: v.len(),
            });
        }
        let entries = (0..self.size)
            .map(|i| {
                let start = i.saturating_sub(1);
                (start..self.size)
                    .filter(|&j| !v.entries[j].is_zero())
                    .map(|j| self.entry(i, j) * &v.entries[j])
                    .sum()
            })
            .collect();
        Ok(CountVector {
            level: v.level + 1,
            entries,
        })
    }
}

impl fmt::Display for CountVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for HTMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .rows()
            .into_iter()
            .map(|r| r.into_iter().map(|c| c.to_string()).collect())
            .collect();
        let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in rows {
            let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Counts `v^i` partitioned by root degree: `entries[d]` counts the objects at
/// `level` whose root has degree `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CountVector {
    level: usize,
    entries: Vec<BigInt>,
}

impl CountVector {
    pub fn new(level: usize, entries: Vec<BigInt>) -> Self {
        Self { level, entries }
    }

    pub fn from_u64s(level: usize, entries: &[u64]) -> Self {
        Self::new(level, entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn zeros(level: usize, len: usize) -> Self {
        Self::new(level, vec![BigInt::zero(); len])
    }

    /// Unit vector with `value` at degree `degree`.
    pub fn unit(level: usize, len: usize, degree: usize, value: BigInt) -> Self {
        let mut v = Self::zeros(level, len);
        v.entries[degree] = value;
        v
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// Number of objects whose root has degree `d` (zero past the end).
    pub fn by_degree(&self, d: usize) -> BigInt {
        self.entries.get(d).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigInt {
        self.entries.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|e| !e.is_negative())
    }

    /// Resize to `len`, padding with zeros. Truncation requires the dropped
    /// tail to be zero.
    pub fn resized(&self, len: usize) -> Option<Self> {
        if len < self.entries.len() && self.entries[len..].iter().any(|e| !e.is_zero()) {
            return None;
        }
        let mut entries = self.entries.clone();
        entries.resize(len, BigInt::zero());
        Some(Self::new(self.level, entries))
    }

    /// Index one past the last nonzero entry.
    pub fn support_len(&self) -> usize {
        self.entries
            .iter()
            .rposition(|e| !e.is_zero())
            .map_or(0, |i| i + 1)
    }
}

/// `det(A - λI)` by fraction-free (Bareiss) elimination over `Z[λ]`.
///
/// Independent of the Toeplitz structure, so it also covers matrices with a
/// row-0 override. The leading principal minors of `A - λI` are nonzero
/// polynomials, so no pivoting is required.
pub fn poly_determinant_charpoly(m: &HTMatrix) -> IntPolynomial {
    let n = m.size();
    let mut a: Vec<Vec<IntPolynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = IntPolynomial::constant(m.entry(i, j));
                    if i == j {
                        c - IntPolynomial::lambda()
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    let mut prev = IntPolynomial::one();
    for k in 0..n.saturating_sub(1) {
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step divides exactly");
            }
        }
        prev = a[k][k].clone();
    }
    a[n - 1][n - 1].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn geometric(n: usize) -> HTMatrix {
        let upper = (0..n).map(|m| BigInt::from(1u64 << (m + 1))).collect();
        HTMatrix::toeplitz(n, 2.into(), upper).unwrap()
    }

    /// Leibniz expansion over all permutations; only for tiny sizes.
    fn leibniz(m: &HTMatrix) -> IntPolynomial {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.size();
        let mut total = IntPolynomial::zero();
        for p in perms(n) {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let mut term = IntPolynomial::one();
            for (i, &j) in p.iter().enumerate() {
                let mut e = IntPolynomial::constant(m.entry(i, j));
                if i == j {
                    e = e - IntPolynomial::lambda();
                }
                term = term * e;
            }
            total = if inversions % 2 == 0 { total + term } else { total - term };
        }
        total
    }

    #[test]
    fn hessenberg_structure() {
        let g = geometric(5);
        for i in 0..5 {
            for j in 0..5 {
                if j + 1 < i {
                    assert!(g.entry(i, j).is_zero());
                } else {
                    assert_eq!(g.entry(i, j), g.band(j as isize - i as isize).unwrap().clone());
                }
            }
        }
        assert_eq!(g.row(0), ints(&[2, 4, 8, 16, 32]));
        assert_eq!(g.row(1), ints(&[2, 2, 4, 8, 16]));
    }

    #[test]
    fn override_equal_to_toeplitz_row_is_dropped() {
        let m = HTMatrix::with_first_row(3, 1.into(), ints(&[0, 1, 2]), Some(ints(&[0, 1, 2])))
            .unwrap();
        assert!(m.is_toeplitz());
        let m = HTMatrix::with_first_row(3, 1.into(), ints(&[0, 1, 2]), Some(ints(&[5, 1, 2])))
            .unwrap();
        assert!(!m.is_toeplitz());
        assert_eq!(m.row(0), ints(&[5, 1, 2]));
        assert_eq!(m.row(1), ints(&[1, 0, 1]));
    }

    #[test]
    fn mat_vec_examples() {
        let g6 = geometric(6);
        let v2 = CountVector::from_u64s(2, &[2, 0, 0, 0, 0, 0]);
        let v3 = g6.apply(&v2).unwrap();
        assert_eq!(v3, CountVector::from_u64s(3, &[4, 4, 0, 0, 0, 0]));
        let zero = CountVector::zeros(7, 6);
        assert_eq!(g6.apply(&zero).unwrap(), CountVector::zeros(8, 6));
        assert!(matches!(
            g6.apply(&CountVector::zeros(1, 5)),
            Err(Error::DimensionMismatch { matrix: 6, vector: 5 })
        ));
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(
            poly_determinant_charpoly(&geometric(1)),
            IntPolynomial::from_i64s(&[2, -1])
        );
        let id = HTMatrix::toeplitz(1, 0.into(), ints(&[1])).unwrap();
        assert_eq!(poly_determinant_charpoly(&id), IntPolynomial::from_i64s(&[1, -1]));
        assert_eq!(
            poly_determinant_charpoly(&geometric(4)),
            IntPolynomial::from_i64s(&[-16, 0, 0, -8, 1])
        );
    }

    #[test]
    fn determinant_matches_leibniz() {
        let with_row = HTMatrix::with_first_row(
            5,
            3.into(),
            ints(&[1, -2, 5, 0, 7]),
            Some(ints(&[4, 0, -1, 2, 9])),
        )
        .unwrap();
        for m in [geometric(5), with_row] {
            let d = poly_determinant_charpoly(&m);
            assert_eq!(d, leibniz(&m));
            assert_eq!(d.degree(), Some(m.size()));
            assert_eq!(d.leading().unwrap(), &BigInt::from(if m.size() % 2 == 0 { 1 } else { -1 }));
        }
    }

    #[test]
    fn resize_guards_nonzero_tail() {
        let v = CountVector::from_u64s(3, &[1, 2, 0, 0]);
        assert_eq!(v.support_len(), 2);
        assert_eq!(v.resized(2).unwrap().entries(), &ints(&[1, 2])[..]);
        assert!(v.resized(1).is_none());
        assert_eq!(v.resized(6).unwrap().len(), 6);
    }
}
