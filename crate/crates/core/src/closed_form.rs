//! Direct evaluation of the closed-form root-degree counts, independent of
//! matrix iteration.
//!
//! Every formula is evaluated as written: multiply first, divide last and
//! assert that the division is exact. Summation ranges are the printed ones;
//! out-of-range binomials vanish. The connected-graph and partition formulas
//! come from coefficient extraction in `(1 - t)^{-m}` and need the
//! generalized binomial `C(-1, 0) = 1` at their boundary terms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::exact::{binomial, binomial_generalized, pow2, CountVector};
use crate::production::GraphClass;

/// One evaluated entry `v_j^n` of a closed-form vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryFormulaResult {
    pub class: &'static str,
    pub level: usize,
    pub j: usize,
    pub value: BigInt,
}

fn exact_div(num: BigInt, den: i64, what: &str) -> BigInt {
    let (q, r) = num.div_rem(&BigInt::from(den));
    assert!(r.is_zero(), "{what}: non-integer closed-form value");
    assert!(!q.is_negative(), "{what}: negative closed-form value");
    q
}

/// k-angulations with `r` k-gons whose root has degree `j - 1`:
/// `(j / r) C((k-1)r - j - 1, r - j)`.
pub fn kangulation_entry(k: i64, r: i64, j: i64) -> BigInt {
    if k < 3 || r < 1 || j < 1 || j > r {
        return BigInt::zero();
    }
    let num = BigInt::from(j) * binomial((k - 1) * r - j - 1, r - j);
    exact_div(num, r, "k-angulation entry")
}

/// Geometric graphs on `n` vertices whose root has visibility degree `j - 1`.
pub fn geometric_entry(n: i64, j: i64) -> BigInt {
    if n < 2 || j < 1 || j > n - 1 {
        return BigInt::zero();
    }
    let sum: BigInt = (j..=n - 1)
        .map(|k| {
            let term = binomial(n - 1, k) * binomial(n + k - j - 2, k - j) * pow2(k as u32);
            if (n - 1 - k) % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum();
    let num = BigInt::from(j) * pow2((n - 1 - j) as u32) * sum;
    exact_div(num, n - 1, "geometric entry")
}

/// Connected plane graphs on `n` vertices whose root has visibility degree
/// `j - 1`. The factor `2^{n-1} (-1/2)^k` is the integer `(-1)^k 2^{n-1-k}`.
pub fn connected_entry(n: i64, j: i64) -> BigInt {
    if n < 2 || j < 1 || j > n - 1 {
        return BigInt::zero();
    }
    let sum: BigInt = (0..=n - 1)
        .map(|k| {
            let inner: BigInt = (0..=n - j - 1)
                .map(|l| {
                    binomial_generalized(n - 2 - k + l, l)
                        * binomial_generalized(k + n - l - j - 2, n - l - j - 1)
                        * pow2(l as u32)
                })
                .sum();
            let term = binomial(n - 1, k) * pow2((n - 1 - k) as u32) * inner;
            if k % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum();
    exact_div(BigInt::from(j) * sum, n - 1, "connected entry")
}

/// Non-crossing partitions of `[n]` whose root has isolation degree `j - 1`,
/// for `j = 1..=n+1`.
pub fn partition_entry(n: i64, j: i64) -> BigInt {
    if n < 1 || j < 1 || j > n + 1 {
        return BigInt::zero();
    }
    let lower = Integer::div_ceil(&(n + j + 1), &2);
    if lower > n + 1 {
        return BigInt::zero();
    }
    let sum: BigInt = (lower..=n + 1)
        .map(|k| {
            let e = 2 * k - n - j - 1;
            binomial(n + 1, k) * binomial_generalized(k - j - 1, e) * pow2(e as u32)
        })
        .sum();
    exact_div(BigInt::from(j) * sum, n + 1, "partition entry")
}

/// Checks `Σ_{j=0}^{n} C(j+m-1, m-1) C(m(t+1), n-j-t) (-1)^j = C(mt, n-t)`
/// with exact arithmetic.
///
/// For `m = 0` the left factor `C(j-1, -1)` vanishes for every `j` under the
/// out-of-range convention while the right side is `C(0, n-t)`; that case
/// is evaluated with the coefficient reading of `C(j+m-1, j)` instead, which
/// is the form the identity is derived from.
pub fn lemma1_check(t: i64, m: i64, n: i64) -> bool {
    let (lhs, rhs) = lemma1_sides(t, m, n);
    lhs == rhs
}

/// Both sides of the summation identity, left then right.
pub fn lemma1_sides(t: i64, m: i64, n: i64) -> (BigInt, BigInt) {
    let lhs: BigInt = (0..=n)
        .map(|j| {
            // C(j+m-1, m-1) = C(j+m-1, j) for m >= 1; the latter also covers m = 0.
            let first = if m >= 1 {
                binomial(j + m - 1, m - 1)
            } else {
                binomial_generalized(j + m - 1, j)
            };
            let term = first * binomial(m * (t + 1), n - j - t);
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum();
    (lhs, binomial(m * t, n - t))
}

/// Entry `j` (1-based) of the closed-form vector for `class` at `level`.
/// `None` for the relation class, which has no closed form.
pub fn entry(class: &GraphClass, level: usize, j: usize) -> Option<EntryFormulaResult> {
    let (n, j_i) = (level as i64, j as i64);
    let value = match class {
        GraphClass::KAngulation { k } => kangulation_entry(*k, n, j_i),
        GraphClass::Geometric => geometric_entry(n, j_i),
        GraphClass::Connected => connected_entry(n, j_i),
        GraphClass::NonCrossingPartition => partition_entry(n, j_i),
        GraphClass::Relation { .. } => return None,
    };
    Some(EntryFormulaResult {
        class: class.name(),
        level,
        j,
        value,
    })
}

/// Whole closed-form vector at `level`, trimmed to the reachable degrees.
pub fn closed_form_vector(class: &GraphClass, level: usize) -> Option<CountVector> {
    let len = class.reachable_len(level);
    let entries = (1..=len)
        .map(|j| entry(class, level, j).map(|e| e.value))
        .collect::<Option<Vec<_>>>()?;
    Some(CountVector::new(level, entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn row(f: impl Fn(i64) -> BigInt, range: std::ops::RangeInclusive<i64>) -> Vec<BigInt> {
        range.map(f).collect()
    }

    #[test]
    fn kangulation_examples() {
        assert_eq!(kangulation_entry(3, 3, 3), BigInt::from(1));
        assert_eq!(kangulation_entry(3, 3, 1), BigInt::from(2));
        let sums: Vec<BigInt> = (1..=6)
            .map(|r| (1..=r).map(|j| kangulation_entry(3, r, j)).sum())
            .collect();
        assert_eq!(sums, ints(&[1, 2, 5, 14, 42, 132]));
        assert_eq!(kangulation_entry(3, 3, 4), BigInt::zero());
        assert_eq!(kangulation_entry(3, 3, 0), BigInt::zero());
    }

    #[test]
    fn geometric_examples() {
        assert_eq!(row(|j| geometric_entry(4, j), 1..=3), ints(&[24, 16, 8]));
        assert_eq!(geometric_entry(2, 1), BigInt::from(2));
        assert_eq!(row(|j| geometric_entry(5, j), 1..=4), ints(&[176, 112, 48, 16]));
        assert_eq!(geometric_entry(5, 5), BigInt::zero());
    }

    #[test]
    fn geometric_last_entry_is_power_of_two() {
        for n in 3..=16 {
            assert_eq!(geometric_entry(n, n - 1), pow2((n - 1) as u32), "n = {n}");
        }
    }

    #[test]
    fn connected_examples() {
        assert_eq!(row(|j| connected_entry(5, j), 1..=4), ints(&[105, 41, 9, 1]));
        assert_eq!(connected_entry(2, 1), BigInt::from(1));
        assert_eq!(row(|j| connected_entry(4, j), 1..=3), ints(&[16, 6, 1]));
        assert_eq!(connected_entry(4, 4), BigInt::zero());
    }

    #[test]
    fn partition_examples() {
        assert_eq!(row(|j| partition_entry(3, j), 1..=4), ints(&[2, 2, 0, 1]));
        assert_eq!(row(|j| partition_entry(4, j), 1..=5), ints(&[6, 4, 3, 0, 1]));
        let sums: Vec<BigInt> = (1..=6)
            .map(|n| (1..=n + 1).map(|j| partition_entry(n, j)).sum())
            .collect();
        assert_eq!(sums, ints(&[1, 2, 5, 14, 42, 132]));
    }

    #[test]
    fn partition_trailing_pattern() {
        for n in 2..=14 {
            assert_eq!(partition_entry(n, n + 1), BigInt::from(1));
            assert_eq!(partition_entry(n, n), BigInt::zero());
        }
    }

    #[test]
    fn lemma1_examples() {
        assert!(lemma1_check(1, 1, 2));
        assert_eq!(lemma1_sides(1, 1, 2), (BigInt::from(1), BigInt::from(1)));
        for m in 0..5 {
            for n in 0..5 {
                assert!(lemma1_check(0, m, n), "t=0, m={m}, n={n}");
            }
        }
    }

    #[test]
    fn relation_has_no_closed_form() {
        let class = GraphClass::Relation { counts: vec![] };
        assert!(closed_form_vector(&class, 3).is_none());
    }
}
