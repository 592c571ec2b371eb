use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(n, k)` with the out-of-range convention: zero whenever `k < 0`,
/// `n < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    falling_ratio(n, k.min(n - k))
}

/// `C(n, k)` extended to negative upper index through
/// `C(n, k) = (-1)^k C(k - n - 1, k)`. Still zero for `k < 0`.
///
/// Coefficient extraction from `(1 - t)^{-m}` with `m = 0` produces terms like
/// `C(-1, 0) = 1`; the entry formulas for connected graphs and non-crossing
/// partitions depend on it.
pub fn binomial_generalized(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 {
        return binomial(n, k);
    }
    let magnitude = binomial(k - n - 1, k);
    if k % 2 == 0 {
        magnitude
    } else {
        -magnitude
    }
}

/// `2^e` for `e >= 0`.
pub fn pow2(e: u32) -> BigInt {
    BigInt::one() << e
}

fn falling_ratio(n: i64, k: i64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}
