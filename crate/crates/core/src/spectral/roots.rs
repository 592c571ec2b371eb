//! Real root isolation by Sturm sequences and refinement by exact sign
//! bisection on dyadic rationals.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::IntPolynomial;

/// Working precision in bits: roots are bracketed to width `2^-bits`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Precision {
    pub bits: u32,
}

impl Precision {
    pub const DEFAULT_BITS: u32 = 256;
    pub const ENV_VAR: &'static str = "CONVEX_COUNT_PRECISION";

    pub fn new(bits: u32) -> Self {
        Self { bits: bits.max(1) }
    }

    /// Reads `CONVEX_COUNT_PRECISION`, falling back to 256 bits.
    pub fn from_env() -> Self {
        std::env::var(Self::ENV_VAR)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map_or_else(Self::default, Self::new)
    }

    /// Smallest precision whose bracket width is at most `tol`.
    pub fn from_tolerance(tol: f64) -> Self {
        if !(tol > 0.0) || !tol.is_finite() {
            return Self::default();
        }
        Self::new((-tol.log2()).ceil().max(1.0) as u32)
    }

    /// `2^-bits`
    pub fn epsilon(&self) -> BigRational {
        BigRational::new(BigInt::one(), BigInt::one() << self.bits)
    }

    pub fn epsilon_f64(&self) -> f64 {
        2f64.powi(-(self.bits as i32))
    }
}

impl Default for Precision {
    fn default() -> Self {
        Self::new(Self::DEFAULT_BITS)
    }
}

/// Interval `[lo, hi]` holding exactly one real root; `lo == hi` when the
/// root was hit exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigInt::from(2)
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn to_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }
}

/// Sturm chain of a square-free polynomial, reduced by positive contents only
/// so that every sign is preserved.
struct SturmChain(Vec<IntPolynomial>);

impl SturmChain {
    fn new(p: &IntPolynomial) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            if chain[n - 1].degree() == Some(0) {
                break;
            }
            let r = -chain[n - 2].pseudo_rem(&chain[n - 1]);
            let r = divide_content(&r);
            if r.is_zero() {
                break;
            }
            chain.push(r);
        }
        Self(chain)
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        count_variations(self.0.iter().map(|q| q.sign_at(x)))
    }

    /// Sign variations as `x -> ±∞`.
    fn variations_at_infinity(&self, positive: bool) -> usize {
        count_variations(self.0.iter().map(|q| {
            let d = q.degree().unwrap_or(0);
            let lead = q.leading().map_or(Ordering::Equal, |c| c.sign_ord());
            if positive || d % 2 == 0 {
                lead
            } else {
                lead.reverse()
            }
        }))
    }
}

trait SignOrd {
    fn sign_ord(&self) -> Ordering;
}

impl SignOrd for BigInt {
    fn sign_ord(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

fn count_variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for s in signs.filter(|s| *s != Ordering::Equal) {
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn divide_content(p: &IntPolynomial) -> IntPolynomial {
    let g = p.content();
    if g.is_zero() || g.is_one() {
        return p.clone();
    }
    IntPolynomial::new(p.coeffs().iter().map(|c| c / &g).collect())
}

/// Number of distinct real roots.
pub fn count_real_roots(p: &IntPolynomial) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let chain = SturmChain::new(&p.square_free_part());
    chain
        .variations_at_infinity(false)
        .saturating_sub(chain.variations_at_infinity(true))
}

/// All distinct real roots of `p` in increasing order, each bracketed to
/// width at most `2^-precision.bits`.
pub fn real_roots(p: &IntPolynomial, precision: Precision) -> Vec<RootInterval> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let q = p.square_free_part();
    let chain = SturmChain::new(&q);
    let bound = BigRational::from_integer(cauchy_bound(&q));
    let mut isolated = Vec::new();
    isolate(&chain, -bound.clone(), bound, &mut isolated);
    let eps = precision.epsilon();
    isolated
        .into_iter()
        .map(|(lo, hi)| refine(&q, lo, hi, &eps))
        .collect()
}

/// `1 + ceil(max |c_i| / |c_d|)`; every root lies strictly inside.
fn cauchy_bound(q: &IntPolynomial) -> BigInt {
    let lead = q.leading().expect("nonconstant").abs();
    let max = q.coeffs()[..q.coeffs().len() - 1]
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_default();
    BigInt::one() + (max + &lead - 1) / lead
}

/// Splits `(lo, hi]` until every piece holds at most one root.
fn isolate(
    chain: &SturmChain,
    lo: BigRational,
    hi: BigRational,
    out: &mut Vec<(BigRational, BigRational)>,
) {
    let count = chain
        .variations_at(&lo)
        .saturating_sub(chain.variations_at(&hi));
    match count {
        0 => {}
        1 => out.push((lo, hi)),
        _ => {
            let mid = (&lo + &hi) / BigInt::from(2);
            isolate(chain, lo, mid.clone(), out);
            isolate(chain, mid, hi, out);
        }
    }
}

/// Bisection on `(lo, hi]` holding exactly one simple root of `q`.
///
/// Only the sign at `hi` is consulted: left of the root the sign is the
/// opposite one, so an endpoint that happens to be a neighbouring root does
/// not disturb the search.
fn refine(q: &IntPolynomial, mut lo: BigRational, mut hi: BigRational, eps: &BigRational) -> RootInterval {
    let hi_sign = q.sign_at(&hi);
    if hi_sign == Ordering::Equal {
        return RootInterval { lo: hi.clone(), hi };
    }
    let two = BigInt::from(2);
    while &(&hi - &lo) > eps {
        let mid = (&lo + &hi) / &two;
        match q.sign_at(&mid) {
            Ordering::Equal => {
                return RootInterval {
                    lo: mid.clone(),
                    hi: mid,
                }
            }
            s if s == hi_sign => hi = mid,
            _ => lo = mid,
        }
    }
    // An integer root inside the final bracket is reported exactly.
    let k = BigRational::from_integer(hi.floor().to_integer());
    if k > lo && q.sign_at(&k) == Ordering::Equal {
        return RootInterval { lo: k.clone(), hi: k };
    }
    RootInterval { lo, hi }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn counts_distinct_roots() {
        assert_eq!(count_real_roots(&p(&[-2, 0, 1])), 2);
        assert_eq!(count_real_roots(&p(&[1, 0, 1])), 0);
        // (λ-1)^2 (λ+3)
        let f = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[3, 1]);
        assert_eq!(count_real_roots(&f), 2);
        assert_eq!(count_real_roots(&p(&[5])), 0);
    }

    #[test]
    fn brackets_sqrt_two() {
        let roots = real_roots(&p(&[-2, 0, 1]), Precision::new(80));
        assert_eq!(roots.len(), 2);
        let r = roots[1].to_f64();
        assert!((r - 2f64.sqrt()).abs() < 1e-15);
        assert!(roots[1].width() <= Precision::new(80).epsilon());
        assert!((roots[0].to_f64() + 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn exact_rational_roots_are_hit() {
        // λ(λ - 1)(λ + 2)
        let f = &(&p(&[0, 1]) * &p(&[-1, 1])) * &p(&[2, 1]);
        let roots = real_roots(&f, Precision::new(40));
        let approx: Vec<f64> = roots.iter().map(RootInterval::to_f64).collect();
        assert_eq!(approx.len(), 3);
        for (got, want) in approx.iter().zip([-2.0, 0.0, 1.0]) {
            assert!((got - want).abs() < 1e-11, "{got} vs {want}");
        }
    }

    #[test]
    fn precision_from_tolerance() {
        assert_eq!(Precision::from_tolerance(0.5).bits, 1);
        assert_eq!(Precision::from_tolerance(1e-40).bits, 133);
        assert_eq!(Precision::from_tolerance(-1.0), Precision::default());
    }
}
