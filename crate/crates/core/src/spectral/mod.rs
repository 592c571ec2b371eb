//! Characteristic polynomials of Hessenberg-Toeplitz production matrices,
//! eigenvectors built from them and the dominant real eigenvalue.

mod roots;

pub use roots::{count_real_roots, real_roots, Precision, RootInterval};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, poly_determinant_charpoly, HTMatrix, IntPolynomial};
use crate::production::GraphClass;

/// `d_0, d_1, …, d_n` for the leading principal submatrices of one matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPolySequence {
    pub label: String,
    pub polys: Vec<IntPolynomial>,
}

impl CharPolySequence {
    pub fn last(&self) -> &IntPolynomial {
        self.polys.last().expect("sequence holds d_0")
    }
}

/// How a characteristic polynomial is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CharPolyMethod {
    /// Three-term-plus-tail recurrence on the band.
    Recurrence,
    /// Per-class closed-form summation.
    Closed,
    /// Fraction-free elimination of `A - λI`.
    Determinant,
}

impl CharPolyMethod {
    pub const ALL: [Self; 3] = [Self::Recurrence, Self::Closed, Self::Determinant];

    pub fn name(&self) -> &'static str {
        match self {
            Self::Recurrence => "recurrence",
            Self::Closed => "closed",
            Self::Determinant => "determinant",
        }
    }
}

/// `d_n = (a_0 - λ) d_{n-1} + Σ_{i=2}^{n} (-1)^{i+1} a_{i-1} a_{-1}^{i-1} d_{n-i}`,
/// `d_0 = 1`, for `n` up to the matrix size.
pub fn charpoly_recurrence(m: &HTMatrix, n: usize) -> Result<CharPolySequence> {
    if !m.is_toeplitz() {
        return Err(Error::NotToeplitz);
    }
    if n > m.size() {
        return Err(Error::InvalidParameter(format!(
            "recurrence to n = {n} needs a matrix of size >= {n}, got {}",
            m.size()
        )));
    }
    let sub = m.subdiagonal();
    let a0_minus_lambda = IntPolynomial::new(vec![m.upper_band()[0].clone(), -BigInt::one()]);
    let mut polys = vec![IntPolynomial::one()];
    for k in 1..=n {
        let mut d = &a0_minus_lambda * &polys[k - 1];
        let mut sub_pow = BigInt::one();
        for i in 2..=k {
            sub_pow *= sub;
            let mut c = &m.upper_band()[i - 1] * &sub_pow;
            if i % 2 == 0 {
                c = -c;
            }
            d = d + polys[k - i].scale(&c);
        }
        polys.push(d);
    }
    Ok(CharPolySequence {
        label: format!("size-{} matrix", m.size()),
        polys,
    })
}

fn rational_pow(base: i64, e: i64) -> BigRational {
    let p = BigInt::from(base).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

fn into_int_poly(coeffs: Vec<BigRational>, what: &str) -> IntPolynomial {
    IntPolynomial::new(
        coeffs
            .into_iter()
            .map(|c| {
                assert!(c.is_integer(), "{what}: non-integer coefficient {c}");
                c.to_integer()
            })
            .collect(),
    )
}

/// `k_r = Σ_ℓ (-1)^ℓ C((k-2)(ℓ+1), r-ℓ) λ^ℓ`
pub fn charpoly_closed_kangulation(k: i64, r: usize) -> Result<IntPolynomial> {
    if k < 3 {
        return Err(Error::InvalidK(k));
    }
    let r = r as i64;
    Ok(IntPolynomial::new(
        (0..=r)
            .map(|l| {
                let c = binomial((k - 2) * (l + 1), r - l);
                if l % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .collect(),
    ))
}

/// `g_n = Σ_t Σ_{k=t}^{n} (-1)^k C(k, t) C(t+1, n-k) 2^{2n-t-k} λ^t`
pub fn charpoly_closed_geometric(n: usize) -> IntPolynomial {
    let n = n as i64;
    IntPolynomial::new(
        (0..=n)
            .map(|t| {
                (t..=n)
                    .map(|k| {
                        let c = binomial(k, t)
                            * binomial(t + 1, n - k)
                            * (BigInt::one() << (2 * n - t - k) as u32);
                        if k % 2 == 0 {
                            c
                        } else {
                            -c
                        }
                    })
                    .sum()
            })
            .collect(),
    )
}

/// `c_n = Σ_t Σ_{ℓ=0}^{t} C(t,ℓ) (-1)^t 2^{t-ℓ} 3^{e} [2 C(ℓ, e) + 9 C(ℓ+1, e+2)] λ^t`
/// with `e = n + 2ℓ - 3t - 2`.
///
/// Terms whose bracket vanishes are skipped before the power of 3 is formed;
/// a nonzero bracket with `e < 0` is evaluated in exact rationals and the
/// total is checked to be integral.
pub fn charpoly_closed_connected(n: usize) -> IntPolynomial {
    let n = n as i64;
    let coeffs = (0..=n)
        .map(|t| {
            let mut acc = BigRational::zero();
            for l in 0..=t {
                let e = n + 2 * l - 3 * t - 2;
                let bracket = BigInt::from(2) * binomial(l, e) + BigInt::from(9) * binomial(l + 1, e + 2);
                if bracket.is_zero() {
                    continue;
                }
                let mut term = BigRational::from_integer(
                    binomial(t, l) * (BigInt::one() << (t - l) as u32) * bracket,
                ) * rational_pow(3, e);
                if t % 2 == 1 {
                    term = -term;
                }
                acc += term;
            }
            acc
        })
        .collect();
    into_int_poly(coeffs, "connected characteristic polynomial")
}

/// `b_n = Σ_t Σ_k Σ_{ℓ=0}^{k} C(k,t) C(t,ℓ) (-1)^k 2^{2k-n+t-2ℓ}
/// [4 C(k-t, 2k-n-ℓ+1) + C(k-t, 2k-n-ℓ)] λ^t`, with the same zero-bracket
/// rule for negative powers of 2.
pub fn charpoly_closed_partition(n: usize) -> IntPolynomial {
    let n = n as i64;
    let coeffs = (0..=n)
        .map(|t| {
            let mut acc = BigRational::zero();
            for k in 0..=n {
                for l in 0..=k {
                    let g = 2 * k - n - l;
                    let bracket = BigInt::from(4) * binomial(k - t, g + 1) + binomial(k - t, g);
                    if bracket.is_zero() {
                        continue;
                    }
                    let mut term = BigRational::from_integer(binomial(k, t) * binomial(t, l) * bracket)
                        * rational_pow(2, 2 * k - n + t - 2 * l);
                    if k % 2 == 1 {
                        term = -term;
                    }
                    acc += term;
                }
            }
            acc
        })
        .collect();
    into_int_poly(coeffs, "partition characteristic polynomial")
}

/// Characteristic polynomial of the class matrix of size `n` by `method`.
/// `n = 0` gives the constant 1 for every method.
pub fn class_charpoly(class: &GraphClass, n: usize, method: CharPolyMethod) -> Result<IntPolynomial> {
    if n == 0 {
        return Ok(IntPolynomial::one());
    }
    match method {
        CharPolyMethod::Recurrence => Ok(charpoly_recurrence(&class.matrix(n)?, n)?.last().clone()),
        CharPolyMethod::Determinant => Ok(poly_determinant_charpoly(&class.matrix(n)?)),
        CharPolyMethod::Closed => match class {
            GraphClass::KAngulation { k } => charpoly_closed_kangulation(*k, n),
            GraphClass::Geometric => Ok(charpoly_closed_geometric(n)),
            GraphClass::Connected => Ok(charpoly_closed_connected(n)),
            GraphClass::NonCrossingPartition => Ok(charpoly_closed_partition(n)),
            GraphClass::Relation { .. } => Err(Error::InvalidParameter(
                "the relation matrix has no closed-form characteristic polynomial".into(),
            )),
        },
    }
}

/// Eigenvector candidate built from the characteristic polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenPair {
    pub lambda: BigRational,
    /// `(x_{n-1}, …, x_1, x_0)` with `x_0 = 1`.
    pub vector: Vec<BigRational>,
    /// `max |A x - λ x| / max |x|`
    pub residual: f64,
}

/// `x_i = (-1 / a_{-1})^i d_i(λ) x_0` with `x_0 = 1`.
///
/// Every row of `A x - λ x` except the first vanishes identically; the first
/// is proportional to `d_n(λ)`, so the residual is small exactly when `λ` is
/// close to an eigenvalue. No check is made that it is.
pub fn eigenvector_from_charpoly(m: &HTMatrix, lambda: &BigRational) -> Result<EigenPair> {
    let sub = m.subdiagonal();
    if sub.is_zero() {
        return Err(Error::ZeroSubdiagonal);
    }
    let n = m.size();
    let seq = charpoly_recurrence(m, n - 1)?;
    let step = BigRational::new(-BigInt::one(), sub.clone());
    let mut factor = BigRational::one();
    let mut xs = Vec::with_capacity(n);
    for d in &seq.polys {
        xs.push(d.eval_rational(lambda) * &factor);
        factor *= &step;
    }
    xs.reverse();
    let residual = relative_residual(m, lambda, &xs);
    Ok(EigenPair {
        lambda: lambda.clone(),
        vector: xs,
        residual,
    })
}

fn relative_residual(m: &HTMatrix, lambda: &BigRational, x: &[BigRational]) -> f64 {
    let n = m.size();
    let max_x = x.iter().map(Signed::abs).max().unwrap_or_default();
    if max_x.is_zero() {
        return f64::INFINITY;
    }
    let max_r = (0..n)
        .map(|i| {
            let ax: BigRational = (i.saturating_sub(1)..n)
                .map(|j| BigRational::from_integer(m.entry(i, j)) * &x[j])
                .sum();
            (ax - lambda * &x[i]).abs()
        })
        .max()
        .unwrap_or_default();
    (max_r / max_x).to_f64().unwrap_or(f64::INFINITY)
}

/// Largest real eigenvalue, with diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominantEigenvalue {
    pub root: RootInterval,
    /// Distinct real roots of the characteristic polynomial.
    pub real_roots: usize,
    /// Sign changes of the characteristic polynomial's coefficients.
    pub sign_changes: usize,
}

impl DominantEigenvalue {
    pub fn value(&self) -> BigRational {
        self.root.midpoint()
    }
}

/// Largest real root of `det(A - λI)` bracketed to within `tol`.
pub fn dominant_eigenvalue(m: &HTMatrix, tol: f64) -> Result<DominantEigenvalue> {
    dominant_eigenvalue_with_precision(m, Precision::from_tolerance(tol))
}

pub fn dominant_eigenvalue_with_precision(
    m: &HTMatrix,
    precision: Precision,
) -> Result<DominantEigenvalue> {
    let p = matrix_charpoly(m);
    let roots = real_roots(&p, precision);
    let real_count = roots.len();
    let root = roots.into_iter().last().ok_or(Error::NoRealRoot)?;
    Ok(DominantEigenvalue {
        root,
        real_roots: real_count,
        sign_changes: p.sign_changes(),
    })
}

/// Recurrence for Toeplitz matrices, elimination otherwise.
pub fn matrix_charpoly(m: &HTMatrix) -> IntPolynomial {
    match charpoly_recurrence(m, m.size()) {
        Ok(seq) => seq.last().clone(),
        Err(_) => poly_determinant_charpoly(m),
    }
}

/// Eigenpairs for every distinct real eigenvalue of `m`.
pub fn real_eigenpairs(m: &HTMatrix, precision: Precision) -> Result<Vec<EigenPair>> {
    real_roots(&matrix_charpoly(m), precision)
        .iter()
        .map(|r| eigenvector_from_charpoly(m, &r.midpoint()))
        .collect()
}

/// Decimal rendering with `digits` digits after the point, truncated toward
/// zero.
pub fn to_decimal(x: &BigRational, digits: usize) -> String {
    let neg = x.is_negative();
    let scaled = (x.abs() * BigRational::from_integer(BigInt::from(10).pow(digits as u32))).to_integer();
    let s = scaled.to_string();
    let s = if s.len() <= digits {
        format!("{}{}", "0".repeat(digits + 1 - s.len()), s)
    } else {
        s
    };
    let (int, frac) = s.split_at(s.len() - digits);
    let sign = if neg && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}
