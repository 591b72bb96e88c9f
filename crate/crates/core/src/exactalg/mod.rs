//! Exact polynomial and rational-function algebra.
//!
//! Builds `A_λ(n)` as a polynomial in `λ₁`, the hook factor `R_m(n)` as a
//! rational function of `n`, and evaluates both sides of the binomial
//! convolution identity behind the hook formula.

mod poly;
mod ratfunc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::Value;
use thiserror::Error;

use crate::enumerator::{count_partition, count_r, Engine, EnumError};
use crate::formulas::{self, factorial, gen_binom, FormulaError};
use crate::lattice::{LatticeError, Partition};

pub use poly::Poly;
pub use ratfunc::RatFunc;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("duplicate abscissa {0}")]
    DuplicateAbscissa(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("{0}")]
    InvalidArgument(String),
    #[error("expected degree {expected}, got {actual:?}")]
    DegreeMismatch {
        expected: usize,
        actual: Option<usize>,
    },
    #[error("malformed algebra JSON: {0}")]
    Parse(String),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

pub(crate) fn number(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse().expect("integer is a JSON number"))
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// The unique polynomial of degree below `points.len()` through `points`
/// (Newton form, expanded).
pub fn interpolate(points: &[(BigRational, BigRational)]) -> Result<Poly, AlgebraError> {
    for (i, (x, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(y, _)| y == x) {
            return Err(AlgebraError::DuplicateAbscissa(x.to_string()));
        }
    }
    let mut table: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..points.len() {
        for i in (level..points.len()).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (&points[i].0 - &points[i - level].0);
        }
    }
    let mut result = Poly::zero();
    for i in (0..points.len()).rev() {
        let shift = Poly::from_coeffs(vec![-points[i].0.clone(), BigRational::one()]);
        result = &(&result * &shift) + &Poly::constant(table[i].clone());
    }
    Ok(result)
}

/// [`interpolate`] over integer points.
pub fn interpolate_ints(points: &[(i64, BigInt)]) -> Result<Poly, AlgebraError> {
    let pts: Vec<_> = points
        .iter()
        .map(|(x, y)| (int(*x), BigRational::from_integer(y.clone())))
        .collect();
    interpolate(&pts)
}

fn check_tail(tail: &[u32], n: usize) -> Result<Partition, AlgebraError> {
    if n < 2 {
        return Err(AlgebraError::InvalidArgument(format!(
            "n must be >= 2 (got {n})"
        )));
    }
    if tail.len() != n - 1 {
        return Err(AlgebraError::InvalidArgument(format!(
            "tail must list λ₂..λₙ: expected {} parts, got {}",
            n - 1,
            tail.len()
        )));
    }
    let mut parts = Vec::with_capacity(n);
    parts.push(tail[0]);
    parts.extend_from_slice(tail);
    Ok(Partition::new(parts)?)
}

/// `A_λ(n)` as a polynomial in `λ₁`, for `λ = (λ₁, tail…)` and `λ₁ ≥ λ₂`.
///
/// Built as `Σ_j B_j(λ₁)·R(λ, j)` with `B_j(λ₁) = C(λ₁ − λ₂ + j − 1, j − 1)`
/// expanded symbolically and each `R(λ, j)` enumerated. The result must have
/// degree exactly `n − 1`.
pub fn a_lambda_poly(tail: &[u32], n: usize) -> Result<Poly, AlgebraError> {
    let lambda = check_tail(tail, n)?;
    let second = tail[0] as i64;
    let mut total = Poly::zero();
    for j in 1..=n {
        let basis: Poly = (1..j as i64).map(|t| Poly::linear(1, t - second)).product();
        let basis = basis.scale(&BigRational::from_integer(factorial(j as u32 - 1).into()).recip());
        let r = BigRational::from_integer(count_r(&lambda, j)?.into());
        total = &total + &basis.scale(&r);
    }
    if total.degree() != Some(n - 1) {
        return Err(AlgebraError::DegreeMismatch {
            expected: n - 1,
            actual: total.degree(),
        });
    }
    Ok(total)
}

/// `A_λ(n)` in `λ₁` recovered by interpolating direct counts at
/// `λ₁ = λ₂, …, λ₂ + n − 1`.
pub fn a_lambda_by_interpolation(tail: &[u32], n: usize) -> Result<Poly, AlgebraError> {
    check_tail(tail, n)?;
    let mut points = Vec::with_capacity(n);
    for largest in tail[0]..tail[0] + n as u32 {
        let mut parts = vec![largest];
        parts.extend_from_slice(tail);
        let lambda = Partition::new(parts)?;
        points.push((
            largest as i64,
            count_partition(&lambda, Engine::RowDp)?.into(),
        ));
    }
    interpolate_ints(&points)
}

/// `R_m(n) = Σ_{k≤m} C(m, k)/k! · (n−k)…(n+k−1) / ((2n)…(2n+k−1))`,
/// the factor with `A_{(m+d, d, …, d)}(n) = A(n)·R_m(n)`, reduced.
pub fn rm_ratfunc(m: u32) -> RatFunc {
    (0..=m as i64)
        .map(|k| {
            let rising: Poly = (-k..k).map(|t| Poly::linear(1, t)).product();
            let den: Poly = (0..k).map(|t| Poly::linear(2, t)).product();
            let coef = BigRational::new(
                formulas::binomial(m as u64, k as u64).into(),
                factorial(k as u32).into(),
            );
            RatFunc::new(rising.scale(&coef), den).expect("nonzero product")
        })
        .sum()
}

/// Degrees the hook argument predicts for the numerator and denominator of
/// `R_m`: `2m − ⌊(m+1)/2⌋` and `m − ⌊(m+1)/2⌋`.
pub fn rm_claimed_degrees(m: u32) -> (usize, usize) {
    let drop = (m as usize).div_ceil(2);
    (2 * m as usize - drop, m as usize - drop)
}

/// Whether the reduced `R_m` has the predicted degrees.
pub fn rm_degrees_match(m: u32, r: &RatFunc) -> bool {
    let (p, q) = rm_claimed_degrees(m);
    r.num().degree() == Some(p) && r.den().degree() == Some(q)
}

/// The published `R_m(n)` for `m ≤ 5`, transcribed as printed.
pub fn rm_table(m: u32) -> Option<RatFunc> {
    let (num, den): (&[i64], &[i64]) = match m {
        0 => (&[1], &[1]),
        1 => (&[1, 1], &[2]),
        2 => (&[2, 3, 6, 1], &[4, 8]),
        3 => (&[12, 10, 35, 14, 1], &[24, 48]),
        4 => (&[144, 156, 448, 456, 199, 27, 1], &[288, 768, 384]),
        5 => (
            &[1440, 1128, 4138, 4569, 2540, 542, 42, 1],
            &[2880, 7680, 3840],
        ),
        _ => return None,
    };
    RatFunc::new(Poly::from_ints(num), Poly::from_ints(den)).ok()
}

/// `Σ_{k=0}^{n−1} C(m+k, m) C(−n, k) C(−n, n−1−k)`.
pub fn lemma13_lhs(m: u32, n: u32) -> BigRational {
    let (m, n) = (m as i64, n as i64);
    (0..n)
        .map(|k| gen_binom(m + k, m) * gen_binom(-n, k) * gen_binom(-n, n - 1 - k))
        .sum()
}

/// `Σ_{k=0}^{m} C(m, k) C(−n, k) C(−2n−k, n−1−k)`.
pub fn lemma13_rhs(m: u32, n: u32) -> BigRational {
    let (m, n) = (m as i64, n as i64);
    (0..=m)
        .map(|k| gen_binom(m, k) * gen_binom(-n, k) * gen_binom(-2 * n - k, n - 1 - k))
        .sum()
}

/// `(−1)^{n−1} A(n) · lemma13_lhs(m, n) / C(3n−2, n−1)` as an exact rational.
pub fn alambda_inter_value(m: u32, n: u32) -> Result<BigRational, FormulaError> {
    if n == 0 {
        return Err(FormulaError::InvalidArgument("n must be >= 1".into()));
    }
    let sign = if n % 2 == 1 { int(1) } else { int(-1) };
    let a = BigRational::from_integer(formulas::asm_total(n)?.into());
    let c = BigRational::from_integer(formulas::binomial(3 * n as u64 - 2, n as u64 - 1).into());
    Ok(sign * a * lemma13_lhs(m, n) / c)
}

/// Whether the signed binomial sum equals the refined hook sum for `(m, n)`.
pub fn check_eq_alambda_inter(m: u32, n: u32) -> Result<bool, FormulaError> {
    let lhs = alambda_inter_value(m, n)?;
    let rhs = BigRational::from_integer(formulas::hook_sum_refined(n, m)?.into());
    Ok(lhs == rhs)
}
