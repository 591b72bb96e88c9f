//! Closed-form counts, evaluated exactly.
//!
//! Every evaluator forms its value as an exact rational and then insists the
//! result is a nonnegative integer; a fractional or negative result is a
//! [`FormulaError::NonIntegral`], never a rounded answer.

use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::enumerator::{count_r, Count, EnumError};
use crate::lattice::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("{what} index {index} out of range 1..={max}")]
    IndexOutOfRange {
        what: &'static str,
        index: u32,
        max: u32,
    },
    #[error("{0}")]
    InvalidArgument(String),
    #[error("{formula} evaluated to {value}, which is not a nonnegative integer")]
    NonIntegral {
        formula: &'static str,
        value: String,
    },
    #[error(transparent)]
    Enumeration(#[from] EnumError),
}

fn factorial_table() -> &'static RwLock<Vec<BigUint>> {
    static TABLE: OnceLock<RwLock<Vec<BigUint>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![BigUint::one()]))
}

/// `n!`, memoized for the life of the process.
pub fn factorial(n: u32) -> BigUint {
    let n = n as usize;
    {
        let table = factorial_table().read().unwrap_or_else(|e| e.into_inner());
        if let Some(v) = table.get(n) {
            return v.clone();
        }
    }
    let mut table = factorial_table().write().unwrap_or_else(|e| e.into_inner());
    while table.len() <= n {
        let k = table.len();
        let next = &table[k - 1] * BigUint::from(k);
        table.push(next);
    }
    table[n].clone()
}

/// Ordinary binomial `C(n, k)` for `0 ≤ k`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Generalized binomial `C(α, k)`: `1` for `k = 0`, `0` for `k < 0`, and
/// `α(α−1)…(α−k+1)/k!` otherwise. Integer for integer `α`.
pub fn gen_binom_int(alpha: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(alpha) - i;
    }
    let den = BigInt::from(factorial(k as u32));
    debug_assert!(num.is_multiple_of(&den));
    num / den
}

/// [`gen_binom_int`] as an exact rational.
pub fn gen_binom(alpha: i64, k: i64) -> BigRational {
    BigRational::from_integer(gen_binom_int(alpha, k))
}

/// `C(α, k)` for a rational upper index.
pub fn gen_binom_rational(alpha: &BigRational, k: i64) -> BigRational {
    if k < 0 {
        return BigRational::zero();
    }
    let mut acc = BigRational::one();
    for i in 0..k {
        acc *= alpha - BigRational::from_integer(i.into());
        acc /= BigRational::from_integer((i + 1).into());
    }
    acc
}

fn ratio(n: u64, k: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(binomial(n, k)))
}

fn fact_q(n: u32) -> BigRational {
    BigRational::from_integer(BigInt::from(factorial(n)))
}

/// Demands `value` be a nonnegative integer.
pub fn integral(formula: &'static str, value: BigRational) -> Result<Count, FormulaError> {
    if value.is_integer() && !value.is_negative() {
        let (sign, mag) = value.to_integer().into_parts();
        debug_assert!(sign != Sign::Minus);
        Ok(mag)
    } else {
        Err(FormulaError::NonIntegral {
            formula,
            value: value.to_string(),
        })
    }
}

fn check_index(what: &'static str, index: u32, max: u32) -> Result<(), FormulaError> {
    if index == 0 || index > max {
        Err(FormulaError::IndexOutOfRange { what, index, max })
    } else {
        Ok(())
    }
}

/// `A(n) = ∏_{j<n} (3j+1)! / (n+j)!`, the number of `n × n` alternating
/// sign matrices. `A(0) = 1`.
pub fn asm_total(n: u32) -> Result<Count, FormulaError> {
    let mut acc = BigRational::one();
    for j in 0..n {
        acc *= fact_q(3 * j + 1) / fact_q(n + j);
    }
    integral("A(n)", acc)
}

/// `A_V(2n+1) = 2^{−n} ∏_{j=1}^{n} (6j−2)!(2j−1)! / ((4j−1)!(4j−2)!)`, the
/// number of `(2n+1) × (2n+1)` vertically symmetric ASMs. `n` is the half
/// size; `n = 0` gives `A_V(1) = 1`.
pub fn vsasm_total(n: u32) -> Result<Count, FormulaError> {
    let mut acc = BigRational::new(BigInt::one(), BigInt::one() << n);
    for j in 1..=n {
        acc *= fact_q(6 * j - 2) * fact_q(2 * j - 1) / (fact_q(4 * j - 1) * fact_q(4 * j - 2));
    }
    integral("A_V(2n+1)", acc)
}

fn refined_asm_q(n: u32, j: u32) -> Result<BigRational, FormulaError> {
    let (n64, j64) = (n as u64, j as u64);
    let a = BigRational::from_integer(BigInt::from(asm_total(n)?));
    Ok(
        a * ratio(n64 + j64 - 2, n64 - 1) * ratio(2 * n64 - 1 - j64, n64 - 1)
            / ratio(3 * n64 - 2, n64 - 1),
    )
}

/// `A(n, j)`: `n × n` ASMs whose first-row 1 is in column `j`.
pub fn refined_asm(n: u32, j: u32) -> Result<Count, FormulaError> {
    check_index("column", j, n)?;
    integral("A(n, j)", refined_asm_q(n, j)?)
}

/// `A_V(2n+1, i)`: `(2n+1) × (2n+1)` VSASMs whose first 1 in the second row
/// is in column `i`.
pub fn refined_vsasm(n: u32, i: u32) -> Result<Count, FormulaError> {
    check_index("column", i, n)?;
    let (n64, i64_) = (n as u64, i as u64);
    let prev = BigRational::from_integer(BigInt::from(vsasm_total(n - 1)?));
    let value = ratio(2 * n64 + i64_ - 2, 2 * n64 - 1) * ratio(4 * n64 - i64_ - 1, 2 * n64 - 1)
        / ratio(4 * n64 - 2, 2 * n64 - 1)
        * prev;
    integral("A_V(2n+1, i)", value)
}

/// `C(r + c − 2, c − 1)`: states of both the S and T families on an
/// `r × c` lattice.
pub fn path_count(r: u32, c: u32) -> Result<Count, FormulaError> {
    if r == 0 || c == 0 {
        return Err(FormulaError::InvalidArgument(format!(
            "lattice dimensions must be positive (got {r}x{c})"
        )));
    }
    Ok(binomial((r + c - 2) as u64, (c - 1) as u64))
}

/// `L(m, j) = C(m + j − 1, m)`.
pub fn l_count(m: u32, j: u32) -> Result<Count, FormulaError> {
    if j == 0 {
        return Err(FormulaError::InvalidArgument(
            "row index j must be >= 1".into(),
        ));
    }
    Ok(binomial((m + j - 1) as u64, m as u64))
}

/// `Σ_j C(λ₁ − λ₂ + j − 1, λ₁ − λ₂) · R(λ, j)` with `R` enumerated.
pub fn decompose_count(lambda: &Partition) -> Result<Count, FormulaError> {
    let n = lambda.len();
    let second = lambda
        .second()
        .ok_or_else(|| FormulaError::InvalidArgument("the decomposition needs n >= 2".into()))?;
    let m = lambda.largest() - second;
    let mut total = Count::zero();
    for j in 1..=n {
        total += l_count(m, j as u32)? * count_r(lambda, j)?;
    }
    Ok(total)
}

/// Hook count via the refined ASM sum:
/// `A(n)/C(3n−2, n−1) · Σ_j C(m+j−1, m) C(n+j−2, n−1) C(2n−1−j, n−1)`.
pub fn hook_sum_refined(n: u32, m: u32) -> Result<Count, FormulaError> {
    if n == 0 {
        return Err(FormulaError::InvalidArgument("n must be >= 1".into()));
    }
    let (n64, m64) = (n as u64, m as u64);
    let mut sum = BigRational::zero();
    for j in 1..=n64 {
        sum +=
            ratio(m64 + j - 1, m64) * ratio(n64 + j - 2, n64 - 1) * ratio(2 * n64 - 1 - j, n64 - 1);
    }
    let a = BigRational::from_integer(BigInt::from(asm_total(n)?));
    integral("hook refined sum", a * sum / ratio(3 * n64 - 2, n64 - 1))
}

/// The `k`-th summand of the hook rational factor evaluated at `n`:
/// `C(m, k)/k! · ∏_{t=n−k}^{n+k−1} t / ∏_{t=2n}^{2n+k−1} t`.
pub(crate) fn hook_factor_term(n: u32, m: u32, k: u32) -> BigRational {
    let n = n as i64;
    let mut num = BigInt::from(binomial(m as u64, k as u64));
    for t in (n - k as i64)..(n + k as i64) {
        num *= t;
    }
    let mut den = BigInt::from(factorial(k));
    for t in (2 * n)..(2 * n + k as i64) {
        den *= t;
    }
    BigRational::new(num, den)
}

/// Hook count via the sum over `k ≤ m`:
/// `A(n) Σ_k C(m, k)/k! · (n−k)…(n+k−1) / ((2n)…(2n+k−1))`.
pub fn hook_sum_m(n: u32, m: u32) -> Result<Count, FormulaError> {
    if n == 0 {
        return Err(FormulaError::InvalidArgument("n must be >= 1".into()));
    }
    let factor: BigRational = (0..=m).map(|k| hook_factor_term(n, m, k)).sum();
    let a = BigRational::from_integer(BigInt::from(asm_total(n)?));
    integral("hook sum over k", a * factor)
}

/// Staircase count for `λ = (λ₁, n−2, …, 1, 0)`:
/// `A_V(2n−1)/C(4n−2, 2n−1) · Σ_j C(λ₁+1−j, λ₁+1−n) C(2n+j−2, 2n−1) C(4n−j−1, 2n−1)`.
pub fn staircase_sum(n: u32, largest: u32) -> Result<Count, FormulaError> {
    if n == 0 {
        return Err(FormulaError::InvalidArgument("n must be >= 1".into()));
    }
    if largest + 1 < n {
        return Err(FormulaError::InvalidArgument(format!(
            "staircase needs λ₁ >= n − 1 (got λ₁ = {largest}, n = {n})"
        )));
    }
    let (n64, l64) = (n as i64, largest as i64);
    let mut sum = BigRational::zero();
    for j in 1..=n64 {
        sum += gen_binom(l64 + 1 - j, l64 + 1 - n64)
            * ratio((2 * n64 + j - 2) as u64, (2 * n64 - 1) as u64)
            * ratio((4 * n64 - j - 1) as u64, (2 * n64 - 1) as u64);
    }
    let prev = BigRational::from_integer(BigInt::from(vsasm_total(n - 1)?));
    integral(
        "staircase sum",
        prev * sum / ratio((4 * n64 - 2) as u64, (2 * n64 - 1) as u64),
    )
}

/// Best-effort conversion for display and small comparisons.
pub fn count_to_u64(c: &Count) -> Option<u64> {
    c.to_u64()
}
