use std::fmt;
use std::ops::{Add, Mul};

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use super::poly::Poly;
use super::AlgebraError;

/// Quotient of two polynomials in canonical form.
///
/// Canonical means: numerator and denominator coprime, both with integer
/// coefficients whose joint gcd is 1, and the denominator's leading
/// coefficient positive. Each rational function has exactly one such form,
/// so structural equality is value equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::canonical(p, Poly::one())
    }

    fn canonical(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self {
                num,
                den: Poly::one(),
            };
        }
        let g = Poly::gcd(&num, &den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);

        let lcm = {
            use num_integer::Integer;
            num.denominator_lcm().lcm(&den.denominator_lcm())
        };
        let lifted = BigRational::from_integer(lcm);
        let (num, den) = (num.scale(&lifted), den.scale(&lifted));
        let content = {
            use num_integer::Integer;
            num.integer_content().gcd(&den.integer_content())
        };
        let mut k = BigRational::from_integer(content).recip();
        if den.leading().is_some_and(Signed::is_negative) {
            k = -k;
        }
        Self {
            num: num.scale(&k),
            den: den.scale(&k),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// `None` where the denominator vanishes.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    pub fn eval_int(&self, x: i64) -> Option<BigRational> {
        self.eval(&BigRational::from_integer(x.into()))
    }

    /// `a/b == c/d` tested as `a·d == c·b`, independent of normal form.
    pub fn same_value(&self, other: &RatFunc) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// `(num)/(den)`, or just the numerator when the denominator is 1.
    pub fn render(&self, var: &str) -> String {
        let wrap = |p: &Poly| {
            let s = p.render(var);
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        if self.den == Poly::one() {
            self.num.render(var)
        } else {
            format!("{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "num_coeffs": self.num.to_json(), "den_coeffs": self.den.to_json() })
    }

    pub fn from_json(value: &Value) -> Result<Self, AlgebraError> {
        let field = |name: &str| {
            value
                .get(name)
                .ok_or_else(|| AlgebraError::Parse(format!("missing field {name}")))
                .and_then(Poly::from_json)
        };
        Self::new(field("num_coeffs")?, field("den_coeffs")?)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("n"))
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;

    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::canonical(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;

    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl std::iter::Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(iter: I) -> RatFunc {
        iter.fold(RatFunc::from_poly(Poly::zero()), |a, b| &a + &b)
    }
}
