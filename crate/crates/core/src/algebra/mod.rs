//! Exact arithmetic backbone.

pub mod multi;
pub mod rational;
pub mod uni;

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

pub use multi::{Monomial, MultiPoly, Substituted};
pub use rational::Rational;
pub use uni::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("negative exponent {0} in polynomial power")]
    NegativeExponent(i64),
    #[error("no value assigned to variable `{0}`")]
    MissingVariable(String),
    #[error("denominator is identically zero")]
    ZeroDenominator,
    #[error("empty interval: lower bound {lo} is not below upper bound {hi}")]
    EmptyInterval { lo: String, hi: String },
    #[error("polynomials use different variables `{0}` and `{1}`")]
    VariableMismatch(String, String),
    #[error("denominator vanishes at {0}")]
    PoleAt(String),
}

/// Closed rational interval `[lo, hi]` with `lo < hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalQ {
    pub lo: Rational,
    pub hi: Rational,
}

impl IntervalQ {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, AlgebraError> {
        if lo < hi {
            Ok(IntervalQ { lo, hi })
        } else {
            Err(AlgebraError::EmptyInterval {
                lo: rational::format(&lo),
                hi: rational::format(&hi),
            })
        }
    }

    pub fn contains(&self, t: &Rational) -> bool {
        &self.lo <= t && t <= &self.hi
    }

    pub fn contains_open(&self, t: &Rational) -> bool {
        &self.lo < t && t < &self.hi
    }
}

impl fmt::Display for IntervalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", rational::format(&self.lo), rational::format(&self.hi))
    }
}

/// Univariate rational function in lowest terms with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        if num.var() != den.var() && !num.is_constant() && !den.is_constant() {
            return Err(AlgebraError::VariableMismatch(
                num.var().to_string(),
                den.var().to_string(),
            ));
        }
        let var = if num.is_constant() { den.var() } else { num.var() }.to_string();
        let num = num.with_var(var.clone());
        let den = den.with_var(var);
        if num.is_zero() {
            let v = den.var().to_string();
            return Ok(RationalFunction {
                num,
                den: UniPoly::one(v),
            });
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        let lc = den.leading_coeff();
        let inv = Rational::one() / lc;
        Ok(RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        let den = UniPoly::one(p.var());
        RationalFunction { num: p, den }
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn var(&self) -> &str {
        self.num.var()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The polynomial itself when the denominator is constant.
    pub fn as_polynomial(&self) -> Option<UniPoly> {
        self.is_polynomial()
            .then(|| self.num.scale(&(Rational::one() / self.den.leading_coeff())))
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn eval(&self, t: &Rational) -> Result<Rational, AlgebraError> {
        let d = self.den.eval(t);
        if d.is_zero() {
            return Err(AlgebraError::PoleAt(rational::format(t)));
        }
        Ok(self.num.eval(t) / d)
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.num.eval_f64(t) / self.den.eval_f64(t)
    }

    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        Self::new(num, den).expect("nonzero denominator")
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::new(num, &self.den * &other.den).expect("nonzero denominator")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("nonzero denominator")
    }

    pub fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        if other.num.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.num.scale(k), self.den.clone()).expect("nonzero denominator")
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.as_polynomial().expect("polynomial"))
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
