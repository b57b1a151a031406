//! Arbitrary-precision rationals.
//!
//! `num_rational::BigRational` keeps every value in lowest terms with a
//! positive denominator, which is exactly the invariant we need.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

/// Shorthand constructor for small literals.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Nearest `f64`; falls back to a digit-wise quotient when numerator or
/// denominator overflow the float range on their own.
pub fn to_f64(r: &Rational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let n = r.numer();
    let d = r.denom();
    let shift = n.bits().max(d.bits()).saturating_sub(1000);
    let n = n >> shift;
    let d = d >> shift;
    n.to_f64().unwrap_or(f64::NAN) / d.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational from a finite float.
pub fn from_f64(v: f64) -> Option<Rational> {
    Rational::from_float(v)
}

/// `p/q` text, or just `p` for integers.
pub fn format(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Greatest common divisor of the numerators (non-negative).
pub fn numerator_gcd<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    values
        .into_iter()
        .fold(BigInt::zero(), |acc, r| acc.gcd(r.numer()))
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}
