//! Dense univariate polynomials over the rationals.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{self, Rational};
use super::IntervalQ;

/// Coefficients in ascending degree order; no trailing zeros are stored,
/// so the zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
    var: String,
}

impl UniPoly {
    pub fn new(var: impl Into<String>, coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly {
            coeffs,
            var: var.into(),
        };
        p.trim();
        p
    }

    pub fn from_ints(var: impl Into<String>, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero(var: impl Into<String>) -> Self {
        Self::new(var, Vec::new())
    }

    pub fn one(var: impl Into<String>) -> Self {
        Self::constant(var, Rational::one())
    }

    pub fn constant(var: impl Into<String>, c: Rational) -> Self {
        Self::new(var, vec![c])
    }

    /// The polynomial `var`.
    pub fn identity(var: impl Into<String>) -> Self {
        Self::new(var, vec![Rational::zero(), Rational::one()])
    }

    /// `c * var^k`
    pub fn monomial(var: impl Into<String>, c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(var, coeffs)
    }

    /// `var - root`
    pub fn linear_root(var: impl Into<String>, root: &Rational) -> Self {
        Self::new(var, vec![-root.clone(), Rational::one()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn with_var(mut self, var: impl Into<String>) -> Self {
        self.var = var.into();
        self
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn eval_f64(&self, at: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * at + rational::to_f64(c))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(
            self.var.clone(),
            self.coeffs.iter().map(|c| c * k).collect(),
        )
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one(self.var.clone());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Monic normalization; zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading_coeff();
        self.scale(&(Rational::one() / lc))
    }

    /// Integer coefficients with gcd 1 and positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = rational::denominator_lcm(&self.coeffs);
        let scaled: Vec<Rational> = self
            .coeffs
            .iter()
            .map(|c| c * Rational::from_integer(lcm.clone()))
            .collect();
        let mut g = rational::numerator_gcd(&scaled);
        if self.leading_coeff().is_negative() {
            g = -g;
        }
        scaled.iter().map(|c| c.numer() / &g).collect()
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rational::int(k as i64))
            .collect();
        Self::new(self.var.clone(), coeffs)
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / rational::int(k as i64 + 1));
        }
        Self::new(self.var.clone(), coeffs)
    }

    /// Exact definite integral over `[from, to]`.
    pub fn integrate(&self, from: &Rational, to: &Rational) -> Rational {
        let anti = self.antiderivative();
        anti.eval(to) - anti.eval(from)
    }

    /// `self(inner(t))`, keeping the variable of `inner`.
    pub fn compose(&self, inner: &UniPoly) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(UniPoly::zero(inner.var.clone()), |acc, c| {
                &(&acc * inner) + &UniPoly::constant(inner.var.clone(), c.clone())
            })
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n <= dd {
            return (UniPoly::zero(self.var.clone()), self.clone());
        }
        let mut quot = vec![Rational::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let c = &rem[k + dd] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (
            UniPoly::new(self.var.clone(), quot),
            UniPoly::new(self.var.clone(), rem),
        )
    }

    pub fn rem(&self, divisor: &UniPoly) -> UniPoly {
        self.div_rem(divisor).1
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn div_exact(&self, divisor: &UniPoly) -> Option<UniPoly> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone().with_var(self.var.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `p / gcd(p, p')`, monic.
    pub fn square_free_part(&self) -> UniPoly {
        if self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    /// Canonical Sturm sequence of the square-free part.
    pub fn sturm_sequence(&self) -> Vec<UniPoly> {
        let p0 = self.square_free_part();
        let mut seq = vec![p0.clone()];
        let mut prev = p0.clone();
        let mut cur = p0.derivative();
        while !cur.is_zero() {
            seq.push(cur.clone());
            let r = -&prev.rem(&cur);
            prev = cur;
            cur = r;
        }
        seq
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_roots(&self, iv: &IntervalQ) -> usize {
        assert!(!self.is_zero(), "root count of the zero polynomial");
        let seq = self.sturm_sequence();
        let va = sign_variations(&seq, &iv.lo);
        let vb = sign_variations(&seq, &iv.hi);
        va.saturating_sub(vb)
    }

    /// Cauchy bound: every real root lies in `(-B, B)`.
    pub fn root_bound(&self) -> Rational {
        let lc = self.leading_coeff().abs();
        let n = self.coeffs.len();
        let m = self.coeffs[..n.saturating_sub(1)]
            .iter()
            .map(|c| c.abs() / &lc)
            .max()
            .unwrap_or_else(Rational::zero);
        m + Rational::one()
    }

    /// Disjoint half-open intervals `(lo, hi]`, each holding exactly one
    /// distinct real root, every width at most `max_width`.
    pub fn isolate_real_roots(&self, max_width: &Rational) -> Vec<IntervalQ> {
        if self.is_constant() {
            return Vec::new();
        }
        let seq = self.sturm_sequence();
        let b = self.root_bound();
        let mut out = Vec::new();
        let mut stack = vec![(-b.clone(), b)];
        while let Some((lo, hi)) = stack.pop() {
            let n = sign_variations(&seq, &lo).saturating_sub(sign_variations(&seq, &hi));
            if n == 0 {
                continue;
            }
            if n == 1 && (&hi - &lo) <= *max_width {
                out.push(IntervalQ::new(lo, hi).expect("lo < hi"));
                continue;
            }
            let mid = (&lo + &hi) / rational::int(2);
            stack.push((mid.clone(), hi));
            stack.push((lo, mid));
        }
        out.sort_by(|a, b| a.lo.cmp(&b.lo));
        out
    }

    /// All rational roots, repeated by multiplicity, ascending.
    pub fn rational_roots(&self) -> Vec<Rational> {
        assert!(!self.is_zero(), "rational roots of the zero polynomial");
        let sf = self.square_free_part();
        if sf.is_constant() {
            return Vec::new();
        }
        // A rational root p/q in lowest terms has q | lc of the primitive
        // integer form; two such rationals are at least 1/lc^2 apart, so an
        // isolating interval narrower than that contains no other candidate
        // with a denominator as small as the root's.
        let prim = sf.primitive_integer();
        let lc = prim.last().expect("nonzero").abs();
        let width = Rational::new(BigInt::one(), &lc * &lc * BigInt::from(2));
        let mut roots = Vec::new();
        for iv in sf.isolate_real_roots(&width) {
            let cand = simplest_rational_between(&iv.lo, &iv.hi);
            if sf.eval(&cand).is_zero() {
                roots.push(cand);
            }
        }
        let mut out = Vec::new();
        for r in roots {
            let lin = UniPoly::linear_root(self.var.clone(), &r);
            let mut q = self.clone();
            while let Some(next) = q.div_exact(&lin) {
                out.push(r.clone());
                q = next;
            }
        }
        out
    }
}

fn sign_variations(seq: &[UniPoly], at: &Rational) -> usize {
    let mut last: Option<Ordering> = None;
    let mut count = 0;
    for p in seq {
        let v = p.eval(at);
        let s = v.cmp(&Rational::zero());
        if s == Ordering::Equal {
            continue;
        }
        if last.is_some_and(|l| l != s) {
            count += 1;
        }
        last = Some(s);
    }
    count
}

/// The rational with the smallest denominator in the closed interval
/// `[lo, hi]` (ties broken towards zero).
pub fn simplest_rational_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if hi.is_negative() {
        return -simplest_rational_between(&-hi, &-lo);
    }
    if !lo.is_positive() {
        return Rational::zero();
    }
    let c = lo.ceil();
    if &c <= hi {
        return c;
    }
    let fl = lo.floor();
    let inner = simplest_rational_between(
        &(Rational::one() / (hi - &fl)),
        &(Rational::one() / (lo - &fl)),
    );
    fl + Rational::one() / inner
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mp = super::MultiPoly::from_univariate(self, std::slice::from_ref(&self.var));
        write!(f, "{mp}")
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        UniPoly::new(self.var.clone(), coeffs)
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        UniPoly::new(self.var.clone(), coeffs)
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.var.clone());
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(self.var.clone(), coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.var.clone(), self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn t(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_ints("t", coeffs)
    }

    fn iv(lo: Rational, hi: Rational) -> IntervalQ {
        IntervalQ::new(lo, hi).unwrap()
    }

    #[test]
    fn gcd_examples() {
        // gcd(t^2 - 1, t - 1) = t - 1
        assert_eq!(t(&[-1, 0, 1]).gcd(&t(&[-1, 1])), t(&[-1, 1]));
        // gcd(p, 0) = monic(p)
        let p = t(&[2, 0, 4]);
        assert_eq!(p.gcd(&UniPoly::zero("t")), p.monic());
        assert_eq!(UniPoly::zero("t").gcd(&p), p.monic());
    }

    #[test]
    fn coprime_from_distinct_roots() {
        // (t-1)(t-2)(t+3) against (t-5)(t+1/2)
        let a = &(&t(&[-1, 1]) * &t(&[-2, 1])) * &t(&[3, 1]);
        let b = &t(&[-5, 1]) * &UniPoly::linear_root("t", &rat(-1, 2));
        assert_eq!(a.gcd(&b), UniPoly::one("t"));
    }

    #[test]
    fn sturm_examples() {
        assert_eq!(t(&[-1, 0, 1]).count_roots(&iv(int(-2), int(0))), 1);
        assert_eq!(t(&[-1, 0, 3]).count_roots(&iv(int(-1), int(1))), 2);
        assert_eq!(t(&[1, 0, 1]).count_roots(&iv(int(-100), int(100))), 0);
        // half-open convention: root at hi counted, root at lo not
        assert_eq!(t(&[-1, 1]).count_roots(&iv(int(0), int(1))), 1);
        assert_eq!(t(&[-1, 1]).count_roots(&iv(int(1), int(2))), 0);
    }

    #[test]
    fn repeated_roots_counted_once() {
        let p = t(&[-1, 1]).pow(3);
        assert_eq!(p.count_roots(&iv(int(0), int(2))), 1);
    }

    #[test]
    fn rational_root_examples() {
        assert_eq!(t(&[0, -1, 0, 1]).rational_roots(), vec![int(-1), int(0), int(1)]);
        assert!(t(&[-2, 0, 1]).rational_roots().is_empty());
        assert_eq!(t(&[-1, 2]).rational_roots(), vec![rat(1, 2)]);
        // multiplicity
        let p = &t(&[-1, 1]).pow(2) * &t(&[3, 7]);
        assert_eq!(p.rational_roots(), vec![rat(-3, 7), int(1), int(1)]);
    }

    #[test]
    fn antiderivative_of_zero() {
        assert!(UniPoly::zero("t").antiderivative().is_zero());
    }

    #[test]
    fn square_free_part_strips_powers() {
        let p = t(&[-1, 1]).pow(2).scale(&int(4));
        assert_eq!(p.square_free_part(), t(&[-1, 1]));
    }

    #[test]
    fn simplest_rational() {
        assert_eq!(simplest_rational_between(&rat(3, 10), &rat(2, 5)), rat(1, 3));
        assert_eq!(simplest_rational_between(&rat(-2, 5), &rat(-3, 10)), rat(-1, 3));
        assert_eq!(simplest_rational_between(&rat(-1, 5), &rat(1, 5)), int(0));
        assert_eq!(simplest_rational_between(&rat(7, 2), &rat(9, 2)), int(4));
    }

    #[test]
    fn compose_and_divide() {
        // (t^2)(t+1) = t^2 + 2t + 1
        let sq = t(&[0, 0, 1]);
        assert_eq!(sq.compose(&t(&[1, 1])), t(&[1, 2, 1]));
        let (q, r) = t(&[1, 2, 1]).div_rem(&t(&[1, 1]));
        assert_eq!(q, t(&[1, 1]));
        assert!(r.is_zero());
    }
}
