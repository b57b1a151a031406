//! Sparse multivariate polynomials with rational coefficients.
//!
//! A polynomial carries an ordered list of declared variables; monomials are
//! exponent vectors aligned with that list. Binary operations on polynomials
//! with different variable lists work over the union (left operand's
//! variables first).

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{self, Rational};
use super::{AlgebraError, RationalFunction, UniPoly};

/// Exponent vector aligned with the owning polynomial's variables.
pub type Monomial = Vec<u32>;

#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

/// Graded order: total degree first, ties broken by comparing exponents
/// from the last declared variable backwards. With variables `[x, y]` this
/// ranks `y` above `x`, so `x*y^2` precedes `x^3`.
pub fn graded_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (ea, eb) in a.iter().rev().zip(b.iter().rev()) {
            match ea.cmp(eb) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

fn union_vars(a: &[String], b: &[String]) -> Vec<String> {
    let mut out = a.to_vec();
    for v in b {
        if !out.contains(v) {
            out.push(v.clone());
        }
    }
    out
}

impl MultiPoly {
    pub fn zero(vars: &[String]) -> Self {
        MultiPoly {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational, vars: &[String]) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars.len()], c);
        p
    }

    pub fn one(vars: &[String]) -> Self {
        Self::constant(Rational::one(), vars)
    }

    /// The polynomial `name`; the variable is appended to `vars` if absent.
    pub fn var(name: &str, vars: &[String]) -> Self {
        let vars = union_vars(vars, &[name.to_string()]);
        let idx = vars.iter().position(|v| v == name).expect("present");
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        let mut p = Self::zero(&vars);
        p.add_term(exps, Rational::one());
        p
    }

    /// Builds from `(exponents, coefficient)` pairs, summing duplicates.
    pub fn from_terms(
        vars: &[String],
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.len(), vars.len(), "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn from_univariate(u: &UniPoly, vars: &[String]) -> Self {
        let vars = union_vars(vars, &[u.var().to_string()]);
        let idx = vars.iter().position(|v| v == u.var()).expect("present");
        let mut p = Self::zero(&vars);
        for (k, c) in u.coeffs().iter().enumerate() {
            let mut m = vec![0; vars.len()];
            m[idx] = k as u32;
            p.add_term(m, c.clone());
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&vec![0; self.vars.len()])
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the monomial given as `(variable, exponent)` pairs.
    pub fn coefficient(&self, powers: &[(&str, u32)]) -> Rational {
        let mut m = vec![0; self.vars.len()];
        for (v, e) in powers {
            match self.var_index(v) {
                Some(i) => m[i] = *e,
                None if *e == 0 => {}
                None => return Rational::zero(),
            }
        }
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Variables that actually occur with a positive exponent.
    pub fn used_vars(&self) -> Vec<String> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|m| m[*i] > 0))
            .map(|(_, v)| v.clone())
            .collect()
    }

    pub fn uses_var(&self, name: &str) -> bool {
        self.var_index(name)
            .is_some_and(|i| self.terms.keys().any(|m| m[i] > 0))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    /// Degree in one variable; `None` for the zero polynomial.
    pub fn degree_in(&self, name: &str) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        Some(match self.var_index(name) {
            Some(i) => self.terms.keys().map(|m| m[i]).max().unwrap_or(0),
            None => 0,
        })
    }

    /// Re-expresses over `vars`, which must contain every used variable.
    pub fn align(&self, vars: &[String]) -> Result<Self, AlgebraError> {
        if vars == self.vars.as_slice() {
            return Ok(self.clone());
        }
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v))
            .collect();
        let mut out = Self::zero(vars);
        for (m, c) in &self.terms {
            let mut nm = vec![0; vars.len()];
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => nm[j] = e,
                    None => return Err(AlgebraError::MissingVariable(self.vars[i].clone())),
                }
            }
            out.add_term(nm, c.clone());
        }
        Ok(out)
    }

    fn unify(&self, other: &Self) -> (Self, Self) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let vars = union_vars(&self.vars, &other.vars);
        (
            self.align(&vars).expect("superset"),
            other.align(&vars).expect("superset"),
        )
    }

    /// Drops declared variables that do not occur.
    pub fn compact(&self) -> Self {
        self.align(&self.used_vars()).expect("used vars suffice")
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one(&self.vars);
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

    /// Integer power with a signed exponent; negative exponents are an error.
    pub fn checked_pow(&self, exp: i64) -> Result<Self, AlgebraError> {
        u32::try_from(exp)
            .map(|e| self.pow(e))
            .map_err(|_| AlgebraError::NegativeExponent(exp))
    }

    pub fn partial_derivative(&self, name: &str) -> Self {
        let Some(i) = self.var_index(name) else {
            return Self::zero(&self.vars);
        };
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            if m[i] == 0 {
                continue;
            }
            let mut nm = m.clone();
            nm[i] -= 1;
            out.add_term(nm, c * rational::int(m[i] as i64));
        }
        out
    }

    pub fn evaluate(&self, assignment: &HashMap<String, Rational>) -> Result<Rational, AlgebraError> {
        let mut values = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match assignment.get(v) {
                Some(val) => values.push(Some(val.clone())),
                None if self.terms.keys().all(|m| m[i] == 0) => values.push(None),
                None => return Err(AlgebraError::MissingVariable(v.clone())),
            }
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    let base = values[i].as_ref().expect("checked above");
                    term *= num_traits::pow(base.clone(), e as usize);
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Evaluation from `(name, value)` pairs.
    pub fn evaluate_at(&self, pairs: &[(&str, Rational)]) -> Result<Rational, AlgebraError> {
        let map = pairs
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect();
        self.evaluate(&map)
    }

    /// Floating-point evaluation; `values` aligned with `vars()`. Also
    /// returns the largest absolute term value, for residual scaling.
    pub fn eval_f64_with_scale(&self, values: &[f64]) -> (f64, f64) {
        let mut total = 0.0;
        let mut scale: f64 = 0.0;
        for (m, c) in &self.terms {
            let mut term = rational::to_f64(c);
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    term *= values[i].powi(e as i32);
                }
            }
            scale = scale.max(term.abs());
            total += term;
        }
        (total, scale)
    }

    /// Fixes one variable to a rational value.
    pub fn specialize(&self, name: &str, value: &Rational) -> Self {
        let Some(i) = self.var_index(name) else {
            return self.clone();
        };
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut nm = m.clone();
            nm[i] = 0;
            out.add_term(nm, c * num_traits::pow(value.clone(), m[i] as usize));
        }
        out
    }

    /// Coefficients with respect to `name`, lowest power first. Each
    /// coefficient keeps this polynomial's variable list.
    pub fn coefficients_in(&self, name: &str) -> Vec<MultiPoly> {
        let Some(i) = self.var_index(name) else {
            return if self.is_zero() {
                Vec::new()
            } else {
                vec![self.clone()]
            };
        };
        let deg = self.degree_in(name).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(&self.vars); if self.is_zero() { 0 } else { deg + 1 }];
        for (m, c) in &self.terms {
            let mut nm = m.clone();
            let k = nm[i] as usize;
            nm[i] = 0;
            out[k].add_term(nm, c.clone());
        }
        out
    }

    /// Inverse of [`coefficients_in`](Self::coefficients_in).
    pub fn from_coefficients(name: &str, coeffs: &[MultiPoly], vars: &[String]) -> Self {
        let x = Self::var(name, vars);
        let mut out = Self::zero(x.vars());
        let mut power = Self::one(x.vars());
        for c in coeffs {
            out = &out + &(c * &power);
            power = &power * &x;
        }
        out
    }

    /// `Some` when no variable other than `name` occurs.
    pub fn to_univariate(&self, name: &str) -> Option<UniPoly> {
        let i = self.var_index(name);
        let mut coeffs: Vec<Rational> = Vec::new();
        for (m, c) in &self.terms {
            let mut k = 0;
            for (j, &e) in m.iter().enumerate() {
                if Some(j) == i {
                    k = e as usize;
                } else if e > 0 {
                    return None;
                }
            }
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] += c;
        }
        Some(UniPoly::new(name, coeffs))
    }

    /// Splits into `Σ c_k(name) · m_k(others)`, returning the univariate
    /// coefficient of every monomial in the remaining variables.
    pub fn univariate_parts(&self, name: &str) -> Vec<UniPoly> {
        let idx = self.var_index(name);
        let mut parts: BTreeMap<Monomial, Vec<Rational>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut key = m.clone();
            let k = idx.map(|i| std::mem::take(&mut key[i])).unwrap_or(0) as usize;
            let entry = parts.entry(key).or_default();
            if entry.len() <= k {
                entry.resize(k + 1, Rational::zero());
            }
            entry[k] += c;
        }
        parts
            .into_values()
            .map(|coeffs| UniPoly::new(name, coeffs))
            .collect()
    }

    /// Replaces `name` by a polynomial (in any variables).
    pub fn compose(&self, name: &str, replacement: &MultiPoly) -> Self {
        let coeffs = self.coefficients_in(name);
        let base_vars: Vec<String> = self.vars.iter().filter(|v| *v != name).cloned().collect();
        let vars = union_vars(&base_vars, replacement.vars());
        let mut out = Self::zero(&vars);
        for c in coeffs.iter().rev() {
            let c = c.compact().align(&vars).expect("superset");
            out = &(&out * replacement) + &c;
        }
        out.align(&vars).expect("superset")
    }

    /// Substitutes `name ← r(t)` for a univariate rational function
    /// `r = n/d`. With `D = deg_name(self)` the result is
    /// `Σ c_k n^k d^(D-k) / d^D`.
    pub fn substitute(&self, name: &str, r: &RationalFunction) -> Substituted {
        let d = r.denominator().clone();
        let deg = self.degree_in(name).unwrap_or(0);
        let coeffs = self.coefficients_in(name);
        let base_vars: Vec<String> = self.vars.iter().filter(|v| *v != name).cloned().collect();
        let n_mp = MultiPoly::from_univariate(r.numerator(), &base_vars);
        let vars = n_mp.vars().to_vec();
        let d_mp = MultiPoly::from_univariate(&d, &vars);
        let mut numerator = Self::zero(&vars);
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = c.compact().align(&vars).expect("superset");
            let term = &(&c * &n_mp.pow(k as u32)) * &d_mp.pow(deg - k as u32);
            numerator = &numerator + &term;
        }
        Substituted {
            numerator,
            denominator: d,
            power: deg,
        }
    }

    /// Swaps the roles of two variables.
    pub fn swap_variables(&self, a: &str, b: &str) -> Self {
        let mut vars = self.vars.clone();
        for v in vars.iter_mut() {
            if v == a {
                *v = b.to_string();
            } else if v == b {
                *v = a.to_string();
            }
        }
        let swapped = MultiPoly {
            vars,
            terms: self.terms.clone(),
        };
        swapped.align(&union_vars(&self.vars, &swapped.vars)).expect("superset")
    }

    /// Renames variables in place of their positions.
    pub fn rename(&self, from: &str, to: &str) -> Self {
        let vars: Vec<String> = self
            .vars
            .iter()
            .map(|v| if v == from { to.to_string() } else { v.clone() })
            .collect();
        MultiPoly {
            vars,
            terms: self.terms.clone(),
        }
    }

    /// Terms in canonical (graded, descending) order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|a, b| graded_cmp(b.0, a.0));
        ts
    }

    /// First term in canonical order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| graded_cmp(a.0, b.0))
    }

    /// Rational scalar `k` and primitive integer polynomial `p` with
    /// `self = k · p`; `p` has coprime integer coefficients and a positive
    /// leading coefficient in canonical order.
    pub fn primitive_part(&self) -> (Rational, MultiPoly) {
        if self.is_zero() {
            return (Rational::one(), self.clone());
        }
        let lcm = rational::denominator_lcm(self.terms.values());
        let scaled = self.scale(&Rational::from_integer(lcm.clone()));
        let mut g = rational::numerator_gcd(scaled.terms.values());
        if self.leading_term().expect("nonzero").1.is_negative() {
            g = -g;
        }
        let content = Rational::new(g.clone(), lcm);
        let prim = scaled.scale(&Rational::new(1.into(), g));
        (content, prim)
    }

    /// Exact quotient, or `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        if divisor.is_zero() {
            return None;
        }
        let (mut rem, d) = self.unify(divisor);
        let vars = rem.vars.clone();
        // lexicographic leading terms: the BTreeMap's last key
        let (dm, dc) = d.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut quot = Self::zero(&vars);
        while let Some((rm, rc)) = rem.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            if rm.iter().zip(&dm).any(|(a, b)| a < b) {
                return None;
            }
            let qm: Monomial = rm.iter().zip(&dm).map(|(a, b)| a - b).collect();
            let qc = rc / &dc;
            for (m, c) in &d.terms {
                let nm: Monomial = m.iter().zip(&qm).map(|(a, b)| a + b).collect();
                rem.add_term(nm, -(c * &qc));
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Floating-point value at `(x, y)`-style positional arguments.
    pub fn eval_f64(&self, values: &[f64]) -> f64 {
        self.eval_f64_with_scale(values).0
    }
}

/// Result of substituting a rational function for a variable.
#[derive(Clone, Debug, PartialEq)]
pub struct Substituted {
    pub numerator: MultiPoly,
    /// The substituted function's denominator.
    pub denominator: UniPoly,
    /// Power of `denominator` dividing `numerator`.
    pub power: u32,
}

impl Substituted {
    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (a, b) = self.unify(other);
        a.terms == b.terms
    }
}

impl Eq for MultiPoly {}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut a, b) = self.unify(rhs);
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        a
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut a, b) = self.unify(rhs);
        for (m, c) in b.terms {
            a.add_term(m, -c);
        }
        a
    }
}

// exponent vectors add under multiplication
#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let (a, b) = self.unify(rhs);
        let mut out = MultiPoly::zero(&a.vars);
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::render(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn xy() -> (MultiPoly, MultiPoly) {
        let v = vars(&["x", "y"]);
        (MultiPoly::var("x", &v), MultiPoly::var("y", &v))
    }

    fn arnold() -> MultiPoly {
        let (x, y) = xy();
        let inner = &(&y * &y) - &x;
        &(&inner * &inner) - &x.pow(3)
    }

    #[test]
    fn arnold_expands() {
        let (x, y) = xy();
        let expected = &(&(&y.pow(4) - &(&x * &y.pow(2)).scale(&int(2))) - &x.pow(3)) + &x.pow(2);
        assert_eq!(arnold(), expected);
    }

    #[test]
    fn difference_of_squares() {
        let (x, y) = xy();
        assert_eq!(&(&x + &y) * &(&x - &y), &x.pow(2) - &y.pow(2));
        assert_eq!(&x + &MultiPoly::zero(&vars(&["x"])), x);
    }

    #[test]
    fn negative_power_rejected() {
        let (x, _) = xy();
        assert!(matches!(x.checked_pow(-1), Err(AlgebraError::NegativeExponent(-1))));
    }

    #[test]
    fn derivative_of_arnold() {
        let (x, y) = xy();
        let dy = arnold().partial_derivative("y");
        assert_eq!(dy, &y.pow(3).scale(&int(4)) - &(&x * &y).scale(&int(4)));
        let c = MultiPoly::constant(int(5), &vars(&["x", "y"]));
        assert!(c.partial_derivative("x").is_zero());
        let at_origin = [("x", int(0)), ("y", int(0))];
        assert!(arnold().partial_derivative("x").evaluate_at(&at_origin).unwrap().is_zero());
        assert!(dy.evaluate_at(&at_origin).unwrap().is_zero());
    }

    #[test]
    fn evaluate_examples() {
        let (x, y) = xy();
        let sq = &(&(&(&x.pow(2) * &y.pow(2)) - &(&x.pow(2) * &y)) - &(&x * &y.pow(2))) + &(&x * &y);
        let half = rat(1, 2);
        assert_eq!(sq.evaluate_at(&[("x", half.clone()), ("y", half)]).unwrap(), rat(1, 16));
        assert_eq!(arnold().evaluate_at(&[("x", int(1)), ("y", int(0))]).unwrap(), int(0));
        let p = &arnold() + &MultiPoly::constant(int(7), &vars(&["x", "y"]));
        assert_eq!(p.evaluate_at(&[("x", int(0)), ("y", int(0))]).unwrap(), int(7));
        assert!(matches!(
            arnold().evaluate_at(&[("x", int(1))]),
            Err(AlgebraError::MissingVariable(v)) if v == "y"
        ));
    }

    #[test]
    fn substitute_line_into_square() {
        let (x, y) = xy();
        let sq = &(&(&(&x.pow(2) * &y.pow(2)) - &(&x.pow(2) * &y)) - &(&x * &y.pow(2))) + &(&x * &y);
        let v = vars(&["x", "y", "m"]);
        let mx = &MultiPoly::var("m", &v) * &MultiPoly::var("x", &v);
        let out = sq.compose("y", &mx);
        let m = MultiPoly::var("m", &v);
        let xv = MultiPoly::var("x", &v);
        let expected = &(&(&(&m.pow(2) * &xv.pow(4)) - &(&m * &xv.pow(3))) - &(&m.pow(2) * &xv.pow(3)))
            + &(&m * &xv.pow(2));
        assert_eq!(out, expected);
    }

    #[test]
    fn substitute_parametrization_into_arnold() {
        let g = RationalFunction::from_poly(UniPoly::from_ints("t", &[1, 0, -2, 0, 1]));
        let f = RationalFunction::from_poly(UniPoly::from_ints("t", &[0, -1, 0, 1]));
        let s1 = arnold().substitute("x", &g);
        let s2 = s1.numerator.substitute("y", &f);
        assert!(s2.is_zero());
        // identity substitution
        let id = RationalFunction::from_poly(UniPoly::identity("x"));
        assert_eq!(arnold().substitute("x", &id).numerator, arnold());
    }

    #[test]
    fn substitute_rational_function() {
        // x^2 + 1 with x <- 1/(t+1): (1 + (t+1)^2) / (t+1)^2
        let v = vars(&["x"]);
        let p = &MultiPoly::var("x", &v).pow(2) + &MultiPoly::one(&v);
        let r = RationalFunction::new(UniPoly::one("t"), UniPoly::from_ints("t", &[1, 1])).unwrap();
        let s = p.substitute("x", &r);
        assert_eq!(s.power, 2);
        assert_eq!(s.numerator.to_univariate("t").unwrap(), UniPoly::from_ints("t", &[2, 2, 1]));
    }

    #[test]
    fn exact_division() {
        let (x, y) = xy();
        let a = &(&x + &y) * &(&x.pow(2) - &y);
        assert_eq!(a.div_exact(&(&x + &y)).unwrap(), &x.pow(2) - &y);
        assert!(a.div_exact(&(&x + &MultiPoly::one(&vars(&["x"])))).is_none());
    }

    #[test]
    fn primitive_part_normalizes_sign_and_content() {
        let (x, y) = xy();
        let p = &(&x.pow(2) * &y).scale(&int(-6)) - &(&x * &y).scale(&int(9));
        let (k, prim) = p.primitive_part();
        assert_eq!(k, int(-3));
        assert_eq!(prim, &(&x.pow(2) * &y).scale(&int(2)) + &(&x * &y).scale(&int(3)));
    }

    #[test]
    fn graded_order_ranks_later_variables_higher() {
        assert_eq!(graded_cmp(&[1, 2], &[3, 0]), Ordering::Greater);
        assert_eq!(graded_cmp(&[0, 4], &[3, 0]), Ordering::Greater);
        assert_eq!(graded_cmp(&[2, 0], &[2, 0]), Ordering::Equal);
    }
}
