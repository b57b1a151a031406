//! Polynomial and rational-function text: parsing and canonical printing.
//!
//! Grammar (no implicit multiplication, no floats):
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := number | var | '(' expr ')'
//! number := int ('/' uint)?
//! ```
//!
//! Rational functions additionally accept `/` between factors.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::{AlgebraError, MultiPoly, Rational, RationalFunction, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty expression")]
    Empty,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("undeclared variable `{name}` at position {pos}")]
    UndeclaredVariable { name: String, pos: usize },
    #[error("non-integer exponent at position {pos}")]
    NonIntegerExponent { pos: usize },
    #[error("negative exponent at position {pos}")]
    NegativeExponent { pos: usize },
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("division by zero at position {pos}")]
    DivisionByZero { pos: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i < chars.len() && (chars[i] == '.' || chars[i] == 'e' && i + 1 < chars.len() && chars[i + 1].is_ascii_digit()) {
                    return Err(ParseError::Syntax {
                        pos: i,
                        msg: "floating-point literals are not supported".into(),
                    });
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((Tok::Int(digits.parse().expect("digits")), start));
                continue;
            }
            c if c.is_alphabetic() => {
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), start));
                continue;
            }
            other => {
                return Err(ParseError::Syntax {
                    pos: i,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

/// Operations the parser needs from its target algebra.
trait Target: Sized + Clone {
    type Ctx;
    /// Whether `/` may appear between factors.
    const DIVISION: bool;
    fn number(ctx: &Self::Ctx, r: Rational) -> Self;
    fn variable(ctx: &Self::Ctx, name: &str) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn pow(&self, e: u32) -> Self;
    fn neg(&self) -> Self;
    /// `None` when division is not part of the grammar.
    fn div(&self, o: &Self, pos: usize) -> Option<Result<Self, ParseError>>;
}

struct Parser<'a, T: Target> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    vars: &'a [String],
    ctx: &'a T::Ctx,
}

impl<T: Target> Parser<'_, T> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn syntax<R>(&self, msg: impl Into<String>) -> Result<R, ParseError> {
        Err(ParseError::Syntax {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<T, ParseError> {
        let negate = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<T, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Slash) => {
                    let at = self.here();
                    self.pos += 1;
                    let rhs = self.factor()?;
                    match acc.div(&rhs, at) {
                        Some(r) => acc = r?,
                        None => {
                            return Err(ParseError::Syntax {
                                pos: at,
                                msg: "division is only allowed inside rational literals".into(),
                            })
                        }
                    }
                }
                Some(Tok::Ident(_) | Tok::Int(_) | Tok::LParen) => {
                    return self.syntax("implicit multiplication is not allowed; use `*`")
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<T, ParseError> {
        let base = self.base()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.here();
        match self.toks.get(self.pos).cloned() {
            Some((Tok::Int(n), _)) => {
                self.pos += 1;
                if !T::DIVISION && self.peek() == Some(&Tok::Slash) {
                    return Err(ParseError::NonIntegerExponent { pos: at });
                }
                let e = u32::try_from(&n).map_err(|_| ParseError::Syntax {
                    pos: at,
                    msg: "exponent too large".into(),
                })?;
                Ok(base.pow(e))
            }
            Some((Tok::Minus, _)) => Err(ParseError::NegativeExponent { pos: at }),
            Some(_) => Err(ParseError::NonIntegerExponent { pos: at }),
            None => self.syntax("missing exponent"),
        }
    }

    fn base(&mut self) -> Result<T, ParseError> {
        let Some((tok, at)) = self.toks.get(self.pos).cloned() else {
            return self.syntax("unexpected end of input");
        };
        match tok {
            Tok::Int(n) => {
                self.pos += 1;
                // `p/q` literal
                if self.peek() == Some(&Tok::Slash) {
                    if let Some((Tok::Int(d), dpos)) = self.toks.get(self.pos + 1).cloned() {
                        if d.is_zero() {
                            return Err(ParseError::DivisionByZero { pos: dpos });
                        }
                        self.pos += 2;
                        return Ok(T::number(self.ctx, Rational::new(n, d)));
                    }
                }
                Ok(T::number(self.ctx, Rational::from_integer(n)))
            }
            Tok::Ident(name) => {
                if !self.vars.contains(&name) {
                    return Err(ParseError::UndeclaredVariable { name, pos: at });
                }
                self.pos += 1;
                Ok(T::variable(self.ctx, &name))
            }
            Tok::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.syntax("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => self.syntax("expected a number, variable or `(`"),
        }
    }
}

fn run<T: Target>(text: &str, vars: &[String], ctx: &T::Ctx) -> Result<T, ParseError> {
    if text.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    let toks = tokenize(text)?;
    let mut p = Parser::<T> {
        toks,
        pos: 0,
        end: text.chars().count(),
        vars,
        ctx,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.syntax("unexpected trailing input");
    }
    Ok(out)
}

#[derive(Clone)]
struct PolyTarget(MultiPoly);

impl Target for PolyTarget {
    type Ctx = Vec<String>;
    const DIVISION: bool = false;
    fn number(vars: &Vec<String>, r: Rational) -> Self {
        PolyTarget(MultiPoly::constant(r, vars))
    }
    fn variable(vars: &Vec<String>, name: &str) -> Self {
        PolyTarget(MultiPoly::var(name, vars))
    }
    fn add(&self, o: &Self) -> Self {
        PolyTarget(&self.0 + &o.0)
    }
    fn sub(&self, o: &Self) -> Self {
        PolyTarget(&self.0 - &o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        PolyTarget(&self.0 * &o.0)
    }
    fn pow(&self, e: u32) -> Self {
        PolyTarget(self.0.pow(e))
    }
    fn neg(&self) -> Self {
        PolyTarget(-&self.0)
    }
    fn div(&self, _: &Self, _: usize) -> Option<Result<Self, ParseError>> {
        None
    }
}

#[derive(Clone)]
struct RatTarget(RationalFunction);

impl Target for RatTarget {
    type Ctx = String;
    const DIVISION: bool = true;
    fn number(var: &String, r: Rational) -> Self {
        RatTarget(RationalFunction::from_poly(UniPoly::constant(var.clone(), r)))
    }
    fn variable(_: &String, name: &str) -> Self {
        RatTarget(RationalFunction::from_poly(UniPoly::identity(name)))
    }
    fn add(&self, o: &Self) -> Self {
        RatTarget(self.0.add(&o.0))
    }
    fn sub(&self, o: &Self) -> Self {
        RatTarget(self.0.sub(&o.0))
    }
    fn mul(&self, o: &Self) -> Self {
        RatTarget(self.0.mul(&o.0))
    }
    fn pow(&self, e: u32) -> Self {
        let num = self.0.numerator().pow(e);
        let den = self.0.denominator().pow(e);
        RatTarget(RationalFunction::new(num, den).expect("nonzero denominator"))
    }
    fn neg(&self) -> Self {
        RatTarget(self.0.scale(&-Rational::one()))
    }
    fn div(&self, o: &Self, pos: usize) -> Option<Result<Self, ParseError>> {
        Some(
            self.0
                .div(&o.0)
                .map(RatTarget)
                .map_err(|_| ParseError::DivisionByZero { pos }),
        )
    }
}

fn check_vars(vars: &[String]) -> Result<(), ParseError> {
    for (i, v) in vars.iter().enumerate() {
        let mut chars = v.chars();
        let ok = chars.next().is_some_and(char::is_alphabetic)
            && chars.all(|c| c.is_alphanumeric() || c == '_');
        if !ok {
            return Err(ParseError::InvalidVariable(v.clone()));
        }
        if vars[..i].contains(v) {
            return Err(ParseError::DuplicateVariable(v.clone()));
        }
    }
    Ok(())
}

/// Parses `text` into an expanded polynomial over `vars` (in that order).
pub fn parse_polynomial(text: &str, vars: &[&str]) -> Result<MultiPoly, ParseError> {
    let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    check_vars(&vars)?;
    let p: PolyTarget = run(text, &vars, &vars)?;
    Ok(p.0.align(&vars)?)
}

/// Parses a ratio of polynomials in one variable.
pub fn parse_rational_function(text: &str, var: &str) -> Result<RationalFunction, ParseError> {
    let vars = vec![var.to_string()];
    check_vars(&vars)?;
    let r: RatTarget = run(text, &vars, &vars[0])?;
    Ok(r.0)
}

fn format_monomial(vars: &[String], m: &[u32]) -> String {
    let mut parts = Vec::new();
    for (v, &e) in vars.iter().zip(m) {
        match e {
            0 => {}
            1 => parts.push(v.clone()),
            e => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}

/// Canonical text: terms in descending graded order, `*` between factors,
/// exact rational coefficients.
pub fn render(p: &MultiPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.sorted_terms().into_iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = format_monomial(p.vars(), m);
        let coeff = crate::algebra::rational::format(&mag);
        if mono.is_empty() {
            out.push_str(&coeff);
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&coeff);
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    #[test]
    fn unit_square() {
        let p = parse_polynomial("x^2*y^2 - x^2*y - x*y^2 + x*y", &["x", "y"]).unwrap();
        assert_eq!(p.num_terms(), 4);
        assert_eq!(p.coefficient(&[("x", 2), ("y", 2)]), int(1));
        assert_eq!(p.coefficient(&[("x", 1), ("y", 2)]), int(-1));
    }

    #[test]
    fn zero_literal() {
        assert!(parse_polynomial("0", &["x"]).unwrap().is_zero());
        assert_eq!(render(&parse_polynomial("0", &["x"]).unwrap()), "0");
    }

    #[test]
    fn factored_equals_expanded() {
        let a = parse_polynomial("(y^2-x)^2 - x^3", &["x", "y"]).unwrap();
        let b = parse_polynomial("y^4-2*x*y^2-x^3+x^2", &["x", "y"]).unwrap();
        assert_eq!(a, b);
        assert_eq!(render(&a), "y^4 - 2*x*y^2 - x^3 + x^2");
    }

    #[test]
    fn error_cases() {
        assert!(matches!(parse_polynomial("2x", &["x"]), Err(ParseError::Syntax { pos: 1, .. })));
        assert!(matches!(
            parse_polynomial("x + z", &["x"]),
            Err(ParseError::UndeclaredVariable { pos: 4, .. })
        ));
        assert!(matches!(parse_polynomial("x^(1/2)", &["x"]), Err(ParseError::NonIntegerExponent { .. })));
        assert!(matches!(parse_polynomial("x^3/2", &["x"]), Err(ParseError::NonIntegerExponent { .. })));
        assert!(matches!(parse_polynomial("x^-1", &["x"]), Err(ParseError::NegativeExponent { .. })));
        assert!(matches!(parse_polynomial("x/2", &["x"]), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_polynomial("1.5*x", &["x"]), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_polynomial("(x+1", &["x"]), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_polynomial("   ", &["x"]), Err(ParseError::Empty)));
        assert!(matches!(parse_polynomial("1/0", &["x"]), Err(ParseError::DivisionByZero { .. })));
    }

    #[test]
    fn rational_literals() {
        let p = parse_polynomial("1/2*x - 3/4", &["x"]).unwrap();
        assert_eq!(render(&p), "1/2*x - 3/4");
        let q = parse_polynomial("-x^3 + 2", &["x"]).unwrap();
        assert_eq!(render(&q), "-x^3 + 2");
    }

    #[test]
    fn rational_function_examples() {
        let g = parse_rational_function("3*(1-t)^2*t", "t").unwrap();
        assert!(g.is_polynomial());
        assert_eq!(g.as_polynomial().unwrap(), UniPoly::from_ints("t", &[0, 3, -6, 3]));

        let m = parse_rational_function("t/(1-t)", "t").unwrap();
        assert_eq!(m.numerator(), &UniPoly::from_ints("t", &[0, -1]));
        assert_eq!(m.denominator(), &UniPoly::from_ints("t", &[-1, 1]));

        let c = parse_rational_function("(t^2-1)/(t-1)", "t").unwrap();
        assert_eq!(c.as_polynomial().unwrap(), UniPoly::from_ints("t", &[1, 1]));

        assert!(matches!(
            parse_rational_function("1/(t-t)", "t"),
            Err(ParseError::DivisionByZero { .. })
        ));
        assert!(parse_rational_function("t +", "t").is_err());
    }

    #[test]
    fn constant_rational_function_keeps_variable() {
        let c = parse_rational_function("5/2", "t").unwrap();
        assert_eq!(c.var(), "t");
    }
}
