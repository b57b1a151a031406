//! Newton polygons and Puiseux expansions of curve branches at the origin.
//!
//! Expansion works in the ramified variable `u = x^(1/N)`, where `N` is the
//! denominator of the first edge exponent. Every later step substitutes
//! `y ← c·u^k + y` and reads the next term off a fresh Newton polygon, so
//! all terms of the shifted polynomial are kept.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::algebra::rational::{self, Rational};
use crate::algebra::{MultiPoly, UniPoly};

const X: &str = "x";
const Y: &str = "y";
const U: &str = "u";
/// Variable of edge polynomials.
pub const EDGE_VAR: &str = "c";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PuiseuxError {
    #[error("the polynomial is identically zero")]
    ZeroPolynomial,
    #[error("the origin is not on the curve: F(0,0) = {0}")]
    OriginNotOnCurve(String),
    #[error("polynomial uses variables other than x and y: {0}")]
    UnexpectedVariables(String),
    #[error("the Newton polygon has no edge with positive exponent")]
    NoValidEdge,
    #[error("edge polynomial {0} has no positive rational root; branch coefficient is not rational")]
    NoPositiveRationalRoot(String),
    #[error("edge polynomial {0} has no rational root; branch coefficient is not rational")]
    NoRationalRoot(String),
    #[error("branch needs ramification beyond x^(1/{current}) (next exponent {exponent})")]
    ReRamification { current: u32, exponent: String },
    #[error("number of terms must be positive")]
    NoTerms,
}

/// Exponent pair `(i, j)` of a term `x^i y^j` with nonzero coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SupportPoint {
    pub i: u32,
    pub j: u32,
}

/// A lower-left edge of the Newton polygon.
#[derive(Clone, Debug, PartialEq)]
pub struct NewtonPolygonEdge {
    /// Endpoint with the larger `j`.
    pub start: SupportPoint,
    pub end: SupportPoint,
    /// Branch exponent `γ`: along the edge `i + γ·j` is constant, so the
    /// branch starts as `y ~ c·x^γ`.
    pub exponent: Rational,
    /// `Σ a_ij c^j` over the support points on the edge.
    pub edge_polynomial: UniPoly,
}

impl NewtonPolygonEdge {
    /// The constant value of `i + γ·j` along the edge.
    pub fn weight(&self) -> Rational {
        weight(&self.start, &self.exponent)
    }
}

fn weight(p: &SupportPoint, gamma: &Rational) -> Rational {
    rational::int(p.i as i64) + gamma * rational::int(p.j as i64)
}

/// Order of vanishing, with `Infinite` for the zero function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(Rational),
    Infinite,
}

impl PartialOrd for Order {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Order {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Order::Finite(a), Order::Finite(b)) => a.cmp(b),
            (Order::Finite(_), Order::Infinite) => Ordering::Less,
            (Order::Infinite, Order::Finite(_)) => Ordering::Greater,
            (Order::Infinite, Order::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(r) => f.write_str(&rational::format(r)),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTerm {
    /// Exponent of `x`; its denominator divides the ramification index.
    pub exponent: Rational,
    pub coeff: Rational,
}

/// Truncated series `y = Σ coeff · x^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuiseuxSeries {
    pub ramification: u32,
    pub terms: Vec<SeriesTerm>,
    /// The branch differs from the truncation by `O(x^order)`;
    /// `Infinite` when the series is an exact root.
    pub truncation_order: Order,
}

impl PuiseuxSeries {
    pub fn empty() -> Self {
        PuiseuxSeries {
            ramification: 1,
            terms: Vec::new(),
            truncation_order: Order::Finite(Rational::zero()),
        }
    }

    pub fn is_exact(&self) -> bool {
        self.truncation_order == Order::Infinite
    }

    /// The first `n` terms (the truncation order becomes the next exponent).
    pub fn truncate(&self, n: usize) -> PuiseuxSeries {
        if n >= self.terms.len() {
            return self.clone();
        }
        PuiseuxSeries {
            ramification: self.ramification,
            terms: self.terms[..n].to_vec(),
            truncation_order: Order::Finite(self.terms[n].exponent.clone()),
        }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.terms
            .iter()
            .map(|t| rational::to_f64(&t.coeff) * x.powf(rational::to_f64(&t.exponent)))
            .sum()
    }

    /// The series as a polynomial in `u = x^(1/N)`.
    fn in_ramified(&self, vars: &[String]) -> MultiPoly {
        let n = rational::int(self.ramification as i64);
        let u = MultiPoly::var(U, vars);
        self.terms.iter().fold(MultiPoly::zero(u.vars()), |acc, t| {
            let k = (&t.exponent * &n).to_integer().to_u32().expect("small exponent");
            &acc + &u.pow(k).scale(&t.coeff)
        })
    }

    /// Text with an `O(x^k)` tail, or nothing appended for exact series.
    pub fn render_with_order(&self) -> String {
        let body = self.to_string();
        match &self.truncation_order {
            Order::Infinite => body,
            Order::Finite(k) => format!("{body} + O({})", power_text(k)),
        }
    }
}

fn power_text(e: &Rational) -> String {
    if e.is_one() {
        "x".into()
    } else if e.is_integer() {
        format!("x^{}", e.numer())
    } else {
        format!("x^({})", rational::format(e))
    }
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let mag = t.coeff.abs();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if t.exponent.is_zero() {
                f.write_str(&rational::format(&mag))?;
            } else if mag.is_one() {
                f.write_str(&power_text(&t.exponent))?;
            } else {
                write!(f, "{}*{}", rational::format(&mag), power_text(&t.exponent))?;
            }
        }
        Ok(())
    }
}

fn check_xy(f: &MultiPoly) -> Result<(), PuiseuxError> {
    if f.is_zero() {
        return Err(PuiseuxError::ZeroPolynomial);
    }
    let extra: Vec<String> = f.used_vars().into_iter().filter(|v| v != X && v != Y).collect();
    if !extra.is_empty() {
        return Err(PuiseuxError::UnexpectedVariables(extra.join(", ")));
    }
    Ok(())
}

fn support(f: &MultiPoly, xv: &str, yv: &str) -> Vec<(SupportPoint, Rational)> {
    let xi = f.var_index(xv);
    let yi = f.var_index(yv);
    f.terms()
        .map(|(m, c)| {
            let i = xi.map(|k| m[k]).unwrap_or(0);
            let j = yi.map(|k| m[k]).unwrap_or(0);
            (SupportPoint { i, j }, c.clone())
        })
        .collect()
}

fn cross(o: &SupportPoint, a: &SupportPoint, b: &SupportPoint) -> i64 {
    let (oi, oj) = (o.i as i64, o.j as i64);
    (a.i as i64 - oi) * (b.j as i64 - oj) - (a.j as i64 - oj) * (b.i as i64 - oi)
}

/// Lower-left hull edges (those with positive branch exponent), ordered
/// from the `y`-axis side, i.e. by increasing exponent.
fn polygon_of(f: &MultiPoly, xv: &str, yv: &str) -> Vec<NewtonPolygonEdge> {
    let pts = support(f, xv, yv);
    let mut sorted: Vec<SupportPoint> = pts.iter().map(|(p, _)| *p).collect();
    sorted.sort();
    let mut hull: Vec<SupportPoint> = Vec::new();
    for p in sorted {
        while hull.len() >= 2 && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], &p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    let mut edges = Vec::new();
    for w in hull.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b.j >= a.j {
            break;
        }
        let gamma = Rational::new(((b.i - a.i) as i64).into(), ((a.j - b.j) as i64).into());
        let level = weight(&a, &gamma);
        let mut coeffs = vec![Rational::zero(); a.j as usize + 1];
        for (p, c) in &pts {
            if weight(p, &gamma) == level {
                coeffs[p.j as usize] += c;
            }
        }
        edges.push(NewtonPolygonEdge {
            start: a,
            end: b,
            exponent: gamma,
            edge_polynomial: UniPoly::new(EDGE_VAR, coeffs),
        });
    }
    edges
}

/// Newton polygon of `F(x, y)` at the origin.
pub fn newton_polygon(f: &MultiPoly) -> Result<Vec<NewtonPolygonEdge>, PuiseuxError> {
    check_xy(f)?;
    let c0 = f.constant_term();
    if !c0.is_zero() {
        return Err(PuiseuxError::OriginNotOnCurve(rational::format(&c0)));
    }
    Ok(polygon_of(f, X, Y))
}

/// Distinct nonzero rational roots with multiplicities, ascending.
fn nonzero_roots(p: &UniPoly) -> Vec<(Rational, usize)> {
    let mut out: Vec<(Rational, usize)> = Vec::new();
    for r in p.rational_roots() {
        if r.is_zero() {
            continue;
        }
        match out.last_mut() {
            Some((last, k)) if *last == r => *k += 1,
            _ => out.push((r, 1)),
        }
    }
    out
}

/// Status of one enumerated branch.
#[derive(Clone, Debug, PartialEq)]
pub struct Branch {
    pub series: PuiseuxSeries,
    /// The branch chosen by preferring the smallest positive coefficient
    /// at every split.
    pub principal: bool,
    /// Why the expansion stopped before the requested number of terms.
    pub stopped: Option<PuiseuxError>,
}

struct Expander {
    n: u32,
    num_terms: usize,
    out: Vec<Branch>,
}

impl Expander {
    fn order_of_next(&self, g: &MultiPoly, last_k: &Rational) -> Order {
        if g.specialize(Y, &Rational::zero()).is_zero() {
            return Order::Infinite;
        }
        let n = rational::int(self.n as i64);
        polygon_of(g, U, Y)
            .into_iter()
            .find(|e| &e.exponent > last_k)
            .map(|e| Order::Finite(e.exponent / &n))
            .unwrap_or(Order::Finite(Rational::zero()))
    }

    /// `g` is the shifted polynomial in `(u, y)`; `last_k` the `u`-exponent
    /// of the last term.
    fn grow(&mut self, g: MultiPoly, terms: Vec<SeriesTerm>, last_k: Rational, principal: bool) {
        let ramification = self.n;
        let finish = move |terms: Vec<SeriesTerm>, order: Order, stopped: Option<PuiseuxError>| Branch {
            series: PuiseuxSeries {
                ramification,
                terms,
                truncation_order: order,
            },
            principal,
            stopped,
        };
        if g.specialize(Y, &Rational::zero()).is_zero() {
            let b = finish(terms, Order::Infinite, None);
            self.out.push(b);
            return;
        }
        if terms.len() >= self.num_terms {
            let order = self.order_of_next(&g, &last_k);
            let b = finish(terms, order, None);
            self.out.push(b);
            return;
        }
        let n = rational::int(self.n as i64);
        let edges: Vec<NewtonPolygonEdge> = polygon_of(&g, U, Y)
            .into_iter()
            .filter(|e| e.exponent > last_k)
            .collect();
        if edges.is_empty() {
            let b = finish(terms, Order::Finite(Rational::zero()), Some(PuiseuxError::NoValidEdge));
            self.out.push(b);
            return;
        }
        let choice = principal_choice(&edges);
        for (ei, e) in edges.iter().enumerate() {
            if !e.exponent.is_integer() {
                let b = finish(
                    terms.clone(),
                    Order::Finite(&e.exponent / &n),
                    Some(PuiseuxError::ReRamification {
                        current: self.n,
                        exponent: rational::format(&(&e.exponent / &n)),
                    }),
                );
                self.out.push(b);
                continue;
            }
            let roots = nonzero_roots(&e.edge_polynomial);
            if roots.is_empty() {
                let b = finish(
                    terms.clone(),
                    Order::Finite(&e.exponent / &n),
                    Some(PuiseuxError::NoRationalRoot(e.edge_polynomial.to_string())),
                );
                self.out.push(b);
                continue;
            }
            for (ri, (c, _mult)) in roots.iter().enumerate() {
                let k = e.exponent.to_integer().to_u32().expect("small exponent");
                let vars = g.vars().to_vec();
                let shift = &MultiPoly::var(U, &vars).pow(k).scale(c) + &MultiPoly::var(Y, &vars);
                let next = g.compose(Y, &shift);
                let mut t = terms.clone();
                t.push(SeriesTerm {
                    exponent: &e.exponent / &n,
                    coeff: c.clone(),
                });
                let p = principal && choice == Some((ei, ri));
                self.grow(next, t, e.exponent.clone(), p);
            }
        }
    }
}

/// Edge and root index of the preferred continuation: the first edge with
/// a positive rational root and its smallest positive root; failing that,
/// the first rational root of the first edge that has one.
fn principal_choice(edges: &[NewtonPolygonEdge]) -> Option<(usize, usize)> {
    let all: Vec<Vec<(Rational, usize)>> = edges
        .iter()
        .map(|e| nonzero_roots(&e.edge_polynomial))
        .collect();
    for (ei, roots) in all.iter().enumerate() {
        if let Some(ri) = roots.iter().position(|(r, _)| r.is_positive()) {
            return Some((ei, ri));
        }
    }
    all.iter()
        .enumerate()
        .find(|(_, r)| !r.is_empty())
        .map(|(ei, _)| (ei, 0))
}

/// Expands every branch through the origin to at most `num_terms` terms.
/// Branches come out ordered by leading exponent, then by coefficient.
pub fn expand_all_branches(f: &MultiPoly, num_terms: usize) -> Result<Vec<Branch>, PuiseuxError> {
    if num_terms == 0 {
        return Err(PuiseuxError::NoTerms);
    }
    let edges = newton_polygon(f)?;
    let mut out = Vec::new();
    if f.specialize(Y, &Rational::zero()).is_zero() {
        // y = 0 is itself a branch
        out.push(Branch {
            series: PuiseuxSeries {
                ramification: 1,
                terms: Vec::new(),
                truncation_order: Order::Infinite,
            },
            principal: false,
            stopped: None,
        });
    }
    if edges.is_empty() {
        if out.is_empty() {
            return Err(PuiseuxError::NoValidEdge);
        }
        return Ok(out);
    }
    let choice = principal_choice(&edges);
    for (ei, e) in edges.iter().enumerate() {
        let n_ram = e.exponent.denom().to_u32().expect("small ramification");
        let roots = nonzero_roots(&e.edge_polynomial);
        if roots.is_empty() {
            out.push(Branch {
                series: PuiseuxSeries {
                    ramification: n_ram,
                    terms: Vec::new(),
                    truncation_order: Order::Finite(e.exponent.clone()),
                },
                principal: false,
                stopped: Some(PuiseuxError::NoRationalRoot(e.edge_polynomial.to_string())),
            });
            continue;
        }
        // x = u^N
        let vars = vec![U.to_string(), Y.to_string()];
        let u_n = MultiPoly::var(U, &vars).pow(n_ram);
        let ramified = f.compose(X, &u_n).align(&vars).expect("only u and y remain");
        let k = (&e.exponent * rational::int(n_ram as i64)).to_integer();
        let k32 = k.to_u32().expect("small exponent");
        for (ri, (c, _)) in roots.iter().enumerate() {
            let shift = &MultiPoly::var(U, &vars).pow(k32).scale(c) + &MultiPoly::var(Y, &vars);
            let g = ramified.compose(Y, &shift);
            let mut ex = Expander {
                n: n_ram,
                num_terms,
                out: Vec::new(),
            };
            let term = SeriesTerm {
                exponent: e.exponent.clone(),
                coeff: c.clone(),
            };
            ex.grow(g, vec![term], Rational::from_integer(k.clone()), choice == Some((ei, ri)));
            out.extend(ex.out);
        }
    }
    Ok(out)
}

/// The principal branch: positive leading coefficient, and the smallest
/// positive coefficient wherever the branch splits.
pub fn expand_branch(f: &MultiPoly, num_terms: usize) -> Result<PuiseuxSeries, PuiseuxError> {
    let edges = newton_polygon(f)?;
    if num_terms == 0 {
        return Err(PuiseuxError::NoTerms);
    }
    if edges.is_empty() {
        if f.specialize(Y, &Rational::zero()).is_zero() {
            return Ok(PuiseuxSeries {
                ramification: 1,
                terms: Vec::new(),
                truncation_order: Order::Infinite,
            });
        }
        return Err(PuiseuxError::NoValidEdge);
    }
    let has_positive = edges
        .iter()
        .any(|e| nonzero_roots(&e.edge_polynomial).iter().any(|(r, _)| r.is_positive()));
    if !has_positive {
        let polys: Vec<String> = edges.iter().map(|e| e.edge_polynomial.to_string()).collect();
        return Err(PuiseuxError::NoPositiveRationalRoot(polys.join("; ")));
    }
    let branches = expand_all_branches(f, num_terms)?;
    let b = branches
        .into_iter()
        .find(|b| b.principal)
        .expect("a positive leading root yields a principal branch");
    match b.stopped {
        Some(err) => Err(err),
        None => Ok(b.series),
    }
}

/// `x`-order of `F(x, s(x))`, computed exactly in `u = x^(1/N)`.
pub fn residual_order(f: &MultiPoly, s: &PuiseuxSeries) -> Order {
    let vars = vec![U.to_string()];
    let u_n = MultiPoly::var(U, &vars).pow(s.ramification);
    let ys = s.in_ramified(&vars);
    let r = f.compose(X, &u_n).compose(Y, &ys);
    if r.is_zero() {
        return Order::Infinite;
    }
    let ui = r.var_index(U);
    let low = r
        .terms()
        .map(|(m, _)| ui.map(|i| m[i]).unwrap_or(0))
        .min()
        .expect("nonzero");
    Order::Finite(Rational::new((low as i64).into(), (s.ramification as i64).into()))
}

/// Least common multiple of the ramification indices; handy when series
/// from several branches are compared.
pub fn common_ramification(series: &[PuiseuxSeries]) -> u32 {
    series.iter().fold(1u32, |acc, s| acc.lcm(&s.ramification))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};
    use crate::parse::parse_polynomial;

    fn f(text: &str) -> MultiPoly {
        parse_polynomial(text, &["x", "y"]).unwrap()
    }

    fn arnold() -> MultiPoly {
        f("y^4 - 2*x*y^2 - x^3 + x^2")
    }

    #[test]
    fn polygon_of_parabola() {
        let edges = newton_polygon(&f("y^2 - x")).unwrap();
        assert_eq!(edges.len(), 1);
        assert_eq!(edges[0].start, SupportPoint { i: 0, j: 2 });
        assert_eq!(edges[0].end, SupportPoint { i: 1, j: 0 });
        assert_eq!(edges[0].exponent, rat(1, 2));
    }

    #[test]
    fn polygon_of_line() {
        let edges = newton_polygon(&f("y - x")).unwrap();
        assert_eq!(edges.len(), 1);
        assert_eq!(edges[0].exponent, int(1));
    }

    #[test]
    fn polygon_of_arnold() {
        let edges = newton_polygon(&arnold()).unwrap();
        assert_eq!(edges.len(), 1);
        assert_eq!(edges[0].start, SupportPoint { i: 0, j: 4 });
        assert_eq!(edges[0].end, SupportPoint { i: 2, j: 0 });
        assert_eq!(edges[0].exponent, rat(1, 2));
        // c^4 - 2c^2 + 1
        assert_eq!(edges[0].edge_polynomial, UniPoly::from_ints(EDGE_VAR, &[1, 0, -2, 0, 1]));
    }

    #[test]
    fn polygon_errors() {
        assert_eq!(
            newton_polygon(&f("x^2 + y^2 - 1")),
            Err(PuiseuxError::OriginNotOnCurve("-1".into()))
        );
        assert_eq!(newton_polygon(&f("0")), Err(PuiseuxError::ZeroPolynomial));
    }

    #[test]
    fn arnold_two_terms() {
        let s = expand_branch(&arnold(), 2).unwrap();
        assert_eq!(s.ramification, 2);
        assert_eq!(s.to_string(), "x^(1/2) + 1/2*x");
    }

    #[test]
    fn arnold_five_terms() {
        let s = expand_branch(&arnold(), 5).unwrap();
        assert_eq!(
            s.to_string(),
            "x^(1/2) + 1/2*x - 1/8*x^(3/2) + 1/16*x^2 - 5/128*x^(5/2)"
        );
    }

    #[test]
    fn line_terminates() {
        let s = expand_branch(&f("y - x"), 4).unwrap();
        assert_eq!(s.to_string(), "x");
        assert!(s.is_exact());
        assert_eq!(residual_order(&f("y - x"), &s), Order::Infinite);
    }

    #[test]
    fn residual_orders() {
        let s2 = expand_branch(&arnold(), 2).unwrap();
        assert!(residual_order(&arnold(), &s2) > Order::Finite(rat(3, 2)));
        assert_eq!(residual_order(&f("y^2 - x"), &PuiseuxSeries::empty()), Order::Finite(int(1)));
    }

    #[test]
    fn all_arnold_branches() {
        let bs = expand_all_branches(&arnold(), 3).unwrap();
        assert_eq!(bs.len(), 4);
        assert_eq!(bs.iter().filter(|b| b.principal).count(), 1);
        for b in &bs {
            assert!(b.stopped.is_none());
            assert!(residual_order(&arnold(), &b.series) > Order::Finite(int(3)));
        }
    }

    #[test]
    fn irrational_leading_coefficient() {
        assert!(matches!(
            expand_branch(&f("y^2 - 2*x"), 2),
            Err(PuiseuxError::NoPositiveRationalRoot(_))
        ));
    }

    #[test]
    fn negative_only_branch() {
        assert!(matches!(
            expand_branch(&f("y + x"), 2),
            Err(PuiseuxError::NoPositiveRationalRoot(_))
        ));
        let all = expand_all_branches(&f("y + x"), 2).unwrap();
        assert_eq!(all[0].series.to_string(), "-x");
    }

    #[test]
    fn render_with_tail() {
        let s = expand_branch(&arnold(), 5).unwrap();
        assert!(s.render_with_order().ends_with("+ O(x^3)"), "{}", s.render_with_order());
    }
}
