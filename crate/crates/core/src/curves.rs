//! Parametric curves, centered parametrizations, Bezier ovals,
//! implicitization and singular points.

use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::rational::{self, Rational};
use crate::algebra::{AlgebraError, IntervalQ, MultiPoly, RationalFunction, UniPoly};
use crate::elimination::{self, ElimError};
use crate::parse::{self, ParseError};

/// Parameter name used throughout.
pub const PARAM: &str = "t";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("denominator of the {component} component vanishes in {interval}")]
    DenominatorRoot { component: &'static str, interval: String },
    #[error("endpoints ({start}) and ({end}) do not both equal the center ({center})")]
    EndpointMismatch { start: String, end: String, center: String },
    #[error("x-component returns to the center abscissa {x0} inside the interval ({count} time(s))")]
    InteriorCrossing { x0: String, count: usize },
    #[error("x-component is constantly equal to the center abscissa {0}")]
    ConstantAbscissa(String),
    #[error("parameter {t} lies outside {interval}")]
    OutsideInterval { t: String, interval: String },
    #[error("curve has a constant component; implicit equation undefined")]
    ConstantComponent,
    #[error("need at least 2 control points, got {0}")]
    TooFewPoints(usize),
    #[error("polynomial must involve both x and y")]
    NotBivariate,
    #[error("curve is not square-free: both discriminant resultants vanish")]
    NotSquareFree,
    #[error("curve text: {0}")]
    Syntax(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Elimination(#[from] ElimError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn origin() -> Self {
        Point::new(Rational::zero(), Rational::zero())
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (rational::to_f64(&self.x), rational::to_f64(&self.y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", rational::format(&self.x), rational::format(&self.y))
    }
}

/// `x = g(t)`, `y = f(t)` for `t` in a closed interval.
#[derive(Clone, Debug, PartialEq)]
pub struct ParametricCurve {
    g: RationalFunction,
    f: RationalFunction,
    interval: IntervalQ,
}

fn has_root_in_closed(p: &UniPoly, iv: &IntervalQ) -> bool {
    p.eval(&iv.lo).is_zero() || p.count_roots(iv) > 0
}

impl ParametricCurve {
    pub fn new(g: RationalFunction, f: RationalFunction, interval: IntervalQ) -> Result<Self, CurveError> {
        for (name, c) in [("x", &g), ("y", &f)] {
            if has_root_in_closed(c.denominator(), &interval) {
                return Err(CurveError::DenominatorRoot {
                    component: name,
                    interval: interval.to_string(),
                });
            }
        }
        let g = rename(g);
        let f = rename(f);
        Ok(ParametricCurve { g, f, interval })
    }

    pub fn polynomial(g: UniPoly, f: UniPoly, interval: IntervalQ) -> Result<Self, CurveError> {
        Self::new(RationalFunction::from_poly(g), RationalFunction::from_poly(f), interval)
    }

    pub fn g(&self) -> &RationalFunction {
        &self.g
    }

    pub fn f(&self) -> &RationalFunction {
        &self.f
    }

    pub fn interval(&self) -> &IntervalQ {
        &self.interval
    }

    pub fn is_polynomial(&self) -> bool {
        self.g.is_polynomial() && self.f.is_polynomial()
    }

    /// Both components as polynomials, when they are.
    pub fn polynomial_components(&self) -> Option<(UniPoly, UniPoly)> {
        Some((self.g.as_polynomial()?, self.f.as_polynomial()?))
    }

    fn check_in(&self, t: &Rational) -> Result<(), CurveError> {
        if self.interval.contains(t) {
            Ok(())
        } else {
            Err(CurveError::OutsideInterval {
                t: rational::format(t),
                interval: self.interval.to_string(),
            })
        }
    }

    pub fn point_at(&self, t: &Rational) -> Result<Point, CurveError> {
        self.check_in(t)?;
        Ok(Point::new(self.g.eval(t)?, self.f.eval(t)?))
    }

    pub fn eval_f64(&self, t: f64) -> (f64, f64) {
        (self.g.eval_f64(t), self.f.eval_f64(t))
    }

    pub fn bounds_f64(&self) -> (f64, f64) {
        (rational::to_f64(&self.interval.lo), rational::to_f64(&self.interval.hi))
    }
}

fn rename(r: RationalFunction) -> RationalFunction {
    if r.var() == PARAM {
        return r;
    }
    RationalFunction::new(
        r.numerator().clone().with_var(PARAM),
        r.denominator().clone().with_var(PARAM),
    )
    .expect("renaming keeps a nonzero denominator")
}

/// A curve known to start and end at `center`, with `g(t) ≠ center.x`
/// strictly inside the interval.
#[derive(Clone, Debug, PartialEq)]
pub struct CenteredParametrization {
    curve: ParametricCurve,
    center: Point,
}

impl CenteredParametrization {
    pub fn curve(&self) -> &ParametricCurve {
        &self.curve
    }

    pub fn center(&self) -> &Point {
        &self.center
    }
}

pub fn validate_centered(curve: &ParametricCurve, center: &Point) -> Result<CenteredParametrization, CurveError> {
    let iv = curve.interval();
    let start = curve.point_at(&iv.lo)?;
    let end = curve.point_at(&iv.hi)?;
    if start != *center || end != *center {
        return Err(CurveError::EndpointMismatch {
            start: start.to_string(),
            end: end.to_string(),
            center: center.to_string(),
        });
    }
    let shifted = curve
        .g()
        .sub(&RationalFunction::from_poly(UniPoly::constant(PARAM, center.x.clone())));
    let num = shifted.numerator();
    if num.is_zero() {
        return Err(CurveError::ConstantAbscissa(rational::format(&center.x)));
    }
    // roots in (lo, hi]; hi itself is a root since g(hi) = x0
    let count = num.count_roots(iv) - 1;
    if count > 0 {
        return Err(CurveError::InteriorCrossing {
            x0: rational::format(&center.x),
            count,
        });
    }
    Ok(CenteredParametrization {
        curve: curve.clone(),
        center: center.clone(),
    })
}

/// `num(var·den − num)` as a polynomial in `var` and `t`.
fn cleared(var: &str, r: &RationalFunction, vars: &[String]) -> MultiPoly {
    let v = MultiPoly::var(var, vars);
    let num = MultiPoly::from_univariate(r.numerator(), vars).align(vars).expect("superset");
    let den = MultiPoly::from_univariate(r.denominator(), vars).align(vars).expect("superset");
    &(&v * &den) - &num
}

/// Implicit equation `F(x, y) = 0` of the curve: the resultant in `t` of
/// the cleared components, made primitive.
pub fn implicitize(curve: &ParametricCurve) -> Result<MultiPoly, CurveError> {
    if curve.g().is_constant() || curve.f().is_constant() {
        return Err(CurveError::ConstantComponent);
    }
    let vars: Vec<String> = ["x", "y", PARAM].iter().map(|s| s.to_string()).collect();
    let ex = cleared("x", curve.g(), &vars);
    let ey = cleared("y", curve.f(), &vars);
    let r = elimination::resultant_nondegenerate(&ex, &ey, PARAM, "implicitization")?;
    let cleaned = elimination::primitive_squarefree(&r.poly, "x");
    let xy = ["x".to_string(), "y".to_string()];
    Ok(cleaned.poly.align(&xy).expect("t eliminated"))
}

/// Substitutes the parametrization into `F`; the numerator of the
/// resulting rational function in `t`.
pub fn substitute_curve(poly: &MultiPoly, curve: &ParametricCurve) -> UniPoly {
    let sx = poly.substitute("x", curve.g());
    let sy = sx.numerator.substitute("y", curve.f());
    sy.numerator
        .to_univariate(PARAM)
        .unwrap_or_else(|| UniPoly::constant(PARAM, sy.numerator.constant_term()))
}

#[derive(Clone, Debug, PartialEq)]
pub struct BezierControlPolygon {
    control_points: Vec<Point>,
}

impl BezierControlPolygon {
    pub fn new(control_points: Vec<Point>) -> Result<Self, CurveError> {
        if control_points.len() < 2 {
            return Err(CurveError::TooFewPoints(control_points.len()));
        }
        Ok(BezierControlPolygon { control_points })
    }

    pub fn points(&self) -> &[Point] {
        &self.control_points
    }

    /// First and last control points coincide.
    pub fn is_closed(&self) -> bool {
        self.control_points.first() == self.control_points.last()
    }

    pub fn degree(&self) -> usize {
        self.control_points.len() - 1
    }
}

fn binomial(n: usize, k: usize) -> Rational {
    let mut b = Rational::one();
    for i in 0..k {
        b = b * rational::int((n - i) as i64) / rational::int((i + 1) as i64);
    }
    b
}

/// Bernstein parametrization on `[0, 1]`.
pub fn bezier_to_parametric(cp: &BezierControlPolygon) -> Result<ParametricCurve, CurveError> {
    let n = cp.degree();
    let t = UniPoly::identity(PARAM);
    let one_minus = &UniPoly::one(PARAM) - &t;
    let mut gx = UniPoly::zero(PARAM);
    let mut gy = UniPoly::zero(PARAM);
    for (i, p) in cp.points().iter().enumerate() {
        let basis = (&t.pow(i as u32) * &one_minus.pow((n - i) as u32)).scale(&binomial(n, i));
        gx = &gx + &basis.scale(&p.x);
        gy = &gy + &basis.scale(&p.y);
    }
    let iv = IntervalQ::new(Rational::zero(), Rational::one())?;
    ParametricCurve::polynomial(gx, gy, iv)
}

/// `(g'(t0), f'(t0))`.
pub fn tangent_vector(curve: &ParametricCurve, t0: &Rational) -> Result<(Rational, Rational), CurveError> {
    curve.check_in(t0)?;
    Ok((curve.g().derivative().eval(t0)?, curve.f().derivative().eval(t0)?))
}

fn eval_xy(p: &MultiPoly, pt: &Point) -> Rational {
    p.evaluate_at(&[("x", pt.x.clone()), ("y", pt.y.clone())])
        .expect("polynomial in x and y")
}

pub fn is_singular_at(poly: &MultiPoly, pt: &Point) -> bool {
    eval_xy(poly, pt).is_zero()
        && eval_xy(&poly.partial_derivative("x"), pt).is_zero()
        && eval_xy(&poly.partial_derivative("y"), pt).is_zero()
}

/// Rational singular points together with the number of real candidate
/// abscissae that are irrational.
#[derive(Clone, Debug, PartialEq)]
pub struct SingularReport {
    pub points: Vec<Point>,
    pub irrational_abscissae: usize,
}

fn x_part(p: &MultiPoly) -> Option<UniPoly> {
    if p.is_zero() {
        return None;
    }
    Some(
        p.to_univariate("x")
            .unwrap_or_else(|| UniPoly::constant("x", p.constant_term())),
    )
}

fn y_part(p: &MultiPoly, x: &Rational) -> UniPoly {
    let s = p.specialize("x", x);
    s.to_univariate("y")
        .unwrap_or_else(|| UniPoly::constant("y", s.constant_term()))
        .with_var("y")
}

fn distinct(mut v: Vec<Rational>) -> Vec<Rational> {
    v.dedup();
    v
}

pub fn rational_singular_points(poly: &MultiPoly) -> Result<SingularReport, CurveError> {
    if !poly.uses_var("x") || !poly.uses_var("y") {
        return Err(CurveError::NotBivariate);
    }
    let extra = poly.used_vars().into_iter().any(|v| v != "x" && v != "y");
    if extra {
        return Err(CurveError::NotBivariate);
    }
    let fx = poly.partial_derivative("x");
    let fy = poly.partial_derivative("y");
    let r1 = elimination::resultant(poly, &fy, "y")?;
    let r2 = if fx.is_zero() { MultiPoly::zero(poly.vars()) } else { elimination::resultant(poly, &fx, "y")? };
    let parts: Vec<UniPoly> = [r1, r2].iter().filter_map(x_part).collect();
    let Some(h) = parts.iter().skip(1).fold(parts.first().cloned(), |acc, p| acc.map(|a| a.gcd(p))) else {
        return Err(CurveError::NotSquareFree);
    };
    if h.is_constant() {
        return Ok(SingularReport {
            points: Vec::new(),
            irrational_abscissae: 0,
        });
    }
    let xs = distinct(h.rational_roots());
    let sf = h.square_free_part();
    let bound = sf.root_bound();
    let real = sf.count_roots(&IntervalQ::new(-bound.clone() - Rational::one(), bound + Rational::one())?);
    let irrational_abscissae = real - xs.len();

    let found: Vec<Vec<Point>> = xs
        .par_iter()
        .map(|x| {
            let g = y_part(poly, x).gcd(&y_part(&fx, x)).gcd(&y_part(&fy, x));
            if g.is_zero() {
                // a whole vertical line of singular points: not reduced
                return Err(CurveError::NotSquareFree);
            }
            Ok(distinct(g.rational_roots())
                .into_iter()
                .map(|y| Point::new(x.clone(), y))
                .filter(|p| is_singular_at(poly, p))
                .collect())
        })
        .collect::<Result<_, _>>()?;
    Ok(SingularReport {
        points: found.into_iter().flatten().collect(),
        irrational_abscissae,
    })
}

/// `F(x, y) = F(y, x)`.
pub fn is_symmetric_swap(poly: &MultiPoly) -> bool {
    (poly - &poly.swap_variables("x", "y")).is_zero()
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvexityProbe {
    pub samples: usize,
    pub positive: usize,
    pub negative: usize,
}

impl ConvexityProbe {
    /// No sign change of the curvature numerator among the samples.
    pub fn looks_convex(&self) -> bool {
        self.positive == 0 || self.negative == 0
    }
}

/// Signs of `g'f'' − f'g''` at evenly spaced interior parameters.
pub fn convexity_probe(curve: &ParametricCurve, samples: usize) -> ConvexityProbe {
    let (g1, f1) = (curve.g().derivative(), curve.f().derivative());
    let (g2, f2) = (g1.derivative(), f1.derivative());
    let (lo, hi) = curve.bounds_f64();
    let mut probe = ConvexityProbe {
        samples,
        positive: 0,
        negative: 0,
    };
    for k in 0..samples {
        let t = lo + (hi - lo) * (k as f64 + 0.5) / samples as f64;
        let (a, b, c, d) = (g1.eval_f64(t), f1.eval_f64(t), g2.eval_f64(t), f2.eval_f64(t));
        let cross = a * d - b * c;
        let scale = (a.hypot(b) * c.hypot(d)).max(f64::MIN_POSITIVE);
        if cross / scale > 1e-12 {
            probe.positive += 1;
        } else if cross / scale < -1e-12 {
            probe.negative += 1;
        }
    }
    probe
}

/// Curve given in text form.
#[derive(Clone, Debug, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum CurveSpec {
    Param(ParametricCurve),
    Bezier(BezierControlPolygon),
}

impl CurveSpec {
    pub fn to_curve(&self) -> Result<ParametricCurve, CurveError> {
        match self {
            CurveSpec::Param(c) => Ok(c.clone()),
            CurveSpec::Bezier(b) => bezier_to_parametric(b),
        }
    }
}

fn constant(text: &str) -> Result<Rational, CurveError> {
    let r = parse::parse_rational_function(text.trim(), PARAM)?;
    if !r.is_constant() {
        return Err(CurveError::Syntax(format!("expected a rational number, got `{}`", text.trim())));
    }
    Ok(r.eval(&Rational::zero())?)
}

/// Parses `param x=<expr>; y=<expr>; t in [a,b]` (the `param` keyword is
/// optional) or `bezier (x0,y0) (x1,y1) ...`.
pub fn parse_curve(text: &str) -> Result<CurveSpec, CurveError> {
    let text = text.trim();
    if let Some(rest) = text.strip_prefix("bezier") {
        return parse_bezier(rest).map(CurveSpec::Bezier);
    }
    let body = text.strip_prefix("param").unwrap_or(text);
    let parts: Vec<&str> = body.split(';').map(str::trim).filter(|s| !s.is_empty()).collect();
    let [xs, ys, ts] = parts.as_slice() else {
        return Err(CurveError::Syntax("expected `x=...; y=...; t in [a,b]`".into()));
    };
    let component = |s: &str, name: &str| -> Result<RationalFunction, CurveError> {
        let (lhs, rhs) = s
            .split_once('=')
            .ok_or_else(|| CurveError::Syntax(format!("expected `{name}=<expr>`")))?;
        if lhs.trim() != name {
            return Err(CurveError::Syntax(format!("expected `{name}=`, got `{}=`", lhs.trim())));
        }
        Ok(parse::parse_rational_function(rhs.trim(), PARAM)?)
    };
    let g = component(xs, "x")?;
    let f = component(ys, "y")?;
    let range = ts
        .strip_prefix(PARAM)
        .map(str::trim_start)
        .and_then(|s| s.strip_prefix("in"))
        .map(str::trim)
        .and_then(|s| s.strip_prefix('['))
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| CurveError::Syntax("expected `t in [a,b]`".into()))?;
    let (a, b) = range
        .split_once(',')
        .ok_or_else(|| CurveError::Syntax("expected `[a,b]`".into()))?;
    let iv = IntervalQ::new(constant(a)?, constant(b)?)?;
    Ok(CurveSpec::Param(ParametricCurve::new(g, f, iv)?))
}

fn parse_bezier(text: &str) -> Result<BezierControlPolygon, CurveError> {
    let mut points = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let inner = rest
            .strip_prefix('(')
            .ok_or_else(|| CurveError::Syntax(format!("expected `(` at `{rest}`")))?;
        let close = inner
            .find(')')
            .ok_or_else(|| CurveError::Syntax("unclosed control point".into()))?;
        let (a, b) = inner[..close]
            .split_once(',')
            .ok_or_else(|| CurveError::Syntax("control point needs two coordinates".into()))?;
        points.push(Point::new(constant(a)?, constant(b)?));
        rest = inner[close + 1..].trim_start();
    }
    BezierControlPolygon::new(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn curve(text: &str) -> ParametricCurve {
        parse_curve(text).unwrap().to_curve().unwrap()
    }

    fn arnold() -> ParametricCurve {
        curve("param x=(t^2-1)^2; y=t^3-t; t in [-1,1]")
    }

    fn cubic() -> ParametricCurve {
        curve("x=3*(1-t)^2*t; y=3*(1-t)*t^2; t in [0,1]")
    }

    fn xy(text: &str) -> MultiPoly {
        parse::parse_polynomial(text, &["x", "y"]).unwrap()
    }

    fn apple() -> BezierControlPolygon {
        let pts = [(0, 0), (-3, 0), (-1, 2), (0, 2), (1, 2), (3, 0), (0, 0)];
        BezierControlPolygon::new(pts.iter().map(|&(a, b)| Point::new(int(a), int(b))).collect()).unwrap()
    }

    #[test]
    fn centered_examples() {
        assert!(validate_centered(&arnold(), &Point::origin()).is_ok());
        assert!(validate_centered(&cubic(), &Point::origin()).is_ok());
        assert!(matches!(
            validate_centered(&arnold(), &Point::new(int(1), int(0))),
            Err(CurveError::EndpointMismatch { .. })
        ));
    }

    #[test]
    fn interior_crossing_detected() {
        // x = t^2 - t returns to 0 only at the ends, x = t(t-1)(2t-1) crosses at 1/2
        let c = curve("x=t*(t-1)*(2*t-1); y=t*(1-t); t in [0,1]");
        assert!(matches!(
            validate_centered(&c, &Point::origin()),
            Err(CurveError::InteriorCrossing { count: 1, .. })
        ));
    }

    #[test]
    fn denominator_root_rejected() {
        let e = parse_curve("x=1/(t-1/2); y=t; t in [0,1]").unwrap_err();
        assert!(matches!(e, CurveError::DenominatorRoot { component: "x", .. }));
        assert!(parse_curve("x=1/(t-1); y=t; t in [0,1]").is_err());
        assert!(parse_curve("x=1/(t+1); y=t; t in [0,1]").is_ok());
    }

    #[test]
    fn implicit_equations() {
        assert_eq!(implicitize(&arnold()).unwrap(), xy("y^4 - 2*x*y^2 - x^3 + x^2"));
        assert_eq!(implicitize(&cubic()).unwrap(), xy("x^3 + y^3 + 3*(x^2*y - x*y + x*y^2)"));
        let line = curve("x=t; y=2*t; t in [0,1]");
        let f = implicitize(&line).unwrap();
        assert!((&f - &xy("y - 2*x")).is_zero() || (&f + &xy("y - 2*x")).is_zero());
    }

    #[test]
    fn implicit_vanishes_on_curve() {
        for c in [arnold(), cubic(), bezier_to_parametric(&apple()).unwrap()] {
            let f = implicitize(&c).unwrap();
            assert!(substitute_curve(&f, &c).is_zero());
        }
    }

    #[test]
    fn apple_degree_six_singular_origin() {
        let c = bezier_to_parametric(&apple()).unwrap();
        let (g, f) = c.polynomial_components().unwrap();
        // the odd x-coordinates cancel the top Bernstein coefficient
        assert_eq!(g.degree(), Some(5));
        assert_eq!(f.degree(), Some(6));
        let poly = implicitize(&c).unwrap();
        assert_eq!(poly.total_degree(), Some(6));
        assert!(is_singular_at(&poly, &Point::origin()));
    }

    #[test]
    fn rational_implicitization() {
        // unit circle
        let c = curve("x=(1-t^2)/(1+t^2); y=2*t/(1+t^2); t in [-1,1]");
        let f = implicitize(&c).unwrap();
        assert_eq!(f, xy("x^2 + y^2 - 1"));
        assert!(substitute_curve(&f, &c).is_zero());
    }

    #[test]
    fn linear_bezier() {
        let b = parse_curve("bezier (0,0) (1,0)").unwrap().to_curve().unwrap();
        assert_eq!(b.g().as_polynomial().unwrap(), UniPoly::identity(PARAM));
        assert!(b.f().is_zero());
        assert_eq!(parse_curve("bezier (0,0)"), Err(CurveError::TooFewPoints(1)));
    }

    #[test]
    fn constant_bezier_rejected_by_implicitize() {
        let b = parse_curve("bezier (0,0) (0,0) (0,0)").unwrap().to_curve().unwrap();
        assert_eq!(implicitize(&b), Err(CurveError::ConstantComponent));
    }

    #[test]
    fn tangents() {
        assert_eq!(tangent_vector(&arnold(), &int(0)).unwrap(), (int(0), int(-1)));
        assert_eq!(tangent_vector(&arnold(), &int(1)).unwrap(), (int(0), int(2)));
        let flat = curve("x=2; y=3; t in [0,1]");
        assert_eq!(tangent_vector(&flat, &rat(1, 3)).unwrap(), (int(0), int(0)));
        assert!(matches!(
            tangent_vector(&arnold(), &int(2)),
            Err(CurveError::OutsideInterval { .. })
        ));
    }

    #[test]
    fn singularity_checks() {
        let f = xy("y^4 - 2*x*y^2 - x^3 + x^2");
        assert!(is_singular_at(&f, &Point::origin()));
        assert!(!is_singular_at(&f, &Point::new(int(1), int(0))));
        assert_eq!(rational_singular_points(&f).unwrap().points, vec![Point::origin()]);
    }

    #[test]
    fn unit_square_corners() {
        let f = xy("x^2*y^2 - x^2*y - x*y^2 + x*y");
        let pts = rational_singular_points(&f).unwrap().points;
        for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            assert!(pts.contains(&Point::new(int(a), int(b))), "{pts:?}");
        }
    }

    #[test]
    fn smooth_conic() {
        let r = rational_singular_points(&xy("x^2 + y^2 - 1")).unwrap();
        assert!(r.points.is_empty());
    }

    #[test]
    fn swap_symmetry() {
        assert!(is_symmetric_swap(&xy("x^3 + y^3 + 3*(x^2*y - x*y + x*y^2)")));
        assert!(!is_symmetric_swap(&xy("y^4 - 2*x*y^2 - x^3 + x^2")));
        assert!(is_symmetric_swap(&xy("x + y")));
    }

    #[test]
    fn convexity() {
        assert!(convexity_probe(&cubic(), 256).looks_convex());
    }

    #[test]
    fn curve_text_errors() {
        assert!(matches!(parse_curve("x=t; y=t"), Err(CurveError::Syntax(_))));
        assert!(matches!(parse_curve("x=t; y=t; t in [1,0]"), Err(CurveError::Algebra(_))));
        assert!(parse_curve("bezier (0,0 (1,1)").is_err());
    }
}
