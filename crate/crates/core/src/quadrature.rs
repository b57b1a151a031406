//! Gauss–Green areas of segments cut from parametrized ovals, the damper
//! free section, and a polygon-clipping numeric oracle.
//!
//! With `I(t) = ∫_lo^t f g' dt`, the signed area enclosed by the whole
//! curve is `-I(hi)` (positive for counterclockwise traversal). A segment
//! bounded by the arc `[lo, t0]` and the chord back to the origin has
//! signed area `-I(t0) + g(t0) f(t0) / 2`.

use std::f64::consts::FRAC_PI_2;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::rational::{self, Rational};
use crate::algebra::{AlgebraError, IntervalQ, UniPoly};
use crate::curves::{CenteredParametrization, CurveError, ParametricCurve, Point, PARAM};

/// Samples used when rational components force numeric integration.
pub const NUMERIC_SAMPLES: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadError {
    #[error("curve is not closed: starts at {start} and ends at {end}")]
    NotClosed { start: String, end: String },
    #[error("signed area is zero; orientation undefined")]
    DegenerateOrientation,
    #[error("parameter {0} must lie strictly inside the interval")]
    EndpointParameter(String),
    #[error("parameter {t} lies outside {interval}")]
    OutsideInterval { t: String, interval: String },
    #[error("chord endpoint has abscissa 0 at t = {0}; slope undefined")]
    ZeroAbscissa(String),
    #[error("center must be the origin, got {0}")]
    CenterNotOrigin(String),
    #[error("g(t1) = {g1} differs from g(t2) = {g2}")]
    AbscissaMismatch { g1: String, g2: String },
    #[error("need t1 <= t2, got t1 = {t1}, t2 = {t2}")]
    Unordered { t1: String, t2: String },
    #[error("t_P = {t} lies outside the valid range {range}")]
    OutOfValidRange { t: String, range: String },
    #[error("angle {0} rad lies outside [0, pi/2]")]
    AngleOutOfRange(f64),
    #[error("angle {alpha} rad is not reached on the curve (range [{min}, {max}])")]
    AngleNotReached { alpha: f64, min: f64, max: f64 },
    #[error("chord direction is not monotone in the parameter near t = {0}")]
    NonMonotoneSlope(f64),
    #[error("exact area needs polynomial components")]
    NotPolynomial,
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Clockwise,
    CounterClockwise,
}

impl Orientation {
    fn of_sign(positive: bool) -> Self {
        if positive {
            Orientation::CounterClockwise
        } else {
            Orientation::Clockwise
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Clockwise => "clockwise",
            Orientation::CounterClockwise => "counterclockwise",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum AreaValue {
    Exact(Rational),
    Numeric(f64),
}

impl AreaValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            AreaValue::Exact(r) => rational::to_f64(r),
            AreaValue::Numeric(v) => *v,
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            AreaValue::Exact(r) => Some(r),
            AreaValue::Numeric(_) => None,
        }
    }

    fn abs(&self) -> AreaValue {
        match self {
            AreaValue::Exact(r) => AreaValue::Exact(r.abs()),
            AreaValue::Numeric(v) => AreaValue::Numeric(v.abs()),
        }
    }
}

impl fmt::Display for AreaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AreaValue::Exact(r) => f.write_str(&rational::format(r)),
            AreaValue::Numeric(v) => write!(f, "{v:.12}"),
        }
    }
}

/// An area magnitude with its signed value.
#[derive(Clone, Debug, PartialEq)]
pub struct AreaResult {
    pub value: AreaValue,
    pub signed: AreaValue,
    /// Orientation of the curve; `None` when its enclosed area is zero.
    pub orientation: Option<Orientation>,
    pub warning: Option<String>,
}

impl AreaResult {
    fn from_signed(signed: AreaValue, orientation: Option<Orientation>) -> Self {
        let warning = matches!(signed, AreaValue::Numeric(_))
            .then(|| "rational components: value computed numerically".to_string());
        AreaResult {
            value: signed.abs(),
            signed,
            orientation,
            warning,
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        self.value.exact()
    }
}

/// Signed area as a polynomial in the cut parameter: arc part, chord
/// (triangle) part, and a constant.
#[derive(Clone, Debug, PartialEq)]
pub struct AreaPolynomial {
    pub arc: UniPoly,
    pub chord: UniPoly,
    pub constant: Rational,
}

impl AreaPolynomial {
    pub fn total(&self) -> UniPoly {
        &(&self.arc + &self.chord) + &UniPoly::constant(PARAM, self.constant.clone())
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.total().eval(t)
    }
}

/// Exact Gauss–Green data of a polynomial curve.
struct Exact {
    g: UniPoly,
    f: UniPoly,
    /// `I(t)`
    integral: UniPoly,
    hi: Rational,
}

impl Exact {
    fn new(curve: &ParametricCurve) -> Option<Self> {
        let (g, f) = curve.polynomial_components()?;
        let anti = (&f * &g.derivative()).antiderivative();
        let lo = curve.interval().lo.clone();
        let integral = &anti - &UniPoly::constant(PARAM, anti.eval(&lo));
        Some(Exact {
            g,
            f,
            integral,
            hi: curve.interval().hi.clone(),
        })
    }

    fn total_signed(&self) -> Rational {
        -self.integral.eval(&self.hi)
    }

    fn chord_form(&self) -> AreaPolynomial {
        AreaPolynomial {
            arc: -&self.integral,
            chord: (&self.g * &self.f).scale(&rational::rat(1, 2)),
            constant: Rational::zero(),
        }
    }
}

/// `∫ f g' dt` by composite Simpson; used for rational components.
fn simpson(curve: &ParametricCurve, from: f64, to: f64, n: usize) -> f64 {
    let dg = curve.g().derivative();
    let h = |t: f64| curve.f().eval_f64(t) * dg.eval_f64(t);
    let n = if n % 2 == 1 { n + 1 } else { n.max(2) };
    let step = (to - from) / n as f64;
    let inner: f64 = (1..n)
        .into_par_iter()
        .map(|k| {
            let w = if k % 2 == 1 { 4.0 } else { 2.0 };
            w * h(from + step * k as f64)
        })
        .sum();
    (h(from) + h(to) + inner) * step / 3.0
}

fn numeric_integral(curve: &ParametricCurve, to: f64) -> f64 {
    let (lo, _) = curve.bounds_f64();
    simpson(curve, lo, to, NUMERIC_SAMPLES)
}

fn signed_total(curve: &ParametricCurve) -> AreaValue {
    match Exact::new(curve) {
        Some(e) => AreaValue::Exact(e.total_signed()),
        None => AreaValue::Numeric(-numeric_integral(curve, curve.bounds_f64().1)),
    }
}

fn is_positive(v: &AreaValue) -> Option<bool> {
    match v {
        AreaValue::Exact(r) => (!r.is_zero()).then(|| r.is_positive()),
        AreaValue::Numeric(x) => (*x != 0.0).then_some(*x > 0.0),
    }
}

/// Traversal direction, from the sign of `-∫ f g' dt`.
pub fn orientation(curve: &ParametricCurve) -> Result<Orientation, QuadError> {
    is_positive(&signed_total(curve))
        .map(Orientation::of_sign)
        .ok_or(QuadError::DegenerateOrientation)
}

fn check_closed(curve: &ParametricCurve) -> Result<(), QuadError> {
    let iv = curve.interval();
    let a = curve.point_at(&iv.lo)?;
    let b = curve.point_at(&iv.hi)?;
    if a != b {
        return Err(QuadError::NotClosed {
            start: a.to_string(),
            end: b.to_string(),
        });
    }
    Ok(())
}

pub fn total_area(curve: &ParametricCurve) -> Result<AreaResult, QuadError> {
    check_closed(curve)?;
    let signed = signed_total(curve);
    let orientation = is_positive(&signed).map(Orientation::of_sign);
    Ok(AreaResult::from_signed(signed, orientation))
}

fn check_origin(cp: &CenteredParametrization) -> Result<(), QuadError> {
    if *cp.center() != Point::origin() {
        return Err(QuadError::CenterNotOrigin(cp.center().to_string()));
    }
    Ok(())
}

fn check_inside(curve: &ParametricCurve, t: &Rational) -> Result<(), QuadError> {
    let iv = curve.interval();
    if !iv.contains(t) {
        return Err(QuadError::OutsideInterval {
            t: rational::format(t),
            interval: iv.to_string(),
        });
    }
    Ok(())
}

/// Signed area of the segment bounded by the arc `[lo, t0]` and the chord
/// from `P(t0)` to the origin, as a polynomial in `t0`.
pub fn chord_area_polynomial(cp: &CenteredParametrization) -> Result<AreaPolynomial, QuadError> {
    check_origin(cp)?;
    Exact::new(cp.curve())
        .map(|e| e.chord_form())
        .ok_or(QuadError::NotPolynomial)
}

fn chord_signed(curve: &ParametricCurve, t0: &Rational) -> Result<AreaValue, QuadError> {
    Ok(match Exact::new(curve) {
        Some(e) => AreaValue::Exact(e.chord_form().eval(t0)),
        None => {
            let t = rational::to_f64(t0);
            let (x, y) = curve.eval_f64(t);
            AreaValue::Numeric(-numeric_integral(curve, t) + 0.5 * x * y)
        }
    })
}

fn check_chord_parameter(curve: &ParametricCurve, t0: &Rational) -> Result<(), QuadError> {
    check_inside(curve, t0)?;
    if !curve.interval().contains_open(t0) {
        return Err(QuadError::EndpointParameter(rational::format(t0)));
    }
    if curve.g().eval(t0)?.is_zero() {
        return Err(QuadError::ZeroAbscissa(rational::format(t0)));
    }
    Ok(())
}

fn curve_orientation(curve: &ParametricCurve) -> Option<Orientation> {
    is_positive(&signed_total(curve)).map(Orientation::of_sign)
}

/// Area of the segment cut off by the chord through the origin and
/// `P(t0)`, on the side of the arc `[lo, t0]`.
pub fn origin_chord_segment_area(cp: &CenteredParametrization, t0: &Rational) -> Result<AreaResult, QuadError> {
    check_origin(cp)?;
    let curve = cp.curve();
    check_chord_parameter(curve, t0)?;
    Ok(AreaResult::from_signed(chord_signed(curve, t0)?, curve_orientation(curve)))
}

/// The other piece: arc `[t0, hi]` closed by the same chord.
pub fn origin_chord_complement_area(cp: &CenteredParametrization, t0: &Rational) -> Result<AreaResult, QuadError> {
    check_origin(cp)?;
    let curve = cp.curve();
    check_chord_parameter(curve, t0)?;
    let signed = match (signed_total(curve), chord_signed(curve, t0)?) {
        (AreaValue::Exact(s), AreaValue::Exact(c)) => AreaValue::Exact(s - c),
        (s, c) => AreaValue::Numeric(s.to_f64() - c.to_f64()),
    };
    Ok(AreaResult::from_signed(signed, curve_orientation(curve)))
}

fn vertical_check(curve: &ParametricCurve, t1: &Rational, t2: &Rational) -> Result<(), QuadError> {
    check_inside(curve, t1)?;
    check_inside(curve, t2)?;
    if t1 > t2 {
        return Err(QuadError::Unordered {
            t1: rational::format(t1),
            t2: rational::format(t2),
        });
    }
    let (g1, g2) = (curve.g().eval(t1)?, curve.g().eval(t2)?);
    if g1 != g2 {
        return Err(QuadError::AbscissaMismatch {
            g1: rational::format(&g1),
            g2: rational::format(&g2),
        });
    }
    Ok(())
}

fn integral_at(curve: &ParametricCurve, t: &Rational) -> AreaValue {
    match Exact::new(curve) {
        Some(e) => AreaValue::Exact(e.integral.eval(t)),
        None => AreaValue::Numeric(numeric_integral(curve, rational::to_f64(t))),
    }
}

/// Area bounded by the arcs `[lo, t1]` and `[t2, hi]` and the vertical
/// chord `x = g(t1)`: signed value `-I(t1) - (I(hi) - I(t2))`.
pub fn vertical_segment_area(
    cp: &CenteredParametrization,
    t1: &Rational,
    t2: &Rational,
) -> Result<AreaResult, QuadError> {
    let curve = cp.curve();
    vertical_check(curve, t1, t2)?;
    let hi = &curve.interval().hi;
    let signed = match (integral_at(curve, t1), integral_at(curve, t2), integral_at(curve, hi)) {
        (AreaValue::Exact(a), AreaValue::Exact(b), AreaValue::Exact(c)) => AreaValue::Exact(-a - (c - b)),
        (a, b, c) => AreaValue::Numeric(-a.to_f64() - (c.to_f64() - b.to_f64())),
    };
    Ok(AreaResult::from_signed(signed, curve_orientation(curve)))
}

/// The arc `[t1, t2]` closed by the vertical chord.
pub fn vertical_complement_area(
    cp: &CenteredParametrization,
    t1: &Rational,
    t2: &Rational,
) -> Result<AreaResult, QuadError> {
    let curve = cp.curve();
    vertical_check(curve, t1, t2)?;
    let signed = match (integral_at(curve, t1), integral_at(curve, t2)) {
        (AreaValue::Exact(a), AreaValue::Exact(b)) => AreaValue::Exact(a - b),
        (a, b) => AreaValue::Numeric(a.to_f64() - b.to_f64()),
    };
    Ok(AreaResult::from_signed(signed, curve_orientation(curve)))
}

/// `S2(tP) = 2·S1(tP) − S` as a polynomial in `tP`.
pub fn free_inlet_polynomial(cp: &CenteredParametrization) -> Result<AreaPolynomial, QuadError> {
    check_origin(cp)?;
    let e = Exact::new(cp.curve()).ok_or(QuadError::NotPolynomial)?;
    let two = rational::int(2);
    let s1 = e.chord_form();
    Ok(AreaPolynomial {
        arc: s1.arc.scale(&two),
        chord: s1.chord.scale(&two),
        constant: -e.total_signed(),
    })
}

/// Free section `2·S1 − S` at `tP`, which must lie in `valid`.
pub fn free_inlet_area(
    cp: &CenteredParametrization,
    tp: &Rational,
    valid: &IntervalQ,
) -> Result<AreaResult, QuadError> {
    check_origin(cp)?;
    let curve = cp.curve();
    check_inside(curve, tp)?;
    if !valid.contains(tp) {
        return Err(QuadError::OutOfValidRange {
            t: rational::format(tp),
            range: valid.to_string(),
        });
    }
    let signed = match Exact::new(curve) {
        Some(e) => {
            let s1 = e.chord_form().eval(tp);
            AreaValue::Exact(rational::int(2) * s1 - e.total_signed())
        }
        None => {
            let s1 = chord_signed(curve, tp)?.to_f64();
            AreaValue::Numeric(2.0 * s1 - signed_total(curve).to_f64())
        }
    };
    Ok(AreaResult::from_signed(signed, curve_orientation(curve)))
}

/// `m = f(tP) / g(tP)`.
pub fn slope_of_chord(cp: &CenteredParametrization, tp: &Rational) -> Result<Rational, QuadError> {
    check_origin(cp)?;
    let curve = cp.curve();
    let p = curve.point_at(tp)?;
    if p.x.is_zero() {
        return Err(QuadError::ZeroAbscissa(rational::format(tp)));
    }
    Ok(p.y / p.x)
}

/// Direction angle of the chord from the origin to `P(t)`. At the ends of
/// the interval, where `P` is the origin, the limiting direction is used.
pub fn chord_angle(curve: &ParametricCurve, t: f64) -> f64 {
    let (lo, hi) = curve.bounds_f64();
    let (dg, df) = (curve.g().derivative(), curve.f().derivative());
    let end_dir = |at: f64, sign: f64| {
        let (a, b) = (dg.eval_f64(at), df.eval_f64(at));
        if a == 0.0 && b == 0.0 {
            let inner = at - sign * 1e-9 * (hi - lo);
            let (x, y) = curve.eval_f64(inner);
            y.atan2(x)
        } else {
            (sign * b).atan2(sign * a)
        }
    };
    if t <= lo {
        end_dir(lo, 1.0)
    } else if t >= hi {
        end_dir(hi, -1.0)
    } else {
        let (x, y) = curve.eval_f64(t);
        y.atan2(x)
    }
}

const PROBES: usize = 256;

/// Parameter whose chord makes angle `alpha` with the x-axis, found by
/// bisection on the chord angle.
pub fn angle_to_parameter(cp: &CenteredParametrization, alpha: f64) -> Result<f64, QuadError> {
    check_origin(cp)?;
    if !(0.0..=FRAC_PI_2).contains(&alpha) {
        return Err(QuadError::AngleOutOfRange(alpha));
    }
    let curve = cp.curve();
    let (lo, hi) = curve.bounds_f64();
    let ts: Vec<f64> = (0..=PROBES).map(|k| lo + (hi - lo) * k as f64 / PROBES as f64).collect();
    let angles: Vec<f64> = ts.iter().map(|&t| chord_angle(curve, t)).collect();
    let increasing = angles[PROBES] >= angles[0];
    for k in 1..=PROBES {
        let step = angles[k] - angles[k - 1];
        if (increasing && step < -1e-12) || (!increasing && step > 1e-12) {
            return Err(QuadError::NonMonotoneSlope(ts[k]));
        }
    }
    let (min, max) = if increasing { (angles[0], angles[PROBES]) } else { (angles[PROBES], angles[0]) };
    if alpha < min - 1e-12 || alpha > max + 1e-12 {
        return Err(QuadError::AngleNotReached { alpha, min, max });
    }
    let above = |t: f64| (chord_angle(curve, t) > alpha) == increasing;
    let (mut a, mut b) = (lo, hi);
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        if above(mid) {
            b = mid;
        } else {
            a = mid;
        }
    }
    Ok(0.5 * (a + b))
}

/// One row of the damper table.
#[derive(Clone, Debug, PartialEq)]
pub struct DamperRow {
    pub t: Rational,
    pub alpha_deg: f64,
    pub s2: f64,
    pub s2_exact: Option<Rational>,
}

/// Free section at each `tP`, computed in parallel, in input order.
pub fn damper_table(
    cp: &CenteredParametrization,
    ts: &[Rational],
    valid: &IntervalQ,
) -> Result<Vec<DamperRow>, QuadError> {
    ts.par_iter()
        .map(|t| {
            let area = free_inlet_area(cp, t, valid)?;
            Ok(DamperRow {
                t: t.clone(),
                alpha_deg: chord_angle(cp.curve(), rational::to_f64(t)).to_degrees(),
                s2: area.signed.to_f64(),
                s2_exact: area.signed.exact().cloned(),
            })
        })
        .collect()
}

/// `n + 1` evenly spaced rational parameters covering `valid`.
pub fn even_parameters(valid: &IntervalQ, n: usize) -> Vec<Rational> {
    let n = n.max(1);
    let width = &valid.hi - &valid.lo;
    (0..=n)
        .map(|k| &valid.lo + &width * rational::rat(k as i64, n as i64))
        .collect()
}

/// Closed boundary that can be sampled as a polygon.
pub trait Boundary {
    /// About `n` vertices in traversal order, without repeating the first.
    fn polygon(&self, n: usize) -> Vec<(f64, f64)>;
}

impl Boundary for ParametricCurve {
    fn polygon(&self, n: usize) -> Vec<(f64, f64)> {
        let (lo, hi) = self.bounds_f64();
        (0..n)
            .into_par_iter()
            .map(|k| self.eval_f64(lo + (hi - lo) * k as f64 / n as f64))
            .collect()
    }
}

/// Closed polygon given by its corners.
#[derive(Clone, Debug, PartialEq)]
pub struct PiecewiseLinear {
    pub vertices: Vec<(f64, f64)>,
}

impl PiecewiseLinear {
    pub fn unit_square() -> Self {
        PiecewiseLinear {
            vertices: vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)],
        }
    }
}

impl Boundary for PiecewiseLinear {
    fn polygon(&self, n: usize) -> Vec<(f64, f64)> {
        let m = self.vertices.len();
        let per = (n / m.max(1)).max(1);
        let mut out = Vec::with_capacity(per * m);
        for i in 0..m {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % m]);
            for k in 0..per {
                let s = k as f64 / per as f64;
                out.push((a.0 + (b.0 - a.0) * s, a.1 + (b.1 - a.1) * s));
            }
        }
        out
    }
}

/// Half-plane `a·x + b·y + c ≤ 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HalfPlane {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl HalfPlane {
    pub fn new(a: f64, b: f64, c: f64) -> Self {
        HalfPlane { a, b, c }
    }

    pub fn everything() -> Self {
        HalfPlane::new(0.0, 0.0, -1.0)
    }

    fn level(&self, p: (f64, f64)) -> f64 {
        self.a * p.0 + self.b * p.1 + self.c
    }

    pub fn flipped(&self) -> Self {
        HalfPlane::new(-self.a, -self.b, -self.c)
    }

    /// The side of the line through the two points that contains `inside`.
    pub fn through(p: (f64, f64), q: (f64, f64), inside: (f64, f64)) -> Self {
        let h = HalfPlane::new(q.1 - p.1, p.0 - q.0, q.0 * p.1 - p.0 * q.1);
        if h.level(inside) <= 0.0 {
            h
        } else {
            h.flipped()
        }
    }
}

/// Sutherland–Hodgman clipping of a polygon against one half-plane.
pub fn clip(poly: &[(f64, f64)], h: &HalfPlane) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(poly.len() + 2);
    let n = poly.len();
    for i in 0..n {
        let (p, q) = (poly[i], poly[(i + 1) % n]);
        let (lp, lq) = (h.level(p), h.level(q));
        if lp <= 0.0 {
            out.push(p);
        }
        if (lp < 0.0 && lq > 0.0) || (lp > 0.0 && lq < 0.0) {
            let s = lp / (lp - lq);
            out.push((p.0 + (q.0 - p.0) * s, p.1 + (q.1 - p.1) * s));
        }
    }
    out
}

pub fn shoelace(poly: &[(f64, f64)]) -> f64 {
    let n = poly.len();
    0.5 * (0..n)
        .map(|i| {
            let (p, q) = (poly[i], poly[(i + 1) % n]);
            p.0 * q.1 - q.0 * p.1
        })
        .sum::<f64>()
}

/// Area of the region enclosed by `boundary` inside the half-plane, from
/// a polygon with at least 1000 vertices.
pub fn numeric_segment_area(boundary: &dyn Boundary, half: &HalfPlane, samples: usize) -> f64 {
    let poly = boundary.polygon(samples.max(1000));
    shoelace(&clip(&poly, half)).abs()
}

/// Half-plane of the chord from the origin to `P(t0)` containing the arc
/// `[lo, t0]`.
pub fn chord_halfplane(curve: &ParametricCurve, t0: f64) -> HalfPlane {
    let (lo, _) = curve.bounds_f64();
    let mid = curve.eval_f64(0.5 * (lo + t0));
    HalfPlane::through((0.0, 0.0), curve.eval_f64(t0), mid)
}

/// Half-plane `x ≤ c` or `x ≥ c` containing `P(t)`.
pub fn vertical_halfplane(curve: &ParametricCurve, c: f64, t: f64) -> HalfPlane {
    let h = HalfPlane::new(1.0, 0.0, -c);
    if h.level(curve.eval_f64(t)) <= 0.0 {
        h
    } else {
        h.flipped()
    }
}

/// Relative difference `|a − b| / max(|a|, |b|, tiny)`.
pub fn relative_error(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

/// `t ↦ lo + hi − t`, which reverses the traversal.
pub fn reversed(curve: &ParametricCurve) -> Result<ParametricCurve, QuadError> {
    let iv = curve.interval();
    let flip = UniPoly::new(PARAM, vec![&iv.lo + &iv.hi, -Rational::one()]);
    let sub = |r: &crate::algebra::RationalFunction| {
        crate::algebra::RationalFunction::new(r.numerator().compose(&flip), r.denominator().compose(&flip))
    };
    Ok(ParametricCurve::new(sub(curve.g())?, sub(curve.f())?, iv.clone())?)
}
