//! Squarability certificates: polynomials `Q` tying a segment area to the
//! coefficients of the cutting line, obtained by eliminating the curve
//! parameter, and a sampling verifier built on the numeric area oracle.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::rational::Rational;
use crate::algebra::{MultiPoly, RationalFunction, UniPoly};
use crate::curves::{CenteredParametrization, CurveError, ParametricCurve, PARAM};
use crate::elimination::{self, ElimError};
use crate::parse::{self, ParseError};
use crate::quadrature::{self, Boundary, HalfPlane, PiecewiseLinear, QuadError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CertError {
    #[error("certificate polynomial is zero")]
    ZeroCertificate,
    #[error("exactly one variable must have role area, found {0}")]
    AreaRoleCount(usize),
    #[error("variable `{0}` of Q has no role")]
    UnassignedVariable(String),
    #[error("certificate text: {0}")]
    Format(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("elimination provenance check failed: {0}")]
    Provenance(String),
    #[error("x-component is identically zero")]
    ZeroAbscissa,
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Elimination(#[from] ElimError),
    #[error(transparent)]
    Quadrature(#[from] QuadError),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Area,
    Slope,
    Intercept,
    Abscissa,
}

impl Role {
    pub fn name(&self) -> &'static str {
        match self {
            Role::Area => "area",
            Role::Slope => "slope",
            Role::Intercept => "intercept",
            Role::Abscissa => "abscissa",
        }
    }

    fn parse(s: &str) -> Option<Role> {
        Some(match s {
            "area" => Role::Area,
            "slope" => Role::Slope,
            "intercept" => Role::Intercept,
            "abscissa" => Role::Abscissa,
            _ => return None,
        })
    }
}

/// Which area `S` stands for on chords through the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Measure {
    /// The segment on the side of the arc `[lo, t0]`.
    #[default]
    Segment,
    /// `2·S1 − S`, the damper free section.
    FreeInlet,
}

/// Line family a certificate speaks about, read off its roles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `y = m·x` through the center.
    OriginPencil,
    /// `x = c`.
    Vertical,
    /// `y = m·x + q`.
    General,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::OriginPencil => "origin pencil",
            Family::Vertical => "vertical",
            Family::General => "general",
        })
    }
}

/// How a certificate was produced.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Provenance {
    pub inputs: Vec<MultiPoly>,
    pub eliminated: Vec<String>,
    /// Factors divided out of the raw eliminant.
    pub removed_factors: Vec<MultiPoly>,
    /// Rational content divided out last.
    pub content: Rational,
    pub raw: Option<MultiPoly>,
}

impl Provenance {
    /// `raw = content · Π removed · q`, exactly.
    pub fn accounts_for(&self, q: &MultiPoly) -> bool {
        let Some(raw) = &self.raw else {
            return true;
        };
        let prod = self
            .removed_factors
            .iter()
            .fold(q.scale(&self.content), |acc, f| &acc * f);
        (&prod - raw).is_zero()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    q: MultiPoly,
    /// `(variable, role)` with the area variable first.
    roles: Vec<(String, Role)>,
    measure: Measure,
    provenance: Provenance,
}

impl Certificate {
    pub fn new(q: MultiPoly, roles: Vec<(String, Role)>) -> Result<Self, CertError> {
        if q.is_zero() {
            return Err(CertError::ZeroCertificate);
        }
        let areas = roles.iter().filter(|(_, r)| *r == Role::Area).count();
        if areas != 1 {
            return Err(CertError::AreaRoleCount(areas));
        }
        if let Some(v) = q.used_vars().into_iter().find(|v| !roles.iter().any(|(n, _)| n == v)) {
            return Err(CertError::UnassignedVariable(v));
        }
        let mut roles = roles;
        roles.sort_by_key(|(_, r)| *r != Role::Area);
        let vars: Vec<String> = roles.iter().map(|(n, _)| n.clone()).collect();
        let q = q.align(&vars).expect("every used variable has a role");
        Ok(Certificate {
            q,
            roles,
            measure: Measure::Segment,
            provenance: Provenance::default(),
        })
    }

    pub fn with_measure(mut self, measure: Measure) -> Self {
        self.measure = measure;
        self
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    pub fn q(&self) -> &MultiPoly {
        &self.q
    }

    pub fn roles(&self) -> &[(String, Role)] {
        &self.roles
    }

    pub fn measure(&self) -> Measure {
        self.measure
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn var_for(&self, role: Role) -> Option<&str> {
        self.roles.iter().find(|(_, r)| *r == role).map(|(n, _)| n.as_str())
    }

    pub fn family(&self) -> Result<Family, CertError> {
        let set: BTreeSet<Role> = self.roles.iter().map(|(_, r)| *r).collect();
        let has = |r| set.contains(&r);
        match (has(Role::Slope), has(Role::Intercept), has(Role::Abscissa)) {
            (true, false, false) => Ok(Family::OriginPencil),
            (false, false, true) => Ok(Family::Vertical),
            (true, true, false) => Ok(Family::General),
            _ => Err(CertError::Unsupported(format!(
                "no line family has roles {}",
                set.iter().map(Role::name).collect::<Vec<_>>().join(", ")
            ))),
        }
    }

    /// Substitutes each named variable by a rational function of `t` and
    /// reports whether the result is the zero function.
    pub fn annihilates(&self, subs: &[(&str, &RationalFunction)]) -> bool {
        let mut p = self.q.clone();
        for (name, r) in subs {
            p = p.substitute(name, r).numerator;
        }
        p.is_zero()
    }

    /// Header lines followed by the polynomial.
    pub fn to_text(&self) -> String {
        let roles: Vec<String> = self.roles.iter().map(|(n, r)| format!("{n}={}", r.name())).collect();
        let mut out = format!("roles: {}\n", roles.join(" "));
        if self.measure == Measure::FreeInlet {
            out.push_str("measure: free-inlet\n");
        }
        out.push_str(&parse::render(&self.q));
        out.push('\n');
        out
    }

    pub fn from_text(text: &str) -> Result<Self, CertError> {
        let mut roles = None;
        let mut measure = Measure::Segment;
        let mut body = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if let Some(rest) = line.strip_prefix("roles:") {
                let mut list = Vec::new();
                for item in rest.split_whitespace() {
                    let (name, role) = item
                        .split_once('=')
                        .ok_or_else(|| CertError::Format(format!("role entry `{item}` needs name=role")))?;
                    let role = Role::parse(role).ok_or_else(|| CertError::Format(format!("unknown role `{role}`")))?;
                    list.push((name.to_string(), role));
                }
                roles = Some(list);
            } else if let Some(rest) = line.strip_prefix("measure:") {
                measure = match rest.trim() {
                    "segment" => Measure::Segment,
                    "free-inlet" => Measure::FreeInlet,
                    other => return Err(CertError::Format(format!("unknown measure `{other}`"))),
                };
            } else {
                body.push(line);
            }
        }
        let roles = roles.ok_or_else(|| CertError::Format("missing `roles:` header".into()))?;
        if body.is_empty() {
            return Err(CertError::Format("missing polynomial".into()));
        }
        let vars: Vec<&str> = roles.iter().map(|(n, _)| n.as_str()).collect();
        let q = parse::parse_polynomial(&body.join(" "), &vars)?;
        Ok(Certificate::new(q, roles)?.with_measure(measure))
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn lift(u: &UniPoly, var: &str, vars: &[String]) -> MultiPoly {
    MultiPoly::from_univariate(&u.clone().with_var(var), vars)
        .align(vars)
        .expect("superset")
}

fn polynomial_parts(cp: &CenteredParametrization) -> Result<(UniPoly, UniPoly), CertError> {
    cp.curve()
        .polynomial_components()
        .ok_or(CertError::Quadrature(QuadError::NotPolynomial))
}

/// Eliminates `t` from `S = area(t)` and `m = f(t)/g(t)`. The common
/// factor `h = gcd(g, f)` is divided out of the slope equation first and
/// its contribution `Res_t(S − area, h)` recorded.
pub fn pencil_from_polynomials(area: &UniPoly, g: &UniPoly, f: &UniPoly) -> Result<Certificate, CertError> {
    if g.is_zero() {
        return Err(CertError::ZeroAbscissa);
    }
    let vars = names(&["S", "m", PARAM]);
    let s = MultiPoly::var("S", &vars);
    let m = MultiPoly::var("m", &vars);
    let h = g.gcd(f).with_var(PARAM);
    let h = if h.is_zero() { UniPoly::one(PARAM) } else { h };
    let g_red = g.div_exact(&h).expect("gcd divides");
    let f_red = f.div_exact(&h).expect("gcd divides");

    let eq_area = &s - &lift(area, PARAM, &vars);
    let eq_slope = &(&m * &lift(&g_red, PARAM, &vars)) - &lift(&f_red, PARAM, &vars);
    let raw_slope = &(&m * &lift(g, PARAM, &vars)) - &lift(f, PARAM, &vars);

    let el = elimination::resultant_nondegenerate(&eq_area, &eq_slope, PARAM, "pencil elimination")?;
    let raw = elimination::resultant(&eq_area, &raw_slope, PARAM)?;
    let mut removed = Vec::new();
    if !h.is_constant() {
        removed.push(elimination::resultant(&eq_area, &lift(&h, PARAM, &vars), PARAM)?);
    }
    if let Some(common) = &el.removed_common {
        removed.push(lift(common, PARAM, &vars));
    }
    let cleaned = elimination::primitive_squarefree(&el.poly, "S");
    let prov = Provenance {
        inputs: vec![eq_area, eq_slope],
        eliminated: vec![PARAM.to_string()],
        removed_factors: removed,
        content: cleaned.content.clone(),
        raw: el.removed_common.is_none().then_some(raw),
    };
    let q = &cleaned.poly * &cleaned.removed;
    if !prov.accounts_for(&q) {
        return Err(CertError::Provenance("raw eliminant is not content · removed · Q".into()));
    }
    let cert = Certificate::new(q, vec![("S".into(), Role::Area), ("m".into(), Role::Slope)])?;
    Ok(cert.with_provenance(prov))
}

/// `Q(S, m)` for segments cut by chords `y = m·x` through the origin.
pub fn pencil_certificate(cp: &CenteredParametrization) -> Result<Certificate, CertError> {
    let form = quadrature::chord_area_polynomial(cp)?;
    let (g, f) = polynomial_parts(cp)?;
    pencil_from_polynomials(&form.total(), &g, &f)
}

/// `Q(S2, m)` for the free section `2·S1 − S`.
pub fn free_inlet_certificate(cp: &CenteredParametrization) -> Result<Certificate, CertError> {
    let form = quadrature::free_inlet_polynomial(cp)?;
    let (g, f) = polynomial_parts(cp)?;
    Ok(pencil_from_polynomials(&form.total(), &g, &f)?.with_measure(Measure::FreeInlet))
}

/// `Q(S, c)` for segments cut by `x = c`, eliminating `t1` and `t2` from
/// `S = -I(t1) - (I(hi) - I(t2))`, `c = g(t1)`, `c = g(t2)`.
pub fn vertical_certificate_for(curve: &ParametricCurve) -> Result<Certificate, CertError> {
    let (g, f) = curve
        .polynomial_components()
        .ok_or(CertError::Quadrature(QuadError::NotPolynomial))?;
    let anti = (&f * &g.derivative()).antiderivative();
    let iv = curve.interval();
    let integral = &anti - &UniPoly::constant(PARAM, anti.eval(&iv.lo));
    let total_i = integral.eval(&iv.hi);

    let vars = names(&["S", "c", "t1", "t2"]);
    let s = MultiPoly::var("S", &vars);
    let c = MultiPoly::var("c", &vars);
    let i1 = lift(&integral, "t1", &vars);
    let i2 = lift(&integral, "t2", &vars);
    let e1 = &(&(&s + &i1) + &MultiPoly::constant(total_i, &vars)) - &i2;
    let e2 = &c - &lift(&g, "t1", &vars);
    let e3 = &c - &lift(&g, "t2", &vars);
    let raw = elimination::eliminate_two(&e1, &e2, &e3, "t1", "t2")?;
    let cleaned = elimination::primitive_squarefree(&raw, "S");
    let q = &cleaned.poly * &cleaned.removed;
    let prov = Provenance {
        inputs: vec![e1, e2, e3],
        eliminated: vec!["t1".into(), "t2".into()],
        removed_factors: Vec::new(),
        content: cleaned.content.clone(),
        raw: Some(raw),
    };
    let cert = Certificate::new(q, vec![("S".into(), Role::Area), ("c".into(), Role::Abscissa)])?;
    Ok(cert.with_provenance(prov))
}

pub fn vertical_certificate(cp: &CenteredParametrization) -> Result<Certificate, CertError> {
    vertical_certificate_for(cp.curve())
}

/// What the verifier samples.
#[derive(Clone, Copy, Debug)]
pub enum Subject<'a> {
    Curve(&'a ParametricCurve),
    Polygon(&'a PiecewiseLinear),
}

impl<'a> Subject<'a> {
    fn boundary(&self) -> &(dyn Boundary + Sync) {
        match self {
            Subject::Curve(c) => *c,
            Subject::Polygon(p) => *p,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyOptions {
    pub n_samples: usize,
    pub tol: f64,
    /// Polygon vertices per oracle area.
    pub oracle_samples: usize,
    /// Window for `m` when sampling general lines.
    pub slope_window: (f64, f64),
    /// Window for `q` when sampling general lines.
    pub intercept_window: (f64, f64),
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n_samples: 50,
            tol: 1e-6,
            oracle_samples: 100_000,
            slope_window: (0.1, 2.0),
            intercept_window: (0.0, 1.0),
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Sample {
    /// Line `a·x + b·y + c = 0`.
    pub line: (f64, f64, f64),
    /// Signed area substituted for the area variable.
    pub area: f64,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SampleReport {
    pub family: Family,
    pub samples: Vec<Sample>,
    pub max_relative_residual: f64,
    pub tol: f64,
    pub passed: bool,
    /// Sampling window, for the record.
    pub window: String,
}

struct Evaluator {
    q: MultiPoly,
    slots: Vec<Role>,
}

impl Evaluator {
    fn new(cert: &Certificate) -> Self {
        // primitive integer form makes the residual scale invariant
        let (_, q) = cert.q().primitive_part();
        let slots = q
            .vars()
            .iter()
            .map(|v| cert.roles().iter().find(|(n, _)| n == v).map(|(_, r)| *r).expect("role"))
            .collect();
        Evaluator { q, slots }
    }

    fn residual(&self, area: f64, slope: f64, intercept: f64, abscissa: f64) -> f64 {
        let values: Vec<f64> = self
            .slots
            .iter()
            .map(|r| match r {
                Role::Area => area,
                Role::Slope => slope,
                Role::Intercept => intercept,
                Role::Abscissa => abscissa,
            })
            .collect();
        let (v, scale) = self.q.eval_f64_with_scale(&values);
        v.abs() / scale.max(1.0)
    }
}

fn need_curve<'a>(subject: &Subject<'a>, family: Family) -> Result<&'a ParametricCurve, CertError> {
    match subject {
        Subject::Curve(c) => Ok(c),
        Subject::Polygon(_) => Err(CertError::Unsupported(format!(
            "{family:?} certificates are verified on parametrized curves only"
        ))),
    }
}

pub fn verify_certificate(
    cert: &Certificate,
    subject: Subject<'_>,
    n_samples: usize,
    tol: f64,
) -> Result<SampleReport, CertError> {
    let opts = VerifyOptions {
        n_samples,
        tol,
        ..VerifyOptions::default()
    };
    verify_certificate_with(cert, subject, &opts)
}

/// Samples lines of the certificate's family, measures areas with the
/// numeric oracle and evaluates the scaled residual of `Q`.
pub fn verify_certificate_with(
    cert: &Certificate,
    subject: Subject<'_>,
    opts: &VerifyOptions,
) -> Result<SampleReport, CertError> {
    let family = cert.family()?;
    let n = opts.n_samples.max(10);
    let eval = Evaluator::new(cert);
    let boundary = subject.boundary();
    let poly = boundary.polygon(opts.oracle_samples.max(1000));
    let signed_total = quadrature::shoelace(&poly);
    let sign = if signed_total < 0.0 { -1.0 } else { 1.0 };
    let piece = |h: &HalfPlane| quadrature::shoelace(&quadrature::clip(&poly, h)).abs();

    let (samples, window): (Vec<Sample>, String) = match family {
        Family::OriginPencil => {
            let curve = need_curve(&subject, family)?;
            let (lo, hi) = curve.bounds_f64();
            let ts: Vec<f64> = (0..n).map(|k| lo + (hi - lo) * (k as f64 + 0.5) / n as f64).collect();
            let samples = ts
                .par_iter()
                .filter_map(|&t| {
                    let (x, y) = curve.eval_f64(t);
                    if x.abs() < 1e-12 {
                        return None;
                    }
                    let m = y / x;
                    let s1 = sign * piece(&quadrature::chord_halfplane(curve, t));
                    let area = match cert.measure() {
                        Measure::Segment => s1,
                        Measure::FreeInlet => 2.0 * s1 - signed_total,
                    };
                    Some(Sample {
                        line: (m, -1.0, 0.0),
                        area,
                        residual: eval.residual(area, m, 0.0, 0.0),
                    })
                })
                .collect();
            (samples, format!("chords at t in ({lo}, {hi})"))
        }
        Family::Vertical => {
            let curve = need_curve(&subject, family)?;
            let (lo, _) = curve.bounds_f64();
            let (xmin, xmax) = poly
                .iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), p| (a.min(p.0), b.max(p.0)));
            let cs: Vec<f64> = (0..n).map(|k| xmin + (xmax - xmin) * (k as f64 + 0.5) / n as f64).collect();
            let samples = cs
                .par_iter()
                .map(|&c| {
                    let area = sign * piece(&quadrature::vertical_halfplane(curve, c, lo));
                    Sample {
                        line: (1.0, 0.0, -c),
                        area,
                        residual: eval.residual(area, 0.0, 0.0, c),
                    }
                })
                .collect();
            (samples, format!("vertical lines x = c, c in ({xmin}, {xmax})"))
        }
        Family::General => {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            let total = signed_total.abs();
            let mut lines = Vec::new();
            let mut attempts = 0;
            while lines.len() < n && attempts < 100 * n {
                attempts += 1;
                let m = rng.gen_range(opts.slope_window.0..opts.slope_window.1);
                let q = rng.gen_range(opts.intercept_window.0..opts.intercept_window.1);
                // below the line: y - m x - q <= 0
                let below = piece(&HalfPlane::new(-m, 1.0, -q));
                if below > 1e-9 * total && total - below > 1e-9 * total {
                    lines.push((m, q, below));
                }
            }
            let samples = lines
                .par_iter()
                .map(|&(m, q, below)| {
                    let above = total - below;
                    let r = eval
                        .residual(sign * below, m, q, 0.0)
                        .min(eval.residual(sign * above, m, q, 0.0));
                    Sample {
                        line: (m, -1.0, q),
                        area: sign * below,
                        residual: r,
                    }
                })
                .collect();
            let window = format!(
                "lines y = m x + q, m in ({}, {}), q in ({}, {}), seed {}",
                opts.slope_window.0, opts.slope_window.1, opts.intercept_window.0, opts.intercept_window.1, opts.seed
            );
            (samples, window)
        }
    };
    let max = samples.iter().map(|s| s.residual).fold(0.0, f64::max);
    let finite = samples.iter().all(|s| s.residual.is_finite());
    Ok(SampleReport {
        family,
        passed: finite && !samples.is_empty() && max <= opts.tol,
        max_relative_residual: if finite { max } else { f64::INFINITY },
        tol: opts.tol,
        samples,
        window,
    })
}

/// Chord slope `f/g` as a rational function of `t`.
pub fn slope_function(curve: &ParametricCurve) -> Result<RationalFunction, CertError> {
    Ok(curve.f().div(curve.g()).map_err(CurveError::from)?)
}

/// Scales `Q` by `k`, keeping roles; used to probe scale invariance.
pub fn scaled(cert: &Certificate, k: &Rational) -> Certificate {
    Certificate {
        q: cert.q.scale(k),
        ..cert.clone()
    }
}

/// Number of samples whose residual exceeds the tolerance.
pub fn failures(report: &SampleReport) -> usize {
    report.samples.iter().filter(|s| s.residual > report.tol).count()
}

/// Certificate `Q = S` with area role only on top of an existing family.
pub fn trivial_area_certificate(family_roles: &[(String, Role)]) -> Result<Certificate, CertError> {
    let vars: Vec<String> = family_roles.iter().map(|(n, _)| n.clone()).collect();
    let area = family_roles
        .iter()
        .find(|(_, r)| *r == Role::Area)
        .map(|(n, _)| n.clone())
        .ok_or(CertError::AreaRoleCount(0))?;
    Certificate::new(MultiPoly::var(&area, &vars), family_roles.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::algebra::rational::{int, rat};
    use crate::curves::{parse_curve, validate_centered, Point};

    fn centered(text: &str) -> CenteredParametrization {
        let c = parse_curve(text).unwrap().to_curve().unwrap();
        validate_centered(&c, &Point::origin()).unwrap()
    }

    fn cubic() -> CenteredParametrization {
        centered("x=3*(1-t)^2*t; y=3*(1-t)*t^2; t in [0,1]")
    }

    fn arnold() -> CenteredParametrization {
        centered("x=(t^2-1)^2; y=t^3-t; t in [-1,1]")
    }

    fn poly_rf(p: UniPoly) -> RationalFunction {
        RationalFunction::from_poly(p)
    }

    fn fast(n: usize) -> VerifyOptions {
        VerifyOptions {
            n_samples: n,
            oracle_samples: 20_000,
            ..VerifyOptions::default()
        }
    }

    #[test]
    fn cubic_pencil_annihilates_exactly() {
        let cp = cubic();
        let cert = pencil_certificate(&cp).unwrap();
        let area = poly_rf(quadrature::chord_area_polynomial(&cp).unwrap().total());
        let m = slope_function(cp.curve()).unwrap();
        assert!(cert.annihilates(&[("m", &m), ("S", &area)]));
        assert!(cert.provenance().accounts_for(cert.q()));
        assert_eq!(cert.family().unwrap(), Family::OriginPencil);
    }

    #[test]
    fn cubic_pencil_verifies() {
        let cp = cubic();
        let cert = pencil_certificate(&cp).unwrap();
        let r = verify_certificate_with(&cert, Subject::Curve(cp.curve()), &fast(20)).unwrap();
        assert!(r.passed, "max residual {}", r.max_relative_residual);
    }

    #[test]
    fn arnold_pencil() {
        let cp = arnold();
        let cert = pencil_certificate(&cp).unwrap();
        let area = poly_rf(quadrature::chord_area_polynomial(&cp).unwrap().total());
        let m = slope_function(cp.curve()).unwrap();
        assert!(cert.annihilates(&[("m", &m), ("S", &area)]));
        // gcd(g, f) = t^2 - 1 was divided out
        assert_eq!(cert.provenance().removed_factors.len(), 1);
        assert!(cert.provenance().accounts_for(cert.q()));
        let r = verify_certificate_with(&cert, Subject::Curve(cp.curve()), &VerifyOptions::default()).unwrap();
        assert!(r.passed, "max residual {}", r.max_relative_residual);
    }

    #[test]
    fn free_inlet_pencil() {
        let cp = cubic();
        let cert = free_inlet_certificate(&cp).unwrap();
        assert_eq!(cert.measure(), Measure::FreeInlet);
        let area = poly_rf(quadrature::free_inlet_polynomial(&cp).unwrap().total());
        let m = slope_function(cp.curve()).unwrap();
        assert!(cert.annihilates(&[("m", &m), ("S", &area)]));
        let r = verify_certificate_with(&cert, Subject::Curve(cp.curve()), &fast(20)).unwrap();
        assert!(r.passed, "max residual {}", r.max_relative_residual);
    }

    #[test]
    fn linear_pencil() {
        // S = t, m = 2t + 1  ->  m - 2S - 1
        let t = UniPoly::identity(PARAM);
        let cert = pencil_from_polynomials(&t, &UniPoly::one(PARAM), &UniPoly::from_ints(PARAM, &[1, 2])).unwrap();
        let expected = parse::parse_polynomial("m - 2*S - 1", &["S", "m"]).unwrap();
        assert!((cert.q() - &expected).is_zero() || (cert.q() + &expected).is_zero());
    }

    #[test]
    fn arnold_vertical() {
        let cp = arnold();
        let cert = vertical_certificate(&cp).unwrap();
        assert_eq!(cert.family().unwrap(), Family::Vertical);
        // symmetric cut t1 = -s, t2 = s
        let (g, f) = cp.curve().polynomial_components().unwrap();
        let anti = (&f * &g.derivative()).antiderivative();
        let i = &anti - &UniPoly::constant(PARAM, anti.eval(&int(-1)));
        let minus = UniPoly::from_ints(PARAM, &[0, -1]);
        let area = &(&(-&i.compose(&minus)) - &UniPoly::constant(PARAM, i.eval(&int(1)))) + &i;
        assert!(cert.annihilates(&[("c", &poly_rf(g.clone())), ("S", &poly_rf(area.clone()))]));
        let v = quadrature::vertical_segment_area(&cp, &rat(-1, 2), &rat(1, 2)).unwrap();
        let c = g.eval(&rat(1, 2));
        let at = cert
            .q()
            .evaluate_at(&[("S", v.signed.exact().unwrap().clone()), ("c", c)])
            .unwrap();
        assert!(at.is_zero());
        assert_eq!(&area.eval(&rat(1, 2)), v.signed.exact().unwrap());
        let r = verify_certificate_with(&cert, Subject::Curve(cp.curve()), &fast(20)).unwrap();
        assert!(r.passed, "max residual {}", r.max_relative_residual);
    }

    #[test]
    fn graph_like_vertical() {
        // g(t) = t: the two abscissa equations pin t1 = t2 = c
        let c = parse_curve("x=t; y=t*(1-t); t in [0,1]").unwrap().to_curve().unwrap();
        let cert = vertical_certificate_for(&c).unwrap();
        assert!(!cert.q().uses_var("c"));
        assert_eq!(cert.q().degree_in("S"), Some(1));
    }

    #[test]
    fn text_roundtrip() {
        let cert = pencil_certificate(&cubic()).unwrap();
        let text = cert.to_text();
        assert!(text.starts_with("roles: S=area m=slope\n"));
        let back = Certificate::from_text(&text).unwrap();
        assert_eq!(back.q(), cert.q());
        assert_eq!(back.roles(), cert.roles());
        let inlet = free_inlet_certificate(&cubic()).unwrap();
        assert_eq!(Certificate::from_text(&inlet.to_text()).unwrap().measure(), Measure::FreeInlet);
    }

    #[test]
    fn text_errors() {
        assert!(matches!(Certificate::from_text("S - 1"), Err(CertError::Format(_))));
        assert!(matches!(
            Certificate::from_text("roles: S=area\nS - m"),
            Err(CertError::Parse(_))
        ));
        assert!(matches!(
            Certificate::from_text("roles: S=area T=area\nS - T"),
            Err(CertError::AreaRoleCount(2))
        ));
    }

    #[test]
    fn area_alone_fails() {
        let cp = cubic();
        let cert = trivial_area_certificate(&[("S".into(), Role::Area), ("m".into(), Role::Slope)]).unwrap();
        let r = verify_certificate_with(&cert, Subject::Curve(cp.curve()), &fast(10)).unwrap();
        assert!(!r.passed);
        assert!(failures(&r) > 0);
    }

    #[test]
    fn scale_invariant_verdict() {
        let cp = cubic();
        let cert = pencil_certificate(&cp).unwrap();
        let big = scaled(&cert, &rat(1_000_000_007, 3));
        let a = verify_certificate_with(&cert, Subject::Curve(cp.curve()), &fast(10)).unwrap();
        let b = verify_certificate_with(&big, Subject::Curve(cp.curve()), &fast(10)).unwrap();
        assert_eq!(a.passed, b.passed);
        assert!((a.max_relative_residual - b.max_relative_residual).abs() < 1e-12);
    }

    #[test]
    fn unit_square_corner_triangle_certificate() {
        // lines y = m x + q through the left and top edges cut a corner
        // triangle of area (1 - q)^2 / (2 m)
        let text = "roles: S=area m=slope q=intercept\n(2*m*S - (1-q)^2)*(2*m*(1-S) - (1-q)^2)";
        let cert = Certificate::from_text(text).unwrap();
        let opts = VerifyOptions {
            n_samples: 30,
            slope_window: (1.0, 2.0),
            intercept_window: (0.5, 1.0),
            ..VerifyOptions::default()
        };
        let sq = PiecewiseLinear::unit_square();
        let r = verify_certificate_with(&cert, Subject::Polygon(&sq), &opts).unwrap();
        assert!(r.passed, "max residual {}", r.max_relative_residual);
        assert_eq!(r.samples.len(), 30);
    }
}
