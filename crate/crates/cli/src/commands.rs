use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use ovals_core::algebra::rational::{format as rat_text, to_f64};
use ovals_core::algebra::{IntervalQ, MultiPoly, Rational};
use ovals_core::certify::{
    free_inlet_certificate, pencil_certificate, vertical_certificate, verify_certificate_with, Certificate, Subject,
    VerifyOptions,
};
use ovals_core::curves::{
    implicitize, parse_curve, rational_singular_points, validate_centered, CenteredParametrization, ParametricCurve,
    Point,
};
use ovals_core::parse::{parse_polynomial, render};
use ovals_core::puiseux::{expand_all_branches, expand_branch, PuiseuxSeries};
use ovals_core::quadrature::{
    damper_table, even_parameters, free_inlet_area, origin_chord_complement_area, origin_chord_segment_area,
    total_area, vertical_complement_area, vertical_segment_area, AreaResult, AreaValue, PiecewiseLinear,
};

use crate::table::{self, sig12};
use crate::{Command, CurveArg, FamilyArg, InFile};
use crate::error::CliError;

type Res = Result<(), CliError>;

pub fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Res {
    match cmd {
        Command::Parse { expr, input, vars } => parse_cmd(source(expr, &input, "--expr")?, &vars, out),
        Command::Implicitize { curve } => implicitize_cmd(&curve, out),
        Command::Puiseux {
            curve,
            input,
            terms,
            all,
        } => puiseux_cmd(&source(curve, &input, "--curve")?, terms, all, out),
        Command::Singular { curve, param, input } => singular_cmd(curve, param, &input, out),
        Command::Area {
            curve,
            chord,
            vertical,
            free_inlet,
            complement,
            range,
        } => {
            let cut = Cut::from_flags(chord, vertical, free_inlet, complement, &range)?;
            area_cmd(&curve, cut, out, err)
        }
        Command::DamperTable {
            curve,
            range,
            steps,
            out: path,
            svg,
        } => damper_cmd(&curve, &range, steps, path, svg, out),
        Command::Certify { curve, family, out: path } => certify_cmd(&curve, family, path, out),
        Command::Verify {
            cert,
            input,
            param,
            polygon,
            square,
            samples,
            tol,
            oracle_samples,
            slope_window,
            intercept_window,
            seed,
            verbose,
        } => {
            let subject = match (param, polygon, square) {
                (Some(p), _, _) => SubjectArg::Curve(p),
                (_, Some(p), _) => SubjectArg::Polygon(p),
                (_, _, true) => SubjectArg::Square,
                _ => return Err(CliError::Usage("verify needs one of --param, --polygon or --square".into())),
            };
            let opts = VerifyOptions {
                n_samples: samples,
                tol,
                oracle_samples,
                slope_window: window(&slope_window, "--slope-window")?,
                intercept_window: window(&intercept_window, "--intercept-window")?,
                seed,
            };
            verify_cmd(&source(cert, &input, "--cert")?, subject, &opts, verbose, out)
        }
    }
}

/// Text from the flag or from `--in`, exactly one of them.
fn source(flag: Option<String>, input: &InFile, name: &str) -> Result<String, CliError> {
    match (flag, &input.path) {
        (Some(t), None) => Ok(t),
        (None, Some(p)) => read(p),
        (Some(_), Some(_)) => Err(CliError::Usage(format!("give either {name} or --in, not both"))),
        (None, None) => Err(CliError::Usage(format!("missing input: {name} <TEXT> or --in <PATH>"))),
    }
}

fn read(p: &Path) -> Result<String, CliError> {
    fs::read_to_string(p).map_err(|source| CliError::Io {
        path: p.display().to_string(),
        source,
    })
}

fn write_file(p: &Path, text: &str) -> Res {
    fs::write(p, text).map_err(|source| CliError::Io {
        path: p.display().to_string(),
        source,
    })
}

fn io(e: std::io::Error) -> CliError {
    CliError::Io {
        path: "<stdout>".into(),
        source: e,
    }
}

fn curve_of(arg: &CurveArg) -> Result<ParametricCurve, CliError> {
    let text = source(arg.param.clone(), &arg.input, "--param")?;
    Ok(parse_curve(&text)?.to_curve()?)
}

fn centered_of(arg: &CurveArg) -> Result<CenteredParametrization, CliError> {
    Ok(validate_centered(&curve_of(arg)?, &Point::origin())?)
}

fn rational(text: &str, flag: &str) -> Result<Rational, CliError> {
    let p = parse_polynomial(text.trim(), &[]).map_err(|e| CliError::Usage(format!("{flag}: {e}")))?;
    if !p.is_constant() {
        return Err(CliError::Usage(format!("{flag}: expected a rational number, got `{text}`")));
    }
    Ok(p.constant_term())
}

fn pair<'a>(text: &'a str, flag: &str) -> Result<(&'a str, &'a str), CliError> {
    text.split_once(',')
        .ok_or_else(|| CliError::Usage(format!("{flag}: expected two comma-separated values, got `{text}`")))
}

fn interval(text: &str, flag: &str) -> Result<IntervalQ, CliError> {
    let (a, b) = pair(text, flag)?;
    Ok(IntervalQ::new(rational(a, flag)?, rational(b, flag)?)?)
}

fn window(text: &str, flag: &str) -> Result<(f64, f64), CliError> {
    let (a, b) = pair(text, flag)?;
    let num = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|_| CliError::Usage(format!("{flag}: `{s}` is not a number")))
    };
    let (lo, hi) = (num(a)?, num(b)?);
    if lo >= hi {
        return Err(CliError::Usage(format!("{flag}: need lo < hi, got {lo},{hi}")));
    }
    Ok((lo, hi))
}

fn parse_cmd(text: String, vars: &str, out: &mut dyn Write) -> Res {
    let names: Vec<&str> = vars.split(',').map(str::trim).filter(|v| !v.is_empty()).collect();
    let p = parse_polynomial(text.trim(), &names)?;
    writeln!(out, "{}", render(&p)).map_err(io)
}

fn implicitize_cmd(arg: &CurveArg, out: &mut dyn Write) -> Res {
    let f = implicitize(&curve_of(arg)?)?;
    writeln!(out, "{}", render(&f)).map_err(io)?;
    let degree = f.total_degree().unwrap_or(0);
    writeln!(out, "degree: {degree}").map_err(io)
}

fn xy_poly(text: &str) -> Result<MultiPoly, CliError> {
    Ok(parse_polynomial(text.trim(), &["x", "y"])?)
}

fn order_text(s: &PuiseuxSeries) -> String {
    let full = s.render_with_order();
    match full.strip_prefix(&s.to_string()) {
        Some(tail) if !tail.is_empty() => tail.trim_start_matches(" + ").to_string(),
        _ => "exact".to_string(),
    }
}

fn puiseux_cmd(text: &str, terms: usize, all: bool, out: &mut dyn Write) -> Res {
    let f = xy_poly(text)?;
    if !all {
        let s = expand_branch(&f, terms)?;
        writeln!(out, "{s}").map_err(io)?;
        return writeln!(out, "remainder: {}", order_text(&s)).map_err(io);
    }
    for (i, b) in expand_all_branches(&f, terms)?.iter().enumerate() {
        let mark = if b.principal { " (principal)" } else { "" };
        write!(out, "branch {}{mark}: y = {}", i + 1, b.series.render_with_order()).map_err(io)?;
        match &b.stopped {
            Some(why) => writeln!(out, "  [stopped: {why}]").map_err(io)?,
            None => writeln!(out).map_err(io)?,
        }
    }
    Ok(())
}

fn singular_cmd(curve: Option<String>, param: Option<String>, input: &InFile, out: &mut dyn Write) -> Res {
    let f = match (curve, param) {
        (None, Some(p)) => implicitize(&parse_curve(&p)?.to_curve()?)?,
        (c, None) => xy_poly(&source(c, input, "--curve")?)?,
        (Some(_), Some(_)) => unreachable!("clap rejects both"),
    };
    let report = rational_singular_points(&f)?;
    if report.points.is_empty() {
        writeln!(out, "no rational singular points").map_err(io)?;
    }
    for p in &report.points {
        writeln!(out, "{p}").map_err(io)?;
    }
    if report.irrational_abscissae > 0 {
        writeln!(
            out,
            "{} candidate abscissa(e) are irrational and not listed",
            report.irrational_abscissae
        )
        .map_err(io)?;
    }
    Ok(())
}

enum Cut {
    Total,
    Chord(Rational, bool),
    Vertical(Rational, Rational, bool),
    FreeInlet(Rational, IntervalQ),
}

impl Cut {
    fn from_flags(
        chord: Option<String>,
        vertical: Option<String>,
        free_inlet: Option<String>,
        complement: bool,
        range: &str,
    ) -> Result<Self, CliError> {
        let cut = match (chord, vertical, free_inlet) {
            (Some(t), _, _) => Cut::Chord(rational(&t, "--chord")?, complement),
            (_, Some(v), _) => {
                let (a, b) = pair(&v, "--vertical")?;
                Cut::Vertical(rational(a, "--vertical")?, rational(b, "--vertical")?, complement)
            }
            (_, _, Some(t)) => Cut::FreeInlet(rational(&t, "--free-inlet")?, interval(range, "--range")?),
            _ => Cut::Total,
        };
        if complement && matches!(cut, Cut::Total | Cut::FreeInlet(..)) {
            return Err(CliError::Usage("--complement needs --chord or --vertical".into()));
        }
        Ok(cut)
    }
}

fn value_line(v: &AreaValue) -> String {
    match v {
        AreaValue::Exact(r) => format!("{} = {}", rat_text(r), sig12(to_f64(r))),
        AreaValue::Numeric(x) => format!("{} (numeric)", sig12(*x)),
    }
}

fn area_cmd(arg: &CurveArg, cut: Cut, out: &mut dyn Write, err: &mut dyn Write) -> Res {
    let result: AreaResult = match &cut {
        Cut::Total => total_area(&curve_of(arg)?)?,
        Cut::Chord(t, false) => origin_chord_segment_area(&centered_of(arg)?, t)?,
        Cut::Chord(t, true) => origin_chord_complement_area(&centered_of(arg)?, t)?,
        Cut::Vertical(a, b, false) => vertical_segment_area(&centered_of(arg)?, a, b)?,
        Cut::Vertical(a, b, true) => vertical_complement_area(&centered_of(arg)?, a, b)?,
        Cut::FreeInlet(t, valid) => free_inlet_area(&centered_of(arg)?, t, valid)?,
    };
    if let Some(w) = &result.warning {
        writeln!(err, "warning: {w}").map_err(io)?;
    }
    writeln!(out, "{}", value_line(&result.value)).map_err(io)?;
    writeln!(out, "signed: {}", value_line(&result.signed)).map_err(io)?;
    let orientation = result.orientation.map(|o| o.to_string()).unwrap_or_else(|| "undefined".into());
    writeln!(out, "orientation: {orientation}").map_err(io)
}

fn damper_cmd(
    arg: &CurveArg,
    range: &str,
    steps: usize,
    path: Option<PathBuf>,
    svg: Option<PathBuf>,
    out: &mut dyn Write,
) -> Res {
    if steps < 2 {
        return Err(CliError::Usage(format!("--steps must be at least 2, got {steps}")));
    }
    let valid = interval(range, "--range")?;
    let cp = centered_of(arg)?;
    let rows = damper_table(&cp, &even_parameters(&valid, steps - 1), &valid)?;
    let csv = table::csv(&rows);
    match path {
        Some(p) => write_file(&p, &csv)?,
        None => out.write_all(csv.as_bytes()).map_err(io)?,
    }
    if let Some(p) = svg {
        write_file(&p, &table::svg(&rows))?;
    }
    Ok(())
}

fn certify_cmd(arg: &CurveArg, family: FamilyArg, path: Option<PathBuf>, out: &mut dyn Write) -> Res {
    let cp = centered_of(arg)?;
    let cert = match family {
        FamilyArg::Pencil => pencil_certificate(&cp)?,
        FamilyArg::Vertical => vertical_certificate(&cp)?,
        FamilyArg::FreeInlet => free_inlet_certificate(&cp)?,
    };
    let text = cert.to_text();
    match path {
        Some(p) => write_file(&p, &text),
        None => out.write_all(text.as_bytes()).map_err(io),
    }
}

enum SubjectArg {
    Curve(String),
    Polygon(String),
    Square,
}

fn polygon(text: &str) -> Result<PiecewiseLinear, CliError> {
    let bad = || CliError::Usage(format!("--polygon: expected \"(x,y) (x,y) ...\", got `{text}`"));
    let mut vertices = Vec::new();
    for chunk in text.split(')').map(str::trim).filter(|c| !c.is_empty()) {
        let inner = chunk.strip_prefix('(').ok_or_else(bad)?;
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        vertices.push((to_f64(&rational(a, "--polygon")?), to_f64(&rational(b, "--polygon")?)));
    }
    if vertices.len() < 3 {
        return Err(CliError::Usage(format!("--polygon needs at least 3 vertices, got {}", vertices.len())));
    }
    Ok(PiecewiseLinear { vertices })
}

fn verify_cmd(text: &str, subject: SubjectArg, opts: &VerifyOptions, verbose: bool, out: &mut dyn Write) -> Res {
    // ';' stands in for a line break on the command line
    let cert = Certificate::from_text(&text.replace(';', "\n"))?;
    let report = match subject {
        SubjectArg::Curve(p) => {
            let curve = parse_curve(&p)?.to_curve()?;
            verify_certificate_with(&cert, Subject::Curve(&curve), opts)?
        }
        SubjectArg::Polygon(p) => verify_certificate_with(&cert, Subject::Polygon(&polygon(&p)?), opts)?,
        SubjectArg::Square => verify_certificate_with(&cert, Subject::Polygon(&PiecewiseLinear::unit_square()), opts)?,
    };
    writeln!(out, "family: {}", report.family).map_err(io)?;
    writeln!(out, "window: {}", report.window).map_err(io)?;
    writeln!(out, "samples: {}", report.samples.len()).map_err(io)?;
    if verbose {
        writeln!(out, "a,b,c,area,residual").map_err(io)?;
        for s in &report.samples {
            let (a, b, c) = s.line;
            writeln!(
                out,
                "{},{},{},{},{}",
                sig12(a),
                sig12(b),
                sig12(c),
                sig12(s.area),
                sig12(s.residual)
            )
            .map_err(io)?;
        }
    }
    writeln!(out, "max relative residual: {:.3e} (tol {:.1e})", report.max_relative_residual, report.tol).map_err(io)?;
    if report.passed {
        writeln!(out, "PASS").map_err(io)
    } else {
        writeln!(out, "FAIL").map_err(io)?;
        Err(CliError::domain(
            "certify",
            format!(
                "certificate does not vanish on the sampled areas: max relative residual {:.3e} exceeds {:.1e}",
                report.max_relative_residual, report.tol
            ),
        ))
    }
}
