//! Damper table: CSV rows and a small SVG plot of S2 against t_P.

use std::fmt::Write;

use ovals_core::algebra::rational::{format as rat_text, to_f64};
use ovals_core::quadrature::DamperRow;

pub const HEADER: &str = "t_P,alpha_deg,S2,S2_exact";

/// Fixed-point text with 12 significant digits.
pub fn sig12(v: f64) -> String {
    if v == 0.0 {
        return format!("{:.11}", 0.0);
    }
    if !v.is_finite() {
        return v.to_string();
    }
    // the exponent after rounding, so 9.9999999999999 counts as 10
    let sci = format!("{v:.11e}");
    let exp: i32 = sci[sci.find('e').expect("exponent") + 1..].parse().expect("integer exponent");
    let decimals = (11 - exp).max(0) as usize;
    format!("{v:.decimals$}")
}

pub fn csv(rows: &[DamperRow]) -> String {
    let mut out = String::from(HEADER);
    out.push('\n');
    for r in rows {
        let exact = r.s2_exact.as_ref().map(rat_text).unwrap_or_default();
        let _ = writeln!(out, "{},{},{},{}", sig12(to_f64(&r.t)), sig12(r.alpha_deg), sig12(r.s2), exact);
    }
    out
}

const W: f64 = 640.0;
const H: f64 = 400.0;
const MARGIN: f64 = 56.0;
const TICKS: usize = 5;

/// Polyline of S2 against t_P with labelled axes.
pub fn svg(rows: &[DamperRow]) -> String {
    let pts: Vec<(f64, f64)> = rows.iter().map(|r| (to_f64(&r.t), r.s2)).collect();
    let (x0, x1) = span(pts.iter().map(|p| p.0));
    let (y0, y1) = span(pts.iter().map(|p| p.1));
    let sx = |x: f64| MARGIN + (x - x0) / (x1 - x0) * (W - 2.0 * MARGIN);
    let sy = |y: f64| H - MARGIN - (y - y0) / (y1 - y0) * (H - 2.0 * MARGIN);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#
    );
    let _ = writeln!(s, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
    let (left, right, top, bottom) = (MARGIN, W - MARGIN, MARGIN, H - MARGIN);
    let _ = writeln!(
        s,
        r#"<path d="M{left} {top} L{left} {bottom} L{right} {bottom}" fill="none" stroke="black"/>"#
    );
    for k in 0..=TICKS {
        let f = k as f64 / TICKS as f64;
        let xv = x0 + f * (x1 - x0);
        let yv = y0 + f * (y1 - y0);
        let (px, py) = (sx(xv), sy(yv));
        let _ = writeln!(
            s,
            r#"<line x1="{px:.2}" y1="{bottom}" x2="{px:.2}" y2="{:.2}" stroke="black"/><text x="{px:.2}" y="{:.2}" font-size="11" text-anchor="middle">{xv:.3}</text>"#,
            bottom + 5.0,
            bottom + 18.0
        );
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="{py:.2}" x2="{left}" y2="{py:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" font-size="11" text-anchor="end">{yv:.4}</text>"#,
            left - 5.0,
            left - 8.0,
            py + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" font-size="13" text-anchor="middle">t_P</text>"#,
        W / 2.0,
        H - 12.0
    );
    let _ = writeln!(
        s,
        r#"<text x="16" y="{:.2}" font-size="13" text-anchor="middle" transform="rotate(-90 16 {:.2})">S2</text>"#,
        H / 2.0,
        H / 2.0
    );
    let coords: Vec<String> = pts.iter().map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y))).collect();
    let _ = writeln!(
        s,
        r#"<polyline points="{}" fill="none" stroke="steelblue" stroke-width="2"/>"#,
        coords.join(" ")
    );
    s.push_str("</svg>\n");
    s
}

fn span(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(v), b.max(v)));
    if !lo.is_finite() {
        return (0.0, 1.0);
    }
    if hi - lo < 1e-12 {
        return (lo - 0.5, hi + 0.5);
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(sig12(0.15), "0.150000000000");
        assert_eq!(sig12(45.0), "45.0000000000");
        assert_eq!(sig12(0.0), "0.00000000000");
        assert_eq!(sig12(-0.0375), "-0.0375000000000");
        assert_eq!(sig12(123456789012.4), "123456789012");
        assert_eq!(sig12(9.9999999999999), "10.0000000000");
    }
}
