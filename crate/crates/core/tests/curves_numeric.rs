use ovals_core::algebra::rational::{int, rat, to_f64};
use ovals_core::algebra::{IntervalQ, Rational, UniPoly};
use ovals_core::curves::{
    bezier_to_parametric, implicitize, parse_curve, rational_singular_points, substitute_curve, tangent_vector,
    BezierControlPolygon, ParametricCurve, Point,
};
use proptest::prelude::*;

fn comp() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-4i64..5, 2..4).prop_map(|c| UniPoly::from_ints("t", &c))
}

fn curve(g: UniPoly, f: UniPoly) -> ParametricCurve {
    ParametricCurve::polynomial(g, f, IntervalQ::new(int(0), int(1)).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn tangent_matches_central_difference(g in comp(), f in comp(), k in 1i64..10) {
        prop_assume!(!g.is_constant() && !f.is_constant());
        let c = curve(g, f);
        let t0 = rat(k, 10);
        let (dx, dy) = tangent_vector(&c, &t0).unwrap();
        let t = to_f64(&t0);
        let h = 1e-6;
        let (x1, y1) = c.eval_f64(t + h);
        let (x0, y0) = c.eval_f64(t - h);
        prop_assert!(((x1 - x0) / (2.0 * h) - to_f64(&dx)).abs() < 1e-5);
        prop_assert!(((y1 - y0) / (2.0 * h) - to_f64(&dy)).abs() < 1e-5);
    }

    #[test]
    fn implicit_equation_vanishes_on_curve(g in comp(), f in comp()) {
        prop_assume!(!g.is_constant() && !f.is_constant());
        let c = curve(g, f);
        let p = implicitize(&c).unwrap();
        prop_assert!(substitute_curve(&p, &c).is_zero());
    }
}

#[test]
fn bezier_interpolates_end_points() {
    let pts = vec![
        Point::new(int(0), int(0)),
        Point::new(int(2), int(3)),
        Point::new(int(-1), int(5)),
        Point::new(int(4), int(1)),
    ];
    let c = bezier_to_parametric(&BezierControlPolygon::new(pts.clone()).unwrap()).unwrap();
    assert_eq!(c.point_at(&int(0)).unwrap(), pts[0]);
    assert_eq!(c.point_at(&int(1)).unwrap(), pts[3]);
    for k in 0..=8 {
        let t = rat(k, 8);
        assert_eq!(c.point_at(&t).unwrap(), de_casteljau(&pts, &t));
    }
}

fn de_casteljau(pts: &[Point], t: &Rational) -> Point {
    let mut level = pts.to_vec();
    while level.len() > 1 {
        level = level
            .windows(2)
            .map(|w| {
                let s = int(1) - t;
                Point::new(&s * &w[0].x + t * &w[1].x, &s * &w[0].y + t * &w[1].y)
            })
            .collect();
    }
    level.remove(0)
}

#[test]
fn arnold_only_rational_singularity_is_origin() {
    let c = parse_curve("x = (t^2 - 1)^2; y = t^3 - t; t in [-1, 1]").unwrap().to_curve().unwrap();
    let p = implicitize(&c).unwrap();
    let report = rational_singular_points(&p).unwrap();
    assert_eq!(report.points, vec![Point::origin()]);
}

#[test]
fn cusp_is_singular_and_parabola_is_not() {
    let cusp = parse_curve("x = t^2; y = t^3; t in [-1, 1]").unwrap().to_curve().unwrap();
    let p = implicitize(&cusp).unwrap();
    assert_eq!(rational_singular_points(&p).unwrap().points, vec![Point::origin()]);
    let par = parse_curve("x = t; y = t^2; t in [-1, 1]").unwrap().to_curve().unwrap();
    let q = implicitize(&par).unwrap();
    assert!(rational_singular_points(&q).unwrap().points.is_empty());
}
