use num_traits::Zero;
use ovals_core::algebra::rational::{int, rat};
use ovals_core::algebra::{MultiPoly, Rational};
use ovals_core::elimination::{determinant_bareiss, eliminate_two, resultant, resultant_sylvester};
use ovals_core::parse::parse_polynomial;
use proptest::prelude::*;

fn xy() -> Vec<String> {
    vec!["x".into(), "y".into()]
}

/// Laplace expansion along the first row.
fn cofactor_det(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = MultiPoly::zero(m[0][0].vars());
    for j in 0..n {
        let minor: Vec<Vec<MultiPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = &m[0][j] * &cofactor_det(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn entry() -> impl Strategy<Value = MultiPoly> {
    // a + b*x with small integers, zero often enough to hit pivoting
    (-3i64..4, -2i64..3, 0u8..4).prop_map(|(a, b, z)| {
        if z == 0 {
            MultiPoly::zero(&xy())
        } else {
            MultiPoly::from_terms(&xy(), [(vec![0, 0], int(a)), (vec![1, 0], int(b))])
        }
    })
}

fn matrix() -> impl Strategy<Value = Vec<Vec<MultiPoly>>> {
    (1usize..7).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(entry(), n), n))
}

fn poly_y(max_deg: u32) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0u32..3, 0..=max_deg), -4i64..5), 1..6).prop_map(|terms| {
        MultiPoly::from_terms(&xy(), terms.into_iter().map(|((i, j), c)| (vec![i, j], int(c))))
    })
}

/// y^k plus lower-order terms: constant leading coefficient in y.
fn monic_y() -> impl Strategy<Value = MultiPoly> {
    (1u32..4, poly_y(2), 1i64..4).prop_map(|(k, rest, lc)| {
        let lead = MultiPoly::from_terms(&xy(), [(vec![0, k + 2], int(lc))]);
        &lead + &rest
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bareiss_agrees_with_cofactor_expansion(m in matrix()) {
        prop_assert_eq!(determinant_bareiss(&m), cofactor_det(&m));
    }

    #[test]
    fn reduced_resultant_matches_sylvester(f in poly_y(3), g in poly_y(3)) {
        prop_assume!(f.uses_var("y") && g.uses_var("y"));
        prop_assert_eq!(resultant(&f, &g, "y").unwrap(), resultant_sylvester(&f, &g, "y").unwrap());
    }

    #[test]
    fn norm_form_matches_sylvester(f in poly_y(3), d in monic_y()) {
        prop_assume!(f.uses_var("y"));
        prop_assert_eq!(resultant(&f, &d, "y").unwrap(), resultant_sylvester(&f, &d, "y").unwrap());
        prop_assert_eq!(resultant(&d, &f, "y").unwrap(), resultant_sylvester(&d, &f, "y").unwrap());
    }

    #[test]
    fn swapping_arguments_flips_sign_by_degree_parity(f in poly_y(3), g in poly_y(3)) {
        prop_assume!(f.uses_var("y") && g.uses_var("y"));
        let m = f.degree_in("y").unwrap();
        let n = g.degree_in("y").unwrap();
        let ab = resultant(&f, &g, "y").unwrap();
        let ba = resultant(&g, &f, "y").unwrap();
        if (m * n) % 2 == 0 {
            prop_assert_eq!(ab, ba);
        } else {
            prop_assert_eq!(ab, -&ba);
        }
    }

    #[test]
    fn planted_common_root_is_detected(
        a in poly_y(2), b in poly_y(2), c in poly_y(2), d in poly_y(2),
        x0 in -3i64..4, r in -3i64..4,
    ) {
        // f and g both vanish at (x0, r)
        let vars = xy();
        let y_r = &MultiPoly::var("y", &vars) - &MultiPoly::constant(int(r), &vars);
        let x_x0 = &MultiPoly::var("x", &vars) - &MultiPoly::constant(int(x0), &vars);
        let f = &(&y_r * &a) + &(&x_x0 * &b);
        let g = &(&y_r * &c) + &(&x_x0 * &d);
        prop_assume!(f.uses_var("y") && g.uses_var("y"));
        let res = resultant(&f, &g, "y").unwrap();
        prop_assert!(res.specialize("x", &int(x0)).is_zero());
    }

    #[test]
    fn specialization_commutes_with_resultant(f in monic_y(), g in poly_y(3), x0 in -3i64..4) {
        // leading coefficient of f is constant, so it cannot drop
        prop_assume!(g.uses_var("y"));
        let at = int(x0);
        let gs = g.specialize("x", &at);
        prop_assume!(gs.degree_in("y") == g.degree_in("y"));
        let lhs = resultant(&f, &g, "y").unwrap().specialize("x", &at);
        let rhs = resultant(&f.specialize("x", &at), &gs, "y").unwrap();
        prop_assert!(lhs.is_constant() && rhs.is_constant());
        prop_assert_eq!(lhs.constant_term(), rhs.constant_term());
    }
}

#[test]
fn circle_and_line() {
    let c = parse_polynomial("x^2 + y^2 - 1", &["x", "y"]).unwrap();
    let l = parse_polynomial("y - x", &["x", "y"]).unwrap();
    let r = resultant(&c, &l, "y").unwrap();
    assert_eq!(r, parse_polynomial("2*x^2 - 1", &["x", "y"]).unwrap());
}

#[test]
fn arnold_implicitization_by_two_eliminations() {
    let vars = ["t", "x", "y"];
    let p1 = parse_polynomial("x - (t^2 - 1)^2", &vars).unwrap();
    let p2 = parse_polynomial("y - (t^3 - t)", &vars).unwrap();
    let r = resultant(&p1, &p2, "t").unwrap();
    let want = parse_polynomial("y^4 - 2*x*y^2 - x^3 + x^2", &vars).unwrap();
    let scale: Rational = r.coefficient(&[("y", 4)]) / want.coefficient(&[("y", 4)]);
    assert!(!scale.is_zero());
    assert_eq!(r, want.scale(&scale));
}

#[test]
fn two_stage_elimination_of_shared_parameter() {
    let vars = ["t", "s", "x"];
    let p1 = parse_polynomial("x - t*s", &vars).unwrap();
    let p2 = parse_polynomial("t - 2", &vars).unwrap();
    let p3 = parse_polynomial("s - 3", &vars).unwrap();
    let out = eliminate_two(&p1, &p2, &p3, "t", "s").unwrap();
    let lead = out.coefficient(&[("x", 1)]);
    assert_eq!(out.scale(&(rat(1, 1) / lead)).constant_term(), int(-6));
}
