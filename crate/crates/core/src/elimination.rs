//! Sylvester resultants and iterated elimination.

use num_traits::One;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{MultiPoly, Rational, UniPoly};

/// Largest Sylvester matrix we are willing to reduce.
pub const MAX_SYLVESTER_SIZE: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElimError {
    #[error("both polynomials have degree zero in `{0}`; nothing to eliminate")]
    NothingToEliminate(String),
    #[error("cannot eliminate from the zero polynomial")]
    ZeroInput,
    #[error("Sylvester matrix of size {size} exceeds the limit of {MAX_SYLVESTER_SIZE}")]
    TooLarge { size: usize },
    #[error("degenerate elimination at {stage}: resultant vanishes identically{}", common_factor.as_ref().map(|c| format!(" (common factor {c})")).unwrap_or_default())]
    Degenerate {
        stage: String,
        common_factor: Option<String>,
    },
}

/// Sylvester matrix of two polynomials with respect to `eliminated`. Rows
/// hold coefficients from the leading one down: first `deg g` shifted
/// copies of `f`, then `deg f` shifted copies of `g`.
#[derive(Clone, Debug, PartialEq)]
pub struct SylvesterMatrix {
    pub entries: Vec<Vec<MultiPoly>>,
    pub eliminated: String,
}

impl SylvesterMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn determinant(&self) -> MultiPoly {
        determinant_bareiss(&self.entries)
    }
}

fn degree_pair(f: &MultiPoly, g: &MultiPoly, v: &str) -> Result<(usize, usize), ElimError> {
    let (Some(m), Some(n)) = (f.degree_in(v), g.degree_in(v)) else {
        return Err(ElimError::ZeroInput);
    };
    if m == 0 && n == 0 {
        return Err(ElimError::NothingToEliminate(v.to_string()));
    }
    Ok((m as usize, n as usize))
}

fn common_vars(f: &MultiPoly, g: &MultiPoly) -> Vec<String> {
    let mut vars = f.vars().to_vec();
    for v in g.vars() {
        if !vars.contains(v) {
            vars.push(v.clone());
        }
    }
    vars
}

pub fn sylvester_matrix(f: &MultiPoly, g: &MultiPoly, v: &str) -> Result<SylvesterMatrix, ElimError> {
    let (m, n) = degree_pair(f, g, v)?;
    let size = m + n;
    if size > MAX_SYLVESTER_SIZE {
        return Err(ElimError::TooLarge { size });
    }
    let vars = common_vars(f, g);
    let f = f.align(&vars).expect("superset");
    let g = g.align(&vars).expect("superset");
    let zero = MultiPoly::zero(&vars);
    let fc = f.coefficients_in(v);
    let gc = g.coefficients_in(v);
    let mut entries = vec![vec![zero; size]; size];
    for row in 0..n {
        for (k, c) in fc.iter().enumerate() {
            // coefficient of v^k sits at column row + (m - k)
            entries[row][row + m - k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in gc.iter().enumerate() {
            entries[n + row][row + n - k] = c.clone();
        }
    }
    Ok(SylvesterMatrix {
        entries,
        eliminated: v.to_string(),
    })
}

/// Fraction-free (Bareiss) determinant over the polynomial ring. Every
/// division is exact; rows below the pivot are updated in parallel.
pub fn determinant_bareiss(matrix: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = matrix.len();
    let vars = matrix
        .iter()
        .flatten()
        .fold(Vec::<String>::new(), |mut acc, p| {
            for v in p.vars() {
                if !acc.contains(v) {
                    acc.push(v.clone());
                }
            }
            acc
        });
    if n == 0 {
        return MultiPoly::one(&vars);
    }
    let mut a: Vec<Vec<MultiPoly>> = matrix
        .iter()
        .map(|row| row.iter().map(|p| p.align(&vars).expect("superset")).collect())
        .collect();
    let mut negate = false;
    let mut prev = MultiPoly::one(&vars);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return MultiPoly::zero(&vars);
            };
            a.swap(k, swap);
            negate = !negate;
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        bottom.par_iter_mut().for_each(|row| {
            let lead = row[k].clone();
            for j in k + 1..n {
                let num = &(&row[j] * pivot) - &(&lead * &pivot_row[j]);
                row[j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            row[k] = MultiPoly::zero(&vars);
        });
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// Leading coefficient in `v` when it is a nonzero constant.
fn constant_leading(p: &MultiPoly, v: &str) -> Option<Rational> {
    let coeffs = p.coefficients_in(v);
    let lc = coeffs.last()?;
    lc.is_constant().then(|| lc.constant_term())
}

/// Remainder of `p` by `d` in `v`, where `d` has constant leading
/// coefficient `lc`.
fn remainder_by(p: &MultiPoly, d: &MultiPoly, v: &str, lc: &Rational) -> MultiPoly {
    let vars = common_vars(p, d);
    let mut rem = p.align(&vars).expect("superset");
    let d = d.align(&vars).expect("superset");
    let dd = d.degree_in(v).unwrap_or(0);
    let x = MultiPoly::var(v, &vars);
    let inv = Rational::one() / lc;
    while let Some(deg) = rem.degree_in(v) {
        if deg < dd {
            break;
        }
        let c = rem.coefficients_in(v)[deg as usize].scale(&inv);
        let shift = &c * &x.pow(deg - dd);
        rem = &rem - &(&shift * &d);
    }
    rem
}

/// Resultant of `f` and `g` with respect to `v`, equal to the determinant
/// of their Sylvester matrix. When one input has a constant leading
/// coefficient the other is reduced modulo it and the value is taken as
/// a norm in the quotient ring, which keeps the matrix small.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, v: &str) -> Result<MultiPoly, ElimError> {
    let (mut m, mut n) = degree_pair(f, g, v)?;
    let mut f = f.clone();
    let mut g = g.clone();
    // Res(f, g) = scale * Res(f', g')
    let mut scale = Rational::one();
    loop {
        if m >= n && n >= 1 {
            if let Some(b) = constant_leading(&g, v) {
                // Res(f,g) = (-1)^(mn) b^(m-r) (-1)^(nr) Res(R, g)
                let r_poly = remainder_by(&f, &g, v, &b);
                let Some(r) = r_poly.degree_in(v).map(|d| d as usize) else {
                    return Ok(MultiPoly::zero(&common_vars(&f, &g)));
                };
                if r == m {
                    break;
                }
                let sign = if (m * n + n * r) % 2 == 1 { -Rational::one() } else { Rational::one() };
                scale = scale * sign * num_traits::pow(b, m - r);
                f = r_poly;
                m = r;
                continue;
            }
        }
        if n >= m && m >= 1 {
            if let Some(a) = constant_leading(&f, v) {
                // Res(f,g) = a^(n-r) Res(f, R)
                let r_poly = remainder_by(&g, &f, v, &a);
                let Some(r) = r_poly.degree_in(v).map(|d| d as usize) else {
                    return Ok(MultiPoly::zero(&common_vars(&f, &g)));
                };
                if r == n {
                    break;
                }
                scale *= num_traits::pow(a, n - r);
                g = r_poly;
                n = r;
                continue;
            }
        }
        break;
    }
    // Norm form: for d with constant leading coefficient c and degree k,
    // Res(d, p) = c^deg(p) · det(multiplication by p modulo d), a k×k
    // determinant instead of a (deg p + k)-sized Sylvester one.
    if n >= 1 && m < n {
        if let Some(b) = constant_leading(&g, v) {
            let sign = if (m * n) % 2 == 1 { -Rational::one() } else { Rational::one() };
            let det = determinant_bareiss(&multiplication_matrix(&f, &g, v, &b, n)?);
            return Ok(det.scale(&(scale * sign * num_traits::pow(b, m))));
        }
    }
    if m >= 1 && n < m {
        if let Some(a) = constant_leading(&f, v) {
            let det = determinant_bareiss(&multiplication_matrix(&g, &f, v, &a, m)?);
            return Ok(det.scale(&(scale * num_traits::pow(a, n))));
        }
    }
    let det = sylvester_matrix(&f, &g, v)?.determinant();
    Ok(det.scale(&scale))
}

/// Matrix of multiplication by `p` on `1, v, …, v^(k-1)` modulo `d`,
/// where `d` has degree `k` and constant leading coefficient `lc`.
fn multiplication_matrix(
    p: &MultiPoly,
    d: &MultiPoly,
    v: &str,
    lc: &Rational,
    k: usize,
) -> Result<Vec<Vec<MultiPoly>>, ElimError> {
    if k > MAX_SYLVESTER_SIZE {
        return Err(ElimError::TooLarge { size: k });
    }
    let vars = common_vars(p, d);
    let x = MultiPoly::var(v, &vars);
    let zero = MultiPoly::zero(&vars);
    let mut cols = Vec::with_capacity(k);
    let mut col = remainder_by(p, d, v, lc);
    for j in 0..k {
        cols.push(col.coefficients_in(v));
        if j + 1 < k {
            col = remainder_by(&(&col * &x), d, v, lc);
        }
    }
    Ok((0..k)
        .map(|i| cols.iter().map(|c| c.get(i).cloned().unwrap_or_else(|| zero.clone())).collect())
        .collect())
}

/// Determinant of the literal Sylvester matrix, with no degree reduction.
pub fn resultant_sylvester(f: &MultiPoly, g: &MultiPoly, v: &str) -> Result<MultiPoly, ElimError> {
    Ok(sylvester_matrix(f, g, v)?.determinant())
}

/// Greatest common divisor of the `v`-parts of both inputs: the common
/// factor that depends on `v` alone.
pub fn common_univariate_factor(f: &MultiPoly, g: &MultiPoly, v: &str) -> UniPoly {
    f.univariate_parts(v)
        .iter()
        .chain(g.univariate_parts(v).iter())
        .fold(UniPoly::zero(v), |acc, p| acc.gcd(p))
}

/// Resultant outcome from [`resultant_nondegenerate`].
#[derive(Clone, Debug, PartialEq)]
pub struct Eliminant {
    pub poly: MultiPoly,
    /// Factor in the eliminated variable divided out of both inputs
    /// before the successful attempt, if any.
    pub removed_common: Option<UniPoly>,
}

/// Resultant that treats an identically zero result as a typed signal:
/// retries once after dividing both inputs by their common factor in `v`
/// and fails with diagnostics if the result still vanishes.
pub fn resultant_nondegenerate(
    f: &MultiPoly,
    g: &MultiPoly,
    v: &str,
    stage: &str,
) -> Result<Eliminant, ElimError> {
    let r = resultant(f, g, v)?;
    if !r.is_zero() {
        return Ok(Eliminant {
            poly: r,
            removed_common: None,
        });
    }
    let common = common_univariate_factor(f, g, v);
    let degenerate = |c: Option<String>| ElimError::Degenerate {
        stage: stage.to_string(),
        common_factor: c,
    };
    if common.is_constant() {
        return Err(degenerate(None));
    }
    let c = MultiPoly::from_univariate(&common, f.vars());
    let f2 = f.div_exact(&c).expect("common factor divides");
    let g2 = g.div_exact(&c).expect("common factor divides");
    let r = resultant(&f2, &g2, v)?;
    if r.is_zero() {
        return Err(degenerate(Some(common.to_string())));
    }
    Ok(Eliminant {
        poly: r,
        removed_common: Some(common),
    })
}

/// Eliminates `v1` and then `v2` from three equations. Inputs containing
/// `v1` are paired first: with two of them, `r1 = Res_v1` of that pair and
/// `r2` is the remaining input; with three, `r1 = Res_v1(e1, e2)` and
/// `r2 = Res_v1(e1, e3)`. The result is `Res_v2(r1, r2)`, computed from
/// the primitive parts of `r1` and `r2`, so it is fixed up to a rational
/// scalar.
pub fn eliminate_two(
    e1: &MultiPoly,
    e2: &MultiPoly,
    e3: &MultiPoly,
    v1: &str,
    v2: &str,
) -> Result<MultiPoly, ElimError> {
    let eqs = [e1, e2, e3];
    let with_v1: Vec<usize> = (0..3).filter(|&i| eqs[i].uses_var(v1)).collect();
    let degenerate = |stage: &str| ElimError::Degenerate {
        stage: stage.to_string(),
        common_factor: None,
    };
    let (r1, r2) = match with_v1.as_slice() {
        [a, b] => {
            let rest = (0..3).find(|i| i != a && i != b).expect("three inputs");
            let r1 = resultant_nondegenerate(eqs[*a], eqs[*b], v1, "first elimination")?.poly;
            (r1.primitive_part().1, eqs[rest].clone())
        }
        [_, _, _] => {
            let r1 = resultant_nondegenerate(e1, e2, v1, "first elimination (e1, e2)")?.poly;
            let r2 = resultant_nondegenerate(e1, e3, v1, "first elimination (e1, e3)")?.poly;
            (r1.primitive_part().1, r2.primitive_part().1)
        }
        _ => return Err(degenerate(&format!("`{v1}` occurs in fewer than two equations"))),
    };
    if !r1.uses_var(v2) && !r2.uses_var(v2) {
        return Err(degenerate(&format!("`{v2}` absent after eliminating `{v1}`")));
    }
    Ok(resultant_nondegenerate(&r1, &r2, v2, "second elimination")?.poly)
}

/// Cleanup applied to elimination outputs.
#[derive(Clone, Debug, PartialEq)]
pub struct Cleaned {
    pub poly: MultiPoly,
    /// `input = content · removed · poly`
    pub content: Rational,
    /// Repeated-factor part removed in the univariate case, else 1.
    pub removed: MultiPoly,
    /// True when only the rational content could be removed.
    pub multivariate: bool,
}

/// Divides out the rational content and, when `p` involves `v` alone,
/// its repeated factors. The result is a primitive integer polynomial with
/// positive leading coefficient in canonical order.
pub fn primitive_squarefree(p: &MultiPoly, v: &str) -> Cleaned {
    assert!(!p.is_zero(), "cleanup of the zero polynomial");
    let vars = p.vars().to_vec();
    match p.to_univariate(v) {
        Some(u) if !u.is_constant() => {
            let sf = u.square_free_part();
            let removed_u = u.div_exact(&sf).expect("square-free part divides");
            let sf_mp = MultiPoly::from_univariate(&sf, &vars).align(&vars).expect("superset");
            let (k, prim) = sf_mp.primitive_part();
            // removed_u absorbs the overall scalar; split it back out
            let removed_mp = MultiPoly::from_univariate(&removed_u, &vars).align(&vars).expect("superset");
            let (k2, removed_prim) = removed_mp.primitive_part();
            Cleaned {
                poly: prim,
                content: k * k2,
                removed: removed_prim,
                multivariate: false,
            }
        }
        _ => {
            let (k, prim) = p.primitive_part();
            Cleaned {
                poly: prim,
                content: k,
                removed: MultiPoly::one(&vars),
                multivariate: p.used_vars().len() > 1,
            }
        }
    }
}
