//! Complex root extraction for the cubic p_z(x) = 1 − zx² + zx³ and the
//! quartic q_z(x) = 1 − zx³ + zx⁴, with Vieta certificates.
//!
//! Strategy: work on the monic form (x³ − x² + 1/z, resp. x⁴ − x³ + 1/z),
//! find one root by damped Newton from a deterministic seed grid (with a
//! bracketed-bisection fallback for the real-root searches), deflate, and
//! solve the remaining quadratic/cubic in closed form. Every root then
//! gets one Newton polish against the original non-monic polynomial, near
//! conjugates are replaced by an exact (w, conj w) pair, and the set is
//! ordered by ascending real part with ties on the imaginary part.

use crate::error::{Error, Result};
use crate::numkit::ComplexValue;

/// Ordered roots of p_z / q_z with a residual certificate.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    pub degree: u32,
    pub roots: Vec<ComplexValue>,
    /// max |p_z(root)| over the set, guaranteed ≤ 1e-11·(1+|z|).
    pub residual: f64,
    pub z: f64,
}

/// z = 1/(m² + m³): the argument that forces −m to be a root of p_z.
pub fn thai_z(m: f64) -> Result<f64> {
    if !(m > 0.0) {
        return Err(Error::Domain(format!("thai_z needs m > 0, got {m}")));
    }
    Ok(1.0 / (m * m + m * m * m))
}

/// z = −1/(m³ + m⁴): the argument that forces −m to be a root of q_z.
pub fn quartic_z(m: f64) -> Result<f64> {
    if !(m > 0.0) {
        return Err(Error::Domain(format!("quartic_z needs m > 0, got {m}")));
    }
    Ok(-1.0 / (m * m * m + m * m * m * m))
}

/// p_z(x) = 1 − zx² + zx³ evaluated in complex arithmetic.
pub fn eval_pz(z: f64, x: ComplexValue) -> ComplexValue {
    let x2 = x.sqr();
    ComplexValue::ONE + (x2 * x - x2).scale(z)
}

/// q_z(x) = 1 − zx³ + zx⁴.
pub fn eval_qz(z: f64, x: ComplexValue) -> ComplexValue {
    let x3 = x.sqr() * x;
    ComplexValue::ONE + (x3 * x - x3).scale(z)
}

/// Monic real polynomial c[0] + c[1]x + … + x^deg, evaluated with its
/// derivative (Horner).
fn eval_monic(coeffs: &[f64], x: ComplexValue) -> (ComplexValue, ComplexValue) {
    let mut p = ComplexValue::ONE;
    let mut dp = ComplexValue::ZERO;
    for &c in coeffs.iter().rev() {
        dp = dp * x + p;
        p = p * x + ComplexValue::real(c);
    }
    (p, dp)
}

fn eval_monic_real(coeffs: &[f64], x: f64) -> f64 {
    let mut p = 1.0;
    for &c in coeffs.iter().rev() {
        p = p * x + c;
    }
    p
}

/// Damped Newton on the monic polynomial from one seed. Returns the root
/// when |p| drops below `tol`.
fn newton_from_seed(coeffs: &[f64], seed: ComplexValue, tol: f64) -> Option<ComplexValue> {
    let mut x = seed;
    let (mut p, _) = eval_monic(coeffs, x);
    for _ in 0..120 {
        if p.abs() <= tol {
            return Some(x);
        }
        let (_, dp) = eval_monic(coeffs, x);
        if dp.abs() == 0.0 {
            return None;
        }
        let full = p / dp;
        let mut lambda = 1.0;
        loop {
            let cand = x - full.scale(lambda);
            let (pc, _) = eval_monic(coeffs, cand);
            if pc.abs() < p.abs() || lambda < 1.0 / 1024.0 {
                x = cand;
                p = pc;
                break;
            }
            lambda *= 0.5;
        }
    }
    if p.abs() <= tol {
        Some(x)
    } else {
        None
    }
}

/// A real root of the monic real polynomial: deterministic seed grid for
/// Newton, then a guaranteed bracketed bisection over the Cauchy bound.
/// `prefer_negative` picks the search order used for the −m root cases.
fn real_root(coeffs: &[f64], prefer_negative: bool, tol: f64) -> f64 {
    let bound = 1.0 + coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut seeds = if prefer_negative {
        vec![-1.0, -0.5, -2.0, -bound, 0.0, 0.5, 1.0, 2.0, bound]
    } else {
        vec![0.5, 1.0, 0.0, 2.0, bound, -0.5, -1.0, -2.0, -bound]
    };
    seeds.dedup();
    for s in seeds {
        if let Some(r) = newton_from_seed(coeffs, ComplexValue::real(s), tol) {
            if r.im.abs() <= 1e-9 * (1.0 + r.re.abs()) {
                return r.re;
            }
        }
    }
    // Fallback: odd-degree sign change over [−R, R] always exists for the
    // cubic; for the quartic the caller only lands here when a real root
    // is known to exist between the bracket probes below.
    let probes = [
        -bound, -1.0, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75, 1.0, 2.0, bound,
    ];
    let mut a = probes[0];
    let mut fa = eval_monic_real(coeffs, a);
    let mut bracket = None;
    for &b in &probes[1..] {
        let fb = eval_monic_real(coeffs, b);
        if fa == 0.0 {
            return a;
        }
        if fa * fb < 0.0 {
            bracket = Some((a, b, fa));
            break;
        }
        a = b;
        fa = fb;
    }
    let (mut lo, mut hi, flo) = bracket.expect("no sign change found for real root");
    let mut flo = flo;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = eval_monic_real(coeffs, mid);
        if fm == 0.0 {
            return mid;
        }
        if flo * fm < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    0.5 * (lo + hi)
}

/// Roots of the monic quadratic x² + bx + c, stable against cancellation.
fn quadratic_roots(b: f64, c: f64) -> [ComplexValue; 2] {
    let disc = b * b - 4.0 * c;
    if disc >= 0.0 {
        let sq = disc.sqrt();
        let q = -0.5 * (b + b.signum() * sq);
        if q == 0.0 {
            [ComplexValue::ZERO, ComplexValue::real(-b)]
        } else {
            [ComplexValue::real(q), ComplexValue::real(c / q)]
        }
    } else {
        let re = -0.5 * b;
        let im = 0.5 * (-disc).sqrt();
        [ComplexValue::new(re, -im), ComplexValue::new(re, im)]
    }
}

/// All roots of the monic cubic x³ + b2x² + b1x + b0: real root first,
/// synthetic deflation, closed-form quadratic.
fn monic_cubic_roots(b2: f64, b1: f64, b0: f64, prefer_negative: bool) -> [ComplexValue; 3] {
    let coeffs = [b0, b1, b2];
    let scale = 1.0 + b0.abs().max(b1.abs()).max(b2.abs());
    let r = real_root(&coeffs, prefer_negative, 1e-13 * scale);
    // Synthetic division by (x − r): x² + (b2 + r)x + (b1 + r(b2 + r)).
    let q1 = b2 + r;
    let q0 = b1 + r * q1;
    let [u, v] = quadratic_roots(q1, q0);
    [ComplexValue::real(r), u, v]
}

fn cmp_canonical(a: &ComplexValue, b: &ComplexValue) -> std::cmp::Ordering {
    a.re.partial_cmp(&b.re)
        .unwrap()
        .then(a.im.partial_cmp(&b.im).unwrap())
}

/// Replace near-conjugate root pairs by exact (w, conj w) and sort into
/// canonical order. Downstream real-valuedness of the closed forms leans
/// on exact conjugacy.
fn enforce_conjugate_pairs(roots: &mut [ComplexValue]) {
    let n = roots.len();
    let mut used = vec![false; n];
    for i in 0..n {
        if used[i] || roots[i].im == 0.0 {
            continue;
        }
        let mut best: Option<(usize, f64)> = None;
        for j in i + 1..n {
            if used[j] || roots[j].im == 0.0 || roots[j].im.signum() == roots[i].im.signum() {
                continue;
            }
            let d = (roots[i] - roots[j].conj()).abs();
            if best.is_none_or(|(_, bd)| d < bd) {
                best = Some((j, d));
            }
        }
        if let Some((j, d)) = best {
            let scale = 1.0 + roots[i].abs();
            if d <= 1e-6 * scale {
                let w = (roots[i] + roots[j].conj()).scale(0.5);
                roots[i] = w;
                roots[j] = w.conj();
                used[i] = true;
                used[j] = true;
            }
        }
    }
    roots.sort_by(cmp_canonical);
}

fn assemble_root_set(
    degree: u32,
    z: f64,
    mut roots: Vec<ComplexValue>,
    eval: impl Fn(f64, ComplexValue) -> ComplexValue,
    dpoly: impl Fn(f64, ComplexValue) -> ComplexValue,
) -> Result<RootSet> {
    // One Newton polish per root against the original polynomial.
    for r in roots.iter_mut() {
        let p = eval(z, *r);
        let dp = dpoly(z, *r);
        if dp.abs() > 0.0 {
            let step = p / dp;
            if step.is_finite() {
                *r = *r - step;
            }
        }
    }
    enforce_conjugate_pairs(&mut roots);
    let residual = roots
        .iter()
        .map(|&r| eval(z, r).abs())
        .fold(0.0f64, f64::max);
    let allowed = 1e-11 * (1.0 + z.abs());
    if residual > allowed {
        return Err(Error::Degenerate(format!(
            "root residual {residual:.3e} exceeds {allowed:.3e} at z = {z}; \
             z is too close to a discriminant zero"
        )));
    }
    // Non-real roots must occur in exact conjugate pairs.
    let mut im_sum = 0.0;
    for r in &roots {
        im_sum += r.im;
    }
    debug_assert!(im_sum.abs() <= 1e-12 * (1.0 + z.abs()));
    Ok(RootSet {
        degree,
        roots,
        residual,
        z,
    })
}

/// All three roots of p_z(x) = 1 − zx² + zx³.
pub fn solve_cubic_pz(z: f64) -> Result<RootSet> {
    if z == 0.0 {
        return Err(Error::Degenerate(
            "z = 0 degenerates p_z to the constant 1".into(),
        ));
    }
    if !z.is_finite() {
        return Err(Error::Domain("z must be finite".into()));
    }
    let c = 1.0 / z;
    // Discriminant of x³ − x² + c is 4c − 27c²; it vanishes at c = 4/27
    // (z = 27/4) and in the c → 0 limit.
    let disc = 4.0 * c - 27.0 * c * c;
    if disc.abs() <= 1e-10 * (1.0 + c * c) {
        return Err(Error::Degenerate(format!(
            "z = {z} sits at or near a discriminant zero of p_z"
        )));
    }
    let roots = monic_cubic_roots(-1.0, 0.0, c, z > 0.0);
    assemble_root_set(3, z, roots.to_vec(), eval_pz, |z, x| {
        (x.sqr().scale(3.0) - x.scale(2.0)).scale(z)
    })
}

/// All four roots of q_z(x) = 1 − zx³ + zx⁴.
pub fn solve_quartic_qz(z: f64) -> Result<RootSet> {
    if z == 0.0 {
        return Err(Error::Degenerate(
            "z = 0 degenerates q_z to the constant 1".into(),
        ));
    }
    if !z.is_finite() {
        return Err(Error::Domain("z must be finite".into()));
    }
    let d = 1.0 / z;
    // Discriminant of x⁴ − x³ + d is d²(256d − 27), vanishing at
    // d = 27/256 (z = 256/27) and in the d → 0 limit.
    let disc = d * d * (256.0 * d - 27.0);
    if disc.abs() <= 1e-10 * (1.0 + d.powi(4).abs()) {
        return Err(Error::Degenerate(format!(
            "z = {z} sits at or near a discriminant zero of q_z"
        )));
    }
    let coeffs = [d, 0.0, 0.0, -1.0];
    let scale = 1.0 + d.abs();
    let tol = 1e-13 * scale;

    let roots: Vec<ComplexValue> = if d < 27.0 / 256.0 {
        // Real roots exist (the quartic minimum d − 27/256 is negative):
        // find one, deflate to a real cubic, close the cubic out.
        let r = real_root(&coeffs, d < 0.0, tol);
        // Synthetic division of x⁴ − x³ + d by (x − r).
        let c2 = r - 1.0;
        let c1 = r * c2;
        let c0 = r * c1;
        let other = monic_cubic_roots(c2, c1, c0, false);
        vec![ComplexValue::real(r), other[0], other[1], other[2]]
    } else {
        // No real roots: two conjugate pairs. Damped Newton from a
        // deterministic complex seed grid finds one member.
        let rho = d.abs().powf(0.25).max(1.0);
        let seed_dirs = [
            ComplexValue::new(0.77, 0.64),
            ComplexValue::new(-0.45, 0.89),
            ComplexValue::new(0.98, 0.20),
            ComplexValue::new(0.20, 0.98),
            ComplexValue::new(-0.90, 0.43),
            ComplexValue::new(0.60, 0.80),
        ];
        let mut found = None;
        for dir in seed_dirs {
            if let Some(w) = newton_from_seed(&coeffs, dir.scale(rho), tol) {
                if w.im.abs() > 1e-8 * (1.0 + w.re.abs()) {
                    found = Some(w);
                    break;
                }
            }
        }
        let w = found.ok_or_else(|| {
            Error::Degenerate(format!("quartic Newton failed to converge at z = {z}"))
        })?;
        // Deflate by the real quadratic (x − w)(x − conj w) = x² − 2a·x + m;
        // matching the x³ and constant coefficients fixes the cofactor.
        let a = w.re;
        let m = w.norm_sqr();
        let b = 2.0 * a - 1.0;
        let c = d / m;
        let [u, v] = quadratic_roots(b, c);
        vec![
            ComplexValue::new(a, -w.im.abs()),
            ComplexValue::new(a, w.im.abs()),
            u,
            v,
        ]
    };

    assemble_root_set(4, z, roots, eval_qz, |z, x| {
        let x2 = x.sqr();
        (x2 * x).scale(4.0 * z) - x2.scale(3.0 * z)
    })
}
