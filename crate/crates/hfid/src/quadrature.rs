//! Independent adaptive integration oracle.
//!
//! A 7/15-point Gauss–Kronrod pair on recursively bisected intervals,
//! error taken from the rule difference with the usual QUADPACK rescale.
//! Subdivision order is deterministic (left half first), so results are
//! reproducible bit-for-bit given the same budget. All nodes are interior:
//! the integrator never probes exact endpoint values, which tolerates
//! integrands defined by endpoint limits.

use crate::error::{Error, Result};
use crate::numkit::{PrecisionConfig, PI};

/// Abscissae of the 15-point Kronrod rule on [-1, 1]; odd indices are the
/// embedded 7-point Gauss nodes.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];

const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 {
            res_asc * scale
        } else {
            res_asc
        };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        let min_err = 50.0 * f64::EPSILON * res_abs;
        if min_err > scaled {
            scaled = min_err;
        }
    }
    scaled
}

/// One 15-point Kronrod panel. Returns (estimate, error estimate).
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);

    let mut fv1 = [0.0f64; 7];
    let mut fv2 = [0.0f64; 7];
    let mut res_gauss = 0.0;
    let mut res_kronrod = f_center * WGK[7];
    let mut res_abs = res_kronrod.abs();

    for (j, &w) in WG.iter().enumerate().take(3) {
        let jtw = j * 2 + 1;
        let x = half * XGK[jtw];
        let f1 = f(center - x);
        let f2 = f(center + x);
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        res_gauss += w * (f1 + f2);
        res_kronrod += WGK[jtw] * (f1 + f2);
        res_abs += WGK[jtw] * (f1.abs() + f2.abs());
    }
    res_gauss += WG[3] * f_center;

    for j in 0..4 {
        let jtwm1 = j * 2;
        if jtwm1 >= 7 {
            break;
        }
        let x = half * XGK[jtwm1];
        let f1 = f(center - x);
        let f2 = f(center + x);
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        res_kronrod += WGK[jtwm1] * (f1 + f2);
        res_abs += WGK[jtwm1] * (f1.abs() + f2.abs());
    }

    let mean = res_kronrod * 0.5;
    let mut res_asc = WGK[7] * (f_center - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let err = (res_kronrod - res_gauss) * half;
    res_kronrod *= half;
    res_abs *= half.abs();
    res_asc *= half.abs();

    (res_kronrod, rescale_error(err, res_abs, res_asc))
}

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub err_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

const MAX_DEPTH: usize = 52;

struct Adaptive<'a, F: Fn(f64) -> f64> {
    f: &'a F,
    evals: usize,
    budget: usize,
}

impl<'a, F: Fn(f64) -> f64> Adaptive<'a, F> {
    /// Depth-first bisection, left half first. Returns (value, err, ok);
    /// err = ∞ means the panel could not even be sampled.
    fn run(&mut self, a: f64, b: f64, tol: f64, depth: usize) -> (f64, f64, bool) {
        if self.evals + 15 > self.budget {
            return (0.0, f64::INFINITY, false);
        }
        self.evals += 15;
        let (v, e) = gk15(self.f, a, b);
        if e <= tol || depth >= MAX_DEPTH {
            return (v, e, e <= tol);
        }
        let mid = 0.5 * (a + b);
        let (vl, el, okl) = self.run(a, mid, 0.5 * tol, depth + 1);
        if !el.is_finite() {
            // Budget ran out mid-split: fall back to the parent panel.
            return (v, e, false);
        }
        let (vr, er, okr) = self.run(mid, b, 0.5 * tol, depth + 1);
        if !er.is_finite() {
            return (v, e, false);
        }
        (vl + vr, el + er, okl && okr)
    }
}

/// Adaptive estimate of ∫ₐᵇ f with `err_estimate ≤ cfg.abs_tol` on
/// success. Budget exhaustion returns the best estimate flagged
/// non-converged rather than an error.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    cfg: &PrecisionConfig,
) -> QuadratureResult {
    integrate_with_tol(&f, a, b, cfg.abs_tol(), cfg.quad_budget())
}

fn integrate_with_tol<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    tol: f64,
    budget: usize,
) -> QuadratureResult {
    if a == b {
        return QuadratureResult {
            value: 0.0,
            err_estimate: 0.0,
            evaluations: 0,
            converged: true,
        };
    }
    let mut ad = Adaptive {
        f,
        evals: 0,
        budget,
    };
    let (value, err, ok) = ad.run(a, b, tol, 0);
    QuadratureResult {
        value,
        err_estimate: err,
        evaluations: ad.evals,
        converged: ok && err <= tol,
    }
}

/// ∫₀^{π/2} ∫₀^θ u·cos²u/sin u du dθ, outer-adaptive over θ of the
/// inner-adaptive integral, inner tolerance tied to the outer one by a
/// factor 1/π so the accumulated inner error stays below half the budget.
pub fn eq5_double_integral(cfg: &PrecisionConfig) -> QuadratureResult {
    let tol = cfg.abs_tol();
    let inner_tol = tol / PI;
    let budget = cfg.quad_budget();
    let evals = std::cell::Cell::new(0usize);
    let any_inner_failed = std::cell::Cell::new(false);

    let inner = |theta: f64| -> f64 {
        let left = budget.saturating_sub(evals.get());
        if left < 15 {
            any_inner_failed.set(true);
            return 0.0;
        }
        let r = integrate_with_tol(&eq5_inner_integrand, 0.0, theta, inner_tol, left);
        evals.set(evals.get() + r.evaluations);
        if !r.converged {
            any_inner_failed.set(true);
        }
        r.value
    };

    let outer = integrate_with_tol(&inner, 0.0, PI / 2.0, tol * 0.5, budget);
    let total_evals = evals.get() + outer.evaluations;
    // Each inner value is accurate to inner_tol; integrating that error
    // over [0, π/2] contributes at most (π/2)·inner_tol = tol/2.
    let err = outer.err_estimate + (PI / 2.0) * inner_tol;
    QuadratureResult {
        value: outer.value,
        err_estimate: err,
        evaluations: total_evals,
        converged: outer.converged && !any_inner_failed.get() && err <= tol,
    }
}

/// u·cos²u/sin u with the removable singularity at u = 0 patched by its
/// limit value 1 inside a 1e-8 neighborhood.
pub fn eq5_inner_integrand(u: f64) -> f64 {
    if u.abs() < 1e-8 {
        return 1.0;
    }
    let c = u.cos();
    u * c * c / u.sin()
}

/// (2/3)·∫₀¹ xz/(1 − z(1−x)x²) dx — the integral representation of
/// Σ_{n≥1} zⁿ/(n·C(3n,n)) for |z| < 27/4.
pub fn f32_integral(z: f64, cfg: &PrecisionConfig) -> Result<QuadratureResult> {
    if !(z.abs() < 27.0 / 4.0) {
        return Err(Error::Domain(format!(
            "f32_integral needs |z| < 27/4, got {z}"
        )));
    }
    let f = move |x: f64| x * z / (1.0 - z * (1.0 - x) * x * x);
    let mut r = integrate(f, 0.0, 1.0, cfg);
    r.value *= 2.0 / 3.0;
    r.err_estimate *= 2.0 / 3.0;
    Ok(r)
}

/// (2/3)·∫₀¹ (−log p_z(x) − log p_z(1−x))/x dx with
/// p_z(x) = 1 − z·x²(1−x), equal to Σ_{n≥1} zⁿ/(n²·C(3n,n)) for
/// 0 < z < 27/4 (p_z stays positive on [0,1] there). `ln_1p` keeps the
/// integrand accurate near x = 0, where its limit is z.
pub fn log_integral_repr(z: f64, cfg: &PrecisionConfig) -> Result<QuadratureResult> {
    if !(z > 0.0 && z < 27.0 / 4.0) {
        return Err(Error::Domain(format!(
            "log_integral_repr needs 0 < z < 27/4, got {z}"
        )));
    }
    let f = move |x: f64| {
        if x == 0.0 {
            return z;
        }
        let a = -(-z * x * x * (1.0 - x)).ln_1p();
        let y = 1.0 - x;
        let b = -(-z * y * y * x).ln_1p();
        (a + b) / x
    };
    let mut r = integrate(f, 0.0, 1.0, cfg);
    r.value *= 2.0 / 3.0;
    r.err_estimate *= 2.0 / 3.0;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkit::{CATALAN_G, ZETA3};

    fn cfg(tol: f64) -> PrecisionConfig {
        PrecisionConfig::new(tol, 100_000, 2_000_000).unwrap()
    }

    #[test]
    fn sin_cubed_is_two_thirds() {
        let r = integrate(|x| x.sin().powi(3), 0.0, PI / 2.0, &cfg(1e-12));
        assert!(r.converged);
        assert!((r.value - 2.0 / 3.0).abs() < 1e-12, "got {}", r.value);
    }

    #[test]
    fn beta_2_4_is_one_twentieth() {
        // ∫₀¹ x (1−x)³ dx = B(2,4) = Γ(2)Γ(4)/Γ(6) = 6/120.
        let r = integrate(|x| x * (1.0 - x).powi(3), 0.0, 1.0, &cfg(1e-13));
        assert!(r.converged);
        assert!((r.value - 0.05).abs() < 1e-13);
    }

    #[test]
    fn dilog_half_integral_representation() {
        // ∫₀¹ −log(1 − x/2)/x dx = Li₂(1/2) = π²/12 − ln²2/2.
        let expect = PI * PI / 12.0 - 0.5 * 2.0f64.ln().powi(2);
        let r = integrate(
            |x| {
                if x == 0.0 {
                    0.5
                } else {
                    -(-0.5 * x).ln_1p() / x
                }
            },
            0.0,
            1.0,
            &cfg(1e-12),
        );
        assert!(r.converged);
        assert!((r.value - expect).abs() < 1e-12);
    }

    #[test]
    fn eq5_inner_patches_origin() {
        assert_eq!(eq5_inner_integrand(0.0), 1.0);
        assert!((eq5_inner_integrand(1e-9) - 1.0).abs() < 1e-12);
        let r = integrate(eq5_inner_integrand, 0.0, 1e-9, &cfg(1e-12));
        assert!(r.value.abs() < 1e-8, "inner integral → 0 as θ → 0⁺");
    }

    #[test]
    fn eq5_double_integral_closed_form() {
        // ∫∫ u·cos²u/sin u = [−πG + (7/2)ζ(3)] − (2 − π/2): the u/sin u
        // piece is classical, the u·sin u piece integrates elementarily.
        let expect = (-PI * CATALAN_G + 3.5 * ZETA3) - (2.0 - PI / 2.0);
        let r = eq5_double_integral(&cfg(1e-9));
        assert!(r.converged, "err={}", r.err_estimate);
        assert!(
            (r.value - expect).abs() < 1e-8,
            "got {} want {expect}",
            r.value
        );
        assert!(r.evaluations <= 2_000_000);
    }

    #[test]
    fn f32_integral_t5_value() {
        let expect = PI / 10.0 - 2.0f64.ln() / 5.0;
        let r = f32_integral(0.5, &cfg(1e-12)).unwrap();
        assert!(r.converged);
        assert!((r.value - expect).abs() < 1e-11, "got {}", r.value);
        let zero = f32_integral(0.0, &cfg(1e-12)).unwrap();
        assert!(zero.value.abs() < 1e-15);
        assert!(f32_integral(6.75, &cfg(1e-12)).is_err());
    }

    #[test]
    fn log_integral_repr_t2_value() {
        let expect = PI * PI / 24.0 - 0.5 * 2.0f64.ln().powi(2);
        let r = log_integral_repr(0.5, &cfg(1e-12)).unwrap();
        assert!(r.converged);
        assert!((r.value - expect).abs() < 1e-11, "got {}", r.value);
        assert!(log_integral_repr(0.0, &cfg(1e-10)).is_err());
        // z → 0⁺ drives the representation to 0.
        let tiny = log_integral_repr(1e-12, &cfg(1e-13)).unwrap();
        assert!(tiny.value.abs() < 1e-11);
    }

    #[test]
    fn budget_exhaustion_flags_non_converged() {
        let tight = PrecisionConfig::new(1e-13, 10, 30).unwrap();
        let r = integrate(|x| (50.0 * x).sin().abs(), 0.0, 1.0, &tight);
        assert!(!r.converged);
        assert!(r.evaluations <= 30);
    }

    #[test]
    fn halving_tolerance_does_not_worsen_registry_integrals() {
        let expect = PI / 10.0 - 2.0f64.ln() / 5.0;
        let coarse = f32_integral(0.5, &cfg(1e-6)).unwrap();
        let fine = f32_integral(0.5, &cfg(5e-7)).unwrap();
        assert!((fine.value - expect).abs() <= (coarse.value - expect).abs() + 1e-15);
    }
}
