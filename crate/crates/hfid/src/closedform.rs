//! Closed-form right-hand sides: the root-decomposition evaluators S₃(z)
//! and S₄(z), the m-parameterized arctan/log form, the 4F3 constant, the
//! u/sin u antiderivative, the Wallis closed form, and the function-level
//! left-hand sides of the arcsin-family identities.

use crate::error::{Error, Result};
use crate::numkit::{principal_log, ComplexValue, PrecisionConfig, CATALAN_G, PI, ZETA3};
use crate::polylog::li2;
use crate::quadrature::{eq5_inner_integrand, integrate, QuadratureResult};
use crate::roots::{solve_cubic_pz, solve_quartic_qz, RootSet};

/// A real closed-form value plus the absolute imaginary residue discarded
/// after summing conjugate contributions — the real-valuedness
/// certificate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormValue {
    pub value: f64,
    pub imag_leak: f64,
}

/// Coefficient in front of Σ log²(1 − 1/ξ) for the quartic case.
///
/// The Beta-integral prefactor is 3/4 and each reflection contributes a
/// factor −1/2, giving −3/8. A printed variant of −3/2 circulates; the
/// oracle test `kappa4_resolution` fixes the constant against the direct
/// summation of Σ zⁿ/(n²C(4n,n)) and rejects −3/2.
pub const KAPPA4: f64 = -3.0 / 8.0;

/// Σ_ξ log²(1 − 1/ξ) over a root set, with the branch-cut guard.
fn log_sq_sum(rs: &RootSet) -> Result<ComplexValue> {
    let mut sum = ComplexValue::ZERO;
    for &xi in &rs.roots {
        let w = ComplexValue::ONE - xi.recip();
        if w.abs() <= 1e-12 {
            return Err(Error::Branch(format!(
                "1 − 1/ξ vanishes at root {xi} (z = {})",
                rs.z
            )));
        }
        if w.im.abs() <= 1e-12 * (1.0 + w.abs()) && w.re < 0.0 {
            return Err(Error::Branch(format!(
                "1 − 1/ξ = {w} lands on the log cut (z = {})",
                rs.z
            )));
        }
        sum = sum + principal_log(w)?.sqr();
    }
    Ok(sum)
}

/// S₃(z) = −(1/3)·Σ_{ξ ∈ roots(p_z)} log²(1 − 1/ξ), equal to
/// Σ_{n≥1} zⁿ/(n²·C(3n,n)) wherever no 1 − 1/ξ hits the log cut.
pub fn s3_closed(z: f64) -> Result<ClosedFormValue> {
    let rs = solve_cubic_pz(z)?;
    let s = log_sq_sum(&rs)?.scale(-1.0 / 3.0);
    Ok(ClosedFormValue {
        value: s.re,
        imag_leak: s.im.abs(),
    })
}

/// S₄(z) = κ₄·Σ_{ξ ∈ roots(q_z)} log²(1 − 1/ξ), equal to
/// Σ_{n≥1} zⁿ/(n²·C(4n,n)) for |z| < 256/27.
pub fn s4_closed(z: f64) -> Result<ClosedFormValue> {
    if !(z.abs() < 256.0 / 27.0) {
        return Err(Error::Domain(format!(
            "s4_closed needs |z| < 256/27, got {z}"
        )));
    }
    let rs = solve_quartic_qz(z)?;
    let s = log_sq_sum(&rs)?.scale(KAPPA4);
    Ok(ClosedFormValue {
        value: s.re,
        imag_leak: s.im.abs(),
    })
}

/// (2/3)·arctan²√((3m−1)/((m+1)(2m−1)²)) − ½·log²(1 + 1/m) for m > 1/2;
/// at m = 1/2 the arctan argument diverges and the expression continues
/// to exactly π²/6 − log²(3)/2, which is special-cased rather than
/// evaluated through the formula.
pub fn thai_rhs(m: f64) -> Result<f64> {
    if !(m >= 0.5) {
        return Err(Error::Domain(format!("thai_rhs needs m ≥ 1/2, got {m}")));
    }
    if m == 0.5 {
        return Ok(e8_rhs());
    }
    let t = (3.0 * m - 1.0) / ((m + 1.0) * (2.0 * m - 1.0) * (2.0 * m - 1.0));
    let at = t.sqrt().atan();
    let lg = (1.0 + 1.0 / m).ln();
    Ok(2.0 / 3.0 * at * at - 0.5 * lg * lg)
}

/// (27/2)·(7ζ(3) + (3 − 2G)π − 12) ≈ 1.13393.
pub fn thm1_rhs() -> f64 {
    13.5 * (7.0 * ZETA3 + (3.0 - 2.0 * CATALAN_G) * PI - 12.0)
}

/// π²/24 − log²(2)/2, the m = 1 arctan/log specialization.
pub fn thm2_rhs() -> f64 {
    PI * PI / 24.0 - 0.5 * 2.0f64.ln().powi(2)
}

/// (2/3)·arctan²(√15/9) − ½·log²(3/2), the m = 2 specialization.
pub fn thm3_rhs() -> f64 {
    thai_rhs(2.0).expect("m = 2 is in-domain")
}

/// π/10 − log(2)/5.
pub fn thm5_rhs() -> f64 {
    PI / 10.0 - 2.0f64.ln() / 5.0
}

/// π²/6 − log²(3)/2, the m = 1/2 limit case.
pub fn e8_rhs() -> f64 {
    PI * PI / 6.0 - 0.5 * 3.0f64.ln().powi(2)
}

/// Definite integral ∫₀ᵘ t/sin t dt through the dilogarithm antiderivative
///
///   u·(log(1−e^{iu}) − log(1+e^{iu})) + i·(Li₂(−e^{iu}) − Li₂(e^{iu})),
///
/// whose u → 0⁺ limit is the purely imaginary constant −iπ²/4; subtracting
/// that limit both anchors ∫₀ᵘ and certifies real-valuedness.
pub fn usinu_antiderivative(u: f64) -> Result<f64> {
    if !(u > 0.0 && u < PI) {
        return Err(Error::Domain(format!(
            "usinu_antiderivative needs 0 < u < π, got {u}"
        )));
    }
    let cfg = PrecisionConfig::new(1e-13, 100_000, 1).expect("static config");
    let eiu = ComplexValue::cis(u);
    let log_term = (principal_log(ComplexValue::ONE - eiu)?
        - principal_log(ComplexValue::ONE + eiu)?)
    .scale(u);
    let li_m = li2(-eiu, &cfg)?.value;
    let li_p = li2(eiu, &cfg)?.value;
    let bracket = log_term + ComplexValue::I * (li_m - li_p);
    let anchored = bracket + ComplexValue::new(0.0, PI * PI / 4.0);
    let leak = anchored.im.abs();
    if leak > 1e-11 {
        return Err(Error::Branch(format!(
            "imaginary leak {leak:.3e} in the u/sin u antiderivative at u = {u}"
        )));
    }
    Ok(anchored.re)
}

/// Closed form of the odd Wallis integral ∫₀^{π/2} sin^{2n+3}x dx:
/// 4ⁿ(2n+2)/((2n+3)(2n+1)C(2n,n)).
pub fn wallis_rhs(n: u32) -> f64 {
    let nf = n as f64;
    let binom = crate::numkit::binomial_f64(2 * n as u64, n as u64).expect("k ≤ n");
    4.0f64.powi(n as i32) * (2.0 * nf + 2.0) / ((2.0 * nf + 3.0) * (2.0 * nf + 1.0) * binom)
}

/// arcsin²(x).
pub fn eq2_lhs(x: f64) -> Result<f64> {
    if x.abs() > 1.0 {
        return Err(Error::Domain(format!("|x| must be ≤ 1, got {x}")));
    }
    Ok(x.asin().powi(2))
}

/// −2x + 2√(1−x²)·arcsin x + x·arcsin²x.
pub fn eq3_lhs(x: f64) -> Result<f64> {
    if x.abs() > 1.0 {
        return Err(Error::Domain(format!("|x| must be ≤ 1, got {x}")));
    }
    let asx = x.asin();
    Ok(-2.0 * x + 2.0 * (1.0 - x * x).sqrt() * asx + x * asx * asx)
}

/// −4x + 2√(1−x²)·arcsin x + x·arcsin²x + 2∫₀^{arcsin x} u·cos²u/sin u du,
/// the integral via the adaptive oracle with the patched integrand.
pub fn eq4_lhs(x: f64, cfg: &PrecisionConfig) -> Result<(f64, QuadratureResult)> {
    if x.abs() > 1.0 {
        return Err(Error::Domain(format!("|x| must be ≤ 1, got {x}")));
    }
    let asx = x.asin();
    let quad = integrate(eq5_inner_integrand, 0.0, asx, cfg);
    let value = -4.0 * x + 2.0 * (1.0 - x * x).sqrt() * asx + x * asx * asx + 2.0 * quad.value;
    Ok((value, quad))
}
