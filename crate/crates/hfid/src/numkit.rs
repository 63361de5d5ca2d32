//! Foundation kernel: complex arithmetic with a fixed branch convention,
//! compensated summation, exact integer binomials, and validated
//! mathematical constants.
//!
//! Branch convention, fixed once for the whole crate: principal logarithm,
//! cut on the negative real axis, `Im(log) ∈ (−π, π]`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

/// π, re-exported so every module pulls the same constant.
pub const PI: f64 = std::f64::consts::PI;

/// Catalan's constant G = Σ_{n≥0} (−1)ⁿ/(2n+1)², 30-digit literal.
/// Validated at test time against the definitional alternating series.
pub const CATALAN_G: f64 = 0.915965594177219015054603514932;

/// ζ(3) = Σ n⁻³, 30-digit literal, validated by partial sum + integral
/// tail bracketing.
pub const ZETA3: f64 = 1.202056903159594285399738161511;

/// ζ(2) = π²/6, 30-digit literal.
pub const ZETA2: f64 = 1.644934066848226436472415166646;

/// A complex number carried as an (re, im) pair of doubles.
///
/// All public operations keep both components finite; principal-log
/// outputs satisfy `Im ∈ (−π, π]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl ComplexValue {
    pub const ZERO: ComplexValue = ComplexValue { re: 0.0, im: 0.0 };
    pub const ONE: ComplexValue = ComplexValue { re: 1.0, im: 0.0 };
    pub const I: ComplexValue = ComplexValue { re: 0.0, im: 1.0 };

    pub fn new(re: f64, im: f64) -> Self {
        ComplexValue { re, im }
    }

    pub fn real(re: f64) -> Self {
        ComplexValue { re, im: 0.0 }
    }

    /// e^{iθ} on the unit circle.
    pub fn cis(theta: f64) -> Self {
        ComplexValue {
            re: theta.cos(),
            im: theta.sin(),
        }
    }

    pub fn conj(self) -> Self {
        ComplexValue {
            re: self.re,
            im: -self.im,
        }
    }

    /// Modulus |z|, using `hypot` to avoid intermediate overflow.
    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    /// Squared modulus.
    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    /// Argument in (−π, π]. `atan2` already lands there except for inputs
    /// with a negative-zero imaginary part on the cut, which we fold back
    /// to +π so the convention is airtight.
    pub fn arg(self) -> f64 {
        let a = self.im.atan2(self.re);
        if a == -PI {
            PI
        } else {
            a
        }
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// Complex exponential.
    pub fn exp(self) -> Self {
        let r = self.re.exp();
        ComplexValue {
            re: r * self.im.cos(),
            im: r * self.im.sin(),
        }
    }

    pub fn scale(self, s: f64) -> Self {
        ComplexValue {
            re: self.re * s,
            im: self.im * s,
        }
    }

    pub fn recip(self) -> Self {
        let n = self.norm_sqr();
        ComplexValue {
            re: self.re / n,
            im: -self.im / n,
        }
    }

    /// z², kept explicit because squared logarithms appear everywhere.
    pub fn sqr(self) -> Self {
        ComplexValue {
            re: self.re * self.re - self.im * self.im,
            im: 2.0 * self.re * self.im,
        }
    }

    /// Principal square root (branch cut on the negative real axis).
    pub fn sqrt(self) -> Self {
        let r = self.abs();
        if r == 0.0 {
            return ComplexValue::ZERO;
        }
        let re = ((r + self.re) * 0.5).max(0.0).sqrt();
        let im_mag = ((r - self.re) * 0.5).max(0.0).sqrt();
        ComplexValue {
            re,
            im: if self.im < 0.0 { -im_mag } else { im_mag },
        }
    }
}

impl Add for ComplexValue {
    type Output = ComplexValue;
    fn add(self, rhs: ComplexValue) -> ComplexValue {
        ComplexValue::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for ComplexValue {
    type Output = ComplexValue;
    fn sub(self, rhs: ComplexValue) -> ComplexValue {
        ComplexValue::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for ComplexValue {
    type Output = ComplexValue;
    fn mul(self, rhs: ComplexValue) -> ComplexValue {
        ComplexValue::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Div for ComplexValue {
    type Output = ComplexValue;
    fn div(self, rhs: ComplexValue) -> ComplexValue {
        // Smith's algorithm: scale by the dominant component to dodge
        // overflow in |rhs|².
        if rhs.re.abs() >= rhs.im.abs() {
            let r = rhs.im / rhs.re;
            let d = rhs.re + rhs.im * r;
            ComplexValue::new((self.re + self.im * r) / d, (self.im - self.re * r) / d)
        } else {
            let r = rhs.re / rhs.im;
            let d = rhs.re * r + rhs.im;
            ComplexValue::new((self.re * r + self.im) / d, (self.im * r - self.re) / d)
        }
    }
}

impl Neg for ComplexValue {
    type Output = ComplexValue;
    fn neg(self) -> ComplexValue {
        ComplexValue::new(-self.re, -self.im)
    }
}

impl fmt::Display for ComplexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im >= 0.0 {
            write!(f, "{}+{}i", self.re, self.im)
        } else {
            write!(f, "{}{}i", self.re, self.im)
        }
    }
}

/// Principal complex logarithm: `exp(result) = z`, `Im(result) ∈ (−π, π]`.
///
/// Rejects z = 0, which downstream signals a degenerate root input.
pub fn principal_log(z: ComplexValue) -> Result<ComplexValue> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::Domain("log of zero".into()));
    }
    if !z.is_finite() {
        return Err(Error::Domain("log of non-finite value".into()));
    }
    Ok(ComplexValue::new(z.abs().ln(), z.arg()))
}

/// Neumaier-compensated accumulator. The running compensation keeps the
/// accumulated error at O(ε·Σ|tᵢ|) independent of length, and unlike plain
/// Kahan it survives addends larger than the running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    s: f64,
    c: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        NeumaierSum { s: 0.0, c: 0.0 }
    }

    pub fn add(&mut self, x: f64) {
        let t = self.s + x;
        if self.s.abs() >= x.abs() {
            self.c += (self.s - t) + x;
        } else {
            self.c += (x - t) + self.s;
        }
        self.s = t;
    }

    pub fn value(&self) -> f64 {
        self.s + self.c
    }
}

/// Compensated sum of a finite slice of reals.
pub fn compensated_sum(terms: &[f64]) -> f64 {
    let mut acc = NeumaierSum::new();
    for &t in terms {
        acc.add(t);
    }
    acc.value()
}

/// Exact binomial coefficient C(n, k) as an arbitrary-size integer.
///
/// Multiplicative scheme: every intermediate division is exact because
/// each prefix is itself a binomial coefficient.
pub fn binomial_exact(n: u64, k: u64) -> Result<BigUint> {
    if k > n {
        return Err(Error::Domain(format!("binomial({n}, {k}) needs k <= n")));
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u64);
    for i in 1..=k {
        acc = acc * BigUint::from(n - k + i) / BigUint::from(i);
    }
    Ok(acc)
}

/// C(n, k) rounded to the nearest double. Exact for results below 2⁵³.
pub fn binomial_f64(n: u64, k: u64) -> Result<f64> {
    let b = binomial_exact(n, k)?;
    b.to_f64()
        .ok_or_else(|| Error::Domain(format!("binomial({n}, {k}) overflows f64")))
}

/// Smallest absolute tolerance the double-precision kernels will accept.
pub const MIN_ABS_TOL: f64 = 3.552713678800501e-15; // 2^-48

/// Evaluation budget shared by the series and quadrature kernels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrecisionConfig {
    abs_tol: f64,
    max_terms: usize,
    quad_budget: usize,
}

impl PrecisionConfig {
    /// `abs_tol` must sit in [2⁻⁴⁸, ∞): demanding more than the arithmetic
    /// delivers is rejected up front.
    pub fn new(abs_tol: f64, max_terms: usize, quad_budget: usize) -> Result<Self> {
        if !(abs_tol > 0.0) || !abs_tol.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "abs_tol must be a positive finite real, got {abs_tol}"
            )));
        }
        if abs_tol < MIN_ABS_TOL {
            return Err(Error::InvalidConfig(format!(
                "abs_tol {abs_tol:e} below the 2^-48 floor {MIN_ABS_TOL:e}"
            )));
        }
        if max_terms == 0 {
            return Err(Error::InvalidConfig("max_terms must be positive".into()));
        }
        if quad_budget == 0 {
            return Err(Error::InvalidConfig("quad_budget must be positive".into()));
        }
        Ok(PrecisionConfig {
            abs_tol,
            max_terms,
            quad_budget,
        })
    }

    /// Clamp the requested tolerance to the representable floor instead of
    /// rejecting it. Used by the harness so unreachable tolerances become
    /// `non_converged` verdicts rather than config errors.
    pub fn clamped(abs_tol: f64, max_terms: usize, quad_budget: usize) -> Self {
        PrecisionConfig::new(
            abs_tol.max(MIN_ABS_TOL),
            max_terms.max(1),
            quad_budget.max(1),
        )
        .expect("clamped arguments are always valid")
    }

    pub fn abs_tol(&self) -> f64 {
        self.abs_tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    pub fn quad_budget(&self) -> usize {
        self.quad_budget
    }

    pub fn with_abs_tol(self, abs_tol: f64) -> Result<Self> {
        PrecisionConfig::new(abs_tol, self.max_terms, self.quad_budget)
    }
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        PrecisionConfig {
            abs_tol: 1e-10,
            max_terms: 2_000_000,
            quad_budget: 2_000_000,
        }
    }
}

/// Residual of the stored Catalan constant against its definitional
/// alternating series Σ (−1)ⁿ/(2n+1)².
///
/// Returns |stored − partial|; the alternating-series remainder bound
/// (first omitted term) is 1/(2N+1)², so the residual must stay below
/// that bound plus `abs_tol`.
pub fn validate_catalan(cfg: &PrecisionConfig) -> f64 {
    let n_terms = cfg.max_terms;
    let mut acc = NeumaierSum::new();
    for n in 0..n_terms {
        let d = (2 * n + 1) as f64;
        let term = 1.0 / (d * d);
        acc.add(if n % 2 == 0 { term } else { -term });
    }
    (CATALAN_G - acc.value()).abs()
}

/// First-omitted-term bound for the Catalan series truncated after
/// `n_terms` terms.
pub fn catalan_tail_bound(n_terms: usize) -> f64 {
    let d = (2 * n_terms + 1) as f64;
    1.0 / (d * d)
}
