//! Term-recurrence series evaluators with analytic truncation bounds.
//!
//! Every term advances by the ratio recurrence (a rational function of n
//! times the argument), never by forming C(kn,n) in floating point, so no
//! large factorials appear and no overflow can occur inside the loops.
//!
//! Tail bounds are certificates, not heuristics:
//! * geometric majorant |t_N|·r/(1−r) when the term ratio beyond N is
//!   bounded by r < 1 (the binomial-family ratio C(k(n+1),n+1)/C(kn,n)
//!   increases in n, so |z| over its current value dominates the rest of
//!   the run);
//! * integral-comparison majorant for the polynomially decaying
//!   central-squared family, with constants from C(2n,n) ≥ 4ⁿ/(2√n);
//! * p-series comparison at the |x| = 1 boundary of the arcsin family,
//!   where the geometric bound degenerates.
//!
//! Stopping rule everywhere: first n with tail ≤ abs_tol/2, reserving the
//! other half of the budget for rounding.

use crate::error::{Error, Result};
use crate::numkit::{NeumaierSum, PrecisionConfig};

/// A certified partial sum: `value` differs from the exact sum by at most
/// `tail_bound` plus rounding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub terms_used: usize,
    pub tail_bound: f64,
}

/// Parameters of Σ_{n≥1} zⁿ/(nᵃ·C(kn,n)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinomFamilyParams {
    k: u32,
    a: u32,
    z: f64,
}

impl BinomFamilyParams {
    /// k ∈ {2,3,4}, a ∈ {1,2}, |z| strictly inside the radius
    /// kᵏ/(k−1)^{k−1}.
    pub fn new(k: u32, a: u32, z: f64) -> Result<Self> {
        if !(2..=4).contains(&k) {
            return Err(Error::Domain(format!(
                "binomial family k must be 2..4, got {k}"
            )));
        }
        if !(1..=2).contains(&a) {
            return Err(Error::Domain(format!(
                "binomial family a must be 1 or 2, got {a}"
            )));
        }
        let radius = family_radius(k);
        if !(z.abs() < radius) {
            return Err(Error::Domain(format!(
                "|z| = {} at or beyond the radius {radius} for k = {k}",
                z.abs()
            )));
        }
        Ok(BinomFamilyParams { k, a, z })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn z(&self) -> f64 {
        self.z
    }
}

/// Radius of convergence kᵏ/(k−1)^{k−1} of the C(kn,n) families.
pub fn family_radius(k: u32) -> f64 {
    match k {
        2 => 4.0,
        3 => 27.0 / 4.0,
        4 => 256.0 / 27.0,
        _ => unreachable!("family k validated at construction"),
    }
}

/// C(k(n+1), n+1) / C(kn, n), the one-step growth of the binomial
/// denominator. Increasing in n with limit kᵏ/(k−1)^{k−1}.
fn binom_step_ratio(k: u32, n: f64) -> f64 {
    match k {
        2 => 2.0 * (2.0 * n + 1.0) / (n + 1.0),
        3 => 3.0 * (3.0 * n + 1.0) * (3.0 * n + 2.0) / (2.0 * (n + 1.0) * (2.0 * n + 1.0)),
        4 => {
            (4.0 * n + 1.0) * (4.0 * n + 2.0) * (4.0 * n + 3.0) * (4.0 * n + 4.0)
                / ((n + 1.0) * (3.0 * n + 1.0) * (3.0 * n + 2.0) * (3.0 * n + 3.0))
        }
        _ => unreachable!(),
    }
}

/// Σ_{n≥1} zⁿ/(nᵃ·C(kn,n)) with a geometric tail certificate.
pub fn sum_binom_family(p: BinomFamilyParams, cfg: &PrecisionConfig) -> Result<SeriesValue> {
    let (k, a, z) = (p.k, p.a, p.z);
    if z == 0.0 {
        return Ok(SeriesValue {
            value: 0.0,
            terms_used: 0,
            tail_bound: 0.0,
        });
    }
    let target = 0.5 * cfg.abs_tol();
    let mut acc = NeumaierSum::new();
    let mut term = z / (k as f64); // n = 1: z / C(k,1)
    for n in 1..=cfg.max_terms() {
        acc.add(term);
        // Beyond n the step ratio only grows, so |z|/binom_step_ratio(k,n)
        // bounds every later term ratio (the (m/(m+1))^a factor is < 1).
        let r = z.abs() / binom_step_ratio(k, n as f64);
        if r < 1.0 {
            let tail = term.abs() * r / (1.0 - r);
            if tail <= target {
                return Ok(SeriesValue {
                    value: acc.value(),
                    terms_used: n,
                    tail_bound: tail,
                });
            }
        }
        let nf = n as f64;
        let mut step = z / binom_step_ratio(k, nf);
        for _ in 0..a {
            step *= nf / (nf + 1.0);
        }
        term *= step;
    }
    Err(Error::Convergence {
        value: acc.value(),
        tail_bound: f64::INFINITY,
        terms_used: cfg.max_terms(),
    })
}

/// Σ 16ⁿ/((2n+3)^p (2n+1)^q C(2n,n)²) from n = n_start, or with n²
/// replacing the (2n+3)^p factor when `use_n_sq` is set (that variant
/// must start at n = 1).
///
/// Terms only decay polynomially; the tail certificate is the integral
/// comparison built on 16ⁿ/C(2n,n)² ≤ 4n.
pub fn sum_central_squared(
    p_exp: u32,
    q_exp: u32,
    n_start: u32,
    use_n_sq: bool,
    cfg: &PrecisionConfig,
) -> Result<SeriesValue> {
    if use_n_sq && n_start == 0 {
        return Err(Error::Domain(
            "the n² variant is undefined at n = 0; start at 1".into(),
        ));
    }
    if n_start > 1 {
        return Err(Error::Domain("n_start must be 0 or 1".into()));
    }
    // Decay exponent of the terms: n^{1−p−q} (standard) or n^{−1−q} (n²
    // variant); the integral bound needs it below −1.
    let decay_ok = if use_n_sq {
        q_exp >= 1
    } else {
        p_exp + q_exp >= 3
    };
    if !decay_ok {
        return Err(Error::Domain(
            "exponents too small for a convergent central-squared series".into(),
        ));
    }

    let p = p_exp as i32;
    let q = q_exp as i32;
    let first_term = |n: u32| -> f64 {
        // Only needed at n ∈ {0, 1}: 16ⁿ and C(2n,n)² are tiny integers.
        let nf = n as f64;
        let c2n = if n == 0 { 1.0 } else { 2.0 };
        let lead = if use_n_sq {
            nf * nf
        } else {
            (2.0 * nf + 3.0).powi(p)
        };
        16.0_f64.powi(n as i32) / (lead * (2.0 * nf + 1.0).powi(q) * c2n * c2n)
    };

    let target = 0.5 * cfg.abs_tol();
    let mut acc = NeumaierSum::new();
    let mut term = first_term(n_start);
    let mut n = n_start as usize;
    let mut used = 0usize;
    loop {
        acc.add(term);
        used += 1;
        let nf = n as f64;
        let tail = if nf >= 1.0 {
            if use_n_sq {
                // Σ_{m>N} 4·2^{−q}·m^{−1−q} ≤ 4·2^{−q}·N^{−q}/q
                4.0 * 0.5_f64.powi(q) * nf.powi(-q) / q as f64
            } else {
                // Σ_{m>N} 4·2^{−p−q}·m^{1−p−q} ≤ 4·2^{−p−q}·N^{2−p−q}/(p+q−2)
                4.0 * 0.5_f64.powi(p + q) * nf.powi(2 - p - q) / (p + q - 2) as f64
            }
        } else {
            f64::INFINITY
        };
        if tail <= target {
            return Ok(SeriesValue {
                value: acc.value(),
                terms_used: used,
                tail_bound: tail,
            });
        }
        if used >= cfg.max_terms() {
            return Err(Error::Convergence {
                value: acc.value(),
                tail_bound: tail,
                terms_used: used,
            });
        }
        // t_{n+1}/t_n assembled from the factor moves; the C(2n,n) step is
        // C(2n+2,n+1)/C(2n,n) = 2(2n+1)/(n+1).
        let central_step = 2.0 * (2.0 * nf + 1.0) / (nf + 1.0);
        let mut ratio = 16.0 / (central_step * central_step);
        if use_n_sq {
            ratio *= (nf / (nf + 1.0)) * (nf / (nf + 1.0));
        } else {
            ratio *= ((2.0 * nf + 3.0) / (2.0 * nf + 5.0)).powi(p);
        }
        ratio *= ((2.0 * nf + 1.0) / (2.0 * nf + 3.0)).powi(q);
        term *= ratio;
        n += 1;
    }
}

/// Σ_{n≥1} (1/(n²2ⁿ))·(1 − 1/C(3n,n)), geometric tail 2^{−N}/(N+1)².
pub fn sum_e6(cfg: &PrecisionConfig) -> Result<SeriesValue> {
    let target = 0.5 * cfg.abs_tol();
    let mut acc = NeumaierSum::new();
    let mut pow_half = 1.0f64;
    let mut binom_3n_n = 1.0f64; // C(3n,n), grows ~6.75ⁿ, capped by f64 range
    for n in 1..=cfg.max_terms() {
        let nf = n as f64;
        pow_half *= 0.5;
        binom_3n_n *= binom_step_ratio(3, nf - 1.0);
        acc.add(pow_half / (nf * nf) * (1.0 - 1.0 / binom_3n_n));
        let tail = pow_half / ((nf + 1.0) * (nf + 1.0));
        if tail <= target {
            return Ok(SeriesValue {
                value: acc.value(),
                terms_used: n,
                tail_bound: tail,
            });
        }
    }
    Err(Error::Convergence {
        value: acc.value(),
        tail_bound: pow_half,
        terms_used: cfg.max_terms(),
    })
}

/// Σ_{n≥1} 2ⁿ/((n+1)·n²·C(2n,n)); the term ratio n²/((n+2)(2n+1)) stays
/// below 1/2, so the tail is bounded by the last term.
pub fn sum_e7(cfg: &PrecisionConfig) -> Result<SeriesValue> {
    let target = 0.5 * cfg.abs_tol();
    let mut acc = NeumaierSum::new();
    let mut term = 0.5; // n = 1: 2/(2·1·2)
    for n in 1..=cfg.max_terms() {
        acc.add(term);
        let tail = term; // r = 1/2: |t|·r/(1−r) = |t|
        if tail <= target {
            return Ok(SeriesValue {
                value: acc.value(),
                terms_used: n,
                tail_bound: tail,
            });
        }
        let nf = n as f64;
        term *= nf * nf / ((nf + 2.0) * (2.0 * nf + 1.0));
    }
    Err(Error::Convergence {
        value: acc.value(),
        tail_bound: term,
        terms_used: cfg.max_terms(),
    })
}

/// Shared driver for the arcsin-family series (they differ only in the
/// first term, the ratio polynomial, and the |x| = 1 p-series bound).
fn arcsin_family(
    x: f64,
    first: f64,
    ratio: impl Fn(f64) -> f64,
    boundary_tail: impl Fn(f64) -> f64,
    cfg: &PrecisionConfig,
) -> Result<SeriesValue> {
    if x.abs() > 1.0 {
        return Err(Error::Domain(format!("|x| must be ≤ 1, got {x}")));
    }
    if x == 0.0 {
        return Ok(SeriesValue {
            value: 0.0,
            terms_used: 0,
            tail_bound: 0.0,
        });
    }
    let target = 0.5 * cfg.abs_tol();
    let x2 = x * x;
    let at_boundary = x.abs() == 1.0;
    let mut acc = NeumaierSum::new();
    let mut term = first;
    let mut best_tail = f64::INFINITY;
    for n in 0..cfg.max_terms() {
        acc.add(term);
        let nf = n as f64;
        let tail = if at_boundary {
            if nf >= 1.0 {
                boundary_tail(nf)
            } else {
                f64::INFINITY
            }
        } else {
            // Term ratio < x² strictly for every n.
            term.abs() * x2 / (1.0 - x2)
        };
        best_tail = tail;
        if tail <= target {
            return Ok(SeriesValue {
                value: acc.value(),
                terms_used: n + 1,
                tail_bound: tail,
            });
        }
        term *= ratio(nf);
    }
    Err(Error::Convergence {
        value: acc.value(),
        tail_bound: best_tail,
        terms_used: cfg.max_terms(),
    })
}

/// (1/2)·Σ_{n≥0} 4^{n+1}x^{2n+2}/((2n+2)(2n+1)C(2n,n)) = arcsin²(x).
pub fn arcsin_sq_series(x: f64, cfg: &PrecisionConfig) -> Result<SeriesValue> {
    arcsin_family(
        x,
        x * x,
        |n| 2.0 * x * x * (n + 1.0) * (n + 1.0) / ((n + 2.0) * (2.0 * n + 3.0)),
        |n| 2.0 / n.sqrt(),
        cfg,
    )
}

/// (1/2)·Σ_{n≥0} 4^{n+1}x^{2n+3}/((2n+3)(2n+2)(2n+1)C(2n,n)), the
/// once-integrated arcsin² series.
pub fn eq3_series(x: f64, cfg: &PrecisionConfig) -> Result<SeriesValue> {
    arcsin_family(
        x,
        x * x * x / 3.0,
        |n| 2.0 * x * x * (n + 1.0) * (n + 1.0) / ((n + 2.0) * (2.0 * n + 5.0)),
        |n| 1.0 / (3.0 * n.powf(1.5)),
        cfg,
    )
}

/// (1/2)·Σ_{n≥0} 4^{n+1}x^{2n+3}/((2n+3)²(2n+2)(2n+1)C(2n,n)), the
/// twice-integrated variant with the squared (2n+3) factor.
pub fn eq4_series(x: f64, cfg: &PrecisionConfig) -> Result<SeriesValue> {
    arcsin_family(
        x,
        x * x * x / 9.0,
        |n| {
            2.0 * x * x * (n + 1.0) * (n + 1.0) * (2.0 * n + 3.0)
                / ((n + 2.0) * (2.0 * n + 5.0) * (2.0 * n + 5.0))
        },
        |n| 1.0 / (10.0 * n.powf(2.5)),
        cfg,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkit::{binomial_f64, PI, ZETA2};

    fn cfg(tol: f64) -> PrecisionConfig {
        PrecisionConfig::new(tol, 2_000_000, 1000).unwrap()
    }

    /// Independent oracle: direct summation with exact binomials, no
    /// recurrences shared with the implementation.
    fn brute_binom_family(k: u32, a: u32, z: f64, n_max: u64) -> f64 {
        let mut acc = NeumaierSum::new();
        for n in 1..=n_max {
            let b = binomial_f64(k as u64 * n, n).unwrap();
            acc.add(z.powi(n as i32) / ((n as f64).powi(a as i32) * b));
        }
        acc.value()
    }

    /// Scalable independent route: u_n = 4ⁿ/C(2n,n) advanced by its own
    /// single-factor recurrence (exactness pinned to BigUint binomials for
    /// n ≤ 60), then term = u²/(lead·(2n+1)^q). Avoids the f64 overflow of
    /// 16ⁿ and C(2n,n)² past n ≈ 250.
    fn brute_central_squared(p: i32, q: i32, n0: u64, use_n_sq: bool, n_max: u64) -> f64 {
        let mut acc = NeumaierSum::new();
        let mut u = 1.0f64;
        for n in 0..=n_max {
            let nf = n as f64;
            if n <= 60 {
                let exact = 4.0f64.powi(n as i32) / binomial_f64(2 * n, n).unwrap();
                assert!((u - exact).abs() <= 1e-13 * exact, "oracle drift at n={n}");
            }
            if n >= n0 {
                let lead = if use_n_sq {
                    nf * nf
                } else {
                    (2.0 * nf + 3.0).powi(p)
                };
                acc.add(u * u / (lead * (2.0 * nf + 1.0).powi(q)));
            }
            u *= 2.0 * (nf + 1.0) / (2.0 * nf + 1.0);
        }
        acc.value()
    }

    #[test]
    fn binom_family_t2_value() {
        let v = sum_binom_family(BinomFamilyParams::new(3, 2, 0.5).unwrap(), &cfg(1e-12)).unwrap();
        let closed = PI * PI / 24.0 - 0.5 * 2.0f64.ln().powi(2);
        assert!(
            (v.value - closed).abs() <= 1e-12 + v.tail_bound,
            "got {}",
            v.value
        );
        // Direct-summation oracle to n = 40, frozen rendering 0.17100700975…
        let oracle = brute_binom_family(3, 2, 0.5, 40);
        assert!((v.value - oracle).abs() <= v.tail_bound + 1e-13);
        assert!((v.value - 0.1710070097529557).abs() < 1e-12);
        assert!(v.terms_used <= 60, "needed {} terms", v.terms_used);
    }

    #[test]
    fn binom_family_t3_value() {
        let v = sum_binom_family(
            BinomFamilyParams::new(3, 2, 1.0 / 12.0).unwrap(),
            &cfg(1e-12),
        )
        .unwrap();
        let oracle = brute_binom_family(3, 2, 1.0 / 12.0, 30);
        assert!(
            (v.value - oracle).abs() < 1e-13,
            "value {} oracle {oracle}",
            v.value
        );
        assert!((v.value - 0.027894290142698404).abs() < 1e-12);
    }

    #[test]
    fn binom_family_t5_value() {
        let v = sum_binom_family(BinomFamilyParams::new(3, 1, 0.5).unwrap(), &cfg(1e-12)).unwrap();
        let closed = PI / 10.0 - 2.0f64.ln() / 5.0;
        assert!((v.value - closed).abs() <= 1e-12 + v.tail_bound);
        assert!((v.value - 0.17552982924699026).abs() < 1e-12);
    }

    #[test]
    fn binom_family_basel_case() {
        // 3·Σ 1/(n²C(2n,n)) = ζ(2), i.e. the k=2, a=2, z=1 sum is π²/18.
        let v = sum_binom_family(BinomFamilyParams::new(2, 2, 1.0).unwrap(), &cfg(1e-12)).unwrap();
        assert!((v.value - ZETA2 / 3.0).abs() <= 1e-12 + v.tail_bound);
        assert!((3.0 * v.value - PI * PI / 6.0).abs() < 1e-11);
    }

    #[test]
    fn binom_family_radius_enforcement() {
        assert!(BinomFamilyParams::new(3, 2, 27.0 / 4.0).is_err());
        assert!(BinomFamilyParams::new(3, 2, 27.0 / 4.0 - 1e-9).is_ok());
        assert!(BinomFamilyParams::new(2, 2, 4.0).is_err());
        assert!(BinomFamilyParams::new(4, 2, 256.0 / 27.0).is_err());
        assert!(BinomFamilyParams::new(5, 2, 0.1).is_err());
        assert!(BinomFamilyParams::new(3, 3, 0.1).is_err());
    }

    #[test]
    fn binom_step_ratio_is_increasing() {
        // The geometric certificate leans on monotonicity; sweep it hard.
        for k in 2..=4u32 {
            let mut prev = binom_step_ratio(k, 1.0);
            for n in 2..=200_000u64 {
                let cur = binom_step_ratio(k, n as f64);
                assert!(cur >= prev, "step ratio decreased at k={k}, n={n}");
                prev = cur;
            }
            assert!(prev < family_radius(k));
        }
    }

    #[test]
    fn term_recurrence_matches_exact_binomials() {
        // t_n from the recurrence vs zⁿ/(nᵃ·C(kn,n)) with exact integer
        // binomials, n ≤ 30, 1e-14 relative.
        for (k, a, z) in [(2u32, 2u32, 1.0), (3, 2, 0.5), (3, 1, 0.5), (4, 2, -0.5)] {
            let mut term = z / k as f64;
            for n in 1..=30u64 {
                let exact = z.powi(n as i32)
                    / ((n as f64).powi(a as i32) * binomial_f64(k as u64 * n, n).unwrap());
                assert!(
                    (term - exact).abs() <= 1e-14 * exact.abs(),
                    "recurrence drift at k={k} a={a} n={n}"
                );
                let nf = n as f64;
                let mut step = z / binom_step_ratio(k, nf);
                for _ in 0..a {
                    step *= nf / (nf + 1.0);
                }
                term *= step;
            }
        }
    }

    #[test]
    fn central_squared_t1_value() {
        let v = sum_central_squared(3, 2, 0, false, &cfg(1e-10)).unwrap();
        let oracle = brute_central_squared(3, 2, 0, false, 2000);
        assert!(
            (v.value - oracle).abs() < 1e-10,
            "value {} oracle {oracle}",
            v.value
        );
        assert!((v.value - 0.04199735983510866).abs() < 1e-10);
    }

    #[test]
    fn central_squared_pi_minus_3() {
        // The (2n+1)²(2n+3)² series needs the n = 0 term (1/9) to reach
        // π − 3; the n² variant starts at 1 and gives 4(π − 3).
        let p1 = sum_central_squared(2, 2, 0, false, &cfg(1e-9)).unwrap();
        assert!(
            (p1.value - (PI - 3.0)).abs() <= 1e-9 + p1.tail_bound,
            "got {} want {}",
            p1.value,
            PI - 3.0
        );
        let p2 = sum_central_squared(0, 2, 1, true, &cfg(1e-9)).unwrap();
        assert!((p2.value - 4.0 * (PI - 3.0)).abs() <= 1e-9 + p2.tail_bound);
    }

    #[test]
    fn central_squared_rejects_bad_start() {
        assert!(sum_central_squared(0, 2, 0, true, &cfg(1e-8)).is_err());
        assert!(sum_central_squared(3, 2, 2, false, &cfg(1e-8)).is_err());
        assert!(sum_central_squared(1, 1, 0, false, &cfg(1e-8)).is_err());
    }

    #[test]
    fn central_squared_tail_bound_sound() {
        // Doubling the term count moves the value by less than the tail
        // bound reported at the shorter run.
        let tol = 1e-6;
        let short = sum_central_squared(2, 2, 0, false, &cfg(tol)).unwrap();
        let long = sum_central_squared(2, 2, 0, false, &cfg(tol * tol)).unwrap();
        assert!(long.terms_used >= 2 * short.terms_used);
        assert!((long.value - short.value).abs() <= short.tail_bound);
    }

    #[test]
    fn e6_value_and_first_term() {
        let v = sum_e6(&cfg(1e-12)).unwrap();
        assert!(
            (v.value - PI * PI / 24.0).abs() <= 1e-12 + v.tail_bound,
            "got {}",
            v.value
        );
        // n = 1 term: (1/2)(1 − 1/3) = 1/3.
        let one_term = sum_e6(&PrecisionConfig::new(1.0, 1, 1).unwrap());
        match one_term {
            Ok(s) => assert!((s.value - 1.0 / 3.0).abs() < 1e-15),
            Err(Error::Convergence { value, .. }) => {
                assert!((value - 1.0 / 3.0).abs() < 1e-15)
            }
            Err(e) => panic!("unexpected error {e}"),
        }
    }

    #[test]
    fn e7_value_and_partial_sums() {
        let v = sum_e7(&cfg(1e-12)).unwrap();
        assert!((v.value - (PI / 2.0 - 1.0)).abs() <= 1e-12 + v.tail_bound);
        // Hand-checkable: t₁ = 0.5; six-term partial sum 0.5706452…
        let mut term = 0.5f64;
        let mut partial = 0.0;
        for n in 1..=6u32 {
            partial += term;
            let nf = n as f64;
            term *= nf * nf / ((nf + 2.0) * (2.0 * nf + 1.0));
        }
        assert!((partial - 0.5706452277880850).abs() < 1e-15);
        assert!((v.value - partial).abs() < 2e-4);
    }

    #[test]
    fn arcsin_sq_series_values() {
        let c = cfg(1e-12);
        assert_eq!(arcsin_sq_series(0.0, &c).unwrap().value, 0.0);
        // arcsin(1/2) = π/6 ⟹ π²/36.
        let v = arcsin_sq_series(0.5, &c).unwrap();
        assert!((v.value - PI * PI / 36.0).abs() <= 1e-12 + v.tail_bound);
        assert!(arcsin_sq_series(1.1, &c).is_err());
    }

    #[test]
    fn arcsin_sq_series_boundary_certifies() {
        // x = 1: slow p-series convergence; the bound must still bracket
        // the true error against π²/4.
        let c = PrecisionConfig::new(1e-10, 20_000, 1).unwrap();
        match arcsin_sq_series(1.0, &c) {
            Err(Error::Convergence {
                value,
                tail_bound,
                terms_used,
            }) => {
                assert_eq!(terms_used, 20_000);
                let truth = PI * PI / 4.0;
                assert!(
                    (value - truth).abs() <= tail_bound,
                    "bound {tail_bound:.3e} does not certify error {:.3e}",
                    (value - truth).abs()
                );
                assert!(tail_bound < 0.05, "bound uselessly loose: {tail_bound}");
            }
            other => panic!("expected convergence error at x = 1, got {other:?}"),
        }
    }

    #[test]
    fn eq3_eq4_series_basic() {
        let c = cfg(1e-12);
        assert_eq!(eq3_series(0.0, &c).unwrap().value, 0.0);
        assert_eq!(eq4_series(0.0, &c).unwrap().value, 0.0);
        // Closed form of the once-integrated series at x = 1/2.
        let lhs =
            -2.0 * 0.5 + 2.0 * (1.0f64 - 0.25).sqrt() * 0.5f64.asin() + 0.5 * 0.5f64.asin().powi(2);
        let v = eq3_series(0.5, &c).unwrap();
        assert!((v.value - lhs).abs() < 1e-11, "got {} want {lhs}", v.value);
    }

    #[test]
    fn positive_series_partial_sums_monotone() {
        // Spot-check the monotone bound: partial sums of a positive-term
        // series never exceed the converged value plus its tail bound.
        let c = cfg(1e-12);
        let full = sum_binom_family(BinomFamilyParams::new(3, 2, 0.5).unwrap(), &c).unwrap();
        let mut running = 0.0;
        let mut term = 0.5 / 3.0;
        for n in 1..=full.terms_used as u64 {
            running += term;
            assert!(running <= full.value + full.tail_bound + 1e-15);
            let nf = n as f64;
            term *= (0.5 / binom_step_ratio(3, nf)) * (nf / (nf + 1.0)) * (nf / (nf + 1.0));
        }
    }

    #[test]
    fn tail_bound_soundness_doubling() {
        // For each registry family: summing with max_terms 2N vs N moves
        // the value by less than the tail bound reported at N.
        let coarse = cfg(1e-6);
        let fine = cfg(1e-13);
        let fams = [
            BinomFamilyParams::new(3, 2, 0.5).unwrap(),
            BinomFamilyParams::new(3, 1, 0.5).unwrap(),
            BinomFamilyParams::new(4, 2, 0.25).unwrap(),
            BinomFamilyParams::new(2, 2, 1.0).unwrap(),
        ];
        for p in fams {
            let s = sum_binom_family(p, &coarse).unwrap();
            let l = sum_binom_family(p, &fine).unwrap();
            assert!(
                (l.value - s.value).abs() <= s.tail_bound,
                "tail bound unsound for k={} a={} z={}",
                p.k(),
                p.a(),
                p.z()
            );
        }
        let s = sum_e7(&coarse).unwrap();
        let l = sum_e7(&fine).unwrap();
        assert!((l.value - s.value).abs() <= s.tail_bound);
        let s = sum_e6(&coarse).unwrap();
        let l = sum_e6(&fine).unwrap();
        assert!((l.value - s.value).abs() <= s.tail_bound);
        let s = arcsin_sq_series(0.8, &coarse).unwrap();
        let l = arcsin_sq_series(0.8, &fine).unwrap();
        assert!((l.value - s.value).abs() <= s.tail_bound);
    }

    #[test]
    fn convergence_error_carries_best_partial() {
        let tiny = PrecisionConfig::new(1e-12, 3, 1).unwrap();
        match sum_binom_family(BinomFamilyParams::new(3, 2, 0.5).unwrap(), &tiny) {
            Err(Error::Convergence {
                value, terms_used, ..
            }) => {
                assert_eq!(terms_used, 3);
                let oracle = brute_binom_family(3, 2, 0.5, 3);
                assert!((value - oracle).abs() < 1e-15);
            }
            other => panic!("expected convergence error, got {other:?}"),
        }
    }
}
