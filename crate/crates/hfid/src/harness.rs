//! Identity registry, verification engine, and report generation.
//!
//! Each record binds a series LHS, a closed-form RHS, and optional
//! independent oracles (quadrature, root forms, pFq mappings) whose
//! deviations fold into the record's max-norm `abs_diff`. Verification is
//! pure and sequential: two runs with the same config produce
//! byte-identical reports modulo the elapsed fields.

use std::time::{Duration, Instant};

use crate::closedform::{
    e8_rhs, eq2_lhs, eq3_lhs, eq4_lhs, s3_closed, s4_closed, thai_rhs, thm1_rhs, thm2_rhs,
    thm3_rhs, thm5_rhs, wallis_rhs,
};
use crate::error::{Error, Result};
use crate::hyper::{mapping_pfq, pfq, MappingFamily};
use crate::numkit::{PrecisionConfig, PI, ZETA2};
use crate::quadrature::{eq5_double_integral, f32_integral, integrate, log_integral_repr};
use crate::roots::thai_z;
use crate::series::{
    arcsin_sq_series, eq3_series, eq4_series, sum_binom_family, sum_central_squared, sum_e6,
    sum_e7, BinomFamilyParams, SeriesValue,
};

/// Outcome status of one identity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyStatus {
    Pass,
    Fail,
    NonConverged,
}

impl VerifyStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            VerifyStatus::Pass => "pass",
            VerifyStatus::Fail => "fail",
            VerifyStatus::NonConverged => "non_converged",
        }
    }
}

/// Result of verifying one registry record.
#[derive(Debug, Clone)]
pub struct VerificationResult {
    pub id: &'static str,
    pub description: &'static str,
    pub lhs_value: f64,
    pub rhs_value: f64,
    pub abs_diff: f64,
    pub lhs_tail_bound: f64,
    pub terms_used: usize,
    pub status: VerifyStatus,
    pub tol: f64,
    pub elapsed: Duration,
}

/// Registry metadata exposed by `list_identities`.
#[derive(Debug, Clone)]
pub struct IdentitySummary {
    pub id: &'static str,
    pub description: &'static str,
    pub default_tol: f64,
}

/// Everything a record evaluation reports back; aggregates fold sampled
/// points and oracle deviations with a max-norm rule, keeping the worst
/// point's values as the headline lhs/rhs.
#[derive(Debug, Clone, Copy)]
struct RecordEval {
    lhs: f64,
    rhs: f64,
    abs_diff: f64,
    tail_bound: f64,
    terms_used: usize,
    converged: bool,
}

impl RecordEval {
    fn empty() -> Self {
        RecordEval {
            lhs: f64::NAN,
            rhs: f64::NAN,
            abs_diff: -1.0,
            tail_bound: 0.0,
            terms_used: 0,
            converged: true,
        }
    }

    fn add_pair(&mut self, lhs: f64, rhs: f64, tail: f64, terms: usize, converged: bool) {
        let d = (lhs - rhs).abs();
        if d > self.abs_diff || self.abs_diff < 0.0 {
            self.abs_diff = d;
            self.lhs = lhs;
            self.rhs = rhs;
        }
        self.tail_bound = self.tail_bound.max(tail);
        self.terms_used += terms;
        self.converged &= converged;
    }
}

/// Re-derive a config with the tolerance tightened by `factor`, for
/// records whose lhs gets scaled by a constant after summation.
fn tightened(cfg: &PrecisionConfig, factor: f64) -> PrecisionConfig {
    PrecisionConfig::clamped(cfg.abs_tol() / factor, cfg.max_terms(), cfg.quad_budget())
}

/// Unpack a series result, degrading budget exhaustion to a non-converged
/// partial value instead of aborting the record.
fn series_parts(r: Result<SeriesValue>) -> Result<(f64, f64, usize, bool)> {
    match r {
        Ok(s) => Ok((s.value, s.tail_bound, s.terms_used, true)),
        Err(Error::Convergence {
            value,
            tail_bound,
            terms_used,
        }) => Ok((value, tail_bound, terms_used, false)),
        Err(e) => Err(e),
    }
}

struct IdentityRecord {
    id: &'static str,
    description: &'static str,
    default_tol: f64,
    eval: fn(&PrecisionConfig) -> Result<RecordEval>,
}

fn eval_e0(cfg: &PrecisionConfig) -> Result<RecordEval> {
    let mut agg = RecordEval::empty();
    let (v, tail, terms, ok) = series_parts(sum_binom_family(
        BinomFamilyParams::new(2, 2, 1.0)?,
        &tightened(cfg, 3.0),
    ))?;
    agg.add_pair(3.0 * v, ZETA2, 3.0 * tail, terms, ok);
    Ok(agg)
}

fn eval_e1(cfg: &PrecisionConfig) -> Result<RecordEval> {
    let mut agg = RecordEval::empty();
    for n in 0..=10u32 {
        let q = integrate(|x| x.sin().powi(2 * n as i32 + 3), 0.0, PI / 2.0, cfg);
        agg.add_pair(
            q.value,
            wallis_rhs(n),
            q.err_estimate,
            q.evaluations,
            q.converged,
        );
    }
    Ok(agg)
}

fn eval_e2(cfg: &PrecisionConfig) -> Result<RecordEval> {
    let mut agg = RecordEval::empty();
    for x in [0.3, 0.5, 1.0f64.sin()] {
        let (v, tail, terms, ok) = series_parts(arcsin_sq_series(x, cfg))?;
        agg.add_pair(v, eq2_lhs(x)?, tail, terms, ok);
    }
    Ok(agg)
}

fn eval_e3(cfg: &PrecisionConfig) -> Result<RecordEval> {
    let mut agg = RecordEval::empty();
    for x in [0.3, 0.5, 1.0f64.sin()] {
        let (v, tail, terms, ok) = series_parts(eq3_series(x, cfg))?;
        agg.add_pair(v, eq3_lhs(x)?, tail, terms, ok);
    }
    Ok(agg)
}

fn eval_e4(cfg: &PrecisionConfig) -> Result<RecordEval> {
    let mut agg = RecordEval::empty();
    for x in [0.3, 0.5, 0.8] {
        let (v, tail, terms, ok) = series_parts(eq4_series(x, cfg))?;
        let (rhs, quad) = eq4_lhs(x, cfg)?;
        agg.add_pair(
            v,
            rhs,
            tail + quad.err_estimate,
            terms + quad.evaluations,
            ok && quad.converged,
        );
    }
    Ok(agg)
}

fn eval_e5(cfg: &PrecisionConfig) -> Result<RecordEval> {
    let mut agg = RecordEval::empty();
    let (series, tail, terms, ok) = series_parts(sum_central_squared(3, 2, 0, false, cfg))?;
    let di = eq5_double_integral(cfg);
    agg.add_pair(
        series,
        (PI - 4.0) + di.value,
        tail + di.err_estimate,
        terms + di.evaluations,
        ok && di.converged,
    );
    Ok(agg)
}

fn eval_e6(cfg: &PrecisionConfig) -> Result<RecordEval> {
    let mut agg = RecordEval::empty();
    let (v, tail, terms, ok) = series_parts(sum_e6(cfg))?;
    agg.add_pair(v, PI * PI / 24.0, tail, terms, ok);
    Ok(agg)
}

fn eval_e7(cfg: &PrecisionConfig) -> Result<RecordEval> {
    let mut agg = RecordEval::empty();
    let (v, tail, terms, ok) = series_parts(sum_e7(cfg))?;
    agg.add_pair(v, PI / 2.0 - 1.0, tail, terms, ok);
    Ok(agg)
}

fn eval_e8(cfg: &PrecisionConfig) -> Result<RecordEval> {
    let mut agg = RecordEval::empty();
    let (v, tail, terms, ok) = series_parts(sum_binom_family(
        BinomFamilyParams::new(3, 2, 8.0 / 3.0)?,
        cfg,
    ))?;
    agg.add_pair(v, e8_rhs(), tail, terms, ok);
    // Root-form oracle at the m = 1/2 limit point.
    let root_form = s3_closed(8.0 / 3.0)?;
    agg.add_pair(v, root_form.value, tail, 0, true);
    Ok(agg)
}

fn eval_t1(cfg: &PrecisionConfig) -> Result<RecordEval> {
    let mut agg = RecordEval::empty();
    let (v, tail, terms, ok) =
        series_parts(sum_central_squared(3, 2, 0, false, &tightened(cfg, 27.0)))?;
    agg.add_pair(27.0 * v, thm1_rhs(), 27.0 * tail, terms, ok);
    // Direct 4F3 evaluation at unit argument.
    let (pf, pf_tail, pf_terms, pf_ok) = series_parts(pfq(
        &crate::hyper::PfqSpec::new(
            vec![
                crate::hyper::Rational::integer(1),
                crate::hyper::Rational::integer(1),
                crate::hyper::Rational::integer(1),
                crate::hyper::Rational::new(3, 2)?,
            ],
            vec![
                crate::hyper::Rational::new(5, 2)?,
                crate::hyper::Rational::new(5, 2)?,
                crate::hyper::Rational::new(5, 2)?,
            ],
            1.0,
        )?,
        cfg,
    ))?;
    agg.add_pair(pf, thm1_rhs(), pf_tail, pf_terms, pf_ok);
    Ok(agg)
}

fn eval_t2(cfg: &PrecisionConfig) -> Result<RecordEval> {
    let mut agg = RecordEval::empty();
    let (v, tail, terms, ok) =
        series_parts(sum_binom_family(BinomFamilyParams::new(3, 2, 0.5)?, cfg))?;
    agg.add_pair(v, thm2_rhs(), tail, terms, ok);
    Ok(agg)
}

fn eval_t3(cfg: &PrecisionConfig) -> Result<RecordEval> {
    let mut agg = RecordEval::empty();
    let (v, tail, terms, ok) = series_parts(sum_binom_family(
        BinomFamilyParams::new(3, 2, 1.0 / 12.0)?,
        cfg,
    ))?;
    agg.add_pair(v, thm3_rhs(), tail, terms, ok);
    Ok(agg)
}

fn eval_t4(cfg: &PrecisionConfig) -> Result<RecordEval> {
    let mut agg = RecordEval::empty();
    for m in [0.6, 0.75, 1.0, 1.5, 2.0, 3.0, 5.0, 10.0] {
        let z = thai_z(m)?;
        let (v, tail, terms, ok) =
            series_parts(sum_binom_family(BinomFamilyParams::new(3, 2, z)?, cfg))?;
        let rhs = thai_rhs(m)?;
        agg.add_pair(v, rhs, tail, terms, ok);
        // Root-decomposition oracle.
        let root_form = s3_closed(z)?;
        agg.add_pair(root_form.value, rhs, root_form.imag_leak, 0, true);
    }
    Ok(agg)
}

fn eval_t5(cfg: &PrecisionConfig) -> Result<RecordEval> {
    let mut agg = RecordEval::empty();
    let (v, tail, terms, ok) =
        series_parts(sum_binom_family(BinomFamilyParams::new(3, 1, 0.5)?, cfg))?;
    agg.add_pair(v, thm5_rhs(), tail, terms, ok);
    // Rational-integral oracle; all three routes must agree.
    let quad = f32_integral(0.5, cfg)?;
    agg.add_pair(
        quad.value,
        thm5_rhs(),
        quad.err_estimate,
        quad.evaluations,
        quad.converged,
    );
    agg.add_pair(v, quad.value, tail + quad.err_estimate, 0, true);
    Ok(agg)
}

fn eval_p1(cfg: &PrecisionConfig) -> Result<RecordEval> {
    let mut agg = RecordEval::empty();
    let (v, tail, terms, ok) = series_parts(sum_central_squared(2, 2, 0, false, cfg))?;
    agg.add_pair(v, PI - 3.0, tail, terms, ok);
    Ok(agg)
}

fn eval_p2(cfg: &PrecisionConfig) -> Result<RecordEval> {
    let mut agg = RecordEval::empty();
    let (v, tail, terms, ok) = series_parts(sum_central_squared(0, 2, 1, true, cfg))?;
    agg.add_pair(v, 4.0 * (PI - 3.0), tail, terms, ok);
    Ok(agg)
}

fn eval_q4(cfg: &PrecisionConfig) -> Result<RecordEval> {
    let mut agg = RecordEval::empty();
    for z in [0.5, -0.5, 0.25] {
        let (v, tail, terms, ok) =
            series_parts(sum_binom_family(BinomFamilyParams::new(4, 2, z)?, cfg))?;
        let closed = s4_closed(z)?;
        agg.add_pair(v, closed.value, tail + closed.imag_leak, terms, ok);
    }
    Ok(agg)
}

fn eval_mapping(family: MappingFamily, cfg: &PrecisionConfig) -> Result<RecordEval> {
    let mut agg = RecordEval::empty();
    let (k, a) = match family {
        MappingFamily::Map3F2 => (3, 1),
        MappingFamily::Map4F3 => (3, 2),
        MappingFamily::Map5F4 => (4, 2),
    };
    for z in [1.0 / 12.0, 0.25, 0.5, 2.0] {
        let (v, tail, terms, ok) =
            series_parts(sum_binom_family(BinomFamilyParams::new(k, a, z)?, cfg))?;
        let (prefactor, spec) = mapping_pfq(family, z)?;
        let (h, h_tail, h_terms, h_ok) = series_parts(pfq(&spec, cfg))?;
        agg.add_pair(
            v,
            prefactor * h,
            tail + prefactor.abs() * h_tail,
            terms + h_terms,
            ok && h_ok,
        );
    }
    Ok(agg)
}

fn eval_m1(cfg: &PrecisionConfig) -> Result<RecordEval> {
    eval_mapping(MappingFamily::Map3F2, cfg)
}

fn eval_m2(cfg: &PrecisionConfig) -> Result<RecordEval> {
    eval_mapping(MappingFamily::Map4F3, cfg)
}

fn eval_m3(cfg: &PrecisionConfig) -> Result<RecordEval> {
    eval_mapping(MappingFamily::Map5F4, cfg)
}

fn eval_x1(cfg: &PrecisionConfig) -> Result<RecordEval> {
    // z = 4 lies beyond the m ≥ 1/2 parameterization (z > 8/3) but inside
    // the branch-safe domain; all three routes must still agree.
    let z = 4.0;
    let mut agg = RecordEval::empty();
    let root_form = s3_closed(z)?;
    let quad = log_integral_repr(z, cfg)?;
    agg.add_pair(
        root_form.value,
        quad.value,
        root_form.imag_leak + quad.err_estimate,
        quad.evaluations,
        quad.converged,
    );
    let (v, tail, terms, ok) =
        series_parts(sum_binom_family(BinomFamilyParams::new(3, 2, z)?, cfg))?;
    agg.add_pair(v, root_form.value, tail, terms, ok);
    Ok(agg)
}

const REGISTRY: &[IdentityRecord] = &[
    IdentityRecord {
        id: "E0",
        description: "3*sum 1/(n^2 C(2n,n)) = pi^2/6",
        default_tol: 1e-10,
        eval: eval_e0,
    },
    IdentityRecord {
        id: "E1",
        description: "int_0^{pi/2} sin^{2n+3} = 4^n(2n+2)/((2n+3)(2n+1)C(2n,n)), n = 0..10",
        default_tol: 1e-11,
        eval: eval_e1,
    },
    IdentityRecord {
        id: "E2",
        description: "arcsin^2(x) = (1/2) sum 4^{n+1}x^{2n+2}/((2n+2)(2n+1)C(2n,n)) at sampled x",
        default_tol: 1e-10,
        eval: eval_e2,
    },
    IdentityRecord {
        id: "E3",
        description: "-2x+2sqrt(1-x^2)asin x+x asin^2 x = once-integrated arcsin^2 series",
        default_tol: 1e-10,
        eval: eval_e3,
    },
    IdentityRecord {
        id: "E4",
        description: "twice-integrated arcsin^2 series vs closed form with u cos^2u/sin u integral",
        default_tol: 1e-8,
        eval: eval_e4,
    },
    IdentityRecord {
        id: "E5",
        description: "sum 16^n/((2n+3)^3(2n+1)^2 C(2n,n)^2) = (pi-4) + double integral",
        default_tol: 1e-7,
        eval: eval_e5,
    },
    IdentityRecord {
        id: "E6",
        description: "pi^2/24 = sum (1 - 1/C(3n,n))/(n^2 2^n)",
        default_tol: 1e-10,
        eval: eval_e6,
    },
    IdentityRecord {
        id: "E7",
        description: "pi/2 - 1 = sum 2^n/((n+1) n^2 C(2n,n))",
        default_tol: 1e-10,
        eval: eval_e7,
    },
    IdentityRecord {
        id: "E8",
        description: "sum (8/3)^n/(n^2 C(3n,n)) = pi^2/6 - log^2(3)/2",
        default_tol: 1e-9,
        eval: eval_e8,
    },
    IdentityRecord {
        id: "T1",
        description: "27*sum 16^n/((2n+3)^3(2n+1)^2 C(2n,n)^2) = (27/2)(7 zeta(3)+(3-2G)pi-12)",
        default_tol: 1e-8,
        eval: eval_t1,
    },
    IdentityRecord {
        id: "T2",
        description: "sum 1/(n^2 2^n C(3n,n)) = pi^2/24 - log^2(2)/2",
        default_tol: 1e-10,
        eval: eval_t2,
    },
    IdentityRecord {
        id: "T3",
        description: "sum 1/(n^2 12^n C(3n,n)) = (2/3)atan^2(sqrt(15)/9) - log^2(3/2)/2",
        default_tol: 1e-10,
        eval: eval_t3,
    },
    IdentityRecord {
        id: "T4",
        description: "m-sweep: sum 1/(n^2 (m^2+m^3)^n C(3n,n)) = arctan/log closed form",
        default_tol: 1e-9,
        eval: eval_t4,
    },
    IdentityRecord {
        id: "T5",
        description: "sum 1/(n 2^n C(3n,n)) = pi/10 - log(2)/5, with rational-integral oracle",
        default_tol: 1e-8,
        eval: eval_t5,
    },
    IdentityRecord {
        id: "P1",
        description: "sum 16^n/((2n+1)^2(2n+3)^2 C(2n,n)^2) = pi - 3 (from n = 0)",
        default_tol: 1e-8,
        eval: eval_p1,
    },
    IdentityRecord {
        id: "P2",
        description: "sum 16^n/(n^2(2n+1)^2 C(2n,n)^2) = 4(pi - 3) (from n = 1)",
        default_tol: 1e-8,
        eval: eval_p2,
    },
    IdentityRecord {
        id: "Q4",
        description: "sum z^n/(n^2 C(4n,n)) = -(3/8) sum log^2(1-1/xi) over quartic roots",
        default_tol: 1e-9,
        eval: eval_q4,
    },
    IdentityRecord {
        id: "M1",
        description: "sum z^n/(n C(3n,n)) = (z/3) 3F2(1,1,3/2;4/3,5/3;4z/27)",
        default_tol: 1e-10,
        eval: eval_m1,
    },
    IdentityRecord {
        id: "M2",
        description: "sum z^n/(n^2 C(3n,n)) = (z/3) 4F3(1,1,1,3/2;4/3,5/3,2;4z/27)",
        default_tol: 1e-10,
        eval: eval_m2,
    },
    IdentityRecord {
        id: "M3",
        description: "sum z^n/(n^2 C(4n,n)) = (z/4) 5F4(1,1,1,4/3,5/3;5/4,3/2,7/4,2;27z/256)",
        default_tol: 1e-10,
        eval: eval_m3,
    },
    IdentityRecord {
        id: "X1",
        description: "root form of sum z^n/(n^2 C(3n,n)) vs log-integral quadrature at z = 4",
        default_tol: 1e-8,
        eval: eval_x1,
    },
];

/// Full registry in stable order.
pub fn list_identities() -> Vec<IdentitySummary> {
    REGISTRY
        .iter()
        .map(|r| IdentitySummary {
            id: r.id,
            description: r.description,
            default_tol: r.default_tol,
        })
        .collect()
}

/// Harness-level verification settings: `tol` overrides every record's
/// default pass threshold when set.
#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyOptions {
    pub tol: Option<f64>,
    pub max_terms: Option<usize>,
    pub quad_budget: Option<usize>,
}

impl VerifyOptions {
    fn tol_for(&self, record: &IdentityRecord) -> f64 {
        self.tol.unwrap_or(record.default_tol)
    }

    /// Evaluation config: half the pass tolerance (clamped at the 2^-48
    /// floor so unreachable demands degrade to non_converged statuses
    /// instead of config errors).
    fn eval_config(&self, tol: f64) -> PrecisionConfig {
        PrecisionConfig::clamped(
            0.5 * tol,
            self.max_terms.unwrap_or(2_000_000),
            self.quad_budget.unwrap_or(2_000_000),
        )
    }
}

fn run_record(record: &IdentityRecord, opts: &VerifyOptions) -> VerificationResult {
    let tol = opts.tol_for(record);
    let cfg = opts.eval_config(tol);
    let start = Instant::now();
    let eval = (record.eval)(&cfg);
    let elapsed = start.elapsed();
    match eval {
        Ok(agg) => {
            let status = if !agg.converged || agg.tail_bound > tol {
                VerifyStatus::NonConverged
            } else if agg.abs_diff <= tol + agg.tail_bound {
                VerifyStatus::Pass
            } else {
                VerifyStatus::Fail
            };
            VerificationResult {
                id: record.id,
                description: record.description,
                lhs_value: agg.lhs,
                rhs_value: agg.rhs,
                abs_diff: agg.abs_diff.max(0.0),
                lhs_tail_bound: agg.tail_bound,
                terms_used: agg.terms_used,
                status,
                tol,
                elapsed,
            }
        }
        Err(Error::Convergence {
            value,
            tail_bound,
            terms_used,
        }) => VerificationResult {
            id: record.id,
            description: record.description,
            lhs_value: value,
            rhs_value: f64::NAN,
            abs_diff: f64::NAN,
            lhs_tail_bound: tail_bound,
            terms_used,
            status: VerifyStatus::NonConverged,
            tol,
            elapsed,
        },
        Err(_) => VerificationResult {
            id: record.id,
            description: record.description,
            lhs_value: f64::NAN,
            rhs_value: f64::NAN,
            abs_diff: f64::NAN,
            lhs_tail_bound: f64::NAN,
            terms_used: 0,
            status: VerifyStatus::Fail,
            tol,
            elapsed,
        },
    }
}

/// Verify a single identity by id.
pub fn verify(id: &str, opts: &VerifyOptions) -> Result<VerificationResult> {
    let record = REGISTRY
        .iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
    Ok(run_record(record, opts))
}

/// Verify every registry entry in stable order; failures stay isolated as
/// per-record statuses.
pub fn verify_all(opts: &VerifyOptions) -> Vec<VerificationResult> {
    REGISTRY.iter().map(|r| run_record(r, opts)).collect()
}

/// Formats a float with 17 significant digits, the JSON report contract.
pub fn fmt_g17(x: f64) -> String {
    if x.is_nan() {
        "null".to_string()
    } else {
        format!("{x:.16e}")
    }
}

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

/// JSON report over a result set. Field names are part of the interface.
pub fn json_report(results: &[VerificationResult], tol: Option<f64>, max_terms: usize) -> String {
    let mut out = String::new();
    out.push_str("{\n  \"config\": {");
    match tol {
        Some(t) => out.push_str(&format!("\"tol\": {}, ", fmt_g17(t))),
        None => out.push_str("\"tol\": null, "),
    }
    out.push_str(&format!(
        "\"max_terms\": {max_terms}}},\n  \"results\": [\n"
    ));
    for (i, r) in results.iter().enumerate() {
        out.push_str(&format!(
            "    {{\"id\": \"{}\", \"description\": \"{}\", \"lhs\": {}, \"rhs\": {}, \
             \"abs_diff\": {}, \"tail_bound\": {}, \"terms\": {}, \"status\": \"{}\", \
             \"elapsed_ms\": {}}}{}\n",
            json_escape(r.id),
            json_escape(r.description),
            fmt_g17(r.lhs_value),
            fmt_g17(r.rhs_value),
            fmt_g17(r.abs_diff),
            fmt_g17(r.lhs_tail_bound),
            r.terms_used,
            r.status.as_str(),
            r.elapsed.as_millis(),
            if i + 1 < results.len() { "," } else { "" },
        ));
    }
    out.push_str("  ]\n}\n");
    out
}

/// Plain-text report: one line per identity plus a summary tail.
pub fn text_report(results: &[VerificationResult]) -> String {
    let mut out = String::new();
    for r in results {
        out.push_str(&format!(
            "{:<4} {:<13} diff={:<12.3e} tail={:<12.3e} terms={:<8} {:>6} ms  {}\n",
            r.id,
            r.status.as_str(),
            r.abs_diff,
            r.lhs_tail_bound,
            r.terms_used,
            r.elapsed.as_millis(),
            r.description,
        ));
    }
    let passed = results
        .iter()
        .filter(|r| r.status == VerifyStatus::Pass)
        .count();
    out.push_str(&format!("{passed}/{} identities pass\n", results.len()));
    out
}
