//! Generic pFq partial-sum evaluator and the binomial-sum ↔ pFq prefactor
//! mappings.
//!
//! Parameters are rationals evaluated in floating point at ratio-update
//! time; no gamma function anywhere — Pochhammer products advance
//! incrementally through t_{n+1} = t_n·z·Π(aᵢ+n)/((n+1)·Π(bⱼ+n)).

use crate::error::{Error, Result};
use crate::numkit::{NeumaierSum, PrecisionConfig};
use crate::series::{sum_binom_family, BinomFamilyParams, SeriesValue};

/// An exact rational hypergeometric parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    pub num: i64,
    pub den: i64,
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::Domain("rational with zero denominator".into()));
        }
        let sign = if den < 0 { -1 } else { 1 };
        Ok(Rational {
            num: sign * num,
            den: sign * den,
        })
    }

    pub fn integer(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// True for 0, −1, −2, …: the poles of the lower parameters.
    pub fn is_nonpositive_integer(&self) -> bool {
        self.num % self.den == 0 && self.num / self.den <= 0
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// A pFq evaluation request: Σ_{n≥0} Π(upper)_n/(n!·Π(lower)_n)·zⁿ.
#[derive(Debug, Clone, PartialEq)]
pub struct PfqSpec {
    upper: Vec<Rational>,
    lower: Vec<Rational>,
    z: f64,
}

impl PfqSpec {
    /// Validates the convergence condition: |z| < 1, or |z| = 1 with
    /// Σ(lower) − Σ(upper) > 0. Lower parameters must avoid the poles.
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>, z: f64) -> Result<Self> {
        for b in &lower {
            if b.is_nonpositive_integer() {
                return Err(Error::Domain(format!(
                    "lower parameter {b} is a nonpositive integer"
                )));
            }
        }
        if z.abs() > 1.0 {
            return Err(Error::Domain(format!(
                "pFq argument |z| = {} beyond the unit disk",
                z.abs()
            )));
        }
        if z.abs() == 1.0 {
            let excess = lower.iter().map(Rational::as_f64).sum::<f64>()
                - upper.iter().map(Rational::as_f64).sum::<f64>();
            if !(excess > 0.0) {
                return Err(Error::Domain(format!(
                    "unit-argument pFq needs Σ(lower) − Σ(upper) > 0, got {excess}"
                )));
            }
        }
        Ok(PfqSpec { upper, lower, z })
    }

    pub fn upper(&self) -> &[Rational] {
        &self.upper
    }

    pub fn lower(&self) -> &[Rational] {
        &self.lower
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    /// t_{n+1}/t_n at index n.
    fn term_ratio(&self, n: f64) -> f64 {
        let mut r = self.z / (n + 1.0);
        for a in &self.upper {
            r *= a.as_f64() + n;
        }
        for b in &self.lower {
            r /= b.as_f64() + n;
        }
        r
    }

    /// Decay exponent d in t_n ~ C·n^{−d} at |z| = 1.
    fn unit_decay(&self) -> f64 {
        1.0 + self.lower.iter().map(Rational::as_f64).sum::<f64>()
            - self.upper.iter().map(Rational::as_f64).sum::<f64>()
    }
}

/// Partial sum of the hypergeometric series with a tail certificate:
/// geometric for |z| < 1 (the ratio beyond n is bounded by its local
/// supremum), p-series comparison at |z| = 1 with the term asymptotic
/// t_n ~ C·n^{Σupper−Σlower−1} and C taken as twice the last computed
/// term — certified given the eventual monotonicity of the term ratio.
pub fn pfq(spec: &PfqSpec, cfg: &PrecisionConfig) -> Result<SeriesValue> {
    let target = 0.5 * cfg.abs_tol();
    let at_unit = spec.z.abs() == 1.0;
    let mut acc = NeumaierSum::new();
    let mut term = 1.0f64; // t_0
    for n in 0..cfg.max_terms() {
        acc.add(term);
        let nf = n as f64;
        let tail = if at_unit {
            let d = spec.unit_decay();
            if nf >= 2.0 {
                // Σ_{m>N} 2|t_N|(m/N)^{−d} ≤ 2|t_N|·N/(d−1)
                2.0 * term.abs() * nf / (d - 1.0)
            } else {
                f64::INFINITY
            }
        } else {
            // sup ratio over the next 32 indices, floored at the |z| limit
            let mut r_sup = spec.z.abs();
            for j in 0..32 {
                r_sup = r_sup.max(spec.term_ratio(nf + j as f64).abs());
            }
            if r_sup < 1.0 {
                term.abs() * r_sup / (1.0 - r_sup)
            } else {
                f64::INFINITY
            }
        };
        if tail <= target {
            return Ok(SeriesValue {
                value: acc.value(),
                terms_used: n + 1,
                tail_bound: tail,
            });
        }
        term *= spec.term_ratio(nf);
    }
    Err(Error::Convergence {
        value: acc.value(),
        tail_bound: f64::INFINITY,
        terms_used: cfg.max_terms(),
    })
}

/// The three binomial-sum ↔ pFq prefactor mappings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MappingFamily {
    /// Σ zⁿ/(n·C(3n,n)) = (z/3)·3F2(1,1,3/2; 4/3,5/3; 4z/27)
    Map3F2,
    /// Σ zⁿ/(n²·C(3n,n)) = (z/3)·4F3(1,1,1,3/2; 4/3,5/3,2; 4z/27)
    Map4F3,
    /// Σ zⁿ/(n²·C(4n,n)) = (z/4)·5F4(1,1,1,4/3,5/3; 5/4,3/2,7/4,2; 27z/256)
    Map5F4,
}

fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num, den).expect("static rational")
}

/// The pFq side of a mapping at binomial-sum argument z: returns the
/// prefactor and the spec for the mapped argument.
pub fn mapping_pfq(family: MappingFamily, z: f64) -> Result<(f64, PfqSpec)> {
    match family {
        MappingFamily::Map3F2 => Ok((
            z / 3.0,
            PfqSpec::new(
                vec![rat(1, 1), rat(1, 1), rat(3, 2)],
                vec![rat(4, 3), rat(5, 3)],
                4.0 * z / 27.0,
            )?,
        )),
        MappingFamily::Map4F3 => Ok((
            z / 3.0,
            PfqSpec::new(
                vec![rat(1, 1), rat(1, 1), rat(1, 1), rat(3, 2)],
                vec![rat(4, 3), rat(5, 3), rat(2, 1)],
                4.0 * z / 27.0,
            )?,
        )),
        MappingFamily::Map5F4 => Ok((
            z / 4.0,
            PfqSpec::new(
                vec![rat(1, 1), rat(1, 1), rat(1, 1), rat(4, 3), rat(5, 3)],
                vec![rat(5, 4), rat(3, 2), rat(7, 4), rat(2, 1)],
                27.0 * z / 256.0,
            )?,
        )),
    }
}

/// |binomial-sum series − prefactor·pFq(mapped argument)|.
pub fn mapping_residual(family: MappingFamily, z: f64, cfg: &PrecisionConfig) -> Result<f64> {
    if z == 0.0 {
        return Ok(0.0);
    }
    let (k, a) = match family {
        MappingFamily::Map3F2 => (3, 1),
        MappingFamily::Map4F3 => (3, 2),
        MappingFamily::Map5F4 => (4, 2),
    };
    let series = sum_binom_family(BinomFamilyParams::new(k, a, z)?, cfg)?;
    let (prefactor, spec) = mapping_pfq(family, z)?;
    let hyper = pfq(&spec, cfg)?;
    Ok((series.value - prefactor * hyper.value).abs())
}
