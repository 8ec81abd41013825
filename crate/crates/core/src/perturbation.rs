//! Monte-Carlo robustness of the distances under admissible perturbations.
//!
//! The first CFN of a pair is shifted to `⟨u + ε, v − ε, j⟩`, which keeps
//! `u + v` and `j` (hence the hesitancy) fixed. For each trial the three
//! distances are recomputed and compared with their unperturbed values.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cfn::{CfnError, CognitiveFuzzyNumber, CLAMP_TOLERANCE};
use crate::distance::{cf_h, cf_im, combine, DistanceParams, Order, ParamError};
use crate::scalar::{count, lit, Scalar};

pub const DEFAULT_TRIALS: usize = 100;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PerturbationError {
    #[error("no admissible perturbation: [{lo}, {hi}] is empty")]
    EmptyRange { lo: f64, hi: f64 },
    #[error("epsilon {eps} is outside the admissible range [{lo}, {hi}]")]
    OutOfEpsilonRange { eps: f64, lo: f64, hi: f64 },
    #[error("invalid study configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Cfn(#[from] CfnError),
}

fn f64_of<T: Scalar>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Largest `[lo, hi]` such that `⟨u + ε, v − ε, j⟩` stays valid for every `ε` in it.
pub fn epsilon_bounds<T: Scalar>(f: &CognitiveFuzzyNumber<T>) -> Result<(T, T), PerturbationError> {
    let one = T::one();
    let lo = (f.j() - f.u()).max(f.v() - one);
    let hi = (one - f.u()).min(f.v() - f.j());
    if lo > hi {
        return Err(PerturbationError::EmptyRange {
            lo: f64_of(lo),
            hi: f64_of(hi),
        });
    }
    Ok((lo, hi))
}

/// `⟨u + ε, v − ε, j⟩`.
pub fn perturb<T: Scalar>(
    f: &CognitiveFuzzyNumber<T>,
    epsilon: T,
) -> Result<CognitiveFuzzyNumber<T>, PerturbationError> {
    let (lo, hi) = epsilon_bounds(f)?;
    let tol = lit::<T>(CLAMP_TOLERANCE);
    if !(epsilon >= lo - tol && epsilon <= hi + tol) {
        return Err(PerturbationError::OutOfEpsilonRange {
            eps: f64_of(epsilon),
            lo: f64_of(lo),
            hi: f64_of(hi),
        });
    }
    Ok(CognitiveFuzzyNumber::new(
        f.u() + epsilon,
        f.v() - epsilon,
        f.j(),
    )?)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PerturbationConfig<T> {
    pub base_pair: (CognitiveFuzzyNumber<T>, CognitiveFuzzyNumber<T>),
    pub trials: usize,
    pub seed: u64,
    pub orders: Vec<Order>,
    pub lambdas: Vec<T>,
}

impl<T: Scalar> PerturbationConfig<T> {
    pub fn new(base_pair: (CognitiveFuzzyNumber<T>, CognitiveFuzzyNumber<T>), seed: u64) -> Self {
        Self {
            base_pair,
            trials: DEFAULT_TRIALS,
            seed,
            orders: vec![Order::Finite(1), Order::Finite(2), Order::Finite(3)],
            lambdas: vec![lit(0.5)],
        }
    }

    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }

    pub fn with_orders(mut self, orders: Vec<Order>) -> Self {
        self.orders = orders;
        self
    }

    pub fn with_lambdas(mut self, lambdas: Vec<T>) -> Self {
        self.lambdas = lambdas;
        self
    }

    fn params(&self) -> Result<Vec<DistanceParams<T>>, PerturbationError> {
        if self.trials == 0 {
            return Err(PerturbationError::InvalidConfig(
                "trials must be at least 1".into(),
            ));
        }
        if self.orders.is_empty() || self.lambdas.is_empty() {
            return Err(PerturbationError::InvalidConfig(
                "at least one order and one lambda are required".into(),
            ));
        }
        let mut out = Vec::with_capacity(self.orders.len() * self.lambdas.len());
        for &order in &self.orders {
            for &lambda in &self.lambdas {
                out.push(DistanceParams::new(order, lambda)?);
            }
        }
        Ok(out)
    }
}

/// Distances on the perturbed pair and their absolute deviations from the
/// unperturbed distances, for one `(order, lambda)` cell.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CellRecord<T> {
    pub p: Order,
    pub lambda: T,
    pub d_m: T,
    pub d_h: T,
    pub d_c: T,
    pub delta_d_m: T,
    pub delta_d_h: T,
    pub delta_d_c: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialRecord<T> {
    pub trial: usize,
    pub epsilon: T,
    /// One entry per `(order, lambda)`, orders outermost.
    pub cells: Vec<CellRecord<T>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CellSummary<T> {
    pub p: Order,
    pub lambda: T,
    pub baseline_d_m: T,
    pub baseline_d_h: T,
    pub baseline_d_c: T,
    pub mean_delta_d_m: T,
    pub mean_delta_d_h: T,
    pub mean_delta_d_c: T,
    pub max_delta_d_m: T,
    pub max_delta_d_h: T,
    pub max_delta_d_c: T,
    /// Trials with `Δd_m ≥ Δd_h`.
    pub m_ge_h: usize,
    /// Trials with `Δd_m ≥ Δd_c ≥ Δd_h`.
    pub m_ge_c_ge_h: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StudyResult<T> {
    pub epsilon_range: (T, T),
    pub records: Vec<TrialRecord<T>>,
    pub summary: Vec<CellSummary<T>>,
}

impl<T: Scalar> StudyResult<T> {
    pub fn cell(&self, p: Order, lambda: T) -> Option<&CellSummary<T>> {
        self.summary.iter().find(|c| c.p == p && c.lambda == lambda)
    }
}

struct Baseline<T> {
    d_m: T,
    d_h: T,
}

fn measure_cells<T: Scalar>(
    a: &CognitiveFuzzyNumber<T>,
    b: &CognitiveFuzzyNumber<T>,
    params: &[DistanceParams<T>],
    baseline: Option<&[Baseline<T>]>,
) -> Vec<CellRecord<T>> {
    let d_h = cf_h(a, b);
    params
        .iter()
        .enumerate()
        .map(|(k, prm)| {
            let d_m = cf_im(a, b, prm.order());
            let d_c = combine(d_m, d_h, prm.lambda());
            let (delta_d_m, delta_d_h, delta_d_c) = match baseline {
                Some(base) => {
                    let base = &base[k];
                    let base_c = combine(base.d_m, base.d_h, prm.lambda());
                    (
                        (d_m - base.d_m).abs(),
                        (d_h - base.d_h).abs(),
                        (d_c - base_c).abs(),
                    )
                }
                None => (T::zero(), T::zero(), T::zero()),
            };
            CellRecord {
                p: prm.order(),
                lambda: prm.lambda(),
                d_m,
                d_h,
                d_c,
                delta_d_m,
                delta_d_h,
                delta_d_c,
            }
        })
        .collect()
}

/// Draw for trial `index`: uniform on `[lo, hi)` from an independent stream.
pub fn trial_epsilon<T: Scalar>(seed: u64, index: usize, lo: T, hi: T) -> T {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let x: f64 = rng.gen();
    lo + (hi - lo) * lit(x)
}

pub fn run_study<T: Scalar>(
    config: &PerturbationConfig<T>,
) -> Result<StudyResult<T>, PerturbationError> {
    let params = config.params()?;
    let (f1, f2) = config.base_pair;
    let (lo, hi) = epsilon_bounds(&f1)?;

    let baseline: Vec<Baseline<T>> = measure_cells(&f1, &f2, &params, None)
        .into_iter()
        .map(|c| Baseline {
            d_m: c.d_m,
            d_h: c.d_h,
        })
        .collect();

    let records = (0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let epsilon = trial_epsilon(config.seed, trial, lo, hi);
            let moved = perturb(&f1, epsilon)?;
            Ok(TrialRecord {
                trial,
                epsilon,
                cells: measure_cells(&moved, &f2, &params, Some(&baseline)),
            })
        })
        .collect::<Result<Vec<_>, PerturbationError>>()?;

    let n = count::<T>(records.len());
    let summary = params
        .iter()
        .enumerate()
        .map(|(k, prm)| {
            let cells = records.iter().map(|r| &r.cells[k]);
            let mut s = CellSummary {
                p: prm.order(),
                lambda: prm.lambda(),
                baseline_d_m: baseline[k].d_m,
                baseline_d_h: baseline[k].d_h,
                baseline_d_c: combine(baseline[k].d_m, baseline[k].d_h, prm.lambda()),
                mean_delta_d_m: T::zero(),
                mean_delta_d_h: T::zero(),
                mean_delta_d_c: T::zero(),
                max_delta_d_m: T::zero(),
                max_delta_d_h: T::zero(),
                max_delta_d_c: T::zero(),
                m_ge_h: 0,
                m_ge_c_ge_h: 0,
            };
            for c in cells {
                s.mean_delta_d_m = s.mean_delta_d_m + c.delta_d_m;
                s.mean_delta_d_h = s.mean_delta_d_h + c.delta_d_h;
                s.mean_delta_d_c = s.mean_delta_d_c + c.delta_d_c;
                s.max_delta_d_m = s.max_delta_d_m.max(c.delta_d_m);
                s.max_delta_d_h = s.max_delta_d_h.max(c.delta_d_h);
                s.max_delta_d_c = s.max_delta_d_c.max(c.delta_d_c);
                if c.delta_d_m >= c.delta_d_h {
                    s.m_ge_h += 1;
                    if c.delta_d_m >= c.delta_d_c && c.delta_d_c >= c.delta_d_h {
                        s.m_ge_c_ge_h += 1;
                    }
                }
            }
            s.mean_delta_d_m = s.mean_delta_d_m / n;
            s.mean_delta_d_h = s.mean_delta_d_h / n;
            s.mean_delta_d_c = s.mean_delta_d_c / n;
            s
        })
        .collect();

    Ok(StudyResult {
        epsilon_range: (lo, hi),
        records,
        summary,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrendRow<T> {
    pub lambda: T,
    pub d_m: T,
    pub d_h: T,
    pub d_c: T,
}

/// Distances of a fixed pair as the balance parameter moves over `lambdas`.
pub fn lambda_trend<T: Scalar>(
    pair: (&CognitiveFuzzyNumber<T>, &CognitiveFuzzyNumber<T>),
    order: Order,
    lambdas: &[T],
) -> Result<Vec<TrendRow<T>>, PerturbationError> {
    let d_m = cf_im(pair.0, pair.1, order);
    let d_h = cf_h(pair.0, pair.1);
    lambdas
        .iter()
        .map(|&lambda| {
            DistanceParams::new(order, lambda)?;
            Ok(TrendRow {
                lambda,
                d_m,
                d_h,
                d_c: combine(d_m, d_h, lambda),
            })
        })
        .collect()
}
