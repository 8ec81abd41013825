//! Cancer-pain evaluation from a patient questionnaire and a nurse's
//! face-scale assessment.
//!
//! The patient rates seven pain interferences on 0–10; their normalized sum
//! is the patient's pain. The nurse reports how similar the patient's face is
//! to the no-pain face (membership `u`) and to the worst-pain face
//! (non-membership `v`). The nurse's confusion `j` is unknown; it is chosen in
//! `[max(0, u + v − 1), min(u, v)]` so that the nurse's pain `1 − s` lies as
//! close as possible to the patient's, i.e. minimizing `(1 − pain − s(j))²`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cfn::{joint_bounds, CfnError, CognitiveFuzzyNumber};
use crate::distance::{DistanceParams, Order, ParamError};
use crate::optimize::{minimize_bounded, OptimizeError};
use crate::scalar::{count, lit, Scalar};
use crate::score::{ScoreError, ScoreModel};

pub const ITEM_COUNT: usize = 7;
pub const ITEM_MAX: i64 = 10;
pub const MIN_GRID_POINTS: usize = 101;
pub const DEFAULT_GRID_POINTS: usize = 10_001;
pub const REFINE_TOLERANCE: f64 = 1e-8;
pub const DEFAULT_CONFUSION_THRESHOLD: f64 = 0.9;

/// Questionnaire items, in order.
pub const ITEM_NAMES: [&str; ITEM_COUNT] = [
    "general activity",
    "mood",
    "walking ability",
    "normal work",
    "relations with other people",
    "sleep",
    "enjoyment of life",
];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PainError {
    #[error("expected {ITEM_COUNT} questionnaire items, got {0}")]
    BadItemCount(usize),
    #[error("item {index} ({name}) = {value} is outside 0..={ITEM_MAX}", name = ITEM_NAMES[*index])]
    ItemOutOfRange { index: usize, value: i64 },
    #[error("{name} = {value} is outside [0, 1]")]
    OutOfRange { name: &'static str, value: f64 },
    #[error("grid needs at least {MIN_GRID_POINTS} points, got {0}")]
    GridTooCoarse(usize),
    #[error(transparent)]
    Cfn(#[from] CfnError),
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Score(#[from] ScoreError),
    #[error(transparent)]
    Optimize(#[from] OptimizeError),
}

fn check_unit<T: Scalar>(x: T, name: &'static str) -> Result<T, PainError> {
    if x >= T::zero() && x <= T::one() {
        Ok(x)
    } else {
        Err(PainError::OutOfRange {
            name,
            value: x.to_f64().unwrap_or(f64::NAN),
        })
    }
}

/// `sum(items) / 70`.
pub fn normalize_patient_score<T: Scalar>(items: &[i64]) -> Result<T, PainError> {
    if items.len() != ITEM_COUNT {
        return Err(PainError::BadItemCount(items.len()));
    }
    let mut total = 0;
    for (index, &value) in items.iter().enumerate() {
        if !(0..=ITEM_MAX).contains(&value) {
            return Err(PainError::ItemOutOfRange { index, value });
        }
        total += value;
    }
    Ok(count::<T>(total as usize) / count(ITEM_COUNT * ITEM_MAX as usize))
}

#[derive(Debug, Clone, PartialEq)]
pub struct PainAssessment<T> {
    patient_items: [u8; ITEM_COUNT],
    sim_scale0: T,
    sim_scale10: T,
}

impl<T: Scalar> PainAssessment<T> {
    pub fn new(items: &[i64], sim_scale0: T, sim_scale10: T) -> Result<Self, PainError> {
        normalize_patient_score::<T>(items)?;
        let mut patient_items = [0u8; ITEM_COUNT];
        for (slot, &v) in patient_items.iter_mut().zip(items) {
            *slot = v as u8;
        }
        Ok(Self {
            patient_items,
            sim_scale0: check_unit(sim_scale0, "sim_scale0")?,
            sim_scale10: check_unit(sim_scale10, "sim_scale10")?,
        })
    }

    pub fn patient_items(&self) -> &[u8; ITEM_COUNT] {
        &self.patient_items
    }

    /// Membership: similarity to the no-pain face.
    pub fn u(&self) -> T {
        self.sim_scale0
    }

    /// Non-membership: similarity to the worst-pain face.
    pub fn v(&self) -> T {
        self.sim_scale10
    }

    pub fn patient_pain(&self) -> T {
        let items: Vec<i64> = self.patient_items.iter().map(|&i| i64::from(i)).collect();
        normalize_patient_score(&items).expect("validated on construction")
    }
}

/// JSON input: `{"patient_items":[…7…], "sim_scale0":x, "sim_scale10":y, "p":N, "lambda":L}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssessmentInput {
    pub patient_items: Vec<i64>,
    pub sim_scale0: f64,
    pub sim_scale10: f64,
    #[serde(default = "default_order")]
    pub p: Order,
    #[serde(default = "default_lambda")]
    pub lambda: f64,
}

fn default_order() -> Order {
    Order::Finite(2)
}

fn default_lambda() -> f64 {
    0.5
}

impl AssessmentInput {
    pub fn assessment(&self) -> Result<PainAssessment<f64>, PainError> {
        PainAssessment::new(&self.patient_items, self.sim_scale0, self.sim_scale10)
    }

    pub fn params(&self) -> Result<DistanceParams<f64>, PainError> {
        Ok(DistanceParams::new(self.p, self.lambda)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Recommendation {
    AcceptNurseScore,
    SecondNurseSuggested,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PainSolution<T> {
    pub j_opt: T,
    pub j_lo: T,
    pub j_hi: T,
    pub s_opt: T,
    pub d_to_worst: T,
    pub d_to_best: T,
    /// `1 − s_opt`.
    pub nurse_pain: T,
    pub patient_pain: T,
    /// `nurse_pain − patient_pain`, equivalently `(1 − patient_pain) − s_opt`.
    pub gap: T,
    /// `(j_opt − j_lo) / (j_hi − j_lo)`, zero on a degenerate interval.
    pub confusion_ratio: T,
    /// Verdict at [`DEFAULT_CONFUSION_THRESHOLD`]; see [`interpret`].
    pub recommendation: Recommendation,
}

/// Chooses the joint degree whose score best matches the patient's pain,
/// using the combined distance with `params`.
pub fn solve_programming1<T: Scalar>(
    u: T,
    v: T,
    patient_pain: T,
    params: &DistanceParams<T>,
    grid_points: usize,
) -> Result<PainSolution<T>, PainError> {
    solve_with_model(
        u,
        v,
        patient_pain,
        &ScoreModel::Combined(*params),
        grid_points,
    )
}

/// As [`solve_programming1`], with any score model.
pub fn solve_with_model<T: Scalar>(
    u: T,
    v: T,
    patient_pain: T,
    model: &ScoreModel<T>,
    grid_points: usize,
) -> Result<PainSolution<T>, PainError> {
    let patient_pain = check_unit(patient_pain, "patient_pain")?;
    if grid_points < MIN_GRID_POINTS {
        return Err(PainError::GridTooCoarse(grid_points));
    }
    let (j_lo, j_hi) = joint_bounds(u, v)?;
    let target = T::one() - patient_pain;

    let score_at =
        |j: T| -> Result<_, PainError> { Ok(model.score(&CognitiveFuzzyNumber::new(u, v, j)?)?) };
    let objective = |j: T| match score_at(j) {
        Ok(r) => (target - r.s) * (target - r.s),
        Err(_) => T::infinity(),
    };
    let best = minimize_bounded(objective, j_lo, j_hi, grid_points, lit(REFINE_TOLERANCE))?;
    let result = score_at(best.x)?;

    let confusion_ratio = if j_hi > j_lo {
        ((best.x - j_lo) / (j_hi - j_lo))
            .max(T::zero())
            .min(T::one())
    } else {
        T::zero()
    };
    let nurse_pain = T::one() - result.s;
    let mut solution = PainSolution {
        j_opt: best.x,
        j_lo,
        j_hi,
        s_opt: result.s,
        d_to_worst: result.d_to_worst,
        d_to_best: result.d_to_best,
        nurse_pain,
        patient_pain,
        gap: nurse_pain - patient_pain,
        confusion_ratio,
        recommendation: Recommendation::AcceptNurseScore,
    };
    solution.recommendation = recommend(&solution, lit(DEFAULT_CONFUSION_THRESHOLD));
    Ok(solution)
}

fn recommend<T: Scalar>(solution: &PainSolution<T>, threshold: T) -> Recommendation {
    if solution.confusion_ratio >= threshold {
        Recommendation::SecondNurseSuggested
    } else {
        Recommendation::AcceptNurseScore
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Interpretation<T> {
    pub recommendation: Recommendation,
    /// The larger of the nurse's and the patient's pain, so an under-reported
    /// questionnaire never lowers the result.
    pub final_pain_score: T,
}

/// A high confusion ratio flags the nurse's assessment for a second opinion.
pub fn interpret<T: Scalar>(
    solution: &PainSolution<T>,
    confusion_threshold: T,
) -> Result<Interpretation<T>, PainError> {
    let threshold = check_unit(confusion_threshold, "threshold")?;
    Ok(Interpretation {
        recommendation: recommend(solution, threshold),
        final_pain_score: solution.nurse_pain.max(solution.patient_pain),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SweepMode {
    #[serde(rename = "cf-c")]
    Combined,
    #[serde(rename = "legacy")]
    Legacy,
}

/// One sweep cell. `lambda` is empty in legacy mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow<T> {
    pub mode: SweepMode,
    pub p: Order,
    pub lambda: Option<T>,
    pub j_opt: T,
    pub s_opt: T,
    pub gap: T,
}

fn row<T: Scalar>(
    mode: SweepMode,
    p: Order,
    lambda: Option<T>,
    sol: &PainSolution<T>,
) -> SweepRow<T> {
    SweepRow {
        mode,
        p,
        lambda,
        j_opt: sol.j_opt,
        s_opt: sol.s_opt,
        gap: sol.gap,
    }
}

/// Solves every `(p, λ)` cell with the combined-distance score, ordered by
/// `p` then `λ`.
pub fn sensitivity_sweep<T: Scalar>(
    u: T,
    v: T,
    patient_pain: T,
    orders: &[Order],
    lambdas: &[T],
    grid_points: usize,
) -> Result<Vec<SweepRow<T>>, PainError> {
    let cells: Vec<(Order, T)> = orders
        .iter()
        .flat_map(|&p| lambdas.iter().map(move |&l| (p, l)))
        .collect();
    cells
        .into_par_iter()
        .map(|(p, lambda)| {
            let params = DistanceParams::new(p, lambda)?;
            let sol = solve_programming1(u, v, patient_pain, &params, grid_points)?;
            Ok(row(SweepMode::Combined, p, Some(lambda), &sol))
        })
        .collect()
}

/// Solves each order with the score built on the hesitancy-free Minkowski
/// distance.
pub fn legacy_comparison_sweep<T: Scalar>(
    u: T,
    v: T,
    patient_pain: T,
    orders: &[Order],
    grid_points: usize,
) -> Result<Vec<SweepRow<T>>, PainError> {
    orders
        .par_iter()
        .map(|&p| {
            let sol = solve_with_model(u, v, patient_pain, &ScoreModel::Legacy(p), grid_points)?;
            Ok(row(SweepMode::Legacy, p, None, &sol))
        })
        .collect()
}

/// `max(gap) − min(gap)`; zero for an empty sweep.
pub fn gap_spread<T: Scalar>(rows: &[SweepRow<T>]) -> T {
    let mut it = rows.iter().map(|r| r.gap);
    match it.next() {
        None => T::zero(),
        Some(first) => {
            let (lo, hi) = it.fold((first, first), |(lo, hi), g| (lo.min(g), hi.max(g)));
            hi - lo
        }
    }
}

/// Evenly spaced grid `0, 1/n, …, 1`.
pub fn unit_grid<T: Scalar>(steps: usize) -> Vec<T> {
    (0..=steps)
        .map(|k| count::<T>(k) / count::<T>(steps))
        .collect()
}
