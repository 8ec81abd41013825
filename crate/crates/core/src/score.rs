//! Relative-closeness score of a CFN between the worst anchor `⟨0,1,0⟩` and
//! the best anchor `⟨1,0,0⟩`.

use std::cmp::Ordering;

use serde::Serialize;
use thiserror::Error;

use crate::cfn::CognitiveFuzzyNumber;
use crate::distance::{cf_c, legacy_minkowski, DistanceParams, Order};
use crate::scalar::{lit, Scalar};

/// Scores closer than this compare as equal.
pub const TIE_TOLERANCE: f64 = 1e-12;

const DEGENERATE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScoreError {
    #[error("distances to both anchors sum to {0}; score is undefined")]
    DegenerateDenominator(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScoreResult<T> {
    pub s: T,
    pub d_to_worst: T,
    pub d_to_best: T,
}

/// Which distance the score is built from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScoreModel<T> {
    /// Combined distance with the given order and balance.
    Combined(DistanceParams<T>),
    /// Minkowski distance over `(u*, v*, j)` only.
    Legacy(Order),
}

impl<T: Scalar> ScoreModel<T> {
    pub fn distance(&self, a: &CognitiveFuzzyNumber<T>, b: &CognitiveFuzzyNumber<T>) -> T {
        match self {
            ScoreModel::Combined(params) => cf_c(a, b, params),
            ScoreModel::Legacy(order) => legacy_minkowski(a, b, *order),
        }
    }

    pub fn score(&self, f: &CognitiveFuzzyNumber<T>) -> Result<ScoreResult<T>, ScoreError> {
        let d_to_worst = self.distance(f, &CognitiveFuzzyNumber::worst());
        let d_to_best = self.distance(f, &CognitiveFuzzyNumber::best());
        let total = d_to_worst + d_to_best;
        if total.is_nan() || total < lit(DEGENERATE_TOLERANCE) {
            return Err(ScoreError::DegenerateDenominator(
                total.to_f64().unwrap_or(f64::NAN),
            ));
        }
        Ok(ScoreResult {
            s: d_to_worst / total,
            d_to_worst,
            d_to_best,
        })
    }
}

/// Combined-distance score `d_worst / (d_worst + d_best)`.
pub fn score<T: Scalar>(
    f: &CognitiveFuzzyNumber<T>,
    params: &DistanceParams<T>,
) -> Result<ScoreResult<T>, ScoreError> {
    ScoreModel::Combined(*params).score(f)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    FirstBetter,
    SecondBetter,
    Equal,
}

impl From<Verdict> for Ordering {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::FirstBetter => Ordering::Greater,
            Verdict::SecondBetter => Ordering::Less,
            Verdict::Equal => Ordering::Equal,
        }
    }
}

pub fn compare<T: Scalar>(
    a: &CognitiveFuzzyNumber<T>,
    b: &CognitiveFuzzyNumber<T>,
    params: &DistanceParams<T>,
) -> Result<Verdict, ScoreError> {
    let sa = score(a, params)?.s;
    let sb = score(b, params)?.s;
    Ok(if (sa - sb).abs() <= lit(TIE_TOLERANCE) {
        Verdict::Equal
    } else if sa > sb {
        Verdict::FirstBetter
    } else {
        Verdict::SecondBetter
    })
}
