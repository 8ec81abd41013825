//! Cognitive fuzzy numbers (CFNs) and the tools built on them.
//!
//! * [`cfn`] — the validated `⟨u, v, j⟩` triple, derived degrees and interval form.
//! * [`distance`] — legacy Minkowski, improved Minkowski, Hausdorff and combined distances.
//! * [`score`] — relative-closeness score between the worst and best anchors.
//! * [`perturbation`] — seeded Monte-Carlo robustness studies.
//! * [`pain`] — questionnaire normalization and the joint-degree solver for pain evaluation.
//! * [`export`] and [`cli`] — CSV datasets and the `cfkit` command line.
//!
//! All numeric code is generic over [`Scalar`] (`f32` or `f64`); the aliases
//! below fix the reference precision.

pub mod cfn;
pub mod cli;
pub mod distance;
pub mod error;
pub mod export;
pub mod optimize;
pub mod pain;
pub mod perturbation;
pub mod scalar;
pub mod score;

pub use cfn::{joint_bounds, CfnError, CognitiveFuzzyNumber, IntervalForm};
pub use distance::{
    cf_c, cf_h, cf_im, interval_hausdorff, interval_hausdorff_oracle, legacy_minkowski,
    DistanceParams, Measure, Order,
};
pub use error::Error;
pub use scalar::Scalar;
pub use score::{compare, score, ScoreModel, ScoreResult, Verdict};

/// Double-precision CFN.
pub type Cfn = CognitiveFuzzyNumber<f64>;
/// Single-precision CFN.
pub type Cfn32 = CognitiveFuzzyNumber<f32>;
pub type Interval = IntervalForm<f64>;
pub type Params = DistanceParams<f64>;
pub type Params32 = DistanceParams<f32>;
pub type Score = ScoreResult<f64>;
pub type PainSolution = pain::PainSolution<f64>;
pub type StudyResult = perturbation::StudyResult<f64>;
