//! Cognitive fuzzy numbers and their interval form.
//!
//! A CFN `⟨u, v, j⟩` carries a membership degree `u`, a non-membership degree
//! `v` and the joint degree `j` by which the two overlap. The overlap-free
//! degrees `u* = u − j`, `v* = v − j` and the hesitancy `h = 1 − u − v + j`
//! partition the unit mass: `u* + v* + j + h = 1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::{lit, Scalar};

/// Inputs outside their admissible range by at most this much are clamped.
pub const CLAMP_TOLERANCE: f64 = 1e-9;

/// Component-wise tolerance used by [`CognitiveFuzzyNumber::approx_eq`].
pub const EQ_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CfnError {
    #[error("{name} = {value} is outside [0, 1]")]
    OutOfRange { name: &'static str, value: f64 },
    #[error("joint degree {j} is outside the admissible interval [{lo}, {hi}]")]
    JointBoundViolation { j: f64, lo: f64, hi: f64 },
    #[error("cannot parse CFN from {0:?}")]
    Parse(String),
}

/// A validated cognitive fuzzy number `⟨u, v, j⟩`.
///
/// Only the raw triple is stored; derived degrees are recomputed on demand.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawCfn<T>", bound = "T: Scalar")]
pub struct CognitiveFuzzyNumber<T> {
    u: T,
    v: T,
    j: T,
}

#[derive(Deserialize)]
#[serde(bound = "T: Scalar")]
struct RawCfn<T> {
    u: T,
    v: T,
    j: T,
}

impl<T: Scalar> TryFrom<RawCfn<T>> for CognitiveFuzzyNumber<T> {
    type Error = CfnError;

    fn try_from(raw: RawCfn<T>) -> Result<Self, Self::Error> {
        Self::new(raw.u, raw.v, raw.j)
    }
}

/// The overlap-free degrees and hesitancy of a CFN.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Derived<T> {
    pub u_star: T,
    pub v_star: T,
    pub h: T,
}

/// Closed interval `[lo, hi]` inside `[0, 1]`.
///
/// For a CFN this is `[u*, 1 − v*]`: the certain degree of being good up to
/// the largest degree still compatible with the evidence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IntervalForm<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Scalar> IntervalForm<T> {
    pub fn new(lo: T, hi: T) -> Result<Self, CfnError> {
        let lo = unit(lo, "lo")?;
        let hi = unit(hi, "hi")?;
        if lo > hi {
            return Err(CfnError::OutOfRange {
                name: "lo",
                value: lo.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { lo, hi })
    }

    pub fn width(&self) -> T {
        self.hi - self.lo
    }
}

/// Admissible interval `[max(0, u + v − 1), min(u, v)]` for the joint degree.
pub fn joint_bounds<T: Scalar>(u: T, v: T) -> Result<(T, T), CfnError> {
    let u = unit(u, "u")?;
    let v = unit(v, "v")?;
    Ok(raw_joint_bounds(u, v))
}

fn raw_joint_bounds<T: Scalar>(u: T, v: T) -> (T, T) {
    let lo = (u + v - T::one()).max(T::zero());
    let hi = u.min(v);
    // u + v - 1 <= min(u, v) holds in exact arithmetic; keep it under rounding.
    (lo.min(hi), hi)
}

/// Validates `x ∈ [0, 1]`, clamping violations within [`CLAMP_TOLERANCE`].
fn unit<T: Scalar>(x: T, name: &'static str) -> Result<T, CfnError> {
    clamp_into(x, T::zero(), T::one()).ok_or(CfnError::OutOfRange {
        name,
        value: x.to_f64().unwrap_or(f64::NAN),
    })
}

fn clamp_into<T: Scalar>(x: T, lo: T, hi: T) -> Option<T> {
    let tol = lit::<T>(CLAMP_TOLERANCE);
    if x.is_nan() || x < lo - tol || x > hi + tol {
        None
    } else {
        Some(x.max(lo).min(hi))
    }
}

impl<T: Scalar> CognitiveFuzzyNumber<T> {
    pub fn new(u: T, v: T, j: T) -> Result<Self, CfnError> {
        let u = unit(u, "u")?;
        let v = unit(v, "v")?;
        let j = unit(j, "j")?;
        let (lo, hi) = raw_joint_bounds(u, v);
        let j = clamp_into(j, lo, hi).ok_or_else(|| CfnError::JointBoundViolation {
            j: j.to_f64().unwrap_or(f64::NAN),
            lo: lo.to_f64().unwrap_or(f64::NAN),
            hi: hi.to_f64().unwrap_or(f64::NAN),
        })?;
        Ok(Self { u, v, j })
    }

    /// Best-performing CFN `⟨1, 0, 0⟩`.
    pub fn best() -> Self {
        Self {
            u: T::one(),
            v: T::zero(),
            j: T::zero(),
        }
    }

    /// Worst-performing CFN `⟨0, 1, 0⟩`.
    pub fn worst() -> Self {
        Self {
            u: T::zero(),
            v: T::one(),
            j: T::zero(),
        }
    }

    #[inline]
    pub fn u(&self) -> T {
        self.u
    }

    #[inline]
    pub fn v(&self) -> T {
        self.v
    }

    #[inline]
    pub fn j(&self) -> T {
        self.j
    }

    #[inline]
    pub fn u_star(&self) -> T {
        self.u - self.j
    }

    #[inline]
    pub fn v_star(&self) -> T {
        self.v - self.j
    }

    /// Hesitancy degree `1 − u − v + j`.
    #[inline]
    pub fn hesitancy(&self) -> T {
        (T::one() - self.u - self.v + self.j).max(T::zero())
    }

    pub fn derived(&self) -> Derived<T> {
        Derived {
            u_star: self.u_star(),
            v_star: self.v_star(),
            h: self.hesitancy(),
        }
    }

    /// `(u*, v*, j, h)`, the four masses that sum to one.
    pub fn masses(&self) -> [T; 4] {
        [self.u_star(), self.v_star(), self.j, self.hesitancy()]
    }

    pub fn to_interval(&self) -> IntervalForm<T> {
        IntervalForm {
            lo: self.u_star(),
            hi: T::one() - self.v_star(),
        }
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        let tol = lit::<T>(EQ_TOLERANCE);
        (self.u - other.u).abs() <= tol
            && (self.v - other.v).abs() <= tol
            && (self.j - other.j).abs() <= tol
    }

    pub fn to_f64(&self) -> CognitiveFuzzyNumber<f64> {
        CognitiveFuzzyNumber {
            u: self.u.to_f64().unwrap_or(f64::NAN),
            v: self.v.to_f64().unwrap_or(f64::NAN),
            j: self.j.to_f64().unwrap_or(f64::NAN),
        }
    }
}

/// Rounds to six significant digits and prints the shortest representation.
fn six_digits(x: f64) -> String {
    let rounded: f64 = format!("{x:.5e}").parse().unwrap_or(x);
    if rounded == 0.0 {
        "0".to_owned()
    } else {
        rounded.to_string()
    }
}

/// `⟨u,v,j⟩` with up to six significant digits; the alternate flag (`{:#}`)
/// prints every component at full round-trip precision.
impl<T: Scalar> fmt::Display for CognitiveFuzzyNumber<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.to_f64();
        if f.alternate() {
            write!(f, "⟨{},{},{}⟩", c.u, c.v, c.j)
        } else {
            write!(
                f,
                "⟨{},{},{}⟩",
                six_digits(c.u),
                six_digits(c.v),
                six_digits(c.j)
            )
        }
    }
}

/// Accepts `⟨u,v,j⟩`, `<u,v,j>`, `(u,v,j)`, bare `u,v,j` or a JSON object
/// `{"u":…,"v":…,"j":…}`.
impl<T: Scalar> FromStr for CognitiveFuzzyNumber<T> {
    type Err = CfnError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed.starts_with('{') {
            return serde_json::from_str::<RawCfn<T>>(trimmed)
                .map_err(|_| CfnError::Parse(s.to_owned()))
                .and_then(Self::try_from);
        }
        let inner = trimmed
            .trim_start_matches(['⟨', '<', '('])
            .trim_end_matches(['⟩', '>', ')']);
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(CfnError::Parse(s.to_owned()));
        }
        let mut values = [T::zero(); 3];
        for (slot, part) in values.iter_mut().zip(&parts) {
            let x: f64 = part.parse().map_err(|_| CfnError::Parse(s.to_owned()))?;
            *slot = T::from_f64(x).ok_or_else(|| CfnError::Parse(s.to_owned()))?;
        }
        Self::new(values[0], values[1], values[2])
    }
}
