//! Bounded one-dimensional minimization: dense grid scan, then ternary
//! refinement of the bracket around the best grid point.

use thiserror::Error;

use crate::scalar::{count, lit, Scalar};

/// Cap on refinement steps; each step shrinks the bracket to 2/3.
const MAX_REFINE_STEPS: usize = 200;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OptimizeError {
    #[error("feasible interval [{lo}, {hi}] is empty")]
    EmptyFeasibleRegion { lo: f64, hi: f64 },
    #[error("grid needs at least 2 points, got {0}")]
    GridTooCoarse(usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum<T> {
    pub x: T,
    pub value: T,
}

/// Minimizes `objective` over `[lo, hi]`.
///
/// Grid points include both bounds exactly. The refined point only replaces
/// the best grid point when it is strictly better, so optima on a bound are
/// reported at the bound itself.
pub fn minimize_bounded<T, F>(
    mut objective: F,
    lo: T,
    hi: T,
    grid_points: usize,
    tolerance: T,
) -> Result<Minimum<T>, OptimizeError>
where
    T: Scalar,
    F: FnMut(T) -> T,
{
    if lo.is_nan() || hi.is_nan() || lo > hi {
        return Err(OptimizeError::EmptyFeasibleRegion {
            lo: lo.to_f64().unwrap_or(f64::NAN),
            hi: hi.to_f64().unwrap_or(f64::NAN),
        });
    }
    if grid_points < 2 {
        return Err(OptimizeError::GridTooCoarse(grid_points));
    }
    if lo == hi {
        return Ok(Minimum {
            x: lo,
            value: objective(lo),
        });
    }

    let last = grid_points - 1;
    let span = hi - lo;
    let node = |k: usize| {
        if k == last {
            hi
        } else {
            lo + span * count::<T>(k) / count::<T>(last)
        }
    };

    let mut best_k = 0;
    let mut best = Minimum {
        x: lo,
        value: objective(lo),
    };
    for k in 1..grid_points {
        let x = node(k);
        let value = objective(x);
        if value < best.value {
            best = Minimum { x, value };
            best_k = k;
        }
    }

    let mut a = node(best_k.saturating_sub(1));
    let mut b = node((best_k + 1).min(last));
    let third = lit::<T>(1.0 / 3.0);
    for _ in 0..MAX_REFINE_STEPS {
        if b - a <= tolerance {
            break;
        }
        let m1 = a + (b - a) * third;
        let m2 = b - (b - a) * third;
        if objective(m1) <= objective(m2) {
            b = m2;
        } else {
            a = m1;
        }
    }
    let mid = a + (b - a) * lit(0.5);
    for x in [a, mid, b] {
        let value = objective(x);
        if value < best.value {
            best = Minimum { x, value };
        }
    }
    Ok(best)
}
