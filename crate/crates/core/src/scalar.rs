//! Floating-point scalar abstraction shared by every numeric routine.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Real scalar usable for fuzzy-number arithmetic.
///
/// Implemented for `f32` and `f64`. Tolerances throughout the crate are
/// expressed in `f64` and converted with [`lit`], so they lose meaning below
/// the scalar's own epsilon; `f64` is the reference precision.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + Sum
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + Serialize
    + DeserializeOwned
    + 'static
{
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Converts an `f64` literal into `T`.
#[inline]
pub fn lit<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("f64 literal representable in every Scalar")
}

/// Converts a count into `T`.
#[inline]
pub fn count<T: Scalar>(n: usize) -> T {
    T::from_usize(n).expect("usize representable in every Scalar")
}

/// `|x|^n` by repeated squaring; `n == 0` yields one.
pub fn abs_powi<T: Scalar>(x: T, n: u32) -> T {
    let mut base = x.abs();
    let mut exp = n;
    let mut acc = T::one();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base;
        }
        exp >>= 1;
        if exp > 0 {
            base = base * base;
        }
    }
    acc
}

/// Principal `n`-th root of a non-negative value.
pub fn root<T: Scalar>(x: T, n: u32) -> T {
    match n {
        1 => x,
        2 => x.sqrt(),
        _ => x.powf(T::one() / lit(f64::from(n))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abs_powi_matches_powi() {
        for &x in &[-1.7_f64, -0.3, 0.0, 0.25, 0.9, 2.0] {
            for n in 0..=12 {
                let want = x.abs().powi(n as i32);
                let got = abs_powi(x, n);
                assert!((got - want).abs() <= 1e-14 * want.max(1.0), "{x}^{n}");
            }
        }
    }

    #[test]
    fn root_inverts_power() {
        for n in 1..=10 {
            let x = 0.37_f64;
            assert!((root(abs_powi(x, n), n) - x).abs() < 1e-14);
        }
        assert_eq!(root(9.0_f32, 2), 3.0);
    }
}
