//! Distances between cognitive fuzzy numbers.
//!
//! * [`legacy_minkowski`] — Minkowski distance over `(u*, v*, j)`.
//! * [`cf_im`] — improved Minkowski distance over `(u*, v*, j, h)`.
//! * [`cf_h`] — Hausdorff distance between the interval forms `[u*, 1 − v*]`.
//! * [`cf_c`] — convex combination `λ·cf_im + (1 − λ)·cf_h`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::cfn::{CognitiveFuzzyNumber, IntervalForm};
use crate::scalar::{abs_powi, root, Scalar};

/// Largest finite Minkowski order accepted.
pub const MAX_ORDER: u32 = 64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("Minkowski order must be an integer in 1..={MAX_ORDER} or `inf`, got {0}")]
    BadOrder(String),
    #[error("balance parameter lambda = {0} is outside [0, 1]")]
    BadLambda(f64),
}

/// Minkowski order: a positive integer or the Chebyshev limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Finite(u32),
    Chebyshev,
}

impl Order {
    pub fn new(p: u32) -> Result<Self, ParamError> {
        if (1..=MAX_ORDER).contains(&p) {
            Ok(Order::Finite(p))
        } else {
            Err(ParamError::BadOrder(p.to_string()))
        }
    }

    /// Orders `1..=n`, as used by the sweeps.
    pub fn range(n: u32) -> Vec<Order> {
        (1..=n.min(MAX_ORDER)).map(Order::Finite).collect()
    }

    /// `p`-norm of a list of non-negative terms.
    fn norm<T: Scalar>(self, terms: &[T]) -> T {
        match self {
            Order::Finite(p) => {
                let sum: T = terms.iter().map(|&t| abs_powi(t, p)).sum();
                root(sum, p)
            }
            Order::Chebyshev => terms.iter().fold(T::zero(), |acc, &t| acc.max(t.abs())),
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(p) => write!(f, "{p}"),
            Order::Chebyshev => f.write_str("inf"),
        }
    }
}

impl FromStr for Order {
    type Err = ParamError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "chebyshev" | "∞" => Ok(Order::Chebyshev),
            other => other
                .parse::<u32>()
                .map_err(|_| ParamError::BadOrder(s.to_owned()))
                .and_then(Order::new),
        }
    }
}

impl Serialize for Order {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Order::Finite(p) => s.serialize_u32(*p),
            Order::Chebyshev => s.serialize_str("inf"),
        }
    }
}

/// Accepts an integer order or one of the Chebyshev spellings.
impl<'de> Deserialize<'de> for Order {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(u32),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Int(p) => Order::new(p),
            Repr::Text(s) => s.parse(),
        }
        .map_err(serde::de::Error::custom)
    }
}

/// Minkowski order and balance parameter.
///
/// Only [`cf_im`], [`cf_c`] and [`legacy_minkowski`] read `order`; only
/// [`cf_c`] reads `lambda`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistanceParams<T> {
    order: Order,
    lambda: T,
}

impl<T: Scalar> DistanceParams<T> {
    pub fn new(order: Order, lambda: T) -> Result<Self, ParamError> {
        if !(lambda >= T::zero() && lambda <= T::one()) {
            return Err(ParamError::BadLambda(lambda.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(Self { order, lambda })
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn lambda(&self) -> T {
        self.lambda
    }
}

/// Minkowski distance over `(u*, v*, j)`, ignoring hesitancy.
pub fn legacy_minkowski<T: Scalar>(
    a: &CognitiveFuzzyNumber<T>,
    b: &CognitiveFuzzyNumber<T>,
    order: Order,
) -> T {
    let terms = [
        (a.u_star() - b.u_star()).abs(),
        (a.v_star() - b.v_star()).abs(),
        (a.j() - b.j()).abs(),
    ];
    order.norm(&terms)
}

/// Improved Minkowski distance over `(u*, v*, j, h)`.
pub fn cf_im<T: Scalar>(
    a: &CognitiveFuzzyNumber<T>,
    b: &CognitiveFuzzyNumber<T>,
    order: Order,
) -> T {
    let terms = [
        (a.u_star() - b.u_star()).abs(),
        (a.v_star() - b.v_star()).abs(),
        (a.j() - b.j()).abs(),
        (a.hesitancy() - b.hesitancy()).abs(),
    ];
    order.norm(&terms)
}

/// Hausdorff distance of the interval forms: `max(|Δu*|, |Δ(1 − v*)|)`.
pub fn cf_h<T: Scalar>(a: &CognitiveFuzzyNumber<T>, b: &CognitiveFuzzyNumber<T>) -> T {
    interval_hausdorff(&a.to_interval(), &b.to_interval())
}

/// Closed-form Hausdorff distance between two closed intervals.
pub fn interval_hausdorff<T: Scalar>(a: &IntervalForm<T>, b: &IntervalForm<T>) -> T {
    (a.lo - b.lo).abs().max((a.hi - b.hi).abs())
}

/// Hausdorff distance evaluated from its sup–inf definition.
///
/// The distance from a point to a closed interval is convex in the point, so
/// each directed supremum is attained at an endpoint of the source interval.
pub fn interval_hausdorff_oracle<T: Scalar>(a: &IntervalForm<T>, b: &IntervalForm<T>) -> T {
    fn point_to_interval<T: Scalar>(x: T, set: &IntervalForm<T>) -> T {
        if x < set.lo {
            set.lo - x
        } else if x > set.hi {
            x - set.hi
        } else {
            T::zero()
        }
    }
    fn directed<T: Scalar>(from: &IntervalForm<T>, to: &IntervalForm<T>) -> T {
        point_to_interval(from.lo, to).max(point_to_interval(from.hi, to))
    }
    directed(a, b).max(directed(b, a))
}

/// Combined distance `λ·cf_im + (1 − λ)·cf_h`.
pub fn cf_c<T: Scalar>(
    a: &CognitiveFuzzyNumber<T>,
    b: &CognitiveFuzzyNumber<T>,
    params: &DistanceParams<T>,
) -> T {
    combine(cf_im(a, b, params.order), cf_h(a, b), params.lambda)
}

#[inline]
pub(crate) fn combine<T: Scalar>(d_m: T, d_h: T, lambda: T) -> T {
    lambda * d_m + (T::one() - lambda) * d_h
}

/// Selector over the four distances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    Legacy,
    Im,
    H,
    C,
}

impl Measure {
    pub fn eval<T: Scalar>(
        self,
        a: &CognitiveFuzzyNumber<T>,
        b: &CognitiveFuzzyNumber<T>,
        params: &DistanceParams<T>,
    ) -> T {
        match self {
            Measure::Legacy => legacy_minkowski(a, b, params.order),
            Measure::Im => cf_im(a, b, params.order),
            Measure::H => cf_h(a, b),
            Measure::C => cf_c(a, b, params),
        }
    }
}

impl FromStr for Measure {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "legacy" | "m" | "minkowski" => Ok(Measure::Legacy),
            "im" | "cf-im" => Ok(Measure::Im),
            "h" | "cf-h" => Ok(Measure::H),
            "c" | "cf-c" => Ok(Measure::C),
            _ => Err(format!(
                "unknown measure {s:?}; expected legacy, im, h or c"
            )),
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Measure::Legacy => "legacy",
            Measure::Im => "im",
            Measure::H => "h",
            Measure::C => "c",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    type Cfn = CognitiveFuzzyNumber<f64>;

    fn cfn(u: f64, v: f64, j: f64) -> Cfn {
        Cfn::new(u, v, j).unwrap()
    }

    fn params(p: u32, lambda: f64) -> DistanceParams<f64> {
        DistanceParams::new(Order::new(p).unwrap(), lambda).unwrap()
    }

    fn pair() -> (Cfn, Cfn) {
        (cfn(0.8, 0.4, 0.32), cfn(0.1, 0.9, 0.09))
    }

    #[test]
    fn legacy_ties_on_hesitancy_example() {
        let best = Cfn::best();
        let p1 = Order::Finite(1);
        assert_abs_diff_eq!(
            legacy_minkowski(&cfn(0.3, 0.2, 0.1), &best, p1),
            1.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            legacy_minkowski(&cfn(0.4, 0.3, 0.1), &best, p1),
            1.0,
            epsilon = 1e-12
        );
        let (a, b) = pair();
        // 0.47 + 0.73 + 0.23
        assert_abs_diff_eq!(legacy_minkowski(&a, &b, p1), 1.43, epsilon = 1e-12);
        assert_eq!(legacy_minkowski(&a, &a, p1), 0.0);
    }

    #[test]
    fn improved_minkowski_breaks_the_tie() {
        let best = Cfn::best();
        let p1 = Order::Finite(1);
        assert_abs_diff_eq!(cf_im(&cfn(0.3, 0.2, 0.1), &best, p1), 1.6, epsilon = 1e-12);
        assert_abs_diff_eq!(cf_im(&cfn(0.4, 0.3, 0.1), &best, p1), 1.4, epsilon = 1e-12);
    }

    #[test]
    fn improved_minkowski_example_values() {
        let (a, b) = pair();
        assert_abs_diff_eq!(cf_im(&a, &b, Order::Finite(1)), 1.46, epsilon = 1e-12);
        assert_abs_diff_eq!(cf_im(&a, &b, Order::Finite(2)), 0.8987, epsilon = 5e-4);
        assert_abs_diff_eq!(cf_im(&a, &b, Order::Finite(3)), 0.7964, epsilon = 5e-4);
        assert_eq!(cf_im(&a, &a, Order::Finite(2)), 0.0);
        // Chebyshev picks the largest mass difference, |Δv*| = 0.73.
        assert_abs_diff_eq!(cf_im(&a, &b, Order::Chebyshev), 0.73, epsilon = 1e-12);
        assert_abs_diff_eq!(
            legacy_minkowski(&a, &b, Order::Chebyshev),
            0.73,
            epsilon = 1e-12
        );
    }

    #[test]
    fn hausdorff_values() {
        let (a, b) = pair();
        assert_abs_diff_eq!(cf_h(&a, &b), 0.73, epsilon = 1e-12);
        assert_eq!(cf_h(&a, &a), 0.0);
        assert_eq!(cf_h(&Cfn::best(), &Cfn::worst()), 1.0);
    }

    #[test]
    fn oracle_values() {
        let iv = |lo, hi| IntervalForm::new(lo, hi).unwrap();
        assert_abs_diff_eq!(
            interval_hausdorff_oracle(&iv(0.48, 0.92), &iv(0.01, 0.19)),
            0.73,
            epsilon = 1e-12
        );
        assert_eq!(interval_hausdorff_oracle(&iv(0.2, 0.6), &iv(0.2, 0.6)), 0.0);
        assert_eq!(interval_hausdorff_oracle(&iv(0.0, 1.0), &iv(1.0, 1.0)), 1.0);
        // nested intervals: only the outer endpoints matter
        assert_abs_diff_eq!(
            interval_hausdorff_oracle(&iv(0.0, 1.0), &iv(0.4, 0.5)),
            0.5,
            epsilon = 1e-15
        );
    }

    #[test]
    fn combined_values() {
        let (a, b) = pair();
        assert_abs_diff_eq!(cf_c(&a, &b, &params(1, 0.5)), 1.095, epsilon = 1e-12);
        assert_abs_diff_eq!(cf_c(&a, &b, &params(2, 0.5)), 0.81435, epsilon = 1e-4);
        assert_eq!(cf_c(&a, &b, &params(2, 0.0)), cf_h(&a, &b));
        assert_eq!(
            cf_c(&a, &b, &params(2, 1.0)),
            cf_im(&a, &b, Order::Finite(2))
        );
    }

    #[test]
    fn params_validation() {
        assert!(Order::new(0).is_err());
        assert!(Order::new(65).is_err());
        assert_eq!("inf".parse::<Order>().unwrap(), Order::Chebyshev);
        assert_eq!("3".parse::<Order>().unwrap(), Order::Finite(3));
        assert!("2.5".parse::<Order>().is_err());
        assert!(DistanceParams::new(Order::Finite(1), 1.5).is_err());
        assert!(DistanceParams::new(Order::Finite(1), f64::NAN).is_err());
        assert!(DistanceParams::new(Order::Finite(1), 0.0).is_ok());
    }

    #[test]
    fn measure_dispatch() {
        let (a, b) = pair();
        let prm = params(1, 0.5);
        assert_eq!(Measure::C.eval(&a, &b, &prm), cf_c(&a, &b, &prm));
        assert_eq!(Measure::H.eval(&a, &b, &prm), cf_h(&a, &b));
        assert_eq!("legacy".parse::<Measure>().unwrap(), Measure::Legacy);
        assert!("x".parse::<Measure>().is_err());
    }

    #[test]
    fn improved_minkowski_non_increasing_in_order() {
        let (a, b) = pair();
        let values: Vec<f64> = (1..=10).map(|p| cf_im(&a, &b, Order::Finite(p))).collect();
        assert!(values.windows(2).all(|w| w[1] <= w[0] + 1e-15));
        assert!(cf_im(&a, &b, Order::Chebyshev) <= values[9] + 1e-15);
    }

    #[test]
    fn single_precision_distances() {
        let a = CognitiveFuzzyNumber::<f32>::new(0.8, 0.4, 0.32).unwrap();
        let b = CognitiveFuzzyNumber::<f32>::new(0.1, 0.9, 0.09).unwrap();
        let prm = DistanceParams::new(Order::Finite(1), 0.5f32).unwrap();
        assert!((cf_c(&a, &b, &prm) - 1.095).abs() < 1e-5);
    }
}
