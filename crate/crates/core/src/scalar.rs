//! Scalar abstraction for weight matrices. Exact rationals are the default; `f64`
//! is accepted for quick probing but offers no certificate.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed};

pub trait Scalar: Num + Signed + Clone + PartialOrd + Debug {
    /// `num / den`; `den` must be non-zero.
    fn from_ratio(num: i64, den: i64) -> Self;

    /// `self <= other`, allowing rounding slack for inexact types.
    fn le_tol(&self, other: &Self) -> bool {
        self <= other
    }

    fn from_usize(v: usize) -> Self {
        Self::from_ratio(v as i64, 1)
    }
}

impl Scalar for f64 {
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn le_tol(&self, other: &Self) -> bool {
        *self <= *other + 1e-9 * other.abs().max(1.0)
    }
}

impl Scalar for Ratio<i64> {
    fn from_ratio(num: i64, den: i64) -> Self {
        Ratio::new(num, den)
    }
}

impl Scalar for BigRational {
    fn from_ratio(num: i64, den: i64) -> Self {
        Ratio::new(BigInt::from(num), BigInt::from(den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratios_are_reduced() {
        assert_eq!(BigRational::from_ratio(2, 4), BigRational::from_ratio(1, 2));
        assert_eq!(Ratio::<i64>::from_ratio(3, 9), Ratio::new(1, 3));
    }

    #[test]
    fn float_comparison_has_slack() {
        let third = f64::from_ratio(1, 3);
        assert!((third * 3.0).le_tol(&1.0));
        assert!(!1.1f64.le_tol(&1.0));
        let exact = BigRational::from_ratio(1, 3);
        assert!(!(exact.clone() + BigRational::from_ratio(1, 1_000_000)).le_tol(&exact));
    }
}
