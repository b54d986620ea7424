//! The scalar abstraction all formulas are written against.
//!
//! Every quantity in the library is an element of a field with exact (or at
//! least closed) `+ - * /`, so the whole crate is generic over [`Scalar`].
//! The canonical instantiation is [`crate::Rat`] (arbitrary-precision
//! rationals), which makes every identity check a literal `x == 0` test;
//! `f64` also satisfies the bounds for quick inexact experiments.

use std::fmt;

use num_traits::{FromPrimitive, Num, Signed};

/// Field-like scalar: exact ring ops, division, sign, order, conversion from
/// machine integers.
pub trait Scalar:
    Num + Signed + Clone + PartialOrd + FromPrimitive + fmt::Debug + fmt::Display + 'static
{
}

impl<T> Scalar for T where
    T: Num + Signed + Clone + PartialOrd + FromPrimitive + fmt::Debug + fmt::Display + 'static
{
}

/// Embed a machine integer.
pub fn int<T: Scalar>(n: i64) -> T {
    T::from_i64(n).expect("scalar must embed i64")
}

/// Embed a machine-integer ratio. Panics if `den == 0`.
pub fn frac<T: Scalar>(num: i64, den: i64) -> T {
    assert!(den != 0, "frac: zero denominator");
    int::<T>(num) / int::<T>(den)
}

/// Small integer power. Negative exponents require `x != 0`.
pub fn powi<T: Scalar>(x: &T, n: i32) -> T {
    if n < 0 {
        assert!(!x.is_zero(), "powi: negative power of zero");
        return T::one() / powi(x, -n);
    }
    let mut acc = T::one();
    for _ in 0..n {
        acc = acc * x.clone();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    #[test]
    fn powi_matches_repeated_multiplication() {
        let x: Rat = frac(3, 7);
        assert_eq!(powi(&x, 0), Rat::one());
        assert_eq!(powi(&x, 3), x.clone() * x.clone() * x.clone());
        assert_eq!(powi(&x, -2) * powi(&x, 2), Rat::one());
    }

    use num_traits::One;
}
