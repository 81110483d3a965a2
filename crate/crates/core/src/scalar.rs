use std::fmt::Debug;
use std::ops::{Add, Div, Mul};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Scalar type a probability can be reported in.
pub trait Probability:
    Clone + Debug + Send + Sync + PartialOrd + Zero + One + Add<Output = Self> + Mul<Output = Self> + Div<Output = Self>
{
    /// `num / den`; `den` is nonzero.
    fn from_ratio(num: &BigUint, den: &BigUint) -> Self;
}

impl Probability for BigRational {
    fn from_ratio(num: &BigUint, den: &BigUint) -> Self {
        BigRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
    }
}

impl Probability for f64 {
    fn from_ratio(num: &BigUint, den: &BigUint) -> Self {
        BigRational::from_ratio(num, den).to_f64().unwrap_or(f64::NAN)
    }
}

impl Probability for f32 {
    fn from_ratio(num: &BigUint, den: &BigUint) -> Self {
        BigRational::from_ratio(num, den).to_f32().unwrap_or(f32::NAN)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratios() {
        let (a, b) = (BigUint::from(3u32), BigUint::from(32u32));
        assert_eq!(f64::from_ratio(&a, &b), 0.09375);
        assert_eq!(f32::from_ratio(&a, &b), 0.09375);
        assert_eq!(BigRational::from_ratio(&a, &b), BigRational::new(3.into(), 32.into()));
        let huge = BigUint::one() << 2000usize;
        assert_eq!(f64::from_ratio(&BigUint::one(), &huge), 0.0);
    }
}
