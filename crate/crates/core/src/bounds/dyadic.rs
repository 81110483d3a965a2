use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::decimal::render_decimal;

/// Exact value `numerator / 2^exponent`.
///
/// Kept in canonical form: when `exponent > 0` the numerator is odd, and
/// zero is stored as `0 / 2^0`. Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DyadicRational {
    numerator: BigInt,
    exponent: u64,
}

impl DyadicRational {
    pub fn new(numerator: impl Into<BigInt>, exponent: u64) -> Self {
        let mut numerator = numerator.into();
        let mut exponent = exponent;
        if numerator.is_zero() {
            return Self::zero();
        }
        let tz = numerator.trailing_zeros().unwrap_or(0).min(exponent);
        if tz > 0 {
            numerator >>= tz as usize;
            exponent -= tz;
        }
        Self { numerator, exponent }
    }

    pub fn zero() -> Self {
        Self { numerator: BigInt::zero(), exponent: 0 }
    }

    pub fn one() -> Self {
        Self { numerator: BigInt::one(), exponent: 0 }
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Self::new(value, 0)
    }

    /// `2^-exponent`.
    pub fn pow2_neg(exponent: u64) -> Self {
        Self { numerator: BigInt::one(), exponent }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.numerator.is_negative()
    }

    /// Materializes `2^exponent`; only sensible for moderate exponents.
    pub fn denominator(&self) -> BigUint {
        BigUint::one() << self.exponent as usize
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.numerator.clone(), BigInt::from(self.denominator()))
    }

    /// Nearest `f64`; underflows to zero for very large exponents.
    pub fn to_f64(&self) -> f64 {
        let bits = self.numerator.bits();
        // keep 64 significant bits and fold the rest into the exponent
        let shift = bits.saturating_sub(64);
        let top = (&self.numerator >> shift as usize).to_f64().unwrap_or(f64::NAN);
        let e = shift as i64 - self.exponent as i64;
        if e < i32::MIN as i64 {
            return 0.0 * top.signum();
        }
        top * 2f64.powi(e.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
    }

    /// `"a/b"` with `b = 2^exponent`, or `"a"` for integers.
    pub fn fraction_string(&self) -> String {
        if self.exponent == 0 {
            self.numerator.to_string()
        } else if self.exponent <= RENDER_EXPONENT_LIMIT {
            format!("{}/{}", self.numerator, self.denominator())
        } else {
            format!("{}/2^{}", self.numerator, self.exponent)
        }
    }

    /// Decimal rendering to `sig` significant digits. Exact for moderate
    /// exponents; beyond that an approximate scientific form is returned.
    pub fn decimal(&self, sig: usize) -> String {
        if self.exponent <= RENDER_EXPONENT_LIMIT {
            render_decimal(&self.to_rational(), sig)
        } else {
            // log10(|a| / 2^e) from the top bits of a
            let bits = self.numerator.bits();
            let shift = bits.saturating_sub(60);
            let top = (self.numerator.abs() >> shift as usize).to_f64().unwrap_or(1.0);
            let log10 = top.log10() + (shift as f64 - self.exponent as f64) * std::f64::consts::LOG10_2;
            let exp10 = log10.floor();
            let mantissa = 10f64.powf(log10 - exp10);
            let sign = if self.is_negative() { "-" } else { "" };
            format!("~{sign}{mantissa:.prec$}e{exp10}", prec = sig.saturating_sub(1).min(12))
        }
    }

    /// Bracket `floor(log2 |x|)` lies in: `[bits - 1 - e, bits - e)`.
    fn magnitude_bits(&self) -> i128 {
        self.numerator.bits() as i128 - self.exponent as i128
    }

    fn cmp_magnitude(&self, other: &Self) -> Ordering {
        // |x| lies in [2^(mx-1), 2^mx); disjoint ranges decide without shifting
        let (mx, my) = (self.magnitude_bits(), other.magnitude_bits());
        if mx != my {
            return mx.cmp(&my);
        }
        let (a, b) = (self.numerator.magnitude(), other.numerator.magnitude());
        match self.exponent.cmp(&other.exponent) {
            Ordering::Equal => a.cmp(b),
            Ordering::Less => (a << (other.exponent - self.exponent) as usize).cmp(b),
            Ordering::Greater => a.cmp(&(b << (self.exponent - other.exponent) as usize)),
        }
    }
}

/// Exponents above this are never expanded into a full denominator.
pub const RENDER_EXPONENT_LIMIT: u64 = 1 << 16;

impl Ord for DyadicRational {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.numerator.sign(), other.numerator.sign());
        if sa != sb {
            return sign_rank(sa).cmp(&sign_rank(sb));
        }
        match sa {
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => self.cmp_magnitude(other),
            Sign::Minus => other.cmp_magnitude(self),
        }
    }
}

fn sign_rank(s: Sign) -> i8 {
    match s {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

impl PartialOrd for DyadicRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &DyadicRational {
    type Output = DyadicRational;

    fn add(self, rhs: &DyadicRational) -> DyadicRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let e = self.exponent.max(rhs.exponent);
        let a = &self.numerator << (e - self.exponent) as usize;
        let b = &rhs.numerator << (e - rhs.exponent) as usize;
        DyadicRational::new(a + b, e)
    }
}

impl Add for DyadicRational {
    type Output = DyadicRational;

    fn add(self, rhs: DyadicRational) -> DyadicRational {
        &self + &rhs
    }
}

impl Sub for &DyadicRational {
    type Output = DyadicRational;

    fn sub(self, rhs: &DyadicRational) -> DyadicRational {
        let neg = DyadicRational { numerator: -rhs.numerator.clone(), exponent: rhs.exponent };
        self + &neg
    }
}

impl Sub for DyadicRational {
    type Output = DyadicRational;

    fn sub(self, rhs: DyadicRational) -> DyadicRational {
        &self - &rhs
    }
}

impl Mul for &DyadicRational {
    type Output = DyadicRational;

    fn mul(self, rhs: &DyadicRational) -> DyadicRational {
        DyadicRational::new(&self.numerator * &rhs.numerator, self.exponent + rhs.exponent)
    }
}

impl Mul for DyadicRational {
    type Output = DyadicRational;

    fn mul(self, rhs: DyadicRational) -> DyadicRational {
        &self * &rhs
    }
}

impl Sum for DyadicRational {
    fn sum<I: Iterator<Item = DyadicRational>>(iter: I) -> Self {
        iter.fold(DyadicRational::zero(), |acc, x| &acc + &x)
    }
}

impl<'a> Sum<&'a DyadicRational> for DyadicRational {
    fn sum<I: Iterator<Item = &'a DyadicRational>>(iter: I) -> Self {
        iter.fold(DyadicRational::zero(), |acc, x| &acc + x)
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fraction_string())
    }
}

impl fmt::Debug for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2^{}", self.numerator, self.exponent)
    }
}

impl Serialize for DyadicRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.fraction_string())
    }
}
