use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Significant digits used for every reported decimal.
pub const REPORT_DIGITS: usize = 10;

fn pow10(k: u32) -> BigUint {
    BigUint::from(10u32).pow(k)
}

/// Renders an exact rational in plain positional notation, rounded half-up
/// to `sig` significant digits. Rendering never feeds back into a verdict.
pub fn render_decimal(x: &BigRational, sig: usize) -> String {
    assert!(sig > 0);
    if x.is_zero() {
        return "0".to_string();
    }
    let negative = x.is_negative();
    let num = x.numer().abs().to_biguint().expect("abs is non-negative");
    let den = x.denom().abs().to_biguint().expect("denominator is positive");

    // exponent e with 10^e <= num/den < 10^(e+1)
    let mut e = num.to_string().len() as i64 - den.to_string().len() as i64;
    loop {
        let below = if e >= 0 { &den * pow10(e as u32) <= num } else { den.clone() <= &num * pow10((-e) as u32) };
        if !below {
            e -= 1;
            continue;
        }
        let next = e + 1;
        let above =
            if next >= 0 { &den * pow10(next as u32) > num } else { den.clone() > &num * pow10((-next) as u32) };
        if above {
            break;
        }
        e += 1;
    }

    // q = round(x * 10^scale), scale = sig - 1 - e
    let mut scale = sig as i64 - 1 - e;
    let round = |scale: i64| -> BigUint {
        let (n, d) = if scale >= 0 {
            (&num * pow10(scale as u32), den.clone())
        } else {
            (num.clone(), &den * pow10((-scale) as u32))
        };
        (n * 2u32 + &d) / (d * 2u32)
    };
    let mut q = round(scale);
    if q == pow10(sig as u32) {
        scale -= 1;
        q = round(scale);
    }

    let digits = q.to_string();
    let body = if scale <= 0 {
        format!("{digits}{}", "0".repeat((-scale) as usize))
    } else {
        let scale = scale as usize;
        let padded =
            if digits.len() <= scale { format!("{}{digits}", "0".repeat(scale + 1 - digits.len())) } else { digits };
        let (int, frac) = padded.split_at(padded.len() - scale);
        format!("{int}.{frac}")
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Convenience for integer ratios.
pub fn render_ratio(num: impl Into<BigInt>, den: impl Into<BigInt>, sig: usize) -> String {
    render_decimal(&BigRational::new(num.into(), den.into()), sig)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders() {
        assert_eq!(render_ratio(3, 32, 10), "0.09375000000");
        assert_eq!(render_ratio(1, 3, 4), "0.3333");
        assert_eq!(render_ratio(2, 3, 4), "0.6667");
        assert_eq!(render_ratio(-2, 3, 2), "-0.67");
        assert_eq!(render_ratio(12345, 1, 3), "12300");
        assert_eq!(render_ratio(9999, 10000, 2), "1.0");
        assert_eq!(render_ratio(40320, 1u64 << 32, 2), "0.0000094");
        assert_eq!(render_ratio(1, 1, 3), "1.00");
        assert_eq!(render_ratio(0, 1, 3), "0");
        assert_eq!(render_ratio(10, 1, 1), "10");
    }
}
