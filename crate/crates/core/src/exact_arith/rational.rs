//! The scalar field: arbitrary-precision rationals.
//!
//! `num_rational::BigRational` already maintains the invariants we need
//! (always reduced, positive denominator, canonical zero `0/1`), so the
//! library uses it directly and adds the small helpers the rest of the
//! pipeline wants: `num/den` string round-trips, seeded sampling of reduced
//! fractions of bounded height, and exact decimal rendering for display.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::Error;

pub type Rational = num_rational::BigRational;

/// Shorthand used throughout the tests and builders.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders as `num/den`, the wire format for every rational in the report.
pub fn to_wire(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den` or a bare integer.
pub fn from_wire(s: &str) -> Result<Rational, Error> {
    let bad = |_| Error::InvalidSlp(format!("malformed rational literal `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let num: BigInt = n.trim().parse().map_err(bad)?;
            let den: BigInt = d.trim().parse().map_err(bad)?;
            if den.is_zero() {
                return Err(Error::InvalidSlp(format!("zero denominator in `{s}`")));
            }
            Ok(Rational::new(num, den))
        }
        None => {
            let num: BigInt = s.trim().parse().map_err(bad)?;
            Ok(Rational::from_integer(num))
        }
    }
}

/// Uniform sample over reduced fractions with |numerator| <= height and
/// 1 <= denominator <= height. Rejection keeps the distribution uniform on
/// the reduced pairs.
pub fn sample_reduced<R: Rng>(rng: &mut R, height: u64) -> Rational {
    debug_assert!(height >= 1);
    loop {
        let num: i128 = rng.gen_range(-(height as i128)..=height as i128);
        let den: i128 = rng.gen_range(1..=height as i128);
        let g = (num.unsigned_abs()).gcd(&(den as u128));
        if g == 1 || (num == 0 && den == 1) {
            return Rational::new(BigInt::from(num), BigInt::from(den));
        }
    }
}

/// Exact decimal expansion rounded to `digits` fractional digits
/// (round half away from zero). Display only; no decision is made on it.
pub fn decimal_string(r: &Rational, digits: usize) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let abs = r.abs();
    let scale = BigInt::from(10u32).pow(digits as u32);
    // round(|r| * 10^digits)
    let scaled_num = abs.numer() * &scale;
    let (q, rem) = scaled_num.div_rem(abs.denom());
    let rounded = if &rem * 2 >= *abs.denom() { q + 1 } else { q };
    let digits_str = rounded.to_string();
    if digits == 0 {
        return format!("{sign}{digits_str}");
    }
    let padded = if digits_str.len() <= digits {
        format!("{}{}", "0".repeat(digits - digits_str.len() + 1), digits_str)
    } else {
        digits_str
    };
    let split = padded.len() - digits;
    format!("{sign}{}.{}", &padded[..split], &padded[split..])
}

/// Sign as -1, 0, or +1.
pub fn sign_of(r: &Rational) -> i8 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// 2^-bits as an exact rational.
pub fn pow2_neg(bits: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2u32).pow(bits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn wire_round_trip() {
        for (n, d) in [(1i64, 2i64), (-7, 3), (0, 1), (22, 7)] {
            let r = rat(n, d);
            assert_eq!(from_wire(&to_wire(&r)).unwrap(), r);
        }
        assert_eq!(from_wire("5").unwrap(), int(5));
        assert!(from_wire("1/0").is_err());
        assert!(from_wire("a/b").is_err());
    }

    #[test]
    fn sampling_is_reduced_and_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let r = sample_reduced(&mut rng, 10);
            assert!(r.numer().abs() <= BigInt::from(10));
            assert!(*r.denom() <= BigInt::from(10));
            assert!(r.denom() > &BigInt::zero());
        }
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&rat(1, 2), 4), "0.5000");
        assert_eq!(decimal_string(&rat(-1, 3), 6), "-0.333333");
        assert_eq!(decimal_string(&rat(22, 7), 3), "3.143");
        assert_eq!(decimal_string(&int(3), 2), "3.00");
        assert_eq!(decimal_string(&rat(2, 3), 0), "1");
    }
}
