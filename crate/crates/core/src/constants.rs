//! Certified rational brackets for the square-lattice bulk limit `4C/pi`
//! (C = Catalan's constant) and its exponential, the base `b = exp(4C/pi)`.
//!
//! Catalan's constant is taken to 30 digits; pi and exp are evaluated in
//! fixed point with 70 decimal digits, and every truncation is rounded outward.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Catalan's constant, 30 significant digits.
pub const CATALAN: &str = "0.915965594177219015054603514933";

const WORK_DIGITS: u32 = 70;
const OUT_DIGITS: u32 = 40;

#[derive(Debug, Clone)]
pub struct Constants {
    /// Lower and upper bounds of `4C/pi`.
    pub bulk_limit: (BigRational, BigRational),
    /// Lower and upper bounds of `exp(4C/pi)`.
    pub base: (BigRational, BigRational),
}

impl Constants {
    pub fn base_lo(&self) -> &BigRational {
        &self.base.0
    }

    pub fn base_hi(&self) -> &BigRational {
        &self.base.1
    }
}

pub fn constants() -> &'static Constants {
    static CELL: OnceLock<Constants> = OnceLock::new();
    CELL.get_or_init(compute)
}

/// `4C/pi` as a float (midpoint of the bracket).
pub fn bulk_limit() -> f64 {
    let (lo, hi) = &constants().bulk_limit;
    ((lo + hi) / BigInt::from(2)).to_f64().unwrap()
}

/// `ln b = 4C/pi`.
pub fn ln_base() -> f64 {
    bulk_limit()
}

/// `b = exp(4C/pi)` as a float.
pub fn base() -> f64 {
    let (lo, hi) = &constants().base;
    ((lo + hi) / BigInt::from(2)).to_f64().unwrap()
}

/// Decimal rendering of the lower bracket of `4C/pi` rounded to `digits`
/// places; correct in every place up to the bracket width.
pub fn bulk_limit_decimal(digits: u32) -> String {
    crate::format::decimal(&constants().bulk_limit.0, digits)
}

fn pow10(n: u32) -> BigInt {
    BigInt::from(10).pow(n)
}

/// `arctan(1/x) * scale`, truncating each term; error at most a few units.
fn arctan_inverse(x: i64, scale: &BigInt) -> BigInt {
    let x2 = BigInt::from(x * x);
    let mut power = scale / BigInt::from(x);
    let mut sum = BigInt::zero();
    let mut n = 1i64;
    let mut positive = true;
    while !power.is_zero() {
        let term = &power / BigInt::from(n);
        if positive {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        n += 2;
        positive = !positive;
    }
    sum
}

/// `exp(x / scale) * scale` for non-negative fixed-point `x`, truncating.
fn exp_fixed(x: &BigInt, scale: &BigInt) -> BigInt {
    let mut term = scale.clone();
    let mut sum = scale.clone();
    let mut k = 1i64;
    loop {
        term = term * x / scale / BigInt::from(k);
        if term.is_zero() {
            return sum;
        }
        sum += &term;
        k += 1;
    }
}

fn compute() -> Constants {
    let scale = pow10(WORK_DIGITS);
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239); slack covers term truncation
    let pi = BigInt::from(16) * arctan_inverse(5, &scale) - BigInt::from(4) * arctan_inverse(239, &scale);
    let slack = BigInt::from(1000);
    let (pi_lo, pi_hi) = (&pi - &slack, &pi + &slack);

    let catalan_digits = CATALAN.trim_start_matches("0.");
    let catalan = BigInt::parse_bytes(catalan_digits.as_bytes(), 10).unwrap()
        * pow10(WORK_DIGITS - catalan_digits.len() as u32);
    let catalan_err = pow10(WORK_DIGITS - catalan_digits.len() as u32);
    let (c_lo, c_hi) = (&catalan - &catalan_err, &catalan + &catalan_err);

    let x_lo = BigInt::from(4) * c_lo * &scale / pi_hi;
    let x_hi = BigInt::from(4) * c_hi * &scale / pi_lo + BigInt::one();

    let b_lo = exp_fixed(&x_lo, &scale) - &slack;
    let b_hi = exp_fixed(&x_hi, &scale) + &slack;

    let shrink = pow10(WORK_DIGITS - OUT_DIGITS);
    let out_scale = pow10(OUT_DIGITS);
    let floor = |v: &BigInt| BigRational::new(v / &shrink, out_scale.clone());
    let ceil = |v: &BigInt| BigRational::new(v / &shrink + BigInt::one(), out_scale.clone());
    Constants {
        bulk_limit: (floor(&x_lo), ceil(&x_hi)),
        base: (floor(&b_lo), ceil(&b_hi)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rational(s: &str) -> BigRational {
        let (int, frac) = s.split_once('.').unwrap();
        let digits = format!("{int}{frac}");
        BigRational::new(
            BigInt::parse_bytes(digits.as_bytes(), 10).unwrap(),
            pow10(frac.len() as u32),
        )
    }

    #[test]
    fn brackets_are_tight_and_ordered() {
        let c = constants();
        let width = &c.base.1 - &c.base.0;
        assert!(width > BigRational::zero());
        assert!(width < rational("0.0000000000000000000000000001"));
        let width = &c.bulk_limit.1 - &c.bulk_limit.0;
        assert!(width < rational("0.0000000000000000000000000001"));
    }

    #[test]
    fn base_inside_published_rounding() {
        let c = constants();
        assert!(c.base_lo() > &rational("3.2099"));
        assert!(c.base_hi() < &rational("3.20992"));
        assert!(c.bulk_limit.0 > rational("1.166243"));
        assert!(c.bulk_limit.1 < rational("1.166244"));
    }

    #[test]
    fn agrees_with_float_evaluation() {
        let catalan: f64 = CATALAN.parse().unwrap();
        let x = 4.0 * catalan / std::f64::consts::PI;
        assert!((bulk_limit() - x).abs() < 1e-15);
        assert!((base() - x.exp()).abs() < 1e-14);
    }

    #[test]
    fn twenty_five_digits() {
        // 4C/pi to 25 places, from an independent multiprecision evaluation
        assert_eq!(bulk_limit_decimal(25), "1.1662436161232751205535378");
    }
}
