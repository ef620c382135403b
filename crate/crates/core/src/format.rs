//! Number rendering shared by the exports.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

/// Exact decimal rounding of `r` to `places` fractional digits, halves away
/// from zero.
pub fn decimal(r: &BigRational, places: u32) -> String {
    let scale = BigInt::from(10).pow(places);
    let scaled = r.abs() * BigRational::from_integer(scale.clone());
    let (q, rem) = scaled.numer().div_rem(scaled.denom());
    let rounded = if rem * BigInt::from(2) >= *scaled.denom() { q + 1 } else { q };
    let (int, frac) = rounded.div_rem(&scale);
    let sign = if r.is_negative() && rounded_nonzero(&int, &frac) { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{:0>width$}", frac.to_string(), width = places as usize)
    }
}

fn rounded_nonzero(int: &BigInt, frac: &BigInt) -> bool {
    int.sign() != Sign::NoSign || frac.sign() != Sign::NoSign
}

/// `x` with `digits` significant digits in plain positional notation.
pub fn significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i64;
    let places = (digits as i64 - 1 - magnitude).max(0) as usize;
    format!("{x:.places$}")
}

/// Natural logarithm of a big non-negative integer (`-inf` for zero).
pub fn ln_biguint(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().map_or(f64::NAN, f64::ln);
    }
    let shift = bits - 64;
    let top = (n >> shift).to_f64().unwrap();
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

pub fn ln_rational(r: &BigRational) -> f64 {
    let (n, d) = (r.numer().magnitude(), r.denom().magnitude());
    ln_biguint(n) - ln_biguint(d)
}
