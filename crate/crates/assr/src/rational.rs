//! Exact rational scalars.
//!
//! All classification arithmetic runs over arbitrary-precision rationals so
//! minor signs are exact. `num-rational` keeps values reduced with a positive
//! denominator, which is exactly the invariant we need.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar; reduced form, denominator always positive.
pub type Rat = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// `p / q` as an exact rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Sign of a rational as -1, 0 or +1.
pub fn rat_sign(v: &Rat) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Nearest machine real. This is the single exact-to-float crossing used by
/// the QR pipeline.
pub fn rat_to_f64(v: &Rat) -> f64 {
    v.to_f64().expect("finite rational converts to f64")
}

/// Parses an exact rational scalar.
///
/// Accepted forms: integers (`-3`), rationals (`7/2`), finite decimals
/// (`1.25`), and scientific decimals (`-1e-6`, `2.5E3`). Decimals convert
/// exactly: `d.dd... * 10^e` becomes `p / 10^k`, never a binary float.
pub fn parse_rational(text: &str) -> Result<Rat> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::InvalidArgument("empty rational literal".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| bad_literal(s, "numerator is not an integer"))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| bad_literal(s, "denominator is not an integer"))?;
        if d.is_zero() {
            return Err(bad_literal(s, "zero denominator"));
        }
        return Ok(Rat::new(n, d));
    }

    // Split a trailing exponent, then an optional decimal point.
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp: i64 = s[pos + 1..]
                .parse()
                .map_err(|_| bad_literal(s, "bad exponent"))?;
            (&s[..pos], exp)
        }
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if frac_part.contains(['+', '-']) {
        return Err(bad_literal(s, "malformed decimal"));
    }
    let digits = format!("{int_part}{frac_part}");
    if digits.is_empty() || digits == "-" || digits == "+" {
        return Err(bad_literal(s, "no digits"));
    }
    let p: BigInt = digits
        .parse()
        .map_err(|_| bad_literal(s, "malformed number"))?;
    let scale = exponent - frac_part.len() as i64;
    let pow10 = BigInt::from(10u32).pow(scale.unsigned_abs() as u32);
    Ok(if scale >= 0 {
        Rat::from_integer(p * pow10)
    } else {
        Rat::new(p, pow10)
    })
}

fn bad_literal(s: &str, why: &str) -> Error {
    Error::InvalidArgument(format!("cannot parse `{s}` as a rational: {why}"))
}

/// Canonical text form: `p` when the denominator is 1, else `p/q`.
pub fn format_rational(v: &Rat) -> String {
    if v.denom() == &BigInt::from(1) {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}
