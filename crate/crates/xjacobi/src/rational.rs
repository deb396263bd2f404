//! Exact rational scalars: construction shorthands, parsing and formatting.

use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number used for every exact quantity.
pub type Rat = BigRational;

/// Builds the rational `p/q`.
///
/// # Panics
/// Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    assert!(q != 0, "zero denominator");
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Builds the integer rational `p`.
pub fn int(p: i64) -> Rat {
    BigRational::from_integer(BigInt::from(p))
}

/// Parses `"p/q"`, `"p"` or a finite decimal such as `"-2.75"` exactly.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if let Some((ip, fp)) = t.split_once('.') {
        let neg = ip.starts_with('-');
        let ip_digits = ip.trim_start_matches(['-', '+']);
        if !ip_digits.chars().all(|c| c.is_ascii_digit())
            || !fp.chars().all(|c| c.is_ascii_digit())
            || (ip_digits.is_empty() && fp.is_empty())
        {
            return Err(Error::Parse(format!("malformed decimal '{s}'")));
        }
        let digits = format!("{ip_digits}{fp}");
        let num = BigInt::from_str(if digits.is_empty() { "0" } else { &digits })
            .map_err(|e| Error::Parse(format!("'{s}': {e}")))?;
        let den = num::pow(BigInt::from(10), fp.len());
        let r = BigRational::new(num, den);
        return Ok(if neg { -r } else { r });
    }
    let r = BigRational::from_str(t).map_err(|e| Error::Parse(format!("'{s}': {e}")))?;
    Ok(r)
}

/// Formats a rational as `"p/q"` (or `"p"` for integers), the lossless wire format.
pub fn fmt_rat(r: &Rat) -> String {
    r.to_string()
}

/// Converts to the nearest `f64` (through a scaled integer quotient, so huge
/// numerators and denominators do not overflow to ±∞ or NaN).
pub fn to_f64(r: &Rat) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let n = r.numer();
    let d = r.denom();
    let shift = n.bits() as i64 - d.bits() as i64;
    let scale = 60 - shift;
    let q = if scale >= 0 {
        (n << (scale as usize)) / d
    } else {
        n / (d << ((-scale) as usize))
    };
    q.to_f64().unwrap_or(f64::NAN) * 2f64.powi(-(scale as i32))
}

/// Exact sign of a rational: −1, 0 or +1.
pub fn sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Rising factorial (Pochhammer symbol) `(a)_k = a (a+1) … (a+k−1)`.
pub fn pochhammer(a: &Rat, k: usize) -> Rat {
    let mut acc = Rat::one();
    let mut t = a.clone();
    for _ in 0..k {
        acc *= &t;
        t += Rat::one();
    }
    acc
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Rat {
    pochhammer(&Rat::one(), n)
}

/// Largest integer `≤ r`.
pub fn floor(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

/// `true` when `r` is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.is_integer()
}

/// Absolute value.
pub fn abs(r: &Rat) -> Rat {
    r.abs()
}
