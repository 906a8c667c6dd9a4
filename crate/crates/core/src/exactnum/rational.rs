use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"n"` or `"n/d"` with an optional sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}

/// Rational approximation of `sqrt(q)` with `bits` fractional bits, rounded down.
pub(crate) fn sqrt_approx(q: &Rational, bits: u32) -> Rational {
    debug_assert!(!q.is_negative());
    let scale = BigInt::one() << (2 * bits as usize);
    let scaled = (q.numer() * scale) / q.denom();
    Rational::new(scaled.sqrt(), BigInt::one() << bits as usize)
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Generalized binomial coefficient `x (x-1) ... (x-k+1) / k!`.
pub fn binomial_rational(x: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc *= x - Rational::from_integer(BigInt::from(i));
        acc /= Rational::from_integer(BigInt::from(i + 1));
    }
    acc
}

/// Rising factorial `(x)_k`.
pub fn pochhammer(x: &Rational, k: u64) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| {
        acc * (x + Rational::from_integer(BigInt::from(i)))
    })
}

pub(crate) fn to_f64(q: &Rational) -> f64 {
    // Large numerators and denominators overflow a naive division.
    match q.to_f64() {
        Some(v) if v.is_finite() => v,
        _ => {
            let shift = q.numer().bits() as i64 - q.denom().bits() as i64;
            let scaled = if shift >= 0 {
                Rational::new(q.numer().clone(), q.denom() << (shift as usize))
            } else {
                Rational::new(q.numer() << ((-shift) as usize), q.denom().clone())
            };
            scaled.to_f64().unwrap_or(f64::NAN) * 2f64.powi(shift as i32)
        }
    }
}
