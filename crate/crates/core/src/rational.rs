//! Exact rational helpers shared by every layer: parsing and printing of
//! `"p/q"` strings, serde adapters, and small integer combinatorics.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number used throughout the crate.
pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"3"`, `"-1/4"` or `" 2 / 6 "` into a reduced rational.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid fraction {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// Canonical string form: `"n"` for integers, `"p/q"` otherwise, sign on the numerator.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

/// Exact integer value of `x`, if it is integral and fits an `i64`.
pub fn to_i64(x: &Q) -> Option<i64> {
    if is_integer(x) {
        x.numer().to_i64()
    } else {
        None
    }
}

/// `base^exp` for a possibly negative exponent.
pub fn pow_q(base: &Q, exp: i64) -> Q {
    let mut acc = Q::one();
    let b = if exp < 0 { base.recip() } else { base.clone() };
    for _ in 0..exp.unsigned_abs() {
        acc *= &b;
    }
    acc
}

/// If `|x| = base^k` for an integer `k`, returns `k`.
pub fn exact_log(x: &Q, base: &BigInt) -> Option<i64> {
    if x.is_zero() || base <= &BigInt::one() {
        return None;
    }
    let ax = x.abs();
    let (mut num, mut den) = (ax.numer().clone(), ax.denom().clone());
    let mut k = 0i64;
    while num > BigInt::one() {
        let (quot, rem) = num.div_rem(base);
        if !rem.is_zero() {
            return None;
        }
        num = quot;
        k += 1;
    }
    while den > BigInt::one() {
        let (quot, rem) = den.div_rem(base);
        if !rem.is_zero() {
            return None;
        }
        den = quot;
        k -= 1;
    }
    Some(k)
}

/// Exact integer square root, if `n` is a perfect square.
pub fn exact_sqrt(n: u64) -> Option<u64> {
    let r = (n as f64).sqrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).find(|c| c.checked_mul(*c) == Some(n))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// serde adapter writing a rational as its canonical fraction string.
pub mod serde_q {
    use super::{fmt_q, parse_q, Q};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        let raw = String::deserialize(d)?;
        parse_q(&raw).map_err(serde::de::Error::custom)
    }
}

/// serde adapter for rational matrices as nested arrays of fraction strings.
pub mod serde_q_grid {
    use super::{fmt_q, parse_q, Q};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(rows: &[Vec<Q>], s: S) -> std::result::Result<S::Ok, S::Error> {
        let text: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(fmt_q).collect()).collect();
        text.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Vec<Q>>, D::Error> {
        let raw = Vec::<Vec<String>>::deserialize(d)?;
        raw.iter()
            .map(|r| r.iter().map(|e| parse_q(e)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_q("2/6").unwrap(), q_frac(1, 3));
        assert_eq!(parse_q("-4").unwrap(), q_int(-4));
        assert_eq!(fmt_q(&q_frac(-2, 4)), "-1/2");
        assert_eq!(fmt_q(&q_int(7)), "7");
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
        assert!(parse_q("0.5").is_err());
    }

    #[test]
    fn logs_and_roots() {
        let two = BigInt::from(2);
        assert_eq!(exact_log(&q_frac(1, 4), &two), Some(-2));
        assert_eq!(exact_log(&q_int(-8), &two), Some(3));
        assert_eq!(exact_log(&q_int(1), &two), Some(0));
        assert_eq!(exact_log(&q_int(3), &two), None);
        assert_eq!(exact_log(&q_frac(2, 3), &two), None);
        assert_eq!(exact_sqrt(16), Some(4));
        assert_eq!(exact_sqrt(15), None);
    }

    #[test]
    fn combinatorics() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(factorial(5), BigInt::from(120));
        assert!(is_prime(3) && !is_prime(4) && !is_prime(1));
    }
}
