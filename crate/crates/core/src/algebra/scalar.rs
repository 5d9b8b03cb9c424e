//! The exact scalar carrier. Every spectral parameter, Miwa time and value of
//! the deformation parameter is a reduced fraction of big integers.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `p/q` as a reduced fraction. Panics on `q == 0`.
pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// `x^k` for any integer `k`; `x` must be nonzero when `k < 0`.
pub fn powi(x: &Scalar, k: i64) -> Scalar {
    if k == 0 {
        return Scalar::one();
    }
    if k < 0 {
        assert!(!x.is_zero(), "negative power of zero");
        return Pow::pow(x.recip(), (-k) as u64);
    }
    Pow::pow(x.clone(), k as u64)
}

/// Parses `p/q`, `p`, or a terminating decimal such as `0.25`.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let t = s.trim();
    let err = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
    if t.is_empty() {
        return Err(err("empty number"));
    }
    if let Some((whole, fracpart)) = t.split_once('.') {
        if t.contains('/') {
            return Err(err("mixed decimal and fraction"));
        }
        let neg = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        let digits = format!("{whole_digits}{fracpart}");
        let num = BigInt::from_str(if digits.is_empty() { "0" } else { &digits })
            .map_err(|e| err(&e.to_string()))?;
        let den = Pow::pow(BigInt::from(10), fracpart.len() as u32);
        let value = Scalar::new(num, den);
        return Ok(if neg { -value } else { value });
    }
    let value = Scalar::from_str(t).map_err(|e| err(&e.to_string()))?;
    Ok(value)
}

/// Comma-separated list of exact rationals; the empty string is the empty list.
pub fn parse_scalar_list(s: &str) -> Result<Vec<Scalar>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_scalar).collect()
}

/// `p/q` (or `p` for integers).
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

pub fn to_f64(x: &Scalar) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or_else(|| if x.is_positive() { f64::INFINITY } else { f64::NEG_INFINITY })
}

/// Serde adapter writing scalars as `"p/q"` strings.
pub mod as_string {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Scalar, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_scalar(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Scalar, D::Error> {
        let s = String::deserialize(d)?;
        parse_scalar(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Vec<Scalar>` as an array of `"p/q"` strings.
pub mod vec_as_string {
    use super::*;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(xs: &[Scalar], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&format_scalar(x))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Scalar>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter().map(|s| parse_scalar(s).map_err(serde::de::Error::custom)).collect()
    }
}
