//! Scalar abstraction shared by every linear structure in the crate.
//!
//! Everything that is compared for *equality* (the braid identity, operad
//! axioms, confluence) is only meaningful over an exact field, so the
//! crate-level aliases all use [`Rational`]. The generic code still runs over
//! `f64` or `Ratio<i64>` for quick experiments.

use std::fmt::{Debug, Display};
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, One, Zero};

use crate::error::Error;

/// A commutative ring element usable as a coefficient.
///
/// Division is only required to be exact for field types; `BigInt` is a
/// `Scalar` too, which is what integer polynomials use.
pub trait Scalar:
    Num + Clone + Debug + Display + Neg<Output = Self> + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self;

    fn is_exact() -> bool {
        true
    }
}

impl Scalar for BigRational {
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl Scalar for Ratio<i64> {
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(v)
    }
}

impl Scalar for BigInt {
    fn from_int(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Scalar for f64 {
    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn is_exact() -> bool {
        false
    }
}

impl Scalar for f32 {
    fn from_int(v: i64) -> Self {
        v as f32
    }

    fn is_exact() -> bool {
        false
    }
}

/// Scalars with exact (or at least total) division, needed for elimination.
pub trait Field: Scalar {}

impl Field for BigRational {}
impl Field for Ratio<i64> {}
impl Field for f64 {}
impl Field for f32 {}

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_int(n)
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical text form: `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(Rational::new(n, d))
    } else {
        Ok(Rational::from_integer(BigInt::from_str(t).map_err(|_| bad())?))
    }
}

/// serde adapter: rationals travel as canonical strings.
pub mod serde_rational {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<Se: Serializer>(r: &Rational, s: Se) -> Result<Se::Ok, Se::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<Se: Serializer>(v: &[Rational], s: Se) -> Result<Se::Ok, Se::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for r in v {
                seq.serialize_element(&format_rational(r))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let v = Vec::<String>::deserialize(d)?;
            v.iter()
                .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_strings() {
        assert_eq!(format_rational(&ratio(6, 4)), "3/2");
        assert_eq!(format_rational(&ratio(-4, 2)), "-2");
        assert_eq!(format_rational(&rat(0)), "0");
        assert_eq!(parse_rational("3/-6").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), rat(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn lowest_terms() {
        let r = parse_rational("10/-4").unwrap();
        assert_eq!(r.numer(), &BigInt::from(-5));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    proptest! {
        #[test]
        fn add_then_subtract_is_exact(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let x = ratio(a, b);
            let y = ratio(c, d);
            prop_assert_eq!((x.clone() + y.clone()) - y, x);
        }

        #[test]
        fn text_roundtrip(a in any::<i64>(), b in 1i64..i64::MAX) {
            let x = ratio(a, b);
            prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
        }
    }
}
