use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::ZeroDenominator(format!("{numer}/{denom}")));
        }
        Ok(Rational(BigRational::new(numer.into(), denom.into())))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    /// Integer power; a negative exponent of zero is an error.
    pub fn pow(&self, exp: i32) -> Result<Self> {
        if exp < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(num_traits::Pow::pow(&self.0, exp)))
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Lossy conversion for display purposes (plots in the demo page).
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `±p` or `±p/q` with decimal digits only.
    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let unsigned = trimmed
            .strip_prefix('-')
            .or_else(|| trimmed.strip_prefix('+'))
            .unwrap_or(trimmed);
        let negative = trimmed.starts_with('-');
        let (num, den) = match unsigned.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (unsigned, None),
        };
        if !is_digits(num) || !den.is_none_or(is_digits) {
            return Err(Error::Parse(text.to_string()));
        }
        let mut numer: BigInt = num.parse().map_err(|_| Error::Parse(text.to_string()))?;
        if negative {
            numer = -numer;
        }
        let denom: BigInt = match den {
            Some(d) => d.parse().map_err(|_| Error::Parse(text.to_string()))?,
            None => BigInt::one(),
        };
        if denom.is_zero() {
            return Err(Error::ZeroDenominator(text.to_string()));
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn parse_canonicalizes() {
        assert_eq!(r("3/6"), Rational::new(1, 2).unwrap());
        assert_eq!(r("3/6").to_string(), "1/2");
        assert_eq!(r("-4"), Rational::from_integer(-4));
        assert_eq!(r("-4").denom(), &BigInt::one());
        assert_eq!(r("+10"), Rational::from_integer(10));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("7/0".parse::<Rational>(), Err(Error::ZeroDenominator(_))));
        for bad in ["", "-", "1/", "/2", "1.5", "a", "1/-2", "--1", "1/2/3"] {
            assert!(matches!(bad.parse::<Rational>(), Err(Error::Parse(_))), "{bad}");
        }
    }

    #[test]
    fn negative_denominator_normalizes() {
        let x = Rational::new(3, -9).unwrap();
        assert_eq!(x.to_string(), "-1/3");
        assert!(!x.denom().is_negative());
    }

    #[test]
    fn recip_of_zero_fails() {
        assert_eq!(Rational::zero().recip(), Err(Error::DivisionByZero));
        assert_eq!(Rational::zero().pow(-1), Err(Error::DivisionByZero));
        assert_eq!(r("2/3").pow(-2).unwrap(), r("9/4"));
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..1000).prop_map(|(n, d)| Rational::new(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, Rational::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.recip().unwrap(), Rational::one());
            }
        }

        #[test]
        fn display_parse_roundtrip(a in arb_rational()) {
            prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
        }
    }
}
