//! Exact rational numbers over arbitrary-precision integers.
//!
//! Every value is kept in canonical form: the denominator is strictly
//! positive and coprime with the numerator, and zero is `0/1`. Because
//! canonicalization happens at construction, derived `PartialEq`/`Hash`
//! coincide with numeric equality.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arithmetic operation selector for [`Rational::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    /// Builds `num/den` in lowest terms with the sign on the numerator.
    pub fn normalize(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let num = num.into();
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    /// `self + num/den` for a canonical `num/den`, reducing by the small gcd only.
    fn combine(&self, num: &BigInt, den: &BigInt) -> Self {
        let g = self.den.gcd(den);
        if g.is_one() {
            return Self::reduce(&self.num * den + num * &self.den, &self.den * den);
        }
        let t = &self.num * (den / &g) + num * (&self.den / &g);
        if t.is_zero() {
            return Self::zero();
        }
        let g2 = t.gcd(&g);
        Self {
            num: &t / &g2,
            den: (&self.den / &g) * (den / &g2),
        }
    }

    /// Caller guarantees `den != 0`.
    fn reduce(mut num: BigInt, mut den: BigInt) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        Self { num, den }
    }

    pub fn zero() -> Self {
        Self {
            num: BigInt::zero(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    /// `1/d`; panics if `d == 0`.
    pub fn unit_fraction(d: u64) -> Self {
        assert!(d != 0, "unit fraction with zero denominator");
        Self {
            num: BigInt::one(),
            den: BigInt::from(d),
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.num.clone())
    }

    /// The value as a `u64`, if it is a nonnegative integer in range.
    pub fn to_u64(&self) -> Option<u64> {
        self.to_integer().and_then(|n| n.to_u64())
    }

    pub fn abs(&self) -> Self {
        Self {
            num: self.num.abs(),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// Exact `self op rhs`; only division can fail.
    pub fn arith(&self, rhs: &Self, op: ArithOp) -> Result<Self> {
        match op {
            ArithOp::Add => Ok(self + rhs),
            ArithOp::Sub => Ok(self - rhs),
            ArithOp::Mul => Ok(self * rhs),
            ArithOp::Div => self.checked_div(rhs),
        }
    }

    /// `self^k`, with `0^0 = 1`.
    pub fn pow(&self, k: u32) -> Self {
        // Powers of coprime integers stay coprime, so no gcd is needed.
        Self {
            num: num_traits::pow(self.num.clone(), k as usize),
            den: num_traits::pow(self.den.clone(), k as usize),
        }
    }

    /// Decimal expansion with exactly `places` fractional digits, rounding
    /// half away from zero. Negative zero prints unsigned.
    pub fn to_fixed(&self, places: u32) -> String {
        let scale = num_traits::pow(BigInt::from(10u32), places as usize);
        let scaled = self.num.abs() * scale;
        let (mut q, r) = scaled.div_rem(&self.den);
        if r * 2u32 >= self.den {
            q += 1u32;
        }
        let digits = q.to_string();
        let places = places as usize;
        let padded = if digits.len() <= places {
            format!("{}{}", "0".repeat(places + 1 - digits.len()), digits)
        } else {
            digits
        };
        let (int_part, frac_part) = padded.split_at(padded.len() - places);
        let sign = if self.is_negative() && !q.is_zero() {
            "-"
        } else {
            ""
        };
        if places == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part}")
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // pad honors width and alignment flags
        if self.den.is_one() {
            f.pad(&self.num.to_string())
        } else {
            f.pad(&format!("{}/{}", self.num, self.den))
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Accepts `"p/q"` with `q > 0`, or a bare integer `"n"`.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational(s.to_string());
        let s_trim = s.trim();
        let (num, den) = match s_trim.split_once('/') {
            Some((p, q)) => (p.trim(), Some(q.trim())),
            None => (s_trim, None),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        match den {
            None => Ok(Self::integer(num)),
            Some(q) => {
                if q.starts_with('+') || q.starts_with('-') {
                    return Err(bad());
                }
                let den: BigInt = q.parse().map_err(|_| bad())?;
                if !den.is_positive() {
                    return Err(bad());
                }
                Ok(Self::reduce(num, den))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Denominators are positive, so cross-multiplication preserves order.
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Self::integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Self::integer(n)
    }
}

impl From<u32> for Rational {
    fn from(n: u32) -> Self {
        Self::integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Self::integer(n)
    }
}

impl Add for &Rational {
    type Output = Rational;

    fn add(self, rhs: &Rational) -> Rational {
        Rational::combine(self, &rhs.num, &rhs.den)
    }
}

impl Sub for &Rational {
    type Output = Rational;

    fn sub(self, rhs: &Rational) -> Rational {
        Rational::combine(self, &-&rhs.num, &rhs.den)
    }
}

impl Mul for &Rational {
    type Output = Rational;

    fn mul(self, rhs: &Rational) -> Rational {
        if self.is_zero() || rhs.is_zero() {
            return Rational::zero();
        }
        // cancel crosswise first; the product is then already in lowest terms
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        Rational {
            num: (&self.num / &g1) * (&rhs.num / &g2),
            den: (&self.den / &g2) * (&rhs.den / &g1),
        }
    }
}

/// Panics on division by zero; use [`Rational::checked_div`] for a `Result`.
impl Div for &Rational {
    type Output = Rational;

    fn div(self, rhs: &Rational) -> Rational {
        self.checked_div(rhs).expect("division by zero rational")
    }
}

impl Neg for &Rational {
    type Output = Rational;

    fn neg(self) -> Rational {
        Rational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;

    fn neg(self) -> Rational {
        Rational {
            num: -self.num,
            den: self.den,
        }
    }
}

macro_rules! forward_binop {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_binop!(Add add, Sub sub, Mul mul, Div div);

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

/// `rat(p, q)` shorthand; panics on `q == 0`. Intended for literals.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::normalize(p, q).expect("literal rational with zero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalize_examples() {
        assert_eq!(Rational::normalize(2, 4).unwrap(), rat(1, 2));
        assert_eq!(Rational::normalize(-3, -6).unwrap(), rat(1, 2));
        let z = Rational::normalize(0, 7).unwrap();
        assert_eq!(z.numer(), &BigInt::zero());
        assert_eq!(z.denom(), &BigInt::one());
        assert_eq!(Rational::normalize(3, -6).unwrap().to_string(), "-1/2");
        assert!(matches!(
            Rational::normalize(1, 0),
            Err(Error::ZeroDenominator)
        ));
    }

    #[test]
    fn arith_examples() {
        assert_eq!(
            rat(1, 4).arith(&rat(1, 16), ArithOp::Add).unwrap(),
            rat(5, 16)
        );
        assert_eq!(
            rat(4, 9).arith(&rat(4, 9), ArithOp::Mul).unwrap(),
            rat(16, 81)
        );
        assert_eq!(
            rat(1, 3).arith(&rat(3, 4), ArithOp::Div).unwrap(),
            rat(4, 9)
        );
        assert_eq!(
            rat(1, 3).arith(&rat(1, 2), ArithOp::Sub).unwrap(),
            rat(-1, 6)
        );
        assert!(matches!(
            rat(1, 3).arith(&Rational::zero(), ArithOp::Div),
            Err(Error::DivisionByZero)
        ));
        assert!(Rational::zero().recip().is_err());
    }

    #[test]
    fn pow_examples() {
        assert_eq!(rat(1, 2).pow(4), rat(1, 16));
        assert_eq!(rat(2, 3).pow(2), rat(4, 9));
        assert_eq!(rat(5, 7).pow(0), Rational::one());
        assert_eq!(Rational::zero().pow(0), Rational::one());
        assert_eq!(rat(-2, 3).pow(3), rat(-8, 27));
    }

    #[test]
    fn compare_examples() {
        assert_eq!(rat(1, 3).cmp(&rat(1, 2)), Ordering::Less);
        assert_eq!(rat(2, 4).cmp(&rat(1, 2)), Ordering::Equal);
        assert_eq!(rat(4, 5).cmp(&rat(1, 3)), Ordering::Greater);
        assert!(rat(-1, 2) < rat(1, 3));
    }

    #[test]
    fn big_powers_do_not_overflow() {
        // (1 - 1/3)^(2*50) needs ~160 bits.
        let q = rat(2, 3).pow(100);
        assert_eq!(q.denom(), &num_traits::pow(BigInt::from(3), 100));
        assert_eq!(q.numer(), &num_traits::pow(BigInt::from(2), 100));
    }

    #[test]
    fn text_form() {
        assert_eq!(rat(6, 3).to_string(), "2");
        assert_eq!(rat(-1, 4).to_string(), "-1/4");
        assert_eq!("4/1".parse::<Rational>().unwrap(), Rational::integer(4));
        assert_eq!("7".parse::<Rational>().unwrap(), Rational::integer(7));
        assert_eq!("-6/8".parse::<Rational>().unwrap(), rat(-3, 4));
        for bad in ["1/0", "1/-2", "", "a/b", "1/", "/3", "1/2/3", "0.5"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn fixed_point_rounding() {
        assert_eq!(rat(1, 3).to_fixed(6), "0.333333");
        assert_eq!(rat(5, 2).to_fixed(2), "2.50");
        assert_eq!(rat(-1, 800_000).to_fixed(6), "-0.000001");
        assert_eq!(rat(-1, 3_000_000).to_fixed(6), "0.000000");
        assert_eq!(rat(2, 3).to_fixed(1), "0.7");
        assert_eq!(rat(-5, 2).to_fixed(0), "-3");
        assert_eq!(rat(123_456_789, 1000).to_fixed(3), "123456.789");
        assert_eq!(rat(1, 2_000_000).to_fixed(6), "0.000001");
    }

    #[test]
    fn serde_uses_text_form() {
        let json = serde_json::to_string(&rat(3, 4)).unwrap();
        assert_eq!(json, "\"3/4\"");
        let back: Rational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rat(3, 4));
        assert!(serde_json::from_str::<Rational>("\"1/0\"").is_err());
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-10_000i64..10_000, 1i64..10_000).prop_map(|(p, q)| rat(p, q))
    }

    proptest! {
        #[test]
        fn field_laws(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!(&(&a / &b) * &b, a);
            }
        }

        #[test]
        fn normalize_is_idempotent(p in -100_000i64..100_000, q in (-100_000i64..100_000).prop_filter("nonzero", |q| *q != 0)) {
            let once = Rational::normalize(p, q).unwrap();
            let twice = Rational::normalize(once.numer().clone(), once.denom().clone()).unwrap();
            prop_assert!(once.denom().is_positive());
            prop_assert!(once.numer().gcd(once.denom()).is_one());
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn pow_adds_exponents(q in arb_rational(), j in 0u32..12, k in 0u32..12) {
            prop_assert_eq!(q.pow(j + k), q.pow(j) * q.pow(k));
        }

        #[test]
        fn compare_matches_sign_of_difference(a in arb_rational(), b in arb_rational()) {
            let d = &a - &b;
            let expected = if d.is_zero() { Ordering::Equal } else if d.is_negative() { Ordering::Less } else { Ordering::Greater };
            prop_assert_eq!(a.cmp(&b), expected);
        }

        #[test]
        fn text_round_trip(a in arb_rational()) {
            prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
        }
    }
}
