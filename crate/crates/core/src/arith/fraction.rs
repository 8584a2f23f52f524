//! Exact rationals in lowest terms.
//!
//! Values whose numerator and denominator fit in an `i64` are kept inline and
//! combined through `i128` intermediates; everything else lives in a
//! `BigRational`. The representation is canonical, so structural equality and
//! hashing agree with numeric equality.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Fraction(Repr);

#[derive(Clone)]
enum Repr {
    // den > 0, gcd(num, den) = 1, num != i64::MIN
    Small(i64, i64),
    Big(Box<BigRational>),
}

fn fits(x: i128) -> bool {
    x > i64::MIN as i128 && x <= i64::MAX as i128
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

impl Fraction {
    /// Builds `num/den` in lowest terms.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::from_big(BigRational::new(num, den)))
    }

    pub fn from_i64(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::from_i128(num as i128, den as i128))
    }

    pub fn integer(n: i64) -> Self {
        Self::from_i128(n as i128, 1)
    }

    pub fn zero() -> Self {
        Fraction(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Fraction(Repr::Small(1, 1))
    }

    // den must be nonzero
    fn from_i128(num: i128, den: i128) -> Self {
        let (mut n, mut d) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = gcd_u128(n.unsigned_abs(), d as u128) as i128;
        if g > 1 {
            n /= g;
            d /= g;
        }
        if fits(n) && fits(d) {
            Fraction(Repr::Small(n as i64, d as i64))
        } else {
            Fraction(Repr::Big(Box::new(BigRational::new_raw(n.into(), d.into()))))
        }
    }

    // r must already be reduced with a positive denominator
    fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN => Fraction(Repr::Small(n, d)),
            _ => Fraction(Repr::Big(Box::new(r))),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => (**r).clone(),
        }
    }

    /// Numerator and denominator when both fit in an `i64`.
    pub fn small_parts(&self) -> Option<(i64, i64)> {
        match self.0 {
            Repr::Small(n, d) => Some((n, d)),
            Repr::Big(_) => None,
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    /// The numerator as an integral fraction.
    pub fn numer_fraction(&self) -> Fraction {
        match &self.0 {
            Repr::Small(n, _) => Fraction(Repr::Small(*n, 1)),
            Repr::Big(r) => Self::from_big(BigRational::from_integer(r.numer().clone())),
        }
    }

    /// The denominator as an integral fraction.
    pub fn denom_fraction(&self) -> Fraction {
        match &self.0 {
            Repr::Small(_, d) => Fraction(Repr::Small(*d, 1)),
            Repr::Big(r) => Self::from_big(BigRational::from_integer(r.denom().clone())),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn numer_is_odd(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => n & 1 == 1,
            Repr::Big(r) => r.numer().is_odd(),
        }
    }

    pub fn denom_is_even(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => d & 1 == 0,
            Repr::Big(r) => r.denom().is_even(),
        }
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(n, _) => n.signum() as i32,
            Repr::Big(r) => {
                if r.is_positive() {
                    1
                } else if r.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Fraction {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Reciprocal; panics on zero like integer division does.
    pub fn recip(&self) -> Fraction {
        match &self.0 {
            Repr::Small(n, d) => {
                assert!(*n != 0, "reciprocal of zero");
                Self::from_i128(*d as i128, *n as i128)
            }
            Repr::Big(r) => Self::from_big(r.recip()),
        }
    }

    pub fn floor(&self) -> Fraction {
        match &self.0 {
            Repr::Small(n, d) => Fraction(Repr::Small(n.div_euclid(*d), 1)),
            Repr::Big(r) => Self::from_big(r.floor()),
        }
    }

    pub fn ceil(&self) -> Fraction {
        match &self.0 {
            Repr::Small(n, d) => Self::from_i128(-((-(*n as i128)).div_euclid(*d as i128)), 1),
            Repr::Big(r) => Self::from_big(r.ceil()),
        }
    }

    /// `self - floor(self)`, in `[0, 1)`.
    pub fn fract_part(&self) -> Fraction {
        self - &self.floor()
    }

    /// `num·other.den − den·other.num`, the Farey cross determinant.
    pub fn cross(&self, other: &Fraction) -> BigInt {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                BigInt::from(*a as i128 * *d as i128 - *b as i128 * *c as i128)
            }
            _ => self.numer() * other.denom() - self.denom() * other.numer(),
        }
    }

    /// True when the two fractions are Farey neighbours.
    pub fn is_farey_neighbour(&self, other: &Fraction) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128 - *b as i128 * *c as i128).abs() == 1
            }
            _ => self.cross(other).abs().is_one(),
        }
    }

    /// Decimal expansion truncated toward zero after `digits` places.
    pub fn to_decimal(&self, digits: usize) -> String {
        let n = self.numer();
        let d = self.denom();
        let sign = if n.is_negative() { "-" } else { "" };
        let n = n.abs();
        let (int, mut rem) = n.div_rem(&d);
        let mut out = format!("{sign}{int}");
        if digits > 0 {
            out.push('.');
            for _ in 0..digits {
                rem *= 10;
                let (q, r) = rem.div_rem(&d);
                out.push_str(&q.to_string());
                rem = r;
            }
        }
        out
    }

    /// Always `P/Q`, including `P/1` for integers.
    pub fn to_ratio_string(&self) -> String {
        match &self.0 {
            Repr::Small(n, d) => format!("{n}/{d}"),
            Repr::Big(r) => format!("{}/{}", r.numer(), r.denom()),
        }
    }

    fn binary(
        &self,
        other: &Fraction,
        small: impl Fn(i128, i128, i128, i128) -> (i128, i128),
        big: impl Fn(BigRational, BigRational) -> BigRational,
    ) -> Fraction {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (n, m) = small(*a as i128, *b as i128, *c as i128, *d as i128);
                Self::from_i128(n, m)
            }
            _ => Self::from_big(big(self.to_big(), other.to_big())),
        }
    }
}

impl From<i64> for Fraction {
    fn from(n: i64) -> Self {
        Fraction::integer(n)
    }
}

impl From<BigInt> for Fraction {
    fn from(n: BigInt) -> Self {
        Fraction::from_big(BigRational::from_integer(n))
    }
}

impl PartialEq for Fraction {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Fraction {}

impl Hash for Fraction {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => {
                0u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
            Repr::Big(r) => {
                1u8.hash(state);
                r.hash(state);
            }
        }
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Accepts `p/q` or `p`, with an optional sign on either part.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Malformed(s.to_string());
        let parse_int = |t: &str| -> Result<BigInt> {
            let t = t.trim();
            let digits = t.strip_prefix(['+', '-']).unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        match s.split_once('/') {
            Some((p, q)) => Fraction::new(parse_int(p)?, parse_int(q)?),
            None => Ok(Fraction::from(parse_int(s)?)),
        }
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_ratio_string())
    }
}

impl<'de> Deserialize<'de> for Fraction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Neg for &Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        match &self.0 {
            Repr::Small(n, d) => Fraction(Repr::Small(-n, *d)),
            Repr::Big(r) => Fraction::from_big(-(**r).clone()),
        }
    }
}

impl Neg for Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        -&self
    }
}

impl Add<&Fraction> for &Fraction {
    type Output = Fraction;
    fn add(self, rhs: &Fraction) -> Fraction {
        self.binary(
            rhs,
            |a, b, c, d| if b == d { (a + c, b) } else { (a * d + c * b, b * d) },
            |x, y| x + y,
        )
    }
}

impl Sub<&Fraction> for &Fraction {
    type Output = Fraction;
    fn sub(self, rhs: &Fraction) -> Fraction {
        self.binary(
            rhs,
            |a, b, c, d| if b == d { (a - c, b) } else { (a * d - c * b, b * d) },
            |x, y| x - y,
        )
    }
}

impl Mul<&Fraction> for &Fraction {
    type Output = Fraction;
    fn mul(self, rhs: &Fraction) -> Fraction {
        self.binary(rhs, |a, b, c, d| (a * c, b * d), |x, y| x * y)
    }
}

impl Div<&Fraction> for &Fraction {
    type Output = Fraction;
    /// Panics when `rhs` is zero.
    fn div(self, rhs: &Fraction) -> Fraction {
        assert!(!rhs.is_zero(), "division by zero");
        self.binary(rhs, |a, b, c, d| (a * d, b * c), |x, y| x / y)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Fraction> for Fraction {
            type Output = Fraction;
            fn $m(self, rhs: Fraction) -> Fraction {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Fraction> for Fraction {
            type Output = Fraction;
            fn $m(self, rhs: &Fraction) -> Fraction {
                (&self).$m(rhs)
            }
        }
        impl $tr<Fraction> for &Fraction {
            type Output = Fraction;
            fn $m(self, rhs: Fraction) -> Fraction {
                self.$m(&rhs)
            }
        }
        impl $tr<i64> for &Fraction {
            type Output = Fraction;
            fn $m(self, rhs: i64) -> Fraction {
                self.$m(&Fraction::integer(rhs))
            }
        }
        impl $tr<i64> for Fraction {
            type Output = Fraction;
            fn $m(self, rhs: i64) -> Fraction {
                (&self).$m(&Fraction::integer(rhs))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl std::iter::Sum for Fraction {
    fn sum<I: Iterator<Item = Fraction>>(iter: I) -> Fraction {
        iter.fold(Fraction::zero(), |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a Fraction> for Fraction {
    fn sum<I: Iterator<Item = &'a Fraction>>(iter: I) -> Fraction {
        iter.fold(Fraction::zero(), |acc, x| acc + x)
    }
}

/// Builds `num/den` in lowest terms with a positive denominator.
pub fn reduce(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Fraction> {
    Fraction::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Fraction {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(2, 4).unwrap(), f("1/2"));
        assert_eq!(reduce(-3, -6).unwrap(), f("1/2"));
        assert_eq!(reduce(0, 5).unwrap().to_ratio_string(), "0/1");
        assert_eq!(reduce(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn overflow_promotes_to_big() {
        let big = Fraction::integer(i64::MAX);
        let sum = &big + &big;
        assert_eq!(sum.numer(), BigInt::from(i64::MAX) * 2);
        let back = &sum - &big;
        assert_eq!(back, big);
        assert!(back.small_parts().is_some());
        let tiny = Fraction::from_i64(1, i64::MAX).unwrap();
        let sq = &tiny * &tiny;
        assert_eq!(sq.denom(), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
        assert_eq!(&sq / &tiny, tiny);
    }

    #[test]
    fn i64_min_is_kept_big() {
        let m = Fraction::new(BigInt::from(i64::MIN), 1).unwrap();
        assert!(m.small_parts().is_none());
        assert_eq!(-(-m.clone()), m);
        assert_eq!((&m + 1) - 1, m);
    }

    #[test]
    fn floor_ceil_and_display() {
        assert_eq!(f("-1/2").floor(), f("-1"));
        assert_eq!(f("-1/2").ceil(), f("0"));
        assert_eq!(f("7/3").floor(), f("2"));
        assert_eq!(f("7/3").ceil(), f("3"));
        assert_eq!(f("-7/3").fract_part(), f("2/3"));
        assert_eq!(f("37/2").to_string(), "37/2");
        assert_eq!(f("16").to_string(), "16");
        assert_eq!(f("16").to_ratio_string(), "16/1");
        assert_eq!(f("37/2").to_decimal(3), "18.500");
        assert_eq!(f("-1/3").to_decimal(4), "-0.3333");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "/", "1/", "a/2", "1//2", "1/2/3", "--1/2", "1.5"] {
            assert!(s.parse::<Fraction>().is_err(), "{s}");
        }
        assert_eq!("+3/-6".parse::<Fraction>().unwrap(), f("-1/2"));
        assert_eq!("1/0".parse::<Fraction>(), Err(Error::ZeroDenominator));
    }
}
