//! Coefficient domains: the binary field and the rational integers.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Runtime tag for a coefficient domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Domain {
    BinaryField,
    Integers,
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::BinaryField => write!(f, "F2"),
            Domain::Integers => write!(f, "ZZ"),
        }
    }
}

/// Commutative ring of coefficients.
pub trait Coefficient:
    Clone + fmt::Debug + fmt::Display + PartialEq + Eq + Hash + Send + Sync + FromStr + 'static
{
    const DOMAIN: Domain;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_i64(v: i64) -> Self;
}

/// Coefficient domain in which every nonzero element is invertible.
pub trait FieldCoefficient: Coefficient {
    fn inv(&self) -> Self;
}

/// Element of the field with two elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct F2(pub bool);

impl fmt::Display for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", u8::from(self.0))
    }
}

impl FromStr for F2 {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let v: i64 = s.trim().parse().map_err(|_| format!("bad F2 coefficient `{s}`"))?;
        Ok(F2::from_i64(v))
    }
}

impl Coefficient for F2 {
    const DOMAIN: Domain = Domain::BinaryField;

    fn zero() -> Self {
        F2(false)
    }
    fn one() -> Self {
        F2(true)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
    fn is_one(&self) -> bool {
        self.0
    }
    fn add(&self, other: &Self) -> Self {
        F2(self.0 ^ other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        F2(self.0 ^ other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        F2(self.0 & other.0)
    }
    fn neg(&self) -> Self {
        *self
    }
    fn from_i64(v: i64) -> Self {
        F2(v.rem_euclid(2) == 1)
    }
}

impl FieldCoefficient for F2 {
    fn inv(&self) -> Self {
        assert!(self.0, "inverse of zero in F2");
        *self
    }
}

/// Arbitrary-precision integer with an inline fast path for values that fit
/// in an `i64`. The representation is canonical: `Big` never holds a value
/// that fits in `Small`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Integer {
    Small(i64),
    Big(Box<BigInt>),
}

impl Integer {
    fn from_big(b: BigInt) -> Self {
        match b.to_i64() {
            Some(v) => Integer::Small(v),
            None => Integer::Big(Box::new(b)),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Integer::Small(v) => BigInt::from(*v),
            Integer::Big(b) => (**b).clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Integer::Small(v) => Some(*v),
            Integer::Big(_) => None,
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Integer::Small(v) => v.signum() as i32,
            Integer::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Integer {
        if self.is_negative() {
            Coefficient::neg(self)
        } else {
            self.clone()
        }
    }

    /// Floor division with a nonnegative remainder for positive divisors:
    /// returns `(q, r)` with `self = q * d + r` and `0 <= r < |d|`.
    pub fn div_rem_euclid(&self, d: &Integer) -> (Integer, Integer) {
        assert!(!Coefficient::is_zero(d), "division by zero");
        if let (Integer::Small(a), Integer::Small(b)) = (self, d) {
            if let (Some(q), Some(r)) = (a.checked_div_euclid(*b), a.checked_rem_euclid(*b)) {
                return (Integer::Small(q), Integer::Small(r));
            }
        }
        let a = self.to_bigint();
        let b = d.to_bigint();
        let mut r = a.mod_floor(&b);
        if r.is_negative() {
            r += b.abs();
        }
        let q = (&a - &r) / &b;
        (Integer::from_big(q), Integer::from_big(r))
    }

    /// Exact division; panics in debug builds if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Integer) -> Integer {
        let (q, r) = self.div_rem_euclid(d);
        debug_assert!(Coefficient::is_zero(&r), "inexact division");
        q
    }

    pub fn divides(&self, other: &Integer) -> bool {
        if Coefficient::is_zero(self) {
            return Coefficient::is_zero(other);
        }
        Coefficient::is_zero(&other.div_rem_euclid(self).1)
    }

    pub fn gcd(&self, other: &Integer) -> Integer {
        if let (Integer::Small(a), Integer::Small(b)) = (self, other) {
            if *a != i64::MIN && *b != i64::MIN {
                return Integer::Small(a.gcd(b));
            }
        }
        Integer::from_big(self.to_bigint().gcd(&other.to_bigint()))
    }

    pub fn lcm(&self, other: &Integer) -> Integer {
        if Coefficient::is_zero(self) || Coefficient::is_zero(other) {
            return Integer::Small(0);
        }
        let g = self.gcd(other);
        Coefficient::mul(&self.abs().div_exact(&g), &other.abs())
    }

    /// Extended gcd: `(g, u, v)` with `u*self + v*other = g >= 0`.
    pub fn ext_gcd(&self, other: &Integer) -> (Integer, Integer, Integer) {
        let e = self.to_bigint().extended_gcd(&other.to_bigint());
        let (mut g, mut x, mut y) = (e.gcd, e.x, e.y);
        if g.is_negative() {
            g = -g;
            x = -x;
            y = -y;
        }
        (Integer::from_big(g), Integer::from_big(x), Integer::from_big(y))
    }

    pub fn bits(&self) -> u64 {
        match self {
            Integer::Small(v) => 64 - v.unsigned_abs().leading_zeros() as u64,
            Integer::Big(b) => b.bits(),
        }
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer::Small(v)
    }
}

impl From<BigInt> for Integer {
    fn from(b: BigInt) -> Self {
        Integer::from_big(b)
    }
}

impl PartialOrd for Integer {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Integer {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Integer::Small(a), Integer::Small(b)) => a.cmp(b),
            _ => self.to_bigint().cmp(&other.to_bigint()),
        }
    }
}

impl fmt::Debug for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Integer::Small(v) => write!(f, "{v}"),
            Integer::Big(b) => write!(f, "{b}"),
        }
    }
}

impl FromStr for Integer {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if let Ok(v) = s.parse::<i64>() {
            return Ok(Integer::Small(v));
        }
        s.parse::<BigInt>()
            .map(Integer::from_big)
            .map_err(|_| format!("bad integer `{s}`"))
    }
}

impl Coefficient for Integer {
    const DOMAIN: Domain = Domain::Integers;

    fn zero() -> Self {
        Integer::Small(0)
    }
    fn one() -> Self {
        Integer::Small(1)
    }
    fn is_zero(&self) -> bool {
        matches!(self, Integer::Small(0))
    }
    fn is_one(&self) -> bool {
        matches!(self, Integer::Small(1))
    }
    fn add(&self, other: &Self) -> Self {
        if let (Integer::Small(a), Integer::Small(b)) = (self, other) {
            if let Some(c) = a.checked_add(*b) {
                return Integer::Small(c);
            }
        }
        Integer::from_big(self.to_bigint() + other.to_bigint())
    }
    fn sub(&self, other: &Self) -> Self {
        if let (Integer::Small(a), Integer::Small(b)) = (self, other) {
            if let Some(c) = a.checked_sub(*b) {
                return Integer::Small(c);
            }
        }
        Integer::from_big(self.to_bigint() - other.to_bigint())
    }
    fn mul(&self, other: &Self) -> Self {
        if let (Integer::Small(a), Integer::Small(b)) = (self, other) {
            if let Some(c) = a.checked_mul(*b) {
                return Integer::Small(c);
            }
        }
        Integer::from_big(self.to_bigint() * other.to_bigint())
    }
    fn neg(&self) -> Self {
        if let Integer::Small(a) = self {
            if let Some(c) = a.checked_neg() {
                return Integer::Small(c);
            }
        }
        Integer::from_big(-self.to_bigint())
    }
    fn from_i64(v: i64) -> Self {
        Integer::Small(v)
    }
}

impl Zero for Integer {
    fn zero() -> Self {
        Integer::Small(0)
    }
    fn is_zero(&self) -> bool {
        Coefficient::is_zero(self)
    }
}

impl std::ops::Add for Integer {
    type Output = Integer;
    fn add(self, rhs: Integer) -> Integer {
        Coefficient::add(&self, &rhs)
    }
}

impl std::ops::Mul for Integer {
    type Output = Integer;
    fn mul(self, rhs: Integer) -> Integer {
        Coefficient::mul(&self, &rhs)
    }
}

impl One for Integer {
    fn one() -> Self {
        Integer::Small(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(s: &str) -> Integer {
        s.parse().unwrap()
    }

    #[test]
    fn small_overflow_promotes() {
        let a = Integer::Small(i64::MAX);
        let b = Coefficient::add(&a, &Integer::Small(1));
        assert_eq!(b.to_string(), "9223372036854775808");
        assert!(matches!(b, Integer::Big(_)));
        let c = Coefficient::sub(&b, &Integer::Small(1));
        assert_eq!(c, Integer::Small(i64::MAX));
        let m = Coefficient::mul(&a, &a);
        assert_eq!(m, big("85070591730234615847396907784232501249"));
    }

    #[test]
    fn euclid_remainder_is_nonnegative() {
        let (q, r) = Integer::Small(-7).div_rem_euclid(&Integer::Small(2));
        assert_eq!((q, r), (Integer::Small(-4), Integer::Small(1)));
        let (q, r) = Integer::Small(7).div_rem_euclid(&Integer::Small(-2));
        assert_eq!((q, r), (Integer::Small(-3), Integer::Small(1)));
        let (q, r) = big("-100000000000000000000").div_rem_euclid(&Integer::Small(3));
        assert_eq!(r, Integer::Small(2));
        assert_eq!(
            Coefficient::add(&Coefficient::mul(&q, &Integer::Small(3)), &r),
            big("-100000000000000000000")
        );
    }

    #[test]
    fn gcd_and_bezout() {
        let (g, u, v) = Integer::Small(2).ext_gcd(&Integer::Small(3));
        assert_eq!(g, Integer::Small(1));
        let lhs = Coefficient::add(
            &Coefficient::mul(&u, &Integer::Small(2)),
            &Coefficient::mul(&v, &Integer::Small(3)),
        );
        assert_eq!(lhs, Integer::Small(1));
        assert_eq!(Integer::Small(-4).gcd(&Integer::Small(6)), Integer::Small(2));
        assert_eq!(Integer::Small(4).lcm(&Integer::Small(-6)), Integer::Small(12));
    }

    #[test]
    fn f2_is_characteristic_two() {
        let one = F2::one();
        assert!(Coefficient::is_zero(&one.add(&one)));
        assert_eq!(F2::from_i64(-3), F2(true));
        assert_eq!(F2::from_i64(4), F2(false));
    }
}
