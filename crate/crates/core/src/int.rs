//! Integer coefficients with an inline fast path.
//!
//! Most coefficients met in practice fit in an `i64`; the big variant is
//! only allocated when a checked operation overflows.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{AddAssign, Neg, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug)]
pub enum Int {
    Small(i64),
    Big(BigInt),
}

impl Int {
    pub const ZERO: Int = Int::Small(0);
    pub const ONE: Int = Int::Small(1);

    #[inline]
    pub fn is_zero(&self) -> bool {
        match self {
            Int::Small(v) => *v == 0,
            Int::Big(b) => b.is_zero(),
        }
    }

    #[inline]
    pub fn is_negative(&self) -> bool {
        match self {
            Int::Small(v) => *v < 0,
            Int::Big(b) => b.is_negative(),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => b.clone(),
        }
    }

    pub fn from_bigint(b: BigInt) -> Int {
        match b.to_i64() {
            Some(v) => Int::Small(v),
            None => Int::Big(b),
        }
    }

    pub fn mul(&self, other: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            if let Some(v) = a.checked_mul(*b) {
                return Int::Small(v);
            }
        }
        Int::from_bigint(self.to_bigint() * other.to_bigint())
    }

    /// `self += a * b`, the inner step of every polynomial product.
    #[inline]
    pub fn add_mul(&mut self, a: &Int, b: &Int) {
        if let (Int::Small(acc), Int::Small(x), Int::Small(y)) = (&*self, a, b) {
            if let Some(p) = x.checked_mul(*y) {
                if let Some(s) = acc.checked_add(p) {
                    *self = Int::Small(s);
                    return;
                }
            }
        }
        let s = self.to_bigint() + a.to_bigint() * b.to_bigint();
        *self = Int::from_bigint(s);
    }

    /// Exact quotient. The caller guarantees divisibility.
    pub fn div_exact(&self, other: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            if let Some(q) = a.checked_div(*b) {
                debug_assert_eq!(a % b, 0);
                return Int::Small(q);
            }
        }
        let (q, r) = self.to_bigint().div_rem(&other.to_bigint());
        debug_assert!(r.is_zero());
        Int::from_bigint(q)
    }

    /// Quotient if `other` divides `self`, otherwise `None`.
    pub fn checked_div_exact(&self, other: &Int) -> Option<Int> {
        if other.is_zero() {
            return None;
        }
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            if let Some(r) = a.checked_rem(*b) {
                return if r == 0 { Some(Int::Small(a / b)) } else { None };
            }
        }
        let (q, r) = self.to_bigint().div_rem(&other.to_bigint());
        if r.is_zero() {
            Some(Int::from_bigint(q))
        } else {
            None
        }
    }

    pub fn gcd(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) if *a != i64::MIN && *b != i64::MIN => {
                Int::Small(a.gcd(b))
            }
            _ => Int::from_bigint(self.to_bigint().gcd(&other.to_bigint())),
        }
    }

    pub fn abs(&self) -> Int {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Int {
        Int::Small(v)
    }
}

impl From<BigInt> for Int {
    fn from(b: BigInt) -> Int {
        Int::from_bigint(b)
    }
}

impl Neg for Int {
    type Output = Int;
    fn neg(self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(n) => Int::Small(n),
                None => Int::Big(-BigInt::from(v)),
            },
            Int::Big(b) => Int::from_bigint(-b),
        }
    }
}

impl AddAssign<&Int> for Int {
    fn add_assign(&mut self, rhs: &Int) {
        if let (Int::Small(a), Int::Small(b)) = (&*self, rhs) {
            if let Some(s) = a.checked_add(*b) {
                *self = Int::Small(s);
                return;
            }
        }
        *self = Int::from_bigint(self.to_bigint() + rhs.to_bigint());
    }
}

impl SubAssign<&Int> for Int {
    fn sub_assign(&mut self, rhs: &Int) {
        if let (Int::Small(a), Int::Small(b)) = (&*self, rhs) {
            if let Some(s) = a.checked_sub(*b) {
                *self = Int::Small(s);
                return;
            }
        }
        *self = Int::from_bigint(self.to_bigint() - rhs.to_bigint());
    }
}

impl PartialEq for Int {
    fn eq(&self, other: &Int) -> bool {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a == b,
            _ => self.to_bigint() == other.to_bigint(),
        }
    }
}

impl Eq for Int {}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Int) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Int) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            _ => self.to_bigint().cmp(&other.to_bigint()),
        }
    }
}

impl Zero for Int {
    fn zero() -> Int {
        Int::ZERO
    }
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
}

impl One for Int {
    fn one() -> Int {
        Int::ONE
    }
}

impl core::ops::Add for Int {
    type Output = Int;
    fn add(mut self, rhs: Int) -> Int {
        self += &rhs;
        self
    }
}

impl core::ops::Mul for Int {
    type Output = Int;
    fn mul(self, rhs: Int) -> Int {
        Int::mul(&self, &rhs)
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(v) => write!(f, "{v}"),
            Int::Big(b) => write!(f, "{b}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes() {
        let a = Int::from(i64::MAX);
        let b = a.mul(&Int::from(4));
        assert!(matches!(b, Int::Big(_)));
        assert_eq!(b.div_exact(&Int::from(4)), a);
        let mut c = Int::from(i64::MAX);
        c += &Int::from(1);
        assert_eq!(c.to_bigint(), BigInt::from(i64::MAX) + 1);
        c -= &Int::from(1);
        assert!(matches!(c, Int::Small(_)));
    }

    #[test]
    fn add_mul_matches_bigint() {
        let mut acc = Int::from(7);
        acc.add_mul(&Int::from(i64::MAX), &Int::from(3));
        assert_eq!(acc.to_bigint(), BigInt::from(i64::MAX) * 3 + 7);
    }

    #[test]
    fn exact_division_checks() {
        assert_eq!(Int::from(12).checked_div_exact(&Int::from(4)), Some(Int::from(3)));
        assert_eq!(Int::from(13).checked_div_exact(&Int::from(4)), None);
        assert_eq!(Int::from(1).checked_div_exact(&Int::ZERO), None);
        assert_eq!(Int::from(i64::MIN).checked_div_exact(&Int::from(-1)).unwrap().to_bigint(), -BigInt::from(i64::MIN));
    }
}
