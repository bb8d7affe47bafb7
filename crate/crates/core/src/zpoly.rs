//! Packed integer polynomials: the arithmetic engine behind large
//! products, exact divisions and determinants.
//!
//! A monomial is packed into a `u128` with one bit field per variable,
//! `x1` in the most significant field, and (for graded orders) the total
//! degree above all of them. Monomial multiplication is then integer
//! addition and the numeric order of keys equals the term order.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Reverse;

use hashbrown::HashMap;

use crate::int::Int;
use crate::monomial::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Packing {
    nvars: u32,
    bits: u32,
    graded: bool,
}

impl Packing {
    /// Layout able to hold every monomial of total degree at most
    /// `max_degree` over `nvars` variables, if one fits in 128 bits.
    pub(crate) fn new(nvars: usize, max_degree: u32, graded: bool) -> Option<Packing> {
        let bits = (32 - max_degree.max(1).leading_zeros()).max(1);
        let fields = nvars as u32 + u32::from(graded);
        if fields.checked_mul(bits)? > 128 {
            return None;
        }
        Some(Packing { nvars: nvars as u32, bits, graded })
    }

    #[inline]
    fn mask(&self) -> u128 {
        (1u128 << self.bits) - 1
    }

    #[inline]
    fn shift(&self, var: u32) -> u32 {
        (self.nvars - 1 - var) * self.bits
    }

    pub(crate) fn pack(&self, m: &Monomial) -> u128 {
        let mut key = 0u128;
        let mut deg = 0u128;
        for (i, &e) in m.exponents().iter().enumerate() {
            key |= (e as u128) << self.shift(i as u32);
            deg += e as u128;
        }
        if self.graded {
            key |= deg << (self.nvars * self.bits);
        }
        key
    }

    pub(crate) fn unpack(&self, key: u128) -> Monomial {
        let mut m = Monomial::one(self.nvars as usize);
        for i in 0..self.nvars {
            m.set(i as usize, ((key >> self.shift(i)) & self.mask()) as u16);
        }
        m
    }

    #[inline]
    pub(crate) fn exponent(&self, key: u128, var: u32) -> u32 {
        ((key >> self.shift(var)) & self.mask()) as u32
    }

    /// `Some(b - a)` when monomial `a` divides monomial `b`.
    #[inline]
    fn quotient(&self, a: u128, b: u128) -> Option<u128> {
        for v in 0..self.nvars {
            if self.exponent(a, v) > self.exponent(b, v) {
                return None;
            }
        }
        Some(b - a)
    }
}

/// Integer polynomial with terms sorted strictly descending by key.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct ZPoly {
    pub(crate) terms: Vec<(u128, Int)>,
}

impl ZPoly {
    pub(crate) fn zero() -> ZPoly {
        ZPoly { terms: Vec::new() }
    }

    pub(crate) fn constant(c: Int, packing: &Packing) -> ZPoly {
        if c.is_zero() {
            return ZPoly::zero();
        }
        ZPoly { terms: alloc::vec![(packing.pack(&Monomial::one(packing.nvars as usize)), c)] }
    }

    /// Builds from unsorted terms, merging duplicates and dropping zeros.
    pub(crate) fn from_unsorted(mut terms: Vec<(u128, Int)>) -> ZPoly {
        terms.sort_unstable_by_key(|t| Reverse(t.0));
        let mut out: Vec<(u128, Int)> = Vec::with_capacity(terms.len());
        for (k, c) in terms {
            match out.last_mut() {
                Some((lk, lc)) if *lk == k => *lc += &c,
                _ => out.push((k, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        ZPoly { terms: out }
    }

    #[inline]
    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn len(&self) -> usize {
        self.terms.len()
    }

    pub(crate) fn neg(&self) -> ZPoly {
        ZPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect() }
    }

    #[cfg(test)]
    fn merge(&self, other: &ZPoly, negate_other: bool) -> ZPoly {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let sign = |c: &Int| if negate_other { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            if a[i].0 > b[j].0 {
                out.push(a[i].clone());
                i += 1;
            } else if a[i].0 < b[j].0 {
                out.push((b[j].0, sign(&b[j].1)));
                j += 1;
            } else {
                let mut c = a[i].1.clone();
                if negate_other {
                    c -= &b[j].1;
                } else {
                    c += &b[j].1;
                }
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(k, c)| (*k, sign(c))));
        ZPoly { terms: out }
    }

    #[cfg(test)]
    pub(crate) fn add(&self, other: &ZPoly) -> ZPoly {
        self.merge(other, false)
    }

    #[cfg(test)]
    pub(crate) fn sub(&self, other: &ZPoly) -> ZPoly {
        self.merge(other, true)
    }

    pub(crate) fn scale(&self, c: &Int) -> ZPoly {
        if c.is_zero() {
            return ZPoly::zero();
        }
        ZPoly { terms: self.terms.iter().map(|(k, v)| (*k, v.mul(c))).collect() }
    }

    pub(crate) fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.len() == 1 {
            let (k, c) = &small.terms[0];
            return ZPoly { terms: large.terms.iter().map(|(lk, lc)| (lk + k, lc.mul(c))).collect() };
        }
        let mut acc: HashMap<u128, Int> =
            HashMap::with_capacity((small.len() * large.len()).min(1 << 22));
        for (ka, ca) in &small.terms {
            for (kb, cb) in &large.terms {
                acc.entry(ka + kb).or_insert(Int::ZERO).add_mul(ca, cb);
            }
        }
        let mut terms: Vec<(u128, Int)> = acc.into_iter().filter(|t| !t.1.is_zero()).collect();
        terms.sort_unstable_by_key(|t| Reverse(t.0));
        ZPoly { terms }
    }

    /// `self * a - other * b`, the Bareiss cross term, accumulated in one map.
    pub(crate) fn cross(a: &ZPoly, b: &ZPoly, c: &ZPoly, d: &ZPoly) -> ZPoly {
        let mut acc: HashMap<u128, Int> = HashMap::new();
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                acc.entry(ka + kb).or_insert(Int::ZERO).add_mul(ca, cb);
            }
        }
        for (kc, cc) in &c.terms {
            let ncc = -cc.clone();
            for (kd, cd) in &d.terms {
                acc.entry(kc + kd).or_insert(Int::ZERO).add_mul(&ncc, cd);
            }
        }
        let mut terms: Vec<(u128, Int)> = acc.into_iter().filter(|t| !t.1.is_zero()).collect();
        terms.sort_unstable_by_key(|t| Reverse(t.0));
        ZPoly { terms }
    }

    /// `Σ ±a_i·b_i`, accumulated in one map; `true` negates a product.
    pub(crate) fn sum_of_products(parts: &[(&ZPoly, &ZPoly, bool)]) -> ZPoly {
        let mut acc: HashMap<u128, Int> = HashMap::new();
        for (a, b, negate) in parts {
            let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
            for (ks, cs) in &small.terms {
                let cs = if *negate { -cs.clone() } else { cs.clone() };
                for (kl, cl) in &large.terms {
                    acc.entry(ks + kl).or_insert(Int::ZERO).add_mul(&cs, cl);
                }
            }
        }
        let mut terms: Vec<(u128, Int)> = acc.into_iter().filter(|t| !t.1.is_zero()).collect();
        terms.sort_unstable_by_key(|t| Reverse(t.0));
        ZPoly { terms }
    }

    /// Quotient of an exact division, `None` if `divisor` does not divide
    /// `self` over the integers.
    pub(crate) fn div_exact(&self, divisor: &ZPoly, packing: &Packing) -> Option<ZPoly> {
        let (lk, lc) = divisor.terms.first()?;
        if divisor.len() == 1 {
            let mut terms = Vec::with_capacity(self.len());
            for (k, c) in &self.terms {
                terms.push((packing.quotient(*lk, *k)?, c.checked_div_exact(lc)?));
            }
            return Some(ZPoly { terms });
        }
        let mut rem: BTreeMap<u128, Int> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        let tail = &divisor.terms[1..];
        while let Some((k, c)) = rem.pop_last() {
            let qk = packing.quotient(*lk, k)?;
            let qc = c.checked_div_exact(lc)?;
            for (tk, tc) in tail {
                let key = qk + tk;
                let mut entry = rem.remove(&key).unwrap_or(Int::ZERO);
                entry -= &qc.mul(tc);
                if !entry.is_zero() {
                    rem.insert(key, entry);
                }
            }
            quot.push((qk, qc));
        }
        Some(ZPoly { terms: quot })
    }

    pub(crate) fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g == Int::ONE {
                break;
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(packing: &Packing, terms: &[(&[u16], i64)]) -> ZPoly {
        ZPoly::from_unsorted(
            terms.iter().map(|(e, c)| (packing.pack(&Monomial::from_exponents(e)), Int::from(*c))).collect(),
        )
    }

    #[test]
    fn packed_order_is_graded_lex() {
        let pk = Packing::new(3, 4, true).unwrap();
        let a = pk.pack(&Monomial::from_exponents(&[0, 0, 3]));
        let b = pk.pack(&Monomial::from_exponents(&[2, 0, 0]));
        let c = pk.pack(&Monomial::from_exponents(&[1, 1, 0]));
        assert!(a > b && b > c);
        assert_eq!(pk.unpack(a).exponents(), &[0, 0, 3]);
    }

    #[test]
    fn product_then_division_round_trips() {
        let pk = Packing::new(2, 6, true).unwrap();
        let x = p(&pk, &[(&[1, 0], 1), (&[0, 1], -1)]);
        let y = p(&pk, &[(&[2, 0], 3), (&[1, 1], 1), (&[0, 0], 5)]);
        let prod = x.mul(&y);
        assert_eq!(prod.div_exact(&x, &pk).unwrap(), y);
        assert_eq!(prod.div_exact(&y, &pk).unwrap(), x);
        let off = prod.add(&ZPoly::constant(Int::ONE, &pk));
        assert!(off.div_exact(&x, &pk).is_none());
    }

    #[test]
    fn cross_matches_separate_products() {
        let pk = Packing::new(2, 6, true).unwrap();
        let a = p(&pk, &[(&[1, 0], 2), (&[0, 1], 1)]);
        let b = p(&pk, &[(&[1, 1], 1), (&[0, 0], -4)]);
        let c = p(&pk, &[(&[0, 2], 7)]);
        let d = p(&pk, &[(&[1, 0], 1), (&[0, 0], 1)]);
        assert_eq!(ZPoly::cross(&a, &b, &c, &d), a.mul(&b).sub(&c.mul(&d)));
    }
}
