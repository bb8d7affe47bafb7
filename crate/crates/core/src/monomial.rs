use core::cmp::Ordering;
use core::fmt;

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use smallvec::SmallVec;

/// Exponent vector over a declared [`Universe`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: SmallVec<[u16; 16]>,
}

impl Monomial {
    pub fn one(len: usize) -> Monomial {
        Monomial { exps: SmallVec::from_elem(0, len) }
    }

    pub fn from_exponents(exps: &[u16]) -> Monomial {
        Monomial { exps: SmallVec::from_slice(exps) }
    }

    pub fn variable(len: usize, index: usize) -> Monomial {
        let mut m = Monomial::one(len);
        m.exps[index] = 1;
        m
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len(), other.len());
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).expect("monomial exponent overflow"))
            .collect();
        Monomial { exps }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let exps = self
            .exps
            .iter()
            .map(|&e| {
                u16::try_from(e as u64 * k as u64).expect("monomial exponent overflow")
            })
            .collect();
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if it exists.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = SmallVec::with_capacity(self.len());
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            exps.push(b.checked_sub(*a)?);
        }
        Some(Monomial { exps })
    }

    pub fn set(&mut self, index: usize, exp: u16) {
        self.exps[index] = exp;
    }
}

/// Term order of a universe. Within one degree both orders are
/// lexicographic with `x1 > x2 > ... > xn`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Total degree first, ties broken lexicographically.
    GradedLex,
    Lex,
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::GradedLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| a.exps.as_slice().cmp(b.exps.as_slice())),
            MonomialOrder::Lex => a.exps.as_slice().cmp(b.exps.as_slice()),
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            MonomialOrder::GradedLex => "grlex",
            MonomialOrder::Lex => "lex",
        }
    }
}

/// Ordered list of variable names plus the term order used for them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Universe {
    names: Vec<String>,
    order: MonomialOrder,
}

impl Universe {
    pub fn new<I, S>(names: I, order: MonomialOrder) -> Arc<Universe>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        debug_assert!(
            names.iter().enumerate().all(|(i, a)| names[..i].iter().all(|b| a != b)),
            "duplicate variable names"
        );
        Arc::new(Universe { names, order })
    }

    /// The matrix entries `a11, a12, ..., ann`, row-major.
    pub fn matrix_entries(n: usize) -> Arc<Universe> {
        Universe::new(matrix_entry_names(n), MonomialOrder::GradedLex)
    }

    /// Coordinates `x1, ..., xn`.
    pub fn coordinates(n: usize) -> Arc<Universe> {
        Universe::new((1..=n).map(|i| format!("x{i}")), MonomialOrder::GradedLex)
    }

    /// The single line parameter `t`.
    pub fn line() -> Arc<Universe> {
        Universe::new(["t"], MonomialOrder::GradedLex)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

pub(crate) fn matrix_entry_names(n: usize) -> Vec<String> {
    let mut names = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            if n < 10 {
                names.push(format!("a{i}{j}"));
            } else {
                names.push(format!("a{i}_{j}"));
            }
        }
    }
    names
}

pub(crate) struct DisplayMonomial<'a> {
    pub(crate) mono: &'a Monomial,
    pub(crate) universe: &'a Universe,
}

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, name) in self.mono.exponents().iter().zip(self.universe.names()) {
            if *e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(name)?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_reads_quadratic_basis_in_order() {
        // x1^2 > x1x2 > x1x3 > x2^2 > x2x3 > x3^2
        let basis = [[2, 0, 0], [1, 1, 0], [1, 0, 1], [0, 2, 0], [0, 1, 1], [0, 0, 2]];
        for w in basis.windows(2) {
            let a = Monomial::from_exponents(&w[0]);
            let b = Monomial::from_exponents(&w[1]);
            assert_eq!(MonomialOrder::GradedLex.cmp(&a, &b), Ordering::Greater);
        }
        let cubic = Monomial::from_exponents(&[0, 0, 3]);
        let quad = Monomial::from_exponents(&[2, 0, 0]);
        assert_eq!(MonomialOrder::GradedLex.cmp(&cubic, &quad), Ordering::Greater);
        assert_eq!(MonomialOrder::Lex.cmp(&cubic, &quad), Ordering::Less);
    }

    #[test]
    fn quotient_and_divisibility() {
        let a = Monomial::from_exponents(&[1, 0, 2]);
        let b = Monomial::from_exponents(&[2, 1, 2]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b).unwrap().exponents(), &[1, 1, 0]);
        assert!(b.quotient_of(&a).is_none());
        assert_eq!(a.mul(&a).exponents(), a.pow(2).exponents());
    }

    #[test]
    fn entry_names() {
        let u = Universe::matrix_entries(2);
        assert_eq!(u.names(), &["a11", "a12", "a21", "a22"]);
        assert_eq!(u.index_of("a21"), Some(2));
    }
}
