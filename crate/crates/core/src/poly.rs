//! Sparse multivariate polynomials over exact rationals.
//!
//! Terms are kept in a vector sorted strictly descending in the term order
//! of the polynomial's [`Universe`]; zero coefficients are never stored, so
//! structural equality is mathematical equality.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use hashbrown::HashMap;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::int::Int;
use crate::monomial::{DisplayMonomial, Monomial, MonomialOrder, Universe};
use crate::scalar::{self, Scalar};
use crate::zpoly::{Packing, ZPoly};

/// Products with at least this many term pairs go through the packed
/// integer engine.
const PACKED_PRODUCT_THRESHOLD: usize = 256;

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    universe: Arc<Universe>,
    terms: Vec<(Monomial, Scalar)>,
}

/// Selector for [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Pow(u32),
}

/// `p op q` with universe checking. For `Pow(k)` the right operand is ignored.
pub fn poly_arith(p: &Polynomial, q: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    if let ArithOp::Pow(k) = op {
        return Ok(p.pow(k));
    }
    p.check_universe(q)?;
    Ok(match op {
        ArithOp::Add => p + q,
        ArithOp::Sub => p - q,
        ArithOp::Mul => p * q,
        ArithOp::Pow(_) => unreachable!(),
    })
}

impl Polynomial {
    pub fn zero(universe: &Arc<Universe>) -> Polynomial {
        Polynomial { universe: universe.clone(), terms: Vec::new() }
    }

    pub fn one(universe: &Arc<Universe>) -> Polynomial {
        Polynomial::constant(universe, Scalar::one())
    }

    pub fn constant(universe: &Arc<Universe>, c: Scalar) -> Polynomial {
        let mut p = Polynomial::zero(universe);
        if !c.is_zero() {
            p.terms.push((Monomial::one(universe.len()), c));
        }
        p
    }

    /// The variable at position `index` of the universe.
    pub fn variable(universe: &Arc<Universe>, index: usize) -> Polynomial {
        assert!(index < universe.len(), "variable index out of range");
        Polynomial {
            universe: universe.clone(),
            terms: alloc::vec![(Monomial::variable(universe.len(), index), Scalar::one())],
        }
    }

    pub fn var(universe: &Arc<Universe>, name: &str) -> Option<Polynomial> {
        universe.index_of(name).map(|i| Polynomial::variable(universe, i))
    }

    pub fn monomial(universe: &Arc<Universe>, mono: Monomial, c: Scalar) -> Polynomial {
        assert_eq!(mono.len(), universe.len());
        let mut p = Polynomial::zero(universe);
        if !c.is_zero() {
            p.terms.push((mono, c));
        }
        p
    }

    /// Canonicalizes an arbitrary term list: merges repeats, drops zeros, sorts.
    pub fn from_terms<I>(universe: &Arc<Universe>, terms: I) -> Polynomial
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut map: HashMap<Monomial, Scalar> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), universe.len(), "monomial length differs from universe");
            *map.entry(m).or_insert_with(Scalar::zero) += c;
        }
        Polynomial::from_map(universe, map)
    }

    fn from_map(universe: &Arc<Universe>, map: HashMap<Monomial, Scalar>) -> Polynomial {
        let mut terms: Vec<(Monomial, Scalar)> = map.into_iter().filter(|t| !t.1.is_zero()).collect();
        let order = universe.order();
        terms.sort_unstable_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { universe: universe.clone(), terms }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The constant coefficient if this is a constant polynomial.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.as_slice() {
            [] => Some(Scalar::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Scalar {
        let order = self.universe.order();
        match self.terms.binary_search_by(|(m, _)| order.cmp(mono, m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.exponents()[var] as u32).max()
    }

    /// Degree restricted to the given subset of variables.
    pub fn degree_in_block(&self, vars: &[usize]) -> Option<u32> {
        self.terms
            .iter()
            .map(|(m, _)| vars.iter().map(|&v| m.exponents()[v] as u32).sum())
            .max()
    }

    /// `Some(d)` when every term has total degree `d` (zero counts as homogeneous of degree 0).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.iter().map(|(m, _)| m.degree());
        let first = it.next().unwrap_or(0);
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_in_block(&self, vars: &[usize]) -> Option<u32> {
        let mut degs = self.terms.iter().map(|(m, _)| vars.iter().map(|&v| m.exponents()[v] as u32).sum::<u32>());
        let first = degs.next().unwrap_or(0);
        degs.all(|d| d == first).then_some(first)
    }

    pub(crate) fn check_universe(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.universe, &other.universe) || self.universe == other.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.universe);
        }
        Polynomial {
            universe: self.universe.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        assert!(self.check_universe(other).is_ok(), "universe mismatch");
        let order = self.universe.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (a, b) = (&self.terms, &other.terms);
        let (mut i, mut j) = (0, 0);
        let sign = |c: &Scalar| if negate { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), sign(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        Polynomial { universe: self.universe.clone(), terms: out }
    }

    fn mul_impl(&self, other: &Polynomial) -> Polynomial {
        assert!(self.check_universe(other).is_ok(), "universe mismatch");
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.universe);
        }
        if self.terms.len() * other.terms.len() >= PACKED_PRODUCT_THRESHOLD {
            let bound = self.total_degree().unwrap_or(0) + other.total_degree().unwrap_or(0);
            if let Some(pk) = self.packing_for(bound) {
                let (za, da) = self.to_zpoly(&pk);
                let (zb, db) = other.to_zpoly(&pk);
                return Polynomial::from_zpoly(&self.universe, &za.mul(&zb), &pk, &(da * db));
            }
        }
        let mut map: HashMap<Monomial, Scalar> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *map.entry(ma.mul(mb)).or_insert_with(Scalar::zero) += ca * cb;
            }
        }
        Polynomial::from_map(&self.universe, map)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.universe);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub(crate) fn packing_for(&self, max_degree: u32) -> Option<Packing> {
        Packing::new(self.universe.len(), max_degree, self.universe.order() == MonomialOrder::GradedLex)
    }

    /// Integer image `(Z, den)` with `self = Z / den`.
    pub(crate) fn to_zpoly(&self, packing: &Packing) -> (ZPoly, BigInt) {
        let den = scalar::lcm_of_denominators(self.terms.iter().map(|t| &t.1));
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (packing.pack(m), Int::from_bigint(c.numer() * (&den / c.denom()))))
            .collect();
        let mut z = ZPoly { terms };
        if self.universe.order() != MonomialOrder::GradedLex {
            z = ZPoly::from_unsorted(z.terms);
        }
        (z, den)
    }

    /// `z / den` as a rational polynomial.
    pub(crate) fn from_zpoly(universe: &Arc<Universe>, z: &ZPoly, packing: &Packing, den: &BigInt) -> Polynomial {
        let terms: Vec<(Monomial, Scalar)> = z
            .terms
            .iter()
            .map(|(k, c)| (packing.unpack(*k), Scalar::new(c.to_bigint(), den.clone())))
            .collect();
        let mut p = Polynomial { universe: universe.clone(), terms };
        if universe.order() != MonomialOrder::GradedLex {
            let order = universe.order();
            p.terms.sort_unstable_by(|a, b| order.cmp(&b.0, &a.0));
        }
        p
    }

    /// Exact quotient `self / q`.
    pub fn exact_div(&self, q: &Polynomial) -> Result<Polynomial> {
        self.check_universe(q)?;
        if q.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(Polynomial::zero(&self.universe));
        }
        let bound = self.total_degree().unwrap_or(0).max(q.total_degree().unwrap_or(0));
        match self.packing_for(bound) {
            Some(pk) => {
                // Over Z with a primitive divisor the quotient is integral (Gauss).
                let (zp, dp) = self.to_zpoly(&pk);
                let (zq, dq) = q.to_zpoly(&pk);
                let content = zq.content();
                let zq_prim = ZPoly { terms: zq.terms.iter().map(|(k, c)| (*k, c.div_exact(&content))).collect() };
                let quot = zp.div_exact(&zq_prim, &pk).ok_or(Error::NotDivisible)?;
                // self/q = (zp/dp) / (content*zq_prim/dq) = quot * dq / (dp * content)
                let scale = Scalar::new(dq, dp * content.to_bigint());
                Ok(Polynomial::from_zpoly(&self.universe, &quot, &pk, &BigInt::one()).scale(&scale))
            }
            None => self.exact_div_generic(q),
        }
    }

    fn exact_div_generic(&self, q: &Polynomial) -> Result<Polynomial> {
        let order = self.universe.order();
        let (lm, lc) = q.terms[0].clone();
        let mut rem: alloc::collections::BTreeMap<OrdMono, Scalar> =
            self.terms.iter().map(|(m, c)| (OrdMono(m.clone(), order), c.clone())).collect();
        let mut quot = Vec::new();
        while let Some((OrdMono(m, _), c)) = rem.pop_last() {
            let qm = lm.quotient_of(&m).ok_or(Error::NotDivisible)?;
            let qc = &c / &lc;
            for (tm, tc) in &q.terms[1..] {
                let key = OrdMono(qm.mul(tm), order);
                let v = rem.remove(&key).unwrap_or_else(Scalar::zero) - &qc * tc;
                if !v.is_zero() {
                    rem.insert(key, v);
                }
            }
            quot.push((qm, qc));
        }
        Ok(Polynomial { universe: self.universe.clone(), terms: quot })
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.universe.len() {
            return Err(Error::LengthMismatch { expected: self.universe.len(), got: point.len() });
        }
        let mut powers: Vec<Vec<Scalar>> = Vec::with_capacity(point.len());
        for (i, x) in point.iter().enumerate() {
            let max = self.degree_in(i).unwrap_or(0) as usize;
            let mut row = Vec::with_capacity(max + 1);
            row.push(Scalar::one());
            for e in 1..=max {
                let next = &row[e - 1] * x;
                row.push(next);
            }
            powers.push(row);
        }
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term *= &powers[i][e as usize];
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Substitutes polynomial `values[i]` (over a common target universe) for variable `i`.
    pub fn substitute(&self, values: &[Polynomial], target: &Arc<Universe>) -> Result<Polynomial> {
        if values.len() != self.universe.len() {
            return Err(Error::LengthMismatch { expected: self.universe.len(), got: values.len() });
        }
        for v in values {
            if !(Arc::ptr_eq(v.universe(), target) || **v.universe() == **target) {
                return Err(Error::UniverseMismatch);
            }
        }
        let mut cache: Vec<Vec<Polynomial>> = values.iter().map(|v| alloc::vec![Polynomial::one(target), v.clone()]).collect();
        let mut total = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e as usize {
                    let next = &cache[i][cache[i].len() - 1] * &values[i];
                    cache[i].push(next);
                }
                term = &term * &cache[i][e as usize];
            }
            total = &total + &term;
        }
        Ok(total)
    }

    /// `p(base + t * direction)` as a polynomial in the line parameter `t`.
    pub fn restrict_to_line(&self, base: &[Scalar], direction: &[Scalar]) -> Result<Polynomial> {
        let n = self.universe.len();
        for v in [base, direction] {
            if v.len() != n {
                return Err(Error::LengthMismatch { expected: n, got: v.len() });
            }
        }
        let line = Universe::line();
        let t = Polynomial::variable(&line, 0);
        let values: Vec<Polynomial> = base
            .iter()
            .zip(direction)
            .map(|(b, d)| &Polynomial::constant(&line, b.clone()) + &t.scale(d))
            .collect();
        self.substitute(&values, &line)
    }

    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponents()[var];
            (e > 0).then(|| {
                let mut m2 = m.clone();
                m2.set(var, e - 1);
                (m2, c * scalar::int(e as i64))
            })
        });
        Polynomial::from_terms(&self.universe, terms)
    }

    /// Re-expresses the polynomial over a larger universe; `mapping[i]` is the
    /// target index of variable `i`.
    pub fn embed(&self, target: &Arc<Universe>, mapping: &[usize]) -> Polynomial {
        assert_eq!(mapping.len(), self.universe.len());
        let terms = self.terms.iter().map(|(m, c)| {
            let mut out = Monomial::one(target.len());
            for (i, &e) in m.exponents().iter().enumerate() {
                out.set(mapping[i], e);
            }
            (out, c.clone())
        });
        Polynomial::from_terms(target, terms)
    }

    /// Embeds into `target` matching variables by name.
    pub fn embed_by_name(&self, target: &Arc<Universe>) -> Result<Polynomial> {
        let mapping = self
            .universe
            .names()
            .iter()
            .map(|n| target.index_of(n).ok_or_else(|| Error::Unsupported(alloc::format!("variable {n} missing from target"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.embed(target, &mapping))
    }

    /// Canonical scalar representative: denominators cleared, integer
    /// content removed, leading coefficient positive.
    pub fn normalized(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let coeffs: Vec<Scalar> = self.terms.iter().map(|t| t.1.clone()).collect();
        let prim = scalar::primitive_vector(&coeffs);
        Polynomial {
            universe: self.universe.clone(),
            terms: self.terms.iter().zip(prim).map(|((m, _), c)| (m.clone(), c)).collect(),
        }
    }

    /// Coefficients in `t` of a univariate polynomial, ascending.
    pub fn univariate_coefficients(&self) -> Result<Vec<Scalar>> {
        if self.universe.len() != 1 {
            return Err(Error::DimensionMismatch(String::from("expected a univariate polynomial")));
        }
        let deg = self.total_degree().unwrap_or(0) as usize;
        let mut out = alloc::vec![Scalar::zero(); deg + 1];
        for (m, c) in &self.terms {
            out[m.exponents()[0] as usize] = c.clone();
        }
        Ok(out)
    }

    pub fn from_univariate_coefficients(universe: &Arc<Universe>, coeffs: &[Scalar]) -> Polynomial {
        assert_eq!(universe.len(), 1);
        Polynomial::from_terms(
            universe,
            coeffs.iter().enumerate().map(|(e, c)| (Monomial::from_exponents(&[e as u16]), c.clone())),
        )
    }

    /// Parses the canonical text grammar against a universe.
    pub fn parse(universe: &Arc<Universe>, text: &str) -> Result<Polynomial> {
        crate::grammar::parse(universe, text)
    }
}

/// Largest `e` with `t^e | u` for a nonzero univariate polynomial.
pub fn root_multiplicity_at_zero(u: &Polynomial) -> Result<u32> {
    if u.universe().len() != 1 {
        return Err(Error::DimensionMismatch(String::from("expected a univariate polynomial")));
    }
    u.terms.iter().map(|(m, _)| m.exponents()[0] as u32).min().ok_or(Error::ZeroPolynomial)
}

#[derive(Clone, PartialEq, Eq)]
struct OrdMono(Monomial, MonomialOrder);

impl PartialOrd for OrdMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrdMono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.1.cmp(&self.0, &other.0)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.mul_impl(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            universe: self.universe.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Canonical text: terms in descending order, `c*m` with `c` written as
/// `p/q`, `^` for powers and `*` between factors.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mono = DisplayMonomial { mono: m, universe: &self.universe };
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Polynomial {
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Integer coefficients, when every coefficient is integral and fits in `i64`.
    pub fn small_integer_coefficients(&self) -> Option<Vec<i64>> {
        self.terms.iter().map(|(_, c)| if c.is_integer() { c.to_integer().to_i64() } else { None }).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn x3() -> Arc<Universe> {
        Universe::coordinates(3)
    }

    fn parse(u: &Arc<Universe>, s: &str) -> Polynomial {
        Polynomial::parse(u, s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let u = Universe::coordinates(2);
        let p = parse(&u, "x1 + x2");
        let q = parse(&u, "x1 - x2");
        assert_eq!(&p * &q, parse(&u, "x1^2 - x2^2"));
        assert_eq!(&p + &Polynomial::zero(&u), p);
        let sq = p.pow(2);
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(sq.terms()[1].1, int(2));
    }

    #[test]
    fn universe_mismatch_is_an_error() {
        let p = Polynomial::one(&Universe::coordinates(2));
        let q = Polynomial::one(&Universe::coordinates(3));
        assert_eq!(poly_arith(&p, &q, ArithOp::Add), Err(Error::UniverseMismatch));
        assert!(poly_arith(&p, &q, ArithOp::Pow(3)).is_ok());
    }

    #[test]
    fn exact_division_cases() {
        let u = Universe::coordinates(2);
        let num = parse(&u, "x1^2 - x2^2");
        let den = parse(&u, "x1 - x2");
        assert_eq!(num.exact_div(&den).unwrap(), parse(&u, "x1 + x2"));
        assert_eq!(parse(&u, "x1^2 + x2^2").exact_div(&den), Err(Error::NotDivisible));
        assert_eq!(num.exact_div(&Polynomial::one(&u)).unwrap(), num);
        assert_eq!(num.exact_div(&Polynomial::zero(&u)), Err(Error::DivisionByZeroPolynomial));
        // rational coefficients on both sides
        let a = parse(&u, "1/2*x1 + 3/4");
        let b = parse(&u, "2/3*x2 - 5");
        assert_eq!((&a * &b).exact_div(&a).unwrap(), b);
    }

    #[test]
    fn exact_division_lex_and_generic_paths() {
        let u = Universe::new(["x", "y"], MonomialOrder::Lex);
        let a = parse(&u, "x^2*y - 3*y + 1");
        let b = parse(&u, "x - 2/7*y^3");
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert_eq!(prod.exact_div_generic(&a).unwrap(), b);
        assert_eq!((&prod + &Polynomial::one(&u)).exact_div_generic(&a), Err(Error::NotDivisible));
    }

    #[test]
    fn evaluation_examples() {
        let u = x3();
        let f = parse(&u, "x2^2 - x1*x3");
        assert_eq!(f.eval(&[int(1), int(2), int(4)]).unwrap(), int(0));
        assert_eq!(f.eval(&[int(1), int(1), int(0)]).unwrap(), int(1));
        let c = Polynomial::constant(&u, ratio(7, 3));
        assert_eq!(c.eval(&[int(5), int(-1), int(2)]).unwrap(), ratio(7, 3));
        assert!(matches!(f.eval(&[int(1)]), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn line_restriction_examples() {
        let u = Universe::matrix_entries(2);
        let p = parse(&u, "a11^2");
        let base = [int(1), int(0), int(0), int(0)];
        let dir = [int(2), int(0), int(0), int(0)];
        let r = p.restrict_to_line(&base, &dir).unwrap();
        assert_eq!(r, parse(&Universe::line(), "4*t^2 + 4*t + 1"));
        let c = Polynomial::constant(&u, int(5)).restrict_to_line(&base, &dir).unwrap();
        assert_eq!(c.total_degree(), Some(0));
        assert!(p.restrict_to_line(&base[..2], &dir).is_err());
    }

    #[test]
    fn multiplicity_at_zero() {
        let t = Universe::line();
        assert_eq!(root_multiplicity_at_zero(&parse(&t, "t^3 - t^2")).unwrap(), 2);
        assert_eq!(root_multiplicity_at_zero(&parse(&t, "5")).unwrap(), 0);
        assert_eq!(root_multiplicity_at_zero(&parse(&t, "t^5")).unwrap(), 5);
        assert_eq!(root_multiplicity_at_zero(&Polynomial::zero(&t)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn normalization_is_canonical() {
        let u = x3();
        let p = parse(&u, "-1/2*x1^2 + 3/4*x2*x3");
        let n = p.normalized();
        assert_eq!(n, parse(&u, "2*x1^2 - 3*x2*x3"));
        assert_eq!(p.scale(&ratio(-8, 5)).normalized(), n);
    }

    #[test]
    fn packed_and_generic_products_agree() {
        let u = x3();
        let p = parse(&u, "x1^3 - 2*x1*x2 + 1/3*x3^2 + x2 - 7 + x1*x2*x3 + x3^4");
        let q = p.pow(2);
        let mut map: HashMap<Monomial, Scalar> = HashMap::new();
        for (ma, ca) in p.terms() {
            for (mb, cb) in q.terms() {
                *map.entry(ma.mul(mb)).or_insert_with(Scalar::zero) += ca * cb;
            }
        }
        assert_eq!(Polynomial::from_map(&u, map), &p * &q);
        assert_eq!(p.pow(3), &p * &q);
    }

    #[test]
    fn derivative_and_substitution() {
        let u = x3();
        let f = parse(&u, "x1^2*x3 - 4*x2");
        assert_eq!(f.partial_derivative(0), parse(&u, "2*x1*x3"));
        assert_eq!(f.partial_derivative(1), parse(&u, "-4"));
        let t = Universe::line();
        let vals = [parse(&t, "t"), parse(&t, "1"), parse(&t, "t + 1")];
        assert_eq!(f.substitute(&vals, &t).unwrap(), parse(&t, "t^3 + t^2 - 4"));
    }
}
