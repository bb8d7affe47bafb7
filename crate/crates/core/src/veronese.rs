//! Degree-`d` monomial bases, symmetric powers and polarization.
//!
//! Vectors are plain monomial evaluations: the entry at basis position `m`
//! of `mon_vector(v, d)` is `m(v)`, with no multinomial weights. With this
//! convention `ρ_d(A)·mon(v) = mon(A·v)` and `C_f·mon(v) = f(v)` hold at
//! the same time.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder, Universe};
use crate::poly::Polynomial;
use crate::polymatrix::{PolyMatrix, QMatrix};
use crate::scalar::{self, Scalar};

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `N = C(n−1+d, d)`.
pub fn basis_size(n: usize, d: u32) -> usize {
    binomial(n as u64 - 1 + d as u64, d as u64) as usize
}

/// The degree-`d` monomials in `n` variables, strictly descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    n: usize,
    d: u32,
    members: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(n: usize, d: u32) -> MonomialBasis {
        let mut members = Vec::with_capacity(basis_size(n, d));
        let mut exps = alloc::vec![0u16; n];
        fill(&mut exps, 0, d, &mut members);
        let index = members.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        MonomialBasis { n, d, members, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Monomial] {
        &self.members
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

// Lexicographically descending enumeration: larger leading exponents first.
fn fill(exps: &mut [u16], at: usize, left: u32, out: &mut Vec<Monomial>) {
    if at + 1 == exps.len() {
        exps[at] = left as u16;
        out.push(Monomial::from_exponents(exps));
        return;
    }
    if exps.is_empty() {
        return;
    }
    for e in (0..=left).rev() {
        exps[at] = e as u16;
        fill(exps, at + 1, left - e, out);
    }
    exps[at] = 0;
}

/// `(m(v))` over the degree-`d` basis.
pub fn mon_vector(v: &[Scalar], d: u32) -> Vec<Scalar> {
    let basis = MonomialBasis::new(v.len(), d);
    basis
        .members()
        .iter()
        .map(|m| {
            m.exponents().iter().zip(v).fold(Scalar::one(), |acc, (&e, x)| {
                if e == 0 {
                    acc
                } else {
                    acc * num_traits::pow(x.clone(), e as usize)
                }
            })
        })
        .collect()
}

/// Coefficients, over the degree-`d` basis, of `Π_i ℓ_i^{e_i}` for each basis
/// monomial `e`, where `ℓ_i = Σ_j row_i[j]·x_j`. Generic over the coefficient
/// ring through the two closures.
fn power_rows<T: Clone>(
    basis: &MonomialBasis,
    rows: &[Vec<T>],
    one: T,
    zero: &T,
    is_zero: impl Fn(&T) -> bool,
    mul_add: impl Fn(&mut T, &T, &T),
) -> Vec<Vec<T>> {
    let n = basis.n();
    // Products of linear forms indexed by partial exponent vectors.
    let mut cache: HashMap<Vec<u16>, HashMap<Vec<u16>, T>> = HashMap::new();
    let mut out = Vec::with_capacity(basis.len());
    for m in basis.members() {
        let mut acc: HashMap<Vec<u16>, T> = HashMap::new();
        acc.insert(alloc::vec![0u16; n], one.clone());
        let mut prefix: Vec<u16> = alloc::vec![0u16; n];
        for (i, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                prefix[i] += 1;
                if let Some(hit) = cache.get(&prefix) {
                    acc = hit.clone();
                    continue;
                }
                let mut next: HashMap<Vec<u16>, T> = HashMap::new();
                for (mono, c) in &acc {
                    for (j, l) in rows[i].iter().enumerate() {
                        if is_zero(l) {
                            continue;
                        }
                        let mut key = mono.clone();
                        key[j] += 1;
                        let slot = next.entry(key).or_insert_with(|| zero.clone());
                        mul_add(slot, c, l);
                    }
                }
                cache.insert(prefix.clone(), next.clone());
                acc = next;
            }
        }
        let mut row = alloc::vec![zero.clone(); basis.len()];
        for (mono, c) in acc {
            let pos = basis.position(&Monomial::from_exponents(&mono)).expect("degree-d monomial");
            row[pos] = c;
        }
        out.push(row);
    }
    out
}

/// `ρ_d(A)`: row `m` holds the coefficients of `m(A·x)`.
pub fn sym_power(a: &PolyMatrix, d: u32) -> Result<PolyMatrix> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    let u = a.universe().clone();
    let basis = MonomialBasis::new(n, d);
    let rows: Vec<Vec<Polynomial>> = (0..n).map(|i| a.row(i).to_vec()).collect();
    let zero = Polynomial::zero(&u);
    let table = power_rows(&basis, &rows, Polynomial::one(&u), &zero, Polynomial::is_zero, |slot, c, l| {
        *slot = &*slot + &(c * l);
    });
    PolyMatrix::from_rows(&u, table)
}

/// `ρ_d(A)` for a rational matrix.
pub fn sym_power_q(a: &QMatrix, d: u32) -> Result<QMatrix> {
    if a.rows() != a.cols() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    let basis = MonomialBasis::new(n, d);
    let rows: Vec<Vec<Scalar>> = (0..n).map(|i| a.row(i).to_vec()).collect();
    let table = power_rows(&basis, &rows, Scalar::one(), &Scalar::zero(), Scalar::is_zero, |slot, c, l| {
        *slot += c * l;
    });
    QMatrix::from_rows(&table)
}

/// Coefficient row of a form of degree `d` in `n` variables, in basis order.
pub fn coeff_row(f: &Polynomial, n: usize, d: u32) -> Result<Vec<Scalar>> {
    if f.universe().len() != n {
        return Err(Error::DimensionMismatch(format!("expected {n} variables, found {}", f.universe().len())));
    }
    if !f.is_zero() && f.homogeneous_degree() != Some(d) {
        return Err(Error::NotHomogeneous(d));
    }
    let basis = MonomialBasis::new(n, d);
    let mut row = alloc::vec![Scalar::zero(); basis.len()];
    for (m, c) in f.terms() {
        row[basis.position(m).expect("homogeneous of degree d")] = c.clone();
    }
    Ok(row)
}

/// Rows spanning the coefficient vectors of `f_i^{d/d_i}` with
/// `d = lcm(d_i)`, reduced to a basis. Returns the matrix and `d`.
pub fn coeff_matrix(generators: &[Polynomial]) -> Result<(QMatrix, u32)> {
    let first = generators.first().ok_or_else(|| Error::DimensionMismatch(String::from("no generators")))?;
    let n = first.universe().len();
    let mut degrees = Vec::with_capacity(generators.len());
    for g in generators {
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if g.universe().len() != n {
            return Err(Error::UniverseMismatch);
        }
        let deg = g.homogeneous_degree().ok_or(Error::NotHomogeneous(g.total_degree().unwrap_or(0)))?;
        if deg == 0 {
            return Err(Error::DegenerateDegree(String::from("constant generator")));
        }
        degrees.push(deg);
    }
    let d = degrees.iter().fold(1u32, |acc, &x| num_integer::lcm(acc, x));
    let mut rows = Vec::with_capacity(generators.len());
    for (g, &dg) in generators.iter().zip(&degrees) {
        rows.push(coeff_row(&g.pow(d / dg), n, d)?);
    }
    let full = QMatrix::from_rows(&rows)?;
    // Keep a maximal independent subset of the rows, in order.
    let mut kept: Vec<Vec<Scalar>> = Vec::new();
    for r in rows {
        let mut trial = kept.clone();
        trial.push(r.clone());
        if QMatrix::from_rows(&trial)?.rank() == trial.len() {
            kept.push(r);
        }
    }
    debug_assert_eq!(kept.len(), full.rank());
    Ok((QMatrix::from_rows(&kept)?, d))
}

/// A partition of `d`, parts stored in non-decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Partition> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::UnsupportedPartition(format!("{parts:?}")));
        }
        parts.sort_unstable();
        Ok(Partition { parts })
    }

    /// Parses `1,2,2,4` or `(1,2,2,4)`.
    pub fn parse(text: &str) -> Result<Partition> {
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse { pos: 0, msg: format!("bad part {p:?}") }))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `s`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `d = Σ μ_j`.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `m_i = |{j : μ_j = i}|` for `i = 1..=d`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let d = self.weight() as usize;
        let mut m = alloc::vec![0u32; d];
        for &p in &self.parts {
            m[p as usize - 1] += 1;
        }
        m
    }

    /// Parts listed largest first.
    pub fn non_increasing(&self) -> Vec<u32> {
        self.parts.iter().rev().copied().collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Variables of `s` blocks of `n` coordinates, named `x{i}_{k}` for
/// coordinate `i` of block `k`, ordered block by block.
pub fn block_universe(n: usize, s: usize) -> Arc<Universe> {
    let mut names = Vec::with_capacity(n * s);
    for k in 1..=s {
        for i in 1..=n {
            names.push(format!("x{i}_{k}"));
        }
    }
    Universe::new(names, MonomialOrder::GradedLex)
}

/// `f_μ(v_1,…,v_s) = (Πμ_i!/d!)·[t^μ] f(Σ t_i v_i)` over [`block_universe`].
pub fn polarize(f: &Polynomial, mu: &Partition) -> Result<Polynomial> {
    let d = mu.weight();
    if !f.is_zero() && f.homogeneous_degree() != Some(d) {
        return Err(Error::NotHomogeneous(d));
    }
    let n = f.universe().len();
    let s = mu.len();
    let blocks = block_universe(n, s);
    let mut names: Vec<String> = blocks.names().to_vec();
    names.extend((1..=s).map(|k| format!("t_{k}")));
    let work = Universe::new(names, MonomialOrder::GradedLex);
    let values: Vec<Polynomial> = (0..n)
        .map(|i| {
            (0..s).fold(Polynomial::zero(&work), |acc, k| {
                &acc + &(&Polynomial::variable(&work, n * s + k) * &Polynomial::variable(&work, k * n + i))
            })
        })
        .collect();
    let expanded = f.substitute(&values, &work)?;
    let mut scale = Scalar::one();
    for &p in mu.parts() {
        scale *= factorial(p);
    }
    scale /= factorial(d);
    let terms = expanded.terms().iter().filter_map(|(m, c)| {
        let e = m.exponents();
        let matches = (0..s).all(|k| e[n * s + k] as u32 == mu.parts()[k]);
        matches.then(|| (Monomial::from_exponents(&e[..n * s]), c * &scale))
    });
    Ok(Polynomial::from_terms(&blocks, terms))
}

fn factorial(k: u32) -> Scalar {
    (1..=k as i64).fold(Scalar::one(), |acc, i| acc * scalar::int(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use alloc::string::ToString;

    fn x(n: usize, s: &str) -> Polynomial {
        Polynomial::parse(&Universe::coordinates(n), s).unwrap()
    }

    #[test]
    fn basis_order_and_size() {
        let b = MonomialBasis::new(3, 2);
        let exps: Vec<&[u16]> = b.members().iter().map(Monomial::exponents).collect();
        assert_eq!(exps, [&[2, 0, 0][..], &[1, 1, 0], &[1, 0, 1], &[0, 2, 0], &[0, 1, 1], &[0, 0, 2]]);
        assert_eq!(MonomialBasis::new(4, 3).len(), basis_size(4, 3));
        assert_eq!(basis_size(3, 2), 6);
    }

    #[test]
    fn monomial_vectors() {
        let v = [int(1), int(2), int(3)];
        assert_eq!(mon_vector(&v, 2), [int(1), int(2), int(3), int(4), int(6), int(9)]);
        let e1 = mon_vector(&[int(1), int(0), int(0)], 3);
        assert_eq!(e1[0], int(1));
        assert!(e1[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn sym_power_of_diagonal() {
        let a = QMatrix::diagonal(&[int(2), int(3)]);
        assert_eq!(sym_power_q(&a, 2).unwrap(), QMatrix::diagonal(&[int(4), int(6), int(9)]));
        assert_eq!(sym_power_q(&QMatrix::identity(3), 3).unwrap(), QMatrix::identity(10));
    }

    #[test]
    fn sym_power_first_row_matches_square_of_linear_form() {
        let rho = sym_power(&PolyMatrix::symbolic(3), 2).unwrap();
        let u = rho.universe().clone();
        let want = ["a11^2", "2*a11*a12", "2*a11*a13", "a12^2", "2*a12*a13", "a13^2"];
        for (j, w) in want.iter().enumerate() {
            assert_eq!(rho.get(0, j), &Polynomial::parse(&u, w).unwrap());
        }
    }

    #[test]
    fn coefficient_rows() {
        assert_eq!(coeff_row(&x(3, "x2^2 - x1*x3"), 3, 2).unwrap(), [int(0), int(0), int(-1), int(1), int(0), int(0)]);
        assert!(matches!(coeff_row(&x(3, "x2^2 - x1"), 3, 2), Err(Error::NotHomogeneous(2))));
        let (c, d) = coeff_matrix(&[x(4, "x1")]).unwrap();
        assert_eq!((c.rows(), d), (1, 1));
        assert_eq!(c.row(0)[0], int(1));
    }

    #[test]
    fn polarization_of_the_conic() {
        let f = x(3, "x2^2 - x1*x3");
        let mu = Partition::new(alloc::vec![1, 1]).unwrap();
        let got = polarize(&f, &mu).unwrap();
        let bu = block_universe(3, 2);
        let want = Polynomial::parse(&bu, "x2_1*x2_2 - 1/2*x1_1*x3_2 - 1/2*x3_1*x1_2").unwrap();
        assert_eq!(got, want);
        let whole = polarize(&f, &Partition::new(alloc::vec![2]).unwrap()).unwrap();
        assert_eq!(whole.to_text(), "-x1_1*x3_1 + x2_1^2");
        let xy = polarize(&x(2, "x1*x2"), &mu).unwrap();
        assert_eq!(xy.terms().len(), 2);
        assert!(xy.terms().iter().all(|t| t.1 == ratio(1, 2)));
    }

    #[test]
    fn partition_bookkeeping() {
        let mu = Partition::parse("(4,2,1,2)").unwrap();
        assert_eq!(mu.parts(), &[1, 2, 2, 4]);
        assert_eq!(mu.multiplicities(), [1, 2, 0, 1, 0, 0, 0, 0, 0]);
        assert_eq!(mu.to_string(), "(1,2,2,4)");
        assert!(Partition::new(alloc::vec![0, 1]).is_err());
    }
}
