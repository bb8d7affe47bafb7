//! Classes in the Chow ring of `P^{n²−1} × (P^{n−1})^s`, presented as
//! `ℤ[h_0,…,h_s] / (h_0^{n²}, h_1^n, …, h_s^n)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::enumerative::{binom, deg_mu_kalman, factorial, falling};
use crate::error::{Error, Result};
use crate::veronese::Partition;

/// An element of the truncated ring. Exponent vectors have length `s + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedClass {
    n: u32,
    s: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl TruncatedClass {
    pub fn zero(n: u32, s: usize) -> TruncatedClass {
        TruncatedClass { n, s, terms: BTreeMap::new() }
    }

    pub fn constant(n: u32, s: usize, c: BigInt) -> TruncatedClass {
        let mut z = TruncatedClass::zero(n, s);
        z.add_term(alloc::vec![0; s + 1], c);
        z
    }

    pub fn one(n: u32, s: usize) -> TruncatedClass {
        TruncatedClass::constant(n, s, BigInt::one())
    }

    /// `c · Π h_i^{e_i}`, zero if truncated away.
    pub fn monomial(n: u32, s: usize, exps: &[u32], c: BigInt) -> Result<TruncatedClass> {
        if exps.len() != s + 1 {
            return Err(Error::LengthMismatch { expected: s + 1, got: exps.len() });
        }
        let mut z = TruncatedClass::zero(n, s);
        z.add_term(exps.to_vec(), c);
        Ok(z)
    }

    /// The generator `h_i`.
    pub fn h(n: u32, s: usize, i: usize) -> TruncatedClass {
        let mut e = alloc::vec![0; s + 1];
        e[i] = 1;
        let mut z = TruncatedClass::zero(n, s);
        z.add_term(e, BigInt::one());
        z
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn survives(&self, e: &[u32]) -> bool {
        e[0] < self.n * self.n && e[1..].iter().all(|&x| x < self.n)
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        if c.is_zero() || !self.survives(&e) {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    fn check(&self, other: &TruncatedClass) -> Result<()> {
        if self.n != other.n || self.s != other.s {
            return Err(Error::DimensionMismatch(format!(
                "classes over (n={}, s={}) and (n={}, s={})",
                self.n, self.s, other.n, other.s
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncatedClass) -> Result<TruncatedClass> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TruncatedClass) -> Result<TruncatedClass> {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub fn scale(&self, c: &BigInt) -> TruncatedClass {
        let mut out = TruncatedClass::zero(self.n, self.s);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &TruncatedClass) -> Result<TruncatedClass> {
        self.check(other)?;
        let mut out = TruncatedClass::zero(self.n, self.s);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<TruncatedClass> {
        let mut out = TruncatedClass::one(self.n, self.s);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Ring map into `s_target` factors sending `h_0 ↦ t_0` and
    /// `h_i ↦ t_{images[i−1]}`.
    pub fn pullback(&self, s_target: usize, images: &[usize]) -> Result<TruncatedClass> {
        if images.len() != self.s || images.iter().any(|&j| j == 0 || j > s_target) {
            return Err(Error::DimensionMismatch(format!("bad image list {images:?} for s = {s_target}")));
        }
        let mut out = TruncatedClass::zero(self.n, s_target);
        for (e, c) in &self.terms {
            let mut t = alloc::vec![0; s_target + 1];
            t[0] = e[0];
            for (i, &j) in images.iter().enumerate() {
                t[j] += e[i + 1];
            }
            out.add_term(t, c.clone());
        }
        Ok(out)
    }

    /// The `s` coefficients of `h_0·h_1^{n−1}···h_i^{n−2}···h_s^{n−1}`.
    pub fn linear_part(&self) -> Vec<BigInt> {
        (1..=self.s)
            .map(|i| {
                let mut e = alloc::vec![self.n - 1; self.s + 1];
                e[0] = 1;
                e[i] = self.n - 2;
                self.coefficient(&e)
            })
            .collect()
    }

    /// The common value of [`linear_part`](Self::linear_part), if all agree.
    pub fn linear_coefficient(&self) -> Option<BigInt> {
        let parts = self.linear_part();
        let first = parts.first()?.clone();
        parts.iter().all(|c| *c == first).then_some(first)
    }

    /// Coefficient of `h_0·Π h_i^{n−1}`.
    pub fn top_linear_coefficient(&self) -> BigInt {
        let mut e = alloc::vec![self.n - 1; self.s + 1];
        e[0] = 1;
        self.coefficient(&e)
    }
}

impl fmt::Display for TruncatedClass {
    /// Highest total degree first, then by exponent vector descending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<(&Vec<u32>, &BigInt)> = self.terms.iter().collect();
        keys.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        for (idx, (e, c)) in keys.into_iter().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => factors.push(format!("h{i}")),
                    _ => factors.push(format!("h{i}^{x}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// A set partition of `{1,…,s}`; blocks sorted, ordered by their minima.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(s: usize, mut blocks: Vec<Vec<usize>>) -> Result<SetPartition> {
        let mut seen = alloc::vec![false; s + 1];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::OutOfRange(String::from("empty block")));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x == 0 || x > s || seen[x] {
                    return Err(Error::OutOfRange(format!("element {x} repeated or outside 1..={s}")));
                }
                seen[x] = true;
            }
        }
        if seen[1..].iter().any(|v| !v) {
            return Err(Error::OutOfRange(format!("blocks do not cover 1..={s}")));
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { blocks })
    }

    /// `{{1},…,{s}}`.
    pub fn discrete(s: usize) -> SetPartition {
        SetPartition { blocks: (1..=s).map(|i| alloc::vec![i]).collect() }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn s(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Block minima `q_1 < … < q_k`.
    pub fn minima(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b[0]).collect()
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("{")?;
            for (j, x) in b.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("}")?;
        }
        f.write_str("}")
    }
}

/// All set partitions of `{1,…,s}` in canonical form.
pub fn set_partitions(s: usize) -> Vec<SetPartition> {
    let mut out: Vec<Vec<Vec<usize>>> = alloc::vec![Vec::new()];
    for x in 1..=s {
        let mut next = Vec::new();
        for p in out {
            for i in 0..p.len() {
                let mut q = p.clone();
                q[i].push(x);
                next.push(q);
            }
            let mut q = p;
            q.push(alloc::vec![x]);
            next.push(q);
        }
        out = next;
    }
    let mut parts: Vec<SetPartition> = out.into_iter().map(|blocks| SetPartition { blocks }).collect();
    parts.sort();
    parts
}

/// `Σ_j C(n,j) h_0^{n−1−j} h_i^j`, the class of `W_1` pulled back along factor `i`.
fn eigen_factor(n: u32, s: usize, i: usize) -> TruncatedClass {
    let mut out = TruncatedClass::zero(n, s);
    for j in 0..n {
        let mut e = alloc::vec![0; s + 1];
        e[0] = n - 1 - j;
        e[i] = j;
        out.add_term(e, binom(n as u64, j as u64));
    }
    out
}

/// `Σ_r t_q^{n−1−r} t_p^r`, the diagonal of factors `q` and `p`.
fn diagonal_factor(n: u32, s: usize, q: usize, p: usize) -> TruncatedClass {
    let mut out = TruncatedClass::zero(n, s);
    for r in 0..n {
        let mut e = alloc::vec![0; s + 1];
        e[q] += n - 1 - r;
        e[p] += r;
        out.add_term(e, BigInt::one());
    }
    out
}

fn check_n(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("n = {n} < 2")));
    }
    Ok(())
}

/// `[W_s] = Π_i Σ_j C(n,j) h_0^{n−1−j} h_i^j`.
pub fn class_w(n: u32, s: usize) -> Result<TruncatedClass> {
    check_n(n)?;
    if s == 0 {
        return Err(Error::OutOfRange(String::from("s = 0")));
    }
    (1..=s).try_fold(TruncatedClass::one(n, s), |acc, i| acc.mul(&eigen_factor(n, s, i)))
}

/// `[W̃_s]` from its closed form, for `s ≤ 2`.
pub fn class_wtilde(n: u32, s: usize) -> Result<TruncatedClass> {
    check_n(n)?;
    match s {
        1 => class_w(n, 1),
        2 => {
            let mut second = TruncatedClass::zero(n, 2);
            for r in 0..n {
                let mut e = alloc::vec![n - 1 - r, 0, r];
                second.add_term(e.clone(), binom(n as u64, r as u64));
                e[0] = 0;
                e[1] = n - 1 - r;
                second.add_term(e, -BigInt::one());
            }
            eigen_factor(n, 2, 1).mul(&second)
        }
        _ => Err(Error::Unsupported(format!("no closed form for the class of W~_{s}"))),
    }
}

/// `e_ℓ` in the listed generators.
pub fn elementary(n: u32, s: usize, vars: &[usize], l: usize) -> TruncatedClass {
    let mut out = TruncatedClass::zero(n, s);
    for mask in 0u32..(1 << vars.len()) {
        if mask.count_ones() as usize != l {
            continue;
        }
        let mut e = alloc::vec![0; s + 1];
        for (bit, &v) in vars.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                e[v] += 1;
            }
        }
        out.add_term(e, BigInt::one());
    }
    out
}

/// Evaluates `Σ c · Π e_ℓ^{k_ℓ} · t_extra^{a} · t_0^{b}`, where the `e_ℓ`
/// are taken in `vars` and each entry is `(c, [k_1, k_2, k_3], a, b)`.
fn symmetric_expansion(
    n: u32,
    s: usize,
    vars: &[usize],
    extra: Option<usize>,
    entries: &[(i64, [u32; 3], u32, u32)],
) -> Result<TruncatedClass> {
    let e: Vec<TruncatedClass> = (1..=3).map(|l| elementary(n, s, vars, l)).collect();
    let mut out = TruncatedClass::zero(n, s);
    for &(c, ks, a, b) in entries {
        let mut term = TruncatedClass::constant(n, s, BigInt::from(c));
        for (l, &k) in ks.iter().enumerate() {
            term = term.mul(&e[l].pow(k)?)?;
        }
        if let Some(x) = extra {
            term = term.mul(&TruncatedClass::h(n, s, x).pow(a)?)?;
        }
        term = term.mul(&TruncatedClass::h(n, s, 0).pow(b)?)?;
        out = out.add(&term)?;
    }
    Ok(out)
}

/// `[W̃_3]` at `n = 3`, expanded from its symmetric-function form in `t_1, t_2, t_3`.
pub fn fixture_wtilde3() -> Result<TruncatedClass> {
    symmetric_expansion(
        3,
        3,
        &[1, 2, 3],
        None,
        &[
            (6, [0, 0, 2], 0, 0),
            (6, [0, 1, 1], 0, 1),
            (2, [0, 2, 0], 0, 2),
            (4, [1, 0, 1], 0, 2),
            (3, [1, 1, 0], 0, 3),
            (3, [0, 0, 1], 0, 3),
            (1, [2, 0, 0], 0, 4),
            (3, [0, 1, 0], 0, 4),
            (2, [1, 0, 0], 0, 5),
            (1, [0, 0, 0], 0, 6),
        ],
    )
}

/// `[E_3]` at `n = 3`: the matrices with a two-dimensional eigenspace.
pub fn fixture_e3() -> Result<TruncatedClass> {
    symmetric_expansion(3, 3, &[1, 2, 3], None, &[(6, [0, 0, 1], 0, 3), (3, [0, 1, 0], 0, 4), (1, [1, 0, 0], 0, 5)])
}

/// `[W_{3,{{1,2,3}}}]` at `n = 3` in its symmetric-function form.
pub fn fixture_w3_full_block() -> Result<TruncatedClass> {
    symmetric_expansion(3, 3, &[1, 2, 3], None, &[(3, [0, 0, 2], 0, 0), (3, [0, 1, 1], 0, 1), (1, [0, 2, 0], 0, 2), (-1, [1, 0, 1], 0, 2)])
}

/// `[W_{3,{{i,j},{k}}}]` at `n = 3` in its symmetric-function form, with
/// `b_ℓ` elementary in `t_i, t_j`.
pub fn fixture_w3_pair_block(i: usize, j: usize, k: usize) -> Result<TruncatedClass> {
    let e = symmetric_expansion(3, 3, &[1, 2, 3], None, &[(6, [0, 0, 2], 0, 0), (6, [0, 1, 1], 0, 1)])?;
    // b1^2 − b2 is listed as the two entries (1,[2,0,0]) and (−1,[0,1,0]).
    let b = symmetric_expansion(
        3,
        3,
        &[i, j],
        Some(k),
        &[
            (2, [0, 2, 0], 0, 2),
            (8, [1, 1, 0], 1, 2),
            (2, [2, 0, 0], 2, 2),
            (-2, [0, 1, 0], 2, 2),
            (3, [1, 1, 0], 0, 3),
            (3, [2, 0, 0], 1, 3),
            (-3, [0, 1, 0], 1, 3),
            (1, [2, 0, 0], 0, 4),
            (-1, [0, 1, 0], 0, 4),
        ],
    )?;
    e.add(&b)
}

/// `[W̃_k]` for `k ≤ 2`, or the `n = 3`, `k = 3` fixture.
pub fn wtilde(n: u32, k: usize) -> Result<TruncatedClass> {
    match (n, k) {
        (3, 3) => fixture_wtilde3(),
        (_, 1 | 2) => class_wtilde(n, k),
        _ => Err(Error::Unsupported(format!("class of W~_{k} at n = {n}"))),
    }
}

/// `[W_{s,P}] = φ_P([W̃_k]) · Π_i Π_{p ∈ P_i∖q_i} Σ_r t_{q_i}^{n−1−r} t_p^r`.
pub fn class_wsp(n: u32, p: &SetPartition) -> Result<TruncatedClass> {
    check_n(n)?;
    let s = p.s();
    let base = wtilde(n, p.len())?.pullback(s, &p.minima())?;
    let mut out = base;
    for block in p.blocks() {
        for &other in &block[1..] {
            out = out.mul(&diagonal_factor(n, s, block[0], other))?;
        }
    }
    Ok(out)
}

/// `c̃_s = C(n,2)(n−1)_{s−1}`.
pub fn coeff_ctilde(n: u64, s: u64) -> BigInt {
    binom(n, 2) * falling(n - 1, s - 1)
}

/// `deg K_μ(f)` from intersection theory: the coefficient of `h_0·Π h_i^{n−1}`
/// in `[W̃_s]·Σ μ_i h_i`, divided by `m_1!···m_d!`. Uses the class itself
/// when available and `c̃_s` otherwise; checked against the closed form.
pub fn deg_mu_from_chow(n: u32, d: u32, mu: &Partition) -> Result<BigInt> {
    let s = mu.len();
    let closed = deg_mu_kalman(n as u64, d, mu)?;
    let top = match wtilde(n, s) {
        Ok(class) => {
            let mut divisor = TruncatedClass::zero(n, s);
            for (i, &part) in mu.parts().iter().enumerate() {
                divisor = divisor.add(&TruncatedClass::h(n, s, i + 1).scale(&BigInt::from(part)))?;
            }
            class.mul(&divisor)?.top_linear_coefficient()
        }
        Err(_) => coeff_ctilde(n as u64, s as u64) * d,
    };
    let div: BigInt = mu.multiplicities().iter().map(|&m| factorial(m as u64)).product();
    let value = &top / &div;
    if &value * &div != top || value != closed {
        return Err(Error::Inconsistent(format!("Chow degree {top}/{div} against closed form {closed}")));
    }
    Ok(value)
}

/// `[W_3] − Σ_{P} [W_{3,P}] − [E_3]` at `n = 3`, with the non-discrete
/// classes from the pullback formula; zero when the decomposition holds.
pub fn decomposition_residual_w3() -> Result<TruncatedClass> {
    let mut r = class_w(3, 3)?;
    for p in set_partitions(3) {
        r = r.sub(&class_wsp(3, &p)?)?;
    }
    r.sub(&fixture_e3()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn truncation() {
        let h1 = TruncatedClass::h(2, 1, 1);
        assert!(h1.pow(2).unwrap().is_zero());
        let h0 = TruncatedClass::h(2, 1, 0);
        assert!(!h0.pow(3).unwrap().is_zero());
        assert!(h0.pow(4).unwrap().is_zero());
    }

    #[test]
    fn w1_display() {
        assert_eq!(class_w(3, 1).unwrap().to_string(), "h0^2 + 3*h0*h1 + 3*h1^2");
    }

    #[test]
    fn w_linear_part() {
        for n in 2..=5u32 {
            for s in 1..=3usize {
                let c = class_w(n, s).unwrap().linear_coefficient().unwrap();
                assert_eq!(c, binom(n as u64, 2) * BigInt::from(n).pow(s as u32 - 1));
            }
        }
    }

    #[test]
    fn w2_is_product() {
        let w1a = class_w(4, 1).unwrap().pullback(2, &[1]).unwrap();
        let w1b = class_w(4, 1).unwrap().pullback(2, &[2]).unwrap();
        assert_eq!(class_w(4, 2).unwrap(), w1a.mul(&w1b).unwrap());
    }

    #[test]
    fn wtilde2_matches_difference() {
        for n in 2..=6 {
            let diff = class_w(n, 2).unwrap().sub(&class_wsp(n, &SetPartition::new(2, alloc::vec![alloc::vec![1, 2]]).unwrap()).unwrap()).unwrap();
            assert_eq!(class_wtilde(n, 2).unwrap(), diff);
        }
    }

    #[test]
    fn ctilde_values() {
        for n in 2..=7u32 {
            for s in 1..=2 {
                let c = class_wtilde(n, s).unwrap().linear_coefficient().unwrap();
                assert_eq!(c, coeff_ctilde(n as u64, s as u64));
            }
        }
        assert_eq!(fixture_wtilde3().unwrap().linear_coefficient(), Some(big(6)));
        assert_eq!(fixture_wtilde3().unwrap().coefficient(&[1, 1, 2, 2]), big(6));
    }

    #[test]
    fn elementary_square() {
        let e2 = elementary(3, 3, &[1, 2, 3], 2);
        let sq = e2.pow(2).unwrap();
        let expected = [([0, 2, 2, 0], 1), ([0, 2, 0, 2], 1), ([0, 0, 2, 2], 1), ([0, 2, 1, 1], 2), ([0, 1, 2, 1], 2), ([0, 1, 1, 2], 2)];
        assert_eq!(sq.num_terms(), expected.len());
        for (e, c) in expected {
            assert_eq!(sq.coefficient(&e), big(c));
        }
    }

    #[test]
    fn full_block_matches_fixture() {
        let p = SetPartition::new(3, alloc::vec![alloc::vec![1, 2, 3]]).unwrap();
        assert_eq!(class_wsp(3, &p).unwrap(), fixture_w3_full_block().unwrap());
    }

    #[test]
    fn pair_blocks_match_fixture() {
        for (i, j, k) in [(1, 2, 3), (1, 3, 2), (2, 3, 1)] {
            let p = SetPartition::new(3, alloc::vec![alloc::vec![i, j], alloc::vec![k]]).unwrap();
            assert_eq!(class_wsp(3, &p).unwrap(), fixture_w3_pair_block(i, j, k).unwrap(), "{p}");
        }
    }

    #[test]
    fn w3_decomposition() {
        assert!(decomposition_residual_w3().unwrap().is_zero());
    }

    #[test]
    fn discrete_partition_is_wtilde() {
        for n in 2..=4 {
            assert_eq!(class_wsp(n, &SetPartition::discrete(2)).unwrap(), class_wtilde(n, 2).unwrap());
        }
    }

    #[test]
    fn set_partition_counts() {
        let bell: Vec<usize> = (1..=6).map(|s| set_partitions(s).len()).collect();
        assert_eq!(bell, [1, 2, 5, 15, 52, 203]);
        assert!(SetPartition::new(3, alloc::vec![alloc::vec![1, 2], alloc::vec![2, 3]]).is_err());
        assert!(SetPartition::new(3, alloc::vec![alloc::vec![1, 2]]).is_err());
        assert_eq!(SetPartition::new(3, alloc::vec![alloc::vec![3], alloc::vec![2, 1]]).unwrap().to_string(), "{{1,2},{3}}");
    }

    #[test]
    fn chow_degrees_agree() {
        let mu = |s: &str| Partition::parse(s).unwrap();
        assert_eq!(deg_mu_from_chow(3, 2, &mu("1,1")).unwrap(), big(6));
        assert_eq!(deg_mu_from_chow(3, 2, &mu("2")).unwrap(), big(6));
        assert_eq!(deg_mu_from_chow(3, 3, &mu("1,1,1")).unwrap(), big(3));
        assert_eq!(deg_mu_from_chow(5, 9, &mu("1,2,2,4")).unwrap(), big(1080));
    }
}
