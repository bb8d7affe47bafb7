//! Closed-form degree formulas: partitions, Kalman and μ-Kalman degrees,
//! discriminant bookkeeping and degrees of singular loci.
//!
//! Every value is an arbitrary precision integer. Formulas with fractional
//! coefficients are evaluated over `ℚ` and then checked for integrality.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{from_bigint, Scalar};
use crate::veronese::Partition;

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `(a)_b = a(a−1)···(a−b+1)`, with `(a)_0 = 1`.
pub fn falling(a: u64, b: u64) -> BigInt {
    (0..b).fold(BigInt::one(), |acc, j| if j > a { BigInt::zero() } else { acc * (a - j) })
}

pub fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    falling(n, k) / factorial(k)
}

/// `n! / (k_1!···k_r!)`; zero unless the `k_i` sum to `n`.
pub fn multinomial(n: u64, ks: &[u64]) -> BigInt {
    if ks.iter().sum::<u64>() != n {
        return BigInt::zero();
    }
    ks.iter().fold(factorial(n), |acc, &k| acc / factorial(k))
}

/// Second-kind Stirling number `S(s, k)`.
pub fn stirling2(s: u64, k: u64) -> BigInt {
    let mut row = alloc::vec![BigInt::one()];
    for i in 1..=s {
        let mut next = alloc::vec![BigInt::zero(); i as usize + 1];
        for j in 1..=i as usize {
            let stay = if j < row.len() { &row[j] * BigInt::from(j) } else { BigInt::zero() };
            next[j] = stay + &row[j - 1];
        }
        row = next;
    }
    row.get(k as usize).cloned().unwrap_or_default()
}

fn integral(value: Scalar, what: &str) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegral(format!("{what} = {value}")))
    }
}

fn q(v: BigInt) -> Scalar {
    from_bigint(v)
}

fn qi(v: u64) -> Scalar {
    from_bigint(BigInt::from(v))
}

/// All partitions of `d` into at most `n` parts, largest-first lists in
/// decreasing lexicographic order: `(4), (3,1), (2,2)`.
pub fn partitions(d: u32, n: usize) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::new(prefix.clone()).expect("nonempty positive parts"));
            return;
        }
        if slots == 0 {
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            prefix.push(part);
            rec(rest - part, part, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d > 0 {
        rec(d, d, n, &mut Vec::new(), &mut out);
    }
    out
}

/// `|P_d^{≤n}|` via `p_{d,i} = p_{d−1,i−1} + p_{d−i,i}`, where `p_{d,i}`
/// counts partitions of `d` into exactly `i` parts.
pub fn partition_count(d: u32, n: usize) -> BigInt {
    let d = d as usize;
    let mut p = alloc::vec![alloc::vec![BigInt::zero(); d + 1]; d + 1];
    p[0][0] = BigInt::one();
    for dd in 1..=d {
        for i in 1..=dd {
            p[dd][i] = &p[dd - 1][i - 1] + &p[dd - i][i];
        }
    }
    (1..=d.min(n)).map(|i| p[d][i].clone()).sum()
}

/// Degree and codimension of a Kalman variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KalmanDegree {
    pub degree: BigInt,
    pub codim: u64,
}

/// `K(X)` for irreducible `X ⊂ P^{n−1}` of dimension `m − 1`:
/// codimension `n − m`, degree `deg X · C(n, m−1)`.
pub fn deg_kalman(n: u64, m: u64, deg_x: u64) -> Result<KalmanDegree> {
    if m < 1 || m + 1 > n {
        return Err(Error::OutOfRange(format!("need 1 <= m <= n-1, got m = {m}, n = {n}")));
    }
    Ok(KalmanDegree { degree: BigInt::from(deg_x) * binom(n, m - 1), codim: n - m })
}

fn check_partition(n: u64, d: u32, mu: &Partition) -> Result<()> {
    if mu.weight() != d || mu.len() as u64 > n {
        return Err(Error::UnsupportedPartition(format!("{mu} is not in P_{d}^(<={n})")));
    }
    Ok(())
}

fn multiplicity_factorials(mu: &Partition) -> BigInt {
    mu.multiplicities().iter().map(|&m| factorial(m as u64)).product()
}

/// The two expressions for `deg K_μ(f)`:
/// `d·C(n,2)·(n−1)_{s−1} / Π m_i!` and `(n−1)d/2 · multinomial(n; n−s, m_1..m_d)`.
pub fn mu_degree_expressions(n: u64, d: u32, mu: &Partition) -> Result<(Scalar, Scalar)> {
    check_partition(n, d, mu)?;
    let s = mu.len() as u64;
    let d_big = BigInt::from(d);
    let first = q(&d_big * binom(n, 2) * falling(n - 1, s - 1)) / q(multiplicity_factorials(mu));
    let mut ks: Vec<u64> = alloc::vec![n - s];
    ks.extend(mu.multiplicities().iter().map(|&m| m as u64));
    let second = qi((n - 1) * d as u64) / qi(2) * q(multinomial(n, &ks));
    Ok((first, second))
}

/// `deg K_μ(f)`, with both closed forms required to agree.
pub fn deg_mu_kalman(n: u64, d: u32, mu: &Partition) -> Result<BigInt> {
    let (a, b) = mu_degree_expressions(n, d, mu)?;
    if a != b {
        return Err(Error::Inconsistent(format!("deg K_{mu}: {a} != {b}")));
    }
    integral(a, "deg K_mu")
}

/// Named integer values produced by one formula family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub n: u64,
    pub d: u64,
    pub values: Vec<(&'static str, BigInt)>,
}

impl DegreeReport {
    fn new(n: u64, d: u64) -> DegreeReport {
        DegreeReport { n, d, values: Vec::new() }
    }

    fn push(&mut self, key: &'static str, value: BigInt) {
        self.values.push((key, value));
    }

    pub fn get(&self, key: &str) -> Option<&BigInt> {
        self.values.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }
}

/// Degree bookkeeping for `det K_d(f) = √Δ_d^sat · Π_μ p_μ`.
///
/// Keys: `N`, `deg_delta_d`, `k`, `deg_sqrt_delta_sat`, `deg_det`,
/// `sum_deg_p_mu`, `sum_multinomial`.
pub fn discriminant_budget(n: u64, d: u32) -> Result<DegreeReport> {
    if n == 0 || d == 0 {
        return Err(Error::OutOfRange(String::from("need n, d >= 1")));
    }
    let dd = d as u64;
    let big_n = binom(n + dd - 1, dd);
    let d_big = BigInt::from(d);
    let deg_delta_d: BigInt = &d_big * &big_n * (&big_n - 1u32);
    let k = binom(n + dd - 1, dd - 1);
    let deg_delta = BigInt::from(n * (n - 1));

    // Δ_d = Δ^k · Δ_d^sat, and Δ_d^sat is a square.
    let via_k = integral(q(&deg_delta_d - &k * &deg_delta) / qi(2), "deg sqrt(Delta_d^sat)")?;
    let deg_det: BigInt = &d_big * &big_n * (&big_n - 1u32) / 2u32;
    let closed = integral(q(deg_det.clone()) - q(&d_big * &big_n * (n - 1)) / qi(2), "deg sqrt(Delta_d^sat)")?;
    if via_k != closed {
        return Err(Error::Inconsistent(format!("deg sqrt(Delta_d^sat): {via_k} != {closed}")));
    }

    let mut sum_p = BigInt::zero();
    let mut sum_multi = BigInt::zero();
    for mu in partitions(d, n as usize) {
        sum_p += deg_mu_kalman(n, d, &mu)?;
        let mut ks = alloc::vec![n - mu.len() as u64];
        ks.extend(mu.multiplicities().iter().map(|&m| m as u64));
        sum_multi += multinomial(n, &ks);
    }
    if sum_multi != big_n {
        return Err(Error::Inconsistent(format!("sum of multinomials {sum_multi} != N = {big_n}")));
    }
    if &closed + &sum_p != deg_det {
        return Err(Error::Inconsistent(format!("budget {closed} + {sum_p} != {deg_det}")));
    }

    let mut r = DegreeReport::new(n, dd);
    r.push("N", big_n);
    r.push("deg_delta_d", deg_delta_d);
    r.push("k", k);
    r.push("deg_sqrt_delta_sat", closed);
    r.push("deg_det", deg_det);
    r.push("sum_deg_p_mu", sum_p);
    r.push("sum_multinomial", sum_multi);
    Ok(r)
}

/// Largest `s` with `(det A)^s | det K_d(f)`, from the double sum over
/// eigenvalue exponents; for `n = 3` also checked against `3·C(d+3, 5)`.
pub fn det_a_multiplicity(n: u64, d: u32) -> Result<BigInt> {
    if n < 2 || d == 0 {
        return Err(Error::OutOfRange(String::from("need n >= 2, d >= 1")));
    }
    let dd = d as u64;
    let b = |t: u64| binom(dd - t + n - 2, dd - t);
    let mut s = Scalar::zero();
    for t in 1..=dd {
        let bt = b(t);
        let inner: BigInt = (1..t).map(|i| b(i) * i).sum();
        s += q(bt.clone()) * (qi(t) / qi(2) * q(bt - 1) + q(inner));
    }
    let s = integral(s, "det A multiplicity")?;
    if n == 3 && s != binom(dd + 3, 5) * 3 {
        return Err(Error::Inconsistent(format!("s = {s} != 3*C(d+3,5) at n = 3")));
    }
    Ok(s)
}

/// Components of singular loci of Kalman varieties of hypersurfaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingKind {
    /// `S_{1,2}` for two transversal hypersurfaces of the given degrees.
    Pairwise { deg1: u64, deg2: u64 },
    /// `S_{i,i}` for a single hyperplane.
    SelfPair,
    /// `Sing K(X)` for `X` a union of `d` generic hyperplanes.
    HyperplaneUnion(u64),
    /// `Sing K(X)` for a nonsingular hypersurface of degree `d`.
    SmoothHypersurface(u64),
}

fn self_pair_degree(n: u64) -> Result<BigInt> {
    integral(qi(3 * n - 5) / qi(4) * q(binom(n, 3)), "(3n-5)/4*C(n,3)")
}

/// Degree of the requested locus; its codimension is always 2.
pub fn sing_degree(kind: SingKind, n: u64) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("n = {n} < 2")));
    }
    let c2 = binom(n, 2);
    let c3 = binom(n, 3);
    match kind {
        SingKind::Pairwise { deg1, deg2 } => Ok((&c2 * &c2 - &c3) * deg1 * deg2),
        SingKind::SelfPair => self_pair_degree(n),
        SingKind::HyperplaneUnion(d) => {
            let own = integral(qi(d) * qi(3 * n - 5) / qi(4) * q(c3.clone()), "d(3n-5)/4*C(n,3)")?;
            Ok(binom(d, 2) * &c2 * &c2 + own)
        }
        SingKind::SmoothHypersurface(d) => {
            Ok(sing_degree(SingKind::HyperplaneUnion(d), n)? - binom(d, 2) * c3)
        }
    }
}

/// Both sides of `C(n,2)(n−1)_{s−1} = C(n,2)(n^{s−1} − Σ_{k<s} S(s,k)·C(n−1,k−1)·(k−1)!)`.
pub fn stirling_identity(n: u64, s: u64) -> (BigInt, BigInt) {
    let c2 = binom(n, 2);
    let lhs = &c2 * falling(n - 1, s - 1);
    let sum: BigInt = (1..s).map(|k| stirling2(s, k) * binom(n - 1, k - 1) * factorial(k - 1)).sum();
    let rhs = c2 * (BigInt::from(n).pow(s as u32 - 1) - sum);
    (lhs, rhs)
}

/// A value stated in the literature that the implemented formulas do not
/// reproduce. Reported, never asserted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub label: &'static str,
    pub computed: BigInt,
    pub stated: BigInt,
    pub note: &'static str,
}

/// Known discrepancies.
pub fn discrepancies() -> Vec<Discrepancy> {
    // G(1,3) is a smooth quadric hypersurface in P^5 (n = 6, m = 5).
    let computed = deg_kalman(6, 5, 2).expect("in range").degree;
    alloc::vec![Discrepancy {
        label: "deg K(G(1,3))",
        computed,
        stated: BigInt::from(12),
        note: "quadric hypersurface in P^5 gives deg X * C(6,4) = 30; the stated 12 matches no reading of (n, m)",
    }]
}

/// One line of the degree table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub quantity: &'static str,
    pub params: String,
    pub value: BigInt,
}

/// Every degree value pinned by the acceptance criteria.
pub fn degree_table() -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    let mut push = |quantity: &'static str, params: String, value: BigInt| rows.push(TableRow { quantity, params, value });

    push("deg_kalman", String::from("n=3 m=2 degX=2"), deg_kalman(3, 2, 2)?.degree);
    push("deg_kalman", String::from("n=3 m=1 degX=1"), deg_kalman(3, 1, 1)?.degree);
    for (n, d, mu) in [(5u64, 9u32, "1,2,2,4"), (3, 2, "1,1"), (3, 2, "2")] {
        let mu = Partition::parse(mu)?;
        push("deg_mu_kalman", format!("n={n} d={d} mu={mu}"), deg_mu_kalman(n, d, &mu)?);
    }
    for (n, d) in [(3u64, 2u32), (2, 2)] {
        let r = discriminant_budget(n, d)?;
        for key in ["N", "k", "deg_sqrt_delta_sat", "deg_det", "sum_deg_p_mu"] {
            push(key, format!("n={n} d={d}"), r.get(key).cloned().unwrap_or_default());
        }
    }
    for (n, d) in [(2u64, 3u32), (3, 3)] {
        let k = binom(n + d as u64 - 1, d as u64 - 1);
        push("k", format!("n={n} d={d}"), k);
    }
    for (n, d) in [(3u64, 2u32), (3, 3), (2, 2)] {
        push("det_a_multiplicity", format!("n={n} d={d}"), det_a_multiplicity(n, d)?);
    }
    push("sing_hyperplane_union", String::from("n=3 d=2"), sing_degree(SingKind::HyperplaneUnion(2), 3)?);
    for d in 1..=4u64 {
        push("sing_smooth_hypersurface", format!("n=3 d={d}"), sing_degree(SingKind::SmoothHypersurface(d), 3)?);
    }
    push("sing_smooth_hypersurface", String::from("n=6 d=2"), sing_degree(SingKind::SmoothHypersurface(2), 6)?);
    push("sing_pairwise", String::from("n=3 deg=1,1"), sing_degree(SingKind::Pairwise { deg1: 1, deg2: 1 }, 3)?);
    push("sing_self_pair", String::from("n=3"), sing_degree(SingKind::SelfPair, 3)?);
    for (n, s) in [(3u64, 1u64), (3, 3)] {
        push("c_tilde", format!("n={n} s={s}"), binom(n, 2) * falling(n - 1, s - 1));
    }
    Ok(rows)
}
