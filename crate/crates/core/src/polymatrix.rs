//! Matrices with polynomial entries, and plain rational matrices.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::int::Int;
use crate::monomial::Universe;
use crate::poly::Polynomial;
use crate::scalar::{self, Scalar};
use crate::zpoly::{Packing, ZPoly};

/// Dense row-major matrix of polynomials over one universe.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    universe: Arc<Universe>,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zero(universe: &Arc<Universe>, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix { rows, cols, universe: universe.clone(), entries: alloc::vec![Polynomial::zero(universe); rows * cols] }
    }

    pub fn identity(universe: &Arc<Universe>, size: usize) -> PolyMatrix {
        let mut m = PolyMatrix::zero(universe, size, size);
        for i in 0..size {
            m.entries[i * size + i] = Polynomial::one(universe);
        }
        m
    }

    pub fn from_fn<F>(universe: &Arc<Universe>, rows: usize, cols: usize, mut f: F) -> PolyMatrix
    where
        F: FnMut(usize, usize) -> Polynomial,
    {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let p = f(i, j);
                assert!(p.check_universe(&Polynomial::zero(universe)).is_ok(), "entry universe differs");
                entries.push(p);
            }
        }
        PolyMatrix { rows, cols, universe: universe.clone(), entries }
    }

    pub fn from_rows(universe: &Arc<Universe>, rows: Vec<Vec<Polynomial>>) -> Result<PolyMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch(format!("ragged rows: expected {c} entries, got {}", row.len())));
            }
            for p in row {
                p.check_universe(&Polynomial::zero(universe))?;
                entries.push(p);
            }
        }
        Ok(PolyMatrix { rows: r, cols: c, universe: universe.clone(), entries })
    }

    /// The generic `n×n` matrix `(a_ij)` over [`Universe::matrix_entries`].
    pub fn symbolic(n: usize) -> PolyMatrix {
        let u = Universe::matrix_entries(n);
        PolyMatrix::from_fn(&u, n, n, |i, j| Polynomial::variable(&u, i * n + j))
    }

    /// Constant matrix over `universe`.
    pub fn from_scalars(universe: &Arc<Universe>, m: &QMatrix) -> PolyMatrix {
        PolyMatrix::from_fn(universe, m.rows, m.cols, |i, j| Polynomial::constant(universe, m.get(i, j).clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(&self.universe, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Stacks the rows of `other` below `self`.
    pub fn vstack(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!("{} vs {} columns", self.cols, other.cols)));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(PolyMatrix { rows: self.rows + other.rows, cols: self.cols, universe: self.universe.clone(), entries })
    }

    pub fn mat_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch);
        }
        Ok(PolyMatrix::from_fn(&self.universe, self.rows, other.cols, |i, j| {
            let mut acc = Polynomial::zero(&self.universe);
            for k in 0..self.cols {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        }))
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(String::from("matrix sum of different shapes")));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(PolyMatrix { rows: self.rows, cols: self.cols, universe: self.universe.clone(), entries })
    }

    pub fn scale(&self, c: &Polynomial) -> PolyMatrix {
        let entries = self.entries.iter().map(|a| a * c).collect();
        PolyMatrix { rows: self.rows, cols: self.cols, universe: self.universe.clone(), entries }
    }

    pub fn trace(&self) -> Result<Polynomial> {
        let n = self.require_square()?;
        Ok((0..n).fold(Polynomial::zero(&self.universe), |acc, i| &acc + self.get(i, i)))
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<QMatrix> {
        let mut data = Vec::with_capacity(self.entries.len());
        for p in &self.entries {
            data.push(p.eval(point)?);
        }
        Ok(QMatrix { rows: self.rows, cols: self.cols, data })
    }

    /// Exact rank of the scalar matrix obtained at `point`.
    pub fn rank_at(&self, point: &[Scalar]) -> Result<usize> {
        Ok(self.eval(point)?.rank())
    }

    /// Substitutes every entry along a line, giving a matrix over `t`.
    pub fn restrict_to_line(&self, base: &[Scalar], direction: &[Scalar]) -> Result<PolyMatrix> {
        let line = Universe::line();
        let mut entries = Vec::with_capacity(self.entries.len());
        for p in &self.entries {
            entries.push(p.restrict_to_line(base, direction)?);
        }
        Ok(PolyMatrix { rows: self.rows, cols: self.cols, universe: line, entries })
    }

    /// Determinant by fraction-free elimination.
    pub fn det(&self) -> Result<Polynomial> {
        self.require_square()?;
        self.det_bareiss()
    }

    /// Integer images of all entries under one packing, with per-row
    /// denominators cleared. Returns `None` if the degrees overflow the key.
    fn integer_rows(&self, max_degree: u32) -> Option<(Packing, Vec<ZPoly>, BigInt)> {
        let pk = Polynomial::zero(&self.universe).packing_for(max_degree)?;
        let mut out = Vec::with_capacity(self.entries.len());
        let mut den = BigInt::one();
        for i in 0..self.rows {
            let row = self.row(i);
            let row_den = scalar::lcm_of_denominators(row.iter().flat_map(|p| p.terms().iter().map(|t| &t.1)));
            for p in row {
                let (z, d) = p.to_zpoly(&pk);
                let mult = Int::from_bigint(&row_den / d);
                out.push(z.scale(&mult));
            }
            den *= row_den;
        }
        Some((pk, out, den))
    }

    /// Bound on the total degree of any minor: sum of the row maxima.
    fn degree_bound(&self) -> u32 {
        (0..self.rows)
            .map(|i| self.row(i).iter().filter_map(Polynomial::total_degree).max().unwrap_or(0))
            .sum()
    }

    /// Bareiss elimination. Pivots on the nonzero entry with the fewest
    /// terms, ties broken by smallest `(row, col)`.
    pub fn det_bareiss(&self) -> Result<Polynomial> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(Polynomial::one(&self.universe));
        }
        // Cross products reach twice the degree of a minor before division.
        let bound = 2 * self.degree_bound();
        let Some((pk, mut m, den)) = self.integer_rows(bound.max(1)) else {
            return self.det_cofactor();
        };
        let mut negate = false;
        let mut prev = ZPoly::constant(Int::ONE, &pk);
        for k in 0..n {
            let mut best: Option<(usize, usize, usize)> = None;
            for i in k..n {
                for j in k..n {
                    let len = m[i * n + j].len();
                    if len > 0 && best.is_none_or(|b| len < b.0) {
                        best = Some((len, i, j));
                    }
                }
            }
            let Some((_, pi, pj)) = best else {
                return Ok(Polynomial::zero(&self.universe));
            };
            if pi != k {
                for j in 0..n {
                    m.swap(k * n + j, pi * n + j);
                }
                negate = !negate;
            }
            if pj != k {
                for i in 0..n {
                    m.swap(i * n + k, i * n + pj);
                }
                negate = !negate;
            }
            let pivot = m[k * n + k].clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let (aik, akj) = (&m[i * n + k], &m[k * n + j]);
                    let cross = if aik.is_zero() || akj.is_zero() {
                        pivot.mul(&m[i * n + j])
                    } else {
                        ZPoly::cross(&pivot, &m[i * n + j], aik, akj)
                    };
                    m[i * n + j] = if k == 0 { cross } else { cross.div_exact(&prev, &pk).expect("Bareiss division is exact") };
                }
            }
            for i in k + 1..n {
                m[i * n + k] = ZPoly::zero();
            }
            prev = pivot;
        }
        let det = if negate { prev.neg() } else { prev };
        Ok(Polynomial::from_zpoly(&self.universe, &det, &pk, &den))
    }

    /// Division-free Laplace expansion that adds one row at a time and
    /// keeps every minor on the rows added so far. Rows with the most terms
    /// are added first so that the cheapest rows multiply the largest minors.
    /// Column subsets that can no longer be completed by the remaining rows'
    /// structural nonzeros are pruned. Limited to 64 columns.
    pub fn det_expansion(&self) -> Result<Polynomial> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(Polynomial::one(&self.universe));
        }
        if n > 64 {
            return Err(Error::Unsupported(String::from("row expansion needs at most 64 columns")));
        }
        let bound = self.degree_bound();
        let Some((pk, m, den)) = self.integer_rows(bound.max(1)) else {
            return self.det_cofactor();
        };
        let weight = |i: usize| (0..n).map(|j| m[i * n + j].len()).sum::<usize>();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| weight(b).cmp(&weight(a)).then(a.cmp(&b)));
        let support: Vec<u64> =
            (0..n).map(|i| (0..n).filter(|&j| !m[i * n + j].is_zero()).fold(0u64, |s, j| s | 1 << j)).collect();

        let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut level: HashMap<u64, ZPoly> = HashMap::new();
        level.insert(0, ZPoly::constant(Int::ONE, &pk));
        for (k, &r) in order.iter().enumerate() {
            let remaining: Vec<u64> = order[k + 1..].iter().map(|&i| support[i]).collect();
            let mut targets: Vec<u64> = Vec::new();
            for &s in level.keys() {
                let mut free = support[r] & !s;
                while free != 0 {
                    let j = free.trailing_zeros();
                    free &= free - 1;
                    targets.push(s | 1 << j);
                }
            }
            targets.sort_unstable();
            targets.dedup();
            targets.retain(|&t| completable(full & !t, &remaining));
            let mut next: HashMap<u64, ZPoly> = HashMap::with_capacity(targets.len());
            for t in targets {
                let mut parts: Vec<(&ZPoly, &ZPoly, bool)> = Vec::new();
                let mut bits = t;
                let mut idx = 0usize;
                while bits != 0 {
                    let j = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let entry = &m[r * n + j];
                    if let (false, Some(minor)) = (entry.is_zero(), level.get(&(t & !(1 << j)))) {
                        parts.push((entry, minor, (k + idx) % 2 == 1));
                    }
                    idx += 1;
                }
                let value = ZPoly::sum_of_products(&parts);
                if !value.is_zero() {
                    next.insert(t, value);
                }
            }
            level = next;
            if level.is_empty() {
                return Ok(Polynomial::zero(&self.universe));
            }
        }
        let det = level.remove(&full).unwrap_or_default();
        let det = if permutation_is_odd(&order) { det.neg() } else { det };
        Ok(Polynomial::from_zpoly(&self.universe, &det, &pk, &den))
    }

    /// Cofactor expansion along the first row. Exponential; reference only.
    pub fn det_cofactor(&self) -> Result<Polynomial> {
        let n = self.require_square()?;
        let cols: Vec<usize> = (0..n).collect();
        Ok(self.cofactor_rec(0, &cols))
    }

    fn cofactor_rec(&self, row: usize, cols: &[usize]) -> Polynomial {
        if cols.is_empty() {
            return Polynomial::one(&self.universe);
        }
        let mut acc = Polynomial::zero(&self.universe);
        for (idx, &c) in cols.iter().enumerate() {
            let entry = self.get(row, c);
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = entry * &self.cofactor_rec(row + 1, &rest);
            acc = if idx % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    /// Characteristic polynomial `det(λI − P)` as coefficients in `λ`,
    /// ascending, by the Faddeev–LeVerrier trace recursion.
    pub fn char_poly(&self) -> Result<Vec<Polynomial>> {
        let n = self.require_square()?;
        let mut coeffs = alloc::vec![Polynomial::zero(&self.universe); n + 1];
        coeffs[n] = Polynomial::one(&self.universe);
        let id = PolyMatrix::identity(&self.universe, n);
        let mut m = PolyMatrix::zero(&self.universe, n, n);
        for k in 1..=n {
            // M_k = A·M_{k−1} + c_{n−k+1}·I, c_{n−k} = −tr(A·M_k)/k
            m = self.mat_mul(&m)?.add(&id.scale(&coeffs[n - k + 1]))?;
            let am = self.mat_mul(&m)?;
            coeffs[n - k] = am.trace()?.scale(&-scalar::ratio(1, k as i64));
        }
        Ok(coeffs)
    }
}

impl fmt::Display for PolyMatrix {
    /// One row per line, entries separated by ` | `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for (j, p) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(" | ")?;
                }
                write!(f, "{p}")?;
            }
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

/// Parses the `|`-delimited row-per-line format; blank lines are skipped.
pub fn parse_matrix(universe: &Arc<Universe>, text: &str) -> Result<PolyMatrix> {
    let mut rows = Vec::new();
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let row = line.split('|').map(|e| Polynomial::parse(universe, e)).collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    PolyMatrix::from_rows(universe, rows)
}

/// Whether the columns in `cols` admit a perfect matching with the rows
/// whose supports are listed.
fn completable(cols: u64, rows: &[u64]) -> bool {
    if cols.count_ones() as usize != rows.len() {
        return false;
    }
    let col_list: Vec<u32> = {
        let mut v = Vec::new();
        let mut b = cols;
        while b != 0 {
            v.push(b.trailing_zeros());
            b &= b - 1;
        }
        v
    };
    let mut owner: Vec<Option<usize>> = alloc::vec![None; col_list.len()];
    for r in 0..rows.len() {
        let mut seen = alloc::vec![false; col_list.len()];
        if !augment(r, rows, &col_list, &mut owner, &mut seen) {
            return false;
        }
    }
    true
}

fn augment(r: usize, rows: &[u64], cols: &[u32], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for (ci, &c) in cols.iter().enumerate() {
        if rows[r] >> c & 1 == 1 && !seen[ci] {
            seen[ci] = true;
            if owner[ci].is_none_or(|o| augment(o, rows, cols, owner, seen)) {
                owner[ci] = Some(r);
                return true;
            }
        }
    }
    false
}

fn permutation_is_odd(p: &[usize]) -> bool {
    let mut seen = alloc::vec![false; p.len()];
    let mut transpositions = 0;
    for start in 0..p.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    transpositions % 2 == 1
}

/// Dense rational matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> QMatrix {
        QMatrix { rows, cols, data: alloc::vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> QMatrix {
        let mut m = QMatrix::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn diagonal(values: &[Scalar]) -> QMatrix {
        let mut m = QMatrix::zero(values.len(), values.len());
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Scalar>(rows: usize, cols: usize, mut f: F) -> QMatrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        QMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<Scalar>]) -> Result<QMatrix> {
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != c) {
            return Err(Error::DimensionMismatch(String::from("ragged rows")));
        }
        Ok(QMatrix { rows: rows.len(), cols: c, data: rows.iter().flatten().cloned().collect() })
    }

    pub fn from_ints(rows: &[&[i64]]) -> QMatrix {
        let c = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == c), "ragged rows");
        QMatrix { rows: rows.len(), cols: c, data: rows.iter().flat_map(|r| r.iter().map(|&v| scalar::int(v))).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Row-major entries; the point at which a symbolic `(a_ij)` is evaluated.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = QMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect())
    }

    pub fn add(&self, other: &QMatrix) -> Result<QMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(String::from("matrix sum of different shapes")));
        }
        Ok(QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() })
    }

    pub fn scale(&self, c: &Scalar) -> QMatrix {
        QMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// Row echelon form in place; returns the pivot columns and the sign of
    /// the row permutation applied.
    fn echelon(&mut self) -> (Vec<usize>, bool) {
        let mut pivots = Vec::new();
        let mut odd = false;
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(r * self.cols + j, p * self.cols + j);
                }
                odd = !odd;
            }
            let pivot = self.get(r, c).clone();
            for i in r + 1..self.rows {
                let factor = self.get(i, c) / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = &factor * self.get(r, j);
                    self.data[i * self.cols + j] -= v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (pivots, odd)
    }

    pub fn rank(&self) -> usize {
        self.clone().echelon().0.len()
    }

    pub fn det(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut m = self.clone();
        let (pivots, odd) = m.echelon();
        if pivots.len() < self.rows {
            return Ok(Scalar::zero());
        }
        let mut d: Scalar = (0..self.rows).map(|i| m.get(i, i).clone()).product();
        if odd {
            d = -d;
        }
        Ok(d)
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = QMatrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let (pivots, _) = aug.echelon();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        for r in (0..n).rev() {
            let p = aug.get(r, r).clone();
            for j in 0..2 * n {
                let v = aug.get(r, j) / &p;
                aug.set(r, j, v);
            }
            for i in 0..r {
                let f = aug.get(i, r).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..2 * n {
                    let v = &f * aug.get(r, j);
                    aug.data[i * 2 * n + j] -= v;
                }
            }
        }
        Some(QMatrix::from_fn(n, n, |i, j| aug.get(i, j + n).clone()))
    }

    /// Characteristic polynomial `det(λI − A)`, coefficients ascending.
    pub fn char_poly(&self) -> Result<Vec<Scalar>> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut coeffs = alloc::vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        let mut m = QMatrix::zero(n, n);
        for k in 1..=n {
            m = self.mul(&m)?.add(&QMatrix::identity(n).scale(&coeffs[n - k + 1]))?;
            coeffs[n - k] = -self.mul(&m)?.trace() / scalar::int(k as i64);
        }
        Ok(coeffs)
    }

    /// `Σ c_i A^i` for coefficients ascending.
    pub fn eval_poly(&self, coeffs: &[Scalar]) -> Result<QMatrix> {
        let n = self.rows;
        let mut acc = QMatrix::zero(n, n);
        for c in coeffs.iter().rev() {
            acc = self.mul(&acc)?.add(&QMatrix::identity(n).scale(c))?;
        }
        Ok(acc)
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(" | ")?;
                }
                write!(f, "{v}")?;
            }
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

/// Sylvester matrix of two univariate polynomials given by ascending
/// coefficients over a common universe.
pub fn sylvester_matrix(u: &[Polynomial], v: &[Polynomial], universe: &Arc<Universe>) -> Result<PolyMatrix> {
    let (m, k) = (u.len().checked_sub(1), v.len().checked_sub(1));
    let (Some(m), Some(k)) = (m, k) else {
        return Err(Error::DegenerateDegree(String::from("empty coefficient list")));
    };
    let size = m + k;
    let mut s = PolyMatrix::zero(universe, size, size);
    for r in 0..k {
        for (i, c) in u.iter().rev().enumerate() {
            s.set(r, r + i, c.clone());
        }
    }
    for r in 0..m {
        for (i, c) in v.iter().rev().enumerate() {
            s.set(k + r, r + i, c.clone());
        }
    }
    Ok(s)
}

/// `Res(u, v)` as the Sylvester determinant.
pub fn resultant(u: &[Polynomial], v: &[Polynomial], universe: &Arc<Universe>) -> Result<Polynomial> {
    sylvester_matrix(u, v, universe)?.det()
}

/// `disc(u) = (−1)^{m(m−1)/2} Res(u, u′) / lc(u)` for `u` given by ascending
/// coefficients in a polynomial ring.
pub fn univariate_discriminant(u: &[Polynomial], universe: &Arc<Universe>) -> Result<Polynomial> {
    let m = u.len().saturating_sub(1);
    if m < 2 {
        return Err(Error::DegenerateDegree(format!("degree {m} < 2")));
    }
    let lc = &u[m];
    if lc.is_zero() {
        return Err(Error::DegenerateDegree(String::from("leading coefficient is zero")));
    }
    let du: Vec<Polynomial> = (1..=m).map(|i| u[i].scale(&scalar::int(i as i64))).collect();
    let res = resultant(u, &du, universe)?;
    let q = res.exact_div(lc)?;
    Ok(if (m * (m - 1) / 2) % 2 == 1 { -q } else { q })
}

/// Discriminant of a univariate polynomial with rational coefficients.
pub fn discriminant_q(u: &[Scalar]) -> Result<Scalar> {
    let m = u.len().saturating_sub(1);
    if m < 2 {
        return Err(Error::DegenerateDegree(format!("degree {m} < 2")));
    }
    if u[m].is_zero() {
        return Err(Error::DegenerateDegree(String::from("leading coefficient is zero")));
    }
    let du: Vec<Scalar> = (1..=m).map(|i| &u[i] * scalar::int(i as i64)).collect();
    let size = 2 * m - 1;
    let mut s = QMatrix::zero(size, size);
    for r in 0..m - 1 {
        for (i, c) in u.iter().rev().enumerate() {
            s.set(r, r + i, c.clone());
        }
    }
    for r in 0..m {
        for (i, c) in du.iter().rev().enumerate() {
            s.set(m - 1 + r, r + i, c.clone());
        }
    }
    let q = s.det()? / &u[m];
    Ok(if (m * (m - 1) / 2) % 2 == 1 { -q } else { q })
}

/// Coefficients of a univariate polynomial over `t` as constants in a
/// zero-variable ring, for feeding [`univariate_discriminant`].
pub fn scalars_as_constants(values: &[Scalar]) -> (Arc<Universe>, Vec<Polynomial>) {
    let u = Universe::new(Vec::<String>::new(), crate::monomial::MonomialOrder::GradedLex);
    let p = values.iter().map(|c| Polynomial::constant(&u, c.clone())).collect();
    (u, p)
}

/// `Σ_i coeffs[i]·λ^i` printed with `λ` written as `lambda`.
pub fn format_lambda_poly(coeffs: &[Polynomial]) -> String {
    let mut parts = Vec::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        parts.push(match i {
            0 => format!("({c})"),
            1 => format!("({c})*lambda"),
            _ => format!("({c})*lambda^{i}"),
        });
    }
    if parts.is_empty() {
        String::from("0")
    } else {
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use alloc::string::ToString;

    fn parse(u: &Arc<Universe>, s: &str) -> Polynomial {
        Polynomial::parse(u, s).unwrap()
    }

    #[test]
    fn two_by_two_examples() {
        let u = Universe::new(["x"], crate::MonomialOrder::GradedLex);
        let m = parse_matrix(&u, "x | 1\n1 | x").unwrap();
        let want = parse(&u, "x^2 - 1");
        assert_eq!(m.det().unwrap(), want);
        assert_eq!(m.det_expansion().unwrap(), want);
        assert_eq!(m.det_cofactor().unwrap(), want);
        for n in 0..5 {
            assert_eq!(PolyMatrix::identity(&u, n).det().unwrap(), Polynomial::one(&u));
        }
    }

    #[test]
    fn symbolic_three_by_three_agrees_across_methods() {
        let a = PolyMatrix::symbolic(3);
        let c = a.det_cofactor().unwrap();
        assert_eq!(c.num_terms(), 6);
        assert_eq!(a.det_bareiss().unwrap(), c);
        assert_eq!(a.det_expansion().unwrap(), c);
    }

    #[test]
    fn high_degree_univariate_bareiss() {
        let t = Universe::line();
        let m = PolyMatrix::from_fn(&t, 4, 4, |i, j| {
            parse(&t, &alloc::format!("{}*t^{} + {}*t + ({})", i + 2 * j + 1, 3 * i + j, j + 1, (i * j) as i64 - 3))
        });
        assert_eq!(m.det_bareiss().unwrap(), m.det_cofactor().unwrap());
    }

    #[test]
    fn zero_and_rank_deficient() {
        let u = Universe::coordinates(2);
        let m = parse_matrix(&u, "x1 | x2\n2*x1 | 2*x2").unwrap();
        assert!(m.det().unwrap().is_zero());
        assert!(m.det_expansion().unwrap().is_zero());
        assert_eq!(m.rank_at(&[int(1), int(3)]).unwrap(), 1);
        assert!(PolyMatrix::zero(&u, 2, 3).det().is_err());
    }

    #[test]
    fn char_poly_of_symbolic_two_by_two() {
        let a = PolyMatrix::symbolic(2);
        let u = a.universe().clone();
        let cp = a.char_poly().unwrap();
        assert_eq!(cp[2], Polynomial::one(&u));
        assert_eq!(cp[1], parse(&u, "-a11 - a22"));
        assert_eq!(cp[0], parse(&u, "a11*a22 - a12*a21"));
        let id = QMatrix::identity(2).char_poly().unwrap();
        assert_eq!(id, [int(1), int(-2), int(1)]);
    }

    #[test]
    fn discriminants() {
        let u = Universe::new(["b", "c"], crate::MonomialOrder::GradedLex);
        let quad = [parse(&u, "c"), parse(&u, "b"), Polynomial::one(&u)];
        assert_eq!(univariate_discriminant(&quad, &u).unwrap(), parse(&u, "b^2 - 4*c"));
        // (x−1)(x−2)(x−3) = x³ − 6x² + 11x − 6
        assert_eq!(discriminant_q(&[int(-6), int(11), int(-6), int(1)]).unwrap(), int(4));
        let (cu, cs) = scalars_as_constants(&[int(-6), int(11), int(-6), int(1)]);
        assert_eq!(univariate_discriminant(&cs, &cu).unwrap().as_constant(), Some(int(4)));
        assert_eq!(discriminant_q(&[int(1), int(-2), int(1)]).unwrap(), int(0));
        assert!(discriminant_q(&[int(1), int(1)]).is_err());
    }

    #[test]
    fn rational_inverse_and_rank() {
        let m = QMatrix::from_ints(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), QMatrix::identity(3));
        assert_eq!(m.det().unwrap(), int(18));
        let outer = QMatrix::from_ints(&[&[1, 2], &[3, 6]]);
        assert_eq!(outer.rank(), 1);
        assert!(outer.inverse().is_none());
    }

    #[test]
    fn matrix_text_round_trip() {
        let a = PolyMatrix::symbolic(2);
        let text = a.mat_mul(&a).unwrap().to_string();
        let back = parse_matrix(a.universe(), &text).unwrap();
        assert_eq!(back, a.mat_mul(&a).unwrap());
    }

    #[test]
    fn completability_prunes_structural_zeros() {
        // column 0 can only be taken by row 0
        assert!(completable(0b011, &[0b001, 0b110]));
        assert!(!completable(0b011, &[0b110, 0b110]));
        assert!(!permutation_is_odd(&[0, 1, 2]));
        assert!(permutation_is_odd(&[1, 0, 2]));
        assert!(!permutation_is_odd(&[1, 2, 0]));
    }
}
