//! Exact rational witnesses: matrices with prescribed eigenvectors, points
//! on hypersurfaces, and points on the μ-loci.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::monomial::Universe;
use crate::poly::Polynomial;
use crate::polymatrix::QMatrix;
use crate::scalar::{self, Scalar};
use crate::veronese::{mon_vector, polarize, Partition};

/// Redraws allowed before a construction gives up.
pub const RETRY_BUDGET: u32 = 16;
/// Matrix and vector entries are drawn from `[−ENTRY_BOUND, ENTRY_BOUND]`.
pub const ENTRY_BOUND: i64 = 999;
/// Eigenvalues are drawn from `[−EIGEN_BOUND, EIGEN_BOUND]`.
pub const EIGEN_BOUND: i64 = 99;

/// Seeded source of integer draws. Trial `i` of a batch uses stream `i`
/// of the same seed.
#[derive(Clone, Debug)]
pub struct Sampler {
    seed: u64,
    stream: u64,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler::for_trial(seed, 0)
    }

    pub fn for_trial(seed: u64, trial: u64) -> Sampler {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        Sampler { seed, stream: trial, rng }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self) -> u64 {
        self.stream
    }

    pub fn int(&mut self, bound: i64) -> Scalar {
        scalar::int(self.rng.random_range(-bound..=bound))
    }

    pub fn vector(&mut self, n: usize) -> Vec<Scalar> {
        (0..n).map(|_| self.int(ENTRY_BOUND)).collect()
    }

    pub fn matrix(&mut self, n: usize) -> QMatrix {
        QMatrix::from_fn(n, n, |_, _| self.int(ENTRY_BOUND))
    }

    pub fn invertible_matrix(&mut self, n: usize) -> Result<QMatrix> {
        for _ in 0..RETRY_BUDGET {
            let m = self.matrix(n);
            if m.rank() == n {
                return Ok(m);
            }
        }
        Err(Error::RetryExhausted(RETRY_BUDGET))
    }

    /// `k` distinct nonzero eigenvalues whose degree-`d` monomials are
    /// pairwise distinct.
    pub fn eigenvalues(&mut self, k: usize, d: u32) -> Result<Vec<Scalar>> {
        for _ in 0..RETRY_BUDGET {
            let vals: Vec<Scalar> = (0..k).map(|_| self.int(EIGEN_BOUND)).collect();
            if vals.iter().all(|v| !v.is_zero()) && simple_spectrum(&vals, d) {
                return Ok(vals);
            }
        }
        Err(Error::RetryExhausted(RETRY_BUDGET))
    }
}

/// Whether the values `λ^α`, `|α| = e`, are pairwise distinct for all
/// `e ≤ d` (so the spectrum of `ρ_e(diag λ)` is simple).
pub fn simple_spectrum(values: &[Scalar], d: u32) -> bool {
    (1..=d.max(1)).all(|e| {
        let monos = mon_vector(values, e);
        let set: BTreeSet<&Scalar> = monos.iter().collect();
        set.len() == monos.len()
    })
}

/// Columns of `v` are eigenvectors with eigenvalues `eigenvalues`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenSpec {
    pub v: QMatrix,
    pub eigenvalues: Vec<Scalar>,
}

/// `A = V·D·V⁻¹`.
pub fn matrix_with_eigenvectors(spec: &EigenSpec) -> Result<QMatrix> {
    let n = spec.v.rows();
    if spec.v.cols() != n || spec.eigenvalues.len() != n {
        return Err(Error::DimensionMismatch(format!("V must be {n}x{n} with {n} eigenvalues")));
    }
    let inv = spec.v.inverse().ok_or(Error::SingularV)?;
    spec.v.mul(&QMatrix::diagonal(&spec.eigenvalues))?.mul(&inv)
}

/// `A = V·(J ⊕ D)·V⁻¹` for a block-diagonal middle factor.
fn conjugate(v: &QMatrix, middle: &QMatrix) -> Result<QMatrix> {
    let inv = v.inverse().ok_or(Error::SingularV)?;
    v.mul(middle)?.mul(&inv)
}

/// How to find a point on a hypersurface.
#[derive(Clone, Debug)]
pub enum Strategy {
    /// Solve for a variable in which `f` has degree one.
    SolvableVariable,
    /// Evaluate a rational parametrization over the line universe `t`.
    Parametrization(Vec<Polynomial>),
    /// Check and return a given point.
    UserPoint(Vec<Scalar>),
}

/// A nonzero rational point with `f(v) = 0`.
pub fn sample_on_hypersurface(f: &Polynomial, strategy: &Strategy, sampler: &mut Sampler) -> Result<Vec<Scalar>> {
    let n = f.universe().len();
    match strategy {
        Strategy::UserPoint(p) => {
            if p.iter().all(Zero::is_zero) || !f.eval(p)?.is_zero() {
                return Err(Error::NoStrategy);
            }
            Ok(p.clone())
        }
        Strategy::Parametrization(param) => {
            if param.len() != n {
                return Err(Error::LengthMismatch { expected: n, got: param.len() });
            }
            for _ in 0..RETRY_BUDGET {
                let t = [sampler.int(EIGEN_BOUND)];
                let v = param.iter().map(|p| p.eval(&t)).collect::<Result<Vec<_>>>()?;
                if v.iter().any(|x| !x.is_zero()) && f.eval(&v)?.is_zero() {
                    return Ok(v);
                }
            }
            Err(Error::RetryExhausted(RETRY_BUDGET))
        }
        Strategy::SolvableVariable => {
            let var = (0..n).find(|&i| f.degree_in(i) == Some(1)).ok_or(Error::NoStrategy)?;
            // f = x_var·g + h
            let g = f.partial_derivative(var);
            for _ in 0..RETRY_BUDGET {
                let mut v = sampler.vector(n);
                v[var] = Scalar::zero();
                let gv = g.eval(&v)?;
                if gv.is_zero() {
                    continue;
                }
                let h = f.eval(&v)?;
                v[var] = -h / gv;
                if v.iter().any(|x| !x.is_zero()) {
                    debug_assert!(f.eval(&v).map(|r| r.is_zero()).unwrap_or(false));
                    return Ok(v);
                }
            }
            Err(Error::RetryExhausted(RETRY_BUDGET))
        }
    }
}

/// A matrix together with eigenvectors satisfying `f_μ(v_1,…,v_s) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuWitness {
    pub a: QMatrix,
    pub spec: EigenSpec,
    /// The first `s` columns of `spec.v`.
    pub points: Vec<Vec<Scalar>>,
}

/// Builds a μ-witness. Supported: `μ = (d)`, or `μ` with a part equal to 1
/// (the polarization is then linear in that block).
pub fn mu_witness(f: &Polynomial, mu: &Partition, strategy: &Strategy, sampler: &mut Sampler) -> Result<MuWitness> {
    let n = f.universe().len();
    let s = mu.len();
    let d = mu.weight();
    if s > n {
        return Err(Error::UnsupportedPartition(format!("{mu} has more than {n} parts")));
    }
    if f.homogeneous_degree() != Some(d) {
        return Err(Error::NotHomogeneous(d));
    }
    let points = if s == 1 {
        alloc::vec![sample_on_hypersurface(f, strategy, sampler)?]
    } else if mu.parts()[0] == 1 {
        solve_linear_block(f, mu, sampler)?
    } else {
        return Err(Error::UnsupportedPartition(format!("{mu}: no part equal to 1")));
    };
    for _ in 0..RETRY_BUDGET {
        let mut cols = points.clone();
        while cols.len() < n {
            cols.push(sampler.vector(n));
        }
        let v = QMatrix::from_fn(n, n, |i, j| cols[j][i].clone());
        if v.rank() < n {
            continue;
        }
        let eigenvalues = sampler.eigenvalues(n, d)?;
        let spec = EigenSpec { v, eigenvalues };
        let a = matrix_with_eigenvectors(&spec)?;
        return Ok(MuWitness { a, spec, points });
    }
    Err(Error::RetryExhausted(RETRY_BUDGET))
}

/// Independent `v_1..v_s` with `f_μ = 0`, solving for one coordinate of the
/// block whose part is 1.
fn solve_linear_block(f: &Polynomial, mu: &Partition, sampler: &mut Sampler) -> Result<Vec<Vec<Scalar>>> {
    let n = f.universe().len();
    let s = mu.len();
    let fmu = polarize(f, mu)?;
    for _ in 0..RETRY_BUDGET {
        let mut vs: Vec<Vec<Scalar>> = (0..s).map(|_| sampler.vector(n)).collect();
        // Block 0 has part 1: f_μ(y, v_2, …) = Σ_i c_i y_i.
        let coeffs: Vec<Scalar> = (0..n)
            .map(|i| {
                let mut point: Vec<Scalar> = vs.iter().flatten().cloned().collect();
                for (j, p) in point.iter_mut().enumerate().take(n) {
                    *p = if j == i { Scalar::one() } else { Scalar::zero() };
                }
                fmu.eval(&point)
            })
            .collect::<Result<_>>()?;
        let Some(k) = (0..n).rev().find(|&i| !coeffs[i].is_zero()) else {
            continue;
        };
        let rest: Scalar = (0..n).filter(|&i| i != k).map(|i| &coeffs[i] * &vs[0][i]).sum();
        vs[0][k] = -rest / &coeffs[k];
        let point: Vec<Scalar> = vs.iter().flatten().cloned().collect();
        debug_assert!(fmu.eval(&point).map(|r| r.is_zero()).unwrap_or(false));
        if QMatrix::from_rows(&vs)?.rank() == s {
            return Ok(vs);
        }
    }
    Err(Error::RetryExhausted(RETRY_BUDGET))
}

/// Value of `f_μ` at a witness's eigenvectors.
pub fn polarization_at(f: &Polynomial, mu: &Partition, points: &[Vec<Scalar>]) -> Result<Scalar> {
    let fmu = polarize(f, mu)?;
    let flat: Vec<Scalar> = points.iter().flatten().cloned().collect();
    fmu.eval(&flat)
}

/// Designated loci for multiplicity certification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialLocus {
    /// `V·diag(0, λ_2, …)·V⁻¹`.
    RankDeficient,
    /// `V·(J_2(λ) ⊕ diag)·V⁻¹`.
    RepeatedEigenvalueJordan,
    /// Distinct eigenvalues `λ, −λ, …`: `ρ_d` has a repeated eigenvalue while
    /// `A` does not (for `d ≥ 2`).
    SymPowerCollision,
}

pub fn special_locus_matrix(kind: SpecialLocus, n: usize, sampler: &mut Sampler) -> Result<QMatrix> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("n = {n} < 2")));
    }
    let v = sampler.invertible_matrix(n)?;
    let mut vals = sampler.eigenvalues(n, 1)?;
    let mut middle = QMatrix::diagonal(&vals);
    match kind {
        SpecialLocus::RankDeficient => middle.set(0, 0, Scalar::zero()),
        SpecialLocus::RepeatedEigenvalueJordan => {
            middle.set(1, 1, vals[0].clone());
            middle.set(0, 1, Scalar::one());
        }
        SpecialLocus::SymPowerCollision => {
            for _ in 0..RETRY_BUDGET {
                vals[1] = -vals[0].clone();
                let distinct: BTreeSet<&Scalar> = vals.iter().collect();
                if distinct.len() == n {
                    break;
                }
                vals = sampler.eigenvalues(n, 1)?;
            }
            middle = QMatrix::diagonal(&vals);
        }
    }
    conjugate(&v, &middle)
}

/// Diagonalizable matrix with random eigenvectors off `V(f)` and a simple
/// `ρ_d` spectrum.
pub fn generic_non_member(f: &Polynomial, sampler: &mut Sampler) -> Result<QMatrix> {
    let n = f.universe().len();
    let d = f.homogeneous_degree().ok_or(Error::NotHomogeneous(0))?;
    for _ in 0..RETRY_BUDGET {
        let v = sampler.invertible_matrix(n)?;
        let off = (0..n).map(|j| f.eval(&v.column(j))).collect::<Result<Vec<_>>>()?;
        if off.iter().any(Zero::is_zero) {
            continue;
        }
        let eigenvalues = sampler.eigenvalues(n, d)?;
        return matrix_with_eigenvectors(&EigenSpec { v, eigenvalues });
    }
    Err(Error::RetryExhausted(RETRY_BUDGET))
}

/// `(1, t, t², …, t^{n−1})`, the rational normal curve parametrization.
pub fn rational_normal_curve(n: usize) -> Vec<Polynomial> {
    let line = Universe::line();
    let t = Polynomial::variable(&line, 0);
    (0..n).map(|k| t.pow(k as u32)).collect()
}

/// Whether `A·v_j = λ_j·v_j` holds exactly for every column.
pub fn check_eigenpairs(a: &QMatrix, spec: &EigenSpec) -> Result<bool> {
    for j in 0..spec.v.cols() {
        let col = spec.v.column(j);
        let lhs = a.mul_vec(&col)?;
        if lhs.iter().zip(&col).any(|(l, c)| *l != c * &spec.eigenvalues[j]) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn conic() -> Polynomial {
        Polynomial::parse(&Universe::coordinates(3), "x2^2 - x1*x3").unwrap()
    }

    #[test]
    fn diagonal_and_singular_specs() {
        let spec = EigenSpec { v: QMatrix::identity(3), eigenvalues: alloc::vec![int(1), int(2), int(3)] };
        assert_eq!(matrix_with_eigenvectors(&spec).unwrap(), QMatrix::diagonal(&spec.eigenvalues));
        let bad = EigenSpec { v: QMatrix::from_ints(&[&[1, 2], &[2, 4]]), eigenvalues: alloc::vec![int(1), int(2)] };
        assert_eq!(matrix_with_eigenvectors(&bad), Err(Error::SingularV));
    }

    #[test]
    fn hypersurface_points() {
        let mut s = Sampler::new(7);
        let param = Strategy::Parametrization(rational_normal_curve(3));
        let p = sample_on_hypersurface(&conic(), &param, &mut s).unwrap();
        assert!(conic().eval(&p).unwrap().is_zero());
        let t = [int(3)];
        let v: Vec<Scalar> = rational_normal_curve(3).iter().map(|c| c.eval(&t).unwrap()).collect();
        assert_eq!(v, [int(1), int(3), int(9)]);
        let plane = Polynomial::parse(&Universe::coordinates(3), "x1").unwrap();
        let p = sample_on_hypersurface(&plane, &Strategy::UserPoint(alloc::vec![int(0), int(1), int(1)]), &mut s).unwrap();
        assert_eq!(p, [int(0), int(1), int(1)]);
        let p = sample_on_hypersurface(&conic(), &Strategy::SolvableVariable, &mut s).unwrap();
        assert!(conic().eval(&p).unwrap().is_zero());
        let sq = Polynomial::parse(&Universe::coordinates(2), "x1^2 + x2^2").unwrap();
        assert_eq!(sample_on_hypersurface(&sq, &Strategy::SolvableVariable, &mut s), Err(Error::NoStrategy));
    }

    #[test]
    fn mu_witness_satisfies_its_equations() {
        let mut s = Sampler::new(11);
        for mu in ["(1,1)", "(2)"] {
            let mu = Partition::parse(mu).unwrap();
            let w = mu_witness(&conic(), &mu, &Strategy::SolvableVariable, &mut s).unwrap();
            assert!(check_eigenpairs(&w.a, &w.spec).unwrap());
            assert!(polarization_at(&conic(), &mu, &w.points).unwrap().is_zero());
        }
        let cubic = Polynomial::parse(&Universe::coordinates(2), "x1^3 + x2^3").unwrap();
        let bad = Partition::parse("(3)").unwrap();
        assert!(mu_witness(&cubic, &bad, &Strategy::SolvableVariable, &mut s).is_err());
    }

    #[test]
    fn special_loci() {
        let mut s = Sampler::new(3);
        let a = special_locus_matrix(SpecialLocus::RankDeficient, 3, &mut s).unwrap();
        assert_eq!(a.rank(), 2);
        assert!(a.det().unwrap().is_zero());
        let j = special_locus_matrix(SpecialLocus::RepeatedEigenvalueJordan, 2, &mut s).unwrap();
        assert!(crate::kalman::delta_at(&j).unwrap().is_zero());
        // Not diagonalizable: A − λI has rank 1.
        let lambda = j.trace() / int(2);
        assert_eq!(j.add(&QMatrix::identity(2).scale(&-lambda)).unwrap().rank(), 1);
    }

    #[test]
    fn sampling_is_reproducible() {
        let a = Sampler::for_trial(5, 2).matrix(3);
        let b = Sampler::for_trial(5, 2).matrix(3);
        let c = Sampler::for_trial(5, 3).matrix(3);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
