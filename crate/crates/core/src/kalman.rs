//! Kalman matrices `K_d(C)` and their determinants.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{root_multiplicity_at_zero, Polynomial};
use crate::polymatrix::{discriminant_q, univariate_discriminant, PolyMatrix, QMatrix};
use crate::scalar::Scalar;
use crate::veronese::{basis_size, coeff_matrix, coeff_row, sym_power, sym_power_q};

/// A coefficient matrix `C` of full row rank together with `(n, d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KalmanInstance {
    n: usize,
    d: u32,
    c: QMatrix,
}

impl KalmanInstance {
    pub fn new(n: usize, d: u32, c: QMatrix) -> Result<KalmanInstance> {
        let big_n = basis_size(n, d);
        if c.cols() != big_n {
            return Err(Error::DimensionMismatch(format!("C has {} columns, expected N = {big_n}", c.cols())));
        }
        if c.rows() == 0 || c.rows() > big_n || c.rank() != c.rows() {
            return Err(Error::RankDeficient);
        }
        Ok(KalmanInstance { n, d, c })
    }

    /// The hypersurface case `p = 1`.
    pub fn hypersurface(f: &Polynomial) -> Result<KalmanInstance> {
        let n = f.universe().len();
        let d = f.homogeneous_degree().filter(|&d| d > 0 && !f.is_zero()).ok_or(Error::NotHomogeneous(0))?;
        let row = coeff_row(f, n, d)?;
        KalmanInstance::new(n, d, QMatrix::from_rows(&[row])?)
    }

    /// `C_X` for a generator list, with `d` the lcm of the degrees.
    pub fn from_generators(generators: &[Polynomial]) -> Result<KalmanInstance> {
        let (c, d) = coeff_matrix(generators)?;
        KalmanInstance::new(generators[0].universe().len(), d, c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn c(&self) -> &QMatrix {
        &self.c
    }

    /// `N = C(n−1+d, d)`.
    pub fn big_n(&self) -> usize {
        self.c.cols()
    }

    pub fn p(&self) -> usize {
        self.c.rows()
    }

    /// Number of blocks `N − p + 1`.
    pub fn blocks(&self) -> usize {
        self.big_n() - self.p() + 1
    }

    /// `K_d(C)` over the universe of `a`: blocks `C·ρ_d(A)^i`, `i = 0..=N−p`.
    pub fn kalman_matrix(&self, a: &PolyMatrix) -> Result<PolyMatrix> {
        if a.rows() != self.n || a.cols() != self.n {
            return Err(Error::DimensionMismatch(format!("A must be {0}x{0}", self.n)));
        }
        let rho = sym_power(a, self.d)?;
        let mut block = PolyMatrix::from_scalars(a.universe(), &self.c);
        let mut k = block.clone();
        for _ in 1..self.blocks() {
            block = block.mat_mul(&rho)?;
            k = k.vstack(&block)?;
        }
        Ok(k)
    }

    /// `K_d(C)` evaluated at a rational matrix.
    pub fn kalman_matrix_at(&self, a: &QMatrix) -> Result<QMatrix> {
        if a.rows() != self.n || a.cols() != self.n {
            return Err(Error::DimensionMismatch(format!("A must be {0}x{0}", self.n)));
        }
        let rho = sym_power_q(a, self.d)?;
        let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(self.p() * self.blocks());
        let mut block = self.c.clone();
        for i in 0..self.blocks() {
            if i > 0 {
                block = block.mul(&rho)?;
            }
            rows.extend((0..block.rows()).map(|r| block.row(r).to_vec()));
        }
        QMatrix::from_rows(&rows)
    }

    /// Necessary condition for `A0 ∈ K(X)`: `K_d(C)(A0)` drops rank.
    pub fn membership_necessary(&self, a0: &QMatrix) -> Result<bool> {
        Ok(self.kalman_matrix_at(a0)?.rank() < self.big_n())
    }

    fn require_square_kalman(&self) -> Result<()> {
        if self.p() != 1 {
            return Err(Error::Unsupported(String::from("determinant needs a hypersurface (p = 1)")));
        }
        Ok(())
    }

    /// `det K_d(f)` at a rational matrix.
    pub fn det_at(&self, a: &QMatrix) -> Result<Scalar> {
        self.require_square_kalman()?;
        self.kalman_matrix_at(a)?.det()
    }

    /// `det K_d(f)` restricted to the line `A0 + t·A1`.
    pub fn det_along_line(&self, a0: &QMatrix, a1: &QMatrix) -> Result<Polynomial> {
        self.require_square_kalman()?;
        let a = PolyMatrix::symbolic(self.n);
        let line = a.restrict_to_line(a0.entries(), a1.entries())?;
        self.kalman_matrix(&line)?.det_bareiss()
    }
}

/// Symbolic `det K_d(f)` in the entries `a_ij`, canonically normalized.
pub fn kalman_det(f: &Polynomial) -> Result<Polynomial> {
    let inst = KalmanInstance::hypersurface(f)?;
    inst.require_square_kalman()?;
    let k = inst.kalman_matrix(&PolyMatrix::symbolic(inst.n()))?;
    Ok(k.det_expansion()?.normalized())
}

/// Which polynomial in `A` to restrict to a line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineTarget<'a> {
    KalmanDet(&'a KalmanInstance),
    DeltaD(u32),
    Delta,
}

/// Order of vanishing at `t = 0` of the target along `A0 + t·A1`.
pub fn factor_order_along_line(target: &LineTarget<'_>, a0: &QMatrix, a1: &QMatrix) -> Result<u32> {
    let u = match target {
        LineTarget::KalmanDet(inst) => inst.det_along_line(a0, a1)?,
        LineTarget::DeltaD(d) => delta_d_along_line(a0, a1, *d)?,
        LineTarget::Delta => delta_d_along_line(a0, a1, 1)?,
    };
    if u.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    root_multiplicity_at_zero(&u)
}

/// `Δ_d(A0 + t·A1)` as a polynomial in `t`.
pub fn delta_d_along_line(a0: &QMatrix, a1: &QMatrix, d: u32) -> Result<Polynomial> {
    let a = PolyMatrix::symbolic(a0.rows());
    let line = a.restrict_to_line(a0.entries(), a1.entries())?;
    let rho = sym_power(&line, d)?;
    let cp = rho.char_poly()?;
    univariate_discriminant(&cp, rho.universe())
}

/// `Δ(A0)`, the discriminant of the characteristic polynomial.
pub fn delta_at(a0: &QMatrix) -> Result<Scalar> {
    delta_d_at(a0, 1)
}

/// `Δ_d(A0)`, the discriminant of the characteristic polynomial of `ρ_d(A0)`.
pub fn delta_d_at(a0: &QMatrix, d: u32) -> Result<Scalar> {
    let rho = sym_power_q(a0, d)?;
    if rho.rows() < 2 {
        return Err(Error::DegenerateDegree(String::from("ρ_d(A) is 1x1")));
    }
    discriminant_q(&rho.char_poly()?)
}

/// `Δ_d(A0)/Δ(A0)^k` with `k = C(n+d−1, d−1)`; `None` when `Δ(A0) = 0`.
pub fn delta_sat_at(a0: &QMatrix, d: u32) -> Result<Option<Scalar>> {
    let delta = delta_at(a0)?;
    if delta.is_zero() {
        return Ok(None);
    }
    let n = a0.rows() as u64;
    let k = crate::veronese::binomial(n + d as u64 - 1, d as u64 - 1);
    let dd = delta_d_at(a0, d)?;
    Ok(Some(dd / num_traits::pow(delta, k as usize)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Universe;
    use crate::scalar::int;

    fn conic() -> Polynomial {
        Polynomial::parse(&Universe::coordinates(3), "x2^2 - x1*x3").unwrap()
    }

    #[test]
    fn shapes() {
        let inst = KalmanInstance::hypersurface(&conic()).unwrap();
        let k = inst.kalman_matrix(&PolyMatrix::symbolic(3)).unwrap();
        assert_eq!((k.rows(), k.cols()), (6, 6));
        for i in 0..6 {
            let deg = k.row(i).iter().filter_map(Polynomial::total_degree).max();
            assert_eq!(deg, Some(2 * i as u32));
            assert!(k.row(i).iter().all(|p| p.is_zero() || p.homogeneous_degree() == Some(2 * i as u32)));
        }
        let hyper = KalmanInstance::new(3, 1, QMatrix::from_ints(&[&[1, 0, 0]])).unwrap();
        let k1 = hyper.kalman_matrix(&PolyMatrix::symbolic(3)).unwrap();
        assert_eq!((k1.rows(), k1.cols()), (3, 3));
        assert_eq!(k1.det().unwrap().total_degree(), Some(3));
    }

    #[test]
    fn pointwise_values() {
        let inst = KalmanInstance::hypersurface(&conic()).unwrap();
        let diag = QMatrix::diagonal(&[int(1), int(2), int(3)]);
        assert!(inst.membership_necessary(&diag).unwrap());
        assert_eq!(delta_at(&diag).unwrap(), int(4));
        let d2 = QMatrix::diagonal(&[int(1), int(2)]);
        assert_eq!(delta_d_at(&d2, 2).unwrap(), int(36));
        assert_eq!(delta_at(&QMatrix::identity(3)).unwrap(), int(0));
    }

    #[test]
    fn rank_deficient_coefficients_are_rejected() {
        let c = QMatrix::from_ints(&[&[1, 0, 0], &[2, 0, 0]]);
        assert_eq!(KalmanInstance::new(3, 1, c), Err(Error::RankDeficient));
    }
}
