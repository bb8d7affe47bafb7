//! Salmon's Jacobian method for three ternary quadrics, and the equation
//! of the Kalman variety of a plane conic.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder, Universe};
use crate::poly::Polynomial;
use crate::polymatrix::PolyMatrix;
use crate::veronese::MonomialBasis;

const X: [&str; 3] = ["x1", "x2", "x3"];

/// Three quadrics in `x1, x2, x3` whose coefficients may involve other
/// variables of the same universe.
#[derive(Clone, Debug)]
pub struct QuadricTriple {
    quadrics: [Polynomial; 3],
    x: [usize; 3],
}

impl QuadricTriple {
    pub fn new(f1: Polynomial, f2: Polynomial, f3: Polynomial) -> Result<QuadricTriple> {
        let u = f1.universe().clone();
        f1.check_universe(&f2)?;
        f1.check_universe(&f3)?;
        let mut x = [0usize; 3];
        for (slot, name) in x.iter_mut().zip(X) {
            *slot = u.index_of(name).ok_or_else(|| Error::DimensionMismatch(format!("universe lacks {name}")))?;
        }
        for f in [&f1, &f2, &f3] {
            if !f.is_zero() && f.is_homogeneous_in_block(&x) != Some(2) {
                return Err(Error::NotHomogeneous(2));
            }
        }
        Ok(QuadricTriple { quadrics: [f1, f2, f3], x })
    }

    pub fn quadrics(&self) -> &[Polynomial; 3] {
        &self.quadrics
    }

    pub fn universe(&self) -> &Arc<Universe> {
        self.quadrics[0].universe()
    }

    /// `J = det(∂f_i/∂x_j)`, a cubic in `x`.
    pub fn jacobian_poly(&self) -> Result<Polynomial> {
        let u = self.universe().clone();
        let m = PolyMatrix::from_fn(&u, 3, 3, |i, j| self.quadrics[i].partial_derivative(self.x[j]));
        m.det_cofactor()
    }

    /// The 6×6 matrix of coefficients of `∂J/∂x1, ∂J/∂x2, ∂J/∂x3, f1, f2, f3`
    /// in the basis `x1², x1x2, x1x3, x2², x2x3, x3²`, over the remaining
    /// variables.
    pub fn salmon_matrix(&self) -> Result<PolyMatrix> {
        let j = self.jacobian_poly()?;
        let mut forms: Vec<Polynomial> = self.x.iter().map(|&v| j.partial_derivative(v)).collect();
        forms.extend(self.quadrics.iter().cloned());
        let (params, mapping) = parameter_universe(self.universe(), &self.x);
        let basis = MonomialBasis::new(3, 2);
        let mut rows = Vec::with_capacity(6);
        for f in &forms {
            let parts = split_block(f, &self.x, &params, &mapping);
            let mut row = alloc::vec![Polynomial::zero(&params); 6];
            for (mono, coeff) in parts {
                let pos = basis.position(&mono).ok_or(Error::NotHomogeneous(2))?;
                row[pos] = coeff;
            }
            rows.push(row);
        }
        PolyMatrix::from_rows(&params, rows)
    }

    /// `det B`, canonically normalized; zero exactly when the quadrics share
    /// a projective zero.
    pub fn salmon_resultant(&self) -> Result<Polynomial> {
        Ok(self.salmon_matrix()?.det_expansion()?.normalized())
    }
}

/// Universe of all non-`x` variables, and the map from old to new indices.
fn parameter_universe(u: &Arc<Universe>, x: &[usize; 3]) -> (Arc<Universe>, Vec<Option<usize>>) {
    let mut names = Vec::new();
    let mut mapping = Vec::with_capacity(u.len());
    for (i, name) in u.names().iter().enumerate() {
        if x.contains(&i) {
            mapping.push(None);
        } else {
            mapping.push(Some(names.len()));
            names.push(name.clone());
        }
    }
    (Universe::new(names, u.order()), mapping)
}

/// Splits `f` into `Σ_m c_m·m` with `m` an `x`-monomial.
fn split_block(
    f: &Polynomial,
    x: &[usize; 3],
    params: &Arc<Universe>,
    mapping: &[Option<usize>],
) -> HashMap<Monomial, Polynomial> {
    let mut acc: HashMap<Monomial, Vec<(Monomial, crate::Scalar)>> = HashMap::new();
    for (m, c) in f.terms() {
        let e = m.exponents();
        let xm = Monomial::from_exponents(&[e[x[0]], e[x[1]], e[x[2]]]);
        let mut pm = Monomial::one(params.len());
        for (i, target) in mapping.iter().enumerate() {
            if let Some(t) = target {
                pm.set(*t, e[i]);
            }
        }
        acc.entry(xm).or_default().push((pm, c.clone()));
    }
    acc.into_iter().map(|(k, v)| (k, Polynomial::from_terms(params, v))).collect()
}

/// Result of the conic pipeline.
#[derive(Clone, Debug)]
pub struct ConicEquation {
    /// The extraneous factor `f(0, a13, −a12)`.
    pub g1: Polynomial,
    /// The equation of the Kalman variety of the conic.
    pub g2: Polynomial,
    pub resultant: Polynomial,
}

/// Universe `a11..a33`, then the non-`x` variables of `f`, then `x1, x2, x3`.
pub fn conic_universe(f: &Polynomial) -> Result<Arc<Universe>> {
    let mut names: Vec<String> = crate::monomial::matrix_entry_names(3);
    for name in f.universe().names() {
        if X.contains(&name.as_str()) {
            continue;
        }
        if names.contains(name) {
            return Err(Error::Unsupported(format!("coefficient variable {name} clashes with a matrix entry")));
        }
        names.push(name.clone());
    }
    names.extend(X.iter().map(|s| String::from(*s)));
    Ok(Universe::new(names, MonomialOrder::GradedLex))
}

/// The triple `f1, f2, f3`: the (1,2) and (1,3) row minors of `M = [Ax | x]`
/// and `f` itself, over [`conic_universe`].
pub fn kalman_conic_triple(f: &Polynomial) -> Result<QuadricTriple> {
    let u = conic_universe(f)?;
    let f = f.embed_by_name(&u)?;
    let var = |name: &str| Polynomial::var(&u, name).expect("declared variable");
    let x: Vec<Polynomial> = X.iter().map(|n| var(n)).collect();
    let ax: Vec<Polynomial> = (1..=3)
        .map(|i| (1..=3).fold(Polynomial::zero(&u), |acc, j| &acc + &(&var(&format!("a{i}{j}")) * &x[j - 1])))
        .collect();
    let f1 = &(&ax[0] * &x[1]) - &(&ax[1] * &x[0]);
    let f2 = &(&ax[0] * &x[2]) - &(&ax[2] * &x[0]);
    QuadricTriple::new(f1, f2, f)
}

/// `g1, g2` with `det B = g1·g2` up to a scalar; `g2` is canonically normalized.
pub fn kalman_conic_equation(f: &Polynomial) -> Result<ConicEquation> {
    let triple = kalman_conic_triple(f)?;
    let resultant = triple.salmon_resultant()?;
    let params = resultant.universe().clone();
    // f1 = f2 = 0 also holds at x = (0, a13, −a12), contributing f there.
    let values: Vec<Polynomial> = f
        .universe()
        .names()
        .iter()
        .map(|name| match name.as_str() {
            "x1" => Ok(Polynomial::zero(&params)),
            "x2" => Ok(Polynomial::var(&params, "a13").expect("matrix entry")),
            "x3" => Ok(-Polynomial::var(&params, "a12").expect("matrix entry")),
            other => Polynomial::var(&params, other).ok_or(Error::UniverseMismatch),
        })
        .collect::<Result<_>>()?;
    let g1 = f.substitute(&values, &params)?.normalized();
    let g2 = resultant.exact_div(&g1)?.normalized();
    Ok(ConicEquation { g1, g2, resultant })
}
