//! Exact computer algebra for nonlinear Kalman varieties.
#![no_std]
extern crate alloc;

mod error;
mod grammar;
pub mod audit;
pub mod chow;
pub mod enumerative;
pub mod int;
pub mod monomial;
pub mod poly;
pub mod scalar;
pub mod kalman;
pub mod polymatrix;
pub mod salmon;
pub mod veronese;
pub mod witness;
mod zpoly;

pub use error::{Error, Result};
pub use monomial::{Monomial, MonomialOrder, Universe};
pub use poly::{poly_arith, root_multiplicity_at_zero, ArithOp, Polynomial};
pub use scalar::Scalar;
pub use polymatrix::{discriminant_q, univariate_discriminant, PolyMatrix, QMatrix};
