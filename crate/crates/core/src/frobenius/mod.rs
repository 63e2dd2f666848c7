//! Finite-dimensional Frobenius algebras over the rationals and the 2D TQFT
//! they determine.
//!
//! An algebra is given by structure constants `c[i][j][k]` with
//! `e_i e_j = sum_k c[i][j][k] e_k` and a counit vector `eps[i] = eps(e_i)`.
//! The unit is never supplied; it is solved for from `u e_i = e_i = e_i u`.

mod algebra;
mod cobordism;
mod tensor;
mod validate;

pub use algebra::{AlgebraSpec, FrobeniusAlgebra, Vector};
pub use cobordism::{sew, CobordismTensor};
pub use tensor::{index_tuples, Tensor};
pub use validate::{validate, ValidationReport};
