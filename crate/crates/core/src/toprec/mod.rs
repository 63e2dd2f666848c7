//! Topological recursion on local spectral curves, plain and twisted by a
//! commutative Frobenius algebra.
//!
//! Each disc carries `x = z^2 + ..`, `y = z + ..` and the involution `sigma`
//! with `x(sigma(z)) = x(z)`. Correlators are stored as `W_{g,n} / dz_1..dz_n`,
//! a finite sum of monomials `z_1^{e_1} .. z_n^{e_n}`. The recursion kernel is
//!
//! ```text
//! K(z1, z) = [1/(z1 - sigma(z)) - 1/(z1 - z)] dz1 / ((y(sigma(z)) - y(z)) dx(z))
//! ```
//!
//! and the residue at `z = 0` is the coefficient of `z^{-1}` after expanding
//! for `|z| < |z1|`. With this normalisation the Airy curve `x = z^2, y = z`
//! gives `W_{0,3} = -1/(z1 z2 z3)^2` and `W_{1,1} = -1/(8 z^4)`.
//!
//! Different discs do not interact: the cross-disc `W_{0,2}` is zero, so every
//! correlator with variables on two different discs vanishes and each disc is
//! run on its own.

mod curve;
mod kernel;
mod run;

pub use curve::{
    airy_curve, catalan_local_curve, involution, w02_expansion, CurveSpec, Disc, DiscSpec, LocalSpectralCurve,
};
pub use kernel::{recursion_kernel, Kernel};
pub use run::{
    factorization_holds, toprec_run, twisted_toprec_run, Correlator, CorrelatorEntry, CorrelatorReport, TrTable,
};
