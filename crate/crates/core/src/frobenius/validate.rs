use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;

/// Outcome of checking the Frobenius axioms. Failures are recorded, not raised.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ValidationReport {
    pub associative: bool,
    /// Two-sided unit, when the linear system for it is solvable.
    #[serde(serialize_with = "ser_opt_vec")]
    pub unit: Option<Vec<Scalar>>,
    /// `None` when commutativity was not asserted by the input.
    pub commutative: Option<bool>,
    pub nondegenerate: bool,
    #[serde(serialize_with = "ser_matrix")]
    pub eta: Matrix,
    #[serde(serialize_with = "ser_opt_matrix")]
    pub eta_inverse: Option<Matrix>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.associative && self.unit.is_some() && self.commutative != Some(false) && self.nondegenerate
    }

    /// One `(check, passed)` row per axiom, in a fixed order.
    pub fn checks(&self) -> Vec<(&'static str, Option<bool>)> {
        vec![
            ("associativity", Some(self.associative)),
            ("unit", Some(self.unit.is_some())),
            ("commutativity", self.commutative),
            ("non-degeneracy", Some(self.nondegenerate)),
        ]
    }
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(crate::scalar::format).collect()
}

fn ser_opt_vec<S: serde::Serializer>(v: &Option<Vec<Scalar>>, s: S) -> Result<S::Ok, S::Error> {
    v.as_ref().map(|v| strings(v)).serialize(s)
}

fn ser_matrix<S: serde::Serializer>(m: &Matrix, s: S) -> Result<S::Ok, S::Error> {
    m.iter().map(|r| strings(r)).collect::<Vec<_>>().serialize(s)
}

fn ser_opt_matrix<S: serde::Serializer>(m: &Option<Matrix>, s: S) -> Result<S::Ok, S::Error> {
    m.as_ref().map(|m| m.iter().map(|r| strings(r)).collect::<Vec<_>>()).serialize(s)
}

/// Checks associativity, existence of a unit, commutativity (only if
/// `commutative` is asserted) and invertibility of `eta_ij = eps(e_i e_j)`.
/// Only malformed shapes are errors.
pub fn validate(mult: &[Vec<Vec<Scalar>>], counit: &[Scalar], commutative: bool) -> Result<ValidationReport> {
    let r = counit.len();
    if r == 0 {
        return Err(Error::Input("algebra dimension must be positive".into()));
    }
    if mult.len() != r || mult.iter().any(|m| m.len() != r || m.iter().any(|v| v.len() != r)) {
        return Err(Error::Input(format!("structure constants must form a {r}x{r}x{r} array")));
    }

    let associative = (0..r).all(|i| {
        (0..r).all(|j| {
            (0..r).all(|k| {
                (0..r).all(|l| {
                    let lhs: Scalar = (0..r).map(|m| &mult[i][j][m] * &mult[m][k][l]).sum();
                    let rhs: Scalar = (0..r).map(|m| &mult[j][k][m] * &mult[i][m][l]).sum();
                    lhs == rhs
                })
            })
        })
    });

    // u e_i = e_i and e_i u = e_i, stacked: 2 r^2 equations in r unknowns.
    let mut a = Vec::with_capacity(2 * r * r);
    let mut b = Vec::with_capacity(2 * r * r);
    for i in 0..r {
        for k in 0..r {
            let target = if i == k { Scalar::one() } else { Scalar::zero() };
            a.push((0..r).map(|u| mult[u][i][k].clone()).collect());
            b.push(target.clone());
            a.push((0..r).map(|u| mult[i][u][k].clone()).collect());
            b.push(target);
        }
    }
    let unit = linalg::solve(&a, &b);

    let commutative = commutative.then(|| (0..r).all(|i| (0..r).all(|j| mult[i][j] == mult[j][i])));

    let eta: Matrix =
        (0..r).map(|i| (0..r).map(|j| mult[i][j].iter().zip(counit).map(|(c, e)| c * e).sum()).collect()).collect();
    let eta_inverse = linalg::inverse(&eta).ok();

    Ok(ValidationReport { associative, unit, commutative, nondegenerate: eta_inverse.is_some(), eta, eta_inverse })
}
