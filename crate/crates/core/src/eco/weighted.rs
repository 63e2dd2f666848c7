use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::count::CountTable;
use crate::error::{Error, Result};
use crate::frobenius::{FrobeniusAlgebra, Vector};
use crate::scalar::Scalar;

/// One row of a count/TQFT table as written to JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRecord {
    pub g: usize,
    pub n: usize,
    pub mu: Vec<usize>,
    pub count: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<String>,
}

/// `C_{g,n}(mu) * omega_{g,n}(v_1, .., v_n)`.
pub fn weighted_omega(
    alg: &FrobeniusAlgebra,
    table: &mut CountTable,
    g: usize,
    mu: &[usize],
    vs: &[Vector],
) -> Result<Scalar> {
    if mu.len() != vs.len() {
        return Err(Error::Dimension { expected: mu.len(), got: vs.len() });
    }
    let c = table.get(g, mu);
    if c.is_zero() {
        alg.require_commutative()?;
        return Ok(Scalar::zero());
    }
    Ok(alg.omega(g, vs)? * Scalar::from_integer(BigInt::from(c)))
}

/// The right-hand side of the weighted counting recursion at the first vertex:
/// joining `v_1` with a neighbour, splitting `v_1` by the comultiplication along
/// a handle, or along a separating loop.
pub fn counting_formula_rhs(
    alg: &FrobeniusAlgebra,
    table: &mut CountTable,
    g: usize,
    mu: &[usize],
    vs: &[Vector],
) -> Result<Scalar> {
    alg.require_commutative()?;
    if mu.is_empty() || mu.len() != vs.len() {
        return Err(Error::Dimension { expected: mu.len(), got: vs.len() });
    }
    let (m1, rest) = (mu[0], &mu[1..]);
    let (v1, vrest) = (&vs[0], &vs[1..]);
    let mut total = Scalar::zero();

    for j in 0..rest.len() {
        let mut sub_mu = vec![m1 + rest[j] - 2];
        let mut sub_vs = vec![alg.multiply(v1, &vrest[j])?];
        for k in (0..rest.len()).filter(|&k| k != j) {
            sub_mu.push(rest[k]);
            sub_vs.push(vrest[k].clone());
        }
        total += weighted_omega(alg, table, g, &sub_mu, &sub_vs)? * Scalar::from_integer(rest[j].into());
    }

    if m1 < 2 {
        return Ok(total);
    }
    let r = alg.dim();
    let delta = alg.comultiply(v1)?;
    for alpha in 0..=m1 - 2 {
        let beta = m1 - 2 - alpha;
        for a in 0..r {
            for b in 0..r {
                let d = delta.get(&[a, b]);
                if d.is_zero() {
                    continue;
                }
                let (ea, eb) = (alg.basis_vector(a), alg.basis_vector(b));
                if g >= 1 {
                    let mut sub_mu = vec![alpha, beta];
                    sub_mu.extend_from_slice(rest);
                    let mut sub_vs = vec![ea.clone(), eb.clone()];
                    sub_vs.extend_from_slice(vrest);
                    total += d * weighted_omega(alg, table, g - 1, &sub_mu, &sub_vs)?;
                }
                for mask in 0u64..(1 << rest.len()) {
                    let (mut mi, mut vi) = (vec![alpha], vec![ea.clone()]);
                    let (mut mj, mut vj) = (vec![beta], vec![eb.clone()]);
                    for k in 0..rest.len() {
                        if mask & (1 << k) != 0 {
                            mi.push(rest[k]);
                            vi.push(vrest[k].clone());
                        } else {
                            mj.push(rest[k]);
                            vj.push(vrest[k].clone());
                        }
                    }
                    for g1 in 0..=g {
                        let left = weighted_omega(alg, table, g1, &mi, &vi)?;
                        if left.is_zero() {
                            continue;
                        }
                        total += d * left * weighted_omega(alg, table, g - g1, &mj, &vj)?;
                    }
                }
            }
        }
    }
    Ok(total)
}
