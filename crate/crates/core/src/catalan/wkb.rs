//! The quantum curve `(h^2 d^2/dx^2 + h x d/dx + 1) Z = 0` checked order by
//! order against `log Z = sum_m h^(m-1) S_m` with
//! `S_m = sum_{2g-2+n = m-1} F_{g,n}(x, .., x) / n!`.
//!
//! Dividing by `Z` and collecting `h^k` gives the residual
//!
//! ```text
//! R_k = sum_{i+j=k} S_i' S_j' + S_{k-1}'' + x S_k' + [k = 0]
//! ```
//!
//! All functions are rational in `t`, and `d/dx = -(t^2-1)^2/(8t) d/dt`.
//! The unstable terms are fixed as follows. `S_0' = y = -1/z`, whose expansion
//! at `x = oo` is `-1/x` (the `mu = 0` term) plus the counting series of
//! `F_{0,1}`. `F_{0,2} = -log(1 - 1/(z_1 z_2))`, checked against the counts, and
//! `S_1 = F_{0,2}(x, x) / 2`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::fit::{f_polynomial_with, FIT_SIZE_GUARD};
use super::fseries::{f_series_with, XtSubstitution};
use super::laurent::LaurentPolynomial;
use super::poly::{Poly, RatFunc};
use crate::eco::CountTable;
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};
use crate::series::FormalSeries;

/// Largest order accepted by [`wkb_residual`]; order `M` needs `F_{g,n}` with
/// `2g - 2 + n <= M - 1`.
pub const WKB_ORDER_GUARD: usize = 4;

/// One order of the residual.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WkbOrder {
    pub order: usize,
    pub vanishes: bool,
    /// The residual as a rational function of `t`, printed when non-zero.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

/// `S_m` data of `log Z`: `S_0'`, `S_1'` as rational functions, and `S_m` for
/// `m >= 2` as Laurent polynomials in `t`.
#[derive(Clone, Debug)]
pub struct WkbSeries {
    derivatives: Vec<RatFunc>,
}

impl WkbSeries {
    /// Assembles `S_0 .. S_max_order` from the counts.
    pub fn new(table: &mut CountTable, max_order: usize) -> Result<Self> {
        let mut derivatives = vec![s0_prime(), s1_prime()];
        for m in 2..=max_order {
            let chi = m - 1;
            let mut s = LaurentPolynomial::zero(1);
            for g in 0..=chi.div_ceil(2) {
                let n = chi + 2 - 2 * g;
                let (f, _) = f_polynomial_with(table, g, n, FIT_SIZE_GUARD)?;
                let nfact: u64 = (1..=n as u64).product();
                let inv = Scalar::new(1.into(), nfact.into());
                for (e, c) in f.diagonal().terms() {
                    s.add_term(e.clone(), c * &inv);
                }
            }
            derivatives.push(d_dx(&s.to_ratfunc()));
        }
        derivatives.truncate(max_order + 1);
        Ok(WkbSeries { derivatives })
    }

    /// A series from explicit `dS_m/dx`, `m = 0, 1, ..`.
    pub fn from_derivatives(derivatives: Vec<RatFunc>) -> Result<Self> {
        if derivatives.is_empty() {
            return Err(Error::Input("WKB data needs at least S_0".into()));
        }
        Ok(WkbSeries { derivatives })
    }

    /// `dS_m/dx`.
    pub fn s_prime(&self, m: usize) -> Option<&RatFunc> {
        self.derivatives.get(m)
    }

    pub fn max_order(&self) -> usize {
        self.derivatives.len() - 1
    }

    /// `R_k`; needs `k <= max_order`.
    pub fn residual(&self, k: usize) -> Result<RatFunc> {
        if k > self.max_order() {
            return Err(Error::Input(format!("residual order {k} needs S_{k}, data stops at S_{}", self.max_order())));
        }
        let x = XtSubstitution::x_of_t();
        let mut r = x.mul(&self.derivatives[k]);
        for i in 0..=k {
            r = r.add(&self.derivatives[i].mul(&self.derivatives[k - i]));
        }
        if k >= 1 {
            r = r.add(&d_dx(&self.derivatives[k - 1]));
        }
        if k == 0 {
            r = r.add(&RatFunc::constant(Scalar::one()));
        }
        Ok(r)
    }
}

fn d_dx(f: &RatFunc) -> RatFunc {
    f.derivative().mul(&XtSubstitution::dt_dx())
}

/// `S_0' = -1/z = -(t+1)/(t-1)`.
pub fn s0_prime() -> RatFunc {
    RatFunc::new(Poly::from_ints(&[-1, -1]), Poly::from_ints(&[-1, 1])).expect("non-zero")
}

/// `S_1' = d/dx [-(1/2) log(1 - z^-2)] = -z/(z^2-1)^2 = -(t-1)(t+1)^3/(16 t^2)`.
pub fn s1_prime() -> RatFunc {
    let num = Poly::from_ints(&[-1, 1]).mul(&Poly::from_ints(&[1, 1]).pow(3)).scale(&-Scalar::one());
    RatFunc::new(num, Poly::from_ints(&[0, 0, 16])).expect("non-zero")
}

/// Residuals `R_0 .. R_order`, each an exact rational function of `t`.
pub fn wkb_residual(order: usize) -> Result<Vec<RatFunc>> {
    if order > WKB_ORDER_GUARD {
        return Err(Error::Guard(format!("WKB order {order} exceeds {WKB_ORDER_GUARD}")));
    }
    let series = WkbSeries::new(&mut CountTable::new(), order)?;
    (0..=order).map(|k| series.residual(k)).collect()
}

/// Per-order report for [`wkb_residual`].
pub fn wkb_report(order: usize) -> Result<Vec<WkbOrder>> {
    Ok(wkb_residual(order)?
        .into_iter()
        .enumerate()
        .map(|(k, r)| WkbOrder { order: k, vanishes: r.is_zero(), residual: (!r.is_zero()).then(|| r.to_string()) })
        .collect())
}

/// Checks that `S_0'` expanded at `x = oo` is `-1/x - sum_{mu >= 1} C_{0,1}(mu) x^{-mu-1}`
/// through `x^{-order}`.
pub fn f01_matches_counts(table: &mut CountTable, order: usize) -> Result<bool> {
    let xt = super::fseries::xt_substitution(order)?;
    // S_0' = -1/z
    let lhs = xt.inverse_z().neg();
    let data = f_series_with(table, 0, 1, order)?;
    let mut terms = vec![(1, -Scalar::one())];
    for (mu, c) in data {
        // d/dx of c x^-mu, in u = 1/x: -mu c u^(mu+1)
        let m = mu[0] as i64;
        terms.push((m + 1, -c * Scalar::from_integer(m.into())));
    }
    let rhs = FormalSeries::from_terms(&terms, order as i64 + 1);
    Ok(lhs.sub(&rhs).valuation().is_none())
}

/// Checks `F_{0,2} = -log(1 - 1/(z_1 z_2)) = sum_k (z_1 z_2)^{-k} / k` against the
/// counts through `x_i^{-order}`.
pub fn f02_matches_counts(table: &mut CountTable, order: usize) -> Result<bool> {
    let xt = super::fseries::xt_substitution(order)?;
    let cap = order as i64 + 1;
    let powers: Vec<FormalSeries> = (0..=order as i64).map(|k| xt.inverse_z().pow(k, cap)).collect::<Result<_>>()?;
    let data = f_series_with(table, 0, 2, order)?;
    for m1 in 1..=order {
        for m2 in 1..=order {
            let mut s = Scalar::zero();
            for k in 1..=order.min(m1).min(m2) {
                let term = powers[k].coeff(m1 as i64)? * powers[k].coeff(m2 as i64)?;
                s += term / Scalar::from_integer((k as i64).into());
            }
            let want = data.get(&vec![m1, m2]).cloned().unwrap_or_else(Scalar::zero);
            if s != want {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `d_1 .. d_n F_{g,n}` near the branch point `z = 1` (`t = oo`) in the chart
/// `zeta = z - 1`, keeping only terms with a pole in every variable.
pub fn principal_part_at_branch(g: usize, f: &LaurentPolynomial) -> Result<crate::toprec::Correlator> {
    // t = -(1 + 2/zeta); d/dzeta (1 + 2/zeta)^k has a pole only for k > 0
    let n = f.nvars();
    let mut one_var: std::collections::HashMap<i64, Vec<(i64, Scalar)>> = std::collections::HashMap::new();
    let mut out: std::collections::BTreeMap<Vec<i64>, Scalar> = std::collections::BTreeMap::new();
    for (e, c) in f.terms() {
        if e.iter().any(|k| *k <= 0) {
            continue;
        }
        let sign = if e.iter().sum::<i64>() % 2 == 0 { Scalar::one() } else { -Scalar::one() };
        let mut acc: Vec<(Vec<i64>, Scalar)> = vec![(vec![], c * sign)];
        for &k in e {
            let pp = one_var.entry(k).or_insert_with(|| principal_derivative(k)).clone();
            acc = acc
                .into_iter()
                .flat_map(|(ex, cc)| {
                    pp.iter()
                        .map(|(p, q)| {
                            let mut ex2 = ex.clone();
                            ex2.push(*p);
                            (ex2, &cc * q)
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
        }
        for (ex, cc) in acc {
            *out.entry(ex).or_insert_with(Scalar::zero) += cc;
        }
    }
    Ok(crate::toprec::Correlator::from_plain_terms(g, n, 0, out))
}

// Terms of d/dzeta (1 + 2/zeta)^k = sum_j C(k,j) 2^j (-j) zeta^{-j-1}.
fn principal_derivative(k: i64) -> Vec<(i64, Scalar)> {
    (1..=k)
        .map(|j| {
            let c = Scalar::from_integer(scalar::binomial(k as u64, j as u64))
                * Scalar::from_integer((1i64 << j).into())
                * Scalar::from_integer((-j).into());
            (-j - 1, c)
        })
        .collect()
}
