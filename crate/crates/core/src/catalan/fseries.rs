use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::poly::{Poly, RatFunc};
use crate::eco::CountTable;
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};
use crate::series::FormalSeries;

/// Largest `mu_i` that [`f_series`] will expand to.
pub const F_SERIES_GUARD: usize = 64;

/// Coefficients of `F_{g,n}` in `x_1^{-mu_1} .. x_n^{-mu_n}` for `1 <= mu_i <= k`:
/// `C_{g,n}(mu) / (mu_1 .. mu_n)`.
pub fn f_series(g: usize, n: usize, k: usize) -> Result<BTreeMap<Vec<usize>, Scalar>> {
    f_series_with(&mut CountTable::new(), g, n, k)
}

pub fn f_series_with(table: &mut CountTable, g: usize, n: usize, k: usize) -> Result<BTreeMap<Vec<usize>, Scalar>> {
    if n == 0 {
        return Err(Error::Input("F_{g,n} needs n >= 1".into()));
    }
    if k > F_SERIES_GUARD {
        return Err(Error::Guard(format!("expansion order {k} exceeds {F_SERIES_GUARD}")));
    }
    let mut out = BTreeMap::new();
    let mut mu = vec![1usize; n];
    if k == 0 {
        return Ok(out);
    }
    loop {
        let c = table.get(g, &mu);
        if !c.is_zero() {
            let denom: usize = mu.iter().product();
            let v = Scalar::new(c.into(), num_bigint::BigInt::from(denom));
            out.insert(mu.clone(), v);
        }
        let mut i = 0;
        while i < n {
            mu[i] += 1;
            if mu[i] <= k {
                break;
            }
            mu[i] = 1;
            i += 1;
        }
        if i == n {
            return Ok(out);
        }
    }
}

/// The coordinate `x = (t+1)/(t-1) + (t-1)/(t+1)` and its inverse near `x = oo`.
///
/// Both `t -> 1` and `t -> -1` send `x` to infinity. We expand on the branch
/// `t -> -1`, where `z = (t-1)/(t+1)` and `x = z + 1/z`; on it the top-degree
/// part of `F_{g,n}` carries the sign `(-1)^n`. There `w = 1/z` is the Catalan
/// series `sum_m Cat(m) u^{2m+1}` in `u = 1/x`, and `t = -(1 + w)/(1 - w)`.
#[derive(Clone, Debug)]
pub struct XtSubstitution {
    order: i64,
    w: FormalSeries,
}

/// Expansions valid for `u^0 .. u^order`.
pub fn xt_substitution(order: usize) -> Result<XtSubstitution> {
    if order == 0 {
        return Err(Error::Input("xt substitution needs order >= 1".into()));
    }
    let prec = order as i64 + 1;
    let terms: Vec<(i64, Scalar)> = (0..)
        .map(|m: i64| (2 * m + 1, Scalar::from_integer(scalar::binomial(2 * m as u64, m as u64) / (m + 1))))
        .take_while(|(e, _)| *e < prec)
        .collect();
    Ok(XtSubstitution { order: order as i64, w: FormalSeries::from_terms(&terms, prec) })
}

impl XtSubstitution {
    pub fn order(&self) -> i64 {
        self.order
    }

    /// `1/z` as a series in `u = 1/x`.
    pub fn inverse_z(&self) -> &FormalSeries {
        &self.w
    }

    /// `t^k` as a series in `u`, for any integer `k`.
    pub fn t_power(&self, k: i64) -> Result<FormalSeries> {
        let one = FormalSeries::constant(Scalar::one());
        let (num, den) =
            if k >= 0 { (one.add(&self.w), one.sub(&self.w)) } else { (one.sub(&self.w), one.add(&self.w)) };
        let base = num.mul(&den.inv(self.order + 1)?);
        let p = base.pow(k.abs(), self.order + 1)?;
        Ok(if k % 2 == 0 { p } else { p.neg() })
    }

    /// `x` as a rational function of `t`.
    pub fn x_of_t() -> RatFunc {
        // 2 (t^2 + 1) / (t^2 - 1)
        RatFunc::new(Poly::from_ints(&[2, 0, 2]), Poly::from_ints(&[-1, 0, 1])).expect("non-zero")
    }

    /// `dt/dx = -(t^2 - 1)^2 / (8t)`.
    pub fn dt_dx() -> RatFunc {
        RatFunc::new(Poly::from_ints(&[-1, 0, 1]).pow(2).scale(&-Scalar::one()), Poly::from_ints(&[0, 8]))
            .expect("non-zero")
    }

    /// `z` as a rational function of `t`.
    pub fn z_of_t() -> RatFunc {
        RatFunc::new(Poly::from_ints(&[-1, 1]), Poly::from_ints(&[1, 1])).expect("non-zero")
    }
}
