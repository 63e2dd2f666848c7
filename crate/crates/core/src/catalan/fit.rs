use num_traits::Zero;
use serde::Serialize;

use super::fseries::{f_series_with, xt_substitution};
use super::laurent::LaurentPolynomial;
use crate::eco::CountTable;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;

/// Largest `2g - 2 + n` accepted by [`f_polynomial`].
pub const FIT_COMPLEXITY_GUARD: usize = 3;
/// Largest number of unknowns `(2D + 1)^n` accepted by [`f_polynomial`].
pub const FIT_SIZE_GUARD: usize = 200_000;

/// Extra expansion orders per variable beyond those needed to pin the fit.
pub const SURPLUS: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FitReport {
    pub g: usize,
    pub n: usize,
    /// Exponents in each variable range over `-bound..=bound`.
    pub bound: i64,
    pub unknowns: usize,
    /// Expansion orders used per variable, `u^0 .. u^(rows - 1)`.
    pub rows: usize,
    pub surplus_per_variable: usize,
    pub checked_coefficients: usize,
}

/// `F_{g,n}(x(t_1), .., x(t_n))` as a Laurent polynomial.
pub fn f_polynomial(g: usize, n: usize) -> Result<LaurentPolynomial> {
    Ok(f_polynomial_with(&mut CountTable::new(), g, n, FIT_SIZE_GUARD)?.0)
}

/// The fit proper. The ansatz is every monomial with exponents in
/// `[-D, D]^n`, `D = 6g - 6 + 3n`. Expanding `t^k` at `x = oo` gives a
/// one-variable matrix `M[mu][k]`, and the `n`-variable system is its tensor
/// power, so the solve is one small inverse applied along each mode. Every
/// coefficient up to `u^(rows-1)` in every variable is then checked.
pub fn f_polynomial_with(
    table: &mut CountTable,
    g: usize,
    n: usize,
    size_guard: usize,
) -> Result<(LaurentPolynomial, FitReport)> {
    let chi = 2 * g as i64 - 2 + n as i64;
    if n == 0 || chi <= 0 {
        return Err(Error::Input(format!("F_{{{g},{n}}} is unstable; need 2g - 2 + n > 0")));
    }
    if chi as usize > FIT_COMPLEXITY_GUARD {
        return Err(Error::Guard(format!("2g - 2 + n = {chi} exceeds {FIT_COMPLEXITY_GUARD}")));
    }
    let bound = 6 * g as i64 - 6 + 3 * n as i64;
    let cols = (2 * bound + 1) as usize;
    let unknowns = cols.pow(n as u32);
    if unknowns > size_guard {
        return Err(Error::Guard(format!("fit for ({g},{n}) has {unknowns} unknowns, limit {size_guard}")));
    }

    // one-variable matrix with enough independent rows, then SURPLUS more
    let mut order = cols + SURPLUS;
    let (m, pivots) = loop {
        let xt = xt_substitution(order)?;
        let columns: Vec<Vec<Scalar>> = (-bound..=bound)
            .map(|k| {
                let s = xt.t_power(k)?;
                (0..=order as i64).map(|e| s.coeff(e)).collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let m: Matrix = (0..=order).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
        let pivots = pivot_rows(&m, cols);
        if pivots.len() == cols && order + 1 >= pivots[cols - 1] + 1 + SURPLUS {
            break (m, pivots);
        }
        order += SURPLUS;
        if order > 8 * cols + 64 {
            return Err(Error::Polynomiality("the expansion matrix never reaches full rank".into()));
        }
    };
    let rows = order + 1;
    let square: Matrix = pivots.iter().map(|&r| m[r].clone()).collect();
    let left = linalg::inverse(&square).map_err(|_| Error::Polynomiality("pivot block is singular".into()))?;

    let data = f_series_with(table, g, n, order)?;
    let value = |mu: &[usize]| -> Scalar {
        if mu.contains(&0) {
            Scalar::zero()
        } else {
            data.get(mu).cloned().unwrap_or_else(Scalar::zero)
        }
    };

    // data on the pivot grid, then one inverse per mode
    let mut grid: Vec<Scalar> = Vec::with_capacity(unknowns);
    for idx in crate::frobenius::index_tuples(cols, n) {
        let mu: Vec<usize> = idx.iter().map(|&i| pivots[i]).collect();
        grid.push(value(&mu));
    }
    let mut coeffs = grid;
    let mut shape = vec![cols; n];
    for mode in 0..n {
        coeffs = mode_product(&coeffs, &mut shape, mode, &left);
    }

    // surplus check on the full grid
    let mut predicted = coeffs.clone();
    let mut pshape = vec![cols; n];
    for mode in 0..n {
        predicted = mode_product(&predicted, &mut pshape, mode, &m);
    }
    for (idx, p) in crate::frobenius::index_tuples(rows, n).zip(&predicted) {
        let v = value(&idx);
        if &v != p {
            return Err(Error::Polynomiality(format!(
                "F_{{{g},{n}}}: coefficient of u^{idx:?} is {v} but the fitted Laurent polynomial gives {p}"
            )));
        }
    }

    let poly = LaurentPolynomial::from_terms(
        n,
        crate::frobenius::index_tuples(cols, n)
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(idx, c)| (idx.iter().map(|&i| i as i64 - bound).collect(), c)),
    );
    if !poly.is_symmetric() {
        return Err(Error::Polynomiality(format!("fitted F_{{{g},{n}}} is not symmetric")));
    }
    let report = FitReport {
        g,
        n,
        bound,
        unknowns,
        rows,
        surplus_per_variable: rows - cols,
        checked_coefficients: rows.pow(n as u32),
    };
    Ok((poly, report))
}

// Greedy choice of `want` independent rows.
fn pivot_rows(m: &Matrix, want: usize) -> Vec<usize> {
    let mut chosen: Vec<usize> = vec![];
    let mut picked: Matrix = vec![];
    for (r, row) in m.iter().enumerate() {
        picked.push(row.clone());
        if linalg::rank(&picked) > chosen.len() {
            chosen.push(r);
            if chosen.len() == want {
                break;
            }
        } else {
            picked.pop();
        }
    }
    chosen
}

// Applies `a` (new x old) along axis `mode` of a row-major tensor.
fn mode_product(t: &[Scalar], shape: &mut [usize], mode: usize, a: &Matrix) -> Vec<Scalar> {
    let old = shape[mode];
    let new = a.len();
    let outer: usize = shape[..mode].iter().product();
    let inner: usize = shape[mode + 1..].iter().product();
    let mut out = vec![Scalar::zero(); outer * new * inner];
    for o in 0..outer {
        for (r, arow) in a.iter().enumerate() {
            for (k, akj) in arow.iter().enumerate().take(old) {
                if akj.is_zero() {
                    continue;
                }
                let src = &t[(o * old + k) * inner..(o * old + k + 1) * inner];
                let dst = &mut out[(o * new + r) * inner..(o * new + r + 1) * inner];
                for (d, s) in dst.iter_mut().zip(src) {
                    if !s.is_zero() {
                        *d += akj * s;
                    }
                }
            }
        }
    }
    shape[mode] = new;
    out
}
