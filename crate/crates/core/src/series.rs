//! Truncated Laurent series in one variable over the rationals.
//!
//! A series knows its own precision: coefficients are valid for exponents
//! strictly below `prec`. Every operation propagates precision soundly, and
//! asking for a coefficient at or beyond it is an error rather than a guess.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Precision used for exact data (polynomials, constants).
pub const EXACT: i64 = i64::MAX / 4;

#[derive(Clone, PartialEq, Eq)]
pub struct FormalSeries {
    /// Exponent of `coeffs[0]`.
    val: i64,
    coeffs: Vec<Scalar>,
    prec: i64,
}

impl fmt::Debug for FormalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.terms().map(|(e, c)| format!("{c}*z^{e}")).collect();
        let tail = if self.prec >= EXACT / 2 { String::new() } else { format!(" + O(z^{})", self.prec) };
        write!(f, "{}{tail}", if terms.is_empty() { "0".into() } else { terms.join(" + ") })
    }
}

impl FormalSeries {
    /// Series from `(exponent, coefficient)` pairs, valid below `prec`.
    /// Terms at or above `prec` are dropped.
    pub fn from_terms(terms: &[(i64, Scalar)], prec: i64) -> Self {
        let live: Vec<&(i64, Scalar)> = terms.iter().filter(|(e, c)| *e < prec && !c.is_zero()).collect();
        let Some(lo) = live.iter().map(|(e, _)| *e).min() else {
            return FormalSeries::zero(prec);
        };
        let hi = live.iter().map(|(e, _)| *e).max().expect("non-empty");
        let mut coeffs = vec![Scalar::zero(); (hi - lo + 1) as usize];
        for (e, c) in live {
            coeffs[(e - lo) as usize] += c;
        }
        FormalSeries { val: lo, coeffs, prec }.normalized()
    }

    /// `0 + O(z^prec)`.
    pub fn zero(prec: i64) -> Self {
        FormalSeries { val: prec.min(0), coeffs: vec![], prec }
    }

    pub fn constant(c: Scalar) -> Self {
        FormalSeries::from_terms(&[(0, c)], EXACT)
    }

    /// `c z^e`, exact.
    pub fn monomial(e: i64, c: Scalar) -> Self {
        FormalSeries::from_terms(&[(e, c)], EXACT)
    }

    /// The variable `z`, exact.
    pub fn z() -> Self {
        FormalSeries::monomial(1, Scalar::one())
    }

    fn normalized(mut self) -> Self {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.coeffs.clear();
                self.val = self.prec.min(0);
            }
            Some(k) => {
                self.coeffs.drain(..k);
                self.val += k as i64;
                while self.coeffs.last().is_some_and(Zero::is_zero) {
                    self.coeffs.pop();
                }
                let keep = (self.prec - self.val).max(0) as usize;
                self.coeffs.truncate(keep);
            }
        }
        self
    }

    /// Exclusive upper bound of known exponents.
    pub fn precision(&self) -> i64 {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec >= EXACT / 2
    }

    /// Lowest exponent with a non-zero coefficient; `None` if no known
    /// coefficient is non-zero.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.val)
    }

    // Valuation as a lower bound usable in precision formulas.
    fn val_bound(&self) -> i64 {
        self.valuation().unwrap_or(self.prec)
    }

    /// Coefficient of `z^e`; errors if `e` is beyond the known precision.
    pub fn coeff(&self, e: i64) -> Result<Scalar> {
        if e >= self.prec {
            return Err(Error::Truncation(format!(
                "coefficient of z^{e} requested from a series known below z^{}",
                self.prec
            )));
        }
        Ok(self.coeff_unchecked(e))
    }

    fn coeff_unchecked(&self, e: i64) -> Scalar {
        if e < self.val {
            return Scalar::zero();
        }
        self.coeffs.get((e - self.val) as usize).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Known non-zero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (self.val + k as i64, c))
    }

    /// Forgets everything at and above `prec`.
    pub fn truncate(&self, prec: i64) -> Self {
        let mut s = self.clone();
        s.prec = s.prec.min(prec);
        s.normalized()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return FormalSeries::zero(self.prec);
        }
        FormalSeries { val: self.val, coeffs: self.coeffs.iter().map(|x| x * c).collect(), prec: self.prec }
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        FormalSeries {
            val: self.val + k,
            coeffs: self.coeffs.clone(),
            prec: if self.is_exact() { self.prec } else { self.prec + k },
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, Scalar::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -Scalar::one())
    }

    fn combine(&self, other: &Self, sign: Scalar) -> Self {
        let prec = self.prec.min(other.prec);
        let mut terms: Vec<(i64, Scalar)> = self.terms().map(|(e, c)| (e, c.clone())).collect();
        terms.extend(other.terms().map(|(e, c)| (e, c * &sign)));
        FormalSeries::from_terms(&terms, prec)
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Scalar::one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (va, vb) = (self.val_bound(), other.val_bound());
        let prec = sat_add(va, other.prec).min(sat_add(vb, self.prec));
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return FormalSeries::zero(prec);
        }
        let lo = va + vb;
        let hi = (self.val + self.coeffs.len() as i64 - 1 + other.val + other.coeffs.len() as i64 - 1).min(prec - 1);
        if hi < lo {
            return FormalSeries::zero(prec);
        }
        let mut coeffs = vec![Scalar::zero(); (hi - lo + 1) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ei = self.val + i as i64;
            for (j, b) in other.coeffs.iter().enumerate() {
                let e = ei + other.val + j as i64;
                if e > hi {
                    break;
                }
                if !b.is_zero() {
                    coeffs[(e - lo) as usize] += a * b;
                }
            }
        }
        FormalSeries { val: lo, coeffs, prec }.normalized()
    }

    /// Multiplicative inverse. The leading coefficient must be known and
    /// non-zero; an exact non-monomial input is first truncated at `cap`.
    pub fn inv(&self, cap: i64) -> Result<Self> {
        let v = self
            .valuation()
            .ok_or_else(|| Error::Truncation("cannot invert a series with no known non-zero coefficient".into()))?;
        let src = if self.is_exact() && self.coeffs.len() > 1 { self.truncate(cap) } else { self.clone() };
        let lead_inv = Scalar::one() / &src.coeffs[0];
        if src.is_exact() {
            return Ok(FormalSeries::monomial(-v, lead_inv));
        }
        // u = z^v (c0 + c1 z + ..), relative precision m = prec - v
        let m = (src.prec - v) as usize;
        let mut out: Vec<Scalar> = Vec::with_capacity(m);
        for k in 0..m {
            if k == 0 {
                out.push(lead_inv.clone());
                continue;
            }
            let mut s = Scalar::zero();
            for j in 1..=k.min(src.coeffs.len() - 1) {
                let c = &src.coeffs[j];
                if !c.is_zero() {
                    s += c * &out[k - j];
                }
            }
            out.push(-s * &lead_inv);
        }
        Ok(FormalSeries { val: -v, coeffs: out, prec: src.prec - 2 * v }.normalized())
    }

    /// Integer power; negative powers go through [`FormalSeries::inv`].
    pub fn pow(&self, k: i64, cap: i64) -> Result<Self> {
        let base = if k < 0 { self.inv(cap)? } else { self.clone() };
        let mut acc = FormalSeries::constant(Scalar::one());
        let mut sq = base;
        let mut k = k.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> Self {
        let terms: Vec<(i64, Scalar)> =
            self.terms().map(|(e, c)| (e - 1, c * Scalar::from_integer(e.into()))).collect();
        FormalSeries::from_terms(&terms, if self.is_exact() { self.prec } else { self.prec - 1 })
    }

    /// Square root of a series `1 + O(z)`.
    pub fn sqrt(&self) -> Result<Self> {
        if self.valuation() != Some(0) || !self.coeffs[0].is_one() {
            return Err(Error::Input("square root needs a series starting with 1".into()));
        }
        if self.is_exact() {
            return Err(Error::Truncation("square root of an exact series needs a truncation".into()));
        }
        let m = self.prec as usize;
        let two = Scalar::from_integer(2.into());
        let mut s: Vec<Scalar> = vec![Scalar::one()];
        for k in 1..m {
            let mut acc = self.coeff_unchecked(k as i64);
            for i in 1..k {
                acc -= &s[i] * &s[k - i];
            }
            s.push(acc / &two);
        }
        Ok(FormalSeries { val: 0, coeffs: s, prec: self.prec }.normalized())
    }

    /// `self(g(z))` for `g` of positive valuation.
    pub fn compose(&self, g: &Self, cap: i64) -> Result<Self> {
        let vg = g.valuation().ok_or_else(|| Error::Truncation("composition with an unknown series".into()))?;
        if vg < 1 {
            return Err(Error::Input("inner series must vanish at 0".into()));
        }
        let v = self.val_bound().min(0);
        // self = z^v * h with h a power series; h(g) by Horner
        let h = self.shift(-v);
        let top = if h.is_exact() { h.val + h.coeffs.len() as i64 - 1 } else { h.prec - 1 };
        let mut acc = if h.is_exact() { FormalSeries::zero(EXACT) } else { FormalSeries::zero(0) };
        for e in (0..=top.max(0)).rev() {
            acc = acc.mul(g).add(&FormalSeries::constant(h.coeff_unchecked(e)));
        }
        if v < 0 {
            acc = acc.mul(&g.pow(v, cap)?);
        }
        Ok(acc)
    }

    /// `[z^e](self * other)` without forming the product.
    pub fn product_coeff(&self, other: &Self, e: i64) -> Result<Scalar> {
        let (va, vb) = (self.val_bound(), other.val_bound());
        let prec = sat_add(va, other.prec).min(sat_add(vb, self.prec));
        if e >= prec {
            return Err(Error::Truncation(format!("coefficient of z^{e} in a product known below z^{prec}")));
        }
        let mut s = Scalar::zero();
        for (i, a) in self.terms() {
            let b = other.coeff_unchecked(e - i);
            if !b.is_zero() {
                s += a * b;
            }
        }
        Ok(s)
    }
}

fn sat_add(a: i64, b: i64) -> i64 {
    if a >= EXACT / 2 || b >= EXACT / 2 {
        EXACT
    } else {
        a + b
    }
}
