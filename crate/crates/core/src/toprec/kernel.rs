use std::collections::HashMap;

use num_traits::Zero;

use super::curve::{involution, LocalSpectralCurve};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::series::FormalSeries;

/// Residue calculus for the recursion kernel on one disc.
///
/// Expanding the kernel in `1/z1` gives `sum_k K_k(z) z1^{-k-1}` with
/// `K_k = (sigma^k - z^k) / ((y(sigma) - y) x')`. A recursion integrand is a sum of
/// monomials `z^a sigma^b sigma'`, so everything reduces to
/// `res(k, a, b) = [z^-1] K_k z^a sigma^b sigma'`, cached per triple.
#[derive(Debug)]
pub struct Kernel {
    sigma: FormalSeries,
    sigma_prime: FormalSeries,
    denom_inv: FormalSeries,
    cap: i64,
    k_cache: HashMap<i64, FormalSeries>,
    p_cache: HashMap<i64, FormalSeries>,
    res_cache: HashMap<(i64, i64, i64), Scalar>,
    handle: Option<FormalSeries>,
}

/// The kernel of disc `alpha`.
pub fn recursion_kernel(curve: &LocalSpectralCurve, alpha: usize) -> Result<Kernel> {
    Kernel::new(curve, alpha)
}

impl Kernel {
    pub fn new(curve: &LocalSpectralCurve, alpha: usize) -> Result<Self> {
        let disc = curve.disc(alpha)?;
        let cap = curve.truncation;
        let sigma = involution(curve, alpha)?;
        let dy = disc.y.compose(&sigma, cap)?.sub(&disc.y);
        match dy.valuation() {
            Some(1) => {}
            _ => {
                return Err(Error::Input(format!(
                    "y(sigma(z)) - y(z) must have a simple zero at z = 0 on disc {alpha}"
                )))
            }
        }
        let denom = dy.mul(&disc.x.derivative());
        Ok(Kernel {
            sigma_prime: sigma.derivative(),
            sigma,
            denom_inv: denom.inv(cap)?,
            cap,
            k_cache: HashMap::new(),
            p_cache: HashMap::new(),
            res_cache: HashMap::new(),
            handle: None,
        })
    }

    pub fn sigma(&self) -> &FormalSeries {
        &self.sigma
    }

    /// `1 / ((y(sigma) - y) x')`.
    pub fn denominator_inverse(&self) -> &FormalSeries {
        &self.denom_inv
    }

    /// `K_k(z)`, the coefficient of `z1^{-k-1}` in the kernel.
    pub fn kernel_coefficient(&mut self, k: i64) -> Result<&FormalSeries> {
        if !self.k_cache.contains_key(&k) {
            let num = self.sigma.pow(k, self.cap)?.sub(&FormalSeries::z().pow(k, self.cap)?);
            self.k_cache.insert(k, num.mul(&self.denom_inv));
        }
        Ok(&self.k_cache[&k])
    }

    fn sigma_power_prime(&mut self, b: i64) -> Result<&FormalSeries> {
        if !self.p_cache.contains_key(&b) {
            let p = self.sigma.pow(b, self.cap)?.mul(&self.sigma_prime);
            self.p_cache.insert(b, p);
        }
        Ok(&self.p_cache[&b])
    }

    /// `[z^-1] K_k z^a sigma^b sigma'`. Zero unless `1 <= k <= 1 - a - b`.
    pub fn residue(&mut self, k: i64, a: i64, b: i64) -> Result<Scalar> {
        if k < 1 || k > 1 - a - b {
            return Ok(Scalar::zero());
        }
        if let Some(r) = self.res_cache.get(&(k, a, b)) {
            return Ok(r.clone());
        }
        self.kernel_coefficient(k)?;
        self.sigma_power_prime(b)?;
        let r = self.k_cache[&k].product_coeff(&self.p_cache[&b], -1 - a)?;
        self.res_cache.insert((k, a, b), r.clone());
        Ok(r)
    }

    /// `[z^-1] K_k(z) h(z)` for an arbitrary integrand `h` (already including `sigma'`).
    pub fn residue_of(&mut self, k: i64, h: &FormalSeries) -> Result<Scalar> {
        if k < 1 {
            return Ok(Scalar::zero());
        }
        self.kernel_coefficient(k)?;
        self.k_cache[&k].product_coeff(h, -1)
    }

    /// `sigma' / (z - sigma)^2`: the Cauchy part of `W_{0,2}(z, sigma(z))`.
    pub fn handle_integrand(&mut self) -> Result<&FormalSeries> {
        if self.handle.is_none() {
            let gap = FormalSeries::z().sub(&self.sigma);
            let h = gap.pow(-2, self.cap)?.mul(&self.sigma_prime);
            self.handle = Some(h);
        }
        Ok(self.handle.as_ref().expect("just set"))
    }

    /// Largest `k` for which `K_k h` can have a residue, from valuations.
    pub fn max_k_for(&self, h: &FormalSeries) -> i64 {
        match h.valuation() {
            Some(v) => 1 - v,
            None => 0,
        }
    }
}
