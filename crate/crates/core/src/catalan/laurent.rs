use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::poly::{Poly, RatFunc};
use crate::scalar::{self, Scalar};

/// Sparse Laurent polynomial in `t_1..t_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, Scalar>,
}

/// JSON form: `{"nvars": n, "terms": [[[k1, .., kn], "p/q"], ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentSpec {
    pub nvars: usize,
    pub terms: Vec<(Vec<i64>, String)>,
}

impl LaurentPolynomial {
    pub fn zero(nvars: usize) -> Self {
        LaurentPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<i64>, Scalar)>) -> Self {
        let mut p = LaurentPolynomial::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent tuple of the wrong length");
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Vec<i64>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[i64]) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest total degree; `None` for zero.
    pub fn top_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Smallest total degree; `None` for zero.
    pub fn bottom_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    /// The homogeneous part of total degree `d`.
    pub fn homogeneous_part(&self, d: i64) -> LaurentPolynomial {
        LaurentPolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<i64>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| {
            (0..self.nvars.saturating_sub(1)).all(|i| {
                let mut f = e.clone();
                f.swap(i, i + 1);
                self.terms.get(&f) == Some(c)
            })
        })
    }

    /// `p(t, .., t)`.
    pub fn diagonal(&self) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(1, self.terms.iter().map(|(e, c)| (vec![e.iter().sum()], c.clone())))
    }

    /// A one-variable Laurent polynomial as a rational function of `t`.
    pub fn to_ratfunc(&self) -> RatFunc {
        assert_eq!(self.nvars, 1, "only one-variable Laurent polynomials convert");
        let low = self.terms.keys().map(|e| e[0]).min().unwrap_or(0).min(0);
        let mut num = vec![Scalar::zero(); self.terms.keys().map(|e| (e[0] - low) as usize + 1).max().unwrap_or(0)];
        for (e, c) in &self.terms {
            num[(e[0] - low) as usize] += c;
        }
        RatFunc::new(Poly::new(num), Poly::monomial((-low) as usize, Scalar::from_integer(1.into())))
            .expect("monomial denominator")
    }

    pub fn to_spec(&self) -> LaurentSpec {
        LaurentSpec {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), scalar::format(c))).collect(),
        }
    }

    pub fn from_spec(spec: &LaurentSpec) -> crate::Result<Self> {
        let terms =
            spec.terms.iter().map(|(e, c)| Ok((e.clone(), scalar::parse(c)?))).collect::<crate::Result<Vec<_>>>()?;
        if terms.iter().any(|(e, _)| e.len() != spec.nvars) {
            return Err(crate::Error::Input("exponent tuple length differs from nvars".into()));
        }
        Ok(LaurentPolynomial::from_terms(spec.nvars, terms))
    }
}
