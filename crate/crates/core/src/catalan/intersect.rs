use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::fit::f_polynomial_with;
use super::laurent::LaurentPolynomial;
use crate::eco::CountTable;
use crate::error::{Error, Result};
use crate::scalar::{self, double_factorial, Scalar};
use crate::toprec::TrTable;

/// `<tau_{d_1} .. tau_{d_n}>_g` for one `(g, n)`, keyed by sorted `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionTable {
    pub g: usize,
    pub n: usize,
    values: BTreeMap<Vec<usize>, Scalar>,
}

/// One row of CLI output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionRecord {
    pub g: usize,
    pub n: usize,
    pub d: Vec<usize>,
    pub value: String,
}

impl IntersectionTable {
    /// Value for any ordering of `d`; zero off the dimension constraint.
    pub fn get(&self, d: &[usize]) -> Scalar {
        let mut k = d.to_vec();
        k.sort_unstable();
        self.values.get(&k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.values.iter()
    }

    pub fn records(&self) -> Vec<IntersectionRecord> {
        self.values
            .iter()
            .map(|(d, v)| IntersectionRecord { g: self.g, n: self.n, d: d.clone(), value: scalar::format(v) })
            .collect()
    }
}

/// Sorted `d` with `sum d = 3g - 3 + n`.
pub fn dimension_profiles(g: usize, n: usize) -> Vec<Vec<usize>> {
    let total = 3 * g as i64 - 3 + n as i64;
    if n == 0 || total < 0 {
        return vec![];
    }
    let mut out = vec![];
    let mut cur = vec![];
    fn rec(left: usize, slots: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for d in min..=left {
            cur.push(d);
            rec(left - d, slots - 1, d, cur, out);
            cur.pop();
        }
    }
    rec(total as usize, n, 0, &mut cur, &mut out);
    out
}

fn dfact(k: i64) -> Scalar {
    Scalar::from_integer(double_factorial(k))
}

fn pow2(e: i64) -> Scalar {
    let two = Scalar::from_integer(2.into());
    if e >= 0 {
        (0..e).fold(Scalar::one(), |a, _| a * &two)
    } else {
        (0..-e).fold(Scalar::one(), |a, _| a / &two)
    }
}

/// Intersection numbers read off the top-degree part of `F_{g,n}(t)`, which is
/// `(-1)^n / 2^(2g-2+n) * sum <tau_d> prod |2d_i - 1|!! (t_i/2)^(2d_i+1)`.
pub fn intersection_numbers(g: usize, n: usize) -> Result<IntersectionTable> {
    let (f, _) = f_polynomial_with(&mut CountTable::new(), g, n, super::fit::FIT_SIZE_GUARD)?;
    intersections_from_polynomial(g, n, &f)
}

pub fn intersections_from_polynomial(g: usize, n: usize, f: &LaurentPolynomial) -> Result<IntersectionTable> {
    let top = 6 * g as i64 - 6 + 3 * n as i64;
    if f.top_degree() != Some(top) {
        return Err(Error::Polynomiality(format!(
            "top degree of F_{{{g},{n}}} is {:?}, expected {top}",
            f.top_degree()
        )));
    }
    let part = f.homogeneous_part(top);
    for (e, _) in part.terms() {
        if e.iter().any(|k| k.rem_euclid(2) != 1) {
            return Err(Error::Polynomiality(format!("top part of F_{{{g},{n}}} has an even exponent in {e:?}")));
        }
    }
    let chi = 2 * g as i64 - 2 + n as i64;
    let sign = if n.is_multiple_of(2) { Scalar::one() } else { -Scalar::one() };
    let mut values = BTreeMap::new();
    for d in dimension_profiles(g, n) {
        let e: Vec<i64> = d.iter().map(|&di| 2 * di as i64 + 1).collect();
        let mut norm = &sign * pow2(-chi);
        for &di in &d {
            norm *= dfact(2 * di as i64 - 1) * pow2(-(2 * di as i64 + 1));
        }
        let v = part.coeff(&e) / norm;
        if !v.is_zero() {
            values.insert(d, v);
        }
    }
    Ok(IntersectionTable { g, n, values })
}

/// Intersection numbers from the leading poles of a recursion table. Near a
/// simple branch point `W_{g,n} = (-1)^n sum <tau_d> prod (2d_i+1)!! z_i^{-2d_i-2}
/// + (lower poles)`, normalised on the Airy values `W_{0,3} = -1/(z1 z2 z3)^2`.
pub fn intersections_from_toprec(table: &TrTable, g: usize, n: usize, disc: usize) -> Result<IntersectionTable> {
    let w = table
        .correlator(g, n, disc)
        .ok_or_else(|| Error::Input(format!("the table has no W_{{{g},{n}}} on disc {disc}")))?;
    let sign = if n.is_multiple_of(2) { Scalar::one() } else { -Scalar::one() };
    let mut values = BTreeMap::new();
    for d in dimension_profiles(g, n) {
        let e: Vec<i64> = d.iter().map(|&di| -2 * di as i64 - 2).collect();
        let mut norm = sign.clone();
        for &di in &d {
            norm *= dfact(2 * di as i64 + 1);
        }
        let v = w.coefficient(&e, &vec![0; n]) / norm;
        if !v.is_zero() {
            values.insert(d, v);
        }
    }
    Ok(IntersectionTable { g, n, values })
}

/// Independent oracle for `<tau_{d_1} .. tau_{d_n}>_g`: string and dilaton
/// equations, and the Virasoro (DVV) relation when neither applies.
pub fn dvv_oracle(g: usize, d: &[usize]) -> Scalar {
    Oracle::default().get(g, d)
}

#[derive(Default)]
struct Oracle {
    memo: HashMap<(usize, Vec<usize>), Scalar>,
}

impl Oracle {
    fn get(&mut self, g: usize, d: &[usize]) -> Scalar {
        let n = d.len();
        if n == 0 || d.iter().sum::<usize>() + 3 != 3 * g + n {
            return Scalar::zero();
        }
        let mut key = d.to_vec();
        key.sort_unstable();
        if g == 0 && key == [0, 0, 0] {
            return Scalar::one();
        }
        if g == 1 && key == [1] {
            return Scalar::new(1.into(), 24.into());
        }
        if let Some(v) = self.memo.get(&(g, key.clone())) {
            return v.clone();
        }
        let v = self.compute(g, &key);
        self.memo.insert((g, key), v.clone());
        v
    }

    fn compute(&mut self, g: usize, d: &[usize]) -> Scalar {
        let n = d.len();
        if let Some(i) = d.iter().position(|&x| x == 0) {
            // string
            let rest: Vec<usize> = d.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &x)| x).collect();
            let mut s = Scalar::zero();
            for j in 0..rest.len() {
                if rest[j] > 0 {
                    let mut r = rest.clone();
                    r[j] -= 1;
                    s += self.get(g, &r);
                }
            }
            return s;
        }
        if let Some(i) = d.iter().position(|&x| x == 1) {
            // dilaton
            let rest: Vec<usize> = d.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &x)| x).collect();
            let factor = Scalar::from_integer((2 * g as i64 - 2 + n as i64 - 1).into());
            return factor * self.get(g, &rest);
        }
        // DVV on the first insertion, tau_{k+1}
        let k = d[0] as i64 - 1;
        let rest = &d[1..];
        let mut s = Scalar::zero();
        for j in 0..rest.len() {
            let dj = rest[j] as i64;
            let mut r = rest.to_vec();
            r[j] = (k + dj) as usize;
            s += dfact(2 * k + 2 * dj + 1) / dfact(2 * dj - 1) * self.get(g, &r);
        }
        let half = Scalar::new(1.into(), 2.into());
        for a in 0..k {
            let b = k - 1 - a;
            let c = dfact(2 * a + 1) * dfact(2 * b + 1) * &half;
            let mut acc = Scalar::zero();
            if g >= 1 {
                let mut r = vec![a as usize, b as usize];
                r.extend_from_slice(rest);
                acc += self.get(g - 1, &r);
            }
            for mask in 0u32..(1 << rest.len()) {
                let mut left = vec![a as usize];
                let mut right = vec![b as usize];
                for (i, &x) in rest.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        left.push(x)
                    } else {
                        right.push(x)
                    }
                }
                for g1 in 0..=g {
                    let l = self.get(g1, &left);
                    if !l.is_zero() {
                        acc += l * self.get(g - g1, &right);
                    }
                }
            }
            s += c * acc;
        }
        s / dfact(2 * k + 3)
    }
}
