use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::curve::LocalSpectralCurve;
use super::kernel::Kernel;
use crate::error::{Error, Result};
use crate::frobenius::{index_tuples, FrobeniusAlgebra};
use crate::scalar::{self, Scalar};
use crate::zoo;

/// `W_{g,n} / dz_1..dz_n` on one disc, as monomials `z_1^{e_1}..z_n^{e_n}`.
///
/// Each monomial carries a tensor of length `dim^n` (row-major, slot 1 most
/// significant): the twisted correlator on basis tuples. Plain runs have `dim = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Correlator {
    pub g: usize,
    pub n: usize,
    pub disc: usize,
    dim: usize,
    terms: BTreeMap<Vec<i64>, Vec<Scalar>>,
}

impl Correlator {
    fn empty(g: usize, n: usize, disc: usize, dim: usize) -> Self {
        Correlator { g, n, disc, dim, terms: BTreeMap::new() }
    }

    /// A plain correlator from explicit coefficients.
    pub fn from_plain_terms(g: usize, n: usize, disc: usize, terms: BTreeMap<Vec<i64>, Scalar>) -> Self {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).map(|(e, c)| (e, vec![c])).collect();
        Correlator { g, n, disc, dim: 1, terms }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Vec<Scalar>)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `z^exps` on the basis tuple `slots`.
    pub fn coefficient(&self, exps: &[i64], slots: &[usize]) -> Scalar {
        match self.terms.get(exps) {
            Some(t) => t[flat(slots, self.dim)].clone(),
            None => Scalar::zero(),
        }
    }

    /// Coefficient for a plain (`dim = 1`) correlator.
    pub fn plain_coefficient(&self, exps: &[i64]) -> Scalar {
        self.coefficient(exps, &vec![0; exps.len()])
    }

    /// Highest pole order in any single variable.
    pub fn max_pole_order(&self) -> i64 {
        self.terms.keys().flat_map(|e| e.iter().map(|x| -x)).max().unwrap_or(0)
    }

    /// True if every exponent is negative in every variable.
    pub fn is_principal(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|x| *x < 0))
    }

    /// Invariance under every simultaneous permutation of variables and slots.
    pub fn is_symmetric(&self) -> bool {
        let n = self.n;
        (0..n.saturating_sub(1)).all(|i| {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.swap(i, i + 1);
            self.terms.iter().all(|(e, t)| {
                let pe: Vec<i64> = perm.iter().map(|&p| e[p]).collect();
                let Some(other) = self.terms.get(&pe) else { return false };
                index_tuples(self.dim, n).all(|s| {
                    let ps: Vec<usize> = perm.iter().map(|&p| s[p]).collect();
                    t[flat(&s, self.dim)] == other[flat(&ps, self.dim)]
                })
            })
        })
    }

    /// True if the differential is odd under `z_i -> -z_i` for each `i`, i.e.
    /// every exponent of `W / dz` is even.
    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|x| x.rem_euclid(2) == 0))
    }

    fn add(&mut self, exps: Vec<i64>, c: &Scalar, tensor: &[Scalar]) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(|| vec![Scalar::zero(); tensor.len()]);
        for (x, t) in entry.iter_mut().zip(tensor) {
            if !t.is_zero() {
                *x += c * t;
            }
        }
    }

    fn prune(&mut self) {
        self.terms.retain(|_, t| t.iter().any(|x| !x.is_zero()));
    }
}

fn flat(slots: &[usize], dim: usize) -> usize {
    slots.iter().fold(0, |acc, s| acc * dim + s)
}

/// Every `W_{g,n}` with `1 <= 2g - 2 + n <= max_complexity`, per disc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrTable {
    pub dim: usize,
    pub discs: usize,
    pub truncation: i64,
    pub max_complexity: usize,
    entries: BTreeMap<(usize, usize), Vec<Correlator>>,
}

impl TrTable {
    /// Stable `(g, n)` with `1 <= 2g - 2 + n <= m`, in complexity order.
    pub fn stable_range(m: usize) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for chi in 1..=m {
            for g in 0..=chi.div_ceil(2) {
                out.push((g, chi + 2 - 2 * g));
            }
        }
        out
    }

    pub fn get(&self, g: usize, n: usize) -> Option<&Correlator> {
        self.correlator(g, n, 0)
    }

    pub fn correlator(&self, g: usize, n: usize, disc: usize) -> Option<&Correlator> {
        self.entries.get(&(g, n)).and_then(|v| v.get(disc))
    }

    pub fn keys(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.entries.keys()
    }

    /// Coefficient of `z^exps` with variable `i` on disc `discs[i]`. Mixed disc
    /// tuples are zero because discs do not interact.
    pub fn coefficient(&self, g: usize, discs: &[usize], exps: &[i64], slots: &[usize]) -> Scalar {
        let Some(&d0) = discs.first() else { return Scalar::zero() };
        if discs.iter().any(|d| *d != d0) {
            return Scalar::zero();
        }
        self.correlator(g, discs.len(), d0).map(|c| c.coefficient(exps, slots)).unwrap_or_else(Scalar::zero)
    }

    pub fn report(&self) -> Vec<CorrelatorReport> {
        self.entries
            .iter()
            .map(|(&(g, n), per_disc)| {
                let mut entries = vec![];
                for c in per_disc {
                    for (e, t) in c.terms() {
                        for s in index_tuples(c.dim, n) {
                            let v = &t[flat(&s, c.dim)];
                            if v.is_zero() {
                                continue;
                            }
                            entries.push(CorrelatorEntry {
                                discs: vec![c.disc; n],
                                exponents: e.clone(),
                                slots: (self.dim > 1).then(|| s.clone()),
                                coefficient: scalar::format(v),
                            });
                        }
                    }
                }
                CorrelatorReport { g, n, entries }
            })
            .collect()
    }
}

/// JSON form of one correlator: nonzero coefficients keyed by disc tuple,
/// exponent tuple and, for twisted runs, basis tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrelatorReport {
    pub g: usize,
    pub n: usize,
    pub entries: Vec<CorrelatorEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrelatorEntry {
    pub discs: Vec<usize>,
    pub exponents: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slots: Option<Vec<usize>>,
    pub coefficient: String,
}

/// Plain recursion: `W_{g,n}` for `1 <= 2g - 2 + n <= max_complexity`.
pub fn toprec_run(curve: &LocalSpectralCurve, max_complexity: usize) -> Result<TrTable> {
    let trivial = zoo::semisimple(1)?;
    run(curve, &trivial, max_complexity)
}

/// Twisted recursion over a commutative Frobenius algebra, starting from
/// `W_{0,2}` times `eta`.
pub fn twisted_toprec_run(
    curve: &LocalSpectralCurve,
    alg: &FrobeniusAlgebra,
    max_complexity: usize,
) -> Result<TrTable> {
    alg.require_commutative()?;
    run(curve, alg, max_complexity)
}

/// Checks `twisted = plain * eps(e_{i_1}..e_{i_n} e^g)` on every coefficient.
pub fn factorization_holds(plain: &TrTable, twisted: &TrTable, alg: &FrobeniusAlgebra) -> Result<bool> {
    if plain.dim != 1 || twisted.dim != alg.dim() {
        return Err(Error::Input("factorization needs a plain table and a twisted table over the algebra".into()));
    }
    if plain.keys().ne(twisted.keys()) || plain.discs != twisted.discs {
        return Ok(false);
    }
    for &(g, n) in plain.keys() {
        let omegas: Vec<Scalar> = index_tuples(alg.dim(), n)
            .map(|s| alg.omega(g, &s.iter().map(|&i| alg.basis_vector(i)).collect::<Vec<_>>()))
            .collect::<Result<_>>()?;
        for d in 0..plain.discs {
            let (p, t) = (plain.correlator(g, n, d).expect("key"), twisted.correlator(g, n, d).expect("key"));
            let keys_match = t.terms.keys().all(|e| p.terms.contains_key(e));
            if !keys_match {
                return Ok(false);
            }
            for (e, pt) in p.terms() {
                let zeros = vec![Scalar::zero(); omegas.len()];
                let tt = t.terms.get(e).unwrap_or(&zeros);
                if tt.iter().zip(&omegas).any(|(x, w)| *x != &pt[0] * w) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

type Integrand = HashMap<(i64, i64, Vec<i64>), Vec<Scalar>>;

// A factor of the split sum: (first-slot exponent, remaining exponents, tensor).
type FactorTerm = (i64, Vec<i64>, Vec<Scalar>);

struct DiscRun<'a> {
    disc: usize,
    r: usize,
    kernel: Kernel,
    holomorphic: &'a [(i64, i64, Scalar)],
    // delta[i][a * r + b]
    delta: Vec<Vec<Scalar>>,
    eta: Vec<Scalar>,
    table: BTreeMap<(usize, usize), Correlator>,
}

fn run(curve: &LocalSpectralCurve, alg: &FrobeniusAlgebra, max_complexity: usize) -> Result<TrTable> {
    let r = alg.dim();
    let delta: Vec<Vec<Scalar>> = alg.twisted_kernel().into_iter().map(|t| t.into_data()).collect();
    let (eta_m, _) = alg.eta_matrices();
    let eta: Vec<Scalar> = eta_m.iter().flatten().cloned().collect();
    let mut entries: BTreeMap<(usize, usize), Vec<Correlator>> = BTreeMap::new();
    for (alpha, disc) in curve.discs.iter().enumerate() {
        let mut dr = DiscRun {
            disc: alpha,
            r,
            kernel: Kernel::new(curve, alpha)?,
            holomorphic: &disc.holomorphic,
            delta: delta.clone(),
            eta: eta.clone(),
            table: BTreeMap::new(),
        };
        for (g, n) in TrTable::stable_range(max_complexity) {
            let w = dr.step(g, n)?;
            dr.table.insert((g, n), w);
        }
        for (k, w) in dr.table {
            entries.entry(k).or_default().push(w);
        }
    }
    Ok(TrTable { dim: r, discs: curve.discs.len(), truncation: curve.truncation, max_complexity, entries })
}

impl DiscRun<'_> {
    /// `W_{g,n}` from the entries of lower complexity.
    fn step(&mut self, g: usize, n: usize) -> Result<Correlator> {
        let r = self.r;
        let rest = n - 1;
        let rest_len = r.pow(rest as u32);
        let mut integrand: Integrand = HashMap::new();
        let mut out = Correlator::empty(g, n, self.disc, r);

        if g >= 1 {
            if (g - 1, rest + 2) == (0, 2) {
                // W_{0,2}(z, sigma(z)): Cauchy part by direct series, holomorphic part as monomials
                let h = self.kernel.handle_integrand()?.clone();
                let contracted: Vec<Scalar> = (0..r).map(|i| dot(&self.delta[i], &self.eta)).collect();
                for k in 1..=self.kernel.max_k_for(&h) {
                    let c = self.kernel.residue_of(k, &h)?;
                    out.add(vec![-k - 1], &c, &contracted);
                }
                for (j, k, b) in self.holomorphic {
                    add_term(&mut integrand, (*j, *k, vec![]), b, &self.eta);
                }
            } else {
                let prev = &self.table[&(g - 1, rest + 2)];
                for (e, t) in prev.terms() {
                    add_term(&mut integrand, (e[0], e[1], e[2..].to_vec()), &Scalar::one(), t);
                }
            }
        }

        for g1 in 0..=g {
            let g2 = g - g1;
            for mask in 0u32..(1 << rest) {
                let left: Vec<usize> = (0..rest).filter(|i| mask >> i & 1 == 1).collect();
                let right: Vec<usize> = (0..rest).filter(|i| mask >> i & 1 == 0).collect();
                if (g1, left.len()) == (0, 0) || (g2, right.len()) == (0, 0) {
                    continue;
                }
                let (a_min, b_min) = (self.min_first(g1, left.len() + 1), self.min_first(g2, right.len() + 1));
                let fa = self.factor(g1, left.len() + 1, -b_min);
                let fb = self.factor(g2, right.len() + 1, -a_min);
                for (a, ea, ta) in &fa {
                    for (b, eb, tb) in &fb {
                        if a + b > 0 {
                            continue;
                        }
                        let mut exps = vec![0; rest];
                        for (pos, e) in left.iter().zip(ea) {
                            exps[*pos] = *e;
                        }
                        for (pos, e) in right.iter().zip(eb) {
                            exps[*pos] = *e;
                        }
                        let tensor = merge(r, rest, &left, ta, &right, tb);
                        add_term(&mut integrand, (*a, *b, exps), &Scalar::one(), &tensor);
                    }
                }
            }
        }

        for ((a, b, exps), t) in integrand {
            // contract the two kernel slots with the twisted kernel
            let mut c = vec![Scalar::zero(); r * rest_len];
            for i in 0..r {
                for ab in 0..r * r {
                    let d = &self.delta[i][ab];
                    if d.is_zero() {
                        continue;
                    }
                    for s in 0..rest_len {
                        let x = &t[ab * rest_len + s];
                        if !x.is_zero() {
                            c[i * rest_len + s] += d * x;
                        }
                    }
                }
            }
            if c.iter().all(Zero::is_zero) {
                continue;
            }
            for k in 1..=1 - a - b {
                let res = self.kernel.residue(k, a, b)?;
                let mut key = vec![-k - 1];
                key.extend(&exps);
                out.add(key, &res, &c);
            }
            for (j, q, bjq) in self.holomorphic {
                let res = self.kernel.residue(q + 1, a, b)?;
                let coeff = bjq * res / Scalar::from_integer((q + 1).into());
                let mut key = vec![*j];
                key.extend(&exps);
                out.add(key, &coeff, &c);
            }
        }
        out.prune();
        Ok(out)
    }

    // Smallest first-slot exponent of a factor.
    fn min_first(&self, g: usize, n: usize) -> i64 {
        if (g, n) == (0, 2) {
            return self.holomorphic.iter().map(|t| t.0).chain([0]).min().expect("non-empty");
        }
        self.table[&(g, n)].terms().map(|(e, _)| e[0]).min().unwrap_or(0)
    }

    // Terms of W_{g,n}(z, ..) with first exponent at most `max_a`; W_{0,2} is
    // expanded for |z| < |z_j|.
    fn factor(&self, g: usize, n: usize, max_a: i64) -> Vec<FactorTerm> {
        if (g, n) == (0, 2) {
            let mut out: Vec<FactorTerm> = (0..=max_a)
                .map(|p| (p, vec![-p - 2], self.eta.iter().map(|x| x * Scalar::from_integer((p + 1).into())).collect()))
                .collect();
            for (j, k, b) in self.holomorphic {
                if *j <= max_a {
                    out.push((*j, vec![*k], self.eta.iter().map(|x| x * b).collect()));
                }
            }
            return out;
        }
        self.table[&(g, n)]
            .terms()
            .filter(|(e, _)| e[0] <= max_a)
            .map(|(e, t)| (e[0], e[1..].to_vec(), t.clone()))
            .collect()
    }
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn add_term(integrand: &mut Integrand, key: (i64, i64, Vec<i64>), c: &Scalar, t: &[Scalar]) {
    let entry = integrand.entry(key).or_insert_with(|| vec![Scalar::zero(); t.len()]);
    for (x, y) in entry.iter_mut().zip(t) {
        if !y.is_zero() {
            *x += c * y;
        }
    }
}

// Tensor with slots [a, b, rest..] from A[a, left..] and B[b, right..].
fn merge(r: usize, rest: usize, left: &[usize], ta: &[Scalar], right: &[usize], tb: &[Scalar]) -> Vec<Scalar> {
    let rest_len = r.pow(rest as u32);
    let mut out = vec![Scalar::zero(); r * r * rest_len];
    for (slot, digits) in out.iter_mut().zip(index_tuples(r, rest + 2)) {
        let ia = std::iter::once(digits[0]).chain(left.iter().map(|p| digits[p + 2]));
        let ib = std::iter::once(digits[1]).chain(right.iter().map(|p| digits[p + 2]));
        let x = &ta[ia.fold(0, |acc, s| acc * r + s)];
        if x.is_zero() {
            continue;
        }
        let y = &tb[ib.fold(0, |acc, s| acc * r + s)];
        if !y.is_zero() {
            *slot = x * y;
        }
    }
    out
}
