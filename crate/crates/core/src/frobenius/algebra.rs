use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::tensor::Tensor;
use super::validate::{validate, ValidationReport};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{self, Scalar};

/// Element of `A` in coordinates of the chosen basis.
pub type Vector = Vec<Scalar>;

/// The on-disk form of an algebra: `{"dim", "basis", "mult", "counit", "commutative"}`
/// with every scalar written as a fraction string.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AlgebraSpec {
    pub dim: usize,
    pub basis: Vec<String>,
    pub mult: Vec<Vec<Vec<String>>>,
    pub counit: Vec<String>,
    pub commutative: bool,
}

/// A validated Frobenius algebra: associative, unital, with non-degenerate
/// pairing `eta(u, v) = eps(uv)`. Unit, `eta` and `eta^{-1}` are cached.
#[derive(Clone, Debug)]
pub struct FrobeniusAlgebra {
    basis: Vec<String>,
    mult: Vec<Vec<Vec<Scalar>>>,
    counit: Vec<Scalar>,
    commutative: bool,
    unit: Vector,
    eta: Matrix,
    eta_inv: Matrix,
}

impl AlgebraSpec {
    /// Structural parse; shape errors are input errors.
    pub fn parse(&self) -> Result<(Vec<Vec<Vec<Scalar>>>, Vec<Scalar>)> {
        let r = self.dim;
        if r == 0 {
            return Err(Error::Input("algebra dimension must be positive".into()));
        }
        if self.basis.len() != r {
            return Err(Error::Dimension { expected: r, got: self.basis.len() });
        }
        if self.counit.len() != r {
            return Err(Error::Dimension { expected: r, got: self.counit.len() });
        }
        if self.mult.len() != r || self.mult.iter().any(|m| m.len() != r || m.iter().any(|v| v.len() != r)) {
            return Err(Error::Input(format!("\"mult\" must be a {r}x{r}x{r} array")));
        }
        let mult = self
            .mult
            .iter()
            .map(|m| m.iter().map(|v| v.iter().map(|s| scalar::parse(s)).collect()).collect())
            .collect::<Result<Vec<Vec<Vec<Scalar>>>>>()?;
        let counit = self.counit.iter().map(|s| scalar::parse(s)).collect::<Result<Vec<_>>>()?;
        Ok((mult, counit))
    }
}

impl FrobeniusAlgebra {
    /// Builds and validates an algebra. Fails with the first failed check; use
    /// [`validate`] directly for a full report.
    pub fn new(
        basis: Vec<String>,
        mult: Vec<Vec<Vec<Scalar>>>,
        counit: Vec<Scalar>,
        commutative: bool,
    ) -> Result<Self> {
        let report = validate(&mult, &counit, commutative)?;
        Self::from_report(basis, mult, counit, commutative, report)
    }

    pub fn validate_spec(spec: &AlgebraSpec) -> Result<ValidationReport> {
        let (mult, counit) = spec.parse()?;
        validate(&mult, &counit, spec.commutative)
    }

    pub fn from_spec(spec: &AlgebraSpec) -> Result<Self> {
        let (mult, counit) = spec.parse()?;
        Self::new(spec.basis.clone(), mult, counit, spec.commutative)
    }

    fn from_report(
        basis: Vec<String>,
        mult: Vec<Vec<Vec<Scalar>>>,
        counit: Vec<Scalar>,
        commutative: bool,
        report: ValidationReport,
    ) -> Result<Self> {
        if !report.associative {
            return Err(Error::Input("multiplication is not associative".into()));
        }
        if report.commutative == Some(false) {
            return Err(Error::Input("algebra is flagged commutative but is not".into()));
        }
        let unit = report.unit.ok_or(Error::NoUnit)?;
        let (eta, eta_inv) = match (report.eta, report.eta_inverse) {
            (eta, Some(inv)) => (eta, inv),
            _ => return Err(Error::Degenerate),
        };
        Ok(FrobeniusAlgebra { basis, mult, counit, commutative, unit, eta, eta_inv })
    }

    pub fn to_spec(&self) -> AlgebraSpec {
        AlgebraSpec {
            dim: self.dim(),
            basis: self.basis.clone(),
            mult: self
                .mult
                .iter()
                .map(|m| m.iter().map(|v| v.iter().map(scalar::format).collect()).collect())
                .collect(),
            counit: self.counit.iter().map(scalar::format).collect(),
            commutative: self.commutative,
        }
    }

    pub fn dim(&self) -> usize {
        self.counit.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<Scalar>>] {
        &self.mult
    }

    pub fn counit_vector(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[i] = Scalar::one();
        v
    }

    fn check_dim(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::Dimension { expected: self.dim(), got: v.len() });
        }
        Ok(())
    }

    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        Ok(self.mul(u, v))
    }

    pub(crate) fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let r = self.dim();
        let mut out = vec![Scalar::zero(); r];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let w = ui * vj;
                for (k, c) in self.mult[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &w * c;
                    }
                }
            }
        }
        out
    }

    pub fn counit(&self, u: &[Scalar]) -> Scalar {
        u.iter().zip(&self.counit).map(|(a, b)| a * b).sum()
    }

    /// `eta(u, v) = eps(uv)`.
    pub fn pairing_eta(&self, u: &[Scalar], v: &[Scalar]) -> Result<Scalar> {
        Ok(self.counit(&self.multiply(u, v)?))
    }

    /// `(eta, eta^{-1})` as matrices indexed by basis.
    pub fn eta_matrices(&self) -> (&Matrix, &Matrix) {
        (&self.eta, &self.eta_inv)
    }

    /// The covector `lambda(u) = eta(u, -)`.
    pub fn lambda(&self, u: &[Scalar]) -> Vector {
        (0..self.dim()).map(|j| u.iter().enumerate().map(|(i, ui)| ui * &self.eta[i][j]).sum()).collect()
    }

    /// `lambda^{-1}`: the vector `u` with `eta(u, e_j) = f_j`.
    pub fn lambda_inverse(&self, f: &[Scalar]) -> Vector {
        (0..self.dim()).map(|a| f.iter().enumerate().map(|(j, fj)| fj * &self.eta_inv[j][a]).sum()).collect()
    }

    /// `delta(1) = sum_{a,b} eta^{ab} e_a ⊗ e_b`.
    pub fn copairing(&self) -> Tensor {
        let r = self.dim();
        Tensor::from_data(r, 2, self.eta_inv.iter().flatten().cloned().collect())
    }

    /// `delta(v) = (m ⊗ 1)(v ⊗ delta(1))`.
    pub fn comultiply(&self, v: &[Scalar]) -> Result<Tensor> {
        self.check_dim(v)?;
        let r = self.dim();
        let mut out = Tensor::zeros(r, 2);
        for a in 0..r {
            let va = self.mul(v, &self.basis_vector(a));
            for b in 0..r {
                let w = &self.eta_inv[a][b];
                if w.is_zero() {
                    continue;
                }
                for (k, c) in va.iter().enumerate() {
                    if !c.is_zero() {
                        *out.get_mut(&[k, b]) += w * c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// The Euler element `m(delta(1)) = sum eta^{ab} e_a e_b`.
    pub fn euler_element(&self) -> Vector {
        let r = self.dim();
        let mut e = vec![Scalar::zero(); r];
        for a in 0..r {
            for b in 0..r {
                let w = &self.eta_inv[a][b];
                if w.is_zero() {
                    continue;
                }
                for (k, c) in self.mult[a][b].iter().enumerate() {
                    e[k] += w * c;
                }
            }
        }
        e
    }

    pub fn power(&self, v: &[Scalar], k: usize) -> Vector {
        let mut acc = self.unit.clone();
        for _ in 0..k {
            acc = self.mul(&acc, v);
        }
        acc
    }

    pub fn require_commutative(&self) -> Result<()> {
        if self.commutative {
            Ok(())
        } else {
            Err(Error::NonCommutative)
        }
    }

    /// The TQFT correlator `omega_{g,n}(v_1, ..., v_n) = eps(v_1 ... v_n e^g)`.
    pub fn omega(&self, genus: usize, vs: &[Vector]) -> Result<Scalar> {
        self.require_commutative()?;
        for v in vs {
            self.check_dim(v)?;
        }
        let mut acc = self.power(&self.euler_element(), genus);
        for v in vs {
            acc = self.mul(&acc, v);
        }
        Ok(self.counit(&acc))
    }

    /// `Z(Sigma_g) = eps(e^g)`.
    pub fn surface_invariant(&self, genus: usize) -> Result<Scalar> {
        self.omega(genus, &[])
    }

    /// `A ⊕ B` with counit `eps_A + eps_B`.
    pub fn direct_sum(&self, other: &FrobeniusAlgebra) -> Result<FrobeniusAlgebra> {
        let (r1, r2) = (self.dim(), other.dim());
        let r = r1 + r2;
        let mut mult = vec![vec![vec![Scalar::zero(); r]; r]; r];
        for i in 0..r1 {
            for j in 0..r1 {
                mult[i][j][..r1].clone_from_slice(&self.mult[i][j]);
            }
        }
        for i in 0..r2 {
            for j in 0..r2 {
                mult[r1 + i][r1 + j][r1..].clone_from_slice(&other.mult[i][j]);
            }
        }
        let basis =
            self.basis.iter().map(|b| format!("{b}⊕0")).chain(other.basis.iter().map(|b| format!("0⊕{b}"))).collect();
        let counit = self.counit.iter().chain(&other.counit).cloned().collect();
        FrobeniusAlgebra::new(basis, mult, counit, self.commutative && other.commutative)
    }

    /// `A ⊗ B` with counit `eps_A ⊗ eps_B`; basis `e_i ⊗ f_k` at index `i * dim(B) + k`.
    pub fn tensor_product(&self, other: &FrobeniusAlgebra) -> Result<FrobeniusAlgebra> {
        let (r1, r2) = (self.dim(), other.dim());
        let r = r1 * r2;
        let mut mult = vec![vec![vec![Scalar::zero(); r]; r]; r];
        for i in 0..r1 {
            for k in 0..r2 {
                for j in 0..r1 {
                    for l in 0..r2 {
                        for p in 0..r1 {
                            let c1 = &self.mult[i][j][p];
                            if c1.is_zero() {
                                continue;
                            }
                            for q in 0..r2 {
                                mult[i * r2 + k][j * r2 + l][p * r2 + q] = c1 * &other.mult[k][l][q];
                            }
                        }
                    }
                }
            }
        }
        let mut basis = Vec::with_capacity(r);
        let mut counit = Vec::with_capacity(r);
        for i in 0..r1 {
            for k in 0..r2 {
                basis.push(format!("{}⊗{}", self.basis[i], other.basis[k]));
                counit.push(&self.counit[i] * &other.counit[k]);
            }
        }
        FrobeniusAlgebra::new(basis, mult, counit, self.commutative && other.commutative)
    }

    /// Returns the identity `(1 ⊗ m)(delta ⊗ 1) = delta ∘ m = (m ⊗ 1)(1 ⊗ delta)` as three
    /// order-4 tensors `T[i][j][k][l]` (inputs `e_i ⊗ e_j`, output coefficient of `e_k ⊗ e_l`).
    pub fn compatibility_maps(&self) -> [Tensor; 3] {
        let r = self.dim();
        let mut left = Tensor::zeros(r, 4);
        let mut middle = Tensor::zeros(r, 4);
        let mut right = Tensor::zeros(r, 4);
        for i in 0..r {
            let ei = self.basis_vector(i);
            let di = self.comultiply(&ei).expect("dimension checked");
            for j in 0..r {
                let ej = self.basis_vector(j);
                let dj = self.comultiply(&ej).expect("dimension checked");
                let dm = self.comultiply(&self.mul(&ei, &ej)).expect("dimension checked");
                for k in 0..r {
                    for l in 0..r {
                        *middle.get_mut(&[i, j, k, l]) = dm.get(&[k, l]).clone();
                    }
                }
                // (1 ⊗ m)(delta(e_i) ⊗ e_j)
                for a in 0..r {
                    for b in 0..r {
                        let w = di.get(&[a, b]);
                        if w.is_zero() {
                            continue;
                        }
                        for (l, c) in self.mult[b][j].iter().enumerate() {
                            *left.get_mut(&[i, j, a, l]) += w * c;
                        }
                    }
                }
                // (m ⊗ 1)(e_i ⊗ delta(e_j))
                for a in 0..r {
                    for b in 0..r {
                        let w = dj.get(&[a, b]);
                        if w.is_zero() {
                            continue;
                        }
                        for (k, c) in self.mult[i][a].iter().enumerate() {
                            *right.get_mut(&[i, j, k, b]) += w * c;
                        }
                    }
                }
            }
        }
        [left, middle, right]
    }

    /// `eta(e_i e_j, e_k) == eta(e_i, e_j e_k)` for all basis triples.
    pub fn frobenius_associativity_holds(&self) -> bool {
        let r = self.dim();
        (0..r).all(|i| {
            (0..r).all(|j| {
                (0..r).all(|k| {
                    let (ei, ej, ek) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
                    self.counit(&self.mul(&self.mul(&ei, &ej), &ek)) == self.counit(&self.mul(&ei, &self.mul(&ej, &ek)))
                })
            })
        })
    }

    /// `(delta ⊗ 1) delta = (1 ⊗ delta) delta` on every basis vector.
    pub fn coassociativity_holds(&self) -> bool {
        let r = self.dim();
        (0..r).all(|i| {
            let d = self.comultiply(&self.basis_vector(i)).expect("dimension checked");
            let mut lhs = Tensor::zeros(r, 3);
            let mut rhs = Tensor::zeros(r, 3);
            for a in 0..r {
                for b in 0..r {
                    let w = d.get(&[a, b]);
                    if w.is_zero() {
                        continue;
                    }
                    let da = self.comultiply(&self.basis_vector(a)).expect("dimension checked");
                    let db = self.comultiply(&self.basis_vector(b)).expect("dimension checked");
                    for p in 0..r {
                        for q in 0..r {
                            *lhs.get_mut(&[p, q, b]) += w * da.get(&[p, q]);
                            *rhs.get_mut(&[a, p, q]) += w * db.get(&[p, q]);
                        }
                    }
                }
            }
            lhs == rhs
        })
    }

    /// The product `v_1 v_2 ... v_n` in `A` (unit for the empty product).
    pub fn product(&self, vs: &[Vector]) -> Vector {
        vs.iter().fold(self.unit.clone(), |acc, v| self.mul(&acc, v))
    }

    pub(crate) fn eta_inv_entry(&self, a: usize, b: usize) -> &Scalar {
        &self.eta_inv[a][b]
    }

    /// `K[i][a][b] = sum_{k,l} eta(e_k e_l, e_i) eta^{ka} eta^{lb}`, the algebra
    /// factor of the twisted recursion kernel. For a commutative algebra this is
    /// the coefficient of `e_a ⊗ e_b` in `delta(e_i)`.
    pub fn twisted_kernel(&self) -> Vec<Tensor> {
        let r = self.dim();
        (0..r)
            .map(|i| {
                let ei = self.basis_vector(i);
                let mut t = Tensor::zeros(r, 2);
                for k in 0..r {
                    for l in 0..r {
                        let p = self.counit(&self.mul(&self.mul(&self.basis_vector(k), &self.basis_vector(l)), &ei));
                        if p.is_zero() {
                            continue;
                        }
                        for a in 0..r {
                            let ka = &self.eta_inv[k][a];
                            if ka.is_zero() {
                                continue;
                            }
                            for b in 0..r {
                                let lb = &self.eta_inv[l][b];
                                if !lb.is_zero() {
                                    *t.get_mut(&[a, b]) += &p * ka * lb;
                                }
                            }
                        }
                    }
                }
                t
            })
            .collect()
    }
}
