use num_traits::Zero;

use super::algebra::{FrobeniusAlgebra, Vector};
use super::tensor::{index_tuples, Tensor};
use crate::error::{Error, Result};

/// The linear map `A^{⊗m} -> A^{⊗n}` attached to a genus-`g` cobordism with `m`
/// incoming and `n` outgoing circles.
///
/// Slots are ordered inputs first, then outputs. Entry `(i_1..i_m, o_1..o_n)` is
/// the coefficient of `e_{o_1} ⊗ .. ⊗ e_{o_n}` in the image of
/// `e_{i_1} ⊗ .. ⊗ e_{i_m}`; equivalently `omega_{g,m+n}` with its last `n`
/// slots raised by `eta^{-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct CobordismTensor {
    pub genus: usize,
    pub inputs: usize,
    pub outputs: usize,
    pub tensor: Tensor,
}

impl FrobeniusAlgebra {
    pub fn cobordism_tensor(&self, genus: usize, inputs: usize, outputs: usize) -> Result<CobordismTensor> {
        self.require_commutative()?;
        if inputs + outputs == 0 {
            return Err(Error::Shape("a closed surface has no slots; use surface_invariant".into()));
        }
        let r = self.dim();
        let order = inputs + outputs;
        let start = self.power(&self.euler_element(), genus);
        let mut lowered = Tensor::zeros(r, order);
        fill_products(self, &start, order, &mut Vec::new(), &mut lowered);
        let mut tensor = lowered;
        for slot in inputs..order {
            tensor = raise_slot(self, &tensor, slot);
        }
        Ok(CobordismTensor { genus, inputs, outputs, tensor })
    }
}

// Depth-first over index tuples, carrying the running product.
fn fill_products(alg: &FrobeniusAlgebra, acc: &Vector, remaining: usize, idx: &mut Vec<usize>, out: &mut Tensor) {
    if remaining == 0 {
        *out.get_mut(idx) = alg.counit(acc);
        return;
    }
    for a in 0..alg.dim() {
        let next = alg.mul(acc, &alg.basis_vector(a));
        idx.push(a);
        fill_products(alg, &next, remaining - 1, idx, out);
        idx.pop();
    }
}

fn raise_slot(alg: &FrobeniusAlgebra, t: &Tensor, slot: usize) -> Tensor {
    let r = t.dim();
    let mut out = Tensor::zeros(r, t.order());
    for idx in t.indices() {
        let v = t.get(&idx);
        if v.is_zero() {
            continue;
        }
        let mut target = idx.clone();
        for o in 0..r {
            let w = alg.eta_inv_entry(idx[slot], o);
            if !w.is_zero() {
                target[slot] = o;
                *out.get_mut(&target) += v * w;
            }
        }
    }
    out
}

impl CobordismTensor {
    /// Feeds one vector per input slot; returns the output as an order-`n`
    /// tensor (order 0 is stored as a single-entry tensor).
    pub fn apply(&self, vs: &[Vector]) -> Result<Tensor> {
        if vs.len() != self.inputs {
            return Err(Error::Dimension { expected: self.inputs, got: vs.len() });
        }
        let r = self.tensor.dim();
        if let Some(v) = vs.iter().find(|v| v.len() != r) {
            return Err(Error::Dimension { expected: r, got: v.len() });
        }
        let mut out = Tensor::zeros(r, self.outputs);
        for idx in self.tensor.indices() {
            let c = self.tensor.get(&idx);
            if c.is_zero() {
                continue;
            }
            let w = vs.iter().zip(&idx[..self.inputs]).fold(c.clone(), |acc, (v, &i)| acc * &v[i]);
            if !w.is_zero() {
                *out.get_mut(&idx[self.inputs..]) += w;
            }
        }
        Ok(out)
    }

    /// Symmetric under permutations of input slots and of output slots.
    pub fn is_symmetric(&self) -> bool {
        let total = self.inputs + self.outputs;
        let swaps: Vec<usize> = (0..total.saturating_sub(1)).filter(|&s| s + 1 != self.inputs).collect();
        self.tensor.indices().all(|idx| {
            swaps.iter().all(|&s| {
                let mut p = idx.clone();
                p.swap(s, s + 1);
                self.tensor.get(&idx) == self.tensor.get(&p)
            })
        })
    }
}

/// Sews the last `j` outputs of `second` into the first `j` inputs of `first`.
///
/// With `first = omega_{g, m, n}` and `second = omega_{h, k, l}` the result is
/// `omega_{g+h+j-1, k+m-j, n+l-j}`, slots ordered as
/// `[second's inputs, first's remaining inputs | first's outputs, second's remaining outputs]`.
pub fn sew(first: &CobordismTensor, second: &CobordismTensor, j: usize) -> Result<CobordismTensor> {
    let r = first.tensor.dim();
    if second.tensor.dim() != r {
        return Err(Error::Shape("cobordisms over algebras of different dimension".into()));
    }
    if j == 0 || j > second.outputs || j > first.inputs {
        return Err(Error::Shape(format!(
            "cannot sew {j} circles: {} outputs available, {} inputs available",
            second.outputs, first.inputs
        )));
    }
    let (m, n) = (first.inputs, first.outputs);
    let (k, l) = (second.inputs, second.outputs);
    let inputs = k + m - j;
    let outputs = n + l - j;
    if inputs + outputs == 0 {
        return Err(Error::Shape("sewing closes the surface; use surface_invariant".into()));
    }
    let mut tensor = Tensor::zeros(r, inputs + outputs);
    for a in second.tensor.indices() {
        let ca = second.tensor.get(&a);
        if ca.is_zero() {
            continue;
        }
        // a = [k inputs, l-j kept outputs, j sewn outputs]
        let sewn = &a[k + l - j..];
        for rest in index_tuples(r, m - j + n) {
            let mut bi = sewn.to_vec();
            bi.extend_from_slice(&rest);
            let cb = first.tensor.get(&bi);
            if cb.is_zero() {
                continue;
            }
            let mut target = a[..k].to_vec();
            target.extend_from_slice(&rest);
            target.extend_from_slice(&a[k..k + l - j]);
            *tensor.get_mut(&target) += ca * cb;
        }
    }
    Ok(CobordismTensor { genus: first.genus + second.genus + j - 1, inputs, outputs, tensor })
}
