use num_traits::Zero;

use crate::scalar::Scalar;

/// Element of `A^{⊗n}` stored densely, row-major over basis index tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    dim: usize,
    order: usize,
    data: Vec<Scalar>,
}

impl Tensor {
    pub fn zeros(dim: usize, order: usize) -> Self {
        Tensor { dim, order, data: vec![Scalar::zero(); dim.pow(order as u32)] }
    }

    pub fn from_data(dim: usize, order: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), dim.pow(order as u32), "tensor data has wrong length");
        Tensor { dim, order, data }
    }

    pub fn from_vector(v: Vec<Scalar>) -> Self {
        Tensor { dim: v.len(), order: 1, data: v }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Scalar> {
        self.data
    }

    pub fn offset(&self, index: &[usize]) -> usize {
        debug_assert_eq!(index.len(), self.order);
        index.iter().fold(0, |acc, &i| acc * self.dim + i)
    }

    pub fn get(&self, index: &[usize]) -> &Scalar {
        &self.data[self.offset(index)]
    }

    pub fn get_mut(&mut self, index: &[usize]) -> &mut Scalar {
        let o = self.offset(index);
        &mut self.data[o]
    }

    /// Iterates over all index tuples in row-major order.
    pub fn indices(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        index_tuples(self.dim, self.order)
    }
}

/// All tuples in `[0, dim)^order`, row-major.
pub fn index_tuples(dim: usize, order: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = dim.pow(order as u32);
    (0..total).map(move |mut flat| {
        let mut idx = vec![0; order];
        for slot in (0..order).rev() {
            idx[slot] = flat % dim;
            flat /= dim;
        }
        idx
    })
}
