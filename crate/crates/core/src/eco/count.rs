use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Memoised `C_{g,n}(mu)`, the number of arrowed cell graphs of genus `g` with
/// labelled vertices of degrees `mu`.
///
/// Keys keep `mu[0]` (the vertex the recursion contracts at) and sort the rest.
#[derive(Debug, Default, Clone)]
pub struct CountTable {
    memo: HashMap<(usize, Vec<usize>), BigUint>,
}

impl CountTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    pub fn get(&mut self, g: usize, mu: &[usize]) -> BigUint {
        if mu.is_empty() {
            return BigUint::zero();
        }
        if mu == [0] {
            return if g == 0 { BigUint::one() } else { BigUint::zero() };
        }
        if mu.contains(&0) || mu.iter().sum::<usize>() % 2 != 0 {
            return BigUint::zero();
        }
        let mut key = mu.to_vec();
        key[1..].sort_unstable();
        if let Some(v) = self.memo.get(&(g, key.clone())) {
            return v.clone();
        }
        let v = self.recurse(g, &key);
        self.memo.insert((g, key), v.clone());
        v
    }

    fn recurse(&mut self, g: usize, mu: &[usize]) -> BigUint {
        let (m1, rest) = (mu[0], &mu[1..]);
        let mut total = BigUint::zero();

        // contract the arrowed edge to another vertex j
        for (j, &mj) in rest.iter().enumerate() {
            let mut sub = vec![m1 + mj - 2];
            sub.extend(rest.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x));
            total += self.get(g, &sub) * BigUint::from(mj);
        }

        // the arrowed edge is a loop
        if m1 >= 2 {
            for alpha in 0..=m1 - 2 {
                let beta = m1 - 2 - alpha;
                if g >= 1 {
                    let mut sub = vec![alpha, beta];
                    sub.extend_from_slice(rest);
                    total += self.get(g - 1, &sub);
                }
                for mask in 0u64..(1 << rest.len()) {
                    let (i, j): (Vec<usize>, Vec<usize>) = {
                        let mut i = vec![alpha];
                        let mut j = vec![beta];
                        for (k, &x) in rest.iter().enumerate() {
                            if mask & (1 << k) != 0 {
                                i.push(x)
                            } else {
                                j.push(x)
                            }
                        }
                        (i, j)
                    };
                    for g1 in 0..=g {
                        let left = self.get(g1, &i);
                        if left.is_zero() {
                            continue;
                        }
                        total += left * self.get(g - g1, &j);
                    }
                }
            }
        }
        total
    }
}

/// `C_{g,n}(mu)` with a fresh table.
pub fn count(g: usize, mu: &[usize]) -> BigUint {
    CountTable::new().get(g, mu)
}
