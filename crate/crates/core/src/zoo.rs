//! The standard example algebras and the finite-group machinery behind the
//! group-algebra examples.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frobenius::FrobeniusAlgebra;
use crate::scalar::Scalar;

/// `K^{⊕n}` with idempotent basis and `eps(e_i) = 1`.
pub fn semisimple(n: usize) -> Result<FrobeniusAlgebra> {
    if n == 0 {
        return Err(Error::Input("semisimple(n) needs n >= 1".into()));
    }
    let mut mult = vec![vec![vec![Scalar::zero(); n]; n]; n];
    for (i, m) in mult.iter_mut().enumerate() {
        m[i][i] = Scalar::one();
    }
    FrobeniusAlgebra::new((1..=n).map(|i| format!("e{i}")).collect(), mult, vec![Scalar::one(); n], true)
}

/// `Mat_n(K)` with matrix units `E_ij` at index `i*n + j` and the trace as counit.
pub fn matrix_algebra(n: usize) -> Result<FrobeniusAlgebra> {
    if n == 0 {
        return Err(Error::Input("matrix_algebra(n) needs n >= 1".into()));
    }
    let r = n * n;
    let mut mult = vec![vec![vec![Scalar::zero(); r]; r]; r];
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                mult[i * n + j][j * n + l][i * n + l] = Scalar::one();
            }
        }
    }
    let counit = (0..r).map(|k| if k / n == k % n { Scalar::one() } else { Scalar::zero() }).collect();
    let basis = (0..r).map(|k| format!("E{}{}", k / n + 1, k % n + 1)).collect();
    FrobeniusAlgebra::new(basis, mult, counit, n == 1)
}

/// A finite group as an explicit multiplication table of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTable {
    pub order: usize,
    pub identity: usize,
    pub table: Vec<Vec<usize>>,
}

/// Conjugacy classes; the class of the identity is always class 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClasses {
    pub class_of: Vec<usize>,
    pub sizes: Vec<usize>,
    pub representatives: Vec<usize>,
}

impl GroupTable {
    /// Checks shape, closure, identity, that rows and columns are permutations,
    /// and associativity.
    pub fn new(order: usize, identity: usize, table: Vec<Vec<usize>>) -> Result<Self> {
        let g = GroupTable { order, identity, table };
        g.check()?;
        Ok(g)
    }

    pub fn check(&self) -> Result<()> {
        let n = self.order;
        let bad = |msg: String| Err(Error::Input(format!("invalid group table: {msg}")));
        if n == 0 || self.table.len() != n || self.table.iter().any(|row| row.len() != n) {
            return bad(format!("table must be {n}x{n}"));
        }
        if self.identity >= n {
            return bad("identity index out of range".into());
        }
        if self.table.iter().flatten().any(|&x| x >= n) {
            return bad("entry out of range".into());
        }
        for a in 0..n {
            if self.table[self.identity][a] != a || self.table[a][self.identity] != a {
                return bad(format!("element {a} is not fixed by the identity"));
            }
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for b in 0..n {
                row[self.table[a][b]] = true;
                col[self.table[b][a]] = true;
            }
            if row.contains(&false) || col.contains(&false) {
                return bad(format!("row or column {a} is not a permutation"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return bad(format!("({a}{b}){c} != {a}({b}{c})"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order).find(|&b| self.mul(a, b) == self.identity).expect("valid table")
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        self.mul(self.mul(ab, self.inverse(a)), self.inverse(b))
    }

    pub fn conjugacy_classes(&self) -> ConjugacyClasses {
        let n = self.order;
        let mut class_of = vec![usize::MAX; n];
        let mut sizes = Vec::new();
        let mut representatives = Vec::new();
        let order = std::iter::once(self.identity).chain((0..n).filter(|&a| a != self.identity));
        for a in order {
            if class_of[a] != usize::MAX {
                continue;
            }
            let c = sizes.len();
            let mut size = 0;
            for x in 0..n {
                let conj = self.mul(self.mul(x, a), self.inverse(x));
                if class_of[conj] == usize::MAX {
                    class_of[conj] = c;
                    size += 1;
                }
            }
            sizes.push(size);
            representatives.push(a);
        }
        ConjugacyClasses { class_of, sizes, representatives }
    }
}

pub fn cyclic(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::Input("cyclic(n) needs n >= 1".into()));
    }
    GroupTable::new(n, 0, (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect())
}

/// `D_n` of order `2n`; element `r^i s^e` has index `i + n e`.
pub fn dihedral(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::Input("dihedral(n) needs n >= 1".into()));
    }
    let mul = |x: usize, y: usize| {
        let (i, a) = (x % n, x / n);
        let (j, b) = (y % n, y / n);
        let k = if a == 0 { i + j } else { i + n - j } % n;
        k + n * ((a + b) % 2)
    };
    GroupTable::new(2 * n, 0, (0..2 * n).map(|x| (0..2 * n).map(|y| mul(x, y)).collect()).collect())
}

/// The symmetric group on `n` letters, permutations in lexicographic order.
pub fn symmetric(n: usize) -> Result<GroupTable> {
    if n == 0 || n > 5 {
        return Err(Error::Input("symmetric(n) is available for 1 <= n <= 5".into()));
    }
    let mut perms: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &perms {
            for x in (0..n).filter(|x| !p.contains(x)) {
                let mut q = p.clone();
                q.push(x);
                next.push(q);
            }
        }
        perms = next;
    }
    let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed under composition");
    // (p q)(x) = p(q(x))
    let table =
        perms.iter().map(|p| perms.iter().map(|q| index(&q.iter().map(|&x| p[x]).collect())).collect()).collect();
    GroupTable::new(perms.len(), 0, table)
}

/// `cyclic(n)` (also `Z/n`), `S3` (any `Sn`, n <= 5) or `dihedral(n)` (also `Dn`).
pub fn preset_group(name: &str) -> Result<GroupTable> {
    let name = name.trim();
    let arg = |prefix: &str| -> Option<usize> {
        let rest = name.strip_prefix(prefix)?;
        let rest = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
        rest.parse().ok()
    };
    if let Some(n) = arg("cyclic").or_else(|| arg("Z/")) {
        cyclic(n)
    } else if let Some(n) = arg("dihedral").or_else(|| arg("D")) {
        dihedral(n)
    } else if let Some(n) = arg("S") {
        symmetric(n)
    } else {
        Err(Error::Input(format!("unknown group {name:?}; expected cyclic(n), Z/n, S3, or dihedral(n)")))
    }
}

/// `K[G]` with `eps(g) = [g = 1]`.
pub fn group_algebra(g: &GroupTable) -> Result<FrobeniusAlgebra> {
    g.check()?;
    let n = g.order;
    let mut mult = vec![vec![vec![Scalar::zero(); n]; n]; n];
    for a in 0..n {
        for b in 0..n {
            mult[a][b][g.mul(a, b)] = Scalar::one();
        }
    }
    let counit = (0..n).map(|a| if a == g.identity { Scalar::one() } else { Scalar::zero() }).collect();
    FrobeniusAlgebra::new((0..n).map(|a| format!("g{a}")).collect(), mult, counit, g.is_abelian())
}

/// The center of `K[G]`, spanned by class sums, with the counit restricted
/// from `K[G]`.
pub fn center_of_group_algebra(g: &GroupTable) -> Result<FrobeniusAlgebra> {
    g.check()?;
    let classes = g.conjugacy_classes();
    let k = classes.sizes.len();
    let mut mult = vec![vec![vec![Scalar::zero(); k]; k]; k];
    // z_a z_b = sum_c N_ab^c z_c, where N_ab^c counts (x, y) in C_a x C_b with xy = rep_c.
    for x in 0..g.order {
        for y in 0..g.order {
            let xy = g.mul(x, y);
            let c = classes.class_of[xy];
            if classes.representatives[c] == xy {
                mult[classes.class_of[x]][classes.class_of[y]][c] += Scalar::one();
            }
        }
    }
    let mut counit = vec![Scalar::zero(); k];
    counit[0] = Scalar::one();
    let basis = (0..k).map(|c| format!("C{c}")).collect();
    FrobeniusAlgebra::new(basis, mult, counit, true)
}

/// The center of `K[G]` with counit `eps(g) = [g = 1] / |G|`.
///
/// Rescaling the counit by `c` multiplies `Z(Sigma_g)` by `c^{1-g}`; this choice
/// is the one for which `Z(Sigma_g)` counts homomorphisms `pi_1(Sigma_g) -> G`
/// divided by `|G|`. With the unscaled counit the two agree only at `g = 1`.
pub fn dijkgraaf_witten(g: &GroupTable) -> Result<FrobeniusAlgebra> {
    let z = center_of_group_algebra(g)?;
    let scale = Scalar::new(BigInt::one(), BigInt::from(g.order));
    let counit = z.counit_vector().iter().map(|c| c * &scale).collect();
    FrobeniusAlgebra::new(z.basis_labels().to_vec(), z.structure_constants().to_vec(), counit, true)
}

/// Upper bound on `|G|^3 * g` work for [`hom_count_oracle`].
pub const HOM_COUNT_GUARD: u64 = 50_000_000;

/// `#{(a_1, b_1, .., a_g, b_g) : prod [a_i, b_i] = 1} / |G|`, counted directly.
///
/// The count of commutator values is tallied over all pairs once, then
/// convolved `g` times over the group.
pub fn hom_count_oracle(g: &GroupTable, genus: usize) -> Result<Scalar> {
    g.check()?;
    let n = g.order;
    let work = (n as u64).saturating_pow(3).saturating_mul(genus.max(1) as u64);
    if work > HOM_COUNT_GUARD {
        return Err(Error::Guard(format!("hom count for |G| = {n}, g = {genus} exceeds the size guard")));
    }
    let mut pairs = vec![BigInt::zero(); n];
    for a in 0..n {
        for b in 0..n {
            pairs[g.commutator(a, b)] += 1;
        }
    }
    // ways[x] = number of tuples whose product of commutators is x
    let mut ways = vec![BigInt::zero(); n];
    ways[g.identity] = BigInt::one();
    for _ in 0..genus {
        let mut next = vec![BigInt::zero(); n];
        for x in 0..n {
            if ways[x].is_zero() {
                continue;
            }
            for c in 0..n {
                if !pairs[c].is_zero() {
                    next[g.mul(x, c)] += &ways[x] * &pairs[c];
                }
            }
        }
        ways = next;
    }
    Ok(Scalar::new(ways[g.identity].clone(), BigInt::from(n)))
}

/// Algebra presets: `K^n`, `Matn`, `C[G]`, `ZC[G]` and `DW[G]` for any [`preset_group`]
/// name `G`. A leading `zoo:` is accepted and ignored.
pub fn preset_algebra(name: &str) -> Result<FrobeniusAlgebra> {
    let name = name.trim();
    let name = name.strip_prefix("zoo:").unwrap_or(name);
    let bracket = |prefix: &str| name.strip_prefix(prefix).and_then(|r| r.strip_suffix(']'));
    if let Some(n) = name.strip_prefix("K^") {
        semisimple(parse_size(n)?)
    } else if let Some(n) = name.strip_prefix("Mat") {
        matrix_algebra(parse_size(n)?)
    } else if let Some(g) = bracket("DW[") {
        dijkgraaf_witten(&preset_group(g)?)
    } else if let Some(g) = bracket("ZC[") {
        center_of_group_algebra(&preset_group(g)?)
    } else if let Some(g) = bracket("C[").or_else(|| bracket("K[")) {
        group_algebra(&preset_group(g)?)
    } else {
        Err(Error::Input(format!("unknown algebra preset {name:?}; expected K^n, Matn, C[G], ZC[G] or DW[G]")))
    }
}

fn parse_size(s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Input(format!("expected a positive integer, got {s:?}")))
}
