use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use super::graph::CellGraph;
use crate::error::{Error, Result};

/// Largest edge count accepted by [`hom_set`].
pub const HOM_GUARD: usize = 6;

// Vertex positions ordered by label; vertices are matched rank by rank.
fn ranks(g: &CellGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.num_vertices()).collect();
    order.sort_by_key(|&v| (g.labels[v], v));
    let mut rank = vec![0; order.len()];
    for (r, v) in order.into_iter().enumerate() {
        rank[v] = r;
    }
    rank
}

/// The number of label-preserving isomorphisms `a -> b` of the underlying
/// maps (arrows ignored).
pub fn isomorphism_count(a: &CellGraph, b: &CellGraph) -> u64 {
    if a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() {
        return 0;
    }
    let (ra, rb) = (ranks(a), ranks(b));
    let mut by_rank_b = vec![0; rb.len()];
    for (v, &r) in rb.iter().enumerate() {
        by_rank_b[r] = v;
    }
    let partner: Vec<usize> = ra.iter().map(|&r| by_rank_b[r]).collect();
    if (0..a.num_vertices()).any(|v| a.vertices[v].len() != b.vertices[partner[v]].len()) {
        return 0;
    }
    let (rho_a, rho_b) = (a.rho(), b.rho());
    let (va, vb) = (a.vertex_of(), b.vertex_of());
    let comp_a = a.component_of();
    let comp_b = b.component_of();

    let mut total = 1u64;
    let mut images = HashSet::new();
    let mut seen_comp = HashSet::new();
    for root in 0..a.num_vertices() {
        if !seen_comp.insert(comp_a[root]) {
            continue;
        }
        if !images.insert(comp_b[partner[root]]) {
            return 0;
        }
        let Some(&start) = a.vertices[root].first() else {
            continue;
        };
        let mut ways = 0;
        for &target in &b.vertices[partner[root]] {
            if extends(start, target, &rho_a, &rho_b, &va, &vb, &partner) {
                ways += 1;
            }
        }
        total *= ways;
        if total == 0 {
            return 0;
        }
    }
    total
}

// Propagates start -> target along rho and the involution; succeeds if the
// resulting dart map is a well-defined injection respecting vertex ranks.
fn extends(
    start: usize,
    target: usize,
    rho_a: &[usize],
    rho_b: &[usize],
    va: &[usize],
    vb: &[usize],
    partner: &[usize],
) -> bool {
    let mut map = vec![usize::MAX; rho_a.len()];
    let mut used = vec![false; rho_b.len()];
    let mut stack = vec![(start, target)];
    while let Some((x, y)) = stack.pop() {
        if map[x] != usize::MAX {
            if map[x] != y {
                return false;
            }
            continue;
        }
        if used[y] || partner[va[x]] != vb[y] {
            return false;
        }
        map[x] = y;
        used[y] = true;
        stack.push((rho_a[x], rho_b[y]));
        stack.push((x ^ 1, y ^ 1));
    }
    true
}

pub fn is_isomorphic(a: &CellGraph, b: &CellGraph) -> bool {
    isomorphism_count(a, b) > 0
}

/// Order of the label-preserving automorphism group.
pub fn automorphism_order(g: &CellGraph) -> u64 {
    isomorphism_count(g, g)
}

/// A morphism in the cell-graph category, recorded by the set of original edges
/// it contracts. The identity-type morphisms (no contraction) are the
/// automorphisms, numbered `0..|Aut|`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Morphism {
    pub contracted: Vec<usize>,
    pub automorphism: usize,
}

/// Morphisms `source -> target`: sequences of edge contractions ending in a
/// graph isomorphic to `target`, identified when they contract the same set of
/// edges. Orders of contraction that agree as sets give the same morphism.
pub fn hom_set(source: &CellGraph, target: &CellGraph) -> Result<Vec<Morphism>> {
    if source.num_edges() > HOM_GUARD || target.num_edges() > HOM_GUARD {
        return Err(Error::Guard(format!("hom-set search is limited to {HOM_GUARD} edges")));
    }
    let mut out = Vec::new();
    if is_isomorphic(source, target) {
        out.extend((0..automorphism_order(source) as usize).map(|k| Morphism { contracted: vec![], automorphism: k }));
        return Ok(out);
    }
    let steps = source.complexity() - target.complexity();
    if steps <= 0 || source.num_edges() < target.num_edges() {
        return Ok(out);
    }
    let mut found = BTreeSet::new();
    let mut frontier = vec![(source.clone(), BTreeSet::new())];
    for _ in 0..steps {
        let mut next = Vec::new();
        for (g, done) in frontier {
            for e in 0..g.num_edges() {
                let mut set = done.clone();
                set.insert(g.tags[e]);
                next.push((g.contract(2 * e)?, set));
            }
        }
        frontier = next;
    }
    for (g, set) in frontier {
        if is_isomorphic(&g, target) {
            found.insert(set.into_iter().collect::<Vec<_>>());
        }
    }
    out.extend(found.into_iter().map(|contracted| Morphism { contracted, automorphism: 0 }));
    Ok(out)
}
