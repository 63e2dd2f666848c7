use super::graph::CellGraph;
use crate::error::{Error, Result};

/// Largest total degree accepted by the brute-force enumerators.
pub const BRUTE_GUARD: usize = 12;

// Half-edge positions laid out vertex by vertex; rho is "next position at the
// same vertex", cyclically.
struct Layout {
    vertex: Vec<usize>,
    rho: Vec<usize>,
    n: usize,
}

impl Layout {
    fn new(mu: &[usize]) -> Self {
        let mut vertex = Vec::new();
        let mut rho = Vec::new();
        let mut start = 0;
        for (v, &d) in mu.iter().enumerate() {
            for k in 0..d {
                vertex.push(v);
                rho.push(start + (k + 1) % d);
            }
            start += d;
        }
        Layout { vertex, rho, n: mu.len() }
    }

    // (connected, faces) of the map with edge pairing `iota`.
    fn classify(&self, iota: &[usize], mu: &[usize]) -> (bool, usize) {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut comps = self.n;
        for (h, &h2) in iota.iter().enumerate() {
            let (a, b) = (find(&mut parent, self.vertex[h]), find(&mut parent, self.vertex[h2]));
            if a != b {
                parent[a] = b;
                comps -= 1;
            }
        }
        let mut seen = vec![false; iota.len()];
        let mut faces = mu.iter().filter(|&&d| d == 0).count();
        for s in 0..iota.len() {
            if seen[s] {
                continue;
            }
            faces += 1;
            let mut h = s;
            while !seen[h] {
                seen[h] = true;
                h = self.rho[iota[h]];
            }
        }
        (comps == 1, faces)
    }
}

fn guard(mu: &[usize]) -> Result<usize> {
    guard_at(mu, BRUTE_GUARD)
}

fn guard_at(mu: &[usize], limit: usize) -> Result<usize> {
    let total: usize = mu.iter().sum();
    if total > limit {
        return Err(Error::Guard(format!("total degree {total} exceeds the brute-force guard {limit}")));
    }
    Ok(total)
}

// Calls `visit` with every fixed-point-free involution on `0..total`.
fn for_each_matching(total: usize, visit: &mut impl FnMut(&[usize])) {
    fn go(iota: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
        let Some(first) = iota.iter().position(|&x| x == usize::MAX) else {
            visit(iota);
            return;
        };
        for partner in first + 1..iota.len() {
            if iota[partner] == usize::MAX {
                iota[first] = partner;
                iota[partner] = first;
                go(iota, visit);
                iota[partner] = usize::MAX;
            }
        }
        iota[first] = usize::MAX;
    }
    go(&mut vec![usize::MAX; total], visit);
}

fn matches(layout: &Layout, iota: &[usize], mu: &[usize], g: usize) -> bool {
    let (connected, faces) = layout.classify(iota, mu);
    connected && {
        let chi = mu.len() as i64 - (iota.len() / 2) as i64 + faces as i64;
        chi == 2 - 2 * g as i64
    }
}

/// Every arrowed cell graph of genus `g` with labelled vertices of degrees `mu`.
///
/// Vertex `k` gets consecutive half-edges with the arrow on the first, so each
/// perfect matching is a distinct arrowed graph.
pub fn enumerate_arrowed(g: usize, mu: &[usize]) -> Result<Vec<CellGraph>> {
    let total = guard(mu)?;
    let mut out = Vec::new();
    if total % 2 != 0 || mu.is_empty() {
        return Ok(out);
    }
    let layout = Layout::new(mu);
    for_each_matching(total, &mut |iota| {
        if matches(&layout, iota, mu, g) {
            out.push(to_graph(&layout, iota, mu));
        }
    });
    Ok(out)
}

fn to_graph(layout: &Layout, iota: &[usize], mu: &[usize]) -> CellGraph {
    // number edges by their smaller position
    let mut dart = vec![0; iota.len()];
    let mut e = 0;
    for h in 0..iota.len() {
        if h < iota[h] {
            dart[h] = 2 * e;
            dart[iota[h]] = 2 * e + 1;
            e += 1;
        }
    }
    let mut vertices = vec![Vec::new(); layout.n];
    for h in 0..iota.len() {
        vertices[layout.vertex[h]].push(dart[h]);
    }
    let arrows = vertices.iter().map(|ds| ds.first().copied()).collect();
    debug_assert_eq!(vertices.iter().map(Vec::len).collect::<Vec<_>>(), mu);
    CellGraph::new(vertices).and_then(|g| g.with_arrows(arrows)).expect("matching is a valid map")
}

/// The number of arrowed cell graphs of genus `g` and degrees `mu`.
pub fn count_brute(g: usize, mu: &[usize]) -> Result<u64> {
    count_brute_guarded(g, mu, BRUTE_GUARD)
}

/// [`count_brute`] with the total-degree guard set to `limit`. The work is
/// `(|mu| - 1)!!` matchings, so each +2 multiplies it by about `|mu|`.
pub fn count_brute_guarded(g: usize, mu: &[usize], limit: usize) -> Result<u64> {
    let total = guard_at(mu, limit)?;
    if total % 2 != 0 || mu.is_empty() {
        return Ok(0);
    }
    let layout = Layout::new(mu);
    let mut count = 0;
    for_each_matching(total, &mut |iota| {
        if matches(&layout, iota, mu, g) {
            count += 1;
        }
    });
    Ok(count)
}

/// The number of matchings giving a connected graph, any genus.
pub fn count_connected_matchings(mu: &[usize]) -> Result<u64> {
    let total = guard(mu)?;
    if total % 2 != 0 || mu.is_empty() {
        return Ok(0);
    }
    let layout = Layout::new(mu);
    let mut count = 0;
    for_each_matching(total, &mut |iota| {
        if layout.classify(iota, mu).0 {
            count += 1;
        }
    });
    Ok(count)
}

/// Every connected cell graph with at most `max_edges` edges, one per
/// isomorphism class, with vertex degrees in non-increasing order (any other
/// labelling is a relabelling of one of these). Includes the lone vertex.
pub fn cell_graphs_up_to(max_edges: usize) -> Result<Vec<CellGraph>> {
    guard(&[2 * max_edges])?;
    let mut out = vec![CellGraph::new(vec![vec![]])?];
    for e in 1..=max_edges {
        for mu in partitions(2 * e, 2 * e) {
            let mut classes: Vec<CellGraph> = Vec::new();
            for g in 0..=e {
                for gr in enumerate_arrowed(g, &mu)? {
                    if !classes.iter().any(|c| super::hom::is_isomorphic(c, &gr)) {
                        classes.push(gr);
                    }
                }
            }
            out.extend(classes);
        }
    }
    Ok(out)
}

// Partitions of `n` into parts of size at most `max`, largest first.
fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
