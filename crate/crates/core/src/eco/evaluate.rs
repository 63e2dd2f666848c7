use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::cellgraph::CellGraph;
use crate::error::{Error, Result};
use crate::frobenius::{FrobeniusAlgebra, Vector};
use crate::scalar::Scalar;

/// Which edge to contract next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EcoOrder {
    /// Always edge 0, tail at its first dart.
    Least,
    /// A uniformly random dart at every step, from a seeded generator.
    Seeded(u64),
}

/// Value of a coloured cell graph, contracting edges in the default order.
///
/// An edge between two vertices multiplies their colours; a loop splits the
/// colour of its vertex by the comultiplication; a lone vertex evaluates to the
/// counit of its colour. The result is `eps(v_1 .. v_n e^g)` whatever the order.
pub fn evaluate_graph(alg: &FrobeniusAlgebra, graph: &CellGraph, colors: &[Vector]) -> Result<Scalar> {
    evaluate_graph_with(alg, graph, colors, EcoOrder::Least)
}

pub fn evaluate_graph_with(
    alg: &FrobeniusAlgebra,
    graph: &CellGraph,
    colors: &[Vector],
    order: EcoOrder,
) -> Result<Scalar> {
    alg.require_commutative()?;
    if colors.len() != graph.num_vertices() {
        return Err(Error::Dimension { expected: graph.num_vertices(), got: colors.len() });
    }
    if let Some(c) = colors.iter().find(|c| c.len() != alg.dim()) {
        return Err(Error::Dimension { expected: alg.dim(), got: c.len() });
    }
    if !graph.is_connected() {
        return Err(Error::Input("cannot evaluate a disconnected graph".into()));
    }
    let mut rng = match order {
        EcoOrder::Least => None,
        EcoOrder::Seeded(seed) => Some(StdRng::seed_from_u64(seed)),
    };
    let mut pick = move |g: &CellGraph| match rng.as_mut() {
        Some(r) => r.gen_range(0..g.num_darts()),
        None => 0,
    };
    eval(alg, graph, colors.to_vec(), &mut pick)
}

fn eval(
    alg: &FrobeniusAlgebra,
    g: &CellGraph,
    mut colors: Vec<Vector>,
    pick: &mut dyn FnMut(&CellGraph) -> usize,
) -> Result<Scalar> {
    if g.num_edges() == 0 {
        debug_assert_eq!(colors.len(), 1);
        return Ok(alg.counit(&colors[0]));
    }
    let dart = pick(g);
    let vertex_of = g.vertex_of();
    let (t, h) = (vertex_of[dart], vertex_of[dart ^ 1]);
    if t != h {
        colors[t] = alg.multiply(&colors[t], &colors[h])?;
        colors.remove(h);
        return eval(alg, &g.eco1(dart)?, colors, pick);
    }

    let split = g.split_loop(dart)?;
    let delta = alg.comultiply(&colors[t])?;
    let r = alg.dim();
    // colour of the second new vertex when the first carries e_a
    let partner = |a: usize| -> Vector { (0..r).map(|b| delta.get(&[a, b]).clone()).collect() };
    let mut total = Scalar::zero();
    if split.is_connected() {
        for a in 0..r {
            let second = partner(a);
            if second.iter().all(Zero::is_zero) {
                continue;
            }
            let mut cs = colors.clone();
            cs[t] = alg.basis_vector(a);
            cs.insert(t + 1, second);
            total += eval(alg, &split, cs, pick)?;
        }
        return Ok(total);
    }
    let parts = split.components();
    let side = |pos: usize| parts.iter().position(|(_, keep)| keep.contains(&pos)).expect("vertex in a component");
    let (ia, ib) = (side(t), side(t + 1));
    for a in 0..r {
        let second = partner(a);
        if second.iter().all(Zero::is_zero) {
            continue;
        }
        let mut cs = colors.clone();
        cs[t] = alg.basis_vector(a);
        cs.insert(t + 1, second);
        let restrict = |i: usize| -> Vec<Vector> { parts[i].1.iter().map(|&p| cs[p].clone()).collect() };
        let left = eval(alg, &parts[ia].0, restrict(ia), pick)?;
        if left.is_zero() {
            continue;
        }
        total += left * eval(alg, &parts[ib].0, restrict(ib), pick)?;
    }
    Ok(total)
}

/// The local patterns whose edge can be deleted without changing the value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RemovalCase {
    /// A loop bounding a face of degree one.
    DiscLoop,
    /// Two edges between distinct vertices bounding a face of degree two.
    ParallelEdges,
    /// Two loops bounding a face of degree two.
    HomotopicLoops,
}

/// Finds the first instance of `case` in `graph`, deletes one of its edges and
/// compares values. Errors if the pattern does not occur.
pub fn edge_removal_equivalent(
    alg: &FrobeniusAlgebra,
    graph: &CellGraph,
    colors: &[Vector],
    case: RemovalCase,
) -> Result<bool> {
    let edge = find_pattern(graph, case).ok_or_else(|| Error::Input(format!("graph has no {case:?} pattern")))?;
    let reduced = graph.remove_edge(edge)?;
    Ok(evaluate_graph(alg, graph, colors)? == evaluate_graph(alg, &reduced, colors)?)
}

pub(crate) fn find_pattern(graph: &CellGraph, case: RemovalCase) -> Option<usize> {
    graph.face_cycles().into_iter().find_map(|face| match (case, face.as_slice()) {
        (RemovalCase::DiscLoop, &[d]) => Some(d / 2),
        (RemovalCase::ParallelEdges, &[d1, d2]) if d1 / 2 != d2 / 2 => {
            (!graph.is_loop(d1 / 2) && !graph.is_loop(d2 / 2)).then_some(d1 / 2)
        }
        (RemovalCase::HomotopicLoops, &[d1, d2]) if d1 / 2 != d2 / 2 => {
            (graph.is_loop(d1 / 2) && graph.is_loop(d2 / 2)).then_some(d1 / 2)
        }
        _ => None,
    })
}
