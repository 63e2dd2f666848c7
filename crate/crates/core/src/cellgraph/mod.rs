//! Cell graphs as combinatorial maps, the two edge-contraction operations,
//! brute-force enumeration of arrowed graphs and tiny hom-sets.
//!
//! Half-edges ("darts") are numbered so that edge `e` owns darts `2e` and
//! `2e + 1`; the edge involution is `d ^ 1`. Each vertex stores its darts in
//! counter-clockwise cyclic order, which is the rotation permutation.
//! Faces are the cycles of `rotation ∘ involution`, i.e. `d -> rho(d ^ 1)`.

mod enumerate;
mod graph;
mod hom;
mod json;

pub use enumerate::{
    cell_graphs_up_to, count_brute, count_brute_guarded, count_connected_matchings, enumerate_arrowed, BRUTE_GUARD,
};
pub use graph::{CellGraph, Eco2};
pub use hom::{automorphism_order, hom_set, is_isomorphic, isomorphism_count, Morphism, HOM_GUARD};
pub use json::GraphSpec;
