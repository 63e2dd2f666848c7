//! Edge-contraction recursions: the arrowed-graph count `C_{g,n}(mu)`, its
//! Frobenius-weighted form, and evaluation of coloured cell graphs.

mod count;
mod evaluate;
mod weighted;

pub use count::{count, CountTable};
pub use evaluate::{edge_removal_equivalent, evaluate_graph, evaluate_graph_with, EcoOrder, RemovalCase};
pub use weighted::{counting_formula_rhs, weighted_omega, CountRecord};
