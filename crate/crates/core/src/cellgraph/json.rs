use serde::{Deserialize, Serialize};

use super::graph::CellGraph;
use crate::error::{Error, Result};

/// On-disk graph: `{"n", "rotation", "edges", "arrows"}`. Half-edge ids are
/// arbitrary distinct integers; `rotation[v]` lists vertex `v`'s half-edges in
/// cyclic order and `arrows[v]` (optional, may be `null`) marks one of them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub n: usize,
    pub rotation: Vec<Vec<usize>>,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arrows: Option<Vec<Option<usize>>>,
}

impl GraphSpec {
    /// Edge `k` of the file becomes darts `2k`, `2k + 1`.
    pub fn to_graph(&self) -> Result<CellGraph> {
        if self.rotation.len() != self.n {
            return Err(Error::Dimension { expected: self.n, got: self.rotation.len() });
        }
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        let g = CellGraph::from_rotation(&self.rotation, &edges)?;
        let Some(arrows) = &self.arrows else {
            return Ok(g);
        };
        let mut dart_of = std::collections::HashMap::new();
        for (k, &(h, h2)) in edges.iter().enumerate() {
            dart_of.insert(h, 2 * k);
            dart_of.insert(h2, 2 * k + 1);
        }
        let arrows = arrows
            .iter()
            .map(|a| {
                a.map(|id| {
                    dart_of.get(&id).copied().ok_or_else(|| Error::Input(format!("arrow {id} is not a half-edge")))
                })
                .transpose()
            })
            .collect::<Result<Vec<_>>>()?;
        g.with_arrows(arrows)
    }

    /// Uses the internal dart numbers as half-edge ids.
    pub fn from_graph(g: &CellGraph) -> Self {
        GraphSpec {
            n: g.num_vertices(),
            rotation: g.rotation().to_vec(),
            edges: (0..g.num_edges()).map(|e| [2 * e, 2 * e + 1]).collect(),
            arrows: g.arrows().iter().any(Option::is_some).then(|| g.arrows().to_vec()),
        }
    }
}
