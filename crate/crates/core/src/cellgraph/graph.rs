use crate::error::{Error, Result};

/// A cell graph: labelled vertices with cyclically ordered darts, paired into
/// edges. The graph may be disconnected (the output of a separating loop
/// contraction, viewed as one object).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CellGraph {
    pub(crate) vertices: Vec<Vec<usize>>,
    pub(crate) labels: Vec<u32>,
    pub(crate) arrows: Vec<Option<usize>>,
    /// Original edge id, per edge; survives contractions and renumbering.
    pub(crate) tags: Vec<usize>,
}

/// Result of contracting a loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Eco2 {
    /// Loop of handle: one connected graph of type `(g - 1, n + 1)`.
    Handle(CellGraph),
    /// Separating loop: the component holding the darts that followed the
    /// loop's first dart, then the other one. Both new vertices keep the label
    /// of the split vertex.
    Separating(CellGraph, CellGraph),
}

impl CellGraph {
    /// Builds a graph from per-vertex dart lists over darts `0..2E`, where darts
    /// `2e` and `2e + 1` form edge `e`. Labels are `1..=n`, no arrows.
    pub fn new(vertices: Vec<Vec<usize>>) -> Result<Self> {
        let n = vertices.len();
        let g = CellGraph { labels: (1..=n as u32).collect(), arrows: vec![None; n], tags: Vec::new(), vertices };
        g.with_default_tags()
    }

    fn with_default_tags(mut self) -> Result<Self> {
        let darts: usize = self.vertices.iter().map(Vec::len).sum();
        if !darts.is_multiple_of(2) {
            return Err(Error::Input("odd number of half-edges".into()));
        }
        self.tags = (0..darts / 2).collect();
        self.check()?;
        Ok(self)
    }

    /// Builds a graph from arbitrary half-edge ids, pairing them by `edges`.
    /// Edge `k` becomes darts `2k` (first entry) and `2k + 1` (second).
    pub fn from_rotation(rotation: &[Vec<usize>], edges: &[(usize, usize)]) -> Result<Self> {
        let mut dart_of = std::collections::HashMap::new();
        for (e, &(h, h2)) in edges.iter().enumerate() {
            for (d, id) in [(2 * e, h), (2 * e + 1, h2)] {
                if dart_of.insert(id, d).is_some() {
                    return Err(Error::Input(format!("half-edge {id} appears in two edges")));
                }
            }
        }
        let vertices = rotation
            .iter()
            .map(|vs| {
                vs.iter()
                    .map(|id| {
                        dart_of
                            .get(id)
                            .copied()
                            .ok_or_else(|| Error::Input(format!("half-edge {id} is not on any edge")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        CellGraph::new(vertices)
    }

    pub fn with_labels(mut self, labels: Vec<u32>) -> Result<Self> {
        if labels.len() != self.vertices.len() {
            return Err(Error::Dimension { expected: self.vertices.len(), got: labels.len() });
        }
        self.labels = labels;
        Ok(self)
    }

    /// Marks one dart per vertex; the dart must sit at that vertex.
    pub fn with_arrows(mut self, arrows: Vec<Option<usize>>) -> Result<Self> {
        if arrows.len() != self.vertices.len() {
            return Err(Error::Dimension { expected: self.vertices.len(), got: arrows.len() });
        }
        for (v, a) in arrows.iter().enumerate() {
            if let Some(d) = a {
                if !self.vertices[v].contains(d) {
                    return Err(Error::Input(format!("arrow {d} is not incident to vertex {v}")));
                }
            }
        }
        self.arrows = arrows;
        Ok(self)
    }

    pub(crate) fn check(&self) -> Result<()> {
        let darts = self.num_darts();
        let mut seen = vec![false; darts];
        for d in self.vertices.iter().flatten() {
            if *d >= darts || std::mem::replace(&mut seen[*d], true) {
                return Err(Error::Input(format!("half-edge {d} is out of range or repeated")));
            }
        }
        if self.labels.len() != self.vertices.len() || self.arrows.len() != self.vertices.len() {
            return Err(Error::Input("labels and arrows must have one entry per vertex".into()));
        }
        if self.tags.len() * 2 != darts {
            return Err(Error::Input("edge tags must have one entry per edge".into()));
        }
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.tags.len()
    }

    pub fn num_darts(&self) -> usize {
        self.vertices.iter().map(Vec::len).sum()
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.vertices
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn arrows(&self) -> &[Option<usize>] {
        &self.arrows
    }

    /// Original id of each current edge.
    pub fn edge_tags(&self) -> &[usize] {
        &self.tags
    }

    /// Degree profile in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        self.vertices.iter().map(Vec::len).collect()
    }

    pub fn vertex_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.num_darts()];
        for (v, ds) in self.vertices.iter().enumerate() {
            for &d in ds {
                out[d] = v;
            }
        }
        out
    }

    /// Rotation permutation as an array.
    pub fn rho(&self) -> Vec<usize> {
        let mut out = vec![0; self.num_darts()];
        for ds in &self.vertices {
            for (k, &d) in ds.iter().enumerate() {
                out[d] = ds[(k + 1) % ds.len()];
            }
        }
        out
    }

    /// Number of faces; an isolated vertex bounds one face.
    pub fn faces(&self) -> usize {
        let rho = self.rho();
        let mut seen = vec![false; rho.len()];
        let mut faces = self.vertices.iter().filter(|v| v.is_empty()).count();
        for start in 0..rho.len() {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                d = rho[d ^ 1];
            }
        }
        faces
    }

    /// Connected component index of each vertex, numbered in order of first vertex.
    pub fn component_of(&self) -> Vec<usize> {
        let n = self.vertices.len();
        let vertex_of = self.vertex_of();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        for root in 0..n {
            if comp[root] != usize::MAX {
                continue;
            }
            let mut stack = vec![root];
            comp[root] = next;
            while let Some(v) = stack.pop() {
                for &d in &self.vertices[v] {
                    let w = vertex_of[d ^ 1];
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn num_components(&self) -> usize {
        self.component_of().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() == 1
    }

    /// Genus from `n - E + F = 2 - 2g`; only defined for connected graphs.
    pub fn genus(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Input("genus of a disconnected graph".into()));
        }
        let chi = self.num_vertices() as i64 - self.num_edges() as i64 + self.faces() as i64;
        if chi > 2 || (2 - chi) % 2 != 0 {
            return Err(Error::Input(format!("invalid Euler characteristic {chi}")));
        }
        Ok(((2 - chi) / 2) as usize)
    }

    /// `sum over components of 2g - 2 + n`.
    pub fn complexity(&self) -> i64 {
        self.components()
            .iter()
            .map(|(c, _)| 2 * c.genus().expect("component is connected") as i64 - 2 + c.num_vertices() as i64)
            .sum()
    }

    /// Splits into connected components; each comes with the original
    /// positions of its vertices. Darts are renumbered, tags kept.
    pub fn components(&self) -> Vec<(CellGraph, Vec<usize>)> {
        let comp = self.component_of();
        let k = comp.iter().max().map_or(0, |m| m + 1);
        (0..k)
            .map(|c| {
                let keep: Vec<usize> = (0..self.num_vertices()).filter(|&v| comp[v] == c).collect();
                (self.restrict(&keep), keep)
            })
            .collect()
    }

    // Subgraph on a union of components.
    fn restrict(&self, keep: &[usize]) -> CellGraph {
        let mut edges: Vec<usize> = keep.iter().flat_map(|&v| self.vertices[v].iter().map(|d| d / 2)).collect();
        edges.sort_unstable();
        edges.dedup();
        let mut new_edge = vec![usize::MAX; self.num_edges()];
        for (i, &e) in edges.iter().enumerate() {
            new_edge[e] = i;
        }
        let map = |d: usize| 2 * new_edge[d / 2] + (d & 1);
        CellGraph {
            vertices: keep.iter().map(|&v| self.vertices[v].iter().map(|&d| map(d)).collect()).collect(),
            labels: keep.iter().map(|&v| self.labels[v]).collect(),
            arrows: keep.iter().map(|&v| self.arrows[v].map(map)).collect(),
            tags: edges.iter().map(|&e| self.tags[e]).collect(),
        }
    }

    pub fn is_loop(&self, edge: usize) -> bool {
        let vertex_of = self.vertex_of();
        vertex_of[2 * edge] == vertex_of[2 * edge + 1]
    }

    // Removes the darts of `edge` everywhere and renumbers later edges down.
    fn drop_edge(&mut self, edge: usize) {
        let map = |d: usize| if d / 2 > edge { d - 2 } else { d };
        for ds in &mut self.vertices {
            ds.retain(|&d| d / 2 != edge);
            for d in ds.iter_mut() {
                *d = map(*d);
            }
        }
        for a in &mut self.arrows {
            *a = a.map(map);
        }
        self.tags.remove(edge);
    }

    /// Deletes an edge without contracting it.
    pub fn remove_edge(&self, edge: usize) -> Result<CellGraph> {
        if edge >= self.num_edges() {
            return Err(Error::Input(format!("no edge {edge}")));
        }
        let mut g = self.clone();
        for (v, a) in g.arrows.iter_mut().enumerate() {
            if let Some(d) = *a {
                if d / 2 == edge {
                    let list = rotate_to(&self.vertices[v], d);
                    *a = list.into_iter().find(|x| x / 2 != edge);
                }
            }
        }
        g.drop_edge(edge);
        Ok(g)
    }

    /// Face cycles of `d -> rho(d ^ 1)` over the darts (isolated vertices omitted).
    pub fn face_cycles(&self) -> Vec<Vec<usize>> {
        let rho = self.rho();
        let mut seen = vec![false; rho.len()];
        let mut out = Vec::new();
        for start in 0..rho.len() {
            let mut cycle = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                cycle.push(d);
                d = rho[d ^ 1];
            }
            if !cycle.is_empty() {
                out.push(cycle);
            }
        }
        out
    }

    /// ECO 1: contracts the edge through `dart`, merging the head vertex into
    /// the tail (the vertex of `dart`), which keeps its label and position.
    /// The head's darts are spliced in where the edge was.
    pub fn eco1(&self, dart: usize) -> Result<CellGraph> {
        if dart >= self.num_darts() {
            return Err(Error::Input(format!("no half-edge {dart}")));
        }
        let vertex_of = self.vertex_of();
        let (tail, head) = (vertex_of[dart], vertex_of[dart ^ 1]);
        if tail == head {
            return Err(Error::WrongOperation { op: "eco1", reason: "the edge is a loop".into() });
        }
        let a = rotate_to(&self.vertices[tail], dart);
        let b = rotate_to(&self.vertices[head], dart ^ 1);
        let merged: Vec<usize> = a[1..].iter().chain(&b[1..]).copied().collect();
        let arrow = match self.arrows[tail] {
            Some(d) if d == dart => merged.first().copied(),
            other => other,
        };
        let mut g = self.clone();
        g.vertices[tail] = merged;
        g.arrows[tail] = arrow;
        g.vertices.remove(head);
        g.labels.remove(head);
        g.arrows.remove(head);
        g.drop_edge(dart / 2);
        Ok(g)
    }

    /// ECO 2 as a single, possibly disconnected, graph. The darts following
    /// `dart` at the vertex form a new vertex with the old label and position;
    /// the darts following `dart ^ 1` form a vertex inserted right after it,
    /// labelled one more than the old label, with larger labels shifted up.
    pub fn split_loop(&self, dart: usize) -> Result<CellGraph> {
        if dart >= self.num_darts() {
            return Err(Error::Input(format!("no half-edge {dart}")));
        }
        let vertex_of = self.vertex_of();
        let v = vertex_of[dart];
        if vertex_of[dart ^ 1] != v {
            return Err(Error::WrongOperation { op: "eco2", reason: "the edge is not a loop".into() });
        }
        let list = rotate_to(&self.vertices[v], dart);
        let k = list.iter().position(|&d| d == dart ^ 1).expect("loop darts share a vertex");
        let first: Vec<usize> = list[1..k].to_vec();
        let second: Vec<usize> = list[k + 1..].to_vec();
        let arrow = self.arrows[v];
        let pick = |group: &[usize], fallback: bool| match arrow {
            Some(d) if group.contains(&d) => Some(d),
            Some(d) if (d == dart || d == dart ^ 1) && fallback => group.first().copied(),
            _ => None,
        };
        let mut g = self.clone();
        let label = g.labels[v];
        for l in &mut g.labels {
            if *l > label {
                *l += 1;
            }
        }
        let arrow_first = pick(&first, arrow == Some(dart));
        let arrow_second = pick(&second, arrow == Some(dart ^ 1));
        g.vertices[v] = first;
        g.arrows[v] = arrow_first;
        g.vertices.insert(v + 1, second);
        g.labels.insert(v + 1, label + 1);
        g.arrows.insert(v + 1, arrow_second);
        g.drop_edge(dart / 2);
        Ok(g)
    }

    /// ECO 2 proper: contracts the loop through `dart` and reports whether it
    /// was a loop of handle or a separating loop.
    pub fn eco2(&self, dart: usize) -> Result<Eco2> {
        let v = self.vertex_of()[dart];
        let label = self.labels[v];
        let split = self.split_loop(dart)?;
        if split.is_connected() {
            return Ok(Eco2::Handle(split));
        }
        let mut parts = split.components();
        if parts.len() != 2 {
            return Err(Error::Input("eco2 on a disconnected graph".into()));
        }
        // the component holding position v comes first
        if !parts[0].1.contains(&v) {
            parts.swap(0, 1);
        }
        let mut out = parts.into_iter().map(|(mut g, _)| {
            for l in &mut g.labels {
                if *l == label + 1 {
                    *l = label;
                } else if *l > label + 1 {
                    *l -= 1;
                }
            }
            g
        });
        let (a, b) = (out.next().expect("two parts"), out.next().expect("two parts"));
        Ok(Eco2::Separating(a, b))
    }

    /// Contracts the edge through `dart` with whichever operation applies,
    /// returning one (possibly disconnected) graph.
    pub fn contract(&self, dart: usize) -> Result<CellGraph> {
        let vertex_of = self.vertex_of();
        if vertex_of.get(dart).is_none() {
            return Err(Error::Input(format!("no half-edge {dart}")));
        }
        if vertex_of[dart] == vertex_of[dart ^ 1] {
            self.split_loop(dart)
        } else {
            self.eco1(dart)
        }
    }

    /// Disjoint union, `other`'s vertices after ours; labels kept as given.
    pub fn disjoint_union(&self, other: &CellGraph) -> CellGraph {
        let shift = self.num_darts();
        let mut g = self.clone();
        g.vertices.extend(other.vertices.iter().map(|ds| ds.iter().map(|d| d + shift).collect()));
        g.labels.extend(&other.labels);
        g.arrows.extend(other.arrows.iter().map(|a| a.map(|d| d + shift)));
        g.tags.extend(&other.tags);
        g
    }
}

/// The cyclic list rotated so that `first` leads.
pub(crate) fn rotate_to(list: &[usize], first: usize) -> Vec<usize> {
    let k = list.iter().position(|&d| d == first).expect("dart at this vertex");
    list[k..].iter().chain(&list[..k]).copied().collect()
}
