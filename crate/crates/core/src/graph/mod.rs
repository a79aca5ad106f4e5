//! Finite Serre graphs: multigraphs given by darts with a reversal involution.
//!
//! Every undirected edge `e` owns the two darts `2e` and `2e + 1`; the
//! reversal is `d ^ 1`, which is a fixed-point-free involution by
//! construction. Dart `2e` runs from `ends[0]` to `ends[1]`.

mod cycles;
mod morphism;

pub use cycles::{
    canonical_cycle, core_vertices, enumerate_immersed_cycles, girth, has_immersed_closed_walk,
    min_weight_cycle, prune_cycle_core,
};
pub use morphism::GraphMorphism;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub usize);

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(pub usize);

impl Vertex {
    pub fn index(self) -> usize {
        self.0
    }
}

impl Dart {
    /// The dart running `ends[0] -> ends[1]` of edge `edge`.
    pub fn forward(edge: usize) -> Dart {
        Dart(2 * edge)
    }

    pub fn backward(edge: usize) -> Dart {
        Dart(2 * edge + 1)
    }

    pub fn index(self) -> usize {
        self.0
    }

    pub fn edge(self) -> usize {
        self.0 / 2
    }

    pub fn is_forward(self) -> bool {
        self.0.is_multiple_of(2)
    }

    pub fn reverse(self) -> Dart {
        Dart(self.0 ^ 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge id `{0}`")]
    DuplicateEdge(String),
    #[error("edge `{edge}` references unknown vertex `{vertex}`")]
    UnknownVertex { edge: String, vertex: String },
    #[error("darts {0:?} do not form a walk")]
    NotAWalk(Vec<usize>),
    #[error("walk is not closed")]
    NotClosed,
    #[error("empty walk")]
    EmptyWalk,
}

/// A finite multigraph with loops and parallel edges.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SerreGraph {
    vertex_ids: Vec<String>,
    edge_ids: Vec<String>,
    ends: Vec<[Vertex; 2]>,
    out: Vec<Vec<Dart>>,
    vertex_index: HashMap<String, Vertex>,
    edge_index: HashMap<String, usize>,
}

impl fmt::Debug for SerreGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SerreGraph")
            .field("vertices", &self.vertex_ids)
            .field(
                "edges",
                &self
                    .edge_ids
                    .iter()
                    .zip(&self.ends)
                    .map(|(id, [a, b])| (id, &self.vertex_ids[a.0], &self.vertex_ids[b.0]))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

impl SerreGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, id: impl Into<String>) -> Result<Vertex, GraphError> {
        let id = id.into();
        if self.vertex_index.contains_key(&id) {
            return Err(GraphError::DuplicateVertex(id));
        }
        let v = Vertex(self.vertex_ids.len());
        self.vertex_index.insert(id.clone(), v);
        self.vertex_ids.push(id);
        self.out.push(Vec::new());
        Ok(v)
    }

    /// Adds an undirected edge and returns its index. The forward dart runs `a -> b`.
    pub fn add_edge(&mut self, id: impl Into<String>, a: Vertex, b: Vertex) -> Result<usize, GraphError> {
        let id = id.into();
        if self.edge_index.contains_key(&id) {
            return Err(GraphError::DuplicateEdge(id));
        }
        let e = self.edge_ids.len();
        self.edge_index.insert(id.clone(), e);
        self.edge_ids.push(id);
        self.ends.push([a, b]);
        self.out[a.0].push(Dart::forward(e));
        self.out[b.0].push(Dart::backward(e));
        Ok(e)
    }

    /// Adds an edge between vertices given by id.
    pub fn add_edge_by_ids(&mut self, id: &str, a: &str, b: &str) -> Result<usize, GraphError> {
        let lookup = |v: &str| {
            self.vertex(v).ok_or_else(|| GraphError::UnknownVertex {
                edge: id.to_string(),
                vertex: v.to_string(),
            })
        };
        let (a, b) = (lookup(a)?, lookup(b)?);
        self.add_edge(id, a, b)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edge_ids.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.vertex_ids.len()).map(Vertex)
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        (0..self.dart_count()).map(Dart)
    }

    pub fn vertex(&self, id: &str) -> Option<Vertex> {
        self.vertex_index.get(id).copied()
    }

    pub fn edge(&self, id: &str) -> Option<usize> {
        self.edge_index.get(id).copied()
    }

    /// Looks up a dart by its display name (`<edge>+` or `<edge>-`).
    pub fn dart(&self, name: &str) -> Option<Dart> {
        let (edge, forward) = match name.strip_suffix('+') {
            Some(e) => (e, true),
            None => (name.strip_suffix('-')?, false),
        };
        let e = self.edge(edge)?;
        Some(if forward { Dart::forward(e) } else { Dart::backward(e) })
    }

    pub fn vertex_id(&self, v: Vertex) -> &str {
        &self.vertex_ids[v.0]
    }

    pub fn edge_id(&self, e: usize) -> &str {
        &self.edge_ids[e]
    }

    pub fn dart_name(&self, d: Dart) -> String {
        format!("{}{}", self.edge_ids[d.edge()], if d.is_forward() { '+' } else { '-' })
    }

    pub fn ends(&self, e: usize) -> [Vertex; 2] {
        self.ends[e]
    }

    pub fn tail(&self, d: Dart) -> Vertex {
        self.ends[d.edge()][d.0 & 1]
    }

    pub fn head(&self, d: Dart) -> Vertex {
        self.ends[d.edge()][1 - (d.0 & 1)]
    }

    /// Darts based at `v`, in dart order. A loop at `v` contributes both of its darts.
    pub fn out_darts(&self, v: Vertex) -> &[Dart] {
        &self.out[v.0]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.out[v.0].len()
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let [a, b] = self.ends[e];
        a == b
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_ids.is_empty()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count() == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![Vertex(0)];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &d in self.out_darts(v) {
                let w = self.head(d);
                if !seen[w.0] {
                    seen[w.0] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertex_count()
    }

    /// The subgraph induced by the vertices with `keep[v]` set, preserving ids and relative order.
    /// Also returns, for each old edge, its index in the subgraph.
    pub fn induced(&self, keep: &[bool]) -> (SerreGraph, Vec<Option<usize>>) {
        let mut g = SerreGraph::new();
        let mut vmap = vec![None; self.vertex_count()];
        for v in self.vertices() {
            if keep[v.0] {
                vmap[v.0] = Some(g.add_vertex(self.vertex_id(v)).expect("ids are unique"));
            }
        }
        let mut emap = vec![None; self.edge_count()];
        for e in 0..self.edge_count() {
            let [a, b] = self.ends[e];
            if let (Some(a), Some(b)) = (vmap[a.0], vmap[b.0]) {
                emap[e] = Some(g.add_edge(self.edge_id(e), a, b).expect("ids are unique"));
            }
        }
        (g, emap)
    }
}

/// A nonempty walk: consecutive darts are head-to-tail.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Walk {
    darts: Vec<Dart>,
}

impl Walk {
    pub fn new(g: &SerreGraph, darts: Vec<Dart>) -> Result<Walk, GraphError> {
        if darts.is_empty() {
            return Err(GraphError::EmptyWalk);
        }
        if darts.iter().any(|d| d.0 >= g.dart_count())
            || darts.windows(2).any(|w| g.head(w[0]) != g.tail(w[1]))
        {
            return Err(GraphError::NotAWalk(darts.iter().map(|d| d.0).collect()));
        }
        Ok(Walk { darts })
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn start(&self, g: &SerreGraph) -> Vertex {
        g.tail(self.darts[0])
    }

    pub fn end(&self, g: &SerreGraph) -> Vertex {
        g.head(self.darts[self.darts.len() - 1])
    }

    /// No interior backtracking.
    pub fn is_immersed(&self) -> bool {
        self.darts.windows(2).all(|w| w[1] != w[0].reverse())
    }

    pub fn reversed(&self) -> Walk {
        Walk { darts: self.darts.iter().rev().map(|d| d.reverse()).collect() }
    }

    pub fn names(&self, g: &SerreGraph) -> Vec<String> {
        self.darts.iter().map(|&d| g.dart_name(d)).collect()
    }
}

/// A nonempty closed walk, read cyclically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClosedWalk {
    darts: Vec<Dart>,
}

impl ClosedWalk {
    pub fn new(g: &SerreGraph, darts: Vec<Dart>) -> Result<ClosedWalk, GraphError> {
        let walk = Walk::new(g, darts)?;
        if walk.start(g) != walk.end(g) {
            return Err(GraphError::NotClosed);
        }
        Ok(ClosedWalk { darts: walk.darts })
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// No backtracking anywhere, including the wrap-around position.
    pub fn is_immersed(&self) -> bool {
        let n = self.darts.len();
        (0..n).all(|i| self.darts[(i + 1) % n] != self.darts[i].reverse())
    }

    pub fn names(&self, g: &SerreGraph) -> Vec<String> {
        self.darts.iter().map(|&d| g.dart_name(d)).collect()
    }

    pub fn vertices(&self, g: &SerreGraph) -> Vec<Vertex> {
        self.darts.iter().map(|&d| g.tail(d)).collect()
    }
}
