//! Simple undirected graphs with stable integer vertex labels.

mod automorphism;
mod catalog;
mod encoding;
mod json;
mod triangles;
mod union_find;

pub use automorphism::{automorphism_bound, automorphisms, automorphisms_bounded, Automorphism, DEFAULT_MAX_VERTICES};
pub use catalog::{catalog, catalog_names, parse_catalog};
pub use encoding::{code_limit, from_integer, integer_encoding};
pub use json::{graph_from_json, graph_to_json, GraphJson};
pub use triangles::{triangle_components, TrianglePartition};
pub use union_find::UnionFind;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub type Vertex = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(Vertex),
    #[error("duplicate edge [{0}, {1}]")]
    DuplicateEdge(Vertex, Vertex),
    #[error("edge endpoint {0} is not a declared vertex")]
    UnknownVertex(Vertex),
    #[error("vertex {0} is listed twice")]
    DuplicateVertex(Vertex),
    #[error("integer {value} out of range for {vertex_count} vertices")]
    OutOfRange { value: String, vertex_count: usize },
    #[error("graph has {vertices} vertices, above the automorphism bound {bound}")]
    TooLarge { vertices: usize, bound: usize },
    #[error("unknown catalog graph {0:?}")]
    UnknownName(String),
    #[error("invalid catalog parameters: {0}")]
    BadParams(String),
    #[error("invalid graph JSON: {0}")]
    Json(String),
    #[error("graph is not connected")]
    Disconnected,
}

/// Unordered vertex pair stored with the smaller label first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Edge {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn u(&self) -> Vertex {
        self.0
    }

    pub fn v(&self) -> Vertex {
        self.1
    }

    pub fn contains(&self, x: Vertex) -> bool {
        self.0 == x || self.1 == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.0, self.1)
    }
}

impl From<(Vertex, Vertex)> for Edge {
    fn from((a, b): (Vertex, Vertex)) -> Self {
        Edge::new(a, b)
    }
}

/// Formats edges as `[[u, v], [u, v]]`.
pub fn fmt_edge_list(edges: &[Edge]) -> String {
    let parts: Vec<String> = edges.iter().map(Edge::to_string).collect();
    format!("[{}]", parts.join(", "))
}

/// A simple undirected graph.
///
/// Vertices are kept sorted, edges sorted by `(min, max)` endpoint, and
/// every edge endpoint is a vertex. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlexGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    adjacency: BTreeMap<Vertex, Vec<Vertex>>,
}

impl FlexGraph {
    /// Builds a graph from an edge list. When `vertices` is `None` the vertex
    /// set is the union of endpoints; otherwise every endpoint must be listed.
    pub fn new(edges: &[(Vertex, Vertex)], vertices: Option<&[Vertex]>) -> Result<FlexGraph, GraphError> {
        let mut vs: Vec<Vertex> = match vertices {
            Some(list) => {
                let mut v = list.to_vec();
                v.sort_unstable();
                if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
                    return Err(GraphError::DuplicateVertex(w[0]));
                }
                v
            }
            None => Vec::new(),
        };
        let mut es = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            if vertices.is_some() {
                for x in [a, b] {
                    if vs.binary_search(&x).is_err() {
                        return Err(GraphError::UnknownVertex(x));
                    }
                }
            }
            es.push(Edge::new(a, b));
        }
        es.sort_unstable();
        if let Some(w) = es.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].u(), w[0].v()));
        }
        if vertices.is_none() {
            vs = es.iter().flat_map(|e| [e.u(), e.v()]).collect();
            vs.sort_unstable();
            vs.dedup();
        }
        Ok(FlexGraph::assemble(vs, es))
    }

    fn assemble(vertices: Vec<Vertex>, edges: Vec<Edge>) -> FlexGraph {
        let mut adjacency: BTreeMap<Vertex, Vec<Vertex>> = vertices.iter().map(|&v| (v, Vec::new())).collect();
        for e in &edges {
            adjacency.get_mut(&e.u()).expect("endpoint").push(e.v());
            adjacency.get_mut(&e.v()).expect("endpoint").push(e.u());
        }
        for list in adjacency.values_mut() {
            list.sort_unstable();
        }
        FlexGraph { vertices, edges, adjacency }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        self.adjacency.get(&v).map_or(&[], Vec::as_slice)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a != b && self.edge_index(&Edge::new(a, b)).is_some()
    }

    /// Position of `v` in the sorted vertex list.
    pub fn vertex_index(&self, v: Vertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    /// Position of `e` in the sorted edge list.
    pub fn edge_index(&self, e: &Edge) -> Option<usize> {
        self.edges.binary_search(e).ok()
    }

    /// Edges as pairs of vertex positions, in edge order.
    pub fn edge_positions(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .map(|e| (self.vertex_index(e.u()).expect("endpoint"), self.vertex_index(e.v()).expect("endpoint")))
            .collect()
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        components_of(&self.vertices, self.edges.iter())
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertices.len();
        self.edges.len() == n * n.saturating_sub(1) / 2
    }

    /// Copy of the graph with extra edges (pairs already present are ignored).
    pub fn with_added_edges(&self, extra: &[Edge]) -> FlexGraph {
        let mut edges = self.edges.clone();
        edges.extend(extra.iter().copied());
        edges.sort_unstable();
        edges.dedup();
        FlexGraph::assemble(self.vertices.clone(), edges)
    }

    /// Non-adjacent vertex pairs in sorted order.
    pub fn non_edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for (i, &a) in self.vertices.iter().enumerate() {
            for &b in &self.vertices[i + 1..] {
                if !self.has_edge(a, b) {
                    out.push(Edge::new(a, b));
                }
            }
        }
        out
    }
}

/// Connected components of `(vertices, edges)`, each sorted, ordered by smallest vertex.
pub fn components_of<'a>(vertices: &[Vertex], edges: impl Iterator<Item = &'a Edge>) -> Vec<Vec<Vertex>> {
    let pos = |v: Vertex| vertices.binary_search(&v).expect("edge endpoint is a vertex");
    let mut uf = UnionFind::new(vertices.len());
    for e in edges {
        uf.union(pos(e.u()), pos(e.v()));
    }
    let mut by_root: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
    let mut order = Vec::new();
    for (i, &v) in vertices.iter().enumerate() {
        let r = uf.find(i);
        let entry = by_root.entry(r).or_default();
        if entry.is_empty() {
            order.push(r);
        }
        entry.push(v);
    }
    order.into_iter().map(|r| by_root.remove(&r).expect("root")).collect()
}

impl fmt::Display for FlexGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(Vertex::to_string).collect();
        let es: Vec<String> = self.edges.iter().map(|e| format!("({}, {})", e.u(), e.v())).collect();
        write!(f, "FlexGraph with the vertices [{}] and edges [{}]", vs.join(", "), es.join(", "))
    }
}
