//! Movability: injective grids, spatial embeddings and the constant distance closure.

mod spatial;

pub use spatial::{spatial_embedding, DirectionClass, SpatialEmbedding};

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::graph::{components_of, fmt_edge_list, Edge, FlexGraph};
use crate::nac::{color_components, nac_colorings, NacColoring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MovableError {
    #[error("graph is not connected")]
    Disconnected,
}

fn require_connected(g: &FlexGraph) -> Result<(), MovableError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(MovableError::Disconnected)
    }
}

/// True if distinct vertices never share both colour component indices.
pub fn grid_is_injective(g: &FlexGraph, c: &NacColoring) -> bool {
    let cc = color_components(g, c);
    let mut seen: Vec<(usize, usize)> = cc.indices.values().copied().collect();
    seen.sort_unstable();
    seen.windows(2).all(|w| w[0] != w[1])
}

/// First NAC-coloring (in enumeration order) whose grid construction is injective.
pub fn has_injective_grid_construction(g: &FlexGraph) -> Result<Option<NacColoring>, MovableError> {
    require_connected(g)?;
    Ok(nac_colorings(g, false).into_iter().find(|c| grid_is_injective(g, c)))
}

/// A pair of NAC-colorings together with the embedding built from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpatialWitness {
    /// Positions of the two colorings in the enumeration order.
    pub indices: (usize, usize),
    pub colorings: (NacColoring, NacColoring),
    pub embedding: SpatialEmbedding,
}

/// Tries all pairs `i < j` of NAC-colorings in lexicographic order.
pub fn has_injective_spatial_embedding(g: &FlexGraph) -> Result<Option<SpatialWitness>, MovableError> {
    require_connected(g)?;
    let cs = nac_colorings(g, false);
    Ok(spatial_witness_from(g, &cs))
}

pub(crate) fn spatial_witness_from(g: &FlexGraph, cs: &[NacColoring]) -> Option<SpatialWitness> {
    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            if let Some(embedding) = spatial_embedding(g, &cs[i], &cs[j]) {
                return Some(SpatialWitness { indices: (i, j), colorings: (cs[i].clone(), cs[j].clone()), embedding });
            }
        }
    }
    None
}

/// Non-adjacent pairs joined by a path that is monochromatic under every NAC-coloring.
///
/// Edges are grouped by their colour vector over all colorings; a pair is
/// included when both ends lie in one component of a single group.
pub fn unicolor_pairs(g: &FlexGraph) -> Vec<Edge> {
    let cs = nac_colorings(g, false);
    let mut groups: BTreeMap<Vec<bool>, Vec<Edge>> = BTreeMap::new();
    for e in g.edges() {
        groups.entry(cs.iter().map(|c| c.is_red(e)).collect()).or_default().push(*e);
    }
    let mut out = Vec::new();
    for edges in groups.values() {
        for comp in components_of(g.vertices(), edges.iter()) {
            for (i, &u) in comp.iter().enumerate() {
                for &v in &comp[i + 1..] {
                    if !g.has_edge(u, v) {
                        out.push(Edge::new(u, v));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdcStage {
    pub graph: FlexGraph,
    pub upairs: Vec<Edge>,
}

/// `G = G_0 ⊂ G_1 ⊂ ...` where each step adds the unicolor pairs; the last stage adds nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdcTrace {
    pub stages: Vec<CdcStage>,
    pub closure: FlexGraph,
}

impl CdcTrace {
    pub fn is_complete(&self) -> bool {
        self.closure.is_complete()
    }

    pub fn to_json(&self) -> Value {
        let stages: Vec<Value> = self
            .stages
            .iter()
            .map(|s| json!({"added": s.upairs.iter().map(|e| [e.u(), e.v()]).collect::<Vec<_>>()}))
            .collect();
        json!({"stages": stages, "complete": self.is_complete()})
    }
}

impl fmt::Display for CdcTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.stages.iter().enumerate() {
            writeln!(f, "stage {k}: {} edges, U = {}", s.graph.num_edges(), fmt_edge_list(&s.upairs))?;
        }
        write!(f, "closure complete: {}", self.is_complete())
    }
}

pub fn constant_distance_closure(g: &FlexGraph) -> CdcTrace {
    let mut stages = Vec::new();
    let mut current = g.clone();
    loop {
        let upairs = unicolor_pairs(&current);
        let next = (!upairs.is_empty()).then(|| current.with_added_edges(&upairs));
        stages.push(CdcStage { graph: current.clone(), upairs });
        match next {
            Some(n) => current = n,
            None => return CdcTrace { stages, closure: current },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MovableWitness {
    InjectiveGrid(NacColoring),
    SpatialEmbedding(Box<SpatialWitness>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NotMovableReason {
    NoNacColoring,
    ClosureComplete,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Movability {
    Movable(MovableWitness),
    NotMovable(NotMovableReason),
    /// Neither sufficient nor necessary condition decides; carries the closure.
    Unknown(Box<CdcTrace>),
}

impl fmt::Display for Movability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Movability::Movable(MovableWitness::InjectiveGrid(c)) => write!(f, "Movable: injective grid: {c}"),
            Movability::Movable(MovableWitness::SpatialEmbedding(w)) => write!(
                f,
                "Movable: spatial embedding: NAC-colorings {} and {}\n  {}\n  {}",
                w.indices.0, w.indices.1, w.colorings.0, w.colorings.1
            ),
            Movability::NotMovable(NotMovableReason::NoNacColoring) => write!(f, "NotMovable: no NAC-coloring"),
            Movability::NotMovable(NotMovableReason::ClosureComplete) => {
                write!(f, "NotMovable: constant distance closure complete")
            }
            Movability::Unknown(t) => write!(
                f,
                "Unknown: closure has {} of {} possible edges",
                t.closure.num_edges(),
                t.closure.non_edges().len() + t.closure.num_edges()
            ),
        }
    }
}

impl Movability {
    pub fn to_json(&self) -> Value {
        let edges = |c: &NacColoring| serde_json::to_value(c.to_json()).expect("coloring serializes");
        match self {
            Movability::Movable(MovableWitness::InjectiveGrid(c)) => {
                json!({"status": "movable", "witness": {"kind": "injective_grid", "coloring": edges(c)}})
            }
            Movability::Movable(MovableWitness::SpatialEmbedding(w)) => json!({
                "status": "movable",
                "witness": {
                    "kind": "spatial_embedding",
                    "indices": [w.indices.0, w.indices.1],
                    "colorings": [edges(&w.colorings.0), edges(&w.colorings.1)],
                }
            }),
            Movability::NotMovable(r) => json!({
                "status": "not_movable",
                "reason": match r {
                    NotMovableReason::NoNacColoring => "no_nac_coloring",
                    NotMovableReason::ClosureComplete => "closure_complete",
                }
            }),
            Movability::Unknown(t) => json!({"status": "unknown", "closure": t.to_json()}),
        }
    }
}

/// Tri-state verdict: a sufficient condition for movability, a certificate
/// of non-movability, or neither.
pub fn movability_status(g: &FlexGraph) -> Result<Movability, MovableError> {
    require_connected(g)?;
    let cs = nac_colorings(g, false);
    if cs.is_empty() {
        return Ok(Movability::NotMovable(NotMovableReason::NoNacColoring));
    }
    if let Some(c) = cs.iter().find(|c| grid_is_injective(g, c)) {
        return Ok(Movability::Movable(MovableWitness::InjectiveGrid(c.clone())));
    }
    if let Some(w) = spatial_witness_from(g, &cs) {
        return Ok(Movability::Movable(MovableWitness::SpatialEmbedding(Box::new(w))));
    }
    let trace = constant_distance_closure(g);
    if trace.is_complete() {
        return Ok(Movability::NotMovable(NotMovableReason::ClosureComplete));
    }
    Ok(Movability::Unknown(Box::new(trace)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{catalog, parse_catalog};

    #[test]
    fn injective_grids() {
        let p = catalog("ThreePrism", &[]).unwrap();
        assert!(has_injective_grid_construction(&p).unwrap().is_some());
        assert!(has_injective_grid_construction(&catalog("Q1", &[]).unwrap()).unwrap().is_none());
        assert!(has_injective_grid_construction(&catalog("Diamond", &[]).unwrap()).unwrap().is_none());
        let two = FlexGraph::new(&[(0, 1), (2, 3)], None).unwrap();
        assert_eq!(has_injective_grid_construction(&two), Err(MovableError::Disconnected));
    }

    #[test]
    fn unicolor_examples() {
        assert!(unicolor_pairs(&parse_catalog("C4").unwrap()).is_empty());
        assert!(unicolor_pairs(&parse_catalog("ThreePrism").unwrap()).is_empty());
        assert_eq!(unicolor_pairs(&parse_catalog("Diamond").unwrap()), vec![Edge::new(0, 1)]);
    }

    #[test]
    fn closures() {
        let d = constant_distance_closure(&parse_catalog("Diamond").unwrap());
        assert_eq!(d.stages.len(), 2);
        assert_eq!(d.closure, parse_catalog("K4").unwrap());
        let c4 = parse_catalog("C4").unwrap();
        assert_eq!(constant_distance_closure(&c4).closure, c4);
        assert_eq!(d.to_json(), json!({"stages": [{"added": [[0, 1]]}, {"added": []}], "complete": true}));
    }

    #[test]
    fn verdicts() {
        let p = parse_catalog("ThreePrism").unwrap();
        assert!(matches!(movability_status(&p).unwrap(), Movability::Movable(MovableWitness::InjectiveGrid(_))));
        let d = parse_catalog("Diamond").unwrap();
        assert_eq!(movability_status(&d).unwrap().to_string(), "NotMovable: no NAC-coloring");
        let q = parse_catalog("Q1").unwrap();
        assert!(matches!(movability_status(&q).unwrap(), Movability::Movable(MovableWitness::SpatialEmbedding(_))));
    }
}
