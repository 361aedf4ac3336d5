use serde::{Deserialize, Serialize};

use super::{FlexGraph, GraphError, Vertex};

/// Wire form `{"vertices":[...], "edges":[[u,v],...]}`; `vertices` is optional on input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vertex>>,
    pub edges: Vec<[Vertex; 2]>,
}

impl From<&FlexGraph> for GraphJson {
    fn from(g: &FlexGraph) -> Self {
        GraphJson { vertices: Some(g.vertices().to_vec()), edges: g.edges().iter().map(|e| [e.u(), e.v()]).collect() }
    }
}

impl TryFrom<GraphJson> for FlexGraph {
    type Error = GraphError;
    fn try_from(j: GraphJson) -> Result<Self, GraphError> {
        let edges: Vec<(Vertex, Vertex)> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        FlexGraph::new(&edges, j.vertices.as_deref())
    }
}

pub fn graph_to_json(g: &FlexGraph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph JSON serializes")
}

pub fn graph_from_json(text: &str) -> Result<FlexGraph, GraphError> {
    let j: GraphJson = serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
    FlexGraph::try_from(j)
}
