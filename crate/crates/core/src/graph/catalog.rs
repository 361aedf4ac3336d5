//! Named graphs with fixed labelings.

use super::{FlexGraph, GraphError, Vertex};

const THREE_PRISM: &[(Vertex, Vertex)] = &[(0, 3), (0, 4), (3, 4), (1, 2), (1, 5), (2, 5), (0, 5), (1, 4), (2, 3)];

const Q1: &[(Vertex, Vertex)] =
    &[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 6), (3, 7), (4, 7), (5, 6), (5, 7), (6, 7)];

const DIAMOND: &[(Vertex, Vertex)] = &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

const NO_NAC: &[(Vertex, Vertex)] =
    &[(0, 3), (0, 4), (0, 6), (1, 2), (1, 4), (1, 6), (2, 3), (2, 4), (2, 5), (3, 5), (3, 6), (4, 5)];

const MAX_EMB_7: &[(Vertex, Vertex)] =
    &[(1, 2), (1, 5), (1, 6), (2, 3), (2, 4), (3, 6), (3, 7), (4, 5), (4, 7), (5, 7), (6, 7)];
const MAX_EMB_8: &[(Vertex, Vertex)] =
    &[(1, 2), (1, 4), (1, 8), (2, 3), (2, 7), (3, 6), (3, 8), (4, 5), (4, 7), (5, 7), (5, 8), (6, 7), (6, 8)];
const MAX_EMB_9: &[(Vertex, Vertex)] = &[
    (1, 4),
    (1, 6),
    (1, 9),
    (2, 3),
    (2, 5),
    (2, 8),
    (3, 7),
    (3, 9),
    (4, 7),
    (4, 9),
    (5, 7),
    (5, 8),
    (6, 7),
    (6, 8),
    (8, 9),
];
const MAX_EMB_10: &[(Vertex, Vertex)] = &[
    (1, 4),
    (1, 8),
    (1, 10),
    (2, 3),
    (2, 7),
    (2, 10),
    (3, 7),
    (3, 9),
    (4, 8),
    (4, 9),
    (5, 7),
    (5, 8),
    (5, 10),
    (6, 7),
    (6, 8),
    (6, 9),
    (9, 10),
];
const MAX_EMB_11: &[(Vertex, Vertex)] = &[
    (1, 2),
    (1, 10),
    (1, 11),
    (2, 8),
    (2, 9),
    (3, 7),
    (3, 9),
    (3, 10),
    (4, 7),
    (4, 10),
    (4, 11),
    (5, 7),
    (5, 8),
    (5, 9),
    (6, 7),
    (6, 8),
    (6, 11),
    (8, 11),
    (9, 10),
];
const MAX_EMB_12: &[(Vertex, Vertex)] = &[
    (1, 10),
    (1, 11),
    (1, 12),
    (2, 9),
    (2, 11),
    (2, 12),
    (3, 8),
    (3, 10),
    (3, 12),
    (4, 7),
    (4, 9),
    (4, 11),
    (5, 7),
    (5, 8),
    (5, 10),
    (6, 7),
    (6, 8),
    (6, 9),
    (7, 12),
    (8, 11),
    (9, 10),
];

/// Names accepted by [`catalog`], with their parameter signature.
pub fn catalog_names() -> &'static [&'static str] {
    &[
        "Cycle(n)",
        "Path(n)",
        "Complete(n)",
        "CompleteBipartite(m,n)",
        "ThreePrism",
        "Q1",
        "Diamond",
        "NoNAC",
        "MaxEmbeddingsLaman(n)  6 <= n <= 12",
        "K33",
        "C<n>, P<n>, K<n>  shorthands, e.g. C4, K2",
    ]
}

fn one_param(name: &str, params: &[u32], min: u32) -> Result<u32, GraphError> {
    match params {
        [n] if *n >= min => Ok(*n),
        [n] => Err(GraphError::BadParams(format!("{name} needs n >= {min}, got {n}"))),
        _ => Err(GraphError::BadParams(format!("{name} takes one parameter, got {}", params.len()))),
    }
}

fn no_params(name: &str, params: &[u32]) -> Result<(), GraphError> {
    if params.is_empty() {
        Ok(())
    } else {
        Err(GraphError::BadParams(format!("{name} takes no parameters")))
    }
}

fn build(edges: &[(Vertex, Vertex)], vertices: Option<&[Vertex]>) -> FlexGraph {
    FlexGraph::new(edges, vertices).expect("catalog edge lists are simple")
}

fn cycle(n: u32) -> FlexGraph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(&edges, None)
}

fn path(n: u32) -> FlexGraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    let vs: Vec<Vertex> = (0..n).collect();
    build(&edges, Some(&vs))
}

fn complete(n: u32) -> FlexGraph {
    let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let vs: Vec<Vertex> = (0..n).collect();
    build(&edges, Some(&vs))
}

fn complete_bipartite(m: u32, n: u32) -> FlexGraph {
    let edges: Vec<_> = (0..m).flat_map(|i| (m..m + n).map(move |j| (i, j))).collect();
    let vs: Vec<Vertex> = (0..m + n).collect();
    build(&edges, Some(&vs))
}

fn max_embeddings_laman(n: u32) -> Result<FlexGraph, GraphError> {
    let edges: Vec<(Vertex, Vertex)> = match n {
        6 => THREE_PRISM.iter().map(|&(a, b)| (a + 1, b + 1)).collect(),
        7 => MAX_EMB_7.to_vec(),
        8 => MAX_EMB_8.to_vec(),
        9 => MAX_EMB_9.to_vec(),
        10 => MAX_EMB_10.to_vec(),
        11 => MAX_EMB_11.to_vec(),
        12 => MAX_EMB_12.to_vec(),
        _ => return Err(GraphError::BadParams(format!("MaxEmbeddingsLaman is available for 6 <= n <= 12, got {n}"))),
    };
    Ok(build(&edges, None))
}

/// Looks up a named graph. Names are case-insensitive.
pub fn catalog(name: &str, params: &[u32]) -> Result<FlexGraph, GraphError> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "cycle" => Ok(cycle(one_param(name, params, 3)?)),
        "path" => Ok(path(one_param(name, params, 1)?)),
        "complete" => Ok(complete(one_param(name, params, 1)?)),
        "completebipartite" => match params {
            [m, n] if *m > 0 && *n > 0 => Ok(complete_bipartite(*m, *n)),
            _ => Err(GraphError::BadParams("CompleteBipartite takes two positive parameters".into())),
        },
        "threeprism" => no_params(name, params).map(|_| build(THREE_PRISM, None)),
        "q1" => no_params(name, params).map(|_| build(Q1, None)),
        "diamond" => no_params(name, params).map(|_| build(DIAMOND, None)),
        "nonac" => no_params(name, params).map(|_| build(NO_NAC, None)),
        "maxembeddingslaman" => max_embeddings_laman(one_param(name, params, 6)?),
        "k33" => no_params(name, params).map(|_| complete_bipartite(3, 3)),
        _ => shorthand(&lower, params).ok_or_else(|| GraphError::UnknownName(name.to_string()))?,
    }
}

fn shorthand(lower: &str, params: &[u32]) -> Option<Result<FlexGraph, GraphError>> {
    if lower.len() < 2 || !lower.is_char_boundary(1) {
        return None;
    }
    let (head, digits) = lower.split_at(1);
    let n: u32 = digits.parse().ok()?;
    let full = match head {
        "c" => "Cycle",
        "p" => "Path",
        "k" => "Complete",
        _ => return None,
    };
    if !params.is_empty() {
        return Some(Err(GraphError::BadParams(format!("{lower} takes no parameters"))));
    }
    Some(catalog(full, &[n]))
}

/// Parses `Name` or `Name(p1,p2,...)`, e.g. `CompleteBipartite(2,3)`.
pub fn parse_catalog(text: &str) -> Result<FlexGraph, GraphError> {
    let text = text.trim();
    let (name, params) = match text.find('(') {
        None => (text, Vec::new()),
        Some(open) => {
            let inner = text[open + 1..]
                .strip_suffix(')')
                .ok_or_else(|| GraphError::BadParams(format!("missing ')' in {text:?}")))?;
            let params =
                inner.split(',').map(|p| p.trim().parse::<u32>()).collect::<Result<Vec<_>, _>>().map_err(|_| {
                    GraphError::BadParams(format!("parameters of {text:?} must be non-negative integers"))
                })?;
            (&text[..open], params)
        }
    };
    if name.is_empty() {
        return Err(GraphError::UnknownName(text.to_string()));
    }
    catalog(name, &params)
}
