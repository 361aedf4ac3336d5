//! Automorphism group enumeration by colour refinement and backtracking.

use std::collections::BTreeMap;

use super::{Edge, FlexGraph, GraphError, Vertex};

pub const DEFAULT_MAX_VERTICES: usize = 16;

/// Vertex bound for automorphism search; `FLEXRIG_MAX_VERTICES` overrides the default.
pub fn automorphism_bound() -> usize {
    std::env::var("FLEXRIG_MAX_VERTICES").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_MAX_VERTICES)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Automorphism {
    pub mapping: BTreeMap<Vertex, Vertex>,
}

impl Automorphism {
    pub fn identity(g: &FlexGraph) -> Self {
        Automorphism { mapping: g.vertices().iter().map(|&v| (v, v)).collect() }
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.mapping[&v]
    }

    pub fn apply_edge(&self, e: &Edge) -> Edge {
        Edge::new(self.apply(e.u()), self.apply(e.v()))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism { mapping: other.mapping.iter().map(|(&v, &w)| (v, self.apply(w))).collect() }
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism { mapping: self.mapping.iter().map(|(&v, &w)| (w, v)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().all(|(v, w)| v == w)
    }
}

pub fn automorphisms(g: &FlexGraph) -> Result<Vec<Automorphism>, GraphError> {
    automorphisms_bounded(g, automorphism_bound())
}

/// All automorphisms of `g`, identity first, in lexicographic order of image lists.
pub fn automorphisms_bounded(g: &FlexGraph, bound: usize) -> Result<Vec<Automorphism>, GraphError> {
    let n = g.num_vertices();
    if n > bound {
        return Err(GraphError::TooLarge { vertices: n, bound });
    }
    let adj = adjacency_matrix(g);
    let colour = refine(&adj);
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut found = Vec::new();
    search(0, &adj, &colour, &mut image, &mut used, &mut found);
    let vs = g.vertices();
    Ok(found
        .into_iter()
        .map(|img| Automorphism { mapping: img.iter().enumerate().map(|(i, &j)| (vs[i], vs[j])).collect() })
        .collect())
}

fn adjacency_matrix(g: &FlexGraph) -> Vec<Vec<bool>> {
    let n = g.num_vertices();
    let mut adj = vec![vec![false; n]; n];
    for (i, j) in g.edge_positions() {
        adj[i][j] = true;
        adj[j][i] = true;
    }
    adj
}

/// Stable colouring: start from degrees, split by multisets of neighbour colours.
fn refine(adj: &[Vec<bool>]) -> Vec<usize> {
    let n = adj.len();
    let mut colour: Vec<usize> = adj.iter().map(|r| r.iter().filter(|&&b| b).count()).collect();
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&w| adj[v][w]).map(|w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = keys.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = keys.iter().map(|k| distinct.binary_search(k).expect("key")).collect();
        let before = {
            let mut c = colour.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        colour = next;
        if distinct.len() == before {
            return colour;
        }
    }
}

fn search(
    v: usize,
    adj: &[Vec<bool>],
    colour: &[usize],
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    found: &mut Vec<Vec<usize>>,
) {
    let n = adj.len();
    if v == n {
        found.push(image.clone());
        return;
    }
    for w in 0..n {
        if used[w] || colour[w] != colour[v] {
            continue;
        }
        if (0..v).any(|u| adj[u][v] != adj[image[u]][w]) {
            continue;
        }
        image[v] = w;
        used[w] = true;
        search(v + 1, adj, colour, image, used, found);
        used[w] = false;
    }
    image[v] = usize::MAX;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{catalog, parse_catalog};
    use std::collections::BTreeSet;

    #[test]
    fn group_orders() {
        assert_eq!(automorphisms(&catalog("Cycle", &[4]).unwrap()).unwrap().len(), 8);
        assert_eq!(automorphisms(&catalog("Complete", &[4]).unwrap()).unwrap().len(), 24);
        let p3 = automorphisms(&catalog("Path", &[3]).unwrap()).unwrap();
        assert_eq!(p3.len(), 2);
        assert!(p3[0].is_identity());
        assert_eq!(p3[1].apply(0), 2);
        assert_eq!(automorphisms(&catalog("ThreePrism", &[]).unwrap()).unwrap().len(), 12);
    }

    #[test]
    fn too_large() {
        let g = catalog("Cycle", &[5]).unwrap();
        assert_eq!(automorphisms_bounded(&g, 4), Err(GraphError::TooLarge { vertices: 5, bound: 4 }));
    }

    #[test]
    fn closed_under_composition_and_inverse() {
        for name in ["C5", "K33", "ThreePrism", "Q1", "Diamond", "MaxEmbeddingsLaman(7)"] {
            let g = parse_catalog(name).unwrap();
            let auts = automorphisms(&g).unwrap();
            let set: BTreeSet<_> = auts.iter().cloned().collect();
            assert_eq!(set.len(), auts.len());
            for a in &auts {
                assert!(set.contains(&a.inverse()), "{name}");
                for e in g.edges() {
                    assert!(g.has_edge(a.apply_edge(e).u(), a.apply_edge(e).v()));
                }
                for b in &auts {
                    assert!(set.contains(&a.compose(b)), "{name}");
                }
            }
        }
    }
}
