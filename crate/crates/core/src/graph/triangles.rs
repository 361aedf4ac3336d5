use super::{Edge, FlexGraph, UnionFind};

/// Partition of the edges into triangle-connected components.
///
/// Two edges of a common triangle are in the same component, closed
/// transitively. Components are ordered by their smallest edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrianglePartition {
    pub components: Vec<Vec<Edge>>,
    /// Component index per edge, in the graph's edge order.
    pub edge_to_component: Vec<usize>,
}

impl TrianglePartition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component_of(&self, g: &FlexGraph, e: &Edge) -> Option<usize> {
        g.edge_index(e).map(|i| self.edge_to_component[i])
    }
}

pub fn triangle_components(g: &FlexGraph) -> TrianglePartition {
    let edges = g.edges();
    let mut uf = UnionFind::new(edges.len());
    for (i, e) in edges.iter().enumerate() {
        // common neighbours w close a triangle (u, v, w)
        let (nu, nv) = (g.neighbors(e.u()), g.neighbors(e.v()));
        let (mut a, mut b) = (0, 0);
        while a < nu.len() && b < nv.len() {
            match nu[a].cmp(&nv[b]) {
                std::cmp::Ordering::Less => a += 1,
                std::cmp::Ordering::Greater => b += 1,
                std::cmp::Ordering::Equal => {
                    let w = nu[a];
                    for f in [Edge::new(e.u(), w), Edge::new(e.v(), w)] {
                        uf.union(i, g.edge_index(&f).expect("triangle edge"));
                    }
                    a += 1;
                    b += 1;
                }
            }
        }
    }
    let mut root_to_comp = vec![usize::MAX; edges.len()];
    let mut components: Vec<Vec<Edge>> = Vec::new();
    let mut edge_to_component = Vec::with_capacity(edges.len());
    for (i, e) in edges.iter().enumerate() {
        let r = uf.find(i);
        if root_to_comp[r] == usize::MAX {
            root_to_comp[r] = components.len();
            components.push(Vec::new());
        }
        components[root_to_comp[r]].push(*e);
        edge_to_component.push(root_to_comp[r]);
    }
    TrianglePartition { components, edge_to_component }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;

    #[test]
    fn cycle_has_singletons() {
        let p = triangle_components(&catalog("Cycle", &[4]).unwrap());
        assert_eq!(p.len(), 4);
        assert!(p.components.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn complete_four_is_one_component() {
        let p = triangle_components(&catalog("Complete", &[4]).unwrap());
        assert_eq!(p.len(), 1);
        assert_eq!(p.components[0].len(), 6);
    }

    #[test]
    fn three_prism() {
        let g = catalog("ThreePrism", &[]).unwrap();
        let p = triangle_components(&g);
        let mut sizes: Vec<usize> = p.components.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 1, 3, 3]);
        assert_eq!(p.component_of(&g, &Edge::new(0, 3)), p.component_of(&g, &Edge::new(3, 4)));
    }
}
