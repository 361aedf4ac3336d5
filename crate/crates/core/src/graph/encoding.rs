//! Integer encoding of graphs.
//!
//! Bit `k` (least significant first) is the adjacency of the `k`-th vertex
//! pair in column-wise upper-triangle order `(0,1), (0,2), (1,2), (0,3), ...`,
//! where positions refer to the sorted vertex list. This is a local
//! convention; it is not meant to agree with other tools' encodings.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{FlexGraph, GraphError, Vertex};

fn pair_bit(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

pub fn integer_encoding(g: &FlexGraph) -> BigUint {
    let mut n = BigUint::zero();
    for (i, j) in g.edge_positions() {
        n.set_bit(pair_bit(i, j) as u64, true);
    }
    n
}

/// Inverse of [`integer_encoding`] on the vertex set `0..vertex_count`.
pub fn from_integer(n: &BigUint, vertex_count: usize) -> Result<FlexGraph, GraphError> {
    let pairs = vertex_count * vertex_count.saturating_sub(1) / 2;
    if n.bits() > pairs as u64 {
        return Err(GraphError::OutOfRange { value: n.to_string(), vertex_count });
    }
    let mut edges = Vec::new();
    for j in 1..vertex_count {
        for i in 0..j {
            if n.bit(pair_bit(i, j) as u64) {
                edges.push((i as Vertex, j as Vertex));
            }
        }
    }
    let vertices: Vec<Vertex> = (0..vertex_count as Vertex).collect();
    FlexGraph::new(&edges, Some(&vertices))
}

/// Largest valid code for `vertex_count` vertices plus one, i.e. `2^C(k,2)`.
pub fn code_limit(vertex_count: usize) -> BigUint {
    BigUint::one() << (vertex_count * vertex_count.saturating_sub(1) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;

    #[test]
    fn triangle_is_seven() {
        let g = catalog("Complete", &[3]).unwrap();
        assert_eq!(integer_encoding(&g), BigUint::from(7u32));
    }

    #[test]
    fn zero_is_empty_graph() {
        let g = from_integer(&BigUint::zero(), 3).unwrap();
        assert_eq!(g.vertices(), &[0, 1, 2]);
        assert_eq!(g.num_edges(), 0);
    }

    #[test]
    fn cycle_round_trip() {
        let c4 = catalog("Cycle", &[4]).unwrap();
        assert_eq!(from_integer(&integer_encoding(&c4), 4).unwrap(), c4);
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(from_integer(&code_limit(3), 3), Err(GraphError::OutOfRange { .. })));
        assert!(from_integer(&(code_limit(3) - 1u32), 3).unwrap().is_complete());
    }
}
