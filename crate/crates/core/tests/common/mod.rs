//! Brute-force reference implementations used as test oracles.
#![allow(dead_code)]

use std::collections::BTreeSet;

use flexrig::algebra::{Poly, RatFunc, RatPoint2};
use flexrig::graph::{Edge, FlexGraph, Vertex};

/// Every simple cycle, as its edge list, found by DFS from its smallest vertex.
pub fn simple_cycles(g: &FlexGraph) -> Vec<Vec<Edge>> {
    let mut found: BTreeSet<Vec<Edge>> = BTreeSet::new();
    for &s in g.vertices() {
        let mut path = vec![s];
        extend_cycles(g, s, &mut path, &mut found);
    }
    found.into_iter().collect()
}

fn extend_cycles(g: &FlexGraph, s: Vertex, path: &mut Vec<Vertex>, found: &mut BTreeSet<Vec<Edge>>) {
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w == s && path.len() >= 3 {
            let mut cyc: Vec<Edge> = path.windows(2).map(|p| Edge::new(p[0], p[1])).collect();
            cyc.push(Edge::new(last, s));
            cyc.sort();
            found.insert(cyc);
        } else if w > s && !path.contains(&w) {
            path.push(w);
            extend_cycles(g, s, path, found);
            path.pop();
        }
    }
}

/// Straight from the definition: surjective, and no cycle has exactly one edge of a colour.
pub fn is_nac_by_cycles(g: &FlexGraph, cycles: &[Vec<Edge>], red: &BTreeSet<Edge>) -> bool {
    if red.is_empty() || red.len() == g.num_edges() {
        return false;
    }
    cycles.iter().all(|c| {
        let r = c.iter().filter(|e| red.contains(e)).count();
        r != 1 && c.len() - r != 1
    })
}

/// Red sets of all NAC-colorings with the smallest edge red, by trying all subsets.
pub fn brute_nac(g: &FlexGraph) -> Vec<Vec<Edge>> {
    let m = g.num_edges();
    assert!(m <= 20, "brute force is for small graphs");
    let cycles = simple_cycles(g);
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << m) {
        if mask & 1 == 0 {
            continue;
        }
        let red: BTreeSet<Edge> = (0..m).filter(|&k| mask >> k & 1 == 1).map(|k| g.edges()[k]).collect();
        if is_nac_by_cycles(g, &cycles, &red) {
            out.push(red.into_iter().collect());
        }
    }
    out.sort();
    out
}

/// All simple paths from `u` to `v`, as edge lists.
pub fn simple_paths(g: &FlexGraph, u: Vertex, v: Vertex) -> Vec<Vec<Edge>> {
    fn go(g: &FlexGraph, v: Vertex, path: &mut Vec<Vertex>, out: &mut Vec<Vec<Edge>>) {
        let last = *path.last().unwrap();
        if last == v {
            out.push(path.windows(2).map(|p| Edge::new(p[0], p[1])).collect());
            return;
        }
        for &w in g.neighbors(last) {
            if !path.contains(&w) {
                path.push(w);
                go(g, v, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, v, &mut vec![u], &mut out);
    out
}

/// Unicolor pairs by checking every simple path against every coloring.
pub fn brute_unicolor(g: &FlexGraph) -> Vec<Edge> {
    let colorings: Vec<BTreeSet<Edge>> = brute_nac(g).into_iter().map(|r| r.into_iter().collect()).collect();
    let mut out = Vec::new();
    for e in g.non_edges() {
        let ok = simple_paths(g, e.u(), e.v()).iter().any(|p| {
            colorings.iter().all(|red| {
                let r = p.iter().filter(|x| red.contains(x)).count();
                r == 0 || r == p.len()
            })
        });
        if ok {
            out.push(e);
        }
    }
    out
}

/// Edges forced equal by triangles, by repeated merging until nothing changes.
pub fn brute_triangle_classes(g: &FlexGraph) -> Vec<BTreeSet<Edge>> {
    let mut classes: Vec<BTreeSet<Edge>> = g.edges().iter().map(|e| BTreeSet::from([*e])).collect();
    let vs = g.vertices();
    let mut triangles = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for (j, &b) in vs.iter().enumerate().skip(i + 1) {
            for &c in &vs[j + 1..] {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    triangles.push([Edge::new(a, b), Edge::new(b, c), Edge::new(a, c)]);
                }
            }
        }
    }
    loop {
        let mut merged = false;
        for t in &triangles {
            let idx: BTreeSet<usize> = t.iter().map(|e| classes.iter().position(|c| c.contains(e)).unwrap()).collect();
            if idx.len() > 1 {
                let idx: Vec<usize> = idx.into_iter().rev().collect();
                let mut union = BTreeSet::new();
                for &k in &idx {
                    union.extend(classes.remove(k));
                }
                classes.push(union);
                merged = true;
            }
        }
        if !merged {
            break;
        }
    }
    classes.sort();
    classes
}

pub fn rf(num: &[i64], den: &[i64]) -> RatFunc {
    RatFunc::new(Poly::from_ints(num), Poly::from_ints(den)).unwrap()
}

/// Pairs whose squared distance is constant.
pub fn constant_pairs(points: &[(Vertex, RatPoint2)]) -> Vec<Edge> {
    let mut out = Vec::new();
    for (i, (u, p)) in points.iter().enumerate() {
        for (v, q) in &points[i + 1..] {
            if p.sub(q).norm_sq().is_constant().is_some() {
                out.push(Edge::new(*u, *v));
            }
        }
    }
    out.sort();
    out
}

/// The prism motion as printed: `(i + j sin, j cos)` written out by hand.
pub fn printed_prism_motion() -> Vec<(Vertex, RatPoint2)> {
    let sin = rf(&[0, -2], &[1, 0, 1]);
    let cos = rf(&[-1, 0, 1], &[1, 0, 1]);
    let c = |k: i64| RatFunc::constant(flexrig::algebra::int(k));
    vec![
        (0, RatPoint2::new(c(0), c(0))),
        (1, RatPoint2::new(&sin + &c(1), cos.clone())),
        (2, RatPoint2::new(&(&sin + &sin) + &c(1), &cos + &cos)),
        (3, RatPoint2::new(&sin + &sin, &cos + &cos)),
        (4, RatPoint2::new(sin.clone(), cos.clone())),
        (5, RatPoint2::new(c(1), c(0))),
    ]
}

/// The fixed-edge Q1 motion as printed, coefficients typed in ascending order.
pub fn printed_q1_motion() -> Vec<(Vertex, RatPoint2)> {
    let d2 = [1, 0, 1];
    let d4 = [4, 0, 5, 0, 1];
    let c = |k: i64| RatFunc::constant(flexrig::algebra::int(k));
    vec![
        (1, RatPoint2::new(rf(&[-3, 0, 3], &d2), rf(&[0, -6], &d2))),
        (2, RatPoint2::new(rf(&[4, 0, 23, 0, 1], &d4), rf(&[0, -12, 0, 6], &d4))),
        (3, RatPoint2::new(rf(&[-2, 0, 4], &d2), rf(&[0, -6], &d2))),
        (4, RatPoint2::new(rf(&[0, 0, 18], &d4), rf(&[0, -12, 0, 6], &d4))),
        (5, RatPoint2::new(c(0), c(0))),
        (6, RatPoint2::new(c(2), c(0))),
        (7, RatPoint2::new(c(1), c(0))),
    ]
}

/// Catalog graphs small enough for the subset oracle.
pub const SMALL_CATALOG: &[&str] = &[
    "K2",
    "K3",
    "K4",
    "K5",
    "C3",
    "C4",
    "C5",
    "C6",
    "C8",
    "P2",
    "P4",
    "Diamond",
    "ThreePrism",
    "Q1",
    "K33",
    "CompleteBipartite(2,3)",
    "CompleteBipartite(2,4)",
    "CompleteBipartite(3,4)",
    "NoNAC",
    "MaxEmbeddingsLaman(6)",
    "MaxEmbeddingsLaman(7)",
];
