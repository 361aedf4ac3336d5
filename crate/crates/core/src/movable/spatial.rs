use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{linear_solve, LinearSolution, Rational};
use crate::graph::{Edge, FlexGraph, Vertex};
use crate::nac::{Color, NacColoring};

/// The four edge directions of a spatial embedding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DirectionClass {
    A,
    B,
    C,
    Diag,
}

impl DirectionClass {
    pub const ALL: [DirectionClass; 4] =
        [DirectionClass::A, DirectionClass::B, DirectionClass::C, DirectionClass::Diag];

    pub fn direction(self) -> [i64; 3] {
        match self {
            DirectionClass::A => [1, 0, 0],
            DirectionClass::B => [0, 1, 0],
            DirectionClass::C => [0, 0, 1],
            DirectionClass::Diag => [-1, -1, -1],
        }
    }
}

/// Injective map `V → Q³` with every edge parallel to one of the four directions.
///
/// For an edge `uv` with `u < v`: `omega(v) - omega(u) = edge_scalar(uv) * direction(class_of(uv))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpatialEmbedding {
    pub omega: BTreeMap<Vertex, [Rational; 3]>,
    pub edge_scalar: BTreeMap<Edge, Rational>,
    pub class_of: BTreeMap<Edge, DirectionClass>,
    /// Colours `(δ₁, δ₂)` of the generating pair for each class.
    pub color_pair: BTreeMap<DirectionClass, (Color, Color)>,
}

impl SpatialEmbedding {
    /// Checks the parallelism equations, injectivity, nonzero scalars and
    /// that all four classes occur.
    pub fn validate(&self, g: &FlexGraph) -> Result<(), String> {
        if self.omega.keys().ne(g.vertices().iter()) {
            return Err("omega must be defined exactly on the vertices".into());
        }
        for e in g.edges() {
            let (Some(t), Some(c)) = (self.edge_scalar.get(e), self.class_of.get(e)) else {
                return Err(format!("edge {e} has no scalar or class"));
            };
            if t.is_zero() {
                return Err(format!("edge {e} has scalar 0"));
            }
            let d = c.direction();
            let (a, b) = (&self.omega[&e.u()], &self.omega[&e.v()]);
            if (0..3).any(|k| &b[k] - &a[k] != t * Rational::from_integer(d[k].into())) {
                return Err(format!("edge {e} is not parallel to its direction"));
            }
        }
        if self.edge_scalar.len() != g.num_edges() || self.class_of.len() != g.num_edges() {
            return Err("scalars or classes given for non-edges".into());
        }
        for c in DirectionClass::ALL {
            if !self.class_of.values().any(|&x| x == c) {
                return Err(format!("direction class {c:?} is empty"));
            }
        }
        let mut pts: Vec<&[Rational; 3]> = self.omega.values().collect();
        pts.sort();
        if pts.windows(2).any(|w| w[0] == w[1]) {
            return Err("omega is not injective".into());
        }
        Ok(())
    }
}

/// Colour-pair classes in the order they take the directions A, B, C.
const PAIR_ORDER: [(Color, Color); 4] =
    [(Color::Red, Color::Red), (Color::Blue, Color::Red), (Color::Red, Color::Blue), (Color::Blue, Color::Blue)];

/// Order in which the classes are tried for the diagonal.
const DIAG_ORDER: [(Color, Color); 4] =
    [(Color::Blue, Color::Blue), (Color::Blue, Color::Red), (Color::Red, Color::Blue), (Color::Red, Color::Red)];

/// `1, 1/2, -1, 1/3, -1/2, 1/4, -1/3, ...`
fn trial_value(i: usize) -> Rational {
    if i == 0 {
        return Rational::one();
    }
    let k = i.div_ceil(2);
    if i % 2 == 1 {
        Rational::new(1.into(), ((k + 1) as i64).into())
    } else {
        Rational::new((-1).into(), (k as i64).into())
    }
}

const TRIALS: usize = 64;

fn combine(basis: &[Vec<Rational>], lambda: &[Rational]) -> Vec<Rational> {
    let len = basis.first().map_or(0, Vec::len);
    let mut x = vec![Rational::zero(); len];
    for (b, l) in basis.iter().zip(lambda) {
        for (xi, bi) in x.iter_mut().zip(b) {
            *xi += bi * l;
        }
    }
    x
}

/// Tries to build a spatial embedding whose direction classes are the colour
/// pairs of `(c1, c2)`.
pub fn spatial_embedding(g: &FlexGraph, c1: &NacColoring, c2: &NacColoring) -> Option<SpatialEmbedding> {
    if c1 == c2 {
        return None;
    }
    let pairs: Vec<(Color, Color)> =
        g.edges().iter().map(|e| Some((c1.color(e)?, c2.color(e)?))).collect::<Option<_>>()?;
    if PAIR_ORDER.iter().any(|p| !pairs.contains(p)) {
        return None;
    }
    DIAG_ORDER.iter().find_map(|&diag| embed_with_diagonal(g, &pairs, diag))
}

fn embed_with_diagonal(g: &FlexGraph, pairs: &[(Color, Color)], diag: (Color, Color)) -> Option<SpatialEmbedding> {
    let axes: Vec<(Color, Color)> = PAIR_ORDER.iter().copied().filter(|&p| p != diag).collect();
    let class_for = |p: (Color, Color)| -> DirectionClass {
        if p == diag {
            return DirectionClass::Diag;
        }
        [DirectionClass::A, DirectionClass::B, DirectionClass::C][axes.iter().position(|&a| a == p).expect("axis")]
    };
    let classes: Vec<DirectionClass> = pairs.iter().map(|&p| class_for(p)).collect();

    let m = g.num_edges();
    let n = g.num_vertices();
    let cols = m + 3 * n;
    let om = |vpos: usize, k: usize| m + 3 * vpos + k;
    let zero = Rational::zero;
    let mut rows = Vec::with_capacity(3 * m + 3);
    for (idx, (a, b)) in g.edge_positions().into_iter().enumerate() {
        let d = classes[idx].direction();
        for k in 0..3 {
            let mut r = vec![zero(); cols];
            r[om(b, k)] = Rational::one();
            r[om(a, k)] = -Rational::one();
            r[idx] = -Rational::from_integer(d[k].into());
            rows.push(r);
        }
    }
    for k in 0..3 {
        let mut r = vec![zero(); cols];
        r[om(0, k)] = Rational::one();
        rows.push(r);
    }
    let rhs = vec![zero(); rows.len()];
    let LinearSolution::Solved { nullspace, .. } = linear_solve(&rows, &rhs).ok()? else {
        return None;
    };
    if nullspace.is_empty() {
        return None;
    }

    // forms that must not vanish: each scalar and one coordinate of each vertex difference
    let dim = nullspace.len();
    let form = |f: &dyn Fn(&Vec<Rational>) -> Rational| -> Vec<Rational> { nullspace.iter().map(f).collect() };
    let mut forms: Vec<Vec<Rational>> = Vec::new();
    for e in 0..m {
        let f = form(&|b| b[e].clone());
        if f.iter().all(Zero::is_zero) {
            return None;
        }
        forms.push(f);
    }
    for u in 0..n {
        for v in u + 1..n {
            let f = (0..3).map(|k| form(&|b| &b[om(v, k)] - &b[om(u, k)])).find(|f| f.iter().any(|x| !x.is_zero()))?;
            forms.push(f);
        }
    }
    let avoids = |lambda: &[Rational]| {
        forms.iter().all(|f| !f.iter().zip(lambda).fold(Rational::zero(), |acc, (a, l)| acc + a * l).is_zero())
    };
    let mut lambda: Option<Vec<Rational>> =
        (0..TRIALS).map(|k| (0..dim).map(|i| trial_value(k + i)).collect::<Vec<_>>()).find(|l| avoids(l));
    if lambda.is_none() {
        // points on the moment curve: each form vanishes at no more than dim - 1 of them
        let limit = forms.len() * dim + 1;
        lambda = (0..limit)
            .map(|k| {
                let x = Rational::from_integer(((k + 2) as i64).into());
                (0..dim).map(|i| num_traits::pow(x.clone(), i)).collect::<Vec<_>>()
            })
            .find(|l| avoids(l));
    }
    let x = combine(&nullspace, &lambda?);

    let vs = g.vertices();
    let omega = (0..n).map(|p| (vs[p], std::array::from_fn(|k| x[om(p, k)].clone()))).collect();
    let edge_scalar = g.edges().iter().enumerate().map(|(i, e)| (*e, x[i].clone())).collect();
    let class_of = g.edges().iter().zip(&classes).map(|(e, c)| (*e, *c)).collect();
    let color_pair = PAIR_ORDER.iter().map(|&p| (class_for(p), p)).collect();
    Some(SpatialEmbedding { omega, edge_scalar, class_of, color_pair })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use crate::graph::catalog;
    use crate::nac::nac_colorings;

    #[test]
    fn trial_sequence() {
        let got: Vec<Rational> = (0..7).map(trial_value).collect();
        assert_eq!(got, vec![int(1), rat(1, 2), int(-1), rat(1, 3), rat(-1, 2), rat(1, 4), rat(-1, 3)]);
    }

    #[test]
    fn c4_embedding() {
        let g = catalog("Cycle", &[4]).unwrap();
        let cs = nac_colorings(&g, false);
        let emb = spatial_embedding(&g, &cs[0], &cs[1]).unwrap();
        emb.validate(&g).unwrap();
        for t in emb.edge_scalar.values() {
            assert!(t == &int(1) || t == &int(-1));
        }
        assert!(spatial_embedding(&g, &cs[0], &cs[0]).is_none());
    }
}
