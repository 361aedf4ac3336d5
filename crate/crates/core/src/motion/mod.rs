//! Parametric motions with exact rational-function coordinates.

mod grid;
mod spatial;
mod svg;

pub use grid::{grid_motion, grid_placement, parse_zigzag, GridPlacement, ZigZag};
pub use spatial::{spatial_motion, DEFAULT_COUPLING};
pub use svg::{animation_svg, SvgOptions, BLUE, NEUTRAL, RED};

use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::algebra::{rational_sqrt, to_f64, AlgebraError, Poly, RatFunc, RatPoint2, Rational};
use crate::graph::{Edge, FlexGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MotionError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("zig-zag base list {which} has {given} points, {needed} needed")]
    BaseListTooShort { which: &'static str, given: usize, needed: usize },
    #[error("invalid zig-zag base points: {0}")]
    BadZigZag(String),
    #[error("{0} is not an edge of the graph")]
    NotAnEdge(Edge),
    #[error("edge {edge} has squared length {length_sq}, which is not the square of a rational")]
    IrrationalLength { edge: Edge, length_sq: String },
    #[error("edge {0} does not keep a constant length")]
    NonConstantLength(Edge),
    #[error("edge {0} has length zero")]
    DegenerateEdge(Edge),
    #[error("the coloring does not belong to this graph")]
    ForeignColoring,
    #[error("invalid spatial embedding: {0}")]
    InvalidEmbedding(String),
    #[error("invalid option: {0}")]
    InvalidOption(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// How the parametrization is printed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DisplayMode {
    /// `sin(alpha)`/`cos(alpha)` with `t` the half-angle parameter.
    Trig,
    Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Grid,
    ZigZag,
    Spatial,
    Given,
}

/// Vertex positions as rational functions of one parameter `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParametricMotion {
    graph: FlexGraph,
    points: BTreeMap<Vertex, RatPoint2>,
    display: DisplayMode,
    provenance: Provenance,
}

impl ParametricMotion {
    /// Motion from explicit positions; every vertex of `graph` needs one.
    pub fn new(graph: FlexGraph, points: BTreeMap<Vertex, RatPoint2>) -> Result<Self, MotionError> {
        if let Some(v) = graph.vertices().iter().find(|v| !points.contains_key(v)) {
            return Err(MotionError::InvalidEmbedding(format!("vertex {v} has no position")));
        }
        if points.len() != graph.num_vertices() {
            return Err(MotionError::InvalidEmbedding("positions given for unknown vertices".into()));
        }
        Ok(ParametricMotion { graph, points, display: DisplayMode::Rational, provenance: Provenance::Given })
    }

    pub(crate) fn from_parts(
        graph: FlexGraph,
        points: BTreeMap<Vertex, RatPoint2>,
        display: DisplayMode,
        provenance: Provenance,
    ) -> Self {
        ParametricMotion { graph, points, display, provenance }
    }

    pub fn graph(&self) -> &FlexGraph {
        &self.graph
    }

    pub fn points(&self) -> &BTreeMap<Vertex, RatPoint2> {
        &self.points
    }

    pub fn point(&self, v: Vertex) -> &RatPoint2 {
        &self.points[&v]
    }

    pub fn display(&self) -> DisplayMode {
        self.display
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn with_display(mut self, display: DisplayMode) -> Self {
        self.display = display;
        self
    }

    pub fn distance_sq(&self, u: Vertex, v: Vertex) -> RatFunc {
        self.point(u).sub(self.point(v)).norm_sq()
    }

    /// Numeric placement at parameter value `t`.
    pub fn sample(&self, t: f64) -> BTreeMap<Vertex, (f64, f64)> {
        self.points.iter().map(|(&v, p)| (v, p.eval_f64(t))).collect()
    }

    /// Numeric placement at rotation angle `alpha`, using `t = -cot(alpha/2)`
    /// so that `(cos, sin)` of the half-angle curve equals `(cos alpha, sin alpha)`.
    pub fn sample_angle(&self, alpha: f64) -> BTreeMap<Vertex, (f64, f64)> {
        let half = alpha / 2.0;
        if half.sin().abs() < 1e-12 {
            return self.points.iter().map(|(&v, p)| (v, (at_infinity_f64(&p.x), at_infinity_f64(&p.y)))).collect();
        }
        self.sample(-half.cos() / half.sin())
    }

    /// `{v: (x, y), ...}` in vertex order, one vertex per line.
    pub fn parametrization(&self) -> String {
        let lines: Vec<String> = self
            .points
            .iter()
            .map(|(v, p)| {
                let (x, y) = match self.display {
                    DisplayMode::Trig => (grid::trig_form(&p.x), grid::trig_form(&p.y)),
                    DisplayMode::Rational => (None, None),
                };
                match (x, y) {
                    (Some(x), Some(y)) => format!("{v}: ({x}, {y})"),
                    _ => format!("{v}: ({}, {})", p.x, p.y),
                }
            })
            .collect();
        format!("{{{}}}", lines.join(",\n "))
    }

    pub fn to_json(&self) -> Value {
        let mut vs = Map::new();
        for (v, p) in &self.points {
            vs.insert(v.to_string(), json!({"x": ratfunc_json(&p.x), "y": ratfunc_json(&p.y)}));
        }
        let display = match self.display {
            DisplayMode::Trig => "trig",
            DisplayMode::Rational => "rational",
        };
        json!({"parameter": "t", "display": display, "vertices": Value::Object(vs)})
    }
}

fn at_infinity_f64(f: &RatFunc) -> f64 {
    f.eval_at_infinity().map_or(f64::NAN, |q| to_f64(&q))
}

fn rational_json(q: &Rational) -> Value {
    let part = |n: &num_bigint::BigInt| match i64::try_from(n) {
        Ok(x) => json!(x),
        Err(_) => json!(n.to_string()),
    };
    json!([part(q.numer()), part(q.denom())])
}

fn poly_json(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(rational_json).collect())
}

/// `{"num": [[p, q], ...], "den": [...]}` with ascending coefficients.
pub fn ratfunc_json(f: &RatFunc) -> Value {
    json!({"num": poly_json(f.num()), "den": poly_json(f.den())})
}

/// Summary of the exact properties of a motion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotionAnalysis {
    /// Constant squared lengths of the edges that keep one.
    pub labeling: BTreeMap<Edge, Rational>,
    /// Edges whose length changes along the motion.
    pub varying_edges: Vec<Edge>,
    /// Every edge keeps a constant, nonzero length.
    pub is_flex: bool,
    /// Some vertex pair changes its distance.
    pub nontrivial: bool,
    /// No two vertices coincide identically.
    pub proper: bool,
}

pub fn analyze_motion(m: &ParametricMotion) -> MotionAnalysis {
    let mut labeling = BTreeMap::new();
    let mut varying_edges = Vec::new();
    for e in m.graph.edges() {
        match m.distance_sq(e.u(), e.v()).is_constant() {
            Some(c) => {
                labeling.insert(*e, c);
            }
            None => varying_edges.push(*e),
        }
    }
    let is_flex = varying_edges.is_empty() && labeling.values().all(|c| !c.is_zero());
    let vs = m.graph.vertices();
    let mut nontrivial = false;
    let mut proper = true;
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            let d = m.point(u).sub(m.point(v));
            if d.is_zero() {
                proper = false;
            }
            if !nontrivial && d.norm_sq().is_constant().is_none() {
                nontrivial = true;
            }
        }
    }
    MotionAnalysis { labeling, varying_edges, is_flex, nontrivial, proper }
}

/// Moves every frame so that `u` sits at the origin and `v` on the positive x-axis.
///
/// Needs a constant rational length `l` for `uv`; each frame is mapped by
/// `q(w) = (1/l) [[dx, dy], [-dy, dx]] (p(w) - p(u))` with `(dx, dy) = p(v) - p(u)`.
pub fn fix_edge(m: &ParametricMotion, u: Vertex, v: Vertex) -> Result<ParametricMotion, MotionError> {
    let e = Edge::new(u, v);
    if u == v || !m.graph.has_edge(u, v) {
        return Err(MotionError::NotAnEdge(e));
    }
    let d = m.point(v).sub(m.point(u));
    let l2 = d.norm_sq().is_constant().ok_or(MotionError::NonConstantLength(e))?;
    if l2.is_zero() {
        return Err(MotionError::DegenerateEdge(e));
    }
    let l = rational_sqrt(&l2)
        .ok_or_else(|| MotionError::IrrationalLength { edge: e, length_sq: crate::algebra::fmt_rational(&l2) })?;
    let inv = l.recip();
    let (dx, dy) = (d.x.scale(&inv), d.y.scale(&inv));
    let base = m.point(u).clone();
    let points = m
        .points
        .iter()
        .map(|(&w, p)| {
            let r = p.sub(&base);
            let x = &(&dx * &r.x) + &(&dy * &r.y);
            let y = &(&dx * &r.y) - &(&dy * &r.x);
            (w, RatPoint2::new(x, y))
        })
        .collect();
    Ok(ParametricMotion { points, ..m.clone() })
}
