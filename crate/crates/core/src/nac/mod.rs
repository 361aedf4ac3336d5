//! NAC-colorings: checking, enumeration over triangle components, colour
//! components and isomorphism classes.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{
    automorphisms, components_of, fmt_edge_list, triangle_components, Edge, FlexGraph, GraphError, UnionFind, Vertex,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NacError {
    #[error("edge {0} is not an edge of the graph")]
    UnknownEdge(Edge),
    #[error("the colouring is not a NAC-coloring")]
    NotNac,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn swap(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

/// A NAC-coloring stored up to colour swap: the smallest edge is red.
///
/// Equality and ordering ignore the display name and compare red edge sets.
#[derive(Clone, Debug)]
pub struct NacColoring {
    red: Vec<Edge>,
    blue: Vec<Edge>,
    name: Option<String>,
}

impl PartialEq for NacColoring {
    fn eq(&self, other: &Self) -> bool {
        self.red == other.red && self.blue == other.blue
    }
}

impl Eq for NacColoring {}

impl PartialOrd for NacColoring {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NacColoring {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.red, &self.blue).cmp(&(&other.red, &other.blue))
    }
}

impl NacColoring {
    /// Canonical colouring of `g` with the given red edges (rest blue).
    /// Validity is checked.
    pub fn from_red(g: &FlexGraph, red: &[Edge]) -> Result<NacColoring, NacError> {
        if !is_nac_coloring(g, red)? {
            return Err(NacError::NotNac);
        }
        Ok(Self::split(g, |e| red.contains(e)))
    }

    fn split(g: &FlexGraph, is_red: impl Fn(&Edge) -> bool) -> NacColoring {
        let (mut red, mut blue): (Vec<Edge>, Vec<Edge>) = g.edges().iter().partition(|e| is_red(e));
        if g.edges().first().is_some_and(|e| !is_red(e)) {
            std::mem::swap(&mut red, &mut blue);
        }
        NacColoring { red, blue, name: None }
    }

    pub fn red(&self) -> &[Edge] {
        &self.red
    }

    pub fn blue(&self) -> &[Edge] {
        &self.blue
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn color(&self, e: &Edge) -> Option<Color> {
        if self.red.binary_search(e).is_ok() {
            Some(Color::Red)
        } else if self.blue.binary_search(e).is_ok() {
            Some(Color::Blue)
        } else {
            None
        }
    }

    pub fn is_red(&self, e: &Edge) -> bool {
        self.red.binary_search(e).is_ok()
    }

    /// Colour swap followed by re-canonicalization.
    pub fn conjugate(&self) -> NacColoring {
        let (mut red, mut blue) = (self.blue.clone(), self.red.clone());
        let smallest_is_blue = match (red.first(), blue.first()) {
            (Some(r), Some(b)) => b < r,
            (None, Some(_)) => true,
            _ => false,
        };
        if smallest_is_blue {
            std::mem::swap(&mut red, &mut blue);
        }
        NacColoring { red, blue, name: self.name.clone() }
    }

    pub fn to_json(&self) -> NacJson {
        NacJson {
            name: self.name.clone(),
            red: self.red.iter().map(|e| [e.u(), e.v()]).collect(),
            blue: self.blue.iter().map(|e| [e.u(), e.v()]).collect(),
        }
    }
}

impl fmt::Display for NacColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = &self.name {
            write!(f, "{n}: ")?;
        }
        write!(
            f,
            "NAC-coloring with red edges {} and blue edges {}",
            fmt_edge_list(&self.red),
            fmt_edge_list(&self.blue)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NacJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub red: Vec<[Vertex; 2]>,
    pub blue: Vec<[Vertex; 2]>,
}

/// Union-find based tester reused across candidates.
struct Checker {
    ends: Vec<(usize, usize)>,
    red: UnionFind,
    blue: UnionFind,
}

impl Checker {
    fn new(g: &FlexGraph) -> Self {
        let n = g.num_vertices();
        Checker { ends: g.edge_positions(), red: UnionFind::new(n), blue: UnionFind::new(n) }
    }

    fn check(&mut self, is_red: &[bool]) -> bool {
        let reds = is_red.iter().filter(|&&r| r).count();
        if reds == 0 || reds == is_red.len() {
            return false;
        }
        self.red.reset();
        self.blue.reset();
        for (&(a, b), &r) in self.ends.iter().zip(is_red) {
            if r {
                self.red.union(a, b);
            } else {
                self.blue.union(a, b);
            }
        }
        self.ends.iter().zip(is_red).all(|(&(a, b), &r)| if r { !self.blue.same(a, b) } else { !self.red.same(a, b) })
    }
}

/// True iff `red` and its complement are nonempty and no edge of one colour
/// joins two vertices of a single component of the other colour.
pub fn is_nac_coloring(g: &FlexGraph, red: &[Edge]) -> Result<bool, NacError> {
    let mut is_red = vec![false; g.num_edges()];
    for e in red {
        let i = g.edge_index(e).ok_or(NacError::UnknownEdge(*e))?;
        is_red[i] = true;
    }
    Ok(Checker::new(g).check(&is_red))
}

/// All NAC-colorings up to colour swap, sorted by red edge set.
pub fn nac_colorings(g: &FlexGraph, first_only: bool) -> Vec<NacColoring> {
    let parts = triangle_components(g);
    let m = parts.len();
    if m < 2 {
        return Vec::new();
    }
    let mut checker = Checker::new(g);
    let mut is_red = vec![false; g.num_edges()];
    let mut out = Vec::new();
    let free = m - 1;
    let all: u64 = (1u64 << free) - 1;
    for mask in 0..all {
        for (k, c) in parts.edge_to_component.iter().zip(is_red.iter_mut()) {
            *c = *k == 0 || (mask >> (*k - 1)) & 1 == 1;
        }
        if checker.check(&is_red) {
            let (red, blue) =
                g.edges().iter().zip(&is_red).fold((Vec::new(), Vec::new()), |(mut r, mut b), (e, &x)| {
                    if x {
                        r.push(*e)
                    } else {
                        b.push(*e)
                    }
                    (r, b)
                });
            out.push(NacColoring { red, blue, name: None });
            if first_only {
                break;
            }
        }
    }
    out.sort();
    out
}

pub fn has_nac_coloring(g: &FlexGraph) -> bool {
    !nac_colorings(g, true).is_empty()
}

/// Connected components of the red and of the blue subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorComponents {
    pub red_components: Vec<Vec<Vertex>>,
    pub blue_components: Vec<Vec<Vertex>>,
    /// vertex ↦ (red component index, blue component index)
    pub indices: BTreeMap<Vertex, (usize, usize)>,
}

pub fn color_components(g: &FlexGraph, c: &NacColoring) -> ColorComponents {
    let red_components = components_of(g.vertices(), c.red.iter());
    let blue_components = components_of(g.vertices(), c.blue.iter());
    let mut indices: BTreeMap<Vertex, (usize, usize)> = BTreeMap::new();
    for (i, comp) in red_components.iter().enumerate() {
        for &v in comp {
            indices.insert(v, (i, 0));
        }
    }
    for (j, comp) in blue_components.iter().enumerate() {
        for &v in comp {
            indices.get_mut(&v).expect("vertex").1 = j;
        }
    }
    ColorComponents { red_components, blue_components, indices }
}

/// Colorings related by a graph automorphism (and colour swap), named by Greek letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NacClass {
    pub letter: String,
    pub members: Vec<NacColoring>,
}

pub const GREEK_LETTERS: [&str; 24] = [
    "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta", "iota", "kappa", "lambda", "mu", "nu", "xi",
    "pi", "rho", "sigma", "tau", "upsilon", "phi", "varphi", "chi", "psi", "omega",
];

/// Letter of the `k`-th class. After the pool is used up, letters repeat
/// with the class number appended (`alpha25`, `beta26`, ...).
pub fn class_letter(k: usize) -> String {
    let l = GREEK_LETTERS[k % GREEK_LETTERS.len()];
    if k < GREEK_LETTERS.len() {
        l.to_string()
    } else {
        format!("{l}{}", k + 1)
    }
}

fn member_name(letter: &str, k: usize, index: usize, size: usize) -> String {
    match (size, k < GREEK_LETTERS.len()) {
        (1, _) => letter.to_string(),
        (_, true) => format!("{letter}{index}"),
        (_, false) => format!("{letter}_{index}"),
    }
}

fn canonical_image(g: &FlexGraph, c: &NacColoring, map: impl Fn(&Edge) -> Edge) -> NacColoring {
    let mut red: Vec<Edge> = c.red.iter().map(&map).collect();
    red.sort_unstable();
    NacColoring::split(g, |e| red.binary_search(e).is_ok())
}

pub fn isomorphism_classes(g: &FlexGraph, colorings: &[NacColoring]) -> Result<Vec<NacClass>, NacError> {
    let auts = automorphisms(g)?;
    let mut sorted: Vec<NacColoring> = colorings.iter().map(|c| NacColoring { name: None, ..c.clone() }).collect();
    sorted.sort();
    sorted.dedup();
    let index: BTreeMap<Vec<Edge>, usize> = sorted.iter().enumerate().map(|(i, c)| (c.red.clone(), i)).collect();
    let mut class_of: Vec<Option<usize>> = vec![None; sorted.len()];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in 0..sorted.len() {
        if class_of[i].is_some() {
            continue;
        }
        let k = groups.len();
        let mut members = Vec::new();
        for a in &auts {
            let img = canonical_image(g, &sorted[i], |e| a.apply_edge(e));
            if let Some(&j) = index.get(&img.red) {
                if class_of[j].is_none() {
                    class_of[j] = Some(k);
                    members.push(j);
                }
            }
        }
        members.sort_unstable();
        groups.push(members);
    }
    Ok(groups
        .into_iter()
        .enumerate()
        .map(|(k, members)| {
            let letter = class_letter(k);
            let size = members.len();
            let members = members
                .into_iter()
                .enumerate()
                .map(|(idx, j)| sorted[j].clone().with_name(member_name(&letter, k, idx + 1, size)))
                .collect();
            NacClass { letter, members }
        })
        .collect())
}
