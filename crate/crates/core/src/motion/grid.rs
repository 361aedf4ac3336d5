use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde_json::Value;

use super::{DisplayMode, MotionError, ParametricMotion, Provenance};
use crate::algebra::{fmt_rational, halfangle_unit, parse_rational, Poly, RatFunc, RatPoint2, Rational};
use crate::graph::{FlexGraph, Vertex};
use crate::nac::{color_components, NacColoring};

/// Grid coordinates of the vertices together with the base points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridPlacement {
    /// vertex ↦ (red component index, blue component index)
    pub coords: BTreeMap<Vertex, (usize, usize)>,
    /// Translation for red component `i`; default `(i, 0)`.
    pub red_base: Vec<(Rational, Rational)>,
    /// Rotating offset for blue component `j`; default `(0, j)`.
    pub blue_base: Vec<(Rational, Rational)>,
}

/// User supplied base points, in the order `[rotated, translated]`:
/// the first list is indexed by blue components, the second by red ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZigZag {
    pub rotated: Vec<(Rational, Rational)>,
    pub translated: Vec<(Rational, Rational)>,
}

fn check_coloring(g: &FlexGraph, c: &NacColoring) -> Result<(), MotionError> {
    let mut all: Vec<_> = c.red().iter().chain(c.blue()).copied().collect();
    all.sort_unstable();
    if all != g.edges() {
        return Err(MotionError::ForeignColoring);
    }
    if !g.is_connected() {
        return Err(MotionError::Disconnected);
    }
    Ok(())
}

pub fn grid_placement(g: &FlexGraph, c: &NacColoring) -> Result<GridPlacement, MotionError> {
    check_coloring(g, c)?;
    let cc = color_components(g, c);
    let zero = Rational::zero;
    let red_base = (0..cc.red_components.len()).map(|i| (Rational::from_integer(i.into()), zero())).collect();
    let blue_base = (0..cc.blue_components.len()).map(|j| (zero(), Rational::from_integer(j.into()))).collect();
    Ok(GridPlacement { coords: cc.indices, red_base, blue_base })
}

/// Grid motion `p(v) = a_i + Rot(t) b_j` for `(i, j)` the component indices of `v`.
///
/// `Rot` maps `(x, y)` to `(x cos + y sin, -x sin + y cos)` along the
/// half-angle unit curve, so the default bases give `(i + j sin, j cos)`.
pub fn grid_motion(g: &FlexGraph, c: &NacColoring, zigzag: Option<&ZigZag>) -> Result<ParametricMotion, MotionError> {
    let mut placement = grid_placement(g, c)?;
    let provenance = match zigzag {
        None => Provenance::Grid,
        Some(z) => {
            let needed_red = placement.red_base.len();
            let needed_blue = placement.blue_base.len();
            if z.rotated.len() < needed_blue {
                return Err(MotionError::BaseListTooShort {
                    which: "rotated",
                    given: z.rotated.len(),
                    needed: needed_blue,
                });
            }
            if z.translated.len() < needed_red {
                return Err(MotionError::BaseListTooShort {
                    which: "translated",
                    given: z.translated.len(),
                    needed: needed_red,
                });
            }
            placement.red_base = z.translated.clone();
            placement.blue_base = z.rotated.clone();
            Provenance::ZigZag
        }
    };
    let unit = halfangle_unit(&Rational::one())?;
    let (cos, sin) = (unit.x, unit.y);
    let points = placement
        .coords
        .iter()
        .map(|(&v, &(i, j))| {
            let (ax, ay) = &placement.red_base[i];
            let (bx, by) = &placement.blue_base[j];
            let x = &(&cos.scale(bx) + &sin.scale(by)) + &RatFunc::constant(ax.clone());
            let y = &(&cos.scale(by) - &sin.scale(bx)) + &RatFunc::constant(ay.clone());
            (v, RatPoint2::new(x, y))
        })
        .collect();
    Ok(ParametricMotion::from_parts(g.clone(), points, DisplayMode::Trig, provenance))
}

/// Writes `f` as `c2*sin(alpha) + c1*cos(alpha) + c0` when it has that shape.
pub(crate) fn trig_form(f: &RatFunc) -> Option<String> {
    let h = f * &RatFunc::from_poly(Poly::from_ints(&[1, 0, 1]));
    if h.den().degree() != Some(0) || h.num().degree().is_some_and(|d| d > 2) {
        return None;
    }
    let k = h.den().coeff(0);
    let q: Vec<Rational> = (0..3).map(|i| h.num().coeff(i) / &k).collect();
    let two = Rational::from_integer(2.into());
    let c0 = (&q[2] + &q[0]) / &two;
    let c_cos = (&q[2] - &q[0]) / &two;
    let c_sin = -&q[1] / &two;
    let mut out = String::new();
    for (c, name) in [(&c_sin, Some("sin(alpha)")), (&c_cos, Some("cos(alpha)")), (&c0, None)] {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let body = match name {
            Some(n) if mag.is_one() => n.to_string(),
            Some(n) => format!("{}*{n}", fmt_rational(&mag)),
            None => fmt_rational(&mag),
        };
        if out.is_empty() {
            out = if c.is_negative() { format!("-{body}") } else { body };
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    Some(out)
}

/// Quotes bare rationals such as `3/4` so the text parses as JSON.
fn quote_fractions(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut token = String::new();
    let flush = |token: &mut String, out: &mut String| {
        if token.contains('/') {
            out.push('"');
            out.push_str(token);
            out.push('"');
        } else {
            out.push_str(token);
        }
        token.clear();
    };
    for ch in text.chars() {
        if ch.is_ascii_digit() || matches!(ch, '/' | '-' | '+' | '.') {
            token.push(ch);
        } else {
            flush(&mut token, &mut out);
            out.push(ch);
        }
    }
    flush(&mut token, &mut out);
    out
}

fn value_to_rational(v: &Value) -> Option<Rational> {
    match v {
        Value::Number(n) => parse_rational(&n.to_string()),
        Value::String(s) => parse_rational(s),
        _ => None,
    }
}

fn point_list(v: &Value) -> Result<Vec<(Rational, Rational)>, MotionError> {
    let bad = |msg: &str| MotionError::BadZigZag(msg.to_string());
    v.as_array()
        .ok_or_else(|| bad("each base list must be an array of points"))?
        .iter()
        .map(|p| match p.as_array().map(Vec::as_slice) {
            Some([x, y]) => Ok((
                value_to_rational(x).ok_or_else(|| bad(&format!("not a rational: {x}")))?,
                value_to_rational(y).ok_or_else(|| bad(&format!("not a rational: {y}")))?,
            )),
            _ => Err(bad(&format!("a point must have two coordinates: {p}"))),
        })
        .collect()
}

/// Parses `[[[x, y], ...], [[x, y], ...]]`; coordinates may be integers,
/// decimals or fractions like `3/4` (quoted or not).
pub fn parse_zigzag(text: &str) -> Result<ZigZag, MotionError> {
    let v: Value = serde_json::from_str(&quote_fractions(text)).map_err(|e| MotionError::BadZigZag(e.to_string()))?;
    match v.as_array().map(Vec::as_slice) {
        Some([rotated, translated]) => {
            Ok(ZigZag { rotated: point_list(rotated)?, translated: point_list(translated)? })
        }
        _ => Err(MotionError::BadZigZag("expected two lists of base points".into())),
    }
}
