use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use super::{DisplayMode, MotionError, ParametricMotion, Provenance};
use crate::algebra::{coupled_unit, halfangle_unit, AlgebraError, RatPoint2, Rational};
use crate::graph::FlexGraph;
use crate::movable::SpatialEmbedding;

pub const DEFAULT_COUPLING: i64 = 3;

/// Planar images of the three axis directions: `1`, `-L z` and `L z'`.
/// The diagonal then maps to `-z z'`, and the four sum to zero.
pub(crate) fn axis_images(l: &Rational) -> Result<[RatPoint2; 3], MotionError> {
    if l.is_zero() || l.abs().is_one() {
        return Err(AlgebraError::DegenerateCoupling.into());
    }
    let z = halfangle_unit(&Rational::one())?;
    let zc = coupled_unit(&z, l)?;
    Ok([RatPoint2::constant(Rational::one(), Rational::zero()), z.point().scale(&-l), zc.point().scale(l)])
}

/// Motion driven by a spatial embedding: `p(v) = Σ_k (ω_k(v) - ω_k(r)) w_k`
/// with `r` the smallest vertex and `w_k` the axis images above.
pub fn spatial_motion(g: &FlexGraph, emb: &SpatialEmbedding, l: &Rational) -> Result<ParametricMotion, MotionError> {
    emb.validate(g).map_err(MotionError::InvalidEmbedding)?;
    let w = axis_images(l)?;
    let Some(root) = g.vertices().first() else {
        return Ok(ParametricMotion::from_parts(
            g.clone(),
            BTreeMap::new(),
            DisplayMode::Rational,
            Provenance::Spatial,
        ));
    };
    let origin = &emb.omega[root];
    let points = emb
        .omega
        .iter()
        .map(|(&v, om)| {
            let p = (0..3).fold(RatPoint2::origin(), |acc, k| acc.add(&w[k].scale(&(&om[k] - &origin[k]))));
            (v, p)
        })
        .collect();
    Ok(ParametricMotion::from_parts(g.clone(), points, DisplayMode::Rational, Provenance::Spatial))
}
