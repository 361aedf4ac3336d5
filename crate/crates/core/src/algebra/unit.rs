use num_traits::{One, Signed};

use super::{AlgebraError, Poly, RatFunc, RatPoint2, Rational};

/// Rational parametrization of a point moving on the unit circle.
///
/// `speed` is the half-angle scale `a` when the curve has the form
/// `((t² − a²)/(t² + a²), −2at/(t² + a²))`; a negative scale means the
/// circle is traversed in the opposite direction. Curves that are not of
/// this form (constants, for instance) carry no scale.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitCurve {
    pub x: RatFunc,
    pub y: RatFunc,
    pub speed: Option<Rational>,
}

impl UnitCurve {
    pub fn point(&self) -> RatPoint2 {
        RatPoint2::new(self.x.clone(), self.y.clone())
    }

    /// `x² + y² − 1`, identically zero for every valid curve.
    pub fn defect(&self) -> RatFunc {
        &self.point().norm_sq() - &RatFunc::one()
    }

    pub fn constant(x: Rational, y: Rational) -> Self {
        UnitCurve { x: RatFunc::constant(x), y: RatFunc::constant(y), speed: None }
    }
}

/// The curve `z_a(t) = ((t² − a²)/(t² + a²), −2at/(t² + a²))`.
///
/// As a complex number this is `(t − ai)/(t + ai)`.
pub fn halfangle_unit(a: &Rational) -> Result<UnitCurve, AlgebraError> {
    if !a.is_positive() {
        return Err(AlgebraError::NonPositiveScale);
    }
    Ok(scaled_curve(a))
}

fn scaled_curve(a: &Rational) -> UnitCurve {
    let zero = Rational::from_integer(0.into());
    let a2 = a * a;
    let den = Poly::new(vec![a2.clone(), zero.clone(), Rational::one()]);
    let x = RatFunc::new(Poly::new(vec![-a2, zero.clone(), Rational::one()]), den.clone());
    let y = RatFunc::new(Poly::new(vec![zero, -(a + a)]), den);
    UnitCurve { x: x.expect("t^2 + a^2 is nonzero"), y: y.expect("t^2 + a^2 is nonzero"), speed: Some(a.clone()) }
}

/// Couples `z` with the curve `z' = (L z − 1)/(L − z)`.
///
/// The vectors `1, −L z, L z', −z z'` close up to a quadrilateral
/// (`1 − L z + L z' − z z' = 0`). For a half-angle curve of scale `a` the
/// result is the half-angle curve of scale `a (L + 1)/(L − 1)`.
pub fn coupled_unit(z: &UnitCurve, l: &Rational) -> Result<UnitCurve, AlgebraError> {
    if l.abs().is_one() {
        return Err(AlgebraError::DegenerateCoupling);
    }
    let zp = z.point();
    let lc = RatPoint2::constant(l.clone(), Rational::from_integer(0.into()));
    let one = RatPoint2::constant(Rational::one(), Rational::from_integer(0.into()));
    let num = zp.scale(l).sub(&one);
    let den = lc.sub(&zp);
    let w = num.complex_div(&den).map_err(|_| AlgebraError::DegenerateCoupling)?;
    let speed = z.speed.as_ref().map(|a| a * (l + Rational::one()) / (l - Rational::one()));
    Ok(UnitCurve { x: w.x, y: w.y, speed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn coupling_defect(z: &UnitCurve, zc: &UnitCurve, l: &Rational) -> RatPoint2 {
        // 1 − L z + L z' − z z'
        let one = RatPoint2::constant(int(1), int(0));
        let (z, zc) = (z.point(), zc.point());
        one.sub(&z.scale(l)).add(&zc.scale(l)).sub(&z.complex_mul(&zc))
    }

    #[test]
    fn halfangle_examples() {
        let z1 = halfangle_unit(&int(1)).unwrap();
        assert_eq!(z1.x.to_string(), "(t^2 - 1)/(t^2 + 1)");
        assert_eq!(z1.y.to_string(), "-2*t/(t^2 + 1)");
        let z2 = halfangle_unit(&int(2)).unwrap();
        assert_eq!(z2.x.to_string(), "(t^2 - 4)/(t^2 + 4)");
        assert_eq!(z2.y.to_string(), "-4*t/(t^2 + 4)");
        assert!(z2.defect().is_zero());
        assert_eq!(z1.point().eval(&int(0)), Some((int(-1), int(0))));
        assert_eq!(halfangle_unit(&int(0)), Err(AlgebraError::NonPositiveScale));
    }

    #[test]
    fn coupling_of_z1_with_three_is_z2() {
        let z1 = halfangle_unit(&int(1)).unwrap();
        let zc = coupled_unit(&z1, &int(3)).unwrap();
        assert_eq!(zc, halfangle_unit(&int(2)).unwrap());
        assert!(coupling_defect(&z1, &zc, &int(3)).is_zero());
        assert_eq!(zc.point().eval(&int(0)), Some((int(-1), int(0))));
    }

    #[test]
    fn coupling_fixed_point_and_degenerate() {
        let c = UnitCurve::constant(int(1), int(0));
        let zc = coupled_unit(&c, &rat(5, 2)).unwrap();
        assert_eq!(zc.point(), RatPoint2::constant(int(1), int(0)));
        assert!(coupling_defect(&c, &zc, &rat(5, 2)).is_zero());
        let z1 = halfangle_unit(&int(1)).unwrap();
        assert_eq!(coupled_unit(&z1, &int(1)), Err(AlgebraError::DegenerateCoupling));
        assert_eq!(coupled_unit(&z1, &int(-1)), Err(AlgebraError::DegenerateCoupling));
    }

    #[test]
    fn coupling_speed_rule() {
        let z = halfangle_unit(&rat(1, 3)).unwrap();
        let l = rat(1, 2);
        let zc = coupled_unit(&z, &l).unwrap();
        let expected = zc.speed.clone().unwrap();
        assert_eq!(expected, rat(-1, 1));
        assert_eq!(zc, scaled_curve(&expected));
    }
}
