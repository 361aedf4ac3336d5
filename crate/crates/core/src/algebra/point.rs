use std::fmt;

use super::{AlgebraError, RatFunc, Rational};

/// Planar point whose coordinates are rational functions of the parameter.
///
/// Also used as a complex number `x + i*y` when composing rotations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatPoint2 {
    pub x: RatFunc,
    pub y: RatFunc,
}

impl RatPoint2 {
    pub fn new(x: RatFunc, y: RatFunc) -> Self {
        RatPoint2 { x, y }
    }

    pub fn origin() -> Self {
        RatPoint2::new(RatFunc::zero(), RatFunc::zero())
    }

    pub fn constant(x: Rational, y: Rational) -> Self {
        RatPoint2::new(RatFunc::constant(x), RatFunc::constant(y))
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn add(&self, o: &RatPoint2) -> RatPoint2 {
        RatPoint2::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn sub(&self, o: &RatPoint2) -> RatPoint2 {
        RatPoint2::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn neg(&self) -> RatPoint2 {
        RatPoint2::new(-&self.x, -&self.y)
    }

    pub fn scale(&self, c: &Rational) -> RatPoint2 {
        RatPoint2::new(self.x.scale(c), self.y.scale(c))
    }

    pub fn scale_by(&self, f: &RatFunc) -> RatPoint2 {
        RatPoint2::new(&self.x * f, &self.y * f)
    }

    /// Squared Euclidean norm, itself a rational function.
    pub fn norm_sq(&self) -> RatFunc {
        &(&self.x * &self.x) + &(&self.y * &self.y)
    }

    /// Complex product `(x1 + i y1)(x2 + i y2)`.
    pub fn complex_mul(&self, o: &RatPoint2) -> RatPoint2 {
        RatPoint2::new(&(&self.x * &o.x) - &(&self.y * &o.y), &(&self.x * &o.y) + &(&self.y * &o.x))
    }

    pub fn conj(&self) -> RatPoint2 {
        RatPoint2::new(self.x.clone(), -&self.y)
    }

    /// Complex quotient; fails when `o` is identically zero.
    pub fn complex_div(&self, o: &RatPoint2) -> Result<RatPoint2, AlgebraError> {
        let n = o.norm_sq();
        let p = self.complex_mul(&o.conj());
        Ok(RatPoint2::new(p.x.checked_div(&n)?, p.y.checked_div(&n)?))
    }

    pub fn eval_f64(&self, t: f64) -> (f64, f64) {
        (self.x.eval_f64(t), self.y.eval_f64(t))
    }

    pub fn eval(&self, t: &Rational) -> Option<(Rational, Rational)> {
        Some((self.x.eval(t)?, self.y.eval(t)?))
    }
}

impl fmt::Display for RatPoint2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Spatial point over rational functions; with constant entries it is a point of Q³.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatPoint3 {
    pub coords: [RatFunc; 3],
}

impl RatPoint3 {
    pub fn constant(q: &[Rational; 3]) -> Self {
        RatPoint3 { coords: q.clone().map(RatFunc::constant) }
    }

    pub fn sub(&self, o: &RatPoint3) -> RatPoint3 {
        RatPoint3 { coords: std::array::from_fn(|k| &self.coords[k] - &o.coords[k]) }
    }

    pub fn norm_sq(&self) -> RatFunc {
        self.coords.iter().fold(RatFunc::zero(), |acc, c| &acc + &(c * c))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(RatFunc::is_zero)
    }

    /// The rational coordinates when all entries are constant.
    pub fn as_constant(&self) -> Option<[Rational; 3]> {
        let [a, b, c] = &self.coords;
        Some([a.is_constant()?, b.is_constant()?, c.is_constant()?])
    }
}
