use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Poly, Rational};

/// Rational function `num(t) / den(t)` in canonical form.
///
/// Invariants: `den` is nonzero and monic, `gcd(num, den) = 1`, and the zero
/// function is `0/1`. Two values are equal exactly when their
/// representations are equal, so `==` is exact equality of functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) { (num, den) } else { (num.div_rem(&g).0, den.div_rem(&g).0) };
        let lc_inv = den.leading().expect("nonzero denominator").recip();
        RatFunc { num: num.scale(&lc_inv), den: den.scale(&lc_inv) }
    }

    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    /// The identity function `t`.
    pub fn var() -> Self {
        RatFunc::from_poly(Poly::var())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The constant value if both numerator and denominator have degree 0
    /// (or the function is zero).
    pub fn is_constant(&self) -> Option<Rational> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(Rational::zero()),
            (Some(0), Some(0)) => Some(self.num.coeff(0) / self.den.coeff(0)),
            _ => None,
        }
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc, AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::reduce(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn inv(&self) -> Result<RatFunc, AlgebraError> {
        RatFunc::one().checked_div(self)
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Exact value at `x`, or `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    /// Limit for `t → ±∞` when it is finite (degree of `num` at most that of `den`).
    pub fn eval_at_infinity(&self) -> Option<Rational> {
        let dn = match self.num.degree() {
            None => return Some(Rational::zero()),
            Some(d) => d,
        };
        let dd = self.den.degree().unwrap_or(0);
        if dn < dd {
            Some(Rational::zero())
        } else if dn == dd {
            Some(self.num.coeff(dn) / self.den.coeff(dd))
        } else {
            None
        }
    }

    /// Numerator and denominator scaled to coprime integer coefficients with a
    /// positive leading denominator coefficient.
    pub fn integer_form(&self) -> (Poly, Poly) {
        let s =
            Rational::from_integer(num_integer::Integer::lcm(&self.num.denominator_lcm(), &self.den.denominator_lcm()));
        let n = self.num.scale(&s);
        let d = self.den.scale(&s);
        let g = num_integer::Integer::gcd(&n.content(), &d.content());
        let mut g = Rational::from_integer(g);
        if d.leading().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        let g_inv = g.recip();
        (n.scale(&g_inv), d.scale(&g_inv))
    }

    /// Display form with variable name `var`, e.g. `(3*t^2 - 3)/(t^2 + 1)`.
    pub fn format_with(&self, var: &str) -> String {
        if self.den.degree() == Some(0) {
            return self.num.format_with(var);
        }
        let (n, d) = self.integer_form();
        let ns = n.format_with(var);
        let ds = d.format_with(var);
        let ns = if n.term_count() > 1 { format!("({ns})") } else { ns };
        let den_is_bare = d.term_count() == 1 && d.leading().is_some_and(One::is_one);
        let ds = if den_is_bare { ds } else { format!("({ds})") };
        format!("{ns}/{ds}")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with("t"))
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        RatFunc::constant(c)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::reduce(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}
