//! Exact rational functions `N(η)/D(η)` in lowest terms.

use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::ratpoly::RatPoly;

/// Rational function with a monic denominator coprime to the numerator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: RatPoly,
    den: RatPoly,
}

impl RatFn {
    /// `num / den`, reduced to lowest terms.
    pub fn new(num: RatPoly, den: RatPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero("rational function with zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let n = num.exact_div(&g).expect("gcd divides numerator");
        let d = den.exact_div(&g).expect("gcd divides denominator");
        let lc = d.leading_coeff().expect("nonzero").recip();
        Ok(Self { num: n.scale(&lc), den: d.scale(&lc) })
    }

    /// The polynomial `p` viewed as `p / 1`.
    pub fn from_poly(p: RatPoly) -> Self {
        Self { num: p, den: RatPoly::one() }
    }

    /// The constant `c`.
    pub fn constant(c: Rat) -> Self {
        Self::from_poly(RatPoly::constant(c))
    }

    /// The zero function.
    pub fn zero() -> Self {
        Self::from_poly(RatPoly::zero())
    }

    /// Numerator.
    pub fn num(&self) -> &RatPoly {
        &self.num
    }

    /// Monic denominator.
    pub fn den(&self) -> &RatPoly {
        &self.den
    }

    /// `true` for the zero function.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `c · f`.
    pub fn scale(&self, c: &Rat) -> Self {
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    /// `f / g`; errors when `g ≡ 0`.
    pub fn div(&self, g: &Self) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::DivisionByZero("division by the zero rational function".into()));
        }
        Self::new(&self.num * &g.den, &self.den * &g.num)
    }

    /// Exact derivative `(N′D − ND′)/D²`.
    pub fn derivative(&self) -> Self {
        let n = &(&self.num.differentiate() * &self.den) - &(&self.num * &self.den.differentiate());
        Self::new(n, &self.den * &self.den).expect("nonzero denominator")
    }

    /// Value at `x`, or `None` at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// `lim_{η→∞} η² f(η)`; `None` when the limit is infinite.
    pub fn eta2_limit(&self) -> Option<Rat> {
        let Some(dn) = self.num.degree() else {
            return Some(Rat::zero());
        };
        let dd = self.den.degree().expect("nonzero");
        match (dn + 2).cmp(&dd) {
            std::cmp::Ordering::Less => Some(Rat::zero()),
            std::cmp::Ordering::Equal => Some(self.num.leading_coeff().expect("nonzero").clone()),
            std::cmp::Ordering::Greater => None,
        }
    }

    /// `lim_{η→r} (η − r)² f(η)`: the double-pole strength at `r`.
    ///
    /// Returns `None` when the pole at `r` has order greater than two.
    pub fn double_pole_coeff(&self, r: &Rat) -> Option<Rat> {
        let k = self.den.root_multiplicity(r);
        match k {
            0 | 1 => Some(Rat::zero()),
            2 => {
                let lin = RatPoly::linear(-r.clone(), Rat::one());
                let rest = self.den.exact_div(&(&lin * &lin)).expect("double root divides");
                Some(self.num.eval(r) / rest.eval(r))
            }
            _ => None,
        }
    }

    /// Real poles (roots of the denominator) counted in an interval.
    pub fn pole_count(&self, iv: &crate::ratpoly::Interval) -> usize {
        if self.den.degree() == Some(0) {
            return 0;
        }
        crate::ratpoly::sturm_count(&self.den, iv).expect("nonzero denominator")
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        if self.den == rhs.den {
            return RatFn::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        RatFn::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den).expect("nonzero")
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self + &(-rhs)
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        RatFn::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFn {
            type Output = RatFn;
            fn $m(self, rhs: RatFn) -> RatFn {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
