use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Rational, UniPoly};
use crate::error::{Error, Result};

/// Quotient of two polynomials in `t`, kept reduced with a monic
/// denominator so that equal functions are structurally equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    /// Returns `None` when `den` is the zero polynomial.
    pub fn new(num: UniPoly, den: UniPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut num, _) = num.div_rem(&g);
        let (mut den, _) = den.div_rem(&g);
        let lead = den.leading().cloned().expect("nonzero denominator");
        if !lead.is_one() {
            let inv = Rational::one() / lead;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Some(RationalFunction { num, den })
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    /// `f(t0)`, or `None` if `t0` is a pole.
    pub fn eval(&self, t0: &Rational) -> Option<Rational> {
        let d = self.den.eval(t0);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(t0) / d)
        }
    }

    /// Value at `t = 0` after cancelling common powers of `t`.
    pub fn limit_at_zero(&self) -> Result<Rational> {
        // Reduced form: t cannot divide both num and den.
        self.eval(&Rational::zero()).ok_or(Error::PoleAtZero)
    }

    pub fn inv(&self) -> Option<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl From<UniPoly> for RationalFunction {
    fn from(p: UniPoly) -> Self {
        RationalFunction {
            num: p,
            den: UniPoly::one(),
        }
    }
}

impl From<Rational> for RationalFunction {
    fn from(c: Rational) -> Self {
        UniPoly::constant(c).into()
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        UniPoly::one().into()
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::new(num, &self.den * &rhs.den).unwrap()
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    /// Panics on division by the zero function.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self * &rhs.inv().expect("division by zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, rat};

    fn rf(n: &str, d: &str) -> RationalFunction {
        RationalFunction::new(n.parse().unwrap(), d.parse().unwrap()).unwrap()
    }

    #[test]
    fn cancellation_limit() {
        assert_eq!(rf("t^2+2*t", "t").limit_at_zero(), Ok(int(2)));
    }

    #[test]
    fn plain_limit() {
        assert_eq!(rf("3*t+4", "t+2").limit_at_zero(), Ok(int(2)));
    }

    #[test]
    fn pole() {
        assert_eq!(rf("1", "t").limit_at_zero(), Err(Error::PoleAtZero));
        assert_eq!(rf("t+1", "t^3-t^2").limit_at_zero(), Err(Error::PoleAtZero));
    }

    #[test]
    fn canonical_form_is_structural() {
        assert_eq!(rf("2*t^2+2*t", "4*t"), rf("t+1", "2"));
        assert_eq!(rf("t+1", "2").den(), &UniPoly::one());
        assert_eq!(rf("0", "t^5"), RationalFunction::zero());
        assert!(RationalFunction::new(UniPoly::one(), UniPoly::zero()).is_none());
    }

    #[test]
    fn field_ops() {
        let a = rf("1", "t");
        let b = rf("t", "t+1");
        assert_eq!(&a * &b, rf("1", "t+1"));
        assert_eq!(&a + &b, rf("t^2+t+1", "t^2+t"));
        assert_eq!(&(&a / &b) * &b, a);
        assert_eq!((&a - &a), RationalFunction::zero());
        assert_eq!(b.eval(&int(1)), Some(rat(1, 2)));
        assert_eq!(b.eval(&int(-1)), None);
    }
}
