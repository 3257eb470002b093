//! Exact scalars, polynomials in one parameter `t`, rational functions and
//! dense matrices over ℚ.

mod matrix;
mod poly;
mod ratfunc;

use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use matrix::{integer_rank, Matrix, RatMatrix, Signature};
pub use poly::UniPoly;
pub use ratfunc::RationalFunction;

/// Arbitrary-precision rational; always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// A rational vector (coordinates with respect to some fixed basis).
pub type RatVec = Vec<Rational>;

/// Field operations needed by the generic dense-matrix routines.
pub trait Field:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
}

impl<T> Field for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
{
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p`, `-p`, `p/q` with `q > 0`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n.trim()).ok()?;
    let d = BigInt::from_str(d.trim()).ok()?;
    if d.is_zero() || d.is_negative() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// `p/q` form used by the `.jalg` writer (denominator always printed).
pub fn fmt_fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Exact square root of a nonnegative rational, if it is the square of a
/// rational.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

pub fn zero_vec(n: usize) -> RatVec {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> RatVec {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_vec(a: &[Rational], b: &[Rational]) -> RatVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Rational], b: &[Rational]) -> RatVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(s: &Rational, v: &[Rational]) -> RatVec {
    v.iter().map(|x| s * x).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3"), Some(int(3)));
        assert_eq!(parse_rational("-1/2"), Some(rat(-1, 2)));
        assert_eq!(parse_rational("4/6"), Some(rat(2, 3)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("1/-2"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn canonical_zero() {
        let z = parse_rational("0/5").unwrap();
        assert_eq!(z.denom(), &BigInt::from(1));
        assert_eq!(fmt_fraction(&z), "0/1");
    }

    #[test]
    fn sqrt_of_squares_only() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rational_sqrt(&rat(-1, 1)), None);
        assert_eq!(rational_sqrt(&int(0)), Some(int(0)));
    }
}
