//! Gaussian rationals: the exact coefficient field Q(i).
//!
//! `GaussRat` is `a + b*i` with arbitrary-precision rational `a`, `b`.
//! `num::BigRational` keeps both components canonical (reduced, positive
//! denominator), so every arithmetic result is canonical by construction.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, the real and imaginary component type.
pub type Rat = BigRational;

/// `n/d` as a [`Rat`]. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a [`Rat`].
pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// An element of Q(i).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn zero() -> Self {
        GaussRat::new(Rat::zero(), Rat::zero())
    }

    pub fn one() -> Self {
        GaussRat::new(Rat::one(), Rat::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat::new(Rat::zero(), Rat::one())
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat::new(rat_int(n), Rat::zero())
    }

    pub fn from_rat(r: Rat) -> Self {
        GaussRat::new(r, Rat::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.im.is_zero() && self.re.is_one()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate: `re` unchanged, `im` negated.
    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    /// `x * conj(x)`, a nonnegative rational, zero iff `x == 0`.
    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(GaussRat::new(&self.re / &n, -&self.im / &n))
    }

    /// Exact field division; errors on a zero divisor.
    pub fn checked_div(&self, rhs: &GaussRat) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im_part = |f: &mut fmt::Formatter<'_>, im: &Rat, lead: bool| -> fmt::Result {
            let mag = im.abs();
            let sign = if im.is_negative() {
                "-"
            } else if lead {
                ""
            } else {
                "+"
            };
            if mag.is_one() {
                write!(f, "{sign}i")
            } else {
                write!(f, "{sign}{mag}*i")
            }
        };
        if self.re.is_zero() {
            im_part(f, &self.im, true)
        } else {
            write!(f, "{}", self.re)?;
            im_part(f, &self.im, false)
        }
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re.clone(), -self.im.clone())
    }
}

/// Panics on a zero divisor; use [`GaussRat::checked_div`] to get an error.
impl Div for &GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: &GaussRat) -> GaussRat {
        self.checked_div(rhs).expect("division by zero")
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for GaussRat {
            type Output = GaussRat;
            fn $method(self, rhs: GaussRat) -> GaussRat {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: (i64, i64), im: (i64, i64)) -> GaussRat {
        GaussRat::new(rat(re.0, re.1), rat(im.0, im.1))
    }

    #[test]
    fn norm_identity() {
        // (1+i)*(1-i) = 2
        let a = g((1, 1), (1, 1));
        let b = g((1, 1), (-1, 1));
        assert_eq!(&a * &b, GaussRat::from_int(2));
    }

    #[test]
    fn conjugate_sum() {
        // (1/2 + i/3) + (1/2 - i/3) = 1
        let a = g((1, 2), (1, 3));
        assert_eq!(&a + &a.conj(), GaussRat::one());
    }

    #[test]
    fn self_division() {
        let a = g((3, 1), (4, 1));
        assert_eq!(a.checked_div(&a).unwrap(), GaussRat::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let err = GaussRat::one().checked_div(&GaussRat::zero()).unwrap_err();
        assert!(matches!(err, Error::DivisionByZero));
    }

    #[test]
    fn conjugation_fixed_points_and_involution() {
        let five = GaussRat::from_int(5);
        assert_eq!(five.conj(), five);
        let a = g((2, 1), (3, 1));
        assert_eq!(a.conj(), g((2, 1), (-3, 1)));
        assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn conjugation_is_multiplicative() {
        // conj((1+i)*(2-i)) = conj(1+i)*conj(2-i) = 3-i, expanded by hand:
        // (1+i)(2-i) = 2 - i + 2i + 1 = 3 + i
        let a = g((1, 1), (1, 1));
        let b = g((2, 1), (-1, 1));
        let lhs = (&a * &b).conj();
        let rhs = &a.conj() * &b.conj();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, g((3, 1), (-1, 1)));
    }

    #[test]
    fn norm_sqr_positive_definite() {
        assert!(GaussRat::zero().norm_sqr().is_zero());
        let a = g((-1, 2), (1, 3));
        assert!(a.norm_sqr().is_positive());
        assert_eq!(GaussRat::from_rat(a.norm_sqr()), &a * &a.conj());
    }

    #[test]
    fn display_forms() {
        assert_eq!(g((1, 2), (0, 1)).to_string(), "1/2");
        assert_eq!(g((0, 1), (1, 1)).to_string(), "i");
        assert_eq!(g((0, 1), (-2, 3)).to_string(), "-2/3*i");
        assert_eq!(g((1, 1), (1, 1)).to_string(), "1+i");
        assert_eq!(g((-1, 1), (-5, 2)).to_string(), "-1-5/2*i");
        assert_eq!(GaussRat::zero().to_string(), "0");
    }
}
