//! Gaussian rationals a + bi with exact components.

use super::Rat;
use num::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact Gaussian rational a + b·i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat::new(Rat::from_integer(n.into()), Rat::zero())
    }

    pub fn from_rat(re: Rat) -> Self {
        GaussRat::new(re, Rat::zero())
    }

    /// Pure-imaginary b·i.
    pub fn imag(b: i64) -> Self {
        GaussRat::new(Rat::zero(), Rat::from_integer(b.into()))
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    /// |z|² = a² + b², a plain rational.
    pub fn norm_sq(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// (re, im) as f64 — used only at the boundary to the numeric tracer.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        fn r2f(r: &Rat) -> f64 {
            let n = r.numer();
            let d = r.denom();
            // Exact for all fixture-sized values; falls back to string parsing
            // for magnitudes outside i128.
            match (i128::try_from(n.clone()), i128::try_from(d.clone())) {
                (Ok(n), Ok(d)) => n as f64 / d as f64,
                _ => n.to_string().parse::<f64>().unwrap_or(f64::NAN)
                    / d.to_string().parse::<f64>().unwrap_or(f64::NAN),
            }
        }
        (r2f(&self.re), r2f(&self.im))
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            if self.im.is_one() {
                return write!(f, "i");
            }
            if (-self.im.clone()).is_one() {
                return write!(f, "-i");
            }
            return write!(f, "{}i", self.im);
        }
        if self.im > Rat::zero() {
            if self.im.is_one() {
                write!(f, "{}+i", self.re)
            } else {
                write!(f, "{}+{}i", self.re, self.im)
            }
        } else if (-self.im.clone()).is_one() {
            write!(f, "{}-i", self.re)
        } else {
            write!(f, "{}{}i", self.re, self.im)
        }
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, o: GaussRat) -> GaussRat {
        GaussRat::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, o: GaussRat) -> GaussRat {
        GaussRat::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, o: GaussRat) -> GaussRat {
        GaussRat::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Div for GaussRat {
    type Output = GaussRat;
    fn div(self, o: GaussRat) -> GaussRat {
        let n = o.norm_sq();
        assert!(!n.is_zero(), "division by zero Gaussian rational");
        let c = o.conj();
        let p = self * c;
        GaussRat::new(p.re / n.clone(), p.im / n)
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re, -self.im)
    }
}

impl Zero for GaussRat {
    fn zero() -> Self {
        GaussRat::new(Rat::zero(), Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRat {
    fn one() -> Self {
        GaussRat::new(Rat::one(), Rat::zero())
    }
    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> GaussRat {
        GaussRat::new(Rat::from_integer(a.into()), Rat::from_integer(b.into()))
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(g(0, 1) * g(0, 1), g(-1, 0));
    }

    #[test]
    fn division_roundtrip() {
        let a = g(3, -2);
        let b = g(1, 5);
        assert_eq!(a.clone() / b.clone() * b, a);
    }

    #[test]
    fn display_forms() {
        assert_eq!(g(1, 2).to_string(), "1+2i");
        assert_eq!(g(0, -1).to_string(), "-i");
        assert_eq!(g(2, -1).to_string(), "2-i");
        assert_eq!(GaussRat::new(Rat::new(3.into(), 2.into()), Rat::zero()).to_string(), "3/2");
    }
}
