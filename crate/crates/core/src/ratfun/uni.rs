//! Dense univariate polynomials and reduced rational functions in one
//! variable. Unlike the multivariate layer, univariate GCDs are cheap, so
//! `RatUni` keeps num/den coprime with a monic denominator — essential for
//! the Riccati recursion, where uncancelled factors would snowball.

use super::Field;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Dense univariate polynomial; `coeffs[k]` multiplies z^k, no trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct UniPoly<C: Field> {
    coeffs: Vec<C>,
}

impl<C: Field> UniPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly { coeffs: vec![C::one()] }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        UniPoly { coeffs: vec![C::zero(), C::one()] }
    }

    pub fn monomial(e: usize, c: C) -> Self {
        let mut v = vec![C::zero(); e + 1];
        v[e] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.inv()),
        }
    }

    pub fn eval(&self, z: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut v = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut mult = C::zero();
            for _ in 0..k {
                mult = mult + C::one();
            }
            v.push(c.clone() * mult);
        }
        Self::new(v)
    }

    /// Quotient and remainder; panics on zero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let lc = d.leading().unwrap().clone();
        let sd = match self.degree() {
            Some(sd) if sd >= dd => sd,
            _ => return (Self::zero(), self.clone()),
        };
        let mut rem = self.coeffs.clone();
        let mut quo = vec![C::zero(); sd - dd + 1];
        for k in (0..quo.len()).rev() {
            let c = rem[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            let f = c / lc.clone();
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - f.clone() * dc.clone();
            }
            quo[k] = f;
        }
        (Self::new(quo), Self::new(rem))
    }

    /// Monic GCD by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// p(z + a): the shifted polynomial, computed exactly.
    pub fn compose_linear(&self, a: &C) -> Self {
        let mut res = Self::zero();
        for c in self.coeffs.iter().rev() {
            // res = res·(z + a) + c
            let shifted = &Self::monomial(1, C::one()) * &res;
            res = &(&shifted + &res.scale(a)) + &Self::constant(c.clone());
        }
        res
    }

    /// z^k · p(1/z) for k ≥ deg p: coefficient reversal with padding.
    pub fn reverse_pad(&self, k: usize) -> Self {
        let d = self.degree().unwrap_or(0);
        assert!(k >= d, "reverse_pad needs k ≥ deg");
        let mut v = vec![C::zero(); k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[k - i] = c.clone();
        }
        Self::new(v)
    }

    /// Multiplicity of `p` as a root (0 if not a root).
    pub fn ord_at(&self, p: &C) -> u32 {
        if self.is_zero() {
            panic!("order of zero polynomial");
        }
        let mut f = self.clone();
        let mut ord = 0;
        loop {
            if !f.eval(p).is_zero() {
                return ord;
            }
            // synthetic division by (z − p)
            let mut q = vec![C::zero(); f.coeffs.len() - 1];
            let mut carry = C::zero();
            for (i, c) in f.coeffs.iter().enumerate().rev() {
                if i == 0 {
                    break;
                }
                let b = c.clone() + carry.clone();
                carry = b.clone() * p.clone();
                q[i - 1] = b;
            }
            f = Self::new(q);
            ord += 1;
            if f.is_zero() {
                return ord;
            }
        }
    }

    pub fn render(&self, var: &str) -> String
    where
        C: std::fmt::Display,
    {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let coeff = if cs.contains('+') || (cs.contains('-') && !cs.starts_with('-')) {
                format!("({})", cs)
            } else {
                cs
            };
            let p = match k {
                0 => coeff,
                1 if coeff == "1" => var.to_string(),
                1 => format!("{}*{}", coeff, var),
                _ if coeff == "1" => format!("{}^{}", var, k),
                _ => format!("{}*{}^{}", coeff, var, k),
            };
            parts.push(p);
        }
        parts.join(" + ")
    }
}

impl<C: Field> Add for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn add(self, o: &UniPoly<C>) -> UniPoly<C> {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + o.coeff(i));
        }
        UniPoly::new(v)
    }
}

impl<C: Field> Sub for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn sub(self, o: &UniPoly<C>) -> UniPoly<C> {
        self + &(-o)
    }
}

impl<C: Field> Neg for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn neg(self) -> UniPoly<C> {
        UniPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<C: Field> Mul for &UniPoly<C> {
    type Output = UniPoly<C>;
    fn mul(self, o: &UniPoly<C>) -> UniPoly<C> {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![C::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(v)
    }
}

/// Reduced univariate rational function: num/den coprime, den monic.
#[derive(Clone, Debug)]
pub struct RatUni<C: Field> {
    num: UniPoly<C>,
    den: UniPoly<C>,
}

impl<C: Field> RatUni<C> {
    pub fn new(num: UniPoly<C>, den: UniPoly<C>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatUni { num, den: UniPoly::one() };
        }
        let g = num.gcd(&den);
        let (num, _) = num.divrem(&g);
        let (den, _) = den.divrem(&g);
        let lc = den.leading().unwrap().inv();
        RatUni { num: num.scale(&lc), den: den.scale(&lc) }
    }

    pub fn from_poly(p: UniPoly<C>) -> Self {
        RatUni { num: p, den: UniPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    pub fn constant(c: C) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn x() -> Self {
        Self::from_poly(UniPoly::x())
    }

    pub fn num(&self) -> &UniPoly<C> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<C> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverting zero");
        RatUni::new(self.den.clone(), self.num.clone())
    }

    pub fn powi(&self, e: i64) -> Self {
        if e == 0 {
            return Self::one();
        }
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let d = &self.den * &self.den;
        RatUni::new(n, d)
    }

    pub fn eval(&self, z: &C) -> Option<C> {
        let d = self.den.eval(z);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(z) / d)
        }
    }

    /// Order of vanishing at a finite point: > 0 zero, < 0 pole.
    /// num and den are coprime, so at most one side contributes.
    pub fn ord_at(&self, p: &C) -> i64 {
        assert!(!self.is_zero(), "order of zero function");
        self.num.ord_at(p) as i64 - self.den.ord_at(p) as i64
    }

    /// Order of vanishing at ∞: deg den − deg num.
    pub fn ord_at_infinity(&self) -> i64 {
        assert!(!self.is_zero(), "order of zero function");
        self.den.degree().unwrap() as i64 - self.num.degree().unwrap() as i64
    }

    pub fn render(&self, var: &str) -> String
    where
        C: std::fmt::Display,
    {
        if self.den == UniPoly::one() {
            self.num.render(var)
        } else {
            format!("({}) / ({})", self.num.render(var), self.den.render(var))
        }
    }
}

impl<C: Field> PartialEq for RatUni<C> {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl<C: Field> Add for &RatUni<C> {
    type Output = RatUni<C>;
    fn add(self, o: &RatUni<C>) -> RatUni<C> {
        RatUni::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl<C: Field> Sub for &RatUni<C> {
    type Output = RatUni<C>;
    fn sub(self, o: &RatUni<C>) -> RatUni<C> {
        RatUni::new(
            &(&self.num * &o.den) - &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl<C: Field> Mul for &RatUni<C> {
    type Output = RatUni<C>;
    fn mul(self, o: &RatUni<C>) -> RatUni<C> {
        RatUni::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl<C: Field> Div for &RatUni<C> {
    type Output = RatUni<C>;
    fn div(self, o: &RatUni<C>) -> RatUni<C> {
        assert!(!o.is_zero(), "division by zero");
        RatUni::new(&self.num * &o.den, &self.den * &o.num)
    }
}

impl<C: Field> Neg for &RatUni<C> {
    type Output = RatUni<C>;
    fn neg(self) -> RatUni<C> {
        RatUni {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfun::{rat, Rat};

    fn p(cs: &[i64]) -> UniPoly<Rat> {
        UniPoly::new(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn divrem_exact() {
        // (z²−1) = (z−1)(z+1)
        let (q, r) = p(&[-1, 0, 1]).divrem(&p(&[-1, 1]));
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_common_factor() {
        let a = &p(&[-1, 1]) * &p(&[2, 1]); // (z−1)(z+2)
        let b = &p(&[-1, 1]) * &p(&[5, 1]); // (z−1)(z+5)
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn ratuni_reduces() {
        let f = RatUni::new(p(&[-1, 0, 1]), p(&[-1, 1])); // (z²−1)/(z−1) = z+1
        assert_eq!(f.num(), &p(&[1, 1]));
        assert_eq!(f.den(), &UniPoly::one());
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dz (1/z) = −1/z²
        let f = RatUni::new(UniPoly::one(), p(&[0, 1]));
        let df = f.derivative();
        assert_eq!(df, RatUni::new(p(&[-1]), p(&[0, 0, 1])));
    }

    #[test]
    fn orders() {
        // f = z²/(z−1): ord 2 at 0, ord −1 at 1, ord −1 at ∞.
        let f = RatUni::new(p(&[0, 0, 1]), p(&[-1, 1]));
        assert_eq!(f.ord_at(&rat(0)), 2);
        assert_eq!(f.ord_at(&rat(1)), -1);
        assert_eq!(f.ord_at_infinity(), -1);
    }

    #[test]
    fn compose_linear_shift() {
        // (z+1)² = z² + 2z + 1 via shifting z² by 1.
        let f = p(&[0, 0, 1]).compose_linear(&rat(1));
        assert_eq!(f, p(&[1, 2, 1]));
    }

    #[test]
    fn reverse_pad_inverts_variable() {
        // z³·(z + 2)(1/z) ↦ z³·(1/z + 2) = z² + 2z³
        let f = p(&[2, 1]).reverse_pad(3);
        assert_eq!(f, p(&[0, 0, 1, 2]));
    }
}
