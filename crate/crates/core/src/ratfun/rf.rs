//! Rational functions num/den with cross-multiplication equality.
//!
//! No multivariate GCD is attempted: the denominator is normalized so its
//! graded-lex leading coefficient is 1, and equality is decided exactly by
//! a·d = c·b. This keeps every operation polynomial-time and exact.

use super::poly::{Mono, Polynomial};
use super::{Field, Rat, RatFunError};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Rational function in a fixed ambient variable set.
#[derive(Clone, Debug)]
pub struct RationalFunction<C: Field> {
    num: Polynomial<C>,
    den: Polynomial<C>,
}

/// The default flavor: rational coefficients.
pub type Rf = RationalFunction<Rat>;

impl<C: Field> RationalFunction<C> {
    /// Build num/den, normalizing so den's leading coefficient is 1.
    /// Panics if den is the zero polynomial (a structural bug, not user input).
    pub fn new(num: Polynomial<C>, den: Polynomial<C>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        assert_eq!(num.nvars(), den.nvars(), "variable mismatch");
        if num.is_zero() {
            return RationalFunction {
                num,
                den: Polynomial::one(den.nvars()),
            };
        }
        let lc = den.leading().map(|(_, c)| c.clone()).unwrap();
        if lc == C::one() {
            return RationalFunction { num, den };
        }
        let inv = lc.inv();
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: Polynomial<C>) -> Self {
        let n = p.nvars();
        RationalFunction { num: p, den: Polynomial::one(n) }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::from_poly(Polynomial::constant(nvars, c))
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(Polynomial::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(Polynomial::one(nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_poly(Polynomial::var(nvars, i))
    }

    /// Laurent monomial c·∏ vᵢ^{eᵢ} with integer exponents of either sign.
    pub fn monomial(nvars: usize, exps: &[i64], c: C) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut up = vec![0u32; nvars];
        let mut down = vec![0u32; nvars];
        for (i, &e) in exps.iter().enumerate() {
            if e >= 0 {
                up[i] = e as u32;
            } else {
                down[i] = (-e) as u32;
            }
        }
        RationalFunction::new(
            Polynomial::monomial(nvars, Mono(up), c),
            Polynomial::monomial(nvars, Mono(down), C::one()),
        )
    }

    pub fn num(&self) -> &Polynomial<C> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<C> {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Self {
        assert!(!self.num.is_zero(), "inverting zero");
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    /// Integer power; negative exponents invert (value must be nonzero).
    pub fn powi(&self, e: i64) -> Self {
        if e == 0 {
            return Self::one(self.nvars());
        }
        let base = if e < 0 { self.inv() } else { self.clone() };
        let m = e.unsigned_abs() as u32;
        RationalFunction::new(base.num.pow(m), base.den.pow(m))
    }

    /// True iff this value is a Laurent monomial (single term over single term).
    pub fn is_laurent_monomial(&self) -> bool {
        self.num.is_monomial() && self.den.is_monomial()
    }

    /// Decompose a Laurent monomial into (coefficient, exponent vector).
    pub fn as_laurent_monomial(&self) -> Option<(C, Vec<i64>)> {
        if !self.is_laurent_monomial() {
            return None;
        }
        let (mn, cn) = self.num.leading()?;
        let (md, cd) = self.den.leading()?;
        let exps = mn
            .0
            .iter()
            .zip(&md.0)
            .map(|(&a, &b)| a as i64 - b as i64)
            .collect();
        Some((cn.clone() / cd.clone(), exps))
    }

    pub fn render(&self, names: &[String]) -> String
    where
        C: std::fmt::Display,
    {
        if self.den.is_one() {
            self.num.render(names)
        } else {
            format!("({}) / ({})", self.num.render(names), self.den.render(names))
        }
    }
}

/// Exact equality by cross-multiplication: a.num·b.den = b.num·a.den.
pub fn rf_equal<C: Field>(
    a: &RationalFunction<C>,
    b: &RationalFunction<C>,
) -> Result<bool, RatFunError> {
    if a.nvars() != b.nvars() {
        return Err(RatFunError::VariableMismatch);
    }
    Ok(&a.num * &b.den == &b.num * &a.den)
}

impl<C: Field> PartialEq for RationalFunction<C> {
    fn eq(&self, other: &Self) -> bool {
        rf_equal(self, other).expect("variable mismatch in ==")
    }
}

impl<C: Field> Add for &RationalFunction<C> {
    type Output = RationalFunction<C>;
    fn add(self, o: &RationalFunction<C>) -> RationalFunction<C> {
        RationalFunction::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl<C: Field> Sub for &RationalFunction<C> {
    type Output = RationalFunction<C>;
    fn sub(self, o: &RationalFunction<C>) -> RationalFunction<C> {
        RationalFunction::new(
            &(&self.num * &o.den) - &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl<C: Field> Mul for &RationalFunction<C> {
    type Output = RationalFunction<C>;
    fn mul(self, o: &RationalFunction<C>) -> RationalFunction<C> {
        RationalFunction::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl<C: Field> Div for &RationalFunction<C> {
    type Output = RationalFunction<C>;
    fn div(self, o: &RationalFunction<C>) -> RationalFunction<C> {
        assert!(!o.num.is_zero(), "division by zero rational function");
        RationalFunction::new(&self.num * &o.den, &self.den * &o.num)
    }
}

impl<C: Field> Neg for &RationalFunction<C> {
    type Output = RationalFunction<C>;
    fn neg(self) -> RationalFunction<C> {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

/// Substitute an image for every variable: the homomorphism determined by
/// `images[i]` ← variable i. All images must share one (target) variable set.
pub fn rf_substitute<C: Field>(
    f: &RationalFunction<C>,
    images: &[RationalFunction<C>],
) -> Result<RationalFunction<C>, RatFunError> {
    if images.len() != f.nvars() {
        return Err(RatFunError::VariableMismatch);
    }
    let tv = match images.first() {
        Some(g) => g.nvars(),
        None => 0,
    };
    if images.iter().any(|g| g.nvars() != tv) {
        return Err(RatFunError::VariableMismatch);
    }

    // Joint maximal exponent per variable across num and den.
    let nv = f.nvars();
    let mut maxe = vec![0u32; nv];
    for (i, e) in maxe.iter_mut().enumerate() {
        *e = f.num.max_exponent(i).max(f.den.max_exponent(i));
    }

    // Power tables for image numerators and denominators.
    let mut npow: Vec<Vec<Polynomial<C>>> = Vec::with_capacity(nv);
    let mut dpow: Vec<Vec<Polynomial<C>>> = Vec::with_capacity(nv);
    for (i, img) in images.iter().enumerate() {
        let mut ns = Vec::with_capacity(maxe[i] as usize + 1);
        let mut ds = Vec::with_capacity(maxe[i] as usize + 1);
        ns.push(Polynomial::one(tv));
        ds.push(Polynomial::one(tv));
        for e in 1..=maxe[i] as usize {
            ns.push(&ns[e - 1] * img.num());
            ds.push(&ds[e - 1] * img.den());
        }
        npow.push(ns);
        dpow.push(ds);
    }

    // Over the common denominator D = ∏ dᵢ^{maxeᵢ}, a term with exponents e
    // contributes c·∏ nᵢ^{eᵢ}·dᵢ^{maxeᵢ−eᵢ}.
    let subst_poly = |p: &Polynomial<C>| -> Polynomial<C> {
        let mut acc = Polynomial::zero(tv);
        for (m, c) in p.terms() {
            let mut t = Polynomial::constant(tv, c.clone());
            for i in 0..nv {
                let e = m.0[i] as usize;
                if e > 0 {
                    t = &t * &npow[i][e];
                }
                let co = maxe[i] as usize - e;
                if co > 0 {
                    t = &t * &dpow[i][co];
                }
            }
            acc = &acc + &t;
        }
        acc
    };

    let a = subst_poly(&f.num);
    let c = subst_poly(&f.den);
    if c.is_zero() {
        return Err(RatFunError::DivisionByZero);
    }
    Ok(RationalFunction::new(a, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfun::rat;

    fn v(i: usize) -> Rf {
        Rf::var(2, i)
    }

    #[test]
    fn quotient_of_quotients() {
        // ((a/b)/(c/d)) = (a·d)/(b·c) on small polynomials.
        let a = &v(0) + &Rf::one(2);
        let b = &v(1) + &Rf::constant(2, rat(2));
        let c = &v(0) - &v(1);
        let d = &(&v(0) * &v(1)) + &Rf::one(2);
        let lhs = &(&a / &b) / &(&c / &d);
        let rhs = &(&a * &d) / &(&b * &c);
        assert!(rf_equal(&lhs, &rhs).unwrap());
    }

    #[test]
    fn common_factor_equality() {
        // (x²−1)/(x−1) = (x+1)/1.
        let x = v(0);
        let lhs = &(&(&x * &x) - &Rf::one(2)) / &(&x - &Rf::one(2));
        let rhs = &x + &Rf::one(2);
        assert!(rf_equal(&lhs, &rhs).unwrap());
        assert!(!rf_equal(&v(0), &v(1)).unwrap());
    }

    #[test]
    fn den_leading_coefficient_normalized() {
        let two_x = Rf::from_poly(Polynomial::var(2, 0).scale(&rat(2)));
        let f = &Rf::one(2) / &two_x;
        let (_, lc) = f.den().leading().unwrap();
        assert_eq!(lc, &rat(1));
    }

    #[test]
    fn substitute_monomial_map() {
        // f = x₀x₁ under x₀ ↦ x₀⁻¹ gives x₁/x₀.
        let f = &v(0) * &v(1);
        let images = vec![v(0).inv(), v(1)];
        let g = rf_substitute(&f, &images).unwrap();
        assert!(rf_equal(&g, &(&v(1) / &v(0))).unwrap());
    }

    #[test]
    fn substitute_identity_and_roundtrip() {
        let f = &(&v(0) + &v(1)) / &(&v(0) * &v(1));
        let id = vec![v(0), v(1)];
        assert!(rf_equal(&rf_substitute(&f, &id).unwrap(), &f).unwrap());

        // Mutually inverse monomial maps round-trip.
        let fwd = vec![&v(0).inv() * &v(1), v(1).inv()];
        // Inverse of (x0 ↦ x0⁻¹x1, x1 ↦ x1⁻¹): x0 ↦ x0⁻¹x1⁻¹, x1 ↦ x1⁻¹.
        let bwd = vec![&v(0).inv() * &v(1).inv(), v(1).inv()];
        let once = rf_substitute(&f, &fwd).unwrap();
        let back = rf_substitute(&once, &bwd).unwrap();
        assert!(rf_equal(&back, &f).unwrap());
    }

    #[test]
    fn laurent_monomial_decomposition() {
        let m = Rf::monomial(2, &[2, -3], rat(5));
        let (c, e) = m.as_laurent_monomial().unwrap();
        assert_eq!(c, rat(5));
        assert_eq!(e, vec![2, -3]);
        let not = &v(0) + &v(1);
        assert!(not.as_laurent_monomial().is_none());
    }

    #[test]
    fn powi_negative() {
        let f = &v(0) + &Rf::one(2);
        let p = f.powi(-2);
        let q = &Rf::one(2) / &(&f * &f);
        assert!(rf_equal(&p, &q).unwrap());
    }
}
