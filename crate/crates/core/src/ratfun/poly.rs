//! Sparse multivariate polynomials with a graded-lexicographic term order.

use super::Field;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector of one monomial. Exponents are always ≥ 0; Laurent
/// behaviour lives in `RationalFunction` via denominators.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn unit(nvars: usize) -> Self {
        Mono(vec![0; nvars])
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    fn mul(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Mono {
    /// Graded lex: total degree first, then lexicographic on exponents.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial: exponent vector → nonzero coefficient.
#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<C: Field> {
    nvars: usize,
    terms: BTreeMap<Mono, C>,
}

impl<C: Field> Polynomial<C> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::unit(nvars), c);
        }
        Polynomial { nvars, terms }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    /// The generator with index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::var_pow(nvars, i, 1)
    }

    /// x_i^e.
    pub fn var_pow(nvars: usize, i: usize, e: u32) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut m = vec![0; nvars];
        m[i] = e;
        Self::monomial(nvars, Mono(m), C::one())
    }

    pub fn monomial(nvars: usize, m: Mono, c: C) -> Self {
        assert_eq!(m.0.len(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Mono::unit(self.nvars))
                .map(|c| c.clone() == C::one())
                .unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &C)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Leading (maximal) term under graded lex; None for the zero polynomial.
    pub fn leading(&self) -> Option<(&Mono, &C)> {
        self.terms.iter().next_back()
    }

    /// True iff the polynomial is a single term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
            .collect();
        Polynomial { nvars: self.nvars, terms }
    }

    fn add_term(terms: &mut BTreeMap<Mono, C>, m: Mono, c: C) {
        if c.is_zero() {
            return;
        }
        match terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Highest exponent of variable `i` appearing in any term.
    pub fn max_exponent(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    /// Render with the given variable names (graded-lex descending).
    pub fn render(&self, names: &[String]) -> String
    where
        C: std::fmt::Display,
    {
        assert_eq!(names.len(), self.nvars);
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let cs = c.to_string();
            if i > 0 {
                out.push_str(" + ");
            }
            let is_const = m.degree() == 0;
            let needs_coeff = is_const || cs != "1";
            if needs_coeff {
                if cs.contains('+') || (cs.contains('-') && !cs.starts_with('-')) {
                    let _ = write!(out, "({})", cs);
                } else {
                    out.push_str(&cs);
                }
                if !is_const {
                    out.push('*');
                }
            }
            let mut first = true;
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    out.push('*');
                }
                first = false;
                if e == 1 {
                    let _ = write!(out, "{}", names[v]);
                } else {
                    let _ = write!(out, "{}^{}", names[v], e);
                }
            }
        }
        out
    }
}

impl<C: Field> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, o: &Polynomial<C>) -> Polynomial<C> {
        assert_eq!(self.nvars, o.nvars, "variable mismatch");
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            Polynomial::add_term(&mut terms, m.clone(), c.clone());
        }
        Polynomial { nvars: self.nvars, terms }
    }
}

impl<C: Field> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, o: &Polynomial<C>) -> Polynomial<C> {
        self + &(-o)
    }
}

impl<C: Field> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        Polynomial { nvars: self.nvars, terms }
    }
}

impl<C: Field> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, o: &Polynomial<C>) -> Polynomial<C> {
        assert_eq!(self.nvars, o.nvars, "variable mismatch");
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                Polynomial::add_term(&mut terms, m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        Polynomial { nvars: self.nvars, terms }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfun::{rat, Rat};

    fn x(i: usize) -> Polynomial<Rat> {
        Polynomial::var(2, i)
    }

    #[test]
    fn difference_of_squares() {
        let sum = &x(0) + &x(1);
        let diff = &x(0) - &x(1);
        let prod = &sum * &diff;
        let expect = &(&x(0) * &x(0)) - &(&x(1) * &x(1));
        assert_eq!(prod, expect);
    }

    #[test]
    fn graded_lex_leading_term() {
        // x0^2 beats x0*x1 beats x1^2 beats x0.
        let p = &(&x(0).pow(2) + &(&x(0) * &x(1))) + &Polynomial::constant(2, rat(5));
        let (m, _) = p.leading().unwrap();
        assert_eq!(m.0, vec![2, 0]);
    }

    #[test]
    fn zero_terms_are_dropped() {
        let p = &x(0) - &x(0);
        assert!(p.is_zero());
        assert_eq!(p.term_count(), 0);
    }

    #[test]
    fn render_names() {
        let p = &(&x(0) * &x(0)) + &Polynomial::constant(2, rat(-1));
        let names = vec!["x1".to_string(), "x2".to_string()];
        assert_eq!(p.render(&names), "x1^2 + -1");
    }
}
