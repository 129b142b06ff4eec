//! Labeled seeds and the exchange relations, in two coefficient flavors:
//! universal (coefficients are rational functions of the initial y⁰, with
//! ⊕ realized as ordinary +) and tropical (coefficients are exponent
//! vectors, mutated in the min-plus semifield).
//!
//! Generator layout: a seed of rank n lives in ℚ(x⁰₁…x⁰ₙ, y⁰₁…y⁰ₙ), with
//! x⁰_i at variable index i and y⁰_i at index n+i.

use super::matrix::pos;
use super::{ClusterError, ExchangeMatrix};
use crate::ratfun::{rat, RationalFunction, Rf};
use crate::tropical::{tropical_y_mutation, Sign, TropicalMonomial};

#[derive(Clone, Debug, PartialEq)]
pub enum Coefficients {
    Universal(Vec<Rf>),
    Tropical(Vec<TropicalMonomial>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Seed {
    b: ExchangeMatrix,
    x: Vec<Rf>,
    y: Coefficients,
}

pub fn xvar(i: usize, n: usize) -> Rf {
    RationalFunction::var(2 * n, i)
}

pub fn yvar(i: usize, n: usize) -> Rf {
    RationalFunction::var(2 * n, n + i)
}

fn one(n: usize) -> Rf {
    RationalFunction::constant(2 * n, rat(1))
}

/// Embed a tropical monomial as the Laurent monomial ∏(y⁰_j)^{c_j}.
pub fn monomial_rf(m: &TropicalMonomial) -> Rf {
    let n = m.len();
    let mut exps = vec![0i64; 2 * n];
    exps[n..].copy_from_slice(m.exponents());
    RationalFunction::monomial(2 * n, &exps, rat(1))
}

impl Seed {
    pub fn new(b: ExchangeMatrix, x: Vec<Rf>, y: Coefficients) -> Self {
        let n = b.n();
        assert_eq!(x.len(), n);
        match &y {
            Coefficients::Universal(v) => assert_eq!(v.len(), n),
            Coefficients::Tropical(v) => assert_eq!(v.len(), n),
        }
        Seed { b, x, y }
    }

    pub fn initial_universal(b: ExchangeMatrix) -> Self {
        let n = b.n();
        let x = (0..n).map(|i| xvar(i, n)).collect();
        let y = (0..n).map(|i| yvar(i, n)).collect();
        Seed { b, x, y: Coefficients::Universal(y) }
    }

    pub fn initial_tropical(b: ExchangeMatrix) -> Self {
        let n = b.n();
        let x = (0..n).map(|i| xvar(i, n)).collect();
        let y = (0..n).map(|i| TropicalMonomial::generator(i, n)).collect();
        Seed { b, x, y: Coefficients::Tropical(y) }
    }

    pub fn n(&self) -> usize {
        self.b.n()
    }

    pub fn b(&self) -> &ExchangeMatrix {
        &self.b
    }

    pub fn x(&self) -> &[Rf] {
        &self.x
    }

    pub fn y(&self) -> &Coefficients {
        &self.y
    }

    pub fn y_universal(&self) -> Result<&[Rf], ClusterError> {
        match &self.y {
            Coefficients::Universal(v) => Ok(v),
            Coefficients::Tropical(_) => Err(ClusterError::FlavorMismatch),
        }
    }

    pub fn y_tropical(&self) -> Result<&[TropicalMonomial], ClusterError> {
        match &self.y {
            Coefficients::Tropical(v) => Ok(v),
            Coefficients::Universal(_) => Err(ClusterError::FlavorMismatch),
        }
    }

    /// Coefficient y_i as a rational function, whatever the flavor.
    pub fn y_rf(&self, i: usize) -> Rf {
        match &self.y {
            Coefficients::Universal(v) => v[i].clone(),
            Coefficients::Tropical(v) => monomial_rf(&v[i]),
        }
    }

    /// ŷ_i = y_i ∏_j x_j^{b_{ji}}.
    pub fn yhat(&self) -> Vec<Rf> {
        let n = self.n();
        (0..n)
            .map(|i| {
                let mut h = self.y_rf(i);
                for j in 0..n {
                    let e = self.b.entry(j, i);
                    if e != 0 {
                        h = &h * &self.x[j].powi(e);
                    }
                }
                h
            })
            .collect()
    }

    /// The exchange relations: B by matrix mutation, y by the coefficient
    /// rule, x_k by the ŷ form. Tropical flavor leaves x untouched.
    pub fn mutate(&self, k: usize) -> Result<Seed, ClusterError> {
        self.b.check_index(k)?;
        let n = self.n();
        let b2 = self.b.mutate(k)?;
        match &self.y {
            Coefficients::Tropical(y) => {
                let y2 = tropical_y_mutation(y, &self.b, k)
                    .map_err(|_| ClusterError::IndexOutOfRange)?;
                Ok(Seed { b: b2, x: self.x.clone(), y: Coefficients::Tropical(y2) })
            }
            Coefficients::Universal(y) => {
                let yk = &y[k];
                let one_plus_yk = &one(n) + yk;
                let mut y2 = Vec::with_capacity(n);
                for (i, yi) in y.iter().enumerate() {
                    if i == k {
                        y2.push(yk.inv());
                    } else {
                        let bki = self.b.entry(k, i);
                        y2.push(&(yi * &yk.powi(pos(bki))) * &one_plus_yk.powi(-bki));
                    }
                }
                let yhat_k = &self.yhat()[k];
                let mut xk = self.x[k].inv();
                for j in 0..n {
                    let e = pos(-self.b.entry(j, k));
                    if e != 0 {
                        xk = &xk * &self.x[j].powi(e);
                    }
                }
                xk = &(&xk * &(&one(n) + yhat_k)) / &one_plus_yk;
                let mut x2 = self.x.clone();
                x2[k] = xk;
                Ok(Seed { b: b2, x: x2, y: Coefficients::Universal(y2) })
            }
        }
    }

    /// ε-expressions of the exchange relations; the result is ε-independent
    /// and equal to `mutate`.
    pub fn mutate_eps(&self, k: usize, eps: Sign) -> Result<Seed, ClusterError> {
        self.b.check_index(k)?;
        let n = self.n();
        let e = eps.as_i64();
        let y = self.y_universal()?;
        let b2 = self.b.mutate(k)?;
        let yk_e = y[k].powi(e);
        let denom = &one(n) + &yk_e; // 1 ⊕ y_k^ε
        let mut y2 = Vec::with_capacity(n);
        for (i, yi) in y.iter().enumerate() {
            if i == k {
                y2.push(y[k].inv());
            } else {
                let bki = self.b.entry(k, i);
                y2.push(&(yi * &y[k].powi(pos(e * bki))) * &denom.powi(-bki));
            }
        }
        let yhat_k = self.yhat()[k].powi(e);
        let mut xk = self.x[k].inv();
        for j in 0..n {
            let exp = pos(-e * self.b.entry(j, k));
            if exp != 0 {
                xk = &xk * &self.x[j].powi(exp);
            }
        }
        xk = &(&xk * &(&one(n) + &yhat_k)) / &denom;
        let mut x2 = self.x.clone();
        x2[k] = xk;
        Ok(Seed { b: b2, x: x2, y: Coefficients::Universal(y2) })
    }

    /// Signed monomial mutation m_k^{(ε)}: a monomial substitution that drops
    /// the ⊕-denominators entirely. Requires monomial x-components.
    pub fn signed_monomial_mutation(&self, k: usize, eps: Sign) -> Result<Seed, ClusterError> {
        self.b.check_index(k)?;
        let n = self.n();
        let e = eps.as_i64();
        let y = self.y_tropical()?;
        if self.x.iter().any(|x| !x.is_laurent_monomial()) {
            return Err(ClusterError::NonMonomialInput);
        }
        let b2 = self.b.mutate(k)?;
        let mut y2 = Vec::with_capacity(n);
        for (i, yi) in y.iter().enumerate() {
            if i == k {
                y2.push(yi.inv());
            } else {
                y2.push(yi.mul(&y[k].pow(pos(e * self.b.entry(k, i)))));
            }
        }
        let mut xk = self.x[k].inv();
        for j in 0..n {
            let exp = pos(-e * self.b.entry(j, k));
            if exp != 0 {
                xk = &xk * &self.x[j].powi(exp);
            }
        }
        let mut x2 = self.x.clone();
        x2[k] = xk;
        Ok(Seed { b: b2, x: x2, y: Coefficients::Tropical(y2) })
    }

    /// Signed mutation μ_k^{(ε)} on a tropical-flavor seed: the monomial part
    /// plus the automorphism factor (1 + ŷ_k^ε) on x_k; μ_k^{(+)} and
    /// μ_k^{(−)} are mutually inverse.
    pub fn signed_mutation(&self, k: usize, eps: Sign) -> Result<Seed, ClusterError> {
        self.b.check_index(k)?;
        let n = self.n();
        let e = eps.as_i64();
        let y = self.y_tropical()?;
        let b2 = self.b.mutate(k)?;
        let mut y2 = Vec::with_capacity(n);
        for (i, yi) in y.iter().enumerate() {
            if i == k {
                y2.push(yi.inv());
            } else {
                y2.push(yi.mul(&y[k].pow(pos(e * self.b.entry(k, i)))));
            }
        }
        let yhat_k = self.yhat()[k].powi(e);
        let mut xk = self.x[k].inv();
        for j in 0..n {
            let exp = pos(-e * self.b.entry(j, k));
            if exp != 0 {
                xk = &xk * &self.x[j].powi(exp);
            }
        }
        xk = &xk * &(&one(n) + &yhat_k);
        let mut x2 = self.x.clone();
        x2[k] = xk;
        Ok(Seed { b: b2, x: x2, y: Coefficients::Tropical(y2) })
    }
}

/// ν-periodicity via the coefficient condition: after the sequence,
/// y'_{ν(i)} = y_i for all i.
pub fn check_period(s0: &Seed, ks: &[usize], nu: &[usize]) -> Result<bool, ClusterError> {
    let n = s0.n();
    if nu.len() != n {
        return Err(ClusterError::ArityMismatch);
    }
    let mut seen = vec![false; n];
    for &v in nu {
        if v >= n || seen[v] {
            return Err(ClusterError::ArityMismatch);
        }
        seen[v] = true;
    }
    let mut s = s0.clone();
    for &k in ks {
        s = s.mutate(k)?;
    }
    match (&s0.y, &s.y) {
        (Coefficients::Universal(y0), Coefficients::Universal(y1)) => {
            for i in 0..n {
                if y1[nu[i]] != y0[i] {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        (Coefficients::Tropical(y0), Coefficients::Tropical(y1)) => {
            for i in 0..n {
                if y1[nu[i]] != y0[i] {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        _ => Err(ClusterError::FlavorMismatch),
    }
}

/// Parse helper for tests and the JSON boundary: the canonical generator
/// names x1…xn, y1…yn of a rank-n seed.
pub fn generator_names(n: usize) -> Vec<String> {
    let mut v: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    v.extend((1..=n).map(|i| format!("y{i}")));
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfun::parse_rational_function;

    fn a2() -> ExchangeMatrix {
        ExchangeMatrix::new(vec![vec![0, 1], vec![-1, 0]]).unwrap()
    }

    fn parse2(src: &str) -> Rf {
        let names = generator_names(2);
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        parse_rational_function(src, &refs).unwrap()
    }

    #[test]
    fn yhat_of_the_initial_rank_two_seed() {
        let s = Seed::initial_universal(a2());
        let h = s.yhat();
        assert_eq!(h[0], parse2("y1/x2"));
        assert_eq!(h[1], parse2("y2*x1"));
    }

    #[test]
    fn yhat_trivial_when_b_is_zero() {
        let s = Seed::initial_universal(ExchangeMatrix::zero(2));
        let h = s.yhat();
        assert_eq!(h[0], parse2("y1"));
        assert_eq!(h[1], parse2("y2"));
    }

    #[test]
    fn first_pentagon_step() {
        let s = Seed::initial_universal(a2()).mutate(0).unwrap();
        assert_eq!(s.x()[0], parse2("(x2+y1)/(x1*(1+y1))"));
        assert_eq!(s.x()[1], parse2("x2"));
        let y = s.y_universal().unwrap();
        assert_eq!(y[0], parse2("1/y1"));
        assert_eq!(y[1], parse2("y1*y2/(1+y1)"));
    }

    #[test]
    fn mutation_is_involutive_universal() {
        let b = ExchangeMatrix::new(vec![
            vec![0, 2, -1],
            vec![-2, 0, 1],
            vec![1, -1, 0],
        ])
        .unwrap();
        let s = Seed::initial_universal(b);
        for k in 0..3 {
            let back = s.mutate(k).unwrap().mutate(k).unwrap();
            assert_eq!(back, s);
        }
    }

    #[test]
    fn eps_expressions_match_plain_mutation() {
        let s = Seed::initial_universal(a2());
        let plain = s.mutate(0).unwrap();
        let plus = s.mutate_eps(0, Sign::Plus).unwrap();
        let minus = s.mutate_eps(0, Sign::Minus).unwrap();
        assert_eq!(plus, plain);
        assert_eq!(minus, plain);
    }

    #[test]
    fn signed_monomial_rank_two() {
        let s = Seed::initial_tropical(a2());
        let m = s.signed_monomial_mutation(0, Sign::Plus).unwrap();
        let y = m.y_tropical().unwrap();
        assert_eq!(y[0].exponents(), &[-1, 0]);
        assert_eq!(y[1].exponents(), &[1, 1]);
        assert_eq!(m.x()[0], parse2("1/x1"));
        assert_eq!(m.x()[1], parse2("x2"));
    }

    #[test]
    fn signed_mutations_are_mutually_inverse() {
        let b = ExchangeMatrix::new(vec![
            vec![0, 1, -2],
            vec![-1, 0, 1],
            vec![2, -1, 0],
        ])
        .unwrap();
        let s = Seed::initial_tropical(b);
        let fwd = s.signed_mutation(1, Sign::Plus).unwrap();
        let back = fwd.signed_mutation(1, Sign::Minus).unwrap();
        assert_eq!(back, s);
        let fwd2 = s.signed_mutation(1, Sign::Minus).unwrap();
        let back2 = fwd2.signed_mutation(1, Sign::Plus).unwrap();
        assert_eq!(back2, s);
    }

    #[test]
    fn period_checks() {
        let s = Seed::initial_universal(a2());
        assert!(check_period(&s, &[0, 1, 0, 1, 0], &[1, 0]).unwrap());
        assert!(check_period(&s, &[0, 0], &[0, 1]).unwrap());
        assert!(!check_period(&s, &[0], &[0, 1]).unwrap());
        assert!(check_period(&s, &[0], &[0, 0]).is_err());
    }
}
