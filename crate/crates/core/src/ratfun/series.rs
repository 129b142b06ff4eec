//! Truncated Laurent series: exact local expansions at a point, used for
//! valuations and residues. A series knows the exponent below which it is
//! complete (`lo`) and the exponent bound up to which it is accurate (`top`,
//! exclusive); arithmetic propagates accuracy honestly.

use super::uni::RatUni;
use super::Field;

/// Σ coeffs[j]·t^(lo+j), accurate for exponents < top = lo + coeffs.len().
#[derive(Clone, Debug, PartialEq)]
pub struct Laurent<C: Field> {
    lo: i64,
    coeffs: Vec<C>,
}

impl<C: Field> Laurent<C> {
    pub fn new(lo: i64, coeffs: Vec<C>) -> Self {
        Laurent { lo, coeffs }
    }

    /// Zero series accurate below `top`.
    pub fn zero_to(top: i64) -> Self {
        Laurent { lo: top, coeffs: Vec::new() }
    }

    pub fn top(&self) -> i64 {
        self.lo + self.coeffs.len() as i64
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn coeff(&self, e: i64) -> C {
        if e < self.lo {
            return C::zero();
        }
        let j = (e - self.lo) as usize;
        self.coeffs.get(j).cloned().unwrap_or_else(C::zero)
    }

    /// Coefficient of t⁻¹.
    pub fn residue(&self) -> C {
        assert!(self.top() > -1, "series truncated above the residue");
        self.coeff(-1)
    }

    /// Exponent of the first nonzero coefficient, if any is visible.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|j| self.lo + j as i64)
    }

    /// Drop leading zeros (tightens `lo` without changing the value).
    pub fn trim(mut self) -> Self {
        let mut k = 0;
        while k < self.coeffs.len() && self.coeffs[k].is_zero() {
            k += 1;
        }
        self.lo += k as i64;
        self.coeffs.drain(..k);
        self
    }

    pub fn truncate(mut self, top: i64) -> Self {
        let keep = (top - self.lo).max(0) as usize;
        self.coeffs.truncate(keep);
        self
    }

    pub fn add(&self, o: &Self) -> Self {
        let top = self.top().min(o.top());
        let lo = self.lo.min(o.lo);
        let mut v = Vec::with_capacity((top - lo).max(0) as usize);
        let mut e = lo;
        while e < top {
            v.push(self.coeff(e) + o.coeff(e));
            e += 1;
        }
        Laurent { lo, coeffs: v }.trim()
    }

    pub fn neg(&self) -> Self {
        Laurent {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        Laurent {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let a = self.clone().trim();
        let b = o.clone().trim();
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            // A (visibly) zero factor: accuracy still bounded by the truncation.
            let top = if a.coeffs.is_empty() { a.lo + b.lo.max(0) } else { b.lo + a.lo.max(0) };
            return Laurent::zero_to(top.min(a.top() + b.top()));
        }
        let lo = a.lo + b.lo;
        let n = a.coeffs.len().min(b.coeffs.len());
        let mut v = vec![C::zero(); n];
        for (i, ca) in a.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                v[i + j] = v[i + j].clone() + ca.clone() * cb.clone();
            }
        }
        Laurent { lo, coeffs: v }
    }

    /// t-derivative, term by term.
    pub fn derivative(&self) -> Self {
        let mut v = Vec::with_capacity(self.coeffs.len());
        for (j, c) in self.coeffs.iter().enumerate() {
            let e = self.lo + j as i64;
            let mut m = C::zero();
            let a = e.unsigned_abs();
            for _ in 0..a {
                m = m + C::one();
            }
            if e < 0 {
                m = -m;
            }
            v.push(c.clone() * m);
        }
        Laurent { lo: self.lo - 1, coeffs: v }.trim()
    }

    /// Multiplicative inverse; the leading visible coefficient must be nonzero.
    pub fn inverse(&self) -> Self {
        let a = self.clone().trim();
        let lead = a.coeffs.first().expect("inverting a zero series").clone();
        assert!(!lead.is_zero());
        let n = a.coeffs.len();
        let inv_lead = lead.inv();
        // Write a = lead·t^lo·(1 + u), invert the unit part by recurrence.
        let mut r = vec![C::zero(); n];
        r[0] = C::one();
        for k in 1..n {
            let mut s = C::zero();
            for j in 1..=k {
                let u_j = a.coeffs[j].clone() * inv_lead.clone();
                s = s + u_j * r[k - j].clone();
            }
            r[k] = -s;
        }
        let coeffs = r.into_iter().map(|c| c * inv_lead.clone()).collect();
        Laurent { lo: -a.lo, coeffs }
    }

    /// Square root of a series with constant term 1 at exponent 0.
    pub fn sqrt_unit(&self) -> Self {
        let a = self.clone().trim();
        assert_eq!(a.lo, 0, "sqrt_unit needs valuation 0");
        assert!(a.coeffs[0].clone() == C::one(), "sqrt_unit needs leading 1");
        let n = a.coeffs.len();
        let two = C::one() + C::one();
        let mut r = vec![C::zero(); n];
        r[0] = C::one();
        for k in 1..n {
            let mut s = C::zero();
            for j in 1..k {
                s = s + r[j].clone() * r[k - j].clone();
            }
            r[k] = (a.coeffs[k].clone() - s) / two.clone();
        }
        Laurent { lo: 0, coeffs: r }
    }
}

/// Laurent expansion of a univariate rational function around the point `p`,
/// exact, with coefficients accurate for exponents < `top`.
pub fn expand_at<C: Field>(f: &RatUni<C>, p: &C, top: i64) -> Laurent<C> {
    if f.is_zero() {
        return Laurent::zero_to(top);
    }
    let num = f.num().compose_linear(p);
    let den = f.den().compose_linear(p);
    // Strip the pure powers of t from both sides.
    let strip = |poly: &super::uni::UniPoly<C>| -> (i64, Vec<C>) {
        let cs = poly.coeffs();
        let k = cs.iter().position(|c| !c.is_zero()).expect("nonzero");
        (k as i64, cs[k..].to_vec())
    };
    let (kn, ncs) = strip(&num);
    let (kd, dcs) = strip(&den);
    let lo = kn - kd;
    // Need coefficients up to exponent top−1, i.e. len = top − lo of the unit part.
    let len = (top - lo).max(0) as usize;
    if len == 0 {
        return Laurent::zero_to(top);
    }
    let pad = |mut v: Vec<C>| {
        v.resize(len, C::zero());
        v
    };
    let ns = Laurent::new(0, pad(ncs));
    let ds = Laurent::new(0, pad(dcs));
    let unit = ns.mul(&ds.inverse());
    Laurent::new(lo + unit.lo(), unit.coeffs).trim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfun::uni::{RatUni, UniPoly};
    use crate::ratfun::{rat, Rat};

    fn p(cs: &[i64]) -> UniPoly<Rat> {
        UniPoly::new(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn geometric_series() {
        // 1/(1−z) = 1 + z + z² + …
        let f = RatUni::new(UniPoly::one(), p(&[1, -1]));
        let s = expand_at(&f, &rat(0), 5);
        for e in 0..5 {
            assert_eq!(s.coeff(e), rat(1));
        }
    }

    #[test]
    fn simple_pole_residue() {
        // (z+2)/z has residue 2 at 0.
        let f = RatUni::new(p(&[2, 1]), p(&[0, 1]));
        let s = expand_at(&f, &rat(0), 3);
        assert_eq!(s.residue(), rat(2));
        assert_eq!(s.valuation(), Some(-1));
    }

    #[test]
    fn shifted_expansion() {
        // 1/(z−1) at p=1: t⁻¹.
        let f = RatUni::new(UniPoly::one(), p(&[-1, 1]));
        let s = expand_at(&f, &rat(1), 2);
        assert_eq!(s.valuation(), Some(-1));
        assert_eq!(s.coeff(-1), rat(1));
        assert_eq!(s.coeff(0), rat(0));
    }

    #[test]
    fn inverse_and_mul_roundtrip() {
        let f = RatUni::new(p(&[1, 2, 3]), p(&[0, 0, 1]));
        let s = expand_at(&f, &rat(0), 4);
        let prod = s.mul(&s.inverse());
        assert_eq!(prod.coeff(0), rat(1));
        assert_eq!(prod.coeff(1), rat(0));
    }

    #[test]
    fn sqrt_of_unit_series() {
        // √(1+t) = 1 + t/2 − t²/8 + …
        let s = Laurent::new(0, vec![rat(1), rat(1), rat(0), rat(0)]);
        let r = s.sqrt_unit();
        assert_eq!(r.coeff(0), rat(1));
        assert_eq!(r.coeff(1), Rat::new(1.into(), 2.into()));
        assert_eq!(r.coeff(2), Rat::new((-1).into(), 8.into()));
        // r² reproduces the input where accurate.
        let sq = r.mul(&r);
        assert_eq!(sq.coeff(0), rat(1));
        assert_eq!(sq.coeff(1), rat(1));
        assert_eq!(sq.coeff(2), rat(0));
    }

    #[test]
    fn derivative_of_inverse_power() {
        // d/dt t⁻¹ = −t⁻².
        let s = Laurent::new(-1, vec![rat(1), rat(0), rat(0)]);
        let d = s.derivative();
        assert_eq!(d.coeff(-2), rat(-1));
        assert_eq!(d.coeff(-1), rat(0));
    }
}
