//! The tropical semifield on the initial coefficient generators: monomials
//! ∏(y⁰_j)^{c_j} with a ⊕ b = componentwise min of exponents. The exponent
//! vector of a tropical y-variable is its c-vector, and sign coherence says
//! every c-vector met along a mutation sequence is all-≥0 or all-≤0.

use crate::cluster::{matrix::pos, ExchangeMatrix};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TropicalError {
    LengthMismatch,
    IndexOutOfRange,
    /// A c-vector with mixed signs (or zero): sign coherence is violated,
    /// which means a bug upstream — callers must not continue past this.
    SignIncoherent(Vec<i64>),
}

impl fmt::Display for TropicalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropicalError::LengthMismatch => write!(f, "exponent vectors of different length"),
            TropicalError::IndexOutOfRange => write!(f, "mutation index out of range"),
            TropicalError::SignIncoherent(c) => {
                write!(f, "sign-incoherent c-vector {c:?}")
            }
        }
    }
}

impl std::error::Error for TropicalError {}

/// ∏(y⁰_j)^{exponents[j]}; the exponent vector is the c-vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalMonomial {
    exponents: Vec<i64>,
}

impl TropicalMonomial {
    pub fn new(exponents: Vec<i64>) -> Self {
        TropicalMonomial { exponents }
    }

    /// The multiplicative unit 1 (all exponents zero).
    pub fn one(n: usize) -> Self {
        TropicalMonomial { exponents: vec![0; n] }
    }

    /// The generator y⁰_i.
    pub fn generator(i: usize, n: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        TropicalMonomial { exponents: e }
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn inv(&self) -> Self {
        TropicalMonomial {
            exponents: self.exponents.iter().map(|e| -e).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        TropicalMonomial {
            exponents: self
                .exponents
                .iter()
                .zip(&o.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        TropicalMonomial {
            exponents: self.exponents.iter().map(|e| e * k).collect(),
        }
    }
}

/// a ⊕ b: componentwise min of exponents.
pub fn trop_sum(a: &TropicalMonomial, b: &TropicalMonomial) -> Result<TropicalMonomial, TropicalError> {
    if a.len() != b.len() {
        return Err(TropicalError::LengthMismatch);
    }
    Ok(TropicalMonomial {
        exponents: a
            .exponents
            .iter()
            .zip(&b.exponents)
            .map(|(x, y)| *x.min(y))
            .collect(),
    })
}

/// Coefficient mutation evaluated in the tropical semifield:
/// y'_k = y_k⁻¹, y'_i = y_i·(1 ⊕ y_k)^{[−b_{ki}]₊}·(1 ⊕ y_k⁻¹)^{−[b_{ki}]₊}.
pub fn tropical_y_mutation(
    y: &[TropicalMonomial],
    b: &ExchangeMatrix,
    k: usize,
) -> Result<Vec<TropicalMonomial>, TropicalError> {
    if k >= y.len() || k >= b.n() {
        return Err(TropicalError::IndexOutOfRange);
    }
    let n = y[k].len();
    let one = TropicalMonomial::one(n);
    let s_plus = trop_sum(&one, &y[k])?;
    let s_minus = trop_sum(&one, &y[k].inv())?;
    let mut out = Vec::with_capacity(y.len());
    for (i, yi) in y.iter().enumerate() {
        if i == k {
            out.push(yi.inv());
        } else {
            let bki = b.entry(k, i);
            let v = yi
                .mul(&s_plus.pow(pos(-bki)))
                .mul(&s_minus.pow(-pos(bki)));
            out.push(v);
        }
    }
    Ok(out)
}

/// The tropical sign ε(y): + for a nonzero all-≥0 c-vector, − for all-≤0.
pub fn tropical_sign(m: &TropicalMonomial) -> Result<Sign, TropicalError> {
    let any_pos = m.exponents.iter().any(|&e| e > 0);
    let any_neg = m.exponents.iter().any(|&e| e < 0);
    match (any_pos, any_neg) {
        (true, false) => Ok(Sign::Plus),
        (false, true) => Ok(Sign::Minus),
        _ => Err(TropicalError::SignIncoherent(m.exponents.clone())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tm(e: &[i64]) -> TropicalMonomial {
        TropicalMonomial::new(e.to_vec())
    }

    #[test]
    fn one_absorbs_positive_monomials() {
        // 1 ⊕ y₁ = 1 when ε(y₁) = +.
        assert_eq!(trop_sum(&tm(&[1, 0]), &tm(&[0, 0])).unwrap(), tm(&[0, 0]));
        assert_eq!(trop_sum(&tm(&[2, -1]), &tm(&[2, -1])).unwrap(), tm(&[2, -1]));
    }

    #[test]
    fn principal_term_of_a_ratio() {
        // (2u₁² ⊕ u₁u₂)/(u₁²u₂ ⊕ 2u₁u₂²) → u₂⁻¹. Constants tropicalize to 1.
        let num = trop_sum(&tm(&[2, 0]), &tm(&[1, 1])).unwrap();
        let den = trop_sum(&tm(&[2, 1]), &tm(&[1, 2])).unwrap();
        assert_eq!(num.mul(&den.inv()), tm(&[0, -1]));
    }

    #[test]
    fn rank_two_mutation_steps() {
        let b = ExchangeMatrix::new(vec![vec![0, 1], vec![-1, 0]]).unwrap();
        let y0 = vec![TropicalMonomial::generator(0, 2), TropicalMonomial::generator(1, 2)];
        let y2 = tropical_y_mutation(&y0, &b, 0).unwrap();
        assert_eq!(y2, vec![tm(&[-1, 0]), tm(&[1, 1])]);
        let b2 = b.mutate(0).unwrap();
        let y3 = tropical_y_mutation(&y2, &b2, 1).unwrap();
        assert_eq!(y3[0], tm(&[0, 1]));
    }

    #[test]
    fn mutation_is_involutive() {
        let b = ExchangeMatrix::new(vec![
            vec![0, 2, -1],
            vec![-2, 0, 3],
            vec![1, -3, 0],
        ])
        .unwrap();
        let y = vec![tm(&[1, 0, 2]), tm(&[0, -1, 0]), tm(&[3, 1, 1])];
        for k in 0..3 {
            let once = tropical_y_mutation(&y, &b, k).unwrap();
            let bk = b.mutate(k).unwrap();
            let twice = tropical_y_mutation(&once, &bk, k).unwrap();
            assert_eq!(twice, y);
        }
    }

    #[test]
    fn signs() {
        assert_eq!(tropical_sign(&tm(&[1, 1])).unwrap(), Sign::Plus);
        assert_eq!(tropical_sign(&tm(&[-1, 0])).unwrap(), Sign::Minus);
        assert!(matches!(
            tropical_sign(&tm(&[1, -1])),
            Err(TropicalError::SignIncoherent(_))
        ));
        assert!(tropical_sign(&tm(&[0, 0])).is_err());
    }
}
