//! Quivers without loops or 2-cycles, in bijection with skew-symmetric matrices.

use super::{ClusterError, ExchangeMatrix};

/// Arrow i → j with multiplicity m > 0. At most one of (i,j), (j,i) appears.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    n: usize,
    arrows: Vec<(usize, usize, u32)>,
}

impl Quiver {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[(usize, usize, u32)] {
        &self.arrows
    }

    pub fn from_matrix(b: &ExchangeMatrix) -> Quiver {
        let n = b.n();
        let mut arrows = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if b.entry(i, j) > 0 {
                    arrows.push((i, j, b.entry(i, j) as u32));
                }
            }
        }
        Quiver { n, arrows }
    }

    pub fn to_matrix(&self) -> Result<ExchangeMatrix, ClusterError> {
        let mut rows = vec![vec![0i64; self.n]; self.n];
        for &(i, j, m) in &self.arrows {
            if i == j || i >= self.n || j >= self.n {
                return Err(ClusterError::IndexOutOfRange);
            }
            rows[i][j] += m as i64;
            rows[j][i] -= m as i64;
        }
        ExchangeMatrix::new(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_arrow_from_entry_two() {
        // b₁₃ = 2 (0-based b[0][2]) ⇒ two arrows 1 → 3.
        let b = ExchangeMatrix::new(vec![
            vec![0, -1, 2],
            vec![1, 0, -1],
            vec![-2, 1, 0],
        ])
        .unwrap();
        let q = Quiver::from_matrix(&b);
        assert!(q.arrows().contains(&(0, 2, 2)));
        assert!(q.arrows().contains(&(1, 0, 1)));
        assert_eq!(q.to_matrix().unwrap(), b);
    }

    #[test]
    fn zero_matrix_is_arrowless() {
        let q = Quiver::from_matrix(&ExchangeMatrix::zero(3));
        assert!(q.arrows().is_empty());
    }

    #[test]
    fn random_roundtrip() {
        // Deterministic pseudo-random skew matrices, n ≤ 6.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for n in 1..=6 {
            for _ in 0..20 {
                let mut rows = vec![vec![0i64; n]; n];
                for i in 0..n {
                    for j in (i + 1)..n {
                        let v = (next() % 7) as i64 - 3;
                        rows[i][j] = v;
                        rows[j][i] = -v;
                    }
                }
                let b = ExchangeMatrix::new(rows).unwrap();
                assert_eq!(Quiver::from_matrix(&b).to_matrix().unwrap(), b);
            }
        }
    }
}
