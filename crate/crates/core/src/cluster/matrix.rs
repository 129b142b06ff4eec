//! Skew-symmetric exchange matrices and matrix mutation.

use super::ClusterError;

/// [x]₊ = max(x, 0).
pub fn pos(x: i64) -> i64 {
    x.max(0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeMatrix {
    n: usize,
    b: Vec<Vec<i64>>,
}

impl ExchangeMatrix {
    /// Rows must form a skew-symmetric matrix with zero diagonal.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, ClusterError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(ClusterError::NotSkewSymmetric);
        }
        for i in 0..n {
            for j in 0..n {
                if rows[i][j] != -rows[j][i] {
                    return Err(ClusterError::NotSkewSymmetric);
                }
            }
        }
        Ok(ExchangeMatrix { n, b: rows })
    }

    pub fn zero(n: usize) -> Self {
        ExchangeMatrix { n, b: vec![vec![0; n]; n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.b[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.b
    }

    pub fn check_index(&self, k: usize) -> Result<(), ClusterError> {
        if k < self.n {
            Ok(())
        } else {
            Err(ClusterError::IndexOutOfRange)
        }
    }

    /// b'_{ij} = −b_{ij} if i=k or j=k, else b_{ij} + [b_{ik}]₊[b_{kj}]₊ − [−b_{ik}]₊[−b_{kj}]₊.
    pub fn mutate(&self, k: usize) -> Result<Self, ClusterError> {
        self.check_index(k)?;
        let mut b = self.b.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                b[i][j] = if i == k || j == k {
                    -self.b[i][j]
                } else {
                    self.b[i][j] + pos(self.b[i][k]) * pos(self.b[k][j])
                        - pos(-self.b[i][k]) * pos(-self.b[k][j])
                };
            }
        }
        Ok(ExchangeMatrix { n: self.n, b })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> ExchangeMatrix {
        ExchangeMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn rank_two_mutation_reverses_arrow() {
        let b = m(&[&[0, 1], &[-1, 0]]);
        assert_eq!(b.mutate(0).unwrap(), m(&[&[0, -1], &[1, 0]]));
    }

    #[test]
    fn rank_three_mutation() {
        let b = m(&[&[0, -1, 2], &[1, 0, -1], &[-2, 1, 0]]);
        let expect = m(&[&[0, 1, -2], &[-1, 0, 1], &[2, -1, 0]]);
        assert_eq!(b.mutate(0).unwrap(), expect);
    }

    #[test]
    fn mutation_is_involutive() {
        let b = m(&[&[0, 2, -1, 0], &[-2, 0, 3, 1], &[1, -3, 0, -2], &[0, -1, 2, 0]]);
        for k in 0..4 {
            assert_eq!(b.mutate(k).unwrap().mutate(k).unwrap(), b);
        }
    }

    #[test]
    fn skew_symmetry_enforced() {
        assert!(ExchangeMatrix::new(vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(ExchangeMatrix::new(vec![vec![1, 0], vec![0, 1]]).is_err());
        assert!(ExchangeMatrix::new(vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn out_of_range_index() {
        let b = ExchangeMatrix::zero(2);
        assert_eq!(b.mutate(2), Err(ClusterError::IndexOutOfRange));
    }
}
