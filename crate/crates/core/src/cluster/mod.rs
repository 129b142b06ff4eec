//! Seeds, exchange matrices, quivers, the exchange relations, signed
//! (monomial) mutations, extended seeds over a triangulated surface, and
//! ν-periodicity.

pub mod extended;
pub mod json;
pub mod matrix;
pub mod quiver;
pub mod seed;

pub use extended::ExtendedSeed;
pub use matrix::ExchangeMatrix;
pub use quiver::Quiver;
pub use seed::{check_period, Coefficients, Seed};

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClusterError {
    IndexOutOfRange,
    NotSkewSymmetric,
    FlavorMismatch,
    ArityMismatch,
    NonMonomialInput,
    NotSelfFolded,
    Invalid(String),
}

impl fmt::Display for ClusterError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClusterError::IndexOutOfRange => write!(f, "index out of range"),
            ClusterError::NotSkewSymmetric => write!(f, "matrix is not skew-symmetric"),
            ClusterError::FlavorMismatch => write!(f, "wrong coefficient flavor for this operation"),
            ClusterError::ArityMismatch => write!(f, "permutation arity mismatch"),
            ClusterError::NonMonomialInput => write!(f, "x-components must be Laurent monomials"),
            ClusterError::NotSelfFolded => write!(f, "puncture is not inside a self-folded triangle"),
            ClusterError::Invalid(m) => write!(f, "invalid seed data: {m}"),
        }
    }
}

impl std::error::Error for ClusterError {}
