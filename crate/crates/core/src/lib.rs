//! Exact cluster-algebra engine coupled to a numerical Stokes-graph toolkit.
//!
//! The symbolic side (`ratfun`, `tropical`, `cluster`, `surface`, `lattice`,
//! `voros`, `wkb`) is exact: arbitrary-precision rational (or Gaussian-rational)
//! arithmetic throughout, no floating point. The numerical side (`tracer`)
//! integrates trajectories of a quadratic differential in `f64` and reduces the
//! resulting Stokes graph back to the combinatorial layer.

pub mod ratfun;
pub mod tropical;
pub mod cluster;
pub mod surface;
pub mod lattice;
pub mod voros;
pub mod wkb;
pub mod tracer;

pub use cluster::ExchangeMatrix;
pub use ratfun::{Polynomial, RationalFunction};
