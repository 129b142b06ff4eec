//! Cycle/path lattices.
