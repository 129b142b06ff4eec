//! Voros symbol automorphisms.
