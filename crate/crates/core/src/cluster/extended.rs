//! Extended seeds over a triangulated surface.

/// Placeholder while the surface layer lands.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtendedSeed;
