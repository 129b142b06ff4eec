//! Ideal and tagged triangulations.
