//! Numeric trajectory tracer.
