//! Exact WKB recursion.
