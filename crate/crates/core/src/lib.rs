//! Triangular involutions of the polynomial ring k[x, y, z, w] over finite
//! fields of characteristic two.
//!
//! * [`algebra`]: GF(2^m) and sparse polynomials.
//! * [`autmap`]: ring endomorphisms given by the images of x, y, z, w.
//! * [`canon`]: the three canonical forms, normalization, fixed-ring
//!   decomposition and the classifier.
//! * [`census`]: exhaustive enumeration over GF(2) and brute-force oracles.

pub mod algebra;
pub mod autmap;
pub mod canon;
pub mod census;
