//! Slice polyanalytic functions of a quaternionic variable.
//!
//! Exact polynomial arithmetic over rational quaternions ([`qpoly`]) carries the
//! global operator `G`, its normalization `V = G / |vec q|^2`, the Cauchy-Fueter
//! operator and the two poly-Fueter mappings `tau_n` and `C_n`. Functions of the
//! form `sum qbar^k f_k(q)` live in [`slicefn`]. The [`kernels`] and [`quad`]
//! modules evaluate the slice Cauchy kernel family in `f64` and integrate it over
//! circles in a complex slice. [`oracle`] holds the finite-difference references
//! used to cross-check the closed forms.

pub mod scalar;
pub mod quat;
pub mod qpoly;
pub mod slicefn;
pub mod kernels;
pub mod quad;
pub mod oracle;

pub mod corpus;
pub mod verify;
pub mod cli;
