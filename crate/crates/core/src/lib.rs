//! Return probabilities of one-dimensional walks, three ways.
//!
//! The crate computes the probability `r_n` that a walker started at the
//! origin of the integer lattice is found there again at time `n`, for
//!
//! * discrete-time two-state quantum walks driven by a general unitary coin
//!   ([`qw`]),
//! * correlated (persistent) random walks driven by a column-stochastic
//!   transition matrix ([`crw`]),
//! * the simple random walk and the two- and three-dimensional Pólya
//!   baselines ([`genfunc`]).
//!
//! Every quantity is available through independent routes so the routes can
//! be checked against each other: exact step-by-step evolution, closed forms
//! in Legendre polynomials, and generating functions written with complete
//! elliptic integrals. The [`verify`] module runs those cross-checks and the
//! `walkers-return` binary exposes them on the command line.
//!
//! ```
//! use walkers_return::qw::{return_closed_qw, return_hadamard};
//!
//! assert!((return_hadamard(8) - 9.0 / 128.0).abs() < 1e-15);
//! assert!((return_closed_qw(0.5, 8).unwrap() - 9.0 / 128.0).abs() < 1e-15);
//! ```

pub mod cli;
pub mod crw;
mod error;
pub mod genfunc;
pub mod linalg;
pub mod quadrature;
pub mod qw;
pub mod series;
pub mod specfun;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use series::{Model, ReturnSeries};
