//! Special functions shared by the closed forms and generating functions.
//!
//! Elliptic integrals use the *modulus* convention throughout:
//! `K(m) = ∫₀^{π/2} dθ / √(1 − m² sin²θ)`, not the parameter convention
//! `m = k²` used by many numerical libraries.

mod binomial;
mod elliptic;
mod polynomial;
mod table;

pub use binomial::{binom, binom_f64, central_binomial_ratio, Binomial, EXACT_BINOMIAL_MAX_N};
pub use elliptic::{
    ellip_e, ellip_k, ellip_k_complement, ellip_ke, script_e, script_k, script_ke,
    script_modulus,
};
pub use polynomial::{
    hyp2f1_terminating, jacobi10_eval, jacobi10_sequence, legendre_eval, legendre_scaled,
    legendre_scaled_sequence, legendre_sequence,
};
pub use table::SpecFunTable;
