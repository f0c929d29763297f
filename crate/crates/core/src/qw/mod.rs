//! One-dimensional discrete-time quantum walk with a two-state coin.
//!
//! The walker carries a chirality `(L, R)`. One step applies the coin `U`
//! and shifts: `ψ'(x) = P ψ(x + 1) + Q ψ(x − 1)` where `P` keeps the first
//! row of `U` (move left) and `Q` keeps the second row (move right).

mod closed;
mod coin;
mod paths;
mod walk;

pub use closed::{
    r2n_from_legendre, return_closed_qw, return_hadamard, return_series_closed_qw,
    return_series_hadamard,
};
pub use coin::{decompose, CoinMatrix, CoinParts, QWInitialState};
pub use paths::{
    path_sum_closed, xi_bruteforce, xi_bruteforce_matrices, xi_lemma1, PathSumMatrix,
    MAX_BRUTEFORCE_STEPS,
};
pub use walk::{simulate_return, step, AmplitudeField};
