//! Return probabilities of the Hadamard walk, three ways.

use walkers_return::qw::{return_closed_qw, return_hadamard, simulate_return, xi_lemma1, CoinMatrix, QWInitialState};

fn main() -> walkers_return::Result<()> {
    let coin = CoinMatrix::hadamard();
    let phi = QWInitialState::symmetric();
    let sim = simulate_return(&coin, &phi, 20);

    println!("{:>4} {:>22} {:>22} {:>22}", "n", "simulation", "path sum", "closed form");
    for n in (2..=20).step_by(2) {
        let path_sum = xi_lemma1(&coin, n / 2)?.probability(&phi);
        println!(
            "{n:>4} {:>22.17} {path_sum:>22.17} {:>22.17}",
            sim.values[n],
            return_closed_qw(0.5, n)?
        );
    }
    // r_{4m} = r_{4m+2}
    for m in 1..10 {
        assert_eq!(return_hadamard(4 * m), return_hadamard(4 * m + 2));
    }
    Ok(())
}
