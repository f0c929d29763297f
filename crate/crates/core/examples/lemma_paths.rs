//! Path sums: brute-force enumeration against the closed matrix formula.

use walkers_return::qw::{decompose, xi_bruteforce, xi_lemma1, CoinMatrix};

fn main() -> walkers_return::Result<()> {
    let coin = CoinMatrix::from_alpha_sq(0.3)?;
    for n in 0..=6 {
        let brute = xi_bruteforce(&coin, n, n)?;
        let formula = xi_lemma1(&coin, n)?;
        println!(
            "n = {n}: {} paths, max entry difference {:.2e}",
            binomial(2 * n, n),
            brute.matrix.max_abs_diff(&formula.matrix)
        );
    }

    let parts = decompose(&coin);
    let (p, q) = (parts.p, parts.q);
    let listed = q * q * p + q * p * q + p * q * q;
    let diff = xi_bruteforce(&coin, 1, 2)?.matrix.max_abs_diff(&listed);
    println!("one left and two right steps: Q^2 P + QPQ + P Q^2, difference {diff:.2e}");
    Ok(())
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}
