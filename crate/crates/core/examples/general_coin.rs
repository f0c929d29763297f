//! A general coin: the return series depends on |alpha|^2 only.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use walkers_return::qw::{return_series_closed_qw, simulate_return, AmplitudeField, CoinMatrix, QWInitialState};

fn main() -> walkers_return::Result<()> {
    let alpha_sq: f64 = 0.8;
    let closed = return_series_closed_qw(alpha_sq, 40)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    for theta in [0.0, 1.0, 2.5] {
        let coin = CoinMatrix::new(
            theta,
            Complex64::from_polar(alpha_sq.sqrt(), 0.4 * theta),
            Complex64::from_polar((1.0 - alpha_sq).sqrt(), -theta),
        )?;
        let phi = QWInitialState::random(&mut rng);
        let sim = simulate_return(&coin, &phi, 40);
        println!("theta = {theta}: max |sim - closed| = {:.2e}", sim.max_abs_diff(&closed));
    }

    let coin = CoinMatrix::from_alpha_sq(alpha_sq)?;
    let mut field = AmplitudeField::new(&QWInitialState::symmetric());
    for _ in 0..100 {
        field.advance(&coin);
    }
    let (x, p) = field
        .distribution()
        .into_iter()
        .fold((0, 0.0), |best, (x, p)| if p > best.1 { (x, p) } else { best });
    println!("t = 100: total mass {:.15}, peak {p:.4} at x = {x}", field.total_probability());
    Ok(())
}
