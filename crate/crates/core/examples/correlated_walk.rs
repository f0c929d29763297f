//! Correlated random walk: closed form, simulation and the uncorrelated limit.

use walkers_return::crw::{
    closed_form_params, return_closed_crw, return_rw, simulate_return_crw, CRWInitialState, TransitionMatrix,
};

fn main() -> walkers_return::Result<()> {
    let t = TransitionMatrix::new(0.3, 0.6)?;
    let phi = CRWInitialState::new(0.2)?;
    let params = closed_form_params(&t, &phi);
    println!("{params:?}");

    let sim = simulate_return_crw(&t, &phi, 30);
    for n in (0..=30).step_by(6) {
        println!("r_{n:<2} closed {:.15}  simulated {:.15}", return_closed_crw(&t, &phi, n), sim.values[n]);
    }

    // a + d = 1 removes the correlation
    let rw = TransitionMatrix::random_walk(0.35)?;
    println!(
        "p = 0.35, n = 20: correlated form {:.15}, binomial {:.15}",
        return_closed_crw(&rw, &phi, 20),
        return_rw(0.35, 20)
    );
    Ok(())
}
