use super::coin::{CoinMatrix, QWInitialState};
use crate::linalg::{norm_sqr, Vec2, C64};
use crate::series::{Model, ReturnSeries};

const ZERO: Vec2 = [C64::new(0.0, 0.0), C64::new(0.0, 0.0)];

/// Amplitudes `ψ_n(x) = (ψ_L, ψ_R)` of the walk at time `n`.
///
/// Only sites of the right parity are stored: slot `j` is position
/// `x = −n + 2j`, `j = 0..=n`. Sites of the wrong parity are identically
/// zero and never materialised.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeField {
    time: usize,
    amps: Vec<Vec2>,
}

impl AmplitudeField {
    /// Walker at the origin with chirality `φ`.
    pub fn new(phi: &QWInitialState) -> Self {
        Self {
            time: 0,
            amps: vec![phi.vector()],
        }
    }

    pub fn time(&self) -> usize {
        self.time
    }

    fn slot(&self, x: i64) -> Option<usize> {
        let n = self.time as i64;
        let off = x + n;
        (off >= 0 && off <= 2 * n && off % 2 == 0).then_some((off / 2) as usize)
    }

    pub fn amplitude(&self, x: i64) -> Vec2 {
        self.slot(x).map_or(ZERO, |j| self.amps[j])
    }

    pub fn probability_at(&self, x: i64) -> f64 {
        norm_sqr(&self.amplitude(x))
    }

    pub fn total_probability(&self) -> f64 {
        self.amps.iter().map(norm_sqr).sum()
    }

    /// `(x, P(S_n = x))` over the support `x = −n, −n+2, …, n`.
    pub fn distribution(&self) -> Vec<(i64, f64)> {
        let n = self.time as i64;
        self.amps
            .iter()
            .enumerate()
            .map(|(j, v)| (-n + 2 * j as i64, norm_sqr(v)))
            .collect()
    }

    /// Advances one step in place.
    pub fn advance(&mut self, coin: &CoinMatrix) {
        let (a, b, c, d) = (coin.a(), coin.b(), coin.c(), coin.d());
        let n = self.amps.len();
        let mut next = vec![ZERO; n + 1];
        // new(x) = P old(x+1) + Q old(x−1); x+1 ↔ old slot j, x−1 ↔ old slot j−1
        for (j, slot) in next.iter_mut().enumerate() {
            if j < n {
                let o = &self.amps[j];
                slot[0] = a * o[0] + b * o[1];
            }
            if j >= 1 {
                let o = &self.amps[j - 1];
                slot[1] = c * o[0] + d * o[1];
            }
        }
        self.amps = next;
        self.time += 1;
    }
}

/// One step of the walk.
pub fn step(field: &AmplitudeField, coin: &CoinMatrix) -> AmplitudeField {
    let mut out = field.clone();
    out.advance(coin);
    out
}

/// `r_n = ‖ψ_n(0)‖²` for `n = 0..=nmax` by direct evolution.
pub fn simulate_return(coin: &CoinMatrix, phi: &QWInitialState, nmax: usize) -> ReturnSeries {
    let mut field = AmplitudeField::new(phi);
    let mut values = Vec::with_capacity(nmax + 1);
    values.push(field.probability_at(0));
    for _ in 0..nmax {
        field.advance(coin);
        values.push(field.probability_at(0));
    }
    ReturnSeries::new(
        Model::Qw {
            alpha_sq: coin.alpha_sq(),
        },
        values,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn single_hadamard_step() {
        let phi = QWInitialState::new(C64::new(0.6, 0.0), C64::new(0.0, 0.8)).unwrap();
        let f = step(&AmplitudeField::new(&phi), &CoinMatrix::hadamard());
        assert_eq!(f.time(), 1);
        let left = f.amplitude(-1);
        let right = f.amplitude(1);
        assert!((left[0] - (phi.phi1 + phi.phi2) * FRAC_1_SQRT_2).norm() < 1e-15);
        assert_eq!(left[1], C64::new(0.0, 0.0));
        assert!((right[1] - (phi.phi1 - phi.phi2) * FRAC_1_SQRT_2).norm() < 1e-15);
        assert_eq!(right[0], C64::new(0.0, 0.0));
        assert_eq!(f.probability_at(0), 0.0);
    }

    #[test]
    fn two_step_hadamard_distribution() {
        let mut f = AmplitudeField::new(&QWInitialState::symmetric());
        f.advance(&CoinMatrix::hadamard());
        f.advance(&CoinMatrix::hadamard());
        let d = f.distribution();
        let want = [(-2, 0.25), (0, 0.5), (2, 0.25)];
        for ((x, p), (wx, wp)) in d.iter().zip(want) {
            assert_eq!(*x, wx);
            assert!((p - wp).abs() < 1e-15);
        }
    }

    #[test]
    fn norm_preserved_and_parity() {
        let coin = CoinMatrix::from_alpha_sq(0.3).unwrap();
        let mut f = AmplitudeField::new(&QWInitialState::symmetric());
        for _ in 0..100 {
            f.advance(&coin);
        }
        assert!((f.total_probability() - 1.0).abs() < 1e-10);
        assert_eq!(f.probability_at(1), 0.0);
        assert_eq!(f.probability_at(-99), 0.0);
        assert_eq!(f.probability_at(102), 0.0);
    }

    #[test]
    fn odd_times_never_return() {
        let s = simulate_return(&CoinMatrix::from_alpha_sq(0.8).unwrap(), &QWInitialState::symmetric(), 9);
        for n in (1..=9).step_by(2) {
            assert_eq!(s.values[n], 0.0);
        }
        assert!((s.values[2] - 0.2).abs() < 1e-15);
    }
}
