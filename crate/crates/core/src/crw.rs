//! Correlated (persistent) random walk on the integers.
//!
//! The walker remembers the direction of its previous step. With the
//! column-stochastic matrix `A = [[a, b], [c, d]]` (`a + c = b + d = 1`), a
//! walker whose last step was to the left moves left again with probability
//! `a` and turns right with probability `c`; after a right step it turns left
//! with probability `b` and keeps going right with probability `d`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::Mat2;
use crate::series::{Model, ReturnSeries};
use crate::specfun::{central_binomial_ratio, legendre_scaled_sequence};

/// `|Δ₋|` below this selects the uncorrelated random-walk formula.
pub const DEGENERATE_DELTA: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransitionMatrix {
    a: f64,
    d: f64,
}

impl TransitionMatrix {
    /// `a` = P(left | last left), `d` = P(right | last right); both in `(0, 1)`.
    pub fn new(a: f64, d: f64) -> Result<Self> {
        for (name, v) in [("a", a), ("d", d)] {
            if !(v > 0.0 && v < 1.0) {
                return Err(Error::domain(
                    "TransitionMatrix",
                    format!("{name} = {v} must lie strictly inside (0, 1)"),
                ));
            }
        }
        Ok(Self { a, d })
    }

    /// The persistence form: keep going left with `p`, keep going right
    /// with `q`.
    pub fn from_persistence(p: f64, q: f64) -> Result<Self> {
        Self::new(p, q)
    }

    /// Uncorrelated walk stepping left with probability `p` regardless of
    /// history (`a = b = p`, `c = d = 1 − p`).
    pub fn random_walk(p: f64) -> Result<Self> {
        Self::new(p, 1.0 - p)
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self {
            a: rng.gen_range(0.05..0.95),
            d: rng.gen_range(0.05..0.95),
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        1.0 - self.d
    }

    pub fn c(&self) -> f64 {
        1.0 - self.a
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn matrix(&self) -> Mat2 {
        Mat2::real(self.a(), self.b(), self.c(), self.d())
    }

    /// `(P̂, Q̂)`: the left-moving and right-moving rows of `A`.
    pub fn split(&self) -> (Mat2, Mat2) {
        (
            Mat2::real(self.a(), self.b(), 0.0, 0.0),
            Mat2::real(0.0, 0.0, self.c(), self.d()),
        )
    }
}

/// Initial distribution over the direction of the (fictitious) previous
/// step: `φ̂₁` for left, `φ̂₂ = 1 − φ̂₁` for right.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CRWInitialState {
    phi1: f64,
}

impl CRWInitialState {
    pub fn new(phi1: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&phi1) {
            return Err(Error::domain(
                "CRWInitialState",
                format!("phi1 = {phi1} must lie in [0, 1]"),
            ));
        }
        Ok(Self { phi1 })
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self {
            phi1: rng.gen_range(0.0..=1.0),
        }
    }

    pub fn phi1(&self) -> f64 {
        self.phi1
    }

    pub fn phi2(&self) -> f64 {
        1.0 - self.phi1
    }
}

/// Probability mass at time `n`, split by the direction of the last step.
/// Slot `j` is position `x = −n + 2j`, as for the quantum walk.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityField {
    time: usize,
    mass: Vec<[f64; 2]>,
}

impl ProbabilityField {
    pub fn new(phi: &CRWInitialState) -> Self {
        Self {
            time: 0,
            mass: vec![[phi.phi1(), phi.phi2()]],
        }
    }

    pub fn time(&self) -> usize {
        self.time
    }

    pub fn mass(&self, x: i64) -> [f64; 2] {
        let n = self.time as i64;
        let off = x + n;
        if off < 0 || off > 2 * n || off % 2 != 0 {
            return [0.0, 0.0];
        }
        self.mass[(off / 2) as usize]
    }

    pub fn probability_at(&self, x: i64) -> f64 {
        let m = self.mass(x);
        m[0] + m[1]
    }

    pub fn total_probability(&self) -> f64 {
        self.mass.iter().map(|m| m[0] + m[1]).sum()
    }

    pub fn distribution(&self) -> Vec<(i64, f64)> {
        let n = self.time as i64;
        self.mass
            .iter()
            .enumerate()
            .map(|(j, m)| (-n + 2 * j as i64, m[0] + m[1]))
            .collect()
    }

    pub fn advance(&mut self, transition: &TransitionMatrix) {
        let (a, b, c, d) = (transition.a(), transition.b(), transition.c(), transition.d());
        let n = self.mass.len();
        let mut next = vec![[0.0; 2]; n + 1];
        for (j, slot) in next.iter_mut().enumerate() {
            if j < n {
                let o = self.mass[j];
                slot[0] = a * o[0] + b * o[1];
            }
            if j >= 1 {
                let o = self.mass[j - 1];
                slot[1] = c * o[0] + d * o[1];
            }
        }
        self.mass = next;
        self.time += 1;
    }
}

pub fn crw_step(field: &ProbabilityField, transition: &TransitionMatrix) -> ProbabilityField {
    let mut out = field.clone();
    out.advance(transition);
    out
}

fn model_of(transition: &TransitionMatrix, phi: &CRWInitialState) -> Model {
    Model::Crw {
        a: transition.a(),
        b: transition.b(),
        d: transition.d(),
        phi1: phi.phi1(),
    }
}

/// `r_n` = mass at the origin at time `n`, by direct evolution.
pub fn simulate_return_crw(
    transition: &TransitionMatrix,
    phi: &CRWInitialState,
    nmax: usize,
) -> ReturnSeries {
    let mut field = ProbabilityField::new(phi);
    let mut values = Vec::with_capacity(nmax + 1);
    values.push(field.probability_at(0));
    for _ in 0..nmax {
        field.advance(transition);
        values.push(field.probability_at(0));
    }
    ReturnSeries::new(model_of(transition, phi), values)
}

/// `Δ± = ad ± bc`, `k± = acφ̂₁ + bdφ̂₂ ± ad`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CRWClosedFormParams {
    pub delta_plus: f64,
    pub delta_minus: f64,
    pub k_plus: f64,
    pub k_minus: f64,
}

impl CRWClosedFormParams {
    pub fn is_degenerate(&self) -> bool {
        self.delta_minus.abs() < DEGENERATE_DELTA
    }
}

pub fn closed_form_params(transition: &TransitionMatrix, phi: &CRWInitialState) -> CRWClosedFormParams {
    let (a, b, c, d) = (transition.a(), transition.b(), transition.c(), transition.d());
    let ad = a * d;
    let bc = b * c;
    let s = a * c * phi.phi1() + b * d * phi.phi2();
    CRWClosedFormParams {
        delta_plus: ad + bc,
        delta_minus: ad - bc,
        k_plus: s + ad,
        k_minus: s - ad,
    }
}

/// `r_0, …, r_nmax` from the Legendre closed form.
///
/// For `Δ₋ ≠ 0`:
/// `r_{2n} = Δ₋ⁿ (k₋ P_{n−1}(Δ₊/Δ₋) + k₊ P_n(Δ₊/Δ₋)) / (2ad)`, evaluated as
/// `(k₋ Δ₋ Q_{n−1} + k₊ Q_n) / (2ad)` with `Q_j = Δ₋ʲ P_j(Δ₊/Δ₋)` from the
/// homogenised recurrence, which stays bounded even though `|Δ₊/Δ₋|` may be
/// far above 1. For `Δ₋ = 0` the walk is uncorrelated and
/// `r_{2n} = (pq)ⁿ C(2n, n)`.
pub fn return_series_closed_crw(
    transition: &TransitionMatrix,
    phi: &CRWInitialState,
    nmax: usize,
) -> ReturnSeries {
    let params = closed_form_params(transition, phi);
    let ad = transition.a() * transition.d();
    let half_max = nmax / 2;
    let values = if params.is_degenerate() {
        // a = b = p, c = d = q, so pq = ad
        (0..=nmax)
            .map(|n| match n {
                n if n % 2 == 1 => 0.0,
                n => (4.0 * ad).powi((n / 2) as i32) * central_binomial_ratio(n / 2),
            })
            .collect()
    } else {
        let q = legendre_scaled_sequence(half_max, params.delta_plus, params.delta_minus)
            .expect("Δ± are finite for a valid transition matrix");
        (0..=nmax)
            .map(|n| match n {
                0 => 1.0,
                n if n % 2 == 1 => 0.0,
                n => {
                    let h = n / 2;
                    (params.k_minus * params.delta_minus * q[h - 1] + params.k_plus * q[h])
                        / (2.0 * ad)
                }
            })
            .collect()
    };
    ReturnSeries::new(model_of(transition, phi), values)
}

pub fn return_closed_crw(transition: &TransitionMatrix, phi: &CRWInitialState, n: usize) -> f64 {
    return_series_closed_crw(transition, phi, n).values[n]
}

/// Uncorrelated walk: `r_{2n} = (pq)ⁿ C(2n, n)`.
pub fn return_rw(p: f64, n: usize) -> f64 {
    if n % 2 == 1 {
        return 0.0;
    }
    (4.0 * p * (1.0 - p)).powi((n / 2) as i32) * central_binomial_ratio(n / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rejects_boundary_parameters() {
        assert!(TransitionMatrix::new(0.0, 0.5).is_err());
        assert!(TransitionMatrix::new(0.5, 1.0).is_err());
        assert!(TransitionMatrix::new(f64::NAN, 0.5).is_err());
        assert!(CRWInitialState::new(1.2).is_err());
        assert!(CRWInitialState::new(-0.1).is_err());
    }

    #[test]
    fn column_sums() {
        let t = TransitionMatrix::new(0.3, 0.85).unwrap();
        assert_eq!(t.a() + t.c(), 1.0);
        assert_eq!(t.b() + t.d(), 1.0);
        let (p, q) = t.split();
        assert!((p + q).max_abs_diff(&t.matrix()) == 0.0);
    }

    #[test]
    fn first_step_of_persistent_walk() {
        let t = TransitionMatrix::new(0.9, 0.9).unwrap();
        let f = crw_step(&ProbabilityField::new(&CRWInitialState::new(1.0).unwrap()), &t);
        assert_eq!(f.mass(-1), [0.9, 0.0]);
        assert!((f.mass(1)[1] - 0.1).abs() < 1e-15);
        assert_eq!(f.mass(1)[0], 0.0);
    }

    #[test]
    fn symmetric_walk_two_steps() {
        let t = TransitionMatrix::random_walk(0.5).unwrap();
        let mut f = ProbabilityField::new(&CRWInitialState::new(0.3).unwrap());
        f.advance(&t);
        f.advance(&t);
        let d = f.distribution();
        assert_eq!(d, vec![(-2, 0.25), (0, 0.5), (2, 0.25)]);
    }

    #[test]
    fn mass_conserved() {
        let t = TransitionMatrix::new(0.17, 0.61).unwrap();
        let mut f = ProbabilityField::new(&CRWInitialState::new(0.4).unwrap());
        for _ in 0..500 {
            f.advance(&t);
        }
        assert!((f.total_probability() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn params_examples() {
        let half = closed_form_params(
            &TransitionMatrix::random_walk(0.5).unwrap(),
            &CRWInitialState::new(0.5).unwrap(),
        );
        assert_eq!(half.delta_plus, 0.5);
        assert_eq!(half.delta_minus, 0.0);
        assert!(half.is_degenerate());

        let p = 0.8;
        let prm = closed_form_params(
            &TransitionMatrix::from_persistence(p, p).unwrap(),
            &CRWInitialState::new(0.1).unwrap(),
        );
        assert!((prm.delta_plus - (p * p + (1.0 - p) * (1.0 - p))).abs() < 1e-15);
        assert!((prm.delta_minus - (2.0 * p - 1.0)).abs() < 1e-15);
        assert!((prm.k_plus - prm.k_minus - 2.0 * p * p).abs() < 1e-15);
    }

    #[test]
    fn r2_by_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let t = TransitionMatrix::random(&mut rng);
            let phi = CRWInitialState::random(&mut rng);
            let (a, b, c, d) = (t.a(), t.b(), t.c(), t.d());
            let want = a * c * phi.phi1() + b * d * phi.phi2() + b * c;
            assert!((return_closed_crw(&t, &phi, 2) - want).abs() < 1e-15);
            assert!((simulate_return_crw(&t, &phi, 2).values[2] - want).abs() < 1e-15);
        }
    }

    #[test]
    fn random_walk_branch() {
        let t = TransitionMatrix::random_walk(0.5).unwrap();
        let phi = CRWInitialState::new(0.9).unwrap();
        assert_eq!(return_closed_crw(&t, &phi, 4), 6.0 / 16.0);
        assert_eq!(return_closed_crw(&t, &phi, 2), 0.5);
        assert_eq!(return_rw(0.5, 4), 0.375);
        assert_eq!(return_rw(0.5, 3), 0.0);
    }

    #[test]
    fn equal_persistence_is_state_independent() {
        let t = TransitionMatrix::from_persistence(0.7, 0.7).unwrap();
        let s1 = return_series_closed_crw(&t, &CRWInitialState::new(0.0).unwrap(), 30);
        let s2 = return_series_closed_crw(&t, &CRWInitialState::new(0.77).unwrap(), 30);
        assert!(s1.max_abs_diff(&s2) < 1e-15);
    }
}
