use std::f64::consts::{FRAC_1_SQRT_2, PI, TAU};

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{Mat2, Vec2, C64};

const NORM_TOL: f64 = 1e-12;

/// Unitary coin `U = e^{iθ} [[α, β], [−β̄, ᾱ]]` with `α, β ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinMatrix {
    theta: f64,
    alpha: C64,
    beta: C64,
}

impl CoinMatrix {
    pub fn new(theta: f64, alpha: C64, beta: C64) -> Result<Self> {
        if !theta.is_finite() || !alpha.is_finite() || !beta.is_finite() {
            return Err(Error::domain("CoinMatrix", "parameters must be finite"));
        }
        let norm = alpha.norm_sqr() + beta.norm_sqr();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::domain(
                "CoinMatrix",
                format!("|alpha|^2 + |beta|^2 = {norm}, expected 1"),
            ));
        }
        if alpha == C64::new(0.0, 0.0) || beta == C64::new(0.0, 0.0) {
            return Err(Error::domain(
                "CoinMatrix",
                "alpha and beta must both be non-zero (pure shift and pure reflection coins are excluded)",
            ));
        }
        Ok(Self {
            theta: theta.rem_euclid(TAU),
            alpha,
            beta,
        })
    }

    /// Real coin with `θ = 0`, `α = √|α|²`, `β = √(1 − |α|²)`.
    pub fn from_alpha_sq(alpha_sq: f64) -> Result<Self> {
        if !(alpha_sq > 0.0 && alpha_sq < 1.0) {
            return Err(Error::domain(
                "CoinMatrix",
                format!("|alpha|^2 = {alpha_sq} must lie strictly inside (0, 1)"),
            ));
        }
        Self::new(
            0.0,
            C64::new(alpha_sq.sqrt(), 0.0),
            C64::new((1.0 - alpha_sq).sqrt(), 0.0),
        )
    }

    /// `H = (1/√2) [[1, 1], [1, −1]]`, i.e. `θ = π/2`, `α = β = −i/√2`.
    pub fn hadamard() -> Self {
        let v = C64::new(0.0, -FRAC_1_SQRT_2);
        Self {
            theta: PI / 2.0,
            alpha: v,
            beta: v,
        }
    }

    /// `|α|²` uniform in `(0.05, 0.95)`, phases of `α`, `β` and `θ` uniform.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let alpha_sq = rng.gen_range(0.05..0.95);
        let alpha = C64::from_polar(f64::sqrt(alpha_sq), rng.gen_range(0.0..TAU));
        let beta = C64::from_polar(f64::sqrt(1.0 - alpha_sq), rng.gen_range(0.0..TAU));
        Self {
            theta: rng.gen_range(0.0..TAU),
            alpha,
            beta,
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn alpha(&self) -> C64 {
        self.alpha
    }

    pub fn beta(&self) -> C64 {
        self.beta
    }

    pub fn alpha_sq(&self) -> f64 {
        self.alpha.norm_sqr()
    }

    /// `k = 2|α|² − 1`, the Legendre argument of the closed form.
    pub fn k(&self) -> f64 {
        2.0 * self.alpha_sq() - 1.0
    }

    fn phase(&self) -> C64 {
        C64::from_polar(1.0, self.theta)
    }

    pub fn a(&self) -> C64 {
        self.phase() * self.alpha
    }

    pub fn b(&self) -> C64 {
        self.phase() * self.beta
    }

    pub fn c(&self) -> C64 {
        -self.phase() * self.beta.conj()
    }

    pub fn d(&self) -> C64 {
        self.phase() * self.alpha.conj()
    }

    pub fn matrix(&self) -> Mat2 {
        Mat2::new(self.a(), self.b(), self.c(), self.d())
    }

    /// Largest entry of `|U U† − I|`.
    pub fn unitarity_defect(&self) -> f64 {
        let u = self.matrix();
        (u * u.adjoint()).max_abs_diff(&Mat2::IDENTITY)
    }
}

/// Initial chirality `φ = φ₁|L⟩ + φ₂|R⟩` with `|φ₁|² + |φ₂|² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QWInitialState {
    pub phi1: C64,
    pub phi2: C64,
}

impl QWInitialState {
    pub fn new(phi1: C64, phi2: C64) -> Result<Self> {
        let norm = phi1.norm_sqr() + phi2.norm_sqr();
        if !norm.is_finite() || (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::domain(
                "QWInitialState",
                format!("|phi1|^2 + |phi2|^2 = {norm}, expected 1"),
            ));
        }
        Ok(Self { phi1, phi2 })
    }

    /// `(|L⟩ + i|R⟩)/√2`.
    pub fn symmetric() -> Self {
        Self {
            phi1: C64::new(FRAC_1_SQRT_2, 0.0),
            phi2: C64::new(0.0, FRAC_1_SQRT_2),
        }
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let w: f64 = rng.gen_range(0.0..=1.0);
        Self {
            phi1: C64::from_polar(w.sqrt(), rng.gen_range(0.0..TAU)),
            phi2: C64::from_polar((1.0 - w).sqrt(), rng.gen_range(0.0..TAU)),
        }
    }

    pub fn vector(&self) -> Vec2 {
        [self.phi1, self.phi2]
    }
}

/// `U = P + Q` together with the auxiliary `R`, `S` of the path-sum formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinParts {
    pub p: Mat2,
    pub q: Mat2,
    pub r: Mat2,
    pub s: Mat2,
}

impl CoinParts {
    pub fn from_entries(a: C64, b: C64, c: C64, d: C64) -> Self {
        let z = C64::new(0.0, 0.0);
        Self {
            p: Mat2::new(a, b, z, z),
            q: Mat2::new(z, z, c, d),
            r: Mat2::new(c, d, z, z),
            s: Mat2::new(z, z, a, b),
        }
    }
}

pub fn decompose(coin: &CoinMatrix) -> CoinParts {
    CoinParts::from_entries(coin.a(), coin.b(), coin.c(), coin.d())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn hadamard_entries() {
        let h = CoinMatrix::hadamard();
        let s = FRAC_1_SQRT_2;
        let want = Mat2::real(s, s, s, -s);
        assert!(h.matrix().max_abs_diff(&want) < 1e-15);
        assert!((h.alpha_sq() - 0.5).abs() < 1e-15);
        let parts = decompose(&h);
        assert!(parts.p.max_abs_diff(&Mat2::real(s, s, 0.0, 0.0)) < 1e-15);
    }

    #[test]
    fn parts_recombine() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let coin = CoinMatrix::random(&mut rng);
            let parts = decompose(&coin);
            assert!((parts.p + parts.q).max_abs_diff(&coin.matrix()) < 1e-15);
            let u = coin.matrix().0;
            let swapped = Mat2([u[1], u[0]]);
            assert!((parts.r + parts.s).max_abs_diff(&swapped) < 1e-15);
            assert!(coin.unitarity_defect() < 1e-12);
        }
    }

    #[test]
    fn rejects_excluded_and_invalid_coins() {
        let one = C64::new(1.0, 0.0);
        let zero = C64::new(0.0, 0.0);
        assert!(CoinMatrix::new(0.0, one, zero).is_err());
        assert!(CoinMatrix::new(0.0, zero, one).is_err());
        assert!(CoinMatrix::new(0.0, one, one).is_err());
        assert!(CoinMatrix::from_alpha_sq(0.0).is_err());
        assert!(CoinMatrix::from_alpha_sq(1.0).is_err());
        assert!(CoinMatrix::new(f64::NAN, one, zero).is_err());
    }

    #[test]
    fn initial_state_normalisation() {
        assert!(QWInitialState::new(C64::new(1.0, 0.0), C64::new(1.0, 0.0)).is_err());
        let s = QWInitialState::symmetric();
        assert!((s.phi1.norm_sqr() + s.phi2.norm_sqr() - 1.0).abs() < 1e-15);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let r = QWInitialState::random(&mut rng);
        assert!(QWInitialState::new(r.phi1, r.phi2).is_ok());
    }
}
