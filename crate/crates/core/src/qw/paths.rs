use super::coin::{decompose, CoinMatrix, CoinParts, QWInitialState};
use crate::error::{Error, Result};
use crate::linalg::{norm_sqr, Mat2, C64};
use crate::specfun::binom_f64;

/// Largest `l + m` accepted by the path enumeration.
pub const MAX_BRUTEFORCE_STEPS: usize = 14;

/// `Ξ_{l+m}(l, m)`: sum over all paths with `l` left and `m` right moves.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathSumMatrix {
    pub n_left: usize,
    pub n_right: usize,
    pub matrix: Mat2,
}

impl PathSumMatrix {
    /// `‖Ξ φ‖²`, the probability of being at `x = m − l` at time `l + m`.
    pub fn probability(&self, phi: &QWInitialState) -> f64 {
        norm_sqr(&self.matrix.apply(&phi.vector()))
    }
}

/// Sums `M_{w_n} ⋯ M_{w_1}` over every word `w` with `l` letters `P` and
/// `m` letters `Q`; the first step is the rightmost factor.
pub fn xi_bruteforce_matrices(p: &Mat2, q: &Mat2, l: usize, m: usize) -> Result<Mat2> {
    let n = l + m;
    if n > MAX_BRUTEFORCE_STEPS {
        return Err(Error::Size {
            op: "xi_bruteforce",
            reason: format!("l + m = {n} exceeds {MAX_BRUTEFORCE_STEPS}"),
        });
    }
    if n == 0 {
        return Ok(Mat2::IDENTITY);
    }
    let mut total = Mat2::ZERO;
    // bit t of the mask set ⇔ step t moves left
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != l {
            continue;
        }
        let mut prod = Mat2::IDENTITY;
        for t in 0..n {
            let factor = if mask >> t & 1 == 1 { p } else { q };
            prod = *factor * prod;
        }
        total += prod;
    }
    Ok(total)
}

pub fn xi_bruteforce(coin: &CoinMatrix, l: usize, m: usize) -> Result<PathSumMatrix> {
    let parts = decompose(coin);
    Ok(PathSumMatrix {
        n_left: l,
        n_right: m,
        matrix: xi_bruteforce_matrices(&parts.p, &parts.q, l, m)?,
    })
}

/// `Ξ_{2n}(n, n)` for the matrix `[[a, b], [c, d]]` split into `P`, `Q`:
///
/// ```text
/// aⁿdⁿ Σ_{γ=1}^{n} (bc/ad)^γ C(n−1, γ−1)² [ (n−γ)/(aγ) P + (n−γ)/(dγ) Q + R/c + S/b ]
/// ```
///
/// Holds for any entries with `a, b, c, d ≠ 0`, stochastic or unitary. The
/// alternating sum cancels badly for large `n`; meant as a verification path
/// up to about `n = 60`.
pub fn path_sum_closed(a: C64, b: C64, c: C64, d: C64, n: usize) -> Result<Mat2> {
    let zero = C64::new(0.0, 0.0);
    if [a, b, c, d].contains(&zero) {
        return Err(Error::domain(
            "xi_lemma1",
            "all four coin entries must be non-zero",
        ));
    }
    if n == 0 {
        return Ok(Mat2::IDENTITY);
    }
    let parts = CoinParts::from_entries(a, b, c, d);
    let tail = parts.r.scale(c.inv()) + parts.s.scale(b.inv());
    let ad = a * d;
    let bc = b * c;
    let mut total = Mat2::ZERO;
    for g in 1..=n {
        let weight = ad.powi((n - g) as i32) * bc.powi(g as i32)
            * binom_f64((n - 1) as u64, (g - 1) as u64)?.powi(2);
        let ratio = (n - g) as f64 / g as f64;
        let bracket = parts.p.scale(a.inv() * ratio) + parts.q.scale(d.inv() * ratio) + tail;
        total += bracket.scale(weight);
    }
    Ok(total)
}

/// `Ξ_{2n}(n, n)` from the closed path-sum formula. `n = 0` gives the
/// identity (`r_0 = ‖φ‖² = 1`).
pub fn xi_lemma1(coin: &CoinMatrix, n: usize) -> Result<PathSumMatrix> {
    Ok(PathSumMatrix {
        n_left: n,
        n_right: n,
        matrix: path_sum_closed(coin.a(), coin.b(), coin.c(), coin.d(), n)?,
    })
}
