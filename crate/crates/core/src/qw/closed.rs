use crate::error::{Error, Result};
use crate::series::{Model, ReturnSeries};
use crate::specfun::{central_binomial_ratio, legendre_sequence};

fn check_alpha_sq(alpha_sq: f64) -> Result<f64> {
    if alpha_sq > 0.0 && alpha_sq < 1.0 {
        Ok(2.0 * alpha_sq - 1.0)
    } else {
        Err(Error::domain(
            "return_closed_qw",
            format!("|alpha|^2 = {alpha_sq} must lie strictly inside (0, 1)"),
        ))
    }
}

/// `r_{2n} = (P_{n−1}(k)² − 2k P_n(k) P_{n−1}(k) + P_n(k)²) / (2(k + 1))`.
pub fn r2n_from_legendre(k: f64, p_prev: f64, p_cur: f64) -> f64 {
    (p_prev * p_prev - 2.0 * k * p_cur * p_prev + p_cur * p_cur) / (2.0 * (k + 1.0))
}

/// Return probability of the quantum walk at time `n`; depends on the coin
/// only through `|α|²` and not at all on the initial chirality.
pub fn return_closed_qw(alpha_sq: f64, n: usize) -> Result<f64> {
    let k = check_alpha_sq(alpha_sq)?;
    if n == 0 {
        return Ok(1.0);
    }
    if n % 2 == 1 {
        return Ok(0.0);
    }
    let half = n / 2;
    let p = legendre_sequence(half, k)?;
    Ok(r2n_from_legendre(k, p[half - 1], p[half]))
}

/// `r_0, …, r_nmax` from one Legendre sweep.
pub fn return_series_closed_qw(alpha_sq: f64, nmax: usize) -> Result<ReturnSeries> {
    let k = check_alpha_sq(alpha_sq)?;
    let p = legendre_sequence(nmax / 2 + 1, k)?;
    let values = (0..=nmax)
        .map(|n| match n {
            0 => 1.0,
            n if n % 2 == 1 => 0.0,
            n => r2n_from_legendre(k, p[n / 2 - 1], p[n / 2]),
        })
        .collect();
    Ok(ReturnSeries::new(Model::Qw { alpha_sq }, values))
}

/// Hadamard walk: `r_{4m} = r_{4m+2} = C(2m, m)² / 2^{4m+1}` for `m ≥ 1`,
/// `r_0 = 1`, `r_2 = 1/2`, odd times zero.
pub fn return_hadamard(n: usize) -> f64 {
    match n {
        0 => 1.0,
        n if n % 2 == 1 => 0.0,
        2 => 0.5,
        n => {
            let ratio = central_binomial_ratio(n / 4);
            0.5 * ratio * ratio
        }
    }
}

pub fn return_series_hadamard(nmax: usize) -> ReturnSeries {
    ReturnSeries::new(Model::Hadamard, (0..=nmax).map(return_hadamard).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hadamard_values() {
        assert_eq!(return_hadamard(0), 1.0);
        assert_eq!(return_hadamard(2), 0.5);
        assert_eq!(return_hadamard(4), 0.125);
        assert_eq!(return_hadamard(6), 0.125);
        assert_eq!(return_hadamard(8), 9.0 / 128.0);
        assert_eq!(return_hadamard(10), 9.0 / 128.0);
        assert_eq!(return_hadamard(7), 0.0);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(return_closed_qw(0.3, 0).unwrap(), 1.0);
        assert_eq!(return_closed_qw(0.3, 5).unwrap(), 0.0);
        assert!((return_closed_qw(0.5, 4).unwrap() - 0.125).abs() < 1e-16);
        assert!((return_closed_qw(0.8, 2).unwrap() - 0.2).abs() < 1e-15);
    }

    #[test]
    fn closed_form_matches_hadamard_formula() {
        for n in 0..200 {
            let a = return_closed_qw(0.5, n).unwrap();
            assert!((a - return_hadamard(n)).abs() < 1e-14, "n={n}");
        }
    }

    #[test]
    fn series_matches_pointwise() {
        let s = return_series_closed_qw(0.23, 41).unwrap();
        for n in 0..=41 {
            assert_eq!(s.values[n], return_closed_qw(0.23, n).unwrap());
        }
    }

    #[test]
    fn excluded_coins_are_domain_errors() {
        assert!(return_closed_qw(0.0, 4).is_err());
        assert!(return_closed_qw(1.0, 4).is_err());
        assert!(return_series_closed_qw(f64::NAN, 4).is_err());
    }
}
