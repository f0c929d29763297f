use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};

/// Largest `n` for which every `C(n, k)` is returned as an exact integer.
pub const EXACT_BINOMIAL_MAX_N: u64 = 62;

/// A binomial coefficient, exact when it fits a machine word.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Binomial {
    Exact(u64),
    Approx(f64),
}

impl Binomial {
    pub fn to_f64(self) -> f64 {
        match self {
            Binomial::Exact(v) => v as f64,
            Binomial::Approx(v) => v,
        }
    }

    pub fn exact(self) -> Option<u64> {
        match self {
            Binomial::Exact(v) => Some(v),
            Binomial::Approx(_) => None,
        }
    }
}

/// `C(n, k)`: exact for `n ≤ 62`, log-gamma above.
pub fn binom(n: u64, k: u64) -> Result<Binomial> {
    if k > n {
        return Err(Error::domain("binom", format!("k = {k} exceeds n = {n}")));
    }
    if n <= EXACT_BINOMIAL_MAX_N {
        let k = k.min(n - k);
        // c * (n - i) is divisible by (i + 1) at every step
        let mut c: u128 = 1;
        for i in 0..k {
            c = c * u128::from(n - i) / u128::from(i + 1);
        }
        return Ok(Binomial::Exact(c as u64));
    }
    let (nf, kf) = (n as f64, k as f64);
    let ln = ln_gamma(nf + 1.0) - ln_gamma(kf + 1.0) - ln_gamma(nf - kf + 1.0);
    Ok(Binomial::Approx(ln.exp()))
}

pub fn binom_f64(n: u64, k: u64) -> Result<f64> {
    binom(n, k).map(Binomial::to_f64)
}

/// `C(2m, m) / 4^m` as the product `∏_{j=1}^{m} (2j − 1) / (2j)`; never
/// overflows.
pub fn central_binomial_ratio(m: usize) -> f64 {
    (1..=m).fold(1.0, |acc, j| acc * (2 * j - 1) as f64 / (2 * j) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(rows: usize) -> Vec<Vec<u64>> {
        let mut t = vec![vec![1u64]];
        for n in 1..rows {
            let prev = &t[n - 1];
            let mut row = vec![1u64; n + 1];
            for k in 1..n {
                row[k] = prev[k - 1] + prev[k];
            }
            t.push(row);
        }
        t
    }

    #[test]
    fn small_values() {
        assert_eq!(binom(2, 1).unwrap(), Binomial::Exact(2));
        assert_eq!(binom(4, 2).unwrap(), Binomial::Exact(6));
        assert_eq!(binom(12, 6).unwrap(), Binomial::Exact(924));
        assert_eq!(binom(0, 0).unwrap(), Binomial::Exact(1));
    }

    #[test]
    fn exact_range_matches_pascal_triangle() {
        let t = pascal(63);
        for n in 0..=62u64 {
            for k in 0..=n {
                assert_eq!(binom(n, k).unwrap().exact(), Some(t[n as usize][k as usize]));
            }
        }
    }

    #[test]
    fn crossover_is_continuous() {
        // C(63, k) = C(62, k) + C(62, k − 1), both exact
        for k in 1..63u64 {
            let lhs = binom(63, k).unwrap();
            assert!(matches!(lhs, Binomial::Approx(_)));
            let rhs = binom_f64(62, k).unwrap() + binom_f64(62, k - 1).unwrap();
            assert!((lhs.to_f64() - rhs).abs() <= 1e-12 * rhs, "k={k}");
        }
    }

    #[test]
    fn k_greater_than_n_is_a_domain_error() {
        assert!(binom(3, 4).is_err());
        assert!(binom_f64(100, 101).is_err());
    }

    #[test]
    fn central_ratio() {
        assert_eq!(central_binomial_ratio(0), 1.0);
        assert!((central_binomial_ratio(2) - 6.0 / 16.0).abs() < 1e-16);
        let r = central_binomial_ratio(30);
        let exact = binom_f64(60, 30).unwrap() / 4f64.powi(30);
        assert!((r - exact).abs() < 1e-14 * exact);
    }
}
