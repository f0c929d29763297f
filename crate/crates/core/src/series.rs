use serde::Serialize;

/// Which walk a [`ReturnSeries`] belongs to, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "model", rename_all = "lowercase")]
pub enum Model {
    Qw { alpha_sq: f64 },
    Hadamard,
    Crw { a: f64, b: f64, d: f64, phi1: f64 },
    Rw { p: f64 },
    Polya2d,
}

impl Model {
    pub fn name(&self) -> &'static str {
        match self {
            Model::Qw { .. } => "qw",
            Model::Hadamard => "hadamard",
            Model::Crw { .. } => "crw",
            Model::Rw { .. } => "rw",
            Model::Polya2d => "polya2d",
        }
    }
}

/// Return probabilities `r_0, r_1, …, r_N`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReturnSeries {
    pub model: Model,
    pub values: Vec<f64>,
}

impl ReturnSeries {
    pub fn new(model: Model, values: Vec<f64>) -> Self {
        Self { model, values }
    }

    pub fn nmax(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    pub fn get(&self, n: usize) -> Option<f64> {
        self.values.get(n).copied()
    }

    /// `max_n |r_n − s_n|` over the common prefix.
    pub fn max_abs_diff(&self, other: &ReturnSeries) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Checks `r_0 = 1`, `r_n ∈ [0, 1]` and vanishing odd terms, all within
    /// `tol`. Returns the first offending index.
    pub fn check_invariants(&self, tol: f64) -> Result<(), usize> {
        for (n, &r) in self.values.iter().enumerate() {
            let ok = if n == 0 {
                (r - 1.0).abs() <= tol
            } else if n % 2 == 1 {
                r.abs() <= tol
            } else {
                (-tol..=1.0 + tol).contains(&r)
            };
            if !ok {
                return Err(n);
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariant_check_flags_bad_entries() {
        let good = ReturnSeries::new(Model::Hadamard, vec![1.0, 0.0, 0.5, 0.0, 0.125]);
        assert_eq!(good.check_invariants(1e-12), Ok(()));
        assert_eq!(good.nmax(), 4);
        let odd = ReturnSeries::new(Model::Hadamard, vec![1.0, 0.1]);
        assert_eq!(odd.check_invariants(1e-12), Err(1));
        let big = ReturnSeries::new(Model::Hadamard, vec![1.0, 0.0, 1.5]);
        assert_eq!(big.check_invariants(1e-12), Err(2));
    }
}
