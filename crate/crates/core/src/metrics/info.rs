use crate::contingency::Contingency;
use crate::error::{Error, Result};
use crate::sum::CompensatedSum;

use super::plogp;

/// Shannon entropy of a marginal given as positive counts.
pub fn entropy(marginal: &[u64]) -> Result<f64> {
    if marginal.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(index) = marginal.iter().position(|&c| c == 0) {
        return Err(Error::InvalidMarginal { index });
    }
    let n: u64 = marginal.iter().sum();
    Ok(entropy_unchecked(marginal.iter().copied(), n as f64))
}

pub(crate) fn entropy_unchecked(counts: impl Iterator<Item = u64>, n: f64) -> f64 {
    let mut acc = CompensatedSum::new();
    for c in counts {
        acc -= plogp(c as f64, n);
    }
    acc.value()
}

pub fn joint_entropy<T: Contingency>(t: &T) -> f64 {
    entropy_unchecked(t.positive_cells().map(|(_, _, c)| c), t.total() as f64)
}

/// `I(X, Y) = sum_ij (n_ij/n) ln(n n_ij / (a_i b_j))` over positive cells.
pub fn mutual_information<T: Contingency>(t: &T) -> f64 {
    let n = t.total() as f64;
    let (a, b) = (t.row_sums(), t.col_sums());
    t.positive_cells()
        .map(|(i, j, c)| {
            let c = c as f64;
            (c / n) * ((n * c) / (a[i] as f64 * b[j] as f64)).ln()
        })
        .sum::<CompensatedSum>()
        .value()
}

/// `d(X, Y) = H(X, Y) - I(X, Y) = 2 H(X, Y) - H(X) - H(Y)`.
pub fn variation_of_information<T: Contingency>(t: &T) -> f64 {
    let n = t.total() as f64;
    let mut acc = CompensatedSum::new();
    acc += 2.0 * joint_entropy(t);
    acc -= entropy_unchecked(t.row_sums().iter().copied(), n);
    acc -= entropy_unchecked(t.col_sums().iter().copied(), n);
    acc.value().max(0.0)
}
