//! Adjustment against the full permutation model.
//!
//! Under a uniformly random permutation of one labeling, the overlap of row
//! cluster `i` (size `a`) and column cluster `j` (size `b`) is hypergeometric
//! on `max(0, a + b - n) ..= min(a, b)`. The expected mutual information sums
//! `E[(c/n) ln(n c / (a b))]` over all cells.

use crate::contingency::{Contingency, ContingencyTable};
use crate::labeling::Labeling;
use crate::sum::CompensatedSum;

use super::info::mutual_information;

/// Weights below this (relative to the unit weight at the mode) are dropped.
const NEGLIGIBLE_WEIGHT: f64 = 1e-300;

/// Expected mutual information `E[I(X, Y_sigma)]` over all `n!` permutations.
///
/// Runs in `O(max(k, l) n)`.
pub fn expected_mi_full<T: Contingency>(t: &T) -> f64 {
    let n = t.total();
    let mut acc = CompensatedSum::new();
    for &a in t.row_sums() {
        for &b in t.col_sums() {
            acc += expected_cell_term(a, b, n);
        }
    }
    acc.value()
}

/// `I(X, Y) - E[I(X, Y_sigma)]`, unnormalized.
pub fn ami<T: Contingency>(t: &T) -> f64 {
    mutual_information(t) - expected_mi_full(t)
}

/// Adjusted entropy `q(A) = s(A, A)`: chance-corrected information content of
/// one clustering. Zero exactly for trivial clusterings, positive otherwise.
pub fn adjusted_entropy(a: &Labeling) -> f64 {
    let table = ContingencyTable::diagonal(&a.cluster_sizes())
        .expect("cluster sizes of a labeling are positive");
    ami(&table)
}

/// `E[(c/n) ln(n c / (a b))]` for `c ~ Hypergeometric(n, a, b)`.
///
/// The pmf is evaluated with its ratio recurrence, anchored at unit weight at
/// the mode and walked outward in both directions, then divided by the total
/// weight. Anchoring at the mode keeps every weight in `(0, 1]` so nothing
/// overflows, and the final normalization absorbs recurrence drift.
pub(crate) fn expected_cell_term(a: u64, b: u64, n: u64) -> f64 {
    let lo = (a + b).saturating_sub(n);
    let hi = a.min(b);
    if lo == hi {
        return cell_value(lo, a, b, n);
    }
    let mode = (((a + 1) * (b + 1)) / (n + 2)).clamp(lo, hi);
    let (af, bf, nf) = (a as f64, b as f64, n as f64);
    // n - a - b, possibly negative
    let rest = nf - af - bf;

    let mut weight_sum = CompensatedSum::new();
    let mut value_sum = CompensatedSum::new();
    weight_sum += 1.0;
    value_sum += cell_value(mode, a, b, n);

    let mut w = 1.0;
    for c in mode..hi {
        let cf = c as f64;
        w *= ((af - cf) * (bf - cf)) / ((cf + 1.0) * (rest + cf + 1.0));
        if w < NEGLIGIBLE_WEIGHT {
            break;
        }
        weight_sum += w;
        value_sum += w * cell_value(c + 1, a, b, n);
    }

    let mut w = 1.0;
    for c in (lo + 1..=mode).rev() {
        let cf = c as f64;
        w *= (cf * (rest + cf)) / ((af - cf + 1.0) * (bf - cf + 1.0));
        if w < NEGLIGIBLE_WEIGHT {
            break;
        }
        weight_sum += w;
        value_sum += w * cell_value(c - 1, a, b, n);
    }

    value_sum.value() / weight_sum.value()
}

#[inline]
fn cell_value(c: u64, a: u64, b: u64, n: u64) -> f64 {
    if c == 0 {
        return 0.0;
    }
    let (c, a, b, n) = (c as f64, a as f64, b as f64, n as f64);
    (c / n) * ((n * c) / (a * b)).ln()
}
