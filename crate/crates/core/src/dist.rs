//! Exact outcome distributions and the two weak-simulation error
//! comparators (multiplicative and additive).

use crate::error::{Error, Result};

/// Exact probability map over m-bit outcome strings of designated output
/// qubits. Outcome index bit `i` holds the measured value of
/// `output_qubits[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct OutcomeDistribution {
    pub output_qubits: Vec<usize>,
    pub probs: Vec<f64>,
}

impl OutcomeDistribution {
    /// Number of outcome bits.
    pub fn arity(&self) -> usize {
        self.output_qubits.len()
    }

    /// Probability of one outcome string, given as a little-endian index.
    pub fn prob(&self, outcome: usize) -> f64 {
        self.probs[outcome]
    }

    /// Sum of all probabilities (1 up to rounding).
    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }

    /// Marginal over a subset of the output bits, selected by their
    /// positions in `output_qubits`.
    pub fn marginal(&self, positions: &[usize]) -> OutcomeDistribution {
        let mut probs = vec![0.0; 1 << positions.len()];
        for (outcome, &p) in self.probs.iter().enumerate() {
            let mut kept = 0usize;
            for (new_bit, &pos) in positions.iter().enumerate() {
                if outcome & (1 << pos) != 0 {
                    kept |= 1 << new_bit;
                }
            }
            probs[kept] += p;
        }
        OutcomeDistribution {
            output_qubits: positions.iter().map(|&p| self.output_qubits[p]).collect(),
            probs,
        }
    }

    /// Largest pointwise |difference| against another distribution of the
    /// same arity.
    pub fn max_abs_difference(&self, other: &OutcomeDistribution) -> Result<f64> {
        check_arity(self, other)?;
        Ok(self
            .probs
            .iter()
            .zip(&other.probs)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }
}

fn check_arity(p: &OutcomeDistribution, q: &OutcomeDistribution) -> Result<()> {
    if p.arity() != q.arity() {
        return Err(Error::ArityMismatch {
            left: p.arity(),
            right: q.arity(),
        });
    }
    Ok(())
}

/// Multiplicative-error check: true iff `p(x)/c ≤ q(x) ≤ c·p(x)` for every
/// outcome `x`. The two inequalities force exact zeros to coincide: if
/// `p(x) = 0` then only `q(x) = 0` passes, and vice versa.
///
/// `c` must be at least 1.
pub fn check_multiplicative(
    p: &OutcomeDistribution,
    q: &OutcomeDistribution,
    c: f64,
) -> Result<bool> {
    assert!(c >= 1.0, "multiplicative error bound must be at least 1");
    check_arity(p, q)?;
    Ok(p
        .probs
        .iter()
        .zip(&q.probs)
        .all(|(&pv, &qv)| pv <= c * qv && qv <= c * pv))
}

/// Additive-error check: true iff the largest pointwise deviation is at most
/// `eps` (deviation exactly `eps` passes).
pub fn check_additive(p: &OutcomeDistribution, q: &OutcomeDistribution, eps: f64) -> Result<bool> {
    assert!(eps >= 0.0, "additive error bound must be nonnegative");
    Ok(p.max_abs_difference(q)? <= eps)
}
