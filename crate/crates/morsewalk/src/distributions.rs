//! Exact closed-form distributions and expectations of the walk-built Morse
//! functions, with Monte-Carlo estimators to cross-check them.
//!
//! Every closed form is evaluated in exact rational arithmetic. The
//! expectation formulas hold when the exit drift `p_l + p_d - p_r` is
//! positive; at zero drift the expected duration diverges, and negative
//! drift is outside the hypotheses and rejected.

use crate::enumeration::binomial;
use crate::lattice_walk::{
    rational_pow, simulate_with_rng, trial_rng, SimulationOutcome, StepProbabilities, StepSampler,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DistError {
    #[error("walk length must be even, got {0}")]
    OddLength(u64),
    #[error("genus {g} out of range for length {n} (need 0 <= g <= n/2)")]
    GenusOutOfRange { n: u64, g: u64 },
    #[error("expectation requires p_l + p_d >= p_r (exit drift {0} is negative)")]
    NegativeDrift(BigRational),
    #[error("expectation is infinite at zero exit drift (p_l + p_d = p_r)")]
    InfiniteExpectation,
}

/// A closed-form expectation: finite exact rational, or divergent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpectationValue {
    Finite(BigRational),
    /// The defining series diverges; happens exactly at zero exit drift.
    Infinite,
}

impl ExpectationValue {
    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            ExpectationValue::Finite(v) => Some(v),
            ExpectationValue::Infinite => None,
        }
    }
}

/// Probability that a walk completes with exactly `n` steps, i.e. that the
/// constructed Morse function has `n + 2` critical points:
/// `(1/(n+1)) C(n+1, (n+2)/2) p_r^{n/2} (p_l + p_d)^{(n+2)/2}`.
pub fn p_length(n: u64, probs: &StepProbabilities) -> Result<BigRational, DistError> {
    if !n.is_multiple_of(2) {
        return Err(DistError::OddLength(n));
    }
    let paths = BigRational::from_integer(BigInt::from(
        binomial(n + 1, (n + 2) / 2) / num_bigint::BigUint::from(n + 1),
    ));
    let exit = probs.exit_probability();
    Ok(paths
        * rational_pow(probs.p_r(), (n / 2) as usize)
        * rational_pow(&exit, ((n + 2) / 2) as usize))
}

/// Probability that a walk completes with `n` steps at final height `y`,
/// i.e. a Morse function with `n + 2` critical points on a closed surface
/// of genus `y`.
pub fn p_length_genus(
    n: u64,
    y: u64,
    probs: &StepProbabilities,
) -> Result<BigRational, DistError> {
    if !n.is_multiple_of(2) {
        return Err(DistError::OddLength(n));
    }
    if y > n / 2 {
        return Err(DistError::GenusOutOfRange { n, g: y });
    }
    let paths = BigRational::from_integer(BigInt::from(
        binomial(n + 1, (n + 2) / 2) / num_bigint::BigUint::from(n + 1),
    ));
    let splits = BigRational::from_integer(BigInt::from(binomial(n / 2, y)));
    Ok(paths
        * rational_pow(probs.p_r(), (n / 2) as usize)
        * probs.exit_probability()
        * splits
        * rational_pow(probs.p_l(), (n / 2 - y) as usize)
        * rational_pow(probs.p_d(), y as usize))
}

fn require_nonnegative_drift(probs: &StepProbabilities) -> Result<BigRational, DistError> {
    let drift = probs.exit_drift();
    if drift.is_negative() {
        return Err(DistError::NegativeDrift(drift));
    }
    Ok(drift)
}

fn require_positive_drift(probs: &StepProbabilities) -> Result<BigRational, DistError> {
    let drift = require_nonnegative_drift(probs)?;
    if drift.is_zero() {
        return Err(DistError::InfiniteExpectation);
    }
    Ok(drift)
}

/// Expected number of critical points: `1 + 1/(p_l + p_d - p_r)` at
/// positive exit drift, infinite at zero drift.
pub fn expected_critical_points(
    probs: &StepProbabilities,
) -> Result<ExpectationValue, DistError> {
    let drift = require_nonnegative_drift(probs)?;
    if drift.is_zero() {
        return Ok(ExpectationValue::Infinite);
    }
    Ok(ExpectationValue::Finite(
        BigRational::one() + drift.recip(),
    ))
}

/// Expected number of local maxima,
/// `1 + p_l p_r / ((p_l + p_d)(p_l + p_d - p_r))`:
/// the terminal cap plus one maximum per Left step, whose expected count
/// is `p_l * S` with `S = sum_m m Catalan(m) (p_r (p_l+p_d))^m`
/// `= p_r / ((p_l+p_d)(p_l+p_d-p_r))`.
pub fn expected_local_maxima(probs: &StepProbabilities) -> Result<BigRational, DistError> {
    let drift = require_positive_drift(probs)?;
    let numer = probs.exit_probability() * &drift + probs.p_l() * probs.p_r();
    Ok(numer / (probs.exit_probability() * drift))
}

/// Expected cobordism class (maxima minus the single minimum):
/// `p_l p_r / ((p_l + p_d)(p_l + p_d - p_r))`, the expected number of
/// Left steps of a completed walk.
pub fn expected_cobordism(probs: &StepProbabilities) -> Result<BigRational, DistError> {
    let drift = require_positive_drift(probs)?;
    Ok(probs.p_l() * probs.p_r() / (probs.exit_probability() * drift))
}

/// Expected number of index-one critical points,
/// `(p_l + 2 p_d) p_r / ((p_l + p_d)(p_l + p_d - p_r))`:
/// every Right and every Diag step contributes one saddle.
pub fn expected_index_one(probs: &StepProbabilities) -> Result<BigRational, DistError> {
    let drift = require_positive_drift(probs)?;
    let numer = (probs.exit_probability() + probs.p_d()) * probs.p_r();
    Ok(numer / (probs.exit_probability() * drift))
}

/// Expected genus of the domain surface:
/// `p_d p_r / ((p_l + p_d)(p_l + p_d - p_r))`, the expected number of
/// Diag steps of a completed walk.
pub fn expected_genus(probs: &StepProbabilities) -> Result<BigRational, DistError> {
    let drift = require_positive_drift(probs)?;
    Ok(probs.p_d() * probs.p_r() / (probs.exit_probability() * drift))
}

/// Sample mean and standard error of one statistic over the completed
/// trials of a Monte-Carlo run.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct MomentReport {
    pub estimate: f64,
    pub std_error: f64,
    pub trials: u64,
    pub censored: u64,
}

/// Monte-Carlo estimates for every statistic with a closed form.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct MonteCarloMoments {
    pub critical_points: MomentReport,
    pub genus: MomentReport,
    pub local_maxima: MomentReport,
    pub cobordism: MomentReport,
    pub index_one: MomentReport,
    pub mean_length: MomentReport,
}

/// Per-statistic running sums. Every statistic is integer-valued per trial,
/// so sums are kept exact in `u128`; merging is then associative and the
/// result does not depend on how the parallel reduction is scheduled.
#[derive(Debug, Clone, Copy, Default)]
struct Accumulator {
    completed: u64,
    censored: u64,
    sums: [u128; STATS],
    squares: [u128; STATS],
}

const STATS: usize = 6;

impl Accumulator {
    fn record(&mut self, outcome: &SimulationOutcome) {
        match outcome {
            SimulationOutcome::Completed(w) => {
                let n = w.len() as u128;
                let g = w.genus() as u128;
                let maxima = n / 2 - g + 1;
                let values = [n + 2, g, maxima, maxima - 1, n / 2 + g, n];
                self.completed += 1;
                for (i, v) in values.into_iter().enumerate() {
                    self.sums[i] += v;
                    self.squares[i] += v * v;
                }
            }
            SimulationOutcome::Censored { .. } => self.censored += 1,
        }
    }

    fn merge(mut self, other: Accumulator) -> Accumulator {
        self.completed += other.completed;
        self.censored += other.censored;
        for i in 0..STATS {
            self.sums[i] += other.sums[i];
            self.squares[i] += other.squares[i];
        }
        self
    }

    fn report(&self, idx: usize) -> MomentReport {
        let m = self.completed as f64;
        let trials = self.completed + self.censored;
        let (estimate, std_error) = if self.completed == 0 {
            (f64::NAN, f64::NAN)
        } else if self.completed == 1 {
            // Degenerate sample: the spread is unobservable, reported as 0.
            (self.sums[idx] as f64, 0.0)
        } else {
            let mean = self.sums[idx] as f64 / m;
            let var = (self.squares[idx] as f64 - m * mean * mean) / (m - 1.0);
            (mean, (var.max(0.0) / m).sqrt())
        };
        MomentReport {
            estimate,
            std_error,
            trials,
            censored: self.censored,
        }
    }
}

/// Runs `trials` independent simulations and reports the sample mean and
/// standard error of each statistic over the completed trials.
///
/// Censored trials are counted and excluded from the means. Trial `i` uses
/// the derived stream `(seed, i)`, so results are reproducible and
/// independent of scheduling.
pub fn monte_carlo_moments(
    probs: &StepProbabilities,
    trials: u64,
    seed: u64,
    max_steps: usize,
) -> MonteCarloMoments {
    let sampler = StepSampler::new(probs);
    let acc = (0..trials)
        .into_par_iter()
        .fold(Accumulator::default, |mut acc, trial| {
            let outcome = simulate_with_rng(&sampler, &mut trial_rng(seed, trial), max_steps);
            acc.record(&outcome);
            acc
        })
        .reduce(Accumulator::default, Accumulator::merge);
    MonteCarloMoments {
        critical_points: acc.report(0),
        genus: acc.report(1),
        local_maxima: acc.report(2),
        cobordism: acc.report(3),
        index_one: acc.report(4),
        mean_length: acc.report(5),
    }
}
