//! Lattice domain, step semantics, walk simulation and exact walk
//! probabilities.
//!
//! The walk domain is `S = {(x, y) : x >= 1, y >= 0}`. A walk starts at
//! `(1, 0)` and draws i.i.d. steps: right `(x+1, y)`, left `(x-1, y)` or
//! up-and-left `(x-1, y+1)`. A left or diagonal draw at `x = 1` would leave
//! `S`; that draw terminates the walk and is *not* recorded, so a
//! [`CompletedWalk`] holds exactly the in-domain steps and ends at `(1, g)`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::distr::{Distribution, Uniform};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Errors from constructing or parsing walks and step probabilities.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WalkError {
    #[error("step probabilities must be strictly positive, got ({}, {}, {})", .0[0], .0[1], .0[2])]
    NonPositiveProbability(Box<[BigRational; 3]>),
    #[error("step probabilities must sum to 1 exactly, got {0}")]
    ProbabilitySumNotOne(BigRational),
    #[error("cannot parse {0:?} as an exact rational (expected \"p/q\" or \"p\")")]
    BadRational(String),
    #[error("cannot parse step {0:?} (expected one of 'R', 'L', 'D')")]
    BadStepChar(char),
    #[error("walk leaves the domain at step {step} (position would be ({x}, {y}))")]
    LeavesDomain { step: usize, x: i64, y: i64 },
    #[error("walk ends at ({x}, {y}) instead of a point (1, g)")]
    BadEndpoint { x: i64, y: i64 },
    #[error("serialized walk is inconsistent: steps imply n = {actual_n}, g = {actual_g}, header says n = {n}, g = {g}")]
    InconsistentHeader {
        n: usize,
        g: u32,
        actual_n: usize,
        actual_g: u32,
    },
}

/// One of the three admissible lattice steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StepKind {
    /// `(x, y) -> (x + 1, y)`: attaches an upside-down pair of pants.
    Right,
    /// `(x, y) -> (x - 1, y)`: attaches a local maximum.
    Left,
    /// `(x, y) -> (x - 1, y + 1)`: attaches a usual pair of pants.
    Diag,
}

impl StepKind {
    /// Coordinate increment of this step.
    pub fn delta(self) -> (i64, i64) {
        match self {
            StepKind::Right => (1, 0),
            StepKind::Left => (-1, 0),
            StepKind::Diag => (-1, 1),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            StepKind::Right => 'R',
            StepKind::Left => 'L',
            StepKind::Diag => 'D',
        }
    }

    pub fn from_char(c: char) -> Result<Self, WalkError> {
        match c {
            'R' => Ok(StepKind::Right),
            'L' => Ok(StepKind::Left),
            'D' => Ok(StepKind::Diag),
            other => Err(WalkError::BadStepChar(other)),
        }
    }
}

/// A lattice position. `x` counts boundary circles of the surface under
/// construction, `y` its genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const START: LatticePoint = LatticePoint { x: 1, y: 0 };

    pub fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Applies a step to a position. The result may lie outside the domain;
/// callers decide whether that terminates the walk.
pub fn apply_step(p: LatticePoint, s: StepKind) -> LatticePoint {
    let (dx, dy) = s.delta();
    LatticePoint::new(p.x + dx, p.y + dy)
}

/// Whether a point belongs to the walk domain `S` (`x >= 1`, `y >= 0`).
pub fn in_domain(p: LatticePoint) -> bool {
    p.x >= 1 && p.y >= 0
}

/// The exact step distribution `(p_r, p_l, p_d)`.
///
/// All three probabilities are strictly positive rationals summing to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepProbabilities {
    p_r: BigRational,
    p_l: BigRational,
    p_d: BigRational,
}

impl StepProbabilities {
    pub fn new(
        p_r: BigRational,
        p_l: BigRational,
        p_d: BigRational,
    ) -> Result<Self, WalkError> {
        if !p_r.is_positive() || !p_l.is_positive() || !p_d.is_positive() {
            return Err(WalkError::NonPositiveProbability(Box::new([p_r, p_l, p_d])));
        }
        let sum = &p_r + &p_l + &p_d;
        if !sum.is_one() {
            return Err(WalkError::ProbabilitySumNotOne(sum));
        }
        Ok(StepProbabilities { p_r, p_l, p_d })
    }

    /// Parses three exact rational strings such as `"9/20"`.
    pub fn from_strs(p_r: &str, p_l: &str, p_d: &str) -> Result<Self, WalkError> {
        StepProbabilities::new(
            parse_rational(p_r)?,
            parse_rational(p_l)?,
            parse_rational(p_d)?,
        )
    }

    pub fn p_r(&self) -> &BigRational {
        &self.p_r
    }

    pub fn p_l(&self) -> &BigRational {
        &self.p_l
    }

    pub fn p_d(&self) -> &BigRational {
        &self.p_d
    }

    /// `p_l + p_d`: the probability of the terminating event at `x = 1`.
    pub fn exit_probability(&self) -> BigRational {
        &self.p_l + &self.p_d
    }

    /// `p_l + p_d - p_r`, the drift of the projected one-dimensional walk
    /// toward the exit. Nonnegative drift means the walk completes with
    /// probability one.
    pub fn exit_drift(&self) -> BigRational {
        &self.p_l + &self.p_d - &self.p_r
    }
}

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational, WalkError> {
    let bad = || WalkError::BadRational(s.to_string());
    match s.split_once('/') {
        Some((num, den)) => {
            let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
            let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(num, den))
        }
        None => {
            let num = BigInt::from_str(s.trim()).map_err(|_| bad())?;
            Ok(BigRational::from_integer(num))
        }
    }
}

/// A finished walk: the in-domain step sequence from `(1, 0)` to `(1, g)`.
///
/// The terminating exit step (a left or diagonal draw at `x = 1`) is the
/// implicit final event and is not part of `steps`; it contributes the
/// lumped factor `p_l + p_d` to [`walk_probability`]. The length `n` is
/// always even and the walk contains exactly `g` diagonal steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompletedWalk {
    steps: Vec<StepKind>,
    genus: u32,
}

impl CompletedWalk {
    /// Validates a step sequence: it must stay in `S` from `(1, 0)` and end
    /// on the column `x = 1`.
    pub fn from_steps(steps: Vec<StepKind>) -> Result<Self, WalkError> {
        let mut pos = LatticePoint::START;
        for (i, &s) in steps.iter().enumerate() {
            pos = apply_step(pos, s);
            if !in_domain(pos) {
                return Err(WalkError::LeavesDomain {
                    step: i,
                    x: pos.x,
                    y: pos.y,
                });
            }
        }
        if pos.x != 1 {
            return Err(WalkError::BadEndpoint { x: pos.x, y: pos.y });
        }
        debug_assert!(
            steps.len().is_multiple_of(2),
            "r - l - d = 0 forces even length"
        );
        let genus = pos.y as u32;
        Ok(CompletedWalk { steps, genus })
    }

    /// Parses a compact step string such as `"RRDLRD"`.
    pub fn parse(s: &str) -> Result<Self, WalkError> {
        let steps = s
            .chars()
            .map(StepKind::from_char)
            .collect::<Result<Vec<_>, _>>()?;
        CompletedWalk::from_steps(steps)
    }

    pub fn steps(&self) -> &[StepKind] {
        &self.steps
    }

    /// The walk length `n` (number of recorded steps; the exit step is not
    /// counted).
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Final height `g`: the genus of the closed surface the walk builds.
    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// The position sequence `S_0, ..., S_n` (length `n + 1`).
    pub fn positions(&self) -> Vec<LatticePoint> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut pos = LatticePoint::START;
        out.push(pos);
        for &s in &self.steps {
            pos = apply_step(pos, s);
            out.push(pos);
        }
        out
    }

    /// The endpoint `S_n = (1, g)`.
    pub fn end(&self) -> LatticePoint {
        LatticePoint::new(1, self.genus as i64)
    }

    pub fn step_string(&self) -> String {
        self.steps.iter().map(|s| s.as_char()).collect()
    }
}

impl fmt::Display for CompletedWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.step_string())
    }
}

impl FromStr for CompletedWalk {
    type Err = WalkError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CompletedWalk::parse(s)
    }
}

#[derive(Serialize, Deserialize)]
struct WalkRepr {
    steps: String,
    n: usize,
    g: u32,
}

impl Serialize for CompletedWalk {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        WalkRepr {
            steps: self.step_string(),
            n: self.len(),
            g: self.genus,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CompletedWalk {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = WalkRepr::deserialize(deserializer)?;
        let walk = CompletedWalk::parse(&repr.steps).map_err(D::Error::custom)?;
        if walk.len() != repr.n || walk.genus() != repr.g {
            return Err(D::Error::custom(WalkError::InconsistentHeader {
                n: repr.n,
                g: repr.g,
                actual_n: walk.len(),
                actual_g: walk.genus(),
            }));
        }
        Ok(walk)
    }
}

/// Tallies of the three step kinds in a walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepCounts {
    pub right: usize,
    pub left: usize,
    pub diag: usize,
}

impl StepCounts {
    /// Closed forms from the endpoint alone: with `S_n = (x, y)`,
    /// `r = (n + x - 1) / 2`, `l = (n - x + 1) / 2 - y`, `d = y`.
    ///
    /// Independent of direct tallying; [`step_counts`] must agree with it.
    pub fn from_endpoint(n: usize, end: LatticePoint) -> StepCounts {
        let n = n as i64;
        let right = (n + end.x - 1) / 2;
        let left = (n - end.x + 1) / 2 - end.y;
        StepCounts {
            right: right as usize,
            left: left as usize,
            diag: end.y as usize,
        }
    }
}

/// Counts the steps of each kind by direct tallying.
pub fn step_counts(w: &CompletedWalk) -> StepCounts {
    let mut c = StepCounts {
        right: 0,
        left: 0,
        diag: 0,
    };
    for &s in w.steps() {
        match s {
            StepKind::Right => c.right += 1,
            StepKind::Left => c.left += 1,
            StepKind::Diag => c.diag += 1,
        }
    }
    c
}

/// The exact probability of observing a given completed walk:
/// `p_r^r * p_l^l * p_d^d * (p_l + p_d)`, the final factor being the
/// terminating exit event.
pub fn walk_probability(w: &CompletedWalk, probs: &StepProbabilities) -> BigRational {
    let c = step_counts(w);
    rational_pow(probs.p_r(), c.right)
        * rational_pow(probs.p_l(), c.left)
        * rational_pow(probs.p_d(), c.diag)
        * probs.exit_probability()
}

pub(crate) fn rational_pow(base: &BigRational, exp: usize) -> BigRational {
    if exp == 0 {
        return BigRational::one();
    }
    base.pow(exp as i32)
}

/// Result of one bounded simulation run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimulationOutcome {
    Completed(CompletedWalk),
    /// The step cap was reached before the walk exited the domain.
    Censored {
        steps: Vec<StepKind>,
        position: LatticePoint,
    },
}

impl SimulationOutcome {
    pub fn completed(&self) -> Option<&CompletedWalk> {
        match self {
            SimulationOutcome::Completed(w) => Some(w),
            SimulationOutcome::Censored { .. } => None,
        }
    }

    pub fn is_censored(&self) -> bool {
        matches!(self, SimulationOutcome::Censored { .. })
    }
}

/// Exact sampler for the step distribution.
///
/// Thresholds are the cumulative probabilities scaled by the least common
/// denominator `D`, so a uniform draw from `[0, D)` reproduces the rational
/// probabilities without rounding. When `D` fits in a `u64` the draw is a
/// single `Uniform` sample; otherwise a uniform `BigUint` below `D` is drawn
/// by rejection.
#[derive(Debug, Clone)]
pub struct StepSampler {
    inner: SamplerImpl,
}

#[derive(Debug, Clone)]
enum SamplerImpl {
    Small {
        range: Uniform<u64>,
        right: u64,
        right_left: u64,
    },
    Big {
        denom: BigUint,
        right: BigUint,
        right_left: BigUint,
    },
}

impl StepSampler {
    pub fn new(probs: &StepProbabilities) -> Self {
        let denom = probs
            .p_r()
            .denom()
            .lcm(probs.p_l().denom())
            .lcm(probs.p_d().denom())
            .to_biguint()
            .expect("probability denominators are positive");
        let scale = |p: &BigRational| {
            (p.numer() * BigInt::from(denom.clone()) / p.denom())
                .to_biguint()
                .expect("probabilities are positive")
        };
        let right = scale(probs.p_r());
        let right_left = &right + scale(probs.p_l());
        let inner = match (denom.to_u64(), right.to_u64(), right_left.to_u64()) {
            (Some(d), Some(r), Some(rl)) => SamplerImpl::Small {
                range: Uniform::new(0, d).expect("nonempty range"),
                right: r,
                right_left: rl,
            },
            _ => SamplerImpl::Big {
                denom,
                right,
                right_left,
            },
        };
        StepSampler { inner }
    }

    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> StepKind {
        match &self.inner {
            SamplerImpl::Small {
                range,
                right,
                right_left,
            } => {
                let u = range.sample(rng);
                if u < *right {
                    StepKind::Right
                } else if u < *right_left {
                    StepKind::Left
                } else {
                    StepKind::Diag
                }
            }
            SamplerImpl::Big {
                denom,
                right,
                right_left,
            } => {
                let u = uniform_biguint_below(rng, denom);
                if u < *right {
                    StepKind::Right
                } else if u < *right_left {
                    StepKind::Left
                } else {
                    StepKind::Diag
                }
            }
        }
    }
}

/// Uniform `BigUint` in `[0, bound)` by rejection on fixed-width draws.
fn uniform_biguint_below<R: Rng + ?Sized>(rng: &mut R, bound: &BigUint) -> BigUint {
    let bits = bound.bits();
    let words = bits.div_ceil(32) as usize;
    let top_mask: u32 = match bits % 32 {
        0 => u32::MAX,
        rem => (1u32 << rem) - 1,
    };
    loop {
        let mut digits = vec![0u32; words];
        for d in digits.iter_mut() {
            *d = rng.random();
        }
        if let Some(top) = digits.last_mut() {
            *top &= top_mask;
        }
        let candidate = BigUint::new(digits);
        if candidate < *bound {
            return candidate;
        }
    }
}

/// The per-trial random stream: ChaCha8 keyed by the master seed, with the
/// trial index selecting an independent stream. Trials can run in parallel
/// in any order and still reproduce exactly.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Runs one walk from `(1, 0)` until it exits the domain or `max_steps`
/// in-domain steps have been taken.
///
/// Deterministic in `(probs, seed, max_steps)`: the walk uses trial stream 0
/// of the master seed. A left or diagonal draw at `x = 1` terminates the
/// walk; the exiting draw itself is not recorded. `max_steps` must be at
/// least 1.
pub fn simulate(
    probs: &StepProbabilities,
    seed: u64,
    max_steps: usize,
) -> SimulationOutcome {
    let sampler = StepSampler::new(probs);
    simulate_with_rng(&sampler, &mut trial_rng(seed, 0), max_steps)
}

/// Simulation core shared by [`simulate`] and the Monte-Carlo estimators.
pub fn simulate_with_rng<R: Rng + ?Sized>(
    sampler: &StepSampler,
    rng: &mut R,
    max_steps: usize,
) -> SimulationOutcome {
    assert!(max_steps >= 1, "max_steps must be at least 1");
    let mut steps = Vec::new();
    let mut pos = LatticePoint::START;
    while steps.len() < max_steps {
        let s = sampler.draw(rng);
        if pos.x == 1 && matches!(s, StepKind::Left | StepKind::Diag) {
            // The exit event: attach the final maximum and stop.
            let genus = pos.y as u32;
            return SimulationOutcome::Completed(CompletedWalk { steps, genus });
        }
        pos = apply_step(pos, s);
        steps.push(s);
    }
    SimulationOutcome::Censored {
        steps,
        position: pos,
    }
}
