//! Random Morse functions on closed orientable surfaces, built by lattice
//! random walks.
//!
//! A walk lives in the quarter-lattice `S = {(x, y) : x >= 1, y >= 0}`,
//! starts at `(1, 0)` and moves right, left or up-and-left. Each step
//! attaches a critical point to a surface under construction: `x` tracks the
//! number of boundary circles, `y` the genus accumulated so far. The walk
//! completes when a left or diagonal step would leave `S`, which attaches
//! the final maximum and closes the surface.
//!
//! The crate provides:
//!
//! - [`lattice_walk`]: the step semantics, seeded simulation, step-count
//!   identities and exact walk probabilities;
//! - [`morse_skeleton`]: the critical-point sequence of the surface built
//!   from a walk, with its counting invariants;
//! - [`distributions`]: exact closed forms for the length/genus
//!   distributions and the expectations of the topological statistics,
//!   plus Monte-Carlo estimators to cross-check them;
//! - [`enumeration`]: exact counting formulas and exhaustive catalogs of
//!   all walks with a given endpoint and length budget;
//! - [`walkgraph`]: the intersection graph of catalog walks sharing a
//!   lattice point at an intermediate height;
//! - [`domset`]: dominating sets of that graph by the probabilistic
//!   method, with a greedy baseline and an exact small-instance solver.
//!
//! All probability computations are exact rationals; floating point only
//! appears in Monte-Carlo summaries and the dominating-set size bound.

pub mod distributions;
pub mod domset;
pub mod enumeration;
pub mod lattice_walk;
pub mod morse_skeleton;
pub mod walkgraph;

pub use distributions::{ExpectationValue, MomentReport, MonteCarloMoments};
pub use domset::{DomSetMethod, DomSetResult};
pub use enumeration::WalkCatalog;
pub use lattice_walk::{
    CompletedWalk, LatticePoint, SimulationOutcome, StepCounts, StepKind, StepProbabilities,
};
pub use morse_skeleton::{CriticalEvent, MorseSkeleton, TopoInvariants};
pub use walkgraph::{DegreeReport, WalkGraph};
