//! Exact counting formulas and exhaustive walk catalogs.
//!
//! Counts use arbitrary-precision integers throughout: the number of walks
//! of length at most `N - 2` grows super-exponentially in `N`. Generation
//! is depth-first backtracking with parity and distance pruning, emitting
//! walks in a canonical order (by length, then lexicographic with
//! `R < L < D`) so vertex ids and downstream outputs are reproducible.

use crate::lattice_walk::{CompletedWalk, StepKind};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumError {
    #[error("walk length must be even, got {0}")]
    OddLength(u64),
    #[error("genus {g} out of range for length {n} (need 0 <= g <= n/2)")]
    GenusOutOfRange { n: u64, g: u64 },
    #[error("delta is defined for genus >= 2, got {0}")]
    GenusTooSmall(u64),
    #[error("need max_crit >= 2g + 2, got max_crit = {max_crit}, g = {g}")]
    BudgetTooSmall { max_crit: u64, g: u64 },
    #[error("catalog too large: {size} walks exceed the cap of {cap}")]
    CatalogTooLarge { size: BigUint, cap: u64 },
}

/// Binomial coefficient `C(n, k)` as an exact big integer.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut res = BigUint::one();
    for i in 0..k {
        res = res * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    res
}

/// The `g`-th Catalan number `(2g)! / ((g+1)! g!)`.
pub fn catalan(g: u64) -> BigUint {
    binomial(2 * g, g) / BigUint::from(g + 1)
}

/// `catalan(g) - 1`, the minimum-degree bound of the walk intersection
/// graph. Defined for `g >= 2`, where it is at least 1.
pub fn delta(g: u64) -> Result<BigUint, EnumError> {
    if g < 2 {
        return Err(EnumError::GenusTooSmall(g));
    }
    Ok(catalan(g) - BigUint::one())
}

/// Number of completed walks of length exactly `n` ending at `(1, g)`:
/// `(1/(n+1)) C(n+1, (n+2)/2) C(n/2, g)`.
///
/// The first factor counts the projected one-dimensional first-passage
/// paths, the second distributes the `g` diagonal steps among the `n/2`
/// leftward moves.
pub fn count_walks_length(n: u64, g: u64) -> Result<BigUint, EnumError> {
    if !n.is_multiple_of(2) {
        return Err(EnumError::OddLength(n));
    }
    if g > n / 2 {
        return Err(EnumError::GenusOutOfRange { n, g });
    }
    let passage = binomial(n + 1, (n + 2) / 2) / BigUint::from(n + 1);
    Ok(passage * binomial(n / 2, g))
}

/// Number of completed walks of length at most `max_crit - 2` ending at
/// `(1, g)`: the vertex count of the walk intersection graph.
pub fn m_number(max_crit: u64, g: u64) -> Result<BigUint, EnumError> {
    if max_crit < 2 * g + 2 {
        return Err(EnumError::BudgetTooSmall { max_crit, g });
    }
    let mut total = BigUint::zero();
    let mut n = 2 * g;
    while n <= max_crit - 2 {
        total += count_walks_length(n, g)?;
        n += 2;
    }
    Ok(total)
}

/// Every completed walk of even length at most `max_len` ending at
/// `(1, g)`, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkCatalog {
    g: u32,
    max_len: u64,
    walks: Vec<CompletedWalk>,
}

impl WalkCatalog {
    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn max_len(&self) -> u64 {
        self.max_len
    }

    pub fn walks(&self) -> &[CompletedWalk] {
        &self.walks
    }

    pub fn len(&self) -> usize {
        self.walks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walks.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, CompletedWalk> {
        self.walks.iter()
    }

    /// The contiguous slice of walks with length exactly `n`.
    pub fn by_length(&self, n: usize) -> &[CompletedWalk] {
        let start = self.walks.partition_point(|w| w.len() < n);
        let end = self.walks.partition_point(|w| w.len() <= n);
        &self.walks[start..end]
    }

    /// Test-support constructor: wraps externally built walks without
    /// completeness guarantees. All walks must end at `(1, g)`.
    pub fn from_walks(g: u32, max_len: u64, walks: Vec<CompletedWalk>) -> Self {
        assert!(walks.iter().all(|w| w.genus() == g && w.len() as u64 <= max_len));
        WalkCatalog { g, max_len, walks }
    }
}

pub const DEFAULT_CATALOG_CAP: u64 = 10_000_000;

/// Enumerates every walk with at most `max_crit - 2` steps ending at
/// `(1, g)`, refusing catalogs larger than [`DEFAULT_CATALOG_CAP`].
pub fn enumerate_walks(max_crit: u64, g: u64) -> Result<WalkCatalog, EnumError> {
    enumerate_walks_capped(max_crit, g, DEFAULT_CATALOG_CAP)
}

/// [`enumerate_walks`] with an explicit size cap; the cap is checked
/// against the closed-form count before any walk is generated.
pub fn enumerate_walks_capped(
    max_crit: u64,
    g: u64,
    cap: u64,
) -> Result<WalkCatalog, EnumError> {
    let size = m_number(max_crit, g)?;
    if size > BigUint::from(cap) {
        return Err(EnumError::CatalogTooLarge { size, cap });
    }
    let max_len = max_crit - 2;
    let mut walks = Vec::with_capacity(size.to_usize().unwrap_or(0));
    let mut n = 2 * g;
    while n <= max_len {
        generate_length(n, g, &mut walks);
        n += 2;
    }
    debug_assert_eq!(BigUint::from(walks.len() as u64), size);
    Ok(WalkCatalog {
        g: g as u32,
        max_len,
        walks,
    })
}

/// Depth-first generation of all length-`n` walks ending at `(1, g)`.
/// Children are visited in the order R, L, D, which is lexicographic for
/// the canonical step alphabet.
fn generate_length(n: u64, g: u64, out: &mut Vec<CompletedWalk>) {
    let mut prefix: Vec<StepKind> = Vec::with_capacity(n as usize);
    dfs(1, 0, n as i64, g as i64, &mut prefix, out);
}

fn dfs(
    x: i64,
    y: i64,
    remaining: i64,
    g: i64,
    prefix: &mut Vec<StepKind>,
    out: &mut Vec<CompletedWalk>,
) {
    if !feasible(x, y, remaining, g) {
        return;
    }
    if remaining == 0 {
        let walk = CompletedWalk::from_steps(prefix.clone())
            .expect("generator emits only valid walks");
        out.push(walk);
        return;
    }
    for step in [StepKind::Right, StepKind::Left, StepKind::Diag] {
        let (dx, dy) = step.delta();
        let (nx, ny) = (x + dx, y + dy);
        if nx < 1 {
            // Stepping to x = 0 is the exit event, never an interior step.
            continue;
        }
        prefix.push(step);
        dfs(nx, ny, remaining - 1, g, prefix, out);
        prefix.pop();
    }
}

/// Whether `(1, g)` is reachable from `(x, y)` in exactly `remaining`
/// steps: the forced counts of each remaining step kind must be nonnegative
/// integers.
fn feasible(x: i64, y: i64, remaining: i64, g: i64) -> bool {
    let diag = g - y;
    if diag < 0 || diag > remaining {
        return false;
    }
    // r - l - d = 1 - x and r + l + d = remaining.
    let twice_r = remaining + 1 - x;
    if twice_r < 0 || twice_r % 2 != 0 {
        return false;
    }
    let left = remaining - twice_r / 2 - diag;
    left >= 0
}
