//! Shared brute-force oracles for integration tests.

use morsewalk::lattice_walk::{apply_step, in_domain, LatticePoint, StepKind};

/// All step strings of length `n` that stay in the domain and end at
/// `(1, g)`, produced by filtering every one of the `3^n` strings. Returned
/// in lexicographic order for the canonical alphabet R < L < D, matching
/// the enumeration order of the library.
pub fn brute_force_walks(n: u32, g: u32) -> Vec<String> {
    let kinds = [StepKind::Right, StepKind::Left, StepKind::Diag];
    let mut out = Vec::new();
    let total = 3u64.pow(n);
    'outer: for code in 0..total {
        let mut digits = Vec::with_capacity(n as usize);
        let mut c = code;
        for _ in 0..n {
            digits.push((c % 3) as usize);
            c /= 3;
        }
        digits.reverse(); // first step is the most significant digit
        let mut pos = LatticePoint::START;
        let mut s = String::with_capacity(n as usize);
        for &d in &digits {
            let step = kinds[d];
            pos = apply_step(pos, step);
            if !in_domain(pos) {
                continue 'outer;
            }
            s.push(step.as_char());
        }
        if pos == (LatticePoint { x: 1, y: g as i64 }) {
            out.push(s);
        }
    }
    out
}

/// Manual validity check for a step string: every prefix stays in the
/// domain and the endpoint is some `(1, g)`.
pub fn is_valid_walk(steps: &[StepKind]) -> bool {
    let mut pos = LatticePoint::START;
    for &s in steps {
        pos = apply_step(pos, s);
        if !in_domain(pos) {
            return false;
        }
    }
    pos.x == 1 && pos.y >= 0
}
