//! Acceptance suite: one test per release criterion. Each test prints a
//! `[acceptance] criterion N: PASS` line (visible with `--nocapture`); the
//! harness result line per test doubles as the machine-readable verdict.

use morsewalk::distributions::{
    expected_cobordism, expected_critical_points, expected_genus, expected_index_one,
    expected_local_maxima, monte_carlo_moments, p_length, p_length_genus,
};
use morsewalk::domset::{
    exact_min_dominating_set, greedy_dominating_set, probabilistic_dominating_set,
    verify_dominating,
};
use morsewalk::enumeration::{
    binomial, count_walks_length, delta, enumerate_walks, m_number, WalkCatalog,
};
use morsewalk::lattice_walk::{
    simulate, walk_probability, SimulationOutcome, StepProbabilities,
};
use morsewalk::morse_skeleton::{boundary_profile, invariants_of, skeleton_from_walk};
use morsewalk::walkgraph::build_graph;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn reference_triple() -> StepProbabilities {
    StepProbabilities::from_strs("9/20", "1/20", "1/2").unwrap()
}

fn uniform_triple() -> StepProbabilities {
    StepProbabilities::from_strs("1/3", "1/3", "1/3").unwrap()
}

/// Criterion 1 — exact reference constants at (9/20, 1/20, 1/2):
/// 11 expected critical points, expected genus 45/11, expected cobordism
/// 9/22, as exact rationals with zero tolerance.
#[test]
fn criterion_1_exact_reference_expectations() {
    let probs = reference_triple();
    let crit = expected_critical_points(&probs).unwrap();
    assert_eq!(crit.finite().unwrap(), &ratio(11, 1));
    assert_eq!(expected_genus(&probs).unwrap(), ratio(45, 11));
    assert_eq!(expected_cobordism(&probs).unwrap(), ratio(9, 22));
    // The two corrections cancel in the pinned combination
    // critical - 2 = 2 (cobordism + genus) = 9.
    assert_eq!(
        (expected_cobordism(&probs).unwrap() + expected_genus(&probs).unwrap()) * ratio(2, 1),
        ratio(9, 1)
    );
    println!("[acceptance] criterion 1: PASS");
}

/// Criterion 2 — expectation identity chain over ≥ 10 seeded random valid
/// probability triples, as exact rational equalities.
#[test]
fn criterion_2_identity_chain_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0u32;
    while checked < 12 {
        let d: u32 = rng.random_range(5..=120);
        let a: u32 = rng.random_range(1..d - 1);
        let b: u32 = rng.random_range(1..d - a);
        let c = d - a - b;
        if c == 0 || b + c <= a {
            continue;
        }
        let probs = StepProbabilities::from_strs(
            &format!("{a}/{d}"),
            &format!("{b}/{d}"),
            &format!("{c}/{d}"),
        )
        .unwrap();
        let crit = expected_critical_points(&probs).unwrap();
        let crit = crit.finite().unwrap().clone();
        let maxima = expected_local_maxima(&probs).unwrap();
        let cob = expected_cobordism(&probs).unwrap();
        let idx1 = expected_index_one(&probs).unwrap();
        let genus = expected_genus(&probs).unwrap();
        let one = BigRational::one();
        let two = &one + &one;
        assert_eq!(crit, &idx1 + &maxima + &one, "critical = index1 + maxima + 1");
        assert_eq!(&crit - &two, &two * (&cob + &genus), "euler-characteristic chain");
        checked += 1;
    }
    println!("[acceptance] criterion 2: PASS ({checked} triples)");
}

/// Criterion 3 — Monte Carlo vs closed forms: 10^6 trials, fixed seed, both
/// reference triples; critical points, genus, maxima and cobordism each
/// within 3 standard errors.
#[test]
fn criterion_3_monte_carlo_vs_closed_forms() {
    for probs in [reference_triple(), uniform_triple()] {
        let report = monte_carlo_moments(&probs, 1_000_000, 20_240_819, 100_000);
        assert_eq!(report.critical_points.censored, 0, "no censoring expected");
        let crit = expected_critical_points(&probs).unwrap();
        let checks = [
            ("critical points", report.critical_points, crit.finite().unwrap().clone()),
            ("genus", report.genus, expected_genus(&probs).unwrap()),
            ("local maxima", report.local_maxima, expected_local_maxima(&probs).unwrap()),
            ("cobordism", report.cobordism, expected_cobordism(&probs).unwrap()),
        ];
        for (name, got, want) in checks {
            let want = want.to_f64().unwrap();
            assert!(
                (got.estimate - want).abs() <= 3.0 * got.std_error,
                "{name}: estimate {} vs closed form {want} (se {})",
                got.estimate,
                got.std_error
            );
        }
    }
    println!("[acceptance] criterion 3: PASS");
}

/// Criterion 4 — distribution consistency: the per-genus length law sums to
/// the length law for even n ≤ 40, and for even n ≤ 14 it equals the summed
/// probabilities of the enumerated walks.
#[test]
fn criterion_4_distribution_consistency() {
    let triples = [uniform_triple(), reference_triple()];
    for probs in &triples {
        let mut n = 0u64;
        while n <= 40 {
            let mut total = BigRational::zero();
            for y in 0..=n / 2 {
                total += p_length_genus(n, y, probs).unwrap();
            }
            assert_eq!(total, p_length(n, probs).unwrap(), "n = {n}");
            n += 2;
        }
    }
    for g in 0u64..=7 {
        let catalog = enumerate_walks(16, g).unwrap();
        for probs in &triples {
            let mut n = 2 * g;
            while n <= 14 {
                let total: BigRational = catalog
                    .by_length(n as usize)
                    .iter()
                    .map(|w| walk_probability(w, probs))
                    .sum();
                assert_eq!(
                    total,
                    p_length_genus(n, g, probs).unwrap(),
                    "n = {n}, g = {g}"
                );
                n += 2;
            }
        }
    }
    println!("[acceptance] criterion 4: PASS");
}

/// Criterion 5 — counting formulas vs exhaustive generation for g in
/// {2,3,4} and lengths ≤ 14, plus the weighted-ballot total identity.
#[test]
fn criterion_5_counts_vs_generation() {
    for g in 2u64..=4 {
        let catalog = enumerate_walks(16, g).unwrap();
        assert_eq!(
            BigUint::from(catalog.len() as u64),
            m_number(16, g).unwrap(),
            "g = {g}"
        );
        let mut n = 2 * g;
        while n <= 14 {
            assert_eq!(
                BigUint::from(catalog.by_length(n as usize).len() as u64),
                count_walks_length(n, g).unwrap(),
                "n = {n}, g = {g}"
            );
            n += 2;
        }
    }
    let mut n = 0u64;
    while n <= 14 {
        let mut total = BigUint::zero();
        for g in 0..=n / 2 {
            total += count_walks_length(n, g).unwrap();
        }
        let ballot = binomial(n + 1, (n + 2) / 2) / BigUint::from(n + 1);
        assert_eq!(total, ballot * BigUint::from(2u32).pow((n / 2) as u32));
        n += 2;
    }
    println!("[acceptance] criterion 5: PASS");
}

/// Criterion 6 — intersection-graph degree claims: for g in {2,3,4} and
/// every catalog with lengths up to 14, the minimum degree is ≥ 1 and ≥ the
/// g-th Catalan number minus one.
#[test]
fn criterion_6_graph_degree_claims() {
    for g in 2u64..=4 {
        let bound = delta(g).unwrap().to_u64().unwrap();
        for max_crit in (2 * g + 2..=16).step_by(2) {
            let catalog = enumerate_walks(max_crit, g).unwrap();
            let graph = build_graph(&catalog).unwrap();
            let report = graph.degree_report();
            assert!(
                report.min_degree >= 1,
                "g = {g}, max_crit = {max_crit}: isolated vertex"
            );
            assert!(
                report.min_degree as u64 >= bound,
                "g = {g}, max_crit = {max_crit}: min degree {} < {bound}",
                report.min_degree
            );
        }
    }
    println!("[acceptance] criterion 6: PASS");
}

/// Criterion 7 — dominating sets: the probabilistic method returns a
/// verified set within the first-moment bound evaluated at the Catalan
/// degree bound, in ≤ 50 attempts; exact ≤ greedy ≤ vertex count.
#[test]
fn criterion_7_dominating_set_bounds() {
    for g in 2u64..=3 {
        for max_crit in (2 * g + 2..=14).step_by(2) {
            let catalog = enumerate_walks(max_crit, g).unwrap();
            let graph = build_graph(&catalog).unwrap();
            let n = graph.vertex_count();
            let dmin = delta(g).unwrap().to_f64().unwrap();
            let catalan_bound =
                (n as f64) * (1.0 - dmin / (dmin + 1.0).powf(1.0 + 1.0 / dmin));
            let prob = probabilistic_dominating_set(&graph, 20_240_819, 50).unwrap();
            assert!(verify_dominating(&graph, &prob.vertex_ids));
            assert!(prob.attempts.unwrap() <= 50);
            assert!(
                (prob.size as f64) <= catalan_bound.ceil(),
                "g = {g}, max_crit = {max_crit}: {} > ceil({catalan_bound})",
                prob.size
            );
            let greedy = greedy_dominating_set(&graph);
            assert!(verify_dominating(&graph, &greedy.vertex_ids));
            assert!(greedy.size <= n);
            if n <= 30 {
                let exact = exact_min_dominating_set(&graph).unwrap();
                assert!(verify_dominating(&graph, &exact.vertex_ids));
                assert!(exact.size <= greedy.size);
                assert!(exact.size <= prob.size);
            }
        }
    }
    println!("[acceptance] criterion 7: PASS");
}

/// Criterion 8 — skeleton invariants on every cataloged walk for g ≤ 4 plus
/// 10^5 simulated walks: Euler characteristic 2 − 2g, the
/// critical-point/cobordism/genus chain, and boundary-profile round-trip.
#[test]
fn criterion_8_skeleton_invariants() {
    let check = |walk: &morsewalk::lattice_walk::CompletedWalk| {
        let sk = skeleton_from_walk(walk);
        let inv = invariants_of(&sk);
        assert_eq!(inv.critical_points, walk.len() + 2);
        assert_eq!(inv.euler_characteristic, 2 - 2 * walk.genus() as i64);
        assert_eq!(
            inv.critical_points as i64 - 2,
            2 * (inv.cobordism_class + inv.genus as i64)
        );
        assert_eq!(boundary_profile(&sk), walk.positions());
    };
    let mut cataloged = 0usize;
    for g in 0u64..=4 {
        let catalog: WalkCatalog = enumerate_walks(16, g).unwrap();
        for walk in catalog.iter() {
            check(walk);
        }
        cataloged += catalog.len();
    }
    assert!(cataloged > 50_000, "catalog coverage too small: {cataloged}");
    let probs = uniform_triple();
    let mut completed = 0u64;
    for trial in 0..100_000u64 {
        match simulate(&probs, 818_4321 + trial, 10_000) {
            SimulationOutcome::Completed(w) => {
                completed += 1;
                check(&w);
            }
            SimulationOutcome::Censored { .. } => {}
        }
    }
    assert!(completed >= 99_000, "unexpected censoring: {completed}");
    println!("[acceptance] criterion 8: PASS ({cataloged} cataloged, {completed} simulated)");
}
