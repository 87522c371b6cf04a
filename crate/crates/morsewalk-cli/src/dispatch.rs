//! Routes a parsed command to the library and shapes the emitted artifact.

use crate::args::{Command, Method, OutputFormat, ProbArgs};
use crate::errors::CliError;
use crate::render::render_walks;
use crate::report::{
    rows_to_csv, to_json_string, DistArtifact, DomsetArtifact, GraphArtifact, MomentsArtifact,
    ProbReport, SimulateArtifact, StatRow, TrialReport,
};
use morsewalk::distributions::{
    expected_cobordism, expected_critical_points, expected_genus, expected_index_one,
    expected_local_maxima, monte_carlo_moments, p_length, p_length_genus, ExpectationValue,
    MomentReport,
};
use morsewalk::domset::{
    exact_min_dominating_set, greedy_dominating_set, probabilistic_dominating_set,
    verify_dominating,
};
use morsewalk::enumeration::{delta, enumerate_walks_capped, m_number, WalkCatalog};
use morsewalk::lattice_walk::{
    simulate_with_rng, trial_rng, CompletedWalk, SimulationOutcome, StepProbabilities,
    StepSampler,
};
use morsewalk::walkgraph::build_graph_capped;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::json;

/// Largest catalog the render overlay will draw.
const RENDER_CAP: u64 = 10_000;

pub fn run(command: Command, seed: u64) -> Result<String, CliError> {
    match command {
        Command::Simulate {
            probs,
            trials,
            max_steps,
        } => simulate_cmd(&probs, seed, trials, max_steps),
        Command::Moments {
            probs,
            trials,
            max_steps,
        } => moments_cmd(&probs, seed, trials, max_steps),
        Command::Dist {
            probs,
            max_n,
            genus,
            format,
        } => dist_cmd(&probs, max_n, genus, format),
        Command::Enumerate {
            genus,
            max_crit,
            count_only,
            cap,
        } => enumerate_cmd(genus, max_crit, count_only, cap),
        Command::Graph {
            genus,
            max_crit,
            cap,
            edge_list,
            summary,
            assert_min_degree,
        } => graph_cmd(genus, max_crit, cap, edge_list, summary, assert_min_degree),
        Command::Domset {
            genus,
            max_crit,
            cap,
            method,
            max_attempts,
        } => domset_cmd(genus, max_crit, cap, method, max_attempts, seed),
        Command::Render {
            walks,
            genus,
            max_crit,
            highlight,
            mark_shared,
        } => render_cmd(&walks, genus, max_crit, highlight, mark_shared),
    }
}

fn parse_probs(p: &ProbArgs) -> Result<StepProbabilities, CliError> {
    Ok(StepProbabilities::from_strs(&p.pr, &p.pl, &p.pd)?)
}

fn require_steps(max_steps: usize) -> Result<(), CliError> {
    if max_steps == 0 {
        return Err(CliError::Precondition(
            "max-steps must be at least 1".into(),
        ));
    }
    Ok(())
}

fn simulate_cmd(
    probs: &ProbArgs,
    seed: u64,
    trials: u64,
    max_steps: usize,
) -> Result<String, CliError> {
    let probs = parse_probs(probs)?;
    require_steps(max_steps)?;
    let sampler = StepSampler::new(&probs);
    let results: Vec<TrialReport> = (0..trials)
        .map(|t| {
            match simulate_with_rng(&sampler, &mut trial_rng(seed, t), max_steps) {
                SimulationOutcome::Completed(w) => TrialReport::Completed {
                    steps: w.step_string(),
                    length: w.len(),
                    genus: w.genus(),
                },
                SimulationOutcome::Censored { steps, position } => TrialReport::Censored {
                    steps_taken: steps.len(),
                    x: position.x,
                    y: position.y,
                },
            }
        })
        .collect();
    Ok(to_json_string(&SimulateArtifact {
        probabilities: ProbReport::new(&probs),
        seed,
        max_steps,
        trials,
        results,
    }))
}

fn moments_cmd(
    probs: &ProbArgs,
    seed: u64,
    trials: u64,
    max_steps: usize,
) -> Result<String, CliError> {
    let probs = parse_probs(probs)?;
    let crit = match expected_critical_points(&probs)? {
        ExpectationValue::Finite(r) => r,
        ExpectationValue::Infinite => {
            return Err(CliError::Precondition(
                "expected duration infinite: p_l + p_d = p_r gives zero exit drift".into(),
            ))
        }
    };
    let two = BigRational::from_integer(2.into());
    let exact: [(&str, BigRational); 6] = [
        ("critical_points", crit.clone()),
        ("genus", expected_genus(&probs)?),
        ("local_maxima", expected_local_maxima(&probs)?),
        ("cobordism", expected_cobordism(&probs)?),
        ("index_one", expected_index_one(&probs)?),
        ("mean_length", &crit - &two),
    ];
    let mc = if trials > 0 {
        require_steps(max_steps)?;
        Some(monte_carlo_moments(&probs, trials, seed, max_steps))
    } else {
        None
    };
    let estimates: Option<[&MomentReport; 6]> = mc.as_ref().map(|m| {
        [
            &m.critical_points,
            &m.genus,
            &m.local_maxima,
            &m.cobordism,
            &m.index_one,
            &m.mean_length,
        ]
    });
    let statistics = exact
        .iter()
        .enumerate()
        .map(|(i, (name, value))| {
            let mut row = StatRow::closed_only(*name, value);
            if let Some(reports) = &estimates {
                row.mc_estimate = Some(reports[i].estimate);
                row.std_error = Some(reports[i].std_error);
            }
            row
        })
        .collect();
    Ok(to_json_string(&MomentsArtifact {
        probabilities: ProbReport::new(&probs),
        seed,
        trials,
        max_steps,
        censored: mc.as_ref().map_or(0, |m| m.critical_points.censored),
        statistics,
    }))
}

fn dist_cmd(
    probs: &ProbArgs,
    max_n: u64,
    genus: Option<u64>,
    format: OutputFormat,
) -> Result<String, CliError> {
    let probs = parse_probs(probs)?;
    if !max_n.is_multiple_of(2) {
        return Err(CliError::Precondition(format!(
            "max-n must be even, got {max_n}"
        )));
    }
    let mut rows = Vec::new();
    let law = match genus {
        None => {
            let mut n = 0;
            while n <= max_n {
                rows.push(StatRow::closed_only(
                    format!("p_length(n={n})"),
                    &p_length(n, &probs)?,
                ));
                n += 2;
            }
            "length"
        }
        Some(g) => {
            if 2 * g > max_n {
                return Err(CliError::Precondition(format!(
                    "genus {g} walks need length at least {}, above max-n {max_n}",
                    2 * g
                )));
            }
            let mut n = 2 * g;
            while n <= max_n {
                rows.push(StatRow::closed_only(
                    format!("p_length_genus(n={n} g={g})"),
                    &p_length_genus(n, g, &probs)?,
                ));
                n += 2;
            }
            "length_genus"
        }
    };
    Ok(match format {
        OutputFormat::Csv => rows_to_csv(&rows),
        OutputFormat::Json => to_json_string(&DistArtifact {
            probabilities: ProbReport::new(&probs),
            law,
            genus,
            max_n,
            rows,
        }),
    })
}

fn enumerate_cmd(
    genus: u64,
    max_crit: u64,
    count_only: bool,
    cap: u64,
) -> Result<String, CliError> {
    if count_only {
        let count = m_number(max_crit, genus)?;
        return Ok(to_json_string(&json!({ "count": count.to_string() })));
    }
    let catalog = enumerate_walks_capped(max_crit, genus, cap)?;
    let mut out = String::new();
    for walk in catalog.iter() {
        out.push_str(&walk.step_string());
        out.push('\n');
    }
    Ok(out)
}

fn build_graph_pipeline(
    genus: u64,
    max_crit: u64,
    cap: usize,
) -> Result<WalkCatalog, CliError> {
    Ok(enumerate_walks_capped(max_crit, genus, cap as u64)?)
}

fn graph_cmd(
    genus: u64,
    max_crit: u64,
    cap: usize,
    edge_list: Option<std::path::PathBuf>,
    summary: bool,
    assert_min_degree: Option<usize>,
) -> Result<String, CliError> {
    let catalog = build_graph_pipeline(genus, max_crit, cap)?;
    let graph = build_graph_capped(&catalog, cap)?;
    let report = graph.degree_report();
    let default_bound = delta(genus)?
        .to_usize()
        .expect("degree bound fits usize for any catalog within the cap");
    let required = assert_min_degree.unwrap_or(default_bound).max(1);
    if report.min_degree < required {
        let vertex = (0..graph.vertex_count())
            .min_by_key(|&v| graph.degree(v))
            .expect("graph has at least one vertex");
        return Err(CliError::Invariant {
            message: format!(
                "minimum degree {} is below the required bound {required}",
                report.min_degree
            ),
            detail: json!({
                "vertex": vertex,
                "degree": graph.degree(vertex),
                "required_min_degree": required,
                "walk": catalog.walks()[vertex].step_string(),
            }),
        });
    }
    if let Some(path) = edge_list {
        let mut lines = String::new();
        for v in 0..graph.vertex_count() {
            for u in graph.neighbors(v) {
                if (u as usize) > v {
                    lines.push_str(&format!("{v} {u}\n"));
                }
            }
        }
        std::fs::write(&path, lines)?;
    }
    let adjacency = if summary {
        None
    } else {
        Some((0..graph.vertex_count()).map(|v| graph.neighbors(v)).collect())
    };
    Ok(to_json_string(&GraphArtifact {
        genus,
        max_crit,
        vertices: report.vertices,
        edges: report.edges,
        min_degree: report.min_degree,
        max_degree: report.max_degree,
        degree_bound: required,
        degree_histogram: report.degree_histogram,
        adjacency,
    }))
}

fn domset_cmd(
    genus: u64,
    max_crit: u64,
    cap: usize,
    method: Method,
    max_attempts: u64,
    seed: u64,
) -> Result<String, CliError> {
    let catalog = build_graph_pipeline(genus, max_crit, cap)?;
    let graph = build_graph_capped(&catalog, cap)?;
    let result = match method {
        Method::Prob => probabilistic_dominating_set(&graph, seed, max_attempts)?,
        Method::Greedy => greedy_dominating_set(&graph),
        Method::Exact => exact_min_dominating_set(&graph)?,
    };
    if !verify_dominating(&graph, &result.vertex_ids) {
        return Err(CliError::Invariant {
            message: "constructed set fails the domination check".into(),
            detail: json!({ "vertices": result.vertex_ids }),
        });
    }
    let walks = result
        .vertex_ids
        .iter()
        .map(|&id| catalog.walks()[id as usize].step_string())
        .collect();
    Ok(to_json_string(&DomsetArtifact {
        genus,
        max_crit,
        method: result.method.as_str(),
        seed,
        size: result.size,
        bound: result.bound,
        vertices: result.vertex_ids,
        walks,
        attempts: result.attempts,
    }))
}

fn render_cmd(
    walk_strs: &[String],
    genus: Option<u64>,
    max_crit: Option<u64>,
    highlight: Option<usize>,
    mark_shared: bool,
) -> Result<String, CliError> {
    let mut all: Vec<CompletedWalk> = Vec::new();
    match (genus, max_crit) {
        (Some(g), Some(mc)) => {
            let catalog = enumerate_walks_capped(mc, g, RENDER_CAP)?;
            all.extend(catalog.walks().iter().cloned());
        }
        (None, None) => {}
        (Some(_), None) => {
            return Err(CliError::Precondition(
                "--genus overlay requires --max-crit".into(),
            ))
        }
        (None, Some(_)) => {
            return Err(CliError::Precondition(
                "--max-crit requires --genus".into(),
            ))
        }
    }
    let catalog_len = all.len();
    for s in walk_strs {
        all.push(CompletedWalk::parse(s)?);
    }
    let highlight = highlight.or(if walk_strs.len() == 1 {
        Some(catalog_len)
    } else {
        None
    });
    render_walks(&all, highlight, mark_shared)
}
