//! Deterministic SVG diagrams of walks on the quarter lattice.
//!
//! The picture shows the lattice grid, the domain wall at x = 1 with the
//! exit column x = 0 shaded, one polyline per walk, and bold strokes for
//! the highlighted walk. All coordinates are integers, so output bytes are
//! identical for identical input.

use crate::errors::CliError;
use morsewalk::lattice_walk::{CompletedWalk, LatticePoint};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

const SCALE: i64 = 40;
const MARGIN: i64 = 50;

struct Frame {
    grid_x_max: i64,
    grid_y_max: i64,
}

impl Frame {
    fn px(&self, x: i64) -> i64 {
        MARGIN + x * SCALE
    }

    fn py(&self, y: i64) -> i64 {
        MARGIN + (self.grid_y_max - y) * SCALE
    }

    fn width(&self) -> i64 {
        2 * MARGIN + self.grid_x_max * SCALE
    }

    fn height(&self) -> i64 {
        2 * MARGIN + self.grid_y_max * SCALE
    }
}

/// Renders one polyline per walk; `highlight` (an index into `walks`) is
/// drawn bold. All walks must end at the same height.
pub fn render_walks(
    walks: &[CompletedWalk],
    highlight: Option<usize>,
    mark_shared: bool,
) -> Result<String, CliError> {
    if walks.is_empty() {
        return Err(CliError::Precondition(
            "nothing to render: no walks given".into(),
        ));
    }
    let g = walks[0].genus();
    if let Some(w) = walks.iter().find(|w| w.genus() != g) {
        return Err(CliError::Precondition(format!(
            "walks of mixed genus: {} vs {}",
            g,
            w.genus()
        )));
    }
    if let Some(h) = highlight {
        if h >= walks.len() {
            return Err(CliError::Precondition(format!(
                "highlight index {h} out of range for {} walks",
                walks.len()
            )));
        }
    }

    let tracks: Vec<Vec<LatticePoint>> = walks.iter().map(|w| w.positions()).collect();
    let max_x = tracks
        .iter()
        .flatten()
        .map(|p| p.x)
        .max()
        .expect("walks are non-empty tracks");
    let frame = Frame {
        grid_x_max: (max_x + 1).max(4),
        grid_y_max: (g as i64).max(2),
    };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {w} {h}\" \
         width=\"{w}\" height=\"{h}\">",
        w = frame.width(),
        h = frame.height()
    );
    let _ = writeln!(
        svg,
        "  <title>{} walk{} from (1, 0) to (1, {g})</title>",
        walks.len(),
        if walks.len() == 1 { "" } else { "s" }
    );
    let _ = writeln!(
        svg,
        "  <rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>",
        frame.width(),
        frame.height()
    );
    // Exit column x in [0, 1): outside the domain.
    let _ = writeln!(
        svg,
        "  <rect x=\"{}\" y=\"{}\" width=\"{SCALE}\" height=\"{}\" fill=\"#f2f2f2\"/>",
        frame.px(0),
        frame.py(frame.grid_y_max),
        frame.grid_y_max * SCALE
    );

    grid(&mut svg, &frame);
    for (i, track) in tracks.iter().enumerate() {
        if Some(i) != highlight {
            polyline(&mut svg, &frame, track, false);
        }
    }
    if mark_shared {
        shared_markers(&mut svg, &frame, &tracks, g);
    }
    if let Some(h) = highlight {
        polyline(&mut svg, &frame, &tracks[h], true);
    }
    // Common start and end of every drawn walk.
    for y in [0, g as i64] {
        let _ = writeln!(
            svg,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"#111111\"/>",
            frame.px(1),
            frame.py(y)
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn grid(svg: &mut String, frame: &Frame) {
    for x in 0..=frame.grid_x_max {
        // The domain wall x = 1 is drawn darker than the rest of the grid.
        let stroke = if x == 1 { "#9a9a9a" } else { "#dddddd" };
        let _ = writeln!(
            svg,
            "  <line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"{stroke}\" \
             stroke-width=\"1\"/>",
            frame.px(x),
            frame.py(frame.grid_y_max),
            frame.py(0)
        );
        let _ = writeln!(
            svg,
            "  <text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"12\" \
             fill=\"#555555\" text-anchor=\"middle\">{x}</text>",
            frame.px(x),
            frame.py(0) + 20
        );
    }
    for y in 0..=frame.grid_y_max {
        let _ = writeln!(
            svg,
            "  <line x1=\"{0}\" y1=\"{2}\" x2=\"{1}\" y2=\"{2}\" stroke=\"#dddddd\" \
             stroke-width=\"1\"/>",
            frame.px(0),
            frame.px(frame.grid_x_max),
            frame.py(y)
        );
        let _ = writeln!(
            svg,
            "  <text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"12\" \
             fill=\"#555555\" text-anchor=\"end\">{y}</text>",
            frame.px(0) - 10,
            frame.py(y) + 4
        );
    }
}

fn polyline(svg: &mut String, frame: &Frame, track: &[LatticePoint], bold: bool) {
    let (stroke, width, opacity) = if bold {
        ("#111111", "3.5", "1")
    } else {
        ("#8a8a8a", "1.5", "0.75")
    };
    if track.len() == 1 {
        // A length-0 walk is a single marked point.
        let _ = writeln!(
            svg,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"{stroke}\" \
             fill-opacity=\"{opacity}\"/>",
            frame.px(track[0].x),
            frame.py(track[0].y)
        );
        return;
    }
    let points: Vec<String> = track
        .iter()
        .map(|p| format!("{},{}", frame.px(p.x), frame.py(p.y)))
        .collect();
    let _ = writeln!(
        svg,
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"{stroke}\" \
         stroke-width=\"{width}\" stroke-opacity=\"{opacity}\" \
         stroke-linejoin=\"round\" stroke-linecap=\"round\"/>",
        points.join(" ")
    );
}

/// Circles every lattice point at height strictly between 0 and `g` that at
/// least two distinct walks visit.
fn shared_markers(svg: &mut String, frame: &Frame, tracks: &[Vec<LatticePoint>], g: u32) {
    let mut counts: BTreeMap<LatticePoint, usize> = BTreeMap::new();
    for track in tracks {
        let interior: BTreeSet<LatticePoint> = track
            .iter()
            .copied()
            .filter(|p| p.y >= 1 && p.y < g as i64)
            .collect();
        for p in interior {
            *counts.entry(p).or_insert(0) += 1;
        }
    }
    for (p, n) in counts {
        if n >= 2 {
            let _ = writeln!(
                svg,
                "  <circle cx=\"{}\" cy=\"{}\" r=\"7\" fill=\"none\" stroke=\"#c43131\" \
                 stroke-width=\"2\"/>",
                frame.px(p.x),
                frame.py(p.y)
            );
        }
    }
}
