//! Morse skeletons: the ordered critical-point sequence of the surface a
//! walk builds.
//!
//! A skeleton stands for the whole family of Morse functions sharing one
//! walk: the attaching locus of each piece is deliberately not modeled, and
//! critical values are represented only by their order. Every skeleton
//! starts with the single minimum, maps each walk step to its critical
//! event, and closes with the terminal maximum.

use crate::lattice_walk::{CompletedWalk, LatticePoint, StepKind};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// One critical point of the surface under construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CriticalEvent {
    /// Index 0; the unique starting minimum.
    Minimum,
    /// Index 1, upside-down pair of pants: splits one boundary circle into
    /// two. Produced by a right step.
    PantsUp,
    /// Index 2: caps one boundary circle. Produced by a left step, or by
    /// the terminal exit event.
    Maximum,
    /// Index 1, usual pair of pants: merges two boundary circles and raises
    /// the genus. Produced by an up-and-left step.
    PantsDown,
}

impl CriticalEvent {
    pub fn morse_index(self) -> u8 {
        match self {
            CriticalEvent::Minimum => 0,
            CriticalEvent::PantsUp | CriticalEvent::PantsDown => 1,
            CriticalEvent::Maximum => 2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CriticalEvent::Minimum => "min",
            CriticalEvent::PantsUp => "pants_up",
            CriticalEvent::Maximum => "max",
            CriticalEvent::PantsDown => "pants_down",
        }
    }

    /// Change to the boundary-circle count when this event is attached.
    fn circle_delta(self) -> i64 {
        match self {
            CriticalEvent::Minimum | CriticalEvent::PantsUp => 1,
            CriticalEvent::Maximum | CriticalEvent::PantsDown => -1,
        }
    }
}

/// The ordered critical events of one constructed surface.
///
/// Invariants: the first event is the unique minimum, the last is a
/// maximum, there are `n + 2` events in total for a source walk of length
/// `n`, exactly `g` of them are usual pants, and the running
/// boundary-circle count stays positive until the terminal maximum closes
/// the surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorseSkeleton {
    events: Vec<CriticalEvent>,
    genus: u32,
}

impl MorseSkeleton {
    pub fn events(&self) -> &[CriticalEvent] {
        &self.events
    }

    /// Length of the source walk (`event count - 2`).
    pub fn walk_len(&self) -> usize {
        self.events.len() - 2
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn critical_points(&self) -> usize {
        self.events.len()
    }

    fn count(&self, e: CriticalEvent) -> usize {
        self.events.iter().filter(|&&x| x == e).count()
    }
}

impl Serialize for MorseSkeleton {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("MorseSkeleton", 3)?;
        let labels: Vec<&str> = self.events.iter().map(|e| e.label()).collect();
        s.serialize_field("events", &labels)?;
        s.serialize_field("genus", &self.genus)?;
        s.serialize_field("critical_points", &self.critical_points())?;
        s.end()
    }
}

/// Builds the skeleton of a completed walk: the starting minimum, one event
/// per step, and the terminal maximum from the exit event.
pub fn skeleton_from_walk(w: &CompletedWalk) -> MorseSkeleton {
    let mut events = Vec::with_capacity(w.len() + 2);
    events.push(CriticalEvent::Minimum);
    for &s in w.steps() {
        events.push(match s {
            StepKind::Right => CriticalEvent::PantsUp,
            StepKind::Left => CriticalEvent::Maximum,
            StepKind::Diag => CriticalEvent::PantsDown,
        });
    }
    events.push(CriticalEvent::Maximum);
    MorseSkeleton {
        events,
        genus: w.genus(),
    }
}

/// Topological invariants read off a skeleton.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TopoInvariants {
    pub critical_points: usize,
    pub genus: u32,
    pub local_maxima: usize,
    /// Number of maxima minus number of minima, an integer invariant of the
    /// function on the oriented surface.
    pub cobordism_class: i64,
    pub index_one: usize,
    pub euler_characteristic: i64,
}

/// Counts every invariant by tallying events.
///
/// The identities `euler = 2 - 2 genus` and
/// `critical_points - 2 = 2 (cobordism + genus)` hold for every valid
/// skeleton and are exercised by the test suites.
pub fn invariants_of(sk: &MorseSkeleton) -> TopoInvariants {
    let local_maxima = sk.count(CriticalEvent::Maximum);
    let index_one = sk.count(CriticalEvent::PantsUp) + sk.count(CriticalEvent::PantsDown);
    TopoInvariants {
        critical_points: sk.critical_points(),
        genus: sk.genus(),
        local_maxima,
        cobordism_class: local_maxima as i64 - 1,
        index_one,
        euler_characteristic: 1 - index_one as i64 + local_maxima as i64,
    }
}

/// The running (boundary circles, genus) profile after each non-terminal
/// event. Equals the source walk's position sequence `S_0 ... S_n`.
pub fn boundary_profile(sk: &MorseSkeleton) -> Vec<LatticePoint> {
    let mut out = Vec::with_capacity(sk.events.len() - 1);
    let mut circles = 0i64;
    let mut genus = 0i64;
    for &e in &sk.events[..sk.events.len() - 1] {
        circles += e.circle_delta();
        if e == CriticalEvent::PantsDown {
            genus += 1;
        }
        out.push(LatticePoint::new(circles, genus));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice_walk::tests::figure_walk;
    use crate::lattice_walk::{in_domain, CompletedWalk, SimulationOutcome, StepProbabilities};
    use CriticalEvent::*;

    #[test]
    fn sphere_skeleton() {
        let w = CompletedWalk::from_steps(vec![]).unwrap();
        let sk = skeleton_from_walk(&w);
        assert_eq!(sk.events(), &[Minimum, Maximum]);
        assert_eq!(
            invariants_of(&sk),
            TopoInvariants {
                critical_points: 2,
                genus: 0,
                local_maxima: 1,
                cobordism_class: 0,
                index_one: 0,
                euler_characteristic: 2,
            }
        );
        assert_eq!(boundary_profile(&sk), vec![LatticePoint::START]);
    }

    #[test]
    fn torus_skeleton() {
        let w = CompletedWalk::parse("RD").unwrap();
        let sk = skeleton_from_walk(&w);
        assert_eq!(sk.events(), &[Minimum, PantsUp, PantsDown, Maximum]);
        assert_eq!(
            invariants_of(&sk),
            TopoInvariants {
                critical_points: 4,
                genus: 1,
                local_maxima: 1,
                cobordism_class: 0,
                index_one: 2,
                euler_characteristic: 0,
            }
        );
    }

    #[test]
    fn figure_walk_skeleton() {
        let sk = skeleton_from_walk(&figure_walk());
        assert_eq!(sk.critical_points(), 12);
        assert_eq!(sk.count(PantsDown), 3);
        assert_eq!(sk.genus(), 3);
        let inv = invariants_of(&sk);
        assert_eq!(inv.local_maxima, 3);
        assert_eq!(inv.cobordism_class, 2);
        // critical - 2 = 2 (cobordism + genus): 10 = 2 (2 + 3).
        assert_eq!(
            inv.critical_points as i64 - 2,
            2 * (inv.cobordism_class + inv.genus as i64)
        );
        let profile = boundary_profile(&sk);
        assert_eq!(profile[0], LatticePoint::new(1, 0));
        assert_eq!(profile[1], LatticePoint::new(2, 0));
        assert_eq!(profile[2], LatticePoint::new(3, 0));
        assert_eq!(profile[3], LatticePoint::new(2, 1));
        assert_eq!(*profile.last().unwrap(), LatticePoint::new(1, 3));
    }

    #[test]
    fn profile_round_trips_positions() {
        let w = CompletedWalk::parse("RRDD").unwrap();
        let sk = skeleton_from_walk(&w);
        assert_eq!(boundary_profile(&sk), w.positions());

        let probs = StepProbabilities::from_strs("1/3", "1/3", "1/3").unwrap();
        for seed in 0..200 {
            if let SimulationOutcome::Completed(w) = crate::lattice_walk::simulate(&probs, seed, 10_000) {
                let sk = skeleton_from_walk(&w);
                assert_eq!(boundary_profile(&sk), w.positions());
                assert_eq!(sk.count(Maximum), w.len() / 2 - w.genus() as usize + 1);
                assert_eq!(sk.count(PantsUp), w.len() / 2);
                // Circle count stays positive until the terminal maximum.
                assert!(boundary_profile(&sk).iter().all(|p| in_domain(*p)));
            }
        }
    }

    #[test]
    fn skeleton_json_shape() {
        let sk = skeleton_from_walk(&CompletedWalk::parse("RD").unwrap());
        let json = serde_json::to_string(&sk).unwrap();
        assert_eq!(
            json,
            r#"{"events":["min","pants_up","pants_down","max"],"genus":1,"critical_points":4}"#
        );
    }
}
