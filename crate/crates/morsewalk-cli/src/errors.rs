//! Error-to-exit-code policy.
//!
//! 2 — precondition or usage error (bad rationals, invalid ranges, IO);
//! 3 — a resource cap refused the work (catalog, graph, or search caps,
//!     exhausted sampling attempts);
//! 4 — an internal invariant was violated (e.g. a degree-bound
//!     counterexample); the JSON carries the evidence.

use morsewalk::distributions::DistError;
use morsewalk::domset::DomSetError;
use morsewalk::enumeration::EnumError;
use morsewalk::lattice_walk::WalkError;
use morsewalk::walkgraph::GraphError;
use serde_json::{json, Value};

#[derive(Debug)]
pub enum CliError {
    Precondition(String),
    ResourceCap(String),
    Invariant { message: String, detail: Value },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Precondition(_) => 2,
            CliError::ResourceCap(_) => 3,
            CliError::Invariant { .. } => 4,
        }
    }

    /// Machine-readable error artifact, printed to stdout on failure.
    pub fn to_json(&self) -> Value {
        match self {
            CliError::Precondition(m) | CliError::ResourceCap(m) => json!({ "error": m }),
            CliError::Invariant { message, detail } => {
                json!({ "error": message, "counterexample": detail })
            }
        }
    }
}

impl From<WalkError> for CliError {
    fn from(e: WalkError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<DistError> for CliError {
    fn from(e: DistError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<EnumError> for CliError {
    fn from(e: EnumError) -> Self {
        match e {
            EnumError::CatalogTooLarge { .. } => CliError::ResourceCap(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::TooManyVertices { .. } => CliError::ResourceCap(e.to_string()),
            GraphError::GenusTooSmall(_) => CliError::Precondition(e.to_string()),
        }
    }
}

impl From<DomSetError> for CliError {
    fn from(e: DomSetError) -> Self {
        CliError::ResourceCap(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Precondition(format!("io error: {e}"))
    }
}
