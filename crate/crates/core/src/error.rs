//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by graph construction, weighting, and the operator
/// pipeline. Input-shaped problems carry enough context to name the
/// offending field, pair, or clique in diagnostics.
#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: u32 },

    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: u32, v: u32 },

    #[error("duplicate vertex id {vertex}")]
    DuplicateVertex { vertex: u32 },

    #[error("edge {{{u}, {v}}} references a vertex that is not listed")]
    UnknownEndpoint { u: u32, v: u32 },

    #[error("vertex {vertex} is not in the graph")]
    UnknownVertex { vertex: u32 },

    #[error("interior set is empty")]
    EmptyInterior,

    #[error("boundary vertices {u} and {v} are adjacent (E(B,B) must be empty)")]
    BoundaryEdge { u: u32, v: u32 },

    #[error("vertex {vertex} is neither interior nor adjacent to the interior")]
    StrandedVertex { vertex: u32 },

    #[error("missing explicit weight for clique {clique:?}")]
    MissingWeight { clique: Vec<u32> },

    #[error("missing edge weight for {{{u}, {v}}} (normalized mode covers every edge)")]
    MissingEdgeWeight { u: u32, v: u32 },

    #[error("nonpositive weight {value} on clique {clique:?}")]
    NonPositiveWeight { clique: Vec<u32>, value: f64 },

    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("forms belong to different owner graphs")]
    OwnerMismatch,

    #[error("operation undefined for degree {degree}: {reason}")]
    DegreeOutOfRange { degree: usize, reason: &'static str },

    #[error("no boundary cliques of order {order}; operator basis is empty")]
    EmptyBoundaryBasis { order: usize },

    #[error("operator is not self-adjoint under the weights: max asymmetry {max_asymmetry:.3e}")]
    AsymmetricOperator { max_asymmetry: f64 },

    #[error("boundary traces changed by {delta:.3e} under a kernel perturbation of the extension")]
    WellDefinednessViolated { delta: f64 },

    #[error("spectrum has only {available} positive eigenvalues, {requested} requested")]
    InsufficientSpectrum { requested: usize, available: usize },

    #[error("basis is linearly dependent (Gram matrix singular to threshold)")]
    DependentBasis,

    #[error("basis form {index} is not coclosed on the interior (residual {residual:.3e})")]
    CoclosureViolation { index: usize, residual: f64 },

    #[error("bound inapplicable: direction class {class} is empty")]
    EmptyDirectionClass { class: String },

    #[error("clique is not totally ordered under the coordinatewise order: {detail}")]
    NotTotallyOrdered { detail: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// True for errors that mean "the requested computation does not apply
    /// here" rather than "the input is malformed".
    pub fn is_inapplicable(&self) -> bool {
        matches!(
            self,
            Error::DegreeOutOfRange { .. }
                | Error::EmptyBoundaryBasis { .. }
                | Error::EmptyDirectionClass { .. }
                | Error::InsufficientSpectrum { .. }
        )
    }
}
