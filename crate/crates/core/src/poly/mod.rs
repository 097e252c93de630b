//! Exact bivariate polynomials: parsing, Newton diagrams of equations, the
//! face nondegeneracy test, Milnor number oracles and model equations.

mod faces;
mod milnor;
mod model;
mod parse;
mod polynomial;
mod realize;
mod report;
mod resultant;
pub mod univariate;
mod zpoly;

use thiserror::Error;

pub use faces::{
    chart_nondegenerate, diagram_of, face_nondegenerate, face_verdicts, faces, is_reduced_at_origin,
    staircase_vertices, FacePolynomial, FaceVerdict,
};
pub use milnor::{
    coordinate_change, milnor_linear_algebra, milnor_resultant, milnor_resultant_seeded, DEFAULT_DEGREE_CAP, MAX_DRAWS,
};
pub use model::{model_coefficients, model_equation, model_factors, verify_model, ModelCheck};
pub use parse::{parse, ParseError, ParseErrorKind, MAX_EXPONENT};
pub use polynomial::Polynomial;
pub use realize::{characteristic_polynomial, puiseux_branch, realize, PuiseuxTerm};
pub use report::{kouchnirenko_report, kouchnirenko_report_with, KouchnirenkoReport, Oracle, ReportOptions};
pub use resultant::{intersection_multiplicity, resultant_validity, resultant_y, ResultantValidity};

use crate::classify::{ClassifyError, WitnessError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("the zero polynomial does not define a germ")]
    ZeroPolynomial,
    #[error("the polynomial does not vanish at the origin")]
    Unit,
    #[error("the polynomial has a repeated factor through the origin")]
    NotReduced,
    #[error("the singularity at the origin is not isolated")]
    NonIsolated,
    #[error("no valid coordinate change found after {draws} draws")]
    RetryBudgetExhausted { draws: usize },
    #[error("codimension did not stabilize below degree {degree_cap}")]
    Inconclusive { degree_cap: u32 },
    #[error("the two curves share a component")]
    CommonComponent,
    #[error("resultant reading is invalid in these coordinates: {0}")]
    InvalidCoordinates(String),
    #[error("Milnor oracles disagree: resultant {resultant}, linear algebra {linear}")]
    OracleDisagreement { resultant: u64, linear: u64 },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("not a witness: {0}")]
    InvalidWitness(#[from] WitnessError),
    #[error("invalid germ data: {0}")]
    InvalidGerm(String),
    #[error("cannot realize the germ data: {0}")]
    Unrealizable(String),
}

impl PolyError {
    /// True for failures of an internal consistency check rather than of
    /// the input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            PolyError::OracleDisagreement { .. } | PolyError::InvariantViolation(_)
        )
    }
}

impl From<ClassifyError> for PolyError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::InvalidWitness(w) => PolyError::InvalidWitness(w),
            other => PolyError::InvalidGerm(other.to_string()),
        }
    }
}
