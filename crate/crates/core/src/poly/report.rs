use serde::Serialize;

use super::faces::{diagram_of, face_verdicts, is_reduced_at_origin, FaceVerdict};
use super::milnor::{milnor_linear_algebra, milnor_resultant_seeded, DEFAULT_DEGREE_CAP};
use super::{PolyError, Polynomial};
use crate::diagram::{ExtNat, NewtonDiagram};

/// Which Milnor number computations to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Oracle {
    Resultant,
    Linear,
    #[default]
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    pub oracle: Oracle,
    pub degree_cap: u32,
    pub seed: u64,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            oracle: Oracle::Both,
            degree_cap: DEFAULT_DEGREE_CAP,
            seed: 0,
        }
    }
}

/// Milnor and Newton numbers of a polynomial germ in the given coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KouchnirenkoReport {
    pub mu: u64,
    pub mu_resultant: Option<u64>,
    pub mu_linear: Option<u64>,
    pub nu: ExtNat,
    pub equal: bool,
    pub chart_nondegenerate: bool,
    pub faces: Vec<FaceVerdict>,
    #[serde(skip)]
    pub diagram: NewtonDiagram,
}

pub fn kouchnirenko_report(f: &Polynomial) -> Result<KouchnirenkoReport, PolyError> {
    kouchnirenko_report_with(f, &ReportOptions::default())
}

/// Computes `μ` with the selected oracles and `ν` of the diagram, and checks
/// `μ ≥ ν` with equality exactly when every face is nondegenerate.
pub fn kouchnirenko_report_with(f: &Polynomial, opts: &ReportOptions) -> Result<KouchnirenkoReport, PolyError> {
    if !is_reduced_at_origin(f)? {
        return Err(PolyError::NotReduced);
    }
    let mu_resultant = match opts.oracle {
        Oracle::Resultant | Oracle::Both => Some(milnor_resultant_seeded(f, opts.seed)?),
        Oracle::Linear => None,
    };
    let mu_linear = match opts.oracle {
        Oracle::Linear | Oracle::Both => Some(milnor_linear_algebra(f, opts.degree_cap)?),
        Oracle::Resultant => None,
    };
    let mu = match (mu_resultant, mu_linear) {
        (Some(r), Some(l)) if r != l => {
            return Err(PolyError::OracleDisagreement {
                resultant: r,
                linear: l,
            })
        }
        (Some(v), _) | (_, Some(v)) => v,
        (None, None) => unreachable!("at least one oracle runs"),
    };
    let diagram = diagram_of(f)?;
    let nu = diagram.newton_number();
    let faces = face_verdicts(f)?;
    let chart_nondegenerate = faces.iter().all(|v| v.nondegenerate);
    let equal = nu == ExtNat::Fin(mu);
    if nu > ExtNat::Fin(mu) {
        return Err(PolyError::InvariantViolation(format!("mu = {mu} is below nu = {nu}")));
    }
    if equal != chart_nondegenerate {
        return Err(PolyError::InvariantViolation(format!(
            "mu = {mu}, nu = {nu} but the face test says nondegenerate = {chart_nondegenerate}"
        )));
    }
    Ok(KouchnirenkoReport {
        mu,
        mu_resultant,
        mu_linear,
        nu,
        equal,
        chart_nondegenerate,
        faces,
        diagram,
    })
}
