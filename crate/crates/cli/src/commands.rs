//! The data behind each subcommand. Every report is a plain serializable
//! struct; formatting happens in [`crate::report`].

use std::collections::BTreeMap;

use serde::Serialize;

use ngerm_core::classify::{
    milnor_lemma55, newton_number_germ, ngerm_check_with, nondegenerate_verdict, ComponentReport, NGermResult,
};
use ngerm_core::poly::{
    diagram_of, face_verdicts, is_reduced_at_origin, kouchnirenko_report_with, model_factors, parse, realize,
    verify_model, FaceVerdict, ModelCheck, PolyError, Polynomial, ReportOptions,
};
use ngerm_core::{Decomposition, ExtNat, ExtRat, GermData, Semantics};

use crate::CliError;

#[derive(Debug, Clone, Serialize)]
pub struct PolyReport {
    pub input: String,
    pub support: Vec<(u32, u32)>,
    pub diagram: String,
    pub vertices: Vec<(u64, u64)>,
    pub nu: ExtNat,
    pub faces: Vec<FaceVerdict>,
    pub reduced: bool,
    pub mu: Option<u64>,
    pub mu_resultant: Option<u64>,
    pub mu_linear: Option<u64>,
    pub equal: Option<bool>,
    pub nondegenerate: Option<bool>,
}

pub fn analyze_poly(text: &str, opts: &ReportOptions) -> Result<PolyReport, CliError> {
    let f = parse(text.trim()).map_err(PolyError::from)?;
    let diagram = diagram_of(&f)?;
    let faces = face_verdicts(&f)?;
    let reduced = is_reduced_at_origin(&f)?;
    let mut out = PolyReport {
        input: f.to_string(),
        support: f.support(),
        diagram: diagram.to_string(),
        vertices: diagram.vertices(),
        nu: diagram.newton_number(),
        faces,
        reduced,
        mu: None,
        mu_resultant: None,
        mu_linear: None,
        equal: None,
        nondegenerate: None,
    };
    if reduced {
        let r = kouchnirenko_report_with(&f, opts)?;
        out.mu = Some(r.mu);
        out.mu_resultant = r.mu_resultant;
        out.mu_linear = r.mu_linear;
        out.equal = Some(r.equal);
        out.nondegenerate = Some(r.chart_nondegenerate);
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct GermReport {
    pub branches: Vec<String>,
    pub multiplicity: u64,
    pub mu: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu_error: Option<String>,
    pub tangents: usize,
    pub contacts: Vec<Vec<ExtRat>>,
    pub contact_exponent: ExtRat,
    pub tangential_components: Vec<Vec<usize>>,
    pub semantics: Semantics,
    #[serde(flatten)]
    pub ngerm: NGermResult,
    pub nondegenerate: bool,
    pub nonsmooth_components: usize,
    pub components: Vec<ComponentReport>,
    pub mu_lemma55: Option<u64>,
    pub nu: u64,
    pub nu_exact: bool,
}

fn branch_label(g: &GermData, i: usize) -> String {
    let b = &g.branches()[i];
    if b.is_smooth() {
        "smooth".to_string()
    } else {
        b.pairs().iter().map(ToString::to_string).collect::<Vec<_>>().join("")
    }
}

pub fn analyze_germ(g: &GermData, semantics: Semantics, overrides: &BTreeMap<usize, u64>) -> GermReport {
    let n = g.branch_count();
    let (mu, mu_error) = match g.milnor_with_overrides(overrides) {
        Ok(v) => (Some(v), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let ngerm = ngerm_check_with(g, semantics);
    let verdict = nondegenerate_verdict(g);
    let tangential = g.tangential_decomposition().components;
    let nu = newton_number_germ(g);
    GermReport {
        branches: (0..n).map(|i| branch_label(g, i)).collect(),
        multiplicity: g.multiplicity(),
        mu,
        mu_error,
        tangents: tangential.len(),
        contacts: (0..n).map(|i| (0..n).map(|j| g.contact(i, j)).collect()).collect(),
        contact_exponent: g.contact_exponent(),
        tangential_components: tangential,
        semantics,
        mu_lemma55: ngerm.witness.as_ref().and_then(|w| milnor_lemma55(g, w).ok()),
        ngerm,
        nondegenerate: verdict.verdict,
        nonsmooth_components: verdict.nonsmooth_count,
        components: verdict.components,
        nu: nu.value,
        nu_exact: nu.exact,
    }
}

fn witness_of(g: &GermData, semantics: Semantics) -> Result<Decomposition, CliError> {
    let res = ngerm_check_with(g, semantics);
    match (res.witness, res.refutation) {
        (Some(w), _) => Ok(w),
        (None, Some(o)) => Err(CliError::Input(format!("not an N-germ: {o}"))),
        (None, None) => Err(CliError::Internal(
            "N-germ check returned neither witness nor refutation".into(),
        )),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ModelReport {
    pub equation: String,
    pub factors: Vec<String>,
    pub witness: Decomposition,
    pub seed: u64,
    pub check: ModelCheck,
    pub mu: u64,
    pub nu: ExtNat,
    pub mu_lemma55: u64,
    pub mu_germ: Option<u64>,
    pub verified: bool,
}

pub fn model(
    g: &GermData,
    semantics: Semantics,
    seed: u64,
    opts: &ReportOptions,
    overrides: &BTreeMap<usize, u64>,
) -> Result<ModelReport, CliError> {
    let w = witness_of(g, semantics)?;
    let factors = model_factors(g, &w, seed)?;
    let check = verify_model(g, &w, &factors)?;
    let f: Polynomial = factors.iter().cloned().product();
    let r = kouchnirenko_report_with(&f, opts)?;
    let mu_lemma55 = milnor_lemma55(g, &w).map_err(|e| CliError::Internal(e.to_string()))?;
    let mu_germ = g.milnor_with_overrides(overrides).ok();
    let verified = check.all() && r.equal && r.mu == mu_lemma55 && mu_germ.is_none_or(|m| m == r.mu);
    if !verified {
        return Err(CliError::Internal(format!(
            "model for seed {seed} failed verification: {check:?}, mu {} nu {} lemma {mu_lemma55} germ {mu_germ:?}",
            r.mu, r.nu
        )));
    }
    Ok(ModelReport {
        equation: f.to_string(),
        factors: factors.iter().map(ToString::to_string).collect(),
        witness: w,
        seed,
        check,
        mu: r.mu,
        nu: r.nu,
        mu_lemma55,
        mu_germ,
        verified,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Trial {
    pub seed: u64,
    pub polynomial: String,
    pub mu: u64,
    pub nu: ExtNat,
    pub equal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub seed: u64,
    pub polynomial: String,
    pub reason: String,
    pub repro: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CrosscheckReport {
    pub ngerm: bool,
    pub nondegenerate: bool,
    pub source: &'static str,
    pub mu_germ: Option<u64>,
    pub nu_germ: u64,
    pub nu_exact: bool,
    pub trials: Vec<Trial>,
    pub pass: bool,
    pub failure: Option<Failure>,
}

/// Compares the intrinsic verdicts of `g` with equations built for seeds
/// `seed..seed + trials`: model equations for N-germs, Puiseux realizations
/// otherwise. Stops at the first mismatch.
pub fn crosscheck(
    g: &GermData,
    semantics: Semantics,
    seed: u64,
    trials: u64,
    opts: &ReportOptions,
    overrides: &BTreeMap<usize, u64>,
    file: &str,
) -> Result<CrosscheckReport, CliError> {
    let ngerm = ngerm_check_with(g, semantics);
    let verdict = nondegenerate_verdict(g);
    let nu = newton_number_germ(g);
    let mu_germ = g.milnor_with_overrides(overrides).ok();
    let lemma = match &ngerm.witness {
        Some(w) => Some(milnor_lemma55(g, w).map_err(|e| CliError::Internal(e.to_string()))?),
        None => None,
    };
    let mut out = CrosscheckReport {
        ngerm: ngerm.verdict,
        nondegenerate: verdict.verdict,
        source: if ngerm.verdict { "model" } else { "realization" },
        mu_germ,
        nu_germ: nu.value,
        nu_exact: nu.exact,
        trials: Vec::new(),
        pass: true,
        failure: None,
    };
    for s in seed..seed.saturating_add(trials) {
        let f: Polynomial = match &ngerm.witness {
            Some(w) => model_factors(g, w, s)?.into_iter().product(),
            None => realize(g, s)?.into_iter().product(),
        };
        let r = kouchnirenko_report_with(&f, &ReportOptions { seed: s, ..*opts })?;
        let mut problems = Vec::new();
        if let Some(m) = mu_germ {
            if r.mu != m {
                problems.push(format!("mu of the equation is {} but the germ data gives {m}", r.mu));
            }
        }
        if r.equal && !verdict.verdict {
            problems.push("mu = nu in this chart although the germ is classified degenerate".to_string());
        }
        if nu.exact && r.nu > ExtNat::Fin(nu.value) {
            problems.push(format!(
                "chart Newton number {} exceeds the germ Newton number {}",
                r.nu, nu.value
            ));
        }
        if let Some(l) = lemma {
            if !r.equal || r.mu != l || r.nu != ExtNat::Fin(l) {
                problems.push(format!(
                    "model has mu {} and nu {} but the witness formula gives {l}",
                    r.mu, r.nu
                ));
            }
        }
        if let Some(first) = out.trials.first() {
            if ngerm.verdict && (first.mu, first.nu) != (r.mu, r.nu) {
                problems.push(format!(
                    "seed {} gave mu {} nu {}, seed {s} differs",
                    first.seed, first.mu, first.nu
                ));
            }
        }
        let polynomial = f.to_string();
        if !problems.is_empty() {
            out.pass = false;
            out.failure = Some(Failure {
                seed: s,
                polynomial,
                reason: problems.join("; "),
                repro: format!("ngerm crosscheck {file} --seed {s} --trials 1"),
            });
            break;
        }
        out.trials.push(Trial {
            seed: s,
            polynomial,
            mu: r.mu,
            nu: r.nu,
            equal: r.equal,
        });
    }
    Ok(out)
}
