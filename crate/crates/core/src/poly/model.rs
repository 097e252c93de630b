//! Model equations: one polynomial per equisingularity class of N-germs,
//! nondegenerate in the standard chart.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::faces::{chart_nondegenerate, diagram_of};
use super::resultant::intersection_multiplicity;
use super::{PolyError, Polynomial};
use crate::classify::{model_diagram, verify_witness, Decomposition, Semantics};
use crate::germ::GermData;
use crate::rational::ExtRat;

/// Distinct nonzero coefficients for a group of `k` branches.
///
/// Seed 0 gives `1, 2, …, k`; other seeds draw fractions `p/q` with
/// `0 < |p| ≤ 9`, `1 ≤ q ≤ 4`.
fn group_coefficients(rng: &mut Option<ChaCha8Rng>, k: usize) -> Vec<BigRational> {
    match rng {
        None => (1..=k as i64)
            .map(|c| BigRational::from_integer(BigInt::from(c)))
            .collect(),
        Some(rng) => {
            let mut seen = BTreeSet::new();
            let mut out = Vec::with_capacity(k);
            while out.len() < k {
                let mut p: i64 = rng.gen_range(-9..=8);
                if p >= 0 {
                    p += 1;
                }
                let q: i64 = rng.gen_range(1..=4);
                let c = BigRational::new(BigInt::from(p), BigInt::from(q));
                if seen.insert(c.clone()) {
                    out.push(c);
                }
            }
            out
        }
    }
}

/// Coefficient `c_ij` of every branch, indexed by branch.
pub fn model_coefficients(g: &GermData, w: &Decomposition, seed: u64) -> Vec<BigRational> {
    let mut rng = (seed != 0).then(|| ChaCha8Rng::seed_from_u64(seed));
    let mut out = vec![BigRational::zero(); g.branch_count()];
    for grp in &w.groups {
        let cs = group_coefficients(&mut rng, grp.branches.len());
        for (&b, c) in grp.branches.iter().zip(cs) {
            out[b] = c;
        }
    }
    out
}

/// One factor per branch: `y^a - c·x^b` for a fractional exponent `b/a`,
/// `y - c·x^e` for an integral one and `y` for an infinite one.
pub fn model_factors(g: &GermData, w: &Decomposition, seed: u64) -> Result<Vec<Polynomial>, PolyError> {
    verify_witness(g, w, Semantics::Relaxed)?;
    let coeffs = model_coefficients(g, w, seed);
    let mut out = vec![Polynomial::zero(); g.branch_count()];
    for grp in &w.groups {
        for &b in &grp.branches {
            out[b] = match &grp.exponent {
                ExtRat::Inf => Polynomial::y(),
                ExtRat::Fin(e) => {
                    let a = e.denom().to_u32().expect("small exponent denominator");
                    let num = e.numer().to_u32().expect("small exponent numerator");
                    &Polynomial::monomial(BigRational::one(), 0, a) - &Polynomial::monomial(coeffs[b].clone(), num, 0)
                }
            };
        }
    }
    Ok(out)
}

/// Outcome of checking a model equation against its germ data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModelCheck {
    pub diagram_match: bool,
    pub chart_nondegenerate: bool,
    pub transversal: bool,
    pub intersections_match: bool,
}

impl ModelCheck {
    pub fn all(&self) -> bool {
        self.diagram_match && self.chart_nondegenerate && self.transversal && self.intersections_match
    }
}

/// Checks the four guarantees of a model built from `factors`.
pub fn verify_model(g: &GermData, w: &Decomposition, factors: &[Polynomial]) -> Result<ModelCheck, PolyError> {
    let f: Polynomial = factors.iter().cloned().product();
    let diagram_match = diagram_of(&f)? == model_diagram(g, w)?;
    let chart_nondegenerate = chart_nondegenerate(&f)?;
    let order = f.order().expect("nonzero") as usize;
    let transversal = f.at_x_zero().order() == Some(order);
    let mut intersections_match = factors.len() == g.branch_count();
    'outer: for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            if intersection_multiplicity(&factors[i], &factors[j])? != g.intersection(i, j) {
                intersections_match = false;
                break 'outer;
            }
        }
    }
    Ok(ModelCheck {
        diagram_match,
        chart_nondegenerate,
        transversal,
        intersections_match,
    })
}

/// A model equation for the class of `g` witnessed by `w`, verified before
/// it is returned.
pub fn model_equation(g: &GermData, w: &Decomposition, seed: u64) -> Result<Polynomial, PolyError> {
    let factors = model_factors(g, w, seed)?;
    let check = verify_model(g, w, &factors)?;
    if !check.all() {
        return Err(PolyError::InvariantViolation(format!(
            "model equation failed verification: {check:?}"
        )));
    }
    Ok(factors.into_iter().product())
}
