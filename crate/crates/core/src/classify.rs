//! Intrinsic nondegeneracy: Newton's germs (N-germs), decompositions that
//! witness them, and the verdicts and numbers derived from a witness.
//!
//! A decomposition splits the branches into groups with strictly increasing
//! exponents `1 <= e₁ < … < e_s <= ∞` such that
//!
//! * a group with integral or infinite exponent holds only smooth branches,
//!   and an infinite exponent only a single one;
//! * a group with fractional exponent `b/a` holds only branches whose unique
//!   characteristic pair is `(a, b)`;
//! * two distinct branches from groups `i` and `j` (possibly `i = j`) have
//!   contact order `min(eᵢ, eⱼ)`.
//!
//! Under [`Semantics::Relaxed`] a singleton smooth group may carry any
//! admissible integral exponent; [`Semantics::Literal`] insists that every
//! group exponent is the intrinsic contact exponent of the group, which is
//! infinite for a lone smooth branch.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{ElementaryDiagram, ExtNat, NewtonDiagram};
use crate::germ::{Branch, GermData};
use crate::rational::{to_u64_exact, ExtRat};

/// Branch limit for the exhaustive reference search.
pub const REFERENCE_MAX_BRANCHES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Semantics {
    #[default]
    Relaxed,
    Literal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Group {
    pub branches: Vec<usize>,
    pub exponent: ExtRat,
}

/// Exponent-ordered grouping of branch indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Decomposition {
    pub groups: Vec<Group>,
}

impl Decomposition {
    /// Group number of every branch.
    pub fn labels(&self, n: usize) -> Vec<usize> {
        let mut labels = vec![usize::MAX; n];
        for (k, g) in self.groups.iter().enumerate() {
            for &b in &g.branches {
                if b < n {
                    labels[b] = k;
                }
            }
        }
        labels
    }

    fn remapped(&self, map: &[usize]) -> Decomposition {
        Decomposition {
            groups: self
                .groups
                .iter()
                .map(|g| Group {
                    branches: g.branches.iter().map(|&b| map[b]).collect(),
                    exponent: g.exponent.clone(),
                })
                .collect(),
        }
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.groups.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            let ids: Vec<String> = g.branches.iter().map(usize::to_string).collect();
            write!(f, "({{{}}}, e={})", ids.join(","), g.exponent)?;
        }
        Ok(())
    }
}

/// Why a decomposition is not a valid witness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("groups do not partition the branches 0..{0}")]
    NotPartition(usize),
    #[error("group {0} is empty")]
    EmptyGroup(usize),
    #[error("first exponent {0} is below 1")]
    BelowOne(ExtRat),
    #[error("exponents {0} and {1} are not strictly increasing")]
    NotIncreasing(ExtRat, ExtRat),
    #[error("branch {branch} does not fit a group with exponent {exponent}")]
    BranchType { branch: usize, exponent: ExtRat },
    #[error("group with infinite exponent must be a single branch")]
    InfiniteGroupSize,
    #[error("contact of branches {i} and {j} is {found}, expected {expected}")]
    Contact {
        i: usize,
        j: usize,
        found: ExtRat,
        expected: ExtRat,
    },
    #[error("singleton smooth group {{{branch}}} must have exponent inf under literal semantics")]
    LiteralSingleton { branch: usize },
}

/// A reason why no decomposition exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    MultiplePairs {
        branch: usize,
        count: usize,
    },
    ContactNotIncreasing {
        branches: Vec<usize>,
        contact: ExtRat,
        previous: ExtRat,
    },
    NoUniformContact {
        branches: Vec<usize>,
        contact: ExtRat,
    },
    ExponentMismatch {
        branch: usize,
        branch_exponent: ExtRat,
        group_exponent: ExtRat,
    },
    LiteralSingleton {
        branch: usize,
        exponent: ExtRat,
    },
    TopExponentTooSmall {
        branch: usize,
        exponent: ExtRat,
        previous: ExtRat,
    },
    Exhausted,
}

impl Obstruction {
    fn remapped(self, map: &[usize]) -> Obstruction {
        use Obstruction::*;
        let m = |b: usize| map[b];
        match self {
            MultiplePairs { branch, count } => MultiplePairs {
                branch: m(branch),
                count,
            },
            ContactNotIncreasing {
                branches,
                contact,
                previous,
            } => ContactNotIncreasing {
                branches: branches.into_iter().map(m).collect(),
                contact,
                previous,
            },
            NoUniformContact { branches, contact } => NoUniformContact {
                branches: branches.into_iter().map(m).collect(),
                contact,
            },
            ExponentMismatch {
                branch,
                branch_exponent,
                group_exponent,
            } => ExponentMismatch {
                branch: m(branch),
                branch_exponent,
                group_exponent,
            },
            LiteralSingleton { branch, exponent } => LiteralSingleton {
                branch: m(branch),
                exponent,
            },
            TopExponentTooSmall {
                branch,
                exponent,
                previous,
            } => TopExponentTooSmall {
                branch: m(branch),
                exponent,
                previous,
            },
            Exhausted => Exhausted,
        }
    }
}

fn list(ids: &[usize]) -> String {
    ids.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Obstruction::*;
        match self {
            MultiplePairs { branch, count } => {
                write!(f, "branch {branch} has {count} characteristic pairs (at most one allowed)")
            }
            ContactNotIncreasing { branches, contact, previous } => write!(
                f,
                "branches {{{}}} still have contact {contact}, not above the previous group exponent {previous}",
                list(branches)
            ),
            NoUniformContact { branches, contact } => write!(
                f,
                "no branch among {{{}}} has contact {contact} with all the others",
                list(branches)
            ),
            ExponentMismatch { branch, branch_exponent, group_exponent } => write!(
                f,
                "branch {branch} (exponent {branch_exponent}) cannot join a group with exponent {group_exponent}"
            ),
            LiteralSingleton { branch, exponent } => write!(
                f,
                "smooth branch {branch} would form a singleton group with finite exponent {exponent}"
            ),
            TopExponentTooSmall { branch, exponent, previous } => write!(
                f,
                "branch {branch} needs exponent {exponent}, which does not exceed the previous group exponent {previous}"
            ),
            Exhausted => f.write_str("no decomposition exists (exhaustive search)"),
        }
    }
}

impl Serialize for Obstruction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NGermResult {
    #[serde(rename = "ngerm")]
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Decomposition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refutation: Option<Obstruction>,
}

impl NGermResult {
    fn accept(w: Decomposition) -> NGermResult {
        NGermResult {
            verdict: true,
            witness: Some(w),
            refutation: None,
        }
    }

    fn reject(o: Obstruction) -> NGermResult {
        NGermResult {
            verdict: false,
            witness: None,
            refutation: Some(o),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("reference search supports at most {max} branches, got {got}")]
    TooManyBranches { max: usize, got: usize },
    #[error("not a witness: {0}")]
    InvalidWitness(#[from] WitnessError),
}

fn branch_fits(b: &Branch, e: &ExtRat) -> bool {
    if e.is_integral_or_inf() {
        b.is_smooth()
    } else {
        b.pairs().len() == 1 && ExtRat::Fin(b.pairs()[0].ratio()) == *e
    }
}

/// Checks every condition of a decomposition directly against the data.
pub fn verify_witness(g: &GermData, w: &Decomposition, semantics: Semantics) -> Result<(), WitnessError> {
    let n = g.branch_count();
    let mut seen = vec![false; n];
    for (k, grp) in w.groups.iter().enumerate() {
        if grp.branches.is_empty() {
            return Err(WitnessError::EmptyGroup(k));
        }
        for &b in &grp.branches {
            if b >= n || seen[b] {
                return Err(WitnessError::NotPartition(n));
            }
            seen[b] = true;
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(WitnessError::NotPartition(n));
    }
    if let Some(first) = w.groups.first() {
        if first.exponent < ExtRat::int(1) {
            return Err(WitnessError::BelowOne(first.exponent.clone()));
        }
    }
    for pair in w.groups.windows(2) {
        if pair[0].exponent >= pair[1].exponent {
            return Err(WitnessError::NotIncreasing(
                pair[0].exponent.clone(),
                pair[1].exponent.clone(),
            ));
        }
    }
    for grp in &w.groups {
        for &b in &grp.branches {
            if !branch_fits(&g.branches()[b], &grp.exponent) {
                return Err(WitnessError::BranchType {
                    branch: b,
                    exponent: grp.exponent.clone(),
                });
            }
        }
        if grp.exponent.is_infinite() && grp.branches.len() != 1 {
            return Err(WitnessError::InfiniteGroupSize);
        }
        if semantics == Semantics::Literal
            && grp.branches.len() == 1
            && g.branches()[grp.branches[0]].is_smooth()
            && !grp.exponent.is_infinite()
        {
            return Err(WitnessError::LiteralSingleton {
                branch: grp.branches[0],
            });
        }
    }
    for (k, gk) in w.groups.iter().enumerate() {
        for gl in &w.groups[k..] {
            let expected = gk.exponent.clone().min(gl.exponent.clone());
            for &i in &gk.branches {
                for &j in &gl.branches {
                    if i == j {
                        continue;
                    }
                    let found = g.contact(i, j);
                    if found != expected {
                        return Err(WitnessError::Contact { i, j, found, expected });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Decides whether the germ is an N-germ under the relaxed semantics.
pub fn ngerm_check(g: &GermData) -> NGermResult {
    ngerm_check_with(g, Semantics::Relaxed)
}

/// Decides N-germ membership by peeling groups off in increasing exponent
/// order.
///
/// With at least two branches left, the next group's exponent is forced to
/// be the smallest remaining contact `δ`, and the group consists of the
/// branches whose contacts with all remaining branches equal `δ`, except
/// that one of them may be kept back as a final singleton group. When several
/// witnesses exist, the one whose branch-to-group label vector is
/// lexicographically smallest is returned.
pub fn ngerm_check_with(g: &GermData, semantics: Semantics) -> NGermResult {
    for (i, b) in g.branches().iter().enumerate() {
        if b.pairs().len() > 1 {
            return NGermResult::reject(Obstruction::MultiplePairs {
                branch: i,
                count: b.pairs().len(),
            });
        }
    }
    let all: Vec<usize> = (0..g.branch_count()).collect();
    match peel(g, &all, None, semantics) {
        Ok(groups) => NGermResult::accept(Decomposition { groups }),
        Err(o) => NGermResult::reject(o),
    }
}

fn single_branch_group(g: &GermData, l: usize, previous: Option<&ExtRat>) -> Result<Group, Obstruction> {
    let exponent = g.branches()[l].exponent();
    if let Some(prev) = previous {
        if exponent <= *prev {
            return Err(Obstruction::TopExponentTooSmall {
                branch: l,
                exponent,
                previous: prev.clone(),
            });
        }
    }
    Ok(Group {
        branches: vec![l],
        exponent,
    })
}

fn check_group(g: &GermData, members: &[usize], delta: &ExtRat, semantics: Semantics) -> Result<(), Obstruction> {
    for &l in members {
        let b = &g.branches()[l];
        if !branch_fits(b, delta) {
            return Err(Obstruction::ExponentMismatch {
                branch: l,
                branch_exponent: b.exponent(),
                group_exponent: delta.clone(),
            });
        }
    }
    if semantics == Semantics::Literal && members.len() == 1 && g.branches()[members[0]].is_smooth() {
        return Err(Obstruction::LiteralSingleton {
            branch: members[0],
            exponent: delta.clone(),
        });
    }
    Ok(())
}

fn peel(
    g: &GermData,
    remaining: &[usize],
    previous: Option<&ExtRat>,
    semantics: Semantics,
) -> Result<Vec<Group>, Obstruction> {
    if let [l] = remaining {
        return Ok(vec![single_branch_group(g, *l, previous)?]);
    }
    let delta = remaining
        .iter()
        .flat_map(|&i| remaining.iter().filter(move |&&j| j > i).map(move |&j| g.contact(i, j)))
        .min()
        .expect("at least two branches");
    let floor = previous.cloned().unwrap_or_else(|| ExtRat::int(0));
    if delta <= floor || delta < ExtRat::int(1) {
        return Err(Obstruction::ContactNotIncreasing {
            branches: remaining.to_vec(),
            contact: delta,
            previous: floor,
        });
    }
    let uniform: Vec<usize> = remaining
        .iter()
        .copied()
        .filter(|&l| remaining.iter().all(|&k| k == l || g.contact(l, k) == delta))
        .collect();
    if uniform.is_empty() {
        return Err(Obstruction::NoUniformContact {
            branches: remaining.to_vec(),
            contact: delta,
        });
    }

    let whole = check_group(g, &uniform, &delta, semantics).and_then(|()| {
        let rest: Vec<usize> = remaining.iter().copied().filter(|l| !uniform.contains(l)).collect();
        let mut groups = vec![Group {
            branches: uniform.clone(),
            exponent: delta.clone(),
        }];
        if !rest.is_empty() {
            groups.extend(peel(g, &rest, Some(&delta), semantics)?);
        }
        Ok(groups)
    });
    let first_error = match whole {
        Ok(groups) => return Ok(groups),
        Err(e) => e,
    };
    if uniform.len() == remaining.len() {
        // Keep one branch back as the top group; the largest index first
        // gives the smallest label vector.
        for &held in uniform.iter().rev() {
            let members: Vec<usize> = uniform.iter().copied().filter(|&l| l != held).collect();
            if check_group(g, &members, &delta, semantics).is_err() {
                continue;
            }
            if let Ok(top) = single_branch_group(g, held, Some(&delta)) {
                return Ok(vec![
                    Group {
                        branches: members,
                        exponent: delta.clone(),
                    },
                    top,
                ]);
            }
        }
    }
    Err(first_error)
}

/// Exhaustive N-germ decision over all set partitions and all exponent
/// assignments drawn from branch exponents, contact values and infinity.
pub fn ngerm_reference_check(g: &GermData) -> Result<NGermResult, ClassifyError> {
    ngerm_reference_check_with(g, Semantics::Relaxed)
}

pub fn ngerm_reference_check_with(g: &GermData, semantics: Semantics) -> Result<NGermResult, ClassifyError> {
    let n = g.branch_count();
    if n > REFERENCE_MAX_BRANCHES {
        return Err(ClassifyError::TooManyBranches {
            max: REFERENCE_MAX_BRANCHES,
            got: n,
        });
    }
    let mut candidates: BTreeSet<ExtRat> = BTreeSet::new();
    candidates.insert(ExtRat::Inf);
    for b in g.branches() {
        candidates.insert(b.exponent());
    }
    for i in 0..n {
        for j in i + 1..n {
            candidates.insert(g.contact(i, j));
        }
    }
    let candidates: Vec<ExtRat> = candidates.into_iter().collect();

    let mut labels = vec![0usize; n];
    let mut found = None;
    enumerate_partitions(&mut labels, 1, 1, &mut |labels, blocks| {
        let groups: Vec<Vec<usize>> = (0..blocks)
            .map(|k| (0..labels.len()).filter(|&i| labels[i] == k).collect())
            .collect();
        let mut exps: Vec<ExtRat> = Vec::with_capacity(blocks);
        if assign_exponents(g, &groups, &candidates, semantics, &mut exps) {
            let mut pairs: Vec<Group> = groups
                .into_iter()
                .zip(exps)
                .map(|(branches, exponent)| Group { branches, exponent })
                .collect();
            pairs.sort_by(|a, b| a.exponent.cmp(&b.exponent));
            found = Some(Decomposition { groups: pairs });
            true
        } else {
            false
        }
    });
    Ok(match found {
        Some(w) => {
            debug_assert!(verify_witness(g, &w, semantics).is_ok());
            NGermResult::accept(w)
        }
        None => NGermResult::reject(Obstruction::Exhausted),
    })
}

/// Restricted growth strings in lexicographic order; stops when `visit`
/// returns true.
fn enumerate_partitions(
    labels: &mut [usize],
    pos: usize,
    blocks: usize,
    visit: &mut dyn FnMut(&[usize], usize) -> bool,
) -> bool {
    if labels.is_empty() {
        return false;
    }
    if pos == labels.len() {
        return visit(labels, blocks);
    }
    for k in 0..=blocks {
        labels[pos] = k;
        let next = if k == blocks { blocks + 1 } else { blocks };
        if enumerate_partitions(labels, pos + 1, next, visit) {
            return true;
        }
    }
    false
}

fn assign_exponents(
    g: &GermData,
    groups: &[Vec<usize>],
    candidates: &[ExtRat],
    semantics: Semantics,
    exps: &mut Vec<ExtRat>,
) -> bool {
    let k = exps.len();
    if k == groups.len() {
        return true;
    }
    let members = &groups[k];
    'cand: for e in candidates {
        if *e < ExtRat::int(1) || exps.contains(e) {
            continue;
        }
        if e.is_infinite() && members.len() != 1 {
            continue;
        }
        if members.iter().any(|&b| !branch_fits(&g.branches()[b], e)) {
            continue;
        }
        if semantics == Semantics::Literal
            && members.len() == 1
            && g.branches()[members[0]].is_smooth()
            && !e.is_infinite()
        {
            continue;
        }
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                if g.contact(i, j) != *e {
                    continue 'cand;
                }
            }
        }
        for (other, oe) in groups.iter().zip(exps.iter()) {
            let expected = e.clone().min(oe.clone());
            for &i in members {
                for &j in other {
                    if g.contact(i, j) != expected {
                        continue 'cand;
                    }
                }
            }
        }
        exps.push(e.clone());
        if assign_exponents(g, groups, candidates, semantics, exps) {
            return true;
        }
        exps.pop();
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub branches: Vec<usize>,
    pub is_ngerm: bool,
    pub is_smooth_branch: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Decomposition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refutation: Option<Obstruction>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NondegeneracyResult {
    pub verdict: bool,
    pub components: Vec<ComponentReport>,
    pub nonsmooth_count: usize,
}

/// Nondegeneracy in some chart: every tangential component is an N-germ
/// and at most two components are not single smooth branches.
pub fn nondegenerate_verdict(g: &GermData) -> NondegeneracyResult {
    let mut components = Vec::new();
    for comp in g.tangential_decomposition().components {
        let sub = g.restrict(&comp);
        let res = ngerm_check(&sub);
        let is_smooth_branch = comp.len() == 1 && g.branches()[comp[0]].is_smooth();
        components.push(ComponentReport {
            is_ngerm: res.verdict,
            is_smooth_branch,
            witness: res.witness.map(|w| w.remapped(&comp)),
            refutation: res.refutation.map(|o| o.remapped(&comp)),
            branches: comp,
        });
    }
    let nonsmooth_count = components.iter().filter(|c| !c.is_smooth_branch).count();
    let verdict = components.iter().all(|c| c.is_ngerm) && nonsmooth_count <= 2;
    NondegeneracyResult {
        verdict,
        components,
        nonsmooth_count,
    }
}

fn group_multiplicity(g: &GermData, grp: &Group) -> u64 {
    grp.branches.iter().map(|&b| g.branches()[b].multiplicity()).sum()
}

fn mul_int(m: u64, e: &BigRational) -> BigRational {
    e * BigRational::from_integer(BigInt::from(m))
}

/// `Σ {mᵢeᵢ \ mᵢ}` over the groups of a witness.
pub fn model_diagram(g: &GermData, w: &Decomposition) -> Result<NewtonDiagram, ClassifyError> {
    verify_witness(g, w, Semantics::Relaxed)?;
    let mut terms = Vec::with_capacity(w.groups.len());
    for grp in &w.groups {
        let m = group_multiplicity(g, grp);
        let horizontal = match &grp.exponent {
            ExtRat::Inf => ExtNat::Inf,
            ExtRat::Fin(e) => {
                let me = mul_int(m, e);
                ExtNat::Fin(to_u64_exact(&me).expect("m·e is integral for a valid witness"))
            }
        };
        terms.push(ElementaryDiagram::new(horizontal, ExtNat::Fin(m)).expect("positive extents"));
    }
    Ok(NewtonDiagram::from_terms(terms))
}

/// Milnor number from a witness:
/// `Σ(mᵢ-1)(mᵢeᵢ-1) + 2Σ_{i<j} mᵢmⱼ min(eᵢ,eⱼ) - s + 1`.
pub fn milnor_lemma55(g: &GermData, w: &Decomposition) -> Result<u64, ClassifyError> {
    verify_witness(g, w, Semantics::Relaxed)?;
    let s = w.groups.len() as i64;
    let mut total = BigRational::from_integer(BigInt::from(1 - s));
    let ms: Vec<u64> = w.groups.iter().map(|grp| group_multiplicity(g, grp)).collect();
    for (grp, &m) in w.groups.iter().zip(&ms) {
        if let ExtRat::Fin(e) = &grp.exponent {
            let factor = mul_int(m, e) - BigRational::one();
            total += factor * BigRational::from_integer(BigInt::from(m - 1));
        }
        // An infinite exponent only occurs with m = 1, where the term is 0.
    }
    for i in 0..w.groups.len() {
        for j in i + 1..w.groups.len() {
            let e = w.groups[i].exponent.clone().min(w.groups[j].exponent.clone());
            let e = e.finite().expect("at most one infinite group").clone();
            total += mul_int(2 * ms[i] * ms[j], &e);
        }
    }
    debug_assert!(total >= BigRational::zero());
    Ok(to_u64_exact(&total).expect("integral for a valid witness"))
}

/// The germ Newton number, or a lower bound when the available data does
/// not determine it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GermNewtonNumber {
    pub value: u64,
    pub exact: bool,
}

/// Supremum over charts of the diagram Newton number.
///
/// Exact when every tangential component is an N-germ (each component then
/// contributes `ν = μ`); otherwise components that are not N-germs are
/// credited with the generic value `(m-1)²` and the result is a lower bound.
pub fn newton_number_germ(g: &GermData) -> GermNewtonNumber {
    let m = g.multiplicity();
    let generic = (m - 1) * (m - 1);
    let comps = g.tangential_decomposition().components;
    let mut deficiencies = Vec::with_capacity(comps.len());
    let mut exact = true;
    for comp in &comps {
        let sub = g.restrict(comp);
        let mc = sub.multiplicity();
        let mu = if ngerm_check(&sub).verdict {
            sub.milnor().ok()
        } else {
            None
        };
        match mu {
            Some(mu) => deficiencies.push(mu - (mc - 1) * (mc - 1)),
            None => {
                exact = false;
                deficiencies.push(0);
            }
        }
    }
    let best = if comps.len() == 1 {
        deficiencies[0]
    } else {
        let mut best = 0;
        for k in 0..deficiencies.len() {
            for l in k + 1..deficiencies.len() {
                best = best.max(deficiencies[k] + deficiencies[l]);
            }
        }
        best
    };
    GermNewtonNumber {
        value: generic + best,
        exact,
    }
}
