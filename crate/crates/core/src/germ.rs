//! Equisingularity data of a plane curve germ: branches given by their
//! characteristic pairs and the matrix of pairwise intersection numbers.
//!
//! Intersection numbers are input data. [`GermData::validate`] checks the
//! necessary conditions (symmetry, `(Cᵢ,Cⱼ) ≥ mᵢmⱼ`, the ultrametric triple
//! condition on contact orders) but not full realizability.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::ExtRat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GermError {
    #[error("characteristic pair ({a},{b}) needs a >= 2, b > a and gcd(a,b) = 1")]
    InvalidPair { a: u64, b: u64 },
    #[error("characteristic pairs ({0},{1}) then ({2},{3}) violate b' > a'·b")]
    PairOrder(u64, u64, u64, u64),
    #[error("a germ needs at least one branch")]
    NoBranches,
    #[error("intersection matrix must be {n}x{n}")]
    MatrixShape { n: usize },
    #[error("branch {branch} has {pairs} characteristic pairs; its Milnor number needs an explicit override")]
    MultiPairMilnor { branch: usize, pairs: usize },
    #[error("branch index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("germ data is invalid: {0}")]
    Invalid(String),
}

/// A characteristic pair `(a, b)`: coprime, `a >= 2`, `b > a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharPair {
    a: u64,
    b: u64,
}

impl CharPair {
    pub fn new(a: u64, b: u64) -> Result<CharPair, GermError> {
        if a < 2 || b <= a || a.gcd(&b) != 1 {
            return Err(GermError::InvalidPair { a, b });
        }
        Ok(CharPair { a, b })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// `b / a`.
    pub fn ratio(&self) -> BigRational {
        BigRational::new(BigInt::from(self.b), BigInt::from(self.a))
    }
}

impl fmt::Display for CharPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// A branch; an empty pair list is a smooth branch.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Branch {
    pairs: Vec<CharPair>,
}

impl Branch {
    pub fn smooth() -> Branch {
        Branch::default()
    }

    pub fn new(pairs: Vec<CharPair>) -> Result<Branch, GermError> {
        for w in pairs.windows(2) {
            let (p, q) = (w[0], w[1]);
            if q.b <= q.a * p.b {
                return Err(GermError::PairOrder(p.a, p.b, q.a, q.b));
            }
        }
        Ok(Branch { pairs })
    }

    /// Single-pair branch `(a, b)`.
    pub fn with_pair(a: u64, b: u64) -> Result<Branch, GermError> {
        Branch::new(vec![CharPair::new(a, b)?])
    }

    pub fn pairs(&self) -> &[CharPair] {
        &self.pairs
    }

    pub fn is_smooth(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Product of the `a`-components.
    pub fn multiplicity(&self) -> u64 {
        self.pairs.iter().map(|p| p.a).product()
    }

    /// `b₁/a₁`, or infinity for a smooth branch.
    pub fn exponent(&self) -> ExtRat {
        match self.pairs.first() {
            Some(p) => ExtRat::Fin(p.ratio()),
            None => ExtRat::Inf,
        }
    }

    /// Milnor number when it is determined by the pairs alone: `0` for a
    /// smooth branch and `(a-1)(b-1)` for a single pair.
    pub fn milnor(&self) -> Option<u64> {
        match self.pairs.as_slice() {
            [] => Some(0),
            [p] => Some((p.a - 1) * (p.b - 1)),
            _ => None,
        }
    }
}

/// Contact exponent of a single branch.
pub fn branch_exponent(b: &Branch) -> ExtRat {
    b.exponent()
}

/// A violated necessary condition on germ data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Diagnostic {
    Asymmetric {
        i: usize,
        j: usize,
        ij: u64,
        ji: u64,
    },
    NonPositive {
        i: usize,
        j: usize,
    },
    BelowMultiplicityBound {
        i: usize,
        j: usize,
        value: u64,
        bound: u64,
    },
    Triple {
        i: usize,
        j: usize,
        k: usize,
        d_ij: ExtRat,
        d_ik: ExtRat,
        d_jk: ExtRat,
    },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::Asymmetric { i, j, ij, ji } => {
                write!(f, "matrix is not symmetric: ({i},{j}) = {ij} but ({j},{i}) = {ji}")
            }
            Diagnostic::NonPositive { i, j } => {
                write!(f, "intersection number of branches {i} and {j} must be positive")
            }
            Diagnostic::BelowMultiplicityBound { i, j, value, bound } => write!(
                f,
                "intersection number of branches {i} and {j} is {value}, below the product of multiplicities {bound}"
            ),
            Diagnostic::Triple { i, j, k, d_ij, d_ik, d_jk } => write!(
                f,
                "branches ({i},{j},{k}) violate the contact triple condition: d{i}{j}={d_ij}, d{i}{k}={d_ik}, d{j}{k}={d_jk}"
            ),
        }
    }
}

/// Branches plus the symmetric matrix of intersection numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GermData {
    branches: Vec<Branch>,
    intersections: Vec<Vec<u64>>,
}

impl GermData {
    /// Checks the shape only; see [`GermData::validate`] for the rest.
    pub fn new(branches: Vec<Branch>, intersections: Vec<Vec<u64>>) -> Result<GermData, GermError> {
        let n = branches.len();
        if n == 0 {
            return Err(GermError::NoBranches);
        }
        if intersections.len() != n || intersections.iter().any(|row| row.len() != n) {
            return Err(GermError::MatrixShape { n });
        }
        Ok(GermData {
            branches,
            intersections,
        })
    }

    /// Builds the data from the upper triangle `(i, j, (Cᵢ,Cⱼ))`, filling
    /// the symmetric entries. Missing pairs are left at zero.
    pub fn from_pairs(branches: Vec<Branch>, entries: &[(usize, usize, u64)]) -> Result<GermData, GermError> {
        let n = branches.len();
        let mut m = vec![vec![0u64; n]; n];
        for &(i, j, v) in entries {
            if i >= n {
                return Err(GermError::IndexOutOfRange(i));
            }
            if j >= n {
                return Err(GermError::IndexOutOfRange(j));
            }
            m[i][j] = v;
            m[j][i] = v;
        }
        GermData::new(branches, m)
    }

    pub fn single(branch: Branch) -> GermData {
        GermData {
            branches: vec![branch],
            intersections: vec![vec![0]],
        }
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    pub fn branch_count(&self) -> usize {
        self.branches.len()
    }

    /// Intersection number `(Cᵢ,Cⱼ)` for `i != j`.
    pub fn intersection(&self, i: usize, j: usize) -> u64 {
        self.intersections[i][j]
    }

    pub fn intersections(&self) -> &[Vec<u64>] {
        &self.intersections
    }

    /// Contact order of two branches; infinite for a branch with itself.
    pub fn contact(&self, i: usize, j: usize) -> ExtRat {
        if i == j {
            return ExtRat::Inf;
        }
        let mm = self.branches[i].multiplicity() * self.branches[j].multiplicity();
        ExtRat::Fin(BigRational::new(
            BigInt::from(self.intersections[i][j]),
            BigInt::from(mm),
        ))
    }

    pub fn validate(&self) -> Result<(), Vec<Diagnostic>> {
        let n = self.branches.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let (ij, ji) = (self.intersections[i][j], self.intersections[j][i]);
                if ij != ji {
                    out.push(Diagnostic::Asymmetric { i, j, ij, ji });
                }
                if ij == 0 {
                    out.push(Diagnostic::NonPositive { i, j });
                    continue;
                }
                let bound = self.branches[i].multiplicity() * self.branches[j].multiplicity();
                if ij < bound {
                    out.push(Diagnostic::BelowMultiplicityBound { i, j, value: ij, bound });
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (d_ij, d_ik, d_jk) = (self.contact(i, j), self.contact(i, k), self.contact(j, k));
                    if !triple_ok(&d_ij, &d_ik, &d_jk) {
                        out.push(Diagnostic::Triple {
                            i,
                            j,
                            k,
                            d_ij,
                            d_ik,
                            d_jk,
                        });
                    }
                }
            }
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    pub fn multiplicity(&self) -> u64 {
        self.branches.iter().map(Branch::multiplicity).sum()
    }

    /// Contact order `d(A, B)` of the sub-germs formed by two index sets.
    ///
    /// # Panics
    /// If either set is empty or holds an index out of range.
    pub fn contact_order(&self, a: &[usize], b: &[usize]) -> ExtRat {
        assert!(!a.is_empty() && !b.is_empty(), "contact order of an empty sub-germ");
        a.iter()
            .flat_map(|&i| b.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.contact(i, j))
            .min()
            .expect("nonempty")
    }

    /// Contact exponent `d(C)`: the smallest branch exponent or pairwise
    /// contact order.
    pub fn contact_exponent(&self) -> ExtRat {
        let n = self.branches.len();
        let mut best = ExtRat::Inf;
        for b in &self.branches {
            best = best.min(b.exponent());
        }
        for i in 0..n {
            for j in i + 1..n {
                best = best.min(self.contact(i, j));
            }
        }
        best
    }

    pub fn milnor(&self) -> Result<u64, GermError> {
        self.milnor_with_overrides(&BTreeMap::new())
    }

    /// Milnor number with caller-supplied values for some branches; needed
    /// for branches with two or more characteristic pairs.
    pub fn milnor_with_overrides(&self, overrides: &BTreeMap<usize, u64>) -> Result<u64, GermError> {
        let n = self.branches.len();
        let mut total: i128 = 1 - n as i128;
        for (i, b) in self.branches.iter().enumerate() {
            let mu = match overrides.get(&i) {
                Some(&mu) => mu,
                None => b.milnor().ok_or(GermError::MultiPairMilnor {
                    branch: i,
                    pairs: b.pairs.len(),
                })?,
            };
            total += i128::from(mu);
        }
        for i in 0..n {
            for j in i + 1..n {
                total += 2 * i128::from(self.intersections[i][j]);
            }
        }
        u64::try_from(total).map_err(|_| GermError::Invalid("negative Milnor number".into()))
    }

    /// Classes of the equivalence closure of "contact greater than one",
    /// each sorted, ordered by smallest member.
    pub fn tangential_decomposition(&self) -> TangentialDecomposition {
        let n = self.branches.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let one = ExtRat::int(1);
        for i in 0..n {
            for j in i + 1..n {
                if self.contact(i, j) > one {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    if ri != rj {
                        parent[ri.max(rj)] = ri.min(rj);
                    }
                }
            }
        }
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            classes.entry(r).or_default().push(i);
        }
        let mut components: Vec<Vec<usize>> = classes.into_values().collect();
        components.sort_by_key(|c| c[0]);
        TangentialDecomposition { components }
    }

    /// All branches smooth and pairwise transversal, i.e. `t(C) = m(C)`.
    pub fn is_ordinary(&self) -> bool {
        self.tangential_decomposition().count() as u64 == self.multiplicity()
    }

    /// The sub-germ on the given branches, in the given order.
    pub fn restrict(&self, indices: &[usize]) -> GermData {
        let branches = indices.iter().map(|&i| self.branches[i].clone()).collect();
        let intersections = indices
            .iter()
            .map(|&i| {
                indices
                    .iter()
                    .map(|&j| if i == j { 0 } else { self.intersections[i][j] })
                    .collect()
            })
            .collect();
        GermData {
            branches,
            intersections,
        }
    }

    /// Relabels branches: branch `perm[k]` of `self` becomes branch `k`.
    pub fn permuted(&self, perm: &[usize]) -> GermData {
        self.restrict(perm)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("germ data serializes")
    }

    pub fn from_json(text: &str) -> Result<GermData, serde_json::Error> {
        serde_json::from_str(text)
    }
}

fn triple_ok(x: &ExtRat, y: &ExtRat, z: &ExtRat) -> bool {
    let mut v = [x, y, z];
    v.sort();
    v[0] == v[1]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TangentialDecomposition {
    pub components: Vec<Vec<usize>>,
}

impl TangentialDecomposition {
    /// `t(C)`.
    pub fn count(&self) -> usize {
        self.components.len()
    }
}

#[derive(Serialize, Deserialize)]
struct BranchJson {
    pairs: Vec<[u64; 2]>,
}

#[derive(Serialize, Deserialize)]
struct GermJson {
    branches: Vec<BranchJson>,
    intersections: Vec<Vec<u64>>,
}

impl Serialize for GermData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GermJson {
            branches: self
                .branches
                .iter()
                .map(|b| BranchJson {
                    pairs: b.pairs.iter().map(|p| [p.a, p.b]).collect(),
                })
                .collect(),
            intersections: self.intersections.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GermData {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = GermJson::deserialize(d)?;
        let branches = raw
            .branches
            .into_iter()
            .map(|b| {
                let pairs = b
                    .pairs
                    .iter()
                    .map(|p| CharPair::new(p[0], p[1]))
                    .collect::<Result<Vec<_>, _>>()?;
                Branch::new(pairs)
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        GermData::new(branches, raw.intersections).map_err(D::Error::custom)
    }
}
