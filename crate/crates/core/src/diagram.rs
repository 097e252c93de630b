//! Newton diagrams in the positive quadrant.
//!
//! A diagram is kept as a formal sum of elementary diagrams `{a\b}`
//! (Teissier's notation). The planar region it describes is recovered on
//! demand as a canonical staircase: two axis offsets plus a chain of
//! compact edges ordered from the upper-left vertex towards the x-axis.
//! Mixed area and Newton number are evaluated with exact integers and an
//! explicit infinity.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;
use std::sync::OnceLock;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("an elementary diagram cannot have both extents infinite")]
    BothInfinite,
    #[error("finite extents of an elementary diagram must be positive")]
    ZeroExtent,
    #[error("vertex list is empty")]
    NoVertices,
    #[error("vertices {0:?} and {1:?} are not strictly right-down of each other")]
    NotMonotone((u64, u64), (u64, u64)),
    #[error("vertex {0:?} is not a strict corner of a convex staircase")]
    NotConvex((u64, u64)),
    #[error("offsets ({0}, {1}) disagree with the vertex chain")]
    OffsetMismatch(u64, u64),
    #[error("cannot read {0:?} as a diagram term like {{2\\3}} or {{1\\inf}}")]
    Syntax(String),
}

/// A natural number or infinity.
///
/// `a + ∞ = ∞`, `a · ∞ = ∞` for `a > 0`, `0 · ∞ = 0`, `min(a, ∞) = a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtNat {
    Fin(u64),
    Inf,
}

impl ExtNat {
    pub fn is_infinite(self) -> bool {
        matches!(self, ExtNat::Inf)
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Fin(v) => Some(v),
            ExtNat::Inf => None,
        }
    }
}

impl From<u64> for ExtNat {
    fn from(v: u64) -> Self {
        ExtNat::Fin(v)
    }
}

impl PartialOrd for ExtNat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtNat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtNat::Fin(a), ExtNat::Fin(b)) => a.cmp(b),
            (ExtNat::Fin(_), ExtNat::Inf) => Ordering::Less,
            (ExtNat::Inf, ExtNat::Fin(_)) => Ordering::Greater,
            (ExtNat::Inf, ExtNat::Inf) => Ordering::Equal,
        }
    }
}

impl Add for ExtNat {
    type Output = ExtNat;

    fn add(self, rhs: ExtNat) -> ExtNat {
        match (self, rhs) {
            (ExtNat::Fin(a), ExtNat::Fin(b)) => a.checked_add(b).map_or(ExtNat::Inf, ExtNat::Fin),
            _ => ExtNat::Inf,
        }
    }
}

impl Mul for ExtNat {
    type Output = ExtNat;

    fn mul(self, rhs: ExtNat) -> ExtNat {
        match (self, rhs) {
            (ExtNat::Fin(0), _) | (_, ExtNat::Fin(0)) => ExtNat::Fin(0),
            (ExtNat::Fin(a), ExtNat::Fin(b)) => a.checked_mul(b).map_or(ExtNat::Inf, ExtNat::Fin),
            _ => ExtNat::Inf,
        }
    }
}

impl std::iter::Sum for ExtNat {
    fn sum<I: Iterator<Item = ExtNat>>(iter: I) -> ExtNat {
        iter.fold(ExtNat::Fin(0), Add::add)
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Fin(v) => write!(f, "{v}"),
            ExtNat::Inf => f.write_str("inf"),
        }
    }
}

impl Serialize for ExtNat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtNat::Fin(v) => s.serialize_u64(*v),
            ExtNat::Inf => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtNat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(ExtNat::Fin(v)),
            Raw::Text(t) if t == "inf" => Ok(ExtNat::Inf),
            Raw::Text(t) => Err(serde::de::Error::custom(format!(
                "expected integer or \"inf\", got {t:?}"
            ))),
        }
    }
}

/// The elementary diagram `{a\b}`.
///
/// For finite `a, b` this is the hull of `(a,0)`, `(0,b)` and the quadrant;
/// `{a\∞}` is the quadrant shifted to `(a,0)` and `{∞\b}` the quadrant
/// shifted to `(0,b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ElementaryDiagram {
    a: ExtNat,
    b: ExtNat,
}

impl ElementaryDiagram {
    pub fn new(a: ExtNat, b: ExtNat) -> Result<Self, DiagramError> {
        if a.is_infinite() && b.is_infinite() {
            return Err(DiagramError::BothInfinite);
        }
        if a == ExtNat::Fin(0) || b == ExtNat::Fin(0) {
            return Err(DiagramError::ZeroExtent);
        }
        Ok(ElementaryDiagram { a, b })
    }

    /// Horizontal extent.
    pub fn a(&self) -> ExtNat {
        self.a
    }

    /// Vertical extent.
    pub fn b(&self) -> ExtNat {
        self.b
    }

    /// `ν({a\b})`: `(a-1)(b-1)` for finite extents, `0` for `{1\∞}` and
    /// `{∞\1}`, infinite for the other unbounded generators.
    pub fn newton_number(&self) -> ExtNat {
        match (self.a, self.b) {
            (ExtNat::Fin(a), ExtNat::Fin(b)) => ExtNat::Fin((a - 1) * (b - 1)),
            (ExtNat::Fin(1), ExtNat::Inf) | (ExtNat::Inf, ExtNat::Fin(1)) => ExtNat::Fin(0),
            _ => ExtNat::Inf,
        }
    }
}

/// Shorthand for [`ElementaryDiagram::new`].
pub fn elem(a: impl Into<ExtNat>, b: impl Into<ExtNat>) -> Result<ElementaryDiagram, DiagramError> {
    ElementaryDiagram::new(a.into(), b.into())
}

impl fmt::Display for ElementaryDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ext = |v: ExtNat| match v {
            ExtNat::Fin(n) => n.to_string(),
            ExtNat::Inf => "∞".to_string(),
        };
        write!(f, "{{{}\\{}}}", ext(self.a), ext(self.b))
    }
}

/// `[{a\b}, {a'\b'}] = inf{ab', a'b}`.
pub fn elementary_mixed_area(p: &ElementaryDiagram, q: &ElementaryDiagram) -> ExtNat {
    (p.a * q.b).min(q.a * p.b)
}

/// A compact edge of the staircase, `width` to the right and `height` down.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub width: u64,
    pub height: u64,
}

impl Edge {
    fn cmp_inclination(&self, other: &Edge) -> Ordering {
        (u128::from(self.width) * u128::from(other.height)).cmp(&(u128::from(other.width) * u128::from(self.height)))
    }
}

/// Canonical description of the region of a diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Canonical {
    pub x_offset: u64,
    pub y_offset: u64,
    /// Edges with strictly increasing `width / height`, upper-left first.
    pub edges: Vec<Edge>,
}

impl Canonical {
    fn from_terms(terms: &[ElementaryDiagram]) -> Canonical {
        let mut x_offset = 0u64;
        let mut y_offset = 0u64;
        let mut edges: Vec<Edge> = Vec::new();
        for t in terms {
            match (t.a, t.b) {
                (ExtNat::Fin(a), ExtNat::Inf) => x_offset += a,
                (ExtNat::Inf, ExtNat::Fin(b)) => y_offset += b,
                (ExtNat::Fin(a), ExtNat::Fin(b)) => edges.push(Edge { width: a, height: b }),
                (ExtNat::Inf, ExtNat::Inf) => unreachable!("rejected at construction"),
            }
        }
        edges.sort_by(Edge::cmp_inclination);
        let mut merged: Vec<Edge> = Vec::with_capacity(edges.len());
        for e in edges {
            match merged.last_mut() {
                Some(last) if last.cmp_inclination(&e) == Ordering::Equal => {
                    last.width += e.width;
                    last.height += e.height;
                }
                _ => merged.push(e),
            }
        }
        Canonical {
            x_offset,
            y_offset,
            edges: merged,
        }
    }

    fn vertices(&self) -> Vec<(u64, u64)> {
        let total_height: u64 = self.edges.iter().map(|e| e.height).sum();
        let mut p = (self.x_offset, self.y_offset + total_height);
        let mut out = Vec::with_capacity(self.edges.len() + 1);
        out.push(p);
        for e in &self.edges {
            p = (p.0 + e.width, p.1 - e.height);
            out.push(p);
        }
        out
    }

    /// Terms realizing this region with the fewest generators.
    fn terms(&self) -> Vec<ElementaryDiagram> {
        let mut terms = Vec::with_capacity(self.edges.len() + 2);
        if self.x_offset > 0 {
            terms.push(ElementaryDiagram {
                a: ExtNat::Fin(self.x_offset),
                b: ExtNat::Inf,
            });
        }
        if self.y_offset > 0 {
            terms.push(ElementaryDiagram {
                a: ExtNat::Inf,
                b: ExtNat::Fin(self.y_offset),
            });
        }
        terms.extend(self.edges.iter().map(|e| ElementaryDiagram {
            a: ExtNat::Fin(e.width),
            b: ExtNat::Fin(e.height),
        }));
        terms
    }
}

/// A compact face of a diagram, oriented from its upper-left endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Face {
    pub from: (u64, u64),
    pub to: (u64, u64),
    /// Primitive step `(u, v)`: consecutive lattice points differ by `(u, -v)`.
    pub direction: (u64, u64),
    /// Number of primitive steps; the face carries `steps + 1` lattice points.
    pub steps: u64,
}

impl Face {
    fn from_edge(from: (u64, u64), e: &Edge) -> Face {
        let steps = e.width.gcd(&e.height);
        Face {
            from,
            to: (from.0 + e.width, from.1 - e.height),
            direction: (e.width / steps, e.height / steps),
            steps,
        }
    }

    pub fn lattice_count(&self) -> u64 {
        self.steps + 1
    }

    /// The `k`-th lattice point counted from the upper-left endpoint.
    pub fn lattice_point(&self, k: u64) -> (u64, u64) {
        (self.from.0 + k * self.direction.0, self.from.1 - k * self.direction.1)
    }
}

/// A Newton diagram as a formal sum of elementary diagrams.
///
/// Equality compares the regions (canonical forms), not the formal sums.
#[derive(Debug, Default)]
pub struct NewtonDiagram {
    terms: Vec<ElementaryDiagram>,
    canonical: OnceLock<Canonical>,
}

impl Clone for NewtonDiagram {
    fn clone(&self) -> Self {
        let canonical = OnceLock::new();
        if let Some(c) = self.canonical.get() {
            let _ = canonical.set(c.clone());
        }
        NewtonDiagram {
            terms: self.terms.clone(),
            canonical,
        }
    }
}

impl PartialEq for NewtonDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl Eq for NewtonDiagram {}

impl From<ElementaryDiagram> for NewtonDiagram {
    fn from(t: ElementaryDiagram) -> Self {
        NewtonDiagram::from_terms(vec![t])
    }
}

impl FromIterator<ElementaryDiagram> for NewtonDiagram {
    fn from_iter<I: IntoIterator<Item = ElementaryDiagram>>(iter: I) -> Self {
        NewtonDiagram::from_terms(iter.into_iter().collect())
    }
}

impl NewtonDiagram {
    /// The neutral element: the whole quadrant.
    pub fn zero() -> Self {
        NewtonDiagram::default()
    }

    pub fn from_terms(terms: Vec<ElementaryDiagram>) -> Self {
        NewtonDiagram {
            terms,
            canonical: OnceLock::new(),
        }
    }

    pub fn terms(&self) -> &[ElementaryDiagram] {
        &self.terms
    }

    pub fn canonical(&self) -> &Canonical {
        self.canonical.get_or_init(|| Canonical::from_terms(&self.terms))
    }

    /// The same region with its terms replaced by the canonical generators.
    pub fn canonicalized(&self) -> NewtonDiagram {
        let c = self.canonical().clone();
        let terms = c.terms();
        let canonical = OnceLock::new();
        let _ = canonical.set(c);
        NewtonDiagram { terms, canonical }
    }

    /// Minkowski sum; the term multisets are concatenated.
    pub fn sum(&self, other: &NewtonDiagram) -> NewtonDiagram {
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        NewtonDiagram::from_terms(terms)
    }

    pub fn x_offset(&self) -> u64 {
        self.canonical().x_offset
    }

    pub fn y_offset(&self) -> u64 {
        self.canonical().y_offset
    }

    /// Vertex chain from the upper-left vertex to the lower-right one.
    pub fn vertices(&self) -> Vec<(u64, u64)> {
        self.canonical().vertices()
    }

    /// Builds a diagram from its vertex chain.
    ///
    /// Abscissae must strictly increase, ordinates strictly decrease and every
    /// inner vertex must be a strict convex corner.
    pub fn from_vertices(points: &[(u64, u64)]) -> Result<NewtonDiagram, DiagramError> {
        let (&first, _) = points.split_first().ok_or(DiagramError::NoVertices)?;
        let mut edges = Vec::with_capacity(points.len() - 1);
        for w in points.windows(2) {
            let (p, q) = (w[0], w[1]);
            if q.0 <= p.0 || q.1 >= p.1 {
                return Err(DiagramError::NotMonotone(p, q));
            }
            edges.push(Edge {
                width: q.0 - p.0,
                height: p.1 - q.1,
            });
        }
        for (i, w) in edges.windows(2).enumerate() {
            if w[0].cmp_inclination(&w[1]) != Ordering::Less {
                return Err(DiagramError::NotConvex(points[i + 1]));
            }
        }
        let last = points[points.len() - 1];
        let c = Canonical {
            x_offset: first.0,
            y_offset: last.1,
            edges,
        };
        let terms = c.terms();
        let canonical = OnceLock::new();
        let _ = canonical.set(c);
        Ok(NewtonDiagram { terms, canonical })
    }

    pub fn faces(&self) -> Vec<Face> {
        let c = self.canonical();
        let vertices = c.vertices();
        c.edges
            .iter()
            .zip(vertices.iter())
            .map(|(e, &from)| Face::from_edge(from, e))
            .collect()
    }

    /// Touches both axes.
    pub fn is_convenient(&self) -> bool {
        self.x_offset() == 0 && self.y_offset() == 0
    }

    /// Lies within distance 1 of both axes.
    pub fn is_nearly_convenient(&self) -> bool {
        self.x_offset() <= 1 && self.y_offset() <= 1
    }

    /// Newton number, evaluated on the canonical decomposition.
    ///
    /// Offsets are inspected first; an axis distance of at least two gives
    /// infinity without touching the edges.
    pub fn newton_number(&self) -> ExtNat {
        let c = self.canonical();
        if c.x_offset >= 2 || c.y_offset >= 2 {
            return ExtNat::Inf;
        }
        let terms = c.terms();
        newton_number_of_terms(&terms)
    }

    /// Newton number evaluated directly on the formal sum, with every
    /// unbounded generator `{a\∞}` split into `a` copies of `{1\∞}`.
    pub fn formal_newton_number(&self) -> ExtNat {
        let mut expanded = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            match (t.a, t.b) {
                (ExtNat::Fin(a), ExtNat::Inf) => expanded.extend((0..a).map(|_| ElementaryDiagram {
                    a: ExtNat::Fin(1),
                    b: ExtNat::Inf,
                })),
                (ExtNat::Inf, ExtNat::Fin(b)) => expanded.extend((0..b).map(|_| ElementaryDiagram {
                    a: ExtNat::Inf,
                    b: ExtNat::Fin(1),
                })),
                _ => expanded.push(*t),
            }
        }
        newton_number_of_terms(&expanded)
    }

    /// Mixed area with another diagram, by bilinear expansion over terms.
    pub fn mixed_area(&self, other: &NewtonDiagram) -> ExtNat {
        mixed_area(self, other)
    }
}

/// `(ν1)` applied to a list of generators with known Newton numbers.
fn newton_number_of_terms(terms: &[ElementaryDiagram]) -> ExtNat {
    let mut total = ExtNat::Fin(0);
    for t in terms {
        total = total + t.newton_number();
    }
    for (i, p) in terms.iter().enumerate() {
        for q in &terms[i + 1..] {
            let m = elementary_mixed_area(p, q);
            total = total + m + m;
        }
    }
    match total {
        ExtNat::Inf => ExtNat::Inf,
        // ν ≥ 0 for every genuine diagram, so the subtraction cannot underflow.
        ExtNat::Fin(v) => ExtNat::Fin(v + 1 - terms.len() as u64),
    }
}

/// Minkowski mixed area `[d1, d2]`.
pub fn mixed_area(d1: &NewtonDiagram, d2: &NewtonDiagram) -> ExtNat {
    d1.terms
        .iter()
        .flat_map(|p| d2.terms.iter().map(move |q| elementary_mixed_area(p, q)))
        .sum()
}

impl fmt::Display for NewtonDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.canonical().terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

fn parse_extent(text: &str) -> Option<ExtNat> {
    match text.trim() {
        "inf" | "∞" => Some(ExtNat::Inf),
        t => t.parse().ok().map(ExtNat::Fin),
    }
}

/// Reads the [`Display`](fmt::Display) form: `0` or terms `{a\b}` joined by
/// `+`, with `inf` or `∞` for infinite extents.
impl FromStr for NewtonDiagram {
    type Err = DiagramError;

    fn from_str(text: &str) -> Result<Self, DiagramError> {
        if text.trim() == "0" {
            return Ok(NewtonDiagram::zero());
        }
        let mut terms = Vec::new();
        for raw in text.split('+') {
            let t = raw.trim();
            let inner = t.strip_prefix('{').and_then(|r| r.strip_suffix('}')).unwrap_or(t);
            let (a, b) = inner
                .split_once('\\')
                .ok_or_else(|| DiagramError::Syntax(t.to_string()))?;
            match (parse_extent(a), parse_extent(b)) {
                (Some(a), Some(b)) => terms.push(ElementaryDiagram::new(a, b)?),
                _ => return Err(DiagramError::Syntax(t.to_string())),
            }
        }
        Ok(NewtonDiagram::from_terms(terms))
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    x_offset: u64,
    y_offset: u64,
    vertices: Vec<[u64; 2]>,
}

impl Serialize for NewtonDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DiagramJson {
            x_offset: self.x_offset(),
            y_offset: self.y_offset(),
            vertices: self.vertices().into_iter().map(|(r, s)| [r, s]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for NewtonDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = DiagramJson::deserialize(d)?;
        let points: Vec<(u64, u64)> = raw.vertices.iter().map(|v| (v[0], v[1])).collect();
        let diagram = NewtonDiagram::from_vertices(&points).map_err(serde::de::Error::custom)?;
        if diagram.x_offset() != raw.x_offset || diagram.y_offset() != raw.y_offset {
            return Err(serde::de::Error::custom(DiagramError::OffsetMismatch(
                raw.x_offset,
                raw.y_offset,
            )));
        }
        Ok(diagram)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(terms: &[(ExtNat, ExtNat)]) -> NewtonDiagram {
        terms
            .iter()
            .map(|&(a, b)| ElementaryDiagram::new(a, b).unwrap())
            .collect()
    }

    const INF: ExtNat = ExtNat::Inf;

    #[test]
    fn text_round_trip() {
        let sum = d(&[
            (ExtNat::Fin(2), ExtNat::Fin(3)),
            (ExtNat::Fin(1), INF),
            (ExtNat::Fin(1), ExtNat::Fin(1)),
        ]);
        assert_eq!(sum.to_string().parse::<NewtonDiagram>().unwrap(), sum);
        assert_eq!(
            "2\\3 + {2\\3}".parse::<NewtonDiagram>().unwrap(),
            d(&[(ExtNat::Fin(4), ExtNat::Fin(6))])
        );
        assert_eq!("0".parse::<NewtonDiagram>().unwrap(), NewtonDiagram::zero());
        assert!("{2,3}".parse::<NewtonDiagram>().is_err());
        assert!("{inf\\inf}".parse::<NewtonDiagram>().is_err());
    }
    fn n(v: u64) -> ExtNat {
        ExtNat::Fin(v)
    }

    #[test]
    fn elementary_constructor() {
        assert_eq!(elem(3, 2).unwrap().to_string(), "{3\\2}");
        assert_eq!(elem(n(1), INF).unwrap().to_string(), "{1\\∞}");
        assert_eq!(elem(INF, INF), Err(DiagramError::BothInfinite));
        assert_eq!(elem(0, 2), Err(DiagramError::ZeroExtent));
    }

    #[test]
    fn extnat_conventions() {
        assert_eq!(n(3) + INF, INF);
        assert_eq!(n(3) * INF, INF);
        assert_eq!(n(0) * INF, n(0));
        assert_eq!(n(3).min(INF), n(3));
    }

    #[test]
    fn collinear_sum_merges() {
        let s = d(&[(n(2), n(3)), (n(2), n(3))]);
        let c = s.canonical();
        assert_eq!(c.edges, vec![Edge { width: 4, height: 6 }]);
        assert_eq!((c.x_offset, c.y_offset), (0, 0));
    }

    #[test]
    fn monomial_quadrant() {
        let s = d(&[(n(1), INF), (INF, n(2))]);
        assert_eq!(s.vertices(), vec![(1, 2)]);
        assert!(s.canonical().edges.is_empty());
    }

    #[test]
    fn staircase_merge() {
        let s = NewtonDiagram::from(elem(1, 1).unwrap()).sum(&elem(3, 2).unwrap().into());
        assert_eq!(s.vertices(), vec![(0, 3), (1, 2), (4, 0)]);
    }

    #[test]
    fn mixed_area_examples() {
        let p: NewtonDiagram = elem(2, 3).unwrap().into();
        let q: NewtonDiagram = elem(3, 2).unwrap().into();
        assert_eq!(mixed_area(&p, &q), n(4));
        let p: NewtonDiagram = elem(INF, n(1)).unwrap().into();
        let q: NewtonDiagram = elem(1, 1).unwrap().into();
        assert_eq!(mixed_area(&p, &q), n(1));
        let p = d(&[(n(1), n(1)), (n(2), n(1))]);
        let q: NewtonDiagram = elem(1, 2).unwrap().into();
        assert_eq!(mixed_area(&p, &q), n(2));
    }

    #[test]
    fn newton_number_examples() {
        assert_eq!(NewtonDiagram::from(elem(3, 2).unwrap()).newton_number(), n(2));
        assert_eq!(NewtonDiagram::from(elem(n(2), INF).unwrap()).newton_number(), INF);
        assert_eq!(d(&[(n(2), n(3)), (n(3), n(2))]).newton_number(), n(11));
        assert_eq!(d(&[(n(2), n(3)), (n(2), n(3))]).newton_number(), n(15));
        assert_eq!(NewtonDiagram::from(elem(4, 6).unwrap()).newton_number(), n(15));
        assert_eq!(NewtonDiagram::from(elem(n(1), INF).unwrap()).newton_number(), n(0));
        assert_eq!(NewtonDiagram::from(elem(INF, n(1)).unwrap()).newton_number(), n(0));
        assert_eq!(NewtonDiagram::zero().newton_number(), n(1));
    }

    #[test]
    fn convenience() {
        let cusp: NewtonDiagram = elem(3, 2).unwrap().into();
        assert!(cusp.is_convenient() && cusp.is_nearly_convenient());
        let shifted = d(&[(n(1), INF), (n(3), n(2))]);
        assert!(!shifted.is_convenient() && shifted.is_nearly_convenient());
        let far: NewtonDiagram = elem(n(2), INF).unwrap().into();
        assert!(!far.is_convenient() && !far.is_nearly_convenient());
    }

    #[test]
    fn vertex_round_trip_and_errors() {
        let s = NewtonDiagram::from_vertices(&[(0, 2), (3, 0)]).unwrap();
        assert_eq!(s, NewtonDiagram::from(elem(3, 2).unwrap()));
        assert!(matches!(
            NewtonDiagram::from_vertices(&[(1, 2), (0, 3)]),
            Err(DiagramError::NotMonotone(..))
        ));
        assert!(matches!(
            NewtonDiagram::from_vertices(&[(0, 4), (3, 1), (4, 0)]),
            Err(DiagramError::NotConvex((3, 1)))
        ));
        assert_eq!(NewtonDiagram::from_vertices(&[]), Err(DiagramError::NoVertices));
    }

    #[test]
    fn faces_carry_primitive_direction() {
        let s = d(&[(n(4), n(6))]);
        let f = s.faces();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].direction, (2, 3));
        assert_eq!(f[0].lattice_count(), 3);
        assert_eq!(f[0].lattice_point(1), (2, 3));
    }

    #[test]
    fn json_shape() {
        let s = d(&[(n(1), INF), (n(3), n(2))]);
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(js, r#"{"x_offset":1,"y_offset":0,"vertices":[[1,2],[4,0]]}"#);
        let back: NewtonDiagram = serde_json::from_str(&js).unwrap();
        assert_eq!(back, s);
    }
}
