//! Newton diagrams of polynomials and the face nondegeneracy test.

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::univariate::UniPoly;
use super::{PolyError, Polynomial};
use crate::diagram::{Face, NewtonDiagram};

fn check_germ(f: &Polynomial) -> Result<(), PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if !f.constant_term().is_zero() {
        return Err(PolyError::Unit);
    }
    Ok(())
}

/// Lower-left hull vertices of a finite set of lattice points, from the
/// upper-left vertex to the lower-right one.
pub fn staircase_vertices(points: &[(u32, u32)]) -> Vec<(u64, u64)> {
    let Some(min_a) = points.iter().map(|p| p.0).min() else {
        return Vec::new();
    };
    let min_b = points.iter().map(|p| p.1).min().expect("nonempty");
    let end_a = points
        .iter()
        .filter(|p| p.1 == min_b)
        .map(|p| p.0)
        .min()
        .expect("nonempty");
    let mut pts: Vec<(i64, i64)> = points
        .iter()
        .filter(|p| p.0 <= end_a)
        .map(|&(a, b)| (a as i64, b as i64))
        .collect();
    pts.sort();
    pts.dedup_by_key(|p| p.0);
    debug_assert_eq!(pts[0].0, min_a as i64);
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for p in pts {
        while hull.len() >= 2 {
            let (o, a) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (a.0 - o.0) * (p.1 - o.1) - (a.1 - o.1) * (p.0 - o.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull.into_iter().map(|(a, b)| (a as u64, b as u64)).collect()
}

/// Newton diagram of `f` at the origin.
pub fn diagram_of(f: &Polynomial) -> Result<NewtonDiagram, PolyError> {
    check_germ(f)?;
    let vertices = staircase_vertices(&f.support());
    Ok(NewtonDiagram::from_vertices(&vertices).expect("hull vertices form a staircase"))
}

/// The restriction of `f` to a compact face, read as a polynomial in one
/// variable along the face's lattice points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacePolynomial {
    pub face: Face,
    /// `c_k` is the coefficient of `f` at the `k`-th lattice point counted
    /// from the upper-left endpoint.
    pub coeffs: Vec<BigRational>,
}

impl FacePolynomial {
    pub fn univariate(&self) -> UniPoly {
        UniPoly::new(self.coeffs.clone())
    }

    pub fn is_nondegenerate(&self) -> bool {
        face_nondegenerate(self)
    }
}

pub fn faces(f: &Polynomial) -> Result<Vec<FacePolynomial>, PolyError> {
    let d = diagram_of(f)?;
    Ok(d.faces()
        .into_iter()
        .map(|face| {
            let coeffs = (0..face.lattice_count())
                .map(|k| {
                    let (a, b) = face.lattice_point(k);
                    f.coeff(a as u32, b as u32)
                })
                .collect();
            FacePolynomial { face, coeffs }
        })
        .collect())
}

/// No multiple root of `u` in `C*`: the gcd of `u` and `u'`, with its power
/// of `t` removed, must be constant.
pub fn face_nondegenerate(fp: &FacePolynomial) -> bool {
    let u = fp.univariate();
    u.gcd(&u.derivative()).strip_t_power().is_constant()
}

/// Per-face verdicts for a face table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceVerdict {
    pub from: (u64, u64),
    pub to: (u64, u64),
    pub nondegenerate: bool,
}

pub fn face_verdicts(f: &Polynomial) -> Result<Vec<FaceVerdict>, PolyError> {
    Ok(faces(f)?
        .iter()
        .map(|fp| FaceVerdict {
            from: fp.face.from,
            to: fp.face.to,
            nondegenerate: face_nondegenerate(fp),
        })
        .collect())
}

/// Nondegeneracy in the current coordinates: every compact face passes.
pub fn chart_nondegenerate(f: &Polynomial) -> Result<bool, PolyError> {
    if !is_reduced_at_origin(f)? {
        return Err(PolyError::NotReduced);
    }
    Ok(faces(f)?.iter().all(face_nondegenerate))
}

/// True when `gcd(f, f_x, f_y)` does not vanish at the origin, i.e. `f` has
/// no repeated factor through the origin.
pub fn is_reduced_at_origin(f: &Polynomial) -> Result<bool, PolyError> {
    check_germ(f)?;
    let g = f.gcd(&f.derivative_x().gcd(&f.derivative_y()));
    Ok(!g.constant_term().is_zero())
}
