//! Resultants with respect to `y` and local intersection multiplicities.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::univariate::UniPoly;
use super::zpoly::{integral_columns, ZPoly};
use super::{PolyError, Polynomial};

fn trim(mut p: Vec<ZPoly>) -> Vec<ZPoly> {
    while p.last().is_some_and(ZPoly::is_zero) {
        p.pop();
    }
    p
}

/// Pseudo-remainder of `a` by `b` as polynomials in `y` over `Z[x]`,
/// padded to the full multiplier `lc(b)^(deg a − deg b + 1)`.
fn pseudo_rem(a: &[ZPoly], b: &[ZPoly]) -> Vec<ZPoly> {
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.to_vec();
    let mut steps = r.len() - db;
    while r.len() > db {
        let top = r.len() - 1;
        let rl = r[top].clone();
        let shift = top - db;
        for c in r.iter_mut() {
            *c = &*c * lc;
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &(&rl * bc);
        }
        r = trim(r);
        steps -= 1;
    }
    // The padding keeps the subresultant divisions exact.
    let pad = lc.pow(steps as u32);
    r.iter().map(|c| c * &pad).collect()
}

fn div_all(p: &[ZPoly], d: &ZPoly) -> Vec<ZPoly> {
    p.iter()
        .map(|c| c.div_exact(d).expect("subresultant division is exact"))
        .collect()
}

fn div_exact(a: &ZPoly, b: &ZPoly) -> ZPoly {
    a.div_exact(b).expect("subresultant division is exact")
}

/// Runs the subresultant sequence of `a` and `b` (`deg a ≥ deg b ≥ 1`)
/// until the remainder has degree at most 0. Returns the last two members
/// and the final `h`.
fn subresultant_tail(mut a: Vec<ZPoly>, mut b: Vec<ZPoly>, negate: &mut bool) -> (Vec<ZPoly>, Vec<ZPoly>, ZPoly) {
    let mut g_c = ZPoly::one();
    let mut h = ZPoly::one();
    loop {
        let (da, db) = (a.len() - 1, b.len() - 1);
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            *negate = !*negate;
        }
        let r = pseudo_rem(&a, &b);
        let divisor = &g_c * &h.pow(delta);
        a = b;
        b = trim(div_all(&r, &divisor));
        g_c = a[a.len() - 1].clone();
        if delta > 0 {
            h = div_exact(&g_c.pow(delta), &h.pow(delta - 1));
        }
        if b.len() <= 1 {
            return (a, b, h);
        }
    }
}

fn resultant_z(a: Vec<ZPoly>, b: Vec<ZPoly>) -> ZPoly {
    let (mut a, mut b) = (trim(a), trim(b));
    if a.is_empty() || b.is_empty() {
        return ZPoly::zero();
    }
    let mut negate = false;
    if a.len() < b.len() {
        negate = ((a.len() - 1) * (b.len() - 1)) % 2 == 1;
        std::mem::swap(&mut a, &mut b);
    }
    let da = a.len() - 1;
    let out = if b.len() == 1 {
        b[0].pow(da as u32)
    } else {
        let (a, b, h) = subresultant_tail(a, b, &mut negate);
        match b.first() {
            None => ZPoly::zero(),
            Some(lb) => {
                let da = (a.len() - 1) as u32;
                div_exact(&lb.pow(da), &h.pow(da - 1))
            }
        }
    };
    if negate {
        &ZPoly::zero() - &out
    } else {
        out
    }
}

/// `Res_y(f, g)` as a polynomial in `x`, by the subresultant remainder
/// sequence.
pub fn resultant_y(f: &Polynomial, g: &Polynomial) -> UniPoly {
    let (a, ca) = integral_columns(&f.y_coefficients());
    let (b, cb) = integral_columns(&g.y_coefficients());
    let (Some(df), Some(dg)) = (f.degree_y(), g.degree_y()) else {
        return UniPoly::zero();
    };
    let r = resultant_z(a, b).to_uni();
    // Res(λf, μg) = λ^deg(g) μ^deg(f) Res(f, g).
    let scale = ca.pow(dg) * cb.pow(df);
    r.scale(&BigRational::new(BigInt::one(), scale))
}

/// Last nonzero member of the subresultant sequence of `a` and `b` (as
/// `y`-coefficient lists over `Q[x]`); its primitive part is their gcd up to
/// a factor in `Q[x]`.
pub(crate) fn last_subresultant(a: &[UniPoly], b: &[UniPoly]) -> Vec<UniPoly> {
    let (a, _) = integral_columns(a);
    let (b, _) = integral_columns(b);
    let (mut a, mut b) = (trim(a), trim(b));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let last = if b.len() <= 1 {
        if b.is_empty() {
            a
        } else {
            b
        }
    } else {
        let (a, b, _) = subresultant_tail(a, b, &mut false);
        if b.is_empty() {
            a
        } else {
            b
        }
    };
    last.iter().map(ZPoly::to_uni).collect()
}

/// Why the direct resultant reading of an intersection number is invalid in
/// the current coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResultantValidity {
    Valid,
    /// A leading `y`-coefficient vanishes at `x = 0`.
    NotYRegular,
    /// `f(0, y)` and `g(0, y)` share a root away from `y = 0`.
    ExtraCommonRoot,
}

/// Checks that `ord_x Res_y(f, g)` equals the intersection number at the
/// origin.
pub fn resultant_validity(f: &Polynomial, g: &Polynomial) -> ResultantValidity {
    for p in [f, g] {
        let cols = p.y_coefficients();
        match cols.last() {
            Some(lc) if !lc.eval_zero().is_zero() => {}
            _ => return ResultantValidity::NotYRegular,
        }
    }
    let (f0, g0) = (f.at_x_zero(), g.at_x_zero());
    let common = f0.gcd(&g0);
    if common.is_zero() || !common.strip_t_power().is_constant() {
        return ResultantValidity::ExtraCommonRoot;
    }
    ResultantValidity::Valid
}

/// Local intersection number `(f, g)` at the origin, read as
/// `ord_x Res_y(f, g)`; coordinates must pass [`resultant_validity`].
pub fn intersection_multiplicity(f: &Polynomial, g: &Polynomial) -> Result<u64, PolyError> {
    match resultant_validity(f, g) {
        ResultantValidity::Valid => {}
        other => return Err(PolyError::InvalidCoordinates(format!("{other:?}"))),
    }
    let r = resultant_y(f, g);
    match r.order() {
        Some(k) => Ok(k as u64),
        None => Err(PolyError::CommonComponent),
    }
}
