//! Dense integer polynomials in `x`, the coefficient ring of the remainder
//! sequences.

use std::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::univariate::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ZPoly(Vec<BigInt>);

impl ZPoly {
    pub fn new(mut c: Vec<BigInt>) -> ZPoly {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        ZPoly(c)
    }

    pub fn zero() -> ZPoly {
        ZPoly(Vec::new())
    }

    pub fn one() -> ZPoly {
        ZPoly(vec![BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn lead(&self) -> Option<&BigInt> {
        self.0.last()
    }

    pub fn pow(&self, e: u32) -> ZPoly {
        (0..e).fold(ZPoly::one(), |acc, _| &acc * self)
    }

    /// Quotient when `d` divides `self` in `Z[x]`.
    pub fn div_exact(&self, d: &ZPoly) -> Option<ZPoly> {
        let dl = d.lead()?;
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        if self.0.len() < d.0.len() {
            return None;
        }
        let dd = d.0.len() - 1;
        let mut rem = self.0.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(dl);
            if !r.is_zero() {
                return None;
            }
            for (i, dc) in d.0.iter().enumerate() {
                rem[k + i] -= &q * dc;
            }
            quot[k] = q;
        }
        rem.iter().all(Zero::is_zero).then(|| ZPoly::new(quot))
    }

    pub fn to_uni(&self) -> UniPoly {
        UniPoly::new(self.0.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;

    fn mul(self, rhs: &ZPoly) -> ZPoly {
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::new(out)
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;

    fn sub(self, rhs: &ZPoly) -> ZPoly {
        let n = self.0.len().max(rhs.0.len());
        let zero = BigInt::zero();
        ZPoly::new(
            (0..n)
                .map(|k| self.0.get(k).unwrap_or(&zero) - rhs.0.get(k).unwrap_or(&zero))
                .collect(),
        )
    }
}

/// The `y`-coefficients of a polynomial scaled into `Z[x]`, with the scale.
pub(crate) fn integral_columns(cols: &[UniPoly]) -> (Vec<ZPoly>, BigInt) {
    let den = cols
        .iter()
        .flat_map(|c| c.coeffs().iter())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled = cols
        .iter()
        .map(|c| ZPoly::new(c.coeffs().iter().map(|v| (v * &den).to_integer()).collect()))
        .collect();
    (scaled, den)
}
