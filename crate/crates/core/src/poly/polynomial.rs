use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::univariate::UniPoly;

/// Sparse polynomial in `x, y` with exact rational coefficients.
///
/// Keys are exponent pairs `(α, β)` of `x^α y^β`; zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Polynomial::monomial(c, 0, 0)
    }

    pub fn monomial(c: BigRational, a: u32, b: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        Polynomial { terms }
    }

    pub fn x() -> Self {
        Polynomial::monomial(BigRational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Polynomial::monomial(BigRational::one(), 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), BigRational)>>(iter: I) -> Self {
        let mut p = Polynomial::zero();
        for (k, c) in iter {
            p.add_term(k, c);
        }
        p
    }

    /// Integer coefficients, handy in tests: `[(c, α, β), …]`.
    pub fn from_int_terms(terms: &[(i64, u32, u32)]) -> Self {
        Polynomial::from_terms(
            terms
                .iter()
                .map(|&(c, a, b)| ((a, b), BigRational::from_integer(BigInt::from(c)))),
        )
    }

    pub fn add_term(&mut self, key: (u32, u32), c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigRational {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn support(&self) -> Vec<(u32, u32)> {
        self.terms.keys().copied().collect()
    }

    /// Value at the origin.
    pub fn constant_term(&self) -> BigRational {
        self.coeff(0, 0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, b)| b).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, _)| a).max()
    }

    /// Smallest total degree of a term (the multiplicity at the origin).
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).min()
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    pub fn derivative_x(&self) -> Polynomial {
        Polynomial::from_terms(
            self.terms
                .iter()
                .filter(|((a, _), _)| *a > 0)
                .map(|(&(a, b), c)| ((a - 1, b), c * BigRational::from_integer(BigInt::from(a)))),
        )
    }

    pub fn derivative_y(&self) -> Polynomial {
        Polynomial::from_terms(
            self.terms
                .iter()
                .filter(|((_, b), _)| *b > 0)
                .map(|(&(a, b), c)| ((a, b - 1), c * BigRational::from_integer(BigInt::from(b)))),
        )
    }

    /// `f(a·x + b·y, c·x + d·y)`.
    pub fn linear_substitution(&self, a: i64, b: i64, c: i64, d: i64) -> Polynomial {
        let int = |v: i64| BigRational::from_integer(BigInt::from(v));
        let lx = Polynomial::from_terms([((1, 0), int(a)), ((0, 1), int(b))]);
        let ly = Polynomial::from_terms([((1, 0), int(c)), ((0, 1), int(d))]);
        let max_a = self.degree_x().unwrap_or(0);
        let max_b = self.degree_y().unwrap_or(0);
        let px: Vec<Polynomial> = std::iter::successors(Some(Polynomial::one()), |p| Some(p * &lx))
            .take(max_a as usize + 1)
            .collect();
        let py: Vec<Polynomial> = std::iter::successors(Some(Polynomial::one()), |p| Some(p * &ly))
            .take(max_b as usize + 1)
            .collect();
        let mut out = Polynomial::zero();
        for (&(i, j), coef) in &self.terms {
            let t = &px[i as usize] * &py[j as usize];
            for (&k, v) in &t.terms {
                out.add_term(k, v * coef);
            }
        }
        out
    }

    /// `f(0, y)` as a polynomial in `y`.
    pub fn at_x_zero(&self) -> UniPoly {
        let mut coeffs = vec![BigRational::zero(); self.degree_y().map_or(0, |d| d as usize + 1)];
        for (&(a, b), c) in &self.terms {
            if a == 0 {
                coeffs[b as usize] = c.clone();
            }
        }
        UniPoly::new(coeffs)
    }

    /// `f(x, 0)` as a polynomial in `x`.
    pub fn at_y_zero(&self) -> UniPoly {
        let mut coeffs = vec![BigRational::zero(); self.degree_x().map_or(0, |d| d as usize + 1)];
        for (&(a, b), c) in &self.terms {
            if b == 0 {
                coeffs[a as usize] = c.clone();
            }
        }
        UniPoly::new(coeffs)
    }

    /// Coefficients of `y⁰, y¹, …` as polynomials in `x`.
    pub fn y_coefficients(&self) -> Vec<UniPoly> {
        let Some(dy) = self.degree_y() else {
            return Vec::new();
        };
        let mut raw: Vec<BTreeMap<u32, BigRational>> = vec![BTreeMap::new(); dy as usize + 1];
        for (&(a, b), c) in &self.terms {
            raw[b as usize].insert(a, c.clone());
        }
        raw.into_iter()
            .map(|m| {
                let len = m.keys().next_back().map_or(0, |&k| k as usize + 1);
                let mut v = vec![BigRational::zero(); len];
                for (k, c) in m {
                    v[k as usize] = c;
                }
                UniPoly::new(v)
            })
            .collect()
    }

    pub fn from_y_coefficients(coeffs: &[UniPoly]) -> Polynomial {
        let mut p = Polynomial::zero();
        for (b, u) in coeffs.iter().enumerate() {
            for (a, c) in u.coeffs().iter().enumerate() {
                p.add_term((a as u32, b as u32), c.clone());
            }
        }
        p
    }

    /// Leading term in the lexicographic order with `y > x`.
    fn lex_leading(&self) -> Option<((u32, u32), &BigRational)> {
        self.terms
            .iter()
            .max_by_key(|((a, b), _)| (*b, *a))
            .map(|(k, c)| (*k, c))
    }

    /// Quotient when `d` divides `self` exactly, by multivariate division.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let ((da, db), dc) = d.lex_leading()?;
        let dc_inv = dc.recip();
        let mut rem = self.clone();
        let mut quot = Polynomial::zero();
        while let Some(((ra, rb), rc)) = rem.lex_leading() {
            if ra < da || rb < db {
                return None;
            }
            let t = Polynomial::monomial(rc * &dc_inv, ra - da, rb - db);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Content in `Q[x]` when viewed as a polynomial in `y`.
    fn content_x(&self) -> UniPoly {
        self.y_coefficients()
            .iter()
            .try_fold(UniPoly::zero(), |acc, c| {
                let next = if c.is_zero() { acc } else { acc.gcd(c) };
                // A nonzero constant content cannot shrink further.
                if next.is_constant() && !next.is_zero() {
                    Err(next)
                } else {
                    Ok(next)
                }
            })
            .unwrap_or_else(|unit| unit)
    }

    fn times_uni_x(&self, u: &UniPoly) -> Polynomial {
        let mut p = Polynomial::zero();
        for (&(a, b), c) in &self.terms {
            for (k, uc) in u.coeffs().iter().enumerate() {
                p.add_term((a + k as u32, b), c * uc);
            }
        }
        p
    }

    fn primitive_part_y(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let cont = self.content_x();
        let cols: Vec<UniPoly> = self
            .y_coefficients()
            .iter()
            .map(|c| c.div_exact(&cont).expect("content divides every coefficient"))
            .collect();
        Polynomial::from_y_coefficients(&cols).normalized()
    }

    /// Scales so the lexicographically leading coefficient is 1.
    pub fn normalized(&self) -> Polynomial {
        match self.lex_leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => Polynomial::zero(),
        }
    }

    /// Greatest common divisor over `Q`, normalized to a monic lexicographic
    /// leading coefficient.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let content = self.content_x().gcd(&other.content_x());
        let a = self.primitive_part_y().y_coefficients();
        let b = other.primitive_part_y().y_coefficients();
        let last = super::resultant::last_subresultant(&a, &b);
        // A y-free last subresultant means the primitive parts are coprime.
        let g = if last.len() <= 1 {
            Polynomial::one()
        } else {
            Polynomial::from_y_coefficients(&last).primitive_part_y()
        };
        g.times_uni_x(&content).normalized()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::one(), |acc, p| &acc * &p)
    }
}

/// Terms by increasing total degree, higher powers of `y` first; rational
/// coefficients are printed as `p/q*` so the output parses back.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by_key(|&&(a, b)| (a + b, std::cmp::Reverse(b)));
        for (idx, key) in keys.into_iter().enumerate() {
            let c = &self.terms[key];
            let (a, b) = *key;
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mag = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || (a == 0 && b == 0) {
                parts.push(mag.to_string());
            }
            match a {
                0 => {}
                1 => parts.push("x".into()),
                _ => parts.push(format!("x^{a}")),
            }
            match b {
                0 => {}
                1 => parts.push("y".into()),
                _ => parts.push(format!("y^{b}")),
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, u32, u32)]) -> Polynomial {
        Polynomial::from_int_terms(terms)
    }

    #[test]
    fn arithmetic_and_display() {
        let f = p(&[(1, 0, 2), (-1, 3, 0)]);
        assert_eq!(f.to_string(), "y^2 - x^3");
        let g = &f * &p(&[(1, 0, 1), (-1, 1, 0)]);
        assert_eq!(g.to_string(), "y^3 - x*y^2 - x^3*y + x^4");
        assert_eq!(p(&[(1, 1, 0), (1, 0, 1)]).pow(2).to_string(), "y^2 + 2*x*y + x^2");
    }

    #[test]
    fn derivatives() {
        let f = p(&[(1, 0, 2), (-1, 3, 0)]);
        assert_eq!(f.derivative_x(), p(&[(-3, 2, 0)]));
        assert_eq!(f.derivative_y(), p(&[(2, 0, 1)]));
    }

    #[test]
    fn substitution_and_restrictions() {
        let f = p(&[(1, 1, 1)]);
        // (x + y) * y
        assert_eq!(f.linear_substitution(1, 1, 0, 1), p(&[(1, 1, 1), (1, 0, 2)]));
        let g = p(&[(1, 0, 2), (-1, 3, 0), (5, 1, 1)]);
        assert_eq!(g.at_x_zero(), UniPoly::from_ints(&[0, 0, 1]));
        assert_eq!(g.at_y_zero(), UniPoly::from_ints(&[0, 0, 0, -1]));
    }

    #[test]
    fn exact_division_and_gcd() {
        let a = p(&[(1, 0, 1), (-1, 1, 0)]); // y - x
        let b = p(&[(1, 0, 2), (-1, 3, 0)]); // y^2 - x^3
        let c = p(&[(1, 0, 1), (1, 2, 0), (1, 0, 0)]); // y + x^2 + 1
        let ab = &a * &b;
        assert_eq!(ab.div_exact(&a).unwrap(), b);
        assert!(ab.div_exact(&c).is_none());
        let g = (&(&a * &a) * &c).gcd(&(&a * &b));
        assert_eq!(g, a.normalized());
        let g = (&ab * &c).gcd(&(&(&b * &c) * &p(&[(1, 1, 0)])));
        assert_eq!(g, (&b * &c).normalized());
        // x-only common factor
        let g = p(&[(1, 2, 1)]).gcd(&p(&[(1, 1, 0), (1, 3, 0)]));
        assert_eq!(g, p(&[(1, 1, 0)]));
        assert_eq!(p(&[(1, 0, 1)]).gcd(&p(&[(1, 1, 0)])), Polynomial::one());
    }
}
