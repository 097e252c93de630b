//! Polynomial representatives for arbitrary germ data, built from Puiseux
//! expansions.
//!
//! Branches are arranged in the tree of their pairwise contacts. At every
//! node the branches below share their expansion up to a coincidence
//! exponent `ρ` and then split, each child taking a distinct coefficient at
//! `x^ρ`. The exponent `ρ` is recovered from the contact order through
//!
//! ```text
//! d(ρ) = Σ_{e_k < ρ} (e_k − e_{k−1}) / N_{k−1} + (ρ − e_q) / N_q
//! ```
//!
//! where `e_1 < e_2 < …` are the characteristic exponents, `N_k` the product
//! of the first `k` pair denominators and `e_q` the last exponent below `ρ`.
//! The resulting equations are checked against the intersection matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::resultant::intersection_multiplicity;
use super::univariate::UniPoly;
use super::{PolyError, Polynomial};
use crate::germ::{Branch, GermData};
use crate::rational::ExtRat;

/// A term `c·x^e` of a Puiseux expansion `y = Σ c·x^e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuiseuxTerm {
    pub exponent: BigRational,
    pub coefficient: BigRational,
}

fn int(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Characteristic exponents with the running denominators `N_k`.
fn characteristic(b: &Branch) -> Vec<(BigRational, u64)> {
    let mut n = 1u64;
    b.pairs()
        .iter()
        .map(|p| {
            n *= p.a();
            (BigRational::new(BigInt::from(p.b()), BigInt::from(n)), n)
        })
        .collect()
}

/// Denominator lattice `N_q` in force just below `rho`.
fn lattice_below(chars: &[(BigRational, u64)], rho: &BigRational) -> u64 {
    chars.iter().take_while(|(e, _)| e < rho).last().map_or(1, |&(_, n)| n)
}

/// Inverse of the contact function `d(ρ)` of a branch.
fn coincidence_exponent(chars: &[(BigRational, u64)], d: &BigRational) -> BigRational {
    let mut prev_e = BigRational::zero();
    let mut prev_n = 1u64;
    let mut acc = BigRational::zero();
    for (e, n) in chars {
        let next = &acc + (e - &prev_e) / int(prev_n);
        if d <= &next {
            break;
        }
        acc = next;
        prev_e = e.clone();
        prev_n = *n;
    }
    prev_e + (d - acc) * int(prev_n)
}

struct Builder<'a> {
    g: &'a GermData,
    chars: Vec<Vec<(BigRational, u64)>>,
    series: Vec<Vec<PuiseuxTerm>>,
    rng: Option<ChaCha8Rng>,
}

impl Builder<'_> {
    fn distinct_nonzero(&mut self, k: usize) -> Vec<BigRational> {
        match &mut self.rng {
            None => (1..=k as u64).map(int).collect(),
            Some(rng) => {
                let mut out: Vec<BigRational> = Vec::with_capacity(k);
                while out.len() < k {
                    let mut p: i64 = rng.gen_range(-9..=8);
                    if p >= 0 {
                        p += 1;
                    }
                    let c = BigRational::from_integer(BigInt::from(p));
                    if !out.contains(&c) {
                        out.push(c);
                    }
                }
                out
            }
        }
    }

    fn push_chars(&mut self, set: &[usize], lo: &Option<BigRational>, hi: Option<&BigRational>) {
        for &i in set {
            let terms: Vec<PuiseuxTerm> = self.chars[i]
                .iter()
                .filter(|(e, _)| lo.as_ref().is_none_or(|l| e > l) && hi.is_none_or(|h| e < h))
                .map(|(e, _)| PuiseuxTerm {
                    exponent: e.clone(),
                    coefficient: BigRational::one(),
                })
                .collect();
            self.series[i].extend(terms);
        }
    }

    fn build(&mut self, set: Vec<usize>, lo: Option<BigRational>) -> Result<(), PolyError> {
        if set.len() == 1 {
            self.push_chars(&set, &lo, None);
            return Ok(());
        }
        let d0 = set
            .iter()
            .flat_map(|&i| set.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
            .map(|(i, j)| self.g.contact(i, j))
            .min()
            .expect("at least two branches");
        let ExtRat::Fin(d0) = d0 else {
            return Err(PolyError::Unrealizable("infinite contact".into()));
        };
        let rho = coincidence_exponent(&self.chars[set[0]], &d0);
        for &i in &set[1..] {
            if coincidence_exponent(&self.chars[i], &d0) != rho {
                return Err(PolyError::Unrealizable(format!(
                    "branches {} and {i} cannot share an expansion up to contact {d0}",
                    set[0]
                )));
            }
        }
        if lo.as_ref().is_some_and(|l| &rho <= l) {
            return Err(PolyError::Unrealizable(format!(
                "contact {d0} is not compatible with the outer contacts"
            )));
        }
        let below = |c: &[(BigRational, u64)]| -> Vec<(BigRational, u64)> {
            c.iter().filter(|(e, _)| e < &rho).cloned().collect()
        };
        let shared = below(&self.chars[set[0]]);
        if set.iter().any(|&i| below(&self.chars[i]) != shared) {
            return Err(PolyError::Unrealizable(format!(
                "branches in contact {d0} have different characteristic exponents below {rho}"
            )));
        }
        self.push_chars(&set, &lo, Some(&rho));
        let lattice = lattice_below(&shared, &rho);
        let on_lattice = (&rho * int(lattice)).is_integer();

        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &i in &set {
            match classes.iter_mut().find(|c| {
                matches!(self.g.contact(c[0], i), ExtRat::Fin(ref v) if v > &d0)
                    || self.g.contact(c[0], i).is_infinite()
            }) {
                Some(c) => c.push(i),
                None => classes.push(vec![i]),
            }
        }
        let mut forced_zero = None;
        for (k, class) in classes.iter().enumerate() {
            let is_char: Vec<bool> = class
                .iter()
                .map(|&i| self.chars[i].iter().any(|(e, _)| e == &rho))
                .collect();
            if is_char.iter().any(|&c| c != is_char[0]) {
                return Err(PolyError::Unrealizable(format!(
                    "branches {class:?} split at {rho} but disagree on its characteristic role"
                )));
            }
            if !is_char[0] && !on_lattice {
                if forced_zero.is_some() {
                    return Err(PolyError::Unrealizable(format!(
                        "more than one group of branches must vanish at exponent {rho}"
                    )));
                }
                forced_zero = Some(k);
            }
        }
        let mut coeffs = self.distinct_nonzero(classes.len()).into_iter();
        for (k, class) in classes.into_iter().enumerate() {
            let c = if forced_zero == Some(k) {
                BigRational::zero()
            } else {
                coeffs.next().expect("enough")
            };
            if !c.is_zero() {
                for &i in &class {
                    self.series[i].push(PuiseuxTerm {
                        exponent: rho.clone(),
                        coefficient: c.clone(),
                    });
                }
            }
            self.build(class, Some(rho.clone()))?;
        }
        Ok(())
    }
}

/// Puiseux expansions of all branches of `g`, one list of terms per branch.
pub fn puiseux_branch_expansions(g: &GermData, seed: u64) -> Result<Vec<Vec<PuiseuxTerm>>, PolyError> {
    if let Err(diags) = g.validate() {
        let text: Vec<String> = diags.iter().map(ToString::to_string).collect();
        return Err(PolyError::InvalidGerm(text.join("; ")));
    }
    let mut b = Builder {
        g,
        chars: g.branches().iter().map(characteristic).collect(),
        series: vec![Vec::new(); g.branch_count()],
        rng: (seed != 0).then(|| ChaCha8Rng::seed_from_u64(seed)),
    };
    b.build((0..g.branch_count()).collect(), None)?;
    Ok(b.series)
}

/// Characteristic polynomial `det(y·I − A)` of a square matrix over `Q[x]`,
/// by the Faddeev–LeVerrier recursion.
pub fn characteristic_polynomial(a: &[Vec<UniPoly>]) -> Polynomial {
    let n = a.len();
    let mul = |p: &[Vec<UniPoly>], q: &[Vec<UniPoly>]| -> Vec<Vec<UniPoly>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(UniPoly::zero(), |acc, k| &acc + &(&p[i][k] * &q[k][j])))
                    .collect()
            })
            .collect()
    };
    let mut coeffs = vec![UniPoly::zero(); n + 1];
    coeffs[n] = UniPoly::one();
    let mut m: Vec<Vec<UniPoly>> = vec![vec![UniPoly::zero(); n]; n];
    for k in 1..=n {
        let mut next = mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = &row[i] + &coeffs[n - k + 1];
        }
        m = next;
        let am = mul(a, &m);
        let trace = (0..n).fold(UniPoly::zero(), |acc, i| &acc + &am[i][i]);
        coeffs[n - k] = trace.scale(&-BigRational::new(BigInt::one(), BigInt::from(k)));
    }
    Polynomial::from_y_coefficients(&coeffs)
}

/// Equation of the branch `x = t^n, y = Σ c·t^(n·e)`.
pub fn puiseux_branch(terms: &[PuiseuxTerm], n: u64) -> Result<Polynomial, PolyError> {
    let n_us = n as usize;
    let mut phi: Vec<(usize, BigRational)> = Vec::with_capacity(terms.len());
    for t in terms {
        let k = &t.exponent * int(n);
        if !k.is_integer() {
            return Err(PolyError::Unrealizable(format!(
                "exponent {} needs a denominator beyond {n}",
                t.exponent
            )));
        }
        phi.push((
            k.to_integer().to_usize().expect("small exponent"),
            t.coefficient.clone(),
        ));
    }
    if n == 1 {
        let mut p = Polynomial::y();
        for (k, c) in phi {
            p.add_term((k as u32, 0), -c);
        }
        return Ok(p);
    }
    // Multiplication by φ(t) on Q[x][t]/(t^n − x) in the basis 1, t, …, t^(n−1).
    let mut a = vec![vec![UniPoly::zero(); n_us]; n_us];
    for j in 0..n_us {
        for (k, c) in &phi {
            let (q, r) = (k + j).div_rem(&n_us);
            a[r][j] = &a[r][j] + &UniPoly::monomial(c.clone(), q);
        }
    }
    Ok(characteristic_polynomial(&a))
}

/// Factors, one per branch, realizing the branch types and intersection
/// numbers of `g`.
pub fn realize(g: &GermData, seed: u64) -> Result<Vec<Polynomial>, PolyError> {
    let series = puiseux_branch_expansions(g, seed)?;
    let factors: Vec<Polynomial> = series
        .iter()
        .zip(g.branches())
        .map(|(s, b)| puiseux_branch(s, b.multiplicity()))
        .collect::<Result<_, _>>()?;
    for i in 0..factors.len() {
        for j in i + 1..factors.len() {
            let found = intersection_multiplicity(&factors[i], &factors[j])?;
            if found != g.intersection(i, j) {
                return Err(PolyError::Unrealizable(format!(
                    "branches {i} and {j} meet with multiplicity {found}, expected {}",
                    g.intersection(i, j)
                )));
            }
        }
    }
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::germ::CharPair;
    use crate::poly::{milnor_resultant, parse};

    fn cusp() -> Branch {
        Branch::with_pair(2, 3).unwrap()
    }

    #[test]
    fn single_branches() {
        let f = realize(&GermData::single(cusp()), 0).unwrap();
        assert_eq!(f[0], parse("y^2 - x^3").unwrap());
        let two = Branch::new(vec![CharPair::new(2, 3).unwrap(), CharPair::new(2, 7).unwrap()]).unwrap();
        let f = realize(&GermData::single(two), 0).unwrap();
        // Semigroup <4, 6, 13> has conductor 16.
        assert_eq!(milnor_resultant(&f[0]).unwrap(), 16);
    }

    #[test]
    fn cusps_with_high_contact() {
        let g = GermData::from_pairs(vec![cusp(), cusp()], &[(0, 1, 8)]).unwrap();
        let f = realize(&g, 0).unwrap();
        let whole = &f[0] * &f[1];
        assert_eq!(milnor_resultant(&whole).unwrap(), g.milnor().unwrap());
        let g7 = GermData::from_pairs(vec![cusp(), cusp()], &[(0, 1, 7)]).unwrap();
        assert!(realize(&g7, 3).is_ok());
    }

    #[test]
    fn mixed_tree() {
        let g = GermData::from_pairs(
            vec![cusp(), cusp(), Branch::smooth(), Branch::smooth()],
            &[(0, 1, 6), (0, 2, 3), (1, 2, 3), (0, 3, 2), (1, 3, 2), (2, 3, 1)],
        )
        .unwrap();
        let f = realize(&g, 0).unwrap();
        let whole: Polynomial = f.into_iter().product();
        assert_eq!(milnor_resultant(&whole).unwrap(), g.milnor().unwrap());
    }

    #[test]
    fn faddeev_leverrier_matches_direct_determinant() {
        // x = t^2, y = t^3 + t^4
        let f = puiseux_branch(
            &[
                PuiseuxTerm {
                    exponent: BigRational::new(3.into(), 2.into()),
                    coefficient: BigRational::one(),
                },
                PuiseuxTerm {
                    exponent: BigRational::from_integer(2.into()),
                    coefficient: BigRational::one(),
                },
            ],
            2,
        )
        .unwrap();
        assert_eq!(f, parse("(y - x^2)^2 - x^3").unwrap());
    }
}
