//! Two independent computations of the Milnor number at the origin.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::resultant::{resultant_validity, resultant_y, ResultantValidity};
use super::{PolyError, Polynomial};

/// Default largest truncation degree for [`milnor_linear_algebra`].
pub const DEFAULT_DEGREE_CAP: u32 = 60;

/// Number of coordinate changes tried by [`milnor_resultant`].
pub const MAX_DRAWS: usize = 20;

/// Partials of `f` with their common factor removed.
///
/// The common factor must not vanish at the origin, otherwise the critical
/// locus through the origin is a curve.
fn reduced_partials(f: &Polynomial) -> Result<(Polynomial, Polynomial), PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if !f.constant_term().is_zero() {
        return Err(PolyError::Unit);
    }
    let (fx, fy) = (f.derivative_x(), f.derivative_y());
    let g = fx.gcd(&fy);
    if g.constant_term().is_zero() {
        return Err(PolyError::NonIsolated);
    }
    let p = fx.div_exact(&g).expect("gcd divides");
    let q = fy.div_exact(&g).expect("gcd divides");
    Ok((p, q))
}

/// An integer matrix of determinant ±1; draw 0 is the identity.
pub fn coordinate_change(rng: &mut ChaCha8Rng, draw: usize) -> [i64; 4] {
    if draw == 0 {
        return [1, 0, 0, 1];
    }
    loop {
        let m: [i64; 4] = std::array::from_fn(|_| rng.gen_range(-3..=3));
        if (m[0] * m[3] - m[1] * m[2]).abs() == 1 {
            return m;
        }
    }
}

/// `μ = ord_x Res_y(f_x, f_y)`, in the first coordinates (identity, then
/// seeded unimodular changes) where the reading is valid.
pub fn milnor_resultant(f: &Polynomial) -> Result<u64, PolyError> {
    milnor_resultant_seeded(f, 0)
}

pub fn milnor_resultant_seeded(f: &Polynomial, seed: u64) -> Result<u64, PolyError> {
    let (p, q) = reduced_partials(f)?;
    if !p.constant_term().is_zero() || !q.constant_term().is_zero() {
        return Ok(0);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for draw in 0..MAX_DRAWS {
        let [a, b, c, d] = coordinate_change(&mut rng, draw);
        let (pl, ql) = (p.linear_substitution(a, b, c, d), q.linear_substitution(a, b, c, d));
        if resultant_validity(&pl, &ql) != ResultantValidity::Valid {
            continue;
        }
        return match resultant_y(&pl, &ql).order() {
            Some(k) => Ok(k as u64),
            None => Err(PolyError::NonIsolated),
        };
    }
    Err(PolyError::RetryBudgetExhausted { draws: MAX_DRAWS })
}

fn monomial_index(a: u32, b: u32) -> usize {
    let d = (a + b) as usize;
    d * (d + 1) / 2 + b as usize
}

/// Incremental row echelon form over `Z` with pivots at the smallest
/// column. Rows are kept primitive, which gives the same rank as over `Q`.
#[derive(Default)]
struct Echelon {
    pivots: BTreeMap<usize, BTreeMap<usize, BigInt>>,
}

fn make_primitive(row: &mut BTreeMap<usize, BigInt>) {
    let g = row.values().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_one() && !g.is_zero() {
        for v in row.values_mut() {
            *v /= &g;
        }
    }
}

impl Echelon {
    fn insert(&mut self, mut row: BTreeMap<usize, BigInt>) {
        while let Some((&c, v)) = row.iter().next() {
            let Some(piv) = self.pivots.get(&c) else {
                make_primitive(&mut row);
                self.pivots.insert(c, row);
                return;
            };
            let g = v.gcd(&piv[&c]);
            let (rs, ps) = (&piv[&c] / &g, v / &g);
            for x in row.values_mut() {
                *x *= &rs;
            }
            for (k, pv) in piv {
                let e = row.entry(*k).or_insert_with(BigInt::zero);
                *e -= &ps * pv;
                if e.is_zero() {
                    row.remove(k);
                }
            }
            make_primitive(&mut row);
        }
    }

    /// Rank of the column block `[0, k)`.
    fn rank_below(&self, k: usize) -> usize {
        self.pivots.range(..k).count()
    }
}

/// `g` scaled to integer coefficients.
fn integral(g: &Polynomial) -> Vec<((u32, u32), BigInt)> {
    let den = g.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    g.terms().map(|(&k, c)| (k, (c * &den).to_integer())).collect()
}

/// `dim Q[x,y] / (J + m^N)` for `N = 1..=m`, where `J = (f_x, f_y)`.
fn truncated_codimensions(p: &Polynomial, q: &Polynomial, m: u32) -> Vec<u64> {
    let mut ech = Echelon::default();
    let gens = [
        (p.order().unwrap_or(m), integral(p)),
        (q.order().unwrap_or(m), integral(q)),
    ];
    for (shift_deg, (ord, g)) in (0..m).flat_map(|s| gens.iter().map(move |g| (s, g))) {
        if shift_deg + ord >= m {
            continue;
        }
        for i in 0..=shift_deg {
            let j = shift_deg - i;
            let row: BTreeMap<usize, BigInt> = g
                .iter()
                .filter(|((a, b), _)| a + b + shift_deg < m)
                .map(|((a, b), c)| (monomial_index(a + i, b + j), c.clone()))
                .collect();
            if !row.is_empty() {
                ech.insert(row);
            }
        }
    }
    (1..=m)
        .map(|n| {
            let cols = n as usize * (n as usize + 1) / 2;
            (cols - ech.rank_below(cols)) as u64
        })
        .collect()
}

/// `μ` as the stable value of `dim Q[x,y] / (J + m^N)`, accepted once it
/// repeats over three consecutive `N`.
pub fn milnor_linear_algebra(f: &Polynomial, degree_cap: u32) -> Result<u64, PolyError> {
    let (p, q) = reduced_partials(f)?;
    if !p.constant_term().is_zero() || !q.constant_term().is_zero() {
        return Ok(0);
    }
    let mut m = 8.min(degree_cap);
    loop {
        let codims = truncated_codimensions(&p, &q, m);
        if let Some(w) = codims.windows(3).find(|w| w[0] == w[1] && w[1] == w[2]) {
            return Ok(w[0]);
        }
        if m >= degree_cap {
            return Err(PolyError::Inconclusive { degree_cap });
        }
        m = (m + m / 2).min(degree_cap);
    }
}
