//! Random inputs shared by the integration suites.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use ngerm_core::classify::{Decomposition, Group};
use ngerm_core::germ::{Branch, CharPair, GermData};
use ngerm_core::poly::{intersection_multiplicity, puiseux_branch, Polynomial, PuiseuxTerm};
use ngerm_core::ExtRat;

pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Characteristic pairs of the expansion `y = Σ c·x^e` (exponents ≥ 1).
pub fn pairs_of(terms: &[PuiseuxTerm]) -> (Vec<CharPair>, u64) {
    let mut n = 1u64;
    let mut pairs = Vec::new();
    for t in terms {
        let q = t.exponent.denom().to_u64().unwrap();
        if !n.is_multiple_of(q) {
            let next = n.lcm(&q);
            let b = (&t.exponent * BigRational::from_integer(BigInt::from(next)))
                .to_integer()
                .to_u64()
                .unwrap();
            pairs.push(CharPair::new(next / n, b).unwrap());
            n = next;
        }
    }
    (pairs, n)
}

/// A germ realized by random Puiseux expansions; the intersection matrix is
/// read off the branch equations with resultants, so the data is always
/// realizable.
pub fn realizable_germ(rng: &mut ChaCha8Rng, max_branches: usize, max_mult: u64) -> (GermData, Vec<Polynomial>) {
    'retry: loop {
        let r = rng.gen_range(1..=max_branches);
        let mut series: Vec<Vec<PuiseuxTerm>> = Vec::new();
        for _ in 0..r {
            let mut s: Vec<PuiseuxTerm> = match series.choose(rng) {
                Some(parent) if rng.gen_bool(0.6) => {
                    let keep = rng.gen_range(0..=parent.len());
                    parent[..keep].to_vec()
                }
                _ => Vec::new(),
            };
            let extra = rng.gen_range(1..=3);
            for _ in 0..extra {
                let lo = s.last().map_or(rat(1, 1), |t| t.exponent.clone());
                let q = *[1i64, 1, 2, 2, 3, 4].choose(rng).unwrap();
                let candidates: Vec<BigRational> = (1..=5 * q)
                    .map(|p| rat(p, q))
                    .filter(|e| if s.is_empty() { *e >= lo } else { *e > lo })
                    .collect();
                let Some(e) = candidates.choose(rng).cloned() else {
                    break;
                };
                let mut c = rng.gen_range(-3..=2);
                if c >= 0 {
                    c += 1;
                }
                s.push(PuiseuxTerm {
                    exponent: e,
                    coefficient: rat(c, 1),
                });
            }
            let (_, n) = pairs_of(&s);
            if n > max_mult {
                continue 'retry;
            }
            series.push(s);
        }
        let mut branches = Vec::new();
        let mut factors = Vec::new();
        for s in &series {
            let (pairs, n) = pairs_of(s);
            branches.push(Branch::new(pairs).unwrap());
            factors.push(puiseux_branch(s, n).unwrap());
        }
        let mut entries = Vec::new();
        for i in 0..r {
            for j in i + 1..r {
                match intersection_multiplicity(&factors[i], &factors[j]) {
                    Ok(v) => entries.push((i, j, v)),
                    Err(_) => continue 'retry,
                }
            }
        }
        let g = GermData::from_pairs(branches, &entries).unwrap();
        assert!(g.validate().is_ok(), "realized data must validate: {}", g.to_json());
        return (g, factors);
    }
}

/// Valid (not necessarily realizable) germ data built from a random
/// ultrametric on contact orders.
pub fn synthetic_germ(rng: &mut ChaCha8Rng, max_branches: usize) -> GermData {
    let contacts = [
        rat(1, 1),
        rat(3, 2),
        rat(2, 1),
        rat(5, 2),
        rat(3, 1),
        rat(7, 2),
        rat(4, 1),
    ];
    loop {
        let r = rng.gen_range(1..=max_branches);
        let branches: Vec<Branch> = (0..r)
            .map(|_| match rng.gen_range(0..10) {
                0..=4 => Branch::smooth(),
                5..=6 => Branch::with_pair(2, 3).unwrap(),
                7 => Branch::with_pair(2, 5).unwrap(),
                8 => Branch::with_pair(3, 4).unwrap(),
                _ => Branch::new(vec![CharPair::new(2, 3).unwrap(), CharPair::new(2, 7).unwrap()]).unwrap(),
            })
            .collect();
        let mut d = vec![vec![BigRational::zero(); r]; r];
        split(rng, &(0..r).collect::<Vec<_>>(), 0, &contacts, &mut d);
        let mut entries = Vec::new();
        let mut ok = true;
        for i in 0..r {
            for j in i + 1..r {
                let v = &d[i][j]
                    * BigRational::from_integer(BigInt::from(branches[i].multiplicity() * branches[j].multiplicity()));
                if !v.is_integer() {
                    ok = false;
                }
                entries.push((i, j, v.to_integer().to_u64().unwrap()));
            }
        }
        if !ok {
            continue;
        }
        let g = GermData::from_pairs(branches, &entries).unwrap();
        if g.validate().is_ok() {
            return g;
        }
    }
}

/// Splits `set` into random parts meeting at one contact level, then
/// recurses into the parts with strictly higher levels.
fn split(rng: &mut ChaCha8Rng, set: &[usize], min_level: usize, contacts: &[BigRational], d: &mut [Vec<BigRational>]) {
    if set.len() < 2 {
        return;
    }
    let level = rng.gen_range(min_level..contacts.len());
    let parts: Vec<Vec<usize>> = if level + 1 == contacts.len() {
        set.iter().map(|&i| vec![i]).collect()
    } else {
        let k = rng.gen_range(2..=set.len());
        let mut parts = vec![Vec::new(); k];
        let mut shuffled = set.to_vec();
        shuffled.shuffle(rng);
        for (idx, i) in shuffled.into_iter().enumerate() {
            let slot = if idx < k { idx } else { rng.gen_range(0..k) };
            parts[slot].push(i);
        }
        parts
    };
    for a in 0..parts.len() {
        for b in a + 1..parts.len() {
            for &i in &parts[a] {
                for &j in &parts[b] {
                    d[i][j] = contacts[level].clone();
                    d[j][i] = contacts[level].clone();
                }
            }
        }
    }
    for part in &parts {
        split(rng, part, level + 1, contacts, d);
    }
}

/// A random N-germ together with the witness it was built from.
///
/// Exponents have numerators and denominators at most 9; the total
/// multiplicity is kept at most `max_mult`.
pub fn random_ngerm(rng: &mut ChaCha8Rng, max_branches: usize, max_mult: u64) -> (GermData, Decomposition) {
    loop {
        let s = rng.gen_range(1..=max_branches.min(4));
        let mut exps: Vec<ExtRat> = Vec::new();
        while exps.len() < s {
            let e = if rng.gen_bool(0.1) {
                ExtRat::Inf
            } else {
                let q = rng.gen_range(1..=9i64);
                let p = rng.gen_range(q..=9i64);
                ExtRat::Fin(rat(p, q))
            };
            if !exps.contains(&e) {
                exps.push(e);
            }
        }
        exps.sort();
        if exps.iter().filter(|e| e.is_infinite()).count() > 1 {
            continue;
        }
        let mut branches = Vec::new();
        let mut groups = Vec::new();
        for e in &exps {
            let k = if e.is_infinite() { 1 } else { rng.gen_range(1..=2) };
            let ids: Vec<usize> = (branches.len()..branches.len() + k).collect();
            for _ in 0..k {
                branches.push(match e {
                    ExtRat::Fin(r) if !r.is_integer() => {
                        Branch::with_pair(r.denom().to_u64().unwrap(), r.numer().to_u64().unwrap()).unwrap()
                    }
                    _ => Branch::smooth(),
                });
            }
            groups.push(Group {
                branches: ids,
                exponent: e.clone(),
            });
        }
        let total: u64 = branches.iter().map(Branch::multiplicity).sum();
        if branches.len() > max_branches || total > max_mult {
            continue;
        }
        let label: Vec<usize> = Decomposition { groups: groups.clone() }.labels(branches.len());
        let mut entries = Vec::new();
        for i in 0..branches.len() {
            for j in i + 1..branches.len() {
                let e = exps[label[i]].clone().min(exps[label[j]].clone());
                let m =
                    BigRational::from_integer(BigInt::from(branches[i].multiplicity() * branches[j].multiplicity()));
                let v = e.finite().expect("one infinite group at most") * m;
                entries.push((i, j, v.to_integer().to_u64().unwrap()));
            }
        }
        let g = GermData::from_pairs(branches, &entries).unwrap();
        assert!(g.validate().is_ok());
        return (g, Decomposition { groups });
    }
}

/// A random polynomial vanishing at the origin with support of total
/// degree at most `max_degree` and integer coefficients in `[-9, 9]`.
pub fn random_polynomial(rng: &mut ChaCha8Rng, max_degree: u32, terms: usize, min_order: u32) -> Polynomial {
    let mut p = Polynomial::zero();
    while p.is_zero() {
        for _ in 0..terms {
            let d = rng.gen_range(min_order..=max_degree);
            let a = rng.gen_range(0..=d);
            let c = rng.gen_range(-9..=9i64);
            p.add_term((a, d - a), rat(c, 1));
        }
    }
    p
}
