mod common;

use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ngerm_core::classify::ngerm_check;
use ngerm_core::diagram::{elem, NewtonDiagram};
use ngerm_core::poly::{
    diagram_of, intersection_multiplicity, milnor_linear_algebra, milnor_resultant, model_factors, parse, resultant_y,
    Polynomial, DEFAULT_DEGREE_CAP,
};

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, rng_seed: RngSeed::Fixed(0x6e67), ..ProptestConfig::default() })]

    #[test]
    fn display_parses_back(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = common::random_polynomial(&mut rng, 6, 6, 0);
        let g = common::random_polynomial(&mut rng, 2, 2, 0).scale(&common::rat(3, 7));
        let h = &f + &g;
        prop_assert_eq!(parse(&h.to_string()).unwrap(), h);
    }

    #[test]
    fn product_property(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = common::random_polynomial(&mut rng, 6, 5, 1);
        let g = common::random_polynomial(&mut rng, 6, 5, 1);
        let fg = &f * &g;
        prop_assert_eq!(diagram_of(&fg).unwrap(), diagram_of(&f).unwrap().sum(&diagram_of(&g).unwrap()));
    }

    #[test]
    fn resultant_is_multiplicative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = common::random_polynomial(&mut rng, 4, 4, 0);
        let g = common::random_polynomial(&mut rng, 3, 3, 0);
        let h = common::random_polynomial(&mut rng, 3, 3, 0);
        let lhs = resultant_y(&f, &(&g * &h));
        let rhs = &resultant_y(&f, &g) * &resultant_y(&f, &h);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gcd_divides_both_and_keeps_common_factors(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = common::random_polynomial(&mut rng, 4, 4, 0);
        let g = common::random_polynomial(&mut rng, 4, 4, 0);
        let h = common::random_polynomial(&mut rng, 3, 3, 0);
        let (fh, gh) = (&f * &h, &g * &h);
        let d = fh.gcd(&gh);
        prop_assert!(fh.div_exact(&d).is_some());
        prop_assert!(gh.div_exact(&d).is_some());
        prop_assert!(d.div_exact(&h).is_some());
    }

    #[test]
    fn intersection_is_additive_on_realized_branches(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g, factors) = common::realizable_germ(&mut rng, 3, 4);
        prop_assume!(factors.len() == 3);
        let prod = &factors[1] * &factors[2];
        prop_assert_eq!(
            intersection_multiplicity(&factors[0], &prod).unwrap(),
            g.intersection(0, 1) + g.intersection(0, 2)
        );
    }

    #[test]
    fn oracles_agree_on_realized_germs(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g, f) = loop {
            let (g, factors) = common::realizable_germ(&mut rng, 3, 4);
            let f: Polynomial = factors.into_iter().product();
            if f.total_degree().is_some_and(|d| d <= 16) {
                break (g, f);
            }
        };
        let r = milnor_resultant(&f).unwrap();
        let l = milnor_linear_algebra(&f, DEFAULT_DEGREE_CAP).unwrap();
        prop_assert_eq!(r, l);
        if let Ok(mu) = g.milnor() {
            prop_assert_eq!(r, mu);
        }
    }

    #[test]
    fn model_factors_have_elementary_diagrams(seed in any::<u64>(), model_seed in 0u64..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g, w) = common::random_ngerm(&mut rng, 5, 10);
        prop_assert!(ngerm_check(&g).verdict);
        for f in model_factors(&g, &w, model_seed).unwrap() {
            let along_x = f.at_y_zero().order().map(|k| k as u64);
            let along_y = f.at_x_zero().order().unwrap() as u64;
            let expected: NewtonDiagram = match along_x {
                Some(a) => elem(a, along_y).unwrap().into(),
                None => elem(ngerm_core::ExtNat::Inf, along_y).unwrap().into(),
            };
            prop_assert_eq!(diagram_of(&f).unwrap(), expected);
        }
    }
}

#[test]
fn curated_diagrams() {
    let d = diagram_of(&parse("(y^2 - x^3)*(y - x)").unwrap()).unwrap();
    assert_eq!(d.vertices(), vec![(0, 3), (1, 2), (4, 0)]);
}
