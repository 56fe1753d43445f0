use covera_core::bounds::{cb_value, db_value, thm_1_1, thm_1_2, BoundValue, ParamSet, Side};
use covera_core::designs::{bookkeeping, bose_lower, classify, excess_or_leave, gram, Design};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn params() -> impl Strategy<Value = ParamSet> {
    (4i64..=400, 1i64..=5).prop_flat_map(|(v, l)| (Just(v), 3i64..v, Just(l)))
        .prop_map(|(v, k, l)| ParamSet::new(v, k, l).unwrap())
}

proptest! {
    #[test]
    fn cb_at_one_zero_is_the_neat_bound(p in params()) {
        if let Some(t) = thm_1_1(&p) {
            let cb = cb_value(&p, &BoundValue::one(), &BoundValue::zero()).unwrap();
            prop_assert_eq!(cb.ceil(), BigInt::from(t.rounded));
        }
        if let Some(t) = thm_1_2(&p) {
            let db = db_value(&p, &BoundValue::one(), &BoundValue::zero()).unwrap();
            prop_assert_eq!(db.floor(), BigInt::from(t.rounded));
        }
    }

    #[test]
    fn cb_nondecreasing_in_beta(p in params(), alpha_num in 1i64..=24) {
        let alpha = BoundValue::ratio(alpha_num, 24);
        let (r, _, _) = p.rdn(Side::Cover);
        prop_assume!(p.k() * alpha_num > r * 24);
        let mut prev: Option<BoundValue> = None;
        for step in 0..=alpha_num {
            let beta = BoundValue::ratio(step, 24);
            let x = cb_value(&p, &alpha, &beta).unwrap();
            if let Some(prev) = &prev {
                prop_assert!(prev <= &x, "CB decreased at beta = {}", beta);
            }
            prev = Some(x);
        }
    }
}

fn random_design(seed: u64) -> Design {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = rng.gen_range(4..=10usize);
    let k = rng.gen_range(3..v);
    let lambda = rng.gen_range(1..=2u64);
    let points: Vec<usize> = (0..v).collect();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut counts = vec![vec![0u64; v]; v];
    let covering = rng.gen_bool(0.5);
    for _ in 0..200 {
        let cand: Vec<usize> = points.choose_multiple(&mut rng, k).copied().collect();
        let pairs = || cand.iter().flat_map(|&x| cand.iter().filter(move |&&y| y > x).map(move |&y| (x, y)));
        let fits = pairs().all(|(x, y)| counts[x.min(y)][x.max(y)] < lambda);
        let useful = pairs().any(|(x, y)| counts[x.min(y)][x.max(y)] < lambda);
        if (covering && useful) || (!covering && fits) {
            for (x, y) in pairs() {
                counts[x.min(y)][x.max(y)] += 1;
            }
            blocks.push(cand);
        }
    }
    Design::new(v, k, lambda, blocks).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn fuzzed_designs_respect_rank_and_bookkeeping(seed in any::<u64>()) {
        let d = random_design(seed);
        let c = classify(&d);
        prop_assert!(c.is_covering() || c.is_packing());
        prop_assert!(d.len() >= bose_lower(&d).unwrap());

        let x = d.incidence();
        let m = gram(&d).unwrap();
        for u in 0..d.v() {
            for w in 0..d.v() {
                let dot: u64 = (0..d.len()).map(|j| u64::from(x[u][j] * x[w][j])).sum();
                prop_assert_eq!(m.get(u, w), &num_rational::BigRational::from_integer(dot.into()));
            }
        }

        let book = bookkeeping(&d).unwrap();
        let g = excess_or_leave(&d).unwrap();
        let degree_sum: u64 = g.degrees().iter().sum();
        let (v, k) = (d.v() as i64, d.k() as i64);
        prop_assert_eq!(degree_sum as i64, book.d * v + book.a * (k - 1));
    }
}
