use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tiled_core::arith::divisors;
use tiled_core::{type_number, FinAbGroup, GlobalProblem, RelationKind, TPrime};

const CHAINS: &[&[u64]] = &[&[], &[2], &[3], &[4], &[2, 2], &[2, 8], &[6], &[2, 4, 4], &[3, 9], &[12], &[2, 2, 2], &[5, 10]];

fn random_problem(rng: &mut ChaCha8Rng) -> GlobalProblem {
    let degree = *[2usize, 3, 4, 5, 6, 8, 12].get(rng.gen_range(0..7)).unwrap();
    let factors = CHAINS[rng.gen_range(0..CHAINS.len())];
    let divs = divisors(degree);
    let t_primes = (0..rng.gen_range(0..4))
        .map(|k| TPrime {
            label: format!("p{k}"),
            d: divs[rng.gen_range(0..divs.len())],
            kind: if rng.gen_bool(0.5) { RelationKind::PClass } else { RelationKind::QClass },
            vector: factors.iter().map(|&f| rng.gen_range(-(f as i64)..f as i64)).collect(),
        })
        .collect();
    GlobalProblem {
        degree,
        class_group: FinAbGroup::new(factors.to_vec()).unwrap(),
        omega: vec![],
        t_primes,
    }
}

proptest! {
    #[test]
    fn type_number_divides_bound(seed: u64) {
        let pr = random_problem(&mut ChaCha8Rng::seed_from_u64(seed));
        let r = type_number(&pr).unwrap();
        prop_assert_eq!(r.max_bound % r.type_number, 0);
        prop_assert_eq!(pr.class_group.order() % r.cl_t_hat.order(), 0);
    }

    #[test]
    fn extra_primes_never_increase(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pr = random_problem(&mut rng);
        let before = type_number(&pr).unwrap().type_number;
        let mut more = pr.clone();
        more.t_primes.push(TPrime {
            label: "extra".into(),
            d: 1,
            kind: RelationKind::QClass,
            vector: pr.class_group.invariant_factors().iter().map(|&f| rng.gen_range(0..f as i64)).collect(),
        });
        let after = type_number(&more).unwrap().type_number;
        prop_assert!(after <= before);
        prop_assert_eq!(before % after, 0);
    }

    #[test]
    fn shifting_by_nth_multiples(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pr = random_problem(&mut rng);
        let n = pr.degree as i64;
        let mut shifted = pr.clone();
        for p in &mut shifted.t_primes {
            for x in &mut p.vector {
                *x += n * rng.gen_range(-3..=3);
            }
        }
        prop_assert_eq!(type_number(&pr).unwrap().type_number, type_number(&shifted).unwrap().type_number);
    }

    #[test]
    fn nth_multiple_relations_are_inert(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pr = random_problem(&mut rng);
        let n = pr.degree as i64;
        let mut more = pr.clone();
        more.t_primes.push(TPrime {
            label: "inert".into(),
            d: 1,
            kind: RelationKind::QClass,
            vector: pr.class_group.invariant_factors().iter().map(|_| n * rng.gen_range(-4..=4)).collect(),
        });
        more.t_primes.push(TPrime {
            label: "full".into(),
            d: pr.degree,
            kind: RelationKind::PClass,
            vector: pr.class_group.invariant_factors().iter().map(|&f| rng.gen_range(0..f as i64)).collect(),
        });
        let (r, base) = (type_number(&more).unwrap(), type_number(&pr).unwrap());
        prop_assert_eq!(r.type_number, base.type_number);
        let mut expected = base.skipped;
        expected.push("full".to_string());
        prop_assert_eq!(r.skipped, expected);
    }
}
