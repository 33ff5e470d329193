mod common;

use common::*;
use hitprob_core::monomial::monomials_of_degree;
use hitprob_core::{sq, sq_monomial, Polynomial};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn squares_match_the_naive_cartan_expansion() {
    for k in 1..=3 {
        for n in 0..=8 {
            for m in monomials_of_degree(k, n).unwrap() {
                for i in 0..=n + 1 {
                    let expected = to_poly(k, n + i, &sq_mono(i, &to_exps(&m)));
                    assert_eq!(sq_monomial(i, &m).unwrap(), expected, "Sq^{i}({m})");
                }
            }
        }
    }
}

#[test]
fn instability_and_top_square() {
    for k in 1..=3 {
        for n in 0..=8 {
            for m in monomials_of_degree(k, n).unwrap() {
                let f = Polynomial::from(m);
                assert_eq!(sq(0, &f).unwrap(), f, "Sq^0({m})");
                assert_eq!(sq(n, &f).unwrap(), f.pow2(1).unwrap(), "top square of {m}");
                assert_eq!(sq(n, &f).unwrap(), f.mul(&f).unwrap());
                for i in n + 1..=n + 3 {
                    assert!(sq(i, &f).unwrap().is_zero(), "Sq^{i}({m}) should vanish");
                }
            }
        }
    }
}

/// `Sq^n(fg) = sum_{i+j=n} Sq^i(f) Sq^j(g)` in every degree, so the total
/// square is multiplicative.
#[test]
fn cartan_formula_on_random_pairs() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let k = rng.gen_range(1..=3);
        let (a, b) = (rng.gen_range(0..=6), rng.gen_range(0..=6));
        let f = random_poly(&mut rng, k, a, 5);
        let g = random_poly(&mut rng, k, b, 5);
        let fg = f.mul(&g).unwrap();
        for n in 0..=a + b {
            let mut rhs = Polynomial::zero(k, a + b + n).unwrap();
            for i in 0..=n {
                let term = sq(i, &f).unwrap().mul(&sq(n - i, &g).unwrap()).unwrap();
                rhs = sum(&rhs, &term);
            }
            assert_eq!(sq(n, &fg).unwrap(), rhs, "Sq^{n}(({f})({g}))");
        }
    }
}

fn poly_strategy() -> impl Strategy<Value = Polynomial> {
    (1usize..=4, 0u32..=7, any::<u64>()).prop_map(|(k, n, seed)| {
        let mut rng = StdRng::seed_from_u64(seed);
        random_poly(&mut rng, k, n, 6)
    })
}

fn sqs(ops: &[u32], f: &Polynomial) -> Polynomial {
    ops.iter().rev().fold(f.clone(), |acc, &i| sq(i, &acc).unwrap())
}

proptest! {
    #[test]
    fn adem_relations(f in poly_strategy()) {
        prop_assert!(sqs(&[1, 1], &f).is_zero());
        prop_assert_eq!(sqs(&[1, 2], &f), sqs(&[3], &f));
        prop_assert_eq!(sqs(&[2, 2], &f), sqs(&[3, 1], &f));
        prop_assert!(sqs(&[3, 2], &f).is_zero());
        prop_assert_eq!(sqs(&[1, 4], &f), sqs(&[5], &f));
        prop_assert_eq!(sqs(&[2, 3], &f), sum(&sqs(&[5], &f), &sqs(&[4, 1], &f)));
    }

    #[test]
    fn squares_are_linear(f in poly_strategy(), seed in any::<u64>(), i in 0u32..8) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_poly(&mut rng, f.k(), f.degree(), 6);
        let lhs = sq(i, &sum(&f, &g)).unwrap();
        prop_assert_eq!(lhs, sum(&sq(i, &f).unwrap(), &sq(i, &g).unwrap()));
    }

    #[test]
    fn squares_agree_with_the_naive_version(f in poly_strategy(), i in 0u32..10) {
        let expected = to_poly(f.k(), f.degree() + i, &sq_naive(i, &to_naive(&f)));
        prop_assert_eq!(sq(i, &f).unwrap(), expected);
    }
}
