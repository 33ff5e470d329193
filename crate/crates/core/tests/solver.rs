mod common;

use std::collections::{BTreeSet, HashMap};

use common::*;
use hitprob_core::solver::admissible_basis_from_generators;
use hitprob_core::weights::{is_spike, spikes_of_degree, weight_vectors_of_degree};
use hitprob_core::{
    admissible_basis, admissible_basis_with, hit_generators, mu, singer_filter, weight_quotient, weight_vector,
    GeneratorSet, Monomial, QuotientBasis, SolverOptions,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

const NO_PREFILTER: SolverOptions = SolverOptions {
    singer_prefilter: false,
    generators: GeneratorSet::PowersOfTwo,
};

fn exps_set(q: &QuotientBasis) -> BTreeSet<Exps> {
    q.admissible().iter().map(to_exps).collect()
}

#[test]
fn matches_the_brute_force_oracle() {
    for k in 1..=2 {
        for n in 0..=10 {
            assert_eq!(exps_set(&admissible_basis(k, n).unwrap()), oracle(k, n), "k={k} n={n}");
        }
    }
    for n in 0..=8 {
        assert_eq!(exps_set(&admissible_basis(3, n).unwrap()), oracle(3, n), "k=3 n={n}");
    }
}

#[test]
fn basis_does_not_depend_on_the_generators() {
    let mut rng = StdRng::seed_from_u64(11);
    for (k, n) in [(3, 7), (3, 10), (4, 9), (4, 10), (5, 9)] {
        let reference = admissible_basis(k, n).unwrap();
        let mut gens = hit_generators(k, n, GeneratorSet::PowersOfTwo).unwrap();
        gens.shuffle(&mut rng);
        let shuffled = admissible_basis_from_generators(k, n, &gens, &SolverOptions::default()).unwrap();
        assert_eq!(shuffled.admissible(), reference.admissible(), "shuffled k={k} n={n}");
        assert_eq!(shuffled.hit(), reference.hit());
        let all = SolverOptions {
            generators: GeneratorSet::AllSquares,
            ..SolverOptions::default()
        };
        let redundant = admissible_basis_with(k, n, &all).unwrap();
        assert_eq!(
            redundant.admissible(),
            reference.admissible(),
            "all squares k={k} n={n}"
        );
        let uncut = admissible_basis_with(k, n, &NO_PREFILTER).unwrap();
        assert_eq!(uncut.admissible(), reference.admissible(), "no prefilter k={k} n={n}");
    }
}

#[test]
fn spikes_are_never_hit() {
    for k in 1..=5 {
        for n in 0..=23 {
            let spikes = spikes_of_degree(k, n).unwrap();
            if spikes.is_empty() {
                continue;
            }
            let q = admissible_basis(k, n).unwrap();
            for z in &spikes {
                assert!(is_spike(z));
                assert!(q.is_admissible(z), "{z} is a spike but not admissible");
                assert!(!q.is_hit(&(*z).into()).unwrap(), "{z} is a spike but hit");
            }
        }
    }
}

#[test]
fn singer_filtered_monomials_are_hit() {
    for n in [9, 10, 23] {
        let q = admissible_basis_with(5, n, &NO_PREFILTER).unwrap();
        assert_eq!(q.active(), q.columns().len());
        let mut filtered = 0;
        for &m in q.columns().columns() {
            if singer_filter(&m).unwrap() {
                filtered += 1;
                assert!(q.is_hit(&m.into()).unwrap(), "{m} passes the filter but is not hit");
            }
        }
        assert!(filtered > 0);
        assert_eq!(q.admissible(), admissible_basis(5, n).unwrap().admissible());
    }
}

#[test]
fn wood_vanishing() {
    for k in 1..=3 {
        for n in 1..=20 {
            if mu(n as u64).unwrap() as usize > k {
                let q = admissible_basis_with(k, n, &NO_PREFILTER).unwrap();
                assert_eq!(q.dim(), 0, "k={k} n={n}");
            }
        }
    }
}

#[test]
fn weight_blocks_add_up() {
    for (k, n, dim) in [
        (4, 9, 46),
        (4, 10, 70),
        (4, 23, 155),
        (5, 9, 191),
        (5, 10, 280),
        (5, 23, 1245),
    ] {
        let full = admissible_basis(k, n).unwrap();
        assert_eq!(full.dim(), dim);
        let mut union = Vec::new();
        for w in weight_vectors_of_degree(k, n) {
            let block = weight_quotient(k, &w).unwrap();
            assert!(block.admissible().iter().all(|m| weight_vector(m) == w));
            if n <= 10 {
                let part = full.weight_part(&w).unwrap();
                assert_eq!(part.admissible(), block.admissible(), "k={k} w={w}");
            }
            union.extend_from_slice(block.admissible());
        }
        union.sort_unstable();
        let mut expected = full.admissible().to_vec();
        expected.sort_unstable();
        assert_eq!(union, expected, "k={k} n={n}");
    }
}

/// If `w` is inadmissible and every exponent of `x` is below `2^r`, then
/// `x w^(2^r)` is inadmissible.
#[test]
fn kameko_inadmissibility_criterion() {
    let mut rng = StdRng::seed_from_u64(12);
    let mut bases: HashMap<u32, QuotientBasis> = HashMap::new();
    let k = 4;
    let mut checked = 0;
    for r in 1..=2u32 {
        let max_d = if r == 1 { 7 } else { 4 };
        for d in 2..=max_d {
            let lower = bases
                .entry(d)
                .or_insert_with(|| admissible_basis(k, d).unwrap())
                .clone();
            let inadmissible: Vec<Monomial> = lower
                .columns()
                .columns()
                .iter()
                .filter(|m| !lower.is_admissible(m))
                .copied()
                .collect();
            for _ in 0..6 {
                let Some(w) = inadmissible.choose(&mut rng) else { break };
                let x: Vec<u32> = (0..k).map(|_| rng.gen_range(0..1u32 << r)).collect();
                let x = to_mono(&x);
                let xw = x.checked_mul(&w.pow2(r).unwrap()).unwrap();
                let upper = bases
                    .entry(xw.degree())
                    .or_insert_with(|| admissible_basis(k, xw.degree()).unwrap());
                assert!(!upper.is_admissible(&xw), "{x} * ({w})^(2^{r}) is admissible");
                checked += 1;
            }
        }
    }
    assert!(checked > 30);
}

#[test]
fn degree_zero_and_one_variable() {
    for k in 1..=5 {
        let q = admissible_basis(k, 0).unwrap();
        assert_eq!(q.admissible(), [Monomial::one(k).unwrap()]);
    }
    for n in 0..=40 {
        let expected = usize::from((n + 1u32).is_power_of_two());
        assert_eq!(admissible_basis(1, n).unwrap().dim(), expected, "k=1 n={n}");
    }
}
