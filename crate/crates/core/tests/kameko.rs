mod common;

use common::*;
use hitprob_core::kameko::phi_polynomial;
use hitprob_core::{
    admissible_basis, hit_generators, phi, psi, stability_report, GeneratorSet, KamekoMap, Monomial, Polynomial,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

proptest! {
    #[test]
    fn phi_undoes_psi(e in prop::collection::vec(0u32..200, 1..=6)) {
        let x = to_mono(&e);
        let up = psi(&x).unwrap();
        prop_assert!(up.is_totally_odd());
        prop_assert_eq!(up.degree(), 2 * x.degree() + x.k() as u32);
        prop_assert_eq!(phi(&up), Some(x));
    }

    #[test]
    fn phi_vanishes_off_odd_monomials(e in prop::collection::vec(0u32..50, 1..=6)) {
        let x = to_mono(&e);
        prop_assert_eq!(phi(&x).is_some(), e.iter().all(|a| a % 2 == 1));
    }
}

#[test]
fn down_after_section_is_the_identity() {
    for (k, d) in [(2, 3), (3, 2), (3, 5), (4, 3), (4, 6), (5, 2), (5, 9)] {
        let upper = admissible_basis(k, 2 * d + k as u32).unwrap();
        let lower = admissible_basis(k, d).unwrap();
        let down = KamekoMap::new(&upper, &lower).unwrap();
        let section = KamekoMap::section(&upper, &lower).unwrap();
        assert!(down.matrix().mul(&section).unwrap().is_identity(), "k={k} d={d}");
        assert!(down.is_surjective());
        assert_eq!(down.kernel_dim(), upper.dim() - lower.dim());
    }
}

/// The down map is well defined on the quotient: hit elements go to hit
/// elements.
#[test]
fn down_map_sends_hit_to_hit() {
    let mut rng = StdRng::seed_from_u64(13);
    for (k, d) in [(3, 4), (4, 3), (4, 5), (5, 2)] {
        let n = 2 * d + k as u32;
        let lower = admissible_basis(k, d).unwrap();
        let gens = hit_generators(k, n, GeneratorSet::PowersOfTwo).unwrap();
        for _ in 0..40 {
            let mut h = Polynomial::zero(k, n).unwrap();
            for g in gens.choose_multiple(&mut rng, 5) {
                h = sum(&h, g);
            }
            let down = phi_polynomial(&h).unwrap();
            assert!(lower.is_hit(&down).unwrap(), "phi({h}) = {down} is not hit");
        }
    }
}

#[test]
fn forced_isomorphisms() {
    let mut seen = 0;
    for k in 2..=4 {
        for d in 0..=8 {
            let report = stability_report(k, d).unwrap();
            if !report.iso_forced {
                continue;
            }
            let upper = admissible_basis(k, 2 * d + k as u32).unwrap();
            let lower = admissible_basis(k, d).unwrap();
            let map = KamekoMap::new(&upper, &lower).unwrap();
            assert_eq!(map.kernel_dim(), 0, "k={k} d={d}");
            assert!(map.is_surjective());
            assert!(map.matrix().is_invertible());
            seen += 1;
        }
    }
    assert!(seen >= 5);
}

#[test]
fn kernels_in_five_variables() {
    let map = hitprob_core::kameko_down(5, 2).unwrap();
    assert_eq!(
        (map.matrix().ncols(), map.matrix().nrows(), map.kernel_dim()),
        (191, 10, 181)
    );
    let upper = admissible_basis(5, 23).unwrap();
    let lower = admissible_basis(5, 9).unwrap();
    let map = KamekoMap::new(&upper, &lower).unwrap();
    assert_eq!(map.kernel_dim(), 1054);
    let images: Vec<Monomial> = lower.admissible().iter().map(|y| psi(y).unwrap()).collect();
    assert!(images.iter().all(|x| upper.is_admissible(x)));
}
