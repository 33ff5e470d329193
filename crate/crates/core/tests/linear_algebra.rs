use std::collections::BTreeSet;

use hitprob_core::{kernel_of, BitMatrix, BitVec, EchelonBasis};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn to_bitvec(ncols: usize, mask: u64) -> BitVec {
    BitVec::from_indices(ncols, (0..ncols).filter(|&c| mask >> c & 1 == 1)).unwrap()
}

fn to_mask(v: &BitVec) -> u64 {
    v.ones().fold(0, |m, c| m | 1 << c)
}

/// Every element of the span, by enumerating all subsets of the rows.
fn span_of(rows: &[u64]) -> BTreeSet<u64> {
    (0u32..1 << rows.len())
        .map(|s| {
            rows.iter()
                .enumerate()
                .filter(|(i, _)| s >> i & 1 == 1)
                .fold(0, |a, (_, r)| a ^ r)
        })
        .collect()
}

fn matrix() -> impl Strategy<Value = (usize, Vec<u64>)> {
    (1usize..=12, 0usize..=12).prop_flat_map(|(ncols, nrows)| {
        let full = (1u64 << ncols) - 1;
        (
            Just(ncols),
            prop::collection::vec((0..=full).prop_map(move |r| r & full), nrows),
        )
    })
}

fn basis(ncols: usize, rows: &[u64]) -> EchelonBasis {
    EchelonBasis::from_rows(ncols, rows.iter().map(|&r| to_bitvec(ncols, r))).unwrap()
}

proptest! {
    #[test]
    fn rank_matches_brute_force((ncols, rows) in matrix()) {
        let b = basis(ncols, &rows);
        let span = span_of(&rows);
        prop_assert_eq!(1usize << b.rank(), span.len());
        let m = BitMatrix::from_rows(ncols, rows.iter().map(|&r| to_bitvec(ncols, r)).collect()).unwrap();
        prop_assert_eq!(m.rank(), b.rank());
        for r in b.canonical_rows() {
            prop_assert!(span.contains(&to_mask(&r)));
        }
    }

    #[test]
    fn echelon_form_ignores_row_order((ncols, rows) in matrix(), seed in any::<u64>()) {
        let mut shuffled = rows.clone();
        shuffled.shuffle(&mut StdRng::seed_from_u64(seed));
        let a = basis(ncols, &rows);
        let b = basis(ncols, &shuffled);
        prop_assert_eq!(a.canonical_rows(), b.canonical_rows());
        let sorted = |e: &EchelonBasis| {
            let mut p = e.pivots().to_vec();
            p.sort_unstable();
            p
        };
        prop_assert_eq!(sorted(&a), sorted(&b));

        let mut one_by_one = EchelonBasis::new(ncols);
        for &r in &shuffled {
            one_by_one.insert(to_bitvec(ncols, r)).unwrap();
        }
        prop_assert_eq!(one_by_one.canonical_rows(), a.canonical_rows());
    }

    #[test]
    fn reduction_is_linear_and_decides_membership((ncols, rows) in matrix(), x in any::<u64>(), y in any::<u64>()) {
        let full = (1u64 << ncols) - 1;
        let (x, y) = (to_bitvec(ncols, x & full), to_bitvec(ncols, y & full));
        let b = basis(ncols, &rows);
        let mut xy = x.clone();
        xy.xor_assign(&y).unwrap();
        let mut sum = b.reduce(&x).unwrap();
        sum.xor_assign(&b.reduce(&y).unwrap()).unwrap();
        prop_assert_eq!(b.reduce(&xy).unwrap(), sum);
        let span = span_of(&rows);
        prop_assert_eq!(b.contains(&x).unwrap(), span.contains(&to_mask(&x)));
        let r = b.reduce(&x).unwrap();
        for &p in b.pivots() {
            prop_assert!(!r.get(p));
        }
    }

    #[test]
    fn kernel_is_the_null_space((ncols, rows) in matrix()) {
        let vs: Vec<BitVec> = rows.iter().map(|&r| to_bitvec(ncols, r)).collect();
        let k = kernel_of(ncols, &vs).unwrap();
        let rank = basis(ncols, &rows).rank();
        prop_assert_eq!(k.rank(), ncols - rank);
        for v in k.canonical_rows() {
            for r in &vs {
                prop_assert!(!r.dot(&v));
            }
        }
        let brute = (0u64..1 << ncols).filter(|&x| rows.iter().all(|r| (r & x).count_ones() % 2 == 0)).count();
        prop_assert_eq!(brute, 1usize << k.rank());
    }
}

#[test]
fn matrix_products() {
    let mut rng = StdRng::seed_from_u64(3);
    for n in 1..=10 {
        let id = BitMatrix::identity(n);
        assert!(id.is_identity() && id.is_invertible());
        let mut rows: Vec<u64> = (0..n).map(|i| 1 << i).collect();
        rows.shuffle(&mut rng);
        let p = BitMatrix::from_rows(n, rows.iter().map(|&r| to_bitvec(n, r)).collect()).unwrap();
        assert!(p.mul(&p.transpose()).unwrap().is_identity());
        assert!(p.add(&p).unwrap().rank() == 0);
    }
}
