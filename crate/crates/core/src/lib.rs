//! Exact computations for the Peterson hit problem.
//!
//! `P_k = F2[x1, ..., xk]` is a module over the mod-2 Steenrod algebra. A
//! polynomial is *hit* when it lies in the image of the positive-degree
//! squares; the quotient `QP_k` by the hit elements has a basis of
//! *admissible* monomials. This crate computes that basis degree by degree
//! with bit-packed linear algebra over F2, splits it by weight vector,
//! evaluates Kameko's squaring map on the quotient, and finds the fixed
//! points of the symmetric and general linear groups.
//!
//! The crate is `no_std` (it needs `alloc`). The `parallel` feature pulls in
//! `std` and rayon and parallelises generator production and matrix builds;
//! results do not depend on the worker count.
//!
//! Layout:
//!
//! * [`monomial`], [`poly`], [`ring_map`]: arithmetic in `P_k`.
//! * [`weights`]: weight vectors, the admissible order, spikes, `mu`.
//! * [`steenrod`]: the action of `Sq^i` and hit generators.
//! * [`gf2`]: packed bit vectors and reduced echelon bases.
//! * [`solver`]: hit spaces, admissible bases and weight quotients.
//! * [`kameko`]: Kameko's map and its section.
//! * [`invariants`]: the `Sigma_k` and `GL_k` actions on the quotient.
//! * [`text`]: the `x1^7 x2 x3` text form.

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod binom;
pub mod error;
pub mod gf2;
pub mod invariants;
pub mod kameko;
pub mod monomial;
pub mod poly;
pub mod ring_map;
pub mod solver;
pub mod steenrod;
pub mod text;
pub mod weights;

pub use binom::binom_mod2;
pub use error::{Error, Result};
pub use gf2::{kernel_of, BitMatrix, BitVec, ColumnIndex, EchelonBasis};
pub use invariants::{
    induced_matrix, invariants, invariants_in, invariants_within, is_invariant_class, orbit_span, orbit_sum,
    submodule_monomials, submodule_sum, Group, GroupGenerator,
};
pub use kameko::{kameko_down, phi, psi, stability_report, KamekoMap, StabilityReport};
pub use monomial::{Monomial, MAX_VARS};
pub use poly::Polynomial;
pub use ring_map::RingMap;
pub use solver::{
    admissible_basis, admissible_basis_with, f_embed, hit_space, p_restrict, split_zero_plus, weight_quotient,
    weight_quotient_with, GeneratorSet, QuotientBasis, SolverOptions,
};
pub use steenrod::{hit_generators, sq, sq_monomial};
pub use weights::{
    admissible_cmp, alpha, minimal_spike, mu, singer_filter, t_kd, weight_block, weight_vector, zeta, WeightVector,
};

/// Order-preserving map, spread over the rayon pool with `parallel`.
#[cfg(feature = "parallel")]
pub(crate) fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> alloc::vec::Vec<U> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn par_map<T, U>(items: &[T], f: impl Fn(&T) -> U) -> alloc::vec::Vec<U> {
    items.iter().map(f).collect()
}
