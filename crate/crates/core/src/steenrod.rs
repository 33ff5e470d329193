//! Steenrod squares on `P_k` and the generators of the hit subspace.
//!
//! `Sq^t(x^a) = C(a, t) x^(a+t)`, and the Cartan formula spreads `Sq^i` over
//! the variables of a monomial: the terms of `Sq^i(x1^a1 ... xk^ak)` are
//! `x1^(a1+t1) ... xk^(ak+tk)` for every choice of `t_j` with binary digits
//! inside those of `a_j` and `sum t_j = i`. Distinct choices give distinct
//! monomials, so no cancellation happens within one monomial.
//!
//! The Steenrod algebra is generated by the `Sq^(2^u)`, so the hit elements
//! of degree `n` are spanned by `Sq^(2^u)(m)` over the monomials `m` of degree
//! `n - 2^u`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::monomial::{check_k, monomials_of_degree, Monomial, MAX_VARS};
use crate::poly::Polynomial;

/// Which squares generate the hit space.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum GeneratorSet {
    /// `Sq^(2^u)` only; enough to span.
    #[default]
    PowersOfTwo,
    /// Every `Sq^i` with `i >= 1`; a redundant cross-check.
    AllSquares,
}

/// Terms of `Sq^i(m)`, unsorted and distinct.
pub(crate) fn sq_terms(i: u32, m: &Monomial, out: &mut Vec<Monomial>) -> Result<()> {
    let k = m.k();
    let deg = m.degree();
    if i > deg {
        return Ok(());
    }
    // suffix[j] = sum of exponents j.., the most Sq can add from there on
    let mut suffix = [0u32; MAX_VARS + 1];
    for j in (0..k).rev() {
        suffix[j] = suffix[j + 1] + m.exponent(j) as u32;
    }
    let mut exps = *m.raw();
    fn rec(
        j: usize,
        left: u32,
        k: usize,
        m: &Monomial,
        suffix: &[u32; MAX_VARS + 1],
        exps: &mut [u16; MAX_VARS],
        out: &mut Vec<Monomial>,
    ) -> Result<()> {
        if left == 0 {
            out.push(Monomial::from_array(k, *exps));
            return Ok(());
        }
        if j == k || suffix[j] < left {
            return Ok(());
        }
        let a = m.exponent(j) as u32;
        for t in crate::binom::submasks(a) {
            if t > left {
                continue;
            }
            let e = a + t;
            exps[j] = u16::try_from(e).map_err(|_| Error::ExponentOverflow)?;
            rec(j + 1, left - t, k, m, suffix, exps, out)?;
        }
        exps[j] = a as u16;
        Ok(())
    }
    rec(0, i, k, m, &suffix, &mut exps, out)
}

pub fn sq_monomial(i: u32, m: &Monomial) -> Result<Polynomial> {
    let mut terms = Vec::new();
    sq_terms(i, m, &mut terms)?;
    Ok(Polynomial::from_distinct(m.k(), m.degree() + i, terms))
}

/// `Sq^i(f)`; the degree goes up by `i`.
pub fn sq(i: u32, f: &Polynomial) -> Result<Polynomial> {
    let mut terms = Vec::new();
    for m in f.terms() {
        sq_terms(i, m, &mut terms)?;
    }
    Ok(Polynomial::from_raw(f.k(), f.degree() + i, terms))
}

/// The squares used for degree `n`, paired with the source degree.
pub(crate) fn generator_squares(n: u32, set: GeneratorSet) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut i = 1u32;
    while i <= n {
        out.push((i, n - i));
        i = match set {
            GeneratorSet::PowersOfTwo => i * 2,
            GeneratorSet::AllSquares => i + 1,
        };
    }
    out
}

/// Nonzero `Sq^i(m)` for each generating square `Sq^i` and each monomial `m`
/// of degree `n - i`, in a fixed order: by `i`, then by `m` ascending.
pub fn hit_generators(k: usize, n: u32, set: GeneratorSet) -> Result<Vec<Polynomial>> {
    check_k(k)?;
    let mut sources = Vec::new();
    for (i, d) in generator_squares(n, set) {
        let mut ms = monomials_of_degree(k, d)?;
        ms.sort_unstable();
        sources.extend(ms.into_iter().map(|m| (i, m)));
    }
    let image = |&(i, m): &(u32, Monomial)| sq_monomial(i, &m);
    #[cfg(feature = "parallel")]
    let images: Vec<Result<Polynomial>> = {
        use rayon::prelude::*;
        sources.par_iter().map(image).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let images: Vec<Result<Polynomial>> = sources.iter().map(image).collect();
    let mut out = Vec::with_capacity(images.len());
    for p in images {
        let p = p?;
        if !p.is_zero() {
            out.push(p);
        }
    }
    Ok(out)
}
