//! Kameko's squaring map `Sq^0_*: (QP_k)_{2d+k} -> (QP_k)_d`, induced by
//! `x1 ... xk y^2 -> y` on monomials (other monomials go to zero), and its
//! section induced by `y -> x1 ... xk y^2`.

use alloc::vec::Vec;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{kernel_of, BitMatrix, EchelonBasis};
use crate::monomial::{Monomial, MAX_VARS};
use crate::poly::Polynomial;
use crate::solver::{admissible_basis, QuotientBasis};
use crate::weights::{mu, t_kd};

/// `y` when `x = x1 ... xk y^2`, otherwise `None` (the zero polynomial).
pub fn phi(x: &Monomial) -> Option<Monomial> {
    if !x.is_totally_odd() {
        return None;
    }
    let mut e = [0u16; MAX_VARS];
    for (slot, &a) in e.iter_mut().zip(x.exponents()) {
        *slot = (a - 1) / 2;
    }
    Some(Monomial::from_array(x.k(), e))
}

/// `x1 ... xk x^2`.
pub fn psi(x: &Monomial) -> Result<Monomial> {
    let mut e = [0u16; MAX_VARS];
    for (slot, &a) in e.iter_mut().zip(x.exponents()) {
        *slot = a
            .checked_mul(2)
            .and_then(|v| v.checked_add(1))
            .ok_or(Error::ExponentOverflow)?;
    }
    Ok(Monomial::from_array(x.k(), e))
}

/// `phi` extended linearly to polynomials of degree `2d + k`.
pub fn phi_polynomial(f: &Polynomial) -> Result<Polynomial> {
    let k = f.k() as u32;
    if f.is_zero() {
        return Polynomial::zero(f.k(), 0);
    }
    if f.degree() < k || !(f.degree() - k).is_multiple_of(2) {
        return Err(Error::KamekoDegree {
            k: f.k(),
            d: f.degree().saturating_sub(k) / 2,
            n: f.degree(),
        });
    }
    let terms: Vec<Monomial> = f.terms().iter().filter_map(phi).collect();
    Polynomial::from_terms(f.k(), (f.degree() - k) / 2, terms)
}

/// The down map as a matrix from upper to lower admissible coordinates.
#[derive(Clone, Debug)]
pub struct KamekoMap {
    k: usize,
    d: u32,
    matrix: BitMatrix,
}

impl KamekoMap {
    /// `upper` is `(QP_k)_{2d+k}` and `lower` is `(QP_k)_d`.
    pub fn new(upper: &QuotientBasis, lower: &QuotientBasis) -> Result<Self> {
        let k = upper.k();
        if lower.k() != k {
            return Err(Error::VariableMismatch {
                left: k,
                right: lower.k(),
            });
        }
        let d = lower.n();
        if upper.n() != 2 * d + k as u32 {
            return Err(Error::KamekoDegree { k, d, n: upper.n() });
        }
        let columns = upper
            .admissible()
            .iter()
            .map(|x| match phi(x) {
                Some(y) => lower.coordinates(&y.into()),
                None => Ok(crate::gf2::BitVec::zeros(lower.dim())),
            })
            .collect::<Result<Vec<_>>>()?;
        let matrix = BitMatrix::from_columns(lower.dim(), &columns)?;
        Ok(KamekoMap { k, d, matrix })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// `dim (QP_k)_d` rows by `dim (QP_k)_{2d+k}` columns.
    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn kernel(&self) -> Result<EchelonBasis> {
        kernel_of(self.matrix.ncols(), self.matrix.rows())
    }

    pub fn kernel_dim(&self) -> usize {
        self.matrix.ncols() - self.rank()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.matrix.nrows()
    }

    /// The section `y -> x1 ... xk y^2` as a matrix from lower to upper
    /// coordinates.
    pub fn section(upper: &QuotientBasis, lower: &QuotientBasis) -> Result<BitMatrix> {
        let columns = lower
            .admissible()
            .iter()
            .map(|y| upper.coordinates(&psi(y)?.into()))
            .collect::<Result<Vec<_>>>()?;
        BitMatrix::from_columns(upper.dim(), &columns)
    }
}

/// Builds both bases and the down map for `(k, d)`.
pub fn kameko_down(k: usize, d: u32) -> Result<KamekoMap> {
    let upper = admissible_basis(k, 2 * d + k as u32)?;
    let lower = admissible_basis(k, d)?;
    KamekoMap::new(&upper, &lower)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub k: usize,
    pub d: u32,
    /// `mu(2d + k)`.
    pub mu: u32,
    /// `mu(2d + k) = k`, which makes the down map an isomorphism.
    pub iso_forced: bool,
    /// `t(k, d)`.
    pub t: u64,
}

pub fn stability_report(k: usize, d: u32) -> Result<StabilityReport> {
    let m = mu(2 * d as u64 + k as u64)?;
    Ok(StabilityReport {
        k,
        d,
        mu: m,
        iso_forced: m as usize == k,
        t: t_kd(k as u64, d as u64),
    })
}
