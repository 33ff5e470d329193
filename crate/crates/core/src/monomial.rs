//! Monomials `x1^a1 ... xk^ak` of `P_k`.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported number of variables.
pub const MAX_VARS: usize = 16;

/// Exponents are 16-bit, so weight vectors have at most this many entries.
pub(crate) const LEVELS: usize = 16;

/// A monomial in `k` variables, stored inline as 16-bit exponents.
///
/// The total order (`Ord`) compares variable count, then degree, then the
/// admissible order: weight vector left-lexicographically, then the exponent
/// sequence left-lexicographically. Within one `(k, degree)` slice it is
/// exactly the admissible order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MonomialRepr", into = "MonomialRepr")]
pub struct Monomial {
    k: u8,
    exps: [u16; MAX_VARS],
}

#[derive(Serialize, Deserialize)]
struct MonomialRepr {
    exponents: Vec<u32>,
}

impl TryFrom<MonomialRepr> for Monomial {
    type Error = Error;

    fn try_from(repr: MonomialRepr) -> Result<Self> {
        Monomial::new(&repr.exponents)
    }
}

impl From<Monomial> for MonomialRepr {
    fn from(m: Monomial) -> Self {
        MonomialRepr {
            exponents: m.exponents().iter().map(|&e| e as u32).collect(),
        }
    }
}

pub(crate) fn check_k(k: usize) -> Result<()> {
    if k == 0 || k > MAX_VARS {
        Err(Error::VariableCount(k))
    } else {
        Ok(())
    }
}

impl Monomial {
    pub fn new(exponents: &[u32]) -> Result<Self> {
        check_k(exponents.len())?;
        let mut exps = [0u16; MAX_VARS];
        for (slot, &e) in exps.iter_mut().zip(exponents) {
            *slot = u16::try_from(e).map_err(|_| Error::ExponentOverflow)?;
        }
        Ok(Monomial {
            k: exponents.len() as u8,
            exps,
        })
    }

    pub(crate) fn from_array(k: usize, exps: [u16; MAX_VARS]) -> Self {
        debug_assert!(exps[k..].iter().all(|&e| e == 0));
        Monomial { k: k as u8, exps }
    }

    /// The unit monomial `1` in `k` variables.
    pub fn one(k: usize) -> Result<Self> {
        check_k(k)?;
        Ok(Monomial {
            k: k as u8,
            exps: [0; MAX_VARS],
        })
    }

    /// The variable `x_i`, 1-indexed.
    pub fn var(k: usize, i: usize) -> Result<Self> {
        let mut m = Monomial::one(k)?;
        if i == 0 || i > k {
            return Err(Error::IndexOutOfRange { index: i, bound: k });
        }
        m.exps[i - 1] = 1;
        Ok(m)
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k as usize
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.k as usize]
    }

    /// Exponent of the 0-indexed variable `j`.
    #[inline]
    pub fn exponent(&self, j: usize) -> u16 {
        self.exps[j]
    }

    #[inline]
    pub(crate) fn raw(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.exponents().iter().map(|&e| e as u32).sum()
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.k != other.k {
            return Err(Error::VariableMismatch {
                left: self.k(),
                right: other.k(),
            });
        }
        let mut exps = [0u16; MAX_VARS];
        for ((slot, &a), &b) in exps.iter_mut().zip(self.exponents()).zip(other.exponents()) {
            *slot = a.checked_add(b).ok_or(Error::ExponentOverflow)?;
        }
        Ok(Monomial { k: self.k, exps })
    }

    /// `self^(2^r)`.
    pub fn pow2(&self, r: u32) -> Result<Monomial> {
        let mut exps = [0u16; MAX_VARS];
        for (slot, &a) in exps.iter_mut().zip(self.exponents()) {
            *slot = u16::try_from((a as u64) << r).map_err(|_| Error::ExponentOverflow)?;
        }
        Ok(Monomial { k: self.k, exps })
    }

    /// True when some exponent is zero (the monomial lies in `P_k^0`).
    pub fn has_zero_exponent(&self) -> bool {
        self.exponents().contains(&0)
    }

    /// True when every exponent is odd, i.e. `x = x1...xk * y^2`.
    pub fn is_totally_odd(&self) -> bool {
        self.exponents().iter().all(|&e| e & 1 == 1)
    }

    /// `omega_i` counts for levels `i = 1..=16`, zero-padded.
    #[inline]
    pub(crate) fn weight_counts(&self) -> [u8; LEVELS] {
        let mut w = [0u8; LEVELS];
        for &e in self.exponents() {
            let mut e = e;
            while e != 0 {
                let bit = e.trailing_zeros() as usize;
                w[bit] += 1;
                e &= e - 1;
            }
        }
        w
    }

    /// Compares in the admissible order, ignoring `k` and degree.
    #[inline]
    pub(crate) fn cmp_admissible(&self, other: &Monomial) -> Ordering {
        self.weight_counts()
            .cmp(&other.weight_counts())
            .then_with(|| self.exponents().cmp(other.exponents()))
    }

    /// Permutes variables: the result has `x_{perm[j]}` raised to this
    /// monomial's exponent of `x_j` (0-indexed).
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for (j, &target) in perm.iter().enumerate().take(self.k()) {
            exps[target] = self.exps[j];
        }
        Monomial { k: self.k, exps }
    }

    pub fn to_text(&self) -> String {
        crate::text::format_monomial(self)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.k
            .cmp(&other.k)
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| self.cmp_admissible(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({:?})", self.exponents())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_monomial(self))
    }
}

/// All monomials of degree `n` in `k` variables, in no particular order.
pub fn monomials_of_degree(k: usize, n: u32) -> Result<Vec<Monomial>> {
    check_k(k)?;
    let mut out = Vec::new();
    let mut exps = [0u16; MAX_VARS];
    fn rec(j: usize, k: usize, left: u32, exps: &mut [u16; MAX_VARS], out: &mut Vec<Monomial>) {
        if j + 1 == k {
            if left <= u16::MAX as u32 {
                exps[j] = left as u16;
                out.push(Monomial::from_array(k, *exps));
                exps[j] = 0;
            }
            return;
        }
        for e in 0..=left.min(u16::MAX as u32) {
            exps[j] = e as u16;
            rec(j + 1, k, left - e, exps, out);
        }
        exps[j] = 0;
    }
    rec(0, k, n, &mut exps, &mut out);
    Ok(out)
}
