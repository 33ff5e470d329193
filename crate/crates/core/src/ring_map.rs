//! Linear substitutions `P_{k_in} -> P_{k_out}` sending each variable to a
//! sum of distinct variables.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::monomial::{check_k, Monomial, MAX_VARS};
use crate::poly::{cancel_mod2, Polynomial};

/// Algebra homomorphism given by the images of the variables.
///
/// `images[j]` lists the 0-indexed target variables whose sum is the image of
/// `x_{j+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMap {
    k_in: usize,
    k_out: usize,
    images: Vec<Vec<usize>>,
}

impl RingMap {
    pub fn new(k_in: usize, k_out: usize, images: Vec<Vec<usize>>) -> Result<Self> {
        check_k(k_in)?;
        check_k(k_out)?;
        if images.len() != k_in {
            return Err(Error::RingMap("one image per source variable"));
        }
        for img in &images {
            if img.is_empty() {
                return Err(Error::RingMap("images are nonzero"));
            }
            if img.iter().any(|&v| v >= k_out) {
                return Err(Error::RingMap("image variable out of range"));
            }
            let mut sorted = img.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != img.len() {
                return Err(Error::RingMap("image variables are distinct"));
            }
        }
        Ok(RingMap { k_in, k_out, images })
    }

    pub fn k_in(&self) -> usize {
        self.k_in
    }

    pub fn k_out(&self) -> usize {
        self.k_out
    }

    pub fn images(&self) -> &[Vec<usize>] {
        &self.images
    }

    pub fn identity(k: usize) -> Result<Self> {
        RingMap::new(k, k, (0..k).map(|j| alloc::vec![j]).collect())
    }

    /// `g_i` for `1 <= i < k`: swaps `x_i` and `x_{i+1}`.
    pub fn transposition(k: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= k {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: k.saturating_sub(1),
            });
        }
        let mut images: Vec<Vec<usize>> = (0..k).map(|j| alloc::vec![j]).collect();
        images.swap(i - 1, i);
        RingMap::new(k, k, images)
    }

    /// `g_k`: `x1 -> x1 + x2`, other variables fixed. Needs `k >= 2`.
    pub fn shear(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::RingMap("the shear needs two variables"));
        }
        let mut images: Vec<Vec<usize>> = (0..k).map(|j| alloc::vec![j]).collect();
        images[0] = alloc::vec![0, 1];
        RingMap::new(k, k, images)
    }

    /// `f_i: P_{k-1} -> P_k`, skipping `x_i` (1-indexed).
    pub fn embed(k: usize, i: usize) -> Result<Self> {
        if k < 2 || i == 0 || i > k {
            return Err(Error::IndexOutOfRange { index: i, bound: k });
        }
        let images = (0..k - 1)
            .map(|j| if j + 1 < i { alloc::vec![j] } else { alloc::vec![j + 1] })
            .collect();
        RingMap::new(k - 1, k, images)
    }

    /// `p_(i;j): P_k -> P_{k-1}` for `1 <= i < j <= k`: `x_i -> x_{j-1}`,
    /// `x_u -> x_u` below `i` and `x_u -> x_{u-1}` above.
    pub fn restrict(k: usize, i: usize, j: usize) -> Result<Self> {
        if k < 2 || i == 0 || i >= j || j > k {
            return Err(Error::IndexOutOfRange { index: j, bound: k });
        }
        let images = (1..=k)
            .map(|u| {
                let target = if u < i {
                    u
                } else if u == i {
                    j - 1
                } else {
                    u - 1
                };
                alloc::vec![target - 1]
            })
            .collect();
        RingMap::new(k, k - 1, images)
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &RingMap) -> Result<RingMap> {
        if first.k_out != self.k_in {
            return Err(Error::VariableMismatch {
                left: first.k_out,
                right: self.k_in,
            });
        }
        let images = first
            .images
            .iter()
            .map(|img| {
                let mut acc: Vec<usize> = Vec::new();
                for &v in img {
                    for &w in &self.images[v] {
                        if let Some(pos) = acc.iter().position(|&x| x == w) {
                            acc.swap_remove(pos);
                        } else {
                            acc.push(w);
                        }
                    }
                }
                acc.sort_unstable();
                acc
            })
            .collect::<Vec<_>>();
        if images.iter().any(|i| i.is_empty()) {
            return Err(Error::RingMap("composite sends a variable to zero"));
        }
        RingMap::new(first.k_in, self.k_out, images)
    }

    fn is_monomial_map(&self) -> bool {
        self.images.iter().all(|i| i.len() == 1)
    }

    /// Image of one monomial, as a list of terms (cancelled mod 2).
    pub(crate) fn apply_monomial_terms(&self, m: &Monomial) -> Result<Vec<Monomial>> {
        if m.k() != self.k_in {
            return Err(Error::VariableMismatch {
                left: self.k_in,
                right: m.k(),
            });
        }
        let mut terms = alloc::vec![[0u16; MAX_VARS]];
        for (j, img) in self.images.iter().enumerate() {
            let a = m.exponent(j);
            if a == 0 {
                continue;
            }
            if img.len() == 1 {
                let v = img[0];
                for t in terms.iter_mut() {
                    t[v] = t[v].checked_add(a).ok_or(Error::ExponentOverflow)?;
                }
                continue;
            }
            // (sum of variables)^a over F2: each binary digit of a goes to one
            // of the variables.
            let bits: Vec<u16> = (0..16).filter(|b| a >> b & 1 == 1).map(|b| 1u16 << b).collect();
            let mut next = Vec::with_capacity(terms.len() * img.len().pow(bits.len() as u32));
            for t in &terms {
                let mut choice = alloc::vec![0usize; bits.len()];
                loop {
                    let mut e = *t;
                    for (bit, &c) in bits.iter().zip(&choice) {
                        let v = img[c];
                        e[v] = e[v].checked_add(*bit).ok_or(Error::ExponentOverflow)?;
                    }
                    next.push(e);
                    let mut pos = 0;
                    while pos < choice.len() {
                        choice[pos] += 1;
                        if choice[pos] < img.len() {
                            break;
                        }
                        choice[pos] = 0;
                        pos += 1;
                    }
                    if pos == choice.len() {
                        break;
                    }
                }
            }
            terms = next;
        }
        let mut out: Vec<Monomial> = terms.into_iter().map(|e| Monomial::from_array(self.k_out, e)).collect();
        if !self.is_monomial_map() {
            cancel_mod2(&mut out);
        }
        Ok(out)
    }

    pub fn apply_monomial(&self, m: &Monomial) -> Result<Polynomial> {
        let terms = self.apply_monomial_terms(m)?;
        Ok(Polynomial::from_raw(self.k_out, m.degree(), terms))
    }

    /// Substitutes and expands; the degree is preserved.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.k() != self.k_in {
            return Err(Error::VariableMismatch {
                left: self.k_in,
                right: f.k(),
            });
        }
        let mut terms = Vec::new();
        for m in f.terms() {
            terms.extend(self.apply_monomial_terms(m)?);
        }
        Ok(Polynomial::from_raw(self.k_out, f.degree(), terms))
    }
}
