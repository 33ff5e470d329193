//! Homogeneous polynomials over F2.

use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{check_k, Monomial};

/// A homogeneous polynomial: a set of distinct monomials of one degree.
///
/// Terms are kept sorted ascending in the admissible order. The zero
/// polynomial is the empty set; it still records a degree, but compares equal
/// to every other zero polynomial in the same number of variables.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "PolynomialRepr", into = "PolynomialRepr")]
pub struct Polynomial {
    k: u8,
    degree: u32,
    terms: Vec<Monomial>,
}

#[derive(Serialize, Deserialize)]
struct PolynomialRepr {
    k: usize,
    degree: u32,
    terms: Vec<Monomial>,
}

impl TryFrom<PolynomialRepr> for Polynomial {
    type Error = Error;

    fn try_from(repr: PolynomialRepr) -> Result<Self> {
        let mut p = Polynomial::zero(repr.k, repr.degree)?;
        for m in repr.terms {
            p.check_term(&m)?;
            p.terms.push(m);
        }
        p.normalize();
        Ok(p)
    }
}

impl From<Polynomial> for PolynomialRepr {
    fn from(p: Polynomial) -> Self {
        PolynomialRepr {
            k: p.k(),
            degree: p.degree,
            terms: p.terms,
        }
    }
}

/// Sorts and cancels repeated monomials in pairs.
pub(crate) fn cancel_mod2(terms: &mut Vec<Monomial>) {
    terms.sort_unstable();
    let mut out = 0;
    let mut i = 0;
    while i < terms.len() {
        let mut j = i + 1;
        while j < terms.len() && terms[j] == terms[i] {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            terms[out] = terms[i];
            out += 1;
        }
        i = j;
    }
    terms.truncate(out);
}

impl Polynomial {
    pub fn zero(k: usize, degree: u32) -> Result<Self> {
        check_k(k)?;
        Ok(Polynomial {
            k: k as u8,
            degree,
            terms: Vec::new(),
        })
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Polynomial {
            k: m.k() as u8,
            degree: m.degree(),
            terms: alloc::vec![m],
        }
    }

    /// Sum of the given monomials; repeated monomials cancel in pairs.
    pub fn from_terms<I: IntoIterator<Item = Monomial>>(k: usize, degree: u32, terms: I) -> Result<Self> {
        let mut p = Polynomial::zero(k, degree)?;
        for m in terms {
            p.check_term(&m)?;
            p.terms.push(m);
        }
        p.normalize();
        Ok(p)
    }

    /// Builds from terms already known to share `k` and `degree`.
    pub(crate) fn from_raw(k: usize, degree: u32, mut terms: Vec<Monomial>) -> Self {
        cancel_mod2(&mut terms);
        Polynomial {
            k: k as u8,
            degree,
            terms,
        }
    }

    /// Builds from distinct terms, skipping the cancellation pass.
    pub(crate) fn from_distinct(k: usize, degree: u32, mut terms: Vec<Monomial>) -> Self {
        terms.sort_unstable();
        debug_assert!(terms.windows(2).all(|w| w[0] != w[1]));
        Polynomial {
            k: k as u8,
            degree,
            terms,
        }
    }

    fn check_term(&self, m: &Monomial) -> Result<()> {
        if m.k() != self.k() {
            return Err(Error::VariableMismatch {
                left: self.k(),
                right: m.k(),
            });
        }
        if m.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: m.degree(),
            });
        }
        Ok(())
    }

    fn normalize(&mut self) {
        cancel_mod2(&mut self.terms);
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Monomial> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.binary_search(m).is_ok()
    }

    /// Sum over F2 (symmetric difference of the term sets).
    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.k != other.k {
            return Err(Error::VariableMismatch {
                left: self.k(),
                right: other.k(),
            });
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                core::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(Polynomial {
            k: self.k,
            degree: self.degree,
            terms: out,
        })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.k != other.k {
            return Err(Error::VariableMismatch {
                left: self.k(),
                right: other.k(),
            });
        }
        let degree = self.degree + other.degree;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(a.checked_mul(b)?);
            }
        }
        Ok(Polynomial::from_raw(self.k(), degree, terms))
    }

    /// `self^(2^r)`: Frobenius, termwise over F2.
    pub fn pow2(&self, r: u32) -> Result<Polynomial> {
        let terms = self.terms.iter().map(|m| m.pow2(r)).collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_distinct(self.k(), self.degree << r, terms))
    }

    pub fn to_text(&self) -> alloc::string::String {
        crate::text::format_polynomial(self)
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.terms == other.terms && (self.terms.is_empty() || self.degree == other.degree)
    }
}

impl Eq for Polynomial {}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        Polynomial::from_monomial(m)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial(k={}, deg={}, {})", self.k, self.degree, self.to_text())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_polynomial;

    fn p(k: usize, s: &str) -> Polynomial {
        parse_polynomial(k, s).unwrap()
    }

    #[test]
    fn add_cancels() {
        let a = p(2, "x1 x2");
        assert!(a.add(&a).unwrap().is_zero());
        let s = p(2, "x1^2").add(&p(2, "x2^2")).unwrap();
        assert_eq!(s, p(2, "x1^2 + x2^2"));
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn add_rejects_mismatch() {
        let a = p(2, "x1");
        let b = p(2, "x1^2");
        assert!(matches!(a.add(&b), Err(Error::DegreeMismatch { .. })));
        assert!(matches!(a.add(&p(3, "x1")), Err(Error::VariableMismatch { .. })));
        // zero operand of another degree is fine
        let z = Polynomial::zero(2, 7).unwrap();
        assert_eq!(a.add(&z).unwrap(), a);
    }

    #[test]
    fn mul_examples() {
        let s = p(2, "x1 + x2");
        assert_eq!(s.mul(&s).unwrap(), p(2, "x1^2 + x2^2"));
        let a = p(5, "x1 x2 x3 x4 x5");
        let b = p(5, "x1^2 x2^2");
        assert_eq!(a.mul(&b).unwrap(), p(5, "x1^3 x2^3 x3 x4 x5"));
        let z = Polynomial::zero(5, 3).unwrap();
        assert!(z.mul(&a).unwrap().is_zero());
    }

    #[test]
    fn json_roundtrip_and_validation() {
        let a = p(3, "x1^2 x3 + x2^3");
        let s = serde_json::to_string(&a).unwrap();
        assert!(s.starts_with(r#"{"k":3,"degree":3,"terms":["#));
        let back: Polynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        let bad = r#"{"k":2,"degree":2,"terms":[{"exponents":[1,0]}]}"#;
        assert!(serde_json::from_str::<Polynomial>(bad).is_err());
    }

    #[test]
    fn terms_sorted_in_admissible_order() {
        let a = p(3, "x1^3 + x1 x2 x3 + x2^2 x3");
        let t = a.terms();
        assert!(t.windows(2).all(|w| w[0] < w[1]));
        // weight (1,1) < (3) < ... : x2^2 x3 has weight (1,1), x1x2x3 has (3), x1^3 has (1,1)
        assert_eq!(t[2], Monomial::new(&[1, 1, 1]).unwrap());
    }
}
