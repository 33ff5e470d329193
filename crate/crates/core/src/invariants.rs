//! The actions of `Sigma_k` and `GL_k` on a quotient and their fixed points.
//!
//! `Sigma_k` is generated by the transpositions `g_i = (x_i x_{i+1})`,
//! `i < k`, and adding `g_k: x1 -> x1 + x2` generates `GL_k`. A class is
//! invariant when `g_i(f) + f` vanishes in the quotient for every generator.

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{kernel_of, BitMatrix, BitVec, EchelonBasis};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring_map::RingMap;
use crate::solver::QuotientBasis;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupGenerator {
    k: usize,
    index: usize,
    map: RingMap,
}

impl GroupGenerator {
    /// `g_i` for `1 <= i <= k`.
    pub fn new(k: usize, i: usize) -> Result<Self> {
        let map = if i == k {
            RingMap::shear(k)?
        } else {
            RingMap::transposition(k, i)?
        };
        Ok(GroupGenerator { k, index: i, map })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn map(&self) -> &RingMap {
        &self.map
    }

    pub fn is_transposition(&self) -> bool {
        self.index < self.k
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Sigma,
    #[serde(rename = "gl")]
    GL,
}

impl Group {
    pub fn generators(self, k: usize) -> Result<Vec<GroupGenerator>> {
        let last = match self {
            Group::Sigma => k.saturating_sub(1),
            Group::GL => k,
        };
        (1..=last).map(|i| GroupGenerator::new(k, i)).collect()
    }
}

impl core::str::FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sigma" | "sym" | "symmetric" => Ok(Group::Sigma),
            "gl" => Ok(Group::GL),
            _ => Err(Error::Parse(alloc::format!(
                "unknown group {s:?}, expected sigma or gl"
            ))),
        }
    }
}

/// `g` on the quotient: column `j` holds the coordinates of `g` applied to
/// the `j`-th admissible monomial. In a weight block, image terms of lower
/// weight are dropped before reduction.
pub fn induced_matrix(g: &GroupGenerator, q: &QuotientBasis) -> Result<BitMatrix> {
    if g.k() != q.k() {
        return Err(Error::VariableMismatch {
            left: g.k(),
            right: q.k(),
        });
    }
    let image = |m: &Monomial| -> Result<BitVec> { q.coordinates(&g.map().apply_monomial(m)?) };
    let columns = crate::par_map(q.admissible(), image)
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    BitMatrix::from_columns(q.dim(), &columns)
}

/// Invariant classes of `q` that also satisfy the linear conditions
/// `extra` (each a functional on the admissible coordinates).
pub fn invariants_within(q: &QuotientBasis, group: Group, extra: &[BitVec]) -> Result<EchelonBasis> {
    let dim = q.dim();
    let mut rows: Vec<BitVec> = extra.to_vec();
    let id = BitMatrix::identity(dim);
    for g in group.generators(q.k())? {
        let m = induced_matrix(&g, q)?.add(&id)?;
        rows.extend(m.rows().iter().cloned());
    }
    kernel_of(dim, &rows)
}

/// Fixed points of the group on `q`, in admissible coordinates.
pub fn invariants(q: &QuotientBasis, group: Group) -> Result<EchelonBasis> {
    invariants_within(q, group, &[])
}

pub fn is_invariant_class(f: &Polynomial, q: &QuotientBasis, group: Group) -> Result<bool> {
    for g in group.generators(q.k())? {
        let moved = g.map().apply(f)?.add(f)?;
        if !q.coordinates(&moved)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sum of the admissible monomials of `q` obtained from `z` by permuting
/// variables.
pub fn orbit_sum(z: &Monomial, q: &QuotientBasis) -> Result<Polynomial> {
    if !q.is_admissible(z) {
        return Err(Error::NotAdmissible(z.to_text()));
    }
    let mut key: Vec<u16> = z.exponents().to_vec();
    key.sort_unstable();
    let terms = q.admissible().iter().copied().filter(|y| {
        let mut e: Vec<u16> = y.exponents().to_vec();
        e.sort_unstable();
        e == key
    });
    Polynomial::from_terms(q.k(), q.n(), terms)
}

/// The span of the classes `sigma(z)`, `sigma` in `Sigma_k`, over `z` in
/// `zs`: the `Sigma_k`-submodule of `q` they generate.
pub fn orbit_span(zs: &[Monomial], q: &QuotientBasis) -> Result<EchelonBasis> {
    let mats = Group::Sigma
        .generators(q.k())?
        .iter()
        .map(|g| induced_matrix(g, q))
        .collect::<Result<Vec<_>>>()?;
    let mut span = EchelonBasis::new(q.dim());
    let mut queue = Vec::new();
    for z in zs {
        queue.push(q.coordinates(&Polynomial::from_monomial(*z))?);
    }
    while let Some(v) = queue.pop() {
        if span.insert(v.clone())? {
            for m in &mats {
                queue.push(m.mul_vec(&v)?);
            }
        }
    }
    Ok(span)
}

/// Admissible monomials of `q` whose classes lie in the submodule generated
/// by `zs`.
pub fn submodule_monomials(zs: &[Monomial], q: &QuotientBasis) -> Result<Vec<Monomial>> {
    let span = orbit_span(zs, q)?;
    let mut out = Vec::new();
    for (i, &y) in q.admissible().iter().enumerate() {
        if span.contains(&BitVec::unit(q.dim(), i))? {
            out.push(y);
        }
    }
    Ok(out)
}

/// Sum of [`submodule_monomials`] of `z`. Unlike [`orbit_sum`] this also
/// picks up admissible monomials that are not permutations of `z` but whose
/// classes `z` generates.
pub fn submodule_sum(z: &Monomial, q: &QuotientBasis) -> Result<Polynomial> {
    Polynomial::from_terms(q.k(), q.n(), submodule_monomials(&[*z], q)?)
}

/// Invariant classes lying in the subspace `span` (in admissible
/// coordinates).
pub fn invariants_in(span: &EchelonBasis, q: &QuotientBasis, group: Group) -> Result<EchelonBasis> {
    if span.ncols() != q.dim() {
        return Err(Error::LengthMismatch {
            expected: q.dim(),
            got: span.ncols(),
        });
    }
    let basis = span.rows();
    // v = sum a_i s_i is fixed by g iff sum a_i (g + 1) s_i = 0
    let mut constraints = Vec::new();
    for g in group.generators(q.k())? {
        let m = induced_matrix(&g, q)?;
        let moved = basis
            .iter()
            .map(|s| {
                let mut w = m.mul_vec(s)?;
                w.xor_assign(s)?;
                Ok(w)
            })
            .collect::<Result<Vec<_>>>()?;
        constraints.extend(BitMatrix::from_columns(q.dim(), &moved)?.rows().iter().cloned());
    }
    let kernel = kernel_of(basis.len(), &constraints)?;
    let fixed = kernel.rows().iter().map(|a| {
        let mut v = BitVec::zeros(q.dim());
        for i in a.ones() {
            v.xor_assign(&basis[i]).expect("rows share the quotient dimension");
        }
        v
    });
    EchelonBasis::from_rows(q.dim(), fixed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::admissible_basis;

    #[test]
    fn degree_two() {
        let q = admissible_basis(5, 2).unwrap();
        assert_eq!(invariants(&q, Group::GL).unwrap().rank(), 0);
        // x1x2 + ... + x4x5 is symmetric
        assert_eq!(invariants(&q, Group::Sigma).unwrap().rank(), 1);
        for g in Group::GL.generators(5).unwrap() {
            let m = induced_matrix(&g, &q).unwrap();
            assert!(m.is_invertible());
            if g.is_transposition() {
                assert!(m.mul(&m).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn orbit_of_symmetric_class() {
        let q = admissible_basis(5, 2).unwrap();
        let z = Monomial::new(&[1, 1, 0, 0, 0]).unwrap();
        let p = orbit_sum(&z, &q).unwrap();
        assert_eq!(p.len(), 10);
        assert!(is_invariant_class(&p, &q, Group::Sigma).unwrap());
        assert!(!is_invariant_class(&p, &q, Group::GL).unwrap());
        assert!(orbit_sum(&Monomial::new(&[2, 0, 0, 0, 0]).unwrap(), &q).is_err());
    }

    #[test]
    fn group_names() {
        assert_eq!("sigma".parse::<Group>().unwrap(), Group::Sigma);
        assert_eq!("GL".parse::<Group>().unwrap(), Group::GL);
        assert!("so".parse::<Group>().is_err());
        assert_eq!(Group::Sigma.generators(5).unwrap().len(), 4);
    }

    #[test]
    fn submodules() {
        let q = admissible_basis(5, 2).unwrap();
        let z = Monomial::new(&[1, 1, 0, 0, 0]).unwrap();
        let span = orbit_span(&[z], &q).unwrap();
        assert_eq!(span.rank(), 10);
        assert_eq!(submodule_monomials(&[z], &q).unwrap().len(), 10);
        assert_eq!(submodule_sum(&z, &q).unwrap(), orbit_sum(&z, &q).unwrap());
        let fixed = invariants_in(&span, &q, Group::Sigma).unwrap();
        assert_eq!(fixed, invariants(&q, Group::Sigma).unwrap());
        assert_eq!(invariants_in(&span, &q, Group::GL).unwrap().rank(), 0);
        assert_eq!(
            invariants_in(&EchelonBasis::new(10), &q, Group::Sigma).unwrap().rank(),
            0
        );
    }
}
