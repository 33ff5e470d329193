//! Hit spaces and admissible bases.
//!
//! Columns are the monomials of one degree sorted descending, so a row of the
//! reduced echelon basis of the hit space reads `x + (smaller monomials)`
//! with `x` its pivot: `x` is congruent modulo hit elements to a sum of
//! smaller monomials, i.e. inadmissible. Conversely a monomial that is not a
//! pivot admits no such relation, since any hit polynomial with leading term
//! `x` would put `x` among the pivots. The admissible monomials are therefore
//! exactly the non-pivot columns.
//!
//! Monomials of weight below the minimal spike's are hit, so by default only
//! the leading columns with weight at least that are eliminated (the *active*
//! prefix); the remaining columns are pivots with unit rows, left implicit.
//!
//! For a weight vector `w`, `QP_k(w)` is `P_k(w)` modulo hit elements and
//! lower-weight monomials. Every hit polynomial of weight at most `w` has its
//! weight-`w` part among the rows of the full basis whose pivot has weight
//! `w`, so `dim QP_k(w)` counts the admissible monomials of weight `w`.

use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::error::{Error, Result};
use crate::gf2::{BitVec, ColumnIndex, EchelonBasis};
use crate::monomial::{check_k, monomials_of_degree, Monomial};
use crate::poly::Polynomial;
use crate::ring_map::RingMap;
use crate::steenrod::hit_generators;
pub use crate::steenrod::GeneratorSet;
use crate::weights::{minimal_spike, monomials_of_weight, mu, weight_vector, weight_vectors_of_degree, WeightVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SolverOptions {
    /// Skip the columns below the minimal spike's weight (they are hit).
    pub singer_prefilter: bool,
    pub generators: GeneratorSet,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            singer_prefilter: true,
            generators: GeneratorSet::PowersOfTwo,
        }
    }
}

/// `(QP_k)_n`, or `QP_k(w)` when a weight is set, with the hit relations in
/// reduced echelon form.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    k: usize,
    n: u32,
    weight: Option<WeightVector>,
    columns: ColumnIndex,
    active: usize,
    hit: EchelonBasis,
    admissible: Vec<Monomial>,
    coordinate_of_column: Vec<u32>,
}

const NOT_ADMISSIBLE: u32 = u32::MAX;

impl QuotientBasis {
    fn assemble(
        k: usize,
        n: u32,
        weight: Option<WeightVector>,
        columns: ColumnIndex,
        active: usize,
        hit: EchelonBasis,
    ) -> Self {
        debug_assert_eq!(hit.ncols(), active);
        let free = hit.free_columns();
        let mut coordinate_of_column = alloc::vec![NOT_ADMISSIBLE; active];
        // ascending order is the reverse of column order
        for (coord, &c) in free.iter().rev().enumerate() {
            coordinate_of_column[c] = coord as u32;
        }
        let admissible = free.iter().rev().map(|&c| columns.column(c)).collect();
        QuotientBasis {
            k,
            n,
            weight,
            columns,
            active,
            hit,
            admissible,
            coordinate_of_column,
        }
    }

    /// Rebuilds from stored echelon rows over the active columns.
    pub fn from_parts(
        k: usize,
        n: u32,
        weight: Option<WeightVector>,
        active: usize,
        rows: Vec<BitVec>,
    ) -> Result<Self> {
        let columns = match &weight {
            None => degree_columns(k, n)?,
            Some(w) => {
                if w.degree() != n as u64 {
                    return Err(Error::DegreeMismatch {
                        left: n,
                        right: w.degree() as u32,
                    });
                }
                ColumnIndex::new(monomials_of_weight(k, w)?)
            }
        };
        if active > columns.len() {
            return Err(Error::IndexOutOfRange {
                index: active,
                bound: columns.len(),
            });
        }
        let hit = EchelonBasis::from_reduced_rows(active, rows)?;
        Ok(QuotientBasis::assemble(k, n, weight, columns, active, hit))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn weight(&self) -> Option<&WeightVector> {
        self.weight.as_ref()
    }

    pub fn columns(&self) -> &ColumnIndex {
        &self.columns
    }

    /// Number of leading columns carried by [`QuotientBasis::hit`]; the
    /// columns after them are hit.
    pub fn active(&self) -> usize {
        self.active
    }

    /// Echelon basis of the hit relations over the active columns.
    pub fn hit(&self) -> &EchelonBasis {
        &self.hit
    }

    /// Dimension of the hit space (or of the modulus, for a weight block).
    pub fn hit_rank(&self) -> usize {
        self.hit.rank() + (self.columns.len() - self.active)
    }

    /// Admissible monomials, ascending.
    pub fn admissible(&self) -> &[Monomial] {
        &self.admissible
    }

    pub fn dim(&self) -> usize {
        self.admissible.len()
    }

    /// Position of `m` in [`QuotientBasis::admissible`].
    pub fn admissible_index(&self, m: &Monomial) -> Option<usize> {
        let c = self.columns.position(m)?;
        match self.coordinate_of_column.get(c) {
            Some(&i) if i != NOT_ADMISSIBLE => Some(i as usize),
            _ => None,
        }
    }

    pub fn is_admissible(&self, m: &Monomial) -> bool {
        self.admissible_index(m).is_some()
    }

    /// The full echelon basis of the hit space over all columns, with the
    /// implicit unit rows written out.
    pub fn full_hit_basis(&self) -> Result<EchelonBasis> {
        let total = self.columns.len();
        let rows = self
            .hit
            .canonical_rows()
            .into_iter()
            .map(|r| r.resized(total))
            .chain((self.active..total).map(|c| BitVec::unit(total, c)));
        EchelonBasis::from_rows(total, rows)
    }

    fn check_poly(&self, f: &Polynomial) -> Result<()> {
        if f.k() != self.k {
            return Err(Error::VariableMismatch {
                left: self.k,
                right: f.k(),
            });
        }
        if !f.is_zero() && f.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: f.degree(),
            });
        }
        Ok(())
    }

    /// `f` over the active columns, dropping hit columns and, for a weight
    /// block, terms of lower weight.
    fn active_vector(&self, f: &Polynomial) -> Result<BitVec> {
        self.check_poly(f)?;
        let mut v = BitVec::zeros(self.active);
        for m in f.terms() {
            match self.columns.position(m) {
                Some(c) if c < self.active => v.flip(c),
                Some(_) => {}
                None => {
                    let w = self
                        .weight
                        .as_ref()
                        .expect("full columns hold every monomial of the degree");
                    if &weight_vector(m) > w {
                        return Err(Error::AboveWeight(m.to_text()));
                    }
                }
            }
        }
        Ok(v)
    }

    /// Coordinates of the class of `f` on the admissible basis; zero exactly
    /// when `f` is hit (for a block: hit modulo lower weights).
    pub fn coordinates(&self, f: &Polynomial) -> Result<BitVec> {
        let v = self.active_vector(f)?;
        let r = self.hit.reduce(&v)?;
        let mut out = BitVec::zeros(self.dim());
        for c in r.ones() {
            out.set(self.coordinate_of_column[c] as usize, true);
        }
        Ok(out)
    }

    pub fn is_hit(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.coordinates(f)?.is_zero())
    }

    /// The sum of admissible monomials named by `coords`.
    pub fn polynomial_of(&self, coords: &BitVec) -> Result<Polynomial> {
        if coords.len() != self.dim() {
            return Err(Error::LengthMismatch {
                expected: self.dim(),
                got: coords.len(),
            });
        }
        Polynomial::from_terms(self.k, self.n, coords.ones().map(|i| self.admissible[i]))
    }

    /// The admissible representative of the class of `f`.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.polynomial_of(&self.coordinates(f)?)
    }

    /// `QP_k(w)` read off this full basis: the rows whose pivot has weight
    /// `w`, restricted to the weight-`w` columns.
    pub fn weight_part(&self, w: &WeightVector) -> Result<QuotientBasis> {
        if self.weight.is_some() {
            return Err(Error::AboveWeight(alloc::format!("{w} from a weight block")));
        }
        if w.degree() != self.n as u64 {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: w.degree() as u32,
            });
        }
        let cols = self.columns.columns();
        let start = cols.iter().position(|m| &weight_vector(m) == w).unwrap_or(cols.len());
        let end = start + cols[start..].iter().take_while(|m| &weight_vector(m) == w).count();
        let block = ColumnIndex::new(cols[start..end].to_vec());
        let width = end - start;
        let hit = if end <= self.active {
            let rows = self
                .hit
                .rows()
                .iter()
                .zip(self.hit.pivots())
                .filter(|(_, &p)| p >= start && p < end)
                .map(|(r, _)| r.slice(start, end));
            EchelonBasis::from_rows(width, rows)?
        } else if start >= self.active {
            EchelonBasis::from_rows(width, (0..width).map(|c| BitVec::unit(width, c)))?
        } else {
            // the cut between active and hit columns runs inside one weight;
            // cannot happen, the cut sits at a weight boundary
            return Err(Error::AboveWeight(alloc::format!("{w} straddles the active cut")));
        };
        Ok(QuotientBasis::assemble(
            self.k,
            self.n,
            Some(w.clone()),
            block,
            width,
            hit,
        ))
    }
}

/// Monomials of degree `n`, as descending columns.
pub fn degree_columns(k: usize, n: u32) -> Result<ColumnIndex> {
    Ok(ColumnIndex::new(monomials_of_degree(k, n)?))
}

/// Encodes generators over the first `width` columns and sorts them sparse
/// first; the result of elimination does not depend on the order.
fn encode(columns: &ColumnIndex, width: usize, gens: &[Polynomial]) -> Vec<BitVec> {
    let one = |g: &Polynomial| {
        let mut v = BitVec::zeros(width);
        for m in g.terms() {
            if let Some(c) = columns.position(m) {
                if c < width {
                    v.flip(c);
                }
            }
        }
        v
    };
    let vecs: Vec<BitVec> = crate::par_map(gens, one);
    let mut keyed: Vec<(usize, usize, BitVec)> = vecs
        .into_iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (v.count_ones(), i, v))
        .collect();
    keyed.sort_unstable_by_key(|&(c, i, _)| (c, i));
    keyed.into_iter().map(|(_, _, v)| v).collect()
}

/// Number of leading columns with weight at least the minimal spike's.
fn singer_cut(columns: &ColumnIndex, k: usize, n: u32) -> Result<usize> {
    let z = minimal_spike(n, k)?;
    let wz = weight_vector(&z);
    Ok(columns.columns().iter().take_while(|m| weight_vector(m) >= wz).count())
}

fn trivial_degree_zero(k: usize, weight: Option<WeightVector>) -> Result<QuotientBasis> {
    let columns = ColumnIndex::new(alloc::vec![Monomial::one(k)?]);
    Ok(QuotientBasis::assemble(k, 0, weight, columns, 1, EchelonBasis::new(1)))
}

/// `(QP_k)_n` from an explicit generating list of the hit space.
pub fn admissible_basis_from_generators(
    k: usize,
    n: u32,
    gens: &[Polynomial],
    opts: &SolverOptions,
) -> Result<QuotientBasis> {
    check_k(k)?;
    if n == 0 {
        return trivial_degree_zero(k, None);
    }
    let columns = degree_columns(k, n)?;
    let active = if !opts.singer_prefilter {
        columns.len()
    } else if mu(n as u64)? as usize > k {
        0
    } else {
        singer_cut(&columns, k, n)?
    };
    let rows = encode(&columns, active, gens);
    let hit = EchelonBasis::from_rows(active, rows)?;
    Ok(QuotientBasis::assemble(k, n, None, columns, active, hit))
}

pub fn admissible_basis_with(k: usize, n: u32, opts: &SolverOptions) -> Result<QuotientBasis> {
    check_k(k)?;
    if n == 0 {
        return trivial_degree_zero(k, None);
    }
    if opts.singer_prefilter && mu(n as u64)? as usize > k {
        // Wood: everything is hit
        return admissible_basis_from_generators(k, n, &[], opts);
    }
    let gens = hit_generators(k, n, opts.generators)?;
    admissible_basis_from_generators(k, n, &gens, opts)
}

/// Admissible basis of `(QP_k)_n`.
pub fn admissible_basis(k: usize, n: u32) -> Result<QuotientBasis> {
    admissible_basis_with(k, n, &SolverOptions::default())
}

/// Echelon basis of the hit elements of degree `n` over all degree-`n`
/// monomials.
pub fn hit_space(k: usize, n: u32) -> Result<EchelonBasis> {
    admissible_basis(k, n)?.full_hit_basis()
}

/// `QP_k(w)` computed on its own: generators are projected to the columns of
/// weight at least `w`, eliminated, and the rows with pivot of weight `w` are
/// kept.
pub fn weight_quotient_with(k: usize, w: &WeightVector, opts: &SolverOptions) -> Result<QuotientBasis> {
    check_k(k)?;
    let n = u32::try_from(w.degree()).map_err(|_| Error::ExponentOverflow)?;
    if n == 0 {
        return trivial_degree_zero(k, Some(w.clone()));
    }
    let block = ColumnIndex::new(monomials_of_weight(k, w)?);
    let width = block.len();
    let all_hit = |block: ColumnIndex| -> Result<QuotientBasis> {
        let hit = EchelonBasis::from_rows(width, (0..width).map(|c| BitVec::unit(width, c)))?;
        Ok(QuotientBasis::assemble(k, n, Some(w.clone()), block, width, hit))
    };
    if width == 0 {
        return all_hit(block);
    }
    if opts.singer_prefilter {
        if mu(n as u64)? as usize > k {
            return all_hit(block);
        }
        let z = minimal_spike(n, k)?;
        if w < &weight_vector(&z) {
            return all_hit(block);
        }
    }
    let mut upper = Vec::new();
    for v in weight_vectors_of_degree(k, n) {
        if &v >= w {
            upper.extend(monomials_of_weight(k, &v)?);
        }
    }
    let columns = ColumnIndex::new(upper);
    let start = columns.len() - width;
    let gens = hit_generators(k, n, opts.generators)?;
    let rows = encode(&columns, columns.len(), &gens);
    let mut hit = EchelonBasis::new(columns.len());
    for r in rows {
        hit.push_semi(r);
    }
    // semi-echelon rows are zero before their pivot, so these live in the block
    let harvested = hit
        .rows()
        .iter()
        .zip(hit.pivots())
        .filter(|(_, &p)| p >= start)
        .map(|(r, _)| r.slice(start, columns.len()));
    let modulus = EchelonBasis::from_rows(width, harvested)?;
    Ok(QuotientBasis::assemble(k, n, Some(w.clone()), block, width, modulus))
}

pub fn weight_quotient(k: usize, w: &WeightVector) -> Result<QuotientBasis> {
    weight_quotient_with(k, w, &SolverOptions::default())
}

/// Admissible monomials with some zero exponent, and with none.
pub fn split_zero_plus(q: &QuotientBasis) -> (Vec<Monomial>, Vec<Monomial>) {
    q.admissible().iter().partition(|m| m.has_zero_exponent())
}

/// `f_i: P_{k-1} -> P_k`, with `k - 1` the variable count of `f`.
pub fn f_embed(i: usize, f: &Polynomial) -> Result<Polynomial> {
    RingMap::embed(f.k() + 1, i)?.apply(f)
}

/// `p_(i;j): P_k -> P_{k-1}`, with `k` the variable count of `f`.
pub fn p_restrict(i: usize, j: usize, f: &Polynomial) -> Result<Polynomial> {
    RingMap::restrict(f.k(), i, j)?.apply(f)
}

/// `f_i(B_{k-1}(n))` over `i = 1..=k`, ascending without repeats: the
/// admissible monomials of `P_k` with a zero exponent.
pub fn embedded_basis(lower: &QuotientBasis) -> Result<Vec<Monomial>> {
    let k = lower.k() + 1;
    check_k(k)?;
    let mut out = Vec::new();
    for i in 1..=k {
        let f = RingMap::embed(k, i)?;
        for m in lower.admissible() {
            out.extend(f.apply_monomial(m)?.into_terms());
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Counts of admissible monomials by weight vector, ascending by weight.
pub fn weight_profile(q: &QuotientBasis) -> Vec<(WeightVector, usize)> {
    let mut counts: HashMap<WeightVector, usize> = HashMap::new();
    for m in q.admissible() {
        *counts.entry(weight_vector(m)).or_default() += 1;
    }
    let mut out: Vec<_> = counts.into_iter().collect();
    out.sort();
    out
}
