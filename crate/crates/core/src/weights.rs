//! Weight vectors, the admissible order, spikes and the numerical functions
//! `mu`, `alpha`, `zeta` and `t(k, d)`.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{check_k, Monomial, LEVELS, MAX_VARS};

/// `(w_1, w_2, ...)`: `w_i` counts the exponents with bit `i - 1` set.
///
/// Stored with trailing zeros trimmed, so the derived order on the entries is
/// the left-lexicographic order with zero padding.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<u32>", into = "Vec<u32>")]
pub struct WeightVector(Vec<u32>);

impl From<Vec<u32>> for WeightVector {
    fn from(v: Vec<u32>) -> Self {
        WeightVector::new(v)
    }
}

impl From<WeightVector> for Vec<u32> {
    fn from(w: WeightVector) -> Self {
        w.0
    }
}

impl WeightVector {
    pub fn new(mut entries: Vec<u32>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        WeightVector(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Entry `w_i`, 1-indexed; zero past the end.
    pub fn get(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `sum 2^(i-1) w_i`.
    pub fn degree(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &w)| (w as u64) << i).sum()
    }

    /// True when `w_1 >= w_2 >= ...`, the shape of a spike's weight.
    pub fn is_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    fn from_counts(c: &[u8; LEVELS]) -> Self {
        WeightVector::new(c.iter().map(|&x| x as u32).collect())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for WeightVector {
    type Err = Error;

    /// Accepts `(3,2,2,1)`, `3,2,2,1` or `3 2 2 1`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::Parse(String::from("weight entries are non-negative integers")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WeightVector::new(entries))
    }
}

pub fn weight_vector(x: &Monomial) -> WeightVector {
    WeightVector::from_counts(&x.weight_counts())
}

/// The admissible order: weight vector first, then the exponent sequence,
/// both left-lexicographic.
pub fn admissible_cmp(x: &Monomial, y: &Monomial) -> Result<Ordering> {
    if x.k() != y.k() {
        return Err(Error::VariableMismatch {
            left: x.k(),
            right: y.k(),
        });
    }
    if x.degree() != y.degree() {
        return Err(Error::DegreeMismatch {
            left: x.degree(),
            right: y.degree(),
        });
    }
    Ok(x.cmp_admissible(y))
}

/// Number of ones in the binary expansion.
pub fn alpha(n: u64) -> u32 {
    n.count_ones()
}

/// Exponent of the largest power of 2 dividing `n`.
pub fn zeta(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::UndefinedAtZero("zeta"));
    }
    Ok(n.trailing_zeros())
}

/// Least `r` with `n = sum_{i <= r} (2^{u_i} - 1)`, `u_i > 0`.
pub fn mu(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::UndefinedAtZero("mu"));
    }
    let n = n as usize;
    let mut best = alloc::vec![u32::MAX; n + 1];
    best[0] = 0;
    for m in 1..=n {
        let mut u = 1;
        while (1usize << u) - 1 <= m {
            let prev = best[m - ((1usize << u) - 1)];
            if prev != u32::MAX {
                best[m] = best[m].min(prev + 1);
            }
            u += 1;
        }
    }
    Ok(best[n])
}

/// `max(0, k - alpha(d + k) - zeta(d + k))`.
pub fn t_kd(k: u64, d: u64) -> u64 {
    let m = d + k;
    if m == 0 {
        return 0;
    }
    k.saturating_sub(alpha(m) as u64 + m.trailing_zeros() as u64)
}

/// True when every exponent has the form `2^t - 1`.
pub fn is_spike(x: &Monomial) -> bool {
    x.exponents().iter().all(|&e| e & e.wrapping_add(1) == 0)
}

/// Multisets `{2^{t_1} - 1 >= 2^{t_2} - 1 >= ...}` of nonzero parts with
/// `min_parts..=max_parts` entries summing to `n`, each given as its `t`
/// sequence.
fn spike_shapes(n: u32, min_parts: usize, max_parts: usize) -> Vec<Vec<u32>> {
    fn rec(left: u32, cap: u32, parts: &mut Vec<u32>, min: usize, max: usize, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            if parts.len() >= min {
                out.push(parts.clone());
            }
            return;
        }
        if parts.len() == max {
            return;
        }
        let room = (max - parts.len()) as u64;
        if room * ((1u64 << cap) - 1) < left as u64 {
            return;
        }
        for t in (1..=cap).rev() {
            let part = (1u32 << t) - 1;
            if part <= left {
                parts.push(t);
                rec(left - part, t, parts, min, max, out);
                parts.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, LEVELS as u32, &mut Vec::new(), min_parts, max_parts, &mut out);
    out
}

fn spike_from_shape(k: usize, shape: &[u32]) -> Monomial {
    let mut e = [0u16; MAX_VARS];
    for (slot, &t) in e.iter_mut().zip(shape) {
        *slot = ((1u32 << t) - 1) as u16;
    }
    Monomial::from_array(k, e)
}

/// Every spike of degree `n` in `k` variables, ascending.
pub fn spikes_of_degree(k: usize, n: u32) -> Result<Vec<Monomial>> {
    check_k(k)?;
    let mut out = Vec::new();
    for shape in spike_shapes(n, 0, k) {
        let base = spike_from_shape(k, &shape);
        permutations_of(&base, &mut out);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// All distinct rearrangements of the exponents of `m`.
fn permutations_of(m: &Monomial, out: &mut Vec<Monomial>) {
    let k = m.k();
    let mut e: Vec<u16> = m.exponents().to_vec();
    e.sort_unstable();
    loop {
        let mut a = [0u16; MAX_VARS];
        a[..k].copy_from_slice(&e);
        out.push(Monomial::from_array(k, a));
        // next lexicographic permutation
        let Some(i) = (1..k).rev().find(|&i| e[i - 1] < e[i]) else {
            break;
        };
        let j = (i..k).rev().find(|&j| e[j] > e[i - 1]).unwrap();
        e.swap(i - 1, j);
        e[i..].reverse();
    }
}

/// The spike of least weight in degree `n`, exponents decreasing along the
/// variables, e.g. `x1^7 x2 x3` in degree 9.
///
/// Its weight vector is the minimum over all spikes, and every monomial of
/// strictly smaller weight is hit.
pub fn minimal_spike(n: u32, k: usize) -> Result<Monomial> {
    check_k(k)?;
    if n == 0 {
        return Monomial::one(k);
    }
    let r = mu(n as u64)?;
    if r as usize > k {
        return Err(Error::NoSpike { n, k, mu: r });
    }
    let shapes = spike_shapes(n, r as usize, r as usize);
    let best = shapes
        .iter()
        .map(|s| spike_from_shape(k, s))
        .min_by(|a, b| {
            a.weight_counts()
                .cmp(&b.weight_counts())
                .then_with(|| a.cmp_admissible(b))
        })
        .ok_or(Error::NoSpike { n, k, mu: r })?;
    Ok(best)
}

/// Singer's criterion: true when `w(x)` is below the weight of the minimal
/// spike, which certifies that `x` is hit.
pub fn singer_filter(x: &Monomial) -> Result<bool> {
    let z = minimal_spike(x.degree(), x.k())?;
    Ok(x.weight_counts() < z.weight_counts())
}

/// Weight vectors `w` of degree `n` with every `w_i <= k`, ascending.
pub fn weight_vectors_of_degree(k: usize, n: u32) -> Vec<WeightVector> {
    fn rec(level: usize, left: u32, k: u32, cur: &mut Vec<u32>, out: &mut Vec<WeightVector>) {
        if left == 0 {
            out.push(WeightVector::new(cur.clone()));
            return;
        }
        if level == LEVELS {
            return;
        }
        let mut w = left & 1;
        while w <= k.min(left) {
            cur.push(w);
            rec(level + 1, (left - w) / 2, k, cur, out);
            cur.pop();
            w += 2;
        }
    }
    let mut out = Vec::new();
    rec(0, n, k as u32, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Monomials of weight exactly `w` in `k` variables, ascending. Built level
/// by level: at level `i` a set of `w_i` variables receives the bit
/// `2^(i-1)`.
pub fn monomials_of_weight(k: usize, w: &WeightVector) -> Result<Vec<Monomial>> {
    check_k(k)?;
    if w.len() > LEVELS || w.entries().iter().any(|&c| c as usize > k) {
        return Ok(Vec::new());
    }
    let subsets: Vec<Vec<u32>> = w
        .entries()
        .iter()
        .map(|&c| (0u32..1 << k).filter(|s| s.count_ones() == c).collect())
        .collect();
    let mut out = Vec::new();
    let mut exps = [0u16; MAX_VARS];
    fn rec(level: usize, subsets: &[Vec<u32>], k: usize, exps: &mut [u16; MAX_VARS], out: &mut Vec<Monomial>) {
        if level == subsets.len() {
            out.push(Monomial::from_array(k, *exps));
            return;
        }
        for &s in &subsets[level] {
            for (j, e) in exps.iter_mut().enumerate().take(k) {
                if s >> j & 1 == 1 {
                    *e |= 1 << level;
                }
            }
            rec(level + 1, subsets, k, exps, out);
            for (j, e) in exps.iter_mut().enumerate().take(k) {
                if s >> j & 1 == 1 {
                    *e &= !(1 << level);
                }
            }
        }
    }
    rec(0, &subsets, k, &mut exps, &mut out);
    out.sort_unstable();
    Ok(out)
}

/// Monomials of `P_k(w)` split into those of weight exactly `w` and those of
/// strictly smaller weight (the spanning set of `P_k^-(w)`), both ascending.
pub fn weight_block(k: usize, w: &WeightVector) -> Result<(Vec<Monomial>, Vec<Monomial>)> {
    check_k(k)?;
    let n = u32::try_from(w.degree()).map_err(|_| Error::ExponentOverflow)?;
    let equal = monomials_of_weight(k, w)?;
    let mut lower = Vec::new();
    for v in weight_vectors_of_degree(k, n) {
        if &v < w {
            lower.extend(monomials_of_weight(k, &v)?);
        }
    }
    lower.sort_unstable();
    Ok((equal, lower))
}
