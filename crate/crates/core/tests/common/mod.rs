//! Naive reference implementations shared by the integration tests. Nothing
//! here calls into the crate's Steenrod or elimination code.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use hitprob_core::{Monomial, Polynomial};
use rand::Rng;

pub type Exps = Vec<u32>;
/// A polynomial over F2 as the set of its monomials.
pub type Naive = BTreeSet<Exps>;

/// Exact binomial coefficient, parity taken afterwards.
pub fn binom_odd(a: u32, t: u32) -> bool {
    if t > a {
        return false;
    }
    let mut c: u128 = 1;
    for j in 0..t as u128 {
        c = c * (a as u128 - j) / (j + 1);
    }
    c % 2 == 1
}

fn toggle(p: &mut Naive, e: Exps) {
    if !p.remove(&e) {
        p.insert(e);
    }
}

/// `Sq^i` of a monomial straight from the Cartan formula, one variable at a
/// time.
pub fn sq_mono(i: u32, e: &[u32]) -> Naive {
    let mut out = Naive::new();
    fn rec(j: usize, left: u32, e: &[u32], cur: &mut Exps, out: &mut Naive) {
        if j == e.len() {
            if left == 0 {
                toggle(out, cur.clone());
            }
            return;
        }
        for t in 0..=left.min(e[j]) {
            if binom_odd(e[j], t) {
                cur.push(e[j] + t);
                rec(j + 1, left - t, e, cur, out);
                cur.pop();
            }
        }
    }
    rec(0, i, e, &mut Vec::new(), &mut out);
    out
}

pub fn sq_naive(i: u32, p: &Naive) -> Naive {
    let mut out = Naive::new();
    for e in p {
        for t in sq_mono(i, e) {
            toggle(&mut out, t);
        }
    }
    out
}

/// Exponent vectors of degree `n` in `k` variables, in no particular order.
pub fn exps_of_degree(k: usize, n: u32) -> Vec<Exps> {
    fn rec(k: usize, left: u32, cur: &mut Exps, out: &mut Vec<Exps>) {
        if cur.len() + 1 == k {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in 0..=left {
            cur.push(a);
            rec(k, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, n, &mut Vec::new(), &mut out);
    out
}

/// Weight vector then exponents, both left-lexicographic.
pub fn naive_key(e: &[u32]) -> (Vec<u32>, Exps) {
    let top = e.iter().map(|&a| 32 - a.leading_zeros()).max().unwrap_or(0);
    let w = (0..top)
        .map(|b| e.iter().filter(|&&a| a >> b & 1 == 1).count() as u32)
        .collect();
    (w, e.to_vec())
}

pub fn to_mono(e: &[u32]) -> Monomial {
    Monomial::new(e).unwrap()
}

pub fn to_exps(m: &Monomial) -> Exps {
    m.exponents().iter().map(|&a| a as u32).collect()
}

pub fn to_poly(k: usize, degree: u32, p: &Naive) -> Polynomial {
    Polynomial::from_terms(k, degree, p.iter().map(|e| to_mono(e))).unwrap()
}

pub fn to_naive(p: &Polynomial) -> Naive {
    p.terms().iter().map(to_exps).collect()
}

pub fn random_mono(rng: &mut impl Rng, k: usize, n: u32) -> Monomial {
    let mut e = vec![0u32; k];
    for _ in 0..n {
        e[rng.gen_range(0..k)] += 1;
    }
    to_mono(&e)
}

/// A random polynomial of degree `n` with up to `terms` terms.
pub fn random_poly(rng: &mut impl Rng, k: usize, n: u32, terms: usize) -> Polynomial {
    let count = rng.gen_range(0..=terms);
    Polynomial::from_terms(k, n, (0..count).map(|_| random_mono(rng, k, n))).unwrap()
}

/// `a + b`, treating a zero polynomial of any degree as neutral.
pub fn sum(a: &Polynomial, b: &Polynomial) -> Polynomial {
    a.add(b).unwrap()
}

/// Rank of a set of `u128` rows by plain elimination.
pub fn rank(rows: &[u128]) -> usize {
    let mut basis: Vec<u128> = Vec::new();
    for &r in rows {
        let mut v = r;
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// Admissible monomials straight from the definition: `x` is admissible
/// unless it lies in the span of the hit elements and the smaller monomials.
pub fn oracle(k: usize, n: u32) -> BTreeSet<Exps> {
    let mut monos = exps_of_degree(k, n);
    monos.sort_by_key(|e| naive_key(e));
    assert!(monos.len() <= 128);
    let index: HashMap<Exps, usize> = monos.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let mut hit = Vec::new();
    for i in 1..=n {
        for src in exps_of_degree(k, n - i) {
            let row = sq_mono(i, &src).iter().fold(0u128, |acc, e| acc | 1 << index[e]);
            hit.push(row);
        }
    }
    let mut out = BTreeSet::new();
    for (x, e) in monos.iter().enumerate() {
        let mut rows = hit.clone();
        rows.extend((0..x).map(|y| 1u128 << y));
        let without = rank(&rows);
        rows.push(1 << x);
        if rank(&rows) > without {
            out.insert(e.clone());
        }
    }
    out
}
