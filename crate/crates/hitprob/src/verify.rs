//! Recomputes the published degree 9, 10 and 23 results and compares them
//! with the shipped reference lists.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use hitprob_core::invariants::invariants_within;
use hitprob_core::solver::{embedded_basis, split_zero_plus};
use hitprob_core::text::{format_monomial, parse_monomial};
use hitprob_core::weights::weight_vectors_of_degree;
use hitprob_core::{
    invariants, invariants_in, is_invariant_class, orbit_span, psi, stability_report, submodule_sum, BitVec,
    EchelonBasis, Group, KamekoMap, Monomial, Polynomial, QuotientBasis, WeightVector,
};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::engine::Engine;
use crate::fixtures::{FixtureError, FixtureSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    All,
    Degree9,
    Degree10,
    Degree23,
    Invariants,
}

impl Scope {
    pub const NAMES: [&'static str; 5] = ["all", "degree9", "degree10", "degree23", "invariants"];

    fn includes(self, degree: u32, about_invariants: bool) -> bool {
        match self {
            Scope::All => true,
            Scope::Degree9 => degree <= 9,
            Scope::Degree10 => degree == 10,
            Scope::Degree23 => degree == 23,
            Scope::Invariants => about_invariants,
        }
    }
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "all" => Ok(Scope::All),
            "degree9" => Ok(Scope::Degree9),
            "degree10" => Ok(Scope::Degree10),
            "degree23" => Ok(Scope::Degree23),
            "invariants" => Ok(Scope::Invariants),
            _ => Err(format!(
                "unknown scope {s:?}, expected one of {}",
                Scope::NAMES.join(", ")
            )),
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [
            Scope::All,
            Scope::Degree9,
            Scope::Degree10,
            Scope::Degree23,
            Scope::Invariants,
        ]
        .iter()
        .position(|s| s == self)
        .unwrap_or(0);
        f.write_str(Scope::NAMES[i])
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub degree: u32,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
    pub wall_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub scope: Scope,
    pub pass: bool,
    pub passed: usize,
    pub failed: usize,
    pub claims: Vec<Claim>,
    pub wall_ms: f64,
}

impl VerificationReport {
    /// 0 when every claim passes, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }
}

#[derive(Debug)]
enum Failure {
    Fixture(FixtureError),
    Compute(hitprob_core::Error),
}

impl From<FixtureError> for Failure {
    fn from(e: FixtureError) -> Self {
        Failure::Fixture(e)
    }
}

impl From<hitprob_core::Error> for Failure {
    fn from(e: hitprob_core::Error) -> Self {
        Failure::Compute(e)
    }
}

type Computed = Result<Value, Failure>;

struct Runner<'a> {
    scope: Scope,
    engine: &'a Engine,
    fixtures: &'a FixtureSet,
    claims: Vec<Claim>,
}

impl Runner<'_> {
    fn check(
        &mut self,
        degree: u32,
        about_invariants: bool,
        id: &str,
        expected: Value,
        compute: impl FnOnce(&Engine, &FixtureSet) -> Computed,
    ) -> Result<(), FixtureError> {
        if !self.scope.includes(degree, about_invariants) {
            return Ok(());
        }
        let start = Instant::now();
        let computed = match compute(self.engine, self.fixtures) {
            Ok(v) => v,
            Err(Failure::Fixture(e)) => return Err(e),
            Err(Failure::Compute(e)) => json!({ "error": e.to_string() }),
        };
        self.claims.push(Claim {
            id: id.to_string(),
            degree,
            pass: computed == expected,
            expected,
            computed,
            wall_ms: start.elapsed().as_secs_f64() * 1e3,
        });
        Ok(())
    }
}

fn mono(k: usize, s: &str) -> Monomial {
    parse_monomial(k, s).expect("built-in monomial text")
}

fn weight(s: &str) -> WeightVector {
    s.parse().expect("built-in weight text")
}

fn positive(q: &QuotientBasis) -> Vec<Monomial> {
    q.admissible()
        .iter()
        .copied()
        .filter(|m| !m.has_zero_exponent())
        .collect()
}

/// `{count, missing, extra}` of a computed set against a reference list.
fn compare_sets(computed: &[Monomial], reference: &[Monomial]) -> Value {
    let got: BTreeSet<_> = computed.iter().collect();
    let want: BTreeSet<_> = reference.iter().collect();
    let text = |s: Vec<&&Monomial>| s.into_iter().map(|m| format_monomial(m)).collect::<Vec<_>>();
    json!({
        "count": computed.len(),
        "missing": text(want.difference(&got).collect()),
        "extra": text(got.difference(&want).collect()),
    })
}

fn set_expected(count: usize) -> Value {
    json!({ "count": count, "missing": [], "extra": [] })
}

fn kameko_summary(upper: &QuotientBasis, lower: &QuotientBasis) -> Computed {
    let map = KamekoMap::new(upper, lower)?;
    let section = KamekoMap::section(upper, lower)?;
    let round_trip = map.matrix().mul(&section)?;
    Ok(json!({
        "kernel_dim": map.kernel_dim(),
        "surjective": map.is_surjective(),
        "down_after_section_is_identity": round_trip.is_identity(),
    }))
}

/// Sum of the block dimensions over every weight of the degree, and whether
/// each block agrees with the matching slice of the full basis.
fn block_sum(engine: &Engine, k: usize, n: u32) -> Computed {
    let full = engine.basis(k, n)?;
    let mut sum = 0;
    let mut agree = true;
    for w in weight_vectors_of_degree(k, n) {
        let block = engine.block(k, &w)?;
        sum += block.dim();
        agree &= block.admissible() == full.weight_part(&w)?.admissible();
    }
    Ok(json!({ "sum": sum, "full": full.dim(), "slices_agree": agree }))
}

fn zero_part_via_embeddings(engine: &Engine, k: usize, n: u32) -> Computed {
    let (zero, _) = split_zero_plus(&*engine.basis(k, n)?);
    let lower = engine.basis(k - 1, n)?;
    Ok(json!(embedded_basis(&lower)? == zero))
}

fn span(q: &QuotientBasis, polys: &[Polynomial]) -> Result<EchelonBasis, Failure> {
    let rows = polys
        .iter()
        .map(|p| q.coordinates(p))
        .collect::<Result<Vec<BitVec>, _>>()?;
    Ok(EchelonBasis::from_rows(q.dim(), rows)?)
}

/// Dimension of the invariants, and whether the listed polynomials are each
/// invariant and together span them.
fn invariant_summary(q: &QuotientBasis, group: Group, extra: &[BitVec], listed: &[Polynomial]) -> Computed {
    let inv = invariants_within(q, group, extra)?;
    let each = listed
        .iter()
        .map(|p| is_invariant_class(p, q, group))
        .collect::<Result<Vec<bool>, _>>()?;
    let spanned = span(q, listed)?;
    Ok(json!({
        "dim": inv.rank(),
        "listed_invariant": each,
        "listed_span_equals": spanned == inv,
    }))
}

fn invariant_expected(dim: usize, listed: usize) -> Value {
    json!({ "dim": dim, "listed_invariant": vec![true; listed], "listed_span_equals": true })
}

fn fixture_poly(fixtures: &FixtureSet, id: &str) -> Result<Polynomial, Failure> {
    Ok(fixtures.load(id)?.polynomial())
}

/// `p(z)`: the sum of the admissible monomials whose classes lie in the
/// submodule generated by `z`.
fn orbit(q: &QuotientBasis, z: &str) -> Result<Polynomial, Failure> {
    Ok(submodule_sum(&mono(q.k(), z), q)?)
}

/// Dimension spanned by the submodules generated by each group of
/// monomials, and the invariant dimension inside each.
fn summand_summary(q: &QuotientBasis, pieces: &[&[&str]]) -> Computed {
    let mut total = EchelonBasis::new(q.dim());
    let mut dims = Vec::new();
    for piece in pieces {
        let zs: Vec<Monomial> = piece.iter().map(|z| mono(q.k(), z)).collect();
        let span = orbit_span(&zs, q)?;
        dims.push(invariants_in(&span, q, Group::Sigma)?.rank());
        for row in span.rows() {
            total.insert(row.clone())?;
        }
    }
    Ok(json!({ "span_dim": total.rank(), "invariant_dims": dims }))
}

/// Runs the claims selected by `scope`. Fails only when a reference list is
/// missing or unreadable; computed mismatches are reported as failed claims.
pub fn verify_paper(scope: Scope, fixtures: &FixtureSet, engine: &Engine) -> Result<VerificationReport, FixtureError> {
    let start = Instant::now();
    let mut r = Runner {
        scope,
        engine,
        fixtures,
        claims: Vec::new(),
    };
    degree_two_and_nine(&mut r)?;
    degree_ten(&mut r)?;
    degree_twenty_three(&mut r)?;
    let failed = r.claims.iter().filter(|c| !c.pass).count();
    Ok(VerificationReport {
        scope,
        pass: failed == 0,
        passed: r.claims.len() - failed,
        failed,
        claims: r.claims,
        wall_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

fn reference_set(r: &mut Runner, k: usize, n: u32, id: &str, count: usize) -> Result<(), FixtureError> {
    r.check(
        n,
        false,
        &format!("{id} equals the computed set"),
        set_expected(count),
        |e, f| {
            let q = e.basis(k, n)?;
            Ok(compare_sets(q.admissible(), &f.load(id)?.terms))
        },
    )
}

fn reference_block(r: &mut Runner, id: &str, w: &str, count: usize) -> Result<(), FixtureError> {
    let w = weight(w);
    let n = w.degree() as u32;
    r.check(
        n,
        false,
        &format!("{id} equals the positive part of QP5{w}"),
        set_expected(count),
        |e, f| {
            let q = e.block(5, &w)?;
            Ok(compare_sets(&positive(&q), &f.load(id)?.terms))
        },
    )
}

const U: [&[&str]; 5] = [
    &["x1 x2 x3^7"],
    &["x1^3 x2^3 x3^3"],
    &["x1 x2^3 x3^5"],
    &["x1 x2 x3^2 x4^2 x5^3"],
    &["x1 x2 x3^2 x4^5", "x1 x2^2 x3^3 x4^3"],
];

fn degree_two_and_nine(r: &mut Runner) -> Result<(), FixtureError> {
    reference_set(r, 4, 9, "B4_9", 46)?;
    r.check(2, false, "dim (QP5)_2", json!(10), |e, _| {
        Ok(json!(e.basis(5, 2)?.dim()))
    })?;
    r.check(2, false, "B5(2) is the products x_i x_j", json!(true), |e, _| {
        let q = e.basis(5, 2)?;
        Ok(json!(q
            .admissible()
            .iter()
            .all(|m| m.exponents().iter().all(|&a| a <= 1))))
    })?;
    r.check(9, false, "dim (QP5)_9", json!(191), |e, _| {
        Ok(json!(e.basis(5, 9)?.dim()))
    })?;
    r.check(
        9,
        false,
        "zero and positive parts at degree 9",
        json!([160, 31]),
        |e, _| {
            let (z, p) = split_zero_plus(&*e.basis(5, 9)?);
            Ok(json!([z.len(), p.len()]))
        },
    )?;
    r.check(
        9,
        false,
        "zero part at degree 9 is the image of B4(9)",
        json!(true),
        |e, _| zero_part_via_embeddings(e, 5, 9),
    )?;
    reference_block(r, "B5_plus_311", "(3,1,1)", 6)?;
    reference_block(r, "B5_plus_33", "(3,3)", 15)?;
    reference_block(r, "B5_52", "(5,2)", 10)?;
    r.check(
        9,
        false,
        "weight blocks add up at degree 9",
        json!({"sum": 191, "full": 191, "slices_agree": true}),
        |e, _| block_sum(e, 5, 9),
    )?;
    r.check(9, false, "t(5,2)", json!(2), |_, _| {
        Ok(json!(stability_report(5, 2)?.t))
    })?;
    r.check(
        9,
        false,
        "Kameko map (5,2)",
        json!({"kernel_dim": 181, "surjective": true, "down_after_section_is_identity": true}),
        |e, _| kameko_summary(&*e.basis(5, 9)?, &*e.basis(5, 2)?),
    )?;
    for n in [2, 9] {
        r.check(n, true, &format!("GL5 invariants of (QP5)_{n}"), json!(0), |e, _| {
            Ok(json!(invariants(&*e.basis(5, n)?, Group::GL)?.rank()))
        })?;
    }
    r.check(
        9,
        true,
        "Sigma5 invariants of the Kameko kernel at degree 9",
        invariant_expected(6, 6),
        |e, f| {
            let upper = e.basis(5, 9)?;
            let map = KamekoMap::new(&upper, &*e.basis(5, 2)?)?;
            let mut listed = Vec::new();
            for u in U[..3].iter().map(|p| p[0]) {
                listed.push(orbit(&upper, u)?);
            }
            for id in ["p1", "p2", "p3"] {
                listed.push(fixture_poly(f, id)?);
            }
            invariant_summary(&upper, Group::Sigma, map.matrix().rows(), &listed)
        },
    )?;
    r.check(
        9,
        true,
        "Sigma5 invariants of the summands u1, u2, u3, u4, (u5,u6) at degree 9",
        json!({"span_dim": 181, "invariant_dims": [1, 1, 1, 2, 1]}),
        |e, _| summand_summary(&*e.basis(5, 9)?, &U),
    )?;
    r.check(
        9,
        true,
        "p1, p2, p3 lie in the Kameko kernel",
        json!([true, true, true]),
        |e, f| {
            let upper = e.basis(5, 9)?;
            let map = KamekoMap::new(&upper, &*e.basis(5, 2)?)?;
            let mut out = Vec::new();
            for id in ["p1", "p2", "p3"] {
                let c = upper.coordinates(&fixture_poly(f, id)?)?;
                out.push(map.matrix().mul_vec(&c)?.is_zero());
            }
            Ok(json!(out))
        },
    )?;
    Ok(())
}

fn degree_ten(r: &mut Runner) -> Result<(), FixtureError> {
    reference_set(r, 4, 10, "B4_10", 70)?;
    r.check(10, false, "dim (QP5)_10", json!(280), |e, _| {
        Ok(json!(e.basis(5, 10)?.dim()))
    })?;
    r.check(
        10,
        false,
        "zero and positive parts at degree 10",
        json!([230, 50]),
        |e, _| {
            let (z, p) = split_zero_plus(&*e.basis(5, 10)?);
            Ok(json!([z.len(), p.len()]))
        },
    )?;
    r.check(
        10,
        false,
        "zero part at degree 10 is the image of B4(10)",
        json!(true),
        |e, _| zero_part_via_embeddings(e, 5, 10),
    )?;
    reference_block(r, "B5_plus_221", "(2,2,1)", 5)?;
    reference_block(r, "B5_plus_24", "(2,4)", 5)?;
    reference_block(r, "B5_plus_411", "(4,1,1)", 20)?;
    reference_block(r, "B5_plus_43", "(4,3)", 20)?;
    r.check(
        10,
        false,
        "weight blocks add up at degree 10",
        json!({"sum": 280, "full": 280, "slices_agree": true}),
        |e, _| block_sum(e, 5, 10),
    )?;
    Ok(())
}

const B_BAR: [&[&str]; 2] = [&["x1 x2^3 x3^6 x4^6 x5^7"], &["x1^3 x2^3 x3^5 x4^6 x5^6"]];

const A: [&[&str]; 4] = [
    &["x1 x2^2 x3^2 x4^3 x5^15"],
    &["x1 x2^2 x3^2 x4^7 x5^11"],
    &["x1 x2^3 x3^3 x4^6 x5^10"],
    &["x1 x2^2 x3^3 x4^6 x5^11"],
];

const C: [&[&str]; 7] = [
    &["x1 x2^7 x3^15"],
    &["x1^3 x2^5 x3^15"],
    &["x1^3 x2^7 x3^13"],
    &["x1 x2^2 x3^5 x4^15"],
    &["x1 x2 x3^2 x4^4 x5^15"],
    &[
        "x1 x2^2 x3^7 x4^13",
        "x1 x2^3 x3^5 x4^14",
        "x1 x2^3 x3^6 x4^13",
        "x1 x2^3 x3^7 x4^12",
        "x1^3 x2^5 x3^6 x4^9",
    ],
    &[
        "x1 x2 x3^2 x4^6 x5^13",
        "x1 x2 x3^2 x4^7 x5^12",
        "x1 x2 x3^3 x4^6 x5^12",
        "x1 x2^2 x3^3 x4^4 x5^13",
        "x1 x2^2 x3^3 x4^5 x5^12",
        "x1 x2^2 x3^5 x4^6 x5^9",
        "x1 x2^2 x3^5 x4^7 x5^8",
    ],
];

const OMEGA: [&str; 4] = ["(3,2,2,1)", "(3,4,1,1)", "(3,4,3)", "(3,2,4)"];

fn degree_twenty_three(r: &mut Runner) -> Result<(), FixtureError> {
    reference_set(r, 4, 23, "B4_23", 155)?;
    r.check(23, false, "dim (QP5)_23", json!(1245), |e, _| {
        Ok(json!(e.basis(5, 23)?.dim()))
    })?;
    r.check(23, false, "hit rank at degree 23", json!(16305), |e, _| {
        Ok(json!(e.basis(5, 23)?.hit_rank()))
    })?;
    r.check(
        23,
        false,
        "zero and positive parts at degree 23",
        json!([635, 610]),
        |e, _| {
            let (z, p) = split_zero_plus(&*e.basis(5, 23)?);
            Ok(json!([z.len(), p.len()]))
        },
    )?;
    r.check(
        23,
        false,
        "zero part at degree 23 is the image of B4(23)",
        json!(true),
        |e, _| zero_part_via_embeddings(e, 5, 23),
    )?;
    r.check(
        23,
        false,
        "psi(B5(9)) is admissible at degree 23",
        json!({"count": 191, "admissible": true}),
        |e, _| {
            let upper = e.basis(5, 23)?;
            let images = e
                .basis(5, 9)?
                .admissible()
                .iter()
                .map(psi)
                .collect::<Result<BTreeSet<_>, _>>()?;
            Ok(json!({"count": images.len(), "admissible": images.iter().all(|m| upper.is_admissible(m))}))
        },
    )?;
    reference_block(r, "B5_plus_3221", OMEGA[0], 290)?;
    reference_block(r, "B5_plus_3411", OMEGA[1], 105)?;
    reference_block(r, "B5_plus_343", OMEGA[2], 24)?;
    r.check(
        23,
        false,
        "positive part at degree 23 is psi(B5(9)) and the three lists",
        set_expected(610),
        |e, f| {
            let mut reference: Vec<Monomial> = e.basis(5, 9)?.admissible().iter().map(psi).collect::<Result<_, _>>()?;
            for id in ["B5_plus_3221", "B5_plus_3411", "B5_plus_343"] {
                reference.extend(f.load(id)?.terms);
            }
            Ok(compare_sets(&positive(&*e.basis(5, 23)?), &reference))
        },
    )?;
    r.check(
        23,
        false,
        "dim QP5(w1), QP5(w2), QP5(w3), QP5(w4)",
        json!([925, 105, 24, 0]),
        |e, _| {
            let dims = OMEGA
                .iter()
                .map(|w| Ok(e.block(5, &weight(w))?.dim()))
                .collect::<Result<Vec<_>, Failure>>()?;
            Ok(json!(dims))
        },
    )?;
    r.check(
        23,
        false,
        "x1^3 x2^4 x3^4 x4^5 x5^7 vanishes in QP5(3,2,4)",
        json!(true),
        |e, _| {
            let q = e.block(5, &weight(OMEGA[3]))?;
            Ok(json!(q.is_hit(&mono(5, "x1^3 x2^4 x3^4 x4^5 x5^7").into())?))
        },
    )?;
    r.check(
        23,
        false,
        "weight blocks add up at degree 23",
        json!({"sum": 1245, "full": 1245, "slices_agree": true}),
        |e, _| block_sum(e, 5, 23),
    )?;
    r.check(
        23,
        false,
        "Kameko map (5,9)",
        json!({"kernel_dim": 1054, "surjective": true, "down_after_section_is_identity": true}),
        |e, _| kameko_summary(&*e.basis(5, 23)?, &*e.basis(5, 9)?),
    )?;
    r.check(23, true, "GL5 invariants of (QP5)_23", json!(0), |e, _| {
        Ok(json!(invariants(&*e.basis(5, 23)?, Group::GL)?.rank()))
    })?;
    r.check(
        23,
        true,
        "GL5 invariants of QP5(w1), QP5(w2), QP5(w3)",
        json!([0, 0, 0]),
        |e, _| {
            let dims = OMEGA[..3]
                .iter()
                .map(|w| Ok(invariants(&*e.block(5, &weight(w))?, Group::GL)?.rank()))
                .collect::<Result<Vec<_>, Failure>>()?;
            Ok(json!(dims))
        },
    )?;
    r.check(
        23,
        true,
        "Sigma5 invariants of QP5(w3)",
        invariant_expected(1, 1),
        |e, _| {
            let q = e.block(5, &weight(OMEGA[2]))?;
            let listed = [orbit(&q, B_BAR[0][0])?];
            invariant_summary(&q, Group::Sigma, &[], &listed)
        },
    )?;
    r.check(
        23,
        true,
        "Sigma5 invariants of the summands b1, b2 of QP5(w3)",
        json!({"span_dim": 24, "invariant_dims": [1, 0]}),
        |e, _| summand_summary(&*e.block(5, &weight(OMEGA[2]))?, &B_BAR),
    )?;
    r.check(
        23,
        true,
        "Sigma5 invariants of QP5(w2)",
        invariant_expected(4, 4),
        |e, f| {
            let q = e.block(5, &weight(OMEGA[1]))?;
            let mut listed = Vec::new();
            for a in A[..3].iter().map(|p| p[0]) {
                listed.push(orbit(&q, a)?);
            }
            listed.push(fixture_poly(f, "p4")?);
            invariant_summary(&q, Group::Sigma, &[], &listed)
        },
    )?;
    r.check(
        23,
        true,
        "Sigma5 invariants of the summands a1, a2, a3, a4 of QP5(w2)",
        json!({"span_dim": 105, "invariant_dims": [1, 1, 1, 1]}),
        |e, _| summand_summary(&*e.block(5, &weight(OMEGA[1]))?, &A),
    )?;
    r.check(
        23,
        true,
        "Sigma5 invariants of QP5(w1)",
        invariant_expected(7, 7),
        |e, f| {
            let q = e.block(5, &weight(OMEGA[0]))?;
            let mut listed = Vec::new();
            for c in C[..5].iter().map(|p| p[0]) {
                listed.push(orbit(&q, c)?);
            }
            let (p5, p6, p7) = (fixture_poly(f, "p5")?, fixture_poly(f, "p6")?, fixture_poly(f, "p7")?);
            listed.push(p5.add(&p6)?);
            listed.push(p6.add(&p7)?);
            invariant_summary(&q, Group::Sigma, &[], &listed)
        },
    )?;
    r.check(
        23,
        true,
        "Sigma5 invariants of the summands c1, ..., c5, (c6..c10), (c11..c17) of QP5(w1)",
        json!({"span_dim": 925, "invariant_dims": [1, 1, 1, 1, 1, 2, 0]}),
        |e, _| summand_summary(&*e.block(5, &weight(OMEGA[0]))?, &C),
    )?;
    r.check(
        23,
        true,
        "p5 + p6 and p6 + p7 are Sigma5-invariant in QP5(w1)",
        json!([true, true]),
        |e, f| {
            let q = e.block(5, &weight(OMEGA[0]))?;
            let (p5, p6, p7) = (fixture_poly(f, "p5")?, fixture_poly(f, "p6")?, fixture_poly(f, "p7")?);
            Ok(json!([
                is_invariant_class(&p5.add(&p6)?, &q, Group::Sigma)?,
                is_invariant_class(&p6.add(&p7)?, &q, Group::Sigma)?,
            ]))
        },
    )?;
    r.check(23, true, "p4 is Sigma5-invariant in QP5(w2)", json!(true), |e, f| {
        let q = e.block(5, &weight(OMEGA[1]))?;
        Ok(json!(is_invariant_class(&fixture_poly(f, "p4")?, &q, Group::Sigma)?))
    })?;
    Ok(())
}
