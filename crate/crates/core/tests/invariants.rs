use hitprob_core::text::parse_monomial;
use hitprob_core::{
    admissible_basis, induced_matrix, invariants, weight_quotient, BitVec, Group, GroupGenerator, Monomial, Polynomial,
    QuotientBasis, WeightVector,
};

fn w(s: &str) -> WeightVector {
    s.parse().unwrap()
}

fn m(s: &str) -> Monomial {
    parse_monomial(5, s).unwrap()
}

fn fixed_by(q: &QuotientBasis, group: Group, v: &BitVec) -> bool {
    group
        .generators(q.k())
        .unwrap()
        .iter()
        .all(|g| induced_matrix(g, q).unwrap().mul_vec(v).unwrap() == *v)
}

fn cases() -> Vec<QuotientBasis> {
    let mut out: Vec<QuotientBasis> = (1..=10).map(|n| admissible_basis(4, n).unwrap()).collect();
    out.push(admissible_basis(5, 9).unwrap());
    out.push(admissible_basis(5, 10).unwrap());
    out
}

#[test]
fn generators_act_invertibly() {
    for q in cases() {
        for g in Group::GL.generators(q.k()).unwrap() {
            let a = induced_matrix(&g, &q).unwrap();
            assert!(a.is_invertible(), "g{} at n={}", g.index(), q.n());
            if g.is_transposition() {
                assert!(a.mul(&a).unwrap().is_identity());
            }
        }
    }
}

#[test]
fn invariants_are_fixed_and_gl_sits_inside_sigma() {
    for q in cases() {
        let sigma = invariants(&q, Group::Sigma).unwrap();
        let gl = invariants(&q, Group::GL).unwrap();
        for v in sigma.canonical_rows() {
            assert!(fixed_by(&q, Group::Sigma, &v));
        }
        for v in gl.canonical_rows() {
            assert!(fixed_by(&q, Group::GL, &v));
            assert!(
                sigma.contains(&v).unwrap(),
                "GL invariant outside the Sigma invariants at n={}",
                q.n()
            );
        }
    }
}

#[test]
fn block_invariants_do_not_depend_on_the_route() {
    let full = admissible_basis(5, 9).unwrap();
    for wt in ["(3,1,1)", "(3,3)", "(5,2)", "(1,2,1)"] {
        let a = full.weight_part(&w(wt)).unwrap();
        let b = weight_quotient(5, &w(wt)).unwrap();
        for group in [Group::Sigma, Group::GL] {
            assert_eq!(
                invariants(&a, group).unwrap(),
                invariants(&b, group).unwrap(),
                "{wt} {group:?}"
            );
        }
    }
}

/// On the summand spanned by u1..u4 in QP5(3,4,3), the coefficient of one
/// chosen u in `g_j(f) + f` is a fixed linear form in the coordinates of
/// `f`; together these forms leave no invariant.
#[test]
fn relations_on_the_second_summand_of_w3() {
    let q = weight_quotient(5, &w("(3,4,3)")).unwrap();
    let u = [
        m("x1^3 x2^3 x3^5 x4^6 x5^6"),
        m("x1^3 x2^5 x3^3 x4^6 x5^6"),
        m("x1^3 x2^5 x3^6 x4^3 x5^6"),
        m("x1^3 x2^5 x3^6 x4^6 x5^3"),
    ];
    let idx: Vec<usize> = u.iter().map(|x| q.admissible_index(x).unwrap()).collect();
    // (generator, the u whose coefficient is read, that coefficient per u_t)
    let relations = [
        (1, 0, [0, 1, 1, 1]),
        (2, 0, [1, 1, 0, 0]),
        (3, 1, [0, 1, 1, 0]),
        (4, 2, [0, 0, 1, 1]),
    ];
    for (j, target, coeffs) in relations {
        let g = GroupGenerator::new(5, j).unwrap();
        for (t, ut) in u.iter().enumerate() {
            let f = Polynomial::from(*ut);
            let moved = g.map().apply(&f).unwrap().add(&f).unwrap();
            let c = q.coordinates(&moved).unwrap();
            assert_eq!(c.get(idx[target]), coeffs[t] == 1, "g{j}(u{}) + u{}", t + 1, t + 1);
        }
    }
    let span = hitprob_core::orbit_span(&u, &q).unwrap();
    assert_eq!(span.rank(), 4);
    assert_eq!(hitprob_core::invariants_in(&span, &q, Group::Sigma).unwrap().rank(), 0);
}

#[test]
fn the_block_of_weight_324_vanishes() {
    let q = weight_quotient(5, &w("(3,2,4)")).unwrap();
    assert_eq!(q.dim(), 0);
    assert!(q.is_hit(&m("x1^3 x2^4 x3^4 x4^5 x5^7").into()).unwrap());
}
