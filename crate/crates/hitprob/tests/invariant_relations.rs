use hitprob::FixtureSet;
use hitprob_core::text::parse_monomial;
use hitprob_core::{
    is_invariant_class, submodule_sum, weight_quotient, EchelonBasis, Group, GroupGenerator, Polynomial,
};

/// In QP5(3,4,1,1) the Sigma5-invariants p(a1), p(a2), p(a3), p4 have
/// linearly independent images under `g_5 + 1`, so no nonzero combination
/// is GL-invariant. Each of the first three is detected by its own watched
/// monomial.
#[test]
fn shear_coefficients_in_w2() {
    let q = weight_quotient(5, &"(3,4,1,1)".parse().unwrap()).unwrap();
    let m = |s: &str| parse_monomial(5, s).unwrap();
    let watched: Vec<usize> = [
        "x1^7 x2^3 x3 x4^2 x5^10",
        "x1^3 x2^3 x3 x4^2 x5^14",
        "x1 x2^7 x3^2 x4^3 x5^10",
        "x1^3 x2^13 x3^2 x4^2 x5^3",
    ]
    .iter()
    .map(|s| q.admissible_index(&m(s)).expect("watched monomials are admissible"))
    .collect();

    let mut listed: Vec<Polynomial> = [
        "x1 x2^2 x3^2 x4^3 x5^15",
        "x1 x2^2 x3^2 x4^7 x5^11",
        "x1 x2^3 x3^3 x4^6 x5^10",
    ]
    .iter()
    .map(|a| submodule_sum(&m(a), &q).unwrap())
    .collect();
    listed.push(FixtureSet::bundled().load("p4").unwrap().polynomial());
    // p4 shares x1 x2^7 x3^2 x4^3 x5^10 with p(a3) and misses the last one
    let expected = [[1, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 1, 0]];

    let g5 = GroupGenerator::new(5, 5).unwrap();
    let mut images = EchelonBasis::new(q.dim());
    for (f, want) in listed.iter().zip(expected) {
        assert!(is_invariant_class(f, &q, Group::Sigma).unwrap());
        let moved = g5.map().apply(f).unwrap().add(f).unwrap();
        let c = q.coordinates(&moved).unwrap();
        let got: Vec<u8> = watched.iter().map(|&i| u8::from(c.get(i))).collect();
        assert_eq!(got, want);
        assert!(images.insert(c).unwrap(), "images are dependent");
    }
    let p4 = q.coordinates(&listed[3]).unwrap();
    let shifted = g5.map().apply(&listed[3]).unwrap().add(&listed[3]).unwrap();
    assert!(q
        .coordinates(&shifted)
        .unwrap()
        .get(q.admissible_index(&m("x1 x2^3 x3^2 x4^3 x5^14")).unwrap()));
    assert!(!p4.is_zero());
}
