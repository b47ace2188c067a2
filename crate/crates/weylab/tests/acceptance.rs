//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! Expected values marked as derived in the docs are computed here by
//! independent oracles (subword enumeration, acyclic orientation counting)
//! rather than trusted from the implementation under test.

use std::collections::{BTreeSet, HashSet};

use weylab::arrangement::{
    induced_subposets, is_uniform, verify_special_bn, verify_special_f4, Arrangement,
    ChamberComplex, RegionSet,
};
use weylab::bruhat::{self, lower_interval, poincare, weak_order_poset};
use weylab::cartan::GroupType;
use weylab::mlattice::{mn_palindromic, verify_iso_bn, verify_iso_dn, MnElement};
use weylab::parabolic::{
    check_factorization, classify_quotient_element, find_bp_decomposition,
    find_maximal_decomposition, right_descent_property, PalindromicClass, Quotient, QuotientSide,
};
use weylab::poly::IntPolynomial;
use weylab::roots::RootSystem;
use weylab::verify::verify_main_theorem;
use weylab::weyl::{enumerate_group, longest_parabolic, Side, WeylElement};

// ---------------------------------------------------------------------------
// Criterion 1: main theorem, exhaustive.
// ---------------------------------------------------------------------------

#[test]
fn criterion_1_main_theorem_exhaustive() {
    for name in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "G2", "F4"] {
        let rs = RootSystem::parse(name).unwrap();
        let report = verify_main_theorem(&rs, 1_000_000).unwrap();
        assert!(
            report.passed(),
            "{name}: {} failures: {:?}",
            report.failures.len(),
            report.failures
        );
        println!(
            "  {name}: {} elements, {} rationally smooth, 0 failures ({} ms)",
            report.elements_scanned, report.rationally_smooth, report.wall_ms
        );
    }
    println!("[PASS] criterion 1: P_w palindromic <=> P_w = R_w, exhaustively, zero exceptions");
}

#[test]
#[ignore = "extended target: A5 and D5 at the same exactness"]
fn criterion_1_extended_a5_d5() {
    for name in ["A5", "D5"] {
        let rs = RootSystem::parse(name).unwrap();
        let report = verify_main_theorem(&rs, 1_000_000).unwrap();
        assert!(report.passed(), "{name}: {:?}", report.failures);
        println!(
            "  {name}: {} elements, 0 failures ({} ms)",
            report.elements_scanned, report.wall_ms
        );
    }
    println!("[PASS] criterion 1 (extended): A5 and D5 exhaustive");
}

// ---------------------------------------------------------------------------
// Criterion 2: the 3412 counterexample pair, against independent oracles.
// ---------------------------------------------------------------------------

#[test]
fn criterion_2_counterexample_3412() {
    let a3 = RootSystem::parse("A3").unwrap();
    let w = WeylElement::from_word(&a3, &[2, 1, 3, 2]).unwrap();

    // Independent oracle #1: distinct products of subwords of a reduced word.
    let oracle = subword_elements(&a3, &[2, 1, 3, 2]);
    let mut counts = vec![0u64; 5];
    for u in &oracle {
        counts[u.length() as usize] += 1;
    }
    let p_oracle = IntPolynomial::new(counts);
    assert_eq!(p_oracle.coeffs(), &[1, 3, 5, 4, 1]);
    let p = poincare(&a3, &w).unwrap();
    assert_eq!(p, p_oracle);

    // Independent oracle #2: regions of a graphic arrangement = acyclic
    // orientations. The inversion graph of 3412 is a 4-cycle.
    let edges = inversion_graph_edges(&a3, &w);
    assert_eq!(edges.len(), 4);
    let orientations = count_acyclic_orientations(4, &edges);
    assert_eq!(orientations, 14);
    let chambers = ChamberComplex::build(&a3).unwrap();
    let regions = RegionSet::enumerate(&a3, &Arrangement::inversion(&a3, &w), &chambers).unwrap();
    assert_eq!(regions.len() as u64, orientations);
    let r = regions.distance_poly();
    assert_eq!(r.coeffs(), &[1, 4, 4, 4, 1]);
    assert_eq!(r.eval_at_one(), orientations);

    assert!(!p.is_palindromic());
    assert!(r.is_palindromic());
    assert_ne!(p, r);
    println!("[PASS] criterion 2: 3412 pair P = 1+3q+5q^2+4q^3+q^4, R = 1+4q+4q^2+4q^3+q^4");
}

// ---------------------------------------------------------------------------
// Criterion 3: the reference lists of palindromic quotient elements.
// ---------------------------------------------------------------------------

const F4_REMOVE_S4: [&[usize]; 6] = [
    &[4],
    &[3, 4],
    &[2, 3, 4],
    &[1, 2, 3, 4],
    &[3, 2, 3, 4],
    &[4, 3, 2, 3, 4],
];

const F4_REMOVE_S1: [&[usize]; 6] = [
    &[1],
    &[2, 1],
    &[3, 2, 1],
    &[4, 3, 2, 1],
    &[2, 3, 2, 1],
    &[1, 2, 3, 2, 1],
];

const E8_REMOVE_S8: [&[usize]; 9] = [
    &[8],
    &[8, 7],
    &[8, 7, 6],
    &[8, 7, 6, 5],
    &[8, 7, 6, 5, 4],
    &[8, 7, 6, 5, 4, 2],
    &[8, 7, 6, 5, 4, 3],
    &[8, 7, 6, 5, 4, 3, 1],
    &[8, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 8],
];

const E8_REMOVE_S1: [&[usize]; 11] = [
    &[1],
    &[1, 3],
    &[1, 3, 4],
    &[1, 3, 4, 5],
    &[1, 3, 4, 5, 6],
    &[1, 3, 4, 5, 6, 7],
    &[1, 3, 4, 5, 6, 7, 8],
    &[1, 3, 4, 2],
    &[1, 3, 4, 5, 2, 4, 3, 1],
    &[1, 3, 4, 5, 2, 4, 3, 1, 6, 5, 4, 3, 2, 4, 5, 6],
    &[
        1, 3, 4, 5, 6, 7, 2, 4, 5, 6, 3, 4, 5, 2, 4, 3, 1, 3, 4, 5, 6, 7, 2, 4, 5, 6, 3, 4, 5,
        2, 4, 3, 1,
    ],
];

const E8_REMOVE_S2: [&[usize]; 15] = [
    &[2],
    &[2, 4],
    &[2, 4, 3],
    &[2, 4, 3, 1],
    &[2, 4, 3, 1, 5, 6, 4, 5, 3, 4, 2, 4, 3, 1, 5, 6, 4, 5, 3, 4, 2],
    &[2, 4, 5],
    &[2, 4, 5, 6],
    &[2, 4, 5, 6, 7],
    &[2, 4, 5, 6, 7, 8],
    &[2, 4, 5, 3, 4, 2],
    &[2, 4, 5, 3, 4, 2, 6, 5, 4, 3],
    &[2, 4, 5, 3, 4, 2, 6, 7, 5, 6, 4, 5, 3, 4, 2],
    &[2, 4, 5, 3, 4, 2, 6, 7, 5, 6, 4, 5, 3, 4, 2, 8, 7, 6, 5, 4, 3],
    &[2, 4, 5, 3, 4, 2, 1, 3, 4, 5],
    &[
        2, 4, 5, 3, 4, 2, 1, 6, 7, 5, 6, 4, 5, 3, 4, 2, 5, 4, 3, 1, 6, 7, 5, 6, 4, 5, 3, 4, 2,
        5, 4, 3, 1, 6, 7, 5, 6, 4, 5, 3, 4, 2,
    ],
];

/// Compares the computed nontrivial palindromic set of a quotient against a
/// listed word set, trying the listed words directly and inverted, and
/// returns which convention matched.
fn match_word_list(
    rs: &RootSystem,
    quotient: &Quotient,
    listed: &[&[usize]],
) -> Option<&'static str> {
    let computed: HashSet<WeylElement> =
        quotient.nontrivial_palindromic().into_iter().collect();
    let direct: HashSet<WeylElement> = listed
        .iter()
        .map(|word| WeylElement::from_word(rs, word).unwrap())
        .collect();
    if computed == direct {
        return Some("as written");
    }
    let inverted: HashSet<WeylElement> = direct.iter().map(WeylElement::inverse).collect();
    if computed == inverted {
        return Some("inverted (opposite side convention)");
    }
    None
}

#[test]
fn criterion_3_palindromic_element_lists_f4_and_e8() {
    let started = std::time::Instant::now();
    let f4 = RootSystem::parse("F4").unwrap();
    let q4 = Quotient::build(&f4, &BTreeSet::from([1, 2, 3]), QuotientSide::RightFree).unwrap();
    let matched = match_word_list(&f4, &q4, &F4_REMOVE_S4).expect("F4 remove s4 list");
    println!("  F4 remove s4: 6 nontrivial palindromic elements, matched {matched}");
    let q1 = Quotient::build(&f4, &BTreeSet::from([2, 3, 4]), QuotientSide::RightFree).unwrap();
    let matched = match_word_list(&f4, &q1, &F4_REMOVE_S1).expect("F4 remove s1 mirror list");
    println!("  F4 remove s1: 6 nontrivial palindromic elements, matched {matched}");

    let e8 = RootSystem::parse("E8").unwrap();
    let q8 = Quotient::build(
        &e8,
        &BTreeSet::from([1, 2, 3, 4, 5, 6, 7]),
        QuotientSide::RightFree,
    )
    .unwrap();
    assert_eq!(q8.len(), 240);
    assert_eq!(q8.nontrivial_palindromic().len(), 9);
    let matched = match_word_list(&e8, &q8, &E8_REMOVE_S8).expect("E8 remove s8 list");
    println!("  E8 remove s8: 9 nontrivial palindromic elements, matched {matched}");

    let q1 = Quotient::build(
        &e8,
        &BTreeSet::from([2, 3, 4, 5, 6, 7, 8]),
        QuotientSide::RightFree,
    )
    .unwrap();
    assert_eq!(q1.len(), 2160);
    assert_eq!(q1.nontrivial_palindromic().len(), 11);
    let matched = match_word_list(&e8, &q1, &E8_REMOVE_S1).expect("E8 remove s1 list");
    println!(
        "  E8 remove s1: 11 nontrivial palindromic elements, matched {matched} ({} ms total)",
        started.elapsed().as_millis()
    );
    assert!(
        started.elapsed().as_secs() < 300,
        "E8 s=1 case must finish within 5 minutes"
    );
    println!("[PASS] criterion 3: reference palindromic-element lists reproduced exactly");
}

#[test]
#[ignore = "extended target: E8 remove s2 (17280-element quotient)"]
fn criterion_3_extended_e8_s2() {
    let e8 = RootSystem::parse("E8").unwrap();
    let q2 = Quotient::build(
        &e8,
        &BTreeSet::from([1, 3, 4, 5, 6, 7, 8]),
        QuotientSide::RightFree,
    )
    .unwrap();
    assert_eq!(q2.len(), 17280);
    let nontrivial = q2.nontrivial_palindromic();
    assert_eq!(nontrivial.len(), E8_REMOVE_S2.len());
    let matched = match_word_list(&e8, &q2, &E8_REMOVE_S2).expect("E8 remove s2 list");
    println!(
        "[PASS] criterion 3 (extended): E8 remove s2, {} nontrivial palindromic, matched {matched}",
        nontrivial.len()
    );
}

// ---------------------------------------------------------------------------
// Criterion 4: classification theorem over the leaf-removed test matrix.
// ---------------------------------------------------------------------------

#[test]
fn criterion_4_classification_theorem() {
    let groups = [
        "A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "D5", "G2", "F4", "E6",
    ];
    let mut scanned = 0usize;
    for name in groups {
        let rs = RootSystem::parse(name).unwrap();
        let all_labels: BTreeSet<usize> = rs.labels().iter().copied().collect();
        for leaf in rs.leaf_labels() {
            let mut j = all_labels.clone();
            j.remove(&leaf);
            let q = Quotient::build(&rs, &j, QuotientSide::RightFree).unwrap();
            for v in q.elements() {
                scanned += 1;
                // classify cross-checks its tag against palindromicity and
                // errors on any mismatch.
                let tag = classify_quotient_element(&rs, &q, v)
                    .unwrap_or_else(|e| panic!("{name} remove {leaf}: {e}"));
                let palindromic = q.poincare(v).unwrap().is_palindromic();
                assert_eq!(tag != PalindromicClass::NotPalindromic, palindromic);

                // Re-verify the defining predicates from their definitions.
                let (ll, chain_quotient) = embedded_quotient_predicates(&rs, &q, v);
                match tag {
                    PalindromicClass::LocallyLongest => assert!(ll, "{name} remove {leaf}"),
                    PalindromicClass::LocalChain => {
                        assert!(chain_quotient, "{name} remove {leaf}")
                    }
                    _ => {}
                }

                // Corollary: palindromic <=> locally-longest or chain interval.
                let chain_interval =
                    q.poincare(v).unwrap().eval_at_one() == v.length() as u64 + 1;
                let trivial = q.is_trivial(v);
                assert_eq!(
                    palindromic,
                    trivial || ll || chain_interval,
                    "{name} remove {leaf}: corollary fails at {:?}",
                    v.canonical_word(&rs)
                );
            }
        }
    }
    println!("[PASS] criterion 4: classification + corollary over {scanned} quotient elements, zero mismatches");
}

/// (v is locally-longest, the embedded quotient is a chain), recomputed
/// directly from the definitions.
fn embedded_quotient_predicates(rs: &RootSystem, q: &Quotient, v: &WeylElement) -> (bool, bool) {
    if v.is_identity() {
        return (true, true);
    }
    let support = v.support(rs);
    let sub = rs.restrict(&support).unwrap();
    let v_sub = WeylElement::from_word(&sub, &v.canonical_word(rs)).unwrap();
    let i_cap_j: BTreeSet<usize> = support.intersection(q.j()).copied().collect();
    let embedded = Quotient::build(&sub, &i_cap_j, q.side()).unwrap();
    let connected = {
        // Connectivity via the sub-diagram having one component: the Weyl
        // order of the restriction factors as a single component exactly when
        // a spanning walk exists; test it through root-system adjacency.
        let sub_labels: Vec<usize> = support.iter().copied().collect();
        is_connected_in(rs, &sub_labels)
    };
    let ll = connected && &v_sub == embedded.top();
    (ll, embedded.poset().is_chain())
}

fn is_connected_in(rs: &RootSystem, labels: &[usize]) -> bool {
    if labels.is_empty() {
        return true;
    }
    let adjacent = |a: usize, b: usize| {
        let sub = rs.restrict(&BTreeSet::from([a, b])).unwrap();
        sub.datum().weyl_order().unwrap() != 4 // A1 x A1 has order 4
    };
    let mut seen = BTreeSet::from([labels[0]]);
    let mut stack = vec![labels[0]];
    while let Some(x) = stack.pop() {
        for &y in labels {
            if !seen.contains(&y) && adjacent(x, y) {
                seen.insert(y);
                stack.push(y);
            }
        }
    }
    seen.len() == labels.len()
}

// ---------------------------------------------------------------------------
// Criterion 5: the M(n) suite.
// ---------------------------------------------------------------------------

#[test]
fn criterion_5_mn_suite() {
    // Brute-forced palindromic sets equal the closed form for n <= 8.
    for n in 1..=8usize {
        let computed: BTreeSet<MnElement> = mn_palindromic(n).unwrap().into_iter().collect();
        let mut expected: BTreeSet<MnElement> = BTreeSet::from([MnElement::empty()]);
        for k in 1..=n as u8 {
            expected.insert(MnElement::new(vec![k]).unwrap());
            expected.insert(MnElement::new((1..=k).collect()).unwrap());
        }
        assert_eq!(computed, expected, "M({n})");
    }
    for n in 2..=5 {
        assert!(verify_iso_bn(n).unwrap(), "B{n}/A quotient vs M({n})");
    }
    for n in 4..=5 {
        assert!(verify_iso_dn(n).unwrap(), "D{n}/A quotient vs M({})", n - 1);
    }
    // B_n / B_{n-1} is a 2n-element chain (2n-1 cover edges; "length 2n" in
    // the element-count convention, which is what is asserted here).
    for n in 2..=6usize {
        let rs = RootSystem::new(GroupType::B(n)).unwrap();
        let j: BTreeSet<usize> = (0..n - 1).collect();
        let q = Quotient::build(&rs, &j, QuotientSide::RightFree).unwrap();
        assert_eq!(q.len(), 2 * n, "B{n}/B{}", n - 1);
        assert!(q.poset().is_chain(), "B{n}/B{}", n - 1);
    }
    // D5/D4 rank vector.
    let d5 = RootSystem::parse("D5").unwrap();
    let q = Quotient::build(&d5, &BTreeSet::from([0, 1, 2, 3]), QuotientSide::RightFree).unwrap();
    assert_eq!(q.poset().rank_sizes(), vec![1, 1, 1, 1, 2, 1, 1, 1, 1]);
    println!("[PASS] criterion 5: M(n) palindromic sets, quotient isomorphisms, chain quotients");
}

// ---------------------------------------------------------------------------
// Criterion 6: BP factorization for every rationally smooth element.
// ---------------------------------------------------------------------------

#[test]
fn criterion_6_factorization() {
    let groups = ["A1", "A2", "A3", "A4", "B2", "B3", "D4", "G2", "F4"];
    let mut smooth_total = 0usize;
    for name in groups {
        let rs = RootSystem::parse(name).unwrap();
        for w in enumerate_group(&rs).unwrap() {
            if !bruhat::is_rationally_smooth(&rs, &w).unwrap() {
                continue;
            }
            smooth_total += 1;
            let bp = find_bp_decomposition(&rs, &w)
                .unwrap_or_else(|e| panic!("{name} {:?}: {e}", w.canonical_word(&rs)));
            let target = if bp.inverted { w.inverse() } else { w.clone() };
            assert_eq!(bp.u.multiply(&bp.v), target);
            assert_eq!(bp.u.length() + bp.v.length(), target.length());
            assert!(
                check_factorization(&rs, &w).unwrap(),
                "{name} {:?}",
                w.canonical_word(&rs)
            );
            assert!(
                right_descent_property(&rs, &w).unwrap(),
                "{name} {:?}",
                w.canonical_word(&rs)
            );
        }
    }
    println!(
        "[PASS] criterion 6: BP-decomposition, factorization and right-descent property over {smooth_total} rationally smooth elements"
    );
}

// ---------------------------------------------------------------------------
// Criterion 7: special cases.
// ---------------------------------------------------------------------------

#[test]
fn criterion_7_special_cases() {
    for n in [2, 3, 4] {
        let report = verify_special_bn(n).unwrap();
        assert!(report.uniform, "B{n} uniform");
        assert!(report.r_factorizes_as_chain, "B{n} R chain factor");
        assert!(report.p_equals_r, "B{n} P = R");
    }
    let report = verify_special_f4().unwrap();
    assert!(report.uniform, "F4 uniform");
    assert_eq!(report.ell_v, 4);
    assert!(report.r_factorizes_as_chain, "F4: R_w = R_u (1+...+q^4)");
    assert!(report.p_equals_r, "F4: P_w = R_w");
    // The low-degree displayed factor is reported, never asserted.
    println!(
        "  F4 special case: deg-3 factor identity holds: {:?}; chain factor (deg 4) holds: {}",
        report.displayed_deg3_factor_holds, report.p_factorizes_as_chain
    );
    println!("[PASS] criterion 7: B_n (n=2,3,4) and F4 special cases verified");
}

// ---------------------------------------------------------------------------
// Criterion 8: uniformity of the Coxeter arrangement over parabolic ones.
// ---------------------------------------------------------------------------

#[test]
fn criterion_8_uniformity() {
    for name in ["A3", "B3"] {
        let rs = RootSystem::parse(name).unwrap();
        let chambers = ChamberComplex::build(&rs).unwrap();
        let cox = Arrangement::coxeter(&rs);
        let all_labels: BTreeSet<usize> = rs.labels().iter().copied().collect();
        for &drop in rs.labels() {
            let mut j = all_labels.clone();
            j.remove(&drop);
            let u0 = longest_parabolic(&rs, &j).unwrap();
            let sub = Arrangement::inversion(&rs, &u0);
            assert!(
                is_uniform(&rs, &cox, &sub, &chambers).unwrap(),
                "{name}, J = S \\ {{{drop}}}"
            );
            let posets = induced_subposets(&rs, &cox, &sub, &chambers).unwrap();
            // The common induced subposet is the right weak order on the
            // minimal coset representatives.
            let leftfree = Quotient::build(&rs, &j, QuotientSide::LeftFree).unwrap();
            let weak =
                weak_order_poset(&rs, leftfree.elements(), Side::Right).unwrap();
            for p in &posets {
                assert!(
                    p.is_isomorphic(&weak),
                    "{name}, J = S \\ {{{drop}}}: induced poset vs right weak order on the quotient"
                );
            }
        }
    }
    println!("[PASS] criterion 8: Coxeter arrangement uniform over every maximal parabolic; induced poset = right weak order on the quotient");
}

// ---------------------------------------------------------------------------
// Criterion 9: property suites.
// ---------------------------------------------------------------------------

#[test]
fn criterion_9_duality() {
    use std::collections::HashMap;
    for name in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "G2", "F4"] {
        let rs = RootSystem::parse(name).unwrap();
        let chambers = ChamberComplex::build(&rs).unwrap();
        let mut p_cache: HashMap<WeylElement, IntPolynomial> = HashMap::new();
        for w in chambers.elements() {
            let p = poincare(&rs, w).unwrap();
            p_cache.insert(w.clone(), p);
        }
        for w in chambers.elements() {
            let winv = w.inverse();
            assert_eq!(p_cache[w], p_cache[&winv], "{name}: P duality");
            let r = RegionSet::enumerate(&rs, &Arrangement::inversion(&rs, w), &chambers)
                .unwrap()
                .distance_poly();
            let r_inv = RegionSet::enumerate(&rs, &Arrangement::inversion(&rs, &winv), &chambers)
                .unwrap()
                .distance_poly();
            assert_eq!(r, r_inv, "{name}: R duality");
        }
    }
    println!("[PASS] criterion 9a: P and R duality over all groups of order <= 1152");
}

#[test]
fn criterion_9_interval_oracle() {
    for name in ["A3", "B3", "G2"] {
        let rs = RootSystem::parse(name).unwrap();
        for w in enumerate_group(&rs).unwrap() {
            if w.length() > 8 {
                continue;
            }
            let oracle = subword_elements(&rs, &w.canonical_word(&rs));
            let interval = lower_interval(&rs, &w).unwrap();
            let bfs: HashSet<WeylElement> = interval.elements.iter().cloned().collect();
            assert_eq!(bfs, oracle, "{name} {:?}", w.canonical_word(&rs));
        }
    }
    println!("[PASS] criterion 9b: cover-BFS intervals equal subword-oracle intervals (l <= 8)");
}

#[test]
fn criterion_9_random_palindromicity() {
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(0x00C0FFEE);
    let matrix = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "G2", "F4"];
    let systems: Vec<(RootSystem, ChamberComplex)> = matrix
        .iter()
        .map(|name| {
            let rs = RootSystem::parse(name).unwrap();
            let chambers = ChamberComplex::build(&rs).unwrap();
            (rs, chambers)
        })
        .collect();
    for _ in 0..200 {
        let (rs, chambers) = &systems[rng.gen_range(0..systems.len())];
        let w = &chambers.elements()[rng.gen_range(0..chambers.len())];
        let arr = Arrangement::inversion(rs, w);
        let r = RegionSet::enumerate(rs, &arr, chambers).unwrap().distance_poly();
        assert!(r.is_palindromic());
        assert_eq!(r.degree(), w.length() as usize);
    }
    println!("[PASS] criterion 9c: distance polynomial palindromic for 200 sampled elements");
}

// ---------------------------------------------------------------------------
// Chamber reduction (the three-way split A_0 ⊔ A_1 ⊔ A_2 of an inversion arrangement).
// ---------------------------------------------------------------------------

/// For a decomposition w = u'·u_{I∩J}·v, the chamber poset of A_w over a
/// chamber of A_u is isomorphic to that of A_{u_{I∩J}·v} over the containing
/// chamber of A_{u_{I∩J}}.
///
/// Arrangements are taken on the inverse side (normals of x^{-1}), where the
/// prefix containments A_{u_{I∩J}} ⊆ A_u ⊆ A_w hold; instances where the
/// middle containment fails (u admits only the suffix factorization) are
/// skipped and counted.
#[test]
fn invariant_chamber_reduction() {
    let arr_of = |rs: &RootSystem, x: &WeylElement| Arrangement::inversion(rs, &x.inverse());
    let mut tested = 0usize;
    let mut skipped = 0usize;
    for name in ["B3", "F4"] {
        let rs = RootSystem::parse(name).unwrap();
        let chambers = ChamberComplex::build(&rs).unwrap();
        for w in chambers.elements() {
            if !bruhat::is_rationally_smooth(&rs, w).unwrap() {
                continue;
            }
            let Some(bp) = find_maximal_decomposition(&rs, w).unwrap() else {
                continue;
            };
            let target = if bp.inverted { w.inverse() } else { w.clone() };
            let support = bp.v.support(&rs);
            let i_cap_j: BTreeSet<usize> = support.intersection(&bp.j).copied().collect();
            let u_icj = longest_parabolic(&rs, &i_cap_j).unwrap();
            if u_icj.is_identity() || u_icj == bp.u {
                continue; // A_0 empty or A_1 empty: both sides coincide
            }
            let z = u_icj.multiply(&bp.v);
            assert_eq!(z.length(), u_icj.length() + bp.v.length());
            let arr_w = arr_of(&rs, &target);
            let arr_u = arr_of(&rs, &bp.u);
            let arr_0 = arr_of(&rs, &u_icj);
            let arr_z = arr_of(&rs, &z);
            assert!(arr_u.is_subarrangement_of(&arr_w));
            assert!(arr_0.is_subarrangement_of(&arr_z));
            if !arr_0.is_subarrangement_of(&arr_u) {
                skipped += 1;
                continue;
            }
            let big = induced_subposets(&rs, &arr_w, &arr_u, &chambers).unwrap();
            let small = induced_subposets(&rs, &arr_z, &arr_0, &chambers).unwrap();
            let u_regions = RegionSet::enumerate(&rs, &arr_u, &chambers).unwrap();
            let zero_regions = RegionSet::enumerate(&rs, &arr_0, &chambers).unwrap();
            let zero_positions: Vec<usize> = arr_0
                .normals()
                .iter()
                .map(|i| arr_u.normals().binary_search(i).unwrap())
                .collect();
            for (k, region) in u_regions.regions().iter().enumerate() {
                let restricted = zero_positions
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (bit, &p)| {
                        acc | (((region.signs() >> p) & 1) << bit)
                    });
                let k_prime = zero_regions
                    .regions()
                    .iter()
                    .position(|r| r.signs() == restricted)
                    .expect("containing region exists");
                assert!(
                    big[k].is_isomorphic(&small[k_prime]),
                    "{name} {:?}: chamber reduction",
                    w.canonical_word(&rs)
                );
                tested += 1;
            }
        }
    }
    assert!(tested > 500, "chamber reduction exercised only {tested} times");
    println!(
        "[PASS] chamber reduction verified on {tested} (element, chamber) instances in B3 and F4 ({skipped} skipped for containment)"
    );
}

// ---------------------------------------------------------------------------
// Oracles.
// ---------------------------------------------------------------------------

/// All distinct products of subwords of `word` (the subword characterization
/// of the lower Bruhat interval). Exponential; test-only.
fn subword_elements(rs: &RootSystem, word: &[usize]) -> HashSet<WeylElement> {
    let mut out = HashSet::new();
    for mask in 0u32..1 << word.len() {
        let sub: Vec<usize> = word
            .iter()
            .enumerate()
            .filter(|&(k, _)| mask >> k & 1 == 1)
            .map(|(_, &l)| l)
            .collect();
        out.insert(WeylElement::from_word(rs, &sub).unwrap());
    }
    out
}

/// Edges (a, b) on vertices 0..n of the inversion graph of a type-A element:
/// the root alpha_a+...+alpha_{b-1} maps to the pair (a, b).
fn inversion_graph_edges(rs: &RootSystem, w: &WeylElement) -> Vec<(usize, usize)> {
    w.inversion_set(rs)
        .iter()
        .map(|root| {
            let support: Vec<usize> = root
                .coeffs()
                .iter()
                .enumerate()
                .filter(|&(_, &c)| c != 0)
                .map(|(i, _)| i)
                .collect();
            assert!(root.coeffs().iter().all(|&c| c == 0 || c == 1));
            (support[0], support[support.len() - 1] + 1)
        })
        .collect()
}

/// Brute-force count of acyclic orientations of a graph.
fn count_acyclic_orientations(vertices: usize, edges: &[(usize, usize)]) -> u64 {
    let mut count = 0;
    for mask in 0u32..1 << edges.len() {
        let directed: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .map(|(k, &(a, b))| if mask >> k & 1 == 1 { (b, a) } else { (a, b) })
            .collect();
        if is_acyclic(vertices, &directed) {
            count += 1;
        }
    }
    count
}

fn is_acyclic(vertices: usize, arcs: &[(usize, usize)]) -> bool {
    // Kahn's algorithm.
    let mut indegree = vec![0usize; vertices];
    for &(_, b) in arcs {
        indegree[b] += 1;
    }
    let mut queue: Vec<usize> = (0..vertices).filter(|&v| indegree[v] == 0).collect();
    let mut removed = 0;
    while let Some(v) = queue.pop() {
        removed += 1;
        for &(a, b) in arcs {
            if a == v {
                indegree[b] -= 1;
                if indegree[b] == 0 {
                    queue.push(b);
                }
            }
        }
    }
    removed == vertices
}

/// The acyclic-orientation identity holds for every type-A element, not just
/// the 3412 instance.
#[test]
fn regions_equal_acyclic_orientations_in_type_a() {
    for (name, vertices) in [("A3", 4usize), ("A4", 5usize)] {
        let rs = RootSystem::parse(name).unwrap();
        let chambers = ChamberComplex::build(&rs).unwrap();
        for w in chambers.elements() {
            let arr = Arrangement::inversion(&rs, w);
            let regions = RegionSet::enumerate(&rs, &arr, &chambers).unwrap();
            let edges = inversion_graph_edges(&rs, w);
            assert_eq!(
                regions.len() as u64,
                count_acyclic_orientations(vertices, &edges),
                "{name} {:?}",
                w.canonical_word(&rs)
            );
        }
    }
}
