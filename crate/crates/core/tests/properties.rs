use std::collections::BTreeSet;

use celltower_core::*;
use proptest::prelude::*;

fn params(r: u32, p: u32, n: u32, e: u32, charges: Vec<i64>) -> Option<ValidatedParams> {
    AlgebraParams {
        r,
        p,
        n,
        e,
        charges,
    }
    .validate()
    .ok()
}

fn spread(d: u32) -> Vec<i64> {
    (0..d as i64).map(|l| 10 * l).collect()
}

fn choose(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// Valid parameters with `r <= r_max`, `n <= n_max` and arbitrary charges.
fn any_params(r_max: u32, n_max: u32) -> impl Strategy<Value = ValidatedParams> {
    (
        1..=r_max,
        1..=r_max,
        1..=n_max,
        prop_oneof![Just(0u32), 3..12u32],
    )
        .prop_flat_map(|(r, p, n, e)| {
            let p = (1..=p).rev().find(|q| r % q == 0).unwrap();
            let d = (r / p) as usize;
            (Just((r, p, n, e)), proptest::collection::vec(-20i64..20, d))
        })
        .prop_filter_map("invalid charges", |((r, p, n, e), charges)| {
            params(r, p, n, e, charges)
        })
}

fn wrap_pair(lam: &Multipartition) -> bool {
    matches!(lam.second_box(), Some(b) if b.l == lam.first_box().l && lam.first_box().i == 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn validation_is_idempotent(r in 1u32..8, p in 1u32..8, n in 1u32..6, e in 0u32..12,
                                charges in proptest::collection::vec(-30i64..30, 0..8)) {
        let raw = AlgebraParams { r, p, n, e, charges };
        if let Ok(v) = raw.validate() {
            prop_assert_eq!(v.to_raw().validate(), Ok(v.clone()));
            prop_assert_eq!(validate_params(&v.to_raw()), Ok(v));
        }
    }

    #[test]
    fn first_two_row_residues_are_distinct(v in any_params(8, 2)) {
        let mut seen = BTreeSet::new();
        for l in 0..v.d() {
            prop_assert!(seen.insert(v.reduce(v.charge(l))));
            prop_assert!(seen.insert(v.reduce(v.charge(l) - 1)));
        }
    }

    #[test]
    fn shape_count(v in any_params(8, 6)) {
        let (r, n) = (v.r() as usize, v.n() as usize);
        let expected = if n == 1 { r } else { r + r * (r - 1) / 2 * (n - 1) };
        prop_assert_eq!(enumerate_multipartitions(&v).len(), expected);
    }

    #[test]
    fn pair_tableaux_match_filling_oracle(n in 2u32..=8, k in 0u32..8) {
        let a = -(n as i32 - 2) + 2 * (k % (n - 1)) as i32;
        let lam = Multipartition::pair(n, FloorIndex::new(0, 0), FloorIndex::new(1, 0), a).unwrap();
        let len0 = lam.columns().next().unwrap().len;
        // every assignment of 1..n to the two columns with the right sizes
        let oracle = (0u32..1 << n).filter(|mask| mask.count_ones() == len0).count();
        let std = enumerate_standard_tableaux(&lam);
        prop_assert_eq!(std.len(), oracle);
        prop_assert_eq!(std.len() as u128, choose(n as u128, ((n as i32 - a) / 2) as u128));
        prop_assert!(std.iter().all(|t| t.is_standard()));
    }

    #[test]
    fn single_initial_residues_step_down(v in any_params(6, 6), pick in any::<prop::sample::Index>()) {
        let singles: Vec<_> = enumerate_multipartitions(&v).into_iter().filter(|s| !s.is_pair()).collect();
        let lam = singles[pick.index(singles.len())];
        let seq = residue_sequence(&initial_tableau(&lam), &v);
        for w in seq.windows(2) {
            prop_assert_eq!(w[0].i, w[1].i);
            prop_assert_eq!(w[1].j, v.reduce(w[0].j - 1));
            if v.e() == 0 {
                prop_assert!(w[1].j < w[0].j);
            }
        }
    }

    #[test]
    fn permutation_round_trip(v in any_params(4, 6), pick in any::<prop::sample::Index>()) {
        let shapes = enumerate_multipartitions(&v);
        let lam = shapes[pick.index(shapes.len())];
        for t in enumerate_standard_tableaux(&lam) {
            let (w, word) = permutation_of_tableau(&t).unwrap();
            prop_assert_eq!(tableau_from_permutation(&lam, &w), t);
            prop_assert_eq!(word.len(), w.length());
        }
    }

    #[test]
    fn prime_order_refines_shape_order(v in any_params(4, 5)) {
        let shapes = enumerate_multipartitions(&v);
        for a in &shapes {
            for b in &shapes {
                if shape_leq(ShapeOrder::ShapePrime, a, b) {
                    prop_assert!(shape_leq(ShapeOrder::Shape, a, b));
                }
            }
        }
    }

    #[test]
    fn sigma_has_order_dividing_p(v in any_params(12, 5)) {
        let p = v.p();
        for lam in enumerate_multipartitions(&v) {
            let mut x = lam;
            let mut order = 0;
            for k in 1..=p {
                x = sigma_shape(&x, p);
                if x == lam && order == 0 {
                    order = k;
                }
            }
            prop_assert_eq!(x, lam);
            prop_assert_eq!(p % order, 0);
            if !lam.is_pair() {
                prop_assert_eq!(order, p);
            }
        }
    }

    #[test]
    fn reducibility_is_constant_on_classes(v in any_params(12, 5)) {
        for cls in orbit_classes(&v) {
            for lam in cls.representatives() {
                prop_assert_eq!(is_reducible(lam), cls.is_reducible());
            }
        }
    }

    #[test]
    fn shift_keeps_permutation_off_wrap_pairs(v in any_params(6, 5)) {
        let p = v.p();
        for lam in enumerate_multipartitions(&v) {
            let preserved = enumerate_standard_tableaux(&lam).iter().all(|t| {
                let st = sigma_tableau(t, p).unwrap();
                permutation_of_tableau(t).unwrap().0 == permutation_of_tableau(&st).unwrap().0
            });
            let crosses = wrap_pair(&lam) && p > 1;
            prop_assert_eq!(preserved, !crosses, "{}", lam);
        }
    }

    #[test]
    fn data_are_structurally_sound(v in any_params(6, 4)) {
        let input = build_datum_r1n(&v);
        let rpn = build_datum_rpn(&v);
        let q = quotient_skew_datum(&input, &LayerShift { p: v.p() }).unwrap();
        for datum in [&input, &rpn, &q] {
            prop_assert!(datum.structural_violations().is_empty(), "{:?}", datum.structural_violations());
            prop_assert!(datum.involution_is_trivial());
        }
        prop_assert_eq!(q.basis_count() * v.p() as usize, input.basis_count());
        prop_assert!(!q.diagnostics.iter().any(|d| d.contains("involution")));
    }

    #[test]
    fn shift_acts_on_labels_componentwise(v in any_params(6, 4)) {
        let shift = LayerShift { p: v.p() };
        for element in build_datum_r1n(&v).basis.iter().take(64) {
            for (label, _) in element.sum.terms() {
                let moved = shift.shift_label(label);
                prop_assert_eq!(moved.shape, sigma_shape(&label.shape, v.p()));
                prop_assert_eq!(&moved.s, &sigma_tableau(&label.s, v.p()).unwrap());
                prop_assert_eq!(&moved.t, &sigma_tableau(&label.t, v.p()).unwrap());
            }
        }
    }

    #[test]
    fn decomposition_matrices_are_unitriangular(v in any_params(4, 5)) {
        for order in DecompOrder::ALL {
            let m = decomposition_matrix(&v, order);
            let check = m.check();
            prop_assert!(check.passed(), "{:?}", check.problems);
            for (i, cls) in m.classes.iter().enumerate() {
                prop_assert_eq!(m.entries[i][i], 1);
                if !cls.is_reducible() {
                    prop_assert!((0..m.classes.len()).all(|j| i == j || (m.entries[i][j] == 0 && m.entries[j][i] == 0)));
                }
            }
        }
    }

    #[test]
    fn lemma_suite_has_no_counterexamples(v in any_params(4, 5)) {
        prop_assert!(lemma_property_suite(&v).passed());
    }
}

#[test]
fn dimension_identity_for_p_one() {
    for r in 2..=6 {
        for n in 2..=6 {
            let v = params(r, 1, n, 0, spread(r)).unwrap();
            let sum: u128 = enumerate_multipartitions(&v)
                .iter()
                .map(|s| (enumerate_standard_tableaux(s).len() as u128).pow(2))
                .sum();
            let rr = r as u128;
            assert_eq!(
                sum,
                choose(rr, 2) * choose(2 * n as u128, n as u128) + 2 * rr - rr * rr
            );
        }
    }
}

#[test]
fn quotient_identity() {
    for r in 1..=8 {
        for p in (1..=r).filter(|p| r % p == 0) {
            for n in 1..=6 {
                if p % 2 == 0 && n % 2 == 0 {
                    continue;
                }
                let v = params(r, p, n, 0, spread(r / p)).unwrap();
                let d = params(r / p, 1, n, 0, spread(r / p)).unwrap();
                assert_eq!(
                    algebra_dim_formula(&v),
                    kernel_dimension(&v) + algebra_dim_formula(&d),
                    "({r},{p},{n})"
                );
                assert_eq!(enumerated_dim(&v), algebra_dim_formula(&v));
            }
        }
    }
}

fn enumerated_dim(v: &ValidatedParams) -> u128 {
    orbit_classes(v)
        .iter()
        .map(|c| tableau_class_count(c, v.p()).pow(2))
        .sum()
}

#[test]
fn orthogonality_surrogate_holds() {
    for r in 1..=6 {
        for p in (1..=3.min(r)).filter(|p| r % p == 0) {
            for n in 1..=5 {
                let v = params(r, p, n, 0, spread(r / p)).unwrap();
                assert_eq!(
                    orthogonality_surrogate(&v),
                    Vec::<String>::new(),
                    "({r},{p},{n})"
                );
            }
        }
    }
}

#[test]
fn equal_residue_sequences_only_on_same_layer_pairs() {
    for (e, charges) in [(0, vec![0, 10]), (0, vec![0, 3]), (6, vec![0, 3])] {
        for n in 1..=6 {
            let v = params(2, 1, n, e, charges.clone()).unwrap();
            for lam in enumerate_multipartitions(&v) {
                let std = enumerate_standard_tableaux(&lam);
                let seqs: BTreeSet<_> = std.iter().map(|t| residue_sequence(t, &v)).collect();
                if seqs.len() != std.len() {
                    let b = lam.second_box().unwrap();
                    assert_eq!(b.i, lam.first_box().i, "{lam}");
                }
            }
        }
    }
}

#[test]
fn dominance_and_shape_order_discrepancies() {
    // reported rather than assumed: the two orders are allowed to differ
    let mut compared = 0;
    let mut differ = 0;
    for r in 1..=3 {
        for n in 1..=4 {
            let v = params(r, 1, n, 0, spread(r)).unwrap();
            let shapes = enumerate_multipartitions(&v);
            for a in &shapes {
                for b in &shapes {
                    let dom = dominance_leq(a, b);
                    let shape = shape_leq(ShapeOrder::Shape, a, b);
                    compared += 1;
                    differ += (dom != shape) as usize;
                }
            }
        }
    }
    println!("dominance vs shape order: {differ} of {compared} comparisons differ");
    assert!(compared > 0);
}
