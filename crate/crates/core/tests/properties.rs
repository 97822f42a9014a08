//! Property tests for the structural invariants: colon adjunction,
//! intersection soundness, saturation behavior, canonical minimal
//! generators, layer/restriction membership, slab disjointness, and
//! end-to-end soundness of the layered construction against random
//! sampling.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};

use sdepth_core::construct::janet_quotient;
use sdepth_core::decomp::{slabs_disjoint, verify, Slab, Target};
use sdepth_core::{lattice_ops, Monomial, MonomialIdeal};

fn arb_monomial(n: usize, max: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max, n).prop_map(Monomial::new)
}

fn arb_ideal(n: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(arb_monomial(n, 3), 0..=4)
        .prop_map(move |gens| MonomialIdeal::new(n, gens).unwrap())
}

fn arb_slab(n: usize) -> impl Strategy<Value = Slab> {
    (arb_monomial(n, 3), prop::collection::vec(any::<bool>(), n)).prop_map(|(origin, mask)| {
        let free: Vec<usize> = mask
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(j, _)| j)
            .collect();
        Slab::new(origin, free)
    })
}

/// All exponent vectors of the box `{0..=hi}^n`.
fn box_points(n: usize, hi: u32) -> Vec<Monomial> {
    let mut points = vec![vec![]];
    for _ in 0..n {
        points = points
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..=hi).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    points.into_iter().map(Monomial::new).collect()
}

proptest! {
    #[test]
    fn lattice_ops_are_consistent(
        u in arb_monomial(3, 4),
        w in arb_monomial(3, 4),
    ) {
        let ops = lattice_ops(&u, &w).unwrap();
        prop_assert_eq!(ops.gcd.mul(&ops.lcm), u.mul(&w));
        prop_assert_eq!(ops.divides, ops.gcd == u);
    }

    #[test]
    fn colon_adjunction_on_a_box(
        i in arb_ideal(3),
        v in arb_monomial(3, 3),
    ) {
        let colon = i.colon(&v);
        for w in box_points(3, 4) {
            prop_assert_eq!(colon.contains(&w), i.contains(&v.mul(&w)));
        }
    }

    #[test]
    fn intersection_is_membership_conjunction(
        i in arb_ideal(3),
        j in arb_ideal(3),
    ) {
        let meet = i.intersect(&j);
        for w in box_points(3, 4) {
            prop_assert_eq!(meet.contains(&w), i.contains(&w) && j.contains(&w));
        }
    }

    #[test]
    fn saturation_is_idempotent_and_grows(i in arb_ideal(3)) {
        let (sat, already) = i.saturate();
        prop_assert!(sat.saturate().1);
        prop_assert_eq!(already, sat == i);
        for g in i.gens() {
            prop_assert!(sat.contains(g));
        }
    }

    #[test]
    fn saturation_commutes_with_principal_factor(
        i in arb_ideal(3),
        v in arb_monomial(3, 2),
    ) {
        prop_assume!(!i.is_zero());
        let (_, prime) = i.gcd_part().unwrap();
        let product = prime.multiply(&v);
        let (sat, _) = product.saturate();
        let (w, _) = sat.gcd_part().unwrap();
        // The principal factor survives saturation untouched.
        prop_assert_eq!(w, v.mul(&prime.saturate().0.gcd_part().unwrap().0));
    }

    #[test]
    fn minimal_generators_are_canonical(
        gens in prop::collection::vec(arb_monomial(3, 3), 0..=5),
        rotate in 0..5usize,
    ) {
        let a = MonomialIdeal::new(3, gens.clone()).unwrap();
        let mut rotated = gens;
        if !rotated.is_empty() {
            let k = rotate % rotated.len();
            rotated.rotate_left(k);
        }
        let b = MonomialIdeal::new(3, rotated).unwrap();
        prop_assert_eq!(&a, &b);
        let again = MonomialIdeal::new(3, a.gens().to_vec()).unwrap();
        prop_assert_eq!(again, a);
    }

    #[test]
    fn slices_match_layer_membership(
        i in arb_ideal(3),
        var in 0..3usize,
    ) {
        prop_assume!(!i.is_zero());
        let q = i.deg_in(var);
        for j in 0..=q {
            let slice = i.slice(var, j).unwrap();
            prop_assert!(slice.num_gens() <= i.num_gens());
            if j < q {
                prop_assert!(slice.num_gens() < i.num_gens());
            }
            for w in box_points(2, 4) {
                let mut exps = Vec::with_capacity(3);
                let mut it = w.exps().iter();
                for k in 0..3 {
                    exps.push(if k == var { j } else { *it.next().unwrap() });
                }
                prop_assert_eq!(
                    slice.contains(&w),
                    i.contains(&Monomial::new(exps))
                );
            }
        }
    }

    #[test]
    fn restriction_matches_membership(i in arb_ideal(3), keep in 0..3usize) {
        let vars: Vec<usize> = (0..3).filter(|&k| k != keep).collect();
        let restricted = i.restrict(&vars).unwrap();
        for w in box_points(2, 4) {
            let mut exps = vec![0u32; 3];
            for (pos, &k) in vars.iter().enumerate() {
                exps[k] = w.exp(pos);
            }
            prop_assert_eq!(restricted.contains(&w), i.contains(&Monomial::new(exps)));
        }
    }

    #[test]
    fn slab_disjointness_is_symmetric_and_exact(
        a in arb_slab(3),
        b in arb_slab(3),
    ) {
        prop_assert_eq!(slabs_disjoint(&a, &b), slabs_disjoint(&b, &a));
        // Any shared monomial can be found below the componentwise max of
        // the two origins.
        let hi = (0..3)
            .map(|j| a.origin.exp(j).max(b.origin.exp(j)))
            .max()
            .unwrap_or(0);
        let shared = box_points(3, hi)
            .into_iter()
            .any(|p| a.member(&p) && b.member(&p));
        prop_assert_eq!(slabs_disjoint(&a, &b), !shared);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn layered_quotient_is_valid_with_generator_bound(i in arb_ideal(4)) {
        prop_assume!(!i.is_unit());
        let d = janet_quotient(&i).unwrap();
        let report = verify(&d);
        prop_assert!(report.valid, "violation: {:?}", report.violation);
        prop_assert!(report.sdepth >= 4usize.saturating_sub(i.num_gens()));
    }

    #[test]
    fn verified_decompositions_agree_with_random_sampling(
        i in arb_ideal(3),
        seed in any::<u64>(),
    ) {
        prop_assume!(!i.is_unit());
        let d = janet_quotient(&i).unwrap();
        prop_assert!(verify(&d).valid);
        let target = Target::Quotient(i.clone());
        let hi = 1 + i.gens().iter().map(|g| {
            g.exps().iter().copied().max().unwrap_or(0)
        }).max().unwrap_or(0);
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        for _ in 0..1000 {
            let point = Monomial::new((0..3).map(|_| rng.gen_range(0..=hi)).collect());
            let in_union = d.slabs.iter().any(|s| s.member(&point));
            prop_assert_eq!(in_union, target.member(&point));
        }
    }

    #[test]
    fn ideal_powers_multiply_membership(i in arb_ideal(3)) {
        prop_assume!(!i.is_zero());
        let square = i.power(2);
        for u in i.gens() {
            for w in i.gens() {
                prop_assert!(square.contains(&u.mul(w)));
            }
        }
        for g in square.gens() {
            prop_assert!(i.contains(g));
        }
    }
}
