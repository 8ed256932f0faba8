//! Randomized invariants: every structural law the deciders rely on, checked
//! on arbitrary small spaces generated through the preorder correspondence.

use proptest::prelude::*;

use densetop::dense::{
    dense_p, dense_ultraconnected_witness, is_dense_connected_fast,
    is_dense_ultraconnected_fast, is_locally_dense_connected_fast, locally_dense_p, CONNECTED,
    ULTRACONNECTED,
};
use densetop::enumerate::{canonical_form, homeomorphic, topology_from_preorder, Caps};
use densetop::symbolic::{sym_closure, sym_closure_contains, Model, SetDescriptor};
use densetop::{FiniteSpace, PointSet, Preorder};

/// An arbitrary space on at most `max_n` points: random arrows, closed up
/// reflexively and transitively, then read off as up-set opens.
fn space_strategy(max_n: usize) -> impl Strategy<Value = FiniteSpace> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<u64>(), n).prop_map(move |raw| {
            let mask = (1u64 << n) - 1;
            let mut rows: Vec<u64> = raw
                .iter()
                .enumerate()
                .map(|(i, r)| (r & mask) | 1 << i)
                .collect();
            for k in 0..n {
                for i in 0..n {
                    if rows[i] >> k & 1 == 1 {
                        rows[i] |= rows[k];
                    }
                }
            }
            let pre = Preorder::new(n, rows).expect("closed rows form a preorder");
            topology_from_preorder(&pre)
        })
    })
}

/// A random subset of the carrier.
fn subset_of(space: &FiniteSpace) -> impl Strategy<Value = PointSet> {
    let carrier = space.carrier().bits();
    any::<u64>().prop_map(move |b| PointSet::from_bits(b & carrier))
}

fn space_and_subsets() -> impl Strategy<Value = (FiniteSpace, PointSet, PointSet)> {
    space_strategy(5).prop_flat_map(|s| {
        let a = subset_of(&s);
        let b = subset_of(&s);
        (Just(s), a, b)
    })
}

proptest! {
    /// The four closure laws, plus interior/closure duality.
    #[test]
    fn closure_laws((space, a, b) in space_and_subsets()) {
        let cl = |s: PointSet| space.closure(s).unwrap();
        prop_assert!(cl(PointSet::EMPTY).is_empty());
        prop_assert!(a.is_subset(cl(a)));
        prop_assert_eq!(cl(cl(a)), cl(a));
        prop_assert_eq!(cl(a.union(b)), cl(a).union(cl(b)));

        let n = space.n();
        let dual = cl(a.complement(n)).complement(n);
        prop_assert_eq!(space.interior(a).unwrap(), dual);
    }

    /// A set is dense exactly when it meets every minimal neighborhood.
    #[test]
    fn density_is_transversality((space, a, _) in space_and_subsets()) {
        let transversal = (0..space.n()).all(|x| {
            !space.minimal_open_neighborhood(x).unwrap().intersect(a).is_empty()
        });
        prop_assert_eq!(space.is_dense(a).unwrap(), transversal);
    }

    /// Opens are exactly the up-sets of the specialization preorder, so the
    /// space survives the round trip through its preorder.
    #[test]
    fn specialization_round_trip(space in space_strategy(5)) {
        let back = topology_from_preorder(&space.specialization_preorder());
        prop_assert_eq!(&back, &space);
    }

    /// Serialized spaces parse back to the same opens.
    #[test]
    fn json_round_trip(space in space_strategy(5)) {
        let back = FiniteSpace::from_json_str(&space.to_json_string()).unwrap();
        prop_assert_eq!(&back, &space);
    }

    /// The minimal-neighborhood deciders agree with subset-sweep bruteforce.
    #[test]
    fn fast_deciders_match_brute(space in space_strategy(5)) {
        let caps = Caps::default();
        prop_assert_eq!(
            is_dense_connected_fast(&space),
            dense_p(&space, &CONNECTED, &caps).unwrap()
        );
        prop_assert_eq!(
            is_dense_ultraconnected_fast(&space),
            dense_p(&space, &ULTRACONNECTED, &caps).unwrap()
        );
        prop_assert_eq!(
            is_locally_dense_connected_fast(&space),
            locally_dense_p(&space, &CONNECTED, &caps).unwrap()
        );
        // A witness pair appears exactly when the property fails.
        let witness = dense_ultraconnected_witness(&space);
        prop_assert_eq!(witness.is_none(), is_dense_ultraconnected_fast(&space));
        if let Some((x, y)) = witness {
            let pre = space.specialization_preorder();
            prop_assert!(!pre.comparable(x, y));
        }
    }

    /// Relabeling the points never changes the canonical form.
    #[test]
    fn canonical_form_is_relabeling_invariant(
        space in space_strategy(5),
        seed in any::<u64>(),
    ) {
        let n = space.n();
        // A cheap seeded permutation: repeated swaps.
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let relabeled: Vec<PointSet> = space
            .opens()
            .iter()
            .map(|o| o.iter().fold(PointSet::EMPTY, |mut acc, p| { acc.insert(perm[p]); acc }))
            .collect();
        let twin = FiniteSpace::validate(n, relabeled).unwrap();
        prop_assert_eq!(canonical_form(&space), canonical_form(&twin));
        prop_assert!(homeomorphic(&space, &twin));
    }

    /// Products and sums of valid spaces pass the axiom validator again.
    #[test]
    fn product_and_sum_revalidate(a in space_strategy(3), b in space_strategy(3)) {
        let p = a.product(&b).unwrap();
        prop_assert!(FiniteSpace::validate(p.n(), p.opens().to_vec()).is_ok());
        prop_assert_eq!(p.n(), a.n() * b.n());

        let s = FiniteSpace::topological_sum(&[a.clone(), b.clone()]).unwrap();
        prop_assert!(FiniteSpace::validate(s.n(), s.opens().to_vec()).is_ok());
        prop_assert_eq!(s.n(), a.n() + b.n());
    }
}

/// Finite/cofinite descriptors over every model.
fn descriptor_strategy() -> impl Strategy<Value = SetDescriptor> {
    let elems = proptest::collection::btree_set(-1i64..40, 0..6);
    prop_oneof![
        Just(SetDescriptor::Empty),
        Just(SetDescriptor::Whole),
        elems.clone().prop_map(SetDescriptor::finite),
        elems.prop_map(SetDescriptor::cofinite),
    ]
}

fn all_models() -> impl Strategy<Value = Model> {
    prop_oneof![
        Just(Model::CofiniteN),
        Just(Model::OpcDiscrete),
        Just(Model::RayR),
        Just(Model::RayRClosed),
        Just(Model::WindowZ),
        Just(Model::HSpace),
    ]
}

proptest! {
    /// Canonicalization is idempotent, and when the closure rule yields a
    /// descriptor it is extensive, idempotent, and pointwise-consistent.
    #[test]
    fn symbolic_closure_laws(model in all_models(), s in descriptor_strategy()) {
        let canon = s.canonical(model);
        prop_assert_eq!(canon.canonical(model), canon.clone());

        let probes = (-2i64..44).filter(|&p| model.in_carrier(p));
        if let Ok(cl) = sym_closure(model, &s) {
            prop_assert_eq!(sym_closure(model, &cl).unwrap(), cl.clone());
            for p in probes {
                if s.contains(model, p) {
                    prop_assert!(cl.contains(model, p));
                }
                prop_assert_eq!(cl.contains(model, p), sym_closure_contains(model, p, &s));
            }
        } else {
            // Inexpressible closures still answer pointwise.
            for p in probes {
                if s.contains(model, p) {
                    prop_assert!(sym_closure_contains(model, p, &s));
                }
            }
        }
    }
}
