mod common;

use common::*;
use proptest::prelude::*;
use refltk::classify::{maximal_elementary_2subgroups, normalizer_action};
use refltk::group::{close_group, named_weyl, normalized_root, CoxeterType};
use refltk::roots::build_root_system;
use refltk::stabilizers::Subgroup;

fn small_types() -> Vec<CoxeterType> {
    named_types_up_to_rank_4()
        .into_iter()
        .filter(|t| {
            !matches!(
                t,
                CoxeterType::H4
                    | CoxeterType::F4
                    | CoxeterType::A(4)
                    | CoxeterType::B(4)
                    | CoxeterType::C(4)
            )
        })
        .collect()
}

#[test]
fn engine_matches_naive_closure_on_small_groups() {
    for ty in small_types() {
        let w = group(ty);
        if w.order() > 120 {
            continue;
        }
        let gens: Vec<_> = w
            .generators()
            .iter()
            .map(|g| g.element.matrix().clone())
            .collect();
        let mut naive = naive_closure(&gens);
        naive.sort();
        let mut engine: Vec<_> = w.elements().iter().map(|e| e.matrix().clone()).collect();
        engine.sort();
        assert_eq!(engine, naive, "{ty}");
        assert_eq!(
            w.reflections().len(),
            naive_reflections(&naive).len(),
            "{ty}"
        );
    }
}

#[test]
fn brute_force_agrees_with_cliques_on_all_groups_up_to_order_48() {
    for ty in named_types_up_to_rank_4() {
        let w = group(ty);
        if w.order() > 48 {
            continue;
        }
        let delta = build_root_system(&w);
        let elements: Vec<_> = w.elements().iter().map(|e| e.matrix().clone()).collect();
        let oracle = brute_force_maximal(&elements, w.dim());
        let mut pipeline: Vec<Vec<_>> = maximal_elementary_2subgroups(&w, &delta)
            .iter()
            .map(|h| h.fingerprint().into_iter().cloned().collect())
            .collect();
        pipeline.sort();
        assert_eq!(pipeline, oracle, "{ty}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generator_order_does_not_matter(
        (t, order) in (0usize..64).prop_flat_map(|t| {
            let types = small_types();
            let n = named_weyl(types[t % types.len()]).unwrap().1.len();
            (Just(t), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
    ) {
        let types = small_types();
        let (space, gens) = named_weyl(types[t % types.len()]).unwrap();
        let w = close_group(&space, &gens, 1_000_000).unwrap();
        let shuffled: Vec<_> = order.iter().map(|&i| gens[i].clone()).collect();
        let v = close_group(&space, &shuffled, 1_000_000).unwrap();
        let mut a: Vec<_> = w.elements().iter().map(|e| e.matrix().clone()).collect();
        let mut b: Vec<_> = v.elements().iter().map(|e| e.matrix().clone()).collect();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn conjugates_of_reflections_and_roots_stay_inside(t in 0usize..64, x in any::<prop::sample::Index>(), r in any::<prop::sample::Index>()) {
        let types = small_types();
        let w = group(types[t % types.len()]);
        let delta = build_root_system(&w);
        let g = x.index(w.order());
        let refl = &w.reflections()[r.index(w.reflections().len())];
        let c = w.conjugate(g, refl.element);
        prop_assert!(w.reflection_of_element(c).is_some());
        let moved = w.element(g).apply(&refl.root);
        prop_assert!(w.reflection_along(&moved).is_some());
        let root = delta.root(r.index(delta.len()));
        let image = w.element(g).apply(root);
        prop_assert!(delta.contains(&image));
        prop_assert!(delta.roots().iter().any(|s| normalized_root(s) == normalized_root(&image)));
    }

    #[test]
    fn subgroup_orders_divide_group_order(t in 0usize..64, picks in prop::collection::vec(any::<prop::sample::Index>(), 1..4)) {
        let types = small_types();
        let w = group(types[t % types.len()]);
        let gens: Vec<usize> = picks.iter().map(|p| p.index(w.order())).collect();
        let h = Subgroup::generated_by(&w, &gens);
        prop_assert!(h.is_closed());
        prop_assert_eq!(w.order() % h.order(), 0);
        for &g in &gens {
            prop_assert_eq!(w.order() % w.element_order(g), 0);
        }
    }

    #[test]
    fn normalizers_of_conjugates_are_conjugate(t in 0usize..64, x in any::<prop::sample::Index>(), s in any::<prop::sample::Index>()) {
        let types = small_types();
        let w = group(types[t % types.len()]);
        let delta = build_root_system(&w);
        let subgroups = maximal_elementary_2subgroups(&w, &delta);
        let h = &subgroups[s.index(subgroups.len())];
        let g = x.index(w.order());
        let (n, _) = normalizer_action(&w, h);
        let (n_conj, _) = normalizer_action(&w, &h.conjugate_by(g));
        prop_assert_eq!(n_conj, n.conjugate_by(g));
    }
}
