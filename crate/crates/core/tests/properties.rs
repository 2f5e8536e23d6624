mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use psc_core::colorful_graph::{build_colorful_graph, Orientation};
use psc_core::extend::{extend_to_single_crossing, is_sc, is_ssc, ssc_violation};
use psc_core::formula_graph::{
    build_formula_graph, complement, complementary_pairs_partition, ComplementaryPartition, Pair,
};
use psc_core::nb::{
    brute_force_solve, extract_nb_constraints, first_violated, order_satisfies, Axis, NbInstance,
};
use psc_core::orient::{fpt_solve, orientation_to_axis};
use psc_core::pipeline::{brute_force_psc, recognize_psc, RecognitionOutcome, Rejection};
use psc_core::profile::{generate_sc_positive, ApprovalProfile};

use common::*;

fn profile(max_m: usize, max_n: usize) -> impl Strategy<Value = ApprovalProfile> {
    (1..=max_m, 1..=max_n).prop_flat_map(|(m, n)| {
        prop::collection::vec(any::<bool>(), m * n).prop_map(move |bits| from_bits(m, n, &bits))
    })
}

fn nb_instance(max_n: usize) -> impl Strategy<Value = NbInstance> {
    (3..=max_n).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n, 0..n), 0..8).prop_map(move |raw| {
            let triples = raw
                .into_iter()
                .filter(|&(i, j, k)| i != j && j != k && i != k);
            NbInstance::new(n, triples).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn constraints_match_definition(p in profile(5, 6)) {
        let w = p.to_weak_orders();
        let got: BTreeSet<_> = extract_nb_constraints(&w).triples().collect();
        prop_assert_eq!(got, naive_constraints(&w));
    }

    #[test]
    fn ssc_iff_constraints_hold(p in profile(5, 5)) {
        let w = p.to_weak_orders();
        let inst = extract_nb_constraints(&w);
        for axis in axes(w.voters()) {
            let ssc = is_ssc(&w, &axis).unwrap();
            prop_assert_eq!(ssc, order_satisfies(&inst, &axis).unwrap());
            prop_assert_eq!(ssc, naive_ssc(&w, axis.order()));
        }
    }

    #[test]
    fn reversal_and_triple_symmetry(inst in nb_instance(6), seed in any::<u64>()) {
        let n = inst.ground_size();
        let mirrored = NbInstance::new(n, inst.triples().map(|(i, j, k)| (k, j, i))).unwrap();
        let all = permutations(n);
        let axis = Axis::new(all[(seed as usize) % all.len()].clone()).unwrap();
        let sat = order_satisfies(&inst, &axis).unwrap();
        prop_assert_eq!(sat, order_satisfies(&inst, &axis.reversed()).unwrap());
        prop_assert_eq!(sat, order_satisfies(&mirrored, &axis).unwrap());
        prop_assert_eq!(sat, first_violated(&inst, &axis).is_none());
    }

    #[test]
    fn formula_graph_is_complement_closed(inst in nb_instance(6)) {
        let g = build_formula_graph(&inst);
        let n = inst.ground_size();
        prop_assert_eq!(g.vertex_count(), n * (n - 1));
        prop_assert!(g.edge_count() <= 2 * inst.len());
        for (u, v) in g.edges() {
            prop_assert!(g.has_edge(complement(u), complement(v)));
            prop_assert!(g.has_edge(v, u));
        }
    }

    #[test]
    fn partition_or_clash(inst in nb_instance(5)) {
        let g = build_formula_graph(&inst);
        match complementary_pairs_partition(&g) {
            Ok(part) => check_component_assignments(&inst, &part),
            Err(clash) => {
                prop_assert!(clash.verify(&g));
                prop_assert_eq!(clash.path.first().copied(), Some(clash.witness));
                prop_assert_eq!(clash.path.last().copied(), Some(complement(clash.witness)));
                for w in clash.path.windows(2) {
                    prop_assert!(g.has_edge(w[0], w[1]));
                }
                prop_assert_eq!(brute_force_solve(&inst, 9).unwrap(), None);
            }
        }
    }

    #[test]
    fn fpt_agrees_with_brute_force(inst in nb_instance(6)) {
        let brute = brute_force_solve(&inst, 9).unwrap();
        let g = build_formula_graph(&inst);
        let fpt = match complementary_pairs_partition(&g) {
            Err(_) => None,
            Ok(part) => {
                let cg = build_colorful_graph(&part);
                fpt_solve(&cg, 20).unwrap().map(|o| orientation_to_axis(&cg, &o).unwrap())
            }
        };
        prop_assert_eq!(brute.is_some(), fpt.is_some());
        if let Some(axis) = fpt {
            prop_assert!(naive_satisfies(&inst.triples().collect(), axis.order()));
        }
        if let Some(axis) = brute {
            prop_assert!(naive_satisfies(&inst.triples().collect(), axis.order()));
        }
    }

    #[test]
    fn colorful_graph_structure(p in profile(5, 6), flips in any::<u64>()) {
        let g = build_formula_graph(&extract_nb_constraints(&p.to_weak_orders()));
        let Ok(part) = complementary_pairs_partition(&g) else { return Ok(()) };
        let cg = build_colorful_graph(&part);
        let n = cg.voters();
        let mut seen = BTreeSet::new();
        for edges in cg.colors() {
            for &(u, v) in edges {
                prop_assert!(seen.insert((u.min(v), u.max(v))), "parallel edge {:?}", (u, v));
            }
        }
        // a same-colored directed path u→v→w closes only with that color
        for (c, edges) in cg.colors().iter().enumerate() {
            for &(u, v) in edges {
                for &(v2, w) in edges {
                    if v2 == v && w != u {
                        if let Some(d) = cg.color_between(u, w) {
                            prop_assert_eq!(d, c, "path {:?} of color {}", (u, v, w), c);
                        }
                    }
                }
            }
        }
        for color in 0..cg.color_count() {
            if let Ok(bc) = cg.biclique_decomposition(color) {
                let mut o = Orientation::keep_all(cg.color_count());
                o.toggle(color);
                let flipped = cg.apply_orientation(&o).unwrap();
                for &s in &bc.targets {
                    for &t in &bc.sources {
                        prop_assert!(flipped.has_edge(s, t));
                    }
                }
                prop_assert_eq!(bc.flipped().sources, bc.targets.clone());
            }
        }
        let o = Orientation::from_counter(cg.color_count(), flips & ((1u64 << cg.color_count()) - 1));
        let mono = |o: &Orientation| {
            (0..cg.color_count()).any(|c| {
                let edges = cg.color_edges(c).iter().map(|&(u, v)| if o.is_flipped(c) { (v, u) } else { (u, v) });
                !psc_core::digraph::DiGraph::from_edges(n, edges).is_acyclic()
            })
        };
        prop_assert_eq!(mono(&o), cg.has_monochromatic_cycle().is_some());
    }

    #[test]
    fn recognition_matches_brute_force(p in profile(5, 6)) {
        let w = p.to_weak_orders();
        let outcome = recognize_psc(&w).unwrap();
        let brute = brute_force_psc(&w, 8).unwrap();
        prop_assert_eq!(outcome.is_accept(), brute.is_some());
        match outcome {
            RecognitionOutcome::Accept { axis, linear_profile } => {
                prop_assert!(naive_ssc(&w, axis.order()));
                prop_assert!(naive_ssc(&linear_profile.to_weak_orders(), axis.order()));
                prop_assert!(linear_profile.extends(&w));
            }
            RecognitionOutcome::Reject(Rejection::ComplementClash(clash)) => {
                let g = build_formula_graph(&extract_nb_constraints(&w));
                prop_assert!(clash.verify(&g));
            }
            RecognitionOutcome::Reject(Rejection::MonochromaticCycle { color, cycle }) => {
                let g = build_formula_graph(&extract_nb_constraints(&w));
                let cg = build_colorful_graph(&complementary_pairs_partition(&g).unwrap());
                prop_assert!(psc_core::digraph::is_cycle_in(&cg.color_digraph(color), &cycle));
            }
        }
    }

    #[test]
    fn recognition_is_voter_permutation_invariant(p in profile(4, 6), seed in any::<u64>()) {
        let all = permutations(p.voters());
        let perm = &all[(seed as usize) % all.len()];
        let q = p.subprofile(perm, &(0..p.candidates()).collect::<Vec<_>>()).unwrap();
        let a = recognize_psc(&p.to_weak_orders()).unwrap();
        let b = recognize_psc(&q.to_weak_orders()).unwrap();
        prop_assert_eq!(a.is_accept(), b.is_accept());
        if let Some(axis) = b.axis() {
            // map the axis of q back to voters of p
            let back: Vec<usize> = axis.order().iter().map(|&v| perm[v]).collect();
            prop_assert!(naive_ssc(&p.to_weak_orders(), &back));
        }
    }

    #[test]
    fn extension_keeps_strict_preferences(p in profile(5, 6)) {
        let w = p.to_weak_orders();
        let Some(axis) = brute_force_psc(&w, 8).unwrap() else { return Ok(()) };
        let lin = extend_to_single_crossing(&w, &axis).unwrap();
        prop_assert!(is_sc(&lin, &axis).unwrap());
        for v in 0..w.voters() {
            let r = lin.ranking(v);
            let mut sorted = r.to_vec();
            sorted.sort_unstable();
            prop_assert_eq!(sorted, (0..w.candidates()).collect::<Vec<_>>());
            for (x, &a) in r.iter().enumerate() {
                for &b in &r[x + 1..] {
                    prop_assert!(w.score(v, a) >= w.score(v, b));
                }
            }
        }
    }

    #[test]
    fn sc_positive_profiles_are_accepted(n in 1usize..=6, m in 1usize..=6, seed in any::<u64>()) {
        let p = generate_sc_positive(n, m, seed).unwrap();
        prop_assert_eq!((p.voters(), p.candidates()), (n, m));
        prop_assert_eq!(p.clone(), generate_sc_positive(n, m, seed).unwrap());
        prop_assert!(brute_force_psc(&p.to_weak_orders(), 8).unwrap().is_some());
    }

    #[test]
    fn three_valued_input_is_handled_soundly(
        scores in (3usize..=6, 2usize..=5).prop_flat_map(|(n, m)| {
            prop::collection::vec(prop::collection::vec(0i64..3, m), n)
        })
    ) {
        let w = psc_core::profile::WeakOrderProfile::new(&scores).unwrap();
        let brute = brute_force_psc(&w, 8).unwrap();
        match recognize_psc(&w) {
            Ok(RecognitionOutcome::Accept { axis, linear_profile }) => {
                prop_assert!(naive_ssc(&w, axis.order()));
                prop_assert!(linear_profile.extends(&w));
            }
            Ok(RecognitionOutcome::Reject(_)) => prop_assert!(brute.is_none()),
            Err(psc_core::Error::StructureViolation(_)) => {}
            Err(e) => prop_assert!(false, "unexpected error {}", e),
        }
    }

    #[test]
    fn subprofile_laws(p in profile(5, 5)) {
        let all_v: Vec<usize> = (0..p.voters()).collect();
        let all_c: Vec<usize> = (0..p.candidates()).collect();
        prop_assert_eq!(p.subprofile(&all_v, &all_c).unwrap(), p.clone());
        if p.voters() > 1 && p.candidates() > 1 {
            let a = p.without_voter(0).unwrap().without_candidate(0).unwrap();
            let b = p.without_candidate(0).unwrap().without_voter(0).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}

// Component-constant assignments satisfy antisymmetry and the triple equalities.
fn check_component_assignments(inst: &NbInstance, part: &ComplementaryPartition) {
    let k = part.pairs().len();
    let tuples = if k > 10 { 1024 } else { 1u64 << k };
    for t in 0..tuples {
        let value = |u: Pair| {
            let (id, in_s) = part.locate(u);
            let bit = (t >> (id % 64)) & 1 == 1;
            bit == in_s
        };
        for i in 0..inst.ground_size() {
            for j in 0..inst.ground_size() {
                if i != j {
                    assert_ne!(value((i, j)), value((j, i)));
                }
            }
        }
        for (a, b, c) in inst.triples() {
            assert_eq!(value((a, b)), value((c, b)));
            assert_eq!(value((b, a)), value((b, c)));
        }
    }
}

#[test]
fn sc_extension_exists_iff_ssc() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for _ in 0..150 {
        let n = rng.gen_range(1..=4);
        let m = rng.gen_range(1..=3);
        let p = psc_core::profile::generate_uniform(n, m, &mut rng).to_weak_orders();
        let axis = Axis::identity(n);
        let exists = any_sc_extension(&p, n, m);
        assert_eq!(exists, ssc_violation(&p, &axis).unwrap().is_none(), "{p:?}");
    }
}

fn any_sc_extension(p: &psc_core::profile::WeakOrderProfile, n: usize, m: usize) -> bool {
    let per_voter: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|v| {
            permutations(m)
                .into_iter()
                .filter(|r| r.windows(2).all(|w| p.score(v, w[0]) >= p.score(v, w[1])))
                .collect()
        })
        .collect();
    let mut idx = vec![0usize; n];
    loop {
        let rankings: Vec<Vec<usize>> = (0..n).map(|v| per_voter[v][idx[v]].clone()).collect();
        let lin = psc_core::profile::LinearProfile::new(rankings).unwrap();
        let identity: Vec<usize> = (0..n).collect();
        if naive_ssc(&lin.to_weak_orders(), &identity) {
            return true;
        }
        let mut v = 0;
        loop {
            if v == n {
                return false;
            }
            idx[v] += 1;
            if idx[v] < per_voter[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
    }
}
