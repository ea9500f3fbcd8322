//! Invariants over randomly generated matroids, checked against the
//! brute-force reference implementations.

use matroid_rough::connectivity::{
    connectivity_report, disconnection_witness, is_connected, is_connected_neighborhood,
    is_connected_pairwise_circuit, matroid_components, WitnessMode,
};
use matroid_rough::io::MatroidDocument;
use matroid_rough::oracle::{
    generate, proposition_battery, BruteForce, GeneratorKind, GeneratorSpec, RowStatus,
};
use matroid_rough::{
    canonical_masks, check_all_axioms, induced_graph, induced_relation, min_of, opp_of,
    upper_via_circuits, Matroid,
};
use proptest::prelude::*;

fn kind() -> impl Strategy<Value = GeneratorKind> {
    let leaf = prop_oneof![
        (1usize..=7).prop_flat_map(
            |size| (0..=size).prop_map(move |rank| GeneratorKind::Uniform { rank, size })
        ),
        (1usize..=5, 1usize..=7)
            .prop_map(|(vertices, edges)| GeneratorKind::Graphic { vertices, edges }),
        (1usize..=3, 1usize..=7).prop_map(|(rows, cols)| GeneratorKind::Vector { rows, cols }),
    ];
    prop_oneof![
        3 => leaf.clone(),
        1 => (leaf.clone(), leaf).prop_filter_map("at most eight elements", |(a, b)| {
            let k = GeneratorKind::Sum(vec![a, b]);
            Some(k).filter(|k| k.size().is_some_and(|n| n <= 8))
        }),
    ]
}

fn matroid() -> impl Strategy<Value = Matroid> {
    (kind(), any::<u64>()).prop_map(|(k, seed)| {
        generate(&GeneratorSpec::new(k, seed))
            .unwrap()
            .pop()
            .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn axioms_hold(m in matroid()) {
        let report = check_all_axioms(&m);
        prop_assert!(report.passed(), "{}", report);
    }

    #[test]
    fn circuits_are_minimal_dependent_sets(m in matroid()) {
        prop_assert_eq!(m.circuits(), &min_of(&opp_of(m.independents()).unwrap()));
        let mut reference = BruteForce::new(&m).circuit_masks();
        let mut ours = m.circuits().masks().to_vec();
        reference.sort_unstable();
        ours.sort_unstable();
        prop_assert_eq!(ours, reference);
    }

    #[test]
    fn agrees_with_brute_force(m in matroid()) {
        let b = BruteForce::new(&m);
        let n = m.ground().len();
        let r = (!m.is_free()).then(|| induced_relation(&m).unwrap());
        for x in m.ground().all_subsets() {
            prop_assert_eq!(m.rank(&x).unwrap(), b.rank_mask(x.mask()));
            prop_assert_eq!(m.closure(&x).unwrap().mask(), b.closure_mask(x.mask()));
            prop_assert_eq!(m.closure_via_rank(&x).unwrap(), m.closure(&x).unwrap());
            prop_assert_eq!(upper_via_circuits(&m, &x).unwrap().mask(), b.upper_mask(x.mask()));
            if let Some(r) = &r {
                prop_assert_eq!(r.upper_approx(&x).unwrap().mask(), b.upper_mask(x.mask()));
            }
        }
        let components = matroid_components(&m);
        prop_assert_eq!(components.block_masks(), &b.component_masks()[..]);
        prop_assert_eq!(canonical_masks(n).count(), 1 << n);
    }

    #[test]
    fn relation_structure(m in matroid().prop_filter("general", |m| !m.is_free())) {
        let r = induced_relation(&m).unwrap();
        prop_assert!(r.is_symmetric() && r.is_transitive());
        for x in 0..m.ground().len() {
            let through: u32 = m
                .circuits()
                .masks()
                .iter()
                .filter(|&&c| c & (1 << x) != 0)
                .fold(0, |a, &c| a | c);
            prop_assert_eq!(r.successor_neighborhood(x).unwrap().mask(), through);
        }
        let g = induced_graph(&m).unwrap();
        let expected: Vec<(usize, usize)> = r.pairs().filter(|(x, y)| x < y).collect();
        prop_assert_eq!(g.edges(), expected);
        let (ours, theirs) = (g.components(), matroid_components(&m));
        prop_assert_eq!(ours.block_masks(), theirs.block_masks());
    }

    #[test]
    fn connectivity_deciders_agree(m in matroid().prop_filter("general", |m| !m.is_free())) {
        let connected = is_connected(&m);
        prop_assert_eq!(is_connected_pairwise_circuit(&m).verdict, connected);
        prop_assert_eq!(is_connected_neighborhood(&m).unwrap().verdict, connected);
        let ex = disconnection_witness(&m, WitnessMode::Exhaustive);
        let comp = disconnection_witness(&m, WitnessMode::Component);
        prop_assert_eq!(ex.is_none(), connected);
        prop_assert_eq!(comp.is_none(), connected);
        let r = induced_relation(&m).unwrap();
        for w in ex.iter().chain(comp.iter()) {
            prop_assert!(!w.is_empty() && *w != m.ground().full_set());
            prop_assert!(r.upper_approx(w).unwrap().is_subset_of(w).unwrap());
        }
        prop_assert!(connectivity_report(&m, 16).agreement);
    }

    #[test]
    fn battery_has_no_unexpected_failures(m in matroid()) {
        let b = proposition_battery(&m, 16);
        let bad: Vec<_> = b.unexpected_failures().collect();
        prop_assert!(bad.is_empty(), "{:?}", bad);
        prop_assert!(b.rows.iter().all(|r| r.status != RowStatus::Skipped));
    }

    #[test]
    fn documents_round_trip(m in matroid()) {
        let doc = MatroidDocument::from_matroid(&m);
        let back = MatroidDocument::parse(&doc.emit_text()).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.build().unwrap(), m);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn generation_is_deterministic(k in kind(), seed in any::<u64>()) {
        let spec = GeneratorSpec::new(k, seed);
        prop_assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
        let reparsed: GeneratorSpec = spec.to_string().parse().unwrap();
        prop_assert_eq!(generate(&reparsed).unwrap(), generate(&spec).unwrap());
    }
}
