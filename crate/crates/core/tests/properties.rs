mod common;

use proptest::prelude::*;

use hiker::coloring::{parse_krt, truncate, write_krt, RandomOracle};
use hiker::combinatorics::{colex_rank, colex_unrank};
use hiker::homogeneity::{
    build_track_trie, extract_monochromatic, find_end_homogeneous, is_end_homogeneous, longest_track_sequence,
};
use hiker::pnumbers::{exact_p, statement_holds, SearchOptions, StatementSpec, Variant};
use hiker::track::{build_track, check_injectivity};
use hiker::{Coloring, ColoringKind};

use common::{brute_end_homogeneous, brute_has_witness};

fn random_coloring() -> impl Strategy<Value = Coloring> {
    (any::<u64>(), 1usize..=2, 2u32..=3, 0usize..8).prop_map(|(seed, n, r, extra)| {
        let ground = (n + 1 + extra).min(10);
        Coloring::generate(&ColoringKind::Random { seed }, ground, n + 1, r).unwrap()
    })
}

proptest! {
    #[test]
    fn colex_round_trip(set in proptest::collection::btree_set(0usize..40, 1..7)) {
        let members: Vec<usize> = set.into_iter().collect();
        let rank = colex_rank(&members).unwrap();
        prop_assert_eq!(colex_unrank(rank, members.len()).into_vec(), members);
    }

    #[test]
    fn krt_round_trip(c in random_coloring()) {
        let text = write_krt(&c);
        prop_assert_eq!(parse_krt(&text).unwrap(), c);
    }

    #[test]
    fn tracks_are_end_homogeneous(c in random_coloring()) {
        for x in 0..c.ground_size() {
            let tr = build_track(&c, x).unwrap();
            prop_assert!(is_end_homogeneous(&c, tr.points()).unwrap().holds());
            prop_assert!(tr.points().iter().all(|&p| p <= x));
        }
        prop_assert!(check_injectivity(&c).is_injective());
    }

    #[test]
    fn search_is_at_least_as_strong_as_tracks(c in random_coloring()) {
        let longest = longest_track_sequence(&c);
        prop_assert!(longest.verified);
        for k in 1..=longest.points.len() {
            let w = find_end_homogeneous(&c, k);
            prop_assert!(w.is_some(), "no witness of length {} despite a track of length {}", k, longest.points.len());
            let w = w.unwrap();
            prop_assert_eq!(w.points.len(), k);
            prop_assert!(brute_end_homogeneous(&c, &w.points));
        }
    }

    #[test]
    fn extraction_verifies(c in random_coloring()) {
        let w = extract_monochromatic(&c).unwrap();
        prop_assert!(w.members.windows(2).all(|p| p[0] < p[1]));
        let t = c.tuple_size();
        for s in common::index_subsets(w.members.len(), t) {
            let pts: Vec<usize> = s.iter().map(|&i| w.members[i]).collect();
            prop_assert_eq!(c.color_of(&pts).unwrap(), w.color);
        }
    }

    #[test]
    fn trie_depth_grows_with_truncation(seed in any::<u64>(), t in 2usize..=3) {
        let oracle = RandomOracle { tuple_size: t, num_colors: 2, seed };
        let mut previous = 0;
        for ground in t..=9 {
            let c = truncate(&oracle, ground).unwrap();
            let stats = build_track_trie(&c).stats();
            prop_assert!(stats.prefix_consistent);
            prop_assert_eq!(stats.node_count, ground);
            prop_assert!(stats.depth >= previous);
            previous = stats.depth;
        }
    }
}

#[test]
fn absent_witness_means_none_exists() {
    for seed in 0..400u64 {
        let t = 2 + (seed % 2) as usize;
        let ground = 4 + (seed / 2 % 4) as usize;
        let c = Coloring::generate(&ColoringKind::Random { seed }, ground, t, 2 + (seed / 8 % 2) as u32).unwrap();
        for k in 1..=ground {
            let found = find_end_homogeneous(&c, k).is_some();
            assert_eq!(found, brute_has_witness(&c, k), "seed {seed} N={ground} t={t} k={k}");
        }
    }
}

#[test]
fn statement_is_monotone_in_ground_size() {
    let opts = SearchOptions { workers: 2, ..SearchOptions::default() };
    for variant in [Variant::Sequence, Variant::Track] {
        for (r, n, k) in [(1, 2, 3), (1, 2, 4), (0, 3, 3), (2, 2, 4), (1, 3, 3)] {
            let mut held = false;
            for ground in k.max(r + 1)..=6 {
                let spec = StatementSpec { ground_size: ground, arity: r, num_colors: n, target_length: k, variant };
                let Ok(outcome) = statement_holds(&spec, &opts) else { break };
                assert!(!held || outcome.holds, "{spec:?} fails after holding at a smaller size");
                held |= outcome.holds;
            }
        }
    }
}

#[test]
fn sequence_variant_never_exceeds_track_variant() {
    let opts = SearchOptions::default();
    for (k, r, n) in [(3, 1, 2), (3, 1, 3), (4, 2, 2), (3, 2, 2), (3, 0, 3), (4, 0, 2)] {
        let seq = exact_p(k, r, n, Variant::Sequence, &opts).unwrap();
        let track = exact_p(k, r, n, Variant::Track, &opts).unwrap();
        assert!(seq.value <= track.value, "({k},{r},{n}): {} > {}", seq.value, track.value);
        for report in [&seq, &track] {
            if let Some(bound) = &report.theorem9_bound {
                assert!(num_bigint::BigUint::from(report.value) < *bound);
            }
        }
    }
}

#[test]
fn counterexamples_refail_after_serialization() {
    let opts = SearchOptions::default();
    for variant in [Variant::Sequence, Variant::Track] {
        for (k, r, n) in [(3, 1, 2), (3, 1, 3), (4, 2, 2), (4, 0, 3), (2, 0, 2)] {
            let report = exact_p(k, r, n, variant, &opts).unwrap();
            let cx = report.counterexample.expect("scan started below p");
            assert_eq!(cx.ground_size(), report.value - 1);
            let back = parse_krt(&write_krt(&cx)).unwrap();
            match variant {
                Variant::Sequence => assert!(find_end_homogeneous(&back, k).is_none()),
                Variant::Track => assert!(longest_track_sequence(&back).points.len() < k),
            }
            assert!(!brute_has_witness(&back, k) || variant == Variant::Track);
        }
    }
}
