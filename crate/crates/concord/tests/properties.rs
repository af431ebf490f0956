mod common;

use common::{joined, oracle_joined, ALPHABET};
use concord::index::{build_position_index, build_truth_table};
use concord::kernel::{self, kappa_pair, kappa_set, kappa_set_low_memory, max_common_count};
use concord::lcs::{all_lcs, psi_lengths, DEFAULT_CAP};
use concord::model::{parse_ordering, BucketOrdering, OrderingSet, Symbol};
use concord::oracle::{self, is_subsequence, occurs_in};
use concord::scs::{common_symbols, smallest_covering_set, smallest_covering_set_with};
use num_bigint::BigUint;
use num_traits::One;
use proptest::prelude::*;
use proptest::sample::select;

fn ordering(n: usize, tie: f64) -> impl Strategy<Value = BucketOrdering> {
    (
        Just(ALPHABET[..n].to_vec()).prop_shuffle(),
        prop_oneof![3 => Just(n), 1 => 1..=n],
        proptest::collection::vec(proptest::bool::weighted(tie), n),
    )
        .prop_map(|(items, keep, merges)| {
            let mut buckets: Vec<Vec<Symbol>> = Vec::new();
            for (k, it) in items.into_iter().take(keep).enumerate() {
                let sym = Symbol::new(it).unwrap();
                match buckets.last_mut() {
                    Some(b) if merges[k] => b.push(sym),
                    _ => buckets.push(vec![sym]),
                }
            }
            BucketOrdering::from_buckets(buckets).unwrap()
        })
}

fn ordering_list(max_n: usize, max_count: usize, tie: f64) -> impl Strategy<Value = Vec<BucketOrdering>> {
    (2..=max_n).prop_flat_map(move |n| proptest::collection::vec(ordering(n, tie), 1..=max_count))
}

fn ordering_set(max_n: usize, max_count: usize, tie: f64) -> impl Strategy<Value = OrderingSet> {
    ordering_list(max_n, max_count, tie).prop_map(|v| OrderingSet::dedupe(v).unwrap())
}

fn tie_rate() -> impl Strategy<Value = f64> {
    select(vec![0.0, 0.3])
}

fn permutation(n: usize) -> impl Strategy<Value = BucketOrdering> {
    Just(ALPHABET[..n].to_vec())
        .prop_shuffle()
        .prop_map(|v| BucketOrdering::strict(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn format_then_parse_round_trips(o in tie_rate().prop_flat_map(|t| ordering(8, t))) {
        let back = parse_ordering(&o.to_string()).unwrap();
        prop_assert_eq!(back, o);
    }

    #[test]
    fn strict_labels_are_positions(o in ordering(8, 0.0)) {
        let expected: Vec<u32> = (1..=o.len() as u32).collect();
        prop_assert_eq!(o.labels(), expected.as_slice());
    }

    #[test]
    fn dedupe_is_idempotent(list in ordering_list(5, 6, 0.0)) {
        let once = OrderingSet::dedupe(list).unwrap();
        let twice = OrderingSet::dedupe(once.orderings().to_vec()).unwrap();
        prop_assert_eq!(once.orderings(), twice.orderings());
        prop_assert_eq!(twice.duplicates_dropped(), 0);
    }

    #[test]
    fn kappa_matches_oracle(set in tie_rate().prop_flat_map(|t| ordering_set(8, 5, t))) {
        let brute = oracle::intersect_all(&set).unwrap();
        prop_assert_eq!(kappa_set(&set).kappa, BigUint::from(brute.len()));
    }

    #[test]
    fn low_memory_path_agrees(set in tie_rate().prop_flat_map(|t| ordering_set(8, 5, t))) {
        prop_assert_eq!(kappa_set_low_memory(&set), kappa_set(&set));
    }

    #[test]
    fn pair_kernel_symmetric_and_consistent(
        x in tie_rate().prop_flat_map(|t| ordering(8, t)),
        y in tie_rate().prop_flat_map(|t| ordering(8, t)),
    ) {
        prop_assert_eq!(kappa_pair(&x, &y), kappa_pair(&y, &x));
        let set = OrderingSet::dedupe(vec![x.clone(), y.clone()]).unwrap();
        prop_assert_eq!(kappa_set(&set).kappa, kappa_pair(&x, &y));
        prop_assert_eq!(kernel::self_kernel(&x), kappa_pair(&x, &x));
    }

    #[test]
    fn reference_choice_does_not_matter(set in tie_rate().prop_flat_map(|t| ordering_set(8, 5, t))) {
        let base = kappa_set(&set);
        for k in 1..set.len() {
            let rotated = kappa_set(&set.with_reference(k));
            prop_assert_eq!(&rotated.kappa, &base.kappa);
            prop_assert_eq!(rotated.llcs, base.llcs);
        }
    }

    #[test]
    fn normalized_within_unit_interval(set in tie_rate().prop_flat_map(|t| ordering_set(8, 5, t))) {
        let v = kernel::normalized_concordance(&set);
        prop_assert!((0.0..=1.0).contains(&v));
    }

    #[test]
    fn truth_table_chains_are_common(set in tie_rate().prop_flat_map(|t| ordering_set(8, 4, t))) {
        let t = build_truth_table(&build_position_index(&set));
        let m = t.size();
        let reference: Vec<&str> = set.reference().symbols().iter().map(|s| s.as_str()).collect();
        // every chain j1 < j2 < ... with consecutive T entries is common
        for mask in 1u32..(1 << m) {
            let idx: Vec<usize> = (0..m).filter(|&i| mask & (1 << i) != 0).collect();
            let chain = idx.iter().all(|&i| t.is_common(i))
                && idx.windows(2).all(|w| t.precedes(w[0], w[1]));
            let seq: Vec<&str> = idx.iter().map(|&i| reference[i]).collect();
            let common = set.orderings().iter().all(|o| occurs_in(&seq, o));
            prop_assert_eq!(chain, common, "{:?}", seq);
        }
        for j in 0..m {
            for k in 0..j {
                if t.precedes(k, j) {
                    prop_assert!(t.is_common(j) && t.is_common(k));
                }
            }
        }
    }

    #[test]
    fn psi_bounds(set in tie_rate().prop_flat_map(|t| ordering_set(8, 4, t))) {
        let t = build_truth_table(&build_position_index(&set));
        let psi = psi_lengths(&t);
        for i in 0..t.size() {
            prop_assert_eq!(psi.get(i) == 0, !t.is_common(i));
            prop_assert!(psi.get(i) <= i + 1);
        }
        prop_assert_eq!(psi.llcs, psi.psi.iter().copied().max().unwrap_or(0));
    }

    #[test]
    fn lcs_matches_oracle(set in tie_rate().prop_flat_map(|t| ordering_set(8, 4, t))) {
        let found = all_lcs(&set, DEFAULT_CAP).unwrap();
        let brute = oracle::intersect_all(&set).unwrap();
        prop_assert_eq!(joined(&found.sequences), oracle_joined(brute.longest()));
        for q in &found.sequences {
            prop_assert_eq!(q.len(), found.llcs);
            let toks: Vec<&str> = q.iter().map(Symbol::as_str).collect();
            prop_assert!(set.orderings().iter().all(|o| occurs_in(&toks, o)));
        }
    }

    #[test]
    fn lcs_count_bounded_by_max_common(x in permutation(8), y in permutation(8)) {
        let set = OrderingSet::dedupe(vec![x, y]).unwrap();
        let found = all_lcs(&set, DEFAULT_CAP).unwrap();
        let bound = max_common_count(8, found.llcs).unwrap();
        prop_assert!(BigUint::from(found.len()) <= bound);
    }

    #[test]
    fn covering_set_matches_oracle(set in tie_rate().prop_flat_map(|t| ordering_set(8, 4, t))) {
        let report = smallest_covering_set(&set, DEFAULT_CAP).unwrap();
        let brute = oracle::intersect_all(&set).unwrap();
        let cover = &report.covering_set.sequences;
        prop_assert_eq!(joined(cover), oracle_joined(oracle::maximal_elements(&brute)));

        // lcs members are part of the cover
        let cover_strings = joined(cover);
        for q in joined(&report.lcs) {
            prop_assert!(cover_strings.contains(&q));
        }
        // antichain
        for (i, a) in cover.iter().enumerate() {
            for (j, b) in cover.iter().enumerate() {
                prop_assert!(i == j || !is_subsequence(a, b));
            }
        }
        // every common symbol is covered
        let t = build_truth_table(&build_position_index(&set));
        for i in common_symbols(&t) {
            let sym = &set.reference().symbols()[i];
            prop_assert!(cover.iter().any(|q| q.contains(sym)));
        }
    }

    #[test]
    fn covering_set_independent_of_processing_order(
        set in ordering_set(8, 4, 0.0),
        seed in any::<u64>(),
    ) {
        let base = smallest_covering_set(&set, DEFAULT_CAP).unwrap();
        let mut state = seed;
        let shuffled = smallest_covering_set_with(&set, DEFAULT_CAP, |c| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            c[(state >> 33) as usize % c.len()]
        })
        .unwrap();
        prop_assert_eq!(base.covering_set, shuffled.covering_set);
    }

    #[test]
    fn oracle_strict_enumeration_size(o in ordering(10, 0.0)) {
        let s = oracle::enumerate_subsequences(&o).unwrap();
        prop_assert_eq!(s.len(), (1usize << o.len()) - 1);
    }

    #[test]
    fn oracle_maximal_elements_cover(set in ordering_set(7, 3, 0.3)) {
        let brute = oracle::intersect_all(&set).unwrap();
        let max = oracle::maximal_elements(&brute);
        prop_assert!(oracle::is_covering_antichain(&brute, &max));
    }

    #[test]
    fn distance_metric_on_permutations(
        x in permutation(7), y in permutation(7), z in permutation(7),
    ) {
        let dxy = kernel::distance(&x, &y);
        prop_assert!(dxy >= 0.0);
        prop_assert_eq!(dxy, kernel::distance(&y, &x));
        prop_assert_eq!(dxy == 0.0, x == y);
        let dxz = kernel::distance(&x, &z);
        let dyz = kernel::distance(&y, &z);
        prop_assert!(dxz <= dxy + dyz + 1e-9);
        // same alphabet: d^2 = 2^(n+1) - 2 - 2 kappa
        let expected = (BigUint::one() << 8u32) - BigUint::from(2u32) - (kappa_pair(&x, &y) << 1u32);
        prop_assert_eq!(kernel::squared_distance(&x, &y), expected);
    }
}

#[test]
fn reversed_pair_normalization() {
    let set = common::set(&["abcd", "dcba"]);
    let v = kernel::normalized_concordance(&set);
    assert!((v - 4.0 / 15.0).abs() < 1e-12);
    // adding more orderings never raises the shared count above n
    let set = common::set(&["abcd", "dcba", "badc"]);
    assert_eq!(kappa_set(&set).kappa, BigUint::from(4u32));
}
