mod common;

use std::collections::BTreeSet;

use common::brute_force_partitions;
use num_bigint::BigUint;
use ssp_core::enumeration::{count_ss_with, count_ts_with};
use ssp_core::{
    count_ss, count_ts, enumerate_partitions, ss_to_ts_partition, Class, EnumOptions, Enumerator,
    Partition,
};

#[test]
fn enumerators_match_subset_brute_force() {
    for (d, n) in [(1, 5), (2, 3), (2, 4), (3, 2), (4, 2)] {
        let brute = brute_force_partitions(d, n);
        let as_set = |v: Vec<Partition>| v.into_iter().collect::<BTreeSet<_>>();
        let all = enumerate_partitions(d, n, Class::All).unwrap();
        assert_eq!(all.len(), brute.len());
        assert_eq!(as_set(all), as_set(brute.clone()));

        let ss: Vec<Partition> = brute
            .iter()
            .filter(|p| p.is_strongly_stable())
            .cloned()
            .collect();
        let ts: Vec<Partition> = brute
            .iter()
            .filter(|p| p.is_totally_symmetric())
            .cloned()
            .collect();
        let got_ss = enumerate_partitions(d, n, Class::StronglyStable).unwrap();
        let got_ts = enumerate_partitions(d, n, Class::TotallySymmetric).unwrap();
        assert_eq!(got_ss.len(), ss.len(), "ss d={d} n={n}");
        assert_eq!(got_ts.len(), ts.len(), "ts d={d} n={n}");
        assert_eq!(as_set(got_ss), as_set(ss));
        assert_eq!(as_set(got_ts), as_set(ts));
    }
}

#[test]
fn pruned_enumerators_match_filtered_full_enumeration() {
    for (d, n) in [(2, 6), (3, 3)] {
        let all = enumerate_partitions(d, n, Class::All).unwrap();
        let ss: BTreeSet<_> = all
            .iter()
            .filter(|p| p.is_strongly_stable())
            .cloned()
            .collect();
        let ts: BTreeSet<_> = all
            .iter()
            .filter(|p| p.is_totally_symmetric())
            .cloned()
            .collect();
        let got_ss = enumerate_partitions(d, n, Class::StronglyStable).unwrap();
        let got_ts = enumerate_partitions(d, n, Class::TotallySymmetric).unwrap();
        assert_eq!(got_ss.len(), ss.len());
        assert_eq!(got_ts.len(), ts.len());
        assert_eq!(got_ss.into_iter().collect::<BTreeSet<_>>(), ss);
        assert_eq!(got_ts.into_iter().collect::<BTreeSet<_>>(), ts);
    }
}

#[test]
fn output_is_independent_of_thread_count() {
    for class in [Class::All, Class::StronglyStable, Class::TotallySymmetric] {
        let seq = Enumerator::new(3, 3, class).unwrap().collect().unwrap();
        let mut streamed = Vec::new();
        Enumerator::new(3, 3, class)
            .unwrap()
            .for_each(|p| streamed.push(p))
            .unwrap();
        assert_eq!(seq, streamed);
        for threads in [2, 3, 8] {
            let opts = EnumOptions {
                threads,
                ..EnumOptions::default()
            };
            let par = Enumerator::with_options(3, 3, class, opts)
                .unwrap()
                .collect()
                .unwrap();
            assert_eq!(par, seq, "{class:?} with {threads} threads");
        }
    }
}

#[test]
fn counts_agree_between_classes() {
    let mut cases: Vec<(usize, u32)> = (1..=3).flat_map(|d| (0..=4).map(move |n| (d, n))).collect();
    cases.extend([(4, 2), (4, 3)]);
    for (d, n) in cases {
        assert_eq!(
            count_ss(d, n).unwrap(),
            count_ts(d, n).unwrap(),
            "d={d} n={n}"
        );
    }
}

#[test]
fn counts_are_monotone() {
    let opts = EnumOptions::default();
    for d in 1..=3usize {
        for n in 0..4u32 {
            let here = count_ss_with(d, n, &opts).unwrap();
            assert!(here <= count_ss_with(d, n + 1, &opts).unwrap());
            assert!(here <= count_ss_with(d + 1, n, &opts).unwrap());
            assert!(count_ts_with(d, n, &opts).unwrap() <= count_ts_with(d, n + 1, &opts).unwrap());
        }
    }
}

#[test]
fn bijection_is_a_perfect_matching() {
    for (d, n) in [(2, 6), (3, 4), (4, 3)] {
        let ss = enumerate_partitions(d, n, Class::StronglyStable).unwrap();
        let ts: BTreeSet<Partition> = enumerate_partitions(d, n, Class::TotallySymmetric)
            .unwrap()
            .into_iter()
            .filter(|p| !p.is_empty())
            .collect();
        let images: BTreeSet<Partition> = ss
            .iter()
            .filter(|p| !p.is_empty())
            .map(|p| ss_to_ts_partition(p).unwrap())
            .collect();
        assert_eq!(images.len(), ss.len() - 1, "injective");
        assert_eq!(images, ts);
    }
}

#[test]
fn four_dimensional_counts() {
    assert_eq!(count_ss(4, 2).unwrap(), BigUint::from(6u32));
    assert_eq!(count_ss(4, 3).unwrap(), BigUint::from(32u32));
}
