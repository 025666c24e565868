use std::collections::HashSet;

use kron_core::partition::{complement, count_in_box, enumerate_partitions, partition_count};
use kron_core::{BoxFrame, Partition};
use num_bigint::BigUint;
use proptest::prelude::*;

fn partition(max_n: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=12, 0..=8)
        .prop_map(Partition::from_unsorted)
        .prop_filter("size bound", move |p| p.size() <= max_n)
}

#[test]
fn conjugate_is_an_involution() {
    for n in 0..=20 {
        for lambda in enumerate_partitions(n, None) {
            assert_eq!(lambda.conjugate().conjugate(), lambda);
            assert_eq!(lambda.conjugate().size(), n);
        }
    }
}

proptest! {
    #[test]
    fn sums(a in partition(15), b in partition(15)) {
        let h = a.horizontal_sum(&b);
        prop_assert_eq!(h.size(), a.size() + b.size());
        prop_assert_eq!(&h, &b.horizontal_sum(&a));
        prop_assert_eq!(
            a.vertical_sum(&b),
            a.conjugate().horizontal_sum(&b.conjugate()).conjugate()
        );
    }

    #[test]
    fn parse_display_round_trip(a in partition(30)) {
        let back: Partition = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }
}

#[test]
fn complement_is_an_involution() {
    for rows in 1..=6 {
        for cols in 1..=6 {
            let frame = BoxFrame::new(rows, cols).unwrap();
            for n in 0..=rows * cols {
                for lambda in enumerate_partitions(n, Some(frame)) {
                    let c = complement(&lambda, frame).unwrap();
                    assert_eq!(c.size(), rows * cols - n);
                    assert_eq!(complement(&c, frame).unwrap(), lambda);
                }
            }
        }
    }
}

#[test]
fn box_counts_are_symmetric() {
    for a in 1..=8 {
        for b in 1..=8 {
            for k in 0..=(a * b) as i64 {
                let v = count_in_box(k, a, b);
                assert_eq!(v, count_in_box((a * b) as i64 - k, a, b), "a={a} b={b} k={k}");
                assert_eq!(v, count_in_box(k, b, a), "a={a} b={b} k={k}");
            }
        }
    }
}

#[test]
fn box_counts_match_enumeration() {
    for a in 1..=6 {
        for b in 1..=6 {
            let frame = BoxFrame::new(a, b).unwrap();
            for k in 0..=a * b {
                let direct = enumerate_partitions(k, Some(frame)).count();
                assert_eq!(count_in_box(k as i64, a, b), BigUint::from(direct), "a={a} b={b} k={k}");
            }
        }
    }
}

#[test]
fn enumeration_is_complete_and_distinct() {
    for n in 0..=30 {
        let all: Vec<Partition> = enumerate_partitions(n, None).collect();
        let distinct: HashSet<&Partition> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
        assert!(all.iter().all(|p| p.size() == n));
        assert_eq!(BigUint::from(all.len()), partition_count(n), "n={n}");
    }
}

#[test]
fn principal_hooks_of_self_conjugate_shapes() {
    for n in 1..=30 {
        for mu in enumerate_partitions(n, None).filter(Partition::is_self_conjugate) {
            let hooks = mu.principal_hooks().unwrap();
            assert_eq!(hooks.size(), n);
            assert!(hooks.parts().iter().all(|h| h % 2 == 1));
            assert_eq!(hooks.distinct_part_count(), hooks.len(), "{mu}");
        }
    }
}
