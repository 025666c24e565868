use kron_core::characters::dimension;
use kron_core::lr::{is_multiplicity_free_skew, lr_coefficient, SkewShape};
use kron_core::partition::{complement, enumerate_partitions};
use kron_core::{BoxFrame, Partition};
use num_bigint::BigUint;
use proptest::prelude::*;

fn sized(n: usize) -> impl Strategy<Value = Partition> {
    prop::sample::select(enumerate_partitions(n, None).collect::<Vec<_>>())
}

/// `(lambda, mu, nu)` with `|lambda| = |mu| + |nu| <= 10`.
fn lr_triple() -> impl Strategy<Value = (Partition, Partition, Partition)> {
    (0usize..=10)
        .prop_flat_map(|n| (Just(n), 0..=n))
        .prop_flat_map(|(n, a)| (sized(n), sized(a), sized(n - a)))
}

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #[test]
    fn lr_symmetry((lambda, mu, nu) in lr_triple()) {
        prop_assert_eq!(lr_coefficient(&lambda, &mu, &nu).unwrap(), lr_coefficient(&lambda, &nu, &mu).unwrap());
    }

    #[test]
    fn lr_conjugation((lambda, mu, nu) in lr_triple()) {
        prop_assert_eq!(
            lr_coefficient(&lambda, &mu, &nu).unwrap(),
            lr_coefficient(&lambda.conjugate(), &mu.conjugate(), &nu.conjugate()).unwrap()
        );
    }

    #[test]
    fn dimension_identity((_l, mu, nu) in lr_triple()) {
        let n = mu.size() + nu.size();
        let lhs: BigUint = enumerate_partitions(n, None)
            .map(|lambda| BigUint::from(lr_coefficient(&lambda, &mu, &nu).unwrap()) * dimension(&lambda))
            .sum();
        prop_assert_eq!(lhs, binomial(n, mu.size()) * dimension(&mu) * dimension(&nu));
    }
}

/// `c^{lambda_m}_{beta mu} = c^{beta*}_{(1) mu}` with `beta*` the complement
/// of `beta` in the `m x m` square.
#[test]
fn chopped_square_rotation() {
    let one = Partition::rectangle(1, 1);
    for m in 2..=5u32 {
        let chopped = Partition::chopped_square(m);
        let frame = BoxFrame::square(m as usize);
        for k in 1..=m as usize {
            for beta in enumerate_partitions(k - 1, Some(frame)) {
                let star = complement(&beta, frame).unwrap();
                for mu in enumerate_partitions((m * m) as usize - k, Some(frame)) {
                    let lhs = lr_coefficient(&chopped, &mu, &beta).unwrap();
                    let rhs = lr_coefficient(&star, &mu, &one).unwrap();
                    assert_eq!(lhs, rhs, "m={m} beta=({beta}) mu=({mu})");
                }
            }
        }
    }
}

#[test]
fn chopped_square_is_multiplicity_free_for_m_4() {
    let chopped = Partition::chopped_square(4);
    let n = chopped.size();
    for b in 0..=n {
        for beta in enumerate_partitions(b, None).filter(|x| chopped.contains(x)) {
            for mu in enumerate_partitions(n - b, None) {
                assert!(lr_coefficient(&chopped, &beta, &mu).unwrap() <= 1, "beta=({beta}) mu=({mu})");
            }
        }
    }
}

/// Every basic skew shape in a 5x5 frame: classifier against the expansion
/// `s_{lambda/mu} = sum_nu c^lambda_{mu nu} s_nu`.
#[test]
fn multiplicity_free_classifier_matches_expansion() {
    let frame5 = BoxFrame::square(5);
    let mut checked = 0;
    for n in 1..=25 {
        for lambda in enumerate_partitions(n, Some(frame5)) {
            for i in 0..n {
                for mu in enumerate_partitions(i, Some(frame5)).filter(|m| lambda.contains(m)) {
                    let shape = SkewShape::new(lambda.clone(), mu.clone()).unwrap();
                    if !shape.is_basic() {
                        continue;
                    }
                    let brute = enumerate_partitions(n - i, None)
                        .all(|nu| lr_coefficient(&lambda, &mu, &nu).unwrap() <= 1);
                    let frame = BoxFrame::spanned_by(&lambda).unwrap();
                    let fast = is_multiplicity_free_skew(&lambda, &mu, frame).unwrap();
                    assert_eq!(fast, brute, "({lambda}) / ({mu})");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 1000);
}
