//! One line per acceptance criterion. Expected values are the published
//! ones; criteria the published data does not satisfy are listed in
//! `KNOWN_FAILURES` and have an `#[ignore]`d literal test below.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use kron_core::certify::{
    builtin_strategies, certify, check_witness, verify_certificate, CertError, Certificate, CertifyOutcome, Combiner,
    SearchOptions, Triple, VerifyOptions, Witness,
};
use kron_core::characters::{centralizer_order, character, count_rim_hook_tableaux, dimension};
use kron_core::kronecker::predicates::thm_nn;
use kron_core::kronecker::{
    formula_value, kron, kronecker_table, near_hook_character, near_two_row_formula, saxl_criterion, two_row_formula,
    ScanOptions, SaxlOutcome,
};
use kron_core::lr::{is_multiplicity_free_skew, lr_coefficient, SkewShape};
use kron_core::partition::enumerate_partitions;
use kron_core::{BoxFrame, Partition};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use proptest::strategy::{Just, Strategy, ValueTree};
use proptest::test_runner::TestRunner;

const M4_LIMIT: Duration = Duration::from_secs(60);
const M5_SINGLE_LIMIT: Duration = Duration::from_secs(15 * 60);
const M5_EIGHT_LIMIT: Duration = Duration::from_secs(5 * 60);
const CERT_LIMIT: Duration = Duration::from_secs(30);
const DIMENSION_SAMPLES: usize = 200;

const KNOWN_FAILURES: [&str; 3] = ["1", "7b", "10b"];

type Check = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Check);

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn classes(list: &[&str]) -> BTreeSet<Partition> {
    list.iter().map(|s| p(s).conjugacy_representative()).collect()
}

const APPENDIX_M4: [&str; 12] = [
    "15,1", "14,1,1", "13,2,1", "12,3,1", "12,1^4", "11,5", "10,1^6", "9,7", "8,7,1", "8,2,1^6", "7,7,2", "7,5,4",
];
const APPENDIX_M5: [&str; 7] = ["24,1", "23,1,1", "22,2,1", "21,3,1", "21,1^4", "19,1^6", "14,1^11"];

fn kron_bin(args: &[&str]) -> (String, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_kron"))
        .args(args)
        .env_remove("KRON_CACHE_DIR")
        .output()
        .expect("binary runs");
    let took = start.elapsed();
    assert!(out.status.success(), "kron {args:?}: {}", String::from_utf8_lossy(&out.stderr));
    (String::from_utf8(out.stdout).unwrap(), took)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("golden").join(name)).unwrap()
}

fn listed(output: &str) -> BTreeSet<Partition> {
    output.lines().map(|l| p(l).conjugacy_representative()).collect()
}

fn compare_classes(found: &BTreeSet<Partition>, published: &BTreeSet<Partition>) -> Check {
    if found == published {
        return Ok(format!("{} classes", found.len()));
    }
    let show = |s: BTreeSet<&Partition>| s.iter().map(|x| format!("({x})")).collect::<Vec<_>>().join(" ");
    Err(format!(
        "{} classes; unpublished zeros: [{}]; published but nonzero: [{}]",
        found.len(),
        show(found.difference(published).collect()),
        show(published.difference(found).collect())
    ))
}

fn c1_appendix_m4() -> Check {
    let (out, took) = kron_bin(&["missing", "4", "--jobs", "1"]);
    if out != golden("missing_m4.txt") {
        return Err("output differs from golden/missing_m4.txt".into());
    }
    if took > M4_LIMIT {
        return Err(format!("took {took:.2?}"));
    }
    compare_classes(&listed(&out), &classes(&APPENDIX_M4)).map(|s| format!("{s}, golden byte-exact, {took:.2?}"))
}

fn c2_appendix_m5() -> Check {
    let (one, t1) = kron_bin(&["missing", "5", "--jobs", "1"]);
    let (eight, t8) = kron_bin(&["missing", "5", "--jobs", "8"]);
    if one != eight {
        return Err("1-worker and 8-worker outputs differ".into());
    }
    if one != golden("missing_m5.txt") {
        return Err("output differs from golden/missing_m5.txt".into());
    }
    if t1 > M5_SINGLE_LIMIT || t8 > M5_EIGHT_LIMIT {
        return Err(format!("took {t1:.2?} / {t8:.2?}"));
    }
    compare_classes(&listed(&one), &classes(&APPENDIX_M5))
        .map(|s| format!("{s}, identical at 1 and 8 workers, {t1:.2?} / {t8:.2?}"))
}

fn c3_appendix_m6() -> Check {
    if std::env::var_os("KRON_SKIP_M6").is_some() {
        return Ok("skipped (KRON_SKIP_M6 set)".into());
    }
    let (out, took) = kron_bin(&["missing", "6", "--budget-override"]);
    let found = listed(&out);
    if out != golden("missing_m6.txt") {
        return Err("output differs from golden/missing_m6.txt".into());
    }
    if found.len() != 8 || !found.contains(&p("19,17")) {
        return Err(format!("{} classes", found.len()));
    }
    Ok(format!("8 classes including (19,17), {took:.2?}"))
}

/// `p_k(l, m)` by listing partitions in the box.
fn in_box(k: i64, l: u32, m: u32) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let frame = BoxFrame::new(l as usize, m as usize).unwrap();
    BigInt::from(enumerate_partitions(k as usize, Some(frame)).count())
}

fn c4_two_row() -> Check {
    let mut checked = 0;
    for l in 2..=5u32 {
        for m in 2..=5u32 {
            let rect = Partition::rectangle(m, l);
            let n = l * m;
            for k in 0..=n / 2 {
                let nu = Partition::new(vec![n - k, k]).unwrap();
                let oracle = BigInt::from(kron(&rect, &rect, &nu).unwrap());
                let want = in_box(k as i64, l, m) - in_box(k as i64 - 1, l, m);
                let formula = two_row_formula(l, m, k as i64).unwrap();
                if oracle != want || formula != want {
                    return Err(format!("l={l} m={m} k={k}: oracle {oracle}, formula {formula}, p_k-p_k-1 {want}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} triples"))
}

fn c5_near_two_row() -> Check {
    for m in [4u32, 5] {
        let sq = Partition::square(m);
        for k in 2..=m as usize {
            let weight: usize = enumerate_partitions(k - 1, None)
                .filter(|a| a.len() >= 2 && a.part(0) == a.part(1))
                .map(|a| a.distinct_part_count())
                .sum();
            let f = enumerate_partitions(k, None).filter(|a| a.parts().iter().all(|&x| x >= 3)).count();
            let want = BigInt::from(weight) - BigInt::from(f);
            let nu = Partition::new(vec![m * m - k as u32, k as u32 - 1, 1]).unwrap();
            let oracle = BigInt::from(kron(&sq, &sq, &nu).unwrap());
            let formula = near_two_row_formula(m, k as i64).unwrap();
            if oracle != want || formula != want {
                return Err(format!("m={m} k={k}: oracle {oracle}, formula {formula}, sum {want}"));
            }
        }
    }
    for k in 2..=40i64 {
        let zero = near_two_row_formula(40, k).unwrap().is_zero();
        if zero != (k <= 4) {
            return Err(format!("k={k}: formula zero = {zero}"));
        }
    }
    Ok("m in {4,5} exact; zero iff k <= 4 on 2..40".into())
}

fn c6_thm_nn() -> Check {
    let mut checked = 0;
    for n in 1..=6u32 {
        let nn = Partition::rectangle(n, 2);
        for mu in enumerate_partitions(2 * n as usize, None) {
            let positive = !kron(&nn, &nn, &mu).unwrap().is_zero();
            if positive != thm_nn(&mu).unwrap() {
                return Err(format!("n={n} mu=({mu}): oracle positive = {positive}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} triples"))
}

fn nk2(m: i64) -> Vec<i64> {
    let n = m * m;
    vec![1, 2, 4, 6, 8, n - 12, n - 10, n - 8, n - 6, n - 5]
}

fn nk3(m: i64) -> Vec<i64> {
    let n = m * m;
    vec![1, 3, n - 10, n - 8]
}

fn zero_set(m: u32, i: u32, max_k: i64) -> Vec<i64> {
    (0..=max_k)
        .filter(|&k| near_hook_character(m, i, k).unwrap().is_zero())
        .collect()
}

fn c7a_near_hook_characters() -> Check {
    let alpha = Partition::odd_staircase(5);
    for (i, max_k) in [(2u32, 21u32), (3, 19)] {
        for k in 0..=max_k {
            let direct = character(&Partition::near_hook(5, i, k).unwrap(), &alpha).unwrap();
            if near_hook_character(5, i, k as i64).unwrap() != direct {
                return Err(format!("m=5 i={i} k={k}"));
            }
        }
    }
    for m in 8..=30u32 {
        let got = zero_set(m, 3, (m * m) as i64 - 7);
        if got != nk3(m as i64) {
            return Err(format!("i=3, m={m}: zeros at {got:?}"));
        }
    }
    Ok("m=5 closed form = chi for i in {2,3}; i=3 zero set = NK3(m) for m in 8..30".into())
}

fn c7b_nk2() -> Check {
    let mut bad = Vec::new();
    for m in 8..=30u32 {
        let got = zero_set(m, 2, (m * m) as i64 - 4);
        let want = nk2(m as i64);
        if got != want {
            let listed_nonzero: Vec<i64> = want.iter().copied().filter(|k| !got.contains(k)).collect();
            bad.push(format!("m={m}: listed but nonzero at {listed_nonzero:?}"));
        }
    }
    if bad.is_empty() {
        Ok("i=2 zero set = NK2(m) for m in 8..30".into())
    } else {
        Err(format!("{} of 23 values of m differ, e.g. {}", bad.len(), bad[0]))
    }
}

fn c8_saxl() -> Check {
    let mut positives = 0;
    for m in [4u32, 5] {
        let sq = Partition::square(m);
        let table = kronecker_table(&sq, &sq, &ScanOptions::default()).unwrap();
        for e in &table.entries {
            if saxl_criterion(&sq, &e.nu).unwrap() == SaxlOutcome::Positive {
                positives += 1;
                if e.g.is_zero() {
                    return Err(format!("m={m}: criterion positive at ({}) but g = 0", e.nu));
                }
            }
        }
    }
    Ok(format!("{positives} positive verdicts, no contradictions"))
}

fn c9_rim_hook_remark() -> Check {
    let mut cases: Vec<(Partition, Partition)> = [4u32, 6, 8]
        .iter()
        .map(|&m| {
            let mut parts = vec![m + 1; m as usize - 1];
            parts.push(1);
            (Partition::new(parts).unwrap(), Partition::odd_staircase(m))
        })
        .collect();
    cases.push((p("5,4"), p("5,3,1")));
    for (shape, alpha) in &cases {
        let (signed, unsigned) = count_rim_hook_tableaux(shape, alpha).unwrap();
        let chi = character(shape, alpha).unwrap();
        if !unsigned.is_zero() || !signed.is_zero() || !chi.is_zero() {
            return Err(format!("({shape}) type ({alpha}): {unsigned} tableaux, chi = {chi}"));
        }
    }
    Ok(format!("{} shapes, no rim-hook tableaux", cases.len()))
}

fn sq(m: u32, nu: &str) -> Triple {
    [Partition::square(m), Partition::square(m), p(nu)]
}

/// Each leaf is re-evaluated by the oracle, and formula leaves also by
/// their formula.
fn confirm_leaf(t: &Triple, w: Witness) -> Result<(), String> {
    check_witness(t, w, usize::MAX).map_err(|e| e.to_string())?;
    if kron(&t[0], &t[1], &t[2]).unwrap().is_zero() {
        return Err(format!("oracle gives 0 at {t:?}"));
    }
    if matches!(w, Witness::FormulaTwoRow | Witness::FormulaNearTwoRow) {
        let (v, _) = formula_value(&t[0], &t[1], &t[2]).ok_or("no formula")?;
        if v <= BigInt::zero() {
            return Err(format!("formula gives {v}"));
        }
    }
    Ok(())
}

fn c10a_certificate_round_trip() -> Check {
    let start = Instant::now();
    let target = sq(6, "26,9,1");
    let CertifyOutcome::Found(c) = certify(&target, &builtin_strategies(), &SearchOptions::default()).unwrap() else {
        return Err("no certificate found".into());
    };
    let back = Certificate::from_json(&c.to_json()).map_err(|e| e.to_string())?;
    if back != c || back.claim() != &target {
        return Err("JSON round trip changed the certificate".into());
    }
    let stats = verify_certificate(&back, &VerifyOptions::default()).map_err(|e| e.to_string())?;
    for (t, w) in back.leaves() {
        confirm_leaf(t, w)?;
    }
    let took = start.elapsed();
    if took > CERT_LIMIT {
        return Err(format!("took {took:.2?}"));
    }
    let leaves: Vec<String> = back.leaves().iter().map(|(t, w)| format!("({}) by {w}", t[2])).collect();
    Ok(format!("{} leaves [{}], depth {}, {took:.2?}", stats.leaves, leaves.join(", "), stats.depth))
}

/// The decomposition printed alongside the published example.
fn paper_certificate() -> Certificate {
    let leaf = |t: Triple, w| Certificate::leaf(t, w);
    let four = p("4,4");
    let inner = Certificate::combine(
        Combiner::Vvh,
        vec![
            leaf(sq(4, "8,7,1"), Witness::Oracle),
            leaf([four.clone(), four, p("8")], Witness::FormulaTwoRow),
        ],
    )
    .unwrap();
    let two = Partition::rectangle(2, 6);
    Certificate::combine(
        Combiner::Hhh,
        vec![inner, leaf([two.clone(), two, p("10,2")], Witness::FormulaTwoRow)],
    )
    .unwrap()
}

fn c10b_paper_certificate() -> Check {
    let c = paper_certificate();
    assert_eq!(c.claim(), &sq(6, "26,9,1"));
    match verify_certificate(&c, &VerifyOptions::default()) {
        Ok(_) => Ok("published decomposition verifies".into()),
        Err(e @ CertError::LeafNotPositive { .. }) => {
            let g = kron(&Partition::square(4), &Partition::square(4), &p("8,7,1")).unwrap();
            Err(format!("{}: {e}; oracle g = {g}", e.kind()))
        }
        Err(e) => Err(e.to_string()),
    }
}

fn c11_characters() -> Check {
    for n in 1..=12usize {
        let id = Partition::rectangle(1, n as u32);
        for lambda in enumerate_partitions(n, None) {
            if character(&lambda, &id).unwrap() != BigInt::from(dimension(&lambda)) {
                return Err(format!("chi(({lambda}), 1^{n}) != dimension"));
            }
        }
    }
    for n in 1..=9usize {
        let shapes: Vec<Partition> = enumerate_partitions(n, None).collect();
        let cols: Vec<Vec<BigInt>> = shapes
            .iter()
            .map(|a| shapes.iter().map(|l| character(l, a).unwrap()).collect())
            .collect();
        for i in 0..shapes.len() {
            for j in 0..shapes.len() {
                let dot: BigInt = cols[i].iter().zip(&cols[j]).map(|(x, y)| x * y).sum();
                let want = if i == j { BigInt::from(centralizer_order(&shapes[i])) } else { BigInt::zero() };
                if dot != want {
                    return Err(format!("orthogonality fails at ({}), ({})", shapes[i], shapes[j]));
                }
            }
        }
    }
    // every exact division in complete tables up to n = 9 succeeds
    for n in 1..=9 {
        for lambda in enumerate_partitions(n, None) {
            kronecker_table(&lambda, &lambda, &ScanOptions::default()).map_err(|e| e.to_string())?;
        }
    }
    Ok("dimensions n <= 12, orthogonality n <= 9, no nonintegral division".into())
}

fn c12_lr() -> Check {
    let chopped = Partition::chopped_square(4);
    let n = chopped.size();
    for b in 0..=n {
        for beta in enumerate_partitions(b, None).filter(|x| chopped.contains(x)) {
            for mu in enumerate_partitions(n - b, None) {
                if lr_coefficient(&chopped, &beta, &mu).unwrap() > 1 {
                    return Err(format!("c > 1 at beta=({beta}), mu=({mu})"));
                }
            }
        }
    }

    let mut runner = TestRunner::deterministic();
    let pair = (0usize..=10).prop_flat_map(|n| (Just(n), 0..=n)).prop_flat_map(|(n, a)| {
        (
            proptest::sample::select(enumerate_partitions(a, None).collect::<Vec<_>>()),
            proptest::sample::select(enumerate_partitions(n - a, None).collect::<Vec<_>>()),
        )
    });
    for _ in 0..DIMENSION_SAMPLES {
        let (mu, nu) = pair.new_tree(&mut runner).unwrap().current();
        let total = mu.size() + nu.size();
        let lhs: BigUint = enumerate_partitions(total, None)
            .map(|l| BigUint::from(lr_coefficient(&l, &mu, &nu).unwrap()) * dimension(&l))
            .sum();
        let binom = (0..mu.size()).fold(BigUint::from(1u32), |acc, i| acc * (total - i) / (i + 1));
        if lhs != binom * dimension(&mu) * dimension(&nu) {
            return Err(format!("dimension identity fails at ({mu}), ({nu})"));
        }
    }

    let frame5 = BoxFrame::square(5);
    let mut shapes = 0;
    for size in 1..=25 {
        for lambda in enumerate_partitions(size, Some(frame5)) {
            for i in 0..size {
                for mu in enumerate_partitions(i, Some(frame5)).filter(|m| lambda.contains(m)) {
                    if !SkewShape::new(lambda.clone(), mu.clone()).unwrap().is_basic() {
                        continue;
                    }
                    let brute = enumerate_partitions(size - i, None)
                        .all(|nu| lr_coefficient(&lambda, &mu, &nu).unwrap() <= 1);
                    let frame = BoxFrame::spanned_by(&lambda).unwrap();
                    if is_multiplicity_free_skew(&lambda, &mu, frame).unwrap() != brute {
                        return Err(format!("classifier wrong on ({lambda}) / ({mu})"));
                    }
                    shapes += 1;
                }
            }
        }
    }
    Ok(format!(
        "m=4 multiplicity-free; {DIMENSION_SAMPLES} dimension identities; {shapes} basic skew shapes"
    ))
}

#[test]
fn acceptance() {
    let criteria: Vec<Criterion> = vec![
        ("1", "appendix m=4", c1_appendix_m4),
        ("2", "appendix m=5", c2_appendix_m5),
        ("3", "appendix m=6 (override)", c3_appendix_m6),
        ("4", "two-row formula", c4_two_row),
        ("5", "near two-row formula", c5_near_two_row),
        ("6", "(n,n) criterion", c6_thm_nn),
        ("7a", "near-hook characters, NK3", c7a_near_hook_characters),
        ("7b", "near-hook characters, NK2", c7b_nk2),
        ("8", "Saxl criterion soundness", c8_saxl),
        ("9", "rim-hook remark", c9_rim_hook_remark),
        ("10a", "certificate round trip", c10a_certificate_round_trip),
        ("10b", "published (26,9,1) decomposition", c10b_paper_certificate),
        ("11", "character infrastructure", c11_characters),
        ("12", "LR layer", c12_lr),
    ];
    let mut failing = Vec::new();
    for (id, title, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS {id:>3}  {title}: {detail}"),
            Err(detail) => {
                println!("FAIL {id:>3}  {title}: {detail}");
                failing.push(id);
            }
        }
    }
    assert_eq!(failing, KNOWN_FAILURES, "failing criteria changed");
}

#[test]
#[ignore = "the published m=4 list omits (5,5,2,2,2)"]
fn literal_appendix_m4() {
    c1_appendix_m4().unwrap();
}

#[test]
#[ignore = "the published NK2 lists k = 2 and k = m^2-6, where the character is -1"]
fn literal_nk2() {
    c7b_nk2().unwrap();
}

#[test]
#[ignore = "the published decomposition uses g(square_4, square_4, (8,7,1)) = 0"]
fn literal_paper_certificate() {
    c10b_paper_certificate().unwrap();
}
