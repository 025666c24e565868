//! Candidate decompositions for the certificate search.
//!
//! Most strategies peel a square:
//!
//! ```text
//! sq_m = (sq_{m-j} +_V (m-j)^j) +_H j^m,    nu = alpha +_H beta +_H gamma
//! ```
//!
//! with `beta |- j(m-j)` paired with the block `(m-j)^j`, `gamma |- jm`
//! paired with `j^m`, and `alpha = nu - beta - gamma` taken rowwise. The
//! strategies differ in which `(j, beta, gamma)` they propose.

use super::{Combiner, Triple};
use crate::partition::{enumerate_partitions, Partition};

/// A decomposition awaiting proofs of its `Target`s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Plan {
    Target(Triple),
    Combine(Combiner, Vec<Plan>),
    /// A symmetry image of the inner plan's claim.
    Sym(Triple, Box<Plan>),
}

impl Plan {
    /// The triple this plan proves positive, if its pieces combine.
    pub fn claim(&self) -> Option<Triple> {
        match self {
            Plan::Target(t) => Some(t.clone()),
            Plan::Sym(t, _) => Some(t.clone()),
            Plan::Combine(c, kids) => {
                let claims: Vec<Triple> = kids.iter().map(Plan::claim).collect::<Option<_>>()?;
                c.combine(claims.iter())
            }
        }
    }

    pub fn targets(&self) -> Vec<&Triple> {
        match self {
            Plan::Target(t) => vec![t],
            Plan::Sym(_, inner) => inner.targets(),
            Plan::Combine(_, kids) => kids.iter().flat_map(Plan::targets).collect(),
        }
    }
}

/// A generator of decompositions. Targets arrive with the repeated
/// argument first: `(x, x, y)`.
pub trait Strategy: Send + Sync {
    fn name(&self) -> &'static str;
    /// Cheap test; `decompositions` may still come back empty.
    fn applies(&self, target: &Triple) -> bool;
    /// Plans for `target`, in preference order. Each should recombine to
    /// `target` exactly.
    fn decompositions(&self, target: &Triple) -> Vec<Plan>;
    /// The decompositions that do recombine to `target`; nothing else
    /// reaches the search.
    fn candidates(&self, target: &Triple) -> Vec<Plan> {
        if !self.applies(target) {
            return Vec::new();
        }
        self.decompositions(target)
            .into_iter()
            .filter(|p| p.claim().as_ref() == Some(target))
            .collect()
    }
}

type Generator = fn(&Triple) -> Vec<Plan>;

struct Builtin {
    name: &'static str,
    applies: fn(&Triple) -> bool,
    decompositions: Generator,
}

impl Strategy for Builtin {
    fn name(&self) -> &'static str {
        self.name
    }

    fn applies(&self, target: &Triple) -> bool {
        (self.applies)(target)
    }

    fn decompositions(&self, target: &Triple) -> Vec<Plan> {
        (self.decompositions)(target)
    }
}

pub const STRATEGY_NAMES: [&str; 10] = [
    "rectangular",
    "even-square",
    "odd-strip",
    "kk1-ladder",
    "square-3k",
    "rect-4row",
    "mod3-ladder",
    "three-row-even",
    "three-row-odd",
    "near-hook-wide",
];

fn builtin(name: &str) -> Option<Builtin> {
    let (applies, decompositions): (fn(&Triple) -> bool, Generator) = match name {
        "rectangular" => (rectangular_applies, rectangular),
        "even-square" => (even_square_applies, even_square),
        "odd-strip" => (odd_strip_applies, odd_strip),
        "kk1-ladder" => (kk1_applies, kk1_ladder),
        "square-3k" => (square_3k_applies, square_3k),
        "rect-4row" => (rect_4row_applies, rect_4row),
        "mod3-ladder" => (mod3_applies, mod3_ladder),
        "three-row-even" => (three_row_even_applies, three_row_even),
        "three-row-odd" => (three_row_odd_applies, three_row_odd),
        "near-hook-wide" => (near_hook_wide_applies, near_hook_wide),
        _ => return None,
    };
    let name = STRATEGY_NAMES.iter().find(|n| **n == name)?;
    Some(Builtin {
        name,
        applies,
        decompositions,
    })
}

/// Every built-in strategy, in default search order.
pub fn builtin_strategies() -> Vec<Box<dyn Strategy>> {
    STRATEGY_NAMES
        .iter()
        .map(|n| Box::new(builtin(n).expect("known")) as Box<dyn Strategy>)
        .collect()
}

/// Built-in strategies by name, in the given order. Unknown names are
/// returned as the error.
pub fn strategies_by_name<S: AsRef<str>>(names: &[S]) -> Result<Vec<Box<dyn Strategy>>, String> {
    names
        .iter()
        .map(|n| {
            builtin(n.as_ref().trim())
                .map(|b| Box::new(b) as Box<dyn Strategy>)
                .ok_or_else(|| n.as_ref().to_string())
        })
        .collect()
}

// ---------------------------------------------------------------- helpers

/// Partition from rows padded with trailing zeros.
fn rows(v: &[i64]) -> Option<Partition> {
    let len = v.iter().take_while(|&&x| x > 0).count();
    if v[len..].iter().any(|&x| x != 0) {
        return None;
    }
    Partition::new(v[..len].iter().map(|&x| x as u32).collect()).ok()
}

/// `(sq_m, sq_m, nu)`.
fn square_target(t: &Triple) -> Option<(u32, &Partition)> {
    (t[0] == t[1]).then_some(())?;
    Some((t[0].as_square()?, &t[2]))
}

/// `(x, y, 1)` with `y >= 1`.
fn near_two_row(nu: &Partition) -> Option<(i64, i64)> {
    (nu.len() == 3 && nu.part(2) == 1).then(|| (nu.part(0) as i64, nu.part(1) as i64))
}

fn three_rows(nu: &Partition) -> Option<[i64; 3]> {
    (nu.len() == 3).then(|| [nu.part(0) as i64, nu.part(1) as i64, nu.part(2) as i64])
}

fn target(x: Partition, y: Partition) -> Plan {
    Plan::Target([x.clone(), x, y])
}

/// The peel decomposition of `(sq_m, sq_m, nu)` with the given `beta`,
/// `gamma`; `None` unless `alpha` is a partition.
fn peel(m: u32, j: u32, beta: Partition, gamma: Partition, nu: &Partition) -> Option<Plan> {
    if j == 0 || j >= m {
        return None;
    }
    let k = m - j;
    if beta.size() != (j * k) as usize || gamma.size() != (j * m) as usize {
        return None;
    }
    let alpha = nu.checked_sub(&beta.horizontal_sum(&gamma))?;
    Some(Plan::Combine(
        Combiner::Hhh,
        vec![
            Plan::Combine(
                Combiner::Vvh,
                vec![target(Partition::square(k), alpha), target(Partition::rectangle(k, j), beta)],
            ),
            target(Partition::rectangle(j, m), gamma),
        ],
    ))
}

fn two(a: i64, b: i64) -> Option<Partition> {
    (a >= b).then(|| rows(&[a, b]))?
}

fn push_peel(out: &mut Vec<Plan>, m: u32, j: u32, beta: Option<Partition>, gamma: Option<Partition>, nu: &Partition) {
    if let (Some(b), Some(g)) = (beta, gamma) {
        if let Some(plan) = peel(m, j, b, g, nu) {
            if !out.contains(&plan) {
                out.push(plan);
            }
        }
    }
}

// ------------------------------------------------------------ rectangular

fn rectangular_applies(t: &Triple) -> bool {
    matches!(square_target(t), Some((m, nu)) if m >= 2 && nu.as_rectangle().is_some_and(|(k, l)| l < m && k % l == 0))
}

/// `(sq_m, sq_m, k^l)` with `l | k`: then `l | m`, and `sq_m` is an
/// `(m/l) x (m/l)` grid of `sq_l` blocks, stacked by `VVH` into columns
/// and joined by `HHH`; every block carries `(sq_l, sq_l, sq_l)`.
fn rectangular(t: &Triple) -> Vec<Plan> {
    let Some((m, nu)) = square_target(t) else { return Vec::new() };
    let Some((_, l)) = nu.as_rectangle() else { return Vec::new() };
    if m % l != 0 {
        return Vec::new();
    }
    let q = (m / l) as usize;
    let block = target(Partition::square(l), Partition::square(l));
    let column = Plan::Combine(Combiner::Vvh, vec![block; q]);
    vec![Plan::Combine(Combiner::Hhh, vec![column; q])]
}

// ------------------------------------------------------------ even-square

fn even_square_applies(t: &Triple) -> bool {
    matches!(square_target(t), Some((m, nu)) if m >= 4 && m % 2 == 0 && near_two_row(nu).is_some())
}

/// `sq_{2r} = (sq_{2r-2} +_V (2r-2, 2r-2)) +_H 2^{2r}` with
/// `beta = (2(r-1+b), 2(r-1-b))` and `gamma = (2(r+a), 2(r-a))`.
/// The closed-form choice of `(a, b)` comes first, then the whole grid.
fn even_square(t: &Triple) -> Vec<Plan> {
    let Some((m, nu)) = square_target(t) else { return Vec::new() };
    let Some((_, y)) = near_two_row(nu) else { return Vec::new() };
    let r = m as i64 / 2;
    let k = y + 1;
    let recipe = if 2 * k <= (2 * r - 1) * (2 * r - 1) {
        (r, ((2 * r + 4 - k + 1).div_euclid(2)).max(0))
    } else {
        ((4 * r * r - 2 * k + 1).div_euclid(4), 0)
    };
    let mut out = Vec::new();
    let grid = (0..=r).rev().flat_map(|a| (0..r).map(move |b| (a, b)));
    for (a, b) in std::iter::once(recipe).chain(grid) {
        if !(0..=r).contains(&a) || !(0..r).contains(&b) {
            continue;
        }
        let beta = two(2 * (r - 1 + b), 2 * (r - 1 - b));
        let gamma = two(2 * (r + a), 2 * (r - a));
        push_peel(&mut out, m, 2, beta, gamma, nu);
    }
    out
}

// --------------------------------------------------------------- odd-strip

fn odd_strip_applies(t: &Triple) -> bool {
    matches!(square_target(t), Some((m, nu)) if m >= 2 && nu.part(0) as i64 - nu.part(1) as i64 >= 2 * m as i64 - 1)
}

/// `sq_m = (sq_{m-1} +_V (m-1)) +_H 1^m`, taking `2m-1` cells off the first
/// row of `nu`.
fn odd_strip(t: &Triple) -> Vec<Plan> {
    let Some((m, nu)) = square_target(t) else { return Vec::new() };
    let mut out = Vec::new();
    push_peel(&mut out, m, 1, rows(&[m as i64 - 1]), rows(&[m as i64]), nu);
    out
}

// -------------------------------------------------------------- kk1-ladder

fn kk1_applies(t: &Triple) -> bool {
    matches!(square_target(t), Some((m, nu)) if m >= 7 && m % 2 == 1 && near_two_row(nu).is_some())
}

/// Odd `m`, `nu = (x, y, 1)` with `a = x - y` small: the balanced case
/// `a = 0` peels `j = 4` (`m = 9`) or `j = 8`; `a = 2` peels `j = 4`; larger
/// even `a` peel `j = 2` with `beta = (m-1+2y', m-3-2y')`,
/// `gamma = (m+1+2x', m-1-2x')` for every split `x' + y' + 1 = floor(a/4)`.
fn kk1_ladder(t: &Triple) -> Vec<Plan> {
    let Some((m, nu)) = square_target(t) else { return Vec::new() };
    let Some((x, y)) = near_two_row(nu) else { return Vec::new() };
    let mi = m as i64;
    let a = x - y;
    let mut out = Vec::new();
    match a {
        0 if m == 9 => push_peel(&mut out, m, 4, two(10, 10), two(18, 18), nu),
        0 if m >= 11 => push_peel(&mut out, m, 8, two(4 * (mi - 8), 4 * (mi - 8)), two(4 * mi, 4 * mi), nu),
        2 => push_peel(&mut out, m, 4, two(2 * mi - 8, 2 * mi - 8), two(2 * mi, 2 * mi), nu),
        _ => {}
    }
    if a >= 4 && a % 2 == 0 {
        let s = if a % 4 == 0 { a / 4 } else { (a - 2) / 4 };
        for xs in 0..s {
            let ys = s - 1 - xs;
            let beta = two(mi - 1 + 2 * ys, mi - 3 - 2 * ys);
            let gamma = two(mi + 1 + 2 * xs, mi - 1 - 2 * xs);
            push_peel(&mut out, m, 2, beta, gamma, nu);
        }
    }
    out
}

// --------------------------------------------------------------- square-3k

fn square_3k_applies(t: &Triple) -> bool {
    let (x, y) = (&t[0], &t[2]);
    t[0] == t[1]
        && matches!(y.as_rectangle(), Some((k, 3)) if k >= 6
            && (x == y || x.as_rectangle() == Some((3, k))))
}

/// `k = 3j + r` with `r` in `{0, 4, 5}`: `(k^3, k^3, k^3)` is `j` copies of
/// `(3^3, 3^3, 3^3)` plus `(r^3, r^3, r^3)` under `HHH`; `(3^k, 3^k, k^3)`
/// is the same with `VVH`.
fn square_3k(t: &Triple) -> Vec<Plan> {
    let Some((k, _)) = t[2].as_rectangle() else { return Vec::new() };
    let r = match k % 3 {
        0 => 0,
        1 => 4,
        _ => 5,
    };
    let j = ((k - r) / 3) as usize;
    let (comb, first): (Combiner, fn(u32) -> Partition) = if t[0] == t[2] {
        (Combiner::Hhh, |w| Partition::rectangle(w, 3))
    } else {
        (Combiner::Vvh, |w| Partition::rectangle(3, w))
    };
    let mut kids = vec![target(first(3), Partition::rectangle(3, 3)); j];
    if r > 0 {
        kids.push(target(first(r), Partition::rectangle(r, 3)));
    }
    vec![Plan::Combine(comb, kids)]
}

// --------------------------------------------------------------- rect-4row

fn rect_4row_applies(t: &Triple) -> bool {
    t[0] == t[1]
        && match t[0].as_rectangle() {
            Some((w, 4)) | Some((4, w)) => w >= 5 && w % 2 == 1 && t[2].parts() == [2 * w, 2 * w],
            _ => false,
        }
}

/// `w^4 = 3^4 +_H (w-3)^4` for odd `w`, and the transposed `4^w` split by
/// `VVH`.
fn rect_4row(t: &Triple) -> Vec<Plan> {
    let Some((w, h)) = t[0].as_rectangle() else { return Vec::new() };
    let two_row = |c: u32| Partition::rectangle(c, 2);
    if h == 4 && w != 4 {
        vec![Plan::Combine(
            Combiner::Hhh,
            vec![
                target(Partition::rectangle(3, 4), two_row(6)),
                target(Partition::rectangle(w - 3, 4), two_row(2 * w - 6)),
            ],
        )]
    } else {
        vec![Plan::Combine(
            Combiner::Vvh,
            vec![
                target(Partition::rectangle(4, 3), two_row(6)),
                target(Partition::rectangle(4, h - 3), two_row(2 * h - 6)),
            ],
        )]
    }
}

// ------------------------------------------------------------- mod3-ladder

fn mod3_applies(t: &Triple) -> bool {
    matches!(square_target(t), Some((m, nu)) if m >= 4 && nu.len() == 3 && nu.part(2) as i64 >= 2 * m as i64 - 3)
}

/// `sq_m = (sq_{m-3} +_V (m-3)^3) +_H 3^m`, removing `(m-3)^3` and `m^3`.
fn mod3_ladder(t: &Triple) -> Vec<Plan> {
    let Some((m, nu)) = square_target(t) else { return Vec::new() };
    let mut out = Vec::new();
    push_peel(&mut out, m, 3, Some(Partition::rectangle(m - 3, 3)), Some(Partition::rectangle(m, 3)), nu);
    out
}

// ---------------------------------------------------------- three-row-even

fn three_row_even_applies(t: &Triple) -> bool {
    matches!(square_target(t), Some((m, nu)) if m >= 4 && m % 2 == 0 && three_rows(nu).is_some_and(|r| r[2] >= 2))
}

/// Even partitions of `2h` with at most three rows.
fn even_three_row(h: usize) -> Vec<Partition> {
    enumerate_partitions(h, None)
        .filter(|p| p.len() <= 3)
        .map(|p| Partition::from_unsorted(p.parts().iter().map(|x| 2 * x).collect()))
        .collect()
}

const THREE_ROW_EVEN_CAP: usize = 64;

/// `sq_m = (sq_{m-2} +_V (m-2, m-2)) +_H 2^m` with `beta`, `gamma` running
/// over even partitions of at most three rows. Candidates leaving a
/// three-row `alpha` with `alpha_3 >= 2`, close to proportional, come
/// first.
fn three_row_even(t: &Triple) -> Vec<Plan> {
    let Some((m, nu)) = square_target(t) else { return Vec::new() };
    let Some(target_rows) = three_rows(nu) else { return Vec::new() };
    let (mi, n) = (m as i64, (m * m) as i64);
    let sub = (mi - 2) * (mi - 2);
    let mut scored = Vec::new();
    for beta in even_three_row((m - 2) as usize) {
        for gamma in even_three_row(m as usize) {
            let tau = beta.horizontal_sum(&gamma);
            let Some(alpha) = nu.checked_sub(&tau) else { continue };
            let good = alpha.len() == 3 && alpha.part(2) >= 2;
            let drift: i64 = (0..3)
                .map(|i| (alpha.part(i) as i64 * n - target_rows[i] * sub).abs())
                .sum();
            scored.push(((!good, drift), beta.clone(), gamma));
        }
    }
    scored.sort_by_key(|a| a.0);
    let mut out = Vec::new();
    for (_, beta, gamma) in scored.into_iter().take(THREE_ROW_EVEN_CAP) {
        push_peel(&mut out, m, 2, Some(beta), Some(gamma), nu);
    }
    out
}

// ----------------------------------------------------------- three-row-odd

fn three_row_odd_applies(t: &Triple) -> bool {
    matches!(square_target(t), Some((m, nu)) if m >= 5 && m % 2 == 1 && three_rows(nu).is_some_and(|r| r[2] >= 2))
}

/// Odd `m`, three-row `nu` with `nu_3 >= 2`: a `1^m` strip when
/// `nu_1 - nu_2 >= 2m-1`, a `3^m` strip when `nu_3 >= 2m-1`, then by
/// `a = nu_1 - nu_2`: `j = 4` with `gamma` in `{(2m,2m), (2m-2,2m-2,4)}`
/// (`a < 2`) or `(2m,2m-2,2)` (`a` in `{2,3}`), else `j = 2` with two-row
/// `beta`, `gamma` over all splits `x + y + 1 = floor(a/4)`.
fn three_row_odd(t: &Triple) -> Vec<Plan> {
    let Some((m, nu)) = square_target(t) else { return Vec::new() };
    let Some([n1, n2, n3]) = three_rows(nu) else { return Vec::new() };
    let mi = m as i64;
    let a = n1 - n2;
    let mut out = Vec::new();
    if a >= 2 * mi - 1 {
        push_peel(&mut out, m, 1, rows(&[mi - 1]), rows(&[mi]), nu);
    }
    if n3 >= 2 * mi - 1 {
        push_peel(&mut out, m, 3, rows(&[mi - 3; 3]), rows(&[mi; 3]), nu);
    }
    let b_plain = rows(&[2 * mi - 8, 2 * mi - 8]);
    match a {
        0 | 1 => {
            push_peel(&mut out, m, 4, b_plain.clone(), rows(&[2 * mi, 2 * mi]), nu);
            push_peel(&mut out, m, 4, b_plain, rows(&[2 * mi - 2, 2 * mi - 2, 4]), nu);
        }
        2 | 3 => {
            let g = rows(&[2 * mi, 2 * mi - 2, 2]);
            push_peel(&mut out, m, 4, b_plain, g.clone(), nu);
            push_peel(&mut out, m, 4, rows(&[2 * mi - 10, 2 * mi - 10, 4]), g, nu);
        }
        _ => {
            let s = a / 4;
            for xs in 0..s {
                let ys = s - 1 - xs;
                let beta = two(mi - 1 + 2 * ys, mi - 3 - 2 * ys);
                let gamma = two(mi + 1 + 2 * xs, mi - 1 - 2 * xs);
                push_peel(&mut out, m, 2, beta, gamma, nu);
            }
        }
    }
    out
}

// ---------------------------------------------------------- near-hook-wide

/// `(m^2-k-i, i, 1^k)` as `(i, k)`, for `i >= 2`.
fn near_hook(nu: &Partition) -> Option<(i64, i64)> {
    let parts = nu.parts();
    if parts.len() < 2 || parts[1] < 2 || parts[2..].iter().any(|&p| p != 1) {
        return None;
    }
    Some((parts[1] as i64, parts.len() as i64 - 2))
}

fn hook(first: i64, leg: i64) -> Option<Partition> {
    if first < 1 || leg < 0 {
        return None;
    }
    let mut v = vec![first];
    v.extend(std::iter::repeat_n(1, leg as usize));
    rows(&v)
}

fn near_hook_wide_applies(t: &Triple) -> bool {
    matches!(square_target(t), Some((m, nu)) if m >= 8 && near_hook(nu).is_some_and(|(i, _)| i >= 4))
}

/// Near-hooks `mu_i(k, m)`. For `k >= 7m+9-i`, conjugate and split into
/// two hooks against `7^m +_H (m-7)^m`. Otherwise peel `j = m - m1` with
/// `m1 = ceil(sqrt(k+8))`, leaving `mu_4(k, m1)` and two-row pieces
/// `(a+d1, a)`, `(b+d2, b)` with `a + b = i - 4`.
fn near_hook_wide(t: &Triple) -> Vec<Plan> {
    let Some((m, nu)) = square_target(t) else { return Vec::new() };
    let Some((i, k)) = near_hook(nu) else { return Vec::new() };
    let (mi, n) = (m as i64, (m * m) as i64);
    let mut out = Vec::new();
    if k >= 7 * mi + 9 - i && m >= 8 {
        let k1 = 7 * mi - i + 1;
        let (Some(h1), Some(h2)) = (hook(k1, i - 1), hook(k + 2 - k1, n - i - k - 1)) else {
            return out;
        };
        let inner = Plan::Combine(
            Combiner::Hhh,
            vec![target(Partition::rectangle(7, m), h1), target(Partition::rectangle(m - 7, m), h2)],
        );
        if inner.claim().is_some_and(|c| c[2] == nu.conjugate()) {
            out.push(Plan::Sym(t.clone(), Box::new(inner)));
        }
    }
    let m1 = (1..).find(|&x: &i64| x * x >= k + 8).expect("unbounded");
    if m1 < mi {
        let j = (mi - m1) as u32;
        for a in 0..=(i - 4) {
            let b = i - 4 - a;
            let d1 = m1 * (mi - m1) - 2 * a;
            let d2 = mi * (mi - m1) - 2 * b;
            push_peel(&mut out, m, j, two(a + d1, a), two(b + d2, b), nu);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;

    fn sq(m: u32, nu: &[u32]) -> Triple {
        [Partition::square(m), Partition::square(m), p(nu)]
    }

    fn by_name(name: &str) -> Box<dyn Strategy> {
        strategies_by_name(&[name]).unwrap().pop().unwrap()
    }

    #[test]
    fn names_resolve() {
        assert_eq!(builtin_strategies().len(), STRATEGY_NAMES.len());
        assert_eq!(strategies_by_name(&["odd-strip", "nope"]).err(), Some("nope".to_string()));
    }

    #[test]
    fn even_square_lists_recipe_first() {
        let t = sq(6, &[26, 9, 1]);
        let plans = by_name("even-square").candidates(&t);
        assert!(plans.len() > 1);
        let first: Vec<&Triple> = plans[0].targets();
        assert_eq!(first[0], &sq(4, &[10, 5, 1]));
        assert_eq!(first[1][2], p(&[4, 4]));
        assert_eq!(first[2][2], p(&[12]));
        // the worked example's split (a, b) = (2, 2) is in the grid
        let example = plans.iter().any(|pl| pl.targets()[0] == &sq(4, &[8, 7, 1]));
        assert!(example);
    }

    #[test]
    fn rectangular_grid() {
        let t = sq(6, &[12, 12, 12]);
        let plans = by_name("rectangular").candidates(&t);
        assert_eq!(plans.len(), 1);
        let ts = plans[0].targets();
        assert_eq!(ts.len(), 4);
        assert!(ts.iter().all(|x| **x == sq(3, &[3, 3, 3])));
    }

    #[test]
    fn square_3k_chain() {
        let r9 = Partition::rectangle(9, 3);
        let plans = by_name("square-3k").candidates(&[r9.clone(), r9.clone(), r9]);
        let ts = plans[0].targets();
        assert_eq!(ts.len(), 3);
        assert!(ts.iter().all(|x| **x == sq(3, &[3, 3, 3])));
        let r7 = Partition::rectangle(7, 3);
        let c7 = Partition::rectangle(3, 7);
        let plans = by_name("square-3k").candidates(&[c7.clone(), c7, r7]);
        assert_eq!(plans[0].targets().len(), 2);
    }

    #[test]
    fn near_hook_wide_transposes_long_legs() {
        // m = 10, i = 8: k >= 7m + 9 - i = 71
        let m = 10u32;
        let (i, k) = (8u32, 71u32);
        let nu = Partition::near_hook(m, i, k).unwrap();
        let t = [Partition::square(m), Partition::square(m), nu];
        let plans = by_name("near-hook-wide").candidates(&t);
        assert!(matches!(plans.first(), Some(Plan::Sym(..))));
        let ts = plans[0].targets();
        assert_eq!(ts[0][0], Partition::rectangle(7, 10));
        assert_eq!(ts[0][2], p(&[63, 1, 1, 1, 1, 1, 1, 1]));
        assert_eq!(ts[1][2], p(&[10]).vertical_sum(&Partition::rectangle(1, 20)));
    }

    #[test]
    fn kk1_and_odd_cases() {
        let plans = by_name("kk1-ladder").candidates(&sq(9, &[40, 40, 1]));
        assert_eq!(plans[0].targets()[0], &sq(5, &[12, 12, 1]));
        let plans = by_name("kk1-ladder").candidates(&sq(9, &[41, 39, 1]));
        assert_eq!(plans[0].targets()[0], &sq(5, &[13, 11, 1]));
        assert!(!by_name("three-row-odd").candidates(&sq(7, &[20, 15, 14])).is_empty());
        assert!(!by_name("three-row-even").candidates(&sq(6, &[14, 12, 10])).is_empty());
        assert!(!by_name("mod3-ladder").candidates(&sq(6, &[13, 12, 11])).is_empty());
    }
}
