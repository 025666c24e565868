use super::{BoxFrame, Partition};

/// Partitions of `n` in reverse-lexicographic order: `(n)` first, `(1^n)`
/// last. With a frame, only partitions with at most `rows` parts, each at
/// most `cols`, are produced.
pub fn enumerate_partitions(n: usize, frame: Option<BoxFrame>) -> Partitions {
    let (rows, cols) = match frame {
        Some(f) => (f.rows, f.cols),
        None => (n.max(1), n.max(1)),
    };
    Partitions {
        rows,
        cols: cols as u32,
        next: first_fill(n, cols as u32, rows),
    }
}

#[derive(Clone, Debug)]
pub struct Partitions {
    rows: usize,
    cols: u32,
    next: Option<Vec<u32>>,
}

/// Greedy fill: the lexicographically largest partition of `n` with parts
/// at most `cap` and at most `slots` parts.
fn first_fill(n: usize, cap: u32, slots: usize) -> Option<Vec<u32>> {
    let mut parts = Vec::new();
    fill(&mut parts, n, cap, slots).then_some(parts)
}

fn fill(parts: &mut Vec<u32>, mut rest: usize, cap: u32, slots: usize) -> bool {
    if cap == 0 {
        return rest == 0;
    }
    if rest > cap as usize * slots {
        return false;
    }
    while rest > 0 {
        let p = (cap as usize).min(rest);
        parts.push(p as u32);
        rest -= p;
    }
    true
}

impl Partitions {
    fn advance(&self, cur: &[u32]) -> Option<Vec<u32>> {
        let mut suffix = 0usize;
        for i in (0..cur.len()).rev() {
            suffix += cur[i] as usize;
            if cur[i] < 2 {
                continue;
            }
            let cap = cur[i] - 1;
            let slots = self.rows - i - 1;
            let rest = suffix - cap as usize;
            if rest <= cap as usize * slots {
                let mut parts = cur[..i].to_vec();
                parts.push(cap);
                fill(&mut parts, rest, cap, slots);
                return Some(parts);
            }
        }
        None
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.next.take()?;
        debug_assert!(cur.first().is_none_or(|&p| p <= self.cols));
        self.next = self.advance(&cur);
        Some(Partition::from_canonical(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_partitions(4, None).count(), 5);
        assert_eq!(enumerate_partitions(0, None).collect::<Vec<_>>(), vec![Partition::empty()]);
        let boxed: Vec<_> = enumerate_partitions(2, Some(BoxFrame::square(2))).collect();
        assert_eq!(boxed, vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(enumerate_partitions(25, None).count(), 1958);
    }

    #[test]
    fn order_is_reverse_lex() {
        let all: Vec<_> = enumerate_partitions(6, None).collect();
        assert_eq!(all.first(), Some(&p(&[6])));
        assert_eq!(all.last(), Some(&p(&[1, 1, 1, 1, 1, 1])));
        assert!(all.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn framed() {
        let f = BoxFrame::new(2, 3).unwrap();
        let got: Vec<_> = enumerate_partitions(4, Some(f)).collect();
        assert_eq!(got, vec![p(&[3, 1]), p(&[2, 2])]);
        assert_eq!(enumerate_partitions(7, Some(f)).count(), 0);
        let f = BoxFrame::new(3, 2).unwrap();
        let got: Vec<_> = enumerate_partitions(4, Some(f)).collect();
        assert_eq!(got, vec![p(&[2, 2]), p(&[2, 1, 1])]);
    }
}
