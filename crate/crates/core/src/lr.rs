//! Littlewood–Richardson coefficients, Pieri expansion and the
//! multiplicity-freeness test for basic skew Schur functions.

use serde::{Deserialize, Serialize};

use crate::error::{KronError, Result};
use crate::partition::{classify_shape, complement, shortness, BoxFrame, Partition, ShapeClass};

/// `outer / inner`, with `inner` contained in `outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(KronError::domain(
                "SkewShape::new",
                format!("({inner}) is not contained in ({outer})"),
            ));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// No empty rows and no empty columns.
    pub fn is_basic(&self) -> bool {
        let rows_ok = (0..self.outer.len()).all(|i| self.outer.part(i) > self.inner.part(i));
        let (oc, ic) = (self.outer.conjugate(), self.inner.conjugate());
        let cols_ok = (0..oc.len()).all(|j| oc.part(j) > ic.part(j));
        rows_ok && cols_ok
    }

    /// Cells `(row, col)` in reverse reading order: rows top to bottom,
    /// each row right to left.
    fn reading_cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::with_capacity(self.size());
        for r in 0..self.outer.len() {
            for c in (self.inner.part(r) as usize..self.outer.part(r) as usize).rev() {
                cells.push((r, c));
            }
        }
        cells
    }
}

struct LrSearch<'a> {
    shape: &'a SkewShape,
    cells: Vec<(usize, usize)>,
    content: Vec<u32>,
    counts: Vec<u32>,
    /// filled values, `grid[r][c]`, 0 = unfilled or inner
    grid: Vec<Vec<u8>>,
}

impl LrSearch<'_> {
    fn run(&mut self, idx: usize) -> u64 {
        let Some(&(r, c)) = self.cells.get(idx) else {
            return 1;
        };
        let outer = &self.shape.outer;
        let inner = &self.shape.inner;
        // row weakly increasing: left <= right neighbour (already filled)
        let mut hi = self.content.len() as u8;
        if c + 1 < outer.part(r) as usize {
            hi = hi.min(self.grid[r][c + 1]);
        }
        // column strictly increasing: above < this
        let mut lo = 1u8;
        if r > 0 && c >= inner.part(r - 1) as usize {
            lo = lo.max(self.grid[r - 1][c] + 1);
        }
        let mut total = 0;
        for v in lo..=hi {
            let i = (v - 1) as usize;
            if self.counts[i] >= self.content[i] {
                continue;
            }
            if i > 0 && self.counts[i] + 1 > self.counts[i - 1] {
                continue;
            }
            self.counts[i] += 1;
            self.grid[r][c] = v;
            total += self.run(idx + 1);
            self.grid[r][c] = 0;
            self.counts[i] -= 1;
        }
        total
    }
}

/// `c^lambda_{mu nu}`: LR fillings of `lambda / mu` with content `nu` whose
/// reverse reading word is a lattice word. Zero when `mu` is not contained
/// in `lambda`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if mu.size() + nu.size() != lambda.size() {
        return Err(KronError::SizeMismatch {
            what: "|mu| + |nu| must equal |lambda|",
            left: mu.size() + nu.size(),
            right: lambda.size(),
        });
    }
    if !lambda.contains(mu) || !lambda.contains(nu) || nu.len() > 255 {
        return Ok(0);
    }
    let shape = SkewShape::new(lambda.clone(), mu.clone())?;
    let mut search = LrSearch {
        cells: shape.reading_cells(),
        content: nu.parts().to_vec(),
        counts: vec![0; nu.len()],
        grid: lambda.parts().iter().map(|&p| vec![0; p as usize]).collect(),
        shape: &shape,
    };
    Ok(search.run(0))
}

/// Every `lambda` obtained from `mu` by adding a horizontal strip of `n`
/// boxes, in reverse-lexicographic order.
pub fn pieri_expand(mu: &Partition, n: usize) -> Vec<Partition> {
    fn rec(mu: &Partition, row: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row > mu.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("horizontal strips keep partitions"));
            }
            return;
        }
        let base = mu.part(row);
        let cap = if row == 0 { left } else { (mu.part(row - 1) - base) as usize };
        for add in (0..=cap.min(left)).rev() {
            cur.push(base + add as u32);
            rec(mu, row + 1, left - add, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(mu, 0, n, &mut Vec::with_capacity(mu.len() + 1), &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Multiplicity-freeness of the basic skew Schur function `s_{lambda/mu}`,
/// decided by the Gutschwager–Thomas–Yong classification. `frame` is the
/// ambient rectangle for the complement and shortness, normally the one
/// spanned by `lambda` (`lambda_1` columns, `l(lambda)` rows). Basicness is
/// the caller's responsibility.
pub fn is_multiplicity_free_skew(lambda: &Partition, mu: &Partition, frame: BoxFrame) -> Result<bool> {
    if !frame.fits(lambda) {
        return Err(KronError::DoesNotFit {
            partition: lambda.clone(),
            rows: frame.rows,
            cols: frame.cols,
        });
    }
    if !lambda.contains(mu) {
        return Err(KronError::domain(
            "is_multiplicity_free_skew",
            format!("({mu}) is not contained in ({lambda})"),
        ));
    }
    let star = complement(lambda, frame)?;
    let rect = |p: &Partition| classify_shape(p) == ShapeClass::Rectangle;
    let fat = |p: &Partition| classify_shape(p) == ShapeClass::FatHook;
    let short = |p: &Partition| shortness(p, frame).expect("fits the frame");

    // (i)
    if mu.is_empty() || star.is_empty() {
        return Ok(true);
    }
    // (ii)
    if (rect(mu) && short(mu) == 1) || (rect(&star) && short(&star) == 1) {
        return Ok(true);
    }
    // (iii) and (iv), each in both orientations
    for (a, b) in [(mu, &star), (&star, mu)] {
        if rect(a) && short(a) == 2 && fat(b) {
            return Ok(true);
        }
        if rect(a) && fat(b) && short(b) == 1 {
            return Ok(true);
        }
    }
    // (v)
    Ok(rect(mu) && rect(&star))
}
