use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::{KronError, Result};

/// An ambient `rows x cols` rectangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoxFrame {
    pub rows: usize,
    pub cols: usize,
}

impl BoxFrame {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(KronError::domain(
                "BoxFrame::new",
                format!("frame dimensions must be positive, got {rows}x{cols}"),
            ));
        }
        Ok(BoxFrame { rows, cols })
    }

    pub fn square(m: usize) -> Self {
        BoxFrame::new(m, m).expect("square frame side must be positive")
    }

    /// The frame spanned by the first row and first column of `lambda`.
    pub fn spanned_by(lambda: &Partition) -> Result<Self> {
        BoxFrame::new(lambda.len(), lambda.first() as usize)
    }

    pub fn fits(&self, lambda: &Partition) -> bool {
        lambda.len() <= self.rows && lambda.first() as usize <= self.cols
    }

    fn check(&self, lambda: &Partition) -> Result<()> {
        if self.fits(lambda) {
            Ok(())
        } else {
            Err(KronError::DoesNotFit {
                partition: lambda.clone(),
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

/// The complement of `lambda` in the frame, rotated by a half turn so that
/// it is again a partition.
pub fn complement(lambda: &Partition, frame: BoxFrame) -> Result<Partition> {
    frame.check(lambda)?;
    let parts = (0..frame.rows)
        .map(|i| frame.cols as u32 - lambda.part(frame.rows - 1 - i))
        .collect();
    Partition::new(parts)
}

/// Boundary path of `lambda` from the south-west to the north-east corner
/// of the frame, as `true` = east, `false` = north.
fn boundary_path(lambda: &Partition, frame: BoxFrame) -> Vec<bool> {
    let mut path = Vec::with_capacity(frame.rows + frame.cols);
    for i in (0..frame.rows).rev() {
        let east = lambda.part(i) - lambda.part(i + 1);
        path.extend(std::iter::repeat_n(true, east as usize));
        path.push(false);
    }
    let tail = frame.cols as u32 - lambda.first();
    path.extend(std::iter::repeat_n(true, tail as usize));
    path
}

/// Length of the shortest maximal straight segment of the boundary path.
/// Runs are maximal by construction, so empty segments never occur.
pub fn shortness(lambda: &Partition, frame: BoxFrame) -> Result<usize> {
    frame.check(lambda)?;
    let path = boundary_path(lambda, frame);
    let mut best = usize::MAX;
    let mut run = 0;
    for (i, step) in path.iter().enumerate() {
        run += 1;
        if path.get(i + 1) != Some(step) {
            best = best.min(run);
            run = 0;
        }
    }
    Ok(best)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeClass {
    Rectangle,
    FatHook,
    Other,
}

/// Rectangle: one distinct part size. Fat hook: exactly two. The empty
/// partition has no parts at all and is `Other`.
pub fn classify_shape(lambda: &Partition) -> ShapeClass {
    match lambda.distinct_part_count() {
        1 => ShapeClass::Rectangle,
        2 => ShapeClass::FatHook,
        _ => ShapeClass::Other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;

    #[test]
    fn complement_examples() {
        let f = BoxFrame::new(5, 8).unwrap();
        assert_eq!(complement(&p(&[8, 4, 2, 2, 1]), f).unwrap(), p(&[7, 6, 6, 4]));
        assert_eq!(complement(&p(&[8, 8, 8, 3, 3]), f).unwrap(), p(&[5, 5]));
        assert_eq!(complement(&Partition::empty(), BoxFrame::square(3)).unwrap(), Partition::square(3));
        assert!(matches!(
            complement(&p(&[9]), f),
            Err(KronError::DoesNotFit { .. })
        ));
    }

    #[test]
    fn shortness_examples() {
        let f = BoxFrame::new(5, 8).unwrap();
        assert_eq!(shortness(&p(&[8, 4, 2, 2, 1]), f).unwrap(), 1);
        // runs are 3,2,5,3
        assert_eq!(shortness(&p(&[8, 8, 8, 3, 3]), f).unwrap(), 2);
        assert_eq!(shortness(&Partition::chopped_square(5), BoxFrame::square(5)).unwrap(), 1);
        assert_eq!(shortness(&p(&[1]), BoxFrame::square(5)).unwrap(), 1);
        assert_eq!(shortness(&Partition::empty(), BoxFrame::new(2, 3).unwrap()).unwrap(), 2);
    }

    #[test]
    fn path_has_frame_length() {
        let f = BoxFrame::new(5, 8).unwrap();
        assert_eq!(boundary_path(&p(&[8, 4, 2, 2, 1]), f).len(), 13);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_shape(&p(&[4, 4, 4])), ShapeClass::Rectangle);
        assert_eq!(classify_shape(&p(&[5, 5, 2, 2, 2])), ShapeClass::FatHook);
        assert_eq!(classify_shape(&p(&[5, 3, 2])), ShapeClass::Other);
        assert_eq!(classify_shape(&Partition::empty()), ShapeClass::Other);
    }

    #[test]
    fn zero_frame_rejected() {
        assert!(BoxFrame::new(0, 3).is_err());
    }
}
