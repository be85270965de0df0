use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::{invalid, Error, Result};

/// A lattice square `(row, col)`, both 1-based, row 1 at the bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1, "cells are 1-based");
        Cell { row, col }
    }
}

/// `(col − row) mod modulus`, normalised into `0..modulus`.
pub fn residue(cell: Cell, modulus: usize) -> usize {
    assert!(modulus >= 1, "residue modulus must be positive");
    (cell.col as i64 - cell.row as i64).rem_euclid(modulus as i64) as usize
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CornerKind {
    Removable,
    Addable,
}

/// The skew diagram `outer/inner`: row `i` holds the cells
/// `inner[i] < col ≤ outer[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return Err(invalid(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `p/∅`.
    pub fn straight(p: Partition) -> Self {
        SkewShape { outer: p, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of rows of the outer shape.
    pub fn height(&self) -> usize {
        self.outer.len()
    }

    /// Residual row lengths `outer[i] − inner[i]`.
    pub fn row_lengths(&self) -> Vec<usize> {
        (1..=self.height()).map(|r| self.outer.row(r) - self.inner.row(r)).collect()
    }

    /// Number of cells in the skew diagram.
    pub fn degree(&self) -> usize {
        self.outer.degree() - self.inner.degree()
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1 && self.inner.row(c.row) < c.col && c.col <= self.outer.row(c.row)
    }

    /// Number of skew cells in each column, left to right.
    pub fn column_lengths(&self) -> Vec<usize> {
        let mut cols = vec![0; self.outer.first()];
        for r in 1..=self.height() {
            for c in &mut cols[self.inner.row(r)..self.outer.row(r)] {
                *c += 1;
            }
        }
        cols
    }

    /// Hook length of any square of the outer shape: skew cells to its right
    /// in its row, skew cells above it in its column, plus itself when it is a
    /// skew cell.
    pub fn hook_length(&self, c: Cell) -> Result<usize> {
        if c.row == 0 || c.col == 0 || c.row > self.height() || c.col > self.outer.row(c.row) {
            return Err(Error::CellOutsideShape(c));
        }
        let arm = self.outer.row(c.row) - self.inner.row(c.row).max(c.col);
        let leg = (c.row + 1..=self.height())
            .filter(|&r| self.contains_cell(Cell::new(r, c.col)))
            .count();
        let own = usize::from(self.contains_cell(c));
        Ok(arm + leg + own)
    }

    /// Removable or addable corners, sorted by increasing row.
    ///
    /// `(1, outer₁)` is always removable when the first row is nonempty and
    /// `(ℓ(outer)+1, 1)` is always addable.
    pub fn corners(&self, kind: CornerKind) -> Vec<Cell> {
        match kind {
            CornerKind::Removable => self.removable_corners(),
            CornerKind::Addable => self.addable_corners(),
        }
    }

    fn removable_corners(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for r in 1..=self.height() {
            let end = self.outer.row(r);
            if end <= self.inner.row(r) {
                continue;
            }
            let cell = Cell::new(r, end);
            if r == 1 || !self.contains_cell(Cell::new(r + 1, end)) {
                out.push(cell);
            }
        }
        out
    }

    fn addable_corners(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        let h = self.height();
        for r in 1..=h {
            let end = self.outer.row(r);
            let left_in = end > self.inner.row(r);
            let square = Cell::new(r, end + 1);
            let below_in = r == 1 || self.contains_cell(Cell::new(r - 1, end + 1));
            if left_in && below_in {
                out.push(square);
            }
        }
        out.push(Cell::new(h + 1, 1));
        out
    }
}

/// A rectangle `(width^(k−width+1))`, whose corner cell has hook length `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KRectangle {
    width: usize,
    k: usize,
}

impl KRectangle {
    pub fn new(width: usize, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroK);
        }
        if width == 0 || width > k {
            return Err(invalid(format!("k-rectangle width {width} must lie in 1..={k}")));
        }
        Ok(KRectangle { width, k })
    }

    /// Every k-rectangle for the given `k`, narrowest first.
    pub fn all(k: usize) -> impl Iterator<Item = KRectangle> {
        (1..=k).map(move |width| KRectangle { width, k })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.k - self.width + 1
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn to_partition(&self) -> Partition {
        Partition::rectangle(self.width, self.height())
    }

    /// The transposed rectangle, itself a k-rectangle.
    pub fn transpose(&self) -> KRectangle {
        KRectangle { width: self.height(), k: self.k }
    }
}
