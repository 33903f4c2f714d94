use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use super::Rational;

/// Sparse matrix with labelled rows and columns. Zero entries are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

impl SparseMatrix {
    pub fn new(row_labels: Vec<String>, col_labels: Vec<String>) -> Self {
        SparseMatrix {
            rows: row_labels.len(),
            cols: col_labels.len(),
            entries: BTreeMap::new(),
            row_labels,
            col_labels,
        }
    }

    /// Unlabelled matrix; labels are the decimal indices.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(
            (0..rows).map(|i| alloc::format!("{i}")).collect(),
            (0..cols).map(|j| alloc::format!("{j}")).collect(),
        )
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn set(&mut self, r: usize, c: usize, x: Rational) {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        if x.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), x);
        }
    }

    pub fn add(&mut self, r: usize, c: usize, x: &Rational) {
        let v = self.get(r, c) + x;
        self.set(r, c, v);
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Nonzero entries of one row, in column order.
    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.range((r, 0)..(r + 1, 0)).map(|((_, c), x)| (*c, x))
    }

    /// Nonzero entries of one column, in row order.
    pub fn col(&self, c: usize) -> Vec<(usize, &Rational)> {
        self.entries.iter().filter(|((_, j), _)| *j == c).map(|((i, _), x)| (*i, x)).collect()
    }

    pub fn row_counts(&self) -> Vec<usize> {
        let mut out = alloc::vec![0; self.rows];
        for (r, _) in self.entries.keys() {
            out[*r] += 1;
        }
        out
    }

    pub fn col_counts(&self) -> Vec<usize> {
        let mut out = alloc::vec![0; self.cols];
        for (_, c) in self.entries.keys() {
            out[*c] += 1;
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = alloc::vec![alloc::vec![Rational::zero(); self.cols]; self.rows];
        for ((r, c), x) in &self.entries {
            out[*r][*c] = x.clone();
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::new(self.col_labels.clone(), self.row_labels.clone());
        for ((r, c), x) in &self.entries {
            t.entries.insert((*c, *r), x.clone());
        }
        t
    }

    /// Same entries with rows and columns reordered: new row `i` is old row
    /// `rows[i]` scaled by `signs[i]`, new column `j` is old column `cols[j]`.
    pub fn permuted(&self, rows: &[usize], signs: &[i64], cols: &[usize]) -> Self {
        let mut inv_col = alloc::vec![usize::MAX; self.cols];
        for (j, &c) in cols.iter().enumerate() {
            inv_col[c] = j;
        }
        let mut m = Self::new(
            rows.iter().map(|&r| self.row_labels[r].clone()).collect(),
            cols.iter().map(|&c| self.col_labels[c].clone()).collect(),
        );
        for (i, &r) in rows.iter().enumerate() {
            for (c, x) in self.row(r) {
                let j = inv_col[c];
                if j != usize::MAX {
                    m.set(i, j, x * super::rat(signs[i]));
                }
            }
        }
        m
    }

    pub fn relabel(&mut self, row_labels: Vec<String>, col_labels: Vec<String>) {
        assert_eq!(row_labels.len(), self.rows);
        assert_eq!(col_labels.len(), self.cols);
        self.row_labels = row_labels;
        self.col_labels = col_labels;
    }
}
