use num_traits::{One, Zero};

use crate::indices::Index;
use crate::lsi::LsiMonomial;
use crate::rational::Rational;

/// Dense matrix over the rationals, optionally labelled by MZV indices (rows)
/// and monomials (columns).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    data: Vec<Vec<Rational>>,
    cols: usize,
    pub row_labels: Option<Vec<Index>>,
    pub col_labels: Option<Vec<LsiMonomial>>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            data: vec![vec![Rational::zero(); cols]; rows],
            cols,
            row_labels: None,
            col_labels: None,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = Rational::one();
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        RationalMatrix { data: rows, cols, row_labels: None, col_labels: None }
    }

    pub fn with_row_labels(mut self, labels: Vec<Index>) -> Self {
        assert_eq!(labels.len(), self.rows());
        self.row_labels = Some(labels);
        self
    }

    pub fn with_col_labels(mut self, labels: Vec<LsiMonomial>) -> Self {
        assert_eq!(labels.len(), self.cols);
        self.col_labels = Some(labels);
        self
    }

    pub fn rows(&self) -> usize {
        self.data.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i][j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i]
    }

    pub fn row_vectors(&self) -> &[Vec<Rational>] {
        &self.data
    }

    pub fn is_zero_row(&self, i: usize) -> bool {
        self.data[i].iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero entry of row `i`.
    pub fn leading_column(&self, i: usize) -> Option<usize> {
        self.data[i].iter().position(|x| !x.is_zero())
    }

    pub fn push_row(&mut self, row: Vec<Rational>) {
        assert_eq!(row.len(), self.cols);
        self.data.push(row);
        self.row_labels = None;
    }

    /// Rows of `self` followed by rows of `other`. Column labels are kept
    /// from `self`.
    pub fn vstack(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        RationalMatrix { data, cols: self.cols, row_labels: None, col_labels: self.col_labels.clone() }
    }

    /// `out[i][j] = self[row_order[i]][col_order[j]]`.
    pub fn permuted(&self, row_order: &[usize], col_order: &[usize]) -> RationalMatrix {
        let data = row_order
            .iter()
            .map(|&i| col_order.iter().map(|&j| self.data[i][j].clone()).collect())
            .collect();
        RationalMatrix { data, cols: col_order.len(), row_labels: None, col_labels: None }
    }

    /// Reduced row echelon form together with the pivot columns. Zero rows
    /// are kept at the bottom so the shape is unchanged.
    pub fn rref_with_pivots(&self) -> (RationalMatrix, Vec<usize>) {
        let mut a = self.data.clone();
        let rows = a.len();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = Rational::one() / &a[r][c];
            if !inv.is_one() {
                for x in a[r][c..].iter_mut() {
                    *x *= &inv;
                }
            }
            let (above, rest) = a.split_at_mut(r);
            let (pivot_row, below) = rest.split_first_mut().expect("row r exists");
            for other in above.iter_mut().chain(below.iter_mut()) {
                if other[c].is_zero() {
                    continue;
                }
                let f = other[c].clone();
                for (x, p) in other[c..].iter_mut().zip(&pivot_row[c..]) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let out = RationalMatrix {
            data: a,
            cols: self.cols,
            row_labels: None,
            col_labels: self.col_labels.clone(),
        };
        (out, pivots)
    }

    pub fn rref(&self) -> RationalMatrix {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// The rows of the rref that are nonzero.
    pub fn row_space_basis(&self) -> RationalMatrix {
        let (r, pivots) = self.rref_with_pivots();
        let data = r.data.into_iter().take(pivots.len()).collect();
        RationalMatrix { data, cols: self.cols, row_labels: None, col_labels: self.col_labels.clone() }
    }

    /// Equal row spaces, compared through their reduced echelon forms.
    pub fn same_row_space(&self, other: &RationalMatrix) -> bool {
        self.cols == other.cols && self.row_space_basis().data == other.row_space_basis().data
    }
}
