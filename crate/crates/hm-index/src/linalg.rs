use exact_core::Rat;
use num_traits::Zero;

/// Dense matrix over exact rationals, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: Vec<Vec<Rat>>,
    pub cols: usize,
}

impl Matrix {
    pub fn new(rows: Vec<Vec<Rat>>, cols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        Matrix { rows, cols }
    }

    pub fn zero(nrows: usize, cols: usize) -> Self {
        Matrix {
            rows: vec![vec![Rat::zero(); cols]; nrows],
            cols,
        }
    }

    /// In-place reduction to row echelon form; returns the pivot columns in
    /// order. Pivoting takes the first nonzero entry in each column, so the
    /// result is deterministic.
    pub fn echelon(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows.len() {
                break;
            }
            let Some(p) = (row..self.rows.len()).find(|&r| !self.rows[r][col].is_zero()) else {
                continue;
            };
            self.rows.swap(row, p);
            let inv = {
                let pv = &self.rows[row][col];
                Rat::new(pv.denom().clone(), pv.numer().clone())
            };
            for v in self.rows[row].iter_mut() {
                if !v.is_zero() {
                    *v *= &inv;
                }
            }
            for r in 0..self.rows.len() {
                if r == row || self.rows[r][col].is_zero() {
                    continue;
                }
                let factor = self.rows[r][col].clone();
                for c in col..self.cols {
                    if self.rows[row][c].is_zero() {
                        continue;
                    }
                    let delta = &self.rows[row][c] * &factor;
                    self.rows[r][c] -= delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().echelon().len()
    }
}

/// One solution of A x = b, or None when inconsistent.
pub fn solve(a: &Matrix, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(a.rows.len(), b.len());
    let cols = a.cols;
    let mut aug = Matrix::new(
        a.rows
            .iter()
            .zip(b)
            .map(|(r, v)| {
                let mut row = r.clone();
                row.push(v.clone());
                row
            })
            .collect(),
        cols + 1,
    );
    let pivots = aug.echelon();
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = aug.rows[i][cols].clone();
    }
    Some(x)
}
