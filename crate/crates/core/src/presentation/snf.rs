use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Dense integer matrix with arbitrary-precision entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    /// Builds from rows of machine integers. All rows must have `cols` entries.
    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Self {
        let mut m = IntegerMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "row {i} has the wrong length");
            for (j, &x) in row.iter().enumerate() {
                m.data[i * cols + j] = BigInt::from(x);
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

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[target] -= q * row[source]
    fn sub_row(&mut self, target: usize, source: usize, q: &BigInt) {
        for j in 0..self.cols {
            let delta = q * &self.data[source * self.cols + j];
            self.data[target * self.cols + j] -= delta;
        }
    }

    /// col[target] -= q * col[source]
    fn sub_col(&mut self, target: usize, source: usize, q: &BigInt) {
        for i in 0..self.rows {
            let delta = q * &self.data[i * self.cols + source];
            self.data[i * self.cols + target] -= delta;
        }
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Invariant factors `d_1 | d_2 | ...` of `m`, one per diagonal position
/// (`min(rows, cols)` of them), all non-negative, zeros last.
///
/// Exact elementary row and column operations: move a smallest nonzero entry
/// to the pivot, clear its row and column by Euclidean division, and fold in
/// any row holding an entry the pivot does not divide.
pub fn smith_normal_form(m: &IntegerMatrix) -> Vec<BigInt> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let k = rows.min(cols);
    let mut diag = vec![BigInt::zero(); k];

    for t in 0..k {
        loop {
            let Some((pi, pj)) = smallest_nonzero(&a, t) else {
                return diag;
            };
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
            let pivot = a.get(t, t).clone();

            let mut clean = true;
            for i in t + 1..rows {
                if !a.get(i, t).is_zero() {
                    let q = a.get(i, t).div_floor(&pivot);
                    a.sub_row(i, t, &q);
                    clean &= a.get(i, t).is_zero();
                }
            }
            for j in t + 1..cols {
                if !a.get(t, j).is_zero() {
                    let q = a.get(t, j).div_floor(&pivot);
                    a.sub_col(j, t, &q);
                    clean &= a.get(t, j).is_zero();
                }
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a.get(i, j).is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    for j in t..cols {
                        let x = a.get(t, j) + a.get(i, j);
                        a.set(t, j, x);
                    }
                }
                None => break,
            }
        }
        diag[t] = a.get(t, t).abs();
    }
    diag
}

fn smallest_nonzero(a: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < a.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}
