use std::ops::Mul;

use num_traits::{One, Zero};

use super::{field, Cyclotomic};
use crate::error::ArithmeticError;

/// Dense row-major matrix over a cyclotomic field. All entries are kept at a
/// single common conductor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Cyclotomic>,
}

impl CycloMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Cyclotomic>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        let n = entries
            .iter()
            .fold(1, |acc, e| field::lcm(acc, e.conductor()));
        let entries = entries
            .into_iter()
            .map(|e| if e.conductor() == n { e } else { e.lift(n) })
            .collect();
        CycloMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Cyclotomic) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self::new(rows, cols, entries)
    }

    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Cyclotomic::one()
            } else {
                Cyclotomic::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Common conductor of the entries.
    pub fn conductor(&self) -> u32 {
        self.entries.first().map_or(1, Cyclotomic::conductor)
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.entries[i * self.cols + j]
    }

    /// Replaces one entry, re-lifting the whole matrix if the conductor grows.
    pub fn set(&mut self, i: usize, j: usize, value: Cyclotomic) {
        self.entries[i * self.cols + j] = value;
        let entries = std::mem::take(&mut self.entries);
        *self = Self::new(self.rows, self.cols, entries);
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Cyclotomic> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Cyclotomic] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    /// Exact inverse by Gauss–Jordan elimination; the pivot is the first
    /// nonzero entry of the column at or below the diagonal.
    pub fn inverse(&self) -> Result<Self, ArithmeticError> {
        if !self.is_square() {
            return Err(ArithmeticError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a: Vec<Vec<Cyclotomic>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut inv: Vec<Vec<Cyclotomic>> = (0..n).map(|i| Self::identity(n).row(i).to_vec()).collect();
        let mut rank = 0;
        let mut singular = false;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
                singular = true;
                continue;
            };
            a.swap(rank, p);
            inv.swap(rank, p);
            let pivot_inv = a[rank][col].inv()?;
            for x in a[rank].iter_mut().chain(inv[rank].iter_mut()) {
                *x = &*x * &pivot_inv;
            }
            for r in 0..n {
                if r == rank || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for c in 0..n {
                    let t = &factor * &a[rank][c];
                    a[r][c] -= &t;
                    let t = &factor * &inv[rank][c];
                    inv[r][c] -= &t;
                }
            }
            rank += 1;
        }
        if singular {
            return Err(ArithmeticError::Singular { rank, size: n });
        }
        Ok(Self::from_rows(inv))
    }

    /// Rank over the cyclotomic field.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<Cyclotomic>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let pivot_inv = a[rank][col].inv().expect("nonzero pivot");
            for r in rank + 1..self.rows {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] * &pivot_inv;
                for c in col..self.cols {
                    let t = &factor * &a[rank][c];
                    a[r][c] -= &t;
                }
            }
            rank += 1;
        }
        rank
    }
}

impl Mul for &CycloMatrix {
    type Output = CycloMatrix;
    fn mul(self, rhs: &CycloMatrix) -> CycloMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        CycloMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols)
                .filter(|&k| !self.get(i, k).is_zero() && !rhs.get(k, j).is_zero())
                .map(|k| self.get(i, k) * rhs.get(k, j))
                .sum()
        })
    }
}
