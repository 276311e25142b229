//! Dense matrices over GF(q) and a bit-packed GF(2) variant.

use serde::{Deserialize, Serialize};

use crate::gfp::{Fe, Field};

/// Row-major byte matrix over GF(q).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

/// Output of row reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<M> {
    pub matrix: M,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Fe>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_u8_rows(rows: &[&[u8]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Fe(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Fe] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Fe]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn get(&self, r: usize, c: usize) -> Fe {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Fe) {
        self.data[r * self.cols + c] = v;
    }

    pub fn to_u8_rows(&self) -> Vec<Vec<u8>> {
        self.iter_rows()
            .map(|r| r.iter().map(|c| c.0).collect())
            .collect()
    }

    /// `message * self`, a row vector times the matrix.
    pub fn left_mul(&self, field: Field, message: &[Fe]) -> Vec<Fe> {
        assert_eq!(message.len(), self.rows);
        let mut out = vec![Fe::ZERO; self.cols];
        for (m, row) in message.iter().zip(self.iter_rows()) {
            if m.is_zero() {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(row) {
                *o = field.add(*o, field.mul(*m, x));
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form with leftmost pivots, pivot entries 1.
    pub fn rref(&self, field: Field) -> Rref<Matrix> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = field.inv(m.get(r, c)).expect("pivot is nonzero");
            for x in m.row_mut(r) {
                *x = field.mul(*x, inv);
            }
            let pivot_row = m.row(r).to_vec();
            for i in 0..m.rows {
                let factor = m.get(i, c);
                if i == r || factor.is_zero() {
                    continue;
                }
                for (x, &p) in m.row_mut(i).iter_mut().zip(&pivot_row) {
                    *x = field.sub(*x, field.mul(factor, p));
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self, field: Field) -> usize {
        self.rref(field).rank
    }

    /// Keep only the first `k` rows.
    pub fn truncate_rows(&mut self, k: usize) {
        self.rows = self.rows.min(k);
        self.data.truncate(self.rows * self.cols);
    }

    pub fn to_bits(&self) -> BitMatrix {
        let mut b = BitMatrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c).0 & 1 == 1 {
                    b.set(r, c, true);
                }
            }
        }
        b
    }
}

/// Incremental echelon basis used to pick independent rows greedily.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: Field,
    cols: usize,
    // (pivot column, row normalized so pivot = 1)
    rows: Vec<(usize, Vec<Fe>)>,
}

impl EchelonBasis {
    pub fn new(field: Field, cols: usize) -> Self {
        EchelonBasis {
            field,
            cols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [Fe]) {
        let f = self.field;
        for (p, row) in &self.rows {
            let factor = v[*p];
            if factor.is_zero() {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(row) {
                *x = f.sub(*x, f.mul(factor, y));
            }
        }
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &[Fe]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Insert `v`; returns true if it increased the rank.
    pub fn insert(&mut self, v: &[Fe]) -> bool {
        assert_eq!(v.len(), self.cols);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let f = self.field;
        let inv = f.inv(w[p]).expect("nonzero");
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        // Keep earlier rows reduced at the new pivot.
        for (_, row) in self.rows.iter_mut() {
            let factor = row[p];
            if !factor.is_zero() {
                for (x, &y) in row.iter_mut().zip(&w) {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
        }
        self.rows.push((p, w));
        true
    }
}

/// GF(2) matrix with each row packed into little-endian `u64` words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64);
        BitMatrix {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    pub fn from_words(rows: usize, cols: usize, data: Vec<u64>) -> Option<Self> {
        let words_per_row = cols.div_ceil(64);
        (data.len() == rows * words_per_row).then_some(BitMatrix {
            rows,
            cols,
            words_per_row,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn words_per_row(&self) -> usize {
        self.words_per_row
    }

    pub fn words(&self) -> &[u64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.row(r)[c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let w = &mut self.data[r * self.words_per_row + c / 64];
        if v {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let wpr = self.words_per_row;
        for k in 0..wpr {
            let s = self.data[src * wpr + k];
            self.data[dst * wpr + k] ^= s;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let wpr = self.words_per_row;
        for k in 0..wpr {
            self.data.swap(a * wpr + k, b * wpr + k);
        }
    }

    pub fn rref(&self) -> Rref<BitMatrix> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c)) else {
                continue;
            };
            m.swap_rows(r, p);
            for i in 0..m.rows {
                if i != r && m.get(i, c) {
                    m.xor_row_into(r, i);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn to_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    m.set(r, c, Fe::ONE);
                }
            }
        }
        m
    }
}
