use super::poly::LaurentPoly;
use super::RingError;

pub const DEFAULT_DET_CAP: usize = 10;

/// Dense matrix of Laurent polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix { rows, cols, entries: vec![LaurentPoly::zero(); rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> PolyMatrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<PolyMatrix, RingError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(RingError::RaggedRows);
        }
        Ok(PolyMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn det(&self) -> Result<LaurentPoly, RingError> {
        self.det_with_cap(DEFAULT_DET_CAP)
    }

    /// Laplace expansion along rows from the bottom up, memoizing the minor on
    /// each subset of columns. Zero entries and zero minors are skipped.
    pub fn det_with_cap(&self, cap: usize) -> Result<LaurentPoly, RingError> {
        if self.rows != self.cols {
            return Err(RingError::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n > cap {
            return Err(RingError::DimensionCap { dim: n, cap });
        }
        if n == 0 {
            return Ok(LaurentPoly::one());
        }
        // minors[mask] = det of rows n-|mask|.. restricted to the columns in mask
        let mut minors: Vec<LaurentPoly> = vec![LaurentPoly::zero(); 1 << n];
        minors[0] = LaurentPoly::one();
        let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        for mask in 0usize..(1 << n) {
            by_size[mask.count_ones() as usize].push(mask);
        }
        for k in 1..=n {
            let r = n - k;
            for &mask in &by_size[k] {
                let mut acc = LaurentPoly::zero();
                let mut below = 0;
                for j in 0..n {
                    if mask & (1 << j) == 0 {
                        continue;
                    }
                    let entry = self.get(r, j);
                    let sub = &minors[mask ^ (1 << j)];
                    if !entry.is_zero() && !sub.is_zero() {
                        let t = entry * sub;
                        if below % 2 == 0 {
                            acc += t;
                        } else {
                            acc -= &t;
                        }
                    }
                    below += 1;
                }
                minors[mask] = acc;
            }
            if k >= 2 {
                for &mask in &by_size[k - 2] {
                    minors[mask] = LaurentPoly::zero();
                }
            }
        }
        Ok(std::mem::take(&mut minors[(1 << n) - 1]))
    }
}
