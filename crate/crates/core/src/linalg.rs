//! Dense matrices over a finite field: row reduction, kernels, inverses.

use crate::error::{Error, Result};
use crate::gf::{Fe, FieldCtx};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Fe::ZERO; rows * cols] }
    }

    pub fn identity(f: &FieldCtx, n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = f.one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Fe>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
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

    pub fn to_rows(&self) -> Vec<Vec<Fe>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Fe> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn map(&self, g: impl Fn(Fe) -> Fe) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| g(a)).collect() }
    }

    pub fn mul(&self, f: &FieldCtx, o: &Matrix) -> Result<Matrix> {
        if self.cols != o.rows {
            return Err(Error::Dimension(format!("{}x{} * {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    out[(i, j)] = f.add(out[(i, j)], f.mul(a, o[(k, j)]));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, f: &FieldCtx, v: &[Fe]) -> Vec<Fe> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(Fe::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b))))
            .collect()
    }

    pub fn scale(&self, f: &FieldCtx, c: Fe) -> Matrix {
        self.map(|a| f.mul(a, c))
    }

    /// In-place reduced row echelon form; returns pivot columns. Zero rows
    /// are moved to the bottom.
    pub fn rref_in_place(&mut self, f: &FieldCtx) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else { continue };
            self.swap_rows(r, pr);
            let inv = f.inv(self[(r, c)]).unwrap();
            for j in c..self.cols {
                self[(r, j)] = f.mul(self[(r, j)], inv);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self[(i, c)];
                if factor.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.mul(factor, self[(r, j)]);
                    self[(i, j)] = f.sub(self[(i, j)], v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// RREF with zero rows removed, plus pivot columns.
    pub fn rref(&self, f: &FieldCtx) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let piv = m.rref_in_place(f);
        m.data.truncate(piv.len() * m.cols);
        m.rows = piv.len();
        (m, piv)
    }

    pub fn rank(&self, f: &FieldCtx) -> usize {
        self.clone().rref_in_place(f).len()
    }

    /// Basis of `{x : self * x = 0}` as rows.
    pub fn kernel(&self, f: &FieldCtx) -> Vec<Vec<Fe>> {
        let (r, piv) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![Fe::ZERO; self.cols];
                v[fc] = f.one();
                for (i, &pc) in piv.iter().enumerate() {
                    v[pc] = f.neg(r[(i, fc)]);
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self, f: &FieldCtx) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = f.one();
        }
        let piv = aug.rref_in_place(f);
        if piv.len() < n || piv[n - 1] != n - 1 {
            return Err(Error::Degenerate("singular matrix".into()));
        }
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = aug[(i, n + j)];
            }
        }
        Ok(out)
    }

    pub fn det(&self, f: &FieldCtx) -> Fe {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = f.one();
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !m[(i, c)].is_zero()) else { return Fe::ZERO };
            if pr != c {
                m.swap_rows(pr, c);
                det = f.neg(det);
            }
            let pivot = m[(c, c)];
            det = f.mul(det, pivot);
            let inv = f.inv(pivot).unwrap();
            for i in c + 1..n {
                let factor = f.mul(m[(i, c)], inv);
                if factor.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = f.mul(factor, m[(c, j)]);
                    m[(i, j)] = f.sub(m[(i, j)], v);
                }
            }
        }
        det
    }

    /// Solves `x * self = target` for a row vector `x`, if possible.
    pub fn solve_left(&self, f: &FieldCtx, target: &[Fe]) -> Option<Vec<Fe>> {
        // x * A = t  <=>  A^T x^T = t^T
        let at = self.transpose();
        let mut aug = Matrix::zeros(at.rows, at.cols + 1);
        for i in 0..at.rows {
            for j in 0..at.cols {
                aug[(i, j)] = at[(i, j)];
            }
            aug[(i, at.cols)] = target[i];
        }
        let (r, piv) = aug.rref(f);
        if piv.last() == Some(&at.cols) {
            return None;
        }
        let mut x = vec![Fe::ZERO; at.cols];
        for (i, &pc) in piv.iter().enumerate() {
            x[pc] = r[(i, at.cols)];
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Fe;
    fn index(&self, (i, j): (usize, usize)) -> &Fe {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Fe {
        &mut self.data[i * self.cols + j]
    }
}

/// Integer matrices, used for Picard-lattice actions.
pub mod int {
    pub type IntMatrix = Vec<Vec<i64>>;

    pub fn identity(n: usize) -> IntMatrix {
        (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
    }

    pub fn mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
        let n = a.len();
        let k = b.len();
        let m = b[0].len();
        (0..n).map(|i| (0..m).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum()).collect()).collect()
    }

    pub fn mul_vec(a: &IntMatrix, v: &[i64]) -> Vec<i64> {
        a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
    }

    pub fn transpose(a: &IntMatrix) -> IntMatrix {
        (0..a[0].len()).map(|j| a.iter().map(|r| r[j]).collect()).collect()
    }

    pub fn trace(a: &IntMatrix) -> i64 {
        (0..a.len()).map(|i| a[i][i]).sum()
    }

    /// Characteristic polynomial `det(xI - A)` by Faddeev–LeVerrier;
    /// coefficients constant term first.
    pub fn charpoly(a: &IntMatrix) -> Vec<i64> {
        let n = a.len();
        let mut coeffs = vec![0i64; n + 1];
        coeffs[n] = 1;
        let mut m = vec![vec![0i64; n]; n];
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let am = if k == 1 { vec![vec![0; n]; n] } else { mul(a, &m) };
            for i in 0..n {
                for j in 0..n {
                    m[i][j] = am[i][j] + if i == j { coeffs[n - k + 1] } else { 0 };
                }
            }
            let amk = mul(a, &m);
            let tr = trace(&amk);
            assert_eq!(tr % k as i64, 0, "Faddeev–LeVerrier division must be exact");
            coeffs[n - k] = -tr / k as i64;
        }
        coeffs
    }

    /// Rank over the rationals (fraction-free elimination).
    pub fn rank(a: &IntMatrix) -> usize {
        let mut m: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        let rows = m.len();
        let cols = if rows == 0 { 0 } else { m[0].len() };
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
            m.swap(r, p);
            for i in r + 1..rows {
                let (a0, b0) = (m[r][c], m[i][c]);
                for j in 0..cols {
                    m[i][j] = m[i][j] * a0 - m[r][j] * b0;
                }
                let g = m[i].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
                if g > 1 {
                    for x in m[i].iter_mut() {
                        *x /= g;
                    }
                }
            }
            r += 1;
        }
        r
    }

    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn kernel_and_rank() {
        let f = make_field(5, 1).unwrap();
        let e = |n: i64| f.from_int(n);
        let a = Matrix::from_rows(vec![vec![e(1), e(2), e(3)], vec![e(2), e(4), e(0)]]);
        assert_eq!(a.rank(&f), 2);
        let k = a.kernel(&f);
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&f, &k[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn inverse_and_det() {
        let f = make_field(7, 1).unwrap();
        let e = |n: i64| f.from_int(n);
        let a = Matrix::from_rows(vec![vec![e(2), e(1)], vec![e(5), e(3)]]);
        assert_eq!(a.det(&f), e(1));
        let inv = a.inverse(&f).unwrap();
        assert_eq!(a.mul(&f, &inv).unwrap(), Matrix::identity(&f, 2));
        let s = Matrix::from_rows(vec![vec![e(1), e(2)], vec![e(2), e(4)]]);
        assert!(s.inverse(&f).is_err());
        assert!(s.det(&f).is_zero());
    }

    #[test]
    fn duplicated_row_drops_rank() {
        let f = make_field(3, 1).unwrap();
        let e = |n: i64| f.from_int(n);
        let a = Matrix::from_rows(vec![vec![e(1), e(2), e(0)], vec![e(1), e(2), e(0)], vec![e(0), e(0), e(1)]]);
        assert_eq!(a.rank(&f), 2);
    }

    #[test]
    fn charpoly_of_permutation() {
        // 3-cycle: x^3 - 1
        let a = vec![vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]];
        assert_eq!(int::charpoly(&a), vec![-1, 0, 0, 1]);
        assert_eq!(int::rank(&a), 3);
    }
}
