use std::fmt;
use std::ops::{Index, IndexMut};

use super::FieldElem;
use crate::error::{Error, Result};
use crate::par::Exec;

/// Dense row-major matrix over ℚ(i, √2, √3, √5).
#[derive(Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl FieldMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FieldMatrix { rows, cols, data: vec![FieldElem::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = FieldElem::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> FieldElem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        FieldMatrix { rows, cols, data }
    }

    /// Builds a matrix from rows; every row must have `cols` entries.
    pub fn from_rows(rows: Vec<Vec<FieldElem>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(FieldMatrix { rows: n, cols, data })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<FieldElem>], rows: usize) -> Result<Self> {
        if let Some(bad) = columns.iter().find(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch(format!(
                "column has {} entries, expected {rows}",
                bad.len()
            )));
        }
        Ok(Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[FieldElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<FieldElem> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElem::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.mul_with(other, Exec::default())
    }

    pub fn mul_with(&self, other: &Self, exec: Exec) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let rows = exec.map_range(self.rows, |r| {
            let mut out = vec![FieldElem::zero(); other.cols];
            for (k, a) in self.row(r).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (c, b) in other.row(k).iter().enumerate() {
                    if !b.is_zero() {
                        out[c] += a * b;
                    }
                }
            }
            out
        });
        Self::from_rows(rows, other.cols)
    }

    pub fn mul_vec(&self, v: &[FieldElem]) -> Result<Vec<FieldElem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix applied to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Self::from_fn(self.rows, self.cols, |r, c| &self[(r, c)] + &other[(r, c)]))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Self::from_fn(self.rows, self.cols, |r, c| &self[(r, c)] - &other[(r, c)]))
    }

    pub fn scale(&self, s: &FieldElem) -> Self {
        FieldMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Reduced row echelon form and pivot columns.
    ///
    /// Pivoting rule: scan columns left to right and take the first row (at or
    /// below the current one) with a nonzero entry.
    pub fn rref(&self, exec: Exec) -> (FieldMatrix, Vec<usize>) {
        let mut rows: Vec<Vec<FieldElem>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..self.cols {
            if top == rows.len() {
                break;
            }
            let Some(p) = (top..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(top, p);
            let inv = rows[top][col].inv().expect("pivot is nonzero");
            let pivot_row: Vec<FieldElem> = rows[top].iter().map(|x| x * &inv).collect();
            exec.for_each_mut(&mut rows, |r, row| {
                if r == top || row[col].is_zero() {
                    return;
                }
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            });
            rows[top] = pivot_row;
            pivots.push(col);
            top += 1;
        }
        let m = FieldMatrix { rows: self.rows, cols: self.cols, data: rows.into_iter().flatten().collect() };
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref(Exec::default()).1.len()
    }

    pub fn nullspace(&self) -> Vec<Vec<FieldElem>> {
        self.nullspace_with(Exec::default())
    }

    /// Basis of `{x : Mx = 0}`, one vector per free column, with a 1 in that
    /// column and zeros in the other free columns.
    pub fn nullspace_with(&self, exec: Exec) -> Vec<Vec<FieldElem>> {
        let (r, pivots) = self.rref(exec);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![FieldElem::zero(); self.cols];
                v[f] = FieldElem::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -&r[(i, f)];
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!("{}x{} is not square", self.rows, self.cols)));
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                FieldElem::one()
            } else {
                FieldElem::zero()
            }
        });
        let (red, pivots) = aug.rref(Exec::default());
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_fn(n, n, |r, c| red[(r, c + n)].clone()))
    }

    /// Some solution of `Mx = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[FieldElem]) -> Result<Option<Vec<FieldElem>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has length {}, expected {}",
                b.len(),
                self.rows
            )));
        }
        let aug = Self::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                b[r].clone()
            }
        });
        let (red, pivots) = aug.rref(Exec::default());
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![FieldElem::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = red[(i, self.cols)].clone();
        }
        Ok(Some(x))
    }
}

impl Index<(usize, usize)> for FieldMatrix {
    type Output = FieldElem;
    fn index(&self, (r, c): (usize, usize)) -> &FieldElem {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for FieldMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut FieldElem {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FieldMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(s: &str) -> FieldElem {
        s.parse().unwrap()
    }

    #[test]
    fn identity_and_zero() {
        assert!(FieldMatrix::identity(3).nullspace().is_empty());
        assert_eq!(FieldMatrix::identity(4).rank(), 4);
        assert_eq!(FieldMatrix::zeros(2, 3).nullspace().len(), 3);
        assert_eq!(FieldMatrix::zeros(2, 3).rank(), 0);
    }

    #[test]
    fn degenerate_shapes() {
        assert_eq!(FieldMatrix::zeros(0, 4).nullspace().len(), 4);
        assert!(FieldMatrix::zeros(3, 0).nullspace().is_empty());
        assert_eq!(FieldMatrix::zeros(0, 0).rank(), 0);
    }

    #[test]
    fn row_with_sqrt5() {
        let m = FieldMatrix::from_rows(vec![vec![fe("1"), fe("1*r5")]], 2).unwrap();
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![fe("-1*r5"), fe("1")]);
        assert!(m.mul_vec(&ns[0]).unwrap().iter().all(FieldElem::is_zero));
    }

    #[test]
    fn complex_rank_one() {
        let m = FieldMatrix::from_rows(vec![vec![fe("1"), fe("i*1")], vec![fe("i*1"), fe("-1")]], 2).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn inverse_and_solve() {
        let m = FieldMatrix::from_rows(vec![vec![fe("1"), fe("1*r2")], vec![fe("i*1"), fe("3")]], 2).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), FieldMatrix::identity(2));
        let b = vec![fe("1"), fe("1*r3")];
        let x = m.solve(&b).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), b);
        let singular = FieldMatrix::from_rows(vec![vec![fe("1"), fe("2")], vec![fe("2"), fe("4")]], 2).unwrap();
        assert!(singular.inverse().is_err());
        assert!(singular.solve(&[fe("1"), fe("0")]).unwrap().is_none());
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let m = FieldMatrix::from_fn(5, 7, |r, c| FieldElem::from_int(((r * 7 + c * 3) % 5) as i64 - 2));
        assert_eq!(m.nullspace_with(Exec::Sequential), m.nullspace_with(Exec::Parallel));
    }
}
