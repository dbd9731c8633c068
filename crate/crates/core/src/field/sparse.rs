use std::collections::BTreeMap;

use super::FieldElem;
use crate::par::Exec;

/// A sparse row: `(column, value)` pairs sorted by column, no zeros.
pub type SparseRow = Vec<(usize, FieldElem)>;

/// Incremental row echelon form for large sparse systems.
///
/// Rows are reduced against the pivots seen so far and kept with a leading
/// coefficient of one. The row space (and hence the nullspace returned by
/// [`SparseEchelon::nullspace`]) does not depend on insertion order.
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

/// `row -= f * pivot`, merging two sorted sparse rows.
fn axpy(row: &SparseRow, f: &FieldElem, pivot: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut a, mut b) = (row.iter().peekable(), pivot.iter().peekable());
    loop {
        match (a.peek(), b.peek()) {
            (Some((ca, va)), Some((cb, vb))) => {
                if ca < cb {
                    out.push((*ca, va.clone()));
                    a.next();
                } else if cb < ca {
                    out.push((*cb, -(f * vb)));
                    b.next();
                } else {
                    let v = va - &(f * vb);
                    if !v.is_zero() {
                        out.push((*ca, v));
                    }
                    a.next();
                    b.next();
                }
            }
            (Some((ca, va)), None) => {
                out.push((*ca, va.clone()));
                a.next();
            }
            (None, Some((cb, vb))) => {
                out.push((*cb, -(f * vb)));
                b.next();
            }
            (None, None) => break,
        }
    }
    out
}

impl SparseEchelon {
    pub fn new(ncols: usize) -> Self {
        SparseEchelon { ncols, pivots: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the current pivots.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        row.retain(|(_, v)| !v.is_zero());
        let mut start = 0;
        loop {
            let hit = row
                .iter()
                .position(|(c, _)| *c >= start && self.pivots.contains_key(c));
            let Some(pos) = hit else { break };
            let (col, f) = row[pos].clone();
            row = axpy(&row, &f, &self.pivots[&col]);
            start = col + 1;
        }
        row
    }

    /// Adds a row; returns `true` when it increased the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        debug_assert!(row.iter().all(|(c, _)| *c < self.ncols));
        let row = self.reduce(row);
        self.insert_reduced(row)
    }

    fn insert_reduced(&mut self, row: SparseRow) -> bool {
        let Some((lead, v)) = row.first().cloned() else { return false };
        let inv = v.inv().expect("leading entry is nonzero");
        let row = row.into_iter().map(|(c, x)| (c, x * &inv)).collect();
        self.pivots.insert(lead, row);
        true
    }

    /// Adds many rows. Batches are first reduced concurrently against a
    /// snapshot of the pivots, then inserted one by one.
    pub fn extend(&mut self, rows: Vec<SparseRow>, exec: Exec) {
        const BATCH: usize = 64;
        let mut rows = rows.into_iter().peekable();
        while rows.peek().is_some() {
            let batch: Vec<SparseRow> = rows.by_ref().take(BATCH).collect();
            let reduced = exec.map(&batch, |r| self.reduce(r.clone()));
            for r in reduced {
                if !r.is_empty() {
                    self.insert(r);
                }
            }
            if self.rank() == self.ncols {
                return;
            }
        }
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Nullspace basis: one vector per free column `f`, with `x_f = 1` and
    /// zeros on the other free columns.
    pub fn nullspace(&self) -> Vec<Vec<FieldElem>> {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.pivots.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![FieldElem::zero(); self.ncols];
                x[f] = FieldElem::one();
                for (&p, row) in self.pivots.iter().rev() {
                    let s: FieldElem = row
                        .iter()
                        .skip(1)
                        .filter(|(c, _)| !x[*c].is_zero())
                        .map(|(c, v)| v * &x[*c])
                        .sum();
                    x[p] = -s;
                }
                x
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldMatrix;

    fn dense_to_sparse(m: &FieldMatrix) -> Vec<SparseRow> {
        (0..m.rows())
            .map(|r| {
                m.row(r)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(c, v)| (c, v.clone()))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn agrees_with_dense_nullspace() {
        let m = FieldMatrix::from_fn(6, 9, |r, c| {
            let v = ((r * 5 + c * 7) % 4) as i64 - 1;
            if (r + c) % 3 == 0 {
                FieldElem::from_int(v) * FieldElem::sqrt_of(5)
            } else {
                FieldElem::from_int(v)
            }
        });
        let mut e = SparseEchelon::new(9);
        e.extend(dense_to_sparse(&m), Exec::Sequential);
        assert_eq!(e.rank(), m.rank());
        assert_eq!(e.nullspace(), m.nullspace());
    }

    #[test]
    fn insertion_order_does_not_matter() {
        let m = FieldMatrix::from_fn(5, 6, |r, c| FieldElem::from_int(((r * r + 3 * c) % 5) as i64 - 2));
        let mut rows = dense_to_sparse(&m);
        let mut a = SparseEchelon::new(6);
        a.extend(rows.clone(), Exec::Parallel);
        rows.reverse();
        let mut b = SparseEchelon::new(6);
        b.extend(rows, Exec::Sequential);
        assert_eq!(a.nullspace(), b.nullspace());
    }

    #[test]
    fn dependent_rows_are_rejected() {
        let mut e = SparseEchelon::new(3);
        assert!(e.insert(vec![(0, FieldElem::one()), (2, FieldElem::i())]));
        assert!(!e.insert(vec![(0, FieldElem::i()), (2, FieldElem::from_int(-1))]));
        assert_eq!(e.rank(), 1);
        assert_eq!(e.nullspace().len(), 2);
    }
}
