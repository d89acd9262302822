//! Column-sparse matrices and unit-pivot elimination.
//!
//! Cochain differentials are large and very sparse. Ranks and elementary
//! divisors are computed by eliminating unit pivots directly on the sparse
//! rows (a unimodular reduction that preserves elementary divisors), then
//! finishing the small leftover block with the dense Smith form.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use num_traits::Zero;

use super::matrix::ExactMatrix;
use super::smith::elementary_divisors_of_rows;
use crate::error::{Error, Result};
use crate::ring::{RingSpec, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix {
    ring: RingSpec,
    rows: usize,
    cols: usize,
    /// Per column: `(row, value)` sorted by row, no zero values.
    columns: Vec<Vec<(usize, Scalar)>>,
}

impl SparseMatrix {
    pub fn new(ring: RingSpec, rows: usize, columns: Vec<Vec<(usize, Scalar)>>) -> Self {
        let cols = columns.len();
        let columns = columns
            .into_iter()
            .map(|mut c| {
                c.sort_by_key(|(r, _)| *r);
                debug_assert!(c.windows(2).all(|w| w[0].0 < w[1].0));
                debug_assert!(c
                    .iter()
                    .all(|(r, v)| *r < rows && !v.is_zero() && ring.is_canonical(v)));
                c
            })
            .collect();
        SparseMatrix {
            ring,
            rows,
            cols,
            columns,
        }
    }

    pub fn zeros(ring: RingSpec, rows: usize, cols: usize) -> Self {
        SparseMatrix {
            ring,
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn from_dense(m: &ExactMatrix) -> Self {
        let columns = (0..m.cols())
            .map(|j| {
                (0..m.rows())
                    .filter(|&i| !m.get(i, j).is_zero())
                    .map(|i| (i, m.get(i, j).clone()))
                    .collect()
            })
            .collect();
        SparseMatrix {
            ring: m.ring(),
            rows: m.rows(),
            cols: m.cols(),
            columns,
        }
    }

    pub fn to_dense(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.ring, self.rows, self.cols);
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                m.set(*i, j, v.clone());
            }
        }
        m
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &[(usize, Scalar)] {
        &self.columns[j]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![Scalar::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, a) in &self.columns[j] {
                out[*i] = self.ring.mul_add(&out[*i], a, x);
            }
        }
        out
    }

    /// `self * other`
    pub fn compose(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let ring = self.ring;
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let mut acc: std::collections::BTreeMap<usize, Scalar> = Default::default();
                for (k, b) in col {
                    for (i, a) in &self.columns[*k] {
                        let e = acc.entry(*i).or_insert_with(Scalar::zero);
                        *e = ring.mul_add(e, a, b);
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Ok(SparseMatrix {
            ring,
            rows: self.rows,
            cols: other.cols,
            columns,
        })
    }

    /// Nonzero elementary divisors in chain order.
    pub fn elementary_divisors(&self) -> Vec<Scalar> {
        eliminate(self)
    }

    pub fn rank(&self) -> usize {
        self.elementary_divisors().len()
    }
}

type Row = Vec<(usize, Scalar)>;

/// `dst - f * src`, both sorted by column.
fn axpy(ring: RingSpec, dst: &Row, f: &Scalar, src: &Row) -> Row {
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < dst.len() || j < src.len() {
        let ci = dst.get(i).map_or(usize::MAX, |e| e.0);
        let cj = src.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push(dst[i].clone());
            i += 1;
        } else if cj < ci {
            out.push((cj, ring.neg(&ring.mul(f, &src[j].1))));
            j += 1;
        } else {
            let v = ring.sub(&dst[i].1, &ring.mul(f, &src[j].1));
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn eliminate(m: &SparseMatrix) -> Vec<Scalar> {
    let ring = m.ring;
    let field = ring.is_field();
    let is_unit = |v: &Scalar| if field { !v.is_zero() } else { ring.is_unit(v) };

    let mut rows: Vec<Row> = vec![Vec::new(); m.rows];
    for (j, col) in m.columns.iter().enumerate() {
        for (i, v) in col {
            rows[*i].push((j, v.clone()));
        }
    }
    let mut col_rows: Vec<BTreeSet<usize>> = m
        .columns
        .iter()
        .map(|c| c.iter().map(|(i, _)| *i).collect())
        .collect();
    let mut col_alive = vec![true; m.cols];
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = (0..m.cols)
        .filter(|&j| !col_rows[j].is_empty())
        .map(|j| Reverse((col_rows[j].len(), j)))
        .collect();
    let mut deferred: Vec<usize> = Vec::new();
    let mut units = 0usize;

    loop {
        let Some(Reverse((count, c))) = heap.pop() else {
            // columns without unit entries may have gained some through fill-in
            let retry: Vec<usize> = deferred
                .drain(..)
                .filter(|&c| {
                    col_alive[c] && col_rows[c].iter().any(|&r| is_unit(entry(&rows[r], c)))
                })
                .collect();
            if retry.is_empty() {
                break;
            }
            heap.extend(retry.into_iter().map(|c| Reverse((col_rows[c].len(), c))));
            continue;
        };
        if !col_alive[c] || count != col_rows[c].len() || count == 0 {
            continue;
        }
        let pivot_row = col_rows[c]
            .iter()
            .copied()
            .filter(|&r| is_unit(entry(&rows[r], c)))
            .min_by_key(|&r| (rows[r].len(), r));
        let Some(p) = pivot_row else {
            deferred.push(c);
            continue;
        };
        let prow = std::mem::take(&mut rows[p]);
        let inv = ring.inverse(entry(&prow, c)).expect("unit pivot");
        for (col, _) in &prow {
            col_rows[*col].remove(&p);
        }
        let targets: Vec<usize> = col_rows[c].iter().copied().collect();
        let mut touched: BTreeSet<usize> = BTreeSet::new();
        for r in targets {
            let f = ring.mul(entry(&rows[r], c), &inv);
            let new_row = axpy(ring, &rows[r], &f, &prow);
            for (col, _) in &rows[r] {
                col_rows[*col].remove(&r);
            }
            for (col, _) in &new_row {
                col_rows[*col].insert(r);
            }
            rows[r] = new_row;
        }
        for (col, _) in &prow {
            touched.insert(*col);
        }
        col_alive[c] = false;
        units += 1;
        for col in touched {
            if col_alive[col] && !col_rows[col].is_empty() {
                heap.push(Reverse((col_rows[col].len(), col)));
            }
        }
    }

    // leftover block
    let live_cols: Vec<usize> = (0..m.cols)
        .filter(|&c| col_alive[c] && !col_rows[c].is_empty())
        .collect();
    let mut index = vec![usize::MAX; m.cols];
    for (k, &c) in live_cols.iter().enumerate() {
        index[c] = k;
    }
    let leftover: Vec<Vec<Scalar>> = rows
        .iter()
        .filter(|r| !r.is_empty())
        .map(|r| {
            let mut dense = vec![Scalar::zero(); live_cols.len()];
            for (c, v) in r {
                debug_assert!(col_alive[*c]);
                dense[index[*c]] = v.clone();
            }
            dense
        })
        .collect();
    let mut out = vec![ring.one(); units];
    out.extend(elementary_divisors_of_rows(ring, leftover, live_cols.len()));
    out
}

fn entry(row: &Row, c: usize) -> &Scalar {
    let k = row
        .binary_search_by_key(&c, |e| e.0)
        .expect("entry present");
    &row[k].1
}
