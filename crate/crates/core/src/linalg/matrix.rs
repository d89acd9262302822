use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ring::{scalar_string, RingSpec, Scalar};

/// Dense row-major matrix over one of the supported base rings.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix {
    ring: RingSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zeros(ring: RingSpec, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            ring,
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(ring: RingSpec, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = ring.one();
        }
        m
    }

    /// Build from rows of integers, reducing into the ring.
    pub fn from_ints(ring: RingSpec, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(ring, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m.entries[i * c + j] = ring.from_int(*v);
            }
        }
        m
    }

    /// Build from scalars; every entry must already be canonical.
    pub fn from_entries(
        ring: RingSpec,
        rows: usize,
        cols: usize,
        entries: Vec<Scalar>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| !ring.is_canonical(e)) {
            return Err(Error::Parse(format!(
                "{bad} is not a canonical element of {ring}"
            )));
        }
        Ok(ExactMatrix {
            ring,
            rows,
            cols,
            entries,
        })
    }

    /// Matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(ring: RingSpec, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(ring, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.entries[i * m.cols + j] = v.clone();
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

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert!(self.ring.is_canonical(&v));
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring, other.ring));
        }
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let ring = self.ring;
        let mut out = Self::zeros(ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.entries[idx] = ring.mul_add(&out.entries[idx], a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Scalar::zero(), |acc, (a, b)| self.ring.mul_add(&acc, a, b))
            })
            .collect()
    }

    pub fn scale(&self, c: &Scalar) -> ExactMatrix {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = self.ring.mul(e, c);
        }
        out
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension("shape mismatch in subtraction".into()));
        }
        let mut out = self.clone();
        for (e, o) in out.entries.iter_mut().zip(&other.entries) {
            *e = self.ring.sub(e, o);
        }
        Ok(out)
    }

    /// Columns `self | other` side by side.
    pub fn hcat(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.rows != other.rows {
            return Err(Error::Dimension("row count mismatch in hcat".into()));
        }
        let mut cols = self.columns();
        cols.extend(other.columns());
        Ok(Self::from_columns(self.ring, self.rows, &cols))
    }

    /// Map entries through the canonical ring map into `target`.
    pub fn base_change(&self, target: RingSpec) -> Result<ExactMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|e| target.coerce(e))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExactMatrix {
            ring: target,
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Determinant by fraction-free expansion over the ring (small matrices only).
    pub fn determinant(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return self.ring.one();
        }
        // Gaussian elimination over Q, then coerce back
        let mut a: Vec<Vec<Scalar>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut det = Scalar::from_integer(1.into());
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            let pivot = a[c][c].clone();
            det *= &pivot;
            for r in c + 1..n {
                if a[r][c].is_zero() {
                    continue;
                }
                let f = &a[r][c] / &pivot;
                for k in c..n {
                    let v = &a[c][k] * &f;
                    a[r][k] -= v;
                }
            }
        }
        match self.ring {
            RingSpec::Rationals => det,
            _ => self.ring.from_bigint(det.to_integer()),
        }
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(scalar_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
