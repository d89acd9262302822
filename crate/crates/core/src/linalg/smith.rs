//! Smith normal form by deterministic unimodular row and column operations.
//!
//! The same elimination runs over every supported ring. Pivots are chosen by
//! smallest [`RingSpec::size`], ties broken by lowest row, then lowest column.

use num_traits::Zero;

use super::matrix::ExactMatrix;
use crate::error::{Error, Result};
use crate::ring::{RingSpec, Scalar};

/// `u * m * v = d` with `u`, `v` invertible and the diagonal of `d` a
/// divisibility chain of canonical associates.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: ExactMatrix,
    pub u_inv: ExactMatrix,
    pub d: ExactMatrix,
    pub v: ExactMatrix,
    /// Nonzero diagonal entries `d_1 | d_2 | ... | d_rank`.
    pub diagonal: Vec<Scalar>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

/// Smith normal form of an integer matrix.
pub fn smith_normal_form(m: &ExactMatrix) -> Result<SmithForm> {
    if m.ring() != RingSpec::Integers {
        return Err(Error::WrongRing {
            expected: "Z",
            found: m.ring(),
        });
    }
    Ok(smith_form(m))
}

/// Smith form over any supported ring, with transforms.
pub fn smith_form(m: &ExactMatrix) -> SmithForm {
    let mut w = Work::new(m, true);
    w.run();
    w.finish()
}

/// Nonzero elementary divisors only, without transforms.
pub fn elementary_divisors(m: &ExactMatrix) -> Vec<Scalar> {
    let mut w = Work::new(m, false);
    w.run();
    w.diagonal()
}

pub(crate) fn elementary_divisors_of_rows(
    ring: RingSpec,
    rows: Vec<Vec<Scalar>>,
    cols: usize,
) -> Vec<Scalar> {
    let mut w = Work {
        ring,
        a: rows,
        rows: 0,
        cols,
        u: None,
        u_inv: None,
        v: None,
        rank: 0,
    };
    w.rows = w.a.len();
    w.run();
    w.diagonal()
}

struct Work {
    ring: RingSpec,
    a: Vec<Vec<Scalar>>,
    rows: usize,
    cols: usize,
    u: Option<Vec<Vec<Scalar>>>,
    u_inv: Option<Vec<Vec<Scalar>>>,
    v: Option<Vec<Vec<Scalar>>>,
    rank: usize,
}

fn identity(ring: RingSpec, n: usize) -> Vec<Vec<Scalar>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { ring.one() } else { ring.zero() })
                .collect()
        })
        .collect()
}

impl Work {
    fn new(m: &ExactMatrix, transforms: bool) -> Self {
        let ring = m.ring();
        let (rows, cols) = (m.rows(), m.cols());
        Work {
            ring,
            a: (0..rows).map(|i| m.row(i).to_vec()).collect(),
            rows,
            cols,
            u: transforms.then(|| identity(ring, rows)),
            u_inv: transforms.then(|| identity(ring, rows)),
            v: transforms.then(|| identity(ring, cols)),
            rank: 0,
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if let Some(u) = &mut self.u {
            u.swap(i, j);
        }
        if let Some(ui) = &mut self.u_inv {
            for row in ui.iter_mut() {
                row.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in self.a.iter_mut() {
            row.swap(i, j);
        }
        if let Some(v) = &mut self.v {
            for row in v.iter_mut() {
                row.swap(i, j);
            }
        }
    }

    /// row_i += c * row_j
    fn add_row(&mut self, i: usize, j: usize, c: &Scalar, from_col: usize) {
        let ring = self.ring;
        let (src, dst) = two_rows(&mut self.a, j, i);
        for k in from_col..self.cols {
            if !src[k].is_zero() {
                dst[k] = ring.mul_add(&dst[k], c, &src[k]);
            }
        }
        if let Some(u) = &mut self.u {
            let (src, dst) = two_rows(u, j, i);
            for k in 0..src.len() {
                if !src[k].is_zero() {
                    dst[k] = ring.mul_add(&dst[k], c, &src[k]);
                }
            }
        }
        if let Some(ui) = &mut self.u_inv {
            // column_j -= c * column_i
            let nc = ring.neg(c);
            for row in ui.iter_mut() {
                if !row[i].is_zero() {
                    row[j] = ring.mul_add(&row[j], &nc, &row[i]);
                }
            }
        }
    }

    /// col_i += c * col_j
    fn add_col(&mut self, i: usize, j: usize, c: &Scalar, from_row: usize) {
        let ring = self.ring;
        for row in self.a[from_row..].iter_mut() {
            if !row[j].is_zero() {
                row[i] = ring.mul_add(&row[i], c, &row[j]);
            }
        }
        if let Some(v) = &mut self.v {
            for row in v.iter_mut() {
                if !row[j].is_zero() {
                    row[i] = ring.mul_add(&row[i], c, &row[j]);
                }
            }
        }
    }

    fn scale_row(&mut self, i: usize, c: &Scalar) {
        let ring = self.ring;
        for x in self.a[i].iter_mut() {
            *x = ring.mul(x, c);
        }
        if let Some(u) = &mut self.u {
            for x in u[i].iter_mut() {
                *x = ring.mul(x, c);
            }
        }
        if let Some(ui) = &mut self.u_inv {
            let inv = ring.inverse(c).expect("scaling by a unit");
            for row in ui.iter_mut() {
                row[i] = ring.mul(&row[i], &inv);
            }
        }
    }

    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(num_bigint::BigInt, usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                let s = self.ring.size(x);
                if best.as_ref().is_none_or(|(b, _, _)| &s < b) {
                    best = Some((s, i, j));
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn run(&mut self) {
        let ring = self.ring;
        let n = self.rows.min(self.cols);
        let mut t = 0;
        while t < n {
            let Some((pi, pj)) = self.find_pivot(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..self.rows {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let (q, r) = ring.div_rem(&self.a[i][t], &self.a[t][t]);
                    self.add_row(i, t, &ring.neg(&q), t);
                    if !r.is_zero() {
                        clean = false;
                    }
                }
                for j in t + 1..self.cols {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let (q, r) = ring.div_rem(&self.a[t][j], &self.a[t][t]);
                    self.add_col(j, t, &ring.neg(&q), t);
                    if !r.is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    let (pi, pj) = self.find_pivot(t).expect("nonzero remainder exists");
                    self.swap_rows(t, pi);
                    self.swap_cols(t, pj);
                    continue;
                }
                let bad_row = (t + 1..self.rows).find(|&i| {
                    (t + 1..self.cols).any(|j| !ring.divides(&self.a[t][t], &self.a[i][j]))
                });
                match bad_row {
                    Some(i) => {
                        self.add_row(t, i, &ring.one(), t);
                        let (pi, pj) = self.find_pivot(t).expect("pivot");
                        self.swap_rows(t, pi);
                        self.swap_cols(t, pj);
                    }
                    None => break,
                }
            }
            let u = ring.normalizing_unit(&self.a[t][t]);
            if u != ring.one() {
                self.scale_row(t, &u);
            }
            t += 1;
        }
        self.rank = t;
    }

    fn diagonal(&self) -> Vec<Scalar> {
        (0..self.rank).map(|t| self.a[t][t].clone()).collect()
    }

    fn finish(self) -> SmithForm {
        let ring = self.ring;
        let to_matrix = |rows: Vec<Vec<Scalar>>, r: usize, c: usize| {
            ExactMatrix::from_entries(ring, r, c, rows.into_iter().flatten().collect())
                .expect("canonical")
        };
        let diagonal = self.diagonal();
        let d = to_matrix(self.a, self.rows, self.cols);
        SmithForm {
            u: to_matrix(self.u.expect("transforms"), self.rows, self.rows),
            u_inv: to_matrix(self.u_inv.expect("transforms"), self.rows, self.rows),
            v: to_matrix(self.v.expect("transforms"), self.cols, self.cols),
            d,
            diagonal,
        }
    }
}

/// Borrow row `src` immutably and row `dst` mutably.
fn two_rows(a: &mut [Vec<Scalar>], src: usize, dst: usize) -> (&Vec<Scalar>, &mut Vec<Scalar>) {
    assert_ne!(src, dst);
    if src < dst {
        let (lo, hi) = a.split_at_mut(dst);
        (&lo[src], &mut hi[0])
    } else {
        let (lo, hi) = a.split_at_mut(src);
        (&hi[0], &mut lo[dst])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    fn check(m: &ExactMatrix) -> SmithForm {
        let s = smith_form(m);
        assert_eq!(s.u.mul(m).unwrap().mul(&s.v).unwrap(), s.d);
        assert_eq!(
            s.u.mul(&s.u_inv).unwrap(),
            ExactMatrix::identity(m.ring(), m.rows())
        );
        for w in s.diagonal.windows(2) {
            assert!(m.ring().divides(&w[0], &w[1]));
        }
        s
    }

    #[test]
    fn diag_two_three() {
        let m = ExactMatrix::from_ints(RingSpec::Integers, &[vec![2, 0], vec![0, 3]]);
        let s = check(&m);
        assert_eq!(s.diagonal, vec![int(1), int(6)]);
        assert_eq!(
            s.d,
            ExactMatrix::from_ints(RingSpec::Integers, &[vec![1, 0], vec![0, 6]])
        );
    }

    #[test]
    fn zero_matrix_has_identity_transforms() {
        let m = ExactMatrix::zeros(RingSpec::Integers, 2, 3);
        let s = smith_normal_form(&m).unwrap();
        assert!(s.d.is_zero());
        assert_eq!(s.u, ExactMatrix::identity(RingSpec::Integers, 2));
        assert_eq!(s.v, ExactMatrix::identity(RingSpec::Integers, 3));
    }

    #[test]
    fn identity_is_fixed() {
        let m = ExactMatrix::identity(RingSpec::Integers, 3);
        let s = smith_normal_form(&m).unwrap();
        assert_eq!(s.d, m);
    }

    #[test]
    fn wrong_ring_rejected() {
        let m = ExactMatrix::identity(RingSpec::Rationals, 2);
        assert!(matches!(
            smith_normal_form(&m),
            Err(Error::WrongRing { .. })
        ));
    }

    #[test]
    fn mod_m_diagonal_divides_modulus() {
        let r = RingSpec::integers_mod(12).unwrap();
        let m = ExactMatrix::from_ints(r, &[vec![4, 6], vec![3, 9], vec![8, 0]]);
        let s = check(&m);
        assert_eq!(s.diagonal, vec![int(1), int(6)]);
    }

    #[test]
    fn deterministic() {
        let m = ExactMatrix::from_ints(
            RingSpec::Integers,
            &[vec![6, 4, 2], vec![3, -9, 12], vec![1, 1, 1]],
        );
        let a = check(&m);
        let b = check(&m);
        assert_eq!(a.u, b.u);
        assert_eq!(a.v, b.v);
    }
}
