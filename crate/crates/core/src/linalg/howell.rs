//! Canonical row forms: Hermite over `Z`, reduced echelon over `Q`, and the
//! Howell form over `Z/m`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::matrix::ExactMatrix;
use crate::error::{Error, Result};
use crate::ring::{big, RingSpec, Scalar};

/// Howell form of a matrix over `Z/m`: the canonical generating set of its
/// row module.
pub fn howell_form(m: &ExactMatrix) -> Result<ExactMatrix> {
    if !matches!(m.ring(), RingSpec::IntegersMod(_)) {
        return Err(Error::WrongRing {
            expected: "Z/m",
            found: m.ring(),
        });
    }
    Ok(row_canonical_form(m))
}

/// Canonical generators of the row module, zero rows dropped.
pub fn row_canonical_form(m: &ExactMatrix) -> ExactMatrix {
    let rows = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    let out = canonical_rows(m.ring(), rows, m.cols());
    let n = out.len();
    ExactMatrix::from_entries(m.ring(), n, m.cols(), out.into_iter().flatten().collect())
        .expect("canonical")
}

pub(crate) fn canonical_rows(
    ring: RingSpec,
    mut rows: Vec<Vec<Scalar>>,
    cols: usize,
) -> Vec<Vec<Scalar>> {
    let modulus: Option<BigInt> = ring.modulus();
    let mut k = 0;
    for j in 0..cols {
        let Some(first) = (k..rows.len()).find(|&r| !rows[r][j].is_zero()) else {
            continue;
        };
        rows.swap(k, first);
        for r in k + 1..rows.len() {
            if rows[r][j].is_zero() {
                continue;
            }
            let [s, t, x, y] = ring.gcd_matrix(&rows[k][j], &rows[r][j]);
            let (top, rest) = rows.split_at_mut(r);
            let (pk, pr) = (&mut top[k], &mut rest[0]);
            for c in j..cols {
                let a = pk[c].clone();
                let b = pr[c].clone();
                pk[c] = ring.add(&ring.mul(&s, &a), &ring.mul(&t, &b));
                pr[c] = ring.add(&ring.mul(&x, &a), &ring.mul(&y, &b));
            }
            debug_assert!(pr[j].is_zero());
        }
        let u = ring.normalizing_unit(&rows[k][j]);
        for c in j..cols {
            rows[k][c] = ring.mul(&rows[k][c], &u);
        }
        let pivot = rows[k][j].clone();
        for r in 0..k {
            if rows[r][j].is_zero() {
                continue;
            }
            let (q, _) = ring.div_rem(&rows[r][j], &pivot);
            if q.is_zero() {
                continue;
            }
            let (top, rest) = rows.split_at_mut(k);
            for c in j..cols {
                top[r][c] = ring.sub(&top[r][c], &ring.mul(&q, &rest[0][c]));
            }
        }
        if let Some(m) = &modulus {
            let s = big(m / pivot.numer());
            let ann: Vec<Scalar> = rows[k].iter().map(|v| ring.mul(&s, v)).collect();
            if ann.iter().any(|v| !v.is_zero()) {
                rows.push(ann);
            }
        }
        k += 1;
    }
    rows.truncate(k);
    rows
}
