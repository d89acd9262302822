//! Exact linear algebra over `Z`, `Z/m` and `Q`: normal forms, kernels and
//! finitely generated module presentations.

mod howell;
mod matrix;
mod presentation;
mod smith;
pub mod sparse;

use num_traits::Zero;

pub use howell::{howell_form, row_canonical_form};
pub use matrix::ExactMatrix;
pub use presentation::{annihilator_exponent, ModulePresentation, PresentationView};
pub use smith::{elementary_divisors, smith_form, smith_normal_form, SmithForm};

pub(crate) use presentation::{check_same_ring, reduce_mod};

use crate::error::{Error, Result};
use crate::ring::{RingSpec, Scalar};

/// Columns generating `{x : m x = 0}`, in canonical (Hermite, reduced
/// echelon, or Howell) order. Over `Z` the column lattice is saturated.
pub fn kernel_basis(m: &ExactMatrix) -> ExactMatrix {
    kernel_from_smith(m.ring(), m.cols(), &smith_form(m))
}

fn kernel_from_smith(ring: RingSpec, cols: usize, s: &SmithForm) -> ExactMatrix {
    let rank = s.rank();
    let modulus = ring.modulus();
    let mut gens: Vec<Vec<Scalar>> = Vec::new();
    for j in 0..cols {
        let col = s.v.column(j);
        if j < rank {
            if let Some(m) = &modulus {
                let d = &s.diagonal[j];
                if !ring.is_unit(d) {
                    let f = ring.from_bigint(m / d.to_integer());
                    gens.push(col.iter().map(|x| ring.mul(x, &f)).collect());
                }
            }
        } else {
            gens.push(col);
        }
    }
    let rows = howell::canonical_rows(ring, gens, cols);
    ExactMatrix::from_columns(ring, cols, &rows)
}

/// Solve `z x = b` (one particular solution per column of `b`), or `None`
/// when some column of `b` is outside the column module of `z`.
pub fn solve(z: &ExactMatrix, b: &ExactMatrix) -> Option<ExactMatrix> {
    let s = smith_form(z);
    solve_with(&s, z, b)
}

fn solve_with(s: &SmithForm, z: &ExactMatrix, b: &ExactMatrix) -> Option<ExactMatrix> {
    let ring = z.ring();
    let mut cols = Vec::with_capacity(b.cols());
    for j in 0..b.cols() {
        cols.push(solve_vec(s, z, &b.column(j))?);
    }
    let _ = ring;
    Some(ExactMatrix::from_columns(z.ring(), z.cols(), &cols))
}

pub(crate) fn solve_vec(s: &SmithForm, z: &ExactMatrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    let ring = z.ring();
    let c = s.u.mul_vec(b);
    let mut y = vec![ring.zero(); z.cols()];
    for (i, ci) in c.iter().enumerate() {
        if i < s.rank() {
            y[i] = ring.div_exact(ci, &s.diagonal[i])?;
        } else if !ci.is_zero() {
            return None;
        }
    }
    Some(s.v.mul_vec(&y))
}

/// The quotient of the column module of `z` by the column module of `b`,
/// with generators and a coordinate map.
#[derive(Clone, Debug)]
pub struct Subquotient {
    presentation: ModulePresentation,
    /// Ambient vectors representing the cyclic generators, one per annihilator.
    generators: Vec<Vec<Scalar>>,
    z: ExactMatrix,
    z_smith: SmithForm,
    relation_u: ExactMatrix,
    /// Indices into the relation Smith basis of the nontrivial factors.
    factor_index: Vec<usize>,
}

impl Subquotient {
    pub fn new(z: &ExactMatrix, b: &ExactMatrix) -> Result<Self> {
        check_same_ring(z.ring(), b.ring())?;
        if z.rows() != b.rows() {
            return Err(Error::Dimension(format!(
                "ambient ranks {} and {} differ",
                z.rows(),
                b.rows()
            )));
        }
        let ring = z.ring();
        let z_smith = smith_form(z);
        let x = solve_with(&z_smith, z, b).ok_or(Error::NotContained)?;
        let relations = x.hcat(&kernel_from_smith(ring, z.cols(), &z_smith))?;
        let rs = smith_form(&relations);
        let k = z.cols();
        let mut annihilators = Vec::new();
        let mut factor_index = Vec::new();
        for j in 0..k {
            let d = if j < rs.rank() {
                rs.diagonal[j].clone()
            } else {
                ring.zero()
            };
            if !ring.is_unit(&d) {
                annihilators.push(d);
                factor_index.push(j);
            }
        }
        let generators = factor_index
            .iter()
            .map(|&j| z.mul_vec(&rs.u_inv.column(j)))
            .collect();
        Ok(Subquotient {
            presentation: ModulePresentation::from_chain(ring, annihilators),
            generators,
            z: z.clone(),
            z_smith,
            relation_u: rs.u,
            factor_index,
        })
    }

    pub fn presentation(&self) -> &ModulePresentation {
        &self.presentation
    }

    pub fn generators(&self) -> &[Vec<Scalar>] {
        &self.generators
    }

    /// Coordinates of `v` (an element of the column module of `z`) with
    /// respect to the cyclic generators, each reduced modulo its annihilator.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        let ring = self.z.ring();
        let y = solve_vec(&self.z_smith, &self.z, v).ok_or(Error::NotContained)?;
        let c = self.relation_u.mul_vec(&y);
        Ok(self
            .factor_index
            .iter()
            .zip(self.presentation.annihilators())
            .map(|(&j, d)| reduce_mod(ring, &c[j], d))
            .collect())
    }
}

/// Presentation of `col(z) / col(b)`.
pub fn subquotient_presentation(z: &ExactMatrix, b: &ExactMatrix) -> Result<ModulePresentation> {
    Ok(Subquotient::new(z, b)?.presentation)
}

/// Whether the column module of `s` is a direct summand of the ambient free module.
pub fn is_saturated_summand(s: &ExactMatrix) -> bool {
    let ring = s.ring();
    let diag = elementary_divisors(s);
    match ring {
        RingSpec::Rationals => true,
        RingSpec::Integers => diag.iter().all(|d| ring.is_unit(d)),
        RingSpec::IntegersMod(m) => {
            let m = num_bigint::BigInt::from(m.get());
            diag.iter().all(|d| {
                let d = d.to_integer();
                num_integer::Integer::gcd(&d, &(&m / &d)) == num_bigint::BigInt::from(1)
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    fn zm(m: u64) -> RingSpec {
        RingSpec::integers_mod(m).unwrap()
    }

    #[test]
    fn kernel_examples() {
        let z = RingSpec::Integers;
        let k = kernel_basis(&ExactMatrix::from_ints(z, &[vec![2, -2]]));
        assert_eq!(k, ExactMatrix::from_ints(z, &[vec![1], vec![1]]));
        let k = kernel_basis(&ExactMatrix::identity(z, 3));
        assert_eq!(k.cols(), 0);
        let k = kernel_basis(&ExactMatrix::from_ints(zm(4), &[vec![2]]));
        assert_eq!(k, ExactMatrix::from_ints(zm(4), &[vec![2]]));
    }

    #[test]
    fn kernel_is_saturated_over_z() {
        let z = RingSpec::Integers;
        let m = ExactMatrix::from_ints(z, &[vec![2, 4, 6], vec![4, 8, 12]]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).unwrap().is_zero());
        assert!(is_saturated_summand(&k));
    }

    #[test]
    fn subquotient_examples() {
        let z = RingSpec::Integers;
        let p = subquotient_presentation(
            &ExactMatrix::identity(z, 2),
            &ExactMatrix::from_ints(z, &[vec![2], vec![0]]),
        )
        .unwrap();
        assert_eq!(p.annihilators(), &[int(2), int(0)]);

        let zz = ExactMatrix::from_ints(z, &[vec![1, 0], vec![1, 3]]);
        assert!(subquotient_presentation(&zz, &zz).unwrap().is_zero());

        let q = RingSpec::Rationals;
        let p =
            subquotient_presentation(&ExactMatrix::identity(q, 1), &ExactMatrix::zeros(q, 1, 0))
                .unwrap();
        assert_eq!(p.annihilators(), &[int(0)]);
    }

    #[test]
    fn subquotient_rejects_outside_span() {
        let z = RingSpec::Integers;
        let zz = ExactMatrix::from_ints(z, &[vec![2], vec![0]]);
        let b = ExactMatrix::from_ints(z, &[vec![1], vec![0]]);
        assert_eq!(subquotient_presentation(&zz, &b), Err(Error::NotContained));
    }

    #[test]
    fn subquotient_coordinates() {
        let z = RingSpec::Integers;
        let sq = Subquotient::new(
            &ExactMatrix::identity(z, 2),
            &ExactMatrix::from_ints(z, &[vec![2], vec![0]]),
        )
        .unwrap();
        // (3, 5) = 3 e1 + 5 e2, class (1 mod 2, 5)
        let c = sq.coordinates(&[int(3), int(5)]).unwrap();
        let recon: Vec<Scalar> = (0..2)
            .map(|i| {
                sq.generators()
                    .iter()
                    .zip(&c)
                    .fold(int(0), |acc, (g, ci)| acc + &g[i] * ci)
            })
            .collect();
        // reconstruction agrees modulo the relation (2, 0)
        assert!(((&recon[0] - int(3)).to_integer() % num_bigint::BigInt::from(2)).is_zero());
        assert_eq!(recon[1], int(5));
    }

    #[test]
    fn subquotient_over_mod_ring_with_dependent_generators() {
        let r = zm(4);
        // column module of [[2, 2]] is 2Z/4 = Z/2; quotient by nothing
        let z = ExactMatrix::from_ints(r, &[vec![2, 2]]);
        let p = subquotient_presentation(&z, &ExactMatrix::zeros(r, 1, 0)).unwrap();
        assert_eq!(p.annihilators(), &[int(2)]);
    }

    #[test]
    fn summand_examples() {
        let z = RingSpec::Integers;
        assert!(is_saturated_summand(&ExactMatrix::from_ints(
            z,
            &[vec![1], vec![1]]
        )));
        assert!(!is_saturated_summand(&ExactMatrix::from_ints(
            z,
            &[vec![2], vec![0]]
        )));
        assert!(is_saturated_summand(&ExactMatrix::from_ints(
            RingSpec::Rationals,
            &[vec![2], vec![0]]
        )));
        assert!(is_saturated_summand(&ExactMatrix::from_ints(
            zm(6),
            &[vec![2]]
        )));
        assert!(!is_saturated_summand(&ExactMatrix::from_ints(
            zm(4),
            &[vec![2]]
        )));
    }
}
