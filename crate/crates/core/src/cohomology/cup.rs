use std::collections::HashMap;

use num_traits::Zero;

use super::{from_digits, to_digits};
use crate::comodules::GradedComoduleAlgebra;
use crate::error::{Error, Result};
use crate::ring::Scalar;

/// A cochain of cohomological degree `degree` with coefficients in the
/// internal degree `internal` piece of a graded comodule algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraCochain {
    pub degree: usize,
    pub internal: usize,
    pub coeffs: Vec<Scalar>,
}

impl AlgebraCochain {
    pub fn new(
        a: &GradedComoduleAlgebra,
        degree: usize,
        internal: usize,
        coeffs: Vec<Scalar>,
    ) -> Result<Self> {
        let expected = a.piece(internal)?.rank() * a.parent().rank().pow(degree as u32);
        if coeffs.len() != expected {
            return Err(Error::Dimension(format!(
                "cochain of length {} where {expected} is needed",
                coeffs.len()
            )));
        }
        Ok(AlgebraCochain {
            degree,
            internal,
            coeffs,
        })
    }

    /// The unit of `A_0` as a 0-cochain.
    pub fn unit(a: &GradedComoduleAlgebra) -> Self {
        AlgebraCochain {
            degree: 0,
            internal: 0,
            coeffs: a.unit().to_vec(),
        }
    }
}

/// Cup product of cochains with coefficients in a graded comodule algebra.
///
/// For `u = a ⊗ f_1 ⊗ … ⊗ f_p` and `v = b ⊗ g_1 ⊗ … ⊗ g_q`, with
/// `ρ(b) = Σ b_0 ⊗ b_1` and `Δ^{(p−1)}(b_1) = Σ h_1 ⊗ … ⊗ h_p`,
/// `u ∪ v = Σ (a b_0) ⊗ f_1 h_1 ⊗ … ⊗ f_p h_p ⊗ g_1 ⊗ … ⊗ g_q`.
/// For `p = 0` this reduces to `(a b) ⊗ g_1 ⊗ … ⊗ g_q`.
pub fn cup(
    a: &GradedComoduleAlgebra,
    u: &AlgebraCochain,
    v: &AlgebraCochain,
) -> Result<AlgebraCochain> {
    let h = a.parent();
    let ring = h.ring();
    let r = h.rank();
    let (p, q) = (u.degree, v.degree);
    let (j, k) = (u.internal, v.internal);
    let target = a.piece(j + k)?;
    let pu = a.piece(j)?;
    let pv = a.piece(k)?;
    let rp = r.pow(p as u32);
    let rq = r.pow(q as u32);
    if u.coeffs.len() != pu.rank() * rp || v.coeffs.len() != pv.rank() * rq {
        return Err(Error::Dimension(
            "cochain lengths do not match their degrees".into(),
        ));
    }
    let mut out = vec![ring.zero(); target.rank() * rp * rq];
    let mut iterated: HashMap<usize, Vec<(Vec<usize>, Scalar)>> = HashMap::new();

    for (vi, cv) in v.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let (b, gtail) = (vi / rq, vi % rq);
        for (b0, i, c_rho) in pv.coaction_terms(b) {
            let hs = iterated
                .entry(*i)
                .or_insert_with(|| h.iterated_comult(*i, p));
            for (hvec, c_h) in hs.iter() {
                let base = ring.mul(&ring.mul(cv, c_rho), c_h);
                for (ui, cu) in u.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    let (a_idx, ftail) = (ui / rp, ui % rp);
                    let f = to_digits(ftail, r, p);
                    let coeff = ring.mul(&base, cu);
                    // expand the products f_t h_t one leg at a time
                    let mut legs: Vec<(Vec<usize>, Scalar)> = vec![(Vec::with_capacity(p), coeff)];
                    for t in 0..p {
                        let terms = h.mult_terms(f[t], hvec[t]);
                        let mut next = Vec::with_capacity(legs.len() * terms.len());
                        for (idx, c) in &legs {
                            for (kk, e) in terms {
                                let mut idx = idx.clone();
                                idx.push(*kk);
                                next.push((idx, ring.mul(c, e)));
                            }
                        }
                        legs = next;
                    }
                    for (z, e) in a.product_terms(j, a_idx, k, *b0) {
                        for (idx, c) in &legs {
                            let pos = ((z * rp) + from_digits(idx, r)) * rq + gtail;
                            out[pos] = ring.mul_add(&out[pos], c, e);
                        }
                    }
                }
            }
        }
    }
    Ok(AlgebraCochain {
        degree: p + q,
        internal: j + k,
        coeffs: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::build_complex;
    use crate::comodules::{graded_algebra_from_action, Comodule};
    use crate::hopf::{constant_group, CayleyTable};
    use crate::linalg::ExactMatrix;
    use crate::ring::{int, RingSpec};

    #[test]
    fn unit_is_neutral() {
        let h = constant_group(&CayleyTable::cyclic(3), RingSpec::Integers);
        let a = GradedComoduleAlgebra::trivial(&h);
        let v = AlgebraCochain::new(&a, 2, 0, (0..9).map(|x| int(x - 4)).collect()).unwrap();
        assert_eq!(cup(&a, &AlgebraCochain::unit(&a), &v).unwrap(), v);
        assert_eq!(cup(&a, &v, &AlgebraCochain::unit(&a)).unwrap(), v);
    }

    #[test]
    fn leibniz_with_sign_coefficients() {
        let z = RingSpec::Integers;
        let h = constant_group(&CayleyTable::cyclic(2), z);
        let sign = Comodule::from_group_action(
            &h,
            &[
                ExactMatrix::identity(z, 1),
                ExactMatrix::from_ints(z, &[vec![-1]]),
            ],
        )
        .unwrap();
        let a = graded_algebra_from_action(&sign, 2);
        let c1 = build_complex(&h, a.piece(1).unwrap(), 3).unwrap();
        let c2 = build_complex(&h, a.piece(2).unwrap(), 3).unwrap();
        let u = AlgebraCochain::new(&a, 1, 1, vec![int(2), int(-3)]).unwrap();
        let v = AlgebraCochain::new(&a, 1, 1, vec![int(5), int(7)]).unwrap();
        let uv = cup(&a, &u, &v).unwrap();
        let lhs = c2.apply(2, &uv.coeffs);
        let du = AlgebraCochain {
            degree: 2,
            internal: 1,
            coeffs: c1.apply(1, &u.coeffs),
        };
        let dv = AlgebraCochain {
            degree: 2,
            internal: 1,
            coeffs: c1.apply(1, &v.coeffs),
        };
        let a1 = cup(&a, &du, &v).unwrap();
        let a2 = cup(&a, &u, &dv).unwrap();
        let rhs: Vec<Scalar> = a1
            .coeffs
            .iter()
            .zip(&a2.coeffs)
            .map(|(x, y)| x - y)
            .collect();
        assert_eq!(lhs, rhs);
    }
}
