//! Right comodules over a Hopf algebra: finite-rank free modules with a
//! coaction `ρ: M → M ⊗ H`.
//!
//! The coaction is stored as `ρ(e_a) = sum_{b,i} c(a, b, i) e_b ⊗ f_i` where
//! `f_i` is the basis of the parent Hopf algebra. For a constant group the
//! coefficient of `e_g` is the action of `g`, so `ρ(m) = sum_g (g·m) ⊗ e_g`.

mod graded;
mod ses;

use std::sync::Arc;

use num_traits::Zero;

pub use graded::{graded_algebra_from_action, GradedComoduleAlgebra, Monomial};
pub use ses::{ses_cokernel_exponent, ShortExactSequence};

use crate::error::{Error, Result};
use crate::hopf::{base_change, Axiom, HopfAlgebra, Violation};
use crate::linalg::{kernel_basis, ExactMatrix};
use crate::ring::{RingSpec, Scalar};

#[derive(Clone, Debug)]
pub struct Comodule {
    parent: Arc<HopfAlgebra>,
    rank: usize,
    coaction: Vec<Vec<(usize, usize, Scalar)>>,
}

impl PartialEq for Comodule {
    fn eq(&self, other: &Self) -> bool {
        same_parent(&self.parent, &other.parent)
            && self.rank == other.rank
            && self.coaction == other.coaction
    }
}

pub(crate) fn same_parent(a: &Arc<HopfAlgebra>, b: &Arc<HopfAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl Comodule {
    /// Build from `(a, b, i, c)` terms meaning `ρ(e_a) ∋ c e_b ⊗ f_i`.
    /// Repeated terms are summed. Axioms are checked by [`validate_comodule`].
    pub fn new(
        parent: &HopfAlgebra,
        rank: usize,
        terms: Vec<(usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        Self::with_parent(Arc::new(parent.clone()), rank, terms)
    }

    pub(crate) fn with_parent(
        parent: Arc<HopfAlgebra>,
        rank: usize,
        terms: Vec<(usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let ring = parent.ring();
        let r = parent.rank();
        let mut dense: Vec<std::collections::BTreeMap<(usize, usize), Scalar>> =
            vec![Default::default(); rank];
        for (a, b, i, c) in terms {
            if a >= rank || b >= rank || i >= r {
                return Err(Error::Dimension(format!(
                    "coaction index ({a}, {b}, {i}) out of range"
                )));
            }
            let c = ring.coerce(&c)?;
            let e = dense[a].entry((b, i)).or_insert_with(Scalar::zero);
            *e = ring.add(e, &c);
        }
        let coaction = dense
            .into_iter()
            .map(|m| {
                m.into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|((b, i), c)| (b, i, c))
                    .collect()
            })
            .collect();
        Ok(Comodule {
            parent,
            rank,
            coaction,
        })
    }

    /// `ρ(m) = m ⊗ 1` on a free module of rank `d`.
    pub fn trivial(h: &HopfAlgebra, d: usize) -> Self {
        Self::trivial_over(Arc::new(h.clone()), d)
    }

    pub(crate) fn trivial_over(parent: Arc<HopfAlgebra>, d: usize) -> Self {
        let terms = (0..d)
            .flat_map(|a| {
                parent
                    .unit()
                    .iter()
                    .enumerate()
                    .filter(|(_, u)| !u.is_zero())
                    .map(move |(i, u)| (a, a, i, u.clone()))
                    .collect::<Vec<_>>()
            })
            .collect();
        Self::with_parent(parent, d, terms).expect("in range")
    }

    /// `H` itself with `ρ = Δ`.
    pub fn regular(h: &HopfAlgebra) -> Self {
        let terms = h.comult_triples();
        Self::new(h, h.rank(), terms).expect("in range")
    }

    /// The comodule of a representation of a constant group, from the
    /// matrices of `g·` for every group element in table order.
    pub fn from_group_action(h: &HopfAlgebra, matrices: &[ExactMatrix]) -> Result<Self> {
        let g = h.group().ok_or(Error::NotConstant)?;
        if matrices.len() != g.order() {
            return Err(Error::Dimension(format!(
                "{} matrices for a group of order {}",
                matrices.len(),
                g.order()
            )));
        }
        let d = matrices[0].rows();
        let mut terms = Vec::new();
        for (gi, m) in matrices.iter().enumerate() {
            if m.rows() != d || m.cols() != d {
                return Err(Error::Dimension(
                    "action matrices must be square of equal size".into(),
                ));
            }
            for a in 0..d {
                for b in 0..d {
                    if !m.get(b, a).is_zero() {
                        terms.push((a, b, gi, m.get(b, a).clone()));
                    }
                }
            }
        }
        Self::new(h, d, terms)
    }

    pub fn parent(&self) -> &HopfAlgebra {
        &self.parent
    }

    pub(crate) fn parent_arc(&self) -> &Arc<HopfAlgebra> {
        &self.parent
    }

    pub fn ring(&self) -> RingSpec {
        self.parent.ring()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coaction_terms(&self, a: usize) -> &[(usize, usize, Scalar)] {
        &self.coaction[a]
    }

    pub fn coaction_quadruples(&self) -> Vec<(usize, usize, usize, Scalar)> {
        self.coaction
            .iter()
            .enumerate()
            .flat_map(|(a, t)| t.iter().map(move |(b, i, c)| (a, *b, *i, c.clone())))
            .collect()
    }

    /// `ρ(m)` as a vector indexed by `b * rank(H) + i`.
    pub fn coact(&self, m: &[Scalar]) -> Vec<Scalar> {
        let ring = self.ring();
        let r = self.parent.rank();
        let mut out = vec![ring.zero(); self.rank * r];
        for (a, x) in m.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (b, i, c) in &self.coaction[a] {
                out[b * r + i] = ring.mul_add(&out[b * r + i], x, c);
            }
        }
        out
    }

    /// Action of a group element of a constant group scheme.
    pub fn group_act(&self, g: usize, m: &[Scalar]) -> Result<Vec<Scalar>> {
        let t = self.parent.group().ok_or(Error::NotConstant)?;
        if g >= t.order() {
            return Err(Error::ElementOutOfRange(g));
        }
        let r = self.parent.rank();
        let rho = self.coact(m);
        Ok((0..self.rank).map(|b| rho[b * r + g].clone()).collect())
    }

    /// Matrix of the linear map `m ↦ ρ(m) − m ⊗ 1`, of size `(d r) × d`.
    pub fn fixed_point_matrix(&self) -> ExactMatrix {
        let ring = self.ring();
        let r = self.parent.rank();
        let cols: Vec<Vec<Scalar>> = (0..self.rank)
            .map(|a| {
                let mut v = vec![ring.zero(); self.rank * r];
                for (b, i, c) in &self.coaction[a] {
                    v[b * r + i] = c.clone();
                }
                for (i, u) in self.parent.unit().iter().enumerate() {
                    v[a * r + i] = ring.sub(&v[a * r + i], u);
                }
                v
            })
            .collect();
        ExactMatrix::from_columns(ring, self.rank * r, &cols)
    }

    /// Whether the `dn × dm` matrix `f` commutes with the coactions.
    pub fn is_morphism_to(&self, target: &Comodule, f: &ExactMatrix) -> bool {
        if !same_parent(&self.parent, &target.parent)
            || f.rows() != target.rank
            || f.cols() != self.rank
        {
            return false;
        }
        let r = self.parent.rank();
        (0..self.rank).all(|a| {
            let lhs = target.coact(&f.column(a));
            let rho = self.coact(&unit_vec(self.ring(), self.rank, a));
            let rhs = apply_left(f, &rho, r);
            lhs == rhs
        })
    }
}

/// `(f ⊗ id)` applied to a vector of `M ⊗ H` indexed by `b * r + i`.
pub(crate) fn apply_left(f: &ExactMatrix, v: &[Scalar], r: usize) -> Vec<Scalar> {
    let ring = f.ring();
    let mut out = vec![ring.zero(); f.rows() * r];
    for (p, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        let (b, i) = (p / r, p % r);
        for row in 0..f.rows() {
            let c = f.get(row, b);
            if !c.is_zero() {
                out[row * r + i] = ring.mul_add(&out[row * r + i], c, x);
            }
        }
    }
    out
}

pub(crate) fn unit_vec(ring: RingSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![ring.zero(); n];
    v[i] = ring.one();
    v
}

/// Check the counit and coassociativity axioms. Empty iff both hold.
pub fn validate_comodule(m: &Comodule) -> Vec<Violation> {
    let h = m.parent();
    let ring = m.ring();
    let r = h.rank();
    let d = m.rank();
    let mut out = Vec::new();
    for a in 0..d {
        let mut v = vec![ring.zero(); d];
        for (b, i, c) in m.coaction_terms(a) {
            v[*b] = ring.mul_add(&v[*b], c, &h.counit()[*i]);
        }
        if v != unit_vec(ring, d, a) {
            out.push(Violation {
                axiom: Axiom::CoactionCounit,
                witness: vec![a],
            });
            break;
        }
    }
    for a in 0..d {
        let mut left = vec![ring.zero(); d * r * r];
        let mut right = vec![ring.zero(); d * r * r];
        for (b, i, c) in m.coaction_terms(a) {
            for (j, k, e) in h.comult_terms(*i) {
                let idx = (b * r + j) * r + k;
                left[idx] = ring.mul_add(&left[idx], c, e);
            }
            for (b2, j, e) in m.coaction_terms(*b) {
                let idx = (b2 * r + j) * r + i;
                right[idx] = ring.mul_add(&right[idx], c, e);
            }
        }
        if left != right {
            out.push(Violation {
                axiom: Axiom::CoactionCoassociativity,
                witness: vec![a],
            });
            break;
        }
    }
    out
}

pub fn trivial_comodule(h: &HopfAlgebra, d: usize) -> Comodule {
    Comodule::trivial(h, d)
}

pub fn regular_comodule(h: &HopfAlgebra) -> Comodule {
    Comodule::regular(h)
}

/// Diagonal coaction on `M1 ⊗ M2`; `e_a ⊗ e_b` has index `a * rank(M2) + b`.
pub fn tensor_comodule(m1: &Comodule, m2: &Comodule) -> Result<Comodule> {
    if !same_parent(&m1.parent, &m2.parent) {
        return Err(Error::ParentMismatch);
    }
    let h = m1.parent();
    let ring = m1.ring();
    let d2 = m2.rank();
    let mut terms = Vec::new();
    for a1 in 0..m1.rank() {
        for a2 in 0..d2 {
            for (b1, i1, c1) in m1.coaction_terms(a1) {
                for (b2, i2, c2) in m2.coaction_terms(a2) {
                    let c = ring.mul(c1, c2);
                    for (k, e) in h.mult_terms(*i1, *i2) {
                        terms.push((a1 * d2 + a2, b1 * d2 + b2, *k, ring.mul(&c, e)));
                    }
                }
            }
        }
    }
    Comodule::with_parent(m1.parent.clone(), m1.rank() * d2, terms)
}

/// Contragredient comodule on the dual basis: `ρ(e^a) = sum_b e^b ⊗ S(ρ_ba)`
/// where `ρ(e_b) = sum_a e_a ⊗ ρ_ab`.
pub fn dual_comodule(m: &Comodule) -> Result<Comodule> {
    let v = validate_comodule(m);
    if !v.is_empty() {
        return Err(Error::InvalidComodule(v));
    }
    let h = m.parent();
    let ring = m.ring();
    let s = h.antipode();
    let mut terms = Vec::new();
    for b in 0..m.rank() {
        for (a, i, c) in m.coaction_terms(b) {
            for row in 0..h.rank() {
                let x = s.get(row, *i);
                if !x.is_zero() {
                    terms.push((*a, b, row, ring.mul(c, x)));
                }
            }
        }
    }
    Comodule::with_parent(m.parent.clone(), m.rank(), terms)
}

pub fn direct_sum(m1: &Comodule, m2: &Comodule) -> Result<Comodule> {
    if !same_parent(&m1.parent, &m2.parent) {
        return Err(Error::ParentMismatch);
    }
    let d1 = m1.rank();
    let mut terms = m1.coaction_quadruples();
    terms.extend(
        m2.coaction_quadruples()
            .into_iter()
            .map(|(a, b, i, c)| (a + d1, b + d1, i, c)),
    );
    Comodule::with_parent(m1.parent.clone(), d1 + m2.rank(), terms)
}

/// The same coaction over `base_change(parent, target)`.
pub fn base_change_comodule(m: &Comodule, target: RingSpec) -> Result<Comodule> {
    let h = base_change(m.parent(), target)?;
    Comodule::new(&h, m.rank(), m.coaction_quadruples())
}

/// Basis of `M^G = {m : ρ(m) = m ⊗ 1}` as columns; saturated over `Z`.
pub fn invariants(m: &Comodule) -> ExactMatrix {
    kernel_basis(&m.fixed_point_matrix())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{constant_group, mu_n, CayleyTable};
    use crate::ring::int;

    fn c2() -> HopfAlgebra {
        constant_group(&CayleyTable::cyclic(2), RingSpec::Integers)
    }

    #[test]
    fn standard_comodules_validate() {
        let h = c2();
        let reg = regular_comodule(&h);
        for m in [
            trivial_comodule(&h, 0),
            trivial_comodule(&h, 3),
            reg.clone(),
            tensor_comodule(&reg, &reg).unwrap(),
            dual_comodule(&reg).unwrap(),
            direct_sum(&reg, &trivial_comodule(&h, 1)).unwrap(),
        ] {
            assert_eq!(validate_comodule(&m), vec![]);
        }
    }

    #[test]
    fn dropped_term_is_detected() {
        let h = c2();
        let mut terms = regular_comodule(&h).coaction_quadruples();
        terms.pop();
        let bad = Comodule::new(&h, 2, terms).unwrap();
        assert!(!validate_comodule(&bad).is_empty());
    }

    #[test]
    fn invariant_examples() {
        let h = c2();
        assert_eq!(
            invariants(&regular_comodule(&h)),
            ExactMatrix::from_ints(RingSpec::Integers, &[vec![1], vec![1]])
        );
        let m = mu_n(2, RingSpec::Integers).unwrap();
        assert_eq!(
            invariants(&regular_comodule(&m)),
            ExactMatrix::from_ints(RingSpec::Integers, &[vec![1], vec![0]])
        );
        let reg = regular_comodule(&h);
        assert_eq!(invariants(&tensor_comodule(&reg, &reg).unwrap()).cols(), 2);
        assert_eq!(invariants(&dual_comodule(&reg).unwrap()).cols(), 1);
        assert_eq!(
            invariants(&trivial_comodule(&h, 3)),
            ExactMatrix::identity(RingSpec::Integers, 3)
        );
    }

    #[test]
    fn regular_action_is_right_translation_inverse() {
        let t = CayleyTable::symmetric3();
        let h = constant_group(&t, RingSpec::Integers);
        let reg = regular_comodule(&h);
        for g in 0..6 {
            for x in 0..6 {
                let gx = reg.group_act(g, &h.basis(x)).unwrap();
                assert_eq!(gx, h.basis(t.mul(x, t.inverse(g))));
            }
        }
    }

    #[test]
    fn sign_module_from_action() {
        let h = c2();
        let z = RingSpec::Integers;
        let m = Comodule::from_group_action(
            &h,
            &[
                ExactMatrix::identity(z, 1),
                ExactMatrix::from_ints(z, &[vec![-1]]),
            ],
        )
        .unwrap();
        assert!(validate_comodule(&m).is_empty());
        assert_eq!(m.group_act(1, &[int(1)]).unwrap(), vec![int(-1)]);
        assert_eq!(invariants(&m).cols(), 0);
    }
}
