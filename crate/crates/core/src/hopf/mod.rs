//! Finite-rank Hopf algebras given by structure constants.
//!
//! A Hopf algebra `H` of rank `r` over a base ring has basis `e_0 .. e_{r-1}`
//! and is described by
//!
//! * multiplication constants `e_i e_j = sum_k c(i, j, k) e_k`,
//! * a unit vector `1 = sum_k u_k e_k`,
//! * comultiplication constants `Δ(e_i) = sum_{j,k} d(i, j, k) e_j ⊗ e_k`,
//! * a counit vector `ε(e_i)`,
//! * an antipode matrix whose column `i` is `S(e_i)`.
//!
//! Coordinate rings `k[G]` of finite group schemes are commutative; their
//! duals (measure algebras) need not be, and carry [`Flavor::MeasureAlgebra`].

mod constructors;
mod group;
mod validate;

use num_traits::Zero;

pub use constructors::{alpha_p, base_change, constant_group, direct_product, dual, mu_n};
pub use group::CayleyTable;
pub use validate::{validate, Axiom, Violation};

use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::ring::{RingSpec, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    /// Coordinate ring of a group scheme: multiplication must be commutative.
    CoordinateRing,
    /// Dual of a coordinate ring: commutativity is not required.
    MeasureAlgebra,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HopfAlgebra {
    ring: RingSpec,
    name: String,
    labels: Vec<String>,
    mult: Vec<Vec<Vec<(usize, Scalar)>>>,
    unit: Vec<Scalar>,
    comult: Vec<Vec<(usize, usize, Scalar)>>,
    counit: Vec<Scalar>,
    antipode: ExactMatrix,
    flavor: Flavor,
    group: Option<CayleyTable>,
}

/// Raw structure constants, as read from a file or assembled by a constructor.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants {
    pub labels: Vec<String>,
    pub mult: Vec<(usize, usize, usize, Scalar)>,
    pub unit: Vec<Scalar>,
    pub comult: Vec<(usize, usize, usize, Scalar)>,
    pub counit: Vec<Scalar>,
    pub antipode: ExactMatrix,
}

impl HopfAlgebra {
    /// Assemble from structure constants. Shapes and scalars are checked
    /// here; the Hopf axioms are checked by [`validate`].
    pub fn from_constants(
        ring: RingSpec,
        name: impl Into<String>,
        sc: StructureConstants,
    ) -> Result<Self> {
        let r = sc.labels.len();
        if r == 0 {
            return Err(Error::Dimension("rank must be positive".into()));
        }
        let dim = |what: &str, n: usize| {
            if n != r {
                Err(Error::Dimension(format!(
                    "{what} has length {n}, rank is {r}"
                )))
            } else {
                Ok(())
            }
        };
        dim("unit", sc.unit.len())?;
        dim("counit", sc.counit.len())?;
        if sc.antipode.rows() != r || sc.antipode.cols() != r {
            return Err(Error::Dimension(format!(
                "antipode is {}x{}, rank is {r}",
                sc.antipode.rows(),
                sc.antipode.cols()
            )));
        }
        if sc.antipode.ring() != ring {
            return Err(Error::RingMismatch(sc.antipode.ring(), ring));
        }
        let canon = |v: &Scalar| ring.coerce(v);
        let mut mult = vec![vec![Vec::new(); r]; r];
        for (i, j, k, c) in &sc.mult {
            if *i >= r || *j >= r || *k >= r {
                return Err(Error::Dimension(format!(
                    "mult index ({i}, {j}, {k}) out of range"
                )));
            }
            push_term(ring, &mut mult[*i][*j], *k, canon(c)?);
        }
        let mut comult = vec![Vec::new(); r];
        for (i, j, k, c) in &sc.comult {
            if *i >= r || *j >= r || *k >= r {
                return Err(Error::Dimension(format!(
                    "comult index ({i}, {j}, {k}) out of range"
                )));
            }
            push_pair(ring, &mut comult[*i], *j, *k, canon(c)?);
        }
        let unit = sc.unit.iter().map(canon).collect::<Result<_>>()?;
        let counit = sc.counit.iter().map(canon).collect::<Result<_>>()?;
        Ok(HopfAlgebra {
            ring,
            name: name.into(),
            labels: sc.labels,
            mult,
            unit,
            comult,
            counit,
            antipode: sc.antipode,
            flavor: Flavor::CoordinateRing,
            group: None,
        })
    }

    pub(crate) fn with_flavor(mut self, flavor: Flavor) -> Self {
        self.flavor = flavor;
        self
    }

    pub(crate) fn with_group(mut self, group: Option<CayleyTable>) -> Self {
        self.group = group;
        self
    }

    pub fn constants(&self) -> StructureConstants {
        StructureConstants {
            labels: self.labels.clone(),
            mult: self.mult_triples(),
            unit: self.unit.clone(),
            comult: self.comult_triples(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
        }
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// The group table when this is the coordinate ring of a constant group,
    /// with `e_g` the indicator function of `g`.
    pub fn group(&self) -> Option<&CayleyTable> {
        match self.flavor {
            Flavor::CoordinateRing => self.group.as_ref(),
            Flavor::MeasureAlgebra => None,
        }
    }

    /// The group table carried along through duals.
    pub(crate) fn group_table(&self) -> Option<&CayleyTable> {
        self.group.as_ref()
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode(&self) -> &ExactMatrix {
        &self.antipode
    }

    pub fn mult_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mult[i][j]
    }

    pub fn comult_terms(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comult[i]
    }

    pub fn mult_triples(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (i, row) in self.mult.iter().enumerate() {
            for (j, terms) in row.iter().enumerate() {
                out.extend(terms.iter().map(|(k, c)| (i, j, *k, c.clone())));
            }
        }
        out
    }

    pub fn comult_triples(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (i, terms) in self.comult.iter().enumerate() {
            out.extend(terms.iter().map(|(j, k, c)| (i, *j, *k, c.clone())));
        }
        out
    }

    pub fn basis(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.ring.zero(); self.rank()];
        v[i] = self.ring.one();
        v
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let ring = self.ring;
        let mut out = vec![ring.zero(); self.rank()];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = ring.mul(a, b);
                for (k, c) in &self.mult[i][j] {
                    out[*k] = ring.mul_add(&out[*k], &ab, c);
                }
            }
        }
        out
    }

    /// `Δ(x)` as a vector indexed by `j * rank + k`.
    pub fn comultiply(&self, x: &[Scalar]) -> Vec<Scalar> {
        let ring = self.ring;
        let r = self.rank();
        let mut out = vec![ring.zero(); r * r];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, k, c) in &self.comult[i] {
                out[j * r + k] = ring.mul_add(&out[j * r + k], a, c);
            }
        }
        out
    }

    pub fn apply_counit(&self, x: &[Scalar]) -> Scalar {
        x.iter()
            .zip(&self.counit)
            .fold(self.ring.zero(), |acc, (a, b)| {
                self.ring.mul_add(&acc, a, b)
            })
    }

    pub fn apply_antipode(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.antipode.mul_vec(x)
    }

    /// Whether `Δ` is symmetric under the flip of tensor factors.
    pub fn is_cocommutative(&self) -> bool {
        let r = self.rank();
        (0..r).all(|i| {
            let d = self.comultiply(&self.basis(i));
            (0..r).all(|j| (0..r).all(|k| d[j * r + k] == d[k * r + j]))
        })
    }

    pub fn is_commutative(&self) -> bool {
        let r = self.rank();
        (0..r).all(|i| (0..r).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    /// Iterated comultiplication `Δ^(n-1)(e_i)` into `n` tensor factors, as
    /// sparse `(indices, coefficient)` terms. `n = 0` gives the counit.
    pub fn iterated_comult(&self, i: usize, n: usize) -> Vec<(Vec<usize>, Scalar)> {
        let ring = self.ring;
        if n == 0 {
            return if self.counit[i].is_zero() {
                vec![]
            } else {
                vec![(vec![], self.counit[i].clone())]
            };
        }
        let mut terms: Vec<(Vec<usize>, Scalar)> = vec![(vec![i], ring.one())];
        for _ in 1..n {
            let mut next: std::collections::BTreeMap<Vec<usize>, Scalar> = Default::default();
            for (idx, c) in &terms {
                let (last, head) = idx.split_last().expect("nonempty");
                for (j, k, d) in &self.comult[*last] {
                    let mut key = head.to_vec();
                    key.push(*j);
                    key.push(*k);
                    let e = next.entry(key).or_insert_with(Scalar::zero);
                    *e = ring.mul_add(e, c, d);
                }
            }
            terms = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        terms
    }
}

fn push_term(ring: RingSpec, terms: &mut Vec<(usize, Scalar)>, k: usize, c: Scalar) {
    match terms.iter_mut().find(|(kk, _)| *kk == k) {
        Some((_, v)) => *v = ring.add(v, &c),
        None => terms.push((k, c)),
    }
    terms.retain(|(_, v)| !v.is_zero());
    terms.sort_by_key(|(k, _)| *k);
}

fn push_pair(
    ring: RingSpec,
    terms: &mut Vec<(usize, usize, Scalar)>,
    j: usize,
    k: usize,
    c: Scalar,
) {
    match terms.iter_mut().find(|(jj, kk, _)| *jj == j && *kk == k) {
        Some((_, _, v)) => *v = ring.add(v, &c),
        None => terms.push((j, k, c)),
    }
    terms.retain(|(_, _, v)| !v.is_zero());
    terms.sort_by_key(|(j, k, _)| (*j, *k));
}
