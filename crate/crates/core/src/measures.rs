//! The measure algebra `M(G) = Hom(k[G], k)`, its action on comodules, left
//! integrals, and the bound `n` that annihilates higher cohomology.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::comodules::{same_parent, Comodule};
use crate::error::{Error, Result};
use crate::hopf::{validate, HopfAlgebra};
use crate::linalg::{is_saturated_summand, kernel_basis, ExactMatrix};
use crate::ring::{big, RingSpec, Scalar};

/// A linear functional on `k[G]`, in coordinates dual to the basis of `k[G]`.
#[derive(Clone, Debug)]
pub struct Measure {
    parent: Arc<HopfAlgebra>,
    coeffs: Vec<Scalar>,
}

impl PartialEq for Measure {
    fn eq(&self, other: &Self) -> bool {
        same_parent(&self.parent, &other.parent) && self.coeffs == other.coeffs
    }
}

impl Measure {
    pub fn new(parent: &HopfAlgebra, coeffs: Vec<Scalar>) -> Result<Self> {
        Self::with_parent(Arc::new(parent.clone()), coeffs)
    }

    fn with_parent(parent: Arc<HopfAlgebra>, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != parent.rank() {
            return Err(Error::Dimension(format!(
                "{} coefficients for rank {}",
                coeffs.len(),
                parent.rank()
            )));
        }
        let ring = parent.ring();
        let coeffs = coeffs
            .iter()
            .map(|c| ring.coerce(c))
            .collect::<Result<_>>()?;
        Ok(Measure { parent, coeffs })
    }

    /// The counit, which is the identity of the convolution product.
    pub fn counit(parent: &HopfAlgebra) -> Self {
        Measure {
            parent: Arc::new(parent.clone()),
            coeffs: parent.counit().to_vec(),
        }
    }

    /// The dual basis functional `e^i`.
    pub fn basis(parent: &HopfAlgebra, i: usize) -> Self {
        Measure {
            parent: Arc::new(parent.clone()),
            coeffs: parent.basis(i),
        }
    }

    pub fn parent(&self) -> &HopfAlgebra {
        &self.parent
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn evaluate(&self, x: &[Scalar]) -> Scalar {
        let ring = self.parent.ring();
        self.coeffs
            .iter()
            .zip(x)
            .fold(ring.zero(), |acc, (a, b)| ring.mul_add(&acc, a, b))
    }

    /// `μ(1_H)`.
    pub fn value_at_one(&self) -> Scalar {
        self.evaluate(self.parent.unit())
    }

    pub fn scale(&self, c: &Scalar) -> Measure {
        let ring = self.parent.ring();
        Measure {
            parent: self.parent.clone(),
            coeffs: self.coeffs.iter().map(|x| ring.mul(x, c)).collect(),
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = self.parent.ring();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let label = format!("({})*", self.parent.labels()[i]);
            let term = if *c == ring.one() {
                label
            } else {
                format!("{}·{label}", crate::ring::scalar_string(c))
            };
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{term}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Evaluation at a group element of a constant group scheme.
pub fn dirac(h: &HopfAlgebra, g: usize) -> Result<Measure> {
    let t = h.group().ok_or(Error::NotConstant)?;
    if g >= t.order() {
        return Err(Error::ElementOutOfRange(g));
    }
    Ok(Measure::basis(h, g))
}

/// `(μ ∗ ν)(x) = (μ ⊗ ν)(Δx)`.
pub fn convolve(mu: &Measure, nu: &Measure) -> Result<Measure> {
    if !same_parent(&mu.parent, &nu.parent) {
        return Err(Error::ParentMismatch);
    }
    let h = &mu.parent;
    let ring = h.ring();
    let coeffs = (0..h.rank())
        .map(|k| {
            h.comult_terms(k)
                .iter()
                .fold(ring.zero(), |acc, (i, j, c)| {
                    ring.mul_add(&acc, c, &ring.mul(&mu.coeffs[*i], &nu.coeffs[*j]))
                })
        })
        .collect();
    Ok(Measure {
        parent: mu.parent.clone(),
        coeffs,
    })
}

/// `μ·m = (id ⊗ μ)(ρ(m))`.
pub fn act(m: &Comodule, mu: &Measure, v: &[Scalar]) -> Result<Vec<Scalar>> {
    if !same_parent(m.parent_arc(), &mu.parent) {
        return Err(Error::ParentMismatch);
    }
    if v.len() != m.rank() {
        return Err(Error::Dimension(format!(
            "vector of length {} for a rank {} module",
            v.len(),
            m.rank()
        )));
    }
    let ring = m.ring();
    let r = mu.parent.rank();
    let rho = m.coact(v);
    Ok((0..m.rank())
        .map(|b| {
            (0..r).fold(ring.zero(), |acc, i| {
                ring.mul_add(&acc, &rho[b * r + i], &mu.coeffs[i])
            })
        })
        .collect())
}

/// The matrix of `m ↦ μ·m`.
pub fn action_matrix(m: &Comodule, mu: &Measure) -> Result<ExactMatrix> {
    let ring = m.ring();
    let cols = (0..m.rank())
        .map(|a| {
            let mut e = vec![ring.zero(); m.rank()];
            e[a] = ring.one();
            act(m, mu, &e)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExactMatrix::from_columns(ring, m.rank(), &cols))
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntegralResult {
    pub generator: Measure,
    pub value_at_one: Scalar,
    pub is_free_rank_one: bool,
    pub is_summand: bool,
}

/// Solve `(id ⊗ ψ)(Δh) = ψ(h)·1` for all basis elements `h`.
///
/// Over `Z` the generator is normalized so that `ψ(1) > 0`, or when
/// `ψ(1) = 0` so that its first nonzero coefficient is positive.
pub fn left_integrals(h: &HopfAlgebra) -> Result<IntegralResult> {
    let v = validate(h);
    if !v.is_empty() {
        return Err(Error::InvalidHopf(v));
    }
    let ring = h.ring();
    let r = h.rank();
    let mut system = ExactMatrix::zeros(ring, r * r, r);
    for i in 0..r {
        for (j, k, c) in h.comult_terms(i) {
            let row = i * r + j;
            let cur = system.get(row, *k).clone();
            system.set(row, *k, ring.add(&cur, c));
        }
        for j in 0..r {
            let row = i * r + j;
            let cur = system.get(row, i).clone();
            system.set(row, i, ring.sub(&cur, &h.unit()[j]));
        }
    }
    let kernel = kernel_basis(&system);
    if kernel.cols() != 1 {
        return Err(Error::IntegralNotFreeRankOne {
            generators: kernel.cols(),
        });
    }
    let mut coeffs = kernel.column(0);
    if ring == RingSpec::Integers || ring == RingSpec::Rationals {
        let at_one = h
            .unit()
            .iter()
            .zip(&coeffs)
            .fold(ring.zero(), |acc, (u, c)| ring.mul_add(&acc, u, c));
        let lead = if at_one.is_zero() {
            coeffs.iter().find(|c| !c.is_zero()).cloned()
        } else {
            Some(at_one)
        };
        if lead.is_some_and(|l| l.is_negative()) {
            coeffs = coeffs.iter().map(|c| ring.neg(c)).collect();
        }
    }
    let is_summand = is_saturated_summand(&kernel);
    let generator = Measure {
        parent: Arc::new(h.clone()),
        coeffs,
    };
    Ok(IntegralResult {
        value_at_one: generator.value_at_one(),
        generator,
        is_free_rank_one: true,
        is_summand,
    })
}

pub fn integral_value_at_one(result: &IntegralResult) -> Scalar {
    result.generator.value_at_one()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundPath {
    /// `n` is the additive order of `1` in the base ring.
    Characteristic,
    /// `n = a ψ(1)` for the left integral `ψ`.
    Integral,
}

impl fmt::Display for BoundPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundPath::Characteristic => "characteristic",
            BoundPath::Integral => "integral",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TorsionBound {
    pub n: BigInt,
    pub path: BoundPath,
    /// The integral, when it was computed.
    pub integral: Option<IntegralResult>,
}

/// A positive integer `n` annihilating `H^i(G, M)` for every `i > 0` and
/// every comodule `M`.
pub fn torsion_bound(h: &HopfAlgebra) -> Result<TorsionBound> {
    let v = validate(h);
    if !v.is_empty() {
        return Err(Error::InvalidHopf(v));
    }
    let ch = h.ring().characteristic();
    if ch > 0 {
        return Ok(TorsionBound {
            n: BigInt::from(ch),
            path: BoundPath::Characteristic,
            integral: None,
        });
    }
    let integral = left_integrals(h)?;
    let at_one = &integral.value_at_one;
    if at_one.is_zero() {
        return Err(Error::IntegralVanishes);
    }
    let n = match h.ring() {
        RingSpec::Integers => at_one.abs().to_integer(),
        _ => BigInt::from(1),
    };
    Ok(TorsionBound {
        n,
        path: BoundPath::Integral,
        integral: Some(integral),
    })
}

/// `φ = aψ` with `aψ(1) = n`, as the matrix of its action on `M`.
pub fn phi_projection(h: &HopfAlgebra, m: &Comodule) -> Result<ExactMatrix> {
    if h.ring().characteristic() > 0 {
        return Err(Error::PositiveCharacteristic);
    }
    if h != m.parent() {
        return Err(Error::ParentMismatch);
    }
    let bound = torsion_bound(h)?;
    let integral = bound.integral.expect("integral path");
    let a = big(bound.n) / &integral.value_at_one;
    let phi = Measure {
        parent: m.parent_arc().clone(),
        coeffs: integral.generator.scale(&a).coeffs,
    };
    action_matrix(m, &phi)
}
