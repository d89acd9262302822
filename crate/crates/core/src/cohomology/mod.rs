//! Cohomology `H^*(G, M)` through the cobar complex `C^n = M ⊗ H^{⊗n}`.
//!
//! A basis cochain `e_a ⊗ f_{i_1} ⊗ … ⊗ f_{i_n}` has index
//! `((a·r + i_1)·r + …)·r + i_n`. For a constant group this coordinate is the
//! value at `(g_{i_1}, …, g_{i_n})` of the corresponding inhomogeneous cochain,
//! so both complexes have literally the same matrices up to that
//! identification.

mod bar;
mod cup;
mod table;

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

pub use bar::{bar_complex_oracle, cyclic_oracle, GroupModule};
pub use cup::{cup, AlgebraCochain};
pub use table::{
    cohomology_ring, generation_degree, ClassId, CohomologyRingTable, GenerationReport,
};

use crate::comodules::{validate_comodule, Comodule};
use crate::error::{Error, Result};
use crate::hopf::{validate, HopfAlgebra};
use crate::linalg::sparse::SparseMatrix;
use crate::linalg::{kernel_basis, ModulePresentation, PresentationView, Subquotient};
use crate::measures::{torsion_bound, BoundPath};
use crate::ring::{RingSpec, Scalar};

/// Largest cochain rank `build_complex` accepts by default.
pub const DEFAULT_SIZE_LIMIT: usize = 250_000;

#[derive(Debug)]
pub struct CochainComplex {
    parent: Arc<HopfAlgebra>,
    coefficients: Comodule,
    max_degree: usize,
    /// `differentials[n] = ∂^n : C^n → C^{n+1}` for `n = 0..=max_degree`.
    differentials: Vec<SparseMatrix>,
    divisors: Vec<OnceLock<Vec<Scalar>>>,
}

impl CochainComplex {
    pub fn parent(&self) -> &HopfAlgebra {
        &self.parent
    }

    pub fn coefficients(&self) -> &Comodule {
        &self.coefficients
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn ring(&self) -> RingSpec {
        self.parent.ring()
    }

    /// Rank of `C^n`.
    pub fn cochain_rank(&self, n: usize) -> usize {
        self.coefficients.rank() * self.parent.rank().pow(n as u32)
    }

    pub fn differential(&self, n: usize) -> &SparseMatrix {
        &self.differentials[n]
    }

    /// Apply `∂^n`.
    pub fn apply(&self, n: usize, c: &[Scalar]) -> Vec<Scalar> {
        self.differentials[n].apply(c)
    }

    /// Nonzero elementary divisors of `∂^n`, computed once.
    pub fn elementary_divisors(&self, n: usize) -> &[Scalar] {
        self.divisors[n].get_or_init(|| self.differentials[n].elementary_divisors())
    }

    fn precompute_divisors(&self, degrees: std::ops::RangeInclusive<usize>) {
        degrees.collect::<Vec<_>>().par_iter().for_each(|&n| {
            self.elementary_divisors(n);
        });
    }
}

/// Build `∂^0, …, ∂^D` with the default size guard.
pub fn build_complex(h: &HopfAlgebra, m: &Comodule, max_degree: usize) -> Result<CochainComplex> {
    build_complex_with_limit(h, m, max_degree, DEFAULT_SIZE_LIMIT)
}

/// Build the cobar complex through `∂^D`, checking both inputs and
/// `∂^{n+1} ∂^n = 0`. The largest cochain group, `C^{D+1}`, must have rank
/// at most `limit`.
pub fn build_complex_with_limit(
    h: &HopfAlgebra,
    m: &Comodule,
    max_degree: usize,
    limit: usize,
) -> Result<CochainComplex> {
    let v = validate(h);
    if !v.is_empty() {
        return Err(Error::InvalidHopf(v));
    }
    if h != m.parent() {
        return Err(Error::ParentMismatch);
    }
    let v = validate_comodule(m);
    if !v.is_empty() {
        return Err(Error::InvalidComodule(v));
    }
    let r = h.rank();
    let top = (m.rank() as u128) * (r as u128).pow(max_degree as u32 + 1);
    if top > limit as u128 {
        return Err(Error::SizeGuard {
            rank: usize::try_from(top).unwrap_or(usize::MAX),
            limit,
        });
    }
    let parent = m.parent_arc().clone();
    let differentials: Vec<SparseMatrix> = (0..=max_degree).map(|n| differential(m, n)).collect();
    for n in 0..max_degree {
        let sq = differentials[n + 1].compose(&differentials[n])?;
        assert!(
            sq.is_zero(),
            "cobar differential does not square to zero in degree {n}"
        );
    }
    Ok(CochainComplex {
        parent,
        coefficients: m.clone(),
        max_degree,
        divisors: (0..=max_degree).map(|_| OnceLock::new()).collect(),
        differentials,
    })
}

/// `∂^n : M ⊗ H^{⊗n} → M ⊗ H^{⊗(n+1)}`.
fn differential(m: &Comodule, n: usize) -> SparseMatrix {
    let h = m.parent();
    let ring = h.ring();
    let r = h.rank();
    let rn = r.pow(n as u32);
    let rows = m.rank() * rn * r;
    let unit: Vec<(usize, Scalar)> = h
        .unit()
        .iter()
        .enumerate()
        .filter(|(_, u)| !u.is_zero())
        .map(|(i, u)| (i, u.clone()))
        .collect();
    let sign = |k: usize, c: &Scalar| {
        if k.is_multiple_of(2) {
            c.clone()
        } else {
            ring.neg(c)
        }
    };
    let columns: Vec<Vec<(usize, Scalar)>> = (0..m.rank() * rn)
        .into_par_iter()
        .map(|col| {
            let a = col / rn;
            let digits = to_digits(col % rn, r, n);
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            let mut add = |idx: usize, c: Scalar| {
                let e = acc.entry(idx).or_insert_with(Scalar::zero);
                *e = ring.add(e, &c);
            };
            let tail = col % rn;
            for (b, i, c) in m.coaction_terms(a) {
                add((b * r + i) * rn + tail, c.clone());
            }
            for t in 0..n {
                for (j, k, c) in h.comult_terms(digits[t]) {
                    let mut d = Vec::with_capacity(n + 1);
                    d.extend_from_slice(&digits[..t]);
                    d.push(*j);
                    d.push(*k);
                    d.extend_from_slice(&digits[t + 1..]);
                    add(a * rn * r + from_digits(&d, r), sign(t + 1, c));
                }
            }
            for (i, u) in &unit {
                add(col * r + i, sign(n + 1, u));
            }
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
        })
        .collect();
    SparseMatrix::new(ring, rows, columns)
}

pub(crate) fn to_digits(mut x: usize, r: usize, n: usize) -> Vec<usize> {
    let mut d = vec![0; n];
    for t in (0..n).rev() {
        d[t] = x % r;
        x /= r;
    }
    d
}

pub(crate) fn from_digits(d: &[usize], r: usize) -> usize {
    d.iter().fold(0, |acc, x| acc * r + x)
}

/// `H^i` of the complex as a presentation.
///
/// Over `Z` and over fields this reads off ranks and elementary divisors of
/// the sparse differentials: the kernel of `∂^i` is a direct summand of a
/// free module (over `Z` because the target is torsion-free), so the torsion
/// of `H^i` is given by the non-unit elementary divisors of `∂^{i-1}`. Over
/// `Z/m` with `m` composite the kernel need not be free and the general
/// subquotient computation is used.
pub fn cohomology_at(c: &CochainComplex, i: usize) -> Result<ModulePresentation> {
    if i > c.max_degree {
        return Err(Error::DegreeOverflow {
            degree: i,
            cap: c.max_degree,
        });
    }
    let ring = c.ring();
    if ring.is_field() || ring == RingSpec::Integers {
        let rank_next = c.elementary_divisors(i).len();
        let prev: &[Scalar] = if i == 0 {
            &[]
        } else {
            c.elementary_divisors(i - 1)
        };
        let free = c.cochain_rank(i) - rank_next - prev.len();
        let mut ann: Vec<Scalar> = prev.iter().filter(|d| !ring.is_unit(d)).cloned().collect();
        ann.extend(std::iter::repeat_n(ring.zero(), free));
        return ModulePresentation::new(ring, ann);
    }
    Ok(cohomology_with_representatives(c, i)?
        .presentation()
        .clone())
}

/// `ker ∂^i / im ∂^{i-1}` with representative cocycles and coordinates.
pub fn cohomology_with_representatives(c: &CochainComplex, i: usize) -> Result<Subquotient> {
    if i > c.max_degree {
        return Err(Error::DegreeOverflow {
            degree: i,
            cap: c.max_degree,
        });
    }
    let z = kernel_basis(&c.differentials[i].to_dense());
    let b = if i == 0 {
        crate::linalg::ExactMatrix::zeros(c.ring(), c.cochain_rank(0), 0)
    } else {
        c.differentials[i - 1].to_dense()
    };
    Subquotient::new(&z, &b)
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeVerdict {
    pub degree: usize,
    pub presentation: PresentationView,
    pub annihilated: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnnihilationReport {
    pub bound: String,
    pub path: BoundPath,
    pub degrees: Vec<DegreeVerdict>,
    pub verified: bool,
}

/// Compute `n` and check that `n·H^i(G, M) = 0` for `0 < i ≤ D`.
///
/// The check is on the whole module: a free summand fails unless `n` is zero
/// in the base ring.
pub fn verify_annihilation(
    h: &HopfAlgebra,
    m: &Comodule,
    max_degree: usize,
) -> Result<AnnihilationReport> {
    let bound = torsion_bound(h)?;
    let c = build_complex(h, m, max_degree)?;
    verify_with(&c, &bound.n, bound.path)
}

pub(crate) fn verify_with(
    c: &CochainComplex,
    n: &BigInt,
    path: BoundPath,
) -> Result<AnnihilationReport> {
    c.precompute_divisors(0..=c.max_degree);
    let degrees = (0..=c.max_degree)
        .map(|i| {
            let p = cohomology_at(c, i)?;
            Ok(DegreeVerdict {
                degree: i,
                annihilated: i == 0 || p.is_annihilated_by(n),
                presentation: PresentationView::from(&p),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let verified = degrees.iter().all(|d| d.annihilated);
    Ok(AnnihilationReport {
        bound: n.to_string(),
        path,
        degrees,
        verified,
    })
}

/// All presentations `H^0 … H^D`.
pub fn cohomology_table(c: &CochainComplex) -> Result<Vec<ModulePresentation>> {
    c.precompute_divisors(0..=c.max_degree);
    (0..=c.max_degree).map(|i| cohomology_at(c, i)).collect()
}
