use num_bigint::BigInt;

use super::{apply_left, invariants, same_parent, validate_comodule, Comodule};
use crate::error::{Error, Result};
use crate::linalg::{smith_form, subquotient_presentation, ExactMatrix};
use crate::ring::Scalar;

/// `0 → M' → M → M'' → 0` with explicit inclusion and projection matrices.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    sub: Comodule,
    mid: Comodule,
    quot: Comodule,
    inclusion: ExactMatrix,
    projection: ExactMatrix,
}

impl ShortExactSequence {
    /// Check every exactness and equivariance condition.
    pub fn new(
        sub: Comodule,
        mid: Comodule,
        quot: Comodule,
        inclusion: ExactMatrix,
        projection: ExactMatrix,
    ) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidSequence(msg.to_string()));
        if !same_parent(sub.parent_arc(), mid.parent_arc())
            || !same_parent(mid.parent_arc(), quot.parent_arc())
        {
            return Err(Error::ParentMismatch);
        }
        for m in [&sub, &mid, &quot] {
            let v = validate_comodule(m);
            if !v.is_empty() {
                return Err(Error::InvalidComodule(v));
            }
        }
        let (d1, d, d2) = (sub.rank(), mid.rank(), quot.rank());
        if inclusion.rows() != d
            || inclusion.cols() != d1
            || projection.rows() != d2
            || projection.cols() != d
        {
            return bad("map shapes do not match the ranks");
        }
        if d1 + d2 != d {
            return bad("ranks do not add up");
        }
        if !is_split_injective(&inclusion) {
            return bad("inclusion is not injective with saturated image");
        }
        if !is_split_injective(&projection.transpose()) {
            return bad("projection is not surjective");
        }
        if !projection.mul(&inclusion)?.is_zero() {
            return bad("projection after inclusion is not zero");
        }
        if !sub.is_morphism_to(&mid, &inclusion) || !mid.is_morphism_to(&quot, &projection) {
            return bad("maps do not commute with the coactions");
        }
        Ok(ShortExactSequence {
            sub,
            mid,
            quot,
            inclusion,
            projection,
        })
    }

    /// The sequence `0 → S → M → M/S → 0` for a saturated subcomodule
    /// spanned by the columns of `span`.
    ///
    /// The quotient basis is the image of a complement of `span` chosen from
    /// the Smith transform, and both induced coactions are computed, not
    /// assumed.
    pub fn from_submodule(mid: &Comodule, span: &ExactMatrix) -> Result<Self> {
        let ring = mid.ring();
        let d = mid.rank();
        let r = mid.parent().rank();
        if span.rows() != d {
            return Err(Error::Dimension(format!(
                "span has {} rows, module has rank {d}",
                span.rows()
            )));
        }
        if !is_split_injective(span) {
            return Err(Error::InvalidSequence(
                "submodule is not a saturated free summand".into(),
            ));
        }
        let d1 = span.cols();
        let s = smith_form(span);
        // u * span * v = [I; 0]: the first d1 rows of u give coordinates in
        // span (up to v), the remaining rows project onto the complement.
        let take_rows = |m: &ExactMatrix, from: usize, to: usize| {
            let cols: Vec<Vec<Scalar>> = (0..m.cols())
                .map(|j| m.column(j)[from..to].to_vec())
                .collect();
            ExactMatrix::from_columns(ring, to - from, &cols)
        };
        let projection = take_rows(&s.u, d1, d);
        let coords = s.v.mul(&take_rows(&s.u, 0, d1))?;

        let mut sub_terms = Vec::new();
        for j in 0..d1 {
            let rho = mid.coact(&span.column(j));
            if apply_left(&projection, &rho, r)
                .iter()
                .any(|x| !num_traits::Zero::is_zero(x))
            {
                return Err(Error::InvalidSequence("span is not a subcomodule".into()));
            }
            let image = apply_left(&coords, &rho, r);
            push_terms(&mut sub_terms, j, &image, r);
        }
        let mut quot_terms = Vec::new();
        for j in 0..d - d1 {
            let rho = mid.coact(&s.u_inv.column(d1 + j));
            let image = apply_left(&projection, &rho, r);
            push_terms(&mut quot_terms, j, &image, r);
        }
        let parent = mid.parent_arc().clone();
        let sub = Comodule::with_parent(parent.clone(), d1, sub_terms)?;
        let quot = Comodule::with_parent(parent, d - d1, quot_terms)?;
        Self::new(sub, mid.clone(), quot, span.clone(), projection)
    }

    pub fn sub(&self) -> &Comodule {
        &self.sub
    }

    pub fn mid(&self) -> &Comodule {
        &self.mid
    }

    pub fn quot(&self) -> &Comodule {
        &self.quot
    }

    pub fn inclusion(&self) -> &ExactMatrix {
        &self.inclusion
    }

    pub fn projection(&self) -> &ExactMatrix {
        &self.projection
    }

    /// `0 → M' → M' ⊕ M'' → M'' → 0`.
    pub fn split(sub: &Comodule, quot: &Comodule) -> Result<Self> {
        let ring = sub.ring();
        let (d1, d2) = (sub.rank(), quot.rank());
        let mid = super::direct_sum(sub, quot)?;
        let mut inc = ExactMatrix::zeros(ring, d1 + d2, d1);
        let mut proj = ExactMatrix::zeros(ring, d2, d1 + d2);
        for i in 0..d1 {
            inc.set(i, i, ring.one());
        }
        for i in 0..d2 {
            proj.set(i, d1 + i, ring.one());
        }
        Self::new(sub.clone(), mid, quot.clone(), inc, proj)
    }
}

fn push_terms(
    terms: &mut Vec<(usize, usize, usize, Scalar)>,
    a: usize,
    image: &[Scalar],
    r: usize,
) {
    for (p, c) in image.iter().enumerate() {
        if !num_traits::Zero::is_zero(c) {
            terms.push((a, p / r, p % r, c.clone()));
        }
    }
}

/// Injective with free, saturated image: every elementary divisor is a unit
/// and there is one per column.
fn is_split_injective(m: &ExactMatrix) -> bool {
    let diag = crate::linalg::elementary_divisors(m);
    diag.len() == m.cols() && diag.iter().all(|d| m.ring().is_unit(d))
}

/// Exponent of `coker(M^G → M''^G)`: the smallest positive integer killing
/// it, or `0` if no positive integer does (this never happens when the
/// torsion bound exists).
pub fn ses_cokernel_exponent(s: &ShortExactSequence) -> Result<BigInt> {
    let inv_mid = invariants(&s.mid);
    let inv_quot = invariants(&s.quot);
    let image = s.projection.mul(&inv_mid)?;
    let coker = subquotient_presentation(&inv_quot, &image)?;
    Ok(coker.additive_exponent().unwrap_or_default())
}
