use std::fmt;

use num_traits::Zero;

use super::{Flavor, HopfAlgebra};
use crate::ring::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Associativity,
    UnitLeft,
    UnitRight,
    Coassociativity,
    CounitLeft,
    CounitRight,
    ComultMultiplicative,
    ComultUnital,
    CounitMultiplicative,
    CounitUnital,
    AntipodeLeft,
    AntipodeRight,
    Commutativity,
    AntipodeInvolution,
    /// Comodule axiom `(id ⊗ ε) ρ = id`.
    CoactionCounit,
    /// Comodule axiom `(id ⊗ Δ) ρ = (ρ ⊗ id) ρ`.
    CoactionCoassociativity,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Associativity => "associativity",
            Axiom::UnitLeft => "unit-left",
            Axiom::UnitRight => "unit-right",
            Axiom::Coassociativity => "coassociativity",
            Axiom::CounitLeft => "counit-left",
            Axiom::CounitRight => "counit-right",
            Axiom::ComultMultiplicative => "comult-multiplicative",
            Axiom::ComultUnital => "comult-unital",
            Axiom::CounitMultiplicative => "counit-multiplicative",
            Axiom::CounitUnital => "counit-unital",
            Axiom::AntipodeLeft => "antipode-identity-left",
            Axiom::AntipodeRight => "antipode-identity-right",
            Axiom::Commutativity => "commutativity",
            Axiom::AntipodeInvolution => "antipode-involution",
            Axiom::CoactionCounit => "coaction-counit",
            Axiom::CoactionCoassociativity => "coaction-coassociativity",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A failed axiom together with the basis indices at which it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.witness.iter().map(usize::to_string).collect();
        write!(f, "{} fails at ({})", self.axiom, w.join(", "))
    }
}

/// Check every Hopf algebra axiom exactly. The result is empty iff all hold.
///
/// Only the first witness of each axiom is reported.
pub fn validate(h: &HopfAlgebra) -> Vec<Violation> {
    let r = h.rank();
    let ring = h.ring();
    let mut out = Vec::new();
    let mut report = |axiom: Axiom, witness: Vec<usize>| {
        if !out.iter().any(|v: &Violation| v.axiom == axiom) {
            out.push(Violation { axiom, witness });
        }
    };
    let e: Vec<Vec<Scalar>> = (0..r).map(|i| h.basis(i)).collect();
    let products: Vec<Vec<Vec<Scalar>>> = (0..r)
        .map(|i| (0..r).map(|j| h.multiply(&e[i], &e[j])).collect())
        .collect();
    let coproducts: Vec<Vec<Scalar>> = (0..r).map(|i| h.comultiply(&e[i])).collect();

    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                if h.multiply(&products[i][j], &e[k]) != h.multiply(&e[i], &products[j][k]) {
                    report(Axiom::Associativity, vec![i, j, k]);
                }
            }
        }
    }
    for i in 0..r {
        if h.multiply(h.unit(), &e[i]) != e[i] {
            report(Axiom::UnitLeft, vec![i]);
        }
        if h.multiply(&e[i], h.unit()) != e[i] {
            report(Axiom::UnitRight, vec![i]);
        }
    }

    for i in 0..r {
        // (Δ ⊗ id)Δ and (id ⊗ Δ)Δ as vectors indexed by (a, b, c)
        let mut left = vec![ring.zero(); r * r * r];
        let mut right = vec![ring.zero(); r * r * r];
        for (j, k, c) in h.comult_terms(i) {
            for (a, b, d) in h.comult_terms(*j) {
                let idx = (a * r + b) * r + k;
                left[idx] = ring.mul_add(&left[idx], c, d);
            }
            for (a, b, d) in h.comult_terms(*k) {
                let idx = (j * r + a) * r + b;
                right[idx] = ring.mul_add(&right[idx], c, d);
            }
        }
        if left != right {
            report(Axiom::Coassociativity, vec![i]);
        }
        let mut cl = vec![ring.zero(); r];
        let mut cr = vec![ring.zero(); r];
        for (j, k, c) in h.comult_terms(i) {
            cl[*k] = ring.mul_add(&cl[*k], c, &h.counit()[*j]);
            cr[*j] = ring.mul_add(&cr[*j], c, &h.counit()[*k]);
        }
        if cl != e[i] {
            report(Axiom::CounitLeft, vec![i]);
        }
        if cr != e[i] {
            report(Axiom::CounitRight, vec![i]);
        }
    }

    for i in 0..r {
        for j in 0..r {
            let lhs = h.comultiply(&products[i][j]);
            let rhs = tensor_product(h, &coproducts[i], &coproducts[j]);
            if lhs != rhs {
                report(Axiom::ComultMultiplicative, vec![i, j]);
            }
            let eps = h.apply_counit(&products[i][j]);
            if eps != ring.mul(&h.counit()[i], &h.counit()[j]) {
                report(Axiom::CounitMultiplicative, vec![i, j]);
            }
        }
    }
    let unit_sq = {
        let mut v = vec![ring.zero(); r * r];
        for (a, x) in h.unit().iter().enumerate() {
            for (b, y) in h.unit().iter().enumerate() {
                v[a * r + b] = ring.mul(x, y);
            }
        }
        v
    };
    if h.comultiply(h.unit()) != unit_sq {
        report(Axiom::ComultUnital, vec![]);
    }
    if h.apply_counit(h.unit()) != ring.one() {
        report(Axiom::CounitUnital, vec![]);
    }

    for i in 0..r {
        let mut left = vec![ring.zero(); r];
        let mut right = vec![ring.zero(); r];
        for (j, k, c) in h.comult_terms(i) {
            let sj = h.apply_antipode(&e[*j]);
            let sk = h.apply_antipode(&e[*k]);
            for (t, x) in h.multiply(&sj, &e[*k]).iter().enumerate() {
                left[t] = ring.mul_add(&left[t], c, x);
            }
            for (t, x) in h.multiply(&e[*j], &sk).iter().enumerate() {
                right[t] = ring.mul_add(&right[t], c, x);
            }
        }
        let expected: Vec<Scalar> = h
            .unit()
            .iter()
            .map(|u| ring.mul(u, &h.counit()[i]))
            .collect();
        if left != expected {
            report(Axiom::AntipodeLeft, vec![i]);
        }
        if right != expected {
            report(Axiom::AntipodeRight, vec![i]);
        }
    }

    if h.flavor() == Flavor::CoordinateRing {
        for i in 0..r {
            for j in i + 1..r {
                if products[i][j] != products[j][i] {
                    report(Axiom::Commutativity, vec![i, j]);
                }
            }
        }
    }
    for i in 0..r {
        if h.apply_antipode(&h.antipode().column(i)) != e[i] {
            report(Axiom::AntipodeInvolution, vec![i]);
        }
    }
    out.sort_by_key(|v| v.axiom);
    out
}

/// Product in `H ⊗ H` of two vectors indexed by `a * r + b`.
pub(crate) fn tensor_product(h: &HopfAlgebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let r = h.rank();
    let ring = h.ring();
    let mut out = vec![ring.zero(); r * r];
    for (p, xv) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        for (q, yv) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let c = ring.mul(xv, yv);
            let (a, b) = (p / r, p % r);
            let (a2, b2) = (q / r, q % r);
            for (s, c1) in h.mult_terms(a, a2) {
                for (t, c2) in h.mult_terms(b, b2) {
                    let idx = s * r + t;
                    out[idx] = ring.mul_add(&out[idx], &c, &ring.mul(c1, c2));
                }
            }
        }
    }
    out
}
