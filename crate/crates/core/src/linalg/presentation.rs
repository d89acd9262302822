use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{big, scalar_string, RingSpec, Scalar};

/// A finitely generated module as a direct sum of cyclic modules `R/(d)`.
/// An annihilator of 0 is a free summand.
#[derive(Clone, Debug, PartialEq)]
pub struct ModulePresentation {
    ring: RingSpec,
    annihilators: Vec<Scalar>,
}

impl ModulePresentation {
    /// Normalizes the given cyclic annihilators into the canonical chain
    /// `d_1 | d_2 | ... | 0 | 0` (trivial factors dropped).
    pub fn new(ring: RingSpec, annihilators: Vec<Scalar>) -> Result<Self> {
        let mut rows = Vec::new();
        let n = annihilators.len();
        for (i, a) in annihilators.iter().enumerate() {
            let a = ring.coerce(a)?;
            let mut row = vec![ring.zero(); n];
            row[i] = a;
            rows.push(row);
        }
        let diag = super::smith::elementary_divisors_of_rows(ring, rows, n);
        let rank = diag.len();
        let mut out: Vec<Scalar> = diag.into_iter().filter(|d| !ring.is_unit(d)).collect();
        out.extend(std::iter::repeat_n(ring.zero(), n - rank));
        Ok(ModulePresentation {
            ring,
            annihilators: out,
        })
    }

    /// Trusted constructor for already-normalized chains.
    pub(crate) fn from_chain(ring: RingSpec, annihilators: Vec<Scalar>) -> Self {
        let p = ModulePresentation { ring, annihilators };
        debug_assert!(p.check_invariants(), "{p:?}");
        p
    }

    pub fn zero(ring: RingSpec) -> Self {
        ModulePresentation {
            ring,
            annihilators: vec![],
        }
    }

    pub fn free(ring: RingSpec, rank: usize) -> Self {
        ModulePresentation {
            ring,
            annihilators: vec![ring.zero(); rank],
        }
    }

    fn check_invariants(&self) -> bool {
        let ring = self.ring;
        let chain = self
            .annihilators
            .windows(2)
            .all(|w| ring.divides(&w[0], &w[1]));
        let nontrivial = self.annihilators.iter().all(|a| !ring.is_unit(a));
        let canonical = self
            .annihilators
            .iter()
            .all(|a| ring.is_canonical(a) && ring.associate(a) == *a);
        let field_ok = ring != RingSpec::Rationals || self.annihilators.iter().all(Zero::is_zero);
        chain && nontrivial && canonical && field_ok
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn annihilators(&self) -> &[Scalar] {
        &self.annihilators
    }

    pub fn is_zero(&self) -> bool {
        self.annihilators.is_empty()
    }

    pub fn free_rank(&self) -> usize {
        self.annihilators.iter().filter(|a| a.is_zero()).count()
    }

    /// Number of cyclic summands; the dimension over a field.
    pub fn num_generators(&self) -> usize {
        self.annihilators.len()
    }

    pub fn torsion(&self) -> Vec<Scalar> {
        self.annihilators
            .iter()
            .filter(|a| !a.is_zero())
            .cloned()
            .collect()
    }

    /// Whether `n` times the module vanishes.
    pub fn is_annihilated_by(&self, n: &BigInt) -> bool {
        let ring = self.ring;
        let n = ring.from_bigint(n.clone());
        self.annihilators.iter().all(|d| {
            if d.is_zero() {
                n.is_zero()
            } else {
                ring.divides(d, &n)
            }
        })
    }

    /// Smallest positive integer `n` with `n·M = 0`, if one exists. Over
    /// `Z/m` a free summand has additive exponent `m`.
    pub fn additive_exponent(&self) -> Option<BigInt> {
        let m = self.ring.modulus();
        let mut acc = BigInt::one();
        for d in &self.annihilators {
            let e = if d.is_zero() {
                m.clone()?
            } else {
                d.to_integer()
            };
            acc = num_integer::Integer::lcm(&acc, &e);
        }
        Some(acc)
    }

    /// Order of the module when finite.
    pub fn order(&self) -> Option<BigInt> {
        let m = self.ring.modulus();
        self.annihilators.iter().try_fold(BigInt::one(), |acc, d| {
            if d.is_zero() {
                m.as_ref().map(|m| acc * m)
            } else {
                Some(acc * d.to_integer())
            }
        })
    }
}

/// Smallest `n > 0` killing the torsion part: the lcm of the nonzero
/// annihilators, `1` when there are none.
pub fn annihilator_exponent(p: &ModulePresentation) -> BigInt {
    RingSpec::lcm_of(p.annihilators())
}

impl fmt::Display for ModulePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let free_name = match self.ring {
            RingSpec::Integers => "Z".to_string(),
            RingSpec::Rationals => "Q".to_string(),
            RingSpec::IntegersMod(m) => format!("Z/{}", m.get()),
        };
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        let a = &self.annihilators;
        while i < a.len() {
            let mut j = i;
            while j < a.len() && a[j] == a[i] {
                j += 1;
            }
            let name = if a[i].is_zero() {
                free_name.clone()
            } else {
                format!("Z/{}", scalar_string(&a[i]))
            };
            let count = j - i;
            if count == 1 {
                parts.push(name);
            } else if name.contains('/') {
                parts.push(format!("({name})^{count}"));
            } else {
                parts.push(format!("{name}^{count}"));
            }
            i = j;
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// JSON-friendly view: annihilators as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationView {
    pub ring: String,
    pub annihilators: Vec<String>,
    pub text: String,
}

impl From<&ModulePresentation> for PresentationView {
    fn from(p: &ModulePresentation) -> Self {
        PresentationView {
            ring: p.ring.to_string(),
            annihilators: p.annihilators.iter().map(scalar_string).collect(),
            text: p.to_string(),
        }
    }
}

/// Reduce `c` modulo the cyclic annihilator `d` into a canonical residue.
pub(crate) fn reduce_mod(ring: RingSpec, c: &Scalar, d: &Scalar) -> Scalar {
    if d.is_zero() {
        return c.clone();
    }
    match ring {
        RingSpec::Rationals => ring.zero(),
        RingSpec::Integers => big(c.to_integer().mod_floor(&d.to_integer().abs())),
        RingSpec::IntegersMod(_) => big(c.to_integer().mod_floor(&d.to_integer())),
    }
}

pub(crate) fn check_same_ring(a: RingSpec, b: RingSpec) -> Result<()> {
    if a != b {
        return Err(Error::RingMismatch(a, b));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    #[test]
    fn exponents() {
        let z = RingSpec::Integers;
        let p = ModulePresentation::new(z, vec![int(0), int(2), int(4)]).unwrap();
        assert_eq!(annihilator_exponent(&p), BigInt::from(4));
        let q = ModulePresentation::new(RingSpec::Rationals, vec![int(0)]).unwrap();
        assert_eq!(annihilator_exponent(&q), BigInt::from(1));
        let r = ModulePresentation::new(z, vec![int(2), int(6)]).unwrap();
        assert_eq!(annihilator_exponent(&r), BigInt::from(6));
    }

    #[test]
    fn normalizes_to_chain() {
        let z = RingSpec::Integers;
        let p = ModulePresentation::new(z, vec![int(0), int(2), int(3), int(1)]).unwrap();
        assert_eq!(p.annihilators(), &[int(6), int(0)]);
        assert_eq!(p.to_string(), "Z/6 + Z");
        let z6 = RingSpec::integers_mod(6).unwrap();
        let p = ModulePresentation::new(z6, vec![int(2), int(0), int(4)]).unwrap();
        assert_eq!(p.annihilators(), &[int(2), int(2), int(0)]);
        assert_eq!(p.order(), Some(BigInt::from(24)));
    }

    #[test]
    fn annihilation_over_mod_rings() {
        let z4 = RingSpec::integers_mod(4).unwrap();
        let p = ModulePresentation::new(z4, vec![int(0), int(2)]).unwrap();
        assert!(p.is_annihilated_by(&BigInt::from(4)));
        assert!(!p.is_annihilated_by(&BigInt::from(2)));
        let z = ModulePresentation::new(RingSpec::Integers, vec![int(0)]).unwrap();
        assert!(!z.is_annihilated_by(&BigInt::from(6)));
    }
}
