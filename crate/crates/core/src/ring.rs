//! Exact base rings: the integers, the integers modulo `m`, and the rationals.
//!
//! All scalars are stored as [`BigRational`]. A scalar is *canonical* for a
//! ring when it is an integer (for `Z`), an integer in `[0, m)` (for `Z/m`),
//! or any reduced fraction (for `Q`). Every operation on [`RingSpec`] returns
//! canonical representatives.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

/// Shorthand for an integral scalar.
pub fn int(v: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(v))
}

pub fn big(v: BigInt) -> Scalar {
    BigRational::from_integer(v)
}

/// Modulus of `Z/m`, always at least 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
        Ok(Modulus(m))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl TryFrom<u64> for Modulus {
    type Error = Error;
    fn try_from(m: u64) -> Result<Self> {
        Modulus::new(m)
    }
}

impl From<Modulus> for u64 {
    fn from(m: Modulus) -> u64 {
        m.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Integers,
    IntegersMod(Modulus),
    Rationals,
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::IntegersMod(m) => write!(f, "Z/{}", m.get()),
            RingSpec::Rationals => write!(f, "Q"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl RingSpec {
    pub fn integers_mod(m: u64) -> Result<Self> {
        Ok(RingSpec::IntegersMod(Modulus::new(m)?))
    }

    /// `Z/p`, checked to be prime.
    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Self::integers_mod(p)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            RingSpec::IntegersMod(m) => m.get(),
            _ => 0,
        }
    }

    pub fn modulus(&self) -> Option<BigInt> {
        match self {
            RingSpec::IntegersMod(m) => Some(BigInt::from(m.get())),
            _ => None,
        }
    }

    pub fn is_field(&self) -> bool {
        match self {
            RingSpec::Integers => false,
            RingSpec::Rationals => true,
            RingSpec::IntegersMod(m) => is_prime(m.get()),
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    pub fn from_int(&self, v: i64) -> Scalar {
        self.from_bigint(BigInt::from(v))
    }

    pub fn from_bigint(&self, v: BigInt) -> Scalar {
        match self {
            RingSpec::IntegersMod(m) => big(v.mod_floor(&BigInt::from(m.get()))),
            _ => big(v),
        }
    }

    /// Map an arbitrary rational into the ring, failing for non-integers
    /// outside `Q` (and for fractions whose denominator is not invertible).
    pub fn coerce(&self, v: &Scalar) -> Result<Scalar> {
        match self {
            RingSpec::Rationals => Ok(v.clone()),
            RingSpec::Integers => {
                if v.is_integer() {
                    Ok(v.clone())
                } else {
                    Err(Error::Parse(format!("{v} is not an integer")))
                }
            }
            RingSpec::IntegersMod(_) => {
                let num = self.from_bigint(v.numer().clone());
                let den = self.from_bigint(v.denom().clone());
                let inv = self
                    .inverse(&den)
                    .ok_or_else(|| Error::Parse(format!("{v} has no image in {self}")))?;
                Ok(self.mul(&num, &inv))
            }
        }
    }

    pub fn is_canonical(&self, v: &Scalar) -> bool {
        match self {
            RingSpec::Rationals => true,
            RingSpec::Integers => v.is_integer(),
            RingSpec::IntegersMod(m) => {
                v.is_integer() && !v.is_negative() && v.numer() < &BigInt::from(m.get())
            }
        }
    }

    fn reduce(&self, v: Scalar) -> Scalar {
        match self {
            RingSpec::IntegersMod(m) => {
                debug_assert!(v.is_integer());
                big(v.to_integer().mod_floor(&BigInt::from(m.get())))
            }
            _ => v,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a - b)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        if a.is_zero() || b.is_zero() {
            return Scalar::zero();
        }
        self.reduce(a * b)
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.reduce(-a)
    }

    /// `a + b * c`
    pub fn mul_add(&self, a: &Scalar, b: &Scalar, c: &Scalar) -> Scalar {
        if b.is_zero() || c.is_zero() {
            return a.clone();
        }
        self.reduce(a + b * c)
    }

    pub fn is_unit(&self, a: &Scalar) -> bool {
        match self {
            RingSpec::Rationals => !a.is_zero(),
            RingSpec::Integers => a.is_integer() && a.numer().magnitude().is_one(),
            RingSpec::IntegersMod(m) => a.numer().gcd(&BigInt::from(m.get())).is_one(),
        }
    }

    pub fn inverse(&self, a: &Scalar) -> Option<Scalar> {
        match self {
            RingSpec::Rationals => (!a.is_zero()).then(|| a.recip()),
            RingSpec::Integers => self.is_unit(a).then(|| a.clone()),
            RingSpec::IntegersMod(m) => {
                let m = BigInt::from(m.get());
                let e = a.numer().extended_gcd(&m);
                e.gcd.is_one().then(|| big(e.x.mod_floor(&m)))
            }
        }
    }

    /// Euclidean-style size used for pivot selection: `|a|` over `Z`,
    /// `gcd(a, m)` over `Z/m`, and `1` for nonzero rationals.
    pub fn size(&self, a: &Scalar) -> BigInt {
        match self {
            RingSpec::Integers => a.numer().abs(),
            RingSpec::IntegersMod(m) => a.numer().gcd(&BigInt::from(m.get())),
            RingSpec::Rationals => {
                if a.is_zero() {
                    BigInt::zero()
                } else {
                    BigInt::one()
                }
            }
        }
    }

    /// Whether `a` divides `b` in the ring.
    pub fn divides(&self, a: &Scalar, b: &Scalar) -> bool {
        if b.is_zero() {
            return true;
        }
        if a.is_zero() {
            return false;
        }
        match self {
            RingSpec::Rationals => true,
            RingSpec::Integers => b.numer().is_multiple_of(a.numer()),
            RingSpec::IntegersMod(_) => b.numer().is_multiple_of(&self.size(a)),
        }
    }

    /// A unit `u` with `u * a` equal to the canonical associate of `a`:
    /// `|a|` over `Z`, `gcd(a, m)` over `Z/m`, `1` over `Q`.
    pub fn normalizing_unit(&self, a: &Scalar) -> Scalar {
        match self {
            RingSpec::Integers => {
                if a.is_negative() {
                    int(-1)
                } else {
                    int(1)
                }
            }
            RingSpec::Rationals => {
                if a.is_zero() {
                    int(1)
                } else {
                    a.recip()
                }
            }
            RingSpec::IntegersMod(m) => {
                let m = BigInt::from(m.get());
                if a.is_zero() {
                    return int(1);
                }
                let g = a.numer().gcd(&m);
                let cofactor = a.numer() / &g;
                let m_g = &m / &g;
                // inverse of cofactor mod m/g, lifted to a unit mod m
                let base = if m_g.is_one() {
                    BigInt::one()
                } else {
                    cofactor.extended_gcd(&m_g).x.mod_floor(&m_g)
                };
                let mut u = base;
                while !u.gcd(&m).is_one() {
                    u += &m_g;
                }
                big(u.mod_floor(&m))
            }
        }
    }

    pub fn associate(&self, a: &Scalar) -> Scalar {
        self.mul(&self.normalizing_unit(a), a)
    }

    /// Division with remainder: `a = q b + r` with `r = 0` or
    /// `size(r) < size(b)`. `b` must be nonzero.
    pub fn div_rem(&self, a: &Scalar, b: &Scalar) -> (Scalar, Scalar) {
        debug_assert!(!b.is_zero());
        match self {
            RingSpec::Rationals => (a / b, Scalar::zero()),
            RingSpec::Integers => {
                // remainder in [0, |b|)
                let (q, r) = a.numer().div_mod_floor(b.numer());
                let (q, r) = if r.is_negative() {
                    (q + 1, r - b.numer())
                } else {
                    (q, r)
                };
                (big(q), big(r))
            }
            RingSpec::IntegersMod(_) => {
                let u = self.normalizing_unit(b);
                let g = self.size(b);
                let qf = a.numer().div_floor(&g);
                let q = self.mul(&big(qf), &u);
                let r = self.sub(a, &self.mul(&q, b));
                (q, r)
            }
        }
    }

    /// Exact quotient `b / a` when `a` divides `b`.
    pub fn div_exact(&self, b: &Scalar, a: &Scalar) -> Option<Scalar> {
        if b.is_zero() {
            return Some(Scalar::zero());
        }
        if !self.divides(a, b) {
            return None;
        }
        let (q, r) = self.div_rem(b, a);
        debug_assert!(r.is_zero());
        Some(q)
    }

    /// Unimodular 2x2 combination `[[s, t], [x, y]]` with `s a + t b = g`
    /// (a generator of the ideal `(a, b)`) and `x a + y b = 0`.
    pub fn gcd_matrix(&self, a: &Scalar, b: &Scalar) -> [Scalar; 4] {
        match self {
            RingSpec::Rationals => {
                if a.is_zero() {
                    [int(0), int(1), int(1), int(0)]
                } else {
                    [int(1), int(0), -(b / a), int(1)]
                }
            }
            _ => {
                if !a.is_zero() && b.numer().is_multiple_of(a.numer()) {
                    let q = b.numer() / a.numer();
                    return [int(1), int(0), self.from_bigint(-q), int(1)];
                }
                let e = a.numer().extended_gcd(b.numer());
                if e.gcd.is_zero() {
                    return [int(1), int(0), int(0), int(1)];
                }
                let x = -(b.numer() / &e.gcd);
                let y = a.numer() / &e.gcd;
                [
                    self.from_bigint(e.x),
                    self.from_bigint(e.y),
                    self.from_bigint(x),
                    self.from_bigint(y),
                ]
            }
        }
    }

    /// Least common multiple of nonzero integral scalars as a positive integer.
    pub fn lcm_of<'a>(values: impl IntoIterator<Item = &'a Scalar>) -> BigInt {
        values
            .into_iter()
            .filter(|v| !v.is_zero())
            .fold(BigInt::one(), |acc, v| acc.lcm(&v.to_integer().abs()))
    }

    /// Parse a scalar from its decimal form (`"-3"`, or `"2/3"` over `Q`).
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let v = if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad scalar {s:?}")))?;
            let d: BigInt = d
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad scalar {s:?}")))?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            BigRational::new(n, d)
        } else {
            big(s
                .parse()
                .map_err(|_| Error::Parse(format!("bad scalar {s:?}")))?)
        };
        self.coerce(&v)
    }
}

/// Render a scalar as a decimal string (`"3"`, `"-1/2"`).
pub fn scalar_string(v: &Scalar) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

pub fn to_u64(v: &BigInt) -> Option<u64> {
    v.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zm(m: u64) -> RingSpec {
        RingSpec::integers_mod(m).unwrap()
    }

    #[test]
    fn modulus_must_be_at_least_two() {
        assert!(RingSpec::integers_mod(1).is_err());
        assert!(RingSpec::integers_mod(0).is_err());
        assert_eq!(zm(6).characteristic(), 6);
        assert_eq!(RingSpec::Integers.characteristic(), 0);
        assert_eq!(RingSpec::Rationals.characteristic(), 0);
    }

    #[test]
    fn mod_arithmetic_is_canonical() {
        let r = zm(6);
        assert_eq!(r.sub(&int(1), &int(4)), int(3));
        assert_eq!(r.neg(&int(2)), int(4));
        assert_eq!(r.from_int(-7), int(5));
        assert!(r.is_canonical(&int(5)));
        assert!(!r.is_canonical(&int(6)));
    }

    #[test]
    fn normalizing_unit_mod_m() {
        let r = zm(12);
        for a in 1..12 {
            let a = int(a);
            let u = r.normalizing_unit(&a);
            assert!(r.is_unit(&u));
            assert_eq!(r.mul(&u, &a), big(r.size(&a)));
        }
    }

    #[test]
    fn div_rem_decreases_size() {
        let r = zm(12);
        for a in 0..12 {
            for b in 1..12 {
                let (q, rem) = r.div_rem(&int(a), &int(b));
                assert_eq!(r.add(&r.mul(&q, &int(b)), &rem), int(a));
                assert!(rem.is_zero() || r.size(&rem) < r.size(&int(b)));
            }
        }
        let (q, rem) = RingSpec::Integers.div_rem(&int(-7), &int(-3));
        assert_eq!(q * int(-3) + &rem, int(-7));
        assert!(rem >= int(0) && rem < int(3));
    }

    #[test]
    fn gcd_matrix_is_unimodular() {
        for ring in [RingSpec::Integers, zm(6), RingSpec::Rationals] {
            for (a, b) in [(4, 6), (3, 2), (0, 5), (5, 0)] {
                let (a, b) = (ring.from_int(a), ring.from_int(b));
                let [s, t, x, y] = ring.gcd_matrix(&a, &b);
                let g = ring.add(&ring.mul(&s, &a), &ring.mul(&t, &b));
                assert!(ring.divides(&g, &a) && ring.divides(&g, &b));
                assert!(ring.add(&ring.mul(&x, &a), &ring.mul(&y, &b)).is_zero());
                let det = ring.sub(&ring.mul(&s, &y), &ring.mul(&t, &x));
                assert!(ring.is_unit(&det), "{ring} {a} {b}");
            }
        }
    }

    #[test]
    fn parse_scalars() {
        assert_eq!(
            RingSpec::Rationals.parse_scalar("-2/4").unwrap(),
            BigRational::new(BigInt::from(-1), BigInt::from(2))
        );
        assert_eq!(zm(5).parse_scalar("1/2").unwrap(), int(3));
        assert!(RingSpec::Integers.parse_scalar("1/2").is_err());
        assert!(RingSpec::Integers.parse_scalar("abc").is_err());
    }
}
