use num_bigint::BigInt;
use num_traits::Zero;

use super::{validate, CayleyTable, Flavor, HopfAlgebra, StructureConstants};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::ring::{is_prime, RingSpec, Scalar};

/// Coordinate ring of the constant group scheme on `table`: functions on the
/// group with basis the indicator functions `e_g`.
pub fn constant_group(table: &CayleyTable, ring: RingSpec) -> HopfAlgebra {
    let n = table.order();
    let one = ring.one();
    let mut antipode = ExactMatrix::zeros(ring, n, n);
    for g in 0..n {
        antipode.set(table.inverse(g), g, one.clone());
    }
    let mut comult = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            comult.push((table.mul(a, b), a, b, one.clone()));
        }
    }
    let sc = StructureConstants {
        labels: table.names().iter().map(|s| format!("e_{s}")).collect(),
        mult: (0..n).map(|g| (g, g, g, one.clone())).collect(),
        unit: vec![one.clone(); n],
        comult,
        counit: (0..n)
            .map(|g| {
                if g == table.identity() {
                    ring.one()
                } else {
                    ring.zero()
                }
            })
            .collect(),
        antipode,
    };
    HopfAlgebra::from_constants(ring, format!("constant group of order {n}"), sc)
        .expect("well-formed constants")
        .with_group(Some(table.clone()))
}

/// `k[x]/(x^n - 1)` with `x` grouplike.
pub fn mu_n(n: usize, ring: RingSpec) -> Result<HopfAlgebra> {
    if n == 0 {
        return Err(Error::Dimension("mu_n needs n >= 1".into()));
    }
    let one = ring.one();
    let mut antipode = ExactMatrix::zeros(ring, n, n);
    for i in 0..n {
        antipode.set((n - i) % n, i, one.clone());
    }
    let sc = StructureConstants {
        labels: power_labels(n),
        mult: (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j, (i + j) % n)))
            .map(|(i, j, k)| (i, j, k, one.clone()))
            .collect(),
        unit: basis_vector(ring, n, 0),
        comult: (0..n).map(|i| (i, i, i, one.clone())).collect(),
        counit: vec![one.clone(); n],
        antipode,
    };
    HopfAlgebra::from_constants(ring, format!("mu_{n}"), sc)
}

/// `k[x]/(x^p)` with `x` primitive, over a ring of characteristic `p`.
pub fn alpha_p(p: u64, ring: RingSpec) -> Result<HopfAlgebra> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if ring.characteristic() != p {
        return Err(Error::Characteristic {
            expected: p,
            found: ring.characteristic(),
        });
    }
    let n = p as usize;
    let one = ring.one();
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n - i {
            mult.push((i, j, i + j, one.clone()));
        }
    }
    let mut comult = Vec::new();
    for k in 0..n {
        let mut binom = BigInt::from(1);
        for i in 0..=k {
            comult.push((k, i, k - i, ring.from_bigint(binom.clone())));
            binom = binom * BigInt::from(k - i) / BigInt::from(i + 1);
        }
    }
    let mut antipode = ExactMatrix::zeros(ring, n, n);
    for k in 0..n {
        antipode.set(
            k,
            k,
            if k % 2 == 0 {
                one.clone()
            } else {
                ring.neg(&one)
            },
        );
    }
    let sc = StructureConstants {
        labels: power_labels(n),
        mult,
        unit: basis_vector(ring, n, 0),
        comult,
        counit: basis_vector(ring, n, 0),
        antipode,
    };
    HopfAlgebra::from_constants(ring, format!("alpha_{p}"), sc)
}

/// Tensor product Hopf algebra; `e_a ⊗ e_b` has index `a * rank(h2) + b`.
pub fn direct_product(h1: &HopfAlgebra, h2: &HopfAlgebra) -> Result<HopfAlgebra> {
    let ring = h1.ring();
    if h2.ring() != ring {
        return Err(Error::RingMismatch(ring, h2.ring()));
    }
    let (r1, r2) = (h1.rank(), h2.rank());
    let idx = |a: usize, b: usize| a * r2 + b;
    let mut mult = Vec::new();
    for (i1, j1, k1, c1) in h1.mult_triples() {
        for (i2, j2, k2, c2) in h2.mult_triples() {
            mult.push((idx(i1, i2), idx(j1, j2), idx(k1, k2), ring.mul(&c1, &c2)));
        }
    }
    let mut comult = Vec::new();
    for (i1, j1, k1, c1) in h1.comult_triples() {
        for (i2, j2, k2, c2) in h2.comult_triples() {
            comult.push((idx(i1, i2), idx(j1, j2), idx(k1, k2), ring.mul(&c1, &c2)));
        }
    }
    let outer = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> {
        x.iter()
            .flat_map(|a| y.iter().map(move |b| ring.mul(a, b)))
            .collect()
    };
    let mut antipode = ExactMatrix::zeros(ring, r1 * r2, r1 * r2);
    for a in 0..r1 {
        for b in 0..r1 {
            let s1 = h1.antipode().get(a, b);
            if s1.is_zero() {
                continue;
            }
            for c in 0..r2 {
                for d in 0..r2 {
                    let s2 = h2.antipode().get(c, d);
                    if !s2.is_zero() {
                        antipode.set(idx(a, c), idx(b, d), ring.mul(s1, s2));
                    }
                }
            }
        }
    }
    let group = match (h1.group(), h2.group()) {
        (Some(g1), Some(g2)) => Some(g1.product(g2)),
        _ => None,
    };
    let labels = match &group {
        Some(g) => g.names().iter().map(|s| format!("e_{s}")).collect(),
        None => h1
            .labels()
            .iter()
            .flat_map(|a| h2.labels().iter().map(move |b| format!("{a}⊗{b}")))
            .collect(),
    };
    let sc = StructureConstants {
        labels,
        mult,
        unit: outer(h1.unit(), h2.unit()),
        comult,
        counit: outer(h1.counit(), h2.counit()),
        antipode,
    };
    let flavor = if h1.flavor() == Flavor::CoordinateRing && h2.flavor() == Flavor::CoordinateRing {
        Flavor::CoordinateRing
    } else {
        Flavor::MeasureAlgebra
    };
    Ok(
        HopfAlgebra::from_constants(ring, format!("{} x {}", h1.name(), h2.name()), sc)?
            .with_flavor(flavor)
            .with_group(group),
    )
}

/// Extension of scalars from `Z` to `Z/m` or `Q`.
pub fn base_change(h: &HopfAlgebra, target: RingSpec) -> Result<HopfAlgebra> {
    if h.ring() != RingSpec::Integers || target == RingSpec::Integers {
        return Err(Error::UnsupportedBaseChange {
            from: h.ring(),
            to: target,
        });
    }
    let map = |v: &[Scalar]| {
        v.iter()
            .map(|x| target.coerce(x))
            .collect::<Result<Vec<_>>>()
    };
    let map4 = |t: Vec<(usize, usize, usize, Scalar)>| {
        t.into_iter()
            .map(|(i, j, k, c)| Ok((i, j, k, target.coerce(&c)?)))
            .collect::<Result<Vec<_>>>()
    };
    let sc = h.constants();
    let sc = StructureConstants {
        labels: sc.labels,
        mult: map4(sc.mult)?,
        unit: map(&sc.unit)?,
        comult: map4(sc.comult)?,
        counit: map(&sc.counit)?,
        antipode: sc.antipode.base_change(target)?,
    };
    Ok(HopfAlgebra::from_constants(target, h.name(), sc)?
        .with_flavor(h.flavor())
        .with_group(h.group_table().cloned()))
}

/// The dual Hopf algebra on the dual basis `e^i`: convolution product, unit
/// `ε`, counit evaluation at `1`, antipode the transpose of `S`.
///
/// Dualizing twice gives back the original structure constants, labels,
/// name and flavor.
pub fn dual(h: &HopfAlgebra) -> Result<HopfAlgebra> {
    let violations = validate(h);
    if !violations.is_empty() {
        return Err(Error::InvalidHopf(violations));
    }
    let flip = |s: &str| match s.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{s}*"),
    };
    let name = match h
        .name()
        .strip_prefix("dual(")
        .and_then(|s| s.strip_suffix(')'))
    {
        Some(inner) => inner.to_string(),
        None => format!("dual({})", h.name()),
    };
    let sc = StructureConstants {
        labels: h.labels().iter().map(|l| flip(l)).collect(),
        mult: h
            .comult_triples()
            .into_iter()
            .map(|(k, i, j, c)| (i, j, k, c))
            .collect(),
        unit: h.counit().to_vec(),
        comult: h
            .mult_triples()
            .into_iter()
            .map(|(i, j, k, c)| (k, i, j, c))
            .collect(),
        counit: h.unit().to_vec(),
        antipode: h.antipode().transpose(),
    };
    let flavor = match h.flavor() {
        Flavor::CoordinateRing => Flavor::MeasureAlgebra,
        Flavor::MeasureAlgebra => Flavor::CoordinateRing,
    };
    Ok(HopfAlgebra::from_constants(h.ring(), name, sc)?
        .with_flavor(flavor)
        .with_group(h.group_table().cloned()))
}

fn power_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect()
}

fn basis_vector(ring: RingSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![ring.zero(); n];
    v[i] = ring.one();
    v
}
