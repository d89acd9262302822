use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::cup::{cup, AlgebraCochain};
use super::{build_complex, cohomology_with_representatives};
use crate::comodules::GradedComoduleAlgebra;
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{
    elementary_divisors, reduce_mod, solve, ExactMatrix, ModulePresentation, Subquotient,
};
use crate::ring::{RingSpec, Scalar};

/// A basis class: the `index`-th cyclic generator of `H^degree(G, A_internal)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ClassId {
    pub degree: usize,
    pub internal: usize,
    pub index: usize,
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]#{}", self.degree, self.internal, self.index)
    }
}

#[derive(Clone, Debug)]
struct Cell {
    quotient: Subquotient,
}

/// The bigraded table `H^i(G, A_j)` for `i ≤ D`, `j ≤ cap`, with chosen
/// representative cocycles and the products of all basis classes.
#[derive(Clone, Debug)]
pub struct CohomologyRingTable {
    ring: RingSpec,
    max_degree: usize,
    cap: usize,
    cells: BTreeMap<(usize, usize), Cell>,
    products: BTreeMap<(ClassId, ClassId), Vec<Scalar>>,
    unit: Vec<Scalar>,
}

/// Compute every cell of the bigraded table and the cup products of the
/// representative cocycles, reduced to coordinates.
pub fn cohomology_ring(
    h: &HopfAlgebra,
    a: &GradedComoduleAlgebra,
    max_degree: usize,
) -> Result<CohomologyRingTable> {
    if h != a.parent() {
        return Err(Error::ParentMismatch);
    }
    let cap = a.cap();
    let ring = h.ring();
    let complexes = (0..=cap)
        .map(|j| build_complex(h, a.piece(j)?, max_degree))
        .collect::<Result<Vec<_>>>()?;
    let keys: Vec<(usize, usize)> = (0..=max_degree)
        .flat_map(|i| (0..=cap).map(move |j| (i, j)))
        .collect();
    let cells: BTreeMap<(usize, usize), Cell> = keys
        .par_iter()
        .map(|&(i, j)| {
            Ok((
                (i, j),
                Cell {
                    quotient: cohomology_with_representatives(&complexes[j], i)?,
                },
            ))
        })
        .collect::<Result<_>>()?;

    let classes: Vec<ClassId> = cells
        .iter()
        .flat_map(|(&(degree, internal), c)| {
            (0..c.quotient.generators().len()).map(move |index| ClassId {
                degree,
                internal,
                index,
            })
        })
        .collect();
    let rep = |c: &ClassId| AlgebraCochain {
        degree: c.degree,
        internal: c.internal,
        coeffs: cells[&(c.degree, c.internal)].quotient.generators()[c.index].clone(),
    };
    let pairs: Vec<(ClassId, ClassId)> = classes
        .iter()
        .flat_map(|x| classes.iter().map(move |y| (*x, *y)))
        .filter(|(x, y)| x.degree + y.degree <= max_degree && x.internal + y.internal <= cap)
        .collect();
    let products = pairs
        .par_iter()
        .map(|(x, y)| {
            let z = cup(a, &rep(x), &rep(y))?;
            let coords = cells[&(z.degree, z.internal)]
                .quotient
                .coordinates(&z.coeffs)?;
            Ok(((*x, *y), coords))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;
    let unit = cells[&(0, 0)].quotient.coordinates(a.unit())?;
    Ok(CohomologyRingTable {
        ring,
        max_degree,
        cap,
        cells,
        products,
        unit,
    })
}

impl CohomologyRingTable {
    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn presentation(&self, degree: usize, internal: usize) -> Option<&ModulePresentation> {
        self.cells
            .get(&(degree, internal))
            .map(|c| c.quotient.presentation())
    }

    /// Representative cocycles of the basis classes of `H^degree(G, A_internal)`.
    pub fn representatives(&self, degree: usize, internal: usize) -> Option<&[Vec<Scalar>]> {
        self.cells
            .get(&(degree, internal))
            .map(|c| c.quotient.generators())
    }

    /// Coordinates of a cocycle in the basis classes of its cell.
    pub fn coordinates(
        &self,
        degree: usize,
        internal: usize,
        cocycle: &[Scalar],
    ) -> Result<Vec<Scalar>> {
        let cell = self
            .cells
            .get(&(degree, internal))
            .ok_or(Error::DegreeOverflow {
                degree,
                cap: self.max_degree,
            })?;
        cell.quotient.coordinates(cocycle)
    }

    pub fn classes(&self) -> Vec<ClassId> {
        self.cells
            .iter()
            .flat_map(|(&(degree, internal), c)| {
                (0..c.quotient.generators().len()).map(move |index| ClassId {
                    degree,
                    internal,
                    index,
                })
            })
            .collect()
    }

    /// Coordinates of `x · y`, or `None` outside the table.
    pub fn product(&self, x: ClassId, y: ClassId) -> Option<&[Scalar]> {
        self.products.get(&(x, y)).map(Vec::as_slice)
    }

    pub fn products(&self) -> impl Iterator<Item = (&(ClassId, ClassId), &Vec<Scalar>)> {
        self.products.iter()
    }

    /// Coordinates of the unit class in `H^0(G, A_0)`.
    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    fn annihilators(&self, b: (usize, usize)) -> &[Scalar] {
        self.cells[&b].quotient.presentation().annihilators()
    }

    fn reduce(&self, b: (usize, usize), v: Vec<Scalar>) -> Vec<Scalar> {
        let ring = self.ring;
        v.into_iter()
            .zip(self.annihilators(b))
            .map(|(c, d)| reduce_mod(ring, &c, d))
            .collect()
    }

    /// Product of two elements given by coordinates in their cells.
    pub fn multiply(
        &self,
        bx: (usize, usize),
        x: &[Scalar],
        by: (usize, usize),
        y: &[Scalar],
    ) -> Option<Vec<Scalar>> {
        let bz = (bx.0 + by.0, bx.1 + by.1);
        if bz.0 > self.max_degree || bz.1 > self.cap {
            return None;
        }
        let ring = self.ring;
        let mut out = vec![ring.zero(); self.annihilators(bz).len()];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let p = &self.products[&(
                    ClassId {
                        degree: bx.0,
                        internal: bx.1,
                        index: i,
                    },
                    ClassId {
                        degree: by.0,
                        internal: by.1,
                        index: j,
                    },
                )];
                let c = ring.mul(xi, yj);
                for (k, pk) in p.iter().enumerate() {
                    out[k] = ring.mul_add(&out[k], &c, pk);
                }
            }
        }
        Some(self.reduce(bz, out))
    }

    fn basis(&self, c: ClassId) -> Vec<Scalar> {
        let n = self.annihilators((c.degree, c.internal)).len();
        let mut v = vec![self.ring.zero(); n];
        v[c.index] = self.ring.one();
        v
    }

    /// `x · y = (−1)^{pq} y · x` for all basis classes where both sides exist.
    pub fn is_graded_commutative(&self) -> bool {
        let ring = self.ring;
        self.products.iter().all(|((x, y), xy)| {
            let yx = &self.products[&(*y, *x)];
            let sign = if (x.degree * y.degree) % 2 == 0 {
                ring.one()
            } else {
                ring.neg(&ring.one())
            };
            let yx: Vec<Scalar> = yx.iter().map(|c| ring.mul(c, &sign)).collect();
            self.reduce((x.degree + y.degree, x.internal + y.internal), yx) == *xy
        })
    }

    /// `(x y) z = x (y z)` for all basis classes where both sides exist.
    pub fn is_associative(&self) -> bool {
        let classes = self.classes();
        let b = |c: &ClassId| (c.degree, c.internal);
        classes.iter().all(|x| {
            classes.iter().all(|y| {
                classes.iter().all(|z| {
                    let Some(xy) = self.multiply(b(x), &self.basis(*x), b(y), &self.basis(*y))
                    else {
                        return true;
                    };
                    let Some(yz) = self.multiply(b(y), &self.basis(*y), b(z), &self.basis(*z))
                    else {
                        return true;
                    };
                    let bxy = (x.degree + y.degree, x.internal + y.internal);
                    let byz = (y.degree + z.degree, y.internal + z.internal);
                    match (
                        self.multiply(bxy, &xy, b(z), &self.basis(*z)),
                        self.multiply(b(x), &self.basis(*x), byz, &yz),
                    ) {
                        (Some(l), Some(r)) => l == r,
                        _ => true,
                    }
                })
            })
        })
    }

    /// Whether `v` lies in the span of `span` inside the cell `b`.
    fn in_span(&self, b: (usize, usize), span: &[Vec<Scalar>], v: &[Scalar]) -> bool {
        let m = self.span_matrix(b, span);
        let target = ExactMatrix::from_columns(self.ring, v.len(), &[v.to_vec()]);
        solve(&m, &target).is_some()
    }

    fn span_matrix(&self, b: (usize, usize), span: &[Vec<Scalar>]) -> ExactMatrix {
        let ann = self.annihilators(b);
        let n = ann.len();
        let mut cols: Vec<Vec<Scalar>> = span.to_vec();
        for (k, d) in ann.iter().enumerate().filter(|(_, d)| !d.is_zero()) {
            let mut c = vec![self.ring.zero(); n];
            c[k] = d.clone();
            cols.push(c);
        }
        ExactMatrix::from_columns(self.ring, n, &cols)
    }

    fn spans_cell(&self, b: (usize, usize), span: &[Vec<Scalar>]) -> bool {
        let n = self.annihilators(b).len();
        if n == 0 {
            return true;
        }
        let divisors = elementary_divisors(&self.span_matrix(b, span));
        divisors.len() == n && divisors.iter().all(|d| self.ring.is_unit(d))
    }

    /// The subalgebra spanned by the unit and all products of `generators`,
    /// cell by cell.
    fn closure(&self, generators: &[ClassId]) -> BTreeMap<(usize, usize), Vec<Vec<Scalar>>> {
        let mut span: BTreeMap<(usize, usize), Vec<Vec<Scalar>>> = BTreeMap::new();
        let mut work: Vec<((usize, usize), Vec<Scalar>)> = Vec::new();
        let offer = |span: &mut BTreeMap<(usize, usize), Vec<Vec<Scalar>>>,
                     work: &mut Vec<((usize, usize), Vec<Scalar>)>,
                     b: (usize, usize),
                     v: Vec<Scalar>| {
            let s = span.entry(b).or_default();
            if v.iter().all(Zero::is_zero) || self.in_span(b, s, &v) {
                return;
            }
            s.push(v.clone());
            work.push((b, v));
        };
        offer(&mut span, &mut work, (0, 0), self.unit.clone());
        while let Some((b, x)) = work.pop() {
            for g in generators {
                let bg = (g.degree, g.internal);
                if let Some(z) = self.multiply(b, &x, bg, &self.basis(*g)) {
                    offer(&mut span, &mut work, (b.0 + bg.0, b.1 + bg.1), z);
                }
            }
        }
        span
    }

    fn generated_by(&self, generators: &[ClassId]) -> bool {
        let span = self.closure(generators);
        self.cells
            .keys()
            .all(|b| self.spans_cell(*b, span.get(b).map(Vec::as_slice).unwrap_or(&[])))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GenerationReport {
    /// Smallest `g` such that classes of degree at most `g` generate the
    /// table, or `None` if the table is not generated within itself.
    pub degree: Option<usize>,
    /// A generating set of classes of degree at most `degree`, chosen
    /// greedily in class order.
    pub witnesses: Vec<ClassId>,
    pub max_degree: usize,
    pub cap: usize,
}

impl fmt::Display for GenerationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree {
            Some(g) => write!(f, "generated in degree <= {g}")?,
            None => write!(f, "not generated within the table")?,
        }
        write!(
            f,
            " (up to degree {}, internal degree cap {})",
            self.max_degree, self.cap
        )
    }
}

/// Smallest `g` such that the classes of cohomological degree `≤ g` (of any
/// internal degree) generate every computed cell as an algebra.
pub fn generation_degree(t: &CohomologyRingTable) -> GenerationReport {
    let classes = t.classes();
    for g in 0..=t.max_degree {
        let candidates: Vec<ClassId> = classes.iter().copied().filter(|c| c.degree <= g).collect();
        if !t.generated_by(&candidates) {
            continue;
        }
        let mut witnesses: Vec<ClassId> = Vec::new();
        for c in &candidates {
            let span = t.closure(&witnesses);
            let b = (c.degree, c.internal);
            let s = span.get(&b).map(Vec::as_slice).unwrap_or(&[]);
            if !t.in_span(b, s, &t.basis(*c)) {
                witnesses.push(*c);
            }
        }
        return GenerationReport {
            degree: Some(g),
            witnesses,
            max_degree: t.max_degree,
            cap: t.cap,
        };
    }
    GenerationReport {
        degree: None,
        witnesses: Vec::new(),
        max_degree: t.max_degree,
        cap: t.cap,
    }
}
