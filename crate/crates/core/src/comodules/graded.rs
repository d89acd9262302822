use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::Zero;

use super::{validate_comodule, Comodule};
use crate::error::{Error, Result};
use crate::hopf::{Axiom, HopfAlgebra, Violation};
use crate::ring::{RingSpec, Scalar};

/// Sorted multiset of generator indices.
pub type Monomial = Vec<usize>;

/// A commutative graded comodule algebra `A_0 ⊕ A_1 ⊕ … ⊕ A_cap`, stored
/// degree by degree with an explicit product table.
#[derive(Clone, Debug)]
pub struct GradedComoduleAlgebra {
    parent: Arc<HopfAlgebra>,
    pieces: Vec<Comodule>,
    labels: Vec<Vec<String>>,
    /// `products[i][j][a][b]` lists `(k, c)` with `x_a · y_b = sum c z_k`
    /// for `x_a ∈ A_i`, `y_b ∈ A_j`, `z_k ∈ A_{i+j}`.
    products: Vec<Vec<Vec<Vec<Vec<(usize, Scalar)>>>>>,
    unit: Vec<Scalar>,
}

impl GradedComoduleAlgebra {
    /// The base ring with trivial coaction, concentrated in degree 0.
    pub fn trivial(h: &HopfAlgebra) -> Self {
        let zero = Comodule::trivial(h, 0);
        graded_algebra_from_action(&zero, 0)
    }

    /// `H` itself in degree 0 with coaction `Δ` and its own product.
    pub fn coordinate_ring(h: &HopfAlgebra) -> Self {
        let r = h.rank();
        let table = (0..r)
            .map(|a| (0..r).map(|b| h.mult_terms(a, b).to_vec()).collect())
            .collect();
        GradedComoduleAlgebra {
            parent: Arc::new(h.clone()),
            pieces: vec![Comodule::regular(h)],
            labels: vec![h.labels().to_vec()],
            products: vec![vec![table]],
            unit: h.unit().to_vec(),
        }
    }

    pub fn parent(&self) -> &HopfAlgebra {
        &self.parent
    }

    pub fn ring(&self) -> RingSpec {
        self.parent.ring()
    }

    pub fn cap(&self) -> usize {
        self.pieces.len() - 1
    }

    pub fn piece(&self, degree: usize) -> Result<&Comodule> {
        self.pieces.get(degree).ok_or(Error::DegreeOverflow {
            degree,
            cap: self.cap(),
        })
    }

    pub fn pieces(&self) -> &[Comodule] {
        &self.pieces
    }

    pub fn labels(&self, degree: usize) -> &[String] {
        &self.labels[degree]
    }

    /// The unit of `A_0`.
    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn product_terms(&self, i: usize, a: usize, j: usize, b: usize) -> &[(usize, Scalar)] {
        &self.products[i][j][a][b]
    }

    /// `x · y` for `x ∈ A_i`, `y ∈ A_j`.
    pub fn multiply(&self, i: usize, x: &[Scalar], j: usize, y: &[Scalar]) -> Result<Vec<Scalar>> {
        let target = self.piece(i + j)?.rank();
        let ring = self.ring();
        let mut out = vec![ring.zero(); target];
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let c = ring.mul(xa, yb);
                for (k, e) in &self.products[i][j][a][b] {
                    out[*k] = ring.mul_add(&out[*k], &c, e);
                }
            }
        }
        Ok(out)
    }

    /// Comodule axioms on every piece, products as comodule morphisms,
    /// associativity, commutativity and the unit law, where degrees permit.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out: Vec<Violation> = Vec::new();
        for (d, p) in self.pieces.iter().enumerate() {
            out.extend(validate_comodule(p).into_iter().map(|mut v| {
                v.witness.insert(0, d);
                v
            }));
        }
        let ring = self.ring();
        let r = self.parent.rank();
        let cap = self.cap();
        let basis = |d: usize, a: usize| {
            let mut v = vec![ring.zero(); self.pieces[d].rank()];
            v[a] = ring.one();
            v
        };
        for i in 0..=cap {
            for j in 0..=cap - i {
                for a in 0..self.pieces[i].rank() {
                    for b in 0..self.pieces[j].rank() {
                        let (x, y) = (basis(i, a), basis(j, b));
                        let xy = self.multiply(i, &x, j, &y).expect("in range");
                        if xy != self.multiply(j, &y, i, &x).expect("in range") {
                            out.push(Violation {
                                axiom: Axiom::Commutativity,
                                witness: vec![i, a, j, b],
                            });
                        }
                        // ρ(xy) = ρ(x) ρ(y) in A ⊗ H
                        let lhs = self.pieces[i + j].coact(&xy);
                        let rx = self.pieces[i].coact(&x);
                        let ry = self.pieces[j].coact(&y);
                        let mut rhs = vec![ring.zero(); lhs.len()];
                        for (p, cx) in rx.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                            for (q, cy) in ry.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                                let c = ring.mul(cx, cy);
                                for (k, e) in &self.products[i][j][p / r][q / r] {
                                    for (t, f) in self.parent.mult_terms(p % r, q % r) {
                                        let idx = k * r + t;
                                        rhs[idx] = ring.mul_add(&rhs[idx], &c, &ring.mul(e, f));
                                    }
                                }
                            }
                        }
                        if lhs != rhs {
                            out.push(Violation {
                                axiom: Axiom::CoactionCoassociativity,
                                witness: vec![i, a, j, b],
                            });
                        }
                    }
                }
            }
        }
        for i in 0..=cap {
            for a in 0..self.pieces[i].rank() {
                let x = basis(i, a);
                if self.multiply(0, &self.unit, i, &x).expect("in range") != x {
                    out.push(Violation {
                        axiom: Axiom::UnitLeft,
                        witness: vec![i, a],
                    });
                }
            }
        }
        for i in 0..=cap {
            for j in 0..=cap - i {
                for k in 0..=cap - i - j {
                    for a in 0..self.pieces[i].rank() {
                        for b in 0..self.pieces[j].rank() {
                            for c in 0..self.pieces[k].rank() {
                                let (x, y, z) = (basis(i, a), basis(j, b), basis(k, c));
                                let l = self
                                    .multiply(i + j, &self.multiply(i, &x, j, &y).unwrap(), k, &z)
                                    .unwrap();
                                let rr = self
                                    .multiply(i, &x, j + k, &self.multiply(j, &y, k, &z).unwrap())
                                    .unwrap();
                                if l != rr {
                                    out.push(Violation {
                                        axiom: Axiom::Associativity,
                                        witness: vec![i, a, j, b, k, c],
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// The symmetric algebra on `V`, truncated at degree `cap`, with the
/// coaction induced multiplicatively from `V`. The basis of `A_d` is the
/// degree-`d` monomials in the basis of `V`, in lexicographic order.
pub fn graded_algebra_from_action(v: &Comodule, cap: usize) -> GradedComoduleAlgebra {
    let parent = v.parent_arc().clone();
    let ring = parent.ring();
    let n = v.rank();
    let r = parent.rank();
    let monomials: Vec<Vec<Monomial>> = (0..=cap).map(|d| monomials_of_degree(n, d)).collect();
    let index: Vec<HashMap<Monomial, usize>> = monomials
        .iter()
        .map(|ms| ms.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect())
        .collect();

    let mut pieces = Vec::with_capacity(cap + 1);
    // coaction of each monomial as a map (monomial index, h index) -> coefficient
    let mut prev: Vec<BTreeMap<(usize, usize), Scalar>> = vec![parent
        .unit()
        .iter()
        .enumerate()
        .filter(|(_, u)| !u.is_zero())
        .map(|(i, u)| ((0, i), u.clone()))
        .collect()];
    for d in 0..=cap {
        if d > 0 {
            let mut cur = Vec::with_capacity(monomials[d].len());
            for m in &monomials[d] {
                let (last, head) = m.split_last().expect("positive degree");
                let base = &prev[index[d - 1][&head.to_vec()]];
                let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
                for ((hm, hi), c1) in base {
                    for (b, i, c2) in v.coaction_terms(*last) {
                        let mut key = monomials[d - 1][*hm].clone();
                        let pos = key.partition_point(|x| x <= b);
                        key.insert(pos, *b);
                        let k = index[d][&key];
                        let c = ring.mul(c1, c2);
                        for (t, e) in parent.mult_terms(*hi, *i) {
                            let entry = acc.entry((k, *t)).or_insert_with(Scalar::zero);
                            *entry = ring.mul_add(entry, &c, e);
                        }
                    }
                }
                acc.retain(|_, c| !c.is_zero());
                cur.push(acc);
            }
            prev = cur;
        }
        let terms = prev
            .iter()
            .enumerate()
            .flat_map(|(a, map)| map.iter().map(move |((b, i), c)| (a, *b, *i, c.clone())))
            .collect();
        debug_assert!(prev.iter().all(|m| m.keys().all(|(_, i)| *i < r)));
        pieces.push(
            Comodule::with_parent(parent.clone(), monomials[d].len(), terms).expect("in range"),
        );
    }

    let mut products = Vec::with_capacity(cap + 1);
    for i in 0..=cap {
        let mut row = Vec::with_capacity(cap + 1 - i);
        for j in 0..=cap - i {
            let table = monomials[i]
                .iter()
                .map(|x| {
                    monomials[j]
                        .iter()
                        .map(|y| {
                            let mut z: Monomial = x.iter().chain(y).copied().collect();
                            z.sort_unstable();
                            vec![(index[i + j][&z], ring.one())]
                        })
                        .collect()
                })
                .collect();
            row.push(table);
        }
        products.push(row);
    }
    let labels = monomials
        .iter()
        .map(|ms| {
            ms.iter()
                .map(|m| {
                    if m.is_empty() {
                        "1".to_string()
                    } else {
                        m.iter()
                            .map(|a| format!("v{a}"))
                            .collect::<Vec<_>>()
                            .join("·")
                    }
                })
                .collect()
        })
        .collect();
    GradedComoduleAlgebra {
        parent,
        pieces,
        labels,
        products,
        unit: vec![ring.one()],
    }
}

/// Sorted multisets of size `d` from `0..n`, in lexicographic order.
fn monomials_of_degree(n: usize, d: usize) -> Vec<Monomial> {
    fn go(n: usize, d: usize, start: usize, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for a in start..n {
            cur.push(a);
            go(n, d, a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, d, 0, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{constant_group, CayleyTable};
    use crate::linalg::ExactMatrix;
    use crate::ring::int;

    #[test]
    fn monomial_counts() {
        assert_eq!(
            monomials_of_degree(2, 3),
            vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 1], vec![1, 1, 1]]
        );
        assert_eq!(monomials_of_degree(0, 0), vec![Vec::<usize>::new()]);
        assert!(monomials_of_degree(0, 2).is_empty());
    }

    #[test]
    fn sign_module_powers() {
        let z = RingSpec::Integers;
        let h = constant_group(&CayleyTable::cyclic(2), z);
        let sign = Comodule::from_group_action(
            &h,
            &[
                ExactMatrix::identity(z, 1),
                ExactMatrix::from_ints(z, &[vec![-1]]),
            ],
        )
        .unwrap();
        let a = graded_algebra_from_action(&sign, 4);
        assert!(a.validate().is_empty());
        for d in 0..=4 {
            let p = a.piece(d).unwrap();
            assert_eq!(p.rank(), 1);
            let expected = if d % 2 == 0 { int(1) } else { int(-1) };
            assert_eq!(p.group_act(1, &[int(1)]).unwrap(), vec![expected]);
        }
    }

    #[test]
    fn regular_symmetric_algebra_validates() {
        let h = constant_group(&CayleyTable::cyclic(3), RingSpec::Integers);
        let a = graded_algebra_from_action(&Comodule::regular(&h), 2);
        assert_eq!(a.piece(2).unwrap().rank(), 6);
        assert!(a.validate().is_empty());
        assert!(GradedComoduleAlgebra::coordinate_ring(&h)
            .validate()
            .is_empty());
        assert!(GradedComoduleAlgebra::trivial(&h).validate().is_empty());
    }
}
