//! Independent group-cohomology computations for constant groups: the
//! inhomogeneous bar complex, and the periodic resolution of a cyclic group.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::comodules::Comodule;
use crate::error::{Error, Result};
use crate::hopf::CayleyTable;
use crate::linalg::sparse::SparseMatrix;
use crate::linalg::{kernel_basis, subquotient_presentation, ExactMatrix, ModulePresentation};
use crate::ring::{RingSpec, Scalar};

/// A finite group acting on the left of a free module of rank `d`, with
/// one `d × d` matrix per group element.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupModule {
    table: CayleyTable,
    ring: RingSpec,
    action: Vec<ExactMatrix>,
}

impl GroupModule {
    pub fn new(table: CayleyTable, ring: RingSpec, action: Vec<ExactMatrix>) -> Result<Self> {
        let n = table.order();
        if action.len() != n {
            return Err(Error::Dimension(format!(
                "{} matrices for a group of order {n}",
                action.len()
            )));
        }
        let d = action[0].rows();
        if action
            .iter()
            .any(|m| m.rows() != d || m.cols() != d || m.ring() != ring)
        {
            return Err(Error::Dimension(
                "action matrices must be square, of equal size, over the ring".into(),
            ));
        }
        for g in 0..n {
            for h in 0..n {
                if action[table.mul(g, h)] != action[g].mul(&action[h])? {
                    return Err(Error::InvalidTable(format!(
                        "action is not multiplicative at ({g}, {h})"
                    )));
                }
            }
        }
        if action[table.identity()] != ExactMatrix::identity(ring, d) {
            return Err(Error::InvalidTable(
                "identity does not act trivially".into(),
            ));
        }
        Ok(GroupModule {
            table,
            ring,
            action,
        })
    }

    /// The ring with trivial action.
    pub fn trivial(table: CayleyTable, ring: RingSpec, d: usize) -> Self {
        let action = vec![ExactMatrix::identity(ring, d); table.order()];
        GroupModule {
            table,
            ring,
            action,
        }
    }

    /// Functions on the group with `(g·f)(x) = f(x g)`, in the basis of
    /// indicator functions: `g·e_x = e_{x g^{-1}}`.
    pub fn regular(table: CayleyTable, ring: RingSpec) -> Self {
        let n = table.order();
        let action = (0..n)
            .map(|g| {
                let mut m = ExactMatrix::zeros(ring, n, n);
                let gi = table.inverse(g);
                for x in 0..n {
                    m.set(table.mul(x, gi), x, ring.one());
                }
                m
            })
            .collect();
        GroupModule {
            table,
            ring,
            action,
        }
    }

    /// Read the action off a comodule over a constant group scheme.
    pub fn from_comodule(m: &Comodule) -> Result<Self> {
        let table = m.parent().group().ok_or(Error::NotConstant)?.clone();
        let ring = m.ring();
        let d = m.rank();
        let mut action = Vec::with_capacity(table.order());
        for g in 0..table.order() {
            let cols = (0..d)
                .map(|a| {
                    let mut e = vec![ring.zero(); d];
                    e[a] = ring.one();
                    m.group_act(g, &e)
                })
                .collect::<Result<Vec<_>>>()?;
            action.push(ExactMatrix::from_columns(ring, d, &cols));
        }
        GroupModule::new(table, ring, action)
    }

    /// Tensor product with the diagonal action.
    pub fn tensor(&self, other: &GroupModule) -> Result<Self> {
        if self.table != other.table || self.ring != other.ring {
            return Err(Error::ParentMismatch);
        }
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| kronecker(a, b))
            .collect();
        GroupModule::new(self.table.clone(), self.ring, action)
    }

    /// Contragredient: `g` acts by the transpose of `g^{-1}`.
    pub fn dual(&self) -> Self {
        let action = (0..self.table.order())
            .map(|g| self.action[self.table.inverse(g)].transpose())
            .collect();
        GroupModule {
            table: self.table.clone(),
            ring: self.ring,
            action,
        }
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn rank(&self) -> usize {
        self.action[0].rows()
    }

    pub fn action(&self, g: usize) -> &ExactMatrix {
        &self.action[g]
    }
}

fn kronecker(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    let ring = a.ring();
    let (p, q) = (b.rows(), b.cols());
    let mut out = ExactMatrix::zeros(ring, a.rows() * p, a.cols() * q);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if a.get(i, j).is_zero() {
                continue;
            }
            for k in 0..p {
                for l in 0..q {
                    out.set(i * p + k, j * q + l, ring.mul(a.get(i, j), b.get(k, l)));
                }
            }
        }
    }
    out
}

/// `H^0 … H^D` from the inhomogeneous cochains `C^n = Map(G^n, M)`, with
/// `(δf)(g_1, …, g_{n+1}) = g_1·f(g_2, …) + Σ (−1)^t f(…, g_t g_{t+1}, …) + (−1)^{n+1} f(g_1, …, g_n)`.
pub fn bar_complex_oracle(m: &GroupModule, max_degree: usize) -> Result<Vec<ModulePresentation>> {
    let maps: Vec<SparseMatrix> = (0..=max_degree).map(|n| bar_differential(m, n)).collect();
    let d = m.rank();
    let g = m.table.order();
    (0..=max_degree)
        .map(|i| {
            let dim = d * g.pow(i as u32);
            homology(
                m.ring,
                dim,
                if i == 0 { None } else { Some(&maps[i - 1]) },
                &maps[i],
            )
        })
        .collect()
}

/// Cochain `f` of degree `n` stored as `f[(g_1..g_n) * d + b]`, the `b`-th
/// coordinate of its value.
fn bar_differential(m: &GroupModule, n: usize) -> SparseMatrix {
    let ring = m.ring;
    let t = &m.table;
    let g = t.order();
    let d = m.rank();
    let gn = g.pow(n as u32);
    let sign = |k: usize| {
        if k.is_multiple_of(2) {
            ring.one()
        } else {
            ring.neg(&ring.one())
        }
    };
    // column for the cochain that is e_b at the tuple x and zero elsewhere
    let mut columns: Vec<Vec<(usize, Scalar)>> = Vec::with_capacity(gn * d);
    for x in 0..gn {
        let xs = super::to_digits(x, g, n);
        for b in 0..d {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            let mut add = |tuple: &[usize], coord: usize, c: Scalar| {
                let idx = super::from_digits(tuple, g) * d + coord;
                let e = acc.entry(idx).or_insert_with(Scalar::zero);
                *e = ring.add(e, &c);
            };
            // g_1 · f(g_2, …, g_{n+1}) picks up f at (g_2..) = xs
            for g1 in 0..g {
                let mut tuple = vec![g1];
                tuple.extend_from_slice(&xs);
                for row in 0..d {
                    let c = m.action[g1].get(row, b);
                    if !c.is_zero() {
                        add(&tuple, row, c.clone());
                    }
                }
            }
            // f(…, g_t g_{t+1}, …) = f(xs) whenever the product matches
            for pos in 0..n {
                for u in 0..g {
                    let v = t.mul(t.inverse(u), xs[pos]);
                    let mut tuple = xs[..pos].to_vec();
                    tuple.push(u);
                    tuple.push(v);
                    tuple.extend_from_slice(&xs[pos + 1..]);
                    add(&tuple, b, sign(pos + 1));
                }
            }
            for last in 0..g {
                let mut tuple = xs.clone();
                tuple.push(last);
                add(&tuple, b, sign(n + 1));
            }
            columns.push(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
        }
    }
    SparseMatrix::new(ring, gn * g * d, columns)
}

/// Cohomology of the cyclic group of order `m` with generator acting by
/// `t`, from the resolution with maps `t − 1` and `N = 1 + t + … + t^{m−1}`:
/// `H^0 = ker(t − 1)`, `H^{odd} = ker N / im(t − 1)`, `H^{even} = ker(t − 1) / im N`.
pub fn cyclic_oracle(
    m: usize,
    t: &ExactMatrix,
    max_degree: usize,
) -> Result<Vec<ModulePresentation>> {
    let ring = t.ring();
    let d = t.rows();
    let id = ExactMatrix::identity(ring, d);
    let mut power = id.clone();
    let mut norm = ExactMatrix::zeros(ring, d, d);
    for _ in 0..m {
        norm = add(&norm, &power);
        power = power.mul(t)?;
    }
    if power != id {
        return Err(Error::InvalidTable(format!(
            "generator action does not have order dividing {m}"
        )));
    }
    let diff = t.sub(&id)?;
    let sparse_diff = SparseMatrix::from_dense(&diff);
    let sparse_norm = SparseMatrix::from_dense(&norm);
    (0..=max_degree)
        .map(|i| match i {
            0 => homology(ring, d, None, &sparse_diff),
            _ if i % 2 == 1 => homology(ring, d, Some(&sparse_diff), &sparse_norm),
            _ => homology(ring, d, Some(&sparse_norm), &sparse_diff),
        })
        .collect()
}

fn add(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    let ring = a.ring();
    let mut out = a.clone();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            out.set(i, j, ring.add(a.get(i, j), b.get(i, j)));
        }
    }
    out
}

/// `ker(next) / im(prev)` on a free module of rank `dim`.
fn homology(
    ring: RingSpec,
    dim: usize,
    prev: Option<&SparseMatrix>,
    next: &SparseMatrix,
) -> Result<ModulePresentation> {
    if ring.is_field() || ring == RingSpec::Integers {
        let rank_next = next.rank();
        let prev_div = prev
            .map(SparseMatrix::elementary_divisors)
            .unwrap_or_default();
        let mut ann: Vec<Scalar> = prev_div
            .iter()
            .filter(|x| !ring.is_unit(x))
            .cloned()
            .collect();
        ann.extend(std::iter::repeat_n(
            ring.zero(),
            dim - rank_next - prev_div.len(),
        ));
        return ModulePresentation::new(ring, ann);
    }
    let z = kernel_basis(&next.to_dense());
    let b = prev
        .map(SparseMatrix::to_dense)
        .unwrap_or_else(|| ExactMatrix::zeros(ring, dim, 0));
    subquotient_presentation(&z, &b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(ps: &[ModulePresentation]) -> Vec<String> {
        ps.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn cyclic_integer_cohomology_both_ways() {
        for m in [2usize, 3, 4] {
            let z = RingSpec::Integers;
            let bar =
                bar_complex_oracle(&GroupModule::trivial(CayleyTable::cyclic(m), z, 1), 4).unwrap();
            let per = cyclic_oracle(m, &ExactMatrix::identity(z, 1), 4).unwrap();
            assert_eq!(bar, per);
            let zm = format!("Z/{m}");
            assert_eq!(show(&bar), vec!["Z", "0", zm.as_str(), "0", zm.as_str()]);
        }
    }

    #[test]
    fn c2_mod_two_is_one_dimensional() {
        let f2 = RingSpec::prime_field(2).unwrap();
        let bar =
            bar_complex_oracle(&GroupModule::trivial(CayleyTable::cyclic(2), f2, 1), 6).unwrap();
        assert!(bar.iter().all(|p| p.num_generators() == 1));
    }

    #[test]
    fn trivial_group_has_no_higher_cohomology() {
        let z = RingSpec::Integers;
        let bar =
            bar_complex_oracle(&GroupModule::trivial(CayleyTable::trivial(), z, 2), 3).unwrap();
        assert_eq!(show(&bar), vec!["Z^2", "0", "0", "0"]);
    }

    #[test]
    fn regular_module_is_acyclic() {
        let z = RingSpec::Integers;
        let m = GroupModule::regular(CayleyTable::symmetric3(), z);
        GroupModule::new(m.table.clone(), z, m.action.clone()).unwrap();
        let bar = bar_complex_oracle(&m, 2).unwrap();
        assert_eq!(show(&bar), vec!["Z", "0", "0"]);
    }
}
