//! The JSON scheme file: a base ring, a Hopf algebra, and optional
//! coefficient module and graded algebra blocks.
//!
//! Scalars may be written as JSON integers or as decimal strings (`"-3"`,
//! `"1/2"` over `Q`); they are always written back as strings.

use std::fmt;
use std::path::Path;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::comodules::{
    direct_sum, dual_comodule, graded_algebra_from_action, regular_comodule, tensor_comodule,
    trivial_comodule, Comodule, GradedComoduleAlgebra,
};
use crate::error::{Error, Result};
use crate::hopf::{
    alpha_p, constant_group, direct_product, dual, mu_n, CayleyTable, Flavor, HopfAlgebra,
    StructureConstants,
};
use crate::linalg::ExactMatrix;
use crate::ring::{scalar_string, RingSpec, Scalar};

/// A scalar as it appears in a file, before it is read in a ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Num(pub String);

impl Num {
    pub fn read(&self, ring: RingSpec) -> Result<Scalar> {
        ring.parse_scalar(&self.0)
    }

    pub fn of(v: &Scalar) -> Self {
        Num(scalar_string(v))
    }
}

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Num {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct NumVisitor;
        impl Visitor<'_> for NumVisitor {
            type Value = Num;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Num, E> {
                Ok(Num(v.to_string()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Num, E> {
                Ok(Num(v.to_string()))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Num, E> {
                Ok(Num(v.to_string()))
            }
        }
        d.deserialize_any(NumVisitor)
    }
}

// Fieldless variants are written `Z {}` rather than `Z`: serde ignores
// `deny_unknown_fields` on unit variants of internally tagged enums.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", deny_unknown_fields)]
pub enum RingBlock {
    Z {},
    Zmod { m: u64 },
    Q {},
}

impl RingBlock {
    pub fn spec(&self) -> Result<RingSpec> {
        match self {
            RingBlock::Z {} => Ok(RingSpec::Integers),
            RingBlock::Zmod { m } => RingSpec::integers_mod(*m),
            RingBlock::Q {} => Ok(RingSpec::Rationals),
        }
    }

    pub fn of(ring: RingSpec) -> Self {
        match ring {
            RingSpec::Integers => RingBlock::Z {},
            RingSpec::IntegersMod(m) => RingBlock::Zmod { m: m.get() },
            RingSpec::Rationals => RingBlock::Q {},
        }
    }
}

/// A finite group, by name or by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupBlock {
    Trivial,
    Cyclic(usize),
    Klein,
    Symmetric3,
    Table {
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
}

impl GroupBlock {
    pub fn table(&self) -> Result<CayleyTable> {
        match self {
            GroupBlock::Trivial => Ok(CayleyTable::trivial()),
            GroupBlock::Cyclic(n) if *n == 0 => {
                Err(Error::InvalidTable("cyclic group of order 0".into()))
            }
            GroupBlock::Cyclic(n) => Ok(CayleyTable::cyclic(*n)),
            GroupBlock::Klein => Ok(CayleyTable::klein()),
            GroupBlock::Symmetric3 => Ok(CayleyTable::symmetric3()),
            GroupBlock::Table { table, names } => {
                let identity = identity_of(table)?;
                match names {
                    Some(n) => CayleyTable::with_names(table.clone(), identity, n.clone()),
                    None => CayleyTable::new(table.clone(), identity),
                }
            }
        }
    }

    pub fn of(t: &CayleyTable) -> Self {
        GroupBlock::Table {
            table: t.rows().to_vec(),
            names: Some(t.names().to_vec()),
        }
    }
}

fn identity_of(table: &[Vec<usize>]) -> Result<usize> {
    (0..table.len())
        .find(|&e| table[e].iter().enumerate().all(|(x, &y)| x == y))
        .ok_or_else(|| Error::InvalidTable("no identity row".into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "constructor", rename_all = "snake_case", deny_unknown_fields)]
pub enum HopfConstructor {
    Constant { group: GroupBlock },
    MuN { n: usize },
    AlphaP { p: u64 },
    Product { factors: Vec<HopfBlock> },
    Dual { of: Box<HopfBlock> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitHopf {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub rank: usize,
    pub basis: Vec<String>,
    pub mult: Vec<(usize, usize, usize, Num)>,
    pub unit: Vec<Num>,
    pub comult: Vec<(usize, usize, usize, Num)>,
    pub counit: Vec<Num>,
    /// `[i, j, c]`: `S(e_i)` has coefficient `c` on `e_j`.
    pub antipode: Vec<(usize, usize, Num)>,
    /// Set for measure algebras, whose multiplication need not commute.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub measure_algebra: bool,
    /// The group of a constant group scheme, in basis order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupBlock>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum HopfBlock {
    Constructor(HopfConstructor),
    Explicit(ExplicitHopf),
}

impl<'de> Deserialize<'de> for HopfBlock {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        if v.get("constructor").is_some() {
            HopfConstructor::deserialize(v)
                .map(HopfBlock::Constructor)
                .map_err(de::Error::custom)
        } else {
            ExplicitHopf::deserialize(v)
                .map(HopfBlock::Explicit)
                .map_err(de::Error::custom)
        }
    }
}

impl HopfBlock {
    pub fn build(&self, ring: RingSpec) -> Result<HopfAlgebra> {
        match self {
            HopfBlock::Constructor(c) => match c {
                HopfConstructor::Constant { group } => Ok(constant_group(&group.table()?, ring)),
                HopfConstructor::MuN { n } => mu_n(*n, ring),
                HopfConstructor::AlphaP { p } => alpha_p(*p, ring),
                HopfConstructor::Product { factors } => {
                    let mut it = factors.iter();
                    let first = it
                        .next()
                        .ok_or_else(|| Error::Parse("product needs at least one factor".into()))?;
                    it.try_fold(first.build(ring)?, |acc, f| {
                        direct_product(&acc, &f.build(ring)?)
                    })
                }
                HopfConstructor::Dual { of } => dual(&of.build(ring)?),
            },
            HopfBlock::Explicit(e) => e.build(ring),
        }
    }

    /// The explicit form of `h`, which rebuilds to an equal value.
    pub fn explicit(h: &HopfAlgebra) -> Self {
        let sc = h.constants();
        let r = h.rank();
        let quad = |v: Vec<(usize, usize, usize, Scalar)>| {
            v.into_iter()
                .map(|(i, j, k, c)| (i, j, k, Num::of(&c)))
                .collect()
        };
        let mut antipode = Vec::new();
        for i in 0..r {
            for j in 0..r {
                let c = sc.antipode.get(j, i);
                if !num_traits::Zero::is_zero(c) {
                    antipode.push((i, j, Num::of(c)));
                }
            }
        }
        HopfBlock::Explicit(ExplicitHopf {
            name: Some(h.name().to_string()),
            rank: r,
            basis: sc.labels,
            mult: quad(sc.mult),
            unit: sc.unit.iter().map(Num::of).collect(),
            comult: quad(sc.comult),
            counit: sc.counit.iter().map(Num::of).collect(),
            antipode,
            measure_algebra: h.flavor() == Flavor::MeasureAlgebra,
            group: h.group_table().map(GroupBlock::of),
        })
    }
}

impl ExplicitHopf {
    fn build(&self, ring: RingSpec) -> Result<HopfAlgebra> {
        let r = self.rank;
        if self.basis.len() != r {
            return Err(Error::Dimension(format!(
                "{} basis labels for rank {r}",
                self.basis.len()
            )));
        }
        let quad = |v: &[(usize, usize, usize, Num)]| {
            v.iter()
                .map(|(i, j, k, c)| Ok((*i, *j, *k, c.read(ring)?)))
                .collect::<Result<Vec<_>>>()
        };
        let mut antipode = ExactMatrix::zeros(ring, r, r);
        for (i, j, c) in &self.antipode {
            if *i >= r || *j >= r {
                return Err(Error::Dimension(format!(
                    "antipode index ({i}, {j}) out of range"
                )));
            }
            let cur = antipode.get(*j, *i).clone();
            antipode.set(*j, *i, ring.add(&cur, &c.read(ring)?));
        }
        let sc = StructureConstants {
            labels: self.basis.clone(),
            mult: quad(&self.mult)?,
            unit: self
                .unit
                .iter()
                .map(|c| c.read(ring))
                .collect::<Result<_>>()?,
            comult: quad(&self.comult)?,
            counit: self
                .counit
                .iter()
                .map(|c| c.read(ring))
                .collect::<Result<_>>()?,
            antipode,
        };
        let name = self.name.clone().unwrap_or_else(|| "explicit".to_string());
        let flavor = if self.measure_algebra {
            Flavor::MeasureAlgebra
        } else {
            Flavor::CoordinateRing
        };
        let group = match &self.group {
            Some(g) => {
                let t = g.table()?;
                if t.order() != r {
                    return Err(Error::Dimension(format!(
                        "group of order {} for rank {r}",
                        t.order()
                    )));
                }
                Some(t)
            }
            None => None,
        };
        Ok(HopfAlgebra::from_constants(ring, name, sc)?
            .with_flavor(flavor)
            .with_group(group))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModuleConstructor {
    Trivial {
        #[serde(default = "one")]
        rank: usize,
    },
    Regular {},
    /// A representation of a constant group: one square matrix (as rows)
    /// per group element, in table order.
    Action {
        matrices: Vec<Vec<Vec<Num>>>,
    },
    Tensor {
        factors: Vec<ModuleBlock>,
    },
    Dual {
        of: Box<ModuleBlock>,
    },
    Sum {
        summands: Vec<ModuleBlock>,
    },
}

fn one() -> usize {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitModule {
    pub rank: usize,
    /// `[a, b, i, c]`: `ρ(e_a)` has coefficient `c` on `e_b ⊗ f_i`.
    pub coaction: Vec<(usize, usize, usize, Num)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ModuleBlock {
    Constructor(ModuleConstructor),
    Explicit(ExplicitModule),
}

impl<'de> Deserialize<'de> for ModuleBlock {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        if v.get("kind").is_some() {
            ModuleConstructor::deserialize(v)
                .map(ModuleBlock::Constructor)
                .map_err(de::Error::custom)
        } else {
            ExplicitModule::deserialize(v)
                .map(ModuleBlock::Explicit)
                .map_err(de::Error::custom)
        }
    }
}

impl ModuleBlock {
    pub fn build(&self, h: &HopfAlgebra) -> Result<Comodule> {
        let ring = h.ring();
        match self {
            ModuleBlock::Constructor(c) => match c {
                ModuleConstructor::Trivial { rank } => Ok(trivial_comodule(h, *rank)),
                ModuleConstructor::Regular {} => Ok(regular_comodule(h)),
                ModuleConstructor::Action { matrices } => {
                    let ms = matrices
                        .iter()
                        .map(|rows| {
                            let n = rows.len();
                            if rows.iter().any(|row| row.len() != n) {
                                return Err(Error::Dimension(
                                    "action matrices must be square".into(),
                                ));
                            }
                            let entries = rows
                                .iter()
                                .flatten()
                                .map(|c| c.read(ring))
                                .collect::<Result<Vec<_>>>()?;
                            ExactMatrix::from_entries(ring, n, n, entries)
                        })
                        .collect::<Result<Vec<_>>>()?;
                    Comodule::from_group_action(h, &ms)
                }
                ModuleConstructor::Tensor { factors } => fold(factors, h, tensor_comodule),
                ModuleConstructor::Sum { summands } => fold(summands, h, direct_sum),
                ModuleConstructor::Dual { of } => dual_comodule(&of.build(h)?),
            },
            ModuleBlock::Explicit(e) => Comodule::new(
                h,
                e.rank,
                e.coaction
                    .iter()
                    .map(|(a, b, i, c)| Ok((*a, *b, *i, c.read(ring)?)))
                    .collect::<Result<_>>()?,
            ),
        }
    }

    pub fn explicit(m: &Comodule) -> Self {
        ModuleBlock::Explicit(ExplicitModule {
            rank: m.rank(),
            coaction: m
                .coaction_quadruples()
                .into_iter()
                .map(|(a, b, i, c)| (a, b, i, Num::of(&c)))
                .collect(),
        })
    }
}

fn fold(
    parts: &[ModuleBlock],
    h: &HopfAlgebra,
    op: fn(&Comodule, &Comodule) -> Result<Comodule>,
) -> Result<Comodule> {
    let mut it = parts.iter();
    let first = it
        .next()
        .ok_or_else(|| Error::Parse("empty module list".into()))?;
    it.try_fold(first.build(h)?, |acc, m| op(&acc, &m.build(h)?))
}

/// Graded comodule algebras are given by constructor only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum AlgebraBlock {
    /// The base ring in degree 0.
    Trivial {},
    /// The coordinate ring itself in degree 0, coacting by `Δ`.
    CoordinateRing {},
    /// The symmetric algebra on a module in degree 1, truncated at `cap`.
    Symmetric { module: ModuleBlock, cap: usize },
}

impl AlgebraBlock {
    pub fn build(&self, h: &HopfAlgebra) -> Result<GradedComoduleAlgebra> {
        match self {
            AlgebraBlock::Trivial {} => Ok(GradedComoduleAlgebra::trivial(h)),
            AlgebraBlock::CoordinateRing {} => Ok(GradedComoduleAlgebra::coordinate_ring(h)),
            AlgebraBlock::Symmetric { module, cap } => {
                Ok(graded_algebra_from_action(&module.build(h)?, *cap))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemeFile {
    pub ring: RingBlock,
    pub hopf: HopfBlock,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraBlock>,
}

/// The objects described by a scheme file.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub hopf: HopfAlgebra,
    pub module: Option<Comodule>,
    pub algebra: Option<GradedComoduleAlgebra>,
}

impl SchemeFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scheme files always serialize")
    }

    pub fn hopf(&self) -> Result<HopfAlgebra> {
        self.hopf.build(self.ring.spec()?)
    }

    pub fn load(&self) -> Result<Loaded> {
        let hopf = self.hopf()?;
        let module = self.module.as_ref().map(|m| m.build(&hopf)).transpose()?;
        let algebra = self.algebra.as_ref().map(|a| a.build(&hopf)).transpose()?;
        Ok(Loaded {
            hopf,
            module,
            algebra,
        })
    }

    /// The explicit form of a Hopf algebra and optional comodule.
    pub fn explicit(h: &HopfAlgebra, m: Option<&Comodule>) -> Self {
        SchemeFile {
            ring: RingBlock::of(h.ring()),
            hopf: HopfBlock::explicit(h),
            module: m.map(ModuleBlock::explicit),
            algebra: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_and_explicit_forms_agree() {
        let f = SchemeFile::parse(
            r#"{"ring": {"type": "Z"}, "hopf": {"constructor": "mu_n", "n": 2}}"#,
        )
        .unwrap();
        let h = f.hopf().unwrap();
        let back = SchemeFile::parse(&SchemeFile::explicit(&h, None).to_json()).unwrap();
        assert_eq!(back.hopf().unwrap(), h);
    }

    #[test]
    fn integers_and_strings_are_both_scalars() {
        let text = r#"{"ring": {"type": "Zmod", "m": 6}, "hopf": {"rank": 1, "basis": ["1"],
            "mult": [[0, 0, 0, "7"]], "unit": [1], "comult": [[0, 0, 0, 1]], "counit": ["1"], "antipode": [[0, 0, -5]]}}"#;
        let h = SchemeFile::parse(text).unwrap().hopf().unwrap();
        assert_eq!(h.mult_triples(), vec![(0, 0, 0, crate::ring::int(1))]);
        assert_eq!(h.antipode().get(0, 0), &crate::ring::int(1));
    }

    #[test]
    fn unknown_keys_are_rejected() {
        for text in [
            r#"{"ring": {"type": "Z"}, "hopf": {"constructor": "mu_n", "n": 2}, "extra": 1}"#,
            r#"{"ring": {"type": "Z"}, "hopf": {"constructor": "mu_n", "n": 2, "k": 3}}"#,
            r#"{"ring": {"type": "Z", "m": 2}, "hopf": {"constructor": "mu_n", "n": 2}}"#,
            r#"{"ring": {"type": "Z"}, "hopf": {"constructor": "mu_n", "n": 2}, "module": {"kind": "regular", "x": 0}}"#,
        ] {
            assert!(
                matches!(SchemeFile::parse(text), Err(Error::Parse(_))),
                "{text}"
            );
        }
    }
}
