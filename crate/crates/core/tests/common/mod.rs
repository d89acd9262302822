#![allow(dead_code)]

use std::path::PathBuf;

use hopfcoh::cli::SchemeFile;
use hopfcoh::comodules::{
    dual_comodule, regular_comodule, tensor_comodule, trivial_comodule, Comodule,
    ShortExactSequence,
};
use hopfcoh::hopf::{
    alpha_p, base_change, constant_group, direct_product, mu_n, CayleyTable, HopfAlgebra,
};
use hopfcoh::linalg::ExactMatrix;
use hopfcoh::ring::{int, RingSpec};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

pub fn corpus_path(name: &str) -> String {
    corpus_dir()
        .join(format!("{name}.json"))
        .to_string_lossy()
        .into_owned()
}

/// Every corpus file, sorted by name, with the deliberately broken ones
/// filtered out when `valid_only` is set.
pub fn corpus_files(valid_only: bool) -> Vec<(String, SchemeFile)> {
    let mut out: Vec<(String, SchemeFile)> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .map(|p| {
            (
                p.file_stem().unwrap().to_string_lossy().into_owned(),
                SchemeFile::read(&p).unwrap(),
            )
        })
        .filter(|(name, _)| !valid_only || !name.contains("corrupt"))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Every valid corpus comodule: the file's own module block, or the trivial
/// and regular comodules when there is none.
pub fn corpus_comodules() -> Vec<(String, Comodule)> {
    let mut out = Vec::new();
    for (name, file) in corpus_files(true) {
        let loaded = file.load().unwrap();
        match loaded.module {
            Some(m) => out.push((name, m)),
            None => {
                out.push((format!("{name}/trivial"), trivial_comodule(&loaded.hopf, 1)));
                out.push((format!("{name}/regular"), regular_comodule(&loaded.hopf)));
            }
        }
    }
    out
}

/// The character `g ↦ sign of left multiplication by g`, as a comodule.
pub fn sign_module(h: &HopfAlgebra) -> Comodule {
    let g = h.group().expect("constant group");
    let n = g.order();
    let matrices: Vec<ExactMatrix> = (0..n)
        .map(|a| {
            let mut seen = vec![false; n];
            let mut transpositions = 0;
            for start in 0..n {
                let mut x = start;
                let mut len = 0;
                while !seen[x] {
                    seen[x] = true;
                    x = g.mul(a, x);
                    len += 1;
                }
                if len > 0 {
                    transpositions += len - 1;
                }
            }
            let s = if transpositions % 2 == 0 { 1 } else { -1 };
            ExactMatrix::from_ints(h.ring(), &[vec![s]])
        })
        .collect();
    Comodule::from_group_action(h, &matrices).unwrap()
}

pub fn groups() -> Vec<(&'static str, CayleyTable)> {
    vec![
        ("C_2", CayleyTable::cyclic(2)),
        ("C_3", CayleyTable::cyclic(3)),
        ("C_4", CayleyTable::cyclic(4)),
        ("Klein", CayleyTable::klein()),
        ("S_3", CayleyTable::symmetric3()),
    ]
}

pub struct Pair {
    pub name: String,
    pub hopf: HopfAlgebra,
    pub module: Comodule,
}

fn pair(scheme: &str, coeff: &str, hopf: &HopfAlgebra, module: Comodule) -> Pair {
    Pair {
        name: format!("{scheme} / {coeff}"),
        hopf: hopf.clone(),
        module,
    }
}

/// Group schemes of the annihilation suite with trivial, regular, dual and
/// tensor coefficients.
pub fn theorem_pairs() -> Vec<Pair> {
    let z = RingSpec::Integers;
    let mut out = Vec::new();
    for (name, t) in groups() {
        let h = constant_group(&t, z);
        let reg = regular_comodule(&h);
        let sign = sign_module(&h);
        out.push(pair(name, "trivial", &h, trivial_comodule(&h, 1)));
        out.push(pair(name, "regular", &h, reg.clone()));
        out.push(pair(name, "dual regular", &h, dual_comodule(&reg).unwrap()));
        out.push(pair(
            name,
            "sign (x) regular",
            &h,
            tensor_comodule(&sign, &reg).unwrap(),
        ));
        out.push(pair(
            name,
            "sign (x) sign",
            &h,
            tensor_comodule(&sign, &sign).unwrap(),
        ));
    }
    let f2 = RingSpec::prime_field(2).unwrap();
    let f3 = RingSpec::prime_field(3).unwrap();
    let schemes = vec![
        ("mu_2/Z", mu_n(2, z).unwrap()),
        ("mu_3/Z", mu_n(3, z).unwrap()),
        ("alpha_2/F_2", alpha_p(2, f2).unwrap()),
        ("alpha_3/F_3", alpha_p(3, f3).unwrap()),
        (
            "alpha_2 x mu_2/F_2",
            direct_product(&alpha_p(2, f2).unwrap(), &mu_n(2, f2).unwrap()).unwrap(),
        ),
    ];
    for (name, h) in schemes {
        let reg = regular_comodule(&h);
        out.push(pair(name, "trivial", &h, trivial_comodule(&h, 1)));
        out.push(pair(name, "regular", &h, reg.clone()));
        out.push(pair(name, "dual regular", &h, dual_comodule(&reg).unwrap()));
        out.push(pair(
            name,
            "regular (x) regular",
            &h,
            tensor_comodule(&reg, &reg).unwrap(),
        ));
    }
    out
}

/// Short exact sequences used by the cokernel-exponent checks.
pub fn sequences() -> Vec<(String, ShortExactSequence)> {
    let z = RingSpec::Integers;
    let mut out = Vec::new();
    for (name, t) in groups() {
        // augmentation: 0 → I → k[G] → k → 0 with I spanned by e_x − e_1
        let h = constant_group(&t, z);
        let n = t.order();
        let e = t.identity();
        let cols: Vec<Vec<_>> = (0..n)
            .filter(|&x| x != e)
            .map(|x| {
                let mut c = vec![int(0); n];
                c[x] = int(1);
                c[e] = int(-1);
                c
            })
            .collect();
        let span = ExactMatrix::from_columns(z, n, &cols);
        let reg = regular_comodule(&h);
        out.push((
            format!("{name} augmentation"),
            ShortExactSequence::from_submodule(&reg, &span).unwrap(),
        ));
        let q = RingSpec::Rationals;
        let hq = base_change(&h, q).unwrap();
        out.push((
            format!("{name} augmentation over Q"),
            ShortExactSequence::from_submodule(
                &regular_comodule(&hq),
                &span.base_change(q).unwrap(),
            )
            .unwrap(),
        ));
        out.push((
            format!("{name} split"),
            ShortExactSequence::split(&reg, &sign_module(&h)).unwrap(),
        ));
    }
    let mu2 = mu_n(2, z).unwrap();
    out.push((
        "mu_2 regular over the x line".into(),
        ShortExactSequence::from_submodule(
            &regular_comodule(&mu2),
            &ExactMatrix::from_ints(z, &[vec![0], vec![1]]),
        )
        .unwrap(),
    ));
    let f2 = RingSpec::prime_field(2).unwrap();
    let a2 = alpha_p(2, f2).unwrap();
    out.push((
        "alpha_2 regular over the unit line".into(),
        ShortExactSequence::from_submodule(
            &regular_comodule(&a2),
            &ExactMatrix::from_ints(f2, &[vec![1], vec![0]]),
        )
        .unwrap(),
    ));
    out
}
