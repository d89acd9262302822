//! Command-line front end. [`run`] parses arguments and returns the exit
//! code with the text to print, so it can be driven from tests.
//!
//! Exit codes: `0` success, `1` a verification failed, `2` bad input.

mod format;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

pub use format::{
    AlgebraBlock, ExplicitHopf, ExplicitModule, GroupBlock, HopfBlock, HopfConstructor, Loaded,
    ModuleBlock, ModuleConstructor, Num, RingBlock, SchemeFile,
};

use crate::cohomology::{
    bar_complex_oracle, cohomology_ring, cyclic_oracle, generation_degree, verify_annihilation,
    GroupModule,
};
use crate::comodules::{
    dual_comodule, regular_comodule, trivial_comodule, validate_comodule, Comodule,
    GradedComoduleAlgebra,
};
use crate::error::Error;
use crate::hopf::{validate, CayleyTable, HopfAlgebra, Violation};
use crate::linalg::{ExactMatrix, PresentationView};
use crate::measures::{left_integrals, torsion_bound};
use crate::ring::{scalar_string, RingSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "hopfcoh",
    version,
    about = "Exact cohomology of finite group schemes"
)]
struct Cli {
    /// Emit JSON instead of a text report.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Hopf algebra axioms (and module and algebra axioms, if present).
    Validate { file: PathBuf },
    /// Compute a generator of the left integrals and its value at 1.
    Integral { file: PathBuf },
    /// Compute the integer n that annihilates all higher cohomology.
    Bound { file: PathBuf },
    /// Tabulate H^0..H^D and check that n annihilates each positive degree.
    Cohomology {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        /// `trivial`, `regular`, `dual-regular`, or a JSON module file.
        #[arg(long)]
        module: Option<String>,
    },
    /// Bigraded cohomology ring with coefficients in a graded comodule algebra.
    Ring {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        /// `trivial`, `coordinate-ring`, or a JSON algebra file.
        #[arg(long)]
        algebra: Option<String>,
        /// Also find the generation degree of the truncated ring.
        #[arg(long)]
        check_generation: bool,
    },
    /// Group cohomology from the inhomogeneous bar complex.
    Oracle {
        #[arg(long, conflicts_with = "table", required_unless_present = "table")]
        cyclic: Option<usize>,
        /// JSON group: a Cayley table, or `"klein"`, `{"cyclic": 3}` and similar.
        #[arg(long)]
        table: Option<PathBuf>,
        /// Coefficient ring (`Z`, `Q`, `F3`, `Z/4`), optionally with `:regular`.
        #[arg(long, default_value = "Z")]
        coeff: String,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
}

/// Result of one invocation: exit code and the report text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

impl Outcome {
    fn new(code: i32, output: String) -> Self {
        Outcome { code, output }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            return Outcome::new(code, e.to_string());
        }
    };
    let json = cli.json;
    let result = match cli.command {
        Command::Validate { file } => cmd_validate(&file, json),
        Command::Integral { file } => cmd_integral(&file, json),
        Command::Bound { file } => cmd_bound(&file, json),
        Command::Cohomology {
            file,
            max_degree,
            module,
        } => cmd_cohomology(&file, max_degree, module.as_deref(), json),
        Command::Ring {
            file,
            max_degree,
            algebra,
            check_generation,
        } => cmd_ring(
            &file,
            max_degree,
            algebra.as_deref(),
            check_generation,
            json,
        ),
        Command::Oracle {
            cyclic,
            table,
            coeff,
            max_degree,
        } => cmd_oracle(cyclic, table.as_deref(), &coeff, max_degree, json),
    };
    result.unwrap_or_else(|e| error_outcome(&e, json))
}

/// Exit code for a library error: failed axiom checks and vanishing or
/// non-free integrals are verification failures, everything else is input.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidHopf(_)
        | Error::InvalidComodule(_)
        | Error::IntegralVanishes
        | Error::IntegralNotFreeRankOne { .. } => EXIT_FAILED,
        _ => EXIT_INPUT,
    }
}

fn error_outcome(e: &Error, json: bool) -> Outcome {
    let code = exit_code(e);
    let kind = if code == EXIT_FAILED {
        "verification"
    } else {
        "input"
    };
    let text = if json {
        to_json(&json!({"error": e.to_string(), "kind": kind}))
    } else {
        format!("error: {e}\n")
    };
    Outcome::new(code, text)
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports always serialize");
    s.push('\n');
    s
}

fn code_if(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

#[derive(Serialize)]
struct ViolationView {
    axiom: &'static str,
    witness: Vec<usize>,
}

fn views(v: &[Violation]) -> Vec<ViolationView> {
    v.iter()
        .map(|x| ViolationView {
            axiom: x.axiom.name(),
            witness: x.witness.clone(),
        })
        .collect()
}

fn describe(h: &HopfAlgebra) -> String {
    format!("{} over {} (rank {})", h.name(), h.ring(), h.rank())
}

fn cmd_validate(path: &Path, json: bool) -> Result<Outcome, Error> {
    let file = SchemeFile::read(path)?;
    let h = file.hopf()?;
    let hv = validate(&h);
    // module and algebra blocks are only meaningful over a valid Hopf algebra
    let (mv, av) = if hv.is_empty() {
        let mv = file
            .module
            .as_ref()
            .map(|m| m.build(&h))
            .transpose()?
            .map(|m| validate_comodule(&m));
        let av = file
            .algebra
            .as_ref()
            .map(|a| a.build(&h))
            .transpose()?
            .map(|a| a.validate());
        (mv, av)
    } else {
        (None, None)
    };
    let ok = hv.is_empty()
        && mv.as_ref().is_none_or(Vec::is_empty)
        && av.as_ref().is_none_or(Vec::is_empty);
    let output = if json {
        to_json(&json!({
            "hopf": {"name": h.name(), "ring": h.ring().to_string(), "rank": h.rank(), "violations": views(&hv)},
            "module": mv.as_ref().map(|v| json!({"violations": views(v)})),
            "algebra": av.as_ref().map(|v| json!({"violations": views(v)})),
            "valid": ok,
        }))
    } else {
        let mut out = String::new();
        let mut section = |title: String, v: &[Violation]| {
            out.push_str(&title);
            out.push('\n');
            if v.is_empty() {
                out.push_str("  all axioms hold\n");
            }
            for x in v {
                out.push_str(&format!("  {x}\n"));
            }
        };
        section(format!("hopf: {}", describe(&h)), &hv);
        if let Some(v) = &mv {
            section("module:".into(), v);
        }
        if let Some(v) = &av {
            section("algebra:".into(), v);
        }
        out.push_str(if ok { "valid\n" } else { "INVALID\n" });
        out
    };
    Ok(Outcome::new(code_if(ok), output))
}

fn cmd_integral(path: &Path, json: bool) -> Result<Outcome, Error> {
    let h = SchemeFile::read(path)?.hopf()?;
    let res = left_integrals(&h)?;
    let coeffs: Vec<(String, String)> = h
        .labels()
        .iter()
        .zip(res.generator.coeffs())
        .map(|(l, c)| (l.clone(), scalar_string(c)))
        .collect();
    let output = if json {
        to_json(&json!({
            "hopf": h.name(),
            "ring": h.ring().to_string(),
            "coefficients": coeffs,
            "value_at_one": scalar_string(&res.value_at_one),
            "free_rank_one": res.is_free_rank_one,
            "summand": res.is_summand,
        }))
    } else {
        let width = coeffs.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        let mut out = format!(
            "left integral of {}\n  coefficients on the dual basis:\n",
            describe(&h)
        );
        for (l, c) in &coeffs {
            out.push_str(&format!("    {l:<width$}  {c}\n"));
        }
        out.push_str(&format!(
            "  psi(1) = {}\n",
            scalar_string(&res.value_at_one)
        ));
        out.push_str(&format!(
            "  free of rank one: {}\n",
            yes_no(res.is_free_rank_one)
        ));
        out.push_str(&format!("  direct summand: {}\n", yes_no(res.is_summand)));
        out
    };
    Ok(Outcome::new(EXIT_OK, output))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_bound(path: &Path, json: bool) -> Result<Outcome, Error> {
    let h = SchemeFile::read(path)?.hopf()?;
    let b = torsion_bound(&h)?;
    let at_one = b.integral.as_ref().map(|i| scalar_string(&i.value_at_one));
    let output = if json {
        to_json(
            &json!({"hopf": h.name(), "ring": h.ring().to_string(), "n": b.n.to_string(), "path": b.path, "value_at_one": at_one}),
        )
    } else {
        let mut out = format!(
            "torsion bound for {}\n  n = {}\n  path: {}\n",
            describe(&h),
            b.n,
            b.path
        );
        if let Some(v) = at_one {
            out.push_str(&format!("  psi(1) = {v}\n"));
        }
        out
    };
    Ok(Outcome::new(EXIT_OK, output))
}

fn read_json_value(path: &Path) -> Result<serde_json::Value, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))
}

/// Resolve `--module`: a built-in name, or a JSON file holding either a
/// module block or a whole scheme file with a `module` block.
fn resolve_module(
    file: &SchemeFile,
    h: &HopfAlgebra,
    reference: Option<&str>,
) -> Result<(String, Comodule), Error> {
    match reference {
        None => match &file.module {
            Some(m) => Ok(("module block of the file".into(), m.build(h)?)),
            None => Ok(("trivial".into(), trivial_comodule(h, 1))),
        },
        Some("trivial") => Ok(("trivial".into(), trivial_comodule(h, 1))),
        Some("regular") => Ok(("regular".into(), regular_comodule(h))),
        Some("dual-regular") => Ok(("dual-regular".into(), dual_comodule(&regular_comodule(h))?)),
        Some(p) => {
            let mut v = read_json_value(Path::new(p))?;
            if v_is_scheme(&v) {
                v = v["module"].take();
            }
            let block: ModuleBlock =
                serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
            Ok((p.to_string(), block.build(h)?))
        }
    }
}

fn v_is_scheme(v: &serde_json::Value) -> bool {
    v.get("ring").is_some() && v.get("hopf").is_some()
}

fn resolve_algebra(
    file: &SchemeFile,
    h: &HopfAlgebra,
    reference: Option<&str>,
) -> Result<(String, GradedComoduleAlgebra), Error> {
    match reference {
        None => match &file.algebra {
            Some(a) => Ok(("algebra block of the file".into(), a.build(h)?)),
            None => Ok(("trivial".into(), GradedComoduleAlgebra::trivial(h))),
        },
        Some("trivial") => Ok(("trivial".into(), GradedComoduleAlgebra::trivial(h))),
        Some("coordinate-ring") => Ok((
            "coordinate-ring".into(),
            GradedComoduleAlgebra::coordinate_ring(h),
        )),
        Some(p) => {
            let mut v = read_json_value(Path::new(p))?;
            if v_is_scheme(&v) {
                v = v["algebra"].take();
            }
            let block: AlgebraBlock =
                serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?;
            Ok((p.to_string(), block.build(h)?))
        }
    }
}

fn cmd_cohomology(
    path: &Path,
    max_degree: usize,
    module: Option<&str>,
    json: bool,
) -> Result<Outcome, Error> {
    let file = SchemeFile::read(path)?;
    let h = file.hopf()?;
    let (module_name, m) = resolve_module(&file, &h, module)?;
    let v = validate_comodule(&m);
    if !v.is_empty() {
        return Err(Error::InvalidComodule(v));
    }
    let report = verify_annihilation(&h, &m, max_degree)?;
    let output = if json {
        to_json(
            &json!({"hopf": h.name(), "ring": h.ring().to_string(), "module": module_name, "report": report}),
        )
    } else {
        let rows: Vec<[String; 3]> = report
            .degrees
            .iter()
            .map(|d| {
                let verdict = if d.degree == 0 {
                    "-"
                } else if d.annihilated {
                    "yes"
                } else {
                    "NO"
                };
                [
                    d.degree.to_string(),
                    d.presentation.text.clone(),
                    verdict.to_string(),
                ]
            })
            .collect();
        let mut out = format!(
            "cohomology of {}\ncoefficients: {} (rank {})\nn = {} (path: {})\n",
            describe(&h),
            module_name,
            m.rank(),
            report.bound,
            report.path
        );
        out.push_str(&table(&["i", "H^i", "n kills H^i"], &rows));
        out.push_str(if report.verified {
            "verified\n"
        } else {
            "FAILED\n"
        });
        out
    };
    Ok(Outcome::new(code_if(report.verified), output))
}

fn table<const N: usize>(header: &[&str; N], rows: &[[String; N]]) -> String {
    let mut width = header.map(str::len);
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        format!("  {}\n", parts.join("  ").trim_end())
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

#[derive(Serialize)]
struct CellView {
    degree: usize,
    internal: usize,
    presentation: PresentationView,
}

#[derive(Serialize)]
struct ProductView {
    left: crate::cohomology::ClassId,
    right: crate::cohomology::ClassId,
    coordinates: Vec<String>,
}

fn cmd_ring(
    path: &Path,
    max_degree: usize,
    algebra: Option<&str>,
    check_generation: bool,
    json: bool,
) -> Result<Outcome, Error> {
    let file = SchemeFile::read(path)?;
    let h = file.hopf()?;
    let (algebra_name, a) = resolve_algebra(&file, &h, algebra)?;
    let t = cohomology_ring(&h, &a, max_degree)?;
    let cells: Vec<CellView> = (0..=max_degree)
        .flat_map(|i| (0..=t.cap()).map(move |j| (i, j)))
        .map(|(i, j)| CellView {
            degree: i,
            internal: j,
            presentation: PresentationView::from(t.presentation(i, j).expect("cell in range")),
        })
        .collect();
    let products: Vec<ProductView> = t
        .products()
        .filter(|(_, c)| c.iter().any(|x| !num_traits::Zero::is_zero(x)))
        .map(|((x, y), c)| ProductView {
            left: *x,
            right: *y,
            coordinates: c.iter().map(scalar_string).collect(),
        })
        .collect();
    let generation = check_generation.then(|| generation_degree(&t));
    let commutative = t.is_graded_commutative();
    let disclaimer = format!(
        "computed up to degree {max_degree} with internal degree cap {}",
        t.cap()
    );
    let ok = generation.as_ref().is_none_or(|g| g.degree.is_some());
    let output = if json {
        to_json(&json!({
            "hopf": h.name(),
            "ring": h.ring().to_string(),
            "algebra": algebra_name,
            "cells": cells,
            "products": products,
            "graded_commutative": commutative,
            "generation": generation,
            "disclaimer": disclaimer,
        }))
    } else {
        let mut out = format!(
            "cohomology ring of {}\ncoefficient algebra: {}\n",
            describe(&h),
            algebra_name
        );
        let rows: Vec<[String; 3]> = cells
            .iter()
            .map(|c| {
                [
                    c.degree.to_string(),
                    c.internal.to_string(),
                    c.presentation.text.clone(),
                ]
            })
            .collect();
        out.push_str(&table(&["i", "j", "H^i(A_j)"], &rows));
        out.push_str("nonzero products of basis classes:\n");
        for p in &products {
            out.push_str(&format!(
                "  {} * {} = ({})\n",
                p.left,
                p.right,
                p.coordinates.join(", ")
            ));
        }
        out.push_str(&format!("graded commutative: {}\n", yes_no(commutative)));
        if let Some(g) = &generation {
            out.push_str(&format!("{g}\n"));
            let w: Vec<String> = g.witnesses.iter().map(ToString::to_string).collect();
            out.push_str(&format!(
                "  generators: {}\n",
                if w.is_empty() {
                    "unit only".into()
                } else {
                    w.join(" ")
                }
            ));
        }
        out.push_str(&format!(
            "note: {disclaimer}; nothing is claimed beyond it\n"
        ));
        out
    };
    Ok(Outcome::new(code_if(ok), output))
}

/// Parse a coefficient spec such as `Z`, `Q`, `F3`, `Z/4`, or `Z:regular`.
pub fn parse_coeff(spec: &str) -> Result<(RingSpec, bool), Error> {
    let (ring, kind) = match spec.split_once(':') {
        Some((r, k)) => (r.trim(), k.trim()),
        None => (spec.trim(), "trivial"),
    };
    let regular = match kind {
        "trivial" => false,
        "regular" => true,
        other => {
            return Err(Error::Parse(format!(
                "unknown coefficient module {other:?}"
            )))
        }
    };
    let bad = || Error::Parse(format!("bad coefficient ring {ring:?}"));
    let ring = match ring {
        "Z" => RingSpec::Integers,
        "Q" => RingSpec::Rationals,
        r if r.starts_with('F') => RingSpec::prime_field(r[1..].parse().map_err(|_| bad())?)?,
        r if r.starts_with("Z/") => RingSpec::integers_mod(r[2..].parse().map_err(|_| bad())?)?,
        _ => return Err(bad()),
    };
    Ok((ring, regular))
}

fn read_group(path: &Path) -> Result<CayleyTable, Error> {
    let v = read_json_value(path)?;
    let block = if v.is_array() {
        GroupBlock::Table {
            table: serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?,
            names: None,
        }
    } else {
        serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))?
    };
    block.table()
}

fn cmd_oracle(
    cyclic: Option<usize>,
    table_path: Option<&Path>,
    coeff: &str,
    max_degree: usize,
    json: bool,
) -> Result<Outcome, Error> {
    let (ring, regular) = parse_coeff(coeff)?;
    let group = match (cyclic, table_path) {
        (Some(0), _) => return Err(Error::InvalidTable("cyclic group of order 0".into())),
        (Some(m), _) => CayleyTable::cyclic(m),
        (None, Some(p)) => read_group(p)?,
        (None, None) => {
            return Err(Error::Parse(
                "one of --cyclic or --table is required".into(),
            ))
        }
    };
    let module = if regular {
        GroupModule::regular(group.clone(), ring)
    } else {
        GroupModule::trivial(group.clone(), ring, 1)
    };
    let bar = bar_complex_oracle(&module, max_degree)?;
    // for cyclic groups, cross-check with the period-2 resolution
    let periodic = match cyclic {
        Some(m) => {
            let generator: &ExactMatrix = module.action(1 % m);
            Some(cyclic_oracle(m, generator, max_degree)?)
        }
        None => None,
    };
    let agree = periodic.as_ref().is_none_or(|p| *p == bar);
    let texts: Vec<String> = bar.iter().map(ToString::to_string).collect();
    let output = if json {
        to_json(&json!({
            "group_order": group.order(),
            "coefficients": coeff,
            "bar": bar.iter().map(PresentationView::from).collect::<Vec<_>>(),
            "periodic_agrees": periodic.as_ref().map(|_| agree),
        }))
    } else {
        let mut out = format!(
            "bar complex of a group of order {} with {coeff} coefficients\n",
            group.order()
        );
        let rows: Vec<[String; 2]> = texts
            .iter()
            .enumerate()
            .map(|(i, t)| [i.to_string(), t.clone()])
            .collect();
        out.push_str(&table(&["i", "H^i"], &rows));
        if periodic.is_some() {
            out.push_str(if agree {
                "periodic resolution agrees\n"
            } else {
                "periodic resolution DISAGREES\n"
            });
        }
        out
    };
    Ok(Outcome::new(code_if(agree), output))
}
