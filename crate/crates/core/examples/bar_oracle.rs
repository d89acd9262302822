//! For constant groups the comodule complex can be compared with the
//! classical bar complex and, for cyclic groups, the periodic resolution.
//!
//! cargo run --release --example bar_oracle

use hopfcoh::cohomology::{
    bar_complex_oracle, build_complex, cohomology_table, cyclic_oracle, GroupModule,
};
use hopfcoh::comodules::{regular_comodule, tensor_comodule, trivial_comodule, Comodule};
use hopfcoh::hopf::{constant_group, CayleyTable};
use hopfcoh::linalg::{ExactMatrix, ModulePresentation};
use hopfcoh::ring::RingSpec;

fn texts(table: &[ModulePresentation]) -> String {
    table
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn compare(label: &str, m: &Comodule, max_degree: usize) -> hopfcoh::error::Result<()> {
    let ours = cohomology_table(&build_complex(m.parent(), m, max_degree)?)?;
    let bar = bar_complex_oracle(&GroupModule::from_comodule(m)?, max_degree)?;
    println!(
        "{label:<22} {:<30} {}",
        texts(&ours),
        if ours == bar { "agrees" } else { "DIFFERS" }
    );
    Ok(())
}

fn main() -> hopfcoh::error::Result<()> {
    let z = RingSpec::Integers;
    for (name, t) in [
        ("C_3", CayleyTable::cyclic(3)),
        ("Klein", CayleyTable::klein()),
        ("S_3", CayleyTable::symmetric3()),
    ] {
        let h = constant_group(&t, z);
        compare(&format!("{name} trivial"), &trivial_comodule(&h, 1), 3)?;
        compare(&format!("{name} regular"), &regular_comodule(&h), 3)?;
    }
    let c2 = constant_group(&CayleyTable::cyclic(2), z);
    let reg = regular_comodule(&c2);
    compare("C_2 reg ⊗ reg", &tensor_comodule(&reg, &reg)?, 3)?;

    println!("\nperiodic resolution for C_m with trivial Z coefficients:");
    for m in 2..=5 {
        let periodic = cyclic_oracle(m, &ExactMatrix::identity(z, 1), 4)?;
        println!("  C_{m}: {}", texts(&periodic));
    }
    Ok(())
}
