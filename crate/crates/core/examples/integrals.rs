//! Left integrals on the dual and the integer `n` that kills higher
//! cohomology, for every kind of scheme the library can build.
//!
//! cargo run --example integrals

use hopfcoh::hopf::{alpha_p, constant_group, mu_n, CayleyTable, HopfAlgebra};
use hopfcoh::measures::{left_integrals, torsion_bound};
use hopfcoh::ring::RingSpec;

fn main() -> hopfcoh::error::Result<()> {
    let z = RingSpec::Integers;
    let schemes: Vec<HopfAlgebra> = vec![
        constant_group(&CayleyTable::cyclic(5), z).renamed("C_5"),
        constant_group(&CayleyTable::symmetric3(), z).renamed("S_3"),
        constant_group(&CayleyTable::klein(), RingSpec::integers_mod(4)?).renamed("Klein"),
        mu_n(4, z)?,
        alpha_p(3, RingSpec::prime_field(3)?)?,
    ];

    println!(
        "{:<8} {:<5} {:<60} {:>6} {:>3}  path",
        "scheme", "ring", "integral", "psi(1)", "n"
    );
    for h in &schemes {
        let integral = left_integrals(h)?;
        let bound = torsion_bound(h)?;
        println!(
            "{:<8} {:<5} {:<60} {:>6} {:>3}  {}",
            h.name(),
            h.ring().to_string(),
            integral.generator.to_string(),
            integral.value_at_one.to_string(),
            bound.n,
            bound.path
        );
    }
    Ok(())
}
