//! Compute H^i(G, M) through a fixed degree and check that the integer
//! produced from the integral kills every group above degree 0.
//!
//! cargo run --release --example annihilation

use hopfcoh::cohomology::verify_annihilation;
use hopfcoh::comodules::{dual_comodule, regular_comodule, trivial_comodule, Comodule};
use hopfcoh::hopf::{alpha_p, constant_group, mu_n, CayleyTable, HopfAlgebra};
use hopfcoh::linalg::ExactMatrix;
use hopfcoh::ring::RingSpec;

fn report(
    h: &HopfAlgebra,
    m: &Comodule,
    label: &str,
    max_degree: usize,
) -> hopfcoh::error::Result<()> {
    let r = verify_annihilation(h, m, max_degree)?;
    let groups: Vec<&str> = r
        .degrees
        .iter()
        .map(|d| d.presentation.text.as_str())
        .collect();
    println!(
        "{:<8} {:<14} n = {:<2} H^0..H^{max_degree} = {:<36} {}",
        h.name(),
        label,
        r.bound,
        groups.join(", "),
        if r.verified { "verified" } else { "FAILED" }
    );
    Ok(())
}

fn main() -> hopfcoh::error::Result<()> {
    let z = RingSpec::Integers;
    for (name, t) in [
        ("C_2", CayleyTable::cyclic(2)),
        ("C_4", CayleyTable::cyclic(4)),
        ("Klein", CayleyTable::klein()),
    ] {
        let h = constant_group(&t, z).renamed(name);
        report(&h, &trivial_comodule(&h, 1), "trivial", 4)?;
    }

    let c4 = constant_group(&CayleyTable::cyclic(4), z).renamed("C_4");
    let rot = ExactMatrix::from_ints(z, &[vec![0, -1], vec![1, 0]]);
    let mut action = vec![ExactMatrix::identity(z, 2)];
    for k in 1..4 {
        action.push(action[k - 1].mul(&rot)?);
    }
    report(
        &c4,
        &Comodule::from_group_action(&c4, &action)?,
        "rotation",
        4,
    )?;

    let s3 = constant_group(&CayleyTable::symmetric3(), z).renamed("S_3");
    report(
        &s3,
        &dual_comodule(&regular_comodule(&s3))?,
        "dual regular",
        3,
    )?;

    let mu3 = mu_n(3, z)?;
    report(&mu3, &regular_comodule(&mu3), "regular", 3)?;

    let a2 = alpha_p(2, RingSpec::prime_field(2)?)?;
    report(&a2, &trivial_comodule(&a2, 1), "trivial", 4)?;
    Ok(())
}
