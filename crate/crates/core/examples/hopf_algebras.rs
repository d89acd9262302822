//! Build the finite flat group schemes shipped with the library, check the
//! Hopf axioms on each, and show what a violation looks like.
//!
//! cargo run --example hopf_algebras

use hopfcoh::hopf::{
    alpha_p, base_change, constant_group, direct_product, dual, mu_n, validate, CayleyTable,
    HopfAlgebra,
};
use hopfcoh::linalg::ExactMatrix;
use hopfcoh::ring::RingSpec;

fn describe(h: &HopfAlgebra) {
    let violations = validate(h);
    println!(
        "{:<28} over {:<4} rank {}  commutative: {:<5} cocommutative: {:<5} {}",
        h.name(),
        h.ring().to_string(),
        h.rank(),
        h.is_commutative(),
        h.is_cocommutative(),
        if violations.is_empty() {
            "valid".to_string()
        } else {
            format!("{} violation(s)", violations.len())
        }
    );
}

fn main() -> hopfcoh::error::Result<()> {
    let z = RingSpec::Integers;
    let f2 = RingSpec::prime_field(2)?;

    let s3 = constant_group(&CayleyTable::symmetric3(), z).renamed("S_3");
    let schemes = vec![
        constant_group(&CayleyTable::cyclic(4), z).renamed("C_4"),
        constant_group(&CayleyTable::klein(), z).renamed("Klein"),
        dual(&s3)?,
        s3,
        mu_n(3, z)?,
        base_change(&mu_n(2, z)?, RingSpec::integers_mod(6)?)?,
        alpha_p(2, f2)?,
        direct_product(&alpha_p(2, f2)?, &mu_n(2, f2)?)?,
    ];
    for h in &schemes {
        describe(h);
    }

    // the dual of a dual is the original algebra
    let c3 = constant_group(&CayleyTable::cyclic(3), z);
    println!("\ndual(dual(C_3)) == C_3: {}", dual(&dual(&c3)?)? == c3);

    // replace the antipode of mu_2 by zero and let the validator find it
    let mu2 = mu_n(2, z)?;
    let mut constants = mu2.constants();
    constants.antipode = ExactMatrix::zeros(z, 2, 2);
    let broken = HopfAlgebra::from_constants(z, "mu_2, zero antipode", constants)?;
    println!("\n{}:", broken.name());
    for v in validate(&broken) {
        println!("  {v}");
    }
    Ok(())
}
