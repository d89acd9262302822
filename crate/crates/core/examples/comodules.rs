//! Comodules, their invariants, the projection `phi` built from an
//! integral, and short exact sequences whose connecting data is bounded by
//! the same integer.
//!
//! cargo run --example comodules

use hopfcoh::comodules::{
    dual_comodule, invariants, regular_comodule, ses_cokernel_exponent, tensor_comodule, Comodule,
    ShortExactSequence,
};
use hopfcoh::hopf::{constant_group, mu_n, CayleyTable};
use hopfcoh::linalg::ExactMatrix;
use hopfcoh::measures::{phi_projection, torsion_bound};
use hopfcoh::ring::{int, RingSpec};

fn main() -> hopfcoh::error::Result<()> {
    let z = RingSpec::Integers;
    let c3 = constant_group(&CayleyTable::cyclic(3), z);
    let reg = regular_comodule(&c3);
    let m = tensor_comodule(&reg, &dual_comodule(&reg)?)?;
    println!("C_3 acting on reg ⊗ reg*: rank {}", m.rank());
    println!("invariants (as columns):\n{}", invariants(&m));

    let phi = phi_projection(&c3, &reg)?;
    println!("phi on the regular comodule:\n{phi}");
    println!("phi^2 == 3 phi: {}", phi.mul(&phi)? == phi.scale(&int(3)));

    // the augmentation sequence 0 → I → Z[C_3] → Z → 0
    let e = CayleyTable::cyclic(3).identity();
    let cols: Vec<Vec<_>> = (0..3)
        .filter(|&x| x != e)
        .map(|x| {
            (0..3)
                .map(|y| int(i64::from(y == x) - i64::from(y == e)))
                .collect()
        })
        .collect();
    let s = ShortExactSequence::from_submodule(&reg, &ExactMatrix::from_columns(z, 3, &cols))?;
    println!(
        "augmentation: ranks {} → {} → {}, cokernel exponent {}, n = {}",
        s.sub().rank(),
        s.mid().rank(),
        s.quot().rank(),
        ses_cokernel_exponent(&s)?,
        torsion_bound(&c3)?.n
    );

    // mu_2 acting on Z^2 through its character group
    let mu2 = mu_n(2, z)?;
    let sign: Comodule = regular_comodule(&mu2);
    println!("mu_2 regular invariants:\n{}", invariants(&sign));
    Ok(())
}
