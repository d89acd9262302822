//! Cup products on H^*(G, A) for a graded comodule algebra A, and the degree
//! in which the computed part of the ring is generated.
//!
//! cargo run --release --example cohomology_ring

use hopfcoh::cohomology::{cohomology_ring, generation_degree, ClassId, CohomologyRingTable};
use hopfcoh::comodules::{graded_algebra_from_action, Comodule, GradedComoduleAlgebra};
use hopfcoh::hopf::{constant_group, CayleyTable};
use hopfcoh::linalg::ExactMatrix;
use hopfcoh::ring::{scalar_string, RingSpec};

fn show(title: &str, t: &CohomologyRingTable) {
    println!("{title}");
    for i in 0..=t.max_degree() {
        let cells: Vec<String> = (0..=t.cap())
            .map(|j| {
                format!(
                    "{:<6}",
                    t.presentation(i, j)
                        .map(ToString::to_string)
                        .unwrap_or_default()
                )
            })
            .collect();
        println!("  H^{i}: {}", cells.join(" "));
    }
    // products with the unit class are left out
    let positive = |x: &ClassId| x.degree > 0 || x.internal > 0;
    for ((x, y), c) in t
        .products()
        .filter(|((x, y), c)| positive(x) && positive(y) && c.iter().any(|v| v != &t.ring().zero()))
    {
        let c: Vec<String> = c.iter().map(scalar_string).collect();
        println!("  {x} * {y} = ({})", c.join(", "));
    }
    println!("  graded commutative: {}", t.is_graded_commutative());
    println!("  {}\n", generation_degree(t));
}

fn main() -> hopfcoh::error::Result<()> {
    let f2 = RingSpec::prime_field(2)?;
    let c2 = constant_group(&CayleyTable::cyclic(2), f2);
    show(
        "C_2 over F_2:",
        &cohomology_ring(&c2, &GradedComoduleAlgebra::trivial(&c2), 4)?,
    );

    let f3 = RingSpec::prime_field(3)?;
    let c3 = constant_group(&CayleyTable::cyclic(3), f3);
    show(
        "C_3 over F_3:",
        &cohomology_ring(&c3, &GradedComoduleAlgebra::trivial(&c3), 4)?,
    );

    // Sym(sign) for C_2 over Z: the generator of internal degree 1 is negated
    let z = RingSpec::Integers;
    let c2z = constant_group(&CayleyTable::cyclic(2), z);
    let sign = Comodule::from_group_action(
        &c2z,
        &[
            ExactMatrix::identity(z, 1),
            ExactMatrix::from_ints(z, &[vec![-1]]),
        ],
    )?;
    show(
        "C_2 over Z with Sym(sign), internal degree <= 2:",
        &cohomology_ring(&c2z, &graded_algebra_from_action(&sign, 2), 3)?,
    );
    Ok(())
}
