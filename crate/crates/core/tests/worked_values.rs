mod common;

use num_bigint::BigInt;

use hopfcoh::cohomology::{cohomology_ring, generation_degree, verify_annihilation};
use hopfcoh::comodules::{invariants, regular_comodule, trivial_comodule, GradedComoduleAlgebra};
use hopfcoh::error::Error;
use hopfcoh::hopf::{
    alpha_p, base_change, constant_group, direct_product, mu_n, validate, Axiom, CayleyTable,
    HopfAlgebra, StructureConstants,
};
use hopfcoh::linalg::ExactMatrix;
use hopfcoh::measures::{dirac, left_integrals, phi_projection, torsion_bound, BoundPath, Measure};
use hopfcoh::ring::{int, RingSpec};

#[test]
fn integral_of_a_constant_group_is_the_sum_of_dirac_measures() {
    let z = RingSpec::Integers;
    let mut tables: Vec<CayleyTable> = (1..=6).map(CayleyTable::cyclic).collect();
    tables.push(CayleyTable::klein());
    tables.push(CayleyTable::symmetric3());
    for t in tables {
        let h = constant_group(&t, z);
        let r = left_integrals(&h).unwrap();
        let sum = (0..t.order()).fold(Measure::basis(&h, 0).scale(&int(0)), |acc, g| {
            let d = dirac(&h, g).unwrap();
            Measure::new(
                &h,
                acc.coeffs()
                    .iter()
                    .zip(d.coeffs())
                    .map(|(a, b)| a + b)
                    .collect(),
            )
            .unwrap()
        });
        assert_eq!(r.generator.coeffs(), sum.coeffs(), "order {}", t.order());
        assert_eq!(r.value_at_one, int(t.order() as i64));
        let b = torsion_bound(&h).unwrap();
        assert_eq!(
            (b.n, b.path),
            (BigInt::from(t.order()), BoundPath::Integral)
        );
    }
}

#[test]
fn integrals_of_mu_and_alpha() {
    let z = RingSpec::Integers;
    let mu2 = left_integrals(&mu_n(2, z).unwrap()).unwrap();
    assert_eq!(mu2.generator.coeffs(), [int(1), int(0)]);
    assert_eq!(mu2.value_at_one, int(1));
    for p in [2u64, 3] {
        let f = RingSpec::prime_field(p).unwrap();
        let r = left_integrals(&alpha_p(p, f).unwrap()).unwrap();
        let mut expect = vec![int(0); p as usize];
        expect[p as usize - 1] = int(1);
        assert_eq!(r.generator.coeffs(), expect.as_slice(), "alpha_{p}");
        assert_eq!(r.value_at_one, int(0));
    }
}

#[test]
fn bounds_by_path() {
    for m in [2u64, 3, 4, 6] {
        let ring = RingSpec::integers_mod(m).unwrap();
        for h in [
            constant_group(&CayleyTable::cyclic(2), ring),
            mu_n(3, ring).unwrap(),
        ] {
            let b = torsion_bound(&h).unwrap();
            assert_eq!((b.n, b.path), (BigInt::from(m), BoundPath::Characteristic));
        }
    }
    for n in 1..=4 {
        assert_eq!(
            torsion_bound(&mu_n(n, RingSpec::Integers).unwrap())
                .unwrap()
                .n,
            BigInt::from(1)
        );
    }
    assert_eq!(
        torsion_bound(&mu_n(2, RingSpec::Rationals).unwrap())
            .unwrap()
            .n,
        BigInt::from(1)
    );
}

#[test]
fn phi_examples() {
    let z = RingSpec::Integers;
    let c2 = constant_group(&CayleyTable::cyclic(2), z);
    assert_eq!(
        phi_projection(&c2, &trivial_comodule(&c2, 1)).unwrap(),
        ExactMatrix::from_ints(z, &[vec![2]])
    );
    assert_eq!(
        phi_projection(&c2, &regular_comodule(&c2)).unwrap(),
        ExactMatrix::from_ints(z, &[vec![1, 1], vec![1, 1]])
    );
    let mu2 = mu_n(2, z).unwrap();
    let phi = phi_projection(&mu2, &regular_comodule(&mu2)).unwrap();
    assert_eq!(phi, ExactMatrix::from_ints(z, &[vec![1, 0], vec![0, 0]]));
    let f2 = RingSpec::prime_field(2).unwrap();
    let a2 = alpha_p(2, f2).unwrap();
    assert_eq!(
        phi_projection(&a2, &regular_comodule(&a2)),
        Err(Error::PositiveCharacteristic)
    );
}

#[test]
fn invariants_examples() {
    let z = RingSpec::Integers;
    let c2 = constant_group(&CayleyTable::cyclic(2), z);
    assert_eq!(
        invariants(&regular_comodule(&c2)),
        ExactMatrix::from_ints(z, &[vec![1], vec![1]])
    );
    let mu2 = mu_n(2, z).unwrap();
    assert_eq!(
        invariants(&regular_comodule(&mu2)),
        ExactMatrix::from_ints(z, &[vec![1], vec![0]])
    );
    let one = constant_group(&CayleyTable::trivial(), z);
    assert_eq!(
        invariants(&trivial_comodule(&one, 3)),
        ExactMatrix::identity(z, 3)
    );
}

#[test]
fn annihilation_reports() {
    let z = RingSpec::Integers;
    let c2 = constant_group(&CayleyTable::cyclic(2), z);
    let r = verify_annihilation(&c2, &trivial_comodule(&c2, 1), 4).unwrap();
    assert_eq!(r.bound, "2");
    assert!(r.verified);
    let texts: Vec<&str> = r
        .degrees
        .iter()
        .map(|d| d.presentation.text.as_str())
        .collect();
    assert_eq!(texts, ["Z", "0", "Z/2", "0", "Z/2"]);

    let mu3 = mu_n(3, z).unwrap();
    let r = verify_annihilation(&mu3, &regular_comodule(&mu3), 3).unwrap();
    assert_eq!(r.bound, "1");
    assert!(
        r.verified
            && r.degrees[1..]
                .iter()
                .all(|d| d.presentation.annihilators.is_empty())
    );

    let f3 = RingSpec::prime_field(3).unwrap();
    let a3 = alpha_p(3, f3).unwrap();
    let r = verify_annihilation(&a3, &regular_comodule(&a3), 2).unwrap();
    assert_eq!((r.bound.as_str(), r.verified), ("3", true));
}

#[test]
fn trivial_group_ring_is_concentrated_in_degree_zero() {
    let h = constant_group(&CayleyTable::trivial(), RingSpec::Integers);
    let a = GradedComoduleAlgebra::coordinate_ring(&h);
    let t = cohomology_ring(&h, &a, 3).unwrap();
    assert_eq!(t.presentation(0, 0).unwrap().to_string(), "Z");
    assert!((1..=3).all(|i| t.presentation(i, 0).unwrap().is_zero()));
    assert_eq!(generation_degree(&t).degree, Some(0));
}

#[test]
fn corrupted_antipode_on_mu2() {
    let z = RingSpec::Integers;
    let h = mu_n(2, z).unwrap();
    let mut sc: StructureConstants = h.constants();
    sc.antipode = ExactMatrix::zeros(z, 2, 2);
    let broken = HopfAlgebra::from_constants(z, "mu_2 with zero antipode", sc).unwrap();
    let axioms: Vec<Axiom> = validate(&broken).into_iter().map(|v| v.axiom).collect();
    assert!(axioms.contains(&Axiom::AntipodeLeft) && axioms.contains(&Axiom::AntipodeRight));
    assert!(matches!(torsion_bound(&broken), Err(Error::InvalidHopf(_))));
}

#[test]
fn constructor_preconditions() {
    let z = RingSpec::Integers;
    assert!(alpha_p(2, z).is_err());
    assert!(alpha_p(4, RingSpec::integers_mod(4).unwrap()).is_err());
    let f2 = RingSpec::prime_field(2).unwrap();
    assert!(base_change(&alpha_p(2, f2).unwrap(), RingSpec::Rationals).is_err());
    assert!(dirac(&mu_n(2, z).unwrap(), 0).is_err());
    let c2 = constant_group(&CayleyTable::cyclic(2), z);
    let with_trivial = direct_product(&c2, &constant_group(&CayleyTable::trivial(), z)).unwrap();
    assert_eq!(with_trivial.mult_triples(), c2.mult_triples());
    assert_eq!(with_trivial.comult_triples(), c2.comult_triples());
}
