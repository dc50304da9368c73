use num_rational::BigRational;
use proptest::prelude::*;

use satake::catalog;
use satake::report::{check_expected, LambdaReport};
use satake::satake::SatakeGroup;
use satake::Poly;

fn group(name: &str) -> SatakeGroup {
    SatakeGroup::from_description(&catalog::load(name).unwrap()).unwrap()
}

#[test]
fn every_expected_value_is_recomputed() {
    for desc in catalog::all().unwrap() {
        let g = SatakeGroup::from_description(&desc).unwrap();
        let (ok, detail) = check_expected(&desc, &g).unwrap();
        assert!(ok, "{}: {detail}", desc.datum.name());
    }
}

#[test]
fn classification_lines() {
    let line = |n: &str| LambdaReport::new(&group(n)).unwrap().classification;
    assert!(line("quaternion").contains("Lambda_M = Z/2; Ktilde/K = Z/2"));
    assert_eq!(line("sl2"), "Lambda_M = Z = X_*(A); torsion trivial");
    assert!(line("ramified-norm-torus").contains("torsion, nonzero"));
    assert!(line("res-torus").contains("Z/3"));
}

#[test]
fn torus_cartan_orbits_are_singletons() {
    let c = group("res-torus").cartan(None).unwrap();
    assert_eq!(c.len(), 3);
    assert!(c.orbits.iter().all(|o| o.elements.len() == 1 && o.length == 0));
}

fn exponent() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, 2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn orbit_sum_algebra_is_commutative_and_associative(a in exponent(), b in exponent(), c in exponent()) {
        let g = group("sl3");
        let ring = g.poly_ring();
        let (ma, mb, mc): (Poly, Poly, Poly) = (ring.orbit_sum(&a), ring.orbit_sum(&b), ring.orbit_sum(&c));
        prop_assert_eq!(ring.mul(&ma, &mb), ring.mul(&mb, &ma));
        prop_assert_eq!(ring.mul(&ring.mul(&ma, &mb), &mc), ring.mul(&ma, &ring.mul(&mb, &mc)));
        let prod = ring.mul(&ma, &mb);
        prop_assert!(ring.is_invariant(&prod));
        let coords = ring.to_orbit_basis(&prod).unwrap();
        prop_assert_eq!(ring.from_orbit_basis(&coords), prod);
    }

    #[test]
    fn weyl_orbits_partition_lambda(a in exponent()) {
        let g = group("gl2");
        let orbit = g.weyl_orbit(&a);
        prop_assert!(orbit.contains(&a));
        let rep = g.orbit_representative(&a);
        for mu in &orbit {
            prop_assert_eq!(&g.orbit_representative(mu), &rep);
        }
    }
}

#[test]
fn leading_term_of_orbit_sum_products() {
    // m_1 * m_1 = m_2 + 2 m_0 for SL(2)
    let g = group("sl2");
    let ring = g.poly_ring();
    let m1: Poly = ring.orbit_sum(&[1]);
    let c = ring.to_orbit_basis(&ring.mul(&m1, &m1)).unwrap();
    assert_eq!(c.get(&vec![0]), Some(&BigRational::from_integer(2.into())));
    assert_eq!(c.get(&vec![-2]), Some(&BigRational::from_integer(1.into())));
}
