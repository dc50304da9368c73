use num_rational::BigRational;

use super::*;
use crate::catalog;

fn group(name: &str) -> SatakeGroup {
    SatakeGroup::from_description(&catalog::load(name).unwrap()).unwrap()
}

#[test]
fn lambda_examples() {
    let sl2 = group("sl2");
    assert_eq!(sl2.lambda().to_string(), "Z");
    assert!(sl2.is_quasi_split());
    let q = group("quaternion");
    assert_eq!(q.lambda().to_string(), "Z/2");
    assert_eq!(q.ktilde_over_k().to_string(), "Z/2");
    assert_eq!(group("ramified-norm-torus").lambda().to_string(), "Z/2");
    assert_eq!(group("pgln-inner").lambda().to_string(), "Z/3");
    assert_eq!(group("gl2-inner").lambda().to_string(), "Z");
}

#[test]
fn relative_weyl_orders() {
    assert_eq!(group("sl2").relative_weyl().order(), 2);
    assert_eq!(group("quaternion").relative_weyl().order(), 1);
    let su3 = group("unramified-su3");
    assert_eq!(su3.relative_weyl().order(), 2);
    let m = &su3.relative_weyl().matrices()[1];
    assert_eq!(su3.lambda().apply(m, &[1]), vec![-1]);
}

#[test]
fn special_types() {
    assert_eq!(group("sl2").special_type(), &[0]);
    assert!(group("quaternion").special_type().is_empty());
    assert!(group("pgln-inner").special_type().is_empty());
    assert_eq!(group("unramified-su3").special_type(), &[0, 1]);
}

#[test]
fn sl2_cartan_chain() {
    let g = group("sl2");
    let c = g.cartan(Some(3)).unwrap();
    assert_eq!(c.len(), 4);
    let reps: Vec<Vec<i64>> = c.orbits.iter().map(|o| o.representative.clone()).collect();
    assert_eq!(reps, vec![vec![0], vec![-1], vec![-2], vec![-3]]);
    for a in 0..4 {
        for b in 0..4 {
            assert_eq!(c.preceq(&g, a, b), a <= b, "{a} {b}");
        }
    }
    assert_eq!(c.hasse(&g), vec![(0, 1), (1, 2), (2, 3)]);
}

#[test]
fn quaternion_cartan() {
    let g = group("quaternion");
    let c = g.cartan(None).unwrap();
    assert_eq!(c.len(), 2);
    assert!(!c.preceq(&g, 0, 1) && !c.preceq(&g, 1, 0));
    assert!(matches!(group("sl2").cartan(None), Err(crate::Error::BoundRequired(_))));
}

#[test]
fn semidirect_on_small_balls() {
    for name in ["sl2", "pgl2", "quaternion", "unramified-su3", "ramified-norm-torus"] {
        let r = group(name).check_semidirect(6, 3).unwrap();
        assert!(r.passed(), "{name}: {r:?}");
    }
}

#[test]
fn broken_sigma_is_detected() {
    let g = group("pgl2");
    let iw = g.iwahori_weyl();
    // conjugation by the affine reflection does not preserve the base alcove
    let s0 = iw.simple_affine()[1].clone();
    let r = g.check_semidirect_with(6, 3, &|x| iw.conj(&s0, x)).unwrap();
    assert!(!r.passed());
    assert!(r.counterexample.is_some());
}

#[test]
fn orbit_sums_sl2() {
    let g = group("sl2");
    let ring = PolyRing::new(vec![], 1, g.relative_weyl().matrices().to_vec());
    let m1: OrbitSumPoly<BigRational> = ring.orbit_sum(&[1]);
    let sq = ring.mul(&m1, &m1);
    let expected = ring.orbit_sum::<BigRational>(&[2]).add(&ring.one::<BigRational>().scale(&BigRational::from_integer(2.into())));
    assert_eq!(sq, expected);
    assert_eq!(ring.mul(&ring.one(), &m1), m1);
    let basis = ring.to_orbit_basis(&sq).unwrap();
    assert_eq!(basis.len(), 2);
}

#[test]
fn orbit_sums_quaternion() {
    let ring = PolyRing::new(vec![2], 1, vec![crate::abelian::Matrix::identity(1)]);
    let m1: OrbitSumPoly<BigRational> = ring.orbit_sum(&[1]);
    assert_eq!(ring.mul(&m1, &m1), ring.one());
}

#[test]
fn exact_sequences() {
    let q = group("quaternion").exact_sequence_report().unwrap();
    assert_eq!(q.lambda, "Z/2");
    assert_eq!(q.cokernel, "Z/2");
    assert_eq!(q.split_torus.as_deref(), Some("0"));
    assert_eq!(q.kernel_term.as_deref(), Some("Z/2"));
    assert_eq!(q.exact, Some(true));
    let s = group("sl2").exact_sequence_report().unwrap();
    assert!(s.cokernel_trivial);
    assert_eq!(s.exact, Some(true));
}

#[test]
fn parahoric_action_matches_relative_weyl() {
    for name in ["sl2", "sl3", "quaternion", "unramified-su3", "res-torus"] {
        let r = group(name).check_parahoric_action().unwrap();
        assert!(r.identified, "{name}: {r:?}");
    }
}

#[test]
fn double_cosets_match_cartan() {
    for name in ["sl2", "pgl2", "quaternion", "unramified-su3"] {
        let r = group(name).check_double_cosets(6, 3).unwrap();
        assert!(r.passed(), "{name}: {r:?}");
        assert!(r.cartan_in_ball > 0);
    }
}
