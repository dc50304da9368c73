use num_rational::BigRational;

use super::*;
use crate::catalog;
use crate::root_datum::TwistSpec;
use crate::satake::OrbitSumPoly;
use crate::Error;

fn twist_of(name: &str) -> InnerTwist {
    let desc = catalog::load(name).unwrap();
    InnerTwist::new(&desc.datum, desc.twist.as_ref().unwrap()).unwrap()
}

fn custom(name: &str, levi: Vec<usize>, w_sigma: Vec<usize>) -> crate::Result<InnerTwist> {
    InnerTwist::new(&catalog::load(name).unwrap().datum, &TwistSpec { levi, w_sigma })
}

#[test]
fn catalog_twists_validate() {
    for name in ["quaternion", "pgln-inner", "gl2-inner"] {
        let tw = twist_of(name);
        assert!(tw.report().passed(), "{name}");
        let (lambda, agree) = tw.twisted_lambda().unwrap();
        assert_eq!(agree, Some(true), "{name}: {lambda}");
    }
}

#[test]
fn identity_twist_is_not_anisotropic() {
    match custom("pgl2", vec![0, 1], vec![]).map(|_| ()) {
        Err(Error::TwistCheckFailed { clause, .. }) => assert_eq!(clause, "anisotropy"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn non_type_a_levi_is_rejected() {
    let desc = catalog::load("sp4").unwrap();
    let all: Vec<usize> = (0..desc.datum.absolute().len()).collect();
    let simple = desc.datum.absolute().simple().to_vec();
    let report = check_twist(&desc.datum, &TwistSpec { levi: all.clone(), w_sigma: simple.clone() }).unwrap();
    assert_eq!(report.cuspidal, Some(true));
    assert_eq!(report.coxeter, Some(true));
    match validate_twist(&desc.datum, &TwistSpec { levi: all, w_sigma: simple }) {
        Err(Error::TwistCheckFailed { clause, .. }) => assert_eq!(clause, "(b) type A"),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn quaternion_transfer() {
    let tw = twist_of("quaternion");
    let t = TransferMap::new(&tw).unwrap();
    // X_*(T) = Z for PGL(2) maps onto Z/2
    assert_eq!(t.apply_lattice(&[1]), vec![1]);
    assert_eq!(t.apply_lattice(&[2]), vec![0]);
    let image = t.apply_orbit_sum(&[1]).unwrap();
    assert_eq!(image.get(&vec![1]), Some(&BigRational::from_integer(2.into())));
    assert!(t.check_surjective(6, 6).unwrap().surjective);
    assert!(t.check_homomorphism(6, 100, 7).unwrap().passed());
    assert!(t.check_constant_term_square(None, 6).unwrap().commutes);
    assert!(t.check_weyl_map().unwrap().passed());
}

#[test]
fn other_transfers() {
    for name in ["pgln-inner", "gl2-inner"] {
        let tw = twist_of(name);
        let t = TransferMap::new(&tw).unwrap();
        assert!(t.check_surjective(6, 6).unwrap().surjective, "{name}");
        assert!(t.check_homomorphism(4, 30, 1).unwrap().passed(), "{name}");
        assert!(t.check_constant_term_square(None, 3).unwrap().commutes, "{name}");
    }
}

#[test]
fn sl2_constant_term_to_torus() {
    let g = crate::satake::SatakeGroup::from_description(&catalog::load("sl2").unwrap()).unwrap();
    let m: OrbitSumPoly<BigRational> = g.poly_ring().orbit_sum(&[1]);
    let c = constant_term(&g, &[], &m).unwrap();
    assert_eq!(c.len(), 2);
    assert!(c.contains_key(&vec![1]) && c.contains_key(&vec![-1]));
    assert!(matches!(
        constant_term(&crate::satake::SatakeGroup::from_description(&catalog::load("quaternion").unwrap()).unwrap(), &[], &m),
        Err(Error::LeviNotContained { .. }) | Err(Error::InvalidInput(_))
    ));
}
