use proptest::prelude::*;

use satake::catalog;
use satake::root_datum::TwistSpec;
use satake::transfer::{validate_twist, InnerTwist, TransferMap};
use satake::{Error, Poly};

fn twist(name: &str) -> InnerTwist {
    let desc = catalog::load(name).unwrap();
    let spec = desc.twist.clone().unwrap_or_else(TwistSpec::identity);
    InnerTwist::new(&desc.datum, &spec).unwrap()
}

#[test]
fn identity_twist_is_the_identity_map() {
    for name in ["sl2", "gl2", "sl3", "unramified-su3", "res-torus"] {
        let tw = twist(name);
        let t = TransferMap::new(&tw).unwrap();
        let n = t.lattice_matrix().rows();
        assert_eq!(t.lattice_matrix().to_rows(), satake::abelian::Matrix::<i64>::identity(n).to_rows(), "{name}");
    }
}

#[test]
fn quaternion_sends_m1_to_twice_the_nontrivial_class() {
    let tw = twist("quaternion");
    let t = TransferMap::new(&tw).unwrap();
    let image = t.apply_orbit_sum(&[1]).unwrap();
    assert_eq!(image.len(), 1);
    assert_eq!(image[&vec![1]], num_rational::BigRational::from_integer(2.into()));
}

#[test]
fn w_sigma_outside_the_levi_is_rejected() {
    let datum = catalog::load("pgl3").unwrap().datum;
    let levi = datum.absolute().simple()[..1].to_vec();
    let levi = vec![levi[0], datum.absolute().negative_of(levi[0])];
    let other = datum.absolute().simple()[1];
    match validate_twist(&datum, &TwistSpec { levi, w_sigma: vec![other] }) {
        Err(Error::TwistCheckFailed { clause, .. }) => assert_eq!(clause, "w_sigma in W(M)"),
        other => panic!("unexpected {other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn transfer_is_additive_and_multiplicative(k in 0usize..3, a in prop::collection::vec(-3i64..=3, 2), b in prop::collection::vec(-3i64..=3, 2)) {
        let tw = twist(["quaternion", "pgln-inner", "gl2-inner"][k]);
        let t = TransferMap::new(&tw).unwrap();
        let n = tw.source().lambda().coord_len();
        let (ma, mb): (Poly, Poly) = (t.source_ring().orbit_sum(&a[..n]), t.source_ring().orbit_sum(&b[..n]));
        let sum = t.apply(&ma.add(&mb)).unwrap();
        prop_assert_eq!(sum, t.apply(&ma).unwrap().add(&t.apply(&mb).unwrap()));
        let prod = t.apply(&t.source_ring().mul(&ma, &mb)).unwrap();
        prop_assert_eq!(prod, t.target_ring().mul(&t.apply(&ma).unwrap(), &t.apply(&mb).unwrap()));
    }
}
