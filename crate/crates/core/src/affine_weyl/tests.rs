use super::*;
use crate::catalog;

fn group(name: &str) -> IwahoriWeyl {
    let g = catalog::load(name).unwrap();
    IwahoriWeyl::new(&g.datum, g.twist.as_ref()).unwrap()
}

#[test]
fn sl2_multiplication_and_length() {
    let iw = group("sl2");
    let s = iw.finite(1);
    let t = iw.translation(vec![1]);
    assert_eq!(iw.mul(&s, &t), iw.element(vec![-1], 1));
    assert_eq!(iw.length(&t), 2);
    assert_eq!(iw.length(&iw.identity()), 0);
    let x = iw.mul(&t, &s);
    assert_eq!(iw.mul(&x, &iw.inv(&x)), iw.identity());
}

#[test]
fn pgl2_omega() {
    let iw = group("pgl2");
    let t = iw.translation(vec![1]);
    assert_eq!(iw.length(&t), 1);
    assert_eq!(iw.kottwitz(&t), vec![1]);
    let omega = iw.omega_representative(&[1]);
    assert_eq!(iw.length(&omega), 0);
    assert_eq!(omega, iw.element(vec![1], 1));
    assert_eq!(iw.enumerate_ball(0, None).unwrap().len(), 2);
}

#[test]
fn sl2_balls() {
    let iw = group("sl2");
    assert_eq!(iw.enumerate_ball(0, None).unwrap(), vec![iw.identity()]);
    let b1 = iw.enumerate_ball(1, None).unwrap();
    assert_eq!(b1.len(), 3);
    assert!(b1.contains(&iw.element(vec![1], 1)));
    assert!(b1.contains(&iw.finite(1)));
}

#[test]
fn torus_requires_bound() {
    let g = catalog::load("gl2").unwrap();
    let iw = IwahoriWeyl::new(&g.datum, None).unwrap();
    assert!(matches!(iw.enumerate_ball(2, None), Err(crate::Error::BoundRequired(_))));
    assert!(!iw.enumerate_ball(2, Some(2)).unwrap().is_empty());
}

#[test]
fn quaternion_sigma_negates() {
    let iw = group("quaternion");
    for n in -3..=3 {
        assert_eq!(iw.sigma_act(&iw.translation(vec![n])), iw.translation(vec![-n]));
    }
    assert_eq!(iw.sigma_action().affine_perm(), &[1, 0]);
}

#[test]
fn sl2_bruhat() {
    let iw = group("sl2");
    let s1 = iw.simple_affine()[0].clone();
    let s0 = iw.simple_affine()[1].clone();
    let s0s1 = iw.mul(&s0, &s1);
    assert!(iw.bruhat_leq(&s0, &s0s1));
    assert!(iw.bruhat_leq(&s1, &s0s1));
    assert!(!iw.bruhat_leq(&s1, &s0));
    assert!(iw.bruhat_leq(&iw.identity(), &s0s1));
}

#[test]
fn sl2_min_double_coset() {
    let iw = group("sl2");
    let t = iw.translation(vec![1]);
    let x = iw.min_double_coset(&t, &[0]);
    assert_eq!(x, iw.simple_affine()[1]);
    assert_eq!(iw.length(&x), 1);
}

#[test]
fn simple_affine_reflections_are_involutions_of_length_one() {
    for name in ["sl2", "pgl2", "sl3", "pgl3", "sp4", "sl4", "ramified-su3"] {
        let iw = group(name);
        for s in iw.simple_affine() {
            assert_eq!(iw.length(s), 1, "{name}");
            assert_eq!(iw.mul(s, s), iw.identity(), "{name}");
        }
    }
}

#[test]
fn sigma_preserves_length_and_kottwitz() {
    for name in ["quaternion", "pgln-inner", "gl2-inner", "unramified-su3"] {
        let iw = group(name);
        for x in iw.enumerate_ball(4, Some(2)).unwrap() {
            let y = iw.sigma_act(&x);
            assert_eq!(iw.length(&x), iw.length(&y), "{name}");
            assert_eq!(iw.sigma_on_kottwitz(&iw.kottwitz(&x)), iw.kottwitz(&y), "{name}");
        }
    }
}
