use proptest::prelude::*;

use satake::affine_weyl::{AffineElement, IwahoriWeyl};
use satake::catalog;

fn iwahori(name: &str) -> IwahoriWeyl {
    let desc = catalog::load(name).unwrap();
    IwahoriWeyl::new(&desc.datum, desc.twist.as_ref()).unwrap()
}

const NAMES: [&str; 6] = ["sl2", "gl2", "sl3", "sp4", "quaternion", "unramified-su3"];

fn pick(iw: &IwahoriWeyl, seed: usize, norm: i64) -> AffineElement {
    let all = iw.box_elements(norm);
    all[seed % all.len()].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn length_and_kottwitz_laws(k in 0usize..NAMES.len(), a in 0usize..10_000, b in 0usize..10_000) {
        let iw = iwahori(NAMES[k]);
        let (x, y) = (pick(&iw, a, 2), pick(&iw, b, 2));
        let xy = iw.mul(&x, &y);
        prop_assert!(iw.length(&xy) <= iw.length(&x) + iw.length(&y));
        prop_assert_eq!(iw.length(&iw.inv(&x)), iw.length(&x));
        prop_assert_eq!(iw.mul(&x, &iw.inv(&x)), iw.identity());
        let kx = iw.kottwitz(&x);
        let ky = iw.kottwitz(&y);
        let g = iw.kottwitz_map().group();
        let big = |v: &[i64]| v.iter().map(|&t| num_bigint::BigInt::from(t)).collect::<Vec<_>>();
        let sum: Vec<num_bigint::BigInt> =
            g.lift(&big(&kx)).iter().zip(g.lift(&big(&ky))).map(|(p, q)| p + q).collect();
        let expected: Vec<i64> = g.canon(&sum).iter().map(|v| i64::try_from(v).unwrap()).collect();
        prop_assert_eq!(iw.kottwitz(&xy), expected);
    }

    #[test]
    fn sigma_is_a_length_preserving_automorphism(k in 0usize..NAMES.len(), a in 0usize..10_000, b in 0usize..10_000) {
        let iw = iwahori(NAMES[k]);
        let (x, y) = (pick(&iw, a, 2), pick(&iw, b, 2));
        prop_assert_eq!(iw.length(&iw.sigma_act(&x)), iw.length(&x));
        prop_assert_eq!(iw.sigma_act(&iw.mul(&x, &y)), iw.mul(&iw.sigma_act(&x), &iw.sigma_act(&y)));
    }

    #[test]
    fn simple_reflections_change_length_by_one(k in 0usize..NAMES.len(), a in 0usize..10_000) {
        let iw = iwahori(NAMES[k]);
        let x = pick(&iw, a, 2);
        for s in iw.simple_affine() {
            let l = iw.length(&iw.mul(&x, s)) as i64 - iw.length(&x) as i64;
            prop_assert!(l == 1 || l == -1);
        }
    }

    #[test]
    fn bruhat_order_is_graded(k in 0usize..3, a in 0usize..10_000, b in 0usize..10_000) {
        let iw = iwahori(["sl2", "sl3", "gl2"][k]);
        let (x, y) = (pick(&iw, a, 1), pick(&iw, b, 1));
        prop_assert!(iw.bruhat_leq(&x, &x));
        if iw.bruhat_leq(&x, &y) && x != y {
            prop_assert!(iw.length(&x) < iw.length(&y));
            prop_assert!(!iw.bruhat_leq(&y, &x));
        }
    }
}

#[test]
fn ball_sizes_match_the_infinite_dihedral_group() {
    let iw = iwahori("sl2");
    for l in 0..6 {
        assert_eq!(iw.enumerate_ball(l, None).unwrap().len(), 2 * l + 1);
    }
}
