use chowcalc::chow::{character_to_chern, chern_to_character, todd, Ambient, ChernCharacter, ChernClasses};
use chowcalc::Rational;
use proptest::prelude::*;

/// Coefficients of `(x / (1 - e^{-x}))^{n+1}` up to `x^n`, from the series
/// `x/(1-e^{-x}) = 1 + x/2 + x^2/12 + 0 x^3 - x^4/720`.
fn todd_by_series(n: usize) -> Vec<Rational> {
    let base = [
        Rational::one(),
        Rational::frac(1, 2),
        Rational::frac(1, 12),
        Rational::zero(),
    ];
    let mut acc = vec![Rational::zero(); n + 1];
    acc[0] = Rational::one();
    for _ in 0..=n {
        let mut next = vec![Rational::zero(); n + 1];
        for i in 0..=n {
            for j in 0..=n - i {
                next[i + j] += &acc[i] * &base[j];
            }
        }
        acc = next;
    }
    acc
}

fn binomial(top: i64, k: i64) -> Rational {
    // polynomial binomial C(top, k) = top (top-1) ... (top-k+1) / k!
    (0..k).fold(Rational::one(), |acc, i| acc * Rational::from(top - i) / Rational::from(i + 1))
}

#[test]
fn todd_class_matches_power_series() {
    assert_eq!(todd(2).unwrap().components(), todd_by_series(2).as_slice());
    assert_eq!(todd(3).unwrap().components(), todd_by_series(3).as_slice());
}

#[test]
fn line_bundle_euler_characteristics() {
    for k in -12..=12 {
        let p2 = ChernCharacter::line_bundle(Ambient::P2, k).euler_characteristic();
        let p3 = ChernCharacter::line_bundle(Ambient::P3, k).euler_characteristic();
        assert_eq!(p2, binomial(k + 2, 2), "P^2, k = {k}");
        assert_eq!(p3, binomial(k + 3, 3), "P^3, k = {k}");
    }
}

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..60, 1i64..13).prop_map(|(p, q)| Rational::frac(p, q))
}

fn character(ambient: Ambient) -> impl Strategy<Value = ChernCharacter> {
    let n = ambient.dim();
    (-6i64..7, proptest::collection::vec(rational(), n)).prop_map(move |(rank, rest)| {
        let mut comps = vec![Rational::from(rank)];
        comps.extend(rest);
        ChernCharacter::new(ambient, comps).unwrap()
    })
}

fn any_character() -> impl Strategy<Value = ChernCharacter> {
    prop_oneof![character(Ambient::P2), character(Ambient::P3)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn mul_is_commutative_and_associative(
        (a, b, c) in prop_oneof![
            (character(Ambient::P2), character(Ambient::P2), character(Ambient::P2)),
            (character(Ambient::P3), character(Ambient::P3), character(Ambient::P3)),
        ]
    ) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn line_bundles_multiply(a in -9i64..9, b in -9i64..9) {
        for amb in [Ambient::P2, Ambient::P3] {
            let prod = ChernCharacter::line_bundle(amb, a).mul(&ChernCharacter::line_bundle(amb, b)).unwrap();
            prop_assert_eq!(prod, ChernCharacter::line_bundle(amb, a + b));
        }
    }

    #[test]
    fn twist_and_dual_are_invertible(x in any_character(), k in -8i64..8) {
        prop_assert_eq!(x.dual().dual(), x.clone());
        prop_assert_eq!(x.twist(k).twist(-k), x.clone());
        prop_assert_eq!(x.twist(0), x);
    }

    #[test]
    fn euler_matches_closed_forms(x in any_character()) {
        let c = x.components();
        let expected = match x.ambient() {
            Ambient::P2 => &c[0] + Rational::frac(3, 2) * &c[1] + &c[2],
            Ambient::P3 => &c[3] + Rational::from(2) * &c[2] + Rational::frac(11, 6) * &c[1] + &c[0],
        };
        prop_assert_eq!(x.euler_characteristic(), expected);
    }

    #[test]
    fn pushforward_is_difference_with_twist(x in character(Ambient::P3)) {
        let push = x.pushforward_from_hyperplane().unwrap();
        prop_assert_eq!(&push, &x.sub(&x.twist(-1)).unwrap());
        prop_assert_eq!(push.euler_characteristic(), x.restrict_to_hyperplane().unwrap().euler_characteristic());
    }

    #[test]
    fn restriction_commutes_with_twist(x in character(Ambient::P3), k in -6i64..6) {
        prop_assert_eq!(
            x.twist(k).restrict_to_hyperplane().unwrap(),
            x.restrict_to_hyperplane().unwrap().twist(k)
        );
    }

    #[test]
    fn chern_classes_round_trip(r in -4i64..5, c1 in -20i64..20, c2 in -50i64..50, c3 in -200i64..200) {
        let p3 = ChernClasses::p3(r, c1, c2, c3);
        prop_assert_eq!(character_to_chern(&chern_to_character(&p3, 3).unwrap()).unwrap(), p3);
        let p2 = ChernClasses::p2(r, c1, c2);
        prop_assert_eq!(character_to_chern(&chern_to_character(&p2, 2).unwrap()).unwrap(), p2);
    }
}

#[test]
fn dimension_mixing_is_rejected() {
    let a = ChernCharacter::line_bundle(Ambient::P2, 1);
    let b = ChernCharacter::line_bundle(Ambient::P3, 1);
    assert!(a.mul(&b).is_err());
    assert!(a.add(&b).is_err());
    assert!(a.pushforward_from_hyperplane().is_err());
}
