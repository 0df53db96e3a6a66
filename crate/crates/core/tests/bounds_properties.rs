use chowcalc::bounds::{
    c3_within_bound, ch3_bound, ch3_bound_with, enumerate_admissible_c3, euler_bound_with, h1_invariant_bound,
    p2_bounds, p3_bounds, worst_case_report, Mode,
};
use chowcalc::resolution::{admissible_s, c3_of};
use chowcalc::splitting::SplittingType;
use chowcalc::{Ambient, ChernCharacter, Rational};
use proptest::prelude::*;

/// The Euler bound written out term by term, with the sums over `i = 1..n`
/// expanded as loops rather than `n t^2`.
fn euler_bound_literal(n: i64, c1: i64, ch2: &Rational) -> Rational {
    let t = Rational::from(c1.abs()) / Rational::from(n) + Rational::from(n);
    let half_sum: Rational = (0..n).map(|_| &t * &t).sum::<Rational>() / Rational::from(2);
    let first = &t + Rational::from(4) - ch2 + &half_sum;
    let second = -ch2 + &half_sum;
    let cube = (&t + Rational::from(3)) * (&t + Rational::from(3)) * (&t + Rational::from(3));
    Rational::from(2) * first * second + Rational::from(n) / Rational::from(6) * cube
}

fn splitting() -> impl Strategy<Value = SplittingType> {
    proptest::collection::vec(-8i64..8, 1..6).prop_map(|v| SplittingType::sorted(v).unwrap())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-80i64..80, 1i64..13).prop_map(|(p, q)| Rational::frac(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn h1_bound_is_twist_invariant(b in splitting(), ch2 in rational()) {
        let n = b.rank() as i64;
        let x = ChernCharacter::new(Ambient::P2, vec![Rational::from(n), Rational::from(b.c1()), ch2.clone()]).unwrap();
        let base = h1_invariant_bound(&b, &ch2);
        for k in -5..=5 {
            prop_assert_eq!(h1_invariant_bound(&b.shift(k), x.twist(k).ch2()), base.clone());
        }
        prop_assert_eq!(h1_invariant_bound(&b.dual(), x.dual().ch2()), base);
    }

    #[test]
    fn p2_h1_bound_agrees_with_invariant_form(b in splitting(), ch2 in rational()) {
        let n = b.rank() as i64;
        let x = ChernCharacter::new(Ambient::P2, vec![Rational::from(n), Rational::from(b.c1()), ch2.clone()]).unwrap();
        prop_assert_eq!(p2_bounds(&b, &x).unwrap().h1, h1_invariant_bound(&b, &ch2));
    }

    #[test]
    fn euler_bound_matches_expanded_display(n in 1i64..7, c1 in -15i64..15, ch2 in rational()) {
        prop_assert_eq!(euler_bound_with(n, c1, &ch2, Mode::Literal).unwrap(), euler_bound_literal(n, c1, &ch2));
    }

    #[test]
    fn ch3_bound_depends_on_abs_c1(n in 1i64..7, c1 in -15i64..15, ch2 in rational()) {
        prop_assert_eq!(ch3_bound(n, c1, &ch2).unwrap(), ch3_bound(n, -c1, &ch2).unwrap());
        prop_assert_eq!(
            ch3_bound_with(n, c1, &ch2, Mode::Literal).unwrap(),
            ch3_bound_with(n, -c1, &ch2, Mode::Literal).unwrap()
        );
    }

    #[test]
    fn clamped_reports_are_nonnegative(b in splitting(), ch2 in rational(), ch3 in rational()) {
        let n = b.rank() as i64;
        let x = ChernCharacter::new(Ambient::P3, vec![Rational::from(n), Rational::from(b.c1()), ch2.clone(), ch3]).unwrap();
        let r = p3_bounds(&b, &x, Mode::Clamped).unwrap();
        prop_assert!(r.h_bounds.iter().all(|h| !h.is_negative()));
        prop_assert!(!r.q.is_negative() && !r.euler_bound.is_negative() && !r.ch3_bound.is_negative());
        if r.q.is_positive() {
            prop_assert!(r.q_int >= 1.into());
        }
        let w = worst_case_report(n, b.c1(), &ch2, Mode::Clamped).unwrap();
        prop_assert!(w.h_bounds.iter().all(|h| !h.is_negative()));
    }

    #[test]
    fn c3_interval_is_tight(r in 1i64..5, c1 in -4i64..5, c2 in -10i64..40) {
        let iv = enumerate_admissible_c3(r, c1, c2).unwrap();
        prop_assert!(!iv.is_empty());
        prop_assert!(c3_within_bound(r, c1, c2, iv.min).unwrap());
        prop_assert!(c3_within_bound(r, c1, c2, iv.max).unwrap());
        prop_assert!(!c3_within_bound(r, c1, c2, iv.min - 1).unwrap());
        prop_assert!(!c3_within_bound(r, c1, c2, iv.max + 1).unwrap());
        // ch_3 moves by 1/2 per unit of c_3
        let ch2 = Rational::from(c1 * c1 - 2 * c2) / Rational::from(2);
        let limit = Rational::from(2) * ch3_bound(r, c1, &ch2).unwrap() * Rational::from(6) / Rational::from(3)
            + Rational::from(2);
        prop_assert!(Rational::from(iv.len() as i64) < limit);
    }
}

#[test]
fn per_type_bound_never_exceeds_worst_case() {
    // for rank-two types in the magnitude box, sum b_i^2 <= n t^2
    for c1 in -3..=3 {
        let ch2 = Rational::frac(-7, 2);
        let worst = worst_case_report(2, c1, &ch2, Mode::Clamped).unwrap();
        for b in chowcalc::splitting::enumerate_splitting_types(2, c1, false).unwrap() {
            let x = ChernCharacter::new(
                Ambient::P3,
                vec![Rational::from(2), Rational::from(c1), ch2.clone(), Rational::zero()],
            )
            .unwrap();
            let r = p3_bounds(&b, &x, Mode::Clamped).unwrap();
            assert!(r.h_bounds[1] <= worst.h_bounds[1], "{b} c1 = {c1}");
            assert!(r.q <= worst.q);
        }
    }
}

#[test]
fn constructed_reflexive_data_satisfy_ch3_bound() {
    for c2 in 5..=30 {
        for s in admissible_s(c2) {
            let c3 = c3_of(c2, s).unwrap();
            assert!(c3_within_bound(2, -1, c2, c3).unwrap(), "c2 = {c2}, s = {s}");
            assert!(enumerate_admissible_c3(2, -1, c2).unwrap().contains(c3));
        }
    }
}
