use orbik::cyclo::cyclotomic_polynomial;
use orbik::{Cyclotomic, Error};
use proptest::prelude::*;

fn c(s: &str) -> Cyclotomic {
    s.parse().unwrap()
}

/// Small sums `Σ a_j ζ_n^j` with `n` among a few conductors.
fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    let n = prop::sample::select(vec![1u32, 2, 3, 4, 5, 6, 8, 9, 12, 15]);
    (n, prop::collection::vec((0i64..30, -4i64..=4, 1i64..=3), 0..4)).prop_map(|(n, terms)| {
        terms
            .into_iter()
            .map(|(k, a, d)| Cyclotomic::root_of_unity(n, k) * Cyclotomic::fraction(a, d))
            .sum()
    })
}

/// Value of a Laurent-free polynomial at `ζ_n`, evaluated term by term.
fn eval_at_root(poly: &[i64], n: u32) -> Cyclotomic {
    poly.iter()
        .enumerate()
        .map(|(j, &a)| Cyclotomic::root_of_unity(n, j as i64).mul_int(a))
        .sum()
}

#[test]
fn arithmetic_examples() {
    assert!((c("E(4)^2") + Cyclotomic::one()).is_zero());
    assert_eq!(c("E(3)+E(3)^2"), Cyclotomic::from_int(-1));
    let inv = (Cyclotomic::one() - c("E(3)")).inv().unwrap();
    assert_eq!(inv, c("1/3*(2+E(3))"));
    assert!(matches!(Cyclotomic::one().checked_div(&Cyclotomic::zero()), Err(Error::DivisionByZero)));
}

#[test]
fn twist_examples() {
    assert_eq!(c("E(3)").galois_twist(-1).unwrap(), c("E(3)^2"));
    assert_eq!(c("5/2").galois_twist(7).unwrap(), c("5/2"));
    let s = c("E(8)+E(8)^-1");
    assert_eq!(s.galois_twist(3).unwrap(), c("E(8)^3+E(8)^-3"));
    assert_eq!(s.galois_twist(3).unwrap(), -&s);
    assert!(matches!(c("E(3)").galois_twist(3), Err(Error::NotCoprime { .. })));
}

#[test]
fn integer_extraction() {
    assert_eq!(c("E(3)+E(3)^2+1").as_integer(), Some(0));
    assert_eq!(c("6/1").as_integer(), Some(6));
    assert_eq!(c("E(5)").as_integer(), None);
    assert_eq!(c("1/2").as_integer(), None);
}

#[test]
fn conductors_are_minimal() {
    assert_eq!(c("E(8)^2").conductor(), 4);
    assert_eq!(c("E(6)").conductor(), 3);
    assert_eq!(c("E(12)^4 + E(12)^8").conductor(), 1);
    assert_eq!(c("E(5)+E(5)^4").conductor(), 5);
    assert_eq!(c("E(9)^3").conductor(), 3);
    // √-3 lives in Q(ζ_3)
    assert_eq!(c("E(3)-E(3)^2").conductor(), 3);
    // √2 = ζ_8 + ζ_8⁻¹
    assert_eq!(c("E(8)+E(8)^7").conductor(), 8);
}

#[test]
fn cyclotomic_polynomials_vanish_at_their_roots() {
    for n in 1..=30u32 {
        let phi = cyclotomic_polynomial(n);
        assert!(eval_at_root(&phi, n).is_zero(), "n = {n}");
        // and at every primitive root
        for k in (1..n).filter(|k| num_gcd(*k, n) == 1) {
            let v: Cyclotomic = phi
                .iter()
                .enumerate()
                .map(|(j, &a)| Cyclotomic::root_of_unity(n, (j as u32 * k) as i64).mul_int(a))
                .sum();
            assert!(v.is_zero());
        }
    }
}

fn num_gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

#[test]
fn text_syntax_rejects_garbage() {
    for bad in ["", "E(0)", "1/0", "E3", "1 +", "x", "2 3", "E(3)^", "(1"] {
        assert!(bad.parse::<Cyclotomic>().is_err(), "{bad:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ring_axioms(a in cyclotomic(), b in cyclotomic(), d in cyclotomic()) {
        prop_assert_eq!(&(&a + &b) + &d, &a + &(&b + &d));
        prop_assert_eq!(&(&a * &b) * &d, &a * &(&b * &d));
        prop_assert_eq!(&a * &(&b + &d), &(&a * &b) + &(&a * &d));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn division_inverts_multiplication(a in cyclotomic(), b in cyclotomic()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).checked_div(&b).unwrap(), a.clone());
        prop_assert!((&b * &b.inv().unwrap()).is_one());
    }

    #[test]
    fn twist_is_a_homomorphism(a in cyclotomic(), b in cyclotomic(), k in prop::sample::select(vec![1i64, 7, 11, 13, 17, 19, 23, 29, -1, -7])) {
        // all sampled k are prime to every conductor used above (divisors of 360)
        let t = |x: &Cyclotomic| x.galois_twist(k).unwrap();
        prop_assert_eq!(t(&(&a + &b)), &t(&a) + &t(&b));
        prop_assert_eq!(t(&(&a * &b)), &t(&a) * &t(&b));
    }

    #[test]
    fn twists_compose(a in cyclotomic(), k in prop::sample::select(vec![1i64, 7, 11, 13, -1]), m in prop::sample::select(vec![1i64, 17, 19, 23, -7])) {
        let once = a.galois_twist(k * m).unwrap();
        let twice = a.galois_twist(k).unwrap().galois_twist(m).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn conjugation_is_an_involution(a in cyclotomic()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        let norm = &a * &a.conj();
        prop_assert_eq!(norm.conj(), norm.clone());
    }

    #[test]
    fn text_round_trip(a in cyclotomic()) {
        let s = a.to_string();
        prop_assert_eq!(s.parse::<Cyclotomic>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Cyclotomic>(&json).unwrap(), a);
    }

    #[test]
    fn embedding_then_reducing_is_identity(a in cyclotomic(), m in 1u32..5) {
        // multiply by 1 written in a larger field
        let one_big = Cyclotomic::root_of_unity(7 * m, 0) + Cyclotomic::root_of_unity(7, 1) - Cyclotomic::root_of_unity(7, 1);
        let b = &a * &one_big;
        prop_assert_eq!(b.conductor(), a.conductor());
        prop_assert_eq!(b, a);
    }
}
