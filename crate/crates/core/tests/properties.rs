use proptest::prelude::*;

use homomesy::codes::{lehmer_decode, lehmer_encode, major_decode, major_encode, rank, unrank};
use homomesy::maps::kreweras_power;
use homomesy::{MapId, Permutation, Statistic};

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Permutation::from_one_line(&v).unwrap())
}

fn triple(max: usize) -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    (1..=max).prop_flat_map(|n| {
        let one = move || Just((1..=n).collect::<Vec<usize>>()).prop_shuffle();
        (one(), one(), one()).prop_map(|(a, b, c)| {
            (
                Permutation::from_one_line(&a).unwrap(),
                Permutation::from_one_line(&b).unwrap(),
                Permutation::from_one_line(&c).unwrap(),
            )
        })
    })
}

proptest! {
    #[test]
    fn compose_is_associative((a, b, c) in triple(16)) {
        let left = Permutation::compose(&Permutation::compose(&a, &b).unwrap(), &c).unwrap();
        let right = Permutation::compose(&a, &Permutation::compose(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_composes_to_identity(s in permutation(40)) {
        prop_assert!(Permutation::compose(&s, &s.inverse()).unwrap().is_identity());
    }

    #[test]
    fn codes_round_trip(s in permutation(20)) {
        prop_assert_eq!(lehmer_decode(&lehmer_encode(&s)), s.clone());
        prop_assert_eq!(major_decode(&major_encode(&s)).unwrap(), s.clone());
        prop_assert_eq!(unrank(s.degree(), rank(&s).unwrap()).unwrap(), s.clone());
        prop_assert_eq!(lehmer_encode(&s).sum() as i64, inv(&s));
    }

    #[test]
    fn maps_invert(s in permutation(12)) {
        for map in MapId::ALL {
            prop_assert_eq!(map.apply_inverse(&map.apply(&s)), s.clone());
        }
    }

    #[test]
    fn foata_transports_maj_to_inv(s in permutation(12)) {
        prop_assert_eq!(maj(&s), inv(&MapId::Foata.apply(&s)));
        prop_assert_eq!(inv(&s), maj(&MapId::LcodeToMcode.apply(&s)));
    }

    #[test]
    fn kreweras_power_matches_iteration(s in permutation(9), j in -30i64..30) {
        let mut t = s.clone();
        let step = if j < 0 { MapId::KrewerasInverse } else { MapId::Kreweras };
        for _ in 0..j.unsigned_abs() {
            t = step.apply(&t);
        }
        prop_assert_eq!(kreweras_power(&s, j), t);
    }
}

fn inv(s: &Permutation) -> i64 {
    *Statistic::parse("18").unwrap().evaluate(s).unwrap().numer() as i64
}

fn maj(s: &Permutation) -> i64 {
    *Statistic::parse("4").unwrap().evaluate(s).unwrap().numer() as i64
}
