use proptest::prelude::*;

use rectbal::fib_balance::{t_counting_form, t_direct};
use rectbal::numeration::{
    decode_pair, encode_pair, negabin_decode, negabin_encode, trib_decode, trib_encode, zeck_decode, zeck_encode,
};
use rectbal::tm_balance::{excess, excess_parity_reduced, EXCESS_BOUND};
use rectbal::{exact_balance, zeck_characterization, BalanceStatus};

proptest! {
    #[test]
    fn zeckendorf_round_trip(n in 0u64..1 << 60) {
        let rep = zeck_encode(n);
        prop_assert!(rep.digits().windows(2).all(|w| w != [1, 1]));
        prop_assert_eq!(zeck_decode(rep.digits()).unwrap(), n);
    }

    #[test]
    fn tribonacci_round_trip(n in 0u64..1 << 50) {
        let rep = trib_encode(n);
        prop_assert!(rep.digits().windows(3).all(|w| w != [1, 1, 1]));
        prop_assert_eq!(trib_decode(rep.digits()).unwrap(), n);
    }

    #[test]
    fn negabinary_round_trip(n in -(1i64 << 60)..1i64 << 60) {
        prop_assert_eq!(negabin_decode(negabin_encode(n).digits()).unwrap(), n);
    }

    #[test]
    fn pair_encoding_round_trip(m in 0u64..1 << 40, n in 0u64..1 << 40) {
        prop_assert_eq!(decode_pair(&encode_pair(m, n)).unwrap(), (m, n));
    }

    #[test]
    fn counting_form_matches_direct_sum(i in 0u64..100_000, m in 0u64..60, n in 0u64..60) {
        prop_assert_eq!(t_counting_form(i, m, n), t_direct(i, m, n));
    }

    #[test]
    fn exact_balance_is_symmetric_and_matches_zeckendorf(m in 0u64..3000, n in 0u64..3000) {
        let a = exact_balance(m, n);
        let b = exact_balance(n, m);
        prop_assert_eq!(a.status, b.status);
        prop_assert_eq!(a.values, b.values);
        prop_assert_eq!(a.status == BalanceStatus::Balanced, zeck_characterization(m, n));
    }

    #[test]
    fn thue_morse_excess_is_bounded(i in 0u64..1 << 50, m in 1u64..200, n in 1u64..200) {
        let s = excess_parity_reduced(i, m, n);
        prop_assert_eq!(s, excess(i, m, n));
        prop_assert!(s.abs() <= EXCESS_BOUND);
        prop_assert_eq!(s.rem_euclid(2), ((m * n) % 2) as i64);
    }
}
