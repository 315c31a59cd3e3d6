//! Randomized invariants over the bitstring and Dyck-word layers.

use proptest::prelude::*;

use middle_levels::{
    enumerate_dyck, enumerate_weighted, match_m, match_m_inv, match_n, match_n_inv, Bitstring,
    DyckWord, HeightProfile,
};

fn arb_bitstring() -> impl Strategy<Value = Bitstring> {
    (0u32..=24).prop_flat_map(|len| {
        (0..1u64 << len).prop_map(move |word| Bitstring::from_word(word, len).unwrap())
    })
}

fn arb_dyck_word() -> impl Strategy<Value = DyckWord> {
    (1u32..=7).prop_flat_map(|n| {
        let words = enumerate_dyck(n).unwrap();
        (0..words.len()).prop_map(move |i| words[i])
    })
}

fn arb_lower_vertex() -> impl Strategy<Value = Bitstring> {
    (1u32..=6).prop_flat_map(|n| {
        let lower = enumerate_weighted(2 * n + 1, n);
        (0..lower.len()).prop_map(move |i| lower[i])
    })
}

proptest! {
    #[test]
    fn rev_complement_is_an_involution(x in arb_bitstring()) {
        prop_assert_eq!(x.rev_complement().rev_complement(), x);
    }

    #[test]
    fn text_roundtrip(x in arb_bitstring()) {
        let back: Bitstring = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn dyck_membership_via_height_profile(x in arb_bitstring()) {
        let profile = HeightProfile::of(&x);
        prop_assert_eq!(x.is_dyck(), profile.min() >= 0 && profile.last() == 0);
        let negatives = profile.heights().iter().filter(|&&h| h < 0).count();
        prop_assert_eq!(x.is_dyck_minus(), profile.last() == 0 && negatives == 1);
    }

    #[test]
    fn recomposition_and_rotation(x in arb_dyck_word()) {
        let (u, v) = x.decompose().unwrap();
        let one: Bitstring = "1".parse().unwrap();
        let zero: Bitstring = "0".parse().unwrap();
        prop_assert_eq!(one.concat(u.as_bits()).concat(&zero).concat(v.as_bits()), *x.as_bits());
        let rotated = x.rotate().unwrap();
        prop_assert!(rotated.is_dyck());
        prop_assert_eq!(rotated.len(), x.len());
    }

    #[test]
    fn matchings_invert(v in arb_lower_vertex()) {
        let m = match_m(&v).unwrap();
        let n = match_n(&v).unwrap();
        prop_assert_ne!(m, n);
        prop_assert_eq!(match_m_inv(&m).unwrap(), v);
        prop_assert_eq!(match_n_inv(&n).unwrap(), v);
        prop_assert!(v.unit_diff(&m).is_some());
        prop_assert!(v.unit_diff(&n).is_some());
    }
}
