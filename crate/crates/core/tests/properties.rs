use altruns::enumerate::involutions::{
    exchange_top_magnitudes, flip_one, reverse_negate_top_pair, snake_flip_first_unfixed, swap_one_two,
    swap_top_two,
};
use altruns::perm::{inv_a, inv_b, inv_d, negatives, pk_val_a, pk_val_b, Permutation, SignedPermutation};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Vec<u8>> {
    Just((1..=n as u8).collect::<Vec<u8>>()).prop_shuffle()
}

fn signed(n: usize) -> impl Strategy<Value = Vec<i8>> {
    (perm(n), proptest::collection::vec(any::<bool>(), n))
        .prop_map(|(w, s)| w.into_iter().zip(s).map(|(x, neg)| if neg { -(x as i8) } else { x as i8 }).collect())
}

fn naive_inv_b(w: &[i8]) -> u32 {
    // Length in B_n: inversions plus pairs with negative sum plus negatives.
    let n = w.len();
    let mut c = 0;
    for i in 0..n {
        for j in i + 1..n {
            if w[i] > w[j] {
                c += 1;
            }
            if w[i] + w[j] < 0 {
                c += 1;
            }
        }
        if w[i] < 0 {
            c += 1;
        }
    }
    c
}

proptest! {
    #[test]
    fn altruns_is_peaks_plus_valleys_plus_one(w in (1usize..12).prop_flat_map(perm)) {
        let p = Permutation::new(w.clone()).unwrap();
        let (pk, val) = pk_val_a(&w);
        prop_assert_eq!(p.altruns(), pk + val + 1);
    }

    #[test]
    fn complement_and_reverse(w in (2usize..12).prop_flat_map(perm)) {
        let p = Permutation::new(w.clone()).unwrap();
        let n = w.len() as u32;
        prop_assert_eq!(p.compl().compl(), p.clone());
        prop_assert_eq!(p.rev().rev(), p.clone());
        prop_assert_eq!(p.compl().inv() + p.inv(), n * (n - 1) / 2);
        let (pk, val) = pk_val_a(&w);
        prop_assert_eq!(pk_val_a(p.compl().word()), (val, pk));
        prop_assert_eq!(p.rev().altruns(), p.altruns());
    }

    #[test]
    fn lengths(w in (1usize..12).prop_flat_map(signed)) {
        prop_assert_eq!(inv_b(&w), naive_inv_b(&w));
        prop_assert_eq!(inv_b(&w), inv_d(&w) + negatives(&w));
        let abs: Vec<u8> = w.iter().map(|x| x.unsigned_abs()).collect();
        if negatives(&w) == 0 {
            prop_assert_eq!(inv_b(&w), inv_a(&abs));
        }
    }

    #[test]
    fn flip_sgn_swaps_peaks_and_valleys(w in (1usize..12).prop_flat_map(signed)) {
        let s = SignedPermutation::new(w.clone()).unwrap();
        let (pk, val) = pk_val_b(&w);
        prop_assert_eq!(pk_val_b(s.flip_sgn().word()), (val, pk));
        prop_assert_eq!(s.flip_sgn().flip_sgn(), s);
    }

    #[test]
    fn maps_return_signed_permutations(w in (3usize..12).prop_flat_map(signed)) {
        for img in [
            swap_top_two(&w),
            reverse_negate_top_pair(&w),
            exchange_top_magnitudes(&w),
            flip_one(&w),
            swap_one_two(&w),
            snake_flip_first_unfixed(&w),
        ] {
            prop_assert!(SignedPermutation::new(img).is_ok());
        }
    }

    #[test]
    fn self_inverse_maps(w in (3usize..12).prop_flat_map(signed)) {
        prop_assert_eq!(flip_one(&flip_one(&w)), w.clone());
        prop_assert_eq!(swap_one_two(&swap_one_two(&w)), w.clone());
        prop_assert_eq!(exchange_top_magnitudes(&exchange_top_magnitudes(&w)), w.clone());
        prop_assert_eq!(swap_top_two(&swap_top_two(&w)), w.clone());
    }

    #[test]
    fn flip_one_changes_length_parity(w in (1usize..12).prop_flat_map(signed)) {
        prop_assert_ne!(inv_b(&w) % 2, inv_b(&flip_one(&w)) % 2);
    }
}
