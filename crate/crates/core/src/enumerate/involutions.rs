//! The sign-reversing maps used to cancel whole subsets in the signed sums,
//! and the membership tests for the subsets they act on.
//!
//! Every map takes and returns a positive window. Callers are expected to
//! apply a map only to words in its domain; outside it the result is
//! unspecified but never panics.

use crate::perm::{is_down_up, is_snake_word, last_step_b, Step};

/// Positions (0-based, ascending) of the letters of absolute value n and n-1.
pub fn top_two_positions(word: &[i8]) -> (usize, usize) {
    let n = word.len() as i8;
    let mut found = word
        .iter()
        .enumerate()
        .filter(|(_, &x)| x.abs() >= n - 1)
        .map(|(i, _)| i);
    let i = found.next().unwrap_or(0);
    let j = found.next().unwrap_or(i);
    (i, j)
}

/// The word with the letters ±n and ±(n-1) removed.
pub fn delete_top_two(word: &[i8]) -> Vec<i8> {
    let n = word.len() as i8;
    word.iter().copied().filter(|x| x.abs() < n - 1).collect()
}

fn same_sign(x: i8, y: i8) -> bool {
    (x > 0) == (y > 0)
}

/// Which of the eight subsets (numbered 1..=8) a word of length ≥ 3 falls
/// in, relative to its own end class: "match" means the word with its two
/// largest letters deleted ends with the same kind of step.
pub fn subset_b(word: &[i8]) -> u8 {
    let n = word.len();
    debug_assert!(n >= 3);
    let (i, j) = top_two_positions(word);
    let matched = last_step_b(&delete_top_two(word)) == last_step_b(word);
    if j != i + 1 {
        return if matched { 1 } else { 2 };
    }
    if j != n - 1 {
        return if matched { 3 } else { 4 };
    }
    match (same_sign(word[n - 2], word[n - 1]), matched) {
        (false, true) => 5,
        (false, false) => 6,
        (true, false) => 7,
        (true, true) => 8,
    }
}

/// As [`subset_b`] for elements of D_n, with subset 9 collecting the words
/// whose two-letter deletion has an odd number of negatives.
pub fn subset_d(word: &[i8]) -> u8 {
    let rest = delete_top_two(word);
    if rest.iter().filter(|&&x| x < 0).count() % 2 == 1 {
        9
    } else {
        subset_b(word)
    }
}

/// Exchange the two largest letters: a plain swap when their signs agree,
/// `x .. y -> ȳ .. x̄` when they differ. Acts on subsets 1-4 (and, among
/// snakes, on L^1).
pub fn swap_top_two(word: &[i8]) -> Vec<i8> {
    let (i, j) = top_two_positions(word);
    let mut out = word.to_vec();
    let (x, y) = (word[i], word[j]);
    if same_sign(x, y) {
        out[i] = y;
        out[j] = x;
    } else {
        out[i] = -y;
        out[j] = -x;
    }
    out
}

/// `x, y -> ȳ, x̄` on the adjacent pair of the two largest letters. On the
/// final pair this acts on subsets 5-7; among snakes it acts on L^2 and L^3.
pub fn reverse_negate_top_pair(word: &[i8]) -> Vec<i8> {
    let (i, j) = top_two_positions(word);
    let mut out = word.to_vec();
    out[i] = -word[j];
    out[j] = -word[i];
    out
}

/// Exchange the magnitudes n and n-1, leaving every sign in place (type D
/// subset 9).
pub fn exchange_top_magnitudes(word: &[i8]) -> Vec<i8> {
    let n = word.len() as i8;
    word.iter()
        .map(|&x| match x.abs() {
            a if a == n => x.signum() * (n - 1),
            a if a == n - 1 => x.signum() * n,
            _ => x,
        })
        .collect()
}

/// Negate the letter of absolute value 1.
pub fn flip_one(word: &[i8]) -> Vec<i8> {
    word.iter().map(|&x| if x.abs() == 1 { -x } else { x }).collect()
}

/// With x = ±1 at i and y = ±2 at j, write ȳ at i and x̄ at j.
pub fn swap_one_two(word: &[i8]) -> Vec<i8> {
    let i = word.iter().position(|x| x.abs() == 1);
    let j = word.iter().position(|x| x.abs() == 2);
    let mut out = word.to_vec();
    if let (Some(i), Some(j)) = (i, j) {
        out[i] = -word[j];
        out[j] = -word[i];
    }
    out
}

/// The only snake whose absolute word is the identity: `1, 2̄, 3, 4̄, ...`.
pub fn is_identity_snake(word: &[i8]) -> bool {
    word.iter()
        .enumerate()
        .all(|(i, &x)| x == if i % 2 == 0 { i as i8 + 1 } else { -(i as i8 + 1) })
}

/// Whether `|π_i| = i` for all i and `π_1 = 1`.
pub fn in_identity_class(word: &[i8]) -> bool {
    word.first() == Some(&1) && word.iter().enumerate().all(|(i, &x)| x.abs() == i as i8 + 1)
}

/// Find the smallest k with `|π_k| ≠ k` and negate the letter ±k. Defined
/// outside [`in_identity_class`].
pub fn snake_flip_first_unfixed(word: &[i8]) -> Vec<i8> {
    let mut out = word.to_vec();
    if let Some(k) = (0..word.len()).find(|&i| word[i].abs() != i as i8 + 1) {
        let k = k as i8 + 1;
        if let Some(r) = word.iter().position(|x| x.abs() == k) {
            out[r] = -out[r];
        }
    }
    out
}

/// Which of the four snake subsets (1..=4) a D_n snake of length ≥ 3 is in.
pub fn snake_subset(word: &[i8]) -> u8 {
    let n = word.len();
    let (i, j) = top_two_positions(word);
    if j != i + 1 {
        1
    } else if j != n - 1 {
        2
    } else if !same_sign(word[n - 2], word[n - 1]) {
        3
    } else {
        4
    }
}

pub fn is_alternating_word(word: &[i8]) -> bool {
    is_down_up(word)
}

pub fn is_snake(word: &[i8]) -> bool {
    is_snake_word(word)
}

/// The set T_n with the given final step, built by the doubling recursion
/// from `{1}` / `{12, 2̄1̄}` (ascent) and `{1̄}` / `{21, 1̄2̄}` (descent).
pub fn build_t(n: usize, end: Step) -> Vec<Vec<i8>> {
    match (n, end) {
        (0, _) => vec![],
        (1, Step::Ascent) => vec![vec![1]],
        (1, Step::Descent) => vec![vec![-1]],
        (2, Step::Ascent) => vec![vec![1, 2], vec![-2, -1]],
        (2, Step::Descent) => vec![vec![2, 1], vec![-1, -2]],
        _ => {
            let (a, b) = ((n - 1) as i8, n as i8);
            let tails: [[i8; 2]; 2] = match end {
                Step::Ascent => [[a, b], [-b, -a]],
                Step::Descent => [[b, a], [-a, -b]],
            };
            let mut out = Vec::new();
            for base in build_t(n - 2, end) {
                for tail in tails {
                    let mut w = base.clone();
                    w.extend_from_slice(&tail);
                    out.push(w);
                }
            }
            out
        }
    }
}
