//! Permutations and signed permutations, their peak/valley/inversion
//! statistics, end-class classification, the elementary bijections, and
//! deterministic iteration over S_n, B_n, D_n and B_n - D_n.
//!
//! Signed permutations are stored as their positive window
//! `σ_1, ..., σ_n`; `σ(-i) = -σ(i)` is never materialized.
//!
//! Iteration order is part of the contract: S_n is walked in lexicographic
//! order of the word, and the signed groups walk lexicographic absolute
//! words crossed with sign masks in binary order (bit `i` of the mask
//! negates position `i + 1`). An element is addressed by its index in this
//! order, so any index range is a reproducible, independently walkable slice.

use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// Largest n accepted by [`GroupIter`] for S_n (n! must fit the index type).
pub const ITER_CAP_A: usize = 20;
/// Largest n accepted by [`GroupIter`] for the signed groups.
pub const ITER_CAP_SIGNED: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    Ascent,
    Descent,
}

impl Step {
    #[inline]
    pub fn between<T: Ord>(left: T, right: T) -> Step {
        if left < right {
            Step::Ascent
        } else {
            Step::Descent
        }
    }

    pub fn flipped(self) -> Step {
        match self {
            Step::Ascent => Step::Descent,
            Step::Descent => Step::Ascent,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Step::Ascent => 'a',
            Step::Descent => 'd',
        }
    }
}

/// Type A end class: the kind of the first pair and of the last pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassA {
    AA,
    AD,
    DA,
    DD,
}

impl ClassA {
    pub const ALL: [ClassA; 4] = [ClassA::AA, ClassA::AD, ClassA::DA, ClassA::DD];

    pub fn from_steps(first: Step, last: Step) -> ClassA {
        match (first, last) {
            (Step::Ascent, Step::Ascent) => ClassA::AA,
            (Step::Ascent, Step::Descent) => ClassA::AD,
            (Step::Descent, Step::Ascent) => ClassA::DA,
            (Step::Descent, Step::Descent) => ClassA::DD,
        }
    }

    pub fn first(self) -> Step {
        match self {
            ClassA::AA | ClassA::AD => Step::Ascent,
            ClassA::DA | ClassA::DD => Step::Descent,
        }
    }

    pub fn last(self) -> Step {
        match self {
            ClassA::AA | ClassA::DA => Step::Ascent,
            ClassA::AD | ClassA::DD => Step::Descent,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassA::AA => "aa",
            ClassA::AD => "ad",
            ClassA::DA => "da",
            ClassA::DD => "dd",
        }
    }
}

impl std::str::FromStr for ClassA {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "aa" => Ok(ClassA::AA),
            "ad" => Ok(ClassA::AD),
            "da" => Ok(ClassA::DA),
            "dd" => Ok(ClassA::DD),
            other => domain(format!("unknown end class `{other}`")),
        }
    }
}

/// End class of a word: both end pairs in type A, the last pair only in
/// types B and D (where a one-letter word is compared against σ_0 = 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EndClass {
    A(ClassA),
    B(Step),
}

/// Which flavour of statistics to use on a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Group {
    A,
    B,
    D,
    BminusD,
}

impl Group {
    pub fn is_signed(self) -> bool {
        !matches!(self, Group::A)
    }

    #[inline]
    pub fn admits_negatives(self, negatives: u32) -> bool {
        match self {
            Group::A => negatives == 0,
            Group::B => true,
            Group::D => negatives.is_multiple_of(2),
            Group::BminusD => negatives % 2 == 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Group::A => "A",
            Group::B => "B",
            Group::D => "D",
            Group::BminusD => "B-D",
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Group::A),
            "B" | "b" => Ok(Group::B),
            "D" | "d" => Ok(Group::D),
            "B-D" | "BminusD" | "b-d" => Ok(Group::BminusD),
            other => domain(format!("unknown group `{other}`")),
        }
    }
}

// ---------------------------------------------------------------------------
// Slice-level statistics. These are what the enumeration engine calls in its
// hot loop; the typed wrappers below delegate to them.

/// Peak and valley positions (1-based, within `2..=n-1`) of a plain word.
pub fn peak_valley_positions<T: Ord + Copy>(word: &[T]) -> (Vec<usize>, Vec<usize>) {
    let mut peaks = Vec::new();
    let mut valleys = Vec::new();
    for i in 1..word.len().saturating_sub(1) {
        let (l, m, r) = (word[i - 1], word[i], word[i + 1]);
        if l < m && m > r {
            peaks.push(i + 1);
        } else if l > m && m < r {
            valleys.push(i + 1);
        }
    }
    (peaks, valleys)
}

#[inline]
pub fn pk_val_a<T: Ord + Copy>(word: &[T]) -> (u32, u32) {
    let mut pk = 0;
    let mut val = 0;
    for w in word.windows(3) {
        if w[0] < w[1] && w[1] > w[2] {
            pk += 1;
        } else if w[0] > w[1] && w[1] < w[2] {
            val += 1;
        }
    }
    (pk, val)
}

/// Type B peak and valley positions (1-based, within `1..=n-1`), computed on
/// the word `0, σ_1, ..., σ_n`.
pub fn peak_valley_positions_b(word: &[i8]) -> (Vec<usize>, Vec<usize>) {
    let mut peaks = Vec::new();
    let mut valleys = Vec::new();
    for i in 0..word.len().saturating_sub(1) {
        let l = if i == 0 { 0 } else { word[i - 1] };
        let (m, r) = (word[i], word[i + 1]);
        if l < m && m > r {
            peaks.push(i + 1);
        } else if l > m && m < r {
            valleys.push(i + 1);
        }
    }
    (peaks, valleys)
}

#[inline]
pub fn pk_val_b(word: &[i8]) -> (u32, u32) {
    let mut pk = 0;
    let mut val = 0;
    let mut prev = 0i8;
    for i in 0..word.len().saturating_sub(1) {
        let (m, r) = (word[i], word[i + 1]);
        if prev < m && m > r {
            pk += 1;
        } else if prev > m && m < r {
            val += 1;
        }
        prev = m;
    }
    (pk, val)
}

#[inline]
pub fn inv_a<T: Ord + Copy>(word: &[T]) -> u32 {
    let mut count = 0;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if word[i] > word[j] {
                count += 1;
            }
        }
    }
    count
}

/// `|{i < j : -σ_i > σ_j}|`, the middle term shared by the B and D lengths.
#[inline]
pub fn neg_sum_pairs(word: &[i8]) -> u32 {
    let mut count = 0;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if -word[i] > word[j] {
                count += 1;
            }
        }
    }
    count
}

#[inline]
pub fn negatives(word: &[i8]) -> u32 {
    word.iter().filter(|&&x| x < 0).count() as u32
}

#[inline]
pub fn inv_b(word: &[i8]) -> u32 {
    inv_a(word) + neg_sum_pairs(word) + negatives(word)
}

#[inline]
pub fn inv_d(word: &[i8]) -> u32 {
    inv_a(word) + neg_sum_pairs(word)
}

/// Down-up test `w_1 > w_2 < w_3 > ...`; words of length ≤ 1 pass.
#[inline]
pub fn is_down_up<T: Ord + Copy>(word: &[T]) -> bool {
    word.windows(2).enumerate().all(|(i, w)| {
        if i % 2 == 0 {
            w[0] > w[1]
        } else {
            w[0] < w[1]
        }
    })
}

/// Type B snake test `0 < σ_1 > σ_2 < σ_3 > ...`.
#[inline]
pub fn is_snake_word(word: &[i8]) -> bool {
    word.first().is_none_or(|&x| x > 0) && is_down_up(word)
}

/// Last-pair step with the σ_0 = 0 sentinel. Empty words have no class.
#[inline]
pub fn last_step_b(word: &[i8]) -> Option<Step> {
    match word.len() {
        0 => None,
        1 => Some(Step::between(0, word[0])),
        n => Some(Step::between(word[n - 2], word[n - 1])),
    }
}

#[inline]
pub fn class_a_of<T: Ord + Copy>(word: &[T]) -> Option<ClassA> {
    let n = word.len();
    if n < 2 {
        return None;
    }
    Some(ClassA::from_steps(
        Step::between(word[0], word[1]),
        Step::between(word[n - 2], word[n - 1]),
    ))
}

fn check_bijection(abs: impl Iterator<Item = usize>, n: usize) -> bool {
    let mut seen = vec![false; n + 1];
    for a in abs {
        if a == 0 || a > n || seen[a] {
            return false;
        }
        seen[a] = true;
    }
    true
}

// ---------------------------------------------------------------------------

/// Peaks, valleys, alternating runs and length of one element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StatVector {
    pub pk: u32,
    pub val: u32,
    pub altruns: u32,
    pub inv: u32,
}

/// An element of S_n in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    pub fn new(word: Vec<u8>) -> Result<Self> {
        let n = word.len();
        if n == 0 || n > i8::MAX as usize {
            return Err(Error::InvalidWord(format!("length {n} out of range")));
        }
        if !check_bijection(word.iter().map(|&x| x as usize), n) {
            return Err(Error::InvalidWord(format!("{word:?} is not a permutation of 1..{n}")));
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n as u8).collect() }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn peaks_valleys(&self) -> (Vec<usize>, Vec<usize>) {
        peak_valley_positions(&self.word)
    }

    pub fn altruns(&self) -> u32 {
        let (pk, val) = pk_val_a(&self.word);
        pk + val + 1
    }

    pub fn inv(&self) -> u32 {
        inv_a(&self.word)
    }

    pub fn stats(&self) -> StatVector {
        let (pk, val) = pk_val_a(&self.word);
        StatVector { pk, val, altruns: pk + val + 1, inv: self.inv() }
    }

    /// Requires n ≥ 2; for n = 2 the single pair is both first and last.
    pub fn end_class(&self) -> Result<ClassA> {
        class_a_of(&self.word)
            .ok_or_else(|| Error::Domain("type A end class needs n >= 2".into()))
    }

    pub fn compl(&self) -> Permutation {
        let m = self.n() as u8 + 1;
        Permutation { word: self.word.iter().map(|&x| m - x).collect() }
    }

    pub fn rev(&self) -> Permutation {
        Permutation { word: self.word.iter().rev().copied().collect() }
    }

    pub fn is_alternating(&self) -> bool {
        is_down_up(&self.word)
    }

    /// Drop the letter n and keep the relative order of the rest.
    pub fn delete_max(&self) -> Permutation {
        let n = self.n() as u8;
        Permutation { word: self.word.iter().copied().filter(|&x| x != n).collect() }
    }

    /// Insert the letter n + 1 into gap `gap` (0 = before the first letter).
    pub fn insert_max(&self, gap: usize) -> Permutation {
        let mut word = self.word.clone();
        word.insert(gap, self.n() as u8 + 1);
        Permutation { word }
    }

    pub fn as_signed(&self) -> SignedPermutation {
        SignedPermutation { word: self.word.iter().map(|&x| x as i8).collect() }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// An element of B_n, stored as its positive window.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    word: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(word: Vec<i8>) -> Result<Self> {
        let n = word.len();
        if n == 0 || n > i8::MAX as usize {
            return Err(Error::InvalidWord(format!("length {n} out of range")));
        }
        if !check_bijection(word.iter().map(|&x| x.unsigned_abs() as usize), n) {
            return Err(Error::InvalidWord(format!(
                "{word:?} is not a signed permutation of ±1..±{n}"
            )));
        }
        Ok(SignedPermutation { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<i8>) -> Self {
        SignedPermutation { word }
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { word: (1..=n as i8).collect() }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[i8] {
        &self.word
    }

    pub fn into_word(self) -> Vec<i8> {
        self.word
    }

    pub fn negatives(&self) -> u32 {
        negatives(&self.word)
    }

    pub fn in_d(&self) -> bool {
        self.negatives().is_multiple_of(2)
    }

    pub fn peaks_valleys(&self) -> (Vec<usize>, Vec<usize>) {
        peak_valley_positions_b(&self.word)
    }

    pub fn altruns(&self) -> u32 {
        let (pk, val) = pk_val_b(&self.word);
        pk + val + 1
    }

    pub fn inv_b(&self) -> u32 {
        inv_b(&self.word)
    }

    pub fn inv_d(&self) -> u32 {
        inv_d(&self.word)
    }

    /// Type B statistics with `inv = inv_B`.
    pub fn stats(&self) -> StatVector {
        let (pk, val) = pk_val_b(&self.word);
        StatVector { pk, val, altruns: pk + val + 1, inv: self.inv_b() }
    }

    pub fn last_step(&self) -> Step {
        last_step_b(&self.word).expect("signed permutations are non-empty")
    }

    pub fn flip_sgn(&self) -> SignedPermutation {
        SignedPermutation { word: self.word.iter().map(|&x| -x).collect() }
    }

    pub fn is_alternating(&self) -> bool {
        is_down_up(&self.word)
    }

    pub fn is_snake(&self) -> bool {
        is_snake_word(&self.word)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Either kind of group element; what [`iter_group`] yields.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Perm(Permutation),
    Signed(SignedPermutation),
}

impl Element {
    pub fn word_i8(&self) -> Vec<i8> {
        match self {
            Element::Perm(p) => p.word().iter().map(|&x| x as i8).collect(),
            Element::Signed(s) => s.word().to_vec(),
        }
    }
}

/// Classify the end pairs of a word. Type A needs n ≥ 2; type B uses the
/// σ_0 = 0 sentinel so that n = 1 is classified by the sign of σ_1.
pub fn classify_ends(word: &[i8], kind: Kind) -> Result<EndClass> {
    match kind {
        Kind::A => class_a_of(word)
            .map(EndClass::A)
            .ok_or_else(|| Error::Domain("type A end class needs n >= 2".into())),
        Kind::B => last_step_b(word)
            .map(EndClass::B)
            .ok_or_else(|| Error::Domain("empty word has no end class".into())),
    }
}

/// Down-up test. Types A and B share the definition (no sentinel).
pub fn is_alternating(word: &[i8], _kind: Kind) -> bool {
    is_down_up(word)
}

pub fn is_snake_b(sigma: &SignedPermutation) -> bool {
    sigma.is_snake()
}

// ---------------------------------------------------------------------------
// Iteration.

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Size of the index space walked for `group` (D and B-D filter half of it).
pub fn index_space(group: Group, n: usize) -> u64 {
    match group {
        Group::A => factorial(n),
        _ => factorial(n) << n,
    }
}

/// Number of elements the group actually has.
pub fn group_order(group: Group, n: usize) -> u64 {
    match group {
        Group::A => factorial(n),
        Group::B => factorial(n) << n,
        Group::D | Group::BminusD => factorial(n) << (n - 1),
    }
}

pub fn check_iter_bounds(group: Group, n: usize) -> Result<()> {
    let cap = if group.is_signed() { ITER_CAP_SIGNED } else { ITER_CAP_A };
    if n == 0 || n > cap {
        return domain(format!("n = {n} outside 1..={cap} for group {group}"));
    }
    Ok(())
}

/// Lexicographic unranking of `rank` into a permutation of 1..n.
fn unrank(n: usize, mut rank: u64) -> Vec<i8> {
    let mut pool: Vec<i8> = (1..=n as i8).collect();
    let mut word = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let f = factorial(i);
        let idx = (rank / f) as usize;
        rank %= f;
        word.push(pool.remove(idx));
    }
    word
}

fn next_permutation(word: &mut [i8]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// Walk the elements of `group` whose index lies in `range`, handing each
/// word to `visit`. Type A words are the plain permutation as positive
/// letters. The caller is responsible for [`check_iter_bounds`].
pub fn for_each_in_range(group: Group, n: usize, range: Range<u64>, mut visit: impl FnMut(&[i8])) {
    if range.start >= range.end {
        return;
    }
    if !group.is_signed() {
        let mut word = unrank(n, range.start);
        let mut idx = range.start;
        loop {
            visit(&word);
            idx += 1;
            if idx >= range.end || !next_permutation(&mut word) {
                break;
            }
        }
        return;
    }
    let masks = 1u64 << n;
    let mut abs = unrank(n, range.start >> n);
    let mut mask = range.start & (masks - 1);
    let mut word = vec![0i8; n];
    let mut idx = range.start;
    loop {
        if group.admits_negatives(mask.count_ones()) {
            for i in 0..n {
                word[i] = if mask >> i & 1 == 1 { -abs[i] } else { abs[i] };
            }
            visit(&word);
        }
        idx += 1;
        if idx >= range.end {
            break;
        }
        mask += 1;
        if mask == masks {
            mask = 0;
            if !next_permutation(&mut abs) {
                break;
            }
        }
    }
}

/// Split `0..total` into at most `parts` contiguous, near-equal ranges.
pub fn split_ranges(total: u64, parts: usize) -> Vec<Range<u64>> {
    let parts = (parts.max(1) as u64).min(total.max(1));
    let base = total / parts;
    let extra = total % parts;
    let mut out = Vec::with_capacity(parts as usize);
    let mut start = 0;
    for i in 0..parts {
        let len = base + u64::from(i < extra);
        out.push(start..start + len);
        start += len;
    }
    out
}

/// Iterator over a group in the canonical order, optionally restricted to an
/// index range (see [`GroupIter::split`]).
pub struct GroupIter {
    group: Group,
    n: usize,
    abs: Vec<i8>,
    mask: u64,
    idx: u64,
    end: u64,
    fresh: bool,
}

impl GroupIter {
    pub fn new(group: Group, n: usize) -> Result<Self> {
        check_iter_bounds(group, n)?;
        Self::with_range(group, n, 0..index_space(group, n))
    }

    pub fn with_range(group: Group, n: usize, range: Range<u64>) -> Result<Self> {
        check_iter_bounds(group, n)?;
        let total = index_space(group, n);
        if range.end > total {
            return domain(format!("range end {} exceeds index space {total}", range.end));
        }
        let (abs, mask) = if group.is_signed() {
            (unrank(n, (range.start >> n).min(factorial(n) - 1)), range.start & ((1 << n) - 1))
        } else {
            (unrank(n, range.start.min(total - 1)), 0)
        };
        Ok(GroupIter { group, n, abs, mask, idx: range.start, end: range.end, fresh: true })
    }

    /// Disjoint contiguous sub-iterators covering the same index range.
    pub fn split(&self, parts: usize) -> Vec<GroupIter> {
        let len = self.end - self.idx;
        split_ranges(len, parts)
            .into_iter()
            .map(|r| {
                GroupIter::with_range(self.group, self.n, self.idx + r.start..self.idx + r.end)
                    .expect("sub-range of a valid range")
            })
            .collect()
    }

    fn advance(&mut self) -> bool {
        self.idx += 1;
        if self.idx >= self.end {
            return false;
        }
        if self.group.is_signed() {
            self.mask += 1;
            if self.mask == 1 << self.n {
                self.mask = 0;
                return next_permutation(&mut self.abs);
            }
            true
        } else {
            next_permutation(&mut self.abs)
        }
    }
}

impl Iterator for GroupIter {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        loop {
            if self.fresh {
                self.fresh = false;
                if self.idx >= self.end {
                    return None;
                }
            } else if !self.advance() {
                self.idx = self.end;
                return None;
            }
            if !self.group.is_signed() {
                let word = self.abs.iter().map(|&x| x as u8).collect();
                return Some(Element::Perm(Permutation { word }));
            }
            if self.group.admits_negatives(self.mask.count_ones()) {
                let word = (0..self.n)
                    .map(|i| if self.mask >> i & 1 == 1 { -self.abs[i] } else { self.abs[i] })
                    .collect();
                return Some(Element::Signed(SignedPermutation { word }));
            }
        }
    }
}

pub fn iter_group(group: Group, n: usize) -> Result<GroupIter> {
    GroupIter::new(group, n)
}

/// All of S_n as typed permutations, in lexicographic order.
pub fn all_perms(n: usize) -> Result<Vec<Permutation>> {
    Ok(iter_group(Group::A, n)?
        .map(|e| match e {
            Element::Perm(p) => p,
            Element::Signed(_) => unreachable!(),
        })
        .collect())
}

pub fn all_signed(group: Group, n: usize) -> Result<Vec<SignedPermutation>> {
    if !group.is_signed() {
        return domain("all_signed needs a signed group");
    }
    Ok(iter_group(group, n)?
        .map(|e| match e {
            Element::Signed(s) => s,
            Element::Perm(_) => unreachable!(),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(w: &[u8]) -> Permutation {
        Permutation::new(w.to_vec()).unwrap()
    }

    fn s(w: &[i8]) -> SignedPermutation {
        SignedPermutation::new(w.to_vec()).unwrap()
    }

    #[test]
    fn rejects_malformed_words() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![]).is_err());
        assert!(SignedPermutation::new(vec![1, -1]).is_err());
        assert!(SignedPermutation::new(vec![0]).is_err());
    }

    #[test]
    fn type_a_peaks_and_runs() {
        let pi = p(&[2, 3, 1, 4, 6, 7, 5]);
        assert_eq!(pi.peaks_valleys(), (vec![2, 6], vec![3]));
        assert_eq!(pi.altruns(), 4);
        assert_eq!(p(&[1, 2, 3]).peaks_valleys(), (vec![], vec![]));
        assert_eq!(p(&[2, 1, 3]).peaks_valleys(), (vec![], vec![2]));
        assert_eq!(p(&[2, 1, 3]).altruns(), 2);
        assert_eq!(Permutation::identity(6).altruns(), 1);
        assert_eq!(p(&[1]).altruns(), 1);
    }

    #[test]
    fn type_a_inversions() {
        assert_eq!(Permutation::identity(5).inv(), 0);
        assert_eq!(p(&[5, 4, 3, 2, 1]).inv(), 10);
        assert_eq!(p(&[2, 3, 1, 4]).inv(), 2);
    }

    #[test]
    fn type_b_statistics() {
        let sigma = s(&[5, 1, 4, -3, -6, 2]);
        let (pk, val) = sigma.peaks_valleys();
        assert_eq!((pk.len(), val.len()), (2, 2));
        assert_eq!(sigma.altruns(), 5);
        assert_eq!(SignedPermutation::identity(4).peaks_valleys(), (vec![], vec![]));
        assert_eq!(s(&[-1]).peaks_valleys(), (vec![], vec![]));
        assert_eq!(SignedPermutation::identity(4).altruns(), 1);
        assert_eq!(s(&[-2, 1]).altruns(), 2);
    }

    #[test]
    fn type_b_and_d_lengths() {
        assert_eq!(SignedPermutation::identity(3).inv_b(), 0);
        assert_eq!(s(&[-2, 1]).inv_b(), 2);
        assert_eq!(s(&[-1]).inv_b(), 1);
        assert_eq!(SignedPermutation::identity(3).inv_d(), 0);
        assert_eq!(s(&[-2, 1]).inv_d(), 1);
    }

    #[test]
    fn end_classes() {
        let w: Vec<i8> = vec![2, 3, 1, 4, 6, 7, 5];
        assert_eq!(classify_ends(&w, Kind::A).unwrap(), EndClass::A(ClassA::AD));
        assert_eq!(classify_ends(&[1], Kind::B).unwrap(), EndClass::B(Step::Ascent));
        assert_eq!(classify_ends(&[-1], Kind::B).unwrap(), EndClass::B(Step::Descent));
        assert!(classify_ends(&[1], Kind::A).is_err());
        assert_eq!(p(&[2, 1]).end_class().unwrap(), ClassA::DD);
        assert_eq!(p(&[1, 2]).end_class().unwrap(), ClassA::AA);
    }

    #[test]
    fn bijections() {
        assert_eq!(p(&[1, 2, 3]).compl(), p(&[3, 2, 1]));
        let pi = p(&[2, 4, 1, 3]);
        assert_eq!(pi.rev().rev(), pi);
        assert_eq!(s(&[1, -2]).flip_sgn(), s(&[-1, 2]));
    }

    #[test]
    fn alternation() {
        assert!(is_alternating(&[2, 1, 4, 3], Kind::A));
        assert!(!is_alternating(&[1, 2], Kind::A));
        assert!(is_alternating(&[1], Kind::A));
        assert!(s(&[1, -2]).is_snake());
        assert!(!s(&[-1]).is_snake());
        assert!(s(&[1]).is_snake());
    }

    #[test]
    fn group_sizes() {
        assert_eq!(iter_group(Group::A, 3).unwrap().count(), 6);
        assert_eq!(iter_group(Group::B, 2).unwrap().count(), 8);
        assert_eq!(iter_group(Group::D, 3).unwrap().count(), 24);
        assert_eq!(iter_group(Group::BminusD, 3).unwrap().count(), 24);
        assert!(iter_group(Group::B, 0).is_err());
        assert!(iter_group(Group::A, ITER_CAP_A + 1).is_err());
    }

    #[test]
    fn order_is_lexicographic_then_masks() {
        let words: Vec<Vec<i8>> = iter_group(Group::B, 2).unwrap().map(|e| e.word_i8()).collect();
        assert_eq!(
            words,
            vec![
                vec![1, 2],
                vec![-1, 2],
                vec![1, -2],
                vec![-1, -2],
                vec![2, 1],
                vec![-2, 1],
                vec![2, -1],
                vec![-2, -1]
            ]
        );
    }

    #[test]
    fn split_covers_everything_once() {
        for group in [Group::A, Group::B, Group::D, Group::BminusD] {
            let whole: Vec<Vec<i8>> = iter_group(group, 4).unwrap().map(|e| e.word_i8()).collect();
            let parts = iter_group(group, 4).unwrap().split(7);
            let joined: Vec<Vec<i8>> = parts.into_iter().flatten().map(|e| e.word_i8()).collect();
            assert_eq!(whole, joined);

            let mut visited = Vec::new();
            for r in split_ranges(index_space(group, 4), 5) {
                for_each_in_range(group, 4, r, |w| visited.push(w.to_vec()));
            }
            assert_eq!(whole, visited);
        }
    }
}
