//! Brute-force oracles. Everything here is computed by walking every element
//! of the group; nothing is derived from a formula.
//!
//! The expensive part is a single parallel pass per `(kind, n)` that
//! histograms each element by its peaks, valleys and a handful of boolean
//! features. All distribution and counting queries are answered from that
//! histogram. The subset and snake-subset oracles need their own passes.

pub mod involutions;

use std::collections::HashMap;
use std::ops::Range;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::perm::{
    class_a_of, for_each_in_range, index_space, inv_a, inv_b, is_down_up, is_snake_word,
    last_step_b, negatives, pk_val_a, pk_val_b, split_ranges, ClassA, EndClass, Group, Step,
};
use crate::{BiPoly, UniPoly};

use involutions::{snake_subset, subset_b, subset_d};

/// Default enumeration caps.
pub const DEFAULT_CAP_A: usize = 11;
pub const DEFAULT_CAP_SIGNED: usize = 9;

/// Range chunks handed to each worker; more chunks than workers evens out load.
const CHUNKS_PER_WORKER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SignStat {
    None,
    InvA,
    InvB,
    InvD,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FirstSign {
    Positive,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    All,
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variable {
    T,
    PQ,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Dist {
    Uni(UniPoly),
    Bi(BiPoly),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedDistributionRequest {
    pub group: Group,
    pub n: usize,
    pub sign_statistic: SignStat,
    pub end: Option<EndClass>,
    pub first_letter: Option<FirstSign>,
    /// Restrict to even (`Plus`) or odd (`Minus`) length, measured with the
    /// group's own length function.
    pub parity: Parity,
}

impl SignedDistributionRequest {
    pub fn new(group: Group, n: usize) -> Self {
        SignedDistributionRequest {
            group,
            n,
            sign_statistic: SignStat::None,
            end: None,
            first_letter: None,
            parity: Parity::All,
        }
    }

    pub fn signed(mut self, stat: SignStat) -> Self {
        self.sign_statistic = stat;
        self
    }

    pub fn end(mut self, end: EndClass) -> Self {
        self.end = Some(end);
        self
    }

    pub fn first(mut self, sign: FirstSign) -> Self {
        self.first_letter = Some(sign);
        self
    }

    pub fn parity(mut self, parity: Parity) -> Self {
        self.parity = parity;
        self
    }

    /// The length function the group uses for its ± split.
    pub fn own_length(group: Group) -> SignStat {
        match group {
            Group::A => SignStat::InvA,
            Group::B => SignStat::InvB,
            Group::D | Group::BminusD => SignStat::InvD,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return domain("n must be positive");
        }
        let ok = match (self.group, self.sign_statistic) {
            (_, SignStat::None) => true,
            (Group::A, SignStat::InvA) => true,
            (Group::B, SignStat::InvB) => true,
            (Group::B | Group::D | Group::BminusD, SignStat::InvD) => true,
            _ => false,
        };
        if !ok {
            return domain(format!(
                "sign statistic {:?} is not defined on group {}",
                self.sign_statistic, self.group
            ));
        }
        match (self.group, self.end) {
            (_, None) => {}
            (Group::A, Some(EndClass::A(_))) if self.n >= 2 => {}
            (Group::A, Some(EndClass::A(_))) => return domain("type A end classes need n >= 2"),
            (Group::A, Some(EndClass::B(_))) => {
                return domain("group A takes a first/last pair class, not a single step")
            }
            (_, Some(EndClass::A(_))) => {
                return domain("signed groups take a last-step class, not a pair class")
            }
            (_, Some(EndClass::B(_))) => {}
        }
        if self.group == Group::A && self.first_letter.is_some() {
            return domain("first-letter sign is meaningless in group A");
        }
        Ok(())
    }
}

/// The univariate families the harness talks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PolyFamily {
    R,
    RPlus,
    RMinus,
    RB,
    RBPlus,
    RBMinus,
    RBFirstPos,
    RBFirstNeg,
    RD,
    RBmD,
    RDPlus,
    RDMinus,
    RBmDPlus,
    RBmDMinus,
    RDFirstPos,
    RBmDFirstPos,
}

impl PolyFamily {
    pub const ALL: [PolyFamily; 16] = [
        PolyFamily::R,
        PolyFamily::RPlus,
        PolyFamily::RMinus,
        PolyFamily::RB,
        PolyFamily::RBPlus,
        PolyFamily::RBMinus,
        PolyFamily::RBFirstPos,
        PolyFamily::RBFirstNeg,
        PolyFamily::RD,
        PolyFamily::RBmD,
        PolyFamily::RDPlus,
        PolyFamily::RDMinus,
        PolyFamily::RBmDPlus,
        PolyFamily::RBmDMinus,
        PolyFamily::RDFirstPos,
        PolyFamily::RBmDFirstPos,
    ];

    pub fn group(self) -> Group {
        use PolyFamily::*;
        match self {
            R | RPlus | RMinus => Group::A,
            RB | RBPlus | RBMinus | RBFirstPos | RBFirstNeg => Group::B,
            RD | RDPlus | RDMinus | RDFirstPos => Group::D,
            RBmD | RBmDPlus | RBmDMinus | RBmDFirstPos => Group::BminusD,
        }
    }

    pub fn request(self, n: usize) -> SignedDistributionRequest {
        use PolyFamily::*;
        let req = SignedDistributionRequest::new(self.group(), n);
        match self {
            RPlus | RBPlus | RDPlus | RBmDPlus => req.parity(Parity::Plus),
            RMinus | RBMinus | RDMinus | RBmDMinus => req.parity(Parity::Minus),
            RBFirstPos | RDFirstPos | RBmDFirstPos => req.first(FirstSign::Positive),
            RBFirstNeg => req.first(FirstSign::Negative),
            R | RB | RD | RBmD => req,
        }
    }

    pub fn name(self) -> &'static str {
        use PolyFamily::*;
        match self {
            R => "R",
            RPlus => "R+",
            RMinus => "R-",
            RB => "RB",
            RBPlus => "RB+",
            RBMinus => "RB-",
            RBFirstPos => "RB>",
            RBFirstNeg => "RB<",
            RD => "RD",
            RBmD => "RBmD",
            RDPlus => "RD+",
            RDMinus => "RD-",
            RBmDPlus => "RBmD+",
            RBmDMinus => "RBmD-",
            RDFirstPos => "RD>",
            RBmDFirstPos => "RBmD>",
        }
    }
}

impl std::str::FromStr for PolyFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PolyFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown polynomial family `{s}`")))
    }
}

// ---------------------------------------------------------------------------
// Histogram.

const F_NEGS_ODD: u32 = 1;
const F_LEN_ODD: u32 = 2;
const F_FIRST_NEG: u32 = 4;
const F_FIRST_DESC: u32 = 8;
const F_LAST_DESC: u32 = 16;
const F_ALT: u32 = 32;
const F_SNAKE: u32 = 64;
const FEATURE_COMBOS: usize = 128;

/// Decoded histogram cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Features {
    pub negs_odd: bool,
    /// inv_A parity in type A, inv_B parity in the signed groups.
    pub len_odd: bool,
    pub first_neg: bool,
    pub first_desc: bool,
    pub last_desc: bool,
    pub alternating: bool,
    pub snake: bool,
    pub pk: u32,
    pub val: u32,
}

impl Features {
    pub fn inv_d_odd(&self) -> bool {
        self.len_odd ^ self.negs_odd
    }
}

/// Counts of elements of S_n (or B_n) by feature bits, peaks and valleys.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    signed: bool,
    n: usize,
    counts: Vec<u64>,
}

impl Profile {
    fn empty(signed: bool, n: usize) -> Self {
        Profile { signed, n, counts: vec![0; FEATURE_COMBOS * (n + 1) * (n + 1)] }
    }

    fn slot(&self, bits: u32, pk: u32, val: u32) -> usize {
        let w = self.n + 1;
        (bits as usize * w + pk as usize) * w + val as usize
    }

    fn record(&mut self, word: &[i8]) {
        let n = word.len();
        let mut bits = 0;
        let (pk, val);
        if self.signed {
            (pk, val) = pk_val_b(word);
            if negatives(word) % 2 == 1 {
                bits |= F_NEGS_ODD;
            }
            if inv_b(word) % 2 == 1 {
                bits |= F_LEN_ODD;
            }
            if word[0] < 0 {
                bits |= F_FIRST_NEG;
            }
            if last_step_b(word) == Some(Step::Descent) {
                bits |= F_LAST_DESC;
            }
            if is_snake_word(word) {
                bits |= F_SNAKE;
            }
        } else {
            (pk, val) = pk_val_a(word);
            if inv_a(word) % 2 == 1 {
                bits |= F_LEN_ODD;
            }
            if n >= 2 {
                if word[0] > word[1] {
                    bits |= F_FIRST_DESC;
                }
                if word[n - 2] > word[n - 1] {
                    bits |= F_LAST_DESC;
                }
            }
        }
        if is_down_up(word) {
            bits |= F_ALT;
        }
        let i = self.slot(bits, pk, val);
        self.counts[i] += 1;
    }

    fn merge(mut self, other: Profile) -> Profile {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Non-empty cells in a fixed order.
    pub fn cells(&self) -> impl Iterator<Item = (Features, u64)> + '_ {
        let w = self.n + 1;
        self.counts.iter().enumerate().filter(|(_, &c)| c > 0).map(move |(i, &c)| {
            let val = (i % w) as u32;
            let pk = ((i / w) % w) as u32;
            let bits = (i / (w * w)) as u32;
            let f = Features {
                negs_odd: bits & F_NEGS_ODD != 0,
                len_odd: bits & F_LEN_ODD != 0,
                first_neg: bits & F_FIRST_NEG != 0,
                first_desc: bits & F_FIRST_DESC != 0,
                last_desc: bits & F_LAST_DESC != 0,
                alternating: bits & F_ALT != 0,
                snake: bits & F_SNAKE != 0,
                pk,
                val,
            };
            (f, c)
        })
    }
}

/// Signed counts indexed by `(pk, val)`, the accumulator for subset passes.
#[derive(Debug, Clone, PartialEq, Eq)]
struct PkValTally {
    w: usize,
    cells: Vec<i64>,
}

impl PkValTally {
    fn new(n: usize) -> Self {
        PkValTally { w: n + 1, cells: vec![0; (n + 1) * (n + 1)] }
    }

    fn add(&mut self, pk: u32, val: u32, sign: i64) {
        self.cells[pk as usize * self.w + val as usize] += sign;
    }

    fn merge(mut self, other: &PkValTally) -> Self {
        for (a, b) in self.cells.iter_mut().zip(&other.cells) {
            *a += b;
        }
        self
    }

    fn to_bipoly(&self) -> BiPoly {
        let mut f = BiPoly::zero();
        for (i, &c) in self.cells.iter().enumerate() {
            if c != 0 {
                f.add_term((i / self.w) as u32, (i % self.w) as u32, BigInt::from(c));
            }
        }
        f
    }
}

/// Signed subset contributions, indexed `[end][k - 1]` with end 0 = ascent.
#[derive(Debug, Clone, PartialEq)]
pub struct SubsetTable {
    pub group: Group,
    pub n: usize,
    pub parts: [Vec<BiPoly>; 2],
}

impl SubsetTable {
    pub fn get(&self, k: usize, end: Step) -> Result<&BiPoly> {
        let row = &self.parts[end_index(end)];
        row.get(k.wrapping_sub(1))
            .ok_or_else(|| Error::Domain(format!("subset index {k} out of range 1..={}", row.len())))
    }
}

fn end_index(end: Step) -> usize {
    match end {
        Step::Ascent => 0,
        Step::Descent => 1,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SnakeFamilyCount {
    B,
    BPlus,
    BMinus,
    D,
    BminusD,
    DPlus,
    DMinus,
    BminusDPlus,
    BminusDMinus,
}

impl From<crate::series::SnakeFamily> for SnakeFamilyCount {
    fn from(f: crate::series::SnakeFamily) -> Self {
        use crate::series::SnakeFamily as S;
        match f {
            S::B => SnakeFamilyCount::B,
            S::BPlus => SnakeFamilyCount::BPlus,
            S::BMinus => SnakeFamilyCount::BMinus,
            S::D => SnakeFamilyCount::D,
            S::BminusD => SnakeFamilyCount::BminusD,
            S::DPlus => SnakeFamilyCount::DPlus,
            S::DMinus => SnakeFamilyCount::DMinus,
            S::BminusDPlus => SnakeFamilyCount::BminusDPlus,
            S::BminusDMinus => SnakeFamilyCount::BminusDMinus,
        }
    }
}

type Cache<K, V> = Mutex<HashMap<K, Arc<V>>>;

/// Parallel exhaustive enumerator. Results do not depend on the worker count.
pub struct Engine {
    pool: rayon::ThreadPool,
    workers: usize,
    cap_a: usize,
    cap_signed: usize,
    profiles: Cache<(bool, usize), Profile>,
    subsets: Cache<(Group, usize), SubsetTable>,
}

impl std::fmt::Debug for Engine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Engine")
            .field("workers", &self.workers)
            .field("cap_a", &self.cap_a)
            .field("cap_signed", &self.cap_signed)
            .finish()
    }
}

impl Default for Engine {
    fn default() -> Self {
        let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
        Engine::new(workers)
    }
}

impl Engine {
    pub fn new(workers: usize) -> Self {
        Self::with_caps(workers, DEFAULT_CAP_A, DEFAULT_CAP_SIGNED)
    }

    pub fn with_caps(workers: usize, cap_a: usize, cap_signed: usize) -> Self {
        let workers = workers.max(1);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("thread pool");
        Engine {
            pool,
            workers,
            cap_a: cap_a.min(crate::perm::ITER_CAP_A),
            cap_signed: cap_signed.min(crate::perm::ITER_CAP_SIGNED),
            profiles: Mutex::new(HashMap::new()),
            subsets: Mutex::new(HashMap::new()),
        }
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    pub fn cap(&self, group: Group) -> usize {
        if group.is_signed() {
            self.cap_signed
        } else {
            self.cap_a
        }
    }

    pub fn check_cap(&self, group: Group, n: usize) -> Result<()> {
        let cap = self.cap(group);
        if n == 0 || n > cap {
            return domain(format!("n = {n} outside 1..={cap} for group {group}"));
        }
        Ok(())
    }

    /// Run `f` on this engine's worker pool.
    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        self.pool.install(f)
    }

    /// Fold over every element of `group`, split across the workers. `merge`
    /// must be associative and commutative.
    pub fn fold<A, I, V, M>(&self, group: Group, n: usize, init: I, visit: V, merge: M) -> Result<A>
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        V: Fn(&mut A, &[i8]) + Sync + Send,
        M: Fn(A, A) -> A + Sync + Send,
    {
        self.check_cap(group, n)?;
        let chunks: Vec<Range<u64>> =
            split_ranges(index_space(group, n), self.workers * CHUNKS_PER_WORKER);
        Ok(self.pool.install(|| {
            chunks
                .into_par_iter()
                .map(|r| {
                    let mut acc = init();
                    for_each_in_range(group, n, r, |w| visit(&mut acc, w));
                    acc
                })
                .reduce(&init, &merge)
        }))
    }

    /// Histogram of S_n (`signed = false`) or B_n (`signed = true`).
    pub fn profile(&self, signed: bool, n: usize) -> Result<Arc<Profile>> {
        let key = (signed, n);
        if let Some(p) = self.profiles.lock().expect("cache lock").get(&key) {
            return Ok(p.clone());
        }
        let group = if signed { Group::B } else { Group::A };
        let p = Arc::new(self.fold(
            group,
            n,
            || Profile::empty(signed, n),
            |acc, w| acc.record(w),
            Profile::merge,
        )?);
        self.profiles.lock().expect("cache lock").insert(key, p.clone());
        Ok(p)
    }

    /// Histogram cells of the elements selected by `req` (ignoring the sign
    /// statistic), with the sign each cell carries.
    fn selected(&self, req: &SignedDistributionRequest) -> Result<Vec<(Features, i64)>> {
        req.validate()?;
        self.check_cap(req.group, req.n)?;
        let profile = self.profile(req.group.is_signed(), req.n)?;
        let odd_under = |f: &Features, stat: SignStat| match stat {
            SignStat::None => false,
            SignStat::InvA | SignStat::InvB => f.len_odd,
            SignStat::InvD => f.inv_d_odd(),
        };
        let own = SignedDistributionRequest::own_length(req.group);
        let mut out = Vec::new();
        for (f, c) in profile.cells() {
            let in_group = match req.group {
                Group::A | Group::B => true,
                Group::D => !f.negs_odd,
                Group::BminusD => f.negs_odd,
            };
            let end_ok = match req.end {
                None => true,
                Some(EndClass::A(class)) => {
                    ClassA::from_steps(step_of(f.first_desc), step_of(f.last_desc)) == class
                }
                Some(EndClass::B(step)) => step_of(f.last_desc) == step,
            };
            let first_ok = match req.first_letter {
                None => true,
                Some(FirstSign::Positive) => !f.first_neg,
                Some(FirstSign::Negative) => f.first_neg,
            };
            let parity_ok = match req.parity {
                Parity::All => true,
                Parity::Plus => !odd_under(&f, own),
                Parity::Minus => odd_under(&f, own),
            };
            if in_group && end_ok && first_ok && parity_ok {
                let sign = if odd_under(&f, req.sign_statistic) { -1 } else { 1 };
                out.push((f, sign * c as i64));
            }
        }
        Ok(out)
    }

    pub fn dist_runs(&self, req: &SignedDistributionRequest, var: Variable) -> Result<Dist> {
        Ok(match var {
            Variable::T => Dist::Uni(self.dist_uni(req)?),
            Variable::PQ => Dist::Bi(self.dist_biv(req)?),
        })
    }

    /// `Σ ± t^{altruns}` over the selected elements.
    pub fn dist_uni(&self, req: &SignedDistributionRequest) -> Result<UniPoly> {
        let mut coeffs = vec![0i64; req.n + 2];
        for (f, c) in self.selected(req)? {
            coeffs[(f.pk + f.val + 1) as usize] += c;
        }
        Ok(UniPoly::new(coeffs.into_iter().map(BigInt::from).collect()))
    }

    /// `Σ ± p^{pk} q^{val}` over the selected elements.
    pub fn dist_biv(&self, req: &SignedDistributionRequest) -> Result<BiPoly> {
        let mut tally = PkValTally::new(req.n);
        for (f, c) in self.selected(req)? {
            tally.add(f.pk, f.val, c);
        }
        Ok(tally.to_bipoly())
    }

    pub fn family(&self, family: PolyFamily, n: usize) -> Result<UniPoly> {
        self.dist_uni(&family.request(n))
    }

    /// Distributions over the even-length and odd-length elements.
    pub fn parity_split(&self, group: Group, n: usize) -> Result<(UniPoly, UniPoly)> {
        let req = SignedDistributionRequest::new(group, n);
        Ok((
            self.dist_uni(&req.parity(Parity::Plus))?,
            self.dist_uni(&req.parity(Parity::Minus))?,
        ))
    }

    /// Bivariate sum over one end class of S_n, signed by inv_A if asked.
    pub fn class_poly_a(&self, n: usize, class: ClassA, signed: bool) -> Result<BiPoly> {
        if n < 2 {
            return domain("type A end classes need n >= 2");
        }
        let stat = if signed { SignStat::InvA } else { SignStat::None };
        self.dist_biv(
            &SignedDistributionRequest::new(Group::A, n).signed(stat).end(EndClass::A(class)),
        )
    }

    pub fn count_alternating(&self, group: Group, n: usize, parity: Parity) -> Result<u64> {
        let req = SignedDistributionRequest::new(group, n).parity(parity);
        Ok(self.selected(&req)?.iter().filter(|(f, _)| f.alternating).map(|(_, c)| c.unsigned_abs()).sum())
    }

    pub fn count_snakes(&self, family: impl Into<SnakeFamilyCount>, n: usize) -> Result<u64> {
        use SnakeFamilyCount::*;
        let (group, parity) = match family.into() {
            B => (Group::B, Parity::All),
            BPlus => (Group::B, Parity::Plus),
            BMinus => (Group::B, Parity::Minus),
            D => (Group::D, Parity::All),
            BminusD => (Group::BminusD, Parity::All),
            DPlus => (Group::D, Parity::Plus),
            DMinus => (Group::D, Parity::Minus),
            BminusDPlus => (Group::BminusD, Parity::Plus),
            BminusDMinus => (Group::BminusD, Parity::Minus),
        };
        let req = SignedDistributionRequest::new(group, n).parity(parity);
        Ok(self.selected(&req)?.iter().filter(|(f, _)| f.snake).map(|(_, c)| c.unsigned_abs()).sum())
    }

    /// Signed contributions of the eight (B) or nine (D) subsets of each end
    /// class, in one pass. Signs use inv_B for B and inv_D for D.
    pub fn subset_table(&self, group: Group, n: usize) -> Result<Arc<SubsetTable>> {
        if !matches!(group, Group::B | Group::D) {
            return domain("subset partitions are defined for B and D");
        }
        if n < 3 {
            return domain("subset partitions need n >= 3");
        }
        let key = (group, n);
        if let Some(t) = self.subsets.lock().expect("cache lock").get(&key) {
            return Ok(t.clone());
        }
        let parts = if group == Group::B { 8 } else { 9 };
        let tallies = self.fold(
            group,
            n,
            || vec![PkValTally::new(n); 2 * parts],
            |acc, w| {
                let k = if group == Group::B { subset_b(w) } else { subset_d(w) } as usize;
                let end = end_index(last_step_b(w).expect("non-empty"));
                let len = if group == Group::B { inv_b(w) } else { crate::perm::inv_d(w) };
                let (pk, val) = pk_val_b(w);
                acc[end * parts + k - 1].add(pk, val, if len % 2 == 0 { 1 } else { -1 });
            },
            |a, b| a.into_iter().zip(&b).map(|(x, y)| x.merge(y)).collect(),
        )?;
        let row = |e: usize| (0..parts).map(|k| tallies[e * parts + k].to_bipoly()).collect();
        let table = Arc::new(SubsetTable { group, n, parts: [row(0), row(1)] });
        self.subsets.lock().expect("cache lock").insert(key, table.clone());
        Ok(table)
    }

    pub fn subset_contribution_b(&self, n: usize, k: usize, end: Step) -> Result<BiPoly> {
        self.subset_table(Group::B, n)?.get(k, end).cloned()
    }

    pub fn subset_contribution_d(&self, n: usize, k: usize, end: Step) -> Result<BiPoly> {
        self.subset_table(Group::D, n)?.get(k, end).cloned()
    }

    /// Number of D_n snakes in the k-th snake subset with the given inv_D
    /// parity.
    pub fn snake_subset_contribution(&self, n: usize, k: usize, parity: Parity) -> Result<u64> {
        if n < 3 || !(1..=4).contains(&k) {
            return domain("snake subsets need n >= 3 and k in 1..=4");
        }
        let counts = self.fold(
            Group::D,
            n,
            || [[0u64; 2]; 4],
            |acc, w| {
                if is_snake_word(w) {
                    let s = snake_subset(w) as usize - 1;
                    acc[s][(crate::perm::inv_d(w) % 2) as usize] += 1;
                }
            },
            |mut a, b| {
                for s in 0..4 {
                    for p in 0..2 {
                        a[s][p] += b[s][p];
                    }
                }
                a
            },
        )?;
        let [even, odd] = counts[k - 1];
        Ok(match parity {
            Parity::All => even + odd,
            Parity::Plus => even,
            Parity::Minus => odd,
        })
    }
}

fn step_of(desc: bool) -> Step {
    if desc {
        Step::Descent
    } else {
        Step::Ascent
    }
}

/// The T-set with the given final step as typed words.
pub fn build_t(n: usize, end: Step) -> Vec<crate::perm::SignedPermutation> {
    involutions::build_t(n, end)
        .into_iter()
        .map(crate::perm::SignedPermutation::from_word_unchecked)
        .collect()
}

/// Signed bivariate sum over T_n. With `group = D` only the members of D_n
/// are summed and the sign is inv_D; otherwise the sign is inv_B.
pub fn t_contribution(n: usize, end: Step, group: Group) -> Result<BiPoly> {
    let mut f = BiPoly::zero();
    for w in involutions::build_t(n, end) {
        let sign = match group {
            Group::B => inv_b(&w) % 2,
            Group::D => {
                if negatives(&w) % 2 == 1 {
                    continue;
                }
                crate::perm::inv_d(&w) % 2
            }
            _ => return domain("T-set sums are taken in B or D"),
        };
        let (pk, val) = pk_val_b(&w);
        f.add_term(pk, val, BigInt::from(if sign == 0 { 1 } else { -1 }));
    }
    Ok(f)
}

/// Type A end class of a word, exposed for callers that bucket by hand.
pub fn class_of(word: &[i8]) -> Option<ClassA> {
    class_a_of(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{all_perms, all_signed, SignedPermutation};

    fn e() -> Engine {
        Engine::new(2)
    }

    fn uni(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn golden_small() {
        let eng = e();
        assert_eq!(eng.family(PolyFamily::R, 4).unwrap(), uni(&[0, 2, 12, 10]));
        let (plus, minus) = eng.parity_split(Group::A, 4).unwrap();
        assert_eq!(plus, uni(&[0, 2, 4, 6]));
        assert_eq!(minus, uni(&[0, 0, 8, 4]));
        let (_, minus5) = eng.parity_split(Group::A, 5).unwrap();
        assert_eq!(minus5, uni(&[0, 0, 16, 28, 16]));
    }

    #[test]
    fn signed_bivariate_small() {
        let eng = e();
        let req = SignedDistributionRequest::new(Group::A, 4).signed(SignStat::InvA);
        assert_eq!(
            eng.dist_biv(&req).unwrap(),
            BiPoly::from_terms(&[(0, 0, 2), (1, 0, -2), (0, 1, -2), (1, 1, 2)])
        );
        let req = SignedDistributionRequest::new(Group::A, 2).signed(SignStat::InvA);
        assert!(eng.dist_biv(&req).unwrap().is_zero());
        assert_eq!(
            eng.class_poly_a(4, ClassA::AD, true).unwrap(),
            BiPoly::from_terms(&[(1, 0, -2)])
        );
        assert_eq!(
            eng.class_poly_a(4, ClassA::AA, true).unwrap(),
            BiPoly::from_terms(&[(0, 0, 1), (1, 1, 1)])
        );
        assert!(eng.class_poly_a(1, ClassA::AA, true).is_err());
    }

    #[test]
    fn selectors_are_validated() {
        let eng = e();
        let bad = SignedDistributionRequest::new(Group::A, 3).signed(SignStat::InvB);
        assert!(eng.dist_uni(&bad).is_err());
        let bad = SignedDistributionRequest::new(Group::D, 3).signed(SignStat::InvB);
        assert!(eng.dist_uni(&bad).is_err());
        let bad = SignedDistributionRequest::new(Group::B, 3).end(EndClass::A(ClassA::AA));
        assert!(eng.dist_uni(&bad).is_err());
        assert!(eng.dist_uni(&SignedDistributionRequest::new(Group::B, 0)).is_err());
        assert!(eng.dist_uni(&SignedDistributionRequest::new(Group::B, 10)).is_err());
    }

    #[test]
    fn type_b_base_values() {
        let eng = e();
        let req = SignedDistributionRequest::new(Group::B, 1).signed(SignStat::InvB);
        let a = eng.dist_biv(&req.end(EndClass::B(Step::Ascent))).unwrap();
        let d = eng.dist_biv(&req.end(EndClass::B(Step::Descent))).unwrap();
        assert_eq!(a, BiPoly::from_int(1));
        assert_eq!(d, BiPoly::from_int(-1));
    }

    #[test]
    fn counts() {
        let eng = e();
        assert_eq!(eng.count_alternating(Group::A, 4, Parity::All).unwrap(), 5);
        assert_eq!(eng.count_alternating(Group::B, 1, Parity::All).unwrap(), 2);
        assert_eq!(eng.count_snakes(SnakeFamilyCount::B, 3).unwrap(), 11);
        assert_eq!(eng.count_snakes(SnakeFamilyCount::DPlus, 1).unwrap(), 1);
        assert_eq!(eng.count_snakes(SnakeFamilyCount::DMinus, 2).unwrap(), 1);
        assert_eq!(eng.count_snakes(SnakeFamilyCount::D, 2).unwrap(), 1);
        // Alternating D_2 elements split evenly.
        assert_eq!(eng.count_alternating(Group::D, 2, Parity::Plus).unwrap(), 1);
        assert_eq!(eng.count_alternating(Group::D, 2, Parity::Minus).unwrap(), 1);
    }

    #[test]
    fn profile_matches_a_naive_walk() {
        let eng = e();
        let mut naive = vec![0i64; 6];
        for p in all_perms(5).unwrap() {
            naive[p.altruns() as usize] += 1;
        }
        assert_eq!(eng.family(PolyFamily::R, 5).unwrap(), UniPoly::from_ints(&naive));
        let mut naive = vec![0i64; 5];
        for s in all_signed(Group::D, 4).unwrap() {
            if s.word()[0] > 0 {
                naive[s.altruns() as usize] += 1;
            }
        }
        assert_eq!(eng.family(PolyFamily::RDFirstPos, 4).unwrap(), UniPoly::from_ints(&naive));
    }

    #[test]
    fn subsets_resum() {
        let eng = e();
        for n in 3..=5 {
            for end in [Step::Ascent, Step::Descent] {
                let table = eng.subset_table(Group::B, n).unwrap();
                let sum = table.parts[end_index(end)].iter().fold(BiPoly::zero(), |a, b| &a + b);
                let req =
                    SignedDistributionRequest::new(Group::B, n).signed(SignStat::InvB).end(EndClass::B(end));
                assert_eq!(sum, eng.dist_biv(&req).unwrap());
            }
        }
        assert!(eng.subset_table(Group::A, 4).is_err());
        assert!(eng.subset_contribution_b(4, 9, Step::Ascent).is_err());
    }

    #[test]
    fn t_sets_sit_inside_subset_eight() {
        for n in 3..=7 {
            for end in [Step::Ascent, Step::Descent] {
                for t in build_t(n, end) {
                    assert_eq!(subset_b(t.word()), 8);
                    assert_eq!(t.last_step(), end);
                    assert!(SignedPermutation::new(t.word().to_vec()).is_ok());
                }
            }
        }
    }

    #[test]
    fn worker_count_is_invisible() {
        let one = Engine::new(1);
        let many = Engine::new(8);
        for g in [Group::A, Group::B, Group::D, Group::BminusD] {
            let req = SignedDistributionRequest::new(g, 5);
            assert_eq!(one.dist_uni(&req).unwrap(), many.dist_uni(&req).unwrap());
        }
        assert_eq!(one.subset_table(Group::D, 5).unwrap(), many.subset_table(Group::D, 5).unwrap());
    }
}
