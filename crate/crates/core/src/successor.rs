//! Feedback functions for the pure cycling register and the cut-down steppers
//! built on top of them.
//!
//! Every rule maps the current state `α = a1 a2 .. an` to the next symbol `x`;
//! the register then shifts to `a2 .. an x`. Throughout, "candidate" means that
//! shifted word for the current value of `x`, and it is refreshed every time
//! `x` changes.

use crate::counting::{Count, CountTable};
use crate::cutplan::{CutParams, CutSet};
use crate::error::{Error, Result};
use crate::ranking::rank_aperiodic;
use crate::words::{format_symbols, necklace_scan, period};

/// Binary de Bruijn successor: complement `a1` iff `a2 .. an 1` is a necklace.
#[inline]
pub fn pcr3(alpha: &[u8]) -> u8 {
    let n = alpha.len();
    let shifted_is_necklace = necklace_scan(n, |i| if i + 1 < n { alpha[i + 1] } else { 1 }).is_some();
    if shifted_is_necklace {
        1 - alpha[0]
    } else {
        alpha[0]
    }
}

/// Smallest `x` in `1..k` such that `a2 .. an x` is a necklace, or 0.
#[inline]
pub(crate) fn smallest_necklace_extension(alpha: &[u8], k: usize) -> u8 {
    let n = alpha.len();
    if n == 1 {
        return 1;
    }
    let tail = &alpha[1..];
    // Scan the prefix a2..an as a prenecklace; p is the length of its longest
    // Lyndon prefix.
    let mut p = 1;
    for i in 1..tail.len() {
        let (prev, cur) = (tail[i - p], tail[i]);
        if prev > cur {
            return 0;
        }
        if prev < cur {
            p = i + 1;
        }
    }
    // Appending x: x < c breaks the prenecklace, x = c keeps period p (a
    // necklace iff p | n), x > c makes a Lyndon word.
    let c = tail[n - 1 - p];
    if c >= 1 && n.is_multiple_of(p) {
        c
    } else if (c as usize) + 1 < k {
        c + 1
    } else {
        0
    }
}

/// The k-ary de Bruijn successor g'3.
///
/// With `x` from [`smallest_necklace_extension`]: `k - 1` when `x > 0` and
/// `a1 = x - 1`, `a1 - 1` when `x > 0` and `a1 >= x`, otherwise `a1`.
#[inline]
pub fn g3prime(alpha: &[u8], k: usize) -> u8 {
    let a1 = alpha[0];
    let x = smallest_necklace_extension(alpha, k);
    if x > 0 && a1 + 1 == x {
        (k - 1) as u8
    } else if x > 0 && a1 >= x {
        a1 - 1
    } else {
        a1
    }
}

/// One step of the main-cycle construction for an arbitrary target set.
///
/// `member` decides membership of length-`n` words in the set. For `k = 2` the
/// PCR3 output is complemented when its successor leaves the set; for `k > 2`
/// the g'3 output is replaced by the largest symbol whose successor stays inside.
pub fn mc_step(alpha: &[u8], k: usize, member: impl Fn(&[u8]) -> bool) -> Result<u8> {
    let n = alpha.len();
    let mut candidate = Vec::with_capacity(n);
    candidate.extend_from_slice(&alpha[1..]);
    let first = if k == 2 { pcr3(alpha) } else { g3prime(alpha, k) };
    candidate.push(first);
    if member(&candidate) {
        return Ok(first);
    }
    for x in (0..k as u8).rev() {
        candidate[n - 1] = x;
        if x != first && member(&candidate) {
            return Ok(x);
        }
    }
    Err(Error::NoSuccessorInSet(format_symbols(alpha, k)))
}

/// Mutable context of the stateful cut-down steppers.
#[derive(Debug, Clone)]
pub struct GeneratorState {
    alpha: Vec<u8>,
    candidate: Vec<u8>,
    weight: usize,
    /// Weight-`m`, period-`h` cycles joined so far.
    t_prime: Count,
    /// Set while the `n = 2m - 1` special cycle has not been joined yet.
    flag: bool,
    params: CutParams,
    cuts: CutSet,
}

impl GeneratorState {
    fn with_start(alpha: Vec<u8>, params: CutParams, cuts: CutSet) -> Self {
        let weight = crate::words::weight(&alpha);
        GeneratorState {
            candidate: alpha.clone(),
            alpha,
            weight,
            t_prime: 0,
            flag: params.odd_special_case(),
            params,
            cuts,
        }
    }

    pub fn alpha(&self) -> &[u8] {
        &self.alpha
    }

    pub fn t_prime(&self) -> Count {
        self.t_prime
    }

    pub fn flag(&self) -> bool {
        self.flag
    }

    pub fn params(&self) -> &CutParams {
        &self.params
    }

    pub fn cuts(&self) -> &CutSet {
        &self.cuts
    }

    /// Weight of the current state, maintained incrementally.
    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Loads `a2 .. an` into the candidate buffer.
    #[inline]
    fn load_shift(&mut self) {
        let n = self.alpha.len();
        self.candidate[..n - 1].copy_from_slice(&self.alpha[1..]);
    }

    #[inline]
    fn set_last(&mut self, x: u8) {
        let n = self.candidate.len();
        self.candidate[n - 1] = x;
    }

    #[inline]
    fn advance(&mut self, x: u8) -> u8 {
        let a1 = self.alpha[0];
        self.set_last(x);
        std::mem::swap(&mut self.alpha, &mut self.candidate);
        self.weight = self.weight + x as usize - a1 as usize;
        a1
    }
}

/// Binary stepper state starting at `0^(n-1) 1`.
pub fn binary_init(params: CutParams, cuts: CutSet) -> GeneratorState {
    assert_eq!(params.k, 2, "binary stepper needs k = 2");
    let mut alpha = vec![0u8; params.n];
    alpha[params.n - 1] = 1;
    GeneratorState::with_start(alpha, params, cuts)
}

/// k-ary stepper state.
///
/// The register starts at the main-cycle successor of `0^n`, which is
/// `0^(n-1) (k-1)` unless `m < k - 1` or that word lies on a weight-`m`,
/// period-`h` cycle. In the latter case the cycle is counted as joined.
pub fn kary_init(params: CutParams, cuts: CutSet) -> GeneratorState {
    assert!(params.k > 2, "k-ary stepper needs k > 2");
    let mut state = GeneratorState::with_start(vec![0u8; params.n], params, cuts);
    let x = kary_main_cycle_symbol(&mut state);
    state.advance(x);
    state
}

/// `(01)^(m-1) 1`, the first word visited on the special cycle when `n = 2m - 1`.
#[inline]
fn is_odd_special(w: &[u8]) -> bool {
    let n = w.len();
    w[n - 1] == 1 && w[..n - 1].iter().enumerate().all(|(i, &c)| c as usize == i % 2)
}

/// Emits `a1` and advances the binary cut-down register by one step.
pub fn binary_cut_step(state: &mut GeneratorState) -> u8 {
    let CutParams { m, h, t, .. } = state.params;
    let w = state.weight;
    let a1 = state.alpha[0];
    let mut x = pcr3(&state.alpha);
    let new_weight = w + x as usize - a1 as usize;
    state.load_shift();

    if w == m && new_weight == m + 1 {
        x ^= 1;
    } else if w + 1 == m && new_weight == m {
        state.set_last(x);
        // PCR3 only raises the weight when the candidate is a necklace
        let p = period(&state.candidate);
        if p > h {
            x ^= 1;
        } else if p == h {
            if is_odd_special(&state.candidate) {
                state.flag = false;
            }
            if state.t_prime == t || (state.t_prime + 1 == t && state.flag) {
                x ^= 1;
            } else {
                state.t_prime += 1;
            }
        }
    }

    state.set_last(x);
    if state.cuts.contains(&state.candidate) {
        x ^= 1;
    }
    state.advance(x)
}

/// The next symbol of the k-ary main cycle, before small cycles are cut.
/// Leaves the candidate buffer holding `a2 .. an x`.
fn kary_main_cycle_symbol(state: &mut GeneratorState) -> u8 {
    let CutParams { m, h, t, k, .. } = state.params;
    let w = state.weight;
    let a1 = state.alpha[0] as usize;
    let mut x = g3prime(&state.alpha, k) as usize;
    state.load_shift();

    // cap the weight at m; staying inside a weight-m cycle needs no check
    if w + x - a1 >= m {
        x = m + a1 - w;
    }
    if w < m && w + x - a1 == m {
        state.set_last(x as u8);
        let p = period(&state.candidate);
        if p > h {
            x -= 1;
        } else if p == h {
            if state.t_prime == t {
                x -= 1;
            } else {
                state.t_prime += 1;
            }
        }
    }
    state.set_last(x as u8);
    x as u8
}

/// Emits `a1` and advances the k-ary cut-down register by one step.
pub fn kary_cut_step(state: &mut GeneratorState) -> u8 {
    let mut x = kary_main_cycle_symbol(state);
    if state.cuts.contains(&state.candidate) {
        x = 0;
    }
    state.advance(x)
}

/// Stateless binary cut-down successor.
///
/// The weight-`m`, period-`h` cycles kept are those of the `t` lexicographically
/// largest Lyndon words of length `h` and weight `mh/n`, identified by rank.
#[derive(Debug, Clone)]
pub struct ContextFreeSuccessor {
    params: CutParams,
    cuts: CutSet,
    table: CountTable,
    /// `L_2(h, mh/n)`.
    lyndon_total: Count,
}

impl ContextFreeSuccessor {
    pub fn new(params: CutParams, cuts: CutSet) -> Result<Self> {
        if params.k != 2 {
            return Err(Error::SuccessorNeedsBinary(params.k));
        }
        let table = CountTable::new(params.h, 2)?;
        let lyndon_total = if (params.m * params.h).is_multiple_of(params.n) {
            table.lyndon(params.h, params.m * params.h / params.n)
        } else {
            0
        };
        Ok(ContextFreeSuccessor { params, cuts, table, lyndon_total })
    }

    pub fn params(&self) -> &CutParams {
        &self.params
    }

    pub fn cuts(&self) -> &CutSet {
        &self.cuts
    }

    /// True when the period-`h` cycle through `w` is one of the `t` kept ones.
    fn keeps_cycle(&self, w: &[u8]) -> bool {
        let rank = rank_aperiodic(&w[..self.params.h], &self.table);
        self.lyndon_total - rank < self.params.t
    }

    /// Next symbol after `alpha`; a pure function of `alpha`.
    pub fn next_symbol(&self, alpha: &[u8]) -> u8 {
        let CutParams { m, h, .. } = self.params;
        let n = alpha.len();
        let w = crate::words::weight(alpha);
        let a1 = alpha[0];
        let mut x = pcr3(alpha);
        let new_weight = w + x as usize - a1 as usize;
        let mut candidate = Vec::with_capacity(n);
        candidate.extend_from_slice(&alpha[1..]);
        candidate.push(x);

        let leaves_main_cycle = new_weight > m
            || (new_weight == m && period(&candidate) > h)
            || (w + 1 == m && new_weight == m && period(&candidate) == h && !self.keeps_cycle(&candidate));
        if leaves_main_cycle {
            x ^= 1;
        }

        candidate[n - 1] = x;
        if self.cuts.contains(&candidate) {
            x ^= 1;
        }
        x
    }
}

/// One-shot form of [`ContextFreeSuccessor::next_symbol`].
pub fn context_free_successor(alpha: &[u8], params: &CutParams, cuts: &CutSet) -> Result<u8> {
    Ok(ContextFreeSuccessor::new(*params, cuts.clone())?.next_symbol(alpha))
}
