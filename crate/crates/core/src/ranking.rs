//! Lexicographic rank of fixed-weight Lyndon words.
//!
//! [`rank_lyndon`] counts, for a Lyndon word `σ`, the Lyndon words of the same
//! length and weight that are `<= σ`, without listing them:
//!
//! 1. For a word `v` of length `e`, the number of length-`e` words of a given
//!    weight with *every* rotation `> v` is the number of closed walks of
//!    length `e` in the KMP automaton of the patterns `{v[..i] c : c < v[i]} ∪ {v}`
//!    that never hit a pattern. Subtracting from `T_k(e, W)` gives the words
//!    having some rotation `<= v`.
//! 2. Applying this to every prefix `σ[..d]` with `d | n` counts words whose
//!    necklace, repeated to length `n`, is `<= σ`; Möbius inversion over the
//!    divisors of `n` isolates the aperiodic classes.
//!
//! The cost is `O(Σ_{d|n} d^3 · W · k)`, independent of the number of Lyndon
//! words. [`enumerate_lyndon`] filters all `k^n` words and is kept as the
//! oracle; [`rank_lyndon_by_enumeration`] ranks through it.

use std::fmt;

use crate::counting::{divisors, mobius, Count, CountTable};
use crate::error::{Error, Result};
use crate::words::{is_lyndon, is_necklace, least_rotation, period, weight, Word};

/// Default cap on the number of candidate words the enumeration oracle scans.
pub const DEFAULT_ORACLE_LIMIT: u128 = 10_000_000;

/// 1-based position in the lexicographic list of Lyndon words of a fixed
/// length and weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LyndonRank(pub Count);

impl LyndonRank {
    pub fn get(self) -> Count {
        self.0
    }
}

impl fmt::Display for LyndonRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Rank of the Lyndon rotation of `w` among Lyndon words of length `|w|` and
/// weight `weight(w)`.
pub fn rank_lyndon(w: &Word) -> Result<LyndonRank> {
    let p = w.period();
    if p != w.len() {
        return Err(Error::Periodic { period: p });
    }
    let table = CountTable::new(w.len(), w.alphabet_size())?;
    Ok(LyndonRank(rank_lyndon_symbols(&least_rotation(w.symbols()), &table)))
}

/// Rank of an aperiodic symbol slice with a caller-owned table covering `|w|`.
pub(crate) fn rank_aperiodic(w: &[u8], table: &CountTable) -> Count {
    debug_assert_eq!(period(w), w.len());
    rank_lyndon_symbols(&least_rotation(w), table)
}

fn rank_lyndon_symbols(sigma: &[u8], table: &CountTable) -> Count {
    debug_assert!(is_lyndon(sigma));
    let n = sigma.len();
    let w = weight(sigma);
    let k = table.alphabet_size();
    let mut total: i128 = 0;
    for d in divisors(n) {
        if !(w * d).is_multiple_of(n) {
            continue;
        }
        let wd = w * d / n;
        let prefix = &sigma[..d];
        let some_rotation_le = table.strings(d, wd) - all_rotations_greater(prefix, wd, k);
        // words whose necklace is exactly `prefix`: keep them only when
        // prefix^(n/d) <= sigma
        let exact = match is_necklace(prefix) {
            Some(p) if weight(prefix) == wd => p as Count,
            _ => 0,
        };
        let repeated_le = prefix.iter().cycle().take(n).le(sigma.iter());
        let g = if repeated_le { some_rotation_le } else { some_rotation_le - exact };
        total += mobius(n / d) as i128 * g as i128;
    }
    debug_assert!(total > 0 && total % n as i128 == 0);
    (total / n as i128) as Count
}

/// Number of words `x` of length `|v|` and weight `target` such that every
/// rotation of `x` is strictly greater than `v`.
fn all_rotations_greater(v: &[u8], target: usize, k: usize) -> Count {
    let automaton = Automaton::new(v, k);
    let e = v.len();
    let mut total: Count = 0;
    let mut cur = vec![vec![0 as Count; target + 1]; e];
    let mut next = cur.clone();
    for start in 0..e {
        if automaton.dead[start] {
            continue;
        }
        for row in cur.iter_mut() {
            row.fill(0);
        }
        cur[start][0] = 1;
        for _ in 0..e {
            for row in next.iter_mut() {
                row.fill(0);
            }
            for (state, row) in cur.iter().enumerate() {
                for (wt, &ways) in row.iter().enumerate() {
                    if ways == 0 {
                        continue;
                    }
                    for c in 0..k {
                        let nw = wt + c;
                        if nw > target {
                            break;
                        }
                        if let Some(to) = automaton.step(state, c as u8) {
                            next[to][nw] += ways;
                        }
                    }
                }
            }
            std::mem::swap(&mut cur, &mut next);
        }
        total += cur[start][target];
    }
    total
}

/// KMP automaton for the "rotation <= v" patterns. States are matched prefix
/// lengths `0..|v|`; a `None` transition means a pattern was completed.
struct Automaton {
    delta: Vec<Vec<Option<usize>>>,
    dead: Vec<bool>,
}

impl Automaton {
    fn new(v: &[u8], k: usize) -> Self {
        let e = v.len();
        let mut border = vec![0usize; e];
        for i in 1..e {
            let mut j = border[i - 1];
            while j > 0 && v[i] != v[j] {
                j = border[j - 1];
            }
            if v[i] == v[j] {
                j += 1;
            }
            border[i] = j;
        }
        // fail[j]: longest proper border of v[..j], for j >= 1
        let fail = |j: usize| border[j - 1];
        // largest v[i] over the border chain of state j
        let mut chain_max = vec![0u8; e];
        for j in 0..e {
            chain_max[j] = if j == 0 { v[0] } else { v[j].max(chain_max[fail(j)]) };
        }
        let mut advance = vec![vec![0usize; k]; e];
        for j in 0..e {
            for c in 0..k as u8 {
                advance[j][c as usize] = if v[j] == c {
                    j + 1
                } else if j == 0 {
                    0
                } else {
                    advance[fail(j)][c as usize]
                };
            }
        }
        let delta: Vec<Vec<Option<usize>>> = (0..e)
            .map(|j| {
                (0..k as u8)
                    .map(|c| {
                        let completes_v = j + 1 == e && c == v[j];
                        if c < chain_max[j] || completes_v {
                            None
                        } else {
                            Some(advance[j][c as usize])
                        }
                    })
                    .collect()
            })
            .collect();
        let mut dead = vec![false; e];
        for j in 1..e {
            dead[j] = dead[j - 1] || delta[j - 1][v[j - 1] as usize].is_none();
        }
        Automaton { delta, dead }
    }

    #[inline]
    fn step(&self, state: usize, c: u8) -> Option<usize> {
        self.delta[state][c as usize]
    }
}

/// All Lyndon words of length `n` and weight `w` in increasing order, by
/// filtering every word in `{0..k-1}^n`.
pub fn enumerate_lyndon(n: usize, w: usize, k: usize) -> Result<Vec<Word>> {
    enumerate_lyndon_with_limit(n, w, k, DEFAULT_ORACLE_LIMIT)
}

pub fn enumerate_lyndon_with_limit(n: usize, w: usize, k: usize, limit: u128) -> Result<Vec<Word>> {
    crate::words::check_alphabet(k)?;
    if n == 0 {
        return Err(Error::InvalidOrder { n, min: 1 });
    }
    let candidates = u32::try_from(n).ok().and_then(|e| (k as u128).checked_pow(e)).unwrap_or(u128::MAX);
    if candidates > limit {
        return Err(Error::OracleLimit { candidates, limit });
    }
    let mut out = Vec::new();
    let mut word = vec![0u8; n];
    for _ in 0..candidates {
        if weight(&word) == w && is_lyndon(&word) {
            out.push(Word::new(word.clone(), k)?);
        }
        // odometer increment, last symbol fastest: lexicographic order
        for c in word.iter_mut().rev() {
            if (*c as usize) + 1 < k {
                *c += 1;
                break;
            }
            *c = 0;
        }
    }
    Ok(out)
}

/// Rank through [`enumerate_lyndon`]; the reference path for [`rank_lyndon`].
pub fn rank_lyndon_by_enumeration(w: &Word) -> Result<LyndonRank> {
    let p = w.period();
    if p != w.len() {
        return Err(Error::Periodic { period: p });
    }
    let sigma = w.least_rotation();
    let list = enumerate_lyndon(w.len(), w.weight(), w.alphabet_size())?;
    let index = list.iter().position(|x| *x == sigma).expect("σ is a Lyndon word");
    Ok(LyndonRank(index as Count + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str, k: usize) -> Word {
        Word::parse(s, k).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_lyndon(&word("000011", 2)).unwrap(), LyndonRank(1));
        assert_eq!(rank_lyndon(&word("000101", 2)).unwrap(), LyndonRank(2));
        assert_eq!(rank_lyndon(&word("100101", 2)).unwrap(), LyndonRank(2));
        assert_eq!(rank_lyndon(&word("1", 2)).unwrap(), LyndonRank(1));
    }

    #[test]
    fn rank_rejects_periodic() {
        assert_eq!(rank_lyndon(&word("010101", 2)), Err(Error::Periodic { period: 2 }));
        assert_eq!(rank_lyndon(&word("00", 2)), Err(Error::Periodic { period: 1 }));
    }

    #[test]
    fn enumerate_examples() {
        let show = |v: Vec<Word>| v.iter().map(|w| w.to_string()).collect::<Vec<_>>();
        assert_eq!(show(enumerate_lyndon(6, 2, 2).unwrap()), ["000011", "000101"]);
        assert_eq!(show(enumerate_lyndon(6, 3, 2).unwrap()), ["000111", "001011", "001101"]);
        assert_eq!(show(enumerate_lyndon(1, 0, 2).unwrap()), ["0"]);
    }

    #[test]
    fn enumerate_refuses_above_limit() {
        assert!(matches!(
            enumerate_lyndon_with_limit(10, 3, 2, 1000),
            Err(Error::OracleLimit { candidates: 1024, limit: 1000 })
        ));
    }

    #[test]
    fn dp_matches_enumeration_kary() {
        for (k, max_n) in [(3usize, 7usize), (4, 5), (5, 4)] {
            for n in 1..=max_n {
                for w in 0..=(k - 1) * n {
                    let list = enumerate_lyndon(n, w, k).unwrap();
                    for (i, lw) in list.iter().enumerate() {
                        for j in 0..n {
                            let r = rank_lyndon(&lw.rotate(j)).unwrap();
                            assert_eq!(r.get(), i as Count + 1, "{lw} k={k}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn automaton_counts_match_brute_force() {
        // every rotation strictly greater than v, over all binary v of length <= 8
        for e in 1..=8usize {
            for bits in 0..(1u32 << e) {
                let v: Vec<u8> = (0..e).rev().map(|i| ((bits >> i) & 1) as u8).collect();
                for target in 0..=e {
                    let mut brute = 0;
                    for xb in 0..(1u32 << e) {
                        let x: Vec<u8> = (0..e).rev().map(|i| ((xb >> i) & 1) as u8).collect();
                        if weight(&x) == target
                            && (0..e).all(|j| crate::words::rotate(&x, j).as_slice() > v.as_slice())
                        {
                            brute += 1;
                        }
                    }
                    assert_eq!(all_rotations_greater(&v, target, 2), brute, "v={v:?} W={target}");
                }
            }
        }
    }
}
