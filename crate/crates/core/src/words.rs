//! Fixed-length words over the alphabet `{0, .., k-1}`.
//!
//! The slice functions here are the hot path of every successor rule, so they
//! operate on `&[u8]` directly; [`Word`] adds validation and formatting on top.

use std::fmt;

use crate::error::{Error, Result};

/// A nonempty word over `{0, .., k-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<u8>,
    k: usize,
}

impl Word {
    pub fn new(symbols: Vec<u8>, k: usize) -> Result<Self> {
        check_alphabet(k)?;
        if symbols.is_empty() {
            return Err(Error::EmptyWord);
        }
        if let Some(position) = symbols.iter().position(|&c| c as usize >= k) {
            return Err(Error::SymbolOutOfRange { symbol: symbols[position] as u32, position, k });
        }
        Ok(Word { symbols, k })
    }

    /// Parses either concatenated digits (`"001011"`) or comma separated
    /// decimals (`"0,0,11,3"`). Whitespace is ignored.
    pub fn parse(text: &str, k: usize) -> Result<Self> {
        Word::new(parse_symbols(text)?, k)
    }

    pub fn constant(symbol: u8, n: usize, k: usize) -> Result<Self> {
        Word::new(vec![symbol; n], k)
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<u8> {
        self.symbols
    }

    pub fn alphabet_size(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_necklace(&self) -> Option<usize> {
        is_necklace(&self.symbols)
    }

    pub fn period(&self) -> usize {
        period(&self.symbols)
    }

    pub fn weight(&self) -> usize {
        weight(&self.symbols)
    }

    pub fn least_rotation(&self) -> Word {
        Word { symbols: least_rotation(&self.symbols), k: self.k }
    }

    pub fn rotate(&self, j: usize) -> Word {
        Word { symbols: rotate(&self.symbols, j), k: self.k }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_symbols(&self.symbols, self.k))
    }
}

impl AsRef<[u8]> for Word {
    fn as_ref(&self) -> &[u8] {
        &self.symbols
    }
}

pub(crate) fn check_alphabet(k: usize) -> Result<()> {
    if (2..=256).contains(&k) {
        Ok(())
    } else {
        Err(Error::InvalidAlphabet(k))
    }
}

/// Digits when every symbol fits in one decimal digit, comma separated otherwise.
pub fn format_symbols(symbols: &[u8], k: usize) -> String {
    if k <= 10 {
        symbols.iter().map(|&c| char::from(b'0' + c)).collect()
    } else {
        symbols.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Parses a symbol sequence without checking it against an alphabet.
pub fn parse_symbols(text: &str) -> Result<Vec<u8>> {
    let text = text.trim();
    let bad = || Error::Parse(text.to_string());
    if text.contains(',') {
        text.split(',').map(|field| field.trim().parse::<u8>().map_err(|_| bad())).collect()
    } else {
        text.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad))
            .collect()
    }
}

/// Single left-to-right scan shared by the necklace tests.
///
/// Reads symbol `i` of a length-`len` word through `at`. Returns the period if
/// the word is a necklace.
#[inline]
pub(crate) fn necklace_scan(len: usize, at: impl Fn(usize) -> u8) -> Option<usize> {
    let mut p = 1;
    for i in 1..len {
        let (prev, cur) = (at(i - p), at(i));
        if prev > cur {
            return None;
        }
        if prev < cur {
            p = i + 1;
        }
    }
    len.is_multiple_of(p).then_some(p)
}

/// Returns the period of `w` if `w` is a necklace (no rotation is smaller).
pub fn is_necklace(w: &[u8]) -> Option<usize> {
    necklace_scan(w.len(), |i| w[i])
}

/// True when `w` is a necklace with period `|w|`.
pub fn is_lyndon(w: &[u8]) -> bool {
    is_necklace(w) == Some(w.len())
}

/// Smallest divisor `p` of `|w|` with `w = (w[..p])^(|w|/p)`.
pub fn period(w: &[u8]) -> usize {
    let n = w.len();
    if n == 0 {
        return 0;
    }
    // prefix function; the shortest border-free prefix gives the candidate period
    let mut pi = vec![0usize; n];
    for i in 1..n {
        let mut j = pi[i - 1];
        while j > 0 && w[i] != w[j] {
            j = pi[j - 1];
        }
        if w[i] == w[j] {
            j += 1;
        }
        pi[i] = j;
    }
    let p = n - pi[n - 1];
    if n.is_multiple_of(p) {
        p
    } else {
        n
    }
}

/// Offset of the lexicographically least rotation (the first one on ties).
pub fn least_rotation_offset(w: &[u8]) -> usize {
    let n = w.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = w[(i + k) % n];
        let b = w[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

pub fn least_rotation(w: &[u8]) -> Vec<u8> {
    if w.is_empty() {
        return Vec::new();
    }
    rotate(w, least_rotation_offset(w))
}

/// Left rotation by `j` positions: `w[j..] ++ w[..j]`.
pub fn rotate(w: &[u8], j: usize) -> Vec<u8> {
    if w.is_empty() {
        return Vec::new();
    }
    let j = j % w.len();
    let mut out = Vec::with_capacity(w.len());
    out.extend_from_slice(&w[j..]);
    out.extend_from_slice(&w[..j]);
    out
}

pub fn weight(w: &[u8]) -> usize {
    w.iter().map(|&c| c as usize).sum()
}
