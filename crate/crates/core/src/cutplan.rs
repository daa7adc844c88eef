//! Cut-down parameters and the marker words used to excise small cycles.
//!
//! The main cycle joins every pure-cycling-register cycle of weight below `m`,
//! every weight-`m` cycle with period below `h`, and `t` weight-`m` cycles of
//! period `h`. Its length overshoots `L` by the surplus `s`, which is removed by
//! cutting out one or two cycles of the form `[0^(i-1) 1]`.

use serde::Serialize;

use crate::counting::{checked_power, Count, CountTable};
use crate::error::{Error, Result};
use crate::words::{check_alphabet, format_symbols};

/// The tuple `(n, k, L, m, h, t, s)` driving a cut-down construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CutParams {
    pub n: usize,
    pub k: usize,
    #[serde(rename = "L")]
    pub len: Count,
    /// Largest weight of a window on the main cycle.
    pub m: usize,
    /// Threshold period among weight-`m` cycles.
    pub h: usize,
    /// Number of weight-`m`, period-`h` cycles joined.
    pub t: Count,
    /// Main cycle length minus `len`.
    pub s: usize,
}

impl CutParams {
    /// Length of the main cycle before any cuts.
    pub fn main_cycle_len(&self) -> Count {
        self.len + self.s as Count
    }

    /// True for the binary case `n = 2m - 1`, where the cycle `[(01)^(m-1) 1]`
    /// must be joined.
    pub fn odd_special_case(&self) -> bool {
        self.k == 2 && self.n + 1 == 2 * self.m
    }
}

/// The valid length interval `(k^(n-1), k^n]`.
pub fn length_bounds(n: usize, k: usize) -> Result<(Count, Count)> {
    check_alphabet(k)?;
    if n < 1 {
        return Err(Error::InvalidOrder { n, min: 1 });
    }
    Ok((checked_power(k, n - 1)?, checked_power(k, n)?))
}

pub fn derive_params(n: usize, k: usize, len: Count) -> Result<CutParams> {
    if n < 2 {
        return Err(Error::InvalidOrder { n, min: 2 });
    }
    let (lo, hi) = length_bounds(n, k)?;
    if len <= lo || len > hi {
        return Err(Error::LengthOutOfRange { n, k, len, lo, hi });
    }
    let table = CountTable::new(n, k)?;
    derive_with_table(&table, n, len)
}

/// Same as [`derive_params`] with a caller-supplied table (which must cover
/// length `n`); the range check is the caller's responsibility.
pub(crate) fn derive_with_table(table: &CountTable, n: usize, len: Count) -> Result<CutParams> {
    let k = table.alphabet_size();
    let max_weight = (k - 1) * n;
    let m = (0..=max_weight).find(|&w| table.at_most(n, w as i64) >= len).expect("A((k-1)n) = k^n >= L");
    let below = table.at_most(n, m as i64 - 1);
    let h = (1..=n)
        .find(|&p| below + table.with_period_at_most(n, m, p) >= len)
        .expect("C(m, n) = T(n, m) covers L");
    let base = below + table.with_period_at_most(n, m, h - 1);
    let hh = h as Count;
    let t = (len - base).div_ceil(hh);
    let s = (base + hh * t - len) as usize;
    Ok(CutParams { n, k, len, m, h, t, s })
}

/// Largest admissible marker index `ceil(n/2)`.
pub fn max_marker(n: usize) -> usize {
    n.div_ceil(2)
}

/// The first word of the cycle `[0^(i-1) 1]` visited by the main cycle:
/// `0^n` for `i = 1`, `(0^(i-1) 1)^(n/i)` when `i | n`, otherwise
/// `0^y 1 (0^(i-1) 1)^x` with `x = n / i` and `y = (n mod i) - 1`.
pub fn gamma(i: usize, n: usize) -> Result<Vec<u8>> {
    if i == 0 || (i != 1 && i > max_marker(n)) {
        return Err(Error::MarkerIndex { i, n, max: max_marker(n) });
    }
    if i == 1 {
        return Ok(vec![0; n]);
    }
    let block = |out: &mut Vec<u8>| {
        out.extend(std::iter::repeat_n(0, i - 1));
        out.push(1);
    };
    let mut out = Vec::with_capacity(n);
    let r = n % i;
    if r != 0 {
        out.extend(std::iter::repeat_n(0, r - 1));
        out.push(1);
    }
    for _ in 0..n / i {
        block(&mut out);
    }
    debug_assert_eq!(out.len(), n);
    Ok(out)
}

/// A marker word together with the length of the cycle it cuts out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Marker {
    pub size: usize,
    pub word: Vec<u8>,
}

/// The set `R` of at most two markers.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CutSet {
    markers: Vec<Marker>,
}

impl CutSet {
    pub fn markers(&self) -> &[Marker] {
        &self.markers
    }

    pub fn is_empty(&self) -> bool {
        self.markers.is_empty()
    }

    /// Total length removed from the main cycle.
    pub fn total_size(&self) -> usize {
        self.markers.iter().map(|m| m.size).sum()
    }

    #[inline]
    pub fn contains(&self, w: &[u8]) -> bool {
        self.markers.iter().any(|m| m.word == w)
    }

    /// Marker words rendered as digit strings.
    pub fn marker_strings(&self) -> Vec<String> {
        self.markers.iter().map(|m| format_symbols(&m.word, 2)).collect()
    }
}

/// `{}` for `s = 0`, `{γ_s}` for `s <= ceil(n/2)`, otherwise
/// `{γ_j, γ_(s-j)}` with `j = ceil(n/2)`.
pub fn cut_set(s: usize, n: usize) -> Result<CutSet> {
    if s >= n {
        return Err(Error::Surplus { s, n });
    }
    let j = max_marker(n);
    let sizes: Vec<usize> = match s {
        0 => vec![],
        s if s <= j => vec![s],
        s => vec![j, s - j],
    };
    let markers = sizes
        .into_iter()
        .map(|size| Ok(Marker { size, word: gamma(size, n)? }))
        .collect::<Result<Vec<_>>>()?;
    Ok(CutSet { markers })
}
