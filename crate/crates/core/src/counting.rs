//! Exact enumeration of k-ary strings and Lyndon words by length, weight and
//! period.
//!
//! All counts are exact `u128` values. A [`CountTable`] refuses to build when
//! `k^n` exceeds `2^126`, which keeps every intermediate sum (including the
//! signed Möbius sums) in range.

use crate::error::{Error, Result};
use crate::words::check_alphabet;

/// Exact nonnegative count.
pub type Count = u128;

const COUNT_BITS_CAP: u32 = 126;

/// `k^n` if it fits under the 126-bit cap.
pub fn checked_power(k: usize, n: usize) -> Result<Count> {
    let overflow = || Error::Overflow { n, k };
    let exp = u32::try_from(n).map_err(|_| overflow())?;
    let value = (k as u128).checked_pow(exp).ok_or_else(overflow)?;
    if value > 1u128 << COUNT_BITS_CAP {
        return Err(overflow());
    }
    Ok(value)
}

/// Table of `T_k(n', w')`: the number of k-ary strings of length `n'` with
/// symbol sum `w'`, for every `n' <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    k: usize,
    n_max: usize,
    rows: Vec<Vec<Count>>,
}

impl CountTable {
    pub fn new(n_max: usize, k: usize) -> Result<Self> {
        check_alphabet(k)?;
        checked_power(k, n_max)?;
        let mut rows: Vec<Vec<Count>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![1]);
        for len in 1..=n_max {
            let prev = &rows[len - 1];
            let width = (k - 1) * len + 1;
            let mut row = vec![0; width];
            // T(len, w) = sum_{c=0}^{min(k-1, w)} T(len-1, w-c), as a sliding window
            let mut window: Count = 0;
            for (w, slot) in row.iter_mut().enumerate() {
                if w < prev.len() {
                    window += prev[w];
                }
                if w >= k && w - k < prev.len() {
                    window -= prev[w - k];
                }
                *slot = window;
            }
            rows.push(row);
        }
        Ok(CountTable { k, n_max, rows })
    }

    pub fn alphabet_size(&self) -> usize {
        self.k
    }

    pub fn max_len(&self) -> usize {
        self.n_max
    }

    /// `T_k(n, w)`; zero for weights outside `0..=(k-1)n`.
    pub fn strings(&self, n: usize, w: usize) -> Count {
        self.row(n).get(w).copied().unwrap_or(0)
    }

    /// `L_k(n, w)`, the number of Lyndon words of length `n` and weight `w`.
    pub fn lyndon(&self, n: usize, w: usize) -> Count {
        assert!(n >= 1, "Lyndon words have positive length");
        let g = gcd(n, w);
        let mut total: i128 = 0;
        for i in divisors(g) {
            let term = self.strings(n / i, w / i) as i128;
            total += mobius(i) as i128 * term;
        }
        debug_assert!(total >= 0 && total % n as i128 == 0);
        (total / n as i128) as Count
    }

    /// `A(w)`: strings of length `n` with weight at most `w`. `A(w) = 0` for `w < 0`.
    pub fn at_most(&self, n: usize, w: i64) -> Count {
        if w < 0 {
            return 0;
        }
        let row = self.row(n);
        let upto = (w as usize).min(row.len() - 1);
        row[..=upto].iter().sum()
    }

    /// `B(w, p)`: strings of length `n`, weight `w` and period exactly `p`.
    pub fn with_period(&self, n: usize, w: usize, p: usize) -> Count {
        if p == 0 || !n.is_multiple_of(p) || !(w * p).is_multiple_of(n) {
            return 0;
        }
        p as Count * self.lyndon(p, w * p / n)
    }

    /// `C(w, p)`: strings of length `n`, weight `w` and period at most `p`.
    pub fn with_period_at_most(&self, n: usize, w: usize, p: usize) -> Count {
        (1..=p.min(n)).map(|q| self.with_period(n, w, q)).sum()
    }

    fn row(&self, n: usize) -> &[Count] {
        assert!(n <= self.n_max, "length {n} exceeds table size {}", self.n_max);
        &self.rows[n]
    }
}

/// `T_k(n, w)` from a freshly built table.
pub fn count_strings(n: usize, w: usize, k: usize) -> Result<Count> {
    Ok(CountTable::new(n, k)?.strings(n, w))
}

pub fn count_lyndon(n: usize, w: usize, k: usize) -> Result<Count> {
    if n == 0 {
        return Err(Error::InvalidOrder { n, min: 1 });
    }
    Ok(CountTable::new(n, k)?.lyndon(n, w))
}

pub fn count_a(w: i64, n: usize, k: usize) -> Result<Count> {
    Ok(CountTable::new(n, k)?.at_most(n, w))
}

pub fn count_b(w: usize, p: usize, n: usize, k: usize) -> Result<Count> {
    Ok(CountTable::new(n, k)?.with_period(n, w, p))
}

pub fn count_c(w: usize, p: usize, n: usize, k: usize) -> Result<Count> {
    Ok(CountTable::new(n, k)?.with_period_at_most(n, w, p))
}

/// Möbius function by trial division.
pub fn mobius(i: usize) -> i8 {
    assert!(i >= 1, "mobius is defined for positive integers");
    let mut rest = i;
    let mut sign = 1i8;
    let mut d = 2;
    while d * d <= rest {
        if rest.is_multiple_of(d) {
            rest /= d;
            if rest.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if rest > 1 {
        sign = -sign;
    }
    sign
}

/// `gcd(n, 0) = n`, so weight-zero Lyndon counts are well defined.
pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn divisors(n: usize) -> impl Iterator<Item = usize> {
    (1..=n).filter(move |d| n.is_multiple_of(*d))
}
