//! Streaming generation and verification of cut-down sequences.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use serde::Serialize;

use crate::counting::Count;
use crate::cutplan::{cut_set, derive_params, CutParams};
use crate::error::{Error, Result};
use crate::successor::{
    binary_cut_step, binary_init, kary_cut_step, kary_init, ContextFreeSuccessor, GeneratorState,
};
use crate::words::{format_symbols, Word};

/// How the next symbol is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Stateful stepper with a counter of joined cycles (any `k`).
    #[default]
    Counter,
    /// Stateless successor rule; `k = 2` only.
    Successor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceSpec {
    pub n: usize,
    pub k: usize,
    pub len: Count,
    pub mode: Mode,
    /// Starting state for [`Mode::Successor`]; defaults to `0^(n-1) 1`.
    pub start: Option<Word>,
}

impl SequenceSpec {
    pub fn counter(n: usize, k: usize, len: Count) -> Self {
        SequenceSpec { n, k, len, mode: Mode::Counter, start: None }
    }

    pub fn successor(n: usize, len: Count) -> Self {
        SequenceSpec { n, k: 2, len, mode: Mode::Successor, start: None }
    }

    pub fn with_start(mut self, start: Word) -> Self {
        self.start = Some(start);
        self
    }
}

#[derive(Debug, Clone)]
enum Stepper {
    Binary(GeneratorState),
    Kary(GeneratorState),
    Successor { rule: ContextFreeSuccessor, alpha: Vec<u8> },
}

/// Iterator over the `L` symbols of a cut-down sequence. Holds `O(n)` state.
#[derive(Debug, Clone)]
pub struct Sequence {
    stepper: Stepper,
    params: CutParams,
    remaining: Count,
}

impl Sequence {
    pub fn params(&self) -> &CutParams {
        &self.params
    }

    /// Current register contents.
    pub fn state(&self) -> &[u8] {
        match &self.stepper {
            Stepper::Binary(st) | Stepper::Kary(st) => st.alpha(),
            Stepper::Successor { alpha, .. } => alpha,
        }
    }

    pub fn remaining(&self) -> Count {
        self.remaining
    }
}

impl Iterator for Sequence {
    type Item = u8;

    #[inline]
    fn next(&mut self) -> Option<u8> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        Some(match &mut self.stepper {
            Stepper::Binary(st) => binary_cut_step(st),
            Stepper::Kary(st) => kary_cut_step(st),
            Stepper::Successor { rule, alpha } => {
                let x = rule.next_symbol(alpha);
                let a1 = alpha[0];
                alpha.copy_within(1.., 0);
                let n = alpha.len();
                alpha[n - 1] = x;
                a1
            }
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, usize::try_from(self.remaining).ok())
    }
}

/// Builds the symbol stream for `spec`. Nothing is generated until iterated.
///
/// In successor mode a start word outside the target cycle is accepted but the
/// output is then unspecified.
pub fn generate(spec: &SequenceSpec) -> Result<Sequence> {
    let params = derive_params(spec.n, spec.k, spec.len)?;
    let cuts = cut_set(params.s, params.n)?;
    let stepper = match spec.mode {
        Mode::Counter if spec.k == 2 => Stepper::Binary(binary_init(params, cuts)),
        Mode::Counter => Stepper::Kary(kary_init(params, cuts)),
        Mode::Successor => {
            if spec.k != 2 {
                return Err(Error::SuccessorNeedsBinary(spec.k));
            }
            let alpha = match &spec.start {
                Some(start) => {
                    if start.len() != spec.n {
                        return Err(Error::StartLength { got: start.len(), expected: spec.n });
                    }
                    if start.alphabet_size() != 2 {
                        return Err(Error::SuccessorNeedsBinary(start.alphabet_size()));
                    }
                    start.symbols().to_vec()
                }
                None => {
                    let mut a = vec![0u8; spec.n];
                    a[spec.n - 1] = 1;
                    a
                }
            };
            Stepper::Successor { rule: ContextFreeSuccessor::new(params, cuts)?, alpha }
        }
    };
    Ok(Sequence { stepper, params, remaining: spec.len })
}

/// A repeated window and the 1-based start positions of its first two
/// occurrences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Duplicate {
    pub window: String,
    pub positions: [usize; 2],
}

/// Outcome of [`verify`]. Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub ok: bool,
    pub length: usize,
    pub expected_length: Option<Count>,
    pub first_duplicate: Option<Duplicate>,
    pub out_of_range_symbol: Option<usize>,
}

/// Checks that all `|seq|` cyclic windows of length `n` are distinct, that every
/// symbol is below `k`, and that `|seq| = expected_len` when given.
///
/// Windows are packed into `u128` keys when `n · ceil(log2 k) <= 128` and keyed
/// by their symbols otherwise; memory is `O(|seq|)` keys.
pub fn verify(seq: &[u8], n: usize, k: usize, expected_len: Option<Count>) -> VerifyReport {
    let mut report = VerifyReport {
        ok: false,
        length: seq.len(),
        expected_length: expected_len,
        first_duplicate: None,
        out_of_range_symbol: None,
    };
    if let Some(pos) = seq.iter().position(|&c| c as usize >= k) {
        report.out_of_range_symbol = Some(pos + 1);
        return report;
    }
    if seq.is_empty() || n == 0 {
        return report;
    }
    let bits = usize::BITS - (k - 1).leading_zeros();
    report.first_duplicate = if n * bits as usize <= 128 {
        first_duplicate_packed(seq, n, bits)
    } else {
        first_duplicate_by(seq, n, |i| (0..n).map(|j| seq[(i + j) % seq.len()]).collect::<Vec<u8>>())
    }
    .map(|(first, second)| Duplicate {
        window: format_symbols(&(0..n).map(|j| seq[(second + j) % seq.len()]).collect::<Vec<_>>(), k),
        positions: [first + 1, second + 1],
    });
    let len_ok = expected_len.is_none_or(|l| l == seq.len() as Count);
    report.ok = report.first_duplicate.is_none() && len_ok;
    report
}

fn first_duplicate_packed(seq: &[u8], n: usize, bits: u32) -> Option<(usize, usize)> {
    let len = seq.len();
    let mask: u128 = if n as u32 * bits >= 128 { u128::MAX } else { (1u128 << (n as u32 * bits)) - 1 };
    let mut key: u128 = 0;
    for j in 0..n {
        key = (key << bits) | seq[j % len] as u128;
    }
    let mut seen: HashMap<u128, usize> = HashMap::with_capacity(len);
    for i in 0..len {
        if i > 0 {
            key = ((key << bits) & mask) | seq[(i + n - 1) % len] as u128;
        }
        match seen.entry(key) {
            Entry::Occupied(e) => return Some((*e.get(), i)),
            Entry::Vacant(e) => {
                e.insert(i);
            }
        }
    }
    None
}

fn first_duplicate_by(seq: &[u8], _n: usize, window: impl Fn(usize) -> Vec<u8>) -> Option<(usize, usize)> {
    let mut seen: HashMap<Vec<u8>, usize> = HashMap::with_capacity(seq.len());
    for i in 0..seq.len() {
        match seen.entry(window(i)) {
            Entry::Occupied(e) => return Some((*e.get(), i)),
            Entry::Vacant(e) => {
                e.insert(i);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_symbols;

    #[test]
    fn verify_examples() {
        let s52 = parse_symbols("0000001111001110001101101001100001011101011001010001").unwrap();
        assert!(verify(&s52, 6, 2, Some(52)).ok);
        assert!(verify(&[0, 0, 1, 1], 2, 2, None).ok);
        let r = verify(&[0, 0, 1, 0, 0], 3, 2, None);
        assert!(!r.ok);
        assert_eq!(r.first_duplicate, Some(Duplicate { window: "000".into(), positions: [4, 5] }));
    }

    #[test]
    fn verify_reports_length_and_range() {
        let r = verify(&[0, 0, 1, 1], 2, 2, Some(5));
        assert!(!r.ok && r.first_duplicate.is_none());
        let r = verify(&[0, 2, 1], 2, 2, None);
        assert_eq!(r.out_of_range_symbol, Some(2));
        assert!(!r.ok);
    }

    #[test]
    fn packed_and_unpacked_paths_agree() {
        // n = 70 forces the unpacked path for k = 2
        let mut seq = vec![0u8; 200];
        for (i, c) in seq.iter_mut().enumerate() {
            *c = ((i * 7 + i / 3) % 2) as u8;
        }
        let unpacked = first_duplicate_by(&seq, 70, |i| (0..70).map(|j| seq[(i + j) % 200]).collect());
        assert_eq!(
            verify(&seq, 70, 2, None).first_duplicate.map(|d| d.positions),
            unpacked.map(|(a, b)| [a + 1, b + 1])
        );
        for n in 1..=12 {
            let packed = first_duplicate_packed(&seq, n, 1);
            let slow = first_duplicate_by(&seq, n, |i| (0..n).map(|j| seq[(i + j) % 200]).collect());
            assert_eq!(packed, slow);
        }
    }

    #[test]
    fn generate_streams_exact_length() {
        let seq = generate(&SequenceSpec::counter(6, 2, 46)).unwrap();
        assert_eq!(seq.size_hint(), (46, Some(46)));
        let out: Vec<u8> = seq.collect();
        assert_eq!(format_symbols(&out, 2), "0000011110011100011011010011000010110010100010");
    }

    #[test]
    fn generate_rejects_bad_specs() {
        assert!(matches!(generate(&SequenceSpec::counter(6, 2, 20)), Err(Error::LengthOutOfRange { .. })));
        let spec = SequenceSpec { mode: Mode::Successor, ..SequenceSpec::counter(3, 3, 20) };
        assert_eq!(generate(&spec).unwrap_err(), Error::SuccessorNeedsBinary(3));
        let spec = SequenceSpec::successor(6, 46).with_start(Word::parse("0001", 2).unwrap());
        assert_eq!(generate(&spec).unwrap_err(), Error::StartLength { got: 4, expected: 6 });
    }
}
