//! Cut-down de Bruijn sequences.
//!
//! A cut-down de Bruijn sequence is a cyclic k-ary sequence of length `L`,
//! `k^(n-1) < L <= k^n`, in which every length-`n` window occurs at most once.
//! This crate builds them by joining the cycles of the pure cycling register
//! with the PCR3 (binary) and g'3 (k-ary) de Bruijn successors, restricted to a
//! weight/period-bounded main cycle, and then cutting out one or two small
//! cycles `[0^(i-1) 1]` to remove the surplus.
//!
//! ```
//! use cutdown::{generate, verify, SequenceSpec};
//!
//! let seq: Vec<u8> = generate(&SequenceSpec::counter(6, 2, 46)).unwrap().collect();
//! assert!(verify(&seq, 6, 2, Some(46)).ok);
//! ```
//!
//! Modules, bottom-up:
//! - [`words`]: necklace test, period, least rotation, weight.
//! - [`counting`]: exact string and Lyndon word counts by length, weight, period.
//! - [`cutplan`]: the parameters `(m, h, t, s)` and the marker words.
//! - [`ranking`]: rank of fixed-weight Lyndon words.
//! - [`successor`]: feedback functions and the cut-down steppers.
//! - [`engine`]: streaming generation and verification.
//! - [`cli`]: the `cutdown` command line.

pub mod cli;
pub mod counting;
pub mod cutplan;
pub mod engine;
pub mod error;
pub mod ranking;
pub mod successor;
pub mod words;

pub use counting::{Count, CountTable};
pub use cutplan::{cut_set, derive_params, gamma, CutParams, CutSet};
pub use engine::{generate, verify, Mode, Sequence, SequenceSpec, VerifyReport};
pub use error::{Error, Result};
pub use ranking::{enumerate_lyndon, rank_lyndon, LyndonRank};
pub use successor::{g3prime, mc_step, pcr3, ContextFreeSuccessor, GeneratorState};
pub use words::Word;
