//! The `cutdown` command line.
//!
//! Exit status: 0 on success, 1 when `verify` rejects its input, 2 for
//! argument and range errors.

use std::ffi::OsString;
use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::counting::{Count, CountTable};
use crate::cutplan::{cut_set, derive_params, CutParams};
use crate::engine::{generate, verify, Mode, SequenceSpec, VerifyReport};
use crate::error::Error;
use crate::ranking::rank_lyndon;
use crate::words::{parse_symbols, Word};

#[derive(Debug, Clone, Parser)]
#[command(
    name = "cutdown",
    version,
    about = "Generate and verify cut-down de Bruijn sequences",
    after_help = "Sequences are printed linearly; every window of length n, including the ones \
                  that wrap around the end, is distinct. `verify` reads its input cyclically."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Print a cut-down de Bruijn sequence of length L
    Generate(GenerateArgs),
    /// Check that a sequence has no repeated cyclic window
    Verify(VerifyArgs),
    /// Print the construction parameters m, h, t, s and the marker words
    Params(ParamsArgs),
    /// Print the 1-based rank of a word's Lyndon rotation among Lyndon words of the same length and weight
    Rank(RankArgs),
    /// Count strings (or Lyndon words) of a given length and weight
    Count(CountArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Concatenated decimal digits (k <= 10)
    Digits,
    /// Comma separated decimals
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Counter,
    Successor,
}

#[derive(Debug, Clone, Args)]
pub struct GenerateArgs {
    /// Window length
    #[arg(long)]
    pub n: usize,
    /// Alphabet size
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Sequence length, k^(n-1) < L <= k^n
    #[arg(long = "len")]
    pub len: Count,
    #[arg(long, value_enum, default_value = "counter")]
    pub mode: ModeArg,
    /// Starting window for successor mode (default 0^(n-1)1)
    #[arg(long)]
    pub start: Option<String>,
    /// Output format; digits by default when k <= 10, csv otherwise
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Expected length
    #[arg(long = "len")]
    pub len: Option<Count>,
    /// Input file; standard input when absent or "-"
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Input format; detected from the presence of commas when absent
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Print the report as JSON
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct ParamsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long = "len")]
    pub len: Count,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct RankArgs {
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Aperiodic word, as digits or comma separated decimals
    pub word: String,
}

#[derive(Debug, Clone, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, visible_alias = "w")]
    pub weight: usize,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Count Lyndon words instead of all strings
    #[arg(long)]
    pub lyndon: bool,
}

/// JSON shape of `params --json`; field order is stable.
#[derive(Debug, Serialize)]
pub struct ParamsReport {
    pub n: usize,
    pub k: usize,
    #[serde(rename = "L")]
    pub len: Count,
    pub m: usize,
    pub h: usize,
    pub t: Count,
    pub s: usize,
    pub markers: Vec<String>,
}

impl ParamsReport {
    pub fn new(params: &CutParams) -> Result<Self, Error> {
        let cuts = cut_set(params.s, params.n)?;
        Ok(ParamsReport {
            n: params.n,
            k: params.k,
            len: params.len,
            m: params.m,
            h: params.h,
            t: params.t,
            s: params.s,
            markers: cuts.marker_strings(),
        })
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` and runs the command; returns the process exit status.
pub fn main_with<I, T>(args: I, input: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, input, out, err),
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            e.exit_code()
        }
    }
}

pub fn run(cli: &Cli, input: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Generate(a) => run_generate(a, out),
        Command::Verify(a) => run_verify(a, input, out),
        Command::Params(a) => run_params(a, out),
        Command::Rank(a) => run_rank(a, out),
        Command::Count(a) => run_count(a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn output_format(requested: Option<Format>, k: usize) -> Result<Format, Failure> {
    match requested {
        Some(Format::Digits) if k > 10 => {
            Err(Failure::Usage(format!("digits format needs k <= 10 (got k = {k}); use --format csv")))
        }
        Some(f) => Ok(f),
        None if k <= 10 => Ok(Format::Digits),
        None => Ok(Format::Csv),
    }
}

fn run_generate(a: &GenerateArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let format = output_format(a.format, a.k)?;
    let mode = match a.mode {
        ModeArg::Counter => Mode::Counter,
        ModeArg::Successor => Mode::Successor,
    };
    if a.start.is_some() && mode != Mode::Successor {
        return Err(Failure::Usage("--start is only used with --mode successor".into()));
    }
    let start = a.start.as_deref().map(|s| Word::parse(s, a.k)).transpose()?;
    let spec = SequenceSpec { n: a.n, k: a.k, len: a.len, mode, start };
    let seq = generate(&spec)?;
    let mut w = BufWriter::with_capacity(1 << 16, out);
    match format {
        Format::Digits => {
            for c in seq {
                w.write_all(&[b'0' + c])?;
            }
        }
        Format::Csv => {
            for (i, c) in seq.enumerate() {
                if i > 0 {
                    w.write_all(b",")?;
                }
                write!(w, "{c}")?;
            }
        }
    }
    w.write_all(b"\n")?;
    w.flush()?;
    Ok(0)
}

fn read_sequence(a: &VerifyArgs, input: &mut dyn Read) -> Result<Vec<u8>, Failure> {
    let text = match &a.input {
        Some(path) if path.as_os_str() != "-" => fs::read_to_string(path)?,
        _ => {
            let mut s = String::new();
            input.read_to_string(&mut s)?;
            s
        }
    };
    let symbols = match a.format {
        Some(Format::Digits) if text.contains(',') => {
            return Err(Failure::Usage("digits input contains commas; use --format csv".into()))
        }
        Some(Format::Csv) if !text.contains(',') => {
            // a single csv field
            vec![text.trim().parse::<u8>().map_err(|_| Error::Parse(text.trim().to_string()))?]
        }
        _ => parse_symbols(&text)?,
    };
    if symbols.is_empty() {
        return Err(Failure::Usage("input sequence is empty".into()));
    }
    Ok(symbols)
}

fn describe(report: &VerifyReport, n: usize) -> String {
    if report.ok {
        return format!("ok: {} cyclic windows of length {n} are distinct", report.length);
    }
    if let Some(pos) = report.out_of_range_symbol {
        return format!("invalid: symbol at position {pos} is outside the alphabet");
    }
    if let Some(d) = &report.first_duplicate {
        return format!(
            "invalid: window {} occurs at positions {} and {}",
            d.window, d.positions[0], d.positions[1]
        );
    }
    match report.expected_length {
        Some(l) => format!("invalid: length {} differs from the expected {l}", report.length),
        None => "invalid".to_string(),
    }
}

fn run_verify(a: &VerifyArgs, input: &mut dyn Read, out: &mut dyn Write) -> Result<i32, Failure> {
    crate::words::check_alphabet(a.k)?;
    if a.n == 0 {
        return Err(Error::InvalidOrder { n: 0, min: 1 }.into());
    }
    let seq = read_sequence(a, input)?;
    let report = verify(&seq, a.n, a.k, a.len);
    if a.json {
        let text = serde_json::to_string(&report).expect("report serializes");
        writeln!(out, "{text}")?;
    } else {
        writeln!(out, "{}", describe(&report, a.n))?;
    }
    Ok(if report.ok { 0 } else { 1 })
}

fn run_params(a: &ParamsArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let params = derive_params(a.n, a.k, a.len)?;
    let report = ParamsReport::new(&params)?;
    if a.json {
        writeln!(out, "{}", serde_json::to_string(&report).expect("report serializes"))?;
    } else {
        let markers = if report.markers.is_empty() { "-".to_string() } else { report.markers.join(" ") };
        let rows: [(&str, String); 8] = [
            ("n", report.n.to_string()),
            ("k", report.k.to_string()),
            ("L", report.len.to_string()),
            ("m", report.m.to_string()),
            ("h", report.h.to_string()),
            ("t", report.t.to_string()),
            ("s", report.s.to_string()),
            ("markers", markers),
        ];
        for (key, value) in rows {
            writeln!(out, "{key:<8} {value}")?;
        }
    }
    Ok(0)
}

fn run_rank(a: &RankArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let word = Word::parse(&a.word, a.k)?;
    writeln!(out, "{}", rank_lyndon(&word)?)?;
    Ok(0)
}

fn run_count(a: &CountArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    if a.n == 0 {
        return Err(Error::InvalidOrder { n: 0, min: 1 }.into());
    }
    let table = CountTable::new(a.n, a.k)?;
    let value = if a.lyndon { table.lyndon(a.n, a.weight) } else { table.strings(a.n, a.weight) };
    writeln!(out, "{value}")?;
    Ok(0)
}
