//! Acceptance suite. Criteria run sequentially in a single test so that the
//! timing checks do not compete with each other; each prints one line.
//!
//! Run with `cargo test -p cutdown --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use cutdown::counting::{checked_power, count_a, count_b, count_c, CountTable};
use cutdown::cutplan::{cut_set, derive_params, gamma};
use cutdown::successor::ContextFreeSuccessor;
use cutdown::words::{format_symbols, least_rotation, parse_symbols, period, weight};
use cutdown::{enumerate_lyndon, g3prime, generate, mc_step, pcr3, rank_lyndon, verify, SequenceSpec, Word};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($fmt)+));
        }
    };
}

const EXAMPLE_46: &str = "0000011110011100011011010011000010110010100010";
const MC_51: &str = "000000111100111000110110100110000101100101010001001";
const DB_6: &str = "0000001111110111100111000110110100110000101110101100101010001001";
const DB_4_3: &str = "0003303203103002302202102001301201133132131123122333232221211101";

fn fastest<T>(runs: usize, mut f: impl FnMut() -> T) -> (T, Duration) {
    let mut best = Duration::MAX;
    let mut out = None;
    for _ in 0..runs {
        let t0 = Instant::now();
        let v = f();
        best = best.min(t0.elapsed());
        out = Some(v);
    }
    (out.expect("runs > 0"), best)
}

fn iterate(start: &[u8], steps: usize, mut f: impl FnMut(&[u8]) -> u8) -> Vec<u8> {
    let mut alpha = start.to_vec();
    let mut out = Vec::with_capacity(steps);
    for _ in 0..steps {
        out.push(alpha[0]);
        let x = f(&alpha);
        alpha.remove(0);
        alpha.push(x);
    }
    out
}

fn is_rotation(a: &[u8], b: &[u8]) -> bool {
    a.len() == b.len() && (a.is_empty() || (0..a.len()).any(|i| a[i..].iter().chain(&a[..i]).eq(b)))
}

fn one_ms() -> Duration {
    Duration::from_millis(1)
}

fn reference_reproduction() -> Outcome {
    let p = derive_params(6, 2, 46).map_err(|e| e.to_string())?;
    ensure!((p.m, p.h, p.t, p.s) == (4, 6, 1, 5), "params {p:?}");
    let (seq, dt) = fastest(20, || generate(&SequenceSpec::counter(6, 2, 46)).unwrap().collect::<Vec<u8>>());
    ensure!(format_symbols(&seq, 2) == EXAMPLE_46, "got {}", format_symbols(&seq, 2));
    ensure!(dt < one_ms(), "took {dt:?}");
    Ok(format!("string and (m,h,t,s) = (4,6,1,5) match; {dt:?}"))
}

fn reference_main_cycle() -> Outcome {
    let member = |w: &[u8]| {
        let wt = weight(w);
        wt < 4 || (wt == 4 && period(w) < 6) || least_rotation(w) == [0, 0, 1, 1, 1, 1]
    };
    let (mc, dt) = fastest(20, || iterate(&[0; 6], 51, |a| mc_step(a, 2, member).unwrap()));
    ensure!(format_symbols(&mc, 2) == MC_51, "got {}", format_symbols(&mc, 2));
    ensure!(dt < one_ms(), "took {dt:?}");
    Ok(format!("51-symbol main cycle matches; {dt:?}"))
}

fn de_bruijn_reproduction() -> Outcome {
    let (bin, dt2) = fastest(20, || iterate(&[0; 6], 64, pcr3));
    ensure!(format_symbols(&bin, 2) == DB_6, "pcr3 gave {}", format_symbols(&bin, 2));
    let (kary, dt4) = fastest(20, || iterate(&[0; 3], 64, |a| g3prime(a, 4)));
    ensure!(format_symbols(&kary, 4) == DB_4_3, "g3prime gave {}", format_symbols(&kary, 4));
    ensure!(dt2 < one_ms() && dt4 < one_ms(), "took {dt2:?} / {dt4:?}");
    Ok(format!("pcr3 {dt2:?}, g3prime {dt4:?}"))
}

fn sweep(k: usize, ns: std::ops::RangeInclusive<usize>) -> Outcome {
    let mut runs = 0u64;
    let mut symbols = 0u128;
    for n in ns {
        let lo = checked_power(k, n - 1).unwrap();
        let hi = lo * k as u128;
        for len in lo + 1..=hi {
            let seq: Vec<u8> =
                generate(&SequenceSpec::counter(n, k, len)).map_err(|e| e.to_string())?.collect();
            let report = verify(&seq, n, k, Some(len));
            ensure!(report.ok, "n={n} k={k} L={len}: {report:?}");
            runs += 1;
            symbols += len;
        }
    }
    Ok(format!("{runs} lengths, {symbols} symbols verified"))
}

fn exhaustive_binary_sweep() -> Outcome {
    let t0 = Instant::now();
    let detail = sweep(2, 2..=11)?;
    Ok(format!("{detail}; {:?}", t0.elapsed()))
}

fn exhaustive_kary_sweep() -> Outcome {
    let t0 = Instant::now();
    let mut parts = Vec::new();
    for (k, n_max) in [(3, 5), (4, 4), (5, 3), (6, 3)] {
        parts.push(format!("k={k}: {}", sweep(k, 2..=n_max)?));
    }
    Ok(format!("{}; {:?}", parts.join(", "), t0.elapsed()))
}

fn successor_rule_properties() -> Outcome {
    let mut checked = 0;
    for n in 4..=8usize {
        let lo = 1u128 << (n - 1);
        let hi = 1u128 << n;
        let span = hi - lo;
        let mut lens = vec![lo + 1, lo + span / 4, lo + span / 2, lo + 3 * span / 4, hi - 1, hi];
        lens.dedup();
        for len in lens {
            let seq: Vec<u8> =
                generate(&SequenceSpec::successor(n, len)).map_err(|e| e.to_string())?.collect();
            let report = verify(&seq, n, 2, Some(len));
            ensure!(report.ok, "n={n} L={len}: {report:?}");
            let params = derive_params(n, 2, len).unwrap();
            let rule = ContextFreeSuccessor::new(params, cut_set(params.s, n).unwrap()).unwrap();
            let l = seq.len();
            let windows: Vec<Vec<u8>> = (0..l).map(|i| (0..n).map(|j| seq[(i + j) % l]).collect()).collect();
            for (i, w) in windows.iter().enumerate() {
                let spec = SequenceSpec::successor(n, len).with_start(Word::new(w.clone(), 2).unwrap());
                let again: Vec<u8> = generate(&spec).unwrap().collect();
                ensure!(is_rotation(&seq, &again), "n={n} L={len}: start {i} gives a different cycle");
                let first = rule.next_symbol(w);
                let _ = rule.next_symbol(&windows[(i * 7 + 3) % l]);
                ensure!(rule.next_symbol(w) == first, "n={n} L={len}: window {i} not stateless");
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (n, L) pairs: verify, all starts, statelessness"))
}

fn ranking_oracle_equivalence() -> Outcome {
    let t0 = Instant::now();
    let mut words = 0usize;
    for n in 1..=14usize {
        for w in 0..=n {
            let list = enumerate_lyndon(n, w, 2).map_err(|e| e.to_string())?;
            for (i, lw) in list.iter().enumerate() {
                for r in 0..n {
                    let rank = rank_lyndon(&lw.rotate(r)).map_err(|e| e.to_string())?;
                    ensure!(rank.get() == i as u128 + 1, "{} ranked {rank}, listed {}", lw.rotate(r), i + 1);
                    words += 1;
                }
            }
        }
    }
    ensure!(words > 16_000, "only {words} words checked");
    Ok(format!("{words} aperiodic words; {:?}", t0.elapsed()))
}

fn counting_identities() -> Outcome {
    for k in 2..=4usize {
        let table = CountTable::new(10, k).map_err(|e| e.to_string())?;
        for n in 1..=10usize {
            let kn = checked_power(k, n).unwrap();
            let total: u128 = (0..=(k - 1) * n).map(|w| table.strings(n, w)).sum();
            ensure!(total == kn, "k={k} n={n}: sum T = {total}");
            for w in 0..=(k - 1) * n {
                let by_period: u128 = (1..=n).map(|p| table.with_period(n, w, p)).sum();
                ensure!(by_period == table.strings(n, w), "k={k} n={n} w={w}: sum B = {by_period}");
            }
        }
    }
    let e = |r: cutdown::Result<u128>| r.map_err(|e| e.to_string());
    let quoted = [
        ("A(3)", e(count_a(3, 6, 2))?, 42),
        ("A(4)", e(count_a(4, 6, 2))?, 57),
        ("B(4,3)", e(count_b(4, 3, 6, 2))?, 3),
        ("B(4,6)", e(count_b(4, 6, 6, 2))?, 12),
        ("B(4,4)", e(count_b(4, 4, 6, 2))?, 0),
        ("B(4,5)", e(count_b(4, 5, 6, 2))?, 0),
        ("C(4,5)", e(count_c(4, 5, 6, 2))?, 3),
        ("C(4,6)", e(count_c(4, 6, 6, 2))?, 15),
    ];
    for (name, got, want) in quoted {
        ensure!(got == want, "{name} = {got}, expected {want}");
    }
    Ok("sum identities for k in 2..=4, n <= 10; quoted A/B/C values match".into())
}

fn time_million(n: usize) -> Result<Duration, String> {
    let len = (1u128 << (n - 1)) + (1u128 << (n - 2)) + 12_345;
    let (_, dt) = fastest(3, || {
        let mut seq = generate(&SequenceSpec::counter(n, 2, len)).unwrap();
        let mut ones = 0u64;
        for c in seq.by_ref().take(1_000_000) {
            ones += c as u64;
        }
        assert_eq!(seq.state().len(), n);
        std::hint::black_box(ones)
    });
    Ok(dt)
}

fn performance() -> Outcome {
    let t30 = time_million(30)?;
    let t60 = time_million(60)?;
    let ratio = t60.as_secs_f64() / t30.as_secs_f64();
    ensure!(t30 < Duration::from_secs(2), "n=30 took {t30:?}");
    ensure!(ratio <= 2.5, "n=60 / n=30 = {ratio:.2} ({t60:?} / {t30:?})");
    Ok(format!("n=30 {t30:?}, n=60 {t60:?}, ratio {ratio:.2}; state stays n symbols"))
}

fn typo_regressions() -> Outcome {
    let g8 = format_symbols(&gamma(4, 8).map_err(|e| e.to_string())?, 2);
    let g11 = format_symbols(&gamma(4, 11).map_err(|e| e.to_string())?, 2);
    ensure!(g8 == "00010001", "gamma(4, 8) = {g8}");
    ensure!(g11 == "00100010001", "gamma(4, 11) = {g11}");
    let seq = parse_symbols(DB_4_3).unwrap();
    for i in 0..64 {
        let window: Vec<u8> = (0..3).map(|j| seq[(i + j) % 64]).collect();
        let next = seq[(i + 3) % 64];
        ensure!(g3prime(&window, 4) == next, "g3prime({window:?}) != {next}");
    }
    Ok("gamma(4,8), gamma(4,11) and 64 g3prime transitions".into())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("reference reproduction", reference_reproduction),
        ("reference main cycle", reference_main_cycle),
        ("de Bruijn reproduction", de_bruijn_reproduction),
        ("exhaustive binary sweep", exhaustive_binary_sweep),
        ("exhaustive k-ary sweep", exhaustive_kary_sweep),
        ("successor rule properties", successor_rule_properties),
        ("ranking oracle equivalence", ranking_oracle_equivalence),
        ("counting identities", counting_identities),
        ("performance", performance),
        ("typo regressions", typo_regressions),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(reason) => {
                println!("criterion {:>2} FAIL {name}: {reason}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
