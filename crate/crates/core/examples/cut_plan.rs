// Construction parameters and marker words for a few lengths.

use cutdown::cutplan::{cut_set, derive_params, gamma};
use cutdown::words::format_symbols;
use cutdown::{CutParams, Result};

pub fn run_example() -> Result<Vec<(CutParams, Vec<String>)>> {
    let mut rows = Vec::new();
    for (n, k, len) in [(6, 2, 46), (6, 2, 33), (8, 2, 200), (3, 4, 50)] {
        let p = derive_params(n, k, len)?;
        rows.push((p, cut_set(p.s, n)?.marker_strings()));
    }
    assert_eq!(format_symbols(&gamma(4, 8)?, 2), "00010001");
    Ok(rows)
}

fn main() -> Result<()> {
    for (p, markers) in run_example()? {
        println!(
            "n={} k={} L={}: m={} h={} t={} s={} markers={:?}",
            p.n, p.k, p.len, p.m, p.h, p.t, p.s, markers
        );
    }
    Ok(())
}
