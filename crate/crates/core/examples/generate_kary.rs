// Ternary sequences of every length between 3^3 and 3^4.

use cutdown::words::format_symbols;
use cutdown::{generate, verify, Result, SequenceSpec};

pub fn run_example() -> Result<Vec<String>> {
    let (n, k) = (4, 3);
    let mut out = Vec::new();
    for len in 28..=81 {
        let seq: Vec<u8> = generate(&SequenceSpec::counter(n, k, len))?.collect();
        assert!(verify(&seq, n, k, Some(len)).ok, "L = {len}");
        out.push(format_symbols(&seq, k));
    }
    Ok(out)
}

fn main() -> Result<()> {
    for (i, s) in run_example()?.iter().enumerate() {
        println!("{:>2} {s}", 28 + i);
    }
    Ok(())
}
