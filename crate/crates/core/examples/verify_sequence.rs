// Checking candidate sequences, including a failing one.

use cutdown::words::parse_symbols;
use cutdown::{verify, Result, VerifyReport};

pub fn run_example() -> Result<[VerifyReport; 2]> {
    let good = parse_symbols("0000001111001110001101101001100001011101011001010001")?;
    let bad = parse_symbols("00100")?;
    let reports = [verify(&good, 6, 2, Some(52)), verify(&bad, 3, 2, None)];
    assert!(reports[0].ok);
    assert!(!reports[1].ok);
    Ok(reports)
}

fn main() -> Result<()> {
    for r in run_example()? {
        println!("{}", serde_json::to_string(&r).expect("report serializes"));
    }
    Ok(())
}
