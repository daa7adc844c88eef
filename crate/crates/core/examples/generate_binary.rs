// Binary cut-down sequence of length 46 with window length 6.

use cutdown::{generate, verify, Result, SequenceSpec};

pub fn run_example() -> Result<String> {
    let seq: Vec<u8> = generate(&SequenceSpec::counter(6, 2, 46))?.collect();
    assert!(verify(&seq, 6, 2, Some(46)).ok);
    Ok(seq.iter().map(|c| char::from(b'0' + c)).collect())
}

fn main() -> Result<()> {
    println!("{}", run_example()?);
    Ok(())
}
