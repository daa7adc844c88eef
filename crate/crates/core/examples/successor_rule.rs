// The stateless successor: the next symbol depends only on the current window,
// so the cycle can be entered anywhere.

use cutdown::cutplan::{cut_set, derive_params};
use cutdown::successor::ContextFreeSuccessor;
use cutdown::{generate, verify, Result, SequenceSpec, Word};

pub fn run_example() -> Result<(String, String)> {
    let (n, len) = (6, 46);
    let from_default: Vec<u8> = generate(&SequenceSpec::successor(n, len))?.collect();
    assert!(verify(&from_default, n, 2, Some(len)).ok);

    // restart from a window in the middle of the cycle
    let start = Word::new(from_default[10..10 + n].to_vec(), 2)?;
    let from_middle: Vec<u8> = generate(&SequenceSpec::successor(n, len).with_start(start))?.collect();
    assert!(verify(&from_middle, n, 2, Some(len)).ok);

    let params = derive_params(n, 2, len)?;
    let rule = ContextFreeSuccessor::new(params, cut_set(params.s, n)?)?;
    assert_eq!(rule.next_symbol(&from_default[..n]), from_default[n]);

    let show = |s: &[u8]| s.iter().map(|c| char::from(b'0' + c)).collect::<String>();
    Ok((show(&from_default), show(&from_middle)))
}

fn main() -> Result<()> {
    let (a, b) = run_example()?;
    println!("{a}\n{b}");
    Ok(())
}
