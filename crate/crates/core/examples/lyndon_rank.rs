// Ranking Lyndon words without listing them, checked against the listing.

use cutdown::ranking::rank_lyndon_by_enumeration;
use cutdown::{enumerate_lyndon, rank_lyndon, Result, Word};

pub fn run_example() -> Result<Vec<(String, u128)>> {
    let list = enumerate_lyndon(10, 4, 2)?;
    let mut out = Vec::new();
    for w in list.iter().step_by(7) {
        let r = rank_lyndon(w)?;
        assert_eq!(r, rank_lyndon_by_enumeration(w)?);
        out.push((w.to_string(), r.get()));
    }
    // any rotation has the same rank
    let w = Word::parse("1100100000", 2)?;
    assert_eq!(rank_lyndon(&w)?, rank_lyndon(&w.least_rotation())?);
    Ok(out)
}

fn main() -> Result<()> {
    for (w, r) in run_example()? {
        println!("{w} {r}");
    }
    Ok(())
}
