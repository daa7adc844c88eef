// Strings and Lyndon words counted by length, weight and period.

use cutdown::{CountTable, Result};

pub fn run_example() -> Result<Vec<(usize, u128, u128)>> {
    let (n, k) = (6, 2);
    let table = CountTable::new(n, k)?;
    let rows: Vec<_> = (0..=n).map(|w| (w, table.strings(n, w), table.lyndon(n, w))).collect();
    assert_eq!(rows.iter().map(|r| r.1).sum::<u128>(), 64);
    // weight < 4, plus weight 4 with period < 6
    assert_eq!(table.at_most(6, 3) + table.with_period_at_most(6, 4, 5), 45);
    Ok(rows)
}

fn main() -> Result<()> {
    println!("w  T(6,w)  L(6,w)");
    for (w, t, l) in run_example()? {
        println!("{w}  {t:>6}  {l:>6}");
    }
    Ok(())
}
