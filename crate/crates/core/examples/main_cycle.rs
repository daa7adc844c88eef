// A universal cycle for a closed set of windows, grown with the generic
// cycle-joining step.

use cutdown::words::{format_symbols, period, weight};
use cutdown::{mc_step, Result};

pub fn run_example() -> Result<String> {
    // weight < 4, weight 4 with period < 6, and the class of 001111
    let member = |w: &[u8]| {
        let wt = weight(w);
        wt < 4 || (wt == 4 && period(w) < 6) || cutdown::words::least_rotation(w) == [0, 0, 1, 1, 1, 1]
    };
    let mut alpha = vec![0u8; 6];
    let mut out = Vec::new();
    loop {
        out.push(alpha[0]);
        let x = mc_step(&alpha, 2, member)?;
        alpha.remove(0);
        alpha.push(x);
        if alpha == [0; 6] {
            break;
        }
    }
    Ok(format_symbols(&out, 2))
}

fn main() -> Result<()> {
    let mc = run_example()?;
    println!("{mc} ({} symbols)", mc.len());
    Ok(())
}
