//! Hochschild degree zero: enumerating the closed formula versus the a = 0
//! part of the recursion.

use tlh::closedform::{count_sigmas, hhh0_series, sigma_stats};
use tlh::polycore::series_expand;
use tlh::seqrec::{SeqEngine, ShuffleSeq};
use tlh::FracPoly;

fn main() -> tlh::Result<()> {
    let values = [2, 1, 2, 3];
    println!("stats of {values:?}: {:?}", sigma_stats(&values));

    let engine = SeqEngine::new();
    let qmax = 8;
    for n in 1..=4 {
        let enumerated = hhh0_series(n, qmax);
        let f = engine.f(ShuffleSeq::zeros(n));
        let at_zero = FracPoly::from_parts(f.numerator().at_a_zero()?, f.denominator_factors());
        let expanded = series_expand(&at_zero, qmax)?;
        println!(
            "n = {n}: {} functions enumerated, series {} recursion",
            count_sigmas(n, qmax),
            if enumerated == expanded {
                "matches"
            } else {
                "DIFFERS FROM"
            }
        );
    }
    println!("n = 2 to q^{qmax}: {}", hhh0_series(2, qmax));
    Ok(())
}
