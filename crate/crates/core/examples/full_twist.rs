//! Poincaré series of the (n,n) torus link from the sequence recursion.
//!
//! ```text
//! cargo run --example full_twist -- 3 6
//! ```

use tlh::polycore::format::frac_to_text_factored;
use tlh::seqrec::{full_twist_series, SeqEngine, ShuffleSeq};

fn main() -> tlh::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(3, |s| s.parse().expect("n"));
    let qmax: u32 = args.next().map_or(6, |s| s.parse().expect("qmax"));

    let engine = SeqEngine::new();
    let zeros = ShuffleSeq::zeros(n);
    println!("f({zeros})  = {}", frac_to_text_factored(&engine.f(zeros)));
    println!("f~({zeros}) = {}", engine.tilde_f(zeros));
    println!("series to q^{qmax}:");
    println!("  {}", full_twist_series(&engine, n, qmax)?);
    println!("{} sequences memoised", engine.memo().len());
    Ok(())
}
