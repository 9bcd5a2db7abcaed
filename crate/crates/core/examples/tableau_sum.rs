//! Partitions, standard tableaux and the flag Hilbert scheme tableau sum.

use tlh::hilb::{
    corner_sum_check, f_corner, g_partition, magic_rhs, standard_tableaux, top_a_identity,
    Partition,
};
use tlh::polycore::format::frac_to_text_factored;
use tlh::seqrec::{SeqEngine, ShuffleSeq};

fn main() -> tlh::Result<()> {
    let lambda: Partition = "3,1".parse()?;
    println!("lambda = {lambda}, transpose {}", lambda.transpose());
    for c in lambda.inner_corners() {
        println!(
            "  f at corner {c}: {}",
            frac_to_text_factored(&f_corner(&lambda, c)?)
        );
    }
    println!("  corner functions sum to 1: {}", corner_sum_check(&lambda));
    println!("  g = {}", g_partition(&lambda));

    for n in 1..=5 {
        println!(
            "{n} boxes: {} standard tableaux",
            standard_tableaux(n).len()
        );
    }

    let engine = SeqEngine::new();
    for n in 1..=3 {
        let rhs = magic_rhs(n, 1).to_polynomial()?;
        println!(
            "n = {n}: r = 1 sum equals f~(0^n): {}, sum of f_T is 1: {}",
            rhs == *engine.tilde_f(ShuffleSeq::zeros(n)),
            top_a_identity(n)
        );
        // the r = 0 sum is (1 + a)^n, not 1
        println!("       r = 0 sum: {}", magic_rhs(n, 0).to_polynomial()?);
    }
    Ok(())
}
