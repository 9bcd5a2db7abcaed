//! The two recursions agree: the insertion recursion behind `SeqEngine`
//! and the dual recursion in `AltEngine`.

use tlh::seqrec::{rule1_redundancy_check, AltEngine, SeqEngine, ShuffleSeq};

fn main() {
    let engine = SeqEngine::new();
    let alt = AltEngine::new();
    for len in 1..=5 {
        let mut agree = 0;
        let mut total = 0;
        for v in ShuffleSeq::all_of_length(len) {
            total += 1;
            if alt.f_alt(v) == engine.f(v) {
                agree += 1;
            }
        }
        println!("length {len}: {agree}/{total} sequences agree");
    }

    // the top a-degree coefficient is always 1
    for v in ShuffleSeq::all_of_length(3) {
        let top = engine.tilde_f(v).coeff_of_a(3);
        println!("f~({v}) a^3 coefficient: {top}");
    }
    println!(
        "redundant rule holds at n = 4: {}",
        rule1_redundancy_check(&engine, 4)
    );
}
