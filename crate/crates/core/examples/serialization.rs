//! Text, JSON and LaTeX forms, substitution, and the on-disk memo cache.

use tlh::polycore::{parse, serialize, serialize_frac, substitute, Format, Var};
use tlh::seqrec::{SeqEngine, ShuffleSeq};
use tlh::{Exponent, Polynomial, SubstRule};

fn main() -> tlh::Result<()> {
    let p: Polynomial = "q^(1/2) t^(-1/2) a + 2 a^2 - q t".parse()?;
    for format in [Format::Text, Format::Json, Format::Latex] {
        println!("{format:?}: {}", serialize(&p, format));
    }
    let json = serialize(&p, Format::Json);
    assert_eq!(parse(&json, Format::Json)?, p);

    // t^(1/2) -> -q^(-1/2)
    let rule = SubstRule::new(Var::T, 2, -1, Exponent::units(-2, 0, 0));
    println!("t^(1/2) -> -q^(-1/2): {}", substitute(&p, &[rule])?);

    let engine = SeqEngine::new();
    let f = engine.f("0101".parse::<ShuffleSeq>()?);
    println!("f(0101) as LaTeX: {}", serialize_frac(&f, Format::Latex));

    let dir = std::env::temp_dir().join(format!("tlh-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("memo.json");
    engine.save_cache(&path)?;
    let fresh = SeqEngine::new();
    let loaded = fresh.load_cache(&path, 0.25)?;
    println!(
        "cache: {} entries saved, {loaded} loaded and spot-checked",
        engine.memo().len()
    );
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
