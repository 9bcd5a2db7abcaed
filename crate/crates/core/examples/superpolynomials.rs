//! Reduced superpolynomials: the built-in table, specialisation to HOMFLY
//! and sl_N, normalisation prefactors and the unknot.

use tlh::linkinv::{
    dataset_get, dataset_list, decategorify, normalize_superpoly, reduce_by_unknot, sl_n,
    torus2_family, unknot_frac, unknot_series, NormalizationContext,
};
use tlh::Polynomial;

fn main() -> tlh::Result<()> {
    for entry in dataset_list() {
        println!("{:<7} {}", entry.key, entry.poly);
    }

    let trefoil = dataset_get("T(2,3)")?.poly;
    assert_eq!(trefoil, torus2_family(1));
    let homfly = decategorify(&trefoil)?;
    println!("trefoil HOMFLY: {homfly}");
    for n in 2..=4 {
        println!("  sl_{n}: {}", sl_n(&homfly, n)?);
    }

    let ctx = NormalizationContext { e: 3, n: 2 };
    println!(
        "prefactor for e = 3, n = 2: {}",
        Polynomial::from(ctx.prefactor())
    );
    println!("normalised trefoil: {}", normalize_superpoly(&trefoil, ctx));

    println!("unknot to q^4: {}", unknot_series(4));
    println!(
        "unknot reduced by itself: {}",
        reduce_by_unknot(&unknot_frac())?
    );
    Ok(())
}
