//! q,t-Catalan numbers from Dyck paths, and their appearance as the lowest
//! a-degree part of the T(n,n+1) superpolynomial.

use tlh::linkinv::{
    area, bounce, dataset_get, dyck_paths, lowest_a_part, matches_up_to_monomial, qt_catalan,
};
use tlh::Polynomial;

fn main() -> tlh::Result<()> {
    for path in dyck_paths(3) {
        let steps: String = path.iter().map(|&s| if s { 'N' } else { 'E' }).collect();
        println!("{steps}  area {}  bounce {}", area(&path), bounce(&path));
    }
    for n in 1..=4 {
        println!("C_{n}(q,t) = {}", qt_catalan(n));
    }
    for (n, key) in [(2, "T(2,3)"), (3, "T(3,4)"), (4, "T(4,5)")] {
        let (part, _) = lowest_a_part(&dataset_get(key)?.poly);
        match matches_up_to_monomial(&part, &qt_catalan(n)) {
            Some(m) => println!(
                "{key}: lowest a-part is C_{n} times {}",
                Polynomial::from(m)
            ),
            None => println!("{key}: no match"),
        }
    }
    Ok(())
}
