use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::polycore::{Exponent, Polynomial};

/// A Dyck path of semilength `n` as a step sequence (`true` = north),
/// staying weakly above the diagonal.
pub type DyckPath = Vec<bool>;

/// All Dyck paths of semilength `n`.
pub fn dyck_paths(n: usize) -> Vec<DyckPath> {
    fn go(path: &mut DyckPath, north: usize, east: usize, n: usize, out: &mut Vec<DyckPath>) {
        if east == n {
            out.push(path.clone());
            return;
        }
        if north < n {
            path.push(true);
            go(path, north + 1, east, n, out);
            path.pop();
        }
        if east < north {
            path.push(false);
            go(path, north, east + 1, n, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 0, 0, n, &mut out);
    out
}

/// Number of full boxes between the path and the diagonal.
pub fn area(path: &[bool]) -> u32 {
    let (mut north, mut east, mut total) = (0u32, 0u32, 0u32);
    for &step in path {
        if step {
            total += north - east;
            north += 1;
        } else {
            east += 1;
        }
    }
    total
}

/// The bounce statistic: starting at the origin, go north until reaching the
/// start of an east step of the path, then east to the diagonal, and repeat.
/// Each interior diagonal touch at `(j, j)` contributes `n - j`.
pub fn bounce(path: &[bool]) -> u32 {
    let n = path.len() / 2;
    // height[x] = y-coordinate of the east step leaving column x
    let mut height = Vec::with_capacity(n);
    let mut north = 0;
    for &step in path {
        if step {
            north += 1;
        } else {
            height.push(north);
        }
    }
    let mut total = 0;
    let mut x = 0;
    loop {
        let y = height[x];
        if y == n {
            return total as u32;
        }
        total += n - y;
        x = y;
    }
}

/// `C_n(q,t) = Σ q^{area} t^{bounce}` over Dyck paths of semilength `n`.
pub fn qt_catalan(n: usize) -> Polynomial {
    assert!(n >= 1, "n must be positive");
    let mut counts: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for path in dyck_paths(n) {
        *counts.entry((area(&path), bounce(&path))).or_default() += 1;
    }
    Polynomial::from_terms(
        counts
            .into_iter()
            .map(|((a, b), m)| (BigInt::from(m), Exponent::whole(a as i32, 0, b as i32))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: &str) -> Polynomial {
        x.parse().unwrap()
    }

    /// `Σ q^{dinv} t^{area}` computed from area sequences, a second statistic
    /// pair with the same generating function.
    fn dinv_area(n: usize) -> Polynomial {
        fn go(seq: &mut Vec<i32>, n: usize, out: &mut Polynomial) {
            if seq.len() == n {
                let area: i32 = seq.iter().sum();
                let mut dinv = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if seq[i] == seq[j] || seq[i] == seq[j] + 1 {
                            dinv += 1;
                        }
                    }
                }
                *out += &Polynomial::qat(dinv, 0, area);
                return;
            }
            let max = seq.last().map_or(0, |&x| x + 1);
            for next in 0..=max {
                seq.push(next);
                go(seq, n, out);
                seq.pop();
            }
        }
        let mut out = Polynomial::zero();
        go(&mut Vec::new(), n, &mut out);
        out
    }

    #[test]
    fn small_values() {
        assert_eq!(qt_catalan(1), Polynomial::one());
        assert_eq!(qt_catalan(2), p("q + t"));
        assert_eq!(qt_catalan(3), p("q^3 + q^2 t + q t^2 + t^3 + q t"));
    }

    #[test]
    fn path_counts_are_catalan() {
        let counts: Vec<usize> = (1..=7).map(|n| dyck_paths(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn agrees_with_dinv_area_and_is_symmetric() {
        for n in 1..=6 {
            let c = qt_catalan(n);
            assert_eq!(c, dinv_area(n), "n = {n}");
            assert_eq!(c.swap_qt(), c, "n = {n}");
        }
    }
}
