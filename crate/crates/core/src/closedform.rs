//! Closed formula for the Hochschild-degree-zero series of `(n,n)` torus links:
//!
//! ```text
//! F_n(q,t) = Σ_σ t^{a(σ)+b(σ)} q^{c(σ)},   σ : {1..n} → ℤ≥0
//! a(σ) = Σ_k C(|σ⁻¹(k)|, 2)
//! b(σ) = #{(i,j) : i < j, σ(j) = σ(i) + 1}
//! c(σ) = Σ_i σ(i)
//! ```
//!
//! Every `σ` with `c(σ) ≤ qmax` is enumerated exactly once, so truncations are
//! complete. This module has no dependency on the recursion engines.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::polycore::{Exponent, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaFunction {
    values: Vec<u32>,
}

impl SigmaFunction {
    pub fn new(values: Vec<u32>) -> Self {
        assert!(!values.is_empty(), "σ needs n ≥ 1");
        SigmaFunction { values }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// `(a(σ), b(σ), c(σ))`.
    pub fn stats(&self) -> (u64, u64, u64) {
        sigma_stats(&self.values)
    }
}

pub fn sigma_stats(values: &[u32]) -> (u64, u64, u64) {
    let mut fibres: BTreeMap<u32, u64> = BTreeMap::new();
    for &v in values {
        *fibres.entry(v).or_default() += 1;
    }
    let a = fibres.values().map(|m| m * m.saturating_sub(1) / 2).sum();
    let mut b = 0;
    for (i, &x) in values.iter().enumerate() {
        b += values[i + 1..].iter().filter(|&&y| y == x + 1).count() as u64;
    }
    let c = values.iter().map(|&v| v as u64).sum();
    (a, b, c)
}

/// Calls `visit` on every `σ` of length `n` with `Σσ ≤ budget`, in
/// lexicographic order, with the given fixed prefix.
fn enumerate(prefix: &mut Vec<u32>, n: usize, budget: u32, visit: &mut impl FnMut(&[u32])) {
    if prefix.len() == n {
        visit(prefix);
        return;
    }
    for x in 0..=budget {
        prefix.push(x);
        enumerate(prefix, n, budget - x, visit);
        prefix.pop();
    }
}

/// Number of `σ : {1..n} → ℤ≥0` with `c(σ) ≤ qmax`, by enumeration.
pub fn count_sigmas(n: usize, qmax: u32) -> u64 {
    let mut count = 0;
    enumerate(&mut Vec::new(), n, qmax, &mut |_| count += 1);
    count
}

/// `F_n(q,t)` truncated to `q`-degree at most `qmax`. Work is split across
/// threads by the value of `σ(1)`; the reduction is an exact sum.
pub fn hhh0_series(n: usize, qmax: u32) -> Polynomial {
    assert!(n >= 1, "n must be positive");
    (0..=qmax)
        .into_par_iter()
        .map(|first| {
            let mut counts: BTreeMap<(u64, u64), u64> = BTreeMap::new();
            enumerate(&mut vec![first], n, qmax - first, &mut |s| {
                let (a, b, c) = sigma_stats(s);
                *counts.entry((a + b, c)).or_default() += 1;
            });
            Polynomial::from_terms(counts.into_iter().map(|((tdeg, qdeg), m)| {
                (
                    BigInt::from(m),
                    Exponent::whole(qdeg as i32, 0, tdeg as i32),
                )
            }))
        })
        .reduce(Polynomial::zero, |x, y| x + y)
}
