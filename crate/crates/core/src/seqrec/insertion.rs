use super::seq::ShuffleSeq;
use crate::error::{Error, Result};
use crate::polycore::Polynomial;

/// A pair `(v, w)` with `len(w)` equal to the number of zeroes of `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InsertionPair {
    v: ShuffleSeq,
    w: ShuffleSeq,
}

impl InsertionPair {
    pub fn new(v: ShuffleSeq, w: ShuffleSeq) -> Result<Self> {
        if w.len() != v.count_zeros() {
            return Err(Error::IncompatiblePair {
                w_len: w.len(),
                zeroes: v.count_zeros(),
            });
        }
        Ok(InsertionPair { v, w })
    }

    pub fn v(&self) -> ShuffleSeq {
        self.v
    }

    pub fn w(&self) -> ShuffleSeq {
        self.w
    }

    /// Positions (0-based) that are zero in `v` and one in `v ∘ w`.
    pub fn inserted_ones(&self) -> Vec<bool> {
        let mut j = 0;
        self.v
            .iter()
            .map(|b| {
                if b {
                    false
                } else {
                    let on = self.w.get(j);
                    j += 1;
                    on
                }
            })
            .collect()
    }

    /// `v ∘ w`: `w` written into the zeroes of `v`.
    pub fn insert(&self) -> ShuffleSeq {
        let inserted = self.inserted_ones();
        let bits: Vec<bool> = self.v.iter().zip(inserted).map(|(b, on)| b || on).collect();
        ShuffleSeq::from_bits(&bits)
    }

    /// Number of pairs `i < j` with `i` a one of `v` and `j` a one of `w`.
    pub fn crossings(&self) -> usize {
        let inserted = self.inserted_ones();
        let mut ones_seen = 0;
        let mut total = 0;
        for (b, on) in self.v.iter().zip(inserted) {
            if b {
                ones_seen += 1;
            } else if on {
                total += ones_seen;
            }
        }
        total
    }

    /// `P_{v,w} = ∏_{v_i = 1} (t^{ℓ(i) + m(i)} + a)` where `ℓ(i)` counts ones of
    /// `v` left of `i` and `m(i)` counts ones of `w` right of `i`.
    pub fn p_weight(&self) -> Polynomial {
        let inserted = self.inserted_ones();
        let mut right_w: usize = inserted.iter().filter(|x| **x).count();
        let mut left_v = 0;
        let mut acc = Polynomial::one();
        for (b, on) in self.v.iter().zip(inserted) {
            if on {
                right_w -= 1;
            }
            if b {
                let k = (left_v + right_w) as i32;
                acc = &acc * &(&Polynomial::qat(0, 0, k) + &Polynomial::a());
                left_v += 1;
            }
        }
        acc
    }
}

/// `v ∘ w`, failing with [`Error::IncompatiblePair`] on a length mismatch.
pub fn insert(v: ShuffleSeq, w: ShuffleSeq) -> Result<ShuffleSeq> {
    Ok(InsertionPair::new(v, w)?.insert())
}

pub fn crossings(v: ShuffleSeq, w: ShuffleSeq) -> Result<usize> {
    Ok(InsertionPair::new(v, w)?.crossings())
}

pub fn p_weight(v: ShuffleSeq, w: ShuffleSeq) -> Result<Polynomial> {
    Ok(InsertionPair::new(v, w)?.p_weight())
}
