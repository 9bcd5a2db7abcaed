use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Longest supported sequence.
pub const MAX_LEN: usize = 64;

/// A binary sequence `v_1 … v_n`; index 1 is the leftmost character.
///
/// Bit `i` of `bits` holds `v_{i+1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShuffleSeq {
    len: u8,
    bits: u64,
}

impl ShuffleSeq {
    pub const EMPTY: ShuffleSeq = ShuffleSeq { len: 0, bits: 0 };

    pub fn from_bits(bits: &[bool]) -> Self {
        assert!(bits.len() <= MAX_LEN, "sequence longer than {MAX_LEN}");
        let mut v = ShuffleSeq::EMPTY;
        for &b in bits {
            v = v.push_back(b);
        }
        v
    }

    pub fn zeros(n: usize) -> Self {
        ShuffleSeq::from_bits(&vec![false; n])
    }

    pub fn ones(n: usize) -> Self {
        ShuffleSeq::from_bits(&vec![true; n])
    }

    /// All sequences of length `n`, in increasing binary order of the string.
    pub fn all_of_length(n: usize) -> impl Iterator<Item = ShuffleSeq> {
        assert!(n < MAX_LEN);
        (0u64..(1u64 << n)).map(move |m| {
            let bits: Vec<bool> = (0..n).map(|i| (m >> (n - 1 - i)) & 1 == 1).collect();
            ShuffleSeq::from_bits(&bits)
        })
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Entry at 0-based position `i` (the 1-based index `i + 1`).
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len(), "index out of range");
        (self.bits >> i) & 1 == 1
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    /// Number of ones, written `|v|`.
    pub fn count_ones(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn count_zeros(&self) -> usize {
        self.len() - self.count_ones()
    }

    pub fn is_all_zeros(&self) -> bool {
        self.bits == 0
    }

    /// `v · b`.
    pub fn push_back(&self, b: bool) -> Self {
        assert!(self.len() < MAX_LEN, "sequence longer than {MAX_LEN}");
        ShuffleSeq {
            len: self.len + 1,
            bits: self.bits | ((b as u64) << self.len),
        }
    }

    /// `b · v`.
    pub fn push_front(&self, b: bool) -> Self {
        assert!(self.len() < MAX_LEN, "sequence longer than {MAX_LEN}");
        ShuffleSeq {
            len: self.len + 1,
            bits: (self.bits << 1) | b as u64,
        }
    }

    /// Splits `v = u · b` into `(u, b)`.
    pub fn split_last(&self) -> Option<(ShuffleSeq, bool)> {
        if self.len == 0 {
            return None;
        }
        let last = self.get(self.len() - 1);
        let rest = ShuffleSeq {
            len: self.len - 1,
            bits: self.bits & !(1u64 << (self.len - 1)),
        };
        Some((rest, last))
    }

    /// Number of pairs `i < j` with `v_i = 1`, `v_j = 0`.
    pub fn inversions(&self) -> usize {
        let mut ones = 0;
        let mut inv = 0;
        for b in self.iter() {
            if b {
                ones += 1;
            } else {
                inv += ones;
            }
        }
        inv
    }
}

impl fmt::Display for ShuffleSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for ShuffleSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ShuffleSeq({self})")
    }
}

impl FromStr for ShuffleSeq {
    type Err = Error;

    /// Parses a `0`/`1` string; the empty string (or `∅`) is the empty sequence.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "∅" {
            return Ok(ShuffleSeq::EMPTY);
        }
        if s.len() > MAX_LEN {
            return Err(Error::InvalidSequence(s.to_string()));
        }
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidSequence(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ShuffleSeq::from_bits(&bits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> ShuffleSeq {
        x.parse().unwrap()
    }

    #[test]
    fn round_trips_strings() {
        for x in ["", "0", "1", "0101100", "1101001"] {
            assert_eq!(s(x).to_string(), x);
        }
        assert!("012".parse::<ShuffleSeq>().is_err());
    }

    #[test]
    fn statistics() {
        let v = s("1101001");
        assert_eq!(v.len(), 7);
        assert_eq!(v.count_ones(), 4);
        assert_eq!(v.count_zeros(), 3);
        assert_eq!(v.inversions(), 2 + 3 + 3);
    }

    #[test]
    fn concatenation_sides() {
        let v = s("10");
        assert_eq!(v.push_back(false).to_string(), "100");
        assert_eq!(v.push_front(false).to_string(), "010");
        assert_eq!(s("011").split_last(), Some((s("01"), true)));
        assert_eq!(ShuffleSeq::EMPTY.split_last(), None);
    }

    #[test]
    fn enumeration_is_complete() {
        let all: Vec<String> = ShuffleSeq::all_of_length(2)
            .map(|v| v.to_string())
            .collect();
        assert_eq!(all, ["00", "01", "10", "11"]);
        assert_eq!(ShuffleSeq::all_of_length(0).count(), 1);
    }
}
