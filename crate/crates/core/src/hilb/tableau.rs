use std::fmt;

use super::partition::{Cell, Partition};
use crate::error::{Error, Result};

/// A standard tableau, stored as the order in which its boxes are added.
/// Every prefix of `growth` is a Young diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    growth: Vec<Cell>,
}

impl StandardTableau {
    pub fn new(growth: Vec<Cell>) -> Result<Self> {
        let mut shape = Partition::empty();
        for (i, &c) in growth.iter().enumerate() {
            shape = shape.add(c).map_err(|_| {
                Error::InvalidTableau(format!("box {c} at step {} is not addable", i + 1))
            })?;
        }
        Ok(StandardTableau { growth })
    }

    pub fn growth(&self) -> &[Cell] {
        &self.growth
    }

    pub fn size(&self) -> usize {
        self.growth.len()
    }

    /// The chain `λ_1 ⊂ λ_2 ⊂ … ⊂ λ_n`.
    pub fn chain(&self) -> Vec<Partition> {
        let mut out = Vec::with_capacity(self.growth.len());
        let mut shape = Partition::empty();
        for &c in &self.growth {
            shape = shape.add(c).expect("validated on construction");
            out.push(shape.clone());
        }
        out
    }

    pub fn shape(&self) -> Partition {
        self.chain().pop().unwrap_or_default()
    }

    pub fn transpose(&self) -> StandardTableau {
        StandardTableau {
            growth: self.growth.iter().map(|c| c.transpose()).collect(),
        }
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.growth.iter().map(Cell::to_string).collect();
        f.write_str(&cells.join(" "))
    }
}

/// All standard tableaux with `n` boxes, by depth-first growth over inner
/// corners taken in (row, col) order.
pub fn standard_tableaux(n: usize) -> Vec<StandardTableau> {
    fn go(shape: &Partition, growth: &mut Vec<Cell>, n: usize, out: &mut Vec<StandardTableau>) {
        if growth.len() == n {
            out.push(StandardTableau {
                growth: growth.clone(),
            });
            return;
        }
        for c in shape.inner_corners() {
            growth.push(c);
            go(&shape.add(c).expect("inner corner"), growth, n, out);
            growth.pop();
        }
    }
    let mut out = Vec::new();
    go(&Partition::empty(), &mut Vec::new(), n, &mut out);
    out
}

/// `n! / ∏ hooks`, the number of standard tableaux of shape `λ`.
pub fn hook_length_count(lambda: &Partition) -> u64 {
    let conj = lambda.transpose();
    let factorial: u64 = (1..=lambda.size() as u64).product();
    let hooks: u64 = lambda
        .cells()
        .map(|c| {
            let arm = lambda.rows()[c.row as usize] - c.col - 1;
            let leg = conj.rows()[c.col as usize] - c.row - 1;
            (arm + leg + 1) as u64
        })
        .product();
    factorial / hooks
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;

    #[test]
    fn counts_by_size() {
        let counts: Vec<usize> = (1..=6).map(|n| standard_tableaux(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 10, 26, 76]);
    }

    #[test]
    fn shapes_of_size_three() {
        let mut by_shape: BTreeMap<String, usize> = BTreeMap::new();
        for t in standard_tableaux(3) {
            *by_shape.entry(t.shape().to_string()).or_default() += 1;
        }
        assert_eq!(by_shape["3"], 1);
        assert_eq!(by_shape["2,1"], 2);
        assert_eq!(by_shape["1,1,1"], 1);
    }

    #[test]
    fn per_shape_counts_match_hook_lengths() {
        for n in 1..=6 {
            let mut by_shape: BTreeMap<Partition, u64> = BTreeMap::new();
            for t in standard_tableaux(n) {
                *by_shape.entry(t.shape()).or_default() += 1;
            }
            for lambda in Partition::all_of_size(n as u32) {
                assert_eq!(by_shape[&lambda], hook_length_count(&lambda), "{lambda}");
            }
        }
    }

    #[test]
    fn validation_and_transpose() {
        let row = StandardTableau::new(vec![Cell::new(0, 0), Cell::new(1, 0)]).unwrap();
        assert_eq!(row.shape(), "2".parse().unwrap());
        assert_eq!(row.transpose().shape(), "1,1".parse().unwrap());
        assert_eq!(row.to_string(), "(0,0) (1,0)");
        assert!(StandardTableau::new(vec![Cell::new(1, 0)]).is_err());
        for t in standard_tableaux(5) {
            assert_eq!(t.transpose().transpose(), t);
            assert!(StandardTableau::new(t.transpose().growth().to_vec()).is_ok());
        }
    }
}
