use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::polycore::Exponent;

/// A box of a Young diagram, 0-based: `col` counts left to right and `row`
/// top to bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub col: u32,
    pub row: u32,
}

impl Cell {
    pub const ORIGIN: Cell = Cell { col: 0, row: 0 };

    pub fn new(col: u32, row: u32) -> Self {
        Cell { col, row }
    }

    pub fn transpose(self) -> Self {
        Cell {
            col: self.row,
            row: self.col,
        }
    }

    /// `z_c = t^col q^row`.
    pub fn z(self) -> Exponent {
        Exponent::whole(self.row as i32, 0, self.col as i32)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

/// Young diagram in English convention, stored as weakly decreasing row
/// lengths with no zero rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    rows: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn new(rows: Vec<u32>) -> Result<Self> {
        if rows.contains(&0) {
            return Err(Error::InvalidPartition(format!("{rows:?} has a zero row")));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{rows:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { rows })
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn size(&self) -> u32 {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.rows
            .get(c.row as usize)
            .is_some_and(|&len| c.col < len)
    }

    /// Boxes in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(j, &len)| (0..len).map(move |i| Cell::new(i, j as u32)))
    }

    pub fn transpose(&self) -> Partition {
        let width = self.rows.first().copied().unwrap_or(0);
        let rows = (0..width)
            .map(|i| self.rows.iter().filter(|&&len| len > i).count() as u32)
            .collect();
        Partition { rows }
    }

    /// Addable boxes, in increasing row order.
    pub fn inner_corners(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for j in 0..=self.rows.len() {
            let col = self.rows.get(j).copied().unwrap_or(0);
            if j == 0 || self.rows[j - 1] > col {
                out.push(Cell::new(col, j as u32));
            }
        }
        out
    }

    /// `(i+1, j+1)` for every removable box `(i, j)`, in increasing row order.
    pub fn outer_corners(&self) -> Vec<Cell> {
        let n = self.rows.len();
        (0..n)
            .filter(|&j| j + 1 == n || self.rows[j + 1] < self.rows[j])
            .map(|j| Cell::new(self.rows[j], j as u32 + 1))
            .collect()
    }

    /// `λ ∪ c` for an inner corner `c`.
    pub fn add(&self, c: Cell) -> Result<Partition> {
        if !self.inner_corners().contains(&c) {
            return Err(Error::NotInnerCorner {
                col: c.col,
                row: c.row,
            });
        }
        let mut rows = self.rows.clone();
        if c.row as usize == rows.len() {
            rows.push(1);
        } else {
            rows[c.row as usize] += 1;
        }
        Ok(Partition { rows })
    }

    /// `z_λ = ∏_{c ∈ λ} z_c`.
    pub fn z(&self) -> Exponent {
        self.cells().fold(Exponent::ZERO, |acc, c| acc + c.z())
    }

    /// All partitions of `n`, in reverse lexicographic order of rows.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition {
                    rows: prefix.clone(),
                });
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                prefix.push(part);
                go(rest - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let rows = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("bad row length {x:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(rows)
    }
}
