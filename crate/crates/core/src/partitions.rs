//! Partitions, strict partitions, compositions and the cell statistics
//! (hooks, shifted hooks, contents) built on top of them.
//!
//! Cells are 1-indexed `(row, col)` pairs. For a strict partition the
//! shifted diagram places row `i` in columns `i ..= λ_i + i - 1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A cell of a (shifted) Young diagram, 1-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1, "cells are 1-indexed");
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>()
                .map_err(|_| Error::Parse(format!("`{tok}` is not a nonnegative integer")))
        })
        .collect()
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

fn n_of(parts: &[usize]) -> usize {
    parts.iter().enumerate().map(|(i, &p)| i * p).sum()
}

/// A partition: weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting zero or increasing parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!(
                "partition {parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length, zero past the last row (1-indexed).
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.row(c.row)
    }

    /// Cells of the Young diagram in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
            .collect()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// `h_{ij} = λ_i + λ'_j - i - j + 1`.
    pub fn hook(&self, c: Cell) -> Result<usize> {
        if !self.contains(c) {
            return Err(Error::CellOutside {
                cell: c,
                shape: self.to_string(),
            });
        }
        let conj = self.conjugate();
        Ok(self.row(c.row) + conj.row(c.col) + 1 - c.row - c.col)
    }

    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells()
            .into_iter()
            .map(|c| self.row(c.row) + conj.row(c.col) + 1 - c.row - c.col)
            .collect()
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> usize {
        n_of(&self.parts)
    }

    pub fn frobenius(&self) -> FrobeniusCoords {
        let conj = self.conjugate();
        let r = (1..=self.length()).take_while(|&i| self.row(i) >= i).count();
        FrobeniusCoords {
            alpha: (1..=r).map(|i| self.row(i) - i).collect(),
            beta: (1..=r).map(|i| conj.row(i) - i).collect(),
        }
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// Frobenius coordinates `(α | β)` of a partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusCoords {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl FrobeniusCoords {
    pub fn new(alpha: Vec<usize>, beta: Vec<usize>) -> Result<Self> {
        let strict = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
        if alpha.len() != beta.len() || !strict(&alpha) || !strict(&beta) {
            return Err(Error::InvalidShape(format!(
                "Frobenius coordinates ({alpha:?} | {beta:?}) need equal-length strictly decreasing arms and legs"
            )));
        }
        Ok(FrobeniusCoords { alpha, beta })
    }

    pub fn rank(&self) -> usize {
        self.alpha.len()
    }

    /// Rebuilds the partition: rows `1..=r` are `α_i + i`, and row `k > r`
    /// counts the diagonal cells whose leg reaches it.
    pub fn to_partition(&self) -> Partition {
        let r = self.rank();
        if r == 0 {
            return Partition::empty();
        }
        let cols: Vec<usize> = (0..r).map(|i| self.beta[i] + i + 1).collect();
        let mut parts: Vec<usize> = (0..r).map(|i| self.alpha[i] + i + 1).collect();
        let depth = cols[0];
        for k in r + 1..=depth {
            parts.push(cols.iter().filter(|&&c| c >= k).count());
        }
        Partition { parts }
    }
}

impl fmt::Display for FrobeniusCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_parts(f, &self.alpha)?;
        f.write_str("|")?;
        write_parts(f, &self.beta)?;
        f.write_str(")")
    }
}

/// A strict partition: strictly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct StrictPartition {
    parts: Vec<usize>,
}

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!(
                "strict partition {parts:?} has a zero part"
            )));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] <= w[1]) {
            return Err(Error::InvalidShape(format!(
                "{parts:?} is not strictly decreasing ({} is followed by {})",
                w[0], w[1]
            )));
        }
        Ok(StrictPartition { parts })
    }

    pub fn empty() -> Self {
        StrictPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Last column of row `i` in the shifted diagram (`i - 1` for empty rows).
    pub fn row_end(&self, i: usize) -> usize {
        self.row(i) + i - 1
    }

    pub fn n_stat(&self) -> usize {
        n_of(&self.parts)
    }

    /// Parity of the length: 0 for even `ℓ(λ)`, 1 for odd.
    pub fn delta(&self) -> usize {
        self.length() % 2
    }

    pub fn as_partition(&self) -> Partition {
        Partition {
            parts: self.parts.clone(),
        }
    }

    /// Membership in the shifted diagram `λ*`.
    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1 && c.row <= self.length() && c.col >= c.row && c.col <= self.row_end(c.row)
    }

    /// Cells of `λ*` in row-major order.
    pub fn shifted_cells(&self) -> Vec<Cell> {
        (1..=self.length())
            .flat_map(|i| (i..=self.row_end(i)).map(move |j| Cell::new(i, j)))
            .collect()
    }

    /// `λ̃ = (λ_1, …, λ_ℓ | λ_1 - 1, …, λ_ℓ - 1)`.
    pub fn double_partition(&self) -> Partition {
        FrobeniusCoords {
            alpha: self.parts.clone(),
            beta: self.parts.iter().map(|p| p - 1).collect(),
        }
        .to_partition()
    }

    /// Shifted hook length `h*_{ij}`, read off `λ̃` at the cell one column
    /// to the right, i.e. `hook(λ̃, (i, j + 1))`.
    pub fn shifted_hook(&self, c: Cell) -> Result<usize> {
        if !self.contains(c) {
            return Err(Error::CellOutside {
                cell: c,
                shape: format!("{}*", self),
            });
        }
        self.double_partition().hook(Cell::new(c.row, c.col + 1))
    }

    /// All `h*_{ij}` in row-major order.
    pub fn shifted_hooks(&self) -> Vec<usize> {
        let dbl = self.double_partition();
        let conj = dbl.conjugate();
        self.shifted_cells()
            .into_iter()
            .map(|c| dbl.row(c.row) + conj.row(c.col + 1) - c.row - c.col)
            .collect()
    }

    /// Contents `c_{ij} = j - i` in row-major order.
    pub fn contents(&self) -> Vec<usize> {
        self.shifted_cells().into_iter().map(content).collect()
    }

    /// Shifted diagrams contained in this one (including `∅` and `self`).
    pub fn subshapes(&self) -> Vec<StrictPartition> {
        fn go(bound: &StrictPartition, i: usize, prev: usize, cur: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
            out.push(StrictPartition { parts: cur.clone() });
            if i > bound.length() {
                return;
            }
            // Row i must sit under row i-1 and inside the bound.
            let hi = bound.row(i).min(prev.saturating_sub(1));
            for p in (1..=hi).rev() {
                cur.push(p);
                go(bound, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(self, 1, usize::MAX, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    pub fn contains_shape(&self, other: &StrictPartition) -> bool {
        other.length() <= self.length() && (1..=other.length()).all(|i| other.row(i) <= self.row(i))
    }
}

impl TryFrom<Vec<usize>> for StrictPartition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        StrictPartition::new(v)
    }
}

impl From<StrictPartition> for Vec<usize> {
    fn from(p: StrictPartition) -> Self {
        p.parts
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = Error;
    fn try_from(p: Partition) -> Result<Self> {
        StrictPartition::new(p.parts)
    }
}

impl FromStr for StrictPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::new(parse_parts(s)?)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// A composition with nonnegative parts. Trailing zeros are kept as given.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn n_stat(&self) -> usize {
        n_of(&self.parts)
    }

    /// Nonzero parts sorted decreasingly.
    pub fn sorted(&self) -> Partition {
        let mut parts: Vec<usize> = self.parts.iter().copied().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Composition::new(parse_parts(s)?))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// `c_{ij} = j - i` for a cell on or above the diagonal.
pub fn content(c: Cell) -> usize {
    debug_assert!(c.col >= c.row, "content is taken on shifted cells");
    c.col - c.row
}

/// `n(v) = Σ (i-1) v_i` for any sequence of parts.
pub fn n_stat(parts: &[usize]) -> usize {
    n_of(parts)
}

/// Partitions of `n` with parts at most `max_part`, reverse-lexicographic.
fn partitions_bounded(n: usize, max_part: usize, strict: bool) -> Vec<Vec<usize>> {
    fn go(n: usize, max_part: usize, strict: bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            cur.push(p);
            go(n - p, if strict { p - 1 } else { p }, strict, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, strict, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `n`, reverse-lexicographic: `(3), (2,1), (1,1,1)`.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n, false)
        .into_iter()
        .map(|parts| Partition { parts })
        .collect()
}

/// All strict partitions of `n`, reverse-lexicographic.
pub fn enumerate_strict(n: usize) -> Vec<StrictPartition> {
    partitions_bounded(n, n, true)
        .into_iter()
        .map(|parts| StrictPartition { parts })
        .collect()
}

/// Strict partitions of every size `0..=max_size`, by size then
/// reverse-lexicographic.
pub fn enumerate_strict_up_to(max_size: usize) -> Vec<StrictPartition> {
    (0..=max_size).flat_map(enumerate_strict).collect()
}

/// Compositions of `n` into at most `max_parts` nonnegative parts with no
/// trailing zero, in reverse-lexicographic order.
pub fn enumerate_compositions(n: usize, max_parts: usize) -> Vec<Composition> {
    enumerate_compositions_with(n, max_parts, usize::MAX)
}

/// As [`enumerate_compositions`], keeping only those with `n(ν) <= max_n_stat`.
///
/// `n(ν)` only grows as parts are appended, so branches are cut as soon as
/// the running statistic passes the bound.
pub fn enumerate_compositions_with(n: usize, max_parts: usize, max_n_stat: usize) -> Vec<Composition> {
    fn go(
        rem: usize,
        idx: usize,
        max_parts: usize,
        stat: usize,
        max_stat: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Composition>,
    ) {
        if rem == 0 {
            out.push(Composition::new(cur.clone()));
            return;
        }
        if idx >= max_parts {
            return;
        }
        for p in (0..=rem).rev() {
            let s = stat + idx * p;
            if s > max_stat {
                continue;
            }
            cur.push(p);
            go(rem - p, idx + 1, max_parts, s, max_stat, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, max_parts, 0, max_n_stat, &mut Vec::new(), &mut out);
    out
}
