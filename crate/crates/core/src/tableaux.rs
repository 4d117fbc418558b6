//! Marked shifted tableaux, colored shifted tableaux, shifted reverse plane
//! tableaux and standard shifted tableaux: validation, enumeration and the
//! text/JSON formats.
//!
//! All fillings share one layout, [`ShiftedFilling`]: row `i` (1-indexed)
//! of a shape `λ` holds `λ_i` entries for the cells `(i, i) … (i, λ_i+i-1)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Cell, Composition, StrictPartition};

/// A letter of the alphabet `1' < 1 < 2' < 2 < …`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MarkedLetter {
    value: u32,
    marked: bool,
}

impl MarkedLetter {
    pub fn new(value: u32, marked: bool) -> Self {
        assert!(value >= 1, "letters start at 1");
        MarkedLetter { value, marked }
    }

    pub fn marked(value: u32) -> Self {
        Self::new(value, true)
    }

    pub fn unmarked(value: u32) -> Self {
        Self::new(value, false)
    }

    /// `|a|`.
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn is_marked(self) -> bool {
        self.marked
    }

    /// Position in the alphabet: `1' ↦ 1, 1 ↦ 2, 2' ↦ 3, …`.
    pub fn code(self) -> u32 {
        2 * self.value - u32::from(self.marked)
    }

    pub fn from_code(code: u32) -> Self {
        assert!(code >= 1);
        MarkedLetter {
            value: code.div_ceil(2),
            marked: code % 2 == 1,
        }
    }

    /// The colored-tableau shadow `|a| - j` (marked) or `|a| - i` (unmarked)
    /// of this letter sitting at `cell`.
    pub fn shadow_at(self, cell: Cell) -> i64 {
        let pos = if self.marked { cell.col } else { cell.row };
        self.value as i64 - pos as i64
    }
}

impl Ord for MarkedLetter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.code().cmp(&other.code())
    }
}

impl PartialOrd for MarkedLetter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MarkedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.marked {
            write!(f, "{}'", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

impl FromStr for MarkedLetter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (digits, marked) = match s.strip_suffix('\'').or_else(|| s.strip_suffix('′')) {
            Some(d) => (d, true),
            None => (s, false),
        };
        let value: u32 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("`{s}` is not a letter like 3 or 3'")))?;
        if value == 0 {
            return Err(Error::Parse("letters start at 1".into()));
        }
        Ok(MarkedLetter { value, marked })
    }
}

impl Serialize for MarkedLetter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MarkedLetter {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An assignment of entries to the cells of a shifted diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FillingRepr<E>", bound(deserialize = "E: Deserialize<'de>"))]
pub struct ShiftedFilling<E> {
    shape: StrictPartition,
    rows: Vec<Vec<E>>,
}

#[derive(Deserialize)]
struct FillingRepr<E> {
    shape: StrictPartition,
    rows: Vec<Vec<E>>,
}

impl<E> TryFrom<FillingRepr<E>> for ShiftedFilling<E> {
    type Error = Error;
    fn try_from(r: FillingRepr<E>) -> Result<Self> {
        ShiftedFilling::new(r.shape, r.rows)
    }
}

impl<E> ShiftedFilling<E> {
    /// Checks that row `i` has exactly `λ_i` entries.
    pub fn new(shape: StrictPartition, rows: Vec<Vec<E>>) -> Result<Self> {
        if rows.len() != shape.length() {
            return Err(Error::InvalidTableau(format!(
                "shape {shape} has {} rows but {} were given",
                shape.length(),
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.row(i + 1) {
                return Err(Error::InvalidTableau(format!(
                    "row {} of shape {shape} needs {} entries, got {}",
                    i + 1,
                    shape.row(i + 1),
                    row.len()
                )));
            }
        }
        Ok(ShiftedFilling { shape, rows })
    }

    pub fn shape(&self) -> &StrictPartition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<E>] {
        &self.rows
    }

    pub fn get(&self, c: Cell) -> Option<&E> {
        if !self.shape.contains(c) {
            return None;
        }
        Some(&self.rows[c.row - 1][c.col - c.row])
    }

    pub fn set(&mut self, c: Cell, e: E) {
        assert!(self.shape.contains(c), "cell {c} outside {}*", self.shape);
        self.rows[c.row - 1][c.col - c.row] = e;
    }

    pub fn swap(&mut self, a: Cell, b: Cell)
    where
        E: Clone,
    {
        let ea = self.get(a).expect("cell in shape").clone();
        let eb = self.get(b).expect("cell in shape").clone();
        self.set(a, eb);
        self.set(b, ea);
    }

    /// `(cell, entry)` pairs in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, &E)> {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(k, e)| (Cell::new(i + 1, i + 1 + k), e))
        })
    }

    pub fn map<F, T>(&self, mut f: F) -> ShiftedFilling<T>
    where
        F: FnMut(Cell, &E) -> T,
    {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(k, e)| f(Cell::new(i + 1, i + 1 + k), e))
                    .collect()
            })
            .collect();
        ShiftedFilling {
            shape: self.shape.clone(),
            rows,
        }
    }
}

impl<E: fmt::Display> ShiftedFilling<E> {
    /// One row per line, entries right-aligned to a common width and each
    /// row indented by its shift.
    pub fn to_text(&self) -> String {
        let width = self
            .entries()
            .map(|(_, e)| e.to_string().chars().count())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for (i, row) in self.rows.iter().enumerate() {
            out.push_str(&" ".repeat(i * (width + 1)));
            let cells: Vec<String> = row.iter().map(|e| format!("{:>width$}", e.to_string())).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

impl<E: FromStr<Err = Error>> ShiftedFilling<E> {
    /// Parses the text format; the shape is read off the row lengths.
    pub fn parse_text(text: &str) -> Result<Self> {
        let rows: Vec<Vec<E>> = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split_whitespace().map(str::parse).collect::<Result<Vec<E>>>())
            .collect::<Result<_>>()?;
        let shape = StrictPartition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::Parse(format!("row lengths do not form a strict partition: {e}")))?;
        ShiftedFilling::new(shape, rows)
    }
}

impl<E: fmt::Display> fmt::Display for ShiftedFilling<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl ShiftedFilling<MarkedLetter> {
    /// `(α_1, …, α_m)` where `α_k` counts cells with `|entry| = k`.
    pub fn weight(&self, max_letter: usize) -> Composition {
        let top = self
            .entries()
            .map(|(_, e)| e.value() as usize)
            .max()
            .unwrap_or(0)
            .max(max_letter);
        let mut w = vec![0; top];
        for (_, e) in self.entries() {
            w[e.value() as usize - 1] += 1;
        }
        Composition::new(w)
    }

    /// `Σ_k k α_k`.
    pub fn degree(&self) -> usize {
        self.entries().map(|(_, e)| e.value() as usize).sum()
    }

    pub fn max_letter(&self) -> u32 {
        self.entries().map(|(_, e)| e.value()).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("filling serializes")
    }
}

/// Which defining condition a filling breaks, and where.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    /// Letters weakly increase along rows and columns.
    M1,
    /// Unmarked letters strictly increase down columns.
    M2,
    /// Marked letters strictly increase along rows.
    M3,
    /// The colored shadow is negative.
    ShadowNegative,
    /// The (shadow) reverse plane tableau decreases along a row.
    RowDecrease,
    /// The (shadow) reverse plane tableau decreases down a column.
    ColumnDecrease,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    pub cell: Cell,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.condition {
            Condition::M1 => "(M1) letters must weakly increase along rows and columns",
            Condition::M2 => "(M2) unmarked letters must strictly increase down columns",
            Condition::M3 => "(M3) marked letters must strictly increase along rows",
            Condition::ShadowNegative => "colored shadow must be nonnegative",
            Condition::RowDecrease => "entries must weakly increase along rows",
            Condition::ColumnDecrease => "entries must weakly increase down columns",
        };
        write!(f, "{what} (at cell {})", self.cell)
    }
}

fn left_of(c: Cell) -> Option<Cell> {
    (c.col > c.row).then(|| Cell::new(c.row, c.col - 1))
}

fn above(c: Cell) -> Option<Cell> {
    (c.row > 1).then(|| Cell::new(c.row - 1, c.col))
}

/// First violation of (M1)–(M3), scanning row-major.
pub fn validate_marked(t: &ShiftedFilling<MarkedLetter>) -> std::result::Result<(), Violation> {
    for (c, &x) in t.entries() {
        if let Some(&l) = left_of(c).and_then(|l| t.get(l)) {
            if x < l {
                return Err(Violation {
                    condition: Condition::M1,
                    cell: c,
                });
            }
            if x == l && x.is_marked() {
                return Err(Violation {
                    condition: Condition::M3,
                    cell: c,
                });
            }
        }
        if let Some(&u) = above(c).and_then(|u| t.get(u)) {
            if x < u {
                return Err(Violation {
                    condition: Condition::M1,
                    cell: c,
                });
            }
            if x == u && !x.is_marked() {
                return Err(Violation {
                    condition: Condition::M2,
                    cell: c,
                });
            }
        }
    }
    Ok(())
}

/// First violation of the reverse-plane-tableau conditions.
pub fn validate_rpt<E: Copy + Into<i64>>(s: &ShiftedFilling<E>) -> std::result::Result<(), Violation> {
    for (c, &x) in s.entries() {
        let x: i64 = x.into();
        if x < 0 {
            return Err(Violation {
                condition: Condition::ShadowNegative,
                cell: c,
            });
        }
        if let Some(&l) = left_of(c).and_then(|l| s.get(l)) {
            if x < l.into() {
                return Err(Violation {
                    condition: Condition::RowDecrease,
                    cell: c,
                });
            }
        }
        if let Some(&u) = above(c).and_then(|u| s.get(u)) {
            if x < u.into() {
                return Err(Violation {
                    condition: Condition::ColumnDecrease,
                    cell: c,
                });
            }
        }
    }
    Ok(())
}

/// The shadow `C̄` of a colored filling.
pub fn colored_shadow(c: &ShiftedFilling<MarkedLetter>) -> ShiftedFilling<i64> {
    c.map(|cell, &x| x.shadow_at(cell))
}

/// A filling is colored when its shadow is a shifted reverse plane tableau.
pub fn validate_colored(c: &ShiftedFilling<MarkedLetter>) -> std::result::Result<(), Violation> {
    validate_rpt(&colored_shadow(c))
}

macro_rules! tableau_newtype {
    ($(#[$doc:meta])* $name:ident, $entry:ty, $check:path) => {
        $(#[$doc])*
        #[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
        #[serde(transparent)]
        pub struct $name(ShiftedFilling<$entry>);

        impl $name {
            pub fn new(filling: ShiftedFilling<$entry>) -> Result<Self> {
                $check(&filling).map_err(|v| Error::InvalidTableau(v.to_string()))?;
                Ok($name(filling))
            }

            pub fn from_rows(shape: StrictPartition, rows: Vec<Vec<$entry>>) -> Result<Self> {
                Self::new(ShiftedFilling::new(shape, rows)?)
            }

            pub fn filling(&self) -> &ShiftedFilling<$entry> {
                &self.0
            }

            pub fn into_filling(self) -> ShiftedFilling<$entry> {
                self.0
            }

            pub fn shape(&self) -> &StrictPartition {
                self.0.shape()
            }

            pub fn get(&self, c: Cell) -> Option<&$entry> {
                self.0.get(c)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(&self.0, f)
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let f = ShiftedFilling::<$entry>::deserialize(d)?;
                $name::new(f).map_err(serde::de::Error::custom)
            }
        }
    };
}

tableau_newtype!(
    /// A filling of `λ*` by `1' < 1 < 2' < …` satisfying (M1)–(M3).
    MarkedShiftedTableau,
    MarkedLetter,
    validate_marked
);
tableau_newtype!(
    /// A filling of `λ*` by marked and unmarked letters whose shadow
    /// `|C(i,j)| - j` (marked) / `|C(i,j)| - i` (unmarked) is a shifted
    /// reverse plane tableau.
    ColoredShiftedTableau,
    MarkedLetter,
    validate_colored
);
tableau_newtype!(
    /// A weakly increasing filling of `λ*` by nonnegative integers.
    ShiftedRpt,
    u32,
    validate_rpt_u32
);

fn validate_rpt_u32(s: &ShiftedFilling<u32>) -> std::result::Result<(), Violation> {
    validate_rpt(&s.map(|_, &x| i64::from(x)))
}

struct RptEntry(u32);

impl FromStr for RptEntry {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.parse::<u32>()
            .map(RptEntry)
            .map_err(|_| Error::Parse(format!("`{s}` is not a nonnegative integer")))
    }
}

impl ShiftedRpt {
    pub fn total(&self) -> u64 {
        self.0.entries().map(|(_, &x)| u64::from(x)).sum()
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let f = ShiftedFilling::<RptEntry>::parse_text(text)?;
        Self::new(f.map(|_, e| e.0))
    }
}

impl MarkedShiftedTableau {
    pub fn weight(&self, max_letter: usize) -> Composition {
        self.0.weight(max_letter)
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        Self::new(ShiftedFilling::parse_text(text)?)
    }
}

impl ColoredShiftedTableau {
    pub fn weight(&self, max_letter: usize) -> Composition {
        self.0.weight(max_letter)
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    pub fn shadow(&self) -> ShiftedRpt {
        ShiftedRpt(self.0.map(|c, &x| x.shadow_at(c) as u32))
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        Self::new(ShiftedFilling::parse_text(text)?)
    }
}

/// Row-major cell list with neighbor indices, shared by the backtrackers.
struct Grid {
    cells: Vec<Cell>,
    left: Vec<Option<usize>>,
    up: Vec<Option<usize>>,
    /// `floor_after[k]`: least total cost of cells `k..`, as a letter in
    /// row `i` is at least `i`.
    floor_after: Vec<usize>,
}

impl Grid {
    fn new(shape: &StrictPartition) -> Self {
        let cells = shape.shifted_cells();
        let index = |c: Cell| cells.iter().position(|&d| d == c);
        let left = cells.iter().map(|&c| left_of(c).and_then(index)).collect();
        let up = cells.iter().map(|&c| above(c).and_then(index)).collect();
        let mut floor_after = vec![0; cells.len() + 1];
        for k in (0..cells.len()).rev() {
            floor_after[k] = floor_after[k + 1] + cells[k].row - 1;
        }
        Grid {
            cells,
            left,
            up,
            floor_after,
        }
    }

    fn to_filling<E: Clone>(&self, shape: &StrictPartition, flat: &[E]) -> ShiftedFilling<E> {
        let mut rows: Vec<Vec<E>> = Vec::with_capacity(shape.length());
        let mut k = 0;
        for i in 1..=shape.length() {
            rows.push(flat[k..k + shape.row(i)].to_vec());
            k += shape.row(i);
        }
        ShiftedFilling {
            shape: shape.clone(),
            rows,
        }
    }
}

/// Visits every marked shifted tableau of `shape` with letters at most
/// `max_letter` and `Σ (|T(c)| - 1) <= budget`, in row-major lexicographic
/// order of the alphabet codes. The visitor receives the flat row-major
/// entries.
pub fn visit_marked(shape: &StrictPartition, max_letter: u32, budget: usize, mut visit: impl FnMut(&[MarkedLetter])) {
    let grid = Grid::new(shape);
    let mut flat = vec![MarkedLetter::unmarked(1); grid.cells.len()];
    fn go(
        g: &Grid,
        k: usize,
        top: u32,
        budget: usize,
        flat: &mut Vec<MarkedLetter>,
        visit: &mut dyn FnMut(&[MarkedLetter]),
    ) {
        if k == g.cells.len() {
            visit(flat);
            return;
        }
        let left = g.left[k].map(|i| flat[i]);
        let up = g.up[k].map(|i| flat[i]);
        let lo = left.map_or(1, |l| l.code()).max(up.map_or(1, |u| u.code()));
        for code in lo..=2 * top {
            let x = MarkedLetter::from_code(code);
            let cost = (x.value() - 1) as usize;
            if cost + g.floor_after[k + 1] > budget {
                break;
            }
            if x.is_marked() && left == Some(x) {
                continue;
            }
            if !x.is_marked() && up == Some(x) {
                continue;
            }
            flat[k] = x;
            go(g, k + 1, top, budget - cost, flat, visit);
        }
    }
    go(&grid, 0, max_letter, budget, &mut flat, &mut visit);
}

/// Visits every colored shifted tableau of `shape` with letters at most
/// `max_letter` and `Σ (|C(c)| - 1) <= budget`.
pub fn visit_colored(shape: &StrictPartition, max_letter: u32, budget: usize, mut visit: impl FnMut(&[MarkedLetter])) {
    let grid = Grid::new(shape);
    let mut flat = vec![MarkedLetter::unmarked(1); grid.cells.len()];
    let mut shadow = vec![0i64; grid.cells.len()];
    #[allow(clippy::too_many_arguments)]
    fn go(
        g: &Grid,
        k: usize,
        top: u32,
        budget: usize,
        flat: &mut Vec<MarkedLetter>,
        shadow: &mut Vec<i64>,
        visit: &mut dyn FnMut(&[MarkedLetter]),
    ) {
        if k == g.cells.len() {
            visit(flat);
            return;
        }
        let cell = g.cells[k];
        let floor = g.left[k].map_or(0, |i| shadow[i]).max(g.up[k].map_or(0, |i| shadow[i]));
        for code in 1..=2 * top {
            let x = MarkedLetter::from_code(code);
            let cost = (x.value() - 1) as usize;
            if cost + g.floor_after[k + 1] > budget {
                break;
            }
            let sh = x.shadow_at(cell);
            if sh < floor {
                continue;
            }
            flat[k] = x;
            shadow[k] = sh;
            go(g, k + 1, top, budget - cost, flat, shadow, visit);
        }
    }
    go(&grid, 0, max_letter, budget, &mut flat, &mut shadow, &mut visit);
}

/// All marked shifted tableaux of `shape` with letters `<= max_letter`.
pub fn enumerate_marked(shape: &StrictPartition, max_letter: u32) -> Vec<MarkedShiftedTableau> {
    let grid = Grid::new(shape);
    let mut out = Vec::new();
    visit_marked(shape, max_letter, usize::MAX, |flat| {
        out.push(MarkedShiftedTableau(grid.to_filling(shape, flat)));
    });
    out
}

/// All colored shifted tableaux of `shape` with letters `<= max_letter`.
pub fn enumerate_colored(shape: &StrictPartition, max_letter: u32) -> Vec<ColoredShiftedTableau> {
    let grid = Grid::new(shape);
    let mut out = Vec::new();
    visit_colored(shape, max_letter, usize::MAX, |flat| {
        out.push(ColoredShiftedTableau(grid.to_filling(shape, flat)));
    });
    out
}

/// `(shape, max_letter, budget, visit)`.
type Visitor = fn(&StrictPartition, u32, usize, &mut dyn FnMut(&[MarkedLetter]));

/// `counts[d]` = number of tableaux with `Σ (|x| - 1) = d`, for `d < trunc`.
fn degree_counts(shape: &StrictPartition, trunc: usize, visitor: Visitor) -> Vec<u64> {
    let mut counts = vec![0u64; trunc];
    if trunc == 0 {
        return counts;
    }
    // A cell holding letter k costs k - 1, so letters above `trunc` never fit.
    visitor(shape, trunc as u32, trunc - 1, &mut |flat| {
        let d: usize = flat.iter().map(|x| (x.value() - 1) as usize).sum();
        counts[d] += 1;
    });
    counts
}

/// Marked tableaux of `shape` counted by `|T| - |λ|`, below `trunc`.
pub fn marked_degree_counts(shape: &StrictPartition, trunc: usize) -> Vec<u64> {
    degree_counts(shape, trunc, |s, m, b, v| visit_marked(s, m, b, v))
}

/// Colored tableaux of `shape` counted by `|C| - |λ|`, below `trunc`.
pub fn colored_degree_counts(shape: &StrictPartition, trunc: usize) -> Vec<u64> {
    degree_counts(shape, trunc, |s, m, b, v| visit_colored(s, m, b, v))
}

/// Shifted reverse plane tableaux with `|S| <= max_total`.
pub fn enumerate_rpt(shape: &StrictPartition, max_total: u32) -> Vec<ShiftedRpt> {
    let grid = Grid::new(shape);
    let mut flat = vec![0u32; grid.cells.len()];
    let mut out = Vec::new();
    fn go(g: &Grid, shape: &StrictPartition, k: usize, budget: u32, flat: &mut Vec<u32>, out: &mut Vec<ShiftedRpt>) {
        if k == g.cells.len() {
            out.push(ShiftedRpt(g.to_filling(shape, flat)));
            return;
        }
        let lo = g.left[k].map_or(0, |i| flat[i]).max(g.up[k].map_or(0, |i| flat[i]));
        for x in lo..=budget {
            flat[k] = x;
            go(g, shape, k + 1, budget - x, flat, out);
        }
    }
    go(&grid, shape, 0, max_total, &mut flat, &mut out);
    out
}

/// Reverse plane tableaux counted by `|S|`, below `trunc`.
pub fn rpt_degree_counts(shape: &StrictPartition, trunc: usize) -> Vec<u64> {
    let mut counts = vec![0u64; trunc];
    if trunc == 0 {
        return counts;
    }
    for s in enumerate_rpt(shape, (trunc - 1) as u32) {
        counts[s.total() as usize] += 1;
    }
    counts
}

/// The number of standard shifted tableaux, computed twice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardCount {
    /// Fillings by `1..=n` built one entry at a time.
    pub enumerated: BigUint,
    /// `n! / Π h*`.
    pub hook_formula: BigUint,
}

/// Counts standard shifted tableaux of `shape` by enumeration and by the
/// shifted hook formula, failing if they differ.
pub fn count_standard_shifted(shape: &StrictPartition) -> Result<StandardCount> {
    // Entry k goes into a cell whose left and upper neighbours (inside λ*)
    // already hold smaller entries.
    fn go(shape: &StrictPartition, filled: &mut Vec<usize>, placed: usize, n: usize) -> BigUint {
        if placed == n {
            return BigUint::one();
        }
        let mut total = BigUint::zero();
        for i in 1..=shape.length() {
            let len = filled[i - 1];
            if len == shape.row(i) {
                continue;
            }
            // Next cell of row i is (i, i + len); its upper neighbour is
            // (i-1, i + len), filled once row i-1 has more than len + 1 cells.
            let above_ok = i == 1 || filled[i - 2] > len + 1;
            if above_ok {
                filled[i - 1] += 1;
                total += go(shape, filled, placed + 1, n);
                filled[i - 1] -= 1;
            }
        }
        total
    }
    let n = shape.size();
    let enumerated = go(shape, &mut vec![0; shape.length()], 0, n);
    let factorial: BigUint = (1..=n as u64).fold(BigUint::one(), |a, k| a * k);
    let hook_product: BigUint = shape
        .shifted_hooks()
        .into_iter()
        .fold(BigUint::one(), |a, h| a * h as u64);
    if (&factorial % &hook_product) != BigUint::zero() {
        return Err(Error::Internal(format!("n!/Πh* is not an integer for {shape}")));
    }
    let hook_formula = factorial / hook_product;
    if hook_formula != enumerated {
        return Err(Error::Internal(format!(
            "standard shifted tableaux of {shape}: enumerated {enumerated}, hook formula {hook_formula}"
        )));
    }
    Ok(StandardCount {
        enumerated,
        hook_formula,
    })
}

/// One letter-step of a marked tableau: the cells of `outer* / inner*`
/// all carry `k'` or `k`, and `markings` counts the admissible ways to
/// choose which of them are marked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripTransition {
    pub inner: StrictPartition,
    pub outer: StrictPartition,
    pub cells: usize,
    pub markings: u64,
}

/// Every `(inner ⊆ outer ⊆ shape)` pair with a nonzero number of valid
/// `{k', k}` fillings of the skew cells, counted by trying all markings
/// against (M1)–(M3). Pairs with `inner == outer` (letter unused) are
/// included with `markings = 1`.
pub fn marked_strip_transitions(shape: &StrictPartition) -> Vec<StripTransition> {
    let subs = shape.subshapes();
    let mut out = Vec::new();
    for outer in &subs {
        for inner in &subs {
            if !outer.contains_shape(inner) {
                continue;
            }
            let cells: Vec<Cell> = outer
                .shifted_cells()
                .into_iter()
                .filter(|&c| !inner.contains(c))
                .collect();
            let markings = count_strip_markings(&cells);
            if markings > 0 {
                out.push(StripTransition {
                    inner: inner.clone(),
                    outer: outer.clone(),
                    cells: cells.len(),
                    markings,
                });
            }
        }
    }
    out
}

fn count_strip_markings(cells: &[Cell]) -> u64 {
    let n = cells.len();
    assert!(n < 64);
    let idx = |c: Cell| cells.iter().position(|&d| d == c);
    let mut count = 0;
    for mask in 0u64..(1 << n) {
        let letter = |i: usize| {
            if mask >> i & 1 == 1 {
                MarkedLetter::marked(2)
            } else {
                MarkedLetter::unmarked(2)
            }
        };
        let ok = cells.iter().enumerate().all(|(i, &c)| {
            let x = letter(i);
            let row_ok = left_of(c).and_then(idx).is_none_or(|j| {
                let l = letter(j);
                x >= l && !(x == l && x.is_marked())
            });
            let col_ok = above(c).and_then(idx).is_none_or(|j| {
                let u = letter(j);
                x >= u && !(x == u && !x.is_marked())
            });
            row_ok && col_ok
        });
        if ok {
            count += 1;
        }
    }
    count
}
