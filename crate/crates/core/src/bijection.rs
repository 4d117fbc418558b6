//! The weight-preserving exchange bijection between marked and colored
//! shifted tableaux, in both directions, with replayable traces.
//!
//! Forward: for each letter `k`, the cells holding `k'` are visited top to
//! bottom and each `k'` travels left or up by single-cell swaps until its
//! neighbours no longer force a move. Inverse: for `k` from the largest
//! letter down, unmarked `k` cells are set aside and each `k'` travels
//! right or down, bottom to top.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{Cell, StrictPartition};
use crate::tableaux::{
    validate_colored, validate_marked, ColoredShiftedTableau, MarkedLetter, MarkedShiftedTableau, ShiftedFilling,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Case {
    /// Swap along the row.
    I,
    /// Swap along the column.
    II,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    Forward,
    Inverse,
}

/// One swap of a traveling `k'` with a neighbour.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeStep {
    pub letter: u32,
    pub from: Cell,
    pub to: Cell,
    pub case: Case,
}

/// The swaps performed by one run of [`forward`] or [`inverse`], in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeTrace {
    pub direction: Direction,
    pub steps: Vec<ExchangeStep>,
}

impl ExchangeTrace {
    /// Applies the recorded swaps to `input`.
    pub fn replay(&self, input: &ShiftedFilling<MarkedLetter>) -> Result<ShiftedFilling<MarkedLetter>> {
        let mut grid = input.clone();
        for s in &self.steps {
            let expected = MarkedLetter::marked(s.letter);
            if grid.get(s.from) != Some(&expected) || grid.get(s.to).is_none() {
                return Err(Error::InvalidArgument(format!(
                    "trace step moves {expected} from {} to {}, which does not match the tableau",
                    s.from, s.to
                )));
            }
            grid.swap(s.from, s.to);
        }
        Ok(grid)
    }
}

impl fmt::Display for ExchangeTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            let case = match s.case {
                Case::I => "I",
                Case::II => "II",
            };
            writeln!(f, "{}' {} -> {} (case {case})", s.letter, s.from, s.to)?;
        }
        Ok(())
    }
}

fn letter_at(g: &ShiftedFilling<MarkedLetter>, c: Cell) -> MarkedLetter {
    *g.get(c).expect("cell in shape")
}

fn shadow(x: MarkedLetter, c: Cell) -> i64 {
    x.shadow_at(c)
}

/// Cells of `λ*` whose entries have `|x| <= k`, as a strict partition.
fn sub_shape(g: &ShiftedFilling<MarkedLetter>, k: u32) -> StrictPartition {
    let parts: Vec<usize> = g
        .rows()
        .iter()
        .map(|row| row.iter().filter(|x| x.value() <= k).count())
        .filter(|&n| n > 0)
        .collect();
    StrictPartition::new(parts).expect("letters <= k occupy a shifted subdiagram")
}

fn restrict(g: &ShiftedFilling<MarkedLetter>, k: u32) -> ShiftedFilling<MarkedLetter> {
    let shape = sub_shape(g, k);
    let rows = (1..=shape.length())
        .map(|i| g.rows()[i - 1][..shape.row(i)].to_vec())
        .collect();
    ShiftedFilling::new(shape, rows).expect("restriction matches its shape")
}

/// One forward phase: turns `T_k` into `T^k` in place.
fn forward_phase(g: &mut ShiftedFilling<MarkedLetter>, k: u32, steps: &mut Vec<ExchangeStep>) {
    let kp = MarkedLetter::marked(k);
    let starts: Vec<Cell> = g.entries().filter(|&(_, &x)| x == kp).map(|(c, _)| c).collect();
    for start in starts {
        let mut cur = start;
        loop {
            let (i, j) = (cur.row, cur.col);
            let own = k as i64 - j as i64;
            let b = (j > i).then(|| Cell::new(i, j - 1));
            let c = (i > 1).then(|| Cell::new(i - 1, j));
            let bbar = b.map(|b| shadow(letter_at(g, b), b));
            let cbar = c.map(|c| shadow(letter_at(g, c), c));
            let fires_b = bbar.is_some_and(|v| own < v);
            let fires_c = cbar.is_some_and(|v| own < v);
            if !fires_b && !fires_c {
                break;
            }
            let case = match (bbar, cbar) {
                (Some(vb), Some(vc)) if vb >= vc => Case::I,
                (Some(_), Some(_)) => Case::II,
                (Some(_), None) => Case::I,
                _ => Case::II,
            };
            let to = match case {
                Case::I => b.unwrap(),
                Case::II => c.unwrap(),
            };
            g.swap(cur, to);
            steps.push(ExchangeStep {
                letter: k,
                from: cur,
                to,
                case,
            });
            cur = to;
        }
    }
}

/// One inverse phase: turns `T^k` back into `T_k` in place.
fn inverse_phase(g: &mut ShiftedFilling<MarkedLetter>, k: u32, steps: &mut Vec<ExchangeStep>) {
    let kp = MarkedLetter::marked(k);
    // `T^{k,0}`: entries of value at most k other than unmarked k.
    let present = |g: &ShiftedFilling<MarkedLetter>, c: Cell| g.get(c).is_some_and(|&x| x.value() < k || x == kp);
    let mut starts: Vec<Cell> = g.entries().filter(|&(_, &x)| x == kp).map(|(c, _)| c).collect();
    starts.reverse();
    for start in starts {
        let mut cur = start;
        loop {
            let (i, j) = (cur.row, cur.col);
            let b = Some(Cell::new(i, j + 1)).filter(|&b| present(g, b));
            let c = Some(Cell::new(i + 1, j)).filter(|&c| present(g, c));
            let fires_b = b.is_some_and(|b| kp > letter_at(g, b));
            let fires_c = c.is_some_and(|c| kp > letter_at(g, c));
            if !fires_b && !fires_c {
                break;
            }
            // Only neighbours smaller than k' take part in the comparison.
            let btil = b.filter(|_| fires_b).map(|b| shadow(letter_at(g, b), b));
            let ctil = c.filter(|_| fires_c).map(|c| shadow(letter_at(g, c), c));
            let case = match (btil, ctil) {
                (Some(vb), Some(vc)) if vb <= vc => Case::I,
                (Some(_), Some(_)) => Case::II,
                (Some(_), None) => Case::I,
                _ => Case::II,
            };
            let to = match case {
                Case::I => b.unwrap(),
                Case::II => c.unwrap(),
            };
            g.swap(cur, to);
            steps.push(ExchangeStep {
                letter: k,
                from: cur,
                to,
                case,
            });
            cur = to;
        }
    }
}

fn run_forward(
    t: &MarkedShiftedTableau,
) -> (
    ShiftedFilling<MarkedLetter>,
    Vec<ShiftedFilling<MarkedLetter>>,
    ExchangeTrace,
) {
    let mut g = t.filling().clone();
    let m = g.max_letter();
    let mut steps = Vec::new();
    let mut stages = Vec::with_capacity(m as usize);
    for k in 1..=m {
        forward_phase(&mut g, k, &mut steps);
        stages.push(restrict(&g, k));
    }
    let trace = ExchangeTrace {
        direction: Direction::Forward,
        steps,
    };
    (g, stages, trace)
}

/// Sends a marked shifted tableau to the colored shifted tableau of the
/// same shape and weight.
pub fn forward(t: &MarkedShiftedTableau) -> Result<(ColoredShiftedTableau, ExchangeTrace)> {
    let (g, _, trace) = run_forward(t);
    let c = ColoredShiftedTableau::new(g).map_err(|e| Error::Internal(format!("forward image is not colored: {e}")))?;
    Ok((c, trace))
}

/// The colored tableaux `T^1, …, T^m` of shapes `λ^1 ⊆ … ⊆ λ^m`.
pub fn forward_stages(t: &MarkedShiftedTableau) -> Result<Vec<ColoredShiftedTableau>> {
    let (_, stages, _) = run_forward(t);
    stages
        .into_iter()
        .map(|s| {
            validate_colored(&s).map_err(|v| Error::Internal(format!("intermediate stage is not colored: {v}")))?;
            ColoredShiftedTableau::new(s)
        })
        .collect()
}

/// Sends a colored shifted tableau back to its marked shifted tableau.
pub fn inverse(c: &ColoredShiftedTableau) -> Result<(MarkedShiftedTableau, ExchangeTrace)> {
    let mut g = c.filling().clone();
    let m = g.max_letter();
    let mut steps = Vec::new();
    for k in (1..=m).rev() {
        inverse_phase(&mut g, k, &mut steps);
    }
    validate_marked(&g).map_err(|v| Error::Internal(format!("inverse image is not marked: {v}")))?;
    let t = MarkedShiftedTableau::new(g)?;
    Ok((
        t,
        ExchangeTrace {
            direction: Direction::Inverse,
            steps,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{enumerate_colored, enumerate_marked};
    use std::collections::BTreeSet;

    fn sp(v: &[usize]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    fn marked(shape: &[usize], rows: &[&str]) -> MarkedShiftedTableau {
        let rows = rows
            .iter()
            .map(|r| r.split_whitespace().map(|x| x.parse().unwrap()).collect())
            .collect();
        MarkedShiftedTableau::from_rows(sp(shape), rows).unwrap()
    }

    fn colored(shape: &[usize], rows: &[&str]) -> ColoredShiftedTableau {
        let rows = rows
            .iter()
            .map(|r| r.split_whitespace().map(|x| x.parse().unwrap()).collect())
            .collect();
        ColoredShiftedTableau::from_rows(sp(shape), rows).unwrap()
    }

    #[test]
    fn worked_example_forward_and_back() {
        let t = marked(&[5, 4, 2], &["1' 1 2' 2 2", "2' 2 3' 3", "3' 3"]);
        let t3 = colored(&[5, 4, 2], &["1' 2' 3' 1 2", "2' 2 2 3", "3' 3"]);
        let stages = forward_stages(&t).unwrap();
        assert_eq!(stages.len(), 3);
        assert_eq!(stages[0], colored(&[2], &["1' 1"]));
        assert_eq!(stages[1], colored(&[5, 2], &["1' 2' 1 2 2", "2' 2"]));
        assert_eq!(stages[2], t3);

        let (image, trace) = forward(&t).unwrap();
        assert_eq!(image, t3);
        assert_eq!(trace.replay(t.filling()).unwrap(), *t3.filling());

        let (back, rtrace) = inverse(&t3).unwrap();
        assert_eq!(back, t);
        assert_eq!(rtrace.replay(t3.filling()).unwrap(), *t.filling());
    }

    #[test]
    fn unmarked_tableaux_are_fixed() {
        let t = marked(&[3, 1], &["1 1 2", "3"]);
        let (c, trace) = forward(&t).unwrap();
        assert_eq!(c.filling(), t.filling());
        assert!(trace.steps.is_empty());
        let (b, _) = inverse(&c).unwrap();
        assert_eq!(b, t);
    }

    #[test]
    fn small_shapes_biject() {
        for shape in [sp(&[2, 1]), sp(&[3, 1]), sp(&[3, 2]), sp(&[4, 2, 1])] {
            let ms = enumerate_marked(&shape, 3);
            let images: BTreeSet<String> = ms
                .iter()
                .map(|t| {
                    let (c, _) = forward(t).unwrap();
                    assert_eq!(c.weight(3), t.weight(3));
                    assert_eq!(inverse(&c).unwrap().0, *t);
                    c.to_string()
                })
                .collect();
            let cs: BTreeSet<String> = enumerate_colored(&shape, 3).iter().map(|c| c.to_string()).collect();
            assert_eq!(images.len(), ms.len());
            assert_eq!(images, cs);
        }
    }

    #[test]
    fn bad_trace_is_rejected() {
        let t = marked(&[2], &["1' 1"]);
        let trace = ExchangeTrace {
            direction: Direction::Forward,
            steps: vec![ExchangeStep {
                letter: 1,
                from: Cell::new(1, 2),
                to: Cell::new(1, 1),
                case: Case::I,
            }],
        };
        assert!(trace.replay(t.filling()).is_err());
    }
}
