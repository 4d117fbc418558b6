//! Classical graded multiplicities for the symmetric group: Kirillov's
//! hook formula, the Kirillov–Pak bi-graded formula and Solomon's formula,
//! with a semistandard-tableau oracle.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::partitions::{Cell, Partition};
use crate::series::{rat, BiSeries, Series};

fn inv(k: usize, trunc: usize) -> Series {
    Series::inv_one_minus(k, trunc).expect("hooks are positive")
}

/// `t^{n(λ)} / Π (1 - t^{h})`.
pub fn kirillov_series(lambda: &Partition, trunc: usize) -> Series {
    lambda
        .hooks()
        .into_iter()
        .fold(Series::monomial(rat(1), lambda.n_stat(), trunc), |acc, h| {
            acc.mul_series(&inv(h, trunc))
        })
}

/// `Σ_T t^{Σ (T(c) - 1)}` over semistandard tableaux of shape `λ`, i.e.
/// `s_λ(1, t, t², …)`. Entries above `trunc` cost at least `t^{trunc}` and
/// are never placed.
pub fn schur_principal(lambda: &Partition, trunc: usize) -> Series {
    let mut counts = vec![0u64; trunc];
    if trunc > 0 {
        let cells = lambda.cells();
        // An entry in row i is at least i.
        let mut floor_after = vec![0usize; cells.len() + 1];
        for k in (0..cells.len()).rev() {
            floor_after[k] = floor_after[k + 1] + cells[k].row - 1;
        }
        let mut grid: Vec<Vec<usize>> = lambda.parts().iter().map(|&p| vec![0; p]).collect();
        ssyt_visit(&cells, &floor_after, 0, 0, trunc - 1, &mut grid, &mut counts);
    }
    Series::from_counts(&counts, trunc)
}

fn ssyt_visit(
    cells: &[Cell],
    floor_after: &[usize],
    k: usize,
    cost: usize,
    budget: usize,
    grid: &mut Vec<Vec<usize>>,
    counts: &mut [u64],
) {
    if k == cells.len() {
        counts[cost] += 1;
        return;
    }
    let Cell { row: i, col: j } = cells[k];
    let left = if j > 1 { grid[i - 1][j - 2] } else { 1 };
    let up = if i > 1 { grid[i - 2][j - 1] + 1 } else { 1 };
    let mut v = left.max(up);
    while cost + (v - 1) + floor_after[k + 1] <= budget {
        grid[i - 1][j - 1] = v;
        ssyt_visit(cells, floor_after, k + 1, cost + v - 1, budget, grid, counts);
        v += 1;
    }
}

/// `Π (t^{i-1} + s t^{j-1}) / Π (1 - t^{h})` over the cells of `λ`.
pub fn kirillov_pak(lambda: &Partition, trunc: usize) -> BiSeries {
    let sdeg = lambda.size();
    let mut num = BiSeries::one(sdeg, trunc);
    for c in lambda.cells() {
        let mut factor = BiSeries::monomial(rat(1), 0, c.row - 1, sdeg, trunc);
        factor.add_shifted(&BiSeries::one(sdeg, trunc), &rat(1), 1, c.col - 1);
        num = num.mul_bs(&factor);
    }
    let den = lambda
        .hooks()
        .into_iter()
        .fold(Series::one(trunc), |acc, h| acc.mul_series(&inv(h, trunc)));
    num.mul_series(&den)
}

/// `(1+s)(1+st)⋯(1+st^{n-1}) / ((1-t)(1-t²)⋯(1-t^n))`.
pub fn solomon_series(n: usize, trunc: usize) -> BiSeries {
    let mut out = BiSeries::one(n, trunc);
    for k in 0..n {
        let mut factor = BiSeries::one(n, trunc);
        factor.add_shifted(&BiSeries::one(n, trunc), &rat(1), 1, k);
        out = out.mul_bs(&factor);
    }
    let den = (1..=n).fold(Series::one(trunc), |acc, k| acc.mul_series(&inv(k, trunc)));
    out.mul_series(&den)
}

/// Exact polynomial in `s` and `t`, allowing negative `t`-exponents, keyed
/// by `(s-degree, t-degree)`.
type Laurent = BTreeMap<(usize, i64), BigInt>;

fn laurent_mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (&(qa, pa), ca) in a {
        for (&(qb, pb), cb) in b {
            *out.entry((qa + qb, pa + pb)).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != BigInt::from(0));
    out
}

fn binomial(terms: [((usize, i64), i64); 2]) -> Laurent {
    let mut out = Laurent::new();
    for (k, c) in terms {
        *out.entry(k).or_default() += c;
    }
    out
}

/// `Π (t^{i-1} + s t^{j-1})` against `t^{n(λ)} Π (1 + s t^{j-i})`, the
/// latter multiplied out with signed `t`-exponents.
pub fn numerator_identity(lambda: &Partition) -> bool {
    let one = Laurent::from([((0, 0), BigInt::from(1))]);
    let cells = lambda.cells();
    let lhs = cells.iter().fold(one.clone(), |acc, c| {
        laurent_mul(
            &acc,
            &binomial([((0, c.row as i64 - 1), 1), ((1, c.col as i64 - 1), 1)]),
        )
    });
    let start = Laurent::from([((0, lambda.n_stat() as i64), BigInt::from(1))]);
    let rhs = cells.iter().fold(start, |acc, c| {
        laurent_mul(&acc, &binomial([((0, 0), 1), ((1, c.col as i64 - c.row as i64), 1)]))
    });
    lhs == rhs
}
