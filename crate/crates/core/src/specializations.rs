//! Principal and bi-graded specializations of `Q_λ`.
//!
//! `Q_λ(t•) = Q_λ(1, t, t², …)` is computed three ways: the shifted hook
//! product, the product over pairs of rows, and explicit sums over marked
//! and colored shifted tableaux. `Q_λ(t•; st•)` has no closed form and is
//! computed only as a truncated tableau sum.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::partitions::StrictPartition;
use crate::qfunctions::schur_q_tableau;
use crate::series::{pow2, rat, BiSeries, Rational, Series};
use crate::tableaux::{colored_degree_counts, enumerate_marked, marked_degree_counts, marked_strip_transitions};

/// `(1 - t^k)^{-1}`; `k >= 1` always holds for hooks and row lengths.
fn inv(k: usize, trunc: usize) -> Series {
    Series::inv_one_minus(k, trunc).expect("positive exponent")
}

/// `1 + t^k`.
fn one_plus(k: usize, trunc: usize) -> Series {
    Series::sum_of_powers(&[0, k], trunc)
}

/// `1 - t^k`.
fn one_minus(k: usize, trunc: usize) -> Series {
    &Series::one(trunc) - &Series::monomial(rat(1), k, trunc)
}

/// `t^{n(λ)} Π (1 + t^{c}) / Π (1 - t^{h*})` over the cells of `λ*`.
pub fn q_principal_hook(lambda: &StrictPartition, trunc: usize) -> Series {
    let mut out = Series::monomial(rat(1), lambda.n_stat(), trunc);
    for c in lambda.contents() {
        out = out.mul_series(&one_plus(c, trunc));
    }
    for h in lambda.shifted_hooks() {
        out = out.mul_series(&inv(h, trunc));
    }
    out
}

/// `Π_i (-1;t)_{λ_i}/(t;t)_{λ_i} · Π_{i<j} (t^{λ_j} - t^{λ_i})/(1 - t^{λ_i+λ_j})`.
pub fn q_principal_rosengren(lambda: &StrictPartition, trunc: usize) -> Series {
    let parts = lambda.parts();
    let mut out = Series::one(trunc);
    for &p in parts {
        for r in 0..p {
            out = out.mul_series(&one_plus(r, trunc));
            out = out.mul_series(&inv(r + 1, trunc));
        }
    }
    for (i, &a) in parts.iter().enumerate() {
        for &b in &parts[i + 1..] {
            // t^b - t^a = t^b (1 - t^{a-b})
            let diff = one_minus(a - b, trunc).shift(b);
            out = out.mul_series(&diff).mul_series(&inv(a + b, trunc));
        }
    }
    out
}

/// `Σ_T t^{|T| - |λ|}` over marked shifted tableaux, checked against the
/// same sum over colored shifted tableaux.
///
/// A letter `k` costs `t^{k-1}`, so letters above `trunc` only contribute
/// past the truncation and the enumeration stops there.
pub fn q_principal_tableau(lambda: &StrictPartition, trunc: usize) -> Result<Series> {
    let marked = marked_degree_counts(lambda, trunc);
    let colored = colored_degree_counts(lambda, trunc);
    if marked != colored {
        return Err(Error::Internal(format!(
            "marked and colored tableau counts of {lambda} differ: {marked:?} vs {colored:?}"
        )));
    }
    Ok(Series::from_counts(&marked, trunc))
}

/// `Π 1/(1 - t^{h*})` against `Π_i 1/(t;t)_{λ_i} · Π_{i<j} (1 - t^{λ_i-λ_j})/(1 - t^{λ_i+λ_j})`.
pub fn shifted_hook_factorization_check(lambda: &StrictPartition, trunc: usize) -> bool {
    let lhs = Series::product(
        &lambda
            .shifted_hooks()
            .into_iter()
            .map(|h| inv(h, trunc))
            .collect::<Vec<_>>(),
        trunc,
    );
    let parts = lambda.parts();
    let mut rhs = Series::one(trunc);
    for &p in parts {
        for r in 1..=p {
            rhs = rhs.mul_series(&inv(r, trunc));
        }
    }
    for (i, &a) in parts.iter().enumerate() {
        for &b in &parts[i + 1..] {
            rhs = rhs.mul_series(&one_minus(a - b, trunc)).mul_series(&inv(a + b, trunc));
        }
    }
    lhs == rhs
}

/// `Q_λ(1, t, …, t^{M-1}; s, st, …, st^{M-1})` with `M = trunc`, as a
/// tableau sum accumulated letter by letter over the chain of subshapes.
/// The `t`-alphabet letters come first.
pub fn q_bigraded(lambda: &StrictPartition, trunc: usize) -> BiSeries {
    let letters: Vec<(usize, usize)> = (0..trunc).map(|p| (0, p)).chain((0..trunc).map(|p| (1, p))).collect();
    q_bigraded_with_order(lambda, trunc, &letters)
}

/// As [`q_bigraded`], visiting the letters `s^q t^p` in the given order.
pub fn q_bigraded_with_order(lambda: &StrictPartition, trunc: usize, letters: &[(usize, usize)]) -> BiSeries {
    let sdeg = lambda.size();
    let transitions = marked_strip_transitions(lambda);
    let mut states: HashMap<StrictPartition, BiSeries> = HashMap::new();
    states.insert(StrictPartition::empty(), BiSeries::one(sdeg, trunc));
    for &(q, p) in letters {
        let mut next: HashMap<StrictPartition, BiSeries> = HashMap::new();
        for tr in &transitions {
            let Some(from) = states.get(&tr.inner) else { continue };
            let (dq, dp) = (q * tr.cells, p * tr.cells);
            if dq > sdeg || dp >= trunc {
                continue;
            }
            let slot = next
                .entry(tr.outer.clone())
                .or_insert_with(|| BiSeries::zero(sdeg, trunc));
            slot.add_shifted(from, &rat(tr.markings as i64), dq, dp);
        }
        states = next;
    }
    states.remove(lambda).unwrap_or_else(|| BiSeries::zero(sdeg, trunc))
}

/// `Q_λ(1, s)` from the two-row closed form
/// `2^ℓ (1+s)(s^l - s^k)/(1-s)` for `λ = (k, l)`, zero for `ℓ >= 3`,
/// checked against the tableau sum in two variables. Returned as a
/// polynomial in `s` (a series with truncation `|λ| + 1`).
pub fn q_one_s(lambda: &StrictPartition) -> Result<Series> {
    let closed = q_one_s_closed(lambda);
    let direct = q_one_s_direct(lambda);
    if closed != direct {
        return Err(Error::Internal(format!(
            "Q_{lambda}(1,s): closed form {closed} but tableau sum {direct}"
        )));
    }
    Ok(closed)
}

/// The two-row closed form alone.
pub fn q_one_s_closed(lambda: &StrictPartition) -> Series {
    let trunc = lambda.size() + 1;
    let parts = lambda.parts();
    if parts.is_empty() {
        return Series::one(trunc);
    }
    if parts.len() >= 3 {
        return Series::zero(trunc);
    }
    let (k, l) = (parts[0], parts.get(1).copied().unwrap_or(0));
    // (s^l - s^k)/(1 - s) = s^l + … + s^{k-1}
    let geometric = Series::sum_of_powers(&(l..k).collect::<Vec<_>>(), trunc);
    one_plus(1, trunc)
        .mul_series(&geometric)
        .scale(&pow2(parts.len() as i64))
}

/// `Q_λ(z_1, z_2)` from the tableau sum, at `z_1 = 1, z_2 = s`.
pub fn q_one_s_direct(lambda: &StrictPartition) -> Series {
    let trunc = lambda.size() + 1;
    let poly = schur_q_tableau(lambda, 2);
    let mut coeffs = vec![Rational::zero(); trunc];
    for (e, c) in poly.terms() {
        coeffs[e[1] as usize] += c;
    }
    Series::from_coeffs(coeffs, trunc)
}

/// `Q_λ(1^m)`, the number of marked shifted tableaux with letters at most
/// `m`, checked against the polynomial `Q_λ(z_1, …, z_m)` at all ones.
pub fn q_ones(lambda: &StrictPartition, m: usize) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::InvalidArgument("Q_λ(1^m) needs m >= 1".into()));
    }
    let count = enumerate_marked(lambda, m as u32).len();
    let poly = schur_q_tableau(lambda, m).eval(&vec![rat(1); m])?;
    if poly != rat(count as i64) {
        return Err(Error::Internal(format!(
            "Q_{lambda}(1^{m}): {count} tableaux but the polynomial gives {poly}"
        )));
    }
    Ok(BigUint::from(count))
}

/// `Π (t^{i-1} + t^{j-1})` over the cells of `λ*` as an exact polynomial.
pub fn diagonal_numerator(lambda: &StrictPartition) -> Series {
    let trunc = numerator_degree(lambda) + 1;
    lambda.shifted_cells().into_iter().fold(Series::one(trunc), |acc, c| {
        acc.mul_series(&Series::sum_of_powers(&[c.row - 1, c.col - 1], trunc))
    })
}

/// `t^{n(λ)} Π (1 + t^{c})` as an exact polynomial.
pub fn content_numerator(lambda: &StrictPartition) -> Series {
    let trunc = numerator_degree(lambda) + 1;
    lambda
        .contents()
        .into_iter()
        .fold(Series::monomial(rat(1), lambda.n_stat(), trunc), |acc, c| {
            acc.mul_series(&one_plus(c, trunc))
        })
}

fn numerator_degree(lambda: &StrictPartition) -> usize {
    lambda.n_stat() + lambda.contents().iter().sum::<usize>()
}

/// Lowest term of [`q_principal_hook`]: `(n(λ), 2^ℓ)`.
pub fn leading_term(lambda: &StrictPartition, trunc: usize) -> Option<(usize, i64)> {
    let s = q_principal_hook(lambda, trunc);
    let v = s.valuation()?;
    Some((v, s.coeff(v).to_integer().to_i64()?))
}
