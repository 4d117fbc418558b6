//! Graded multiplicities of the simple supermodules `D^λ` of the
//! Hecke–Clifford algebra (and of their spin counterparts) in the
//! polynomial algebra, the coinvariant algebra and the polynomial ⊗
//! exterior algebra.
//!
//! Every multiplicity coefficient is checked to be a nonnegative integer.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::StrictPartition;
use crate::series::{pow2, rat, rat_frac, BiSeries, Rational, Series};
use crate::specializations::{q_bigraded, q_one_s, q_principal_hook};
use crate::tableaux::count_standard_shifted;

/// `2^{-(ℓ+δ)/2}`; `ℓ + δ` is always even.
pub fn normalization(lambda: &StrictPartition) -> Rational {
    let e = lambda.length() + lambda.delta();
    pow2(-((e / 2) as i64))
}

fn check_counts(s: &Series, what: &str, lambda: &StrictPartition) -> Result<()> {
    for (k, c) in s.coeffs().iter().enumerate() {
        if !c.is_integer() || c.is_negative() {
            return Err(Error::Internal(format!(
                "{what} of {lambda} has coefficient {c} at t^{k}, not a nonnegative integer"
            )));
        }
    }
    Ok(())
}

/// Graded multiplicity of `D^λ` in `C_n ⊗ S*V`: `2^{-(ℓ+δ)/2} Q_λ(t•)`.
pub fn graded_mult_sym(lambda: &StrictPartition, trunc: usize) -> Result<Series> {
    let s = q_principal_hook(lambda, trunc).scale(&normalization(lambda));
    check_counts(&s, "graded multiplicity", lambda)?;
    Ok(s)
}

/// Exact degree of the coinvariant multiplicity polynomial:
/// `n(λ) + Σ c + n(n+1)/2 - Σ h*`.
pub fn coinv_degree(lambda: &StrictPartition) -> usize {
    let n = lambda.size();
    let up = lambda.n_stat() + lambda.contents().iter().sum::<usize>() + n * (n + 1) / 2;
    let down: usize = lambda.shifted_hooks().iter().sum();
    up - down
}

/// Graded multiplicity of `D^λ` in `C_n ⊗ (S*V)_{S_n}`: the multiplicity
/// in `C_n ⊗ S*V` times `(1-t)(1-t²)⋯(1-t^n)`. Returned as an exact
/// polynomial; the vanishing of every coefficient past its degree is
/// checked up to `t^{n(λ)+n(n+1)/2}`.
pub fn graded_mult_coinv(lambda: &StrictPartition) -> Result<Series> {
    let n = lambda.size();
    let deg = coinv_degree(lambda);
    let trunc = (lambda.n_stat() + n * (n + 1) / 2 + 1).max(deg + 1);
    let mut s = graded_mult_sym(lambda, trunc)?;
    for k in 1..=n {
        s = s.mul_series(&(&Series::one(trunc) - &Series::monomial(rat(1), k, trunc)));
    }
    if let Some(k) = (deg + 1..trunc).find(|&k| !s.coeff(k).is_zero()) {
        return Err(Error::Internal(format!(
            "coinvariant multiplicity of {lambda} has a nonzero t^{k} term past its degree {deg}"
        )));
    }
    let poly = s.truncate(deg + 1);
    check_counts(&poly, "coinvariant multiplicity", lambda)?;
    Ok(poly)
}

/// Bi-graded multiplicity of `D^λ` in `C_n ⊗ S*V ⊗ Λ*V`:
/// `2^{-(ℓ+δ)/2} Q_λ(t•; st•)`, with `s` marking exterior degree.
pub fn bigraded_mult(lambda: &StrictPartition, trunc: usize) -> Result<BiSeries> {
    let b = q_bigraded(lambda, trunc).scale(&normalization(lambda));
    for row in b.rows() {
        check_counts(row, "bi-graded multiplicity", lambda)?;
    }
    Ok(b)
}

/// Graded multiplicity of `D^λ` in `C_n ⊗ Λ*V`: `2^{-(ℓ+δ)/2} Q_λ(1, s)`,
/// a polynomial in `s`.
pub fn wedge_mult(lambda: &StrictPartition) -> Result<Series> {
    let s = q_one_s(lambda)?.scale(&normalization(lambda));
    check_counts(&s, "exterior multiplicity", lambda)?;
    Ok(s)
}

/// `(1+t)(1+t²)⋯(1+t^{n-1}) / ((1-t)(1-t²)⋯(1-t^n))`.
pub fn basic_mult(n: usize, trunc: usize) -> Series {
    let mut s = Series::one(trunc);
    for k in 1..n {
        s = s.mul_series(&Series::sum_of_powers(&[0, k], trunc));
    }
    for k in 1..=n {
        s = s.mul_series(&Series::inv_one_minus(k, trunc).expect("k >= 1"));
    }
    s
}

/// `(1+t)(1+t²)⋯(1+t^{n-1})` as an exact polynomial.
pub fn basic_coinv(n: usize) -> Series {
    let trunc = n * n.saturating_sub(1) / 2 + 1;
    (1..n).fold(Series::one(trunc), |acc, k| {
        acc.mul_series(&Series::sum_of_powers(&[0, k], trunc))
    })
}

/// Which algebra the simple module belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algebra {
    /// The Hecke–Clifford superalgebra.
    Hc,
    /// The spin symmetric group algebra.
    Spin,
}

/// Passage from Hecke–Clifford multiplicities to spin multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinAdjustment {
    pub n: usize,
    pub shape: StrictPartition,
    /// `1/2` iff `n` is odd and `ℓ(λ)` is even.
    pub factor: Rational,
}

impl SpinAdjustment {
    pub fn new(shape: &StrictPartition) -> Self {
        let n = shape.size();
        let factor = if n % 2 == 1 && shape.length().is_multiple_of(2) {
            rat_frac(1, 2)
        } else {
            Rational::one()
        };
        SpinAdjustment {
            n,
            shape: shape.clone(),
            factor,
        }
    }

    pub fn apply(&self, s: &Series) -> Result<Series> {
        let out = s.scale(&self.factor);
        check_counts(&out, "spin multiplicity", &self.shape)?;
        Ok(out)
    }

    pub fn apply_bi(&self, b: &BiSeries) -> Result<BiSeries> {
        let out = b.scale(&self.factor);
        for row in out.rows() {
            check_counts(row, "spin multiplicity", &self.shape)?;
        }
        Ok(out)
    }
}

impl fmt::Display for SpinAdjustment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n = {}, λ = ({}): factor {}", self.n, self.shape, self.factor)
    }
}

/// Multiplicity of the spin module `D^λ_-` from that of `D^λ`.
pub fn spin_mult(s: &Series, shape: &StrictPartition) -> Result<Series> {
    SpinAdjustment::new(shape).apply(s)
}

/// `dim D^λ = 2^{n - (ℓ-δ)/2} g^λ`.
pub fn dim_d(lambda: &StrictPartition) -> Result<BigUint> {
    let g = count_standard_shifted(lambda)?.enumerated;
    let e = lambda.size() - (lambda.length() - lambda.delta()) / 2;
    Ok(g << e)
}

/// Value at `t = 1` of the coinvariant multiplicity against
/// `2^{-δ} dim D^λ`, returned as `(value, expected)`.
pub fn regular_check(lambda: &StrictPartition) -> Result<(BigInt, BigInt)> {
    let value = graded_mult_coinv(lambda)?.sum_coeffs();
    let dim = Rational::from_integer(BigInt::from(dim_d(lambda)?));
    let expected = dim * pow2(-(lambda.delta() as i64));
    if !value.is_integer() || !expected.is_integer() {
        return Err(Error::Internal(format!(
            "regular-module multiplicity of {lambda} is not integral ({value} vs {expected})"
        )));
    }
    Ok((value.to_integer(), expected.to_integer()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_strict_up_to;

    fn sp(v: &[usize]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn basic_module() {
        for n in 1..=6 {
            let l = sp(&[n]);
            assert_eq!(graded_mult_sym(&l, 12).unwrap(), basic_mult(n, 12));
            assert_eq!(graded_mult_coinv(&l).unwrap(), basic_coinv(n));
        }
        assert_eq!(basic_coinv(3), Series::from_ints(&[1, 1, 1, 1], 4));
    }

    #[test]
    fn leading_terms() {
        let s = graded_mult_sym(&sp(&[2, 1]), 6).unwrap();
        assert_eq!(s.valuation(), Some(1));
        assert_eq!(s.coeff(1), rat(2));
    }

    #[test]
    fn coinvariant_examples() {
        let c = graded_mult_coinv(&sp(&[2, 1])).unwrap();
        assert_eq!(c.sum_coeffs(), rat(4));
        for lambda in enumerate_strict_up_to(7) {
            let (v, e) = regular_check(&lambda).unwrap();
            assert_eq!(v, e, "{lambda}");
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(dim_d(&sp(&[4])).unwrap(), BigUint::from(16u32));
        assert_eq!(dim_d(&sp(&[2, 1])).unwrap(), BigUint::from(4u32));
    }

    #[test]
    fn spin_factors() {
        assert_eq!(SpinAdjustment::new(&sp(&[3, 1])).factor, rat(1));
        assert_eq!(SpinAdjustment::new(&sp(&[2, 1])).factor, rat_frac(1, 2));
        assert_eq!(SpinAdjustment::new(&sp(&[3])).factor, rat(1));
        let s = graded_mult_sym(&sp(&[2, 1]), 8).unwrap();
        assert_eq!(spin_mult(&s, &sp(&[2, 1])).unwrap().coeff(1), rat(1));
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(wedge_mult(&sp(&[2, 1])).unwrap(), Series::from_ints(&[0, 2, 2, 0], 4));
        assert!(wedge_mult(&sp(&[3, 2, 1])).unwrap().is_zero());
        // (1+s)(1+s+s^2)
        assert_eq!(wedge_mult(&sp(&[3])).unwrap(), Series::from_ints(&[1, 2, 2, 1], 4));
    }

    #[test]
    fn bigraded_edges() {
        for lambda in enumerate_strict_up_to(5) {
            let b = bigraded_mult(&lambda, 6).unwrap();
            assert_eq!(b.coeff(0), graded_mult_sym(&lambda, 6).unwrap());
            assert_eq!(b.at_t_zero().coeffs(), wedge_mult(&lambda).unwrap().coeffs());
        }
    }

    #[test]
    fn koszul_small() {
        for lambda in enumerate_strict_up_to(4) {
            let b = bigraded_mult(&lambda, 6).unwrap();
            let collapsed = b.collapse_t_as_power_of_s(2, 12).unwrap();
            assert_eq!(collapsed, graded_mult_sym(&lambda, 12).unwrap(), "{lambda}");
        }
    }
}
