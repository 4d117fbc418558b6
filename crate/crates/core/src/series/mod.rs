//! Exact truncated power series in `t`, polynomials in `s` with series
//! coefficients, and sparse multivariate polynomials.
//!
//! Truncation is exclusive: a [`Series`] with `trunc = T` stores the
//! coefficients of `t^0 .. t^{T-1}` and never reads or writes past them.

mod bivariate;
mod multipoly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

pub use bivariate::BiSeries;
pub use multipoly::MultiPoly;

use crate::error::{Error, Result};

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;

/// Default truncation for command-line verification work.
pub const DEFAULT_TRUNC: usize = 24;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `2^e` for a possibly negative exponent.
pub fn pow2(e: i64) -> Rational {
    let base = Rational::from_integer(BigInt::from(2));
    if e >= 0 {
        num_traits::pow(base, e as usize)
    } else {
        num_traits::pow(base.recip(), (-e) as usize)
    }
}

/// True when the denominator of `q` is a power of two.
pub fn has_dyadic_denominator(q: &Rational) -> bool {
    let d = q.denom();
    let two = BigInt::from(2);
    let mut d = d.clone();
    while (&d % &two).is_zero() {
        d /= &two;
    }
    d.is_one()
}

/// `[num, den]` pair, falling back to strings past 64 bits.
pub fn rational_json(q: &Rational) -> serde_json::Value {
    let part = |b: &BigInt| match b.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(b.to_string()),
    };
    serde_json::Value::Array(vec![part(q.numer()), part(q.denom())])
}

pub(crate) fn rational_from_json(v: &serde_json::Value) -> Result<Rational> {
    let bad = || Error::Parse(format!("expected [num, den], got {v}"));
    let arr = v.as_array().ok_or_else(bad)?;
    if arr.len() != 2 {
        return Err(bad());
    }
    let part = |x: &serde_json::Value| -> Result<BigInt> {
        if let Some(i) = x.as_i64() {
            Ok(BigInt::from(i))
        } else if let Some(s) = x.as_str() {
            s.parse().map_err(|_| bad())
        } else {
            Err(bad())
        }
    };
    let den = part(&arr[1])?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(part(&arr[0])?, den))
}

/// A truncated power series `Σ_{k < trunc} c_k t^k` with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    pub fn zero(trunc: usize) -> Self {
        Series {
            coeffs: vec![Rational::zero(); trunc],
        }
    }

    pub fn one(trunc: usize) -> Self {
        Self::monomial(Rational::one(), 0, trunc)
    }

    /// `c · t^k`, or zero when `k >= trunc`.
    pub fn monomial(c: Rational, k: usize, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        if k < trunc {
            s.coeffs[k] = c;
        }
        s
    }

    /// From leading coefficients; missing ones are zero, extra ones dropped.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, trunc: usize) -> Self {
        coeffs.resize(trunc, Rational::zero());
        Series { coeffs }
    }

    pub fn from_ints(ints: &[i64], trunc: usize) -> Self {
        Self::from_coeffs(ints.iter().map(|&i| rat(i)).collect(), trunc)
    }

    pub fn from_counts(counts: &[u64], trunc: usize) -> Self {
        Self::from_coeffs(
            counts
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
            trunc,
        )
    }

    /// The polynomial `Σ_{k ∈ exps} t^k` (repeated exponents add).
    pub fn sum_of_powers(exps: &[usize], trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        for &k in exps {
            if k < trunc {
                s.coeffs[k] += Rational::one();
            }
        }
        s
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; zero at or beyond the truncation.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, trunc: usize) -> Self {
        assert!(trunc <= self.trunc(), "cannot extend a truncated series");
        Series {
            coeffs: self.coeffs[..trunc].to_vec(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.trunc());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k < out.trunc() {
                out.coeffs[i + k] = c.clone();
            }
        }
        out
    }

    /// `1 / (1 - t^k) = Σ_j t^{jk}`.
    pub fn inv_one_minus(k: usize, trunc: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("1 - t^0 is not invertible".to_string()));
        }
        let mut s = Self::zero(trunc);
        for i in (0..trunc).step_by(k) {
            s.coeffs[i] = Rational::one();
        }
        Ok(s)
    }

    /// `t ↦ t^k`.
    pub fn substitute_power(&self, k: usize, trunc: usize) -> Self {
        assert!(k >= 1);
        let mut out = Self::zero(trunc);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * k < trunc {
                out.coeffs[i * k] = c.clone();
            }
        }
        out
    }

    /// Value of the stored coefficients summed (evaluation at `t = 1`
    /// of the truncated polynomial).
    pub fn sum_coeffs(&self) -> Rational {
        self.coeffs.iter().fold(Rational::zero(), |a, c| a + c)
    }

    /// Highest index with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Lowest index with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// All coefficients as nonnegative integers, or `None`.
    pub fn as_nonneg_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() && !c.is_negative() {
                    Some(c.to_integer())
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "trunc": self.trunc(),
            "coeffs": self.coeffs.iter().map(rational_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let trunc = v
            .get("trunc")
            .and_then(|t| t.as_u64())
            .ok_or_else(|| Error::Parse("series needs an integer `trunc`".into()))? as usize;
        let coeffs = v
            .get("coeffs")
            .and_then(|c| c.as_array())
            .ok_or_else(|| Error::Parse("series needs a `coeffs` array".into()))?;
        if coeffs.len() != trunc {
            return Err(Error::Parse(format!(
                "series has {} coefficients but trunc {trunc}",
                coeffs.len()
            )));
        }
        let coeffs = coeffs.iter().map(rational_from_json).collect::<Result<_>>()?;
        Ok(Series { coeffs })
    }

    fn binary(&self, other: &Series, f: impl Fn(&Rational, &Rational) -> Rational) -> Series {
        let trunc = self.trunc().min(other.trunc());
        Series {
            coeffs: (0..trunc).map(|i| f(&self.coeffs[i], &other.coeffs[i])).collect(),
        }
    }

    pub fn mul_series(&self, other: &Series) -> Series {
        let trunc = self.trunc().min(other.trunc());
        let mut out = Self::zero(trunc);
        for (i, a) in self.coeffs.iter().take(trunc).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(trunc - i).enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    /// Product of many series at a common truncation.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Series>, trunc: usize) -> Series {
        factors.into_iter().fold(Series::one(trunc), |acc, f| acc.mul_series(f))
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.binary(rhs, |a, b| a + b)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self.binary(rhs, |a, b| a - b)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        self.mul_series(rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Series", 2)?;
        st.serialize_field("trunc", &self.trunc())?;
        let coeffs: Vec<_> = self.coeffs.iter().map(rational_json).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Series {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        Series::from_json(&v).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn format_coeff_term(f: &mut fmt::Formatter<'_>, first: bool, c: &Rational, var_part: &str) -> fmt::Result {
    let neg = c.is_negative();
    let mag = c.abs();
    if first {
        if neg {
            f.write_str("-")?;
        }
    } else {
        f.write_str(if neg { " - " } else { " + " })?;
    }
    let is_one = mag.is_one();
    if var_part.is_empty() {
        write!(f, "{mag}")
    } else if is_one {
        f.write_str(var_part)
    } else if mag.is_integer() {
        write!(f, "{mag}{var_part}")
    } else {
        write!(f, "({mag}){var_part}")
    }
}

pub(crate) fn t_power(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

impl fmt::Display for Series {
    /// `2 + 4t + 8t^2 + O(t^24)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            format_coeff_term(f, first, c, &t_power("t", k))?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.trunc())
    }
}

/// `[u^n]` of a product of power series in `u` whose coefficients are
/// series in `t`. Each factor is given by its `u^0, u^1, …` coefficients;
/// missing higher coefficients are zero.
pub fn extract_u_coeff(factors: &[Vec<Series>], n: usize, trunc: usize) -> Series {
    // acc[k] = coefficient of u^k in the running product, for k <= n.
    let mut acc: Vec<Series> = (0..=n)
        .map(|k| {
            if k == 0 {
                Series::one(trunc)
            } else {
                Series::zero(trunc)
            }
        })
        .collect();
    for factor in factors {
        let mut next: Vec<Series> = (0..=n).map(|_| Series::zero(trunc)).collect();
        for (a, lhs) in acc.iter().enumerate() {
            if lhs.is_zero() {
                continue;
            }
            for (b, rhs) in factor.iter().enumerate().take(n + 1 - a) {
                if rhs.is_zero() {
                    continue;
                }
                next[a + b] = &next[a + b] + &lhs.mul_series(rhs);
            }
        }
        acc = next;
    }
    acc.swap_remove(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn one_plus_t_times_one_minus_t() {
        let a = Series::from_ints(&[1, 1], 5);
        let b = Series::from_ints(&[1, -1], 5);
        assert_eq!(&a * &b, Series::from_ints(&[1, 0, -1], 5));
    }

    #[test]
    fn shift_and_monomials() {
        assert_eq!(Series::one(4).shift(2), Series::from_ints(&[0, 0, 1], 4));
        assert_eq!(Series::one(2).shift(2), Series::zero(2));
        assert_eq!(Series::monomial(rat(3), 5, 4), Series::zero(4));
    }

    #[test]
    fn geometric_kernels() {
        assert_eq!(
            Series::inv_one_minus(1, 4).unwrap(),
            Series::from_ints(&[1, 1, 1, 1], 4)
        );
        assert_eq!(
            Series::inv_one_minus(3, 7).unwrap(),
            Series::from_ints(&[1, 0, 0, 1, 0, 0, 1], 7)
        );
        assert!(Series::inv_one_minus(0, 4).is_err());
    }

    #[test]
    fn partition_count_from_kernels() {
        // p(5) = 7, counted by hand: 5, 41, 32, 311, 221, 2111, 11111.
        let kernels: Vec<Series> = (1..=5).map(|k| Series::inv_one_minus(k, 6).unwrap()).collect();
        let prod = Series::product(&kernels, 6);
        assert_eq!(prod.coeff(5), rat(7));
    }

    #[test]
    fn extract_u_binomial() {
        let one_plus_u = vec![Series::one(3), Series::one(3)];
        let factors = vec![one_plus_u.clone(), one_plus_u.clone(), one_plus_u];
        assert_eq!(extract_u_coeff(&factors, 2, 3), Series::from_ints(&[3], 3));
    }

    #[test]
    fn extract_u_elementary() {
        // [u^2] Π_{r=0}^{R} (1 + t^r u) = e_2(1, t, t^2, ...) truncated.
        let trunc = 10;
        let factors: Vec<Vec<Series>> = (0..trunc)
            .map(|r| vec![Series::one(trunc), Series::monomial(rat(1), r, trunc)])
            .collect();
        let got = extract_u_coeff(&factors, 2, trunc);
        let mut want = vec![0i64; trunc];
        for a in 0..trunc {
            for b in a + 1..trunc {
                if a + b < trunc {
                    want[a + b] += 1;
                }
            }
        }
        assert_eq!(got, Series::from_ints(&want, trunc));
    }

    #[test]
    fn extract_u_q1_single_variable() {
        // (1 + u)/(1 - u) = 1 + 2u + 2u^2 + ...
        let gen = vec![Series::one(1), Series::from_ints(&[2], 1), Series::from_ints(&[2], 1)];
        assert_eq!(extract_u_coeff(&[gen], 1, 1), Series::from_ints(&[2], 1));
    }

    #[test]
    fn display_and_json() {
        let s = Series::from_coeffs(vec![rat(0), rat(4), rat(8), rat_frac(-1, 2)], 4);
        assert_eq!(s.to_string(), "4t + 8t^2 - (1/2)t^3 + O(t^4)");
        let j = serde_json::to_value(&s).unwrap();
        assert_eq!(j["trunc"], 4);
        assert_eq!(j["coeffs"][3], serde_json::json!([-1, 2]));
        let back: Series = serde_json::from_value(j).unwrap();
        assert_eq!(back, s);
        assert_eq!(Series::zero(3).to_string(), "0 + O(t^3)");
    }

    #[test]
    fn dyadic_check() {
        assert!(has_dyadic_denominator(&rat_frac(3, 8)));
        assert!(has_dyadic_denominator(&rat(5)));
        assert!(!has_dyadic_denominator(&rat_frac(1, 6)));
        assert_eq!(pow2(-2), rat_frac(1, 4));
    }

    fn arb_series(trunc: usize) -> impl Strategy<Value = Series> {
        prop::collection::vec((-20i64..20, 1i64..5), trunc)
            .prop_map(move |v| Series::from_coeffs(v.into_iter().map(|(n, d)| rat_frac(n, d)).collect(), trunc))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_series(7), b in arb_series(7), c in arb_series(7)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn truncation_coherence(a in arb_series(9), b in arb_series(9), t in 0usize..9) {
            prop_assert_eq!((&a * &b).truncate(t), &a.truncate(t) * &b.truncate(t));
        }
    }
}
