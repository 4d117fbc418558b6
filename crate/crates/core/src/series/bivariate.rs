use std::fmt;
use std::ops::{Add, Mul};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{format_coeff_term, t_power, Rational, Series};
use crate::error::{Error, Result};

/// A polynomial in `s` of degree at most `sdeg` whose coefficients are
/// truncated series in `t`. Products drop `s`-degrees above `sdeg`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    rows: Vec<Series>,
}

impl BiSeries {
    pub fn zero(sdeg: usize, trunc: usize) -> Self {
        BiSeries {
            rows: (0..=sdeg).map(|_| Series::zero(trunc)).collect(),
        }
    }

    pub fn one(sdeg: usize, trunc: usize) -> Self {
        Self::monomial(Rational::from_integer(1.into()), 0, 0, sdeg, trunc)
    }

    /// `c · s^q t^p`.
    pub fn monomial(c: Rational, q: usize, p: usize, sdeg: usize, trunc: usize) -> Self {
        let mut out = Self::zero(sdeg, trunc);
        if q <= sdeg {
            out.rows[q] = Series::monomial(c, p, trunc);
        }
        out
    }

    /// Embeds a `t`-series as the `s^0` row.
    pub fn from_series(s: &Series, sdeg: usize) -> Self {
        let mut out = Self::zero(sdeg, s.trunc());
        out.rows[0] = s.clone();
        out
    }

    /// Builds from explicit rows; all rows must share one truncation.
    pub fn from_rows(rows: Vec<Series>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidArgument("a BiSeries needs at least one row".into()));
        }
        let trunc = rows[0].trunc();
        if rows.iter().any(|r| r.trunc() != trunc) {
            return Err(Error::InvalidArgument("BiSeries rows must share a truncation".into()));
        }
        Ok(BiSeries { rows })
    }

    pub fn sdeg(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn trunc(&self) -> usize {
        self.rows[0].trunc()
    }

    pub fn rows(&self) -> &[Series] {
        &self.rows
    }

    /// Coefficient series of `s^q` (zero past `sdeg`).
    pub fn coeff(&self, q: usize) -> Series {
        self.rows.get(q).cloned().unwrap_or_else(|| Series::zero(self.trunc()))
    }

    /// Coefficient of `s^q t^p`.
    pub fn coeff_at(&self, q: usize, p: usize) -> Rational {
        self.rows.get(q).map(|r| r.coeff(p)).unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        BiSeries {
            rows: self.rows.iter().map(|r| r.scale(c)).collect(),
        }
    }

    pub fn mul_bs(&self, other: &BiSeries) -> BiSeries {
        let sdeg = self.sdeg().min(other.sdeg());
        let trunc = self.trunc().min(other.trunc());
        let mut out = Self::zero(sdeg, trunc);
        for (a, ra) in self.rows.iter().enumerate().take(sdeg + 1) {
            if ra.is_zero() {
                continue;
            }
            for (b, rb) in other.rows.iter().enumerate().take(sdeg + 1 - a) {
                if rb.is_zero() {
                    continue;
                }
                out.rows[a + b] = &out.rows[a + b] + &ra.mul_series(rb);
            }
        }
        out
    }

    /// `self += c · s^q t^p · other`, dropping what falls past `sdeg` or the
    /// truncation.
    pub fn add_shifted(&mut self, other: &BiSeries, c: &Rational, q: usize, p: usize) {
        let trunc = self.trunc();
        if c.is_zero() || p >= trunc {
            return;
        }
        for (a, row) in other.rows.iter().enumerate() {
            let Some(target) = self.rows.get_mut(a + q) else { break };
            for (k, v) in row.coeffs.iter().enumerate().take(trunc - p) {
                if !v.is_zero() {
                    target.coeffs[k + p] += v * c;
                }
            }
        }
    }

    /// Multiplies every row by a `t`-series.
    pub fn mul_series(&self, s: &Series) -> BiSeries {
        BiSeries {
            rows: self.rows.iter().map(|r| r.mul_series(s)).collect(),
        }
    }

    /// Value at `t = 0`: the polynomial in `s` formed by the constant terms,
    /// returned as a series in `s` with truncation `sdeg + 1`.
    pub fn at_t_zero(&self) -> Series {
        Series::from_coeffs(self.rows.iter().map(|r| r.coeff(0)).collect(), self.sdeg() + 1)
    }

    /// Substitutes `t = s^k`, collapsing to a series in `s` truncated at
    /// `trunc`. Needs `k · self.trunc() >= trunc` so that no dropped
    /// `t`-degree lands below the new truncation.
    pub fn collapse_t_as_power_of_s(&self, k: usize, trunc: usize) -> Result<Series> {
        if k == 0 || k * self.trunc() < trunc {
            return Err(Error::InvalidArgument(format!(
                "t-truncation {} is too short for t = s^{k} up to s^{}",
                self.trunc(),
                trunc
            )));
        }
        let mut coeffs = vec![Rational::zero(); trunc];
        for (q, row) in self.rows.iter().enumerate() {
            for (p, c) in row.coeffs().iter().enumerate() {
                let d = q + k * p;
                if d < trunc && !c.is_zero() {
                    coeffs[d] += c;
                }
            }
        }
        Ok(Series::from_coeffs(coeffs, trunc))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.rows.iter().map(Series::to_json).collect())
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("BiSeries JSON must be an array of series".into()))?;
        Self::from_rows(arr.iter().map(Series::from_json).collect::<Result<_>>()?)
    }
}

impl Add for &BiSeries {
    type Output = BiSeries;
    fn add(self, rhs: &BiSeries) -> BiSeries {
        let sdeg = self.sdeg().min(rhs.sdeg());
        BiSeries {
            rows: (0..=sdeg).map(|q| &self.rows[q] + &rhs.rows[q]).collect(),
        }
    }
}

impl Mul for &BiSeries {
    type Output = BiSeries;
    fn mul(self, rhs: &BiSeries) -> BiSeries {
        self.mul_bs(rhs)
    }
}

impl Serialize for BiSeries {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BiSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Series>::deserialize(d)?;
        BiSeries::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for BiSeries {
    /// `2 + 2s + 2t + 2st + … + O(t^T)`, ordered by `s`-degree then `t`-degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (q, row) in self.rows.iter().enumerate() {
            for (p, c) in row.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let var = format!("{}{}", t_power("s", q), t_power("t", p));
                format_coeff_term(f, first, c, &var)?;
                first = false;
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.trunc())
    }
}
