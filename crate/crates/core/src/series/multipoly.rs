use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use super::{format_coeff_term, rational_json, Rational};
use crate::error::{Error, Result};

/// Sparse polynomial in `z_1, …, z_m` with exact coefficients.
///
/// Terms are keyed by exponent vectors of length `nvars` in a `BTreeMap`,
/// so iteration and serialization are deterministic. Zero coefficients are
/// never stored. An optional `degree_cap` drops every term of larger total
/// degree during multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
    degree_cap: Option<u32>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
            degree_cap: None,
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(nvars, vec![0; nvars], Rational::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut p = Self::zero(nvars);
        p.add_term(exps, c);
        p
    }

    /// `z_i` (0-indexed).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, Rational::one())
    }

    pub fn with_degree_cap(mut self, cap: u32) -> Self {
        self.degree_cap = Some(cap);
        self.terms.retain(|e, _| e.iter().sum::<u32>() <= cap);
        self
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree_cap(&self) -> Option<u32> {
        self.degree_cap
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        if let Some(cap) = self.degree_cap {
            if exps.iter().sum::<u32>() > cap {
                return;
            }
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.nvars);
        out.degree_cap = self.degree_cap;
        if !c.is_zero() {
            for (e, v) in &self.terms {
                out.terms.insert(e.clone(), v * c);
            }
        }
        out
    }

    fn merged_cap(&self, other: &MultiPoly) -> Option<u32> {
        match (self.degree_cap, other.degree_cap) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    pub fn mul_poly(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Self::zero(self.nvars);
        out.degree_cap = self.merged_cap(other);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> MultiPoly {
        let mut out = Self::one(self.nvars);
        out.degree_cap = self.degree_cap;
        for _ in 0..k {
            out = out.mul_poly(self);
        }
        out
    }

    pub fn is_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == degree)
    }

    /// Keeps only the terms of total degree `degree`.
    pub fn homogeneous_part(&self, degree: u32) -> MultiPoly {
        let mut out = Self::zero(self.nvars);
        out.degree_cap = self.degree_cap;
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() == degree {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::InvalidArgument(format!(
                "evaluation point has {} coordinates, polynomial has {} variables",
                point.len(),
                self.nvars
            )));
        }
        // powers[i][k] = point[i]^k
        let mut powers: Vec<Vec<Rational>> = point.iter().map(|_| vec![Rational::one()]).collect();
        for e in self.terms.keys() {
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().expect("nonempty") * &point[i];
                    powers[i].push(next);
                }
            }
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term *= &powers[i][k as usize];
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Reindexes variables: variable `i` of `self` becomes `map[i]` in a
    /// polynomial with `nvars` variables.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> MultiPoly {
        assert_eq!(map.len(), self.nvars);
        let mut out = Self::zero(nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; nvars];
            for (i, &k) in e.iter().enumerate() {
                ne[map[i]] += k;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Sets every variable `z_i` with `i >= keep` to zero and drops them.
    pub fn restrict_leading(&self, keep: usize) -> MultiPoly {
        let mut out = Self::zero(keep);
        out.degree_cap = self.degree_cap;
        for (e, c) in &self.terms {
            if e[keep..].iter().all(|&k| k == 0) {
                out.add_term(e[..keep].to_vec(), c.clone());
            }
        }
        out
    }

    /// Deterministic JSON: `{"nvars": m, "terms": [{"exps": [...], "coeff": [n, d]}, ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "nvars": self.nvars,
            "terms": self.terms.iter().rev().map(|(e, c)| serde_json::json!({
                "exps": e,
                "coeff": rational_json(c),
            })).collect::<Vec<_>>(),
        })
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        out.degree_cap = self.merged_cap(rhs);
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.mul_poly(rhs)
    }
}

impl fmt::Display for MultiPoly {
    /// Terms in decreasing lexicographic exponent order: `2z1^2 + 4z1z2 + …`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mut var = String::new();
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => var.push_str(&format!("z{}", i + 1)),
                    _ => var.push_str(&format!("z{}^{}", i + 1, k)),
                }
            }
            format_coeff_term(f, idx == 0, c, &var)?;
        }
        Ok(())
    }
}
