//! Schur Q-functions and the generators `q_r` in finitely many variables,
//! the Cauchy identity, and expansion of symmetric functions in the
//! `Q_λ` basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_compositions_with, enumerate_strict, Partition, StrictPartition};
use crate::series::{format_coeff_term, pow2, rat, rational_json, MultiPoly, Rational};
use crate::tableaux::marked_strip_transitions;

/// An element of the degree-`n` part of `Γ`, written in the `Q_λ` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QExpansion {
    degree: usize,
    coeffs: BTreeMap<StrictPartition, Rational>,
}

impl QExpansion {
    pub fn zero(degree: usize) -> Self {
        QExpansion {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis vector `Q_λ`.
    pub fn basis(lambda: &StrictPartition) -> Self {
        let mut e = Self::zero(lambda.size());
        e.add_term(lambda.clone(), Rational::one()).expect("degree matches");
        e
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, lambda: &StrictPartition) -> Rational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &BTreeMap<StrictPartition, Rational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, lambda: StrictPartition, c: Rational) -> Result<()> {
        if lambda.size() != self.degree {
            return Err(Error::InvalidArgument(format!(
                "Q_{lambda} does not have degree {}",
                self.degree
            )));
        }
        let entry = self.coeffs.entry(lambda).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.degree);
        if !c.is_zero() {
            out.coeffs = self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        }
        out
    }

    /// `{"degree": n, "terms": [{"partition": [...], "coeff": [num, den]}, ...]}`,
    /// terms in reverse-lexicographic order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "degree": self.degree,
            "terms": self.coeffs.iter().rev().map(|(p, c)| serde_json::json!({
                "partition": p.parts(),
                "coeff": rational_json(c),
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for QExpansion {
    /// `Q(3) + (1/2)Q(2,1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (idx, (p, c)) in self.coeffs.iter().rev().enumerate() {
            format_coeff_term(f, idx == 0, c, &format!("Q({p})"))?;
        }
        Ok(())
    }
}

/// `[u^r] Π_{i<=m} (1 + z_i u)/(1 - z_i u)`: the sum of `2^{#nonzero parts} z^α`
/// over exponent vectors `α` of size `r`.
pub fn q_r(m: usize, r: usize, degree_cap: Option<u32>) -> MultiPoly {
    let mut out = MultiPoly::zero(m);
    if let Some(cap) = degree_cap {
        out = out.with_degree_cap(cap);
    }
    if r == 0 {
        out.add_term(vec![0; m], Rational::one());
        return out;
    }
    fn go(m: usize, idx: usize, rem: usize, cur: &mut Vec<u32>, out: &mut MultiPoly) {
        if idx == m - 1 {
            cur[idx] = rem as u32;
            let nz = cur.iter().filter(|&&e| e > 0).count();
            out.add_term(cur.clone(), pow2(nz as i64));
            cur[idx] = 0;
            return;
        }
        for e in 0..=rem {
            cur[idx] = e as u32;
            go(m, idx + 1, rem - e, cur, out);
        }
        cur[idx] = 0;
    }
    if m > 0 {
        go(m, 0, r, &mut vec![0; m], &mut out);
    }
    out
}

/// `q_{ν_1} q_{ν_2} ⋯`.
pub fn q_nu(m: usize, nu: &[usize], degree_cap: Option<u32>) -> MultiPoly {
    let mut out = MultiPoly::one(m);
    if let Some(cap) = degree_cap {
        out = out.with_degree_cap(cap);
    }
    for &r in nu {
        if r > 0 {
            out = out.mul_poly(&q_r(m, r, degree_cap));
        }
    }
    out
}

/// `Q_λ(z_1, …, z_m)` as the weight sum over marked shifted tableaux with
/// letters at most `m`, accumulated one letter at a time over the chain of
/// subshapes.
pub fn schur_q_tableau(lambda: &StrictPartition, m: usize) -> MultiPoly {
    let transitions = marked_strip_transitions(lambda);
    let mut states: HashMap<StrictPartition, MultiPoly> = HashMap::new();
    states.insert(StrictPartition::empty(), MultiPoly::one(m));
    for k in 0..m {
        let mut next: HashMap<StrictPartition, MultiPoly> = HashMap::new();
        for tr in &transitions {
            let Some(from) = states.get(&tr.inner) else { continue };
            let mut e = vec![0u32; m];
            e[k] = tr.cells as u32;
            let step = MultiPoly::monomial(m, e, rat(tr.markings as i64));
            let term = from.mul_poly(&step);
            let slot = next.entry(tr.outer.clone()).or_insert_with(|| MultiPoly::zero(m));
            *slot = &*slot + &term;
        }
        states = next;
    }
    states.remove(lambda).unwrap_or_else(|| MultiPoly::zero(m))
}

/// Evaluates `Q_λ` at `m` pairwise distinct rationals through the
/// symmetrization
/// `2^ℓ Σ_w Π_i z_{w_i}^{λ_i} Π_{i<=ℓ, i<j<=m} (z_{w_i}+z_{w_j})/(z_{w_i}-z_{w_j})`,
/// the sum running over ordered injections `w` of `{1..ℓ}` into `{1..m}`
/// (completed to a permutation by the unused indices in any order).
pub fn schur_q_symmetrized(lambda: &StrictPartition, points: &[Rational]) -> Result<Rational> {
    let m = points.len();
    let l = lambda.length();
    if m < l {
        return Err(Error::InvalidArgument(format!(
            "Q_{lambda} needs at least {l} variables, got {m}"
        )));
    }
    for i in 0..m {
        for j in 0..i {
            if points[i] == points[j] {
                return Err(Error::InvalidArgument(format!(
                    "evaluation points must be distinct (z{} = z{} = {})",
                    j + 1,
                    i + 1,
                    points[i]
                )));
            }
        }
    }
    let mut total = Rational::zero();
    let mut chosen = Vec::with_capacity(l);
    let mut used = vec![false; m];
    fn go(lambda: &[usize], points: &[Rational], chosen: &mut Vec<usize>, used: &mut Vec<bool>, total: &mut Rational) {
        if chosen.len() == lambda.len() {
            let mut term = Rational::one();
            for (i, &wi) in chosen.iter().enumerate() {
                let z = &points[wi];
                term *= num_traits::pow(z.clone(), lambda[i]);
                for &wj in &chosen[i + 1..] {
                    let y = &points[wj];
                    term *= (z + y) / (z - y);
                }
                for (r, y) in points.iter().enumerate() {
                    if !used[r] {
                        term *= (z + y) / (z - y);
                    }
                }
            }
            *total += term;
            return;
        }
        for w in 0..points.len() {
            if used[w] {
                continue;
            }
            used[w] = true;
            chosen.push(w);
            go(lambda, points, chosen, used, total);
            chosen.pop();
            used[w] = false;
        }
    }
    go(lambda.parts(), points, &mut chosen, &mut used, &mut total);
    Ok(total * pow2(l as i64))
}

/// Coefficients of the monomial symmetric functions `m_μ` in a symmetric
/// polynomial homogeneous of degree `n` in at least `n` variables.
pub fn monomial_expand(p: &MultiPoly, n: usize) -> Result<BTreeMap<Partition, Rational>> {
    let m = p.nvars();
    if m < n {
        return Err(Error::InvalidArgument(format!(
            "a degree-{n} monomial expansion needs at least {n} variables, got {m}"
        )));
    }
    if !p.is_homogeneous(n as u32) {
        return Err(Error::InvalidArgument(format!(
            "polynomial is not homogeneous of degree {n}"
        )));
    }
    let mut orbit_hits: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for (e, c) in p.terms() {
        let mut key = e.clone();
        key.sort_unstable_by(|a, b| b.cmp(a));
        let lead = p.coeff(&key);
        if &lead != c {
            return Err(Error::NotSymmetric(format!(
                "coefficient of exponent {e:?} is {c} but of {key:?} is {lead}"
            )));
        }
        *orbit_hits.entry(key).or_insert(0) += 1;
    }
    let mut out = BTreeMap::new();
    for (key, hits) in orbit_hits {
        let orbit = orbit_size(&key);
        if hits != orbit {
            return Err(Error::NotSymmetric(format!(
                "only {hits} of the {orbit} permutations of exponent {key:?} occur"
            )));
        }
        let parts: Vec<usize> = key.iter().filter(|&&e| e > 0).map(|&e| e as usize).collect();
        let mu = Partition::new(parts).expect("sorted exponents form a partition");
        out.insert(mu, p.coeff(&key));
    }
    Ok(out)
}

fn orbit_size(exps: &[u32]) -> usize {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &e in exps {
        *counts.entry(e).or_insert(0) += 1;
    }
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    let denom: u128 = counts.values().map(|&k| fact(k)).product();
    (fact(exps.len()) / denom) as usize
}

type MonomialTable = BTreeMap<Partition, Rational>;

/// Monomial expansions of every `Q_λ` with `|λ| = n`, in `n` variables.
struct QBasis {
    rows: BTreeMap<StrictPartition, MonomialTable>,
}

impl QBasis {
    fn build(n: usize) -> Result<Self> {
        let mut rows = BTreeMap::new();
        for lambda in enumerate_strict(n) {
            let poly = schur_q_tableau(&lambda, n.max(1));
            let table = monomial_expand(&poly, n)?;
            // The lexicographically largest monomial must be z^λ with coefficient 2^ℓ.
            let lead = table.iter().next_back();
            let expected = pow2(lambda.length() as i64);
            match lead {
                Some((mu, c)) if *mu == lambda.as_partition() && *c == expected => {}
                Some((mu, c)) => {
                    return Err(Error::Internal(format!(
                        "leading monomial of Q_{lambda} is {c}·m_{mu}, expected {expected}·m_{lambda}"
                    )))
                }
                None if n == 0 => {}
                None => return Err(Error::Internal(format!("Q_{lambda} vanished in {n} variables"))),
            }
            rows.insert(lambda, table);
        }
        Ok(QBasis { rows })
    }

    fn get(n: usize) -> Result<Arc<QBasis>> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<QBasis>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(b) = cache.lock().expect("cache lock").get(&n) {
            return Ok(b.clone());
        }
        let built = Arc::new(QBasis::build(n)?);
        cache.lock().expect("cache lock").insert(n, built.clone());
        Ok(built)
    }
}

/// Writes a degree-`n` symmetric function, given by its `m_μ`
/// coefficients, in the `Q_λ` basis by triangular elimination from the
/// lexicographically largest monomial down. A surviving coefficient on a
/// non-strict `μ` means the input is not in `Γ`.
pub fn expand_in_q_basis(f: &BTreeMap<Partition, Rational>, n: usize) -> Result<QExpansion> {
    if let Some(mu) = f.keys().find(|mu| mu.size() != n) {
        return Err(Error::InvalidArgument(format!("m_{mu} does not have degree {n}")));
    }
    let basis = QBasis::get(n)?;
    let mut rest: BTreeMap<Partition, Rational> = f
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    let mut out = QExpansion::zero(n);
    while let Some((mu, c)) = rest.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) {
        if !mu.is_strict() {
            return Err(Error::NotInGamma(format!(
                "after eliminating strict shapes, m_{mu} keeps coefficient {c}"
            )));
        }
        let lambda = StrictPartition::new(mu.parts().to_vec())?;
        let row = &basis.rows[&lambda];
        let d = &c / pow2(lambda.length() as i64);
        for (nu, q) in row {
            let entry = rest.entry(nu.clone()).or_insert_with(Rational::zero);
            *entry -= &d * q;
            if entry.is_zero() {
                rest.remove(nu);
            }
        }
        out.add_term(lambda, d)?;
    }
    Ok(out)
}

/// `Σ_λ c_λ Q_λ` for a multiset of `q_ρ` generators, each given by its
/// sorted nonzero parts and a multiplicity.
fn expand_q_products(n: usize, products: &BTreeMap<Partition, u64>) -> Result<QExpansion> {
    let m = n.max(1);
    let mut f: BTreeMap<Partition, Rational> = BTreeMap::new();
    for (rho, &count) in products {
        let table = monomial_expand(&q_nu(m, rho.parts(), None), n)?;
        for (mu, c) in table {
            *f.entry(mu).or_insert_with(Rational::zero) += c * rat(count as i64);
        }
    }
    f.retain(|_, c| !c.is_zero());
    expand_in_q_basis(&f, n)
}

/// `Σ_{ν ⊨ n, n(ν) = j} q_ν` in the `Q_λ` basis. Compositions may have
/// zero parts but no trailing zero.
pub fn ch_sym_degree(n: usize, j: usize) -> Result<QExpansion> {
    let mut products: BTreeMap<Partition, u64> = BTreeMap::new();
    for nu in enumerate_compositions_with(n, j + 1, j) {
        if nu.n_stat() == j {
            *products.entry(nu.sorted()).or_insert(0) += 1;
        }
    }
    expand_q_products(n, &products)
}

/// `Σ q_α q_β` over `α ⊨ n-q`, `β ⊨ q` with `n(α) + n(β) = p`, in the
/// `Q_λ` basis.
pub fn ch_bigraded_degree(n: usize, p: usize, q: usize) -> Result<QExpansion> {
    if q > n {
        return Err(Error::InvalidArgument(format!("q = {q} exceeds n = {n}")));
    }
    let alphas = enumerate_compositions_with(n - q, p + 1, p);
    let betas = enumerate_compositions_with(q, p + 1, p);
    let mut products: BTreeMap<Partition, u64> = BTreeMap::new();
    for a in &alphas {
        for b in &betas {
            if a.n_stat() + b.n_stat() != p {
                continue;
            }
            let mut parts: Vec<usize> = a.parts().iter().chain(b.parts()).copied().filter(|&x| x > 0).collect();
            parts.sort_unstable_by(|x, y| y.cmp(x));
            let rho = Partition::new(parts)?;
            *products.entry(rho).or_insert(0) += 1;
        }
    }
    expand_q_products(n, &products)
}

/// Compares `Π_{i,j} (1 + y_i z_j)/(1 - y_i z_j)` with
/// `Σ_λ 2^{-ℓ(λ)} Q_λ(y) Q_λ(z)` through degree `n` in each alphabet. The
/// variables `y` come first.
pub fn cauchy_check(n: usize, m_y: usize, m_z: usize) -> Result<bool> {
    let nv = m_y + m_z;
    let cap = 2 * n as u32;
    // (1 + x)/(1 - x) = 1 + 2x + 2x^2 + …
    let mut lhs = MultiPoly::one(nv).with_degree_cap(cap);
    for i in 0..m_y {
        for j in 0..m_z {
            let mut factor = MultiPoly::one(nv).with_degree_cap(cap);
            for k in 1..=n as u32 {
                let mut e = vec![0; nv];
                e[i] = k;
                e[m_y + j] = k;
                factor.add_term(e, rat(2));
            }
            lhs = lhs.mul_poly(&factor);
        }
    }
    let mut rhs = MultiPoly::zero(nv).with_degree_cap(cap);
    for size in 0..=n {
        for lambda in enumerate_strict(size) {
            if lambda.length() > m_y.min(m_z) {
                continue;
            }
            let qy = schur_q_tableau(&lambda, m_y).embed(nv, &(0..m_y).collect::<Vec<_>>());
            let qz = schur_q_tableau(&lambda, m_z).embed(nv, &(m_y..nv).collect::<Vec<_>>());
            let term = qy.mul_poly(&qz).scale(&pow2(-(lambda.length() as i64)));
            rhs = &rhs + &term;
        }
    }
    // Only bidegrees (d, d) with d <= n are compared.
    let within = |e: &Vec<u32>| {
        let dy: u32 = e[..m_y].iter().sum();
        let dz: u32 = e[m_y..].iter().sum();
        dy <= n as u32 && dz <= n as u32
    };
    let diff = &lhs + &rhs.scale(&rat(-1));
    Ok(diff.terms().keys().all(|e| !within(e)))
}

/// True when every coefficient has a power-of-two denominator.
pub fn is_dyadic(e: &QExpansion) -> bool {
    e.coeffs()
        .values()
        .all(|c| crate::series::has_dyadic_denominator(&c.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat_frac;
    use crate::tableaux::enumerate_marked;
    use proptest::prelude::*;

    fn sp(v: &[usize]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn tableau_sum(lambda: &StrictPartition, m: usize) -> MultiPoly {
        let mut p = MultiPoly::zero(m);
        for t in enumerate_marked(lambda, m as u32) {
            let w = t.weight(m);
            p.add_term(w.parts().iter().map(|&x| x as u32).collect(), Rational::one());
        }
        p
    }

    #[test]
    fn generators() {
        let q1 = q_r(3, 1, None);
        assert_eq!(q1.to_string(), "2z1 + 2z2 + 2z3");
        assert_eq!(q_r(3, 0, None), MultiPoly::one(3));
        assert_eq!(q_r(1, 2, None).to_string(), "2z1^2");
        assert_eq!(q_nu(2, &[0, 2], None), q_r(2, 2, None));
        assert_eq!(q_nu(2, &[1, 1], None), q_r(2, 1, None).pow(2));
        assert_eq!(q_nu(1, &[2, 1], None).eval(&[rat(1)]).unwrap(), rat(4));
    }

    #[test]
    fn tableau_q_functions() {
        assert_eq!(schur_q_tableau(&sp(&[1]), 3), q_r(3, 1, None));
        assert_eq!(schur_q_tableau(&sp(&[2, 1]), 2).to_string(), "4z1^2z2 + 4z1z2^2");
        assert_eq!(schur_q_tableau(&StrictPartition::empty(), 2), MultiPoly::one(2));
        for lambda in [sp(&[3]), sp(&[3, 1]), sp(&[4, 2, 1])] {
            assert_eq!(schur_q_tableau(&lambda, 3), tableau_sum(&lambda, 3));
        }
        // Q_(r) = q_r.
        assert_eq!(schur_q_tableau(&sp(&[4]), 3), q_r(3, 4, None));
    }

    #[test]
    fn symmetrization_examples() {
        assert_eq!(schur_q_symmetrized(&sp(&[1]), &[rat(1), rat(2)]).unwrap(), rat(6));
        assert_eq!(
            schur_q_symmetrized(&StrictPartition::empty(), &[rat(3)]).unwrap(),
            rat(1)
        );
        assert!(schur_q_symmetrized(&sp(&[1]), &[rat(1), rat(1)]).is_err());
        assert!(schur_q_symmetrized(&sp(&[2, 1]), &[rat(1)]).is_err());
    }

    #[test]
    fn monomial_expansions() {
        let m = monomial_expand(&q_r(3, 1, None), 1).unwrap();
        assert_eq!(m, BTreeMap::from([(part(&[1]), rat(2))]));
        let m = monomial_expand(&schur_q_tableau(&sp(&[2, 1]), 3), 3).unwrap();
        assert_eq!(m, BTreeMap::from([(part(&[2, 1]), rat(4)), (part(&[1, 1, 1]), rat(8))]));
        let m = monomial_expand(&q_r(2, 2, None), 2).unwrap();
        assert_eq!(m, BTreeMap::from([(part(&[2]), rat(2)), (part(&[1, 1]), rat(4))]));
        let lopsided = MultiPoly::var(2, 0);
        assert!(matches!(monomial_expand(&lopsided, 1), Err(Error::NotSymmetric(_))));
        let mut skew = q_r(2, 2, None);
        skew.add_term(vec![0, 2], rat(1));
        assert!(matches!(monomial_expand(&skew, 2), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn basis_expansions() {
        for lambda in crate::partitions::enumerate_strict_up_to(7) {
            let n = lambda.size();
            let f = monomial_expand(&schur_q_tableau(&lambda, n.max(1)), n).unwrap();
            assert_eq!(expand_in_q_basis(&f, n).unwrap(), QExpansion::basis(&lambda));
        }
        let q3 = monomial_expand(&q_r(3, 3, None), 3).unwrap();
        assert_eq!(expand_in_q_basis(&q3, 3).unwrap(), QExpansion::basis(&sp(&[3])));
        // q_2 q_1 = 4m_3 + 12m_21 + 24m_111 = 2Q_3 + Q_21.
        let f = monomial_expand(&q_nu(3, &[2, 1], None), 3).unwrap();
        assert_eq!(f[&part(&[2, 1])], rat(12));
        let e = expand_in_q_basis(&f, 3).unwrap();
        assert_eq!(e.coeff(&sp(&[3])), rat(2));
        assert_eq!(e.coeff(&sp(&[2, 1])), rat(1));
        assert_eq!(e.to_string(), "2Q(3) + Q(2,1)");
        let half = e.scale(&rat_frac(1, 4));
        assert_eq!(half.to_string(), "(1/2)Q(3) + (1/4)Q(2,1)");
        let j = half.to_json();
        assert_eq!(j["terms"][0]["partition"], serde_json::json!([3]));
        assert_eq!(j["terms"][1]["coeff"], serde_json::json!([1, 4]));
    }

    #[test]
    fn schur_s_is_not_in_gamma() {
        // s_(1,1) = m_(1,1) lies outside Γ.
        let f = BTreeMap::from([(part(&[1, 1]), rat(1))]);
        assert!(matches!(expand_in_q_basis(&f, 2), Err(Error::NotInGamma(_))));
    }

    #[test]
    fn characters() {
        assert_eq!(ch_sym_degree(4, 0).unwrap(), QExpansion::basis(&sp(&[4])));
        // Only ν = (2,1) has n(ν) = 1.
        let e = ch_sym_degree(3, 1).unwrap();
        assert_eq!(e.coeff(&sp(&[3])), rat(2));
        assert_eq!(e.coeff(&sp(&[2, 1])), rat(1));
        assert_eq!(ch_bigraded_degree(4, 0, 4).unwrap(), QExpansion::basis(&sp(&[4])));
        for p in 0..4 {
            assert_eq!(ch_bigraded_degree(4, p, 0).unwrap(), ch_sym_degree(4, p).unwrap());
        }
        for n in 1..=5 {
            for j in 0..6 {
                assert!(is_dyadic(&ch_sym_degree(n, j).unwrap()));
            }
        }
        assert!(ch_bigraded_degree(2, 0, 3).is_err());
    }

    #[test]
    fn cauchy_small() {
        assert!(cauchy_check(0, 2, 2).unwrap());
        assert!(cauchy_check(1, 2, 2).unwrap());
        assert!(cauchy_check(3, 2, 2).unwrap());
    }

    #[test]
    fn symmetrization_at_random_points() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
        for lambda in crate::partitions::enumerate_strict_up_to(6) {
            let m = lambda.size() + 1;
            let poly = schur_q_tableau(&lambda, m);
            for _ in 0..50 {
                let mut pts: Vec<Rational> = Vec::with_capacity(m);
                while pts.len() < m {
                    let x = rat_frac(rng.gen_range(-40..40), rng.gen_range(1..6));
                    if !pts.contains(&x) {
                        pts.push(x);
                    }
                }
                assert_eq!(
                    schur_q_symmetrized(&lambda, &pts).unwrap(),
                    poly.eval(&pts).unwrap(),
                    "{lambda}"
                );
            }
        }
    }

    fn distinct_points(m: usize) -> impl Strategy<Value = Vec<Rational>> {
        prop::collection::btree_set((-30i64..30, 1i64..5), m..=m).prop_filter_map("distinct", move |s| {
            let mut v: Vec<Rational> = s.into_iter().map(|(a, b)| rat_frac(a, b)).collect();
            v.sort();
            v.dedup();
            (v.len() == m).then_some(v)
        })
    }

    fn small_strict() -> impl Strategy<Value = StrictPartition> {
        prop::sample::select(crate::partitions::enumerate_strict_up_to(5))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn symmetrized_matches_tableau_sum(lambda in small_strict(), pts in distinct_points(4)) {
            let m = pts.len();
            let t = schur_q_tableau(&lambda, m).eval(&pts).unwrap();
            prop_assert_eq!(schur_q_symmetrized(&lambda, &pts).unwrap(), t);
        }

        #[test]
        fn symmetric_under_permutation(lambda in small_strict(), pts in distinct_points(3), k in 0usize..6) {
            let q = schur_q_tableau(&lambda, 3);
            let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
            let permuted: Vec<Rational> = perms[k].iter().map(|&i| pts[i].clone()).collect();
            prop_assert_eq!(q.eval(&pts).unwrap(), q.eval(&permuted).unwrap());
            prop_assert!(q.is_homogeneous(lambda.size() as u32));
        }

        #[test]
        fn stable_in_variable_count(lambda in small_strict(), m in 1usize..4) {
            let big = schur_q_tableau(&lambda, m + 1).restrict_leading(m);
            prop_assert_eq!(big, schur_q_tableau(&lambda, m));
        }
    }
}
