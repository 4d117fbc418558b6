//! Self-checks comparing every closed formula with its brute-force
//! counterpart, at a quick level (shapes up to size 6) or a full level.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use num_traits::Zero;
use serde::Serialize;

use crate::bijection::{forward, forward_stages, inverse};
use crate::classical::{kirillov_pak, kirillov_series, schur_principal, solomon_series};
use crate::error::Result;
use crate::multiplicities::{
    basic_coinv, basic_mult, bigraded_mult, graded_mult_coinv, graded_mult_sym, regular_check, wedge_mult,
};
use crate::partitions::{enumerate_partitions, enumerate_strict, enumerate_strict_up_to, StrictPartition};
use crate::qfunctions::{cauchy_check, ch_bigraded_degree, ch_sym_degree};
use crate::series::{pow2, Series};
use crate::specializations::{
    q_one_s_closed, q_one_s_direct, q_principal_hook, q_principal_rosengren, q_principal_tableau,
};
use crate::tableaux::{
    count_standard_shifted, enumerate_colored, enumerate_marked, rpt_degree_counts, ColoredShiftedTableau,
    MarkedShiftedTableau,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Quick,
    Full,
}

/// Size limits for each check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub principal_size: usize,
    pub principal_degree: usize,
    pub bijection_size: usize,
    pub bijection_letters: u32,
    pub sym_n: usize,
    pub sym_degree: usize,
    pub bigraded_n: usize,
    pub bigraded_p: usize,
    pub regular_size: usize,
    pub basic_n: usize,
    pub cauchy_vars: usize,
    pub cauchy_degree: usize,
    pub rpt_size: usize,
    pub rpt_degree: usize,
    pub two_var_size: usize,
    pub koszul_size: usize,
    pub koszul_degree: usize,
    pub kirillov_size: usize,
    pub kirillov_degree: usize,
    pub solomon_n: usize,
}

impl Bounds {
    pub fn for_level(level: Level) -> Self {
        match level {
            Level::Quick => Bounds {
                principal_size: 6,
                principal_degree: 12,
                bijection_size: 6,
                bijection_letters: 3,
                sym_n: 4,
                sym_degree: 6,
                bigraded_n: 4,
                bigraded_p: 4,
                regular_size: 6,
                basic_n: 6,
                cauchy_vars: 2,
                cauchy_degree: 3,
                rpt_size: 6,
                rpt_degree: 10,
                two_var_size: 6,
                koszul_size: 6,
                koszul_degree: 14,
                kirillov_size: 6,
                kirillov_degree: 12,
                solomon_n: 6,
            },
            Level::Full => Bounds {
                principal_size: 8,
                principal_degree: 20,
                bijection_size: 8,
                bijection_letters: 4,
                sym_n: 6,
                sym_degree: 8,
                bigraded_n: 5,
                bigraded_p: 5,
                regular_size: 9,
                basic_n: 10,
                cauchy_vars: 3,
                cauchy_degree: 4,
                rpt_size: 6,
                rpt_degree: 12,
                two_var_size: 7,
                koszul_size: 6,
                koszul_degree: 20,
                kirillov_size: 8,
                kirillov_degree: 16,
                solomon_n: 8,
            },
        }
    }
}

/// Outcome of one check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{mark}  {:<28} {} ({} ms)", self.name, self.detail, self.millis)
    }
}

fn shapes(max: usize) -> Vec<StrictPartition> {
    enumerate_strict_up_to(max)
        .into_iter()
        .filter(|l| !l.is_empty())
        .collect()
}

/// Runs `f`, turning an error into a failure whose detail is the message.
fn timed(name: &'static str, f: impl FnOnce() -> Result<(bool, String)>) -> CheckResult {
    let start = Instant::now();
    let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
    CheckResult {
        name,
        passed,
        detail,
        millis: start.elapsed().as_millis(),
    }
}

/// Hook product, pair product and tableau sums agree.
pub fn check_principal(max: usize, degree: usize) -> Result<(bool, String)> {
    let trunc = degree + 1;
    for l in shapes(max) {
        let h = q_principal_hook(&l, trunc);
        if h != q_principal_rosengren(&l, trunc) {
            return Ok((false, format!("pair product differs at {l}")));
        }
        if h != q_principal_tableau(&l, trunc)? {
            return Ok((false, format!("tableau sum differs at {l}")));
        }
    }
    Ok((true, format!("{} shapes, degree {degree}", shapes(max).len())))
}

fn worked_example() -> Result<bool> {
    let parse_m = |s: &str| MarkedShiftedTableau::parse_text(s);
    let parse_c = |s: &str| ColoredShiftedTableau::parse_text(s);
    let t = parse_m("1' 1 2' 2 2\n2' 2 3' 3\n3' 3")?;
    let stages = forward_stages(&t)?;
    let expected = [
        parse_c("1' 1")?,
        parse_c("1' 2' 1 2 2\n2' 2")?,
        parse_c("1' 2' 3' 1 2\n2' 2 2 3\n3' 3")?,
    ];
    Ok(stages == expected && inverse(&expected[2])?.0 == t)
}

/// Forward and inverse exchange maps are mutually inverse bijections that
/// preserve shape and weight.
pub fn check_bijection(max: usize, letters: u32) -> Result<(bool, String)> {
    if !worked_example()? {
        return Ok((false, "worked example on (5,4,2) not reproduced".into()));
    }
    let mut total = 0usize;
    for l in shapes(max) {
        let marked = enumerate_marked(&l, letters);
        let colored = enumerate_colored(&l, letters);
        let mut images = BTreeSet::new();
        for t in &marked {
            let (c, _) = forward(t)?;
            if c.weight(letters as usize) != t.weight(letters as usize) || inverse(&c)?.0 != *t {
                return Ok((false, format!("round trip fails on\n{t}")));
            }
            images.insert(c.to_string());
        }
        for c in &colored {
            let (t, _) = inverse(c)?;
            if forward(&t)?.0 != *c {
                return Ok((false, format!("forward∘inverse fails on\n{c}")));
            }
        }
        let targets: BTreeSet<String> = colored.iter().map(|c| c.to_string()).collect();
        if images.len() != marked.len() || images != targets {
            return Ok((false, format!("image of forward is not the colored set for {l}")));
        }
        total += marked.len();
    }
    Ok((true, format!("{total} tableaux, letters <= {letters}")))
}

/// Graded multiplicities in `C_n ⊗ S*V` against the character oracle.
pub fn check_sym_oracle(max_n: usize, max_j: usize) -> Result<(bool, String)> {
    let mut cells = 0;
    for n in 1..=max_n {
        let expansions: Vec<_> = (0..=max_j).map(|j| ch_sym_degree(n, j)).collect::<Result<_>>()?;
        for l in enumerate_strict(n) {
            let series = q_principal_hook(&l, max_j + 1);
            let scale = pow2(-(((l.length() + l.delta()) / 2) as i64));
            let oracle_scale = pow2(((l.length() - l.delta()) / 2) as i64);
            for (j, e) in expansions.iter().enumerate() {
                if series.coeff(j) * &scale != e.coeff(&l) * &oracle_scale {
                    return Ok((false, format!("{l}, t^{j}")));
                }
                cells += 1;
            }
        }
    }
    Ok((true, format!("{cells} coefficients")))
}

/// Bi-graded multiplicities against the character oracle.
pub fn check_bigraded_oracle(max_n: usize, max_p: usize) -> Result<(bool, String)> {
    let mut cells = 0;
    for n in 1..=max_n {
        for l in enumerate_strict(n) {
            let b = bigraded_mult(&l, max_p + 1)?;
            let oracle_scale = pow2(((l.length() - l.delta()) / 2) as i64);
            for q in 0..=n {
                for p in 0..=max_p {
                    let e = ch_bigraded_degree(n, p, q)?;
                    if b.coeff_at(q, p) != e.coeff(&l) * &oracle_scale {
                        return Ok((false, format!("{l}, s^{q} t^{p}")));
                    }
                    cells += 1;
                }
            }
        }
    }
    Ok((true, format!("{cells} coefficients")))
}

/// Coinvariant multiplicity at `t = 1` against `2^{-δ} dim D^λ`, with the
/// standard tableau count checked against the hook formula.
pub fn check_regular(max: usize) -> Result<(bool, String)> {
    for l in shapes(max) {
        count_standard_shifted(&l)?;
        let (value, expected) = regular_check(&l)?;
        if value != expected {
            return Ok((false, format!("{l}: {value} vs {expected}")));
        }
    }
    Ok((true, format!("{} shapes", shapes(max).len())))
}

/// Multiplicities of the basic module `D^{(n)}`.
pub fn check_basic(max_n: usize, trunc: usize) -> Result<(bool, String)> {
    for n in 1..=max_n {
        let l = StrictPartition::new(vec![n])?;
        if graded_mult_sym(&l, trunc)? != basic_mult(n, trunc) || graded_mult_coinv(&l)? != basic_coinv(n) {
            return Ok((false, format!("n = {n}")));
        }
    }
    Ok((true, format!("n <= {max_n}")))
}

pub fn check_cauchy(vars: usize, degree: usize) -> Result<(bool, String)> {
    Ok((
        cauchy_check(degree, vars, vars)?,
        format!("{vars}+{vars} variables, degree {degree}"),
    ))
}

/// Reverse plane tableau counts against `Π 1/(1 - t^{h*})`.
pub fn check_rpt(max: usize, degree: usize) -> Result<(bool, String)> {
    let trunc = degree + 1;
    for l in shapes(max) {
        let brute = Series::from_counts(&rpt_degree_counts(&l, trunc), trunc);
        let product = l.shifted_hooks().into_iter().fold(Series::one(trunc), |a, h| {
            a.mul_series(&Series::inv_one_minus(h, trunc).expect("h >= 1"))
        });
        if brute != product {
            return Ok((false, format!("{l}")));
        }
    }
    Ok((true, format!("{} shapes, degree {degree}", shapes(max).len())))
}

/// Two-row closed form of `Q_λ(1, s)` against the two-variable tableau sum.
pub fn check_two_variable(max: usize) -> Result<(bool, String)> {
    let mut zero_cases = 0;
    for l in shapes(max) {
        let closed = q_one_s_closed(&l);
        if closed != q_one_s_direct(&l) {
            return Ok((false, format!("{l}")));
        }
        if l.length() >= 3 {
            zero_cases += 1;
        }
    }
    Ok((
        true,
        format!("{} shapes ({zero_cases} with three or more rows)", shapes(max).len()),
    ))
}

/// `t = s²` in the bi-graded multiplicity against the graded one in `s`.
pub fn check_koszul(max: usize, degree: usize) -> Result<(bool, String)> {
    let strunc = degree + 1;
    let ttrunc = strunc.div_ceil(2);
    for l in shapes(max) {
        let collapsed = bigraded_mult(&l, ttrunc)?.collapse_t_as_power_of_s(2, strunc)?;
        if collapsed != graded_mult_sym(&l, strunc)? {
            return Ok((false, format!("{l}")));
        }
    }
    Ok((true, format!("{} shapes, degree {degree}", shapes(max).len())))
}

/// Kirillov against semistandard tableaux, Kirillov–Pak against Solomon.
pub fn check_classical(max: usize, degree: usize, solomon_n: usize) -> Result<(bool, String)> {
    let trunc = degree + 1;
    let mut count = 0;
    for n in 1..=max {
        for l in enumerate_partitions(n) {
            if kirillov_series(&l, trunc) != schur_principal(&l, trunc) {
                return Ok((false, format!("Kirillov at {l}")));
            }
            count += 1;
        }
    }
    for n in 1..=solomon_n {
        let row = crate::partitions::Partition::new(vec![n])?;
        if kirillov_pak(&row, trunc) != solomon_series(n, trunc) {
            return Ok((false, format!("Solomon at n = {n}")));
        }
    }
    Ok((true, format!("{count} partitions, degree {degree}; n <= {solomon_n}")))
}

/// Exterior multiplicities are the `t = 0` column of the bi-graded ones.
pub fn check_wedge_column(max: usize) -> Result<(bool, String)> {
    for l in shapes(max) {
        let col = bigraded_mult(&l, 1)?.at_t_zero();
        if col.coeffs() != wedge_mult(&l)?.coeffs() || col.coeffs().iter().any(|c| c < &Zero::zero()) {
            return Ok((false, format!("{l}")));
        }
    }
    Ok((true, format!("{} shapes", shapes(max).len())))
}

/// Every check at the given level, in a fixed order.
pub fn run(level: Level) -> Vec<CheckResult> {
    let b = Bounds::for_level(level);
    vec![
        timed("principal specialization", || {
            check_principal(b.principal_size, b.principal_degree)
        }),
        timed("exchange bijection", || {
            check_bijection(b.bijection_size, b.bijection_letters)
        }),
        timed("graded multiplicity oracle", || check_sym_oracle(b.sym_n, b.sym_degree)),
        timed("bi-graded multiplicity oracle", || {
            check_bigraded_oracle(b.bigraded_n, b.bigraded_p)
        }),
        timed("regular module", || check_regular(b.regular_size)),
        timed("basic module", || check_basic(b.basic_n, 24)),
        timed("Cauchy identity", || check_cauchy(b.cauchy_vars, b.cauchy_degree)),
        timed("reverse plane tableaux", || check_rpt(b.rpt_size, b.rpt_degree)),
        timed("two-variable evaluation", || check_two_variable(b.two_var_size)),
        timed("t = s^2 specialization", || {
            check_koszul(b.koszul_size, b.koszul_degree)
        }),
        timed("classical formulas", || {
            check_classical(b.kirillov_size, b.kirillov_degree, b.solomon_n)
        }),
        timed("exterior column", || check_wedge_column(b.two_var_size.min(6))),
    ]
}
