//! Acceptance suite: every criterion at its stated bound, one PASS/FAIL
//! line each. Runs without the libtest harness so the lines always print.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::Instant;

use shiftedq::bijection::{forward, forward_stages, inverse};
use shiftedq::classical::{kirillov_pak, kirillov_series, schur_principal, solomon_series};
use shiftedq::multiplicities::{
    basic_coinv, basic_mult, bigraded_mult, graded_mult_coinv, graded_mult_sym, normalization, regular_check,
};
use shiftedq::partitions::{enumerate_partitions, enumerate_strict, enumerate_strict_up_to};
use shiftedq::qfunctions::{cauchy_check, ch_bigraded_degree, ch_sym_degree};
use shiftedq::series::pow2;
use shiftedq::specializations::{
    q_one_s_closed, q_one_s_direct, q_principal_hook, q_principal_rosengren, q_principal_tableau,
};
use shiftedq::tableaux::{
    count_standard_shifted, enumerate_colored, enumerate_marked, rpt_degree_counts, validate_colored, validate_marked,
    ColoredShiftedTableau, MarkedShiftedTableau,
};
use shiftedq::{Partition, Result, Series, StrictPartition};

type Outcome = Result<std::result::Result<String, String>>;
type Criterion = (&'static str, fn() -> Outcome);

fn shapes(max: usize) -> Vec<StrictPartition> {
    enumerate_strict_up_to(max)
        .into_iter()
        .filter(|l| !l.is_empty())
        .collect()
}

fn oracle_scale(l: &StrictPartition) -> shiftedq::Rational {
    pow2(((l.length() - l.delta()) / 2) as i64)
}

fn principal_three_ways() -> Outcome {
    let trunc = 21;
    let all = shapes(8);
    for l in &all {
        let hook = q_principal_hook(l, trunc);
        if hook != q_principal_rosengren(l, trunc) || hook != q_principal_tableau(l, trunc)? {
            return Ok(Err(format!("disagreement at ({l})")));
        }
    }
    if all.len() != 24 {
        return Ok(Err(format!("expected 24 shapes, found {}", all.len())));
    }
    Ok(Ok(format!("{} shapes, t-degree 20", all.len())))
}

fn exchange_bijection() -> Outcome {
    let t = MarkedShiftedTableau::parse_text("1' 1 2' 2 2\n2' 2 3' 3\n3' 3")?;
    let expected = [
        ColoredShiftedTableau::parse_text("1' 1")?,
        ColoredShiftedTableau::parse_text("1' 2' 1 2 2\n2' 2")?,
        ColoredShiftedTableau::parse_text("1' 2' 3' 1 2\n2' 2 2 3\n3' 3")?,
    ];
    if forward_stages(&t)? != expected {
        return Ok(Err("worked example stages differ".into()));
    }
    let mut total = 0;
    for l in shapes(8) {
        for m in 1..=4u32 {
            let marked = enumerate_marked(&l, m);
            let colored = enumerate_colored(&l, m);
            let mut images = HashSet::new();
            for t in &marked {
                let (c, _) = forward(t)?;
                if validate_colored(c.filling()).is_err() || c.weight(m as usize) != t.weight(m as usize) {
                    return Ok(Err(format!("forward breaks validity or weight on\n{t}")));
                }
                if inverse(&c)?.0 != *t {
                    return Ok(Err(format!("inverse∘forward fails on\n{t}")));
                }
                images.insert(c);
            }
            for c in &colored {
                let (t, _) = inverse(c)?;
                if validate_marked(t.filling()).is_err() || forward(&t)?.0 != *c {
                    return Ok(Err(format!("forward∘inverse fails on\n{c}")));
                }
            }
            let targets: HashSet<_> = colored.iter().cloned().collect();
            if images.len() != marked.len() || images != targets {
                return Ok(Err(format!("forward is not onto the colored set for ({l}), m = {m}")));
            }
            total += marked.len();
        }
    }
    Ok(Ok(format!(
        "{total} tableaux over 24 shapes and m <= 4, worked example reproduced"
    )))
}

fn sym_oracle() -> Outcome {
    let mut checked = 0;
    for n in 1..=6 {
        let chars: Vec<_> = (0..=8).map(|j| ch_sym_degree(n, j)).collect::<Result<_>>()?;
        for l in enumerate_strict(n) {
            let hook = q_principal_hook(&l, 9);
            let mult = graded_mult_sym(&l, 9)?;
            for (j, e) in chars.iter().enumerate() {
                if mult.coeff(j) != e.coeff(&l) * oracle_scale(&l) || hook.coeff(j) * normalization(&l) != mult.coeff(j)
                {
                    return Ok(Err(format!("({l}) at t^{j}")));
                }
                checked += 1;
            }
        }
    }
    Ok(Ok(format!("{checked} coefficients")))
}

fn bigraded_oracle() -> Outcome {
    let mut checked = 0;
    for n in 1..=5 {
        for l in enumerate_strict(n) {
            let b = bigraded_mult(&l, 6)?;
            for q in 0..=n {
                for p in 0..=5 {
                    if b.coeff_at(q, p) != ch_bigraded_degree(n, p, q)?.coeff(&l) * oracle_scale(&l) {
                        return Ok(Err(format!("({l}) at s^{q} t^{p}")));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(Ok(format!("{checked} coefficients")))
}

fn regular_module() -> Outcome {
    let all = shapes(9);
    for l in &all {
        let g = count_standard_shifted(l)?;
        if g.enumerated != g.hook_formula {
            return Ok(Err(format!("standard count of ({l})")));
        }
        let (value, expected) = regular_check(l)?;
        if value != expected {
            return Ok(Err(format!("({l}): {value} vs {expected}")));
        }
    }
    Ok(Ok(format!("{} shapes", all.len())))
}

fn basic_module() -> Outcome {
    for n in 1..=10 {
        let l = StrictPartition::new(vec![n])?;
        if graded_mult_sym(&l, 24)? != basic_mult(n, 24) {
            return Ok(Err(format!("graded multiplicity, n = {n}")));
        }
        if graded_mult_coinv(&l)? != basic_coinv(n) {
            return Ok(Err(format!("coinvariant multiplicity, n = {n}")));
        }
    }
    Ok(Ok("n <= 10".into()))
}

fn cauchy() -> Outcome {
    Ok(if cauchy_check(4, 3, 3)? {
        Ok("3+3 variables, degree 4".into())
    } else {
        Err("coefficients differ".into())
    })
}

fn reverse_plane_tableaux() -> Outcome {
    let trunc = 13;
    for l in shapes(6) {
        let brute = Series::from_counts(&rpt_degree_counts(&l, trunc), trunc);
        let hooks = l.shifted_hooks().into_iter().fold(Series::one(trunc), |a, h| {
            a.mul_series(&Series::inv_one_minus(h, trunc).unwrap())
        });
        if brute != hooks {
            return Ok(Err(format!("({l})")));
        }
    }
    Ok(Ok(format!("{} shapes, degree 12", shapes(6).len())))
}

fn two_variable() -> Outcome {
    let mut zeros = 0;
    for l in shapes(7) {
        let closed = q_one_s_closed(&l);
        if closed != q_one_s_direct(&l) {
            return Ok(Err(format!("({l})")));
        }
        if l.length() >= 3 {
            if !closed.is_zero() {
                return Ok(Err(format!("({l}) should vanish")));
            }
            zeros += 1;
        }
    }
    Ok(Ok(format!("{} shapes, {zeros} vanishing", shapes(7).len())))
}

fn koszul() -> Outcome {
    for l in shapes(6) {
        let collapsed = bigraded_mult(&l, 11)?.collapse_t_as_power_of_s(2, 21)?;
        if collapsed != graded_mult_sym(&l, 21)? {
            return Ok(Err(format!("({l})")));
        }
    }
    Ok(Ok(format!("{} shapes, degree 20", shapes(6).len())))
}

fn classical() -> Outcome {
    let mut count = 0;
    for n in 1..=8 {
        for l in enumerate_partitions(n) {
            if kirillov_series(&l, 17) != schur_principal(&l, 17) {
                return Ok(Err(format!("Kirillov at ({l})")));
            }
            count += 1;
        }
    }
    for n in 1..=8 {
        if kirillov_pak(&Partition::new(vec![n])?, 24) != solomon_series(n, 24) {
            return Ok(Err(format!("Solomon at n = {n}")));
        }
    }
    Ok(Ok(format!("{count} partitions to degree 16, n <= 8")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("principal specialization three ways", principal_three_ways),
        ("exchange bijection", exchange_bijection),
        ("graded multiplicity oracle", sym_oracle),
        ("bi-graded multiplicity oracle", bigraded_oracle),
        ("regular module dimension", regular_module),
        ("basic module", basic_module),
        ("Cauchy identity", cauchy),
        ("reverse plane tableaux", reverse_plane_tableaux),
        ("two-variable evaluation", two_variable),
        ("t = s^2 specialization", koszul),
        ("classical formulas", classical),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let (mark, detail) = match outcome {
            Ok(Ok(d)) => ("PASS", d),
            Ok(Err(d)) => ("FAIL", d),
            Err(e) => ("FAIL", format!("error: {e}")),
        };
        if mark == "FAIL" {
            failed += 1;
        }
        println!("{mark} {:>2} {name}: {detail} ({secs:.2} s)", i + 1);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
