use std::fmt::Write as _;
use std::fs;
use std::io::Read;

use serde_json::{json, Value};
use shiftedq::bijection::{forward, forward_stages, inverse, ExchangeTrace};
use shiftedq::classical::{kirillov_pak, kirillov_series, schur_principal, solomon_series};
use shiftedq::multiplicities::{bigraded_mult, graded_mult_coinv, graded_mult_sym, wedge_mult, SpinAdjustment};
use shiftedq::qfunctions::{
    cauchy_check, ch_bigraded_degree, ch_sym_degree, expand_in_q_basis, monomial_expand, q_nu, schur_q_symmetrized,
    schur_q_tableau, QExpansion,
};
use shiftedq::series::rational_json;
use shiftedq::specializations::{q_bigraded, q_principal_hook, q_principal_rosengren, q_principal_tableau};
use shiftedq::tableaux::{
    enumerate_colored, enumerate_marked, validate_colored, validate_marked, ColoredShiftedTableau, MarkedLetter,
    MarkedShiftedTableau, ShiftedFilling,
};
use shiftedq::verify::{self, Level};
use shiftedq::{Composition, Partition, Rational, Series, StrictPartition};

use crate::report::{CliError, Report};
use crate::{
    AlgebraArg, BijectionArgs, ClassicalArgs, Kind, LevelArg, Module, MultArgs, QfunCmd, ShapeArgs, ShapeView,
    SpecializeArgs, TableauxCmd, VerifyArgs,
};

type Out = Result<Report, CliError>;

fn strict(s: &str) -> Result<StrictPartition, CliError> {
    s.parse::<StrictPartition>()
        .map_err(|e| CliError::Usage(format!("--shape {s}: {e}")))
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{path}: {e}")))
    }
}

/// Splits a row-major list into the rows of `lengths`.
fn into_rows<T: Clone>(flat: &[T], lengths: &[usize]) -> Vec<Vec<T>> {
    let mut rows = Vec::with_capacity(lengths.len());
    let mut at = 0;
    for &len in lengths {
        rows.push(flat[at..at + len].to_vec());
        at += len;
    }
    rows
}

/// Left-aligned table of a Young diagram.
fn young_text<T: ToString>(rows: &[Vec<T>]) -> String {
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(T::to_string).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for r in &cells {
        let line: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

fn shifted_text(shape: &StrictPartition, flat: &[usize]) -> Result<String, CliError> {
    Ok(ShiftedFilling::new(shape.clone(), into_rows(flat, shape.parts()))?.to_text())
}

/// `c_0 + c_1 var + …` with no truncation marker.
fn poly_text(s: &Series, var: &str) -> String {
    let mut out = String::new();
    for (k, c) in s.coeffs().iter().enumerate() {
        if *c == Rational::from_integer(0.into()) {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if mono.is_empty() {
            out.push_str(&c.to_string());
        } else if *c == Rational::from_integer(1.into()) {
            out.push_str(&mono);
        } else {
            let _ = write!(out, "{c}{mono}");
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out.replace("+ -", "- ")
}

fn poly_json(s: &Series) -> Value {
    let top = s.degree().map_or(0, |d| d + 1);
    Value::Array(s.coeffs()[..top].iter().map(rational_json).collect())
}

pub fn shape(a: &ShapeArgs) -> Out {
    let all = [
        ShapeView::Hooks,
        ShapeView::Contents,
        ShapeView::Frobenius,
        ShapeView::Double,
    ];
    let views: Vec<ShapeView> = if a.show.is_empty() {
        all.to_vec()
    } else {
        a.show.clone()
    };
    let mut text = String::new();
    let mut doc = serde_json::Map::new();
    if let Some(s) = &a.strict {
        let l = strict(s)?;
        let _ = writeln!(
            text,
            "shape ({l}), size {}, length {}, n = {}",
            l.size(),
            l.length(),
            l.n_stat()
        );
        doc.insert("shape".into(), json!(l.parts()));
        doc.insert("strict".into(), json!(true));
        doc.insert("size".into(), json!(l.size()));
        doc.insert("n".into(), json!(l.n_stat()));
        for v in views {
            match v {
                ShapeView::Hooks => {
                    let h = l.shifted_hooks();
                    let _ = write!(text, "shifted hooks\n{}", shifted_text(&l, &h)?);
                    doc.insert("hooks".into(), json!(into_rows(&h, l.parts())));
                }
                ShapeView::Contents => {
                    let c = l.contents();
                    let _ = write!(text, "contents\n{}", shifted_text(&l, &c)?);
                    doc.insert("contents".into(), json!(into_rows(&c, l.parts())));
                }
                ShapeView::Frobenius => {
                    let f = l.double_partition().frobenius();
                    let _ = writeln!(text, "Frobenius coordinates of the double: {f}");
                    doc.insert("frobenius".into(), json!({"alpha": f.alpha, "beta": f.beta}));
                }
                ShapeView::Double => {
                    let d = l.double_partition();
                    let _ = writeln!(text, "double: ({d})");
                    doc.insert("double".into(), json!(d.parts()));
                }
            }
        }
    } else if let Some(s) = &a.partition {
        let p: Partition = s
            .parse()
            .map_err(|e| CliError::Usage(format!("--partition {s}: {e}")))?;
        let _ = writeln!(
            text,
            "shape ({p}), size {}, length {}, n = {}",
            p.size(),
            p.length(),
            p.n_stat()
        );
        doc.insert("shape".into(), json!(p.parts()));
        doc.insert("strict".into(), json!(false));
        doc.insert("size".into(), json!(p.size()));
        doc.insert("n".into(), json!(p.n_stat()));
        for v in views {
            match v {
                ShapeView::Hooks => {
                    let h = into_rows(&p.hooks(), p.parts());
                    let _ = write!(text, "hooks\n{}", young_text(&h));
                    doc.insert("hooks".into(), json!(h));
                }
                ShapeView::Contents => {
                    let c: Vec<i64> = p.cells().iter().map(|c| c.col as i64 - c.row as i64).collect();
                    let c = into_rows(&c, p.parts());
                    let _ = write!(text, "contents\n{}", young_text(&c));
                    doc.insert("contents".into(), json!(c));
                }
                ShapeView::Frobenius => {
                    let f = p.frobenius();
                    let _ = writeln!(text, "Frobenius coordinates: {f}");
                    doc.insert("frobenius".into(), json!({"alpha": f.alpha, "beta": f.beta}));
                }
                ShapeView::Double => {
                    let l = StrictPartition::new(p.parts().to_vec())
                        .map_err(|e| CliError::Usage(format!("the double needs a strict partition: {e}")))?;
                    let d = l.double_partition();
                    let _ = writeln!(text, "double: ({d})");
                    doc.insert("double".into(), json!(d.parts()));
                }
            }
        }
    }
    Ok(Report::new(text, Value::Object(doc)))
}

pub fn tableaux(cmd: TableauxCmd) -> Out {
    match cmd {
        TableauxCmd::Enumerate {
            shape,
            max_letter,
            kind,
            count,
        } => {
            let l = strict(&shape)?;
            let (texts, values): (Vec<String>, Vec<Value>) = match kind {
                Kind::Marked => enumerate_marked(&l, max_letter)
                    .iter()
                    .map(|t| (t.to_string(), json!(t)))
                    .unzip(),
                Kind::Colored => enumerate_colored(&l, max_letter)
                    .iter()
                    .map(|t| (t.to_string(), json!(t)))
                    .unzip(),
            };
            let kind_name = kind_name(kind);
            let mut text = format!(
                "{} {kind_name} tableaux of shape ({l}) with letters <= {max_letter}\n",
                texts.len()
            );
            let mut doc = json!({
                "shape": l.parts(),
                "kind": kind_name,
                "max_letter": max_letter,
                "count": texts.len(),
            });
            if !count {
                for t in &texts {
                    text.push('\n');
                    text.push_str(t);
                    if !t.ends_with('\n') {
                        text.push('\n');
                    }
                }
                doc["tableaux"] = Value::Array(values);
            }
            Ok(Report::new(text, doc))
        }
        TableauxCmd::Validate { kind, input } => {
            let filling = ShiftedFilling::<MarkedLetter>::parse_text(&read_input(&input)?)?;
            let verdict = match kind {
                Kind::Marked => validate_marked(&filling),
                Kind::Colored => validate_colored(&filling),
            };
            let kind_name = kind_name(kind);
            let (text, violation) = match &verdict {
                Ok(()) => (
                    format!("valid {kind_name} tableau of shape ({})\n", filling.shape()),
                    Value::Null,
                ),
                Err(v) => (format!("not a {kind_name} tableau: {v}\n"), json!(v.to_string())),
            };
            let doc = json!({
                "kind": kind_name,
                "shape": filling.shape().parts(),
                "valid": verdict.is_ok(),
                "violation": violation,
            });
            Ok(Report::new(text, doc).with_status(verdict.is_ok()))
        }
    }
}

fn kind_name(k: Kind) -> &'static str {
    match k {
        Kind::Marked => "marked",
        Kind::Colored => "colored",
    }
}

fn trace_json(t: &ExchangeTrace) -> Value {
    json!(t.steps)
}

pub fn bijection(a: &BijectionArgs) -> Out {
    let raw = read_input(&a.input)?;
    let mut text = String::new();
    let doc = if a.inverse {
        let c = ColoredShiftedTableau::parse_text(&raw)?;
        let (t, trace) = inverse(&c)?;
        if a.trace {
            let _ = writeln!(text, "{trace}");
        }
        text.push_str(&t.to_string());
        json!({
            "direction": "inverse",
            "input": c,
            "output": t,
            "trace": if a.trace { trace_json(&trace) } else { Value::Null },
        })
    } else {
        let t = MarkedShiftedTableau::parse_text(&raw)?;
        let (c, trace) = forward(&t)?;
        let mut stages = Value::Null;
        if a.stages {
            let all = forward_stages(&t)?;
            for (k, s) in all.iter().enumerate() {
                let _ = write!(text, "T^{}\n{s}\n", k + 1);
            }
            stages = json!(all);
        }
        if a.trace {
            let _ = writeln!(text, "{trace}");
        }
        if !a.stages {
            text.push_str(&c.to_string());
        }
        json!({
            "direction": "forward",
            "input": t,
            "output": c,
            "trace": if a.trace { trace_json(&trace) } else { Value::Null },
            "stages": stages,
        })
    };
    Ok(Report::new(text, doc))
}

fn expansion_report(what: String, e: &QExpansion) -> Report {
    let text = format!("{what} = {e}\n");
    let mut doc = e.to_json();
    doc["of"] = json!(what);
    Report::new(text, doc)
}

fn parse_point(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<Rational>()
                .map_err(|_| CliError::Usage(format!("`{tok}` is not a rational number")))
        })
        .collect()
}

pub fn qfun(cmd: QfunCmd) -> Out {
    match cmd {
        QfunCmd::Schur { shape, vars } => {
            let l = strict(&shape)?;
            let p = schur_q_tableau(&l, vars);
            Ok(Report::new(
                format!("Q({l})(z1..z{vars}) = {p}\n"),
                json!({"shape": l.parts(), "polynomial": p.to_json()}),
            ))
        }
        QfunCmd::Qnu { nu, vars } => {
            let nu: Composition = nu.parse()?;
            let p = q_nu(vars, nu.parts(), None);
            Ok(Report::new(
                format!("q({nu})(z1..z{vars}) = {p}\n"),
                json!({"nu": nu.parts(), "polynomial": p.to_json()}),
            ))
        }
        QfunCmd::Expand { nu } => {
            let nu: Composition = nu.parse()?;
            let n = nu.size();
            let f = monomial_expand(&q_nu(n, nu.parts(), None), n)?;
            let e = expand_in_q_basis(&f, n)?;
            Ok(expansion_report(format!("q({nu})"), &e))
        }
        QfunCmd::Ch { n, degree } => Ok(expansion_report(
            format!("ch_{n}[t^{degree}]"),
            &ch_sym_degree(n, degree)?,
        )),
        QfunCmd::ChBigraded { n, p, q } => Ok(expansion_report(
            format!("ch_{n}[s^{q} t^{p}]"),
            &ch_bigraded_degree(n, p, q)?,
        )),
        QfunCmd::Eval { shape, at } => {
            let l = strict(&shape)?;
            let point = parse_point(&at)?;
            let sym = schur_q_symmetrized(&l, &point)?;
            let tab = schur_q_tableau(&l, point.len()).eval(&point)?;
            let agree = sym == tab;
            let text = format!(
                "symmetrization: {sym}\ntableau sum:    {tab}\nagreement: {}\n",
                if agree { "yes" } else { "NO" }
            );
            let doc = json!({
                "shape": l.parts(),
                "point": point.iter().map(rational_json).collect::<Vec<_>>(),
                "symmetrization": rational_json(&sym),
                "tableau": rational_json(&tab),
                "agree": agree,
            });
            Ok(Report::new(text, doc).with_status(agree))
        }
        QfunCmd::Cauchy { n, vars } => {
            let ok = cauchy_check(n, vars, vars)?;
            let text = format!(
                "Cauchy identity in {vars}+{vars} variables through degree {n}: {}\n",
                if ok { "holds" } else { "FAILS" }
            );
            Ok(Report::new(text, json!({"degree": n, "vars": vars, "holds": ok})).with_status(ok))
        }
    }
}

pub fn specialize(a: &SpecializeArgs) -> Out {
    let l = strict(&a.shape)?;
    if a.bigraded {
        let b = q_bigraded(&l, a.trunc);
        return Ok(Report::new(
            format!("Q({l})(t; st) = {b}\n"),
            json!({"shape": l.parts(), "trunc": a.trunc, "bigraded": b.to_json()}),
        ));
    }
    let hook = q_principal_hook(&l, a.trunc);
    let pairs = q_principal_rosengren(&l, a.trunc);
    let tab = q_principal_tableau(&l, a.trunc);
    let agree = matches!(&tab, Ok(t) if *t == hook) && pairs == hook;
    let tab_text = match &tab {
        Ok(t) => t.to_string(),
        Err(e) => format!("error: {e}"),
    };
    let text = format!(
        "Q({l})(1, t, t^2, ...)\nhook product: {hook}\npair product: {pairs}\ntableau sum:  {tab_text}\nagreement: {}\n",
        if agree { "yes" } else { "NO" }
    );
    let doc = json!({
        "shape": l.parts(),
        "trunc": a.trunc,
        "hook": hook.to_json(),
        "pairs": pairs.to_json(),
        "tableau": tab.as_ref().map(Series::to_json).unwrap_or(Value::Null),
        "agree": agree,
    });
    Ok(Report::new(text, doc).with_status(agree))
}

pub fn mult(a: &MultArgs) -> Out {
    let l = strict(&a.shape)?;
    let spin = SpinAdjustment::new(&l);
    let spin_on = a.algebra == AlgebraArg::Spin;
    let adjust = |s: Series| -> Result<Series, CliError> { Ok(if spin_on { spin.apply(&s)? } else { s }) };
    let (module, text, value) = match a.module {
        Module::Sym => {
            let s = adjust(graded_mult_sym(&l, a.trunc)?)?;
            ("sym", s.to_string(), s.to_json())
        }
        Module::Coinv => {
            let s = adjust(graded_mult_coinv(&l)?)?;
            ("coinv", poly_text(&s, "t"), poly_json(&s))
        }
        Module::Wedge => {
            let s = adjust(wedge_mult(&l)?)?;
            ("wedge", poly_text(&s, "s"), poly_json(&s))
        }
        Module::Bigraded => {
            let b = bigraded_mult(&l, a.trunc)?;
            let b = if spin_on { spin.apply_bi(&b)? } else { b };
            ("bigraded", b.to_string(), b.to_json())
        }
    };
    let algebra = if spin_on { "spin" } else { "hc" };
    let doc = json!({
        "shape": l.parts(),
        "module": module,
        "algebra": algebra,
        "trunc": a.trunc,
        "multiplicity": value,
    });
    Ok(Report::new(format!("{algebra} {module} ({l}): {text}\n"), doc))
}

pub fn classical(a: &ClassicalArgs) -> Out {
    let p: Partition = a
        .shape
        .parse()
        .map_err(|e| CliError::Usage(format!("--shape {}: {e}", a.shape)))?;
    let hook = kirillov_series(&p, a.trunc);
    let ssyt = schur_principal(&p, a.trunc);
    let pak = kirillov_pak(&p, a.trunc);
    let mut agree = hook == ssyt && pak.coeff(0) == hook;
    let mut text = format!("shape ({p})\nhook formula:  {hook}\ntableau sum:   {ssyt}\nbi-graded:     {pak}\n");
    let mut doc = json!({
        "shape": p.parts(),
        "trunc": a.trunc,
        "hook": hook.to_json(),
        "tableau": ssyt.to_json(),
        "bigraded": pak.to_json(),
    });
    if p.length() == 1 {
        let sol = solomon_series(p.size(), a.trunc);
        agree &= sol == pak;
        let _ = writeln!(text, "solomon:       {sol}");
        doc["solomon"] = sol.to_json();
    }
    let _ = writeln!(text, "agreement: {}", if agree { "yes" } else { "NO" });
    doc["agree"] = json!(agree);
    Ok(Report::new(text, doc).with_status(agree))
}

pub fn verify(a: &VerifyArgs) -> Out {
    let level = match a.level {
        LevelArg::Quick => Level::Quick,
        LevelArg::Full => Level::Full,
    };
    let results = verify::run(level);
    let mut text = String::new();
    let mut items = Vec::new();
    for r in &results {
        if a.timings {
            let _ = writeln!(text, "{r}");
        } else {
            let mark = if r.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(text, "{mark}  {:<28} {}", r.name, r.detail);
        }
        let mut item = json!({"name": r.name, "passed": r.passed, "detail": r.detail});
        if a.timings {
            item["millis"] = json!(r.millis as u64);
        }
        items.push(item);
    }
    let ok = results.iter().all(|r| r.passed);
    let passed = results.iter().filter(|r| r.passed).count();
    let _ = writeln!(text, "{passed}/{} checks passed", results.len());
    let doc = json!({"level": level, "passed": ok, "checks": items});
    Ok(Report::new(text, doc).with_status(ok))
}
