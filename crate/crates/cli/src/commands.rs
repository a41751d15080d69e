use crate::args::{CoefcArgs, Command};
use crate::cache::{self, CacheFile, Entry, Matrix};
use crate::error::CliError;
use crate::grid::{par_map, verification_grid};
use arch_constants::{closed_form, extract_cm, l_factor_arch, Exec, Tuple};
use branch_tensor::{branch_inject, branch_restrict, cartan_table, verify_cartan_table};
use gt_action::{matrix_e, p_integral_check};
use gt_core::rational::{fmt_rational, parse_rational};
use gt_core::{critical_points, enumerate_patterns, patterns_of_weight, weyl_dim, EmbeddingWeightFamily};
use gt_core::{GTPattern, Rational, RepVector, Weight};
use num_traits::{One, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

/// A finished report and whether it records a verification mismatch.
pub struct Outcome {
    pub value: Value,
    pub mismatch: bool,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome { value, mismatch: false }
    }
}

pub struct Context {
    pub oracle: bool,
    pub jobs: Option<usize>,
    pub cache_dir: Option<PathBuf>,
}

fn weight(s: &str) -> Result<Weight, CliError> {
    Ok(Weight::parse(s)?)
}

fn dominant(s: &str) -> Result<Weight, CliError> {
    let w = weight(s)?;
    if !w.is_dominant() {
        return Err(gt_core::GtError::InvalidWeight(w.0).into());
    }
    Ok(w)
}

fn pattern_in(s: &str, lambda: &Weight) -> Result<GTPattern, CliError> {
    let p = GTPattern::parse(s)?;
    if p.top() != *lambda || !p.is_valid() {
        return Err(gt_core::GtError::InvalidPattern(format!("{p} is not in G{lambda}")).into());
    }
    Ok(p)
}

fn rationals(s: &str) -> Result<Vec<Rational>, CliError> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',').map(|t| Ok(parse_rational(t)?)).collect()
}

fn coords(v: &RepVector) -> Value {
    Value::Array(
        v.coords
            .iter()
            .rev()
            .map(|(m, c)| json!({ "pattern": m.to_string(), "coeff": fmt_rational(c) }))
            .collect(),
    )
}

fn sign_string(x: &Rational) -> String {
    if x.is_one() {
        "+1".into()
    } else if *x == -Rational::one() {
        "-1".into()
    } else {
        fmt_rational(x)
    }
}

pub fn run(cmd: &Command, ctx: &Context) -> Result<Outcome, CliError> {
    match cmd {
        Command::Patterns { lambda, weight: g } => {
            let l = dominant(lambda)?;
            let pats = match g {
                Some(g) => patterns_of_weight(&l, &weight(g)?)?,
                None => enumerate_patterns(&l)?,
            };
            Ok(Outcome::ok(json!({
                "lambda": l,
                "count": pats.len(),
                "patterns": pats.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            })))
        }
        Command::Dim { lambda } => {
            let l = dominant(lambda)?;
            let count = enumerate_patterns(&l)?.len() as u128;
            let dim = weyl_dim(&l);
            Ok(Outcome {
                value: json!({ "lambda": l, "dim": dim, "pattern_count": count, "match": dim == count }),
                mismatch: dim != count,
            })
        }
        Command::Action { lambda, i, j } => action(&dominant(lambda)?, *i, *j, ctx),
        Command::Branch { lambda, mu, pattern, restrict } => {
            let l = dominant(lambda)?;
            let m = dominant(mu)?;
            let (src, out) = if *restrict {
                let v = RepVector::basis(&pattern_in(pattern, &l)?);
                (v.clone(), branch_restrict(&l, &m, &v)?)
            } else {
                let v = RepVector::basis(&pattern_in(pattern, &m)?);
                (v.clone(), branch_inject(&l, &m, &v)?)
            };
            Ok(Outcome::ok(json!({
                "lambda": l,
                "mu": m,
                "direction": if *restrict { "restrict" } else { "inject" },
                "input": src.coords.keys().next().map(|p| p.to_string()),
                "target": out.lambda,
                "coords": coords(&out),
            })))
        }
        Command::TensorCartan { lambda, lambda_prime, pattern, verify } => {
            let l = dominant(lambda)?;
            let lp = dominant(lambda_prime)?;
            let table = cartan_table(&l, &lp)?;
            let only = pattern.as_deref().map(|p| pattern_in(p, &l.add(&lp))).transpose()?;
            let images: Vec<Value> = table
                .images
                .iter()
                .rev()
                .filter(|(k, _)| only.as_ref().is_none_or(|o| o == *k))
                .flat_map(|(k, t)| {
                    t.coords.iter().rev().map(move |((a, b), c)| {
                        json!({ "image": k.to_string(), "left": a.to_string(), "right": b.to_string(), "coeff": fmt_rational(c) })
                    })
                })
                .collect();
            let mut value = json!({ "lambda": l, "lambda_prime": lp, "sum": l.add(&lp), "entries": images });
            let mut mismatch = false;
            if *verify {
                let ok = verify_cartan_table(&l, &lp)?;
                value["verified"] = json!(ok);
                mismatch = !ok;
            }
            Ok(Outcome { value, mismatch })
        }
        Command::Pair { lambda, left, right, mu, shift } => {
            let l = dominant(lambda)?;
            let a = RepVector::basis(&pattern_in(left, &l)?);
            let (value, other) = match mu {
                Some(mu) => {
                    let m = dominant(mu)?;
                    let b = RepVector::basis(&pattern_in(right, &m)?);
                    (pairings::pair_lambda_mu(&l, &m, *shift, &a, &b)?, m)
                }
                None => {
                    let b = RepVector::basis(&pattern_in(right, &l.dual())?);
                    (pairings::pair_lambda(&l, &a, &b)?, l.dual())
                }
            };
            Ok(Outcome::ok(json!({
                "lambda": l,
                "other": other,
                "shift": shift,
                "left": left_string(&a),
                "right": right.trim(),
                "value": fmt_rational(&value),
            })))
        }
        Command::CoefcVerify(a) => coefc(a, ctx),
        Command::Critical { lambda, mu, places } => {
            let l = dominant(lambda)?;
            let m = dominant(mu)?;
            let fl = EmbeddingWeightFamily::uniform(*places, &l)?;
            let fm = EmbeddingWeightFamily::uniform(*places, &m)?;
            let pts: Vec<i64> = match critical_points(&fl, &fm)? {
                Some((lo, hi)) => (lo..=hi).collect(),
                None => vec![],
            };
            Ok(Outcome::ok(json!({ "lambda": l, "mu": m, "places": places, "critical_m": pts })))
        }
        Command::Lfactor { d, nu, dprime, nuprime } => {
            let d = weight(d)?;
            let dp = weight(dprime)?;
            let nu = rationals(nu)?;
            let nup = rationals(nuprime)?;
            let g = l_factor_arch(&d.0, &nu, &dp.0, &nup)?;
            Ok(Outcome::ok(json!({
                "d": d,
                "nu": nu.iter().map(fmt_rational).collect::<Vec<_>>(),
                "d_prime": dp,
                "nu_prime": nup.iter().map(fmt_rational).collect::<Vec<_>>(),
                "gamma_c_shifts": g,
            })))
        }
        Command::PCheck { lambda, p } => {
            let l = dominant(lambda)?;
            let r = p_integral_check(&l, *p)?;
            let bad_r: Vec<Value> = r
                .r_valuations
                .iter()
                .filter(|(_, v)| *v != 0)
                .map(|(m, v)| json!({ "pattern": m.to_string(), "valuation": v }))
                .collect();
            let bad_e: Vec<Value> = r
                .entry_valuations
                .iter()
                .filter(|e| e.valuation < 0)
                .map(|e| json!({ "i": e.i, "j": e.j, "from": e.from.to_string(), "to": e.to.to_string(), "valuation": e.valuation }))
                .collect();
            Ok(Outcome {
                mismatch: !r.consistent(),
                value: json!({
                    "lambda": l,
                    "p": p,
                    "bound": r.bound,
                    "above_bound": r.above_bound,
                    "self_dual_at_p": r.self_dual_at_p,
                    "consistent": r.consistent(),
                    "non_unit_r": bad_r,
                    "non_integral_entries": bad_e,
                }),
            })
        }
    }
}

fn left_string(v: &RepVector) -> String {
    v.coords.keys().next().map(|p| p.to_string()).unwrap_or_default()
}

type Rows = BTreeMap<GTPattern, BTreeMap<GTPattern, Rational>>;

fn entries(rows: &Rows) -> Vec<Entry> {
    rows.iter()
        .flat_map(|(f, row)| {
            row.iter().map(move |(t, c)| Entry {
                from: f.to_string(),
                to: t.to_string(),
                coeff: fmt_rational(c),
            })
        })
        .collect()
}

fn oracle_rows(lambda: &Weight, i: usize, j: usize) -> Result<Rows, CliError> {
    let mut rows = Rows::new();
    for m in enumerate_patterns(lambda)? {
        let img = det_model::xi_polynomial(lambda, &m)?.act_elementary(i, j)?;
        let v = det_model::coords_in_xi(lambda, &img)?;
        let row: BTreeMap<GTPattern, Rational> = v.coords.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if !row.is_empty() {
            rows.insert(m, row);
        }
    }
    Ok(rows)
}

fn gt_entries(lambda: &Weight, i: usize, j: usize, ctx: &Context) -> Result<Vec<Entry>, CliError> {
    // Bounds are checked before touching the cache.
    let first = matrix_e(lambda, i, j)?;
    let Some(dir) = &ctx.cache_dir else {
        return Ok(entries(&first.rows));
    };
    let n = lambda.len();
    if let Some(f) = cache::load(dir, lambda) {
        return Ok(f.matrices[(i - 1) * n + (j - 1)].entries.clone());
    }
    let mut matrices = Vec::with_capacity(n * n);
    for a in 1..=n {
        for b in 1..=n {
            matrices.push(Matrix { i: a, j: b, entries: entries(&matrix_e(lambda, a, b)?.rows) });
        }
    }
    let out = matrices[(i - 1) * n + (j - 1)].entries.clone();
    cache::store(dir, &CacheFile { lambda: lambda.clone(), matrices })?;
    Ok(out)
}

fn action(lambda: &Weight, i: usize, j: usize, ctx: &Context) -> Result<Outcome, CliError> {
    let list = if ctx.oracle {
        entries(&oracle_rows(lambda, i, j)?)
    } else {
        gt_entries(lambda, i, j, ctx)?
    };
    Ok(Outcome::ok(json!({
        "lambda": lambda,
        "i": i,
        "j": j,
        "source": if ctx.oracle { "determinantal" } else { "gelfand-tsetlin" },
        "entries": list,
    })))
}

/// One `coefc-verify` report; `wall_time_ms` is null unless timing was asked for.
pub fn coefc_report(t: &Tuple, exec: Exec, timing: bool) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let c = extract_cm(t, exec);
    let elapsed = start.elapsed().as_millis() as u64;
    let expect = closed_form(t);
    let (extracted, ok) = match c {
        Ok(c) => (sign_string(&c), c == expect),
        Err(arch_constants::ArchError::Proportionality(msg)) => (format!("not proportional: {msg}"), false),
        Err(e) => return Err(e.into()),
    };
    Ok(Outcome {
        mismatch: !ok,
        value: json!({
            "lambda": t.lambda,
            "w": t.w,
            "mu": t.mu,
            "w_prime": t.wp,
            "m": t.m,
            "c_extracted": extracted,
            "c_closed_form": sign_string(&expect),
            "match": ok,
            "wall_time_ms": if timing { json!(elapsed) } else { Value::Null },
        }),
    })
}

fn coefc(a: &CoefcArgs, ctx: &Context) -> Result<Outcome, CliError> {
    if a.grid {
        let tuples = verification_grid();
        let results = par_map(ctx.jobs, &tuples, |t| coefc_report(t, Exec::Sequential, a.timing));
        let mut reports = Vec::with_capacity(results.len());
        let mut mismatches = 0usize;
        for r in results {
            let o = r?;
            mismatches += o.mismatch as usize;
            reports.push(o.value);
        }
        return Ok(Outcome {
            mismatch: mismatches > 0,
            value: json!({ "count": reports.len(), "mismatches": mismatches, "reports": reports }),
        });
    }
    let lambda = dominant(a.lambda.as_deref().expect("required by the parser"))?;
    let mu = dominant(a.mu.as_deref().expect("required by the parser"))?;
    if let Some(n) = a.n {
        if n != lambda.len() {
            return Err(gt_core::GtError::LengthMismatch { expected: n, got: lambda.len() }.into());
        }
    }
    let t = Tuple::new(lambda, a.w, mu, a.wprime, a.m);
    let exec = match ctx.jobs {
        Some(jobs) => Exec::Parallel { jobs },
        None => Exec::Sequential,
    };
    coefc_report(&t, exec, a.timing)
}
