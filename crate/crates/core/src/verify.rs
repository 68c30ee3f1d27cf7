//! Verification suite for the identities and structural results.
//!
//! Every check quantifies over a finite range of parameters bounded by
//! `n_max` and records the first counterexample it meets. The suite covers
//! the Krawtchouk identities, the closed-form optima and bounds, dual
//! uniqueness verdicts, the decomposition formula, parity and symmetry of
//! the programs, and the extension/puncturing transforms.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::delsarte::{
    build_decomposition_lp, build_dual, closed_form_decomposition, closed_form_dual, closed_form_primal,
    dual_uniqueness, parity_pair, primal_uniqueness, solve_symmetric, symmetric_bound, ProblemParams,
    UniquenessReport,
};
use crate::exact::{format_seq, Rational};
use crate::krawtchouk::{check_identities, krawtchouk_matrix, KrawtchoukTable};
use crate::quasicode::{
    check_complementary_slackness, check_feasible, decompose, extend, is_even, puncture, recompose, support,
    Quasicode,
};
use crate::simplex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("n_max must be at least 1")]
    NMax,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub n_max: usize,
    /// Replace one Krawtchouk table with a corrupted copy before checking
    /// the identities. Used to exercise failure reporting.
    pub corrupt_krawtchouk: bool,
}

impl VerifyOptions {
    pub fn new(n_max: usize) -> Self {
        VerifyOptions {
            n_max,
            corrupt_krawtchouk: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub cases: usize,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub n_max: usize,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "{mark}  {} [{} cases]", c.name, c.cases)?;
            if let Some(cx) = &c.counterexample {
                write!(f, "  first counterexample: {cx}")?;
            }
            writeln!(f)?;
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

fn run<T: fmt::Display>(
    name: &str,
    cases: impl IntoIterator<Item = T>,
    check: impl Fn(&T) -> Result<(), String>,
) -> CheckResult {
    let mut count = 0;
    let mut counterexample = None;
    for case in cases {
        count += 1;
        if let Err(detail) = check(&case) {
            counterexample = Some(if detail.is_empty() {
                case.to_string()
            } else {
                format!("{case}: {detail}")
            });
            break;
        }
    }
    CheckResult {
        name: name.to_string(),
        passed: counterexample.is_none(),
        cases: count,
        counterexample,
    }
}

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn pow2(n: usize) -> Rational {
    Rational::from(BigInt::one() << n)
}

/// Violations of the extension and puncturing properties for one feasible
/// quasicode, or of the decomposition round trip.
pub fn transform_violation(a: &Quasicode) -> Option<String> {
    let (n, d) = (a.n(), a.d());
    if recompose(&decompose(a)) != a.values() {
        return Some("decompose/recompose round trip".into());
    }
    let e = extend(a);
    if (e.n(), e.d()) != (n + 1, d.div_ceil(2) * 2) {
        return Some(format!("extension parameters ({}, {})", e.n(), e.d()));
    }
    if let Err(v) = check_feasible(&e) {
        return Some(format!("extension infeasible: {v}"));
    }
    if e.objective() != a.objective() {
        return Some(format!(
            "extension objective {} != {}",
            e.objective(),
            a.objective()
        ));
    }
    if d < 2 {
        return None;
    }
    let p = match puncture(a) {
        Ok(p) => p,
        Err(err) => return Some(format!("puncture: {err}")),
    };
    if (p.n(), p.d()) != (n - 1, d - 1) {
        return Some(format!("puncture parameters ({}, {})", p.n(), p.d()));
    }
    if let Err(v) = check_feasible(&p) {
        return Some(format!("puncture infeasible: {v}"));
    }
    if decompose(&p).b[0] != decompose(a).b[0] {
        return Some("puncture changed b_0".into());
    }
    let s = support(a);
    let allowed = |i: usize| i != n && (s.contains(&i) || s.contains(&(i + 1)));
    if let Some(i) = support(&p).into_iter().find(|&i| !allowed(i)) {
        return Some(format!("puncture support contains {i}"));
    }
    None
}

struct PairData {
    primal: UniquenessReport,
    dual: UniquenessReport,
}

fn krawtchouk_checks(n_max: usize, corrupt: bool) -> Vec<CheckResult> {
    let mut tables: Vec<std::sync::Arc<KrawtchoukTable>> = (0..=n_max + 1).map(krawtchouk_matrix).collect();
    if corrupt {
        let n = n_max.min(4);
        let mut rows = tables[n].rows().to_vec();
        rows[1][n / 2] += 1;
        tables[n] = std::sync::Arc::new(KrawtchoukTable::from_entries(n, rows).expect("same shape"));
    }
    let reports: Vec<_> = (0..=n_max)
        .map(|n| check_identities(&tables[n.saturating_sub(1)], &tables[n], &tables[n + 1]))
        .collect();
    let names: Vec<&str> = reports[0].checks.iter().map(|c| c.name).collect();
    names
        .into_iter()
        .enumerate()
        .map(|(idx, name)| {
            let first = reports.iter().find_map(|r| r.checks[idx].counterexample.clone());
            CheckResult {
                name: format!("krawtchouk: {name}"),
                passed: first.is_none(),
                cases: reports.len(),
                counterexample: first,
            }
        })
        .collect()
}

/// Runs the whole suite for block lengths up to `n_max`.
pub fn run_verification(opts: &VerifyOptions) -> Result<VerifyReport, VerifyError> {
    let n_max = opts.n_max;
    if n_max < 1 {
        return Err(VerifyError::NMax);
    }
    let mut checks = krawtchouk_checks(n_max, opts.corrupt_krawtchouk);

    let all: Vec<ProblemParams> = (1..=n_max)
        .flat_map(|n| (1..=n).map(move |d| ProblemParams::new(n, d).expect("valid")))
        .collect();
    let data: HashMap<ProblemParams, PairData> = all
        .par_iter()
        .map(|p| {
            (
                *p,
                PairData {
                    primal: primal_uniqueness(p),
                    dual: dual_uniqueness(p),
                },
            )
        })
        .collect();
    let bound = |p: &ProblemParams| data[p].primal.optimum_value.clone();
    let pp = |n: usize, d: usize| ProblemParams::new(n, d).expect("valid");
    let filtered = |f: fn(&ProblemParams) -> bool| all.iter().copied().filter(move |p: &ProblemParams| f(p));

    checks.push(run("bound for d=1 is 2^n", filtered(|p| p.d() == 1), |p| {
        ensure(bound(p) == pow2(p.n()), || bound(p).to_string())
    }));
    checks.push(run("bound for d=2 is 2^(n-1)", filtered(|p| p.d() == 2), |p| {
        ensure(bound(p) == pow2(p.n() - 1), || bound(p).to_string())
    }));
    checks.push(run(
        "upper-half bound 2d/(2d-n) or (2d+2)/(2d-n+1)",
        filtered(|p| p.is_upper_half()),
        |p| {
            let (n, d) = (p.n() as i64, p.d() as i64);
            let expected = if d % 2 == 0 {
                Rational::new(2 * d, 2 * d - n)
            } else {
                Rational::new(2 * d + 2, 2 * d - n + 1)
            };
            let expected = expected.expect("nonzero in the upper half");
            ensure(bound(p) == expected, || format!("{} != {expected}", bound(p)))
        },
    ));

    checks.push(run("closed-form primal is the unique optimum", all.iter(), |p| {
        let Some(a) = closed_form_primal(p) else {
            return Ok(());
        };
        check_feasible(&a).map_err(|v| v.to_string())?;
        ensure(a.objective() == bound(p), || {
            format!("objective {}", a.objective())
        })?;
        let r = &data[*p].primal;
        ensure(r.is_unique(), || "solver optimum not unique".into())?;
        ensure(r.optimum == a.values(), || {
            format!("solver {}", format_seq(&r.optimum))
        })
    }));
    checks.push(run(
        "closed-form dual is feasible, optimal and complementary",
        all.iter(),
        |p| {
            let Some(c) = closed_form_dual(p) else {
                return Ok(());
            };
            if let Some(v) = c.feasibility_violation() {
                return Err(v);
            }
            ensure(c.objective() == bound(p), || {
                format!("objective {}", c.objective())
            })?;
            let r = &data[*p].dual;
            ensure(!r.is_unique() || r.optimum == c.c, || {
                format!("solver {}", format_seq(&r.optimum))
            })?;
            let Some(a) = closed_form_primal(p) else {
                return Ok(());
            };
            let slack = check_complementary_slackness(&a, &c).map_err(|e| e.to_string())?;
            match slack.iter().find(|s| !s.satisfied) {
                Some(s) => Err(format!("{:?} at {}", s.kind, s.index)),
                None => Ok(()),
            }
        },
    ));

    checks.push(run(
        "dual optimum for d=n is unique iff n <= 2",
        (1..=n_max).map(|n| pp(n, n)),
        |p| ensure(data[p].dual.is_unique() == (p.n() <= 2), String::new),
    ));
    checks.push(run(
        "dual optimum for d=n-1 is unique iff n is even",
        (2..=n_max).map(|n| pp(n, n - 1)),
        |p| {
            ensure(data[p].dual.is_unique() == (p.n() % 2 == 0), String::new)?;
            if p.n() % 2 == 0 {
                let c = closed_form_dual(p).expect("closed form exists").c;
                ensure(data[p].dual.optimum == c, || format_seq(&data[p].dual.optimum))?;
            }
            Ok(())
        },
    ));
    checks.push(run(
        "dual optimum for d=1 is unique and all ones",
        (1..=n_max).map(|n| pp(n, 1)),
        |p| {
            let r = &data[p].dual;
            ensure(r.is_unique() && r.optimum.iter().all(Rational::is_one), || {
                format_seq(&r.optimum)
            })
        },
    ));
    checks.push(run(
        "dual optimum for d=2 is unique iff n = 2",
        (2..=n_max).map(|n| pp(n, 2)),
        |p| ensure(data[p].dual.is_unique() == (p.n() == 2), String::new),
    ));

    checks.push(run("strong duality", all.iter(), |p| {
        let dual = &data[*p].dual.optimum_value;
        ensure(*dual == bound(p), || format!("dual {dual}"))
    }));
    checks.push(run(
        "decomposition program attains the same bound",
        all.iter(),
        |p| {
            let v = simplex::solve(&build_decomposition_lp(p)).value;
            ensure(v.as_ref() == Some(&bound(p)), || format!("{v:?}"))
        },
    ));
    checks.push(run(
        "upper-half decomposition formula",
        filtered(|p| p.is_upper_half()),
        |p| {
            let a =
                Quasicode::new(p.n(), p.d(), data[p].primal.optimum.clone()).map_err(|e| e.to_string())?;
            let b = decompose(&a);
            ensure(Some(&b) == closed_form_decomposition(p).as_ref(), || {
                format_seq(&b.b)
            })
        },
    ));

    let parity: Vec<ParityCase> = (2..=n_max)
        .flat_map(|n| (1..=n / 2).map(move |e| ParityCase { n, e }))
        .collect();
    let parity_cases = || parity.iter().copied();
    checks.push(run(
        "bound(n, 2e) = bound(n-1, 2e-1)",
        parity_cases(),
        |&ParityCase { n, e }| {
            let (even, odd) = (bound(&pp(n, 2 * e)), bound(&pp(n - 1, 2 * e - 1)));
            ensure(even == odd, || format!("{even} != {odd}"))
        },
    ));
    let pairs: HashMap<ParityCase, _> = parity.par_iter().map(|&c| (c, parity_pair(c.n, c.e))).collect();
    checks.push(run("parity pair members are optimal", parity_cases(), |c| {
        let pair = pairs[c].as_ref().map_err(|e| e.to_string())?;
        let (n, e) = (c.n, c.e);
        ensure(
            pair.even.objective() == bound(&pp(n, 2 * e))
                && pair.odd.objective() == bound(&pp(n - 1, 2 * e - 1)),
            || {
                format!(
                    "objectives {} and {}",
                    pair.even.objective(),
                    pair.odd.objective()
                )
            },
        )?;
        ensure(extend(&pair.odd) == pair.even, || {
            "extension of the odd member differs".into()
        })
    }));
    type Property = fn(&crate::delsarte::ParityProperties) -> bool;
    let props: [(&str, Property); 4] = [
        ("parity pair: even decomposition is symmetric", |p| {
            p.even_symmetric
        }),
        ("parity pair: odd decomposition is the truncation", |p| {
            p.odd_is_truncation
        }),
        ("parity pair: even entries sum adjacent odd entries", |p| {
            p.even_is_extension
        }),
        ("parity pair: odd entries in binomial ratio", |p| {
            p.odd_binomial_ratio
        }),
    ];
    for (name, prop) in props {
        checks.push(run(name, parity_cases(), |c| match &pairs[c] {
            Ok(pair) => ensure(prop(&pair.properties()), String::new),
            Err(e) => Err(e.to_string()),
        }));
    }
    checks.push(run(
        "uniqueness at (n-1, 2e-1) implies uniqueness at (n, 2e)",
        parity_cases(),
        |&ParityCase { n, e }| {
            let odd = data[&pp(n - 1, 2 * e - 1)].primal.is_unique();
            ensure(!odd || data[&pp(n, 2 * e)].primal.is_unique(), String::new)
        },
    ));

    checks.push(run(
        "symmetric program matches the bound for even d",
        filtered(|p| p.d() % 2 == 0),
        |p| {
            let v = symmetric_bound(p);
            ensure(v == bound(p), || format!("{v} != {}", bound(p)))?;
            let a =
                Quasicode::new(p.n(), p.d(), recompose(&solve_symmetric(p))).map_err(|e| e.to_string())?;
            ensure(is_even(&a), || format!("odd support in {a}"))
        },
    ));
    checks.push(run(
        "symmetric (n, 2e) and (n-1, 2e-1) programs agree",
        parity_cases(),
        |&ParityCase { n, e }| {
            let (even, odd) = (
                symmetric_bound(&pp(n, 2 * e)),
                symmetric_bound(&pp(n - 1, 2 * e - 1)),
            );
            ensure(even == odd, || format!("{even} != {odd}"))
        },
    ));

    checks.push(run(
        "extension, puncturing and round trip on solver optima",
        all.iter(),
        |p| {
            let a =
                Quasicode::new(p.n(), p.d(), data[*p].primal.optimum.clone()).map_err(|e| e.to_string())?;
            transform_violation(&a).map_or(Ok(()), Err)
        },
    ));
    checks.push(run("dual feasibility of solver optima", all.iter(), |p| {
        let r = &data[*p].dual;
        let lp = build_dual(p);
        ensure(lp.is_feasible(&r.optimum[1..]), || format_seq(&r.optimum))
    }));

    Ok(VerifyReport { n_max, checks })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct ParityCase {
    n: usize,
    e: usize,
}

impl fmt::Display for ParityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n, e) = ({}, {})", self.n, self.e)
    }
}
