use std::time::Instant;

use prmw::codes::{Code, CodeParams, Family};
use prmw::error::Error;
use prmw::formulas::prm_kl;
use prmw::geometry::{
    check_subspace_bounds, find_avoiding_subspace, largest_avoiding_subspace,
    zero_set_is_hyperplane_union_of, Geometry, SupportSet,
};
use prmw::poly::Poly;
use prmw::weights::{weight_report, WeightReport, WeightReportJson};
use prmw::{Fe, Field};
use serde::Serialize;

use crate::table::{agrees, expected, Expected};
use crate::{output, ConfigError, Format, EXIT_CONFIG, EXIT_FAIL, EXIT_PASS};

/// Codes with at most this many codewords have every codeword checked
/// geometrically; larger ones only their witnesses.
const EXHAUSTIVE_GEOMETRY: u128 = 1 << 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    BudgetExceeded,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    #[serde(flatten)]
    pub report: WeightReportJson,
    pub checks: Vec<Check>,
}

struct Checks(Vec<Check>);

impl Checks {
    fn run(&mut self, name: &'static str, f: impl FnOnce() -> (Status, String)) {
        let t = Instant::now();
        let (status, detail) = f();
        self.0.push(Check {
            name,
            status,
            detail,
            elapsed_ms: t.elapsed().as_millis() as u64,
        });
    }
}

fn verdict(ok: bool, detail: String) -> (Status, String) {
    (if ok { Status::Pass } else { Status::Fail }, detail)
}

fn empty_report(code: &Code) -> WeightReportJson {
    let p = &code.params;
    WeightReportJson {
        family: p.family.to_string(),
        q: p.q(),
        n: p.n,
        d: p.d,
        length: code.length,
        dimension: code.dimension,
        w1: None,
        w2: None,
        counts: Default::default(),
        witnesses: Vec::new(),
        scanned: 0,
        elapsed_ms: 0,
    }
}

/// Messages `1..q^dim` in base q, least significant coordinate first.
fn nonzero_messages(q: u32, dim: usize) -> impl Iterator<Item = Vec<Fe>> {
    let total = (q as u64).pow(dim as u32);
    (1..total).map(move |mut m| {
        (0..dim)
            .map(|_| {
                let c = (m % q as u64) as u8;
                m /= q as u64;
                Fe(c)
            })
            .collect()
    })
}

/// The codeword supports used by the geometric checks, with a description.
fn sample(code: &Code, report: &WeightReport) -> (Vec<SupportSet>, String) {
    let q = code.params.q();
    let to_set = |s: Vec<usize>| SupportSet::from_indices(code.length, s).expect("in range");
    if (q as u128).pow(code.dimension as u32) <= EXHAUSTIVE_GEOMETRY {
        let sets = nonzero_messages(q, code.dimension)
            .map(|m| to_set(code.codeword_support(&m).expect("valid message")))
            .collect::<Vec<_>>();
        let what = format!("all {} nonzero codewords", sets.len());
        (sets, what)
    } else {
        let sets = report
            .witnesses_w1
            .iter()
            .chain(&report.witnesses_w2)
            .map(|w| to_set(w.support.clone()))
            .collect::<Vec<_>>();
        let what = format!("{} witness codewords", sets.len());
        (sets, what)
    }
}

fn weight_checks(checks: &mut Checks, code: &Code, r: &WeightReport, e: &Expected) {
    checks.run("w1_formula", || match e.w1 {
        Some(w) => verdict(
            r.w1 == Some(w as usize),
            format!("formula {w}, enumerated {}", fmt_opt(r.w1)),
        ),
        None => (Status::Skipped, "no formula".into()),
    });
    checks.run("w2_formula", || {
        if let Some(w) = e.w2 {
            verdict(
                r.w2 == Some(w as usize),
                format!("formula {w}, enumerated {}", fmt_opt(r.w2)),
            )
        } else if let (Some(c), true) = (&e.candidates, e.candidates_checked) {
            verdict(
                agrees(e, r.w1, r.w2),
                format!("enumerated {} in candidates {c:?}", fmt_opt(r.w2)),
            )
        } else {
            let why = if e.note.is_empty() {
                "no formula"
            } else {
                &e.note
            };
            (
                Status::Skipped,
                format!("{why}; enumerated {}", fmt_opt(r.w2)),
            )
        }
    });
    checks.run("witnesses", || {
        let mut bad = Vec::new();
        for (wits, target) in [(&r.witnesses_w1, r.w1), (&r.witnesses_w2, r.w2)] {
            for w in wits {
                let msg: Vec<Fe> = w.message.iter().map(|&v| Fe(v)).collect();
                let ok = code.codeword_support(&msg).ok().as_ref() == Some(&w.support)
                    && Some(w.weight()) == target;
                if !ok {
                    bad.push(format!("{:?}", w.message));
                }
            }
        }
        let n = r.witnesses_w1.len() + r.witnesses_w2.len();
        verdict(
            bad.is_empty() && !r.witnesses_w1.is_empty(),
            if bad.is_empty() {
                format!("{n} witnesses re-encoded")
            } else {
                format!("mismatched witnesses {}", bad.join(" "))
            },
        )
    });
}

fn geometry_checks(checks: &mut Checks, code: &Code, r: &WeightReport) {
    let p = code.params;
    let geo = match Geometry::new(p.n, p.field) {
        Ok(g) => g,
        Err(err) => {
            checks.run("geometry", || (Status::Skipped, err.to_string()));
            return;
        }
    };
    let (supports, what) = sample(code, r);
    let q = p.q() as u64;
    let n = p.n as u32;

    checks.run("subspace_bounds", || {
        for s in &supports {
            match check_subspace_bounds(&geo, s, &p) {
                Ok(v) if v.is_empty() => {}
                Ok(v) => {
                    return (
                        Status::Fail,
                        format!(
                            "support {:?}: {} violations, first {:?}",
                            s.indices(),
                            v.len(),
                            v[0]
                        ),
                    )
                }
                Err(err) => return (Status::Skipped, err.to_string()),
            }
        }
        (Status::Pass, format!("{what}, 0 violations"))
    });

    let Ok((k, l)) = prm_kl(p.d, p.q()) else {
        return;
    };
    // weight < (1 + 1/q)(q - l) q^(n-k-1), compared after multiplying by q
    let scaled_bound = (k < n).then(|| (q + 1) * (q - l as u64) * q.pow(n - k - 1));
    checks.run("avoiding_hyperplane", || {
        let Some(bound) = scaled_bound else {
            return (Status::Skipped, "k >= n".into());
        };
        let mut tested = 0;
        for s in supports.iter().filter(|s| (s.count() as u64) * q < bound) {
            match find_avoiding_subspace(&geo, s, p.n - 1) {
                Ok(Some(_)) => tested += 1,
                Ok(None) => {
                    return (
                        Status::Fail,
                        format!(
                            "weight {} support {:?} meets every hyperplane",
                            s.count(),
                            s.indices()
                        ),
                    )
                }
                Err(err) => return (Status::Skipped, err.to_string()),
            }
        }
        (Status::Pass, format!("{tested} of {what} below the bound"))
    });

    let bound = (k < n).then(|| (q - l as u64 + 1) * q.pow(n - k - 1));
    checks.run("avoiding_subspace", || {
        let Some(bound) = bound else {
            return (Status::Skipped, "k >= n".into());
        };
        let mut tested = 0;
        for s in supports.iter().filter(|s| s.count() as u64 <= bound) {
            match largest_avoiding_subspace(&geo, s) {
                Ok(Some(h)) if h.dim >= k as usize => tested += 1,
                Ok(found) => {
                    return (
                        Status::Fail,
                        format!(
                            "weight {} support {:?}: largest avoiding dimension {:?} < {k}",
                            s.count(),
                            s.indices(),
                            found.map(|h| h.dim)
                        ),
                    )
                }
                Err(err) => return (Status::Skipped, err.to_string()),
            }
        }
        (
            Status::Pass,
            format!("{tested} of {what} with weight <= {bound}"),
        )
    });

    if p.q() == 2 {
        checks.run("minimal_hyperplane_union", || {
            let minimal = supports.iter().filter(|s| Some(s.count()) == r.w1);
            let mut tested = 0;
            for s in minimal {
                match zero_set_is_hyperplane_union_of(&geo, s) {
                    Ok(u) if u.is_union => tested += 1,
                    Ok(_) => {
                        return (
                            Status::Fail,
                            format!(
                                "minimum-weight support {:?} is not a hyperplane union",
                                s.indices()
                            ),
                        )
                    }
                    Err(err) => return (Status::Skipped, err.to_string()),
                }
            }
            (Status::Pass, format!("{tested} minimum-weight codewords"))
        });
    }

    if p.q() == 2 && p.d == 2 && p.n >= 3 {
        checks.run("quadric_witness", || {
            let f = Poly::parse(Field::new(2).expect("prime"), p.n + 1, "X0*X3+X1*X2")
                .expect("valid polynomial");
            let weight = code
                .evaluate(&f)
                .map(|w| w.iter().filter(|c| !c.is_zero()).count());
            let target = 3usize << (p.n - 2);
            match weight {
                Ok(w) => verdict(
                    w == target && r.w2 == Some(w),
                    format!(
                        "X0*X3+X1*X2 has weight {w}, expected {target}, W2 {}",
                        fmt_opt(r.w2)
                    ),
                ),
                Err(err) => (Status::Fail, err.to_string()),
            }
        });
    }
}

fn fmt_opt(v: Option<usize>) -> String {
    v.map_or_else(|| "none".into(), |v| v.to_string())
}

fn verify_one(code: &Code, budget: u64) -> Result<Entry, ConfigError> {
    let mut checks = Checks(Vec::new());
    let mut report = Err(Error::Domain("not run".into()));
    checks.run("enumeration", || {
        report = weight_report(code, budget);
        match &report {
            Ok(r) => (
                Status::Pass,
                format!(
                    "scanned {} codewords, W1 {}, W2 {}",
                    r.scanned,
                    fmt_opt(r.w1),
                    fmt_opt(r.w2)
                ),
            ),
            Err(err @ Error::BudgetExceeded { .. }) => {
                (Status::BudgetExceeded, format!("BudgetExceeded: {err}"))
            }
            Err(err) => (Status::Fail, err.to_string()),
        }
    });
    let report = match report {
        Ok(r) => r,
        Err(Error::BudgetExceeded { .. }) => {
            return Ok(Entry {
                report: empty_report(code),
                checks: checks.0,
            })
        }
        Err(err) => return Err(err.into()),
    };
    weight_checks(&mut checks, code, &report, &expected(&code.params));
    if code.params.family == Family::Prm {
        geometry_checks(&mut checks, code, &report);
    }
    Ok(Entry {
        report: report.to_json(),
        checks: checks.0,
    })
}

pub fn run(
    family: Family,
    q: u32,
    grid: &[(u32, u32)],
    budget: u64,
) -> Result<Vec<Entry>, ConfigError> {
    grid.iter()
        .map(|&(n, d)| {
            let code = Code::build(CodeParams::new(family, q, n as usize, d)?)?;
            verify_one(&code, budget)
        })
        .collect()
}

/// Failures take precedence over budget overruns.
pub fn exit_status(entries: &[Entry]) -> u8 {
    let statuses = || entries.iter().flat_map(|e| &e.checks).map(|c| c.status);
    if statuses().any(|s| s == Status::Fail) {
        EXIT_FAIL
    } else if statuses().any(|s| s == Status::BudgetExceeded) {
        EXIT_CONFIG
    } else {
        EXIT_PASS
    }
}

fn instance(e: &Entry) -> String {
    let r = &e.report;
    format!(
        "{}(n={}, d={}, q={})",
        r.family.to_uppercase(),
        r.n,
        r.d,
        r.q
    )
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Skipped => "skipped",
        Status::BudgetExceeded => "budget_exceeded",
    }
}

pub fn render(entries: &[Entry], format: Format) -> Result<String, ConfigError> {
    let rows: Vec<Vec<String>> = entries
        .iter()
        .flat_map(|e| {
            e.checks.iter().map(move |c| {
                vec![
                    instance(e),
                    c.name.to_string(),
                    status_str(c.status).to_string(),
                    c.elapsed_ms.to_string(),
                    c.detail.clone(),
                ]
            })
        })
        .collect();
    let header = ["instance", "check", "status", "elapsed_ms", "detail"];
    Ok(match format {
        Format::Json => output::json(&entries)?,
        Format::Csv => output::csv(&header, &rows),
        Format::Text => {
            let mut s = output::aligned(&header, &rows);
            let code = exit_status(entries);
            let summary = match code {
                EXIT_PASS => "all checks passed",
                EXIT_FAIL => "some checks failed",
                _ => "budget exceeded",
            };
            s.push_str(summary);
            s.push('\n');
            s
        }
    })
}
