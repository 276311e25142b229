use std::collections::BTreeSet;

use prmw::codes::{Code, CodeParams, Family};
use prmw::error::Error;
use prmw::formulas::{w1_rm, w2_prm_binary, w2_rm_binary, w2_rm_candidates};
use prmw::weights::weight_report;
use serde::Serialize;

use crate::output;
use crate::{ConfigError, Format};

/// What the closed forms say about one code.
#[derive(Clone, Debug, Default)]
pub struct Expected {
    pub w1: Option<u64>,
    pub w2: Option<u64>,
    /// Candidate W2 values when there is no closed form.
    pub candidates: Option<BTreeSet<u64>>,
    /// Whether membership in `candidates` is a claim to check, or only shown.
    pub candidates_checked: bool,
    pub note: String,
}

pub fn expected(p: &CodeParams) -> Expected {
    let (n, d, q) = (p.n as u32, p.d, p.q());
    let mut e = Expected::default();
    match p.family {
        Family::Rm => {
            e.w1 = if d == 0 {
                Some((q as u64).pow(n))
            } else {
                w1_rm(n, d, q).ok()
            };
            if q == 2 {
                e.w2 = w2_rm_binary(n, d).ok();
                if e.w2.is_none() {
                    e.note = "no W2 formula outside 1 <= d <= n-1".into();
                }
            } else if let Some(c) = (d >= 1).then(|| w2_rm_candidates(n, d, q).ok()).flatten() {
                e.candidates = Some(c.options);
                e.candidates_checked = true;
            } else {
                e.note = "no W2 formula".into();
            }
        }
        Family::Prm => {
            // PRM(n, d) and RM(n, d-1) share their minimum distance
            e.w1 = if d == 1 {
                Some((q as u64).pow(n))
            } else {
                w1_rm(n, d - 1, q).ok()
            };
            if d == 1 {
                e.note = "PRM(n,1) has a single nonzero weight".into();
            } else if q == 2 {
                e.w2 = w2_prm_binary(n, d).ok();
                if e.w2.is_none() {
                    e.note = "no W2 formula for d > n".into();
                }
            } else if let Ok(c) = w2_rm_candidates(n, d - 1, q) {
                e.candidates = Some(c.options);
                e.note = "no closed form; candidates are those of RM(n,d-1)".into();
            } else {
                e.note = "no W2 formula".into();
            }
        }
    }
    e
}

/// Serialized table row; field names are the column names.
#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub n: usize,
    pub d: u32,
    pub length: usize,
    pub dimension: usize,
    #[serde(rename = "W1_formula")]
    pub w1_formula: Option<u64>,
    #[serde(rename = "W2_formula")]
    pub w2_formula: Option<u64>,
    #[serde(rename = "W2_candidates")]
    pub w2_candidates: Option<Vec<u64>>,
    #[serde(rename = "W1_bruteforce")]
    pub w1_bruteforce: Option<usize>,
    #[serde(rename = "W2_bruteforce")]
    pub w2_bruteforce: Option<usize>,
    #[serde(rename = "match")]
    pub matched: Option<bool>,
    pub note: String,
}

const COLUMNS: [&str; 11] = [
    "n",
    "d",
    "length",
    "dimension",
    "W1_formula",
    "W2_formula",
    "W2_candidates",
    "W1_bruteforce",
    "W2_bruteforce",
    "match",
    "note",
];

/// Whether observed weights agree with every checked expectation.
pub fn agrees(e: &Expected, w1: Option<usize>, w2: Option<usize>) -> bool {
    let as_u64 = |w: Option<usize>| w.map(|v| v as u64);
    let w1_ok = e.w1.is_none() || e.w1 == as_u64(w1);
    let w2_ok = e.w2.is_none() || e.w2 == as_u64(w2);
    let cand_ok = match (&e.candidates, e.candidates_checked, w2) {
        (Some(c), true, Some(w)) => c.contains(&(w as u64)),
        (Some(_), true, None) => false,
        _ => true,
    };
    w1_ok && w2_ok && cand_ok
}

pub fn rows(
    family: Family,
    q: u32,
    grid: &[(u32, u32)],
    budget: u64,
) -> Result<Vec<Row>, ConfigError> {
    let mut out = Vec::new();
    for &(n, d) in grid {
        let params = CodeParams::new(family, q, n as usize, d)?;
        let code = Code::build(params)?;
        let e = expected(&params);
        let mut row = Row {
            n: params.n,
            d,
            length: code.length,
            dimension: code.dimension,
            w1_formula: e.w1,
            w2_formula: e.w2,
            w2_candidates: e.candidates.as_ref().map(|c| c.iter().copied().collect()),
            w1_bruteforce: None,
            w2_bruteforce: None,
            matched: None,
            note: e.note.clone(),
        };
        match weight_report(&code, budget) {
            Ok(r) => {
                row.w1_bruteforce = r.w1;
                row.w2_bruteforce = r.w2;
                row.matched = Some(agrees(&e, r.w1, r.w2));
            }
            Err(err @ Error::BudgetExceeded { .. }) => row.note = err.to_string(),
            Err(err) => return Err(err.into()),
        }
        out.push(row);
    }
    Ok(out)
}

fn cell<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

fn cells(r: &Row, sep: &str) -> Vec<String> {
    let cands = r.w2_candidates.as_ref().map(|c| {
        let parts: Vec<String> = c.iter().map(u64::to_string).collect();
        format!("{{{}}}", parts.join(sep))
    });
    vec![
        r.n.to_string(),
        r.d.to_string(),
        r.length.to_string(),
        r.dimension.to_string(),
        cell(&r.w1_formula),
        cell(&r.w2_formula),
        cands.unwrap_or_default(),
        cell(&r.w1_bruteforce),
        cell(&r.w2_bruteforce),
        cell(&r.matched),
        r.note.clone(),
    ]
}

pub fn render(rows: &[Row], format: Format) -> Result<String, ConfigError> {
    Ok(match format {
        Format::Json => output::json(&rows)?,
        Format::Csv => {
            let body: Vec<_> = rows.iter().map(|r| cells(r, ";")).collect();
            output::csv(&COLUMNS, &body)
        }
        Format::Text => {
            let body: Vec<_> = rows.iter().map(|r| cells(r, ",")).collect();
            output::aligned(&COLUMNS, &body)
        }
    })
}
