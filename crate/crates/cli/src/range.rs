//! `--n` and `--d` range arguments.

use std::fmt;
use std::str::FromStr;

/// A range endpoint: a number, or `n` (the row's own n, only valid for `--d`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Lit(u32),
    N,
}

impl Bound {
    fn resolve(self, n: u32) -> u32 {
        match self {
            Bound::Lit(v) => v,
            Bound::N => n,
        }
    }
}

impl FromStr for Bound {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "n" => Ok(Bound::N),
            t => t
                .parse()
                .map(Bound::Lit)
                .map_err(|_| format!("expected a number or `n`, got `{t}`")),
        }
    }
}

/// Inclusive range `a..b`, or a single value `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub lo: Bound,
    pub hi: Bound,
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (a.parse()?, b.strip_prefix('=').unwrap_or(b).parse()?),
            None => {
                let v = s.parse()?;
                (v, v)
            }
        };
        Ok(Span { lo, hi })
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = |b: Bound| match b {
            Bound::Lit(v) => v.to_string(),
            Bound::N => "n".into(),
        };
        if self.lo == self.hi {
            write!(f, "{}", b(self.lo))
        } else {
            write!(f, "{}..{}", b(self.lo), b(self.hi))
        }
    }
}

impl Span {
    fn has_n(&self) -> bool {
        self.lo == Bound::N || self.hi == Bound::N
    }
}

/// Expand `--n` and `--d` into the grid of `(n, d)` pairs, row-major in n.
/// Each n must produce at least one d.
pub fn grid(n: Span, d: Span) -> Result<Vec<(u32, u32)>, String> {
    if n.has_n() {
        return Err("`n` is only allowed in --d".into());
    }
    let (n_lo, n_hi) = (n.lo.resolve(0), n.hi.resolve(0));
    if n_lo > n_hi {
        return Err(format!("empty n range {n}"));
    }
    let mut out = Vec::new();
    for nv in n_lo..=n_hi {
        let (d_lo, d_hi) = (d.lo.resolve(nv), d.hi.resolve(nv));
        if d_lo > d_hi {
            return Err(format!("empty d range {d} for n = {nv}"));
        }
        out.extend((d_lo..=d_hi).map(|dv| (nv, dv)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn span(s: &str) -> Span {
        s.parse().unwrap()
    }

    #[test]
    fn triangular_grid() {
        let g = grid(span("2..4"), span("2..n")).unwrap();
        assert_eq!(g, vec![(2, 2), (3, 2), (3, 3), (4, 2), (4, 3), (4, 4)]);
    }

    #[test]
    fn singletons_and_errors() {
        assert_eq!(grid(span("3"), span("1..2")).unwrap(), vec![(3, 1), (3, 2)]);
        assert_eq!(grid(span("3"), span("1..=2")).unwrap().len(), 2);
        assert!(grid(span("4..2"), span("1")).is_err());
        assert!(grid(span("2..3"), span("3..n")).is_err());
        assert!(grid(span("n"), span("1")).is_err());
        assert!("x..2".parse::<Span>().is_err());
    }
}
