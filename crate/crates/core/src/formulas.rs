//! Closed-form minimum and next-to-minimal weights.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::codes::rm_decomposition;
use crate::error::{Error, Result};

fn pow(q: u32, e: u32) -> u64 {
    (q as u64).pow(e)
}

fn check_q(q: u32) -> Result<()> {
    crate::gfp::Field::new(q).map(|_| ())
}

/// Minimum distance of RM(n, d) over GF(q): `(q - b) q^(n - a - 1)` with
/// `d = a(q-1) + b`, and 1 once `d >= n(q-1)`.
pub fn w1_rm(n: u32, d: u32, q: u32) -> Result<u64> {
    check_q(q)?;
    if d == 0 {
        return Err(Error::domain("w1_rm needs d >= 1"));
    }
    if d >= n * (q - 1) {
        return Ok(1);
    }
    let (a, b) = rm_decomposition(d, q).expect("d >= 1");
    Ok((q - b) as u64 * pow(q, n - a - 1))
}

/// `(k, l)` with `d - 1 = k(q-1) + l`, `0 < l <= q-1`.
pub fn prm_kl(d: u32, q: u32) -> Result<(u32, u32)> {
    d.checked_sub(1)
        .and_then(|e| rm_decomposition(e, q))
        .ok_or_else(|| Error::domain("PRM decomposition needs d >= 2"))
}

/// Minimum distance of PRM(r, d): 1 for `r <= k`, else `(q - l) q^(r - k - 1)`.
pub fn w1_prm(r: u32, d: u32, q: u32) -> Result<u64> {
    check_q(q)?;
    let (k, l) = prm_kl(d, q)?;
    if r <= k {
        Ok(1)
    } else {
        Ok((q - l) as u64 * pow(q, r - k - 1))
    }
}

/// Same as [`w1_prm`] but also checks `2 <= d <= n(q-1)` and `r <= n`.
pub fn w1_prm_in(n: u32, r: u32, d: u32, q: u32) -> Result<u64> {
    check_q(q)?;
    if !(2..=n * (q - 1)).contains(&d) || r > n {
        return Err(Error::domain(format!(
            "w1_prm needs 2 <= d <= n(q-1) and r <= n (n={n}, r={r}, d={d}, q={q})"
        )));
    }
    w1_prm(r, d, q)
}

/// Next-to-minimal weight of binary RM(n, e), `1 <= e <= n-1`, with `k = e - 1`.
pub fn w2_rm_binary(n: u32, e: u32) -> Result<u64> {
    if e == 0 || e >= n {
        return Err(Error::domain(format!(
            "w2_rm_binary needs 1 <= e <= n-1 (n={n}, e={e})"
        )));
    }
    let k = e - 1;
    Ok(if k == 0 {
        pow(2, n)
    } else if k == n - 2 {
        4
    } else {
        3 * pow(2, n - k - 2)
    })
}

/// Next-to-minimal weight of binary PRM(n, d), `2 <= d <= n`.
pub fn w2_prm_binary(n: u32, d: u32) -> Result<u64> {
    if d == 1 {
        return Err(Error::domain(
            "PRM(n, 1) has no next-to-minimal weight: all hyperplanes have the same size",
        ));
    }
    if n < 2 || d < 2 || d > n {
        return Err(Error::domain(format!(
            "w2_prm_binary needs n >= 2 and 2 <= d <= n (n={n}, d={d})"
        )));
    }
    let k = d - 2;
    if k == 0 && n >= 3 {
        Ok(3 * pow(2, n - 2))
    } else {
        w2_rm_binary(n, d - 1)
    }
}

/// Possible next-to-minimal weights of RM(n, d) over GF(q):
/// `(q - b) q^(n-a-1) + c q^(n-a-2)` for `c` in `{b-1, q-1, q}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct W2Candidates {
    pub base: u64,
    pub options: BTreeSet<u64>,
}

impl W2Candidates {
    pub fn contains(&self, w: u64) -> bool {
        self.options.contains(&w)
    }
}

/// When `a = n - 1` the step `q^(n-a-2)` is `1/q`; the formula is evaluated
/// exactly there and only integer values are kept.
pub fn w2_rm_candidates(n: u32, d: u32, q: u32) -> Result<W2Candidates> {
    check_q(q)?;
    let (a, b) = rm_decomposition(d, q).ok_or_else(|| Error::domain("d must be >= 1"))?;
    if a + 1 > n {
        return Err(Error::domain(format!(
            "candidate formula needs n - a - 1 >= 0 (n={n}, d={d}, q={q}, a={a})"
        )));
    }
    let base = (q - b) as u64 * pow(q, n - a - 1);
    let cs = [b - 1, q - 1, q];
    let options: BTreeSet<u64> = if a + 2 <= n {
        let step = pow(q, n - a - 2);
        cs.into_iter().map(|c| base + c as u64 * step).collect()
    } else {
        cs.into_iter()
            .filter(|c| c % q == 0)
            .map(|c| base + (c / q) as u64)
            .collect()
    };
    let out = W2Candidates { base, options };
    if q == 2 && (1..n).contains(&d) {
        let w = w2_rm_binary(n, d)?;
        assert!(
            out.contains(w),
            "binary W2 {w} outside candidate set {:?}",
            out.options
        );
    }
    Ok(out)
}

/// Gaussian binomial `[m choose r]_q`.
pub fn gaussian_binomial(m: u32, r: u32, q: u32) -> u128 {
    if r > m {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..r {
        num *= q.pow(m - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn w1_rm_examples() {
        assert_eq!(w1_rm(3, 2, 2).unwrap(), 2);
        assert_eq!(w1_rm(2, 2, 3).unwrap(), 3);
        assert_eq!(w1_rm(2, 4, 3).unwrap(), 1);
        assert_eq!(w1_rm(2, 9, 3).unwrap(), 1);
        assert!(w1_rm(2, 0, 3).is_err());
    }

    #[test]
    fn w1_prm_examples() {
        assert_eq!(w1_prm_in(3, 3, 2, 2).unwrap(), 4);
        // k = 2 for d = 4, q = 2
        assert_eq!(w1_prm_in(4, 1, 4, 2).unwrap(), 1);
        assert_eq!(w1_prm_in(4, 4, 3, 2).unwrap(), 4);
        assert!(w1_prm_in(3, 4, 2, 2).is_err());
        assert!(w1_prm_in(3, 1, 1, 2).is_err());
    }

    #[test]
    fn w2_binary_examples() {
        assert_eq!(w2_rm_binary(4, 1).unwrap(), 16);
        assert_eq!(w2_rm_binary(5, 3).unwrap(), 6);
        assert_eq!(w2_rm_binary(4, 3).unwrap(), 4);
        assert!(w2_rm_binary(4, 4).is_err());
        assert_eq!(w2_prm_binary(4, 2).unwrap(), 12);
        assert_eq!(w2_prm_binary(5, 3).unwrap(), 12);
        assert_eq!(w2_prm_binary(2, 2).unwrap(), 4);
        assert!(w2_prm_binary(4, 1).is_err());
        assert!(w2_prm_binary(3, 4).is_err());
    }

    #[test]
    fn candidate_examples() {
        let set = |v: &[u64]| v.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(w2_rm_candidates(2, 2, 3).unwrap().options, set(&[4, 5, 6]));
        let c = w2_rm_candidates(4, 2, 2).unwrap();
        assert_eq!((c.base, c.options.clone()), (4, set(&[4, 6, 8])));
        assert!(c.contains(w2_rm_binary(4, 2).unwrap()));
        let c = w2_rm_candidates(3, 1, 2).unwrap();
        assert_eq!(c.options, set(&[4, 6, 8]));
        assert!(c.contains(8));
        // boundary row a = n - 1: 2 + c/3 for c in {0, 2, 3}
        assert_eq!(w2_rm_candidates(2, 3, 3).unwrap().options, set(&[2, 3]));
        assert!(w2_rm_candidates(2, 5, 3).is_err());
    }

    #[test]
    fn gaussian_counts() {
        assert_eq!(gaussian_binomial(4, 3, 2), 15);
        assert_eq!(gaussian_binomial(3, 2, 2), 7);
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(3, 1, 3), 13);
        assert_eq!(gaussian_binomial(2, 3, 3), 0);
    }

    #[test]
    fn projective_identity_on_grid() {
        for q in [2u32, 3, 5] {
            for n in 1..=6 {
                for d in 2..=n * (q - 1) {
                    assert_eq!(
                        w1_prm_in(n, n, d, q).unwrap(),
                        w1_rm(n, d - 1, q).unwrap(),
                        "q={q} n={n} d={d}"
                    );
                }
            }
        }
    }

    #[test]
    fn binary_strictness_and_monotonicity() {
        for n in 3..=12 {
            let prm = w2_prm_binary(n, 2).unwrap();
            assert_eq!(prm, 3 << (n - 2));
            assert!(prm < w2_rm_binary(n, 1).unwrap());
        }
        for n in 2..=12u32 {
            for d in 2..=n {
                assert!(w2_prm_binary(n, d).unwrap() > w1_rm(n, d - 1, 2).unwrap());
            }
            for e in 1..n {
                assert!(w2_rm_binary(n, e).unwrap() > w1_rm(n, e, 2).unwrap());
                let c = w2_rm_candidates(n, e, 2).unwrap();
                assert!(c.contains(w2_rm_binary(n, e).unwrap()));
            }
        }
    }
}
