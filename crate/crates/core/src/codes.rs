//! Generalized Reed-Muller and projective Reed-Muller codes as evaluation codes.
//!
//! A code is the row space of its evaluation matrix: one row per monomial,
//! one column per point of the canonical enumeration. The quotient by the
//! vanishing ideal is never formed symbolically; it is the kernel of that
//! matrix, so dimensions come from numeric rank.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gfp::{Fe, Field};
use crate::matrix::{BitMatrix, Matrix};
use crate::points::{enumerate_affine, enumerate_projective};
use crate::poly::{Exponents, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Rm,
    Prm,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Rm => "rm",
            Family::Prm => "prm",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "rm" => Ok(Family::Rm),
            "prm" => Ok(Family::Prm),
            other => Err(Error::Parse(format!("unknown code family {other:?}"))),
        }
    }
}

/// Code family, field and order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CodeParams {
    pub family: Family,
    pub field: Field,
    pub n: usize,
    pub d: u32,
}

impl CodeParams {
    pub fn rm(q: u32, n: usize, d: u32) -> Result<Self> {
        Self::new(Family::Rm, q, n, d)
    }

    pub fn prm(q: u32, n: usize, d: u32) -> Result<Self> {
        Self::new(Family::Prm, q, n, d)
    }

    pub fn new(family: Family, q: u32, n: usize, d: u32) -> Result<Self> {
        let field = Field::new(q)?;
        if n == 0 {
            return Err(Error::domain("ambient dimension n must be at least 1"));
        }
        let p = CodeParams {
            family,
            field,
            n,
            d,
        };
        match family {
            Family::Rm if d > p.max_order() => Err(Error::domain(format!(
                "RM order d = {d} exceeds n(q-1) = {}",
                p.max_order()
            ))),
            Family::Prm if d == 0 => Err(Error::domain("PRM order d must be at least 1")),
            _ => Ok(p),
        }
    }

    pub fn q(&self) -> u32 {
        self.field.q() as u32
    }

    /// n(q-1), the top of the range where formulas apply.
    pub fn max_order(&self) -> u32 {
        self.n as u32 * (self.q() - 1)
    }

    /// `(a, b)` with `d = a(q-1) + b`, `0 < b <= q-1`.
    pub fn rm_decomposition(&self) -> Option<(u32, u32)> {
        rm_decomposition(self.d, self.q())
    }

    /// `(k, l)` with `d - 1 = k(q-1) + l`, `0 < l <= q-1`.
    pub fn prm_decomposition(&self) -> Option<(u32, u32)> {
        self.d
            .checked_sub(1)
            .and_then(|e| rm_decomposition(e, self.q()))
    }

    pub fn length(&self) -> u128 {
        let q = self.q() as u128;
        match self.family {
            Family::Rm => q.pow(self.n as u32),
            Family::Prm => crate::points::projective_count(self.n, q as u64),
        }
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.family {
            Family::Rm => "RM",
            Family::Prm => "PRM",
        };
        write!(f, "{name}(n={}, d={}, q={})", self.n, self.d, self.q())
    }
}

pub fn rm_decomposition(d: u32, q: u32) -> Option<(u32, u32)> {
    if d == 0 {
        return None;
    }
    let a = (d - 1) / (q - 1);
    Some((a, d - a * (q - 1)))
}

/// An evaluation code with a row-reduced generator matrix.
#[derive(Clone, Debug)]
pub struct Code {
    pub params: CodeParams,
    pub length: usize,
    pub dimension: usize,
    /// Row-reduced generator, `dimension x length`.
    pub gen: Matrix,
    pub pivots: Vec<usize>,
    /// Monomials whose evaluation rows are independent, in generation order.
    pub basis_monomials: Vec<Exponents>,
    /// Coordinates of the evaluation points, column order.
    pub points: Vec<Vec<Fe>>,
    packed: Option<BitMatrix>,
}

/// Monomials in `nvars` variables in graded lexicographic order: ascending
/// total degree, then descending exponent vector.
pub fn graded_monomials(
    nvars: usize,
    degrees: impl IntoIterator<Item = u32>,
    max_exp: Option<u32>,
) -> Vec<Exponents> {
    fn rec(i: usize, left: u32, cur: &mut Exponents, cap: Option<u32>, out: &mut Vec<Exponents>) {
        if i + 1 == cur.len() {
            if cap.is_none_or(|c| left <= c) {
                cur[i] = left;
                out.push(cur.clone());
            }
            return;
        }
        let top = cap.map_or(left, |c| c.min(left));
        for e in (0..=top).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, cap, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        return out;
    }
    for t in degrees {
        rec(0, t, &mut vec![0; nvars], max_exp, &mut out);
    }
    out
}

/// Exponent vectors of the generators `X_j^q X_i - X_i^q X_j` of the
/// projective vanishing ideal, as polynomials in `n + 1` variables.
pub fn projective_ideal_generators(field: Field, n: usize) -> Vec<Poly> {
    let q = field.q() as u32;
    let mut out = Vec::new();
    for i in 0..=n {
        for j in i + 1..=n {
            let mut a = vec![0; n + 1];
            a[j] = q;
            a[i] += 1;
            let mut b = vec![0; n + 1];
            b[i] = q;
            b[j] += 1;
            let p = Poly::from_terms(field, n + 1, [(a, Fe::ONE), (b, field.neg(Fe::ONE))])
                .expect("arity matches");
            out.push(p);
        }
    }
    out
}

fn evaluation_matrix(field: Field, monomials: &[Exponents], points: &[Vec<Fe>]) -> Matrix {
    let mut m = Matrix::zeros(monomials.len(), points.len());
    for (r, e) in monomials.iter().enumerate() {
        for (c, pt) in points.iter().enumerate() {
            let v = e.iter().zip(pt).fold(Fe::ONE, |acc, (&k, &x)| {
                field.mul(acc, field.pow(x, k as u64))
            });
            m.set(r, c, v);
        }
    }
    m
}

fn transpose(m: &Matrix) -> Matrix {
    let mut t = Matrix::zeros(m.cols(), m.rows());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            t.set(c, r, m.get(r, c));
        }
    }
    t
}

impl Code {
    fn from_evaluations(
        params: CodeParams,
        monomials: Vec<Exponents>,
        points: Vec<Vec<Fe>>,
    ) -> Self {
        let field = params.field;
        let eval = evaluation_matrix(field, &monomials, &points);
        let binary = field.q() == 2;

        // Leftmost pivot columns of the transpose are the first independent rows.
        let survivors = if binary {
            transpose(&eval).to_bits().rref().pivots
        } else {
            transpose(&eval).rref(field).pivots
        };
        let (mut gen, pivots) = if binary {
            let r = eval.to_bits().rref();
            (r.matrix.to_matrix(), r.pivots)
        } else {
            let r = eval.rref(field);
            (r.matrix, r.pivots)
        };
        assert_eq!(survivors.len(), pivots.len());
        gen.truncate_rows(pivots.len());
        let packed = binary.then(|| gen.to_bits());
        Code {
            params,
            length: points.len(),
            dimension: pivots.len(),
            gen,
            pivots,
            basis_monomials: survivors
                .into_iter()
                .map(|i| monomials[i].clone())
                .collect(),
            points,
            packed,
        }
    }

    pub fn build(params: CodeParams) -> Result<Self> {
        match params.family {
            Family::Rm => build_rm(params),
            Family::Prm => build_prm(params),
        }
    }

    pub fn field(&self) -> Field {
        self.params.field
    }

    /// Bit-packed generator, present for q = 2.
    pub fn packed(&self) -> Option<&BitMatrix> {
        self.packed.as_ref()
    }

    pub fn encode(&self, message: &[Fe]) -> Result<Vec<Fe>> {
        if message.len() != self.dimension {
            return Err(Error::domain(format!(
                "message length {} does not match dimension {}",
                message.len(),
                self.dimension
            )));
        }
        Ok(self.gen.left_mul(self.field(), message))
    }

    /// Indices of the nonzero positions of the codeword for `message`.
    pub fn codeword_support(&self, message: &[Fe]) -> Result<Vec<usize>> {
        Ok(self
            .encode(message)?
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect())
    }

    /// The vector of values of `p` at the code's points.
    pub fn evaluate(&self, p: &Poly) -> Result<Vec<Fe>> {
        self.points.iter().map(|pt| p.evaluate(pt)).collect()
    }

    /// Recover the message of a codeword, or `None` if `word` is not in the code.
    pub fn message_for(&self, word: &[Fe]) -> Option<Vec<Fe>> {
        if word.len() != self.length {
            return None;
        }
        let msg: Vec<Fe> = self.pivots.iter().map(|&c| word[c]).collect();
        (self.encode(&msg).ok()? == word).then_some(msg)
    }
}

pub fn build_rm(params: CodeParams) -> Result<Code> {
    if params.family != Family::Rm {
        return Err(Error::domain("build_rm needs RM parameters"));
    }
    if params.d > params.max_order() {
        return Err(Error::domain("RM order out of range"));
    }
    let field = params.field;
    let points: Vec<Vec<Fe>> = enumerate_affine(params.n, field)?
        .into_iter()
        .map(|p| p.0)
        .collect();
    let monomials = graded_monomials(params.n, 0..=params.d, Some(field.q() as u32 - 1));
    let count = monomials.len();
    let code = Code::from_evaluations(params, monomials, points);
    // Reduced monomials evaluate independently on affine space.
    assert_eq!(
        code.dimension, count,
        "reduced monomials must be independent"
    );
    Ok(code)
}

pub fn build_prm(params: CodeParams) -> Result<Code> {
    if params.family != Family::Prm {
        return Err(Error::domain("build_prm needs PRM parameters"));
    }
    if params.d == 0 {
        return Err(Error::domain("PRM order out of range"));
    }
    let points: Vec<Vec<Fe>> = enumerate_projective(params.n, params.field)?
        .into_iter()
        .map(|p| p.coords().to_vec())
        .collect();
    let monomials = graded_monomials(params.n + 1, [params.d], None);
    Ok(Code::from_evaluations(params, monomials, points))
}
