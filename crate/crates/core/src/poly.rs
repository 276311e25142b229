//! Sparse multivariate polynomials over GF(q).
//!
//! Polynomials are kept as written: nothing is reduced modulo the vanishing
//! ideals of affine or projective space. Whether two polynomials define the
//! same codeword is decided by evaluation.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::gfp::{Fe, Field};
use crate::points::{AffinePoint, ProjPoint};

/// Exponent vector of a monomial, one entry per variable.
pub type Exponents = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Exponents, Fe>,
}

impl Poly {
    pub fn zero(field: Field, nvars: usize) -> Self {
        Poly {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: Field, nvars: usize, c: Fe) -> Self {
        let mut p = Poly::zero(field, nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn monomial(field: Field, exps: Exponents) -> Self {
        let mut p = Poly::zero(field, exps.len());
        p.add_term(exps, Fe::ONE);
        p
    }

    /// The variable `X_i` in `nvars` variables.
    pub fn var(field: Field, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Poly::monomial(field, e)
    }

    /// Linear form sum c_i X_i.
    pub fn linear_form(field: Field, coeffs: &[Fe]) -> Self {
        let mut p = Poly::zero(field, coeffs.len());
        for (i, &c) in coeffs.iter().enumerate() {
            let mut e = vec![0; coeffs.len()];
            e[i] = 1;
            p.add_term(e, c);
        }
        p
    }

    pub fn from_terms(
        field: Field,
        nvars: usize,
        terms: impl IntoIterator<Item = (Exponents, Fe)>,
    ) -> Result<Self> {
        let mut p = Poly::zero(field, nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::domain(format!(
                    "exponent vector of length {} in a polynomial of {nvars} variables",
                    e.len()
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Add `c * X^e` into the polynomial. Panics if the arity is wrong.
    pub fn add_term(&mut self, e: Exponents, c: Fe) {
        assert_eq!(e.len(), self.nvars);
        let f = self.field;
        let slot = self.terms.entry(e).or_insert(Fe::ZERO);
        *slot = f.add(*slot, c);
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, Fe)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// The common degree of all terms if the polynomial is homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn evaluate(&self, point: &[Fe]) -> Result<Fe> {
        if point.len() != self.nvars {
            return Err(Error::domain(format!(
                "point of length {} for a polynomial in {} variables",
                point.len(),
                self.nvars
            )));
        }
        Ok(self.eval_unchecked(point))
    }

    pub(crate) fn eval_unchecked(&self, point: &[Fe]) -> Fe {
        let f = self.field;
        self.terms.iter().fold(Fe::ZERO, |acc, (e, &c)| {
            let m = e
                .iter()
                .zip(point)
                .fold(c, |m, (&k, &x)| f.mul(m, f.pow(x, k as u64)));
            f.add(acc, m)
        })
    }

    pub fn eval_affine(&self, p: &AffinePoint) -> Result<Fe> {
        self.evaluate(&p.0)
    }

    pub fn eval_projective(&self, p: &ProjPoint) -> Result<Fe> {
        self.evaluate(p.coords())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: Fe) -> Poly {
        let mut out = Poly::zero(self.field, self.nvars);
        for (e, k) in self.terms() {
            out.add_term(e.clone(), self.field.mul(c, k));
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let f = self.field;
        let mut out = Poly::zero(f, self.nvars);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, f.mul(ca, cb));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::constant(self.field, self.nvars, Fe::ONE);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitute `subs[i]` for `X_i`. All substitutes share one arity, which
    /// becomes the arity of the result.
    pub fn compose(&self, subs: &[Poly]) -> Result<Poly> {
        if subs.len() != self.nvars {
            return Err(Error::domain("substitution count does not match arity"));
        }
        let out_vars = subs.first().map(|s| s.nvars).unwrap_or(0);
        if subs.iter().any(|s| s.nvars != out_vars) {
            return Err(Error::domain("substitutes have differing arities"));
        }
        let mut out = Poly::zero(self.field, out_vars);
        for (e, c) in self.terms() {
            let mut m = Poly::constant(self.field, out_vars, c);
            for (s, &k) in subs.iter().zip(e) {
                if k > 0 {
                    m = m.mul(&s.pow(k));
                }
            }
            out = out.add(&m);
        }
        Ok(out)
    }

    /// Homogenize with respect to a new variable `X_0` prepended at index 0.
    pub fn homogenize(&self) -> Result<Poly> {
        let deg = self
            .degree()
            .ok_or_else(|| Error::domain("cannot homogenize the zero polynomial"))?;
        let mut out = Poly::zero(self.field, self.nvars + 1);
        for (e, c) in self.terms() {
            let mut h = Vec::with_capacity(self.nvars + 1);
            h.push(deg - e.iter().sum::<u32>());
            h.extend_from_slice(e);
            out.add_term(h, c);
        }
        Ok(out)
    }

    /// Set `X_0 = 1` and drop that variable.
    pub fn dehomogenize(&self) -> Result<Poly> {
        if self.nvars == 0 {
            return Err(Error::domain("no variable to dehomogenize"));
        }
        let mut out = Poly::zero(self.field, self.nvars - 1);
        for (e, c) in self.terms() {
            out.add_term(e[1..].to_vec(), c);
        }
        Ok(out)
    }

    /// Parse `c*X0^e0*X1^e1 + ...`; coefficients and exponents of 1 may be
    /// omitted. Coefficients are reduced mod q.
    pub fn parse(field: Field, nvars: usize, text: &str) -> Result<Poly> {
        let mut p = Poly::zero(field, nvars);
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        for term in text.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in {text:?}")));
            }
            let mut coeff: i64 = 1;
            let mut exps = vec![0u32; nvars];
            for factor in term.split('*') {
                let factor = factor.trim();
                if let Some(rest) = factor.strip_prefix(['X', 'x']) {
                    let (idx, exp) = match rest.split_once('^') {
                        Some((i, e)) => (i.trim(), e.trim()),
                        None => (rest.trim(), "1"),
                    };
                    let idx: usize = idx
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad variable {factor:?}")))?;
                    if idx >= nvars {
                        return Err(Error::Parse(format!(
                            "variable X{idx} out of range for {nvars} variables"
                        )));
                    }
                    let exp: u32 = exp
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?;
                    exps[idx] += exp;
                } else {
                    let c: i64 = factor
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad factor {factor:?}")))?;
                    coeff *= c;
                }
            }
            p.add_term(exps, field.elem(coeff));
        }
        Ok(p)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Highest degree first reads more naturally.
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|(a, _), (b, _)| {
            b.iter()
                .sum::<u32>()
                .cmp(&a.iter().sum())
                .then_with(|| b.cmp(a))
        });
        for (i, (e, c)) in terms.into_iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if c != Fe::ONE {
                factors.push(c.0.to_string());
            }
            for (v, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(format!("X{v}")),
                    _ => factors.push(format!("X{v}^{k}")),
                }
            }
            if factors.is_empty() {
                factors.push("1".into());
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// The degree-`d` homogeneous lift `X_0^(d - deg g) * g^(h)` of an affine
/// polynomial. It agrees with `g` on the chart `X_0 = 1` and vanishes on
/// `X_0 = 0`.
pub fn lift_affine(g: &Poly, d: u32) -> Result<Poly> {
    let deg = g
        .degree()
        .ok_or_else(|| Error::domain("cannot lift the zero polynomial"))?;
    if deg >= d {
        return Err(Error::domain(format!(
            "lift needs deg(g) <= d - 1, got deg(g) = {deg}, d = {d}"
        )));
    }
    let h = g.homogenize()?;
    let mut x0 = vec![0; h.nvars()];
    x0[0] = d - deg;
    Ok(h.mul(&Poly::monomial(g.field(), x0)))
}

/// Indices of points (in the given order) where `p` does not vanish.
pub fn support_on<'a, I>(p: &Poly, points: I) -> Vec<usize>
where
    I: IntoIterator<Item = &'a [Fe]>,
{
    points
        .into_iter()
        .enumerate()
        .filter(|(_, pt)| !p.eval_unchecked(pt).is_zero())
        .map(|(i, _)| i)
        .collect()
}

/// Number of points of `A^n(F_q)` where `g` does not vanish.
pub fn affine_weight(g: &Poly, points: &[AffinePoint]) -> usize {
    support_on(g, points.iter().map(|p| p.0.as_slice())).len()
}

/// Support of `f` as indices into the canonical projective enumeration.
pub fn projective_support(f: &Poly, points: &[ProjPoint]) -> Vec<usize> {
    support_on(f, points.iter().map(|p| p.coords()))
}
