//! Projective linear subspaces of P^n(F_q) and predicates on point sets.
//!
//! Subspaces are enumerated through canonical RREF bases of
//! (r+1) x (n+1) full-rank matrices. Each carries the linear forms cutting it
//! out and the indices of its points in the canonical projective order.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use serde::Serialize;

use crate::codes::CodeParams;
use crate::error::{Error, Result};
use crate::formulas::{gaussian_binomial, w1_prm};
use crate::gfp::{Fe, Field};
use crate::matrix::{EchelonBasis, Matrix};
use crate::points::{enumerate_projective, projective_index, ProjPoint};
use crate::poly::Poly;

/// Default cap on the number of subspaces enumerated for one dimension.
pub const DEFAULT_SUBSPACE_CAP: u128 = 1_000_000;

/// A point set in P^n(F_q) as a bitset over canonical point indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportSet {
    len: usize,
    bits: Vec<u64>,
}

impl SupportSet {
    pub fn empty(len: usize) -> Self {
        SupportSet {
            len,
            bits: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = SupportSet::empty(len);
        for i in indices {
            if i >= len {
                return Err(Error::domain(format!("point index {i} out of range {len}")));
            }
            s.bits[i / 64] |= 1 << (i % 64);
        }
        Ok(s)
    }

    pub fn full(len: usize) -> Self {
        SupportSet::from_indices(len, 0..len).expect("in range")
    }

    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn intersection_count(&self, other: &SupportSet) -> usize {
        self.bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset_of(&self, other: &SupportSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn complement(&self) -> SupportSet {
        SupportSet::from_indices(self.len, (0..self.len).filter(|&i| !self.contains(i)))
            .expect("in range")
    }

    pub fn union_with(&mut self, other: &SupportSet) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.contains(i)).collect()
    }
}

/// A projective linear subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    /// Projective dimension r.
    pub dim: usize,
    /// RREF basis, r+1 rows of n+1 coordinates.
    pub basis: Vec<Vec<Fe>>,
    /// n - r independent linear forms (RREF) whose common zero set this is.
    pub forms: Vec<Vec<Fe>>,
    pub point_indices: Vec<usize>,
    mask: SupportSet,
}

impl Subspace {
    pub fn mask(&self) -> &SupportSet {
        &self.mask
    }

    pub fn len(&self) -> usize {
        self.point_indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.point_indices.is_empty()
    }

    pub fn forms_u8(&self) -> Vec<Vec<u8>> {
        self.forms
            .iter()
            .map(|f| f.iter().map(|c| c.0).collect())
            .collect()
    }

    pub fn meets(&self, s: &SupportSet) -> bool {
        self.mask.intersection_count(s) > 0
    }

    /// Equations such as `X0=0, X1+X2=0`.
    pub fn equations(&self) -> String {
        self.forms
            .iter()
            .map(|f| format!("{}=0", format_form(f)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn format_form(form: &[Fe]) -> String {
    form.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            if *c == Fe::ONE {
                format!("X{i}")
            } else {
                format!("{}*X{i}", c.0)
            }
        })
        .collect::<Vec<_>>()
        .join("+")
}

/// Null space of an RREF matrix with the given pivots, returned in RREF.
fn annihilator(field: Field, basis: &[Vec<Fe>], pivots: &[usize], width: usize) -> Vec<Vec<Fe>> {
    let mut forms = Vec::new();
    for free in (0..width).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Fe::ZERO; width];
        v[free] = Fe::ONE;
        for (row, &p) in basis.iter().zip(pivots) {
            v[p] = field.neg(row[free]);
        }
        forms.push(v);
    }
    if forms.is_empty() {
        return forms;
    }
    let r = Matrix::from_rows(forms).rref(field);
    r.matrix
        .iter_rows()
        .take(r.rank)
        .map(|r| r.to_vec())
        .collect()
}

/// Points and subspaces of P^n(F_q), computed once and shared.
#[derive(Debug)]
pub struct Geometry {
    pub n: usize,
    pub field: Field,
    pub points: Vec<ProjPoint>,
    cap: u128,
    by_dim: Vec<OnceLock<std::result::Result<Vec<Subspace>, Error>>>,
}

impl Geometry {
    pub fn new(n: usize, field: Field) -> Result<Self> {
        Self::with_cap(n, field, DEFAULT_SUBSPACE_CAP)
    }

    pub fn with_cap(n: usize, field: Field, cap: u128) -> Result<Self> {
        let points = enumerate_projective(n, field)?;
        Ok(Geometry {
            n,
            field,
            points,
            cap,
            by_dim: (0..n).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn index_of(&self, coords: &[Fe]) -> Result<usize> {
        let p = ProjPoint::normalize(self.field, coords)?;
        Ok(projective_index(&p, self.field.order()))
    }

    /// All subspaces of projective dimension `s`, `0 <= s <= n-1`.
    pub fn subspaces(&self, s: usize) -> Result<&[Subspace]> {
        if s >= self.n {
            return Err(Error::domain(format!(
                "subspace dimension {s} must be below n = {}",
                self.n
            )));
        }
        self.by_dim[s]
            .get_or_init(|| enumerate_subspaces_capped(self, s, self.cap))
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    pub fn hyperplanes(&self) -> Result<&[Subspace]> {
        self.subspaces(self.n - 1)
    }

    fn subspace_from_basis(&self, basis: Vec<Vec<Fe>>, pivots: &[usize]) -> Subspace {
        let f = self.field;
        let q = f.order();
        let k = basis.len();
        let width = self.n + 1;
        let mut idx = BTreeSet::new();
        let mut coeffs = vec![Fe::ZERO; k];
        for combo in 1..q.pow(k as u32) {
            let mut v = combo;
            for c in coeffs.iter_mut() {
                *c = Fe((v % q) as u8);
                v /= q;
            }
            let mut pt = vec![Fe::ZERO; width];
            for (c, row) in coeffs.iter().zip(&basis) {
                for (x, &y) in pt.iter_mut().zip(row) {
                    *x = f.add(*x, f.mul(*c, y));
                }
            }
            idx.insert(
                self.index_of(&pt)
                    .expect("independent rows give nonzero points"),
            );
        }
        let point_indices: Vec<usize> = idx.into_iter().collect();
        let mask = SupportSet::from_indices(self.num_points(), point_indices.iter().copied())
            .expect("in range");
        Subspace {
            dim: k - 1,
            forms: annihilator(f, &basis, pivots, width),
            basis,
            point_indices,
            mask,
        }
    }

    /// The subspace cut out by the given linear forms.
    pub fn subspace_from_forms(&self, forms: &[Vec<Fe>]) -> Result<Subspace> {
        let f = self.field;
        let width = self.n + 1;
        if forms.iter().any(|r| r.len() != width) {
            return Err(Error::domain("linear form has the wrong length"));
        }
        let r = Matrix::from_rows(forms.to_vec()).rref(f);
        if r.rank == 0 || r.rank > self.n {
            return Err(Error::domain("forms must have rank between 1 and n"));
        }
        let rows: Vec<Vec<Fe>> = r
            .matrix
            .iter_rows()
            .take(r.rank)
            .map(|x| x.to_vec())
            .collect();
        // basis of the subspace = null space of the forms
        let null = annihilator(f, &rows, &r.pivots, width);
        let nb = Matrix::from_rows(null).rref(f);
        let basis: Vec<Vec<Fe>> = nb
            .matrix
            .iter_rows()
            .take(nb.rank)
            .map(|x| x.to_vec())
            .collect();
        Ok(self.subspace_from_basis(basis, &nb.pivots))
    }
}

pub fn enumerate_subspaces(n: usize, field: Field, s: usize) -> Result<Vec<Subspace>> {
    let g = Geometry::new(n, field)?;
    Ok(g.subspaces(s)?.to_vec())
}

fn enumerate_subspaces_capped(g: &Geometry, s: usize, cap: u128) -> Result<Vec<Subspace>> {
    let width = g.n + 1;
    let k = s + 1;
    let q = g.field.order();
    let count = gaussian_binomial(width as u32, k as u32, q as u32);
    if count > cap {
        return Err(Error::budget(
            format!("{count} {s}-dimensional subspaces of P^{}(F_{q})", g.n),
            count,
            cap,
        ));
    }
    // Pivot sets in descending lexicographic order, so subspaces spanned by
    // trailing coordinates (which hold the lowest point indices) come first.
    let mut combos = Vec::new();
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        combos.push(pivots.clone());
        let Some(i) = (0..k).rev().find(|&i| pivots[i] < width - k + i) else {
            break;
        };
        pivots[i] += 1;
        for j in i + 1..k {
            pivots[j] = pivots[j - 1] + 1;
        }
    }
    let mut out = Vec::with_capacity(count as usize);
    for pivots in combos.iter().rev() {
        // free slots: row i, columns right of its pivot that are not pivots
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| {
                (pivots[i] + 1..width)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (i, c))
            })
            .collect();
        for assignment in 0..q.pow(free.len() as u32) {
            let mut basis = vec![vec![Fe::ZERO; width]; k];
            for (i, &p) in pivots.iter().enumerate() {
                basis[i][p] = Fe::ONE;
            }
            // first free slot is the most significant digit
            let mut v = assignment;
            for &(i, c) in free.iter().rev() {
                basis[i][c] = Fe((v % q) as u8);
                v /= q;
            }
            out.push(g.subspace_from_basis(basis, pivots));
        }
    }
    debug_assert_eq!(out.len() as u128, count);
    Ok(out)
}

/// First dimension-`r` subspace (in enumeration order) disjoint from `support`.
pub fn find_avoiding_subspace<'g>(
    g: &'g Geometry,
    support: &SupportSet,
    r: usize,
) -> Result<Option<&'g Subspace>> {
    if support.is_empty() {
        return Err(Error::domain("support must be nonempty"));
    }
    Ok(g.subspaces(r)?.iter().find(|h| !h.meets(support)))
}

/// Largest `r` with an avoiding subspace of dimension `r`, and that subspace.
pub fn largest_avoiding_subspace<'g>(
    g: &'g Geometry,
    support: &SupportSet,
) -> Result<Option<&'g Subspace>> {
    for r in (0..g.n).rev() {
        if let Some(h) = find_avoiding_subspace(g, support, r)? {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub dim: usize,
    pub forms: Vec<Vec<u8>>,
    pub intersection: usize,
    pub bound: u64,
}

/// Check that every subspace of dimension `1..=n-1` either misses `support`
/// or meets it in at least `W1_PRM(s, d)` points.
pub fn check_subspace_bounds(
    g: &Geometry,
    support: &SupportSet,
    params: &CodeParams,
) -> Result<Vec<Violation>> {
    check_subspace_bounds_dims(g, support, params, 1..g.n)
}

pub fn check_subspace_bounds_dims(
    g: &Geometry,
    support: &SupportSet,
    params: &CodeParams,
    dims: impl IntoIterator<Item = usize>,
) -> Result<Vec<Violation>> {
    if params.n != g.n || params.field != g.field {
        return Err(Error::domain("geometry does not match code parameters"));
    }
    let mut out = Vec::new();
    for s in dims {
        let bound = w1_prm(s as u32, params.d, params.q())?;
        for h in g.subspaces(s)? {
            let meet = h.mask.intersection_count(support);
            if meet > 0 && (meet as u64) < bound {
                out.push(Violation {
                    dim: s,
                    forms: h.forms_u8(),
                    intersection: meet,
                    bound,
                });
            }
        }
    }
    Ok(out)
}

/// Outcome of the hyperplane-union test on a zero set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperplaneUnion {
    pub is_union: bool,
    /// Forms of every hyperplane contained in the zero set.
    pub hyperplanes: Vec<Vec<u8>>,
    /// Zero points not covered by any contained hyperplane.
    pub uncovered: Vec<usize>,
}

/// Whether the complement of `support` is a union of hyperplanes.
pub fn zero_set_is_hyperplane_union_of(
    g: &Geometry,
    support: &SupportSet,
) -> Result<HyperplaneUnion> {
    let zeros = support.complement();
    let mut covered = SupportSet::empty(g.num_points());
    let mut hyperplanes = Vec::new();
    for h in g.hyperplanes()? {
        if h.mask.is_subset_of(&zeros) {
            covered.union_with(&h.mask);
            hyperplanes.push(h.forms[0].iter().map(|c| c.0).collect());
        }
    }
    let uncovered: Vec<usize> = zeros
        .indices()
        .into_iter()
        .filter(|&i| !covered.contains(i))
        .collect();
    Ok(HyperplaneUnion {
        is_union: uncovered.is_empty(),
        hyperplanes,
        uncovered,
    })
}

/// Support of a polynomial on P^n(F_q).
pub fn poly_support(g: &Geometry, f: &Poly) -> Result<SupportSet> {
    if f.nvars() != g.n + 1 {
        return Err(Error::domain(format!(
            "polynomial in {} variables on P^{}",
            f.nvars(),
            g.n
        )));
    }
    let idx = crate::poly::projective_support(f, &g.points);
    SupportSet::from_indices(g.num_points(), idx)
}

pub fn zero_set_is_hyperplane_union(g: &Geometry, f: &Poly) -> Result<HyperplaneUnion> {
    let s = poly_support(g, f)?;
    if s.is_empty() {
        return Err(Error::domain(
            "polynomial vanishes on all of projective space",
        ));
    }
    zero_set_is_hyperplane_union_of(g, &s)
}

/// Invertible change of coordinates whose first row is `form`, completed
/// with unit vectors in index order.
pub fn chart_matrix(field: Field, form: &[Fe]) -> Result<Matrix> {
    let width = form.len();
    let mut eb = EchelonBasis::new(field, width);
    if !eb.insert(form) {
        return Err(Error::domain("hyperplane form is zero"));
    }
    let mut rows = vec![form.to_vec()];
    for i in 0..width {
        let mut e = vec![Fe::ZERO; width];
        e[i] = Fe::ONE;
        if eb.insert(&e) {
            rows.push(e);
        }
    }
    Ok(Matrix::from_rows(rows))
}

fn invert(field: Field, m: &Matrix) -> Matrix {
    let n = m.rows();
    let mut aug = Matrix::zeros(n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            aug.set(r, c, m.get(r, c));
        }
        aug.set(r, n + r, Fe::ONE);
    }
    let red = aug.rref(field);
    assert_eq!(
        red.pivots,
        (0..n).collect::<Vec<_>>(),
        "matrix is invertible"
    );
    let mut inv = Matrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            inv.set(r, c, red.matrix.get(r, n + c));
        }
    }
    inv
}

/// Affine polynomial `g` of degree at most `d - 1` with `|g| = |f|`, obtained
/// by moving the avoiding hyperplane `h` to `X0 = 0`, writing
/// `f = X0 f1 + f2` in the new coordinates and setting `X0 = 1` in `f1`.
pub fn dehomogenize_on_chart(g: &Geometry, f: &Poly, h: &Subspace) -> Result<Poly> {
    let field = g.field;
    if h.dim + 1 != g.n || h.forms.len() != 1 {
        return Err(Error::domain("chart needs a hyperplane"));
    }
    let d = f
        .homogeneous_degree()
        .filter(|&d| d > 0)
        .ok_or_else(|| Error::domain("polynomial must be homogeneous of positive degree"))?;
    let support = poly_support(g, f)?;
    if h.meets(&support) {
        return Err(Error::domain(format!(
            "support of {f} meets the hyperplane {}",
            h.equations()
        )));
    }
    // Y = A X, so X = A^-1 Y; substitute into f.
    let a = chart_matrix(field, &h.forms[0])?;
    let a_inv = invert(field, &a);
    let width = g.n + 1;
    let subs: Vec<Poly> = (0..width)
        .map(|i| Poly::linear_form(field, a_inv.row(i)))
        .collect();
    let moved = f.compose(&subs)?;
    let mut f1 = Poly::zero(field, width);
    for (e, c) in moved.terms() {
        if e[0] > 0 {
            let mut e = e.clone();
            e[0] -= 1;
            f1.add_term(e, c);
        }
    }
    let out = f1.dehomogenize()?;
    debug_assert!(out.degree().is_none_or(|k| k < d));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::points::enumerate_affine;
    use crate::poly::affine_weight;

    fn geo(n: usize, q: u32) -> Geometry {
        Geometry::new(n, Field::new(q).unwrap()).unwrap()
    }

    fn fe(v: &[u8]) -> Vec<Fe> {
        v.iter().map(|&x| Fe(x)).collect()
    }

    #[test]
    fn subspace_counts() {
        let g3 = geo(3, 2);
        assert_eq!(g3.subspaces(2).unwrap().len(), 15);
        assert_eq!(g3.subspaces(1).unwrap().len(), 35);
        assert_eq!(g3.subspaces(0).unwrap().len(), 15);
        assert_eq!(geo(2, 2).subspaces(1).unwrap().len(), 7);
        for q in [2, 3] {
            for n in 1..=3usize {
                let g = geo(n, q);
                for s in 0..n {
                    let subs = g.subspaces(s).unwrap();
                    assert_eq!(
                        subs.len() as u128,
                        gaussian_binomial(n as u32 + 1, s as u32 + 1, q)
                    );
                    let expect = crate::points::projective_count(s, q as u64) as usize;
                    let mut seen = BTreeSet::new();
                    for h in subs {
                        assert_eq!(h.len(), expect);
                        assert_eq!(h.forms.len(), n - s);
                        assert!(seen.insert(h.point_indices.clone()), "listed once");
                        for &i in &h.point_indices {
                            for form in &h.forms {
                                let dot = form
                                    .iter()
                                    .zip(g.points[i].coords())
                                    .fold(Fe::ZERO, |acc, (&a, &b)| {
                                        g.field.add(acc, g.field.mul(a, b))
                                    });
                                assert!(dot.is_zero());
                            }
                        }
                    }
                }
                // duality: as many hyperplanes as points
                assert_eq!(g.hyperplanes().unwrap().len(), g.num_points());
            }
        }
        assert!(geo(3, 2).subspaces(3).is_err());
    }

    #[test]
    fn subspace_cap() {
        let g = Geometry::with_cap(3, Field::new(2).unwrap(), 20).unwrap();
        assert!(matches!(
            g.subspaces(1),
            Err(Error::BudgetExceeded { required: 35, .. })
        ));
        assert!(g.subspaces(2).is_ok());
    }

    #[test]
    fn avoiding_examples() {
        let g = geo(2, 2);
        let f = Poly::parse(g.field, 3, "X0*X1").unwrap();
        let s = poly_support(&g, &f).unwrap();
        assert_eq!(s.indices(), vec![5, 6]);
        let h = find_avoiding_subspace(&g, &s, 1).unwrap().unwrap();
        assert_eq!(h.forms, vec![fe(&[1, 0, 0])]);

        let all = SupportSet::full(7);
        assert!(find_avoiding_subspace(&g, &all, 1).unwrap().is_none());
        assert!(find_avoiding_subspace(&g, &SupportSet::empty(7), 1).is_err());

        let g = geo(3, 2);
        let f = Poly::parse(g.field, 4, "X0*X3+X1*X2").unwrap();
        let s = poly_support(&g, &f).unwrap();
        let line = find_avoiding_subspace(&g, &s, 1).unwrap().unwrap();
        assert_eq!(line.forms, vec![fe(&[1, 0, 0, 0]), fe(&[0, 1, 0, 0])]);
        assert!(find_avoiding_subspace(&g, &s, 2).unwrap().is_none());
    }

    #[test]
    fn subspace_bounds() {
        let g = geo(3, 2);
        let p = CodeParams::prm(2, 3, 2).unwrap();
        let f = Poly::parse(g.field, 4, "X0*X3+X1*X2").unwrap();
        let s = poly_support(&g, &f).unwrap();
        assert!(check_subspace_bounds(&g, &s, &p).unwrap().is_empty());

        let single = SupportSet::from_indices(15, [0]).unwrap();
        let v = check_subspace_bounds_dims(&g, &single, &p, [2]).unwrap();
        assert!(!v.is_empty());
        assert!(v.iter().all(|x| x.intersection == 1 && x.bound == 2));
    }

    #[test]
    fn hyperplane_union_examples() {
        let g = geo(2, 2);
        let u =
            zero_set_is_hyperplane_union(&g, &Poly::parse(g.field, 3, "X0*X1").unwrap()).unwrap();
        assert!(u.is_union);
        let mut hs = u.hyperplanes.clone();
        hs.sort();
        assert_eq!(hs, vec![vec![0, 1, 0], vec![1, 0, 0]]);

        let u =
            zero_set_is_hyperplane_union(&g, &Poly::parse(g.field, 3, "X0^2").unwrap()).unwrap();
        assert!(u.is_union);
        assert_eq!(u.hyperplanes, vec![vec![1, 0, 0]]);

        let g = geo(3, 2);
        let u = zero_set_is_hyperplane_union(&g, &Poly::parse(g.field, 4, "X0*X3+X1*X2").unwrap())
            .unwrap();
        assert!(!u.is_union);
        assert!(u.hyperplanes.is_empty());
        assert_eq!(u.uncovered.len(), 9);
    }

    #[test]
    fn forms_round_trip() {
        let g = geo(3, 3);
        for h in g.subspaces(1).unwrap().iter().step_by(7) {
            let back = g.subspace_from_forms(&h.forms).unwrap();
            assert_eq!(back.point_indices, h.point_indices);
            assert_eq!(back.forms, h.forms);
        }
    }

    #[test]
    fn chart_examples() {
        let g = geo(2, 2);
        let x0 = g.subspace_from_forms(&[fe(&[1, 0, 0])]).unwrap();
        let f = Poly::parse(g.field, 3, "X0*X1").unwrap();
        let aff = enumerate_affine(2, g.field).unwrap();
        let out = dehomogenize_on_chart(&g, &f, &x0).unwrap();
        assert_eq!(affine_weight(&out, &aff), 2);
        assert!(out.degree().unwrap() <= 1);

        let f = Poly::parse(g.field, 3, "X0^2").unwrap();
        let out = dehomogenize_on_chart(&g, &f, &x0).unwrap();
        assert_eq!(out, Poly::constant(g.field, 2, Fe::ONE));
        assert_eq!(affine_weight(&out, &aff), 4);

        let g = geo(3, 2);
        let f = Poly::parse(g.field, 4, "X0*X3+X1*X2").unwrap();
        let x0 = g.subspace_from_forms(&[fe(&[1, 0, 0, 0])]).unwrap();
        assert!(matches!(
            dehomogenize_on_chart(&g, &f, &x0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn chart_preserves_weight_on_arbitrary_hyperplane() {
        let g = geo(2, 3);
        let aff = enumerate_affine(2, g.field).unwrap();
        // (X0 + X1)(X0 + X2): zero set is two lines, each an avoiding hyperplane
        let f = Poly::parse(g.field, 3, "X0^2+X0*X2+X0*X1+X1*X2").unwrap();
        let s = poly_support(&g, &f).unwrap();
        let mut charts = 0;
        for h in g.hyperplanes().unwrap() {
            if h.meets(&s) {
                continue;
            }
            charts += 1;
            let out = dehomogenize_on_chart(&g, &f, h).unwrap();
            assert_eq!(affine_weight(&out, &aff), s.count(), "{}", h.equations());
        }
        assert_eq!(charts, 2);
    }
}
