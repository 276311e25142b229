//! Enumeration of affine and projective space over GF(q).
//!
//! The order produced here is the column order of every generator matrix and
//! the index space of every support set. Points are listed in ascending
//! lexicographic order of their coordinate vectors; projective points use the
//! standard representative whose first nonzero coordinate is 1.

use crate::error::{Error, Result};
use crate::gfp::{Fe, Field};

/// Version tag of the point-order contract, embedded in serialized matrices.
pub const POINT_ORDER_VERSION: &str = "lex-std-v1";

/// Default cap on the number of enumerated points.
pub const DEFAULT_POINT_CAP: u128 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePoint(pub Vec<Fe>);

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint(Vec<Fe>);

impl ProjPoint {
    /// Normalize a nonzero vector to its standard representative.
    pub fn normalize(field: Field, coords: &[Fe]) -> Result<Self> {
        let lead = coords
            .iter()
            .copied()
            .find(|c| !c.is_zero())
            .ok_or_else(|| Error::domain("the zero vector is not a projective point"))?;
        let inv = field.inv(lead)?;
        Ok(ProjPoint(
            coords.iter().map(|&c| field.mul(c, inv)).collect(),
        ))
    }

    pub fn coords(&self) -> &[Fe] {
        &self.0
    }

    /// Position of the leading 1.
    pub fn lead(&self) -> usize {
        self.0.iter().position(|c| !c.is_zero()).unwrap()
    }
}

/// q^(n+1)-1 over q-1.
pub fn projective_count(n: usize, q: u64) -> u128 {
    let q = q as u128;
    (q.pow(n as u32 + 1) - 1) / (q - 1)
}

fn check_cap(what: &str, count: u128, cap: u128) -> Result<()> {
    if count > cap {
        return Err(Error::budget(
            format!("{count} points of {what}"),
            count,
            cap,
        ));
    }
    Ok(())
}

fn digits(mut v: usize, q: usize, len: usize) -> Vec<Fe> {
    let mut out = vec![Fe::ZERO; len];
    for slot in out.iter_mut().rev() {
        *slot = Fe((v % q) as u8);
        v /= q;
    }
    out
}

pub fn enumerate_affine(n: usize, field: Field) -> Result<Vec<AffinePoint>> {
    enumerate_affine_capped(n, field, DEFAULT_POINT_CAP)
}

pub fn enumerate_affine_capped(n: usize, field: Field, cap: u128) -> Result<Vec<AffinePoint>> {
    if n == 0 {
        return Err(Error::domain("affine dimension must be at least 1"));
    }
    let q = field.order();
    let count = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    check_cap(&format!("A^{n}(F_{q})"), count, cap)?;
    Ok((0..count as usize)
        .map(|v| AffinePoint(digits(v, q, n)))
        .collect())
}

pub fn enumerate_projective(n: usize, field: Field) -> Result<Vec<ProjPoint>> {
    enumerate_projective_capped(n, field, DEFAULT_POINT_CAP)
}

pub fn enumerate_projective_capped(n: usize, field: Field, cap: u128) -> Result<Vec<ProjPoint>> {
    if n == 0 {
        return Err(Error::domain("projective dimension must be at least 1"));
    }
    let q = field.order();
    check_cap(&format!("P^{n}(F_{q})"), projective_count(n, q as u64), cap)?;
    let mut out = Vec::new();
    // Leading position n first: those vectors are lexicographically smallest.
    for lead in (0..=n).rev() {
        let tail = n - lead;
        for v in 0..q.pow(tail as u32) {
            let mut coords = vec![Fe::ZERO; n + 1];
            coords[lead] = Fe::ONE;
            coords[lead + 1..].copy_from_slice(&digits(v, q, tail));
            out.push(ProjPoint(coords));
        }
    }
    Ok(out)
}

/// Index of a standard point in the canonical projective enumeration.
pub fn projective_index(point: &ProjPoint, q: usize) -> usize {
    let coords = point.coords();
    let n = coords.len() - 1;
    let lead = point.lead();
    let before = (q.pow((n - lead) as u32) - 1) / (q - 1);
    let tail = coords[lead + 1..]
        .iter()
        .fold(0usize, |acc, c| acc * q + c.0 as usize);
    before + tail
}

/// Index of an affine point in the canonical affine enumeration.
pub fn affine_index(point: &AffinePoint, q: usize) -> usize {
    point.0.iter().fold(0usize, |acc, c| acc * q + c.0 as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[ProjPoint]) -> Vec<Vec<u8>> {
        v.iter()
            .map(|p| p.coords().iter().map(|c| c.0).collect())
            .collect()
    }

    #[test]
    fn affine_small() {
        let f2 = Field::new(2).unwrap();
        let a1 = enumerate_affine(1, f2).unwrap();
        assert_eq!(a1, vec![AffinePoint(vec![Fe(0)]), AffinePoint(vec![Fe(1)])]);
        let a2 = enumerate_affine(2, f2).unwrap();
        assert_eq!(a2.len(), 4);
        assert_eq!(a2[0].0, vec![Fe(0), Fe(0)]);
        assert_eq!(a2[3].0, vec![Fe(1), Fe(1)]);
        let f3 = Field::new(3).unwrap();
        assert_eq!(enumerate_affine(3, f3).unwrap().len(), 27);
    }

    #[test]
    fn projective_plane_over_f2() {
        let f2 = Field::new(2).unwrap();
        let p = enumerate_projective(2, f2).unwrap();
        assert_eq!(
            pts(&p),
            vec![
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![0, 1, 1],
                vec![1, 0, 0],
                vec![1, 0, 1],
                vec![1, 1, 0],
                vec![1, 1, 1]
            ]
        );
        assert_eq!(
            enumerate_projective(2, Field::new(3).unwrap())
                .unwrap()
                .len(),
            13
        );
        assert_eq!(enumerate_projective(4, f2).unwrap().len(), 31);
    }

    #[test]
    fn cap_enforced() {
        let f2 = Field::new(2).unwrap();
        assert!(matches!(
            enumerate_affine(25, f2),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            enumerate_projective_capped(5, f2, 10),
            Err(Error::BudgetExceeded { required: 63, .. })
        ));
        assert!(enumerate_affine(0, f2).is_err());
    }

    #[test]
    fn order_count_and_representatives() {
        for q in [2u32, 3, 5] {
            let f = Field::new(q).unwrap();
            for n in 1..=3 {
                let p = enumerate_projective(n, f).unwrap();
                assert_eq!(p.len() as u128, projective_count(n, q as u64));
                assert!(p.windows(2).all(|w| w[0] < w[1]), "strictly ascending");
                for (i, pt) in p.iter().enumerate() {
                    assert_eq!(projective_index(pt, q as usize), i);
                    for s in 1..q as u8 {
                        let scaled: Vec<Fe> =
                            pt.coords().iter().map(|&c| f.mul(c, Fe(s))).collect();
                        assert_eq!(&ProjPoint::normalize(f, &scaled).unwrap(), pt);
                    }
                }
                // affine chart X0 = 1 is exactly the tail block of the projective list
                let a = enumerate_affine(n, f).unwrap();
                let chart: Vec<_> = p.iter().filter(|pt| pt.coords()[0] == Fe::ONE).collect();
                assert_eq!(chart.len(), a.len());
                for (ap, pp) in a.iter().zip(chart) {
                    assert_eq!(&pp.coords()[1..], &ap.0[..]);
                    assert_eq!(
                        affine_index(ap, q as usize) + p.len() - a.len(),
                        projective_index(pp, q as usize)
                    );
                }
            }
        }
    }
}
