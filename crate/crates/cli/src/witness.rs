use prmw::geometry::{
    largest_avoiding_subspace, poly_support, zero_set_is_hyperplane_union_of, Geometry,
};
use prmw::{Fe, Field, Poly};
use serde::Serialize;

use crate::{output, ConfigError, Format};

#[derive(Clone, Debug, Serialize)]
pub struct Avoiding {
    pub dim: usize,
    pub equations: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub q: u32,
    pub n: usize,
    pub poly: String,
    pub degree: u32,
    pub weight: usize,
    /// Indices into the standard projective point order.
    pub support: Vec<usize>,
    pub support_points: Vec<Vec<u8>>,
    /// Largest subspace disjoint from the support, if any.
    pub avoiding_subspace: Option<Avoiding>,
    /// Absent when the polynomial vanishes everywhere.
    pub hyperplane_union: Option<bool>,
    pub contained_hyperplanes: Vec<String>,
}

pub fn run(q: u32, n: usize, text: &str) -> Result<WitnessReport, ConfigError> {
    let field = Field::new(q)?;
    let f = Poly::parse(field, n + 1, text)?;
    let degree = f
        .homogeneous_degree()
        .ok_or_else(|| ConfigError(format!("`{text}` is not a nonzero homogeneous polynomial")))?;
    let geo = Geometry::new(n, field)?;
    let support = poly_support(&geo, &f)?;
    let (avoiding, union) = if support.is_empty() {
        (None, None)
    } else {
        let h = largest_avoiding_subspace(&geo, &support)?.map(|h| Avoiding {
            dim: h.dim,
            equations: h.equations(),
        });
        (h, Some(zero_set_is_hyperplane_union_of(&geo, &support)?))
    };
    let indices = support.indices();
    Ok(WitnessReport {
        q,
        n,
        poly: f.to_string(),
        degree,
        weight: indices.len(),
        support_points: indices
            .iter()
            .map(|&i| geo.points[i].coords().iter().map(|c| c.0).collect())
            .collect(),
        support: indices,
        avoiding_subspace: avoiding,
        hyperplane_union: union.as_ref().map(|u| u.is_union),
        contained_hyperplanes: union
            .map(|u| {
                u.hyperplanes
                    .iter()
                    .map(|h| {
                        let form = geo.subspace_from_forms(&[h.iter().map(|&c| Fe(c)).collect()]);
                        form.map(|s| s.equations()).unwrap_or_default()
                    })
                    .collect()
            })
            .unwrap_or_default(),
    })
}

fn point(p: &[u8]) -> String {
    let parts: Vec<String> = p.iter().map(u8::to_string).collect();
    format!("({})", parts.join(":"))
}

pub fn render(r: &WitnessReport, format: Format) -> Result<String, ConfigError> {
    let avoiding = match &r.avoiding_subspace {
        Some(a) => format!("dimension {}: {}", a.dim, a.equations),
        None => "none".into(),
    };
    let union = r.hyperplane_union.map_or("n/a".into(), |b| b.to_string());
    let points: Vec<String> = r.support_points.iter().map(|p| point(p)).collect();
    Ok(match format {
        Format::Json => output::json(r)?,
        Format::Csv => {
            let header = [
                "q",
                "n",
                "poly",
                "degree",
                "weight",
                "support",
                "avoiding_subspace",
                "hyperplane_union",
            ];
            let row = vec![
                r.q.to_string(),
                r.n.to_string(),
                r.poly.clone(),
                r.degree.to_string(),
                r.weight.to_string(),
                points.join(" "),
                avoiding,
                union,
            ];
            output::csv(&header, &[row])
        }
        Format::Text => {
            let mut s = String::new();
            s.push_str(&format!(
                "polynomial: {} on P^{} over GF({})\n",
                r.poly, r.n, r.q
            ));
            s.push_str(&format!("degree: {}\n", r.degree));
            s.push_str(&format!("weight: {}\n", r.weight));
            s.push_str(&format!("support: {}\n", points.join(" ")));
            s.push_str(&format!("avoiding subspace: {avoiding}\n"));
            s.push_str(&format!("hyperplane-union: {union}\n"));
            if !r.contained_hyperplanes.is_empty() {
                s.push_str(&format!(
                    "contained hyperplanes: {}\n",
                    r.contained_hyperplanes.join("; ")
                ));
            }
            s
        }
    })
}
