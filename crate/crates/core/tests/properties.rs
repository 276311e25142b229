use proptest::prelude::*;

use prmw::codes::{Code, CodeParams, Family};
use prmw::geometry::{dehomogenize_on_chart, find_avoiding_subspace, poly_support, Geometry};
use prmw::points::{enumerate_affine, enumerate_projective};
use prmw::poly::{affine_weight, lift_affine, projective_support, Poly};
use prmw::weights::{naive_weight_counts, weight_report_with, Execution};
use prmw::{Fe, Field};

fn poly_from(field: Field, nvars: usize, terms: &[(Vec<u32>, u8)]) -> Poly {
    let mut p = Poly::zero(field, nvars);
    for (e, c) in terms {
        p.add_term(e.clone(), field.elem(*c as i64));
    }
    p
}

/// Random terms with total degree below `max_deg` in `nvars` variables.
fn affine_terms(nvars: usize, max_deg: u32) -> impl Strategy<Value = Vec<(Vec<u32>, u8)>> {
    mixed_terms(nvars, max_deg as usize - 1)
}

/// Random homogeneous terms of degree `d` in `nvars` variables.
fn homogeneous_terms(nvars: usize, d: u32) -> impl Strategy<Value = Vec<(Vec<u32>, u8)>> {
    let term =
        (prop::collection::vec(0..nvars, d as usize), any::<u8>()).prop_map(move |(vs, c)| {
            let mut e = vec![0u32; nvars];
            for v in vs {
                e[v] += 1;
            }
            (e, c)
        });
    prop::collection::vec(term, 1..5)
}

/// Random terms of total degree at most `max_deg`.
fn mixed_terms(nvars: usize, max_deg: usize) -> impl Strategy<Value = Vec<(Vec<u32>, u8)>> {
    let term =
        (prop::collection::vec(0..nvars, 0..=max_deg), any::<u8>()).prop_map(move |(vs, c)| {
            let mut e = vec![0u32; nvars];
            for v in vs {
                e[v] += 1;
            }
            (e, c)
        });
    prop::collection::vec(term, 1..8)
}

fn small_code() -> impl Strategy<Value = CodeParams> {
    prop_oneof![
        (1usize..=4, 0u32..=4).prop_filter_map("d", |(n, d)| CodeParams::rm(2, n, d).ok()),
        (1usize..=3, 1u32..=4).prop_filter_map("d", |(n, d)| CodeParams::prm(2, n, d).ok()),
        (1usize..=2, 0u32..=4).prop_filter_map("d", |(n, d)| CodeParams::rm(3, n, d).ok()),
        (1usize..=2, 1u32..=4).prop_filter_map("d", |(n, d)| CodeParams::prm(3, n, d).ok()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lift_keeps_weight(q in prop::sample::select(vec![2u32, 3]), n in 1usize..=3, d in 2u32..=4,
                         raw in affine_terms(3, 4)) {
        let field = Field::new(q).unwrap();
        let terms: Vec<_> = raw
            .into_iter()
            .filter(|(e, _)| e.iter().sum::<u32>() < d)
            .map(|(e, c)| (e[..n].to_vec(), c))
            .collect();
        let g = poly_from(field, n, &terms);
        prop_assume!(!g.is_zero());
        let f = lift_affine(&g, d).unwrap();
        prop_assert_eq!(f.homogeneous_degree(), Some(d));
        let aff = enumerate_affine(n, field).unwrap();
        let proj = enumerate_projective(n, field).unwrap();
        let support = projective_support(&f, &proj);
        prop_assert_eq!(affine_weight(&g, &aff), support.len());
        prop_assert!(support.iter().all(|&i| proj[i].coords()[0] == Fe::ONE));
    }

    #[test]
    fn homogenize_round_trip(q in prop::sample::select(vec![2u32, 3, 5]), raw in affine_terms(3, 5)) {
        let g = poly_from(Field::new(q).unwrap(), 3, &raw);
        prop_assume!(!g.is_zero());
        let h = g.homogenize().unwrap();
        prop_assert_eq!(h.dehomogenize().unwrap(), g.clone());
        prop_assert_eq!(h.homogeneous_degree(), g.degree());
    }

    #[test]
    fn chart_preserves_weight(q in prop::sample::select(vec![2u32, 3]), d in 1u32..=3,
                              raw in homogeneous_terms(4, 3)) {
        let field = Field::new(q).unwrap();
        let terms: Vec<_> = raw
            .into_iter()
            .map(|(mut e, c)| {
                // trim to degree d by lowering the largest exponents
                while e.iter().sum::<u32>() > d {
                    let i = (0..e.len()).max_by_key(|&i| e[i]).unwrap();
                    e[i] -= 1;
                }
                (e, c)
            })
            .collect();
        let f = poly_from(field, 4, &terms);
        prop_assume!(f.homogeneous_degree() == Some(d));
        let geo = Geometry::new(3, field).unwrap();
        let support = poly_support(&geo, &f).unwrap();
        prop_assume!(!support.is_empty());
        if let Some(h) = find_avoiding_subspace(&geo, &support, 2).unwrap() {
            let g = dehomogenize_on_chart(&geo, &f, h).unwrap();
            prop_assert!(g.degree().is_none_or(|k| k < d));
            let aff = enumerate_affine(3, field).unwrap();
            prop_assert_eq!(affine_weight(&g, &aff), support.count());
        }
    }

    #[test]
    fn enumerators_agree(p in small_code()) {
        let code = Code::build(p).unwrap();
        let seq = weight_report_with(&code, 1 << 20, Execution::Sequential).unwrap();
        let par = weight_report_with(&code, 1 << 20, Execution::Parallel).unwrap();
        prop_assert_eq!(&seq.counts, &par.counts);
        prop_assert_eq!(&seq.witnesses_w1, &par.witnesses_w1);
        prop_assert_eq!(&seq.witnesses_w2, &par.witnesses_w2);
        prop_assert_eq!(&seq.counts, &naive_weight_counts(&code, 1 << 20).unwrap());
        prop_assert_eq!(seq.total(), (p.q() as u128).pow(code.dimension as u32));
        for (&w, &c) in &seq.counts {
            if w > 0 {
                prop_assert_eq!(c % (p.q() as u64 - 1), 0);
            }
        }
        for wit in seq.witnesses_w1.iter().chain(&seq.witnesses_w2) {
            let msg: Vec<Fe> = wit.message.iter().map(|&v| Fe(v)).collect();
            prop_assert_eq!(&code.codeword_support(&msg).unwrap(), &wit.support);
        }
    }

    #[test]
    fn evaluated_polys_are_codewords(p in small_code(), raw in mixed_terms(4, 4)) {
        let code = Code::build(p).unwrap();
        let nvars = match p.family { Family::Rm => p.n, Family::Prm => p.n + 1 };
        let field = code.field();
        let terms: Vec<_> = raw
            .into_iter()
            .filter(|(e, _)| e[nvars..].iter().all(|&x| x == 0))
            .map(|(e, c)| (e[..nvars].to_vec(), c))
            .filter(|(e, _)| match p.family {
                Family::Rm => e.iter().sum::<u32>() <= p.d,
                Family::Prm => e.iter().sum::<u32>() == p.d,
            })
            .collect();
        let f = poly_from(field, nvars, &terms);
        let word = code.evaluate(&f).unwrap();
        let msg = code.message_for(&word);
        prop_assert!(msg.is_some());
        prop_assert_eq!(code.encode(&msg.unwrap()).unwrap(), word);
    }
}
