#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use rand::Rng;
use tcshuffle::cohomology::{Generator, Relation, RingElement, RingPresentation};
use tcshuffle::graded::Coefficients;

/// A confluent test ring: `a(1)`, `b(2)`, `c(3)`, `d(4)` with `b² = 3d`,
/// `bd = 0`, `b³ = d² = 0`.
pub fn mixed_presentation(ring: Coefficients) -> RingPresentation {
    RingPresentation::new(
        ring,
        vec![
            Generator::new("a", 1),
            Generator::truncated("b", 2, 3),
            Generator::new("c", 3),
            Generator::truncated("d", 4, 2),
        ],
        vec![Relation::new(&[("b", 2)], 3, &[("d", 1)]), Relation::vanishing(&[("b", 1), ("d", 1)])],
    )
    .unwrap()
}

/// Mod-2 ring with an odd generator whose square survives: `a² = b`, `ab = 0`.
pub fn mod2_presentation() -> RingPresentation {
    RingPresentation::new(
        Coefficients::modulo(2).unwrap(),
        vec![Generator::truncated("a", 1, 3), Generator::truncated("b", 2, 2), Generator::truncated("c", 3, 3)],
        vec![Relation::new(&[("a", 2)], 1, &[("b", 1)]), Relation::vanishing(&[("a", 1), ("b", 1)])],
    )
    .unwrap()
}

/// Random monomial as (generator, exponent) factors, exponents below 3.
pub fn random_factors<R: Rng>(rng: &mut R, r: &RingPresentation) -> Vec<(String, u32)> {
    r.generators()
        .iter()
        .filter_map(|g| {
            let e = rng.gen_range(0..3u32);
            (e > 0).then(|| (g.name.clone(), e))
        })
        .collect()
}

fn factors_degree(r: &RingPresentation, f: &[(String, u32)]) -> u32 {
    f.iter().map(|(n, e)| e * r.generators().iter().find(|g| &g.name == n).unwrap().degree).sum()
}

fn as_refs(f: &[(String, u32)]) -> Vec<(&str, u32)> {
    f.iter().map(|(n, e)| (n.as_str(), *e)).collect()
}

/// Random element, homogeneous of the degree of its first drawn monomial.
pub fn random_homogeneous<R: Rng>(rng: &mut R, r: &Arc<RingPresentation>) -> RingElement {
    let first = random_factors(rng, r);
    let degree = factors_degree(r, &first);
    let mut out = RingElement::monomial(r, &as_refs(&first), rng.gen_range(-4i64..=4)).unwrap();
    for _ in 0..6 {
        let f = random_factors(rng, r);
        if factors_degree(r, &f) == degree {
            let m = RingElement::monomial(r, &as_refs(&f), rng.gen_range(-4i64..=4)).unwrap();
            out = out.add(&m).unwrap();
        }
    }
    out
}

/// Random element of mixed degree.
pub fn random_element<R: Rng>(rng: &mut R, r: &Arc<RingPresentation>) -> RingElement {
    let mut out = RingElement::zero(r);
    for _ in 0..rng.gen_range(1..5) {
        let f = random_factors(rng, r);
        out = out.add(&RingElement::monomial(r, &as_refs(&f), rng.gen_range(-4i64..=4)).unwrap()).unwrap();
    }
    out
}

/// Coefficient map keyed by (name, exponent) lists.
pub fn term_map(x: &RingElement) -> BTreeMap<BTreeMap<String, u32>, BigInt> {
    x.terms().into_iter().collect()
}
