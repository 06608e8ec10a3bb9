//! Finitely presented graded-commutative rings with monomial relations.
//!
//! A presentation lists generators with positive degrees, optional nilpotency
//! truncations, and rewrite rules `lhs → c·rhs` between monomials (`c = 0`
//! kills `lhs`). Monomials are exponent vectors in generator order; a product
//! is brought back into that order with the Koszul sign.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graded::Coefficients;

/// Rewriting stops with an error after this many steps on a single monomial.
pub const REWRITE_LIMIT: usize = 10_000;

/// Subsets searched by [`weighted_tc_lower_bound`] are capped at `2^WEIGHTED_CLASS_LIMIT`.
pub const WEIGHTED_CLASS_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("elements belong to different presentations")]
    PresentationMismatch,
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("duplicate generator {0:?}")]
    DuplicateGenerator(String),
    #[error("generator {0:?} must have positive degree")]
    ZeroDegree(String),
    #[error("truncation of {0:?} must be at least 1")]
    BadTruncation(String),
    #[error("relation {lhs} → {rhs} changes degree ({lhs_degree} vs {rhs_degree})")]
    DegreeMismatch { lhs: String, rhs: String, lhs_degree: u32, rhs_degree: u32 },
    #[error("relation with empty left-hand side")]
    EmptyRelation,
    #[error("rewriting did not terminate within {REWRITE_LIMIT} steps")]
    NonTerminating,
    #[error("generator {0:?} has no truncation, so the monomial search is infinite")]
    Untruncated(String),
    #[error("too many weighted classes ({0}); at most {WEIGHTED_CLASS_LIMIT} are supported")]
    TooManyClasses(usize),
    #[error("weight must be at least 1")]
    ZeroWeight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    /// Least `e` with `g^e = 0`, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<u32>,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        Generator { name: name.into(), degree, truncation: None }
    }

    pub fn truncated(name: impl Into<String>, degree: u32, truncation: u32) -> Self {
        Generator { name: name.into(), degree, truncation: Some(truncation) }
    }
}

/// `lhs → coefficient · rhs`, monomials given by generator name and exponent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub lhs: BTreeMap<String, u32>,
    #[serde(default)]
    pub coefficient: i64,
    #[serde(default)]
    pub rhs: BTreeMap<String, u32>,
}

impl Relation {
    pub fn new(lhs: &[(&str, u32)], coefficient: i64, rhs: &[(&str, u32)]) -> Self {
        let to_map = |m: &[(&str, u32)]| m.iter().map(|(g, e)| (g.to_string(), *e)).collect();
        Relation { lhs: to_map(lhs), coefficient, rhs: to_map(rhs) }
    }

    /// `lhs = 0`.
    pub fn vanishing(lhs: &[(&str, u32)]) -> Self {
        Relation::new(lhs, 0, &[])
    }
}

type Monomial = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
struct Rule {
    lhs: Monomial,
    coefficient: BigInt,
    rhs: Monomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct PresentationRepr {
    #[serde(default = "integers")]
    modulus: Coefficients,
    generators: Vec<Generator>,
    #[serde(default)]
    relations: Vec<Relation>,
    #[serde(default = "yes")]
    odd_squares_vanish: bool,
}

fn integers() -> Coefficients {
    Coefficients::INTEGERS
}

fn yes() -> bool {
    true
}

/// A graded-commutative ring `R[g_1, …, g_r] / (relations)`.
///
/// Unless `odd_squares_vanish` is turned off, an odd-degree generator squares
/// to zero when the modulus is not 2 and no rule rewrites its square.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PresentationRepr", into = "PresentationRepr")]
pub struct RingPresentation {
    ring: Coefficients,
    generators: Vec<Generator>,
    relations: Vec<Relation>,
    odd_squares_vanish: bool,
    rules: Vec<Rule>,
}

impl TryFrom<PresentationRepr> for RingPresentation {
    type Error = CohomologyError;
    fn try_from(r: PresentationRepr) -> Result<Self, CohomologyError> {
        let mut p = RingPresentation::new(r.modulus, r.generators, r.relations)?;
        p.odd_squares_vanish = r.odd_squares_vanish;
        Ok(p)
    }
}

impl From<RingPresentation> for PresentationRepr {
    fn from(p: RingPresentation) -> Self {
        PresentationRepr {
            modulus: p.ring,
            generators: p.generators,
            relations: p.relations,
            odd_squares_vanish: p.odd_squares_vanish,
        }
    }
}

impl RingPresentation {
    pub fn new(ring: Coefficients, generators: Vec<Generator>, relations: Vec<Relation>) -> Result<Self, CohomologyError> {
        for (i, g) in generators.iter().enumerate() {
            if g.degree == 0 {
                return Err(CohomologyError::ZeroDegree(g.name.clone()));
            }
            if g.truncation == Some(0) {
                return Err(CohomologyError::BadTruncation(g.name.clone()));
            }
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(CohomologyError::DuplicateGenerator(g.name.clone()));
            }
        }
        let mut p = RingPresentation { ring, generators, relations: Vec::new(), odd_squares_vanish: true, rules: Vec::new() };
        for rel in relations {
            let lhs = p.monomial_from_names(&rel.lhs)?;
            let rhs = p.monomial_from_names(&rel.rhs)?;
            if lhs.iter().all(|&e| e == 0) {
                return Err(CohomologyError::EmptyRelation);
            }
            let coefficient = ring.reduce(BigInt::from(rel.coefficient));
            if !coefficient.is_zero() && p.monomial_degree(&lhs) != p.monomial_degree(&rhs) {
                return Err(CohomologyError::DegreeMismatch {
                    lhs: p.format_monomial(&lhs),
                    rhs: p.format_monomial(&rhs),
                    lhs_degree: p.monomial_degree(&lhs),
                    rhs_degree: p.monomial_degree(&rhs),
                });
            }
            p.rules.push(Rule { lhs, coefficient, rhs });
            p.relations.push(rel);
        }
        Ok(p)
    }

    /// The ring with no generators.
    pub fn trivial(ring: Coefficients) -> Self {
        RingPresentation::new(ring, Vec::new(), Vec::new()).expect("no generators")
    }

    pub fn with_odd_squares_vanishing(mut self, on: bool) -> Self {
        self.odd_squares_vanish = on;
        self
    }

    pub fn into_shared(self) -> Arc<Self> {
        Arc::new(self)
    }

    pub fn ring(&self) -> Coefficients {
        self.ring
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn odd_squares_vanish(&self) -> bool {
        self.odd_squares_vanish
    }

    pub fn generator_index(&self, name: &str) -> Result<usize, CohomologyError> {
        self.generators.iter().position(|g| g.name == name).ok_or_else(|| CohomologyError::UnknownGenerator(name.into()))
    }

    fn monomial_from_names(&self, m: &BTreeMap<String, u32>) -> Result<Monomial, CohomologyError> {
        let mut e = vec![0; self.generators.len()];
        for (name, &k) in m {
            e[self.generator_index(name)?] += k;
        }
        Ok(e)
    }

    fn monomial_degree(&self, m: &[u32]) -> u32 {
        m.iter().zip(&self.generators).map(|(e, g)| e * g.degree).sum()
    }

    fn format_monomial(&self, m: &[u32]) -> String {
        let parts: Vec<String> = m
            .iter()
            .zip(&self.generators)
            .filter(|(e, _)| **e > 0)
            .map(|(&e, g)| if e == 1 { g.name.clone() } else { format!("{}^{}", g.name, e) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("·")
        }
    }

    /// Sign `s` with `mono(a)·mono(b) = s·mono(a+b)`: each factor of `b`
    /// moves left past the later-indexed factors of `a`.
    fn product_sign(&self, a: &[u32], b: &[u32]) -> bool {
        let mut odd = 0u64;
        for (i, &bi) in b.iter().enumerate() {
            if bi == 0 || self.generators[i].degree % 2 == 0 {
                continue;
            }
            for (j, &aj) in a.iter().enumerate().skip(i + 1) {
                if self.generators[j].degree % 2 == 1 {
                    odd += u64::from(bi) * u64::from(aj);
                }
            }
        }
        odd % 2 == 1
    }

    fn is_killed(&self, m: &[u32]) -> bool {
        m.iter().zip(&self.generators).any(|(&e, g)| g.truncation.is_some_and(|t| e >= t))
    }

    fn odd_square_vanishes(&self, m: &[u32]) -> bool {
        if !self.odd_squares_vanish || self.ring.modulus() == 2 {
            return false;
        }
        m.iter().enumerate().any(|(i, &e)| e >= 2 && self.generators[i].degree % 2 == 1)
    }

    /// Normal form of `coefficient · m` as a list of (monomial, coefficient).
    fn normalize(&self, m: Monomial, coefficient: BigInt, out: &mut BTreeMap<Monomial, BigInt>) -> Result<(), CohomologyError> {
        let mut stack = vec![(m, coefficient)];
        let mut steps = 0usize;
        while let Some((m, c)) = stack.pop() {
            steps += 1;
            if steps > REWRITE_LIMIT {
                return Err(CohomologyError::NonTerminating);
            }
            let c = self.ring.reduce(c);
            if c.is_zero() || self.is_killed(&m) {
                continue;
            }
            let rule = self.rules.iter().find(|r| r.lhs.iter().zip(&m).all(|(l, e)| l <= e));
            match rule {
                Some(r) => {
                    let rest: Monomial = m.iter().zip(&r.lhs).map(|(e, l)| e - l).collect();
                    // m = ±lhs·rest ↦ ±c·rhs·rest = ±c·(±mono(rhs + rest))
                    let flip = self.product_sign(&r.lhs, &rest) ^ self.product_sign(&r.rhs, &rest);
                    let next: Monomial = rest.iter().zip(&r.rhs).map(|(a, b)| a + b).collect();
                    let c = if flip { -(&c * &r.coefficient) } else { &c * &r.coefficient };
                    stack.push((next, c));
                }
                None if self.odd_square_vanishes(&m) => {}
                None => {
                    let slot = out.entry(m).or_insert_with(BigInt::zero);
                    *slot = self.ring.reduce(&*slot + c);
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(())
    }
}

/// An element of a presented ring, always in normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElement {
    presentation: Arc<RingPresentation>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl RingElement {
    pub fn zero(presentation: &Arc<RingPresentation>) -> Self {
        RingElement { presentation: Arc::clone(presentation), terms: BTreeMap::new() }
    }

    pub fn scalar(presentation: &Arc<RingPresentation>, c: impl Into<BigInt>) -> Self {
        let mut out = Self::zero(presentation);
        let unit = vec![0; presentation.generators.len()];
        presentation.normalize(unit, c.into(), &mut out.terms).expect("constants are normal");
        out
    }

    pub fn one(presentation: &Arc<RingPresentation>) -> Self {
        Self::scalar(presentation, 1)
    }

    pub fn generator(presentation: &Arc<RingPresentation>, name: &str) -> Result<Self, CohomologyError> {
        Self::monomial(presentation, &[(name, 1)], 1)
    }

    /// `c · g_1^{e_1} ⋯` with factors multiplied in the given order.
    pub fn monomial(presentation: &Arc<RingPresentation>, factors: &[(&str, u32)], c: impl Into<BigInt>) -> Result<Self, CohomologyError> {
        let mut out = Self::scalar(presentation, c);
        for &(name, e) in factors {
            let g = Self::from_monomial(presentation, {
                let mut m = vec![0; presentation.generators.len()];
                m[presentation.generator_index(name)?] = e;
                m
            })?;
            out = out.cup(&g)?;
        }
        Ok(out)
    }

    fn from_monomial(presentation: &Arc<RingPresentation>, m: Monomial) -> Result<Self, CohomologyError> {
        let mut out = Self::zero(presentation);
        presentation.normalize(m, BigInt::one(), &mut out.terms)?;
        Ok(out)
    }

    pub fn presentation(&self) -> &Arc<RingPresentation> {
        &self.presentation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as (generator name → exponent, coefficient), in canonical order.
    pub fn terms(&self) -> Vec<(BTreeMap<String, u32>, BigInt)> {
        self.terms
            .iter()
            .map(|(m, c)| {
                let named = m
                    .iter()
                    .zip(&self.presentation.generators)
                    .filter(|(e, _)| **e > 0)
                    .map(|(e, g)| (g.name.clone(), *e))
                    .collect();
                (named, c.clone())
            })
            .collect()
    }

    /// Coefficient of the given monomial (exponents by generator name).
    pub fn coefficient(&self, factors: &[(&str, u32)]) -> Result<BigInt, CohomologyError> {
        let mut m = vec![0; self.presentation.generators.len()];
        for &(name, e) in factors {
            m[self.presentation.generator_index(name)?] += e;
        }
        Ok(self.terms.get(&m).cloned().unwrap_or_else(BigInt::zero))
    }

    /// The common degree of all terms, if homogeneous and nonzero.
    pub fn degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|m| self.presentation.monomial_degree(m));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    fn same_ring(&self, other: &Self) -> Result<(), CohomologyError> {
        if Arc::ptr_eq(&self.presentation, &other.presentation) || self.presentation == other.presentation {
            Ok(())
        } else {
            Err(CohomologyError::PresentationMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, CohomologyError> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            let slot = out.terms.entry(m.clone()).or_insert_with(BigInt::zero);
            *slot = self.presentation.ring.reduce(&*slot + c);
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CohomologyError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigInt::one())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let ring = self.presentation.ring;
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), ring.reduce(a * c)))
            .filter(|(_, a)| !a.is_zero())
            .collect();
        RingElement { presentation: Arc::clone(&self.presentation), terms }
    }

    /// Cup product.
    pub fn cup(&self, other: &Self) -> Result<Self, CohomologyError> {
        self.same_ring(other)?;
        let p = &self.presentation;
        let mut out = Self::zero(p);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let m: Monomial = a.iter().zip(b).map(|(x, y)| x + y).collect();
                let c = if p.product_sign(a, b) { -(ca * cb) } else { ca * cb };
                p.normalize(m, c, &mut out.terms)?;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Self, CohomologyError> {
        (0..k).try_fold(Self::one(&self.presentation), |acc, _| acc.cup(self))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            match (idx, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let body = self.presentation.format_monomial(m);
            let mag = c.abs();
            if body == "1" {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&body)?;
            } else {
                write!(f, "{mag}·{body}")?;
            }
        }
        Ok(())
    }
}

/// `H ⊗ H` presented by left copies `g_L` followed by right copies `g_R`.
pub fn tensor_square_ring(r: &RingPresentation) -> RingPresentation {
    let side = |suffix: &str| -> Vec<Generator> {
        r.generators
            .iter()
            .map(|g| Generator { name: format!("{}_{suffix}", g.name), degree: g.degree, truncation: g.truncation })
            .collect()
    };
    let rename = |m: &BTreeMap<String, u32>, suffix: &str| m.iter().map(|(g, e)| (format!("{g}_{suffix}"), *e)).collect();
    let mut generators = side("L");
    generators.extend(side("R"));
    let relations = ["L", "R"]
        .iter()
        .flat_map(|s| {
            r.relations.iter().map(move |rel| Relation {
                lhs: rename(&rel.lhs, s),
                coefficient: rel.coefficient,
                rhs: rename(&rel.rhs, s),
            })
        })
        .collect();
    RingPresentation::new(r.ring, generators, relations)
        .expect("renamed copy of a valid presentation")
        .with_odd_squares_vanishing(r.odd_squares_vanish)
}

/// A presentation together with its tensor square and the structure maps.
#[derive(Debug, Clone)]
pub struct TensorSquare {
    base: Arc<RingPresentation>,
    square: Arc<RingPresentation>,
}

impl TensorSquare {
    pub fn new(base: &Arc<RingPresentation>) -> Self {
        TensorSquare { base: Arc::clone(base), square: Arc::new(tensor_square_ring(base)) }
    }

    pub fn base(&self) -> &Arc<RingPresentation> {
        &self.base
    }

    pub fn square(&self) -> &Arc<RingPresentation> {
        &self.square
    }

    fn embed(&self, a: &RingElement, right: bool) -> Result<RingElement, CohomologyError> {
        if a.presentation != self.base {
            return Err(CohomologyError::PresentationMismatch);
        }
        let r = self.base.generators.len();
        let mut out = RingElement::zero(&self.square);
        for (m, c) in &a.terms {
            let mut e = vec![0; 2 * r];
            let offset = if right { r } else { 0 };
            e[offset..offset + r].copy_from_slice(m);
            self.square.normalize(e, c.clone(), &mut out.terms)?;
        }
        Ok(out)
    }

    /// `a × 1`.
    pub fn left(&self, a: &RingElement) -> Result<RingElement, CohomologyError> {
        self.embed(a, false)
    }

    /// `1 × a`.
    pub fn right(&self, a: &RingElement) -> Result<RingElement, CohomologyError> {
        self.embed(a, true)
    }

    /// `a × b = (a × 1)(1 × b)`.
    pub fn cross(&self, a: &RingElement, b: &RingElement) -> Result<RingElement, CohomologyError> {
        self.left(a)?.cup(&self.right(b)?)
    }

    /// `ḡ = 1 × g − g × 1`.
    pub fn zero_divisor(&self, generator: &str) -> Result<RingElement, CohomologyError> {
        let g = RingElement::generator(&self.base, generator)?;
        self.right(&g)?.sub(&self.left(&g)?)
    }

    /// `ḡ^k`, expanded with Koszul signs and reduced.
    pub fn zero_divisor_power(&self, generator: &str, k: u32) -> Result<RingElement, CohomologyError> {
        self.zero_divisor(generator)?.pow(k)
    }

    /// The multiplication map `a × b ↦ a·b`.
    pub fn multiply(&self, x: &RingElement) -> Result<RingElement, CohomologyError> {
        if x.presentation != self.square {
            return Err(CohomologyError::PresentationMismatch);
        }
        let r = self.base.generators.len();
        let mut out = RingElement::zero(&self.base);
        for (m, c) in &x.terms {
            let (l, rt) = m.split_at(r);
            let sum: Monomial = l.iter().zip(rt).map(|(a, b)| a + b).collect();
            let c = if self.base.product_sign(l, rt) { -c } else { c.clone() };
            self.base.normalize(sum, c, &mut out.terms)?;
        }
        Ok(out)
    }
}

/// Largest `ℓ` such that a product of `ℓ` generators is nonzero.
pub fn cup_length(r: &Arc<RingPresentation>) -> Result<u32, CohomologyError> {
    let bounds: Vec<u32> = r
        .generators
        .iter()
        .map(|g| g.truncation.ok_or_else(|| CohomologyError::Untruncated(g.name.clone())))
        .collect::<Result<_, _>>()?;
    let mut best = 0;
    let mut e = vec![0u32; bounds.len()];
    loop {
        let length: u32 = e.iter().sum();
        if length > best && !RingElement::from_monomial(r, e.clone())?.is_zero() {
            best = length;
        }
        // odometer over 0..bound per generator
        let mut i = 0;
        loop {
            if i == e.len() {
                return Ok(best);
            }
            e[i] += 1;
            if e[i] < bounds[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

/// A class in `H ⊗ H` with a TC-weight supplied as input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedClass {
    pub element: RingElement,
    pub weight: u32,
}

impl WeightedClass {
    pub fn new(element: RingElement, weight: u32) -> Result<Self, CohomologyError> {
        if weight == 0 {
            return Err(CohomologyError::ZeroWeight);
        }
        Ok(WeightedClass { element, weight })
    }
}

/// Largest total weight of a sub-list whose product (in list order) is nonzero.
pub fn weighted_tc_lower_bound(classes: &[WeightedClass]) -> Result<u32, CohomologyError> {
    if classes.len() > WEIGHTED_CLASS_LIMIT {
        return Err(CohomologyError::TooManyClasses(classes.len()));
    }
    let Some(first) = classes.first() else {
        return Ok(0);
    };
    let one = RingElement::one(first.element.presentation());
    let mut best = 0;
    for mask in 1u32..(1u32 << classes.len()) {
        let mut chosen = classes.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, c)| c);
        let weight: u32 = chosen.clone().map(|c| c.weight).sum();
        if weight <= best {
            continue;
        }
        let product = chosen.try_fold(one.clone(), |acc, c| acc.cup(&c.element))?;
        if !product.is_zero() {
            best = weight;
        }
    }
    Ok(best)
}

/// Mod-`k` Moore space ring: `x` in degree 1, `y` in degree 2, all products zero.
pub fn moore_presentation(k: u64) -> RingPresentation {
    RingPresentation::new(
        Coefficients::modulo(k).expect("k >= 2"),
        vec![Generator::truncated("x", 1, 2), Generator::truncated("y", 2, 2)],
        vec![Relation::vanishing(&[("x", 1), ("y", 1)])],
    )
    .expect("valid presentation")
}

/// `H*(S^p ∪ e^{2p})` over `ℤ`: `u² = h·v`, `uv = v² = 0`.
pub fn two_cell_presentation(p: u32, h: i64) -> RingPresentation {
    RingPresentation::new(
        Coefficients::INTEGERS,
        vec![Generator::truncated("u", p, 3), Generator::truncated("v", 2 * p, 2)],
        vec![Relation::new(&[("u", 2)], h, &[("v", 1)]), Relation::vanishing(&[("u", 1), ("v", 1)])],
    )
    .expect("valid presentation")
}

/// `ℤ/2[u]/(u³)` with `|u| = degree`.
pub fn truncated_polynomial_mod2(degree: u32) -> RingPresentation {
    RingPresentation::new(Coefficients::modulo(2).expect("2 >= 2"), vec![Generator::truncated("u", degree, 3)], vec![])
        .expect("valid presentation")
}
