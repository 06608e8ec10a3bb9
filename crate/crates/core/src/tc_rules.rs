//! Citation-tracked bounds for `TC(S^p ∪_α e^{q+1})` and for products with spheres.
//!
//! Homotopy-theoretic facts about `α` (degree, Hopf invariant, whether
//! `H₀(α)` and its multiples vanish, its order) are inputs. Every rule whose
//! hypotheses are established contributes an interval; the verdict is their
//! intersection. Missing facts only widen the result.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hopf_shuffle::{bottom_degree, join_vanishes};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TcError {
    #[error("contradictory facts: {0}")]
    ContradictoryFacts(String),
    #[error("invariant out of range: {0}")]
    InvariantOutOfRange(String),
}

/// Facts about `H₀(α)`, the bottom-cell component of the Hopf invariant.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetastableFacts {
    pub h0_nonzero: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub two_h0_join_h0_zero: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub six_h0_join_h0_zero: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub three_h0_nonzero: Option<bool>,
    /// `H(α) = H₀(α)`; lets the upper-bound rules run above the metastable range.
    #[serde(default)]
    pub h_equals_h0: bool,
    /// Order of `H₀(α)` in its homotopy group.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h0_order: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum AttachingData {
    /// Degree of `α: S^p → S^p`.
    Degree(i64),
    /// Classical Hopf invariant of `α: S^{2p-1} → S^p`.
    ClassicalHopf(i64),
    MetastableH0(MetastableFacts),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCellInput {
    pub p: u32,
    pub q: u32,
    pub attaching: AttachingData,
}

impl TwoCellInput {
    pub fn new(p: u32, q: u32, attaching: AttachingData) -> Self {
        TwoCellInput { p, q, attaching }
    }

    pub fn degree(p: u32, d: i64) -> Self {
        TwoCellInput::new(p, p, AttachingData::Degree(d))
    }

    pub fn classical_hopf(p: u32, h: i64) -> Self {
        TwoCellInput::new(p, 2 * p - 1, AttachingData::ClassicalHopf(h))
    }

    pub fn metastable(p: u32, q: u32, facts: MetastableFacts) -> Self {
        TwoCellInput::new(p, q, AttachingData::MetastableH0(facts))
    }
}

/// Where `q` sits relative to `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Range {
    Equal,
    /// `p < q < 2p - 1`, or `p = 1 < q`: `α` is a suspension.
    Stable,
    HopfDimension,
    /// `2p - 1 < q ≤ 3p - 3`.
    Metastable,
    AboveMetastable,
}

pub fn range_of(p: u32, q: u32) -> Range {
    if q == p {
        Range::Equal
    } else if p == 1 || q < 2 * p - 1 {
        Range::Stable
    } else if q == 2 * p - 1 {
        Range::HopfDimension
    } else if q <= 3 * p - 3 {
        Range::Metastable
    } else {
        Range::AboveMetastable
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Justification {
    pub rule: String,
    pub citation: String,
    pub lower: u32,
    pub upper: u32,
    pub trace: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TcVerdict {
    pub lower: u32,
    pub upper: u32,
    pub exact: Option<u32>,
    pub justifications: Vec<Justification>,
}

impl TcVerdict {
    /// A verdict for a space outside the two-cell family, from bounds established elsewhere.
    pub fn from_bounds(lower: u32, upper: u32, justifications: Vec<Justification>) -> Result<Self, TcError> {
        if lower > upper || upper > 4 {
            return Err(TcError::InvariantOutOfRange(format!("bounds [{lower}, {upper}] outside 0 ≤ lower ≤ upper ≤ 4")));
        }
        if justifications.is_empty() {
            return Err(TcError::InvariantOutOfRange("a verdict needs at least one justification".into()));
        }
        Ok(TcVerdict { lower, upper, exact: (lower == upper).then_some(lower), justifications })
    }

    pub fn interval(&self) -> (u32, u32) {
        (self.lower, self.upper)
    }
}

impl fmt::Display for TcVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact {
            Some(t) => writeln!(f, "TC = {t}")?,
            None => writeln!(f, "{} ≤ TC ≤ {}", self.lower, self.upper)?,
        }
        for j in &self.justifications {
            writeln!(f, "  [{}, {}] {}: {}", j.lower, j.upper, j.rule, j.citation)?;
            for t in &j.trace {
                writeln!(f, "      {t}")?;
            }
        }
        Ok(())
    }
}

const CAT_BOUND: &str = "TC(X) ≤ 2·cat(X) ≤ 4 for a two-cell complex";
const GLO: &str = "cat(X) = 1 and X not an odd sphere imply TC(X) = 2";
const CAT_HOPF: &str = "for p ≥ 2, cat(X) = 1 if H(α) = 0 and cat(X) = 2 otherwise";
const GRADOS: &str = "mapping cone of a degree-d map S^1 → S^1: TC = 2 if d = 0, 0 if d = ±1, 3 if d = ±2, 4 otherwise";
const CLASSIC_HOPF: &str = "mapping cone of α: S^{2p-1} → S^p with Hopf invariant h: TC = 2 if h = 0, 4 if h ≠ 0";
const LE3_1: &str = "metastable, H₀(α) ≠ 0 and 2H₀(α)⊛H₀(α) = 0 imply TC(X) ≤ 3";
const LE3_2: &str = "metastable, H₀(α) ≠ 0, 6H₀(α)⊛H₀(α) = 0 and p even imply TC(X) ≤ 3";
const LE3_3: &str = "metastable, H₀(α) ≠ 0 and q even imply TC(X) ≤ 3";
const GE3_1: &str = "metastable, H₀(α) ≠ 0 and p odd imply TC(X) ≥ 3";
const GE3_2: &str = "metastable, H₀(α) ≠ 0, p even and 3H₀(α) ≠ 0 imply TC(X) ≥ 3";
const PARTIUNO: &str = "q = 2p + δ, δ ∈ {0, 1}, p ≥ 3 + δ: TC = 2 if H₀(α) = 0, 3 if H₀(α) ≠ 0";
const PARTIDOS: &str = "p odd, q even, 2p - 1 < q ≤ 3p - 3: TC = 2 if H₀(α) = 0, 3 if H₀(α) ≠ 0";
const ABOVE_METASTABLE: &str = "above the metastable range the upper-bound rules hold when H(α) = H₀(α), the q-even case needing q < 4p - 3";

struct Engine {
    lower: u32,
    upper: u32,
    justifications: Vec<Justification>,
}

impl Engine {
    fn new() -> Self {
        Engine { lower: 0, upper: 4, justifications: Vec::new() }
    }

    fn apply(&mut self, rule: &str, citation: &str, lower: u32, upper: u32, trace: Vec<String>) {
        self.lower = self.lower.max(lower);
        self.upper = self.upper.min(upper);
        self.justifications.push(Justification { rule: rule.into(), citation: citation.into(), lower, upper, trace });
    }

    fn exact(&mut self, rule: &str, citation: &str, value: u32, trace: Vec<String>) {
        self.apply(rule, citation, value, value, trace);
    }

    fn finish(self) -> Result<TcVerdict, TcError> {
        if self.lower > self.upper {
            let rules: Vec<_> = self.justifications.iter().map(|j| format!("{} [{}, {}]", j.rule, j.lower, j.upper)).collect();
            return Err(TcError::ContradictoryFacts(format!("empty intersection of {}", rules.join(", "))));
        }
        Ok(TcVerdict {
            lower: self.lower,
            upper: self.upper,
            exact: (self.lower == self.upper).then_some(self.lower),
            justifications: self.justifications,
        })
    }
}

/// Facts after folding in what the order of `H₀(α)` implies.
#[derive(Debug, Clone, Copy)]
struct Derived {
    nonzero: bool,
    two_zero: bool,
    six_zero: bool,
    three_nonzero: bool,
    notes: [Option<&'static str>; 3],
}

fn merge(explicit: Option<bool>, derived: Option<bool>, what: &str) -> Result<Option<bool>, TcError> {
    match (explicit, derived) {
        (Some(a), Some(b)) if a != b => Err(TcError::ContradictoryFacts(format!("{what} given as {a} but the order of H₀(α) implies {b}"))),
        (e, d) => Ok(e.or(d)),
    }
}

fn derive(f: &MetastableFacts) -> Result<Derived, TcError> {
    let mut notes = [None; 3];
    let (mut two, mut six, mut three) = (None, None, None);
    if let Some(order) = f.h0_order {
        if order == 0 {
            return Err(TcError::InvariantOutOfRange("h0_order must be positive".into()));
        }
        if f.h0_nonzero != (order > 1) {
            return Err(TcError::ContradictoryFacts(format!("h0_nonzero = {} but H₀(α) has order {order}", f.h0_nonzero)));
        }
        // k·H₀ = 0 forces k·(H₀⊛H₀) = 0; the converse is not available
        if join_vanishes(order, 2) {
            two = Some(true);
            notes[0] = Some("2H₀(α) = 0 since the order divides 2");
        }
        if join_vanishes(order, 6) {
            six = Some(true);
            notes[1] = Some("6H₀(α) = 0 since the order divides 6");
        }
        three = Some(!join_vanishes(order, 3));
        notes[2] = Some(if three == Some(true) { "3H₀(α) ≠ 0 since the order does not divide 3" } else { "3H₀(α) = 0 since the order divides 3" });
    }
    let two_zero = merge(f.two_h0_join_h0_zero, two, "two_h0_join_h0_zero")?;
    let mut six_zero = merge(f.six_h0_join_h0_zero, six, "six_h0_join_h0_zero")?;
    if two_zero == Some(true) {
        six_zero = merge(six_zero, Some(true), "six_h0_join_h0_zero (implied by two_h0_join_h0_zero)")?;
    }
    let three_nonzero = merge(f.three_h0_nonzero, three, "three_h0_nonzero")?;
    if !f.h0_nonzero && three_nonzero == Some(true) {
        return Err(TcError::ContradictoryFacts("3H₀(α) ≠ 0 but H₀(α) = 0".into()));
    }
    Ok(Derived {
        nonzero: f.h0_nonzero,
        two_zero: two_zero == Some(true),
        six_zero: six_zero == Some(true),
        three_nonzero: three_nonzero == Some(true),
        notes,
    })
}

fn out_of_range(msg: String) -> TcError {
    TcError::InvariantOutOfRange(msg)
}

/// Bounds on `TC(S^p ∪_α e^{q+1})` from the supplied facts.
pub fn classify(input: &TwoCellInput) -> Result<TcVerdict, TcError> {
    let TwoCellInput { p, q, ref attaching } = *input;
    if p == 0 {
        return Err(out_of_range("p must be positive".into()));
    }
    if q < p {
        return Err(out_of_range(format!("q = {q} is below p = {p}")));
    }
    let range = range_of(p, q);
    let mut e = Engine::new();
    let pq = format!("p = {p}, q = {q}");

    match (range, attaching) {
        (Range::Equal, AttachingData::Degree(d)) => {
            let d = *d;
            let trace = vec![pq.clone(), format!("deg(α) = {d}")];
            if p == 1 {
                let value = match d.unsigned_abs() {
                    0 => 2,
                    1 => 0,
                    2 => 3,
                    _ => 4,
                };
                e.exact("grados", GRADOS, value, trace);
            } else {
                match d.unsigned_abs() {
                    1 => e.exact("contractible", "deg(α) = ±1 makes X contractible, so cat(X) = TC(X) = 0", 0, trace),
                    0 => e.exact("wedge", "deg(α) = 0 gives X ≃ S^p ∨ S^{p+1}, so cat(X) = 1 and TC(X) = 2", 2, trace),
                    _ => {
                        let mut trace = trace;
                        trace.push("|deg(α)| > 1 and p > 1 give cat(X) = 1 (Moore space)".into());
                        e.exact("GLO", GLO, 2, trace);
                    }
                }
            }
        }
        (Range::Equal, _) => return Err(out_of_range(format!("q = p = {p} requires Degree attaching data"))),
        (_, AttachingData::Degree(_)) => return Err(out_of_range(format!("Degree attaching data requires q = p, got {pq}"))),

        (Range::HopfDimension, AttachingData::ClassicalHopf(h)) => {
            let h = *h;
            if h != 0 && p % 2 == 1 {
                return Err(TcError::ContradictoryFacts(format!("Hopf invariant {h} ≠ 0 forces p even, got p = {p}")));
            }
            let value = if h == 0 { 2 } else { 4 };
            e.exact("ClassicHopf", CLASSIC_HOPF, value, vec![pq, format!("h(α) = {h}")]);
        }
        (Range::HopfDimension, _) => return Err(out_of_range(format!("q = 2p - 1 requires ClassicalHopf attaching data, got {pq}"))),
        (_, AttachingData::ClassicalHopf(_)) => return Err(out_of_range(format!("ClassicalHopf attaching data requires q = 2p - 1 ≥ 3, got {pq}"))),

        (Range::Stable, AttachingData::MetastableH0(f)) => {
            let d = derive(f)?;
            if d.nonzero {
                return Err(TcError::ContradictoryFacts(format!("α is a suspension for {pq}, so H₀(α) = 0")));
            }
            let why = if p == 1 { "π_q(S^1) = 0, so α is null" } else { "q < 2p - 1, so α is a suspension and cat(X) = 1" };
            e.exact("GLO", GLO, 2, vec![pq, why.into()]);
        }

        (Range::Metastable, AttachingData::MetastableH0(f)) => {
            let d = derive(f)?;
            if !d.nonzero {
                e.exact("GLO", GLO, 2, vec![pq, "H₀(α) = 0 in the metastable range gives H(α) = 0 and cat(X) = 1".into()]);
            } else {
                e.apply("cat-bound", CAT_HOPF, 2, 4, vec![pq.clone(), "H₀(α) ≠ 0 gives cat(X) = 2".into()]);
                upper_rules(&mut e, p, q, &d, true);
                if p % 2 == 1 {
                    e.apply("ge3(1)", GE3_1, 3, 4, vec![format!("p = {p} is odd")]);
                }
                if p % 2 == 0 && d.three_nonzero {
                    e.apply("ge3(2)", GE3_2, 3, 4, with_note(format!("p = {p} is even, 3H₀(α) ≠ 0"), d.notes[2]));
                }
                corollaries(&mut e, p, q, f, &d);
            }
        }

        (Range::AboveMetastable, AttachingData::MetastableH0(f)) => {
            let d = derive(f)?;
            if f.h_equals_h0 && !d.nonzero {
                e.exact("GLO", GLO, 2, vec![pq, "H(α) = H₀(α) = 0 gives cat(X) = 1".into()]);
            } else {
                let why = if f.h_equals_h0 { "H(α) = H₀(α) ≠ 0 gives cat(X) = 2" } else { "H(α) unknown: cat(X) ≤ 2, and X is neither contractible nor an odd sphere" };
                e.apply("cat-bound", CAT_BOUND, 2, 4, vec![pq, why.into()]);
                if f.h_equals_h0 {
                    upper_rules(&mut e, p, q, &d, q < 4 * p - 3);
                }
            }
        }
    }
    e.finish()
}

fn with_note(first: String, note: Option<&str>) -> Vec<String> {
    let mut v = vec![first];
    v.extend(note.map(String::from));
    v
}

fn upper_rules(e: &mut Engine, p: u32, q: u32, d: &Derived, q_even_allowed: bool) {
    let metastable = range_of(p, q) == Range::Metastable;
    let cite = |c: &'static str| if metastable { c } else { ABOVE_METASTABLE };
    if d.two_zero {
        e.apply("le3(1)", cite(LE3_1), 0, 3, with_note("2H₀(α)⊛H₀(α) = 0".into(), d.notes[0]));
    }
    if d.six_zero && p % 2 == 0 {
        e.apply("le3(2)", cite(LE3_2), 0, 3, with_note(format!("6H₀(α)⊛H₀(α) = 0, p = {p} even"), d.notes[1]));
    }
    if q % 2 == 0 && q_even_allowed {
        e.apply("le3(3)", cite(LE3_3), 0, 3, vec![format!("q = {q} is even")]);
    }
}

fn corollaries(e: &mut Engine, p: u32, q: u32, f: &MetastableFacts, d: &Derived) {
    let delta = q.checked_sub(2 * p);
    if let Some(delta @ (0 | 1)) = delta {
        if p >= 3 + delta && f.h0_order == Some(2) && d.nonzero {
            e.exact("partiuno", PARTIUNO, 3, vec![format!("δ = {delta}, p = {p} ≥ {}", 3 + delta), "H₀(α) ≠ 0 of order 2".into()]);
        }
    }
    if p % 2 == 1 && q % 2 == 0 && d.nonzero {
        e.exact("partidos", PARTIDOS, 3, vec![format!("p = {p} odd, q = {q} even"), "H₀(α) ≠ 0".into()]);
    }
}

/// `TC(S^k)`.
pub fn tc_sphere(k: u32) -> u32 {
    if k % 2 == 1 {
        1
    } else {
        2
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductBounds {
    pub k: u32,
    pub lower: u32,
    pub upper: u32,
    /// `[TC(X).lower + TC(S^k), TC(X).upper + TC(S^k)]`, the additive prediction.
    pub additive_lower: u32,
    pub additive_upper: u32,
    /// The upper bound lies strictly below every additive value.
    pub additivity_fails: bool,
    pub justifications: Vec<Justification>,
}

/// Bounds on `TC(X × S^k)`.
///
/// With `top_hopf_order = Some(o)`, the Hopf invariant obstructing a section
/// over the top cells of `X × X` is taken to have order `o`. When `TC(X)` is
/// exact and that invariant joined with the degree-`d_k` bottom map of `S^k`
/// vanishes, the top cells add only one to the relative bound.
pub fn ganea_product_bounds(tc_x: &TcVerdict, k: u32, top_hopf_order: Option<u64>) -> Result<ProductBounds, TcError> {
    if k == 0 {
        return Err(out_of_range("k must be positive".into()));
    }
    if tc_x.lower > tc_x.upper {
        return Err(out_of_range("verdict with lower > upper".into()));
    }
    let s = tc_sphere(k);
    let mut lower = tc_x.lower.max(s);
    let mut upper = tc_x.upper + s;
    let mut justifications = vec![
        Justification {
            rule: "product".into(),
            citation: "TC(X × Y) ≤ TC(X) + TC(Y)".into(),
            lower: 0,
            upper,
            trace: vec![format!("TC(S^{k}) = {s}"), format!("TC(X) ≤ {}", tc_x.upper)],
        },
        Justification {
            rule: "monotone".into(),
            citation: "TC(X × Y) ≥ max(TC(X), TC(Y))".into(),
            lower,
            upper,
            trace: vec![format!("TC(X) ≥ {}", tc_x.lower), format!("TC(S^{k}) = {s}")],
        },
    ];
    if let (Some(order), Some(t)) = (top_hopf_order, tc_x.exact) {
        let d_k = bottom_degree(0, 0, k) as i64;
        if order == 0 {
            return Err(out_of_range("top_hopf_order must be positive".into()));
        }
        if k % 2 == 0 && join_vanishes(order, d_k) {
            let bound = t + 1;
            upper = upper.min(bound);
            justifications.push(Justification {
                rule: "noGaneaTC".into(),
                citation: "a top-cell Hopf invariant of order dividing d_k joins trivially with the bottom map of S^k, so TC(X × S^k) ≤ TC(X) + 1".into(),
                lower: 0,
                upper: bound,
                trace: vec![format!("k = {k} even, d_k = 1 + (-1)^k = {d_k}"), format!("order {order} divides {d_k}")],
            });
        }
    }
    lower = lower.min(upper);
    Ok(ProductBounds {
        k,
        lower,
        upper,
        additive_lower: tc_x.lower + s,
        additive_upper: tc_x.upper + s,
        additivity_fails: upper < tc_x.lower + s,
        justifications,
    })
}
