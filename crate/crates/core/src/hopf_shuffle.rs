//! Homology of the topological shuffle map `Φ_{n,m}`.
//!
//! Two independent routes to the same tensor:
//!
//! * [`phi_homology`]: the closed form
//!   `(-1)^m Σ_{σ ∈ S_{n+1,m+1}} (-1)^{|σ|} σ̃_*(z_1 ⊗ … ⊗ z_{n+m+2})`
//!   with `z_i = x_i ⊗ 1` or `1 ⊗ y_i`;
//! * [`delta_rho_oracle`]: insert a unit, expand the diagonals prescribed by
//!   the column/row sequences of each shuffle, interleave with `T`, and project
//!   to the smash product by dropping every term with a `(1,1)` factor.
//!
//! Specialising to `H_*(ΩS^p) = ℤ[x]` and composing with `χ̄` gives the degree
//! of the induced map on bottom cells.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graded::{diagonal_primitive, BasisSymbol, Coefficients, Graded, GradedTensor, Permutation};
use crate::shuffles::{binomial, enumerate_shuffles, Shuffle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("expected {expected} {which}-degrees, got {got}")]
    WrongDegreeCount { which: &'static str, expected: usize, got: usize },
    #[error("χ̄ composition needs every class in degree p-1 = {expected}, found degree {found}")]
    NonUniformDegrees { expected: u32, found: u32 },
    #[error("sphere dimension must be at least 2, got {0}")]
    SphereTooSmall(u32),
    #[error("factor {0} is not of the form x⊗1 or 1⊗x")]
    UnexpectedFactor(String),
}

/// A factor of `H̃(A × B)`: `a ⊗ b` with each side a class or the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PairSymbol {
    pub a: BasisSymbol,
    pub b: BasisSymbol,
}

impl PairSymbol {
    pub fn new(a: BasisSymbol, b: BasisSymbol) -> Self {
        PairSymbol { a, b }
    }

    /// `true` for `x ⊗ 1` with `x` a positive-degree class.
    pub fn is_a_part(&self) -> bool {
        !self.a.is_unit() && self.b.is_unit()
    }

    pub fn is_b_part(&self) -> bool {
        self.a.is_unit() && !self.b.is_unit()
    }
}

impl Graded for PairSymbol {
    fn degree(&self) -> u32 {
        self.a.degree + self.b.degree
    }
    fn unit() -> Self {
        PairSymbol { a: BasisSymbol::unit(), b: BasisSymbol::unit() }
    }
    fn is_unit(&self) -> bool {
        self.a.is_unit() && self.b.is_unit()
    }
}

impl fmt::Display for PairSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}⊗{})", self.a, self.b)
    }
}

/// Degrees of the primitive classes `x_1..x_{n+1}` and `y_{n+2}..y_{n+m+2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PhiInputRepr")]
pub struct PhiInput {
    n: usize,
    m: usize,
    x_degrees: Vec<u32>,
    y_degrees: Vec<u32>,
    ring: Coefficients,
}

#[derive(Deserialize)]
struct PhiInputRepr {
    n: usize,
    m: usize,
    x_degrees: Vec<u32>,
    y_degrees: Vec<u32>,
    #[serde(default = "integers")]
    ring: Coefficients,
}

fn integers() -> Coefficients {
    Coefficients::INTEGERS
}

impl TryFrom<PhiInputRepr> for PhiInput {
    type Error = HopfError;
    fn try_from(r: PhiInputRepr) -> Result<Self, HopfError> {
        PhiInput::new(r.n, r.m, r.x_degrees, r.y_degrees, r.ring)
    }
}

impl PhiInput {
    pub fn new(n: usize, m: usize, x_degrees: Vec<u32>, y_degrees: Vec<u32>, ring: Coefficients) -> Result<Self, HopfError> {
        if x_degrees.len() != n + 1 {
            return Err(HopfError::WrongDegreeCount { which: "x", expected: n + 1, got: x_degrees.len() });
        }
        if y_degrees.len() != m + 1 {
            return Err(HopfError::WrongDegreeCount { which: "y", expected: m + 1, got: y_degrees.len() });
        }
        Ok(PhiInput { n, m, x_degrees, y_degrees, ring })
    }

    /// All classes in degree `p - 1`: the `H_*(ΩS^p)` case.
    pub fn sphere(n: usize, m: usize, p: u32) -> Result<Self, HopfError> {
        if p < 2 {
            return Err(HopfError::SphereTooSmall(p));
        }
        PhiInput::new(n, m, vec![p - 1; n + 1], vec![p - 1; m + 1], Coefficients::INTEGERS)
    }

    /// Split a flat list of `n + m + 2` degrees into x- and y-degrees.
    pub fn from_flat(n: usize, m: usize, degrees: &[u32], ring: Coefficients) -> Result<Self, HopfError> {
        if degrees.len() != n + m + 2 {
            return Err(HopfError::WrongDegreeCount { which: "total", expected: n + m + 2, got: degrees.len() });
        }
        PhiInput::new(n, m, degrees[..=n].to_vec(), degrees[n + 1..].to_vec(), ring)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn ring(&self) -> Coefficients {
        self.ring
    }

    /// `x_1, …, x_{n+1}`.
    pub fn x_classes(&self) -> Vec<BasisSymbol> {
        self.x_degrees.iter().enumerate().map(|(i, &d)| BasisSymbol::new(format!("x{}", i + 1), d)).collect()
    }

    /// `y_{n+2}, …, y_{n+m+2}`.
    pub fn y_classes(&self) -> Vec<BasisSymbol> {
        self.y_degrees.iter().enumerate().map(|(j, &d)| BasisSymbol::new(format!("y{}", self.n + 2 + j), d)).collect()
    }

    /// `z_1, …, z_{n+m+2}`.
    pub fn z_classes(&self) -> Vec<PairSymbol> {
        let one = BasisSymbol::unit();
        self.x_classes()
            .into_iter()
            .map(|x| PairSymbol::new(x, one.clone()))
            .chain(self.y_classes().into_iter().map(|y| PairSymbol::new(one.clone(), y)))
            .collect()
    }
}

/// A tensor in `H̃(A × B)^{⊗ n+m+2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiOutput {
    pub n: usize,
    pub m: usize,
    pub tensor: GradedTensor<PairSymbol>,
}

impl PhiOutput {
    /// Number of `x ⊗ 1` factors in each term, in term order.
    pub fn a_part_counts(&self) -> Vec<usize> {
        self.tensor.terms().map(|(f, _)| f.iter().filter(|z| z.is_a_part()).count()).collect()
    }
}

impl fmt::Display for PhiOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.tensor.fmt(f)
    }
}

fn sign_of(parity: usize) -> BigInt {
    if parity % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// The closed-form shuffle sum for `s^{-(n+m+1)} (Φ_{n,m})_*`.
pub fn phi_homology(input: &PhiInput) -> PhiOutput {
    let (n, m) = (input.n, input.m);
    let ring = input.ring;
    let base = GradedTensor::basis(ring, input.z_classes());
    let mut total = GradedTensor::zero(ring, n + m + 2);
    for sigma in enumerate_shuffles(n + 1, m + 1) {
        // σ̃_* carries the Koszul part of ε(σ); (-1)^{|σ|} is the rest.
        let term = base.permute(&sigma.to_permutation()).expect("arity n+m+2").scale(&sign_of(sigma.area() + m));
        total = total.add(&term).expect("same ring and arity");
    }
    PhiOutput { n, m, tensor: total }
}

/// `(ρ δ_θ)_*` applied to `a_0 ⊗ … ⊗ a_{n'} ⊗ b_0 ⊗ … ⊗ b_{m'}`.
///
/// Each `a_i` is copied by the diagonal `Δ_{α_i}`, each `b_j` by `Δ_{β_j}`,
/// the two blocks are interleaved by `T` with Koszul signs, adjacent pairs
/// become factors of `H(A × B)`, and any term with a `1 ⊗ 1` factor is
/// killed by the projection to the smash product.
pub fn rho_delta(theta: &Shuffle, a: &[BasisSymbol], b: &[BasisSymbol], ring: Coefficients) -> GradedTensor<PairSymbol> {
    let seq = theta.sequences();
    assert_eq!(a.len(), seq.alpha.len(), "one A-class per column");
    assert_eq!(b.len(), seq.beta.len(), "one B-class per row");
    let slots = theta.n() + theta.m() + 1;

    let expand = |classes: &[BasisSymbol], counts: &[usize]| {
        classes.iter().zip(counts).fold(GradedTensor::basis(ring, vec![]), |acc, (c, &k)| {
            acc.tensor_product(&diagonal_primitive(c, k, ring)).expect("same ring")
        })
    };
    let a_side = expand(a, &seq.alpha);
    let b_side = expand(b, &seq.beta);
    let both = a_side.tensor_product(&b_side).expect("same ring");

    // T: A-slot k goes to position 2k, B-slot k to 2k+1
    let interleave = Permutation::new((0..slots).map(|k| 2 * k).chain((0..slots).map(|k| 2 * k + 1)).collect())
        .expect("interleaving is a bijection");
    let paired = both.permute(&interleave).expect("arity 2(n+m+1)");

    paired.map_terms(slots, |f| {
        let pairs: Vec<PairSymbol> = f.chunks(2).map(|c| PairSymbol::new(c[0].clone(), c[1].clone())).collect();
        if pairs.iter().any(Graded::is_unit) {
            None
        } else {
            Some((1, pairs))
        }
    })
}

/// The two-part formula built from `δ_θ` and `ρ`, with a unit inserted via `i_1`.
pub fn delta_rho_oracle(input: &PhiInput) -> PhiOutput {
    let (n, m) = (input.n, input.m);
    let ring = input.ring;
    let xs = input.x_classes();
    let ys = input.y_classes();
    let mut total = GradedTensor::zero(ring, n + m + 2);

    // unit inserted as an extra A-class after x_{n+1}
    let mut a_ext = xs.clone();
    a_ext.push(BasisSymbol::unit());
    for theta in enumerate_shuffles(n + 1, m) {
        let t = rho_delta(&theta, &a_ext, &ys, ring).scale(&sign_of(m + theta.area()));
        total = total.add(&t).expect("same ring and arity");
    }

    // unit inserted as an extra B-class after y_{n+m+2}
    let mut b_ext = ys.clone();
    b_ext.push(BasisSymbol::unit());
    for theta in enumerate_shuffles(n, m + 1) {
        let t = rho_delta(&theta, &xs, &b_ext, ring).scale(&sign_of(1 + theta.area()));
        total = total.add(&t).expect("same ring and arity");
    }
    PhiOutput { n, m, tensor: total }
}

/// Apply `χ̄_*` factorwise (`x⊗1 ↦ -x`, `1⊗x ↦ x`) and return the
/// coefficient of `x^{⊗ n+m+2}`.
pub fn chi_bar_compose(output: &PhiOutput, p: u32) -> Result<BigInt, HopfError> {
    if p < 2 {
        return Err(HopfError::SphereTooSmall(p));
    }
    let expected = p - 1;
    let mut total = BigInt::zero();
    for (factors, c) in output.tensor.terms() {
        let mut sign = BigInt::one();
        for z in factors {
            let class = if z.is_a_part() {
                sign = -sign;
                &z.a
            } else if z.is_b_part() {
                &z.b
            } else {
                return Err(HopfError::UnexpectedFactor(z.to_string()));
            };
            if class.degree != expected {
                return Err(HopfError::NonUniformDegrees { expected, found: class.degree });
            }
        }
        total += c * sign;
    }
    Ok(output.tensor.ring().reduce(total))
}

/// Numbers of `(n+1, m+1)` shuffles with positive and negative signature,
/// and the resulting bottom-cell degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSplit {
    pub degree: u128,
    pub s_plus: u128,
    pub s_minus: u128,
}

/// Count lattice paths to `(a, b)` by parity of the area below them.
fn signature_counts(a: usize, b: usize) -> (u128, u128) {
    // ways[i][j] = (even, odd)
    let mut ways = vec![vec![(0u128, 0u128); b + 1]; a + 1];
    ways[0][0] = (1, 0);
    for i in 0..=a {
        for j in 0..=b {
            let (e, o) = ways[i][j];
            if i < a {
                // horizontal step at height j adds j squares
                let w = &mut ways[i + 1][j];
                if j % 2 == 0 {
                    w.0 += e;
                    w.1 += o;
                } else {
                    w.0 += o;
                    w.1 += e;
                }
            }
            if j < b {
                let w = &mut ways[i][j + 1];
                w.0 += e;
                w.1 += o;
            }
        }
    }
    ways[a][b]
}

/// `#S⁺ + (-1)^p #S⁻` over the `(n+1, m+1)` shuffles, with its split.
pub fn degree_split(n: usize, m: usize, p: u32) -> DegreeSplit {
    let (s_plus, s_minus) = signature_counts(n + 1, m + 1);
    debug_assert_eq!(s_plus + s_minus, binomial(n + m + 2, n + 1));
    let degree = if p % 2 == 0 { s_plus + s_minus } else { s_plus - s_minus };
    DegreeSplit { degree, s_plus, s_minus }
}

/// Degree of `χ̄ ∘ Φ_{n,m}` on the bottom cell of `F_{n+m+1}(S^p)`, up to sign.
pub fn bottom_degree(n: usize, m: usize, p: u32) -> u128 {
    degree_split(n, m, p).degree
}

/// Whether `f ⊛ (d·g)` is null for `f` of the given order: `d` is a multiple
/// of that order. Order `0` stands for infinite order.
pub fn join_vanishes(order_f: u64, scalar_factor_g: i64) -> bool {
    if order_f == 0 {
        return scalar_factor_g == 0;
    }
    scalar_factor_g.unsigned_abs() % order_f == 0
}
