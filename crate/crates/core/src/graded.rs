//! Graded tensors over `ℤ` or `ℤ/k` with Koszul signs.
//!
//! A [`GradedTensor`] is a finite linear combination of basis tuples of fixed
//! arity. Permuting the factors of a tuple of homogeneous elements of degrees
//! `d_1, …, d_k` introduces the sign `(-1)^s` where `s` counts the inversions
//! of the permutation whose two entries both have odd degree.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("tensor arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("coefficient rings differ: {0} vs {1}")]
    RingMismatch(Coefficients, Coefficients),
    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("modulus 1 is not allowed; use 0 for the integers or k >= 2")]
    InvalidModulus,
}

/// Coefficient ring: the integers (`modulus == 0`) or `ℤ/k` for `k >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Coefficients {
    modulus: u64,
}

impl Coefficients {
    pub const INTEGERS: Coefficients = Coefficients { modulus: 0 };

    pub fn new(modulus: u64) -> Result<Self, GradedError> {
        if modulus == 1 {
            return Err(GradedError::InvalidModulus);
        }
        Ok(Coefficients { modulus })
    }

    pub fn modulo(k: u64) -> Result<Self, GradedError> {
        Self::new(k)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_integers(&self) -> bool {
        self.modulus == 0
    }

    /// Canonical representative: unchanged over `ℤ`, in `0..k` over `ℤ/k`.
    pub fn reduce(&self, c: BigInt) -> BigInt {
        if self.modulus == 0 {
            c
        } else {
            c.mod_floor(&BigInt::from(self.modulus))
        }
    }
}

impl TryFrom<u64> for Coefficients {
    type Error = GradedError;
    fn try_from(m: u64) -> Result<Self, Self::Error> {
        Coefficients::new(m)
    }
}

impl From<Coefficients> for u64 {
    fn from(c: Coefficients) -> u64 {
        c.modulus
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus == 0 {
            write!(f, "Z")
        } else {
            write!(f, "Z/{}", self.modulus)
        }
    }
}

/// A homogeneous basis element with a degree; the unit has degree 0.
pub trait Graded: Clone + Ord + fmt::Display {
    fn degree(&self) -> u32;
    fn unit() -> Self;
    fn is_unit(&self) -> bool;
}

/// An opaque named basis class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisSymbol {
    pub name: String,
    pub degree: u32,
}

impl BasisSymbol {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        BasisSymbol { name: name.into(), degree }
    }
}

impl Graded for BasisSymbol {
    fn degree(&self) -> u32 {
        self.degree
    }
    fn unit() -> Self {
        BasisSymbol { name: "1".into(), degree: 0 }
    }
    fn is_unit(&self) -> bool {
        self.name == "1" && self.degree == 0
    }
}

impl fmt::Display for BasisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// A permutation of `{0, …, k-1}`; entry `i` is the image `σ(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, GradedError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(GradedError::InvalidPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(k: usize) -> Self {
        Permutation((0..k).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &s) in self.0.iter().enumerate() {
            inv[s] = i;
        }
        Permutation(inv)
    }

    /// Pairs `i < j` with `σ(j) < σ(i)`.
    pub fn inversions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.len();
        (0..k).flat_map(move |i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| self.0[j] < self.0[i])
    }

    pub fn sign(&self) -> i8 {
        if self.inversions().count() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Koszul sign `(-1)^{Σ d_i d_j}` over the inversions `(i, j)` of `sigma`.
pub fn koszul_sign(sigma: &Permutation, degrees: &[u32]) -> i8 {
    assert_eq!(sigma.len(), degrees.len(), "one degree per permuted factor");
    let odd = sigma.inversions().filter(|&(i, j)| degrees[i] % 2 == 1 && degrees[j] % 2 == 1).count();
    if odd % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Finite linear combination of basis tuples of a fixed arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedTensor<S: Graded = BasisSymbol> {
    ring: Coefficients,
    arity: usize,
    terms: BTreeMap<Vec<S>, BigInt>,
}

impl<S: Graded> GradedTensor<S> {
    pub fn zero(ring: Coefficients, arity: usize) -> Self {
        GradedTensor { ring, arity, terms: BTreeMap::new() }
    }

    /// A single basis tuple with coefficient one.
    pub fn basis(ring: Coefficients, factors: Vec<S>) -> Self {
        let mut t = Self::zero(ring, factors.len());
        t.add_term(BigInt::one(), factors);
        t
    }

    pub fn ring(&self) -> Coefficients {
        self.ring
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&[S], &BigInt)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coefficient(&self, factors: &[S]) -> BigInt {
        self.terms.get(factors).cloned().unwrap_or_default()
    }

    /// Add `coeff · factors`, panicking on an arity mismatch.
    pub fn add_term(&mut self, coeff: BigInt, factors: Vec<S>) {
        assert_eq!(factors.len(), self.arity, "term arity");
        let ring = self.ring;
        match self.terms.entry(factors) {
            Entry::Occupied(mut o) => {
                let c = ring.reduce(o.get() + coeff);
                if c.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = c;
                }
            }
            Entry::Vacant(v) => {
                let c = ring.reduce(coeff);
                if !c.is_zero() {
                    v.insert(c);
                }
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), GradedError> {
        if self.ring != other.ring {
            return Err(GradedError::RingMismatch(self.ring, other.ring));
        }
        if self.arity != other.arity {
            return Err(GradedError::ArityMismatch { expected: self.arity, got: other.arity });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, GradedError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (f, c) in &other.terms {
            out.add_term(c.clone(), f.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, GradedError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.ring, self.arity);
        for (f, v) in &self.terms {
            out.add_term(v * c, f.clone());
        }
        out
    }

    /// Same tensor read over another ring (coefficients are reduced).
    pub fn change_ring(&self, ring: Coefficients) -> Self {
        let mut out = Self::zero(ring, self.arity);
        for (f, v) in &self.terms {
            out.add_term(v.clone(), f.clone());
        }
        out
    }

    /// Concatenate basis tuples and multiply coefficients; juxtaposition adds no sign.
    pub fn tensor_product(&self, other: &Self) -> Result<Self, GradedError> {
        if self.ring != other.ring {
            return Err(GradedError::RingMismatch(self.ring, other.ring));
        }
        let mut out = Self::zero(self.ring, self.arity + other.arity);
        for (fa, ca) in &self.terms {
            for (fb, cb) in &other.terms {
                let mut f = fa.clone();
                f.extend(fb.iter().cloned());
                out.add_term(ca * cb, f);
            }
        }
        Ok(out)
    }

    /// `σ̃_*`: factor `i` moves to position `σ(i)`, with its Koszul sign.
    pub fn permute(&self, sigma: &Permutation) -> Result<Self, GradedError> {
        if sigma.len() != self.arity {
            return Err(GradedError::ArityMismatch { expected: self.arity, got: sigma.len() });
        }
        let mut out = Self::zero(self.ring, self.arity);
        for (f, c) in &self.terms {
            let degrees: Vec<u32> = f.iter().map(Graded::degree).collect();
            let sign = koszul_sign(sigma, &degrees);
            let mut moved: Vec<Option<S>> = vec![None; self.arity];
            for (i, s) in f.iter().enumerate() {
                moved[sigma.apply(i)] = Some(s.clone());
            }
            out.add_term(c * BigInt::from(sign), moved.into_iter().map(Option::unwrap).collect());
        }
        Ok(out)
    }

    /// Apply `f` to every term, accumulating the results; `f` returns the
    /// new tuple with a sign multiplier, or `None` to drop the term.
    pub fn map_terms<T: Graded>(&self, arity: usize, mut f: impl FnMut(&[S]) -> Option<(i8, Vec<T>)>) -> GradedTensor<T> {
        let mut out = GradedTensor::zero(self.ring, arity);
        for (factors, c) in &self.terms {
            if let Some((sign, image)) = f(factors) {
                out.add_term(c * BigInt::from(sign), image);
            }
        }
        out
    }
}

/// `permute_tensor(σ, t)`.
pub fn permute_tensor<S: Graded>(sigma: &Permutation, t: &GradedTensor<S>) -> Result<GradedTensor<S>, GradedError> {
    t.permute(sigma)
}

/// Diagonal of a primitive class: `Σ_i 1⊗…⊗z⊗…⊗1` with `z` in slot `i`.
///
/// The unit is group-like, so its diagonal is the single tuple `1⊗…⊗1`.
pub fn diagonal_primitive<S: Graded>(z: &S, k: usize, ring: Coefficients) -> GradedTensor<S> {
    assert!(k >= 1, "diagonal needs at least one copy");
    if z.is_unit() {
        return GradedTensor::basis(ring, vec![S::unit(); k]);
    }
    let mut out = GradedTensor::zero(ring, k);
    for i in 0..k {
        let mut f = vec![S::unit(); k];
        f[i] = z.clone();
        out.add_term(BigInt::one(), f);
    }
    out
}

impl<S: Graded> fmt::Display for GradedTensor<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (factors, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if idx == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let body = factors.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("⊗");
            write!(f, "{}·{}", c.abs(), body)?;
        }
        Ok(())
    }
}
