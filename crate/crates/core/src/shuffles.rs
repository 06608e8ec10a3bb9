//! `(n, m)` shuffles as monotone lattice paths.
//!
//! A shuffle `θ` splits `{1, …, n+m}` into an increasing block of size `n`
//! (the horizontal steps of its edgepath) and an increasing block of size `m`
//! (the vertical steps). Only the first block is stored; the second is its
//! complement.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graded::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShuffleError {
    #[error("first block has {got} entries, expected {expected}")]
    WrongBlockSize { expected: usize, got: usize },
    #[error("entry {0} of the first block is outside 1..={1}")]
    OutOfRange(usize, usize),
    #[error("first block is not strictly increasing")]
    NotIncreasing,
    #[error("edgepath is not a monotone unit-step path from (0,0) to ({0},{1})")]
    BadEdgePath(usize, usize),
}

/// An `(n, m)` shuffle, stored by its first block `θ(1) < … < θ(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ShuffleRepr", into = "ShuffleRepr")]
pub struct Shuffle {
    n: usize,
    m: usize,
    first_block: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct ShuffleRepr {
    n: usize,
    m: usize,
    first_block: Vec<usize>,
}

impl TryFrom<ShuffleRepr> for Shuffle {
    type Error = ShuffleError;
    fn try_from(r: ShuffleRepr) -> Result<Self, Self::Error> {
        Shuffle::new(r.n, r.m, r.first_block)
    }
}

impl From<Shuffle> for ShuffleRepr {
    fn from(s: Shuffle) -> Self {
        ShuffleRepr { n: s.n, m: s.m, first_block: s.first_block }
    }
}

/// Area under the edgepath and the resulting sign `(-1)^area`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub area: usize,
    pub sign: i8,
}

/// Grid vertices `(i_k, j_k)` visited by the edgepath, from `(0,0)` to `(n,m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgePath {
    pub vertices: Vec<(usize, usize)>,
}

/// Column and row vertex counts of an edgepath.
///
/// `alpha[i]` is the number of edgepath vertices in column `i`, `beta[j]`
/// the number in row `j`. Both sum to `n + m + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShuffleSequences {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl Shuffle {
    pub fn new(n: usize, m: usize, first_block: Vec<usize>) -> Result<Self, ShuffleError> {
        if first_block.len() != n {
            return Err(ShuffleError::WrongBlockSize { expected: n, got: first_block.len() });
        }
        if let Some(&bad) = first_block.iter().find(|&&v| v == 0 || v > n + m) {
            return Err(ShuffleError::OutOfRange(bad, n + m));
        }
        if first_block.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ShuffleError::NotIncreasing);
        }
        Ok(Shuffle { n, m, first_block })
    }

    /// The shuffle `(1 … n || n+1 … n+m)` whose path runs along the bottom edge first.
    pub fn identity(n: usize, m: usize) -> Self {
        Shuffle { n, m, first_block: (1..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn first_block(&self) -> &[usize] {
        &self.first_block
    }

    pub fn second_block(&self) -> Vec<usize> {
        let mut first = self.first_block.iter().peekable();
        (1..=self.n + self.m)
            .filter(|k| {
                if first.peek() == Some(&k) {
                    first.next();
                    false
                } else {
                    true
                }
            })
            .collect()
    }

    /// `true` when the k-th edge (1-based) is horizontal.
    pub fn is_horizontal(&self, k: usize) -> bool {
        self.first_block.binary_search(&k).is_ok()
    }

    /// Number of grid squares below the edgepath: every horizontal edge
    /// contributes its height.
    pub fn area(&self) -> usize {
        self.first_block.iter().enumerate().map(|(i, &k)| k - 1 - i).sum()
    }

    pub fn signature(&self) -> Signature {
        let area = self.area();
        Signature { area, sign: if area % 2 == 0 { 1 } else { -1 } }
    }

    pub fn edgepath(&self) -> EdgePath {
        let mut vertices = Vec::with_capacity(self.n + self.m + 1);
        let (mut i, mut j) = (0, 0);
        vertices.push((i, j));
        for k in 1..=self.n + self.m {
            if self.is_horizontal(k) {
                i += 1;
            } else {
                j += 1;
            }
            vertices.push((i, j));
        }
        EdgePath { vertices }
    }

    /// Rebuild the shuffle from its edgepath.
    pub fn from_edgepath(n: usize, m: usize, path: &EdgePath) -> Result<Self, ShuffleError> {
        let v = &path.vertices;
        if v.len() != n + m + 1 || v[0] != (0, 0) || v[n + m] != (n, m) {
            return Err(ShuffleError::BadEdgePath(n, m));
        }
        let mut first_block = Vec::with_capacity(n);
        for (k, w) in v.windows(2).enumerate() {
            let (a, b) = (w[0], w[1]);
            if b == (a.0 + 1, a.1) {
                first_block.push(k + 1);
            } else if b != (a.0, a.1 + 1) {
                return Err(ShuffleError::BadEdgePath(n, m));
            }
        }
        Shuffle::new(n, m, first_block)
    }

    /// The column and row sequences `α_0..α_n`, `β_0..β_m`.
    pub fn sequences(&self) -> ShuffleSequences {
        let (n, m) = (self.n, self.m);
        let total = n + m + 1;
        let alpha = if n == 0 {
            vec![m + 1]
        } else {
            let t = &self.first_block;
            let mut a = Vec::with_capacity(n + 1);
            a.push(t[0]);
            a.extend(t.windows(2).map(|w| w[1] - w[0]));
            a.push(total - t[n - 1]);
            a
        };
        let beta = if m == 0 {
            vec![n + 1]
        } else {
            let t = self.second_block();
            let mut b = Vec::with_capacity(m + 1);
            b.push(t[0]);
            b.extend(t.windows(2).map(|w| w[1] - w[0]));
            b.push(total - t[m - 1]);
            b
        };
        ShuffleSequences { alpha, beta }
    }

    /// `θ` as a permutation of `{0, …, n+m-1}`: element `i` goes to `θ(i+1) - 1`.
    pub fn to_permutation(&self) -> Permutation {
        let images = self
            .first_block
            .iter()
            .chain(self.second_block().iter())
            .map(|&k| k - 1)
            .collect();
        Permutation::new(images).expect("shuffle blocks partition 1..=n+m")
    }
}

impl fmt::Display for Shuffle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "({} || {})", join(&self.first_block), join(&self.second_block()))
    }
}

/// All `binomial(n+m, n)` shuffles, in lexicographic order of the first block.
pub fn enumerate_shuffles(n: usize, m: usize) -> Vec<Shuffle> {
    let total = n + m;
    let mut out = Vec::new();
    let mut block: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Shuffle { n, m, first_block: block.clone() });
        // advance to the next n-subset of 1..=total in lex order
        let mut i = n;
        while i > 0 && block[i - 1] == total - n + i {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        block[i - 1] += 1;
        for j in i..n {
            block[j] = block[j - 1] + 1;
        }
    }
    out
}

/// `binomial(n, k)` as an exact `u128`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
