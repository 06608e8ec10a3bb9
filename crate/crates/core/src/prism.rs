//! The standard decomposition of `Δⁿ × Δᵐ` into `(n+m)`-simplices.
//!
//! Each shuffle `θ` gives an ordered simplex `Δ_θ` whose k-th vertex is
//! `(e_{i_k}, e'_{j_k})` for the k-th edgepath vertex `(i_k, j_k)`. The chain
//! `Σ (-1)^{|θ|} Δ_θ` is a relative cycle, and the affine maps `ψ_θ` sending
//! the k-th vertex of `Δ_θ` to `e_k` glue to a map `Δⁿ × Δᵐ → Δ^{n+m}`.
//! Every computation here is exact over the rationals.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::shuffles::{binomial, enumerate_shuffles, Shuffle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrismError {
    #[error("barycentric coordinates must lie in [0,1] and sum to 1")]
    InvalidPoint,
    #[error("point has dimensions ({got_n},{got_m}), expected ({n},{m})")]
    DimensionMismatch { n: usize, m: usize, got_n: usize, got_m: usize },
    #[error("point is not a convex combination of the vertices of Δ_θ for θ = {0}")]
    NotInSimplex(String),
}

/// A point of a standard simplex in exact barycentric coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BarycentricPoint {
    coords: Vec<BigRational>,
}

impl BarycentricPoint {
    pub fn new(coords: Vec<BigRational>) -> Result<Self, PrismError> {
        let one = BigRational::one();
        let in_range = coords.iter().all(|c| !c.is_negative() && *c <= one);
        let sum: BigRational = coords.iter().cloned().sum();
        if coords.is_empty() || !in_range || sum != one {
            return Err(PrismError::InvalidPoint);
        }
        Ok(BarycentricPoint { coords })
    }

    /// The vertex `e_k` of `Δ^{dim}`.
    pub fn vertex(dim: usize, k: usize) -> Self {
        let mut coords = vec![BigRational::zero(); dim + 1];
        coords[k] = BigRational::one();
        BarycentricPoint { coords }
    }

    pub fn barycenter(dim: usize) -> Self {
        let w = BigRational::new(BigInt::one(), BigInt::from(dim + 1));
        BarycentricPoint { coords: vec![w; dim + 1] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }
}

/// A point `(t, s)` of the prism `Δⁿ × Δᵐ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrismPoint {
    pub t: BarycentricPoint,
    pub s: BarycentricPoint,
}

impl PrismPoint {
    pub fn new(t: BarycentricPoint, s: BarycentricPoint) -> Self {
        PrismPoint { t, s }
    }

    /// The convex combination `Σ w_k (e_{i_k}, e'_{j_k})` of grid vertices.
    pub fn from_grid_combination(n: usize, m: usize, vertices: &[(usize, usize)], weights: &[BigRational]) -> Result<Self, PrismError> {
        let mut t = vec![BigRational::zero(); n + 1];
        let mut s = vec![BigRational::zero(); m + 1];
        for (&(i, j), w) in vertices.iter().zip(weights) {
            t[i] += w;
            s[j] += w;
        }
        Ok(PrismPoint { t: BarycentricPoint::new(t)?, s: BarycentricPoint::new(s)? })
    }
}

/// `Δ_θ` with its ordered vertex list, which is the edgepath of `θ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedSimplex {
    pub shuffle: Shuffle,
    pub vertices: Vec<(usize, usize)>,
}

impl OrderedSimplex {
    pub fn of(shuffle: &Shuffle) -> Self {
        OrderedSimplex { vertices: shuffle.edgepath().vertices, shuffle: shuffle.clone() }
    }
}

/// `Σ (-1)^{|θ|} Δ_θ` over all `(n, m)` shuffles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrismChain {
    pub n: usize,
    pub m: usize,
    pub terms: Vec<(i64, OrderedSimplex)>,
}

/// A codimension-one face, identified by its vertex set in the prism grid.
///
/// Vertices are kept in the grid's product order; every face of an ordered
/// `Δ_θ` is already in that order, so no extra orientation sign arises.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Face {
    pub vertices: Vec<(usize, usize)>,
}

impl Face {
    fn canonical(mut vertices: Vec<(usize, usize)>) -> (i64, Face) {
        // sort with a sign for the permutation applied
        let mut sign = 1;
        for i in 0..vertices.len() {
            for j in 0..vertices.len() - 1 - i {
                if vertices[j] > vertices[j + 1] {
                    vertices.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        (sign, Face { vertices })
    }

    /// True when the face lies in `∂(Δⁿ × Δᵐ)`: some barycentric
    /// coordinate of one factor vanishes on all of its vertices.
    pub fn lies_in_prism_boundary(&self, n: usize, m: usize) -> bool {
        let cols: std::collections::BTreeSet<usize> = self.vertices.iter().map(|v| v.0).collect();
        let rows: std::collections::BTreeSet<usize> = self.vertices.iter().map(|v| v.1).collect();
        cols.len() < n + 1 || rows.len() < m + 1
    }
}

pub fn decompose_prism(n: usize, m: usize) -> PrismChain {
    let terms = enumerate_shuffles(n, m)
        .iter()
        .map(|s| (s.signature().sign as i64, OrderedSimplex::of(s)))
        .collect();
    PrismChain { n, m, terms }
}

/// Every face of every simplex with its signed coefficient, before cancellation.
pub fn boundary_expansion(chain: &PrismChain) -> Vec<(i64, Face)> {
    let mut out = Vec::new();
    for (c, simplex) in &chain.terms {
        if simplex.vertices.len() < 2 {
            continue;
        }
        for k in 0..simplex.vertices.len() {
            let mut verts = simplex.vertices.clone();
            verts.remove(k);
            let (orient, face) = Face::canonical(verts);
            let sign = if k % 2 == 0 { 1 } else { -1 };
            out.push((c * sign * orient, face));
        }
    }
    out
}

/// Simplicial boundary with cancellation, in canonical face order.
pub fn boundary(chain: &PrismChain) -> Vec<(i64, Face)> {
    let mut acc: BTreeMap<Face, i64> = BTreeMap::new();
    for (c, f) in boundary_expansion(chain) {
        *acc.entry(f).or_default() += c;
    }
    acc.into_iter().filter(|(_, c)| *c != 0).map(|(f, c)| (c, f)).collect()
}

/// The chain is a relative cycle: each face off `∂(Δⁿ × Δᵐ)` occurs exactly
/// twice in the expansion with opposite signs, and nothing else survives.
pub fn is_relative_cycle(chain: &PrismChain) -> bool {
    let mut internal: BTreeMap<Face, Vec<i64>> = BTreeMap::new();
    for (c, f) in boundary_expansion(chain) {
        if !f.lies_in_prism_boundary(chain.n, chain.m) {
            internal.entry(f).or_default().push(c);
        }
    }
    let paired = internal.values().all(|cs| cs.len() == 2 && cs[0] + cs[1] == 0);
    let survivors_on_boundary = boundary(chain).iter().all(|(_, f)| f.lies_in_prism_boundary(chain.n, chain.m));
    paired && survivors_on_boundary
}

/// Solve `A x = b` exactly for a unique `x`; `None` if inconsistent or singular.
fn solve_exact(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>, unknowns: usize) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(unknowns);
    for col in 0..unknowns {
        let Some(p) = (pivot_row..rows).find(|&r| !a[r][col].is_zero()) else {
            return None;
        };
        a.swap(pivot_row, p);
        b.swap(pivot_row, p);
        let inv = a[pivot_row][col].recip();
        for c in col..unknowns {
            a[pivot_row][c] = &a[pivot_row][c] * &inv;
        }
        b[pivot_row] = &b[pivot_row] * &inv;
        for r in 0..rows {
            if r != pivot_row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..unknowns {
                    let delta = &factor * &a[pivot_row][c];
                    a[r][c] -= delta;
                }
                let delta = &factor * &b[pivot_row];
                b[r] -= delta;
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if b[pivot_row..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    Some(pivots.into_iter().map(|r| b[r].clone()).collect())
}

/// Affine coordinates of `point` with respect to the vertices of `Δ_θ`.
///
/// The returned weights sum to one but may be negative when the point lies
/// outside `Δ_θ`.
pub fn simplex_coordinates(shuffle: &Shuffle, point: &PrismPoint) -> Result<Vec<BigRational>, PrismError> {
    let (n, m) = (shuffle.n(), shuffle.m());
    if point.t.dim() != n || point.s.dim() != m {
        return Err(PrismError::DimensionMismatch { n, m, got_n: point.t.dim(), got_m: point.s.dim() });
    }
    let vertices = shuffle.edgepath().vertices;
    let unknowns = vertices.len();
    let indicator = |b: bool| if b { BigRational::one() } else { BigRational::zero() };
    let mut a = Vec::with_capacity(n + m + 2);
    let mut rhs = Vec::with_capacity(n + m + 2);
    for i in 0..=n {
        a.push(vertices.iter().map(|v| indicator(v.0 == i)).collect());
        rhs.push(point.t.coords[i].clone());
    }
    for j in 0..=m {
        a.push(vertices.iter().map(|v| indicator(v.1 == j)).collect());
        rhs.push(point.s.coords[j].clone());
    }
    solve_exact(a, rhs, unknowns).ok_or_else(|| PrismError::NotInSimplex(shuffle.to_string()))
}

pub fn contains(shuffle: &Shuffle, point: &PrismPoint) -> bool {
    simplex_coordinates(shuffle, point).map(|w| w.iter().all(|c| !c.is_negative())).unwrap_or(false)
}

/// `ψ_θ`: the affine map sending the k-th vertex of `Δ_θ` to `e_k` in `Δ^{n+m}`.
pub fn psi_theta(shuffle: &Shuffle, point: &PrismPoint) -> Result<BarycentricPoint, PrismError> {
    let weights = simplex_coordinates(shuffle, point)?;
    if weights.iter().any(|c| c.is_negative()) {
        return Err(PrismError::NotInSimplex(shuffle.to_string()));
    }
    Ok(BarycentricPoint { coords: weights })
}

/// The lexicographically smallest shuffle whose simplex contains `point`.
pub fn locate_simplex(n: usize, m: usize, point: &PrismPoint) -> Result<Shuffle, PrismError> {
    if point.t.dim() != n || point.s.dim() != m {
        return Err(PrismError::DimensionMismatch { n, m, got_n: point.t.dim(), got_m: point.s.dim() });
    }
    let found = enumerate_shuffles(n, m).into_iter().find(|s| contains(s, point));
    Ok(found.expect("the simplices Δ_θ cover the prism"))
}

/// The glued map `ψ_{n,m}: Δⁿ × Δᵐ → Δ^{n+m}`.
pub fn psi(n: usize, m: usize, point: &PrismPoint) -> Result<BarycentricPoint, PrismError> {
    let theta = locate_simplex(n, m, point)?;
    psi_theta(&theta, point)
}

/// Pairs of shuffles whose edgepaths differ in exactly one vertex, with
/// that vertex's 0-based index.
pub fn adjacent_pairs(n: usize, m: usize) -> Vec<(Shuffle, Shuffle, usize)> {
    let all = enumerate_shuffles(n, m);
    let paths: Vec<_> = all.iter().map(|s| s.edgepath().vertices).collect();
    let mut out = Vec::new();
    for a in 0..all.len() {
        for b in a + 1..all.len() {
            let diff: Vec<usize> = (0..paths[a].len()).filter(|&k| paths[a][k] != paths[b][k]).collect();
            if diff.len() == 1 {
                out.push((all[a].clone(), all[b].clone(), diff[0]));
            }
        }
    }
    out
}

/// Random rational weights: positive integers normalised to sum to one.
pub fn random_weights<R: Rng + ?Sized>(rng: &mut R, count: usize) -> Vec<BigRational> {
    let raw: Vec<i64> = (0..count).map(|_| rng.gen_range(1..=97)).collect();
    let total: i64 = raw.iter().sum();
    raw.into_iter().map(|w| BigRational::new(BigInt::from(w), BigInt::from(total))).collect()
}

/// Random interior point of the prism with rational coordinates.
pub fn random_prism_point<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> PrismPoint {
    let t = BarycentricPoint::new(random_weights(rng, n + 1)).expect("normalised weights");
    let s = BarycentricPoint::new(random_weights(rng, m + 1)).expect("normalised weights");
    PrismPoint { t, s }
}

/// `ψ_θ` and `ψ_{θ'}` agree exactly at `samples` random points of every shared facet.
pub fn gluing_holds<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize, samples: usize) -> bool {
    for (a, b, k) in adjacent_pairs(n, m) {
        let mut shared = a.edgepath().vertices;
        shared.remove(k);
        for _ in 0..samples {
            let w = random_weights(rng, shared.len());
            let Ok(x) = PrismPoint::from_grid_combination(n, m, &shared, &w) else {
                return false;
            };
            match (psi_theta(&a, &x), psi_theta(&b, &x)) {
                (Ok(pa), Ok(pb)) if pa == pb => {}
                _ => return false,
            }
        }
    }
    true
}

/// Summary used by the `prism-check` command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrismReport {
    pub simplices: usize,
    pub relative_cycle: bool,
    pub gluing_ok: bool,
}

pub fn prism_check<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize, samples: usize) -> PrismReport {
    let chain = decompose_prism(n, m);
    debug_assert_eq!(chain.terms.len() as u128, binomial(n + m, n));
    PrismReport {
        simplices: chain.terms.len(),
        relative_cycle: is_relative_cycle(&chain),
        gluing_ok: gluing_holds(rng, n, m, samples),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn square_has_two_triangles() {
        let c = decompose_prism(1, 1);
        let coeffs: Vec<i64> = c.terms.iter().map(|t| t.0).collect();
        assert_eq!(coeffs, vec![1, -1]);
        assert_eq!(c.terms[0].1.vertices, vec![(0, 0), (1, 0), (1, 1)]);
    }

    #[test]
    fn prism_over_point_and_edge() {
        let c = decompose_prism(0, 3);
        assert_eq!(c.terms.len(), 1);
        assert_eq!(c.terms[0].0, 1);
        let c = decompose_prism(2, 1);
        let coeffs: Vec<i64> = c.terms.iter().map(|t| t.0).collect();
        // lex order of first blocks: [1,2] area 0, [1,3] area 1, [2,3] area 2
        assert_eq!(coeffs, vec![1, -1, 1]);
    }

    #[test]
    fn square_boundary_is_on_the_rim() {
        let c = decompose_prism(1, 1);
        let b = boundary(&c);
        assert_eq!(b.len(), 4);
        assert!(b.iter().all(|(_, f)| f.lies_in_prism_boundary(1, 1)));
        assert!(is_relative_cycle(&c));
        // the diagonal is the only internal facet
        let diag = Face { vertices: vec![(0, 0), (1, 1)] };
        let hits: Vec<i64> = boundary_expansion(&c).into_iter().filter(|(_, f)| *f == diag).map(|(c, _)| c).collect();
        assert_eq!(hits.len(), 2);
        assert_eq!(hits[0] + hits[1], 0);
    }

    #[test]
    fn boundary_of_a_simplex() {
        let c = decompose_prism(0, 2);
        let b = boundary(&c);
        let expected = vec![
            (1, Face { vertices: vec![(0, 0), (0, 1)] }),
            (-1, Face { vertices: vec![(0, 0), (0, 2)] }),
            (1, Face { vertices: vec![(0, 1), (0, 2)] }),
        ];
        assert_eq!(b, expected);
    }

    #[test]
    fn vertices_and_barycenters() {
        for (n, m) in [(1, 1), (2, 1), (2, 2), (1, 3)] {
            for s in enumerate_shuffles(n, m) {
                let verts = s.edgepath().vertices;
                for (k, &v) in verts.iter().enumerate() {
                    let x = PrismPoint::from_grid_combination(n, m, &[v], &[BigRational::one()]).unwrap();
                    assert_eq!(psi_theta(&s, &x).unwrap(), BarycentricPoint::vertex(n + m, k));
                }
                let w = vec![q(1, (n + m + 1) as i64); n + m + 1];
                let bary = PrismPoint::from_grid_combination(n, m, &verts, &w).unwrap();
                assert_eq!(psi_theta(&s, &bary).unwrap(), BarycentricPoint::barycenter(n + m));
                assert_eq!(locate_simplex(n, m, &bary).unwrap(), s);
            }
        }
    }

    #[test]
    fn first_vertex_locates_identity() {
        for (n, m) in [(0, 0), (1, 2), (3, 1)] {
            let x = PrismPoint::new(BarycentricPoint::vertex(n, 0), BarycentricPoint::vertex(m, 0));
            assert_eq!(locate_simplex(n, m, &x).unwrap(), Shuffle::identity(n, m));
        }
    }

    #[test]
    fn outside_point_is_rejected() {
        // barycenter of the upper triangle is not in the lower one
        let upper = Shuffle::new(1, 1, vec![2]).unwrap();
        let lower = Shuffle::new(1, 1, vec![1]).unwrap();
        let verts = upper.edgepath().vertices;
        let x = PrismPoint::from_grid_combination(1, 1, &verts, &[q(1, 3), q(1, 3), q(1, 3)]).unwrap();
        assert!(matches!(psi_theta(&lower, &x), Err(PrismError::NotInSimplex(_))));
        assert!(psi_theta(&upper, &x).is_ok());
        let wrong = PrismPoint::new(BarycentricPoint::vertex(2, 0), BarycentricPoint::vertex(1, 0));
        assert!(matches!(psi_theta(&lower, &wrong), Err(PrismError::DimensionMismatch { .. })));
    }

    #[test]
    fn invalid_barycentric_points() {
        assert_eq!(BarycentricPoint::new(vec![q(1, 2), q(1, 3)]), Err(PrismError::InvalidPoint));
        assert_eq!(BarycentricPoint::new(vec![q(3, 2), q(-1, 2)]), Err(PrismError::InvalidPoint));
        assert_eq!(BarycentricPoint::new(vec![]), Err(PrismError::InvalidPoint));
    }

    #[test]
    fn adjacent_pairs_differ_by_one_in_area() {
        for (a, b, k) in adjacent_pairs(3, 2) {
            assert!(k >= 1 && k < 5);
            assert_eq!((a.area() as i64 - b.area() as i64).abs(), 1);
        }
    }

    #[test]
    fn small_prism_report() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let r = prism_check(&mut rng, 2, 2, 5);
        assert_eq!(r, PrismReport { simplices: 6, relative_cycle: true, gluing_ok: true });
    }

    #[test]
    fn glued_map_sends_prism_boundary_to_simplex_boundary() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let mut x = random_prism_point(&mut rng, 2, 1);
            // push onto the face t_1 = 0
            let t = x.t.coords().to_vec();
            let rest = &t[0] + &t[2];
            x.t = BarycentricPoint::new(vec![&t[0] / &rest, BigRational::zero(), &t[2] / &rest]).unwrap();
            let y = psi(2, 1, &x).unwrap();
            assert!(y.coords().iter().any(|c| c.is_zero()));
        }
    }
}
