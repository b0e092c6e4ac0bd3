//! Mirroring / Danzer / power complexes over `{0, +1, -1}` coordinates,
//! intersection patterns, and the rank-generating-function scaling
//! identities they satisfy.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{f_poly, rat, rat_int, RatPoly};
use crate::poset::CellPoset;
use crate::vset::VertexSet;

/// Ground-set ceiling for the extensional mirror construction; the face set
/// grows like `3^n`.
pub const MAX_MIRROR_GROUND: u32 = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DanzerError {
    #[error("ground set of size {0} exceeds the mirror ceiling of {MAX_MIRROR_GROUND}")]
    GroundSetTooLarge(u32),
    #[error("face does not belong to this mirror complex")]
    MixedComplexes,
    #[error("a {0}-dimensional cell has {1} vertices; the identity needs k-vertex cells")]
    CellVertexMismatch(u32, u32),
}

type Result<T> = std::result::Result<T, DanzerError>;

/// A face of a mirror complex: zeros exactly on the base face, signs on the
/// remaining coordinates.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SignedFace {
    n: u32,
    zeros: u64,
    plus: u64,
}

impl SignedFace {
    pub fn new(n: u32, zeros: VertexSet, plus: VertexSet) -> Self {
        debug_assert_eq!(plus.mask() & zeros.mask(), 0);
        SignedFace { n, zeros: zeros.mask(), plus: plus.mask() }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The base face: positions holding zero.
    pub fn zero_pattern(&self) -> VertexSet {
        VertexSet::from_mask(self.zeros)
    }

    pub fn dim(&self) -> u32 {
        self.zeros.count_ones()
    }

    pub fn coord(&self, i: u32) -> i8 {
        if self.zeros >> i & 1 == 1 {
            0
        } else if self.plus >> i & 1 == 1 {
            1
        } else {
            -1
        }
    }

    pub fn coords(&self) -> Vec<i8> {
        (0..self.n).map(|i| self.coord(i)).collect()
    }

    fn from_coords(cs: &[i8]) -> Option<Self> {
        let mut zeros = 0u64;
        let mut plus = 0u64;
        for (i, &c) in cs.iter().enumerate() {
            match c {
                0 => zeros |= 1 << i,
                1 => plus |= 1 << i,
                -1 => {}
                _ => return None,
            }
        }
        Some(SignedFace { n: cs.len() as u32, zeros, plus })
    }
}

impl Serialize for SignedFace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SignedFace {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let cs = Vec::<i8>::deserialize(d)?;
        SignedFace::from_coords(&cs)
            .ok_or_else(|| serde::de::Error::custom("coordinates must lie in {-1, 0, 1}"))
    }
}

/// The mirror complex of a cell poset: every sign completion of every base
/// face, with the empty base face contributing the all-nonzero vectors.
#[derive(Clone, Debug)]
pub struct MirrorComplex {
    n: u32,
    base_supports: BTreeSet<VertexSet>,
    faces: BTreeSet<SignedFace>,
}

pub fn mirror(p: &CellPoset) -> Result<MirrorComplex> {
    let n = p.n_ground();
    if n > MAX_MIRROR_GROUND {
        return Err(DanzerError::GroundSetTooLarge(n));
    }
    let mut base_supports = p.supports();
    base_supports.insert(VertexSet::EMPTY);
    let mut faces = BTreeSet::new();
    for &f in &base_supports {
        let free = VertexSet::from_mask(full(n) & !f.mask());
        for plus in free.subsets() {
            faces.insert(SignedFace::new(n, f, plus));
        }
    }
    Ok(MirrorComplex { n, base_supports, faces })
}

fn full(n: u32) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl MirrorComplex {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn faces(&self) -> impl Iterator<Item = SignedFace> + '_ {
        self.faces.iter().copied()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn contains(&self, f: &SignedFace) -> bool {
        f.n == self.n && self.faces.contains(f)
    }

    /// Rank generating function with the cubical convention: no empty face,
    /// rank = dimension = number of zeros.
    pub fn ftilde_poly(&self) -> RatPoly {
        let top = self.faces.iter().map(|f| f.dim()).max().unwrap_or(0);
        let mut counts = vec![0i64; top as usize + 1];
        for f in &self.faces {
            counts[f.dim() as usize] += 1;
        }
        RatPoly::from_ints(&counts)
    }

    /// Ordinary f-polynomial including the empty face: `t f~(t) + 1`.
    pub fn f_poly_with_empty(&self) -> RatPoly {
        &(&RatPoly::x() * &self.ftilde_poly()) + &RatPoly::one()
    }

    /// Intersection of a family of faces: empty unless all nonzero
    /// coordinates agree pairwise; otherwise zeros sit exactly on the
    /// intersection of the zero patterns.
    pub fn faces_intersect(&self, faces: &[SignedFace]) -> Result<Option<SignedFace>> {
        for f in faces {
            if !self.contains(f) {
                return Err(DanzerError::MixedComplexes);
            }
        }
        let Some((first, rest)) = faces.split_first() else {
            return Ok(None);
        };
        let mut zeros = first.zeros;
        let mut plus = first.plus;
        let mut minus = full(self.n) & !first.zeros & !first.plus;
        for f in rest {
            let f_minus = full(self.n) & !f.zeros & !f.plus;
            if plus & f_minus != 0 || minus & f.plus != 0 {
                return Ok(None);
            }
            zeros &= f.zeros;
            plus |= f.plus;
            minus |= f_minus;
        }
        // Zeros shared by all faces stay free; every other coordinate takes
        // the unique sign imposed by some face.
        plus &= !zeros;
        Ok(Some(SignedFace { n: self.n, zeros, plus }))
    }

    /// All-nonzero faces, the vertices of the cube complex.
    pub fn cube_vertices(&self) -> Vec<SignedFace> {
        self.faces.iter().copied().filter(|f| f.zeros == 0).collect()
    }

    /// The faces containing a given cube vertex, stripped to their zero
    /// patterns, must reproduce the base face set (with the empty face)
    /// under inclusion order.
    pub fn vertex_links_match_base(&self) -> bool {
        for v in self.cube_vertices() {
            let star: BTreeSet<VertexSet> = self
                .faces
                .iter()
                .filter(|f| {
                    // f contains v: off the zero pattern, signs agree.
                    f.plus == v.plus & !f.zeros
                })
                .map(|f| f.zero_pattern())
                .collect();
            if star != self.base_supports {
                return false;
            }
        }
        true
    }
}

/// Checks `f~(MT, t) = 2^n S~(T, t/2)` by independent counting, and when
/// every `(k-1)`-dimensional cell has `k` vertices also the specialization
/// `f~(MT, t) = 2^n f~(T, t/2)` with the simplicial empty-face convention.
pub fn verify_poset_f_danzer(p: &CellPoset) -> Result<bool> {
    let m = mirror(p)?;
    let lhs = m.ftilde_poly();
    let half = rat(1, 2);
    let scale = rat_int(1i64 << p.n_ground());
    let rhs_general = p.stilde_poly().scale_arg(&half).scale(&scale);
    if lhs != rhs_general {
        return Ok(false);
    }
    if cells_have_matching_vertex_counts(p) {
        let ft = match p.kind() {
            crate::poset::PosetKind::Simplicial => p.ftilde_poly(),
            // Counting by rank with the empty face adjoined equals counting
            // by support size here.
            _ => p.stilde_poly(),
        };
        let rhs = ft.scale_arg(&half).scale(&scale);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

fn cells_have_matching_vertex_counts(p: &CellPoset) -> bool {
    p.elements().iter().all(|e| e.support.len() == e.dim + 1)
}

/// Checks `f~(MA, x) = 2^n F_A(x+1)` and `f(MA, x) = 2^n x F_A(x+1) + 1`;
/// requires every `(k-1)`-dimensional cell to have `k` vertices.
pub fn verify_f_poly_to_danzer(p: &CellPoset) -> Result<bool> {
    if let Some(e) = p
        .elements()
        .iter()
        .find(|e| e.support.len() != e.dim + 1)
    {
        return Err(DanzerError::CellVertexMismatch(e.dim, e.support.len()));
    }
    let m = mirror(p)?;
    let scale = rat_int(1i64 << p.n_ground());
    let f_a = f_poly(&p.stilde_counts());
    let shifted = f_a.compose(&RatPoly::new(vec![rat_int(1), rat_int(1)]));
    let rhs = shifted.scale(&scale);
    if m.ftilde_poly() != rhs {
        return Ok(false);
    }
    let rhs_full = &(&RatPoly::x() * &rhs) + &RatPoly::one();
    Ok(m.f_poly_with_empty() == rhs_full)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{cycle, cross_polytope_boundary, points, simplex};
    use crate::poset::square_cell;

    fn poset_of(c: &crate::complex::SimplicialComplex) -> CellPoset {
        CellPoset::from_simplicial(c)
    }

    #[test]
    fn mirror_examples() {
        let pt = poset_of(&points(1).unwrap());
        let m = mirror(&pt).unwrap();
        assert_eq!(m.ftilde_poly(), RatPoly::from_ints(&[2, 1]));

        let edge = poset_of(&simplex(2).unwrap());
        let m = mirror(&edge).unwrap();
        assert_eq!(m.ftilde_poly(), RatPoly::from_ints(&[4, 4, 1]));

        let c4 = poset_of(&cycle(4).unwrap());
        let m = mirror(&c4).unwrap();
        assert_eq!(m.ftilde_poly(), RatPoly::from_ints(&[16, 32, 16]));
        // Euler characteristic of the cubical torus.
        assert_eq!(16 - 32 + 16, 0);
    }

    #[test]
    fn intersect_examples() {
        let edge = poset_of(&simplex(2).unwrap());
        let m = mirror(&edge).unwrap();
        let a = SignedFace::from_coords(&[0, 1]).unwrap();
        let b = SignedFace::from_coords(&[1, 0]).unwrap();
        assert_eq!(
            m.faces_intersect(&[a, b]).unwrap(),
            Some(SignedFace::from_coords(&[1, 1]).unwrap())
        );

        let c = SignedFace::from_coords(&[0, -1]).unwrap();
        assert_eq!(m.faces_intersect(&[a, c]).unwrap(), None);

        assert_eq!(m.faces_intersect(&[a, a]).unwrap(), Some(a));

        let alien = SignedFace::from_coords(&[0, 1, 1]).unwrap();
        assert_eq!(m.faces_intersect(&[alien]), Err(DanzerError::MixedComplexes));
    }

    #[test]
    fn triple_intersection() {
        // Three faces of M(triangle-boundary-ish): use the full triangle.
        let tri = poset_of(&simplex(3).unwrap());
        let m = mirror(&tri).unwrap();
        // Edges {x_3 = 1}-type: zeros on the three 2-element supports.
        let a = SignedFace::from_coords(&[0, 0, 1]).unwrap();
        let b = SignedFace::from_coords(&[0, 1, 0]).unwrap();
        let c = SignedFace::from_coords(&[1, 0, 0]).unwrap();
        let g = m.faces_intersect(&[a, b, c]).unwrap().unwrap();
        assert_eq!(g, SignedFace::from_coords(&[1, 1, 1]).unwrap());
        // Faces disagreeing on a shared nonzero coordinate never meet.
        let d = SignedFace::from_coords(&[-1, 0, 0]).unwrap();
        assert_eq!(m.faces_intersect(&[a, c, d]).unwrap(), None);
        // Without a conflict the corner survives even with three inputs.
        assert_eq!(
            m.faces_intersect(&[a, b, d]).unwrap(),
            Some(SignedFace::from_coords(&[-1, 1, 1]).unwrap())
        );
    }

    #[test]
    fn intersections_stay_in_complex() {
        let c4 = poset_of(&cycle(4).unwrap());
        let m = mirror(&c4).unwrap();
        let faces: Vec<SignedFace> = m.faces().collect();
        for (i, a) in faces.iter().enumerate() {
            for b in &faces[i..] {
                if let Some(g) = m.faces_intersect(&[*a, *b]).unwrap() {
                    assert!(m.contains(&g), "{a:?} ∩ {b:?} = {g:?} escaped");
                }
            }
        }
    }

    #[test]
    fn scaling_identity_examples() {
        for c in [
            points(1).unwrap(),
            simplex(2).unwrap(),
            cycle(4).unwrap(),
            cycle(5).unwrap(),
            cross_polytope_boundary(3).unwrap(),
        ] {
            assert!(verify_poset_f_danzer(&poset_of(&c)).unwrap());
        }
        assert!(verify_poset_f_danzer(&square_cell()).unwrap());
    }

    #[test]
    fn f_poly_scaling_examples() {
        let edge = poset_of(&simplex(2).unwrap());
        assert!(verify_f_poly_to_danzer(&edge).unwrap());
        let m = mirror(&edge).unwrap();
        assert_eq!(m.ftilde_poly(), RatPoly::from_ints(&[4, 4, 1]));

        let pt = poset_of(&points(1).unwrap());
        assert!(verify_f_poly_to_danzer(&pt).unwrap());

        let c5 = poset_of(&cycle(5).unwrap());
        assert!(verify_f_poly_to_danzer(&c5).unwrap());

        assert_eq!(
            verify_f_poly_to_danzer(&square_cell()),
            Err(DanzerError::CellVertexMismatch(2, 4))
        );
    }

    #[test]
    fn vertex_links_examples() {
        for c in [points(1).unwrap(), simplex(2).unwrap(), cycle(4).unwrap()] {
            let m = mirror(&poset_of(&c)).unwrap();
            assert!(m.vertex_links_match_base());
        }
    }

    #[test]
    fn parallel_class_sizes() {
        let c5 = poset_of(&cycle(5).unwrap());
        let m = mirror(&c5).unwrap();
        for f in m.base_supports.iter() {
            let count = m.faces().filter(|g| g.zero_pattern() == *f).count();
            assert_eq!(count, 1 << (5 - f.len()));
        }
        let total: usize = m
            .base_supports
            .iter()
            .map(|f| 1usize << (5 - f.len()))
            .sum();
        assert_eq!(m.face_count(), total);
    }

    #[test]
    fn signed_face_json() {
        let f = SignedFace::from_coords(&[0, 1, -1]).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, "[0,1,-1]");
        let back: SignedFace = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }
}
