//! Tchebyshev triangulation of cell complexes, its closed-form face counts,
//! the F-polynomial compatibility check, and the one-sided variant over
//! signed unused-color complexes.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::balanced::SignedColorComplex;
use crate::complex::{FVector, SimplicialComplex};
use crate::poly::{f_poly, tcheb_transform, rat};
use crate::poset::CellPoset;
use crate::vset::{binom, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubdivideError {
    #[error("order is not a permutation of the ground set")]
    BadOrder,
    #[error("ground set of {0} elements is too large to triangulate")]
    GroundTooLarge(usize),
}

type Result<T> = std::result::Result<T, SubdivideError>;

/// A vertex of a Tchebyshev triangulation: `(u, Some(v))` is the midpoint of
/// the pair `{u, v}`, `(u, None)` is the original vertex `u` (the second
/// slot holds the virtual top element).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct TchebVertex {
    pub u: u32,
    pub v: Option<u32>,
}

/// Explicit face list of a Tchebyshev triangulation. Faces are stored as
/// sorted vertex-index sets; for non-simplicial input the list need not be
/// closed under subsets.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TchebComplex {
    pub n_base: u32,
    pub vertices: Vec<TchebVertex>,
    pub faces: Vec<Vec<u32>>,
}

impl TchebComplex {
    /// Face counts `(1, f_0, f_1, ..)` including the empty face.
    pub fn f_vector(&self) -> FVector {
        let top = self.faces.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut counts = vec![0u64; top + 1];
        counts[0] = 1;
        for f in &self.faces {
            counts[f.len()] += 1;
        }
        FVector(counts)
    }

    /// Reinterprets the face list as a simplicial complex when it is closed
    /// under subsets (always the case for simplicial input).
    pub fn as_simplicial(&self) -> Option<SimplicialComplex> {
        if self.vertices.len() > 64 {
            return None;
        }
        let faces: BTreeSet<VertexSet> = self
            .faces
            .iter()
            .map(|f| VertexSet::from_slice(f))
            .collect();
        for f in &faces {
            for s in f.subsets() {
                if !s.is_empty() && !faces.contains(&s) {
                    return None;
                }
            }
        }
        SimplicialComplex::from_faces(self.vertices.len() as u32, faces).ok()
    }

    /// Vertex supports of the faces, as index sets; the poset view used to
    /// mirror a triangulation.
    pub fn face_poset(&self) -> CellPoset {
        use crate::poset::{PosetElement, PosetKind};
        let elements: Vec<PosetElement> = self
            .faces
            .iter()
            .enumerate()
            .map(|(i, f)| PosetElement {
                id: i as u32,
                dim: f.len() as u32 - 1,
                support: VertexSet::from_slice(f),
            })
            .collect();
        let mut covers = Vec::new();
        for (i, a) in self.faces.iter().enumerate() {
            for (j, b) in self.faces.iter().enumerate() {
                if a.len() + 1 == b.len()
                    && VertexSet::from_slice(a).is_subset(VertexSet::from_slice(b))
                {
                    covers.push((i as u32, j as u32));
                }
            }
        }
        CellPoset::new(
            PosetKind::General,
            self.vertices.len() as u32,
            elements,
            covers,
        )
        .expect("triangulation face poset is valid")
    }
}

struct TchebEnumerator<'a> {
    /// Rank of each base vertex under the chosen linear order.
    rank: Vec<u32>,
    /// Distinct cell supports.
    supports: Vec<u64>,
    support_set: BTreeSet<u64>,
    pair_ok: Box<dyn Fn(u32, u32) -> bool + 'a>,
}

impl<'a> TchebEnumerator<'a> {
    fn run(&self) -> (Vec<TchebVertex>, Vec<Vec<u32>>) {
        let n = self.rank.len() as u32;
        let top_rank = n; // rank of the virtual top element
        // Candidate pairs: midpoints (u, v) with u < v in the order and
        // {u, v} inside some cell, plus one original vertex (u, TOP) per u.
        let mut cand: Vec<(TchebVertex, u32, u32, u64)> = Vec::new(); // (vertex, rank_v, rank_u, mask)
        for u in 0..n {
            for v in 0..n {
                if u == v || self.rank[u as usize] >= self.rank[v as usize] {
                    continue;
                }
                let mask = (1u64 << u) | (1u64 << v);
                if self.supports.iter().any(|s| mask & !s == 0) && (self.pair_ok)(u, v) {
                    cand.push((
                        TchebVertex { u, v: Some(v) },
                        self.rank[v as usize],
                        self.rank[u as usize],
                        mask,
                    ));
                }
            }
            cand.push((
                TchebVertex { u, v: None },
                top_rank,
                self.rank[u as usize],
                1u64 << u,
            ));
        }
        cand.sort_by_key(|&(_, rv, ru, _)| (rv, ru));
        let vertices: Vec<TchebVertex> = cand.iter().map(|c| c.0).collect();

        let mut faces: Vec<Vec<u32>> = Vec::new();
        // Depth-first extension; the chain condition only constrains
        // consecutive pairs and the union must stay inside some cell.
        let mut stack: Vec<(usize, Vec<u32>, u64)> = (0..cand.len())
            .map(|i| (i, vec![i as u32], cand[i].3))
            .collect();
        while let Some((last, face, union)) = stack.pop() {
            if self.support_set.contains(&union) {
                faces.push(face.clone());
            }
            let (lv, lrv, _, _) = cand[last];
            for (next, &(nv, nrv, nru, nmask)) in cand.iter().enumerate().skip(last + 1) {
                if nrv <= lrv {
                    continue;
                }
                let chain_ok = lv.u == nv.u || lrv <= nru;
                if !chain_ok {
                    continue;
                }
                let bigger = union | nmask;
                if !self.supports.iter().any(|s| bigger & !s == 0) {
                    continue;
                }
                let mut f2 = face.clone();
                f2.push(next as u32);
                stack.push((next, f2, bigger));
            }
        }
        faces.sort();
        (vertices, faces)
    }
}

/// Tchebyshev triangulation of a cell poset under an explicit linear order
/// on the ground set.
pub fn tcheb_triangulate(p: &CellPoset, order: &[u32]) -> Result<TchebComplex> {
    let n = p.n_ground() as usize;
    if order.len() != n {
        return Err(SubdivideError::BadOrder);
    }
    let mut rank = vec![u32::MAX; n];
    for (r, &v) in order.iter().enumerate() {
        if v as usize >= n || rank[v as usize] != u32::MAX {
            return Err(SubdivideError::BadOrder);
        }
        rank[v as usize] = r as u32;
    }
    let supports: Vec<u64> = p.supports().into_iter().map(|s| s.mask()).collect();
    let support_set: BTreeSet<u64> = supports.iter().copied().collect();
    let en = TchebEnumerator {
        rank,
        supports,
        support_set,
        pair_ok: Box::new(|_, _| true),
    };
    let (vertices, faces) = en.run();
    Ok(TchebComplex { n_base: p.n_ground(), vertices, faces })
}

/// Closed-form Tchebyshev face counts
/// `f_{k-1}(T(A)) = Σ_{j=k}^{2k} c_j 2^{2k-j-1} (C(k,2k-j) + C(k-1,2k-j))`,
/// where `c_j` counts cells with `j` vertices (for a simplicial complex this
/// is the f-vector).
pub fn tcheb_fvector_formula(f: &FVector) -> FVector {
    let top = f.len() - 1;
    let mut out = vec![1u64];
    for k in 1..=top {
        let mut acc = rat(0, 1);
        for j in k..=(2 * k).min(top) {
            let weight = binom(k as u64, (2 * k - j) as u64)
                + binom(k as u64 - 1, (2 * k - j) as u64);
            let pow2 = 2i64 * k as i64 - j as i64 - 1;
            let scale = if pow2 >= 0 {
                rat(2i64.pow(pow2 as u32), 1)
            } else {
                rat(1, 2)
            };
            acc += scale * rat(f.0[j] as i64 * weight as i64, 1);
        }
        assert!(acc.is_integer());
        out.push(i64::try_from(acc.to_integer()).expect("desk-scale count") as u64);
    }
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    FVector(out)
}

/// Cross-checks the closed-form Tchebyshev counts against direct
/// triangulations for several vertex orders, and the transform identity
/// `T(F_A)(x) = F_{T(A)}(x)`. Counts are read off support cardinalities,
/// which coincide with the f-vector for simplicial input.
pub fn verify_tcheb_f_compat(p: &CellPoset, orders: usize, seed: u64) -> Result<bool> {
    let counts = p.stilde_counts();
    let formula = tcheb_fvector_formula(&counts);
    let lhs = tcheb_transform(&f_poly(&counts));
    let rhs = f_poly(&formula);
    if lhs != rhs {
        return Ok(false);
    }
    let n = p.n_ground();
    let mut state = seed ^ 0x9e37_79b9_7f4a_7c15;
    for i in 0..orders.max(1) {
        let order = if i == 0 {
            (0..n).collect::<Vec<_>>()
        } else {
            shuffled(n, &mut state)
        };
        let t = tcheb_triangulate(p, &order)?;
        if t.f_vector() != formula {
            return Ok(false);
        }
    }
    Ok(true)
}

fn shuffled(n: u32, state: &mut u64) -> Vec<u32> {
    let mut v: Vec<u32> = (0..n).collect();
    for i in (1..v.len()).rev() {
        // xorshift64*
        *state ^= *state << 13;
        *state ^= *state >> 7;
        *state ^= *state << 17;
        let j = (*state % (i as u64 + 1)) as usize;
        v.swap(i, j);
    }
    v
}

/// One-sided interval complex of a signed unused-color complex: the
/// Tchebyshev construction in which a midpoint `(u, v)` is admitted only
/// when the two vertices carry the same sign.
pub fn one_sided_interval_complex(d: &SignedColorComplex) -> Result<TchebComplex> {
    let n = d.vertex_count();
    if n > 64 {
        return Err(SubdivideError::GroundTooLarge(n));
    }
    let supports: Vec<u64> = d
        .cells()
        .iter()
        .map(|c| {
            d.natural_vertices(c)
                .iter()
                .fold(0u64, |m, &i| m | (1u64 << i))
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let support_set: BTreeSet<u64> = supports.iter().copied().collect();
    let en = TchebEnumerator {
        rank: (0..n as u32).collect(),
        supports,
        support_set,
        pair_ok: Box::new(move |u, v| d.vertex_sign(u as usize) == d.vertex_sign(v as usize)),
    };
    let (vertices, faces) = en.run();
    Ok(TchebComplex { n_base: n as u32, vertices, faces })
}

/// `dim T(A) + 1` equals the maximum support cardinality of `A`.
pub fn tcheb_dim_matches_max_support(p: &CellPoset, t: &TchebComplex) -> bool {
    let max_support = p
        .elements()
        .iter()
        .map(|e| e.support.len() as usize)
        .max()
        .unwrap_or(0);
    let top = t.faces.iter().map(|f| f.len()).max().unwrap_or(0);
    top == max_support
}

/// Alternating face-count sum, `Σ (-1)^k f_{k-1}` over nonempty faces.
pub fn euler_characteristic(f: &FVector) -> i64 {
    f.0.iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| if i % 2 == 1 { c as i64 } else { -(c as i64) })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{cycle, simplex};
    use crate::poset::square_cell;

    fn asc(n: u32) -> Vec<u32> {
        (0..n).collect()
    }

    #[test]
    fn triangulate_examples() {
        let edge = CellPoset::from_simplicial(&simplex(2).unwrap());
        let t = tcheb_triangulate(&edge, &asc(2)).unwrap();
        assert_eq!(t.f_vector().0, vec![1, 3, 2]);
        let t_rev = tcheb_triangulate(&edge, &[1, 0]).unwrap();
        assert_eq!(t_rev.f_vector().0, vec![1, 3, 2]);

        let tri = CellPoset::from_simplicial(&simplex(3).unwrap());
        let t = tcheb_triangulate(&tri, &asc(3)).unwrap();
        assert_eq!(t.f_vector().0, vec![1, 6, 9, 4]);

        let pt = CellPoset::from_simplicial(&crate::complex::points(1).unwrap());
        let t = tcheb_triangulate(&pt, &asc(1)).unwrap();
        assert_eq!(t.f_vector().0, vec![1, 1]);

        assert_eq!(
            tcheb_triangulate(&edge, &[0, 0]),
            Err(SubdivideError::BadOrder)
        );
    }

    #[test]
    fn formula_examples() {
        assert_eq!(tcheb_fvector_formula(&FVector(vec![1, 2, 1])).0, vec![1, 3, 2]);
        assert_eq!(
            tcheb_fvector_formula(&FVector(vec![1, 3, 3, 1])).0,
            vec![1, 6, 9, 4]
        );
        assert_eq!(tcheb_fvector_formula(&FVector(vec![1, 1])).0, vec![1, 1]);
    }

    #[test]
    fn square_cell_counts_use_support_sizes() {
        let sq = square_cell();
        let t = tcheb_triangulate(&sq, &asc(4)).unwrap();
        assert_eq!(t.f_vector().0, vec![1, 8, 9, 8, 8]);
        assert_eq!(
            tcheb_fvector_formula(&sq.stilde_counts()).0,
            vec![1, 8, 9, 8, 8]
        );
        assert!(tcheb_dim_matches_max_support(&sq, &t));
    }

    #[test]
    fn f_compat_examples() {
        for c in [simplex(2).unwrap(), simplex(3).unwrap(), cycle(5).unwrap()] {
            let p = CellPoset::from_simplicial(&c);
            assert!(verify_tcheb_f_compat(&p, 3, 7).unwrap());
        }
        assert!(verify_tcheb_f_compat(&square_cell(), 3, 7).unwrap());
    }

    #[test]
    fn one_sided_examples() {
        use crate::balanced::{signed_unused_color_complex, ColoredComplex};
        use crate::complex::SimplicialComplex;

        // A single colored vertex: two signed points that never share a
        // cell, so no midpoints arise.
        let g = ColoredComplex::new(crate::complex::points(1).unwrap(), vec![1], 1).unwrap();
        let d = signed_unused_color_complex(&g).unwrap();
        let t = one_sided_interval_complex(&d).unwrap();
        assert_eq!(t.f_vector().0, vec![1, 2]);
        assert_eq!(t.vertices.len(), 2);

        // The empty complex with two colors: four signed color vertices;
        // same-sign pairs inside the two-color cells become midpoints.
        let g = ColoredComplex::new(SimplicialComplex::empty(0), vec![], 2).unwrap();
        let d = signed_unused_color_complex(&g).unwrap();
        assert_eq!(d.vertex_count(), 4);
        let t = one_sided_interval_complex(&d).unwrap();
        let midpoints = t.vertices.iter().filter(|v| v.v.is_some()).count();
        assert_eq!(midpoints, 2);
        assert_eq!(t.f_vector().0, vec![1, 6, 4]);

        // No colors at all: the signed complex is empty and so is the
        // triangulation.
        let g = ColoredComplex::new(SimplicialComplex::empty(0), vec![], 0).unwrap();
        let d = signed_unused_color_complex(&g).unwrap();
        let t = one_sided_interval_complex(&d).unwrap();
        assert_eq!(t.f_vector().0, vec![1]);
        assert!(t.faces.is_empty());
    }

    #[test]
    fn simplicial_output_is_subset_closed() {
        for c in [simplex(3).unwrap(), cycle(5).unwrap()] {
            let p = CellPoset::from_simplicial(&c);
            let t = tcheb_triangulate(&p, &asc(c.n_vertices())).unwrap();
            let s = t.as_simplicial().expect("closed for simplicial input");
            assert_eq!(s.f_vector(), t.f_vector());
            assert_eq!(
                euler_characteristic(&t.f_vector()),
                c.euler_characteristic()
            );
        }
    }
}
