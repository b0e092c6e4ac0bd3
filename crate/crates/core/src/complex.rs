//! Facet-represented abstract simplicial complexes and their basic transforms.
//!
//! Complexes live on a dense ground set `0..n` with at most 64 labels. The
//! empty complex `{∅}` is represented by a single empty facet; the void
//! complex is not constructible.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::vset::{binom, VertexSet, MAX_GROUND};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("ground set of size {0} exceeds the ceiling of {MAX_GROUND}")]
    GroundSetTooLarge(u32),
    #[error("vertex {0} is outside the ground set 0..{1}")]
    VertexOutOfRange(u32, u32),
    #[error("face {0} is not a face of the complex")]
    FaceNotPresent(VertexSet),
    #[error("{0} is not an edge")]
    NotAnEdge(VertexSet),
    #[error("complex is not pure")]
    NotPure,
    #[error("bad generator parameter: {0}")]
    BadParameter(String),
    #[error("invalid complex JSON: {0}")]
    Parse(String),
}

type Result<T> = std::result::Result<T, ComplexError>;

/// An abstract simplicial complex stored by its facets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialComplex {
    n: u32,
    facets: BTreeSet<VertexSet>,
}

impl SimplicialComplex {
    /// Builds a complex from an arbitrary family of faces; non-maximal faces
    /// are pruned. An empty family yields the empty complex `{∅}`.
    pub fn from_faces<I>(n: u32, faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        if n > MAX_GROUND {
            return Err(ComplexError::GroundSetTooLarge(n));
        }
        let mut all: Vec<VertexSet> = faces.into_iter().collect();
        for f in &all {
            if let Some(v) = f.max_elem() {
                if v >= n {
                    return Err(ComplexError::VertexOutOfRange(v, n));
                }
            }
        }
        all.sort_by_key(|f| std::cmp::Reverse(f.len()));
        let mut facets: BTreeSet<VertexSet> = BTreeSet::new();
        'next: for f in all {
            for g in &facets {
                if f.is_subset(*g) {
                    continue 'next;
                }
            }
            facets.insert(f);
        }
        if facets.is_empty() {
            facets.insert(VertexSet::EMPTY);
        }
        Ok(SimplicialComplex { n, facets })
    }

    /// The empty complex `{∅}` on a ground set of size `n`.
    pub fn empty(n: u32) -> Self {
        SimplicialComplex::from_faces(n, std::iter::empty()).expect("empty complex")
    }

    pub fn n_vertices(&self) -> u32 {
        self.n
    }

    pub fn facets(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.facets.iter().copied()
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Dimension; `-1` for the empty complex.
    pub fn dim(&self) -> i32 {
        self.facets
            .iter()
            .map(|f| f.len() as i32 - 1)
            .max()
            .unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        let mut lens = self.facets.iter().map(|f| f.len());
        let first = lens.next().unwrap_or(0);
        lens.all(|l| l == first)
    }

    pub fn contains_face(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// Full closure of the facets under subsets, including the empty face.
    pub fn faces(&self) -> BTreeSet<VertexSet> {
        let mut out = BTreeSet::new();
        for f in &self.facets {
            for s in f.subsets() {
                out.insert(s);
            }
        }
        out
    }

    /// Closure grouped by dimension; the empty face sits at dimension `-1`.
    pub fn faces_by_dim(&self) -> BTreeMap<i32, BTreeSet<VertexSet>> {
        let mut out: BTreeMap<i32, BTreeSet<VertexSet>> = BTreeMap::new();
        for f in self.faces() {
            out.entry(f.len() as i32 - 1).or_default().insert(f);
        }
        out
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![0u64; (self.dim() + 2) as usize];
        for f in self.faces() {
            counts[f.len() as usize] += 1;
        }
        FVector(counts)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .0
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| if i % 2 == 1 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Vertices that appear in at least one face.
    pub fn present_vertices(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    /// Link of a face, relabeled onto a fresh contiguous ground set. The
    /// returned map sends new labels to the original ones.
    pub fn link(&self, face: VertexSet) -> Result<(SimplicialComplex, Vec<u32>)> {
        if !self.contains_face(face) {
            return Err(ComplexError::FaceNotPresent(face));
        }
        let mut raw: Vec<VertexSet> = Vec::new();
        for f in &self.facets {
            if face.is_subset(*f) {
                raw.push(f.difference(face));
            }
        }
        let ground = raw.iter().fold(VertexSet::EMPTY, |acc, f| acc.union(*f));
        let map: Vec<u32> = ground.iter().collect();
        let relabel: BTreeMap<u32, u32> = map
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new as u32))
            .collect();
        let faces = raw.into_iter().map(|f| {
            VertexSet::from_slice(&f.iter().map(|v| relabel[&v]).collect::<Vec<_>>())
        });
        let lk = SimplicialComplex::from_faces(map.len() as u32, faces)?;
        Ok((lk, map))
    }

    /// All faces not containing `v`, on the same ground set.
    pub fn antistar(&self, v: u32) -> SimplicialComplex {
        let faces = self.facets.iter().map(|f| f.without(v));
        SimplicialComplex::from_faces(self.n, faces).expect("antistar stays valid")
    }

    /// Join on the disjoint union of ground sets; the second factor's labels
    /// are shifted above the first factor's ground set.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let n = self.n + other.n;
        if n > MAX_GROUND {
            return Err(ComplexError::GroundSetTooLarge(n));
        }
        let mut faces = Vec::new();
        for a in &self.facets {
            for b in &other.facets {
                faces.push(a.union(VertexSet::from_mask(b.mask() << self.n)));
            }
        }
        SimplicialComplex::from_faces(n, faces)
    }

    /// Stellar subdivision of the edge `e`; the subdividing vertex receives
    /// the fresh top label (the old ground-set size).
    pub fn edge_subdivision(&self, e: VertexSet) -> Result<SimplicialComplex> {
        if e.len() != 2 {
            return Err(ComplexError::NotAnEdge(e));
        }
        if !self.contains_face(e) {
            return Err(ComplexError::FaceNotPresent(e));
        }
        let n = self.n + 1;
        if n > MAX_GROUND {
            return Err(ComplexError::GroundSetTooLarge(n));
        }
        let v = self.n;
        let ab: Vec<u32> = e.to_vec();
        let (a, b) = (ab[0], ab[1]);
        let mut faces = Vec::new();
        for f in &self.facets {
            if e.is_subset(*f) {
                faces.push(f.without(a).with(v));
                faces.push(f.without(b).with(v));
            } else {
                faces.push(*f);
            }
        }
        SimplicialComplex::from_faces(n, faces)
    }

    fn skeleton_adjacency(&self) -> Vec<VertexSet> {
        let mut adj = vec![VertexSet::EMPTY; self.n as usize];
        for f in &self.facets {
            for v in f.iter() {
                adj[v as usize] = adj[v as usize].union(f.without(v));
            }
        }
        adj
    }

    /// True iff every clique of the 1-skeleton is a face.
    pub fn is_flag(&self) -> bool {
        let adj = self.skeleton_adjacency();
        let verts = self.present_vertices();
        // Grow cliques vertex by vertex; each clique must already be a face.
        let mut stack: Vec<VertexSet> = verts.iter().map(VertexSet::singleton).collect();
        while let Some(clique) = stack.pop() {
            let top = clique.max_elem().unwrap();
            let common = clique
                .iter()
                .fold(verts, |acc, v| acc.intersection(adj[v as usize]));
            for w in common.iter() {
                if w <= top {
                    continue;
                }
                let bigger = clique.with(w);
                if !self.contains_face(bigger) {
                    return false;
                }
                stack.push(bigger);
            }
        }
        true
    }

    fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    /// Recursive vertex decomposability test for pure complexes.
    pub fn is_vertex_decomposable(&self) -> Result<bool> {
        if !self.is_pure() {
            return Err(ComplexError::NotPure);
        }
        Ok(self.vd_inner())
    }

    fn vd_inner(&self) -> bool {
        if self.is_simplex() {
            return true;
        }
        for v in self.present_vertices().iter() {
            let del = self.antistar(v);
            // Shedding: every facet of the deletion is a facet of the complex.
            if !del.facets.iter().all(|f| self.facets.contains(f)) {
                continue;
            }
            let (lk, _) = self.link(VertexSet::singleton(v)).expect("vertex present");
            if !del.is_pure() || !lk.is_pure() {
                continue;
            }
            if del.vd_inner() && lk.vd_inner() {
                return true;
            }
        }
        false
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("complex serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| ComplexError::Parse(e.to_string()))
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut facets: Vec<Vec<u32>> = self.facets.iter().map(|f| f.to_vec()).collect();
        facets.sort();
        #[derive(Serialize)]
        struct Repr {
            n: u32,
            facets: Vec<Vec<u32>>,
        }
        Repr { n: self.n, facets }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: u32,
            facets: Vec<Vec<u32>>,
        }
        let r = Repr::deserialize(d)?;
        SimplicialComplex::from_faces(r.n, r.facets.iter().map(|f| VertexSet::from_slice(f)))
            .map_err(serde::de::Error::custom)
    }
}

/// Face-count vector `(f_{-1}, f_0, .., f_{D-1})` with `f_{-1} = 1`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn new(entries: Vec<u64>) -> Self {
        debug_assert_eq!(entries.first(), Some(&1));
        FVector(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `f_{k-1}`, i.e. the count of faces with `k` vertices; zero out of range.
    pub fn count(&self, k: usize) -> u64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn total_faces(&self) -> u64 {
        self.0.iter().sum()
    }

    /// The h-vector via `h_k = Σ_i (-1)^{k-i} C(d-i, k-i) f_{i-1}`.
    pub fn h_vector(&self) -> Vec<i64> {
        let d = self.0.len() as u64 - 1;
        (0..=d)
            .map(|k| {
                let mut acc: i128 = 0;
                for i in 0..=k {
                    let term = binom(d - i, k - i) as i128 * self.0[i as usize] as i128;
                    if (k - i) % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
                acc as i64
            })
            .collect()
    }

    /// Inverse of [`FVector::h_vector`]: `f_{k-1} = Σ_i C(d-i, k-i) h_i`.
    pub fn from_h_vector(h: &[i64]) -> FVector {
        let d = h.len() as u64 - 1;
        let entries = (0..=d)
            .map(|k| {
                let mut acc: i128 = 0;
                for i in 0..=k {
                    acc += binom(d - i, k - i) as i128 * h[i as usize] as i128;
                }
                u64::try_from(acc).expect("f-vector entries are nonnegative")
            })
            .collect();
        FVector(entries)
    }
}

/// Cycle `C_n` on `n >= 3` vertices.
pub fn cycle(n: u32) -> Result<SimplicialComplex> {
    if n < 3 {
        return Err(ComplexError::BadParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let faces = (0..n).map(|i| VertexSet::from_slice(&[i, (i + 1) % n]));
    SimplicialComplex::from_faces(n, faces)
}

/// Boundary of the `n`-dimensional cross-polytope: antipodal pairs
/// `{2i, 2i+1}`, facets choose one vertex from each pair.
pub fn cross_polytope_boundary(n: u32) -> Result<SimplicialComplex> {
    if n < 1 {
        return Err(ComplexError::BadParameter("cross polytope needs n >= 1".into()));
    }
    if 2 * n > MAX_GROUND {
        return Err(ComplexError::GroundSetTooLarge(2 * n));
    }
    let mut faces = Vec::with_capacity(1 << n);
    for signs in 0..(1u64 << n) {
        let f = VertexSet::from_slice(
            &(0..n)
                .map(|i| 2 * i + ((signs >> i) & 1) as u32)
                .collect::<Vec<_>>(),
        );
        faces.push(f);
    }
    SimplicialComplex::from_faces(2 * n, faces)
}

/// Full simplex on `n >= 1` vertices.
pub fn simplex(n: u32) -> Result<SimplicialComplex> {
    if n < 1 {
        return Err(ComplexError::BadParameter("simplex needs n >= 1".into()));
    }
    if n > MAX_GROUND {
        return Err(ComplexError::GroundSetTooLarge(n));
    }
    SimplicialComplex::from_faces(n, [full_mask(n)])
}

fn full_mask(n: u32) -> VertexSet {
    VertexSet::from_mask(if n == 64 { u64::MAX } else { (1u64 << n) - 1 })
}

/// Boundary of the full simplex on `n >= 2` vertices.
pub fn simplex_boundary(n: u32) -> Result<SimplicialComplex> {
    if n < 2 {
        return Err(ComplexError::BadParameter("simplex boundary needs n >= 2".into()));
    }
    let full = full_mask(n);
    SimplicialComplex::from_faces(n, full.iter().map(|v| full.without(v)))
}

/// `n` isolated vertices.
pub fn points(n: u32) -> Result<SimplicialComplex> {
    if n < 1 {
        return Err(ComplexError::BadParameter("points needs n >= 1".into()));
    }
    if n > MAX_GROUND {
        return Err(ComplexError::GroundSetTooLarge(n));
    }
    SimplicialComplex::from_faces(n, (0..n).map(VertexSet::singleton))
}

/// Suspension: join with two disjoint points.
pub fn suspension(c: &SimplicialComplex) -> Result<SimplicialComplex> {
    c.join(&points(2)?)
}
