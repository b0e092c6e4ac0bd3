//! Graded face posets of cell complexes, their duals, interval posets and
//! barycentric covers, order complexes, and the rank/support generating
//! functions with their indexing conventions.
//!
//! The empty face is never stored as an element; the simplicial convention
//! adjoins it at rank zero inside [`CellPoset::ftilde_poly`] only.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{ComplexError, FVector, SimplicialComplex};
use crate::poly::RatPoly;
use crate::vset::{binom, VertexSet, MAX_GROUND};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("poset is not pure")]
    NotPure,
    #[error("poset is not graded")]
    NotGraded,
    #[error("poset has a non-Boolean interval [{0}, {1}]")]
    NonBooleanIntervals(u32, u32),
    #[error("poset has {0} elements, exceeding the ground ceiling of {MAX_GROUND}")]
    TooManyElements(usize),
    #[error("invalid poset: {0}")]
    Invalid(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

type Result<T> = std::result::Result<T, PosetError>;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PosetKind {
    Simplicial,
    Cubical,
    General,
}

/// One element of a graded face poset.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PosetElement {
    pub id: u32,
    pub dim: u32,
    pub support: VertexSet,
}

/// A nonempty interval `[lo, hi]` of a source poset, identified by element ids.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct IntervalElement {
    pub lo: u32,
    pub hi: u32,
}

/// A graded poset of cells, each carrying a vertex support set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellPoset {
    kind: PosetKind,
    n_ground: u32,
    elements: Vec<PosetElement>,
    covers: BTreeSet<(u32, u32)>,
}

impl CellPoset {
    pub fn new(
        kind: PosetKind,
        n_ground: u32,
        elements: Vec<PosetElement>,
        covers: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self> {
        let covers: BTreeSet<(u32, u32)> = covers.into_iter().collect();
        let m = elements.len() as u32;
        for (i, e) in elements.iter().enumerate() {
            if e.id != i as u32 {
                return Err(PosetError::Invalid(format!(
                    "element ids must be 0..{m} in order, found {} at {i}",
                    e.id
                )));
            }
            if let Some(v) = e.support.max_elem() {
                if v >= n_ground {
                    return Err(PosetError::Invalid(format!(
                        "support vertex {v} outside ground 0..{n_ground}"
                    )));
                }
            }
        }
        for &(lo, hi) in &covers {
            if lo >= m || hi >= m {
                return Err(PosetError::Invalid(format!("cover ({lo},{hi}) out of range")));
            }
            let (a, b) = (&elements[lo as usize], &elements[hi as usize]);
            if b.dim != a.dim + 1 {
                return Err(PosetError::Invalid(format!(
                    "cover ({lo},{hi}) does not raise dim by one"
                )));
            }
            if !a.support.is_subset(b.support) {
                return Err(PosetError::Invalid(format!(
                    "cover ({lo},{hi}) is not support-monotone"
                )));
            }
        }
        Ok(CellPoset { kind, n_ground, elements, covers })
    }

    pub fn kind(&self) -> PosetKind {
        self.kind
    }

    pub fn n_ground(&self) -> u32 {
        self.n_ground
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[PosetElement] {
        &self.elements
    }

    pub fn covers(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.covers.iter().copied()
    }

    pub fn dim(&self) -> Option<u32> {
        self.elements.iter().map(|e| e.dim).max()
    }

    /// Distinct supports of all elements; the face set of the underlying
    /// cell complex, without the empty face.
    pub fn supports(&self) -> BTreeSet<VertexSet> {
        self.elements.iter().map(|e| e.support).collect()
    }

    /// `leq[a][b]` iff `a <= b`; transitive closure over the covers.
    pub fn leq_matrix(&self) -> Vec<Vec<bool>> {
        let m = self.elements.len();
        let mut leq = vec![vec![false; m]; m];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        // Process by decreasing dim so upper reachability is complete.
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(self.elements[i].dim));
        let mut ups: Vec<Vec<u32>> = vec![Vec::new(); m];
        for &(lo, hi) in &self.covers {
            ups[lo as usize].push(hi);
        }
        for &i in &order {
            let mut reach = vec![false; m];
            for &u in &ups[i] {
                reach[u as usize] = true;
                for (j, cell) in leq[u as usize].clone().into_iter().enumerate() {
                    if cell {
                        reach[j] = true;
                    }
                }
            }
            for (j, r) in reach.into_iter().enumerate() {
                if r {
                    leq[i][j] = true;
                }
            }
        }
        leq
    }

    /// Maximal elements (no upper cover).
    pub fn maximal(&self) -> Vec<u32> {
        let mut has_up = vec![false; self.elements.len()];
        for &(lo, _) in &self.covers {
            has_up[lo as usize] = true;
        }
        (0..self.elements.len() as u32)
            .filter(|&i| !has_up[i as usize])
            .collect()
    }

    pub fn is_pure(&self) -> bool {
        let maxdim = self.dim();
        self.maximal()
            .iter()
            .all(|&i| Some(self.elements[i as usize].dim) == maxdim)
    }

    /// Face poset of a simplicial complex: one element per nonempty face.
    pub fn from_simplicial(c: &SimplicialComplex) -> Self {
        let faces: Vec<VertexSet> = c.faces().into_iter().filter(|f| !f.is_empty()).collect();
        let index: BTreeMap<VertexSet, u32> = faces
            .iter()
            .enumerate()
            .map(|(i, &f)| (f, i as u32))
            .collect();
        let elements: Vec<PosetElement> = faces
            .iter()
            .enumerate()
            .map(|(i, &f)| PosetElement { id: i as u32, dim: f.len() - 1, support: f })
            .collect();
        let mut covers = Vec::new();
        for (&f, &i) in &index {
            for v in f.iter() {
                let sub = f.without(v);
                if !sub.is_empty() {
                    covers.push((index[&sub], i));
                }
            }
        }
        CellPoset::new(PosetKind::Simplicial, c.n_vertices(), elements, covers)
            .expect("face poset is valid")
    }

    /// Polar-style dual: a dim-`j` element per `(D-1-j)`-dimensional element,
    /// supported on the set of facets containing it. Requires purity.
    pub fn dual(&self) -> Result<CellPoset> {
        if !self.is_pure() {
            return Err(PosetError::NotPure);
        }
        let top = self.dim().ok_or_else(|| PosetError::Invalid("empty poset".into()))?;
        let facets = self.maximal();
        if facets.len() as u32 > MAX_GROUND {
            return Err(PosetError::TooManyElements(facets.len()));
        }
        let facet_slot: BTreeMap<u32, u32> = facets
            .iter()
            .enumerate()
            .map(|(s, &f)| (f, s as u32))
            .collect();
        let leq = self.leq_matrix();
        let elements: Vec<PosetElement> = self
            .elements
            .iter()
            .map(|e| {
                let over: Vec<u32> = facets
                    .iter()
                    .filter(|&&f| leq[e.id as usize][f as usize])
                    .map(|f| facet_slot[f])
                    .collect();
                PosetElement {
                    id: e.id,
                    dim: top - e.dim,
                    support: VertexSet::from_slice(&over),
                }
            })
            .collect();
        let covers = self.covers.iter().map(|&(lo, hi)| (hi, lo));
        CellPoset::new(PosetKind::General, facets.len() as u32, elements, covers)
    }

    /// Rank generating function. The simplicial convention adjoins the empty
    /// face at rank 0, so `f~_i = f_{i-1}`; the cubical and general
    /// conventions count by dimension with no empty face.
    pub fn ftilde_poly(&self) -> RatPoly {
        let shift = match self.kind {
            PosetKind::Simplicial => 1,
            PosetKind::Cubical | PosetKind::General => 0,
        };
        let top = self.elements.iter().map(|e| e.dim + shift).max().unwrap_or(0);
        let mut counts = vec![0i64; top as usize + 1];
        if shift == 1 {
            counts[0] = 1;
        }
        for e in &self.elements {
            counts[(e.dim + shift) as usize] += 1;
        }
        RatPoly::from_ints(&counts)
    }

    /// Generating function of elements by support cardinality; the empty
    /// face contributes the constant term 1.
    pub fn stilde_poly(&self) -> RatPoly {
        let top = self
            .elements
            .iter()
            .map(|e| e.support.len())
            .max()
            .unwrap_or(0);
        let mut counts = vec![0i64; top as usize + 1];
        counts[0] = 1;
        for e in &self.elements {
            counts[e.support.len() as usize] += 1;
        }
        RatPoly::from_ints(&counts)
    }

    /// Support-cardinality counts as an f-vector-shaped sequence
    /// `(s~_0 = 1, s~_1, ..)`. For a simplicial face poset this equals the
    /// f-vector of the underlying complex.
    pub fn stilde_counts(&self) -> FVector {
        let top = self
            .elements
            .iter()
            .map(|e| e.support.len())
            .max()
            .unwrap_or(0);
        let mut counts = vec![0u64; top as usize + 1];
        counts[0] = 1;
        for e in &self.elements {
            counts[e.support.len() as usize] += 1;
        }
        FVector(counts)
    }

    fn interval_pairs(&self) -> Vec<IntervalElement> {
        let leq = self.leq_matrix();
        let m = self.elements.len() as u32;
        let mut pairs = Vec::new();
        for lo in 0..m {
            for hi in 0..m {
                if leq[lo as usize][hi as usize] {
                    pairs.push(IntervalElement { lo, hi });
                }
            }
        }
        pairs.sort();
        pairs
    }

    /// Poset of nonempty intervals `[u, v]` ordered by containment; with
    /// `include_empty`, an empty-interval bottom is adjoined and all ranks
    /// shift up by one.
    pub fn interval_poset(&self, include_empty: bool) -> Result<IntervalPoset> {
        if include_empty && !self.is_dim_graded() {
            return Err(PosetError::NotGraded);
        }
        let leq = self.leq_matrix();
        let pairs = self.interval_pairs();
        let shift = u32::from(include_empty);
        let mut intervals: Vec<Option<IntervalElement>> = Vec::new();
        if include_empty {
            intervals.push(None);
        }
        intervals.extend(pairs.iter().copied().map(Some));
        let rank = |iv: IntervalElement| {
            self.elements[iv.hi as usize].dim - self.elements[iv.lo as usize].dim
        };
        let elements: Vec<PosetElement> = intervals
            .iter()
            .enumerate()
            .map(|(i, iv)| PosetElement {
                id: i as u32,
                dim: iv.map_or(0, |iv| rank(iv) + shift),
                support: iv.map_or(VertexSet::EMPTY, |iv| self.elements[iv.hi as usize].support),
            })
            .collect();
        let mut covers = Vec::new();
        let contains = |outer: IntervalElement, inner: IntervalElement| {
            leq[outer.lo as usize][inner.lo as usize] && leq[inner.hi as usize][outer.hi as usize]
        };
        for (i, a) in intervals.iter().enumerate() {
            for (j, b) in intervals.iter().enumerate() {
                match (a, b) {
                    (Some(a), Some(b)) => {
                        if contains(*b, *a) && rank(*b) == rank(*a) + 1 {
                            covers.push((i as u32, j as u32));
                        }
                    }
                    (None, Some(b))
                        if rank(*b) == 0 => {
                            covers.push((i as u32, j as u32));
                        }
                    _ => {}
                }
            }
        }
        let poset = CellPoset::new(PosetKind::General, self.n_ground, elements, covers)?;
        Ok(IntervalPoset { poset, intervals })
    }

    /// The dim fields form a rank function compatible with the covers. This
    /// holds for every validated poset by construction.
    pub fn is_dim_graded(&self) -> bool {
        self.covers.iter().all(|&(lo, hi)| {
            self.elements[hi as usize].dim == self.elements[lo as usize].dim + 1
        })
    }

    /// Order complex: vertices are elements, faces are chains.
    pub fn order_complex(&self) -> Result<SimplicialComplex> {
        let m = self.elements.len();
        if m as u32 > MAX_GROUND {
            return Err(PosetError::TooManyElements(m));
        }
        // Maximal chains = maximal paths in the Hasse diagram.
        let mut downs = vec![Vec::new(); m];
        let mut ups = vec![Vec::new(); m];
        for &(lo, hi) in &self.covers {
            ups[lo as usize].push(hi as usize);
            downs[hi as usize].push(lo as usize);
        }
        let mut chains: Vec<VertexSet> = Vec::new();
        let mut stack: Vec<(usize, VertexSet)> = (0..m)
            .filter(|&i| downs[i].is_empty())
            .map(|i| (i, VertexSet::singleton(i as u32)))
            .collect();
        while let Some((i, chain)) = stack.pop() {
            if ups[i].is_empty() {
                chains.push(chain);
            } else {
                for &j in &ups[i] {
                    stack.push((j, chain.with(j as u32)));
                }
            }
        }
        Ok(SimplicialComplex::from_faces(m as u32, chains)?)
    }

    fn interval_members(&self, leq: &[Vec<bool>], lo: u32, hi: u32) -> Vec<u32> {
        (0..self.elements.len() as u32)
            .filter(|&w| leq[lo as usize][w as usize] && leq[w as usize][hi as usize])
            .collect()
    }

    /// Every interval `[u, v]` is Boolean: it has exactly `2^(dim v - dim u)`
    /// elements and each subset of its atoms has a unique join inside it.
    pub fn has_boolean_intervals(&self) -> bool {
        let leq = self.leq_matrix();
        for a in self.elements.iter() {
            for b in self.elements.iter() {
                if !leq[a.id as usize][b.id as usize] {
                    continue;
                }
                let k = (b.dim - a.dim) as usize;
                let members = self.interval_members(&leq, a.id, b.id);
                if members.len() != 1usize << k {
                    return false;
                }
                let atoms: Vec<u32> = members
                    .iter()
                    .copied()
                    .filter(|&w| self.covers.contains(&(a.id, w)))
                    .collect();
                if atoms.len() != k {
                    return false;
                }
                let mut joins = BTreeSet::new();
                for sub in VertexSet::from_slice(
                    &(0..k as u32).collect::<Vec<_>>(),
                )
                .subsets()
                {
                    let chosen: Vec<u32> = sub.iter().map(|i| atoms[i as usize]).collect();
                    let ubs: Vec<u32> = members
                        .iter()
                        .copied()
                        .filter(|&w| chosen.iter().all(|&c| leq[c as usize][w as usize]))
                        .collect();
                    let minimal: Vec<u32> = ubs
                        .iter()
                        .copied()
                        .filter(|&w| {
                            ubs.iter()
                                .all(|&x| x == w || !leq[x as usize][w as usize])
                        })
                        .collect();
                    if minimal.len() != 1 {
                        return false;
                    }
                    joins.insert(minimal[0]);
                }
                if joins.len() != 1usize << k {
                    return false;
                }
            }
        }
        true
    }

    /// Barycentric cover: the poset of order relations `(u <= v)`, graded by
    /// rank difference; a cubical poset when the intervals are Boolean. The
    /// support of `(u <= v)` is the set of interval members, over the ground
    /// set of poset elements.
    pub fn barycentric_cover(&self) -> Result<CellPoset> {
        if !self.has_boolean_intervals() {
            return Err(PosetError::NonBooleanIntervals(0, 0));
        }
        let m = self.elements.len();
        if m as u32 > MAX_GROUND {
            return Err(PosetError::TooManyElements(m));
        }
        let leq = self.leq_matrix();
        let pairs = self.interval_pairs();
        let rank = |iv: &IntervalElement| {
            self.elements[iv.hi as usize].dim - self.elements[iv.lo as usize].dim
        };
        let elements: Vec<PosetElement> = pairs
            .iter()
            .enumerate()
            .map(|(i, iv)| PosetElement {
                id: i as u32,
                dim: rank(iv),
                support: VertexSet::from_slice(&self.interval_members(&leq, iv.lo, iv.hi)),
            })
            .collect();
        let mut covers = Vec::new();
        for (i, a) in pairs.iter().enumerate() {
            for (j, b) in pairs.iter().enumerate() {
                let contains = leq[b.lo as usize][a.lo as usize]
                    && leq[a.hi as usize][b.hi as usize];
                if contains && rank(b) == rank(a) + 1 {
                    covers.push((i as u32, j as u32));
                }
            }
        }
        CellPoset::new(PosetKind::Cubical, m as u32, elements, covers)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("poset serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| PosetError::Invalid(e.to_string()))
    }
}

impl Serialize for CellPoset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            kind: PosetKind,
            n_ground: u32,
            elements: &'a [PosetElement],
            covers: Vec<(u32, u32)>,
        }
        Repr {
            kind: self.kind,
            n_ground: self.n_ground,
            elements: &self.elements,
            covers: self.covers.iter().copied().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CellPoset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            kind: PosetKind,
            n_ground: u32,
            elements: Vec<PosetElement>,
            covers: Vec<(u32, u32)>,
        }
        let r = Repr::deserialize(d)?;
        CellPoset::new(r.kind, r.n_ground, r.elements, r.covers).map_err(serde::de::Error::custom)
    }
}

/// An interval poset together with the interval labels per element
/// (`None` marks the adjoined empty bottom).
#[derive(Clone, Debug)]
pub struct IntervalPoset {
    pub poset: CellPoset,
    pub intervals: Vec<Option<IntervalElement>>,
}

/// A chain of `n` elements with nested supports.
pub fn chain(n: u32) -> CellPoset {
    let elements = (0..n)
        .map(|i| PosetElement {
            id: i,
            dim: i,
            support: VertexSet::from_slice(&(0..=i).collect::<Vec<_>>()),
        })
        .collect();
    CellPoset::new(
        PosetKind::General,
        n.max(1),
        elements,
        (1..n).map(|i| (i - 1, i)),
    )
    .expect("chain is valid")
}

/// An antichain of `n` points.
pub fn antichain(n: u32) -> CellPoset {
    let elements = (0..n)
        .map(|i| PosetElement { id: i, dim: 0, support: VertexSet::singleton(i) })
        .collect();
    CellPoset::new(PosetKind::General, n, elements, std::iter::empty()).expect("antichain is valid")
}

/// The Boolean lattice of subsets of a `k`-set, with the empty subset as a
/// bottom element of rank 0.
pub fn boolean_poset(k: u32) -> CellPoset {
    let full: Vec<u32> = (0..k).collect();
    let subsets: Vec<VertexSet> = {
        let mut v: Vec<VertexSet> = VertexSet::from_slice(&full).subsets().collect();
        v.sort_by_key(|s| (s.len(), s.mask()));
        v
    };
    let index: BTreeMap<VertexSet, u32> = subsets
        .iter()
        .enumerate()
        .map(|(i, &s)| (s, i as u32))
        .collect();
    let elements: Vec<PosetElement> = subsets
        .iter()
        .enumerate()
        .map(|(i, &s)| PosetElement { id: i as u32, dim: s.len(), support: s })
        .collect();
    let mut covers = Vec::new();
    for (&s, &i) in &index {
        for v in s.iter() {
            covers.push((index[&s.without(v)], i));
        }
    }
    CellPoset::new(PosetKind::General, k, elements, covers).expect("boolean poset is valid")
}

/// Face poset of a single square 2-cell: four vertices, four edges, and one
/// cell supported on all four vertices.
pub fn square_cell() -> CellPoset {
    let v = |i: u32| PosetElement { id: i, dim: 0, support: VertexSet::singleton(i) };
    let mut elements: Vec<PosetElement> = (0..4).map(v).collect();
    let edges = [[0u32, 1], [1, 2], [2, 3], [0, 3]];
    for (k, e) in edges.iter().enumerate() {
        elements.push(PosetElement {
            id: 4 + k as u32,
            dim: 1,
            support: VertexSet::from_slice(e),
        });
    }
    elements.push(PosetElement {
        id: 8,
        dim: 2,
        support: VertexSet::from_slice(&[0, 1, 2, 3]),
    });
    let mut covers = Vec::new();
    for (k, e) in edges.iter().enumerate() {
        for &x in e {
            covers.push((x, 4 + k as u32));
        }
        covers.push((4 + k as u32, 8));
    }
    CellPoset::new(PosetKind::Cubical, 4, elements, covers).expect("square cell is valid")
}

/// Closed-form f-vector of the first cubical barycentric subdivision:
/// `f_k = Σ_{j>=k} C(j+1, k) f_j(S)`, indexed by dimension without the
/// empty face.
pub fn cubical_barycentric_fvector(f: &FVector) -> Vec<u64> {
    let top = f.len() - 1; // = D, number of vertices of a largest face
    (0..top)
        .map(|k| {
            (k..top)
                .map(|j| binom(j as u64 + 1, k as u64) * f.0[j + 1] as u128)
                .sum::<u128>() as u64
        })
        .collect()
}

/// Checks that the order complex of the interval poset has the f-vector
/// predicted by the Tchebyshev subdivision formula applied to the order
/// complex of the source poset.
pub fn verify_interval_tcheb(p: &CellPoset) -> Result<bool> {
    let direct = p.interval_poset(false)?.poset.order_complex()?.f_vector();
    let base = p.order_complex()?.f_vector();
    let formula = crate::subdivide::tcheb_fvector_formula(&base);
    Ok(direct == formula)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{cycle, cross_polytope_boundary, simplex};

    #[test]
    fn from_simplicial_examples() {
        let edge = CellPoset::from_simplicial(&simplex(2).unwrap());
        assert_eq!(edge.len(), 3);
        assert_eq!(edge.covers().count(), 2);

        let c5 = CellPoset::from_simplicial(&cycle(5).unwrap());
        assert_eq!(c5.len(), 10);
        assert_eq!(c5.covers().count(), 10);

        let tri = CellPoset::from_simplicial(&simplex(3).unwrap());
        assert_eq!(tri.len(), 7);
    }

    #[test]
    fn dual_examples() {
        let c5 = CellPoset::from_simplicial(&cycle(5).unwrap());
        let d = c5.dual().unwrap();
        assert_eq!(d.ftilde_poly(), RatPoly::from_ints(&[5, 5]));

        let oct = CellPoset::from_simplicial(&cross_polytope_boundary(3).unwrap());
        let d = oct.dual().unwrap();
        assert_eq!(d.ftilde_poly(), RatPoly::from_ints(&[8, 12, 6]));

        let edge = CellPoset::from_simplicial(&simplex(2).unwrap());
        let d = edge.dual().unwrap();
        assert_eq!(d.ftilde_poly(), RatPoly::from_ints(&[1, 2]));

        let mixed = CellPoset::from_simplicial(
            &SimplicialComplex::from_faces(
                3,
                [VertexSet::from_slice(&[0, 1]), VertexSet::singleton(2)],
            )
            .unwrap(),
        );
        assert_eq!(mixed.dual(), Err(PosetError::NotPure));
    }

    #[test]
    fn ftilde_examples() {
        let c5 = CellPoset::from_simplicial(&cycle(5).unwrap());
        assert_eq!(c5.ftilde_poly(), RatPoly::from_ints(&[1, 5, 5]));
        assert_eq!(square_cell().ftilde_poly(), RatPoly::from_ints(&[4, 4, 1]));
        let pt = CellPoset::from_simplicial(&crate::complex::points(1).unwrap());
        assert_eq!(pt.ftilde_poly(), RatPoly::from_ints(&[1, 1]));
    }

    #[test]
    fn stilde_examples() {
        let c5 = CellPoset::from_simplicial(&cycle(5).unwrap());
        assert_eq!(c5.stilde_poly(), c5.ftilde_poly());
        assert_eq!(
            square_cell().stilde_poly(),
            RatPoly::from_ints(&[1, 4, 4, 0, 1])
        );
        let pt = CellPoset::from_simplicial(&crate::complex::points(1).unwrap());
        assert_eq!(pt.stilde_poly(), RatPoly::from_ints(&[1, 1]));
    }

    #[test]
    fn interval_poset_examples() {
        let two = chain(2);
        let iv = two.interval_poset(false).unwrap();
        assert_eq!(iv.poset.len(), 3);
        let oc = iv.poset.order_complex().unwrap();
        assert_eq!(oc.f_vector().0, vec![1, 3, 2]);

        let a2 = antichain(2);
        let iv = a2.interval_poset(false).unwrap();
        assert_eq!(iv.poset.len(), 2);
        assert_eq!(iv.poset.covers().count(), 0);

        let b2 = boolean_poset(2);
        assert_eq!(b2.interval_poset(false).unwrap().poset.len(), 9);
    }

    #[test]
    fn interval_poset_with_empty_bottom() {
        let b2 = boolean_poset(2);
        let iv = b2.interval_poset(true).unwrap();
        assert_eq!(iv.poset.len(), 10);
        assert_eq!(iv.intervals[0], None);
        // The bottom sits below exactly the singleton intervals.
        let from_bottom = iv.poset.covers().filter(|&(lo, _)| lo == 0).count();
        assert_eq!(from_bottom, 4);
    }

    #[test]
    fn order_complex_examples() {
        let oc = chain(3).order_complex().unwrap();
        assert_eq!(oc.f_vector().0, vec![1, 3, 3, 1]);

        let edge_poset = CellPoset::from_simplicial(&simplex(2).unwrap());
        let oc = edge_poset.order_complex().unwrap();
        assert_eq!(oc.f_vector().0, vec![1, 3, 2]);

        let oc = antichain(4).order_complex().unwrap();
        assert_eq!(oc.f_vector().0, vec![1, 4]);
    }

    #[test]
    fn barycentric_cover_examples() {
        let edge_poset = CellPoset::from_simplicial(&simplex(2).unwrap());
        let k = edge_poset.barycentric_cover().unwrap();
        assert_eq!(k.ftilde_poly(), RatPoly::from_ints(&[3, 2]));

        let pt = CellPoset::from_simplicial(&crate::complex::points(1).unwrap());
        let k = pt.barycentric_cover().unwrap();
        assert_eq!(k.ftilde_poly(), RatPoly::from_ints(&[1]));

        let b2 = boolean_poset(2);
        let k = b2.barycentric_cover().unwrap();
        assert_eq!(k.len(), 9);
        assert_eq!(k.ftilde_poly(), RatPoly::from_ints(&[4, 4, 1]));
    }

    #[test]
    fn cubical_barycentric_examples() {
        assert_eq!(cubical_barycentric_fvector(&FVector(vec![1, 2, 1])), vec![3, 2]);
        assert_eq!(
            cubical_barycentric_fvector(&FVector(vec![1, 3, 3, 1])),
            vec![7, 9, 3]
        );
        assert_eq!(cubical_barycentric_fvector(&FVector(vec![1, 1])), vec![1]);
        // Euler characteristic of the cubical subdivision of the triangle.
        assert_eq!(7 - 9 + 3, 1);
    }

    #[test]
    fn interval_cardinality_is_pair_count() {
        for p in [chain(4), boolean_poset(2), CellPoset::from_simplicial(&cycle(4).unwrap())] {
            let leq = p.leq_matrix();
            let pairs = leq
                .iter()
                .map(|row| row.iter().filter(|&&b| b).count())
                .sum::<usize>();
            assert_eq!(p.interval_poset(false).unwrap().poset.len(), pairs);
        }
    }

    #[test]
    fn cubical_f_convention() {
        // f_K(t) = t * f~(K, t) + 1 for a cubical poset.
        let k = square_cell();
        let ft = k.ftilde_poly();
        let f_k = &(&RatPoly::x() * &ft) + &RatPoly::one();
        assert_eq!(f_k, RatPoly::from_ints(&[1, 4, 4, 1]));
    }

    #[test]
    fn poset_json_round_trip() {
        let p = square_cell();
        let s = p.to_json_string();
        let back = CellPoset::from_json_str(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.to_json_string(), s);
    }
}
