//! Boolean decompositions of simplicial complexes, compressed complexes,
//! the Kruskal–Katona test, gluing, and the generalized decomposition an
//! edge subdivision produces.
//!
//! A decomposition `(S, d)` lays out its ground set as the vertices of `S`
//! followed by the Boolean elements `1..=d` (element `j` has label
//! `|V(S)| + j - 1`), and presents the complex as
//! `{F ∪ G : F ∈ S, G ⊆ [d - 2|F|]}`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{ComplexError, FVector, SimplicialComplex};
use crate::vset::{binom, VertexSet, MAX_GROUND};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecompError {
    #[error("dim S = {0} is too large for the Boolean parameter d = {1}")]
    DimensionTooLarge(i32, u32),
    #[error("the generated face family is not closed under subsets")]
    NotAComplex,
    #[error("vertex partition does not split the ground set as |V(S)| + d")]
    BadPartition,
    #[error("{0:?} is not the f-vector of any simplicial complex")]
    NotAnFVector(Vec<u64>),
    #[error("decompositions are incompatible: {0}")]
    IncompatibleDecompositions(String),
    #[error("face {0} is not an edge of the complex")]
    NotAnEdge(VertexSet),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

type Result<T> = std::result::Result<T, DecompError>;

/// A Boolean decomposition `(S, d)` in the canonical ground layout.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BooleanDecomposition {
    pub s: SimplicialComplex,
    pub d: u32,
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    #[serde(rename = "S")]
    s: SimplicialComplex,
    d: u32,
    vertex_partition: VertexPartition,
}

impl Serialize for BooleanDecomposition {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        DecompositionJson {
            s: self.s.clone(),
            d: self.d,
            vertex_partition: VertexPartition::canonical(self.s.n_vertices(), self.d),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for BooleanDecomposition {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let r = DecompositionJson::deserialize(de)?;
        let canon = VertexPartition::canonical(r.s.n_vertices(), r.d);
        if r.vertex_partition != canon {
            return Err(serde::de::Error::custom(
                "only the canonical vertex partition is supported in serialized form",
            ));
        }
        Ok(BooleanDecomposition { s: r.s, d: r.d })
    }
}

impl BooleanDecomposition {
    /// Ground label of Boolean element `j` (1-based).
    pub fn boolean_label(&self, j: u32) -> u32 {
        self.s.n_vertices() + j - 1
    }

    pub fn ground_size(&self) -> u32 {
        self.s.n_vertices() + self.d
    }

    /// Boolean element index of a ground label, if it lies in the Boolean
    /// part.
    pub fn boolean_index(&self, label: u32) -> Option<u32> {
        (label >= self.s.n_vertices() && label < self.ground_size())
            .then(|| label - self.s.n_vertices() + 1)
    }

    /// All faces `F ∪ G` of the decomposed complex, in the canonical layout.
    pub fn faces(&self) -> BTreeSet<VertexSet> {
        let ns = self.s.n_vertices();
        let mut out = BTreeSet::new();
        for f in self.s.faces() {
            let bound = self.d as i64 - 2 * f.len() as i64;
            let avail: Vec<u32> = (0..bound.max(0) as u32).map(|j| ns + j).collect();
            for g in VertexSet::from_slice(&avail).subsets() {
                out.insert(f.union(g));
            }
        }
        out
    }
}

/// Builds `{F ∪ G : F ∈ S, G ⊆ [d - 2|F|]}` and checks it is a complex.
pub fn build_boolean(s: &SimplicialComplex, d: u32) -> Result<SimplicialComplex> {
    if s.dim() > d as i32 / 2 - 1 {
        return Err(DecompError::DimensionTooLarge(s.dim(), d));
    }
    let dec = BooleanDecomposition { s: s.clone(), d };
    if dec.ground_size() > MAX_GROUND {
        return Err(DecompError::Complex(ComplexError::GroundSetTooLarge(
            dec.ground_size(),
        )));
    }
    let faces = dec.faces();
    for f in &faces {
        for sub in f.subsets() {
            if !faces.contains(&sub) {
                return Err(DecompError::NotAComplex);
            }
        }
    }
    Ok(SimplicialComplex::from_faces(dec.ground_size(), faces)?)
}

/// A vertex partition of a complex into the `S` part and the Boolean part,
/// in order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VertexPartition {
    pub s_vertices: Vec<u32>,
    pub boolean_vertices: Vec<u32>,
}

impl VertexPartition {
    /// The identity partition for the canonical layout.
    pub fn canonical(s_count: u32, d: u32) -> Self {
        VertexPartition {
            s_vertices: (0..s_count).collect(),
            boolean_vertices: (s_count..s_count + d).collect(),
        }
    }
}

/// Whether `gamma` equals `{F ∪ G : F ∈ S, G ⊆ [d - 2|F|]}` exactly as a
/// face set, under the supplied vertex partition.
pub fn verify_boolean(
    gamma: &SimplicialComplex,
    s: &SimplicialComplex,
    d: u32,
    partition: &VertexPartition,
) -> Result<bool> {
    let ns = s.n_vertices();
    if partition.s_vertices.len() != ns as usize
        || partition.boolean_vertices.len() != d as usize
    {
        return Err(DecompError::BadPartition);
    }
    let mut seen = BTreeSet::new();
    let mut relabel = vec![u32::MAX; gamma.n_vertices() as usize];
    for (slot, &v) in partition
        .s_vertices
        .iter()
        .chain(partition.boolean_vertices.iter())
        .enumerate()
    {
        if v >= gamma.n_vertices() || !seen.insert(v) {
            return Err(DecompError::BadPartition);
        }
        relabel[v as usize] = slot as u32;
    }
    if relabel.contains(&u32::MAX) {
        return Err(DecompError::BadPartition);
    }
    let dec = BooleanDecomposition { s: s.clone(), d };
    let relabeled: BTreeSet<VertexSet> = gamma
        .faces()
        .into_iter()
        .map(|f| {
            VertexSet::from_slice(&f.iter().map(|v| relabel[v as usize]).collect::<Vec<_>>())
        })
        .collect();
    Ok(relabeled == dec.faces())
}

/// Colex-first compressed complex realizing a valid f-vector: level `k`
/// takes the first `f_{k-1}` sets of `k` vertices in colexicographic order.
pub fn compressed_complex(f: &FVector) -> Result<SimplicialComplex> {
    if !is_f_vector(&f.0) {
        return Err(DecompError::NotAnFVector(f.0.clone()));
    }
    let n = f.count(1) as u32;
    let mut faces = Vec::new();
    for (k, &count) in f.0.iter().enumerate().skip(1) {
        faces.extend(VertexSet::k_subsets(n, k as u32).take(count as usize));
    }
    Ok(SimplicialComplex::from_faces(n, faces)?)
}

/// Cascade (colex) representation of `m` at level `k`:
/// `m = C(a_k, k) + C(a_{k-1}, k-1) + ..` with strictly decreasing `a_i`.
fn cascade(m: u64, k: u64) -> Vec<(u64, u64)> {
    let mut rep = Vec::new();
    let mut rem = m as u128;
    let mut level = k;
    while rem > 0 && level >= 1 {
        let mut a = level - 1;
        while binom(a + 1, level) <= rem {
            a += 1;
        }
        rep.push((a, level));
        rem -= binom(a, level);
        level -= 1;
    }
    debug_assert_eq!(rem, 0);
    rep
}

/// Kruskal–Katona test: is the sequence the f-vector of some simplicial
/// complex?
pub fn is_f_vector(f: &[u64]) -> bool {
    if f.is_empty() || f[0] != 1 {
        return false;
    }
    if f.len() == 1 {
        return true; // the empty complex
    }
    if *f.last().unwrap() == 0 {
        return false;
    }
    for k in 1..f.len() - 1 {
        let bound: u128 = cascade(f[k], k as u64)
            .into_iter()
            .map(|(a, i)| binom(a, i + 1))
            .sum();
        if f[k + 1] as u128 > bound {
            return false;
        }
    }
    true
}

/// Output of [`glue_boolean`]: the glued complex, its decomposition, and the
/// label of the fresh cone vertex inside the new `S`.
#[derive(Clone, Debug)]
pub struct GlueOutput {
    pub complex: SimplicialComplex,
    pub dec: BooleanDecomposition,
    pub u: u32,
}

/// Glues two decomposed complexes along the cone construction at the core
/// level: the new core is `S1 ∪ (S2 * u)` for a fresh vertex `u`, rebuilt
/// with the first complex's Boolean parameter and reverified.
pub fn glue_boolean(
    gamma1: &SimplicialComplex,
    dec1: &BooleanDecomposition,
    gamma2: &SimplicialComplex,
    dec2: &BooleanDecomposition,
) -> Result<GlueOutput> {
    let canon1 = VertexPartition::canonical(dec1.s.n_vertices(), dec1.d);
    if !verify_boolean(gamma1, &dec1.s, dec1.d, &canon1)? {
        return Err(DecompError::IncompatibleDecompositions(
            "first decomposition does not present its complex".into(),
        ));
    }
    let canon2 = VertexPartition::canonical(dec2.s.n_vertices(), dec2.d);
    if !verify_boolean(gamma2, &dec2.s, dec2.d, &canon2)? {
        return Err(DecompError::IncompatibleDecompositions(
            "second decomposition does not present its complex".into(),
        ));
    }
    if gamma2.dim() != gamma1.dim() - 1 && gamma2.dim() != -1 {
        return Err(DecompError::IncompatibleDecompositions(format!(
            "dim {} vs {}: the second complex must sit one dimension below",
            gamma2.dim(),
            gamma1.dim()
        )));
    }
    let f1 = gamma1.f_vector();
    let f2 = gamma2.f_vector();
    if (0..f2.len()).any(|i| f2.count(i) > f1.count(i)) {
        return Err(DecompError::IncompatibleDecompositions(
            "second complex has more faces than the first in some dimension".into(),
        ));
    }
    // New core: S1 on its own labels, S2 shifted above it, then the cone
    // vertex u on top.
    let ns1 = dec1.s.n_vertices();
    let ns2 = dec2.s.n_vertices();
    let u = ns1 + ns2;
    let mut core_faces: Vec<VertexSet> = dec1.s.facets().collect();
    for f in dec2.s.facets() {
        let shifted = VertexSet::from_mask(f.mask() << ns1);
        core_faces.push(shifted.with(u));
    }
    let core = SimplicialComplex::from_faces(u + 1, core_faces)?;
    let complex = build_boolean(&core, dec1.d)?;
    let dec = BooleanDecomposition { s: core.clone(), d: dec1.d };
    let canon = VertexPartition::canonical(core.n_vertices(), dec1.d);
    if !verify_boolean(&complex, &core, dec1.d, &canon)? {
        return Err(DecompError::IncompatibleDecompositions(
            "glued decomposition failed verification".into(),
        ));
    }
    Ok(GlueOutput { complex, dec, u })
}

/// How the subdivided edge meets the decomposition's ground layout.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum SubdivisionCase {
    /// Both endpoints Boolean.
    BooleanPair,
    /// One endpoint in the core, one Boolean.
    Mixed,
    /// Both endpoints in the core.
    CorePair,
}

/// Constraint on the Boolean subset `G` inside one piece.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum BooleanRule {
    /// All `G ⊆ [d - 2|F| + bound_delta]`.
    Any { bound_delta: i32 },
    /// `G` must not contain both listed elements.
    NotBoth { a: u32, b: u32 },
    /// `G` avoids the element, within the shifted bound; the stratum exists
    /// only when the element lies inside the bound.
    Without { elem: u32, bound_delta: i32 },
    /// `G` contains `elem` and avoids `avoid`, within the shifted bound.
    WithWithout { elem: u32, avoid: Option<u32>, bound_delta: i32 },
}

/// One stratum of a generalized Boolean decomposition: an explicit list of
/// core faces, a Boolean rule, an optional extra vertex, and the faces the
/// stratum contributes.
#[derive(Clone, Debug, Serialize)]
pub struct GenBoolPiece {
    pub label: String,
    pub s_faces: Vec<VertexSet>,
    pub rule: BooleanRule,
    pub adds_subdivision_vertex: bool,
    pub faces: BTreeSet<VertexSet>,
}

impl GenBoolPiece {
    fn materialize(
        label: &str,
        dec: &BooleanDecomposition,
        s_faces: Vec<VertexSet>,
        rule: BooleanRule,
        v: Option<u32>,
    ) -> Self {
        let ns = dec.s.n_vertices();
        let mut faces = BTreeSet::new();
        for &f in &s_faces {
            let base_bound = dec.d as i64 - 2 * f.len() as i64;
            let (bound, must, avoid, not_both) = match rule {
                BooleanRule::Any { bound_delta } => {
                    (base_bound + bound_delta as i64, None, None, None)
                }
                BooleanRule::NotBoth { a, b } => (base_bound, None, None, Some((a, b))),
                BooleanRule::Without { elem, bound_delta } => {
                    (base_bound + bound_delta as i64, None, Some(elem), None)
                }
                BooleanRule::WithWithout { elem, avoid, bound_delta } => {
                    (base_bound + bound_delta as i64, Some(elem), avoid, None)
                }
            };
            if bound < 0 {
                continue;
            }
            if let Some(m) = must {
                if m as i64 > bound {
                    continue;
                }
            }
            // The avoided element indexes the subdivided edge; faces whose
            // Boolean range misses it entirely contribute no doubled faces.
            if let Some(av) = avoid {
                if av as i64 > bound {
                    continue;
                }
            }
            let avail: Vec<u32> = (1..=bound as u32)
                .filter(|&j| Some(j) != must && Some(j) != avoid)
                .map(|j| ns + j - 1)
                .collect();
            for g in VertexSet::from_slice(&avail).subsets() {
                if let Some((a, b)) = not_both {
                    if g.contains(ns + a - 1) && g.contains(ns + b - 1) {
                        continue;
                    }
                }
                let mut face = f.union(g);
                if let Some(m) = must {
                    face = face.with(ns + m - 1);
                }
                if let Some(v) = v {
                    face = face.with(v);
                }
                faces.insert(face);
            }
        }
        GenBoolPiece {
            label: label.to_string(),
            s_faces,
            rule,
            adds_subdivision_vertex: v.is_some(),
            faces,
        }
    }
}

/// The pieces an edge subdivision induces on a Boolean-decomposed complex,
/// by the three cases of the edge's position; the pieces partition the faces
/// of the subdivided complex exactly.
pub fn edge_subdiv_genbool(
    gamma: &SimplicialComplex,
    dec: &BooleanDecomposition,
    e: VertexSet,
) -> Result<(SubdivisionCase, Vec<GenBoolPiece>)> {
    let canon = VertexPartition::canonical(dec.s.n_vertices(), dec.d);
    if !verify_boolean(gamma, &dec.s, dec.d, &canon)? {
        return Err(DecompError::IncompatibleDecompositions(
            "decomposition does not present the complex".into(),
        ));
    }
    if e.len() != 2 || !gamma.contains_face(e) {
        return Err(DecompError::NotAnEdge(e));
    }
    let subdivided = gamma.edge_subdivision(e)?;
    let v = gamma.n_vertices();
    let ends = e.to_vec();
    let s_faces: Vec<VertexSet> = dec.s.faces().into_iter().collect();
    let all_with = |pred: &dyn Fn(&VertexSet) -> bool| -> Vec<VertexSet> {
        s_faces.iter().copied().filter(|f| pred(f)).collect()
    };

    let (case, pieces) = match (dec.boolean_index(ends[0]), dec.boolean_index(ends[1])) {
        (Some(a), Some(b)) => {
            let (a, b) = (a.min(b), a.max(b));
            let pieces = vec![
                GenBoolPiece::materialize(
                    "unaffected: G not containing both subdivided elements",
                    dec,
                    s_faces.clone(),
                    BooleanRule::NotBoth { a, b },
                    None,
                ),
                GenBoolPiece::materialize(
                    "doubled: v with G avoiding the larger element",
                    dec,
                    s_faces.clone(),
                    BooleanRule::Without { elem: b, bound_delta: 0 },
                    Some(v),
                ),
                GenBoolPiece::materialize(
                    "doubled: v with G through the larger element, avoiding the smaller",
                    dec,
                    s_faces.clone(),
                    BooleanRule::WithWithout { elem: b, avoid: Some(a), bound_delta: 0 },
                    Some(v),
                ),
            ];
            (SubdivisionCase::BooleanPair, pieces)
        }
        (None, None) => {
            let (s_end, t_end) = (ends[0], ends[1]);
            let pieces = vec![
                GenBoolPiece::materialize(
                    "unaffected: core faces not containing the edge",
                    dec,
                    all_with(&|f| !e.is_subset(*f)),
                    BooleanRule::Any { bound_delta: 0 },
                    None,
                ),
                GenBoolPiece::materialize(
                    "link stratum: v over faces avoiding the edge, bound shifted by -4",
                    dec,
                    all_with(&|f| f.intersection(e).is_empty() && s_faces.contains(&f.union(e))),
                    BooleanRule::Any { bound_delta: -4 },
                    Some(v),
                ),
                GenBoolPiece::materialize(
                    "star stratum at the first endpoint, bound shifted by -2",
                    dec,
                    all_with(&|f| {
                        f.contains(s_end) && !f.contains(t_end) && s_faces.contains(&f.with(t_end))
                    }),
                    BooleanRule::Any { bound_delta: -2 },
                    Some(v),
                ),
                GenBoolPiece::materialize(
                    "star stratum at the second endpoint, bound shifted by -2",
                    dec,
                    all_with(&|f| {
                        f.contains(t_end) && !f.contains(s_end) && s_faces.contains(&f.with(s_end))
                    }),
                    BooleanRule::Any { bound_delta: -2 },
                    Some(v),
                ),
            ];
            (SubdivisionCase::CorePair, pieces)
        }
        (core_b, bool_b) => {
            let (s_end, b) = if let Some(b) = bool_b {
                (ends[0], b)
            } else {
                (ends[1], core_b.expect("one endpoint is Boolean"))
            };
            let pieces = vec![
                GenBoolPiece::materialize(
                    "unaffected: faces missing the core endpoint or the Boolean element",
                    dec,
                    s_faces.clone(),
                    BooleanRule::Any { bound_delta: 0 },
                    None,
                ),
                GenBoolPiece::materialize(
                    "star stratum: v over faces through the core endpoint, G avoiding b",
                    dec,
                    all_with(&|f| f.contains(s_end)),
                    BooleanRule::Without { elem: b, bound_delta: 0 },
                    Some(v),
                ),
                GenBoolPiece::materialize(
                    "link stratum: v with G through b, bound shifted by -2",
                    dec,
                    all_with(&|f| !f.contains(s_end) && s_faces.contains(&f.with(s_end))),
                    BooleanRule::WithWithout { elem: b, avoid: None, bound_delta: -2 },
                    Some(v),
                ),
                GenBoolPiece::materialize(
                    "link stratum: v with G avoiding b, bound shifted by -2",
                    dec,
                    all_with(&|f| !f.contains(s_end) && s_faces.contains(&f.with(s_end))),
                    BooleanRule::Without { elem: b, bound_delta: -2 },
                    Some(v),
                ),
            ];
            (SubdivisionCase::Mixed, pieces)
        }
    };

    // The mixed-case "unaffected" piece must drop faces containing the edge.
    let pieces = finalize_pieces(case, pieces, e);
    verify_partition(&subdivided, &pieces)?;
    Ok((case, pieces))
}

fn finalize_pieces(
    case: SubdivisionCase,
    mut pieces: Vec<GenBoolPiece>,
    e: VertexSet,
) -> Vec<GenBoolPiece> {
    match case {
        SubdivisionCase::Mixed => {
            pieces[0].faces.retain(|f| !e.is_subset(*f));
            pieces
        }
        _ => pieces,
    }
}

fn verify_partition(subdivided: &SimplicialComplex, pieces: &[GenBoolPiece]) -> Result<()> {
    let mut union: BTreeSet<VertexSet> = BTreeSet::new();
    let mut total = 0usize;
    for p in pieces {
        total += p.faces.len();
        union.extend(p.faces.iter().copied());
    }
    if total != union.len() {
        return Err(DecompError::IncompatibleDecompositions(
            "pieces overlap".into(),
        ));
    }
    if union != subdivided.faces() {
        return Err(DecompError::IncompatibleDecompositions(
            "pieces do not cover the subdivided complex".into(),
        ));
    }
    Ok(())
}
