//! Balanced proper colorings and the signed unused-color complex, with the
//! face-formation criterion and the closed-form face counts.
//!
//! Colors are `1..=D` in the public API and JSON; internally color `c`
//! occupies bit `c - 1` of a mask.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{ComplexError, FVector, SimplicialComplex};
use crate::vset::{binom, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BalancedError {
    #[error("coloring is not proper: vertices {0} and {1} share color {2}")]
    NotProper(u32, u32, u32),
    #[error("coloring is not balanced: {0} colors for a complex of dimension {1}")]
    NotBalanced(u32, i32),
    #[error("face {0} is not a face of the complex")]
    FaceNotPresent(VertexSet),
    #[error("color {0} outside 1..={1}")]
    ColorOutOfRange(u32, u32),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

type Result<T> = std::result::Result<T, BalancedError>;

/// A simplicial complex with a proper vertex coloring by `1..=D`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColoredComplex {
    complex: SimplicialComplex,
    colors: Vec<u32>,
    num_colors: u32,
}

impl ColoredComplex {
    pub fn new(complex: SimplicialComplex, colors: Vec<u32>, num_colors: u32) -> Result<Self> {
        if colors.len() != complex.n_vertices() as usize {
            return Err(BalancedError::ColorOutOfRange(0, num_colors));
        }
        for &c in &colors {
            if c == 0 || c > num_colors {
                return Err(BalancedError::ColorOutOfRange(c, num_colors));
            }
        }
        for f in complex.faces() {
            let vs = f.to_vec();
            for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    if colors[a as usize] == colors[b as usize] {
                        return Err(BalancedError::NotProper(a, b, colors[a as usize]));
                    }
                }
            }
        }
        Ok(ColoredComplex { complex, colors, num_colors })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn num_colors(&self) -> u32 {
        self.num_colors
    }

    pub fn color(&self, v: u32) -> u32 {
        self.colors[v as usize]
    }

    /// Balanced: exactly `dim + 1` colors. The empty complex is balanced for
    /// any color count.
    pub fn is_balanced(&self) -> bool {
        self.complex.dim() == -1 || self.num_colors as i32 == self.complex.dim() + 1
    }

    /// Colors used by the vertices of a face, as a bitmask.
    fn used_colors(&self, face: VertexSet) -> u32 {
        face.iter()
            .fold(0u32, |m, v| m | (1 << (self.colors[v as usize] - 1)))
    }

    /// Set of colors in `[D]` unused by the face; all of them for the empty
    /// face.
    pub fn unused_colors(&self, face: VertexSet) -> Result<u32> {
        if !self.complex.contains_face(face) {
            return Err(BalancedError::FaceNotPresent(face));
        }
        let all = if self.num_colors == 32 {
            u32::MAX
        } else {
            (1u32 << self.num_colors) - 1
        };
        Ok(all & !self.used_colors(face))
    }
}

/// Proper `(dim + 1)`-coloring by backtracking, or `None`.
pub fn find_balanced_coloring(c: &SimplicialComplex) -> Option<ColoredComplex> {
    let d = c.dim();
    if d == -1 {
        return ColoredComplex::new(c.clone(), Vec::new(), 0).ok();
    }
    let num_colors = (d + 1) as u32;
    let n = c.n_vertices() as usize;
    let mut adj = vec![VertexSet::EMPTY; n];
    for f in c.faces() {
        for v in f.iter() {
            adj[v as usize] = adj[v as usize].union(f.without(v));
        }
    }
    let mut colors = vec![0u32; n];
    fn assign(
        v: usize,
        n: usize,
        num_colors: u32,
        adj: &[VertexSet],
        colors: &mut Vec<u32>,
    ) -> bool {
        if v == n {
            return true;
        }
        for c in 1..=num_colors {
            let clash = adj[v]
                .iter()
                .any(|w| (w as usize) < v && colors[w as usize] == c);
            if !clash {
                colors[v] = c;
                if assign(v + 1, n, num_colors, adj, colors) {
                    return true;
                }
            }
        }
        colors[v] = 0;
        false
    }
    if assign(0, n, num_colors, &adj, &mut colors) {
        ColoredComplex::new(c.clone(), colors, num_colors).ok()
    } else {
        None
    }
}

/// A face `B ⊆ Q ⊆ C_F` of the signed unused-color complex: a face `F` of
/// the base complex, a nonempty set `Q` of colors unused by `F`, and the
/// positively signed subset `B`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct TripleFace {
    pub face: VertexSet,
    pub q: u32,
    pub b: u32,
}

impl TripleFace {
    pub fn card(&self) -> u32 {
        self.q.count_ones()
    }
}

impl Serialize for TripleFace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            #[serde(rename = "F")]
            f: Vec<u32>,
            #[serde(rename = "Q")]
            q: Vec<u32>,
            #[serde(rename = "B")]
            b: Vec<u32>,
        }
        let bits = |m: u32| (0..32).filter(|i| m & (1 << i) != 0).map(|i| i + 1).collect();
        Repr { f: self.face.to_vec(), q: bits(self.q), b: bits(self.b) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TripleFace {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            #[serde(rename = "F")]
            f: Vec<u32>,
            #[serde(rename = "Q")]
            q: Vec<u32>,
            #[serde(rename = "B")]
            b: Vec<u32>,
        }
        let r = Repr::deserialize(d)?;
        let mask = |v: &[u32]| v.iter().fold(0u32, |m, &c| m | (1 << (c - 1)));
        Ok(TripleFace { face: VertexSet::from_slice(&r.f), q: mask(&r.q), b: mask(&r.b) })
    }
}

/// The signed unused-color complex of a balanced colored complex: all formal
/// triples `B ⊆ Q ⊆ C_F` with `Q` nonempty.
#[derive(Clone, Debug)]
pub struct SignedColorComplex {
    colored: ColoredComplex,
    cells: Vec<TripleFace>,
    vertices: Vec<TripleFace>,
    vertex_index: BTreeMap<TripleFace, usize>,
}

pub fn signed_unused_color_complex(g: &ColoredComplex) -> Result<SignedColorComplex> {
    if !g.is_balanced() {
        return Err(BalancedError::NotBalanced(g.num_colors(), g.complex().dim()));
    }
    SignedColorComplex::build(g.clone())
}

impl SignedColorComplex {
    /// Builds the triple complex for any proper coloring, balanced or not;
    /// the balancedness gate lives in [`signed_unused_color_complex`].
    pub fn build(colored: ColoredComplex) -> Result<Self> {
        let mut cells = Vec::new();
        for face in colored.complex().faces() {
            let unused = colored.unused_colors(face)?;
            let mut q = unused;
            // Iterate nonempty submasks of the unused-color set.
            while q != 0 {
                let mut b = q;
                loop {
                    cells.push(TripleFace { face, q, b });
                    if b == 0 {
                        break;
                    }
                    b = (b - 1) & q;
                }
                q = (q - 1) & unused;
            }
        }
        cells.sort();
        let vertices: Vec<TripleFace> = cells.iter().copied().filter(|t| t.card() == 1).collect();
        let vertex_index = vertices
            .iter()
            .enumerate()
            .map(|(i, &t)| (t, i))
            .collect();
        Ok(SignedColorComplex { colored, cells, vertices, vertex_index })
    }

    pub fn colored(&self) -> &ColoredComplex {
        &self.colored
    }

    pub fn num_colors(&self) -> u32 {
        self.colored.num_colors()
    }

    pub fn cells(&self) -> &[TripleFace] {
        &self.cells
    }

    pub fn vertices(&self) -> &[TripleFace] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_id(&self, t: &TripleFace) -> Option<usize> {
        self.vertex_index.get(t).copied()
    }

    /// Positive sign means `B = Q`.
    pub fn vertex_sign(&self, id: usize) -> bool {
        let t = self.vertices[id];
        t.b == t.q
    }

    /// The `|Q|` vertices carried by a cell, one per color with the sign
    /// inherited from `B`.
    pub fn natural_vertices(&self, t: &TripleFace) -> Vec<usize> {
        let mut out = Vec::with_capacity(t.card() as usize);
        let mut q = t.q;
        while q != 0 {
            let bit = q & q.wrapping_neg();
            let v = TripleFace { face: t.face, q: bit, b: t.b & bit };
            out.push(self.vertex_index[&v]);
            q &= q - 1;
        }
        out
    }

    /// Face incidence `(B1 ⊆ Q1 ⊆ C_F1) <= (B2 ⊆ Q2 ⊆ C_F2)`:
    /// `F1 ⊇ F2`, `B1 ⊆ B2`, and `Q1 \ B1 ⊆ Q2 \ B2`.
    pub fn face_le(&self, t1: &TripleFace, t2: &TripleFace) -> bool {
        t2.face.is_subset(t1.face)
            && t1.b & !t2.b == 0
            && (t1.q & !t1.b) & !(t2.q & !t2.b) == 0
    }

    /// Face counts `(1, f_0, ..)` with `f_{k-1}` the number of triples with
    /// `|Q| = k`.
    pub fn f_vector(&self) -> FVector {
        let top = self.cells.iter().map(|t| t.card()).max().unwrap_or(0);
        let mut counts = vec![0u64; top as usize + 1];
        counts[0] = 1;
        for t in &self.cells {
            counts[t.card() as usize] += 1;
        }
        FVector(counts)
    }

    /// Whether a collection of vertices forms a face: the underlying base
    /// faces intersect, or they do not and the unused-color sets cover all
    /// of `[D]`.
    pub fn vertices_form_face(&self, ids: &[usize]) -> bool {
        if ids.is_empty() {
            return true;
        }
        let all_colors = if self.num_colors() == 32 {
            u32::MAX
        } else {
            (1u32 << self.num_colors()) - 1
        };
        let mut meet = self.vertices[ids[0]].face;
        let mut cover = 0u32;
        for &i in ids {
            let t = self.vertices[i];
            meet = meet.intersection(t.face);
            cover |= self
                .colored
                .unused_colors(t.face)
                .expect("vertex faces are faces");
        }
        !meet.is_empty() || cover == all_colors
    }

    /// Oracle for [`Self::vertices_form_face`] following the union
    /// construction: the spanned triple must sit over the meet of the base
    /// faces, whose unused-color set must be exactly the union of the
    /// vertices' unused-color sets. Callers restrict to distinct-color,
    /// sign-consistent collections.
    pub fn vertices_form_face_bruteforce(&self, ids: &[usize]) -> bool {
        if ids.is_empty() {
            return true;
        }
        let mut meet = self.vertices[ids[0]].face;
        let mut cover = 0u32;
        let mut q = 0u32;
        let mut b = 0u32;
        for &i in ids {
            let t = self.vertices[i];
            meet = meet.intersection(t.face);
            cover |= self.colored.unused_colors(t.face).expect("valid vertex");
            q |= t.q;
            b |= t.b;
        }
        let c_meet = match self.colored.unused_colors(meet) {
            Ok(c) => c,
            Err(_) => return false,
        };
        c_meet == cover && q & !c_meet == 0 && b & !q == 0
    }
}

/// Closed-form face counts of the signed unused-color complex:
/// `f_{k-1} = 2^k Σ_{j=k}^{D} f_{D-j-1}(Γ) C(j, k)`, with `f_{-1} = 1`
/// prepended.
pub fn dgamma_fvector_formula(f: &FVector, num_colors: u32) -> FVector {
    let d = num_colors as usize;
    let mut out = vec![1u64];
    for k in 1..=d {
        let mut acc: u128 = 0;
        for j in k..=d {
            // f_{D-j-1}(Γ) = entry (D - j) of the f-vector, 0 out of range.
            let idx = d - j;
            acc += f.count(idx) as u128 * binom(j as u64, k as u64);
        }
        out.push((acc << k) as u64);
    }
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    FVector(out)
}
