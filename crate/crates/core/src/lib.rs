//! Exact-arithmetic combinatorics of simplicial and cell complexes: face
//! vectors and their transforms, gamma vectors through inverted Chebyshev
//! expansions, Tchebyshev triangulations, mirror (Danzer) complexes, signed
//! unused-color complexes, and Boolean decompositions. Every identity is
//! checked exactly over the rationals; nothing is ever rounded.

pub mod balanced;
pub mod booldecomp;
pub mod complex;
pub mod danzer;
pub mod poly;
pub mod poset;
pub mod subdivide;
pub mod vset;

pub use balanced::{
    dgamma_fvector_formula, find_balanced_coloring, signed_unused_color_complex, BalancedError,
    ColoredComplex, SignedColorComplex, TripleFace,
};
pub use booldecomp::{
    build_boolean, compressed_complex, edge_subdiv_genbool, glue_boolean, is_f_vector,
    verify_boolean, BooleanDecomposition, DecompError, GenBoolPiece, GlueOutput, SubdivisionCase,
    VertexPartition,
};
pub use complex::{
    cross_polytope_boundary, cycle, points, simplex, simplex_boundary, suspension, ComplexError,
    FVector, SimplicialComplex,
};
pub use danzer::{
    mirror, verify_f_poly_to_danzer, verify_poset_f_danzer, DanzerError, MirrorComplex,
    SignedFace,
};
pub use poly::{
    chebyshev_t, f_poly, f_polynomial, gamma_recursion_check, link_h_inequality, rat, rat_int,
    tcheb_transform, PolyError, RatPoly, SymmetricHVector,
};
pub use poset::{
    antichain, boolean_poset, chain, cubical_barycentric_fvector, square_cell,
    verify_interval_tcheb, CellPoset, IntervalElement, IntervalPoset, PosetElement, PosetError,
    PosetKind,
};
pub use subdivide::{
    one_sided_interval_complex, tcheb_fvector_formula, tcheb_triangulate, verify_tcheb_f_compat,
    SubdivideError, TchebComplex, TchebVertex,
};
pub use vset::VertexSet;
