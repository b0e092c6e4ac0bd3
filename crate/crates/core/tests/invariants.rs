//! Property tests over randomly generated complexes and polynomials.

use flagcomb::complex::{FVector, SimplicialComplex};
use flagcomb::poly::{rat_int, tcheb_transform, RatPoly};
use flagcomb::vset::VertexSet;
use flagcomb::{f_polynomial, subdivide};
use proptest::prelude::*;

/// A random complex on at most 7 vertices, built from random facet masks.
fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
    (1u32..=7, proptest::collection::vec(0u64..128, 0..6)).prop_map(|(n, masks)| {
        let cap = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        SimplicialComplex::from_faces(
            n,
            masks.into_iter().map(|m| VertexSet::from_mask(m & cap)),
        )
        .expect("masked faces fit the ground set")
    })
}

fn arb_int_poly() -> impl Strategy<Value = RatPoly> {
    proptest::collection::vec(-6i64..=6, 0..6).prop_map(|cs| RatPoly::from_ints(&cs))
}

proptest! {
    #[test]
    fn h_vector_round_trips(c in arb_complex()) {
        let f = c.f_vector();
        prop_assert_eq!(FVector::from_h_vector(&f.h_vector()), f);
    }

    #[test]
    fn join_multiplies_f_polynomials(a in arb_complex(), b in arb_complex()) {
        let j = a.join(&b).unwrap();
        let lhs = f_polynomial(&j.f_vector());
        let rhs = &f_polynomial(&a.f_vector()) * &f_polynomial(&b.f_vector());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn edge_subdivision_preserves_euler(c in arb_complex(), pick in any::<u64>()) {
        let edges: Vec<VertexSet> = c
            .faces()
            .into_iter()
            .filter(|f| f.len() == 2)
            .collect();
        if !edges.is_empty() {
            let e = edges[(pick % edges.len() as u64) as usize];
            let sub = c.edge_subdivision(e).unwrap();
            prop_assert_eq!(sub.euler_characteristic(), c.euler_characteristic());
        }
    }

    #[test]
    fn link_antistar_counting(c in arb_complex()) {
        // f_i(c) = f_i(antistar(v)) + f_{i-1}(link(v)) for every vertex.
        for v in c.present_vertices().iter() {
            let f = c.f_vector();
            let ast = c.antistar(v).f_vector();
            let (lk, _) = c.link(VertexSet::singleton(v)).unwrap();
            let lk_f = lk.f_vector();
            for i in 0..f.len() {
                let star_part = if i == 0 { 0 } else { lk_f.count(i - 1) };
                prop_assert_eq!(f.count(i), ast.count(i) + star_part);
            }
        }
    }

    #[test]
    fn tcheb_transform_is_linear(
        p in arb_int_poly(),
        q in arb_int_poly(),
        a in -5i64..=5,
        b in -5i64..=5,
    ) {
        let combo = &p.scale(&rat_int(a)) + &q.scale(&rat_int(b));
        let lhs = tcheb_transform(&combo);
        let rhs = &tcheb_transform(&p).scale(&rat_int(a)) + &tcheb_transform(&q).scale(&rat_int(b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn f_poly_special_values(c in arb_complex()) {
        let f = c.f_vector();
        let p = flagcomb::f_poly(&f);
        prop_assert_eq!(p.eval(&rat_int(1)), rat_int(1));
        prop_assert_eq!(p.eval(&rat_int(3)), rat_int(f.total_faces() as i64));
    }

    #[test]
    fn tcheb_formula_matches_direct_counts(c in arb_complex(), seed in any::<u64>()) {
        let p = flagcomb::CellPoset::from_simplicial(&c);
        prop_assert!(subdivide::verify_tcheb_f_compat(&p, 3, seed).unwrap());
    }

    #[test]
    fn join_of_flag_complexes_is_flag(a in arb_complex(), b in arb_complex()) {
        if a.is_flag() && b.is_flag() {
            prop_assert!(a.join(&b).unwrap().is_flag());
        }
    }
}
