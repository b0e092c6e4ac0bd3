//! Cross-module identity checks on generated families of complexes.

use flagcomb::balanced::{dgamma_fvector_formula, signed_unused_color_complex};
use flagcomb::complex::{cross_polytope_boundary, cycle, simplex, suspension, SimplicialComplex};
use flagcomb::poly::{rat_int, tcheb_transform, SymmetricHVector};
use flagcomb::poset::{cubical_barycentric_fvector, CellPoset};
use flagcomb::vset::VertexSet;
use flagcomb::{find_balanced_coloring, mirror, verify_interval_tcheb, RatPoly};

/// Even-dimensional flag spheres: cycles, joins of cycles, cross-polytope
/// boundaries, and double suspensions (suspension once flips the h-degree
/// parity, so the suspension family is suspended twice).
fn even_spheres() -> Vec<(String, SimplicialComplex)> {
    let mut out: Vec<(String, SimplicialComplex)> = Vec::new();
    for n in 4..=10 {
        out.push((format!("C{n}"), cycle(n).unwrap()));
    }
    let c5 = cycle(5).unwrap();
    out.push(("C5*C5".into(), c5.join(&c5).unwrap()));
    out.push(("C5*C7".into(), c5.join(&cycle(7).unwrap()).unwrap()));
    out.push(("cross(2)".into(), cross_polytope_boundary(2).unwrap()));
    out.push(("cross(4)".into(), cross_polytope_boundary(4).unwrap()));
    let double_susp = |c: &SimplicialComplex| suspension(&suspension(c).unwrap()).unwrap();
    out.push(("ΣΣC6".into(), double_susp(&cycle(6).unwrap())));
    out.push(("ΣΣcross(2)".into(), double_susp(&cross_polytope_boundary(2).unwrap())));
    out
}

#[test]
fn gamcheb_inversion_on_flag_spheres() {
    for (name, c) in even_spheres() {
        let h = SymmetricHVector::from_complex(&c).unwrap();
        assert!(h.verify_gamcheb_inversion(), "inversion failed on {name}");
        // T(P(u)) = g(2u) on the same family.
        assert_eq!(
            tcheb_transform(&h.p_poly()),
            h.g_poly().scale_arg(&rat_int(2)),
            "transform identity failed on {name}"
        );
    }
}

#[test]
fn gamma_is_multiplicative_under_join() {
    for (n, m) in [(4, 5), (5, 5), (5, 7), (6, 9)] {
        let a = cycle(n).unwrap();
        let b = cycle(m).unwrap();
        let j = a.join(&b).unwrap();
        let ga = SymmetricHVector::from_complex(&a).unwrap().gamma_poly();
        let gb = SymmetricHVector::from_complex(&b).unwrap().gamma_poly();
        let gj = SymmetricHVector::from_complex(&j).unwrap().gamma_poly();
        assert_eq!(gj, &ga * &gb, "join C{n}*C{m}");
    }
}

#[test]
fn dual_dual_preserves_rank_counts() {
    for c in [
        cycle(5).unwrap(),
        cross_polytope_boundary(3).unwrap(),
        simplex(3).unwrap(),
    ] {
        let p = CellPoset::from_simplicial(&c);
        let dd = p.dual().unwrap().dual().unwrap();
        // Compare rank counts by dimension on both sides.
        let count = |q: &CellPoset| {
            let mut v = vec![0u64; q.dim().map_or(0, |d| d as usize + 1)];
            for e in q.elements() {
                v[e.dim as usize] += 1;
            }
            v
        };
        assert_eq!(count(&p), count(&dd));
    }
}

#[test]
fn ftilde_of_simplicial_poset_is_f_polynomial() {
    for c in [cycle(5).unwrap(), simplex(4).unwrap(), cross_polytope_boundary(3).unwrap()] {
        let p = CellPoset::from_simplicial(&c);
        assert_eq!(p.ftilde_poly(), flagcomb::f_polynomial(&c.f_vector()));
    }
}

#[test]
fn barycentric_cover_matches_closed_form() {
    for c in [
        simplex(2).unwrap(),
        simplex(3).unwrap(),
        cycle(4).unwrap(),
        cycle(5).unwrap(),
        cross_polytope_boundary(2).unwrap(),
        SimplicialComplex::from_faces(
            4,
            [VertexSet::from_slice(&[0, 1, 2]), VertexSet::from_slice(&[2, 3])],
        )
        .unwrap(),
    ] {
        let p = CellPoset::from_simplicial(&c);
        let cover = p.barycentric_cover().unwrap();
        let expect = cubical_barycentric_fvector(&c.f_vector());
        assert_eq!(
            cover.ftilde_poly(),
            RatPoly::from_ints(&expect.iter().map(|&x| x as i64).collect::<Vec<_>>()),
            "barycentric cover mismatch on {c:?}"
        );
    }
}

#[test]
fn interval_posets_are_tcheb_triangulations() {
    use flagcomb::poset::{antichain, boolean_poset, chain};
    let mut posets = vec![chain(1), chain(2), chain(3), chain(4), antichain(2), boolean_poset(2)];
    for c in [simplex(2).unwrap(), simplex(3).unwrap(), cycle(4).unwrap()] {
        posets.push(CellPoset::from_simplicial(&c));
    }
    for p in posets {
        assert!(verify_interval_tcheb(&p).unwrap());
    }
}

#[test]
fn mirror_count_at_one_matches_stratum_sum() {
    for c in [cycle(4).unwrap(), cycle(5).unwrap(), simplex(3).unwrap()] {
        let p = CellPoset::from_simplicial(&c);
        let m = mirror(&p).unwrap();
        let n = p.n_ground();
        let total: u64 = c
            .faces()
            .iter()
            .map(|f| 1u64 << (n - f.len()))
            .sum();
        assert_eq!(m.ftilde_poly().eval(&rat_int(1)), rat_int(total as i64));
    }
}

#[test]
fn dgamma_formula_matches_construction() {
    let mut cases: Vec<SimplicialComplex> = vec![
        flagcomb::points(1).unwrap(),
        flagcomb::points(3).unwrap(),
        cycle(4).unwrap(),
        cycle(6).unwrap(),
        simplex(2).unwrap(),
        simplex(3).unwrap(),
        cross_polytope_boundary(2).unwrap(),
        cross_polytope_boundary(3).unwrap(),
        cross_polytope_boundary(4).unwrap(),
        simplex(4).unwrap(),
        SimplicialComplex::empty(0),
    ];
    // A 2-dimensional balanced non-sphere: two triangles along an edge.
    cases.push(
        SimplicialComplex::from_faces(
            4,
            [VertexSet::from_slice(&[0, 1, 2]), VertexSet::from_slice(&[1, 2, 3])],
        )
        .unwrap(),
    );
    for c in cases {
        let Some(colored) = find_balanced_coloring(&c) else {
            continue;
        };
        let d = signed_unused_color_complex(&colored).unwrap();
        assert_eq!(
            d.f_vector(),
            dgamma_fvector_formula(&c.f_vector(), colored.num_colors()),
            "formula mismatch on {c:?}"
        );
        // Every face of D(Γ) has at most D vertices.
        assert!(d.cells().iter().all(|t| t.card() <= colored.num_colors()));
        // Each |Q| = k cell carries exactly 2^k sign patterns of B.
        let mut by_fq = std::collections::BTreeMap::new();
        for t in d.cells() {
            *by_fq.entry((t.face, t.q)).or_insert(0u64) += 1;
        }
        for ((_, q), count) in by_fq {
            assert_eq!(count, 1 << q.count_ones());
        }
    }
}

#[test]
fn vertices_form_face_matches_bruteforce() {
    let cases = vec![
        cycle(4).unwrap(),
        cycle(6).unwrap(),
        simplex(3).unwrap(),
        cross_polytope_boundary(2).unwrap(),
        cross_polytope_boundary(3).unwrap(),
    ];
    for c in cases {
        let colored = find_balanced_coloring(&c).unwrap();
        let dd = colored.num_colors() as usize;
        let d = signed_unused_color_complex(&colored).unwrap();
        let ids: Vec<usize> = (0..d.vertex_count()).collect();
        // All sign-consistent, distinct-color vertex collections of size <= D.
        let mut agree = 0u64;
        for k in 1..=dd.min(3) {
            for combo in combinations(&ids, k) {
                let mut colors = std::collections::BTreeSet::new();
                if !combo
                    .iter()
                    .all(|&i| colors.insert(d.vertices()[i].q))
                {
                    continue;
                }
                assert_eq!(
                    d.vertices_form_face(&combo),
                    d.vertices_form_face_bruteforce(&combo),
                    "criterion vs brute force on {:?}",
                    combo.iter().map(|&i| d.vertices()[i]).collect::<Vec<_>>()
                );
                agree += 1;
            }
        }
        assert!(agree > 0);
    }
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}
