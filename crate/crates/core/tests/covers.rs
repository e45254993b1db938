use kansets::chain::*;
use kansets::covers::*;
use kansets::operators::{complex_to_sset, OrderedSimplicialComplex};
use kansets::sset::*;

fn rp2() -> SimplicialSet {
    let tris = [[1, 2, 4], [1, 2, 6], [1, 3, 5], [1, 3, 6], [1, 4, 5], [2, 3, 4], [2, 3, 5], [2, 5, 6], [3, 4, 6], [4, 5, 6]];
    let facets: Vec<Vec<usize>> = tris.iter().map(|t| t.iter().map(|v| v - 1).collect()).collect();
    complex_to_sset(&OrderedSimplicialComplex::from_facets(6, &facets).unwrap()).unwrap()
}

fn torus() -> SimplicialSet {
    product(&circle(), &circle()).space
}

fn homology_strings(k: &SimplicialSet) -> Vec<String> {
    space_homology(k).unwrap().iter().map(ToString::to_string).collect()
}

fn double_cover(k: &SimplicialSet) -> (SimplicialSet, SimplicialMap) {
    let z2 = FiniteGroup::cyclic(2).unwrap();
    let p = pi1_presentation(k, 0).unwrap();
    let images = first_nontrivial_hom(&p, &z2, 1_000_000).expect("a map onto Z/2");
    build_cover(&labeling_from_hom(k, &p, &z2, &images).unwrap()).unwrap()
}

#[test]
fn delta1_is_not_kan() {
    let k = std_simplex(1);
    let h = HornMap::new(
        &k,
        2,
        0,
        vec![Simplex::degenerate_vertex(0, 1), Simplex::generator(GenId::new(1, 0))],
    )
    .unwrap();
    assert!(fill_horn(&k, &h).is_empty());
    let report = kan_check(&k, 2);
    assert!(!report.passed());
    assert!(report.lines().iter().any(|l| l.contains("Λ[2]_0 (d1=s0<0>, d2=<01>)")), "{:?}", report.lines());
    // every 2-simplex of Δ[1] is degenerate: 2 edges of vertices, 2 of the edge
    assert_eq!(k.all_simplices(2).len(), 4);
}

#[test]
fn discrete_and_point_are_kan() {
    for k in [discrete(2), point()] {
        let r = kan_check(&k, 3);
        assert!(r.passed(), "{:?}", r.lines());
        for n in 1..=3 {
            for kk in 0..=n {
                for h in enumerate_horns(&k, n, kk) {
                    assert_eq!(fill_horn(&k, &h).len(), 1);
                }
            }
        }
    }
}

#[test]
fn map_to_point_is_fibration_iff_kan() {
    for k in [discrete(3), std_simplex(1), circle(), horn(2, 1).unwrap()] {
        let f = SimplicialMap::constant(&k, &point(), 0).unwrap();
        assert_eq!(fibration_check(&f, 2).unwrap().is_fibration(), kan_check(&k, 2).passed());
    }
}

#[test]
fn incompatible_horn_rejected() {
    let k = std_simplex(2);
    let e = |i| Simplex::generator(GenId::new(1, i));
    // y0 = ⟨01⟩, y2 = ⟨12⟩: d0 y2 = 2 but d1 y0 = 0
    assert!(HornMap::new(&k, 2, 1, vec![e(0), e(2)]).is_err());
    assert!(HornMap::new(&k, 2, 1, vec![e(2), e(0)]).is_ok());
}

#[test]
fn components() {
    assert_eq!(pi0(&discrete(2)).count(), 2);
    assert_eq!(pi0(&boundary(3)).count(), 1);
    let both = coproduct(&[circle(), torus()]).0;
    assert_eq!(pi0(&both).count(), 2);
    assert!(matches!(pi1_presentation(&both, 0), Err(kansets::Error::Disconnected(2))));
}

#[test]
fn presentations() {
    let p = pi1_presentation(&circle(), 0).unwrap();
    assert_eq!(p.to_string(), "⟨e0 | ⟩");
    let p = pi1_presentation(&boundary(2), 0).unwrap();
    assert_eq!((p.generators.len(), p.relators.len()), (1, 0));
    assert_eq!(abelianization(&p).to_string(), "Z");
    let p = pi1_presentation(&rp2(), 0).unwrap();
    assert_eq!(abelianization(&p).to_string(), "Z/2");
    let s = tietze_simplify(&p, DEFAULT_TIETZE_BUDGET);
    assert_eq!(abelianization(&s.presentation).to_string(), "Z/2");
    assert_eq!(abelianization(&pi1_presentation(&torus(), 0).unwrap()).to_string(), "Z^2");
    let a2 = GroupPresentation::new(vec!["a".into()], vec![vec![(0, 1), (0, 1)]]).unwrap();
    assert_eq!(abelianization(&a2).to_string(), "Z/2");
    assert!(GroupPresentation::new(vec![], vec![vec![(0, 1)]]).is_err());
}

#[test]
fn simply_connected_presentations_are_trivial() {
    for k in [sphere(2), sphere(3), boundary(3), std_simplex(3)] {
        let p = pi1_presentation(&k, 0).unwrap();
        let s = tietze_simplify(&p, DEFAULT_TIETZE_BUDGET);
        assert!(s.certainly_trivial(), "{}", s.presentation);
    }
}

#[test]
fn abelianization_matches_h1() {
    for k in [circle(), torus(), rp2(), boundary(2), boundary(3), sphere(2), horn(3, 1).unwrap()] {
        let h1 = space_homology(&k).unwrap()[1].clone();
        assert_eq!(abelianization(&pi1_presentation(&k, 0).unwrap()), h1);
    }
}

#[test]
fn unkilled_relator_is_named() {
    let k = rp2();
    let p = pi1_presentation(&k, 0).unwrap();
    let z3 = FiniteGroup::cyclic(3).unwrap();
    let mut images = vec![0; p.generators.len()];
    images[0] = 1;
    let err = labeling_from_hom(&k, &p, &z3, &images).unwrap_err();
    assert!(matches!(err, kansets::Error::RelatorNotKilled { .. }));
    assert!(first_nontrivial_hom(&p, &z3, 1_000_000).is_none());
}

#[test]
fn circle_double_cover() {
    let (e, proj) = double_cover(&circle());
    assert_eq!(e.counts(), vec![2, 2]);
    assert_eq!(homology_strings(&e), ["Z", "Z"]);
    let report = verify_covering(&proj, 2, 2).unwrap();
    assert!(report.passed(), "{:?}", report.lines());
    assert_eq!((report.euler_total, report.euler_base), (0, 0));
}

#[test]
fn rp2_double_cover_is_a_sphere() {
    let (e, proj) = double_cover(&rp2());
    assert_eq!(e.counts(), vec![12, 30, 20]);
    assert_eq!(homology_strings(&e), ["Z", "0", "Z"]);
    let report = verify_covering(&proj, 2, 2).unwrap();
    assert!(report.passed(), "{:?}", report.lines());
    assert_eq!(report.euler_total, 2);
}

#[test]
fn torus_double_cover() {
    let (e, proj) = double_cover(&torus());
    assert_eq!(homology_strings(&e), ["Z", "Z^2", "Z"]);
    assert!(verify_covering(&proj, 2, 2).unwrap().passed());
}

#[test]
fn trivial_labeling_gives_a_copy() {
    let k = rp2();
    let (e, proj) = build_cover(&CoverLabeling::trivial(&k)).unwrap();
    assert_eq!(e.counts(), k.counts());
    assert!(proj.is_injective_on_generators());
    assert!(verify_covering(&proj, 1, 2).unwrap().passed());
}

#[test]
fn bad_labeling_rejected() {
    let k = std_simplex(2);
    let z2 = FiniteGroup::cyclic(2).unwrap();
    assert!(matches!(CoverLabeling::new(&k, &z2, vec![1, 0, 0]), Err(kansets::Error::Cocycle(_))));
    assert!(CoverLabeling::new(&k, &z2, vec![1, 0, 1]).is_ok());
}

#[test]
fn corrupted_projection_fails() {
    let (e, proj) = double_cover(&circle());
    let mut levels = e.into_generators();
    // send d0 of the second edge to the other sheet
    let target = levels[1][1].faces[0].base().idx;
    levels[1][1].faces[0] = Simplex::generator(GenId::new(0, 1 - target));
    let bad = SimplicialSet::from_generators(levels).unwrap();
    let images = proj.images().to_vec();
    let p = SimplicialMap::new(bad, circle(), images).unwrap();
    let report = verify_covering(&p, 2, 2).unwrap();
    assert!(!report.passed());
    assert!(report.lines().iter().any(|l| l.starts_with("witness")));
}

#[test]
fn s3_labeling_over_nonabelian_group() {
    let k = circle();
    let s3 = FiniteGroup::symmetric3();
    let p = pi1_presentation(&k, 0).unwrap();
    let lab = labeling_from_hom(&k, &p, &s3, &[s3.element("120").unwrap()]).unwrap();
    let (e, proj) = build_cover(&lab).unwrap();
    // a 3-cycle acting on 6 sheets: two circles of length 3
    assert_eq!(pi0(&e).count(), 2);
    assert!(verify_covering(&proj, 6, 2).unwrap().passed());
}
