use std::collections::BTreeSet;

use kansets::chain::*;
use kansets::operators::*;
use kansets::sset::*;
use num_bigint::BigInt;
use num_traits::Zero;

fn rp2() -> SimplicialSet {
    let tris = [[1, 2, 4], [1, 2, 6], [1, 3, 5], [1, 3, 6], [1, 4, 5], [2, 3, 4], [2, 3, 5], [2, 5, 6], [3, 4, 6], [4, 5, 6]];
    let facets: Vec<Vec<usize>> = tris.iter().map(|t| t.iter().map(|v| v - 1).collect()).collect();
    complex_to_sset(&OrderedSimplicialComplex::from_facets(6, &facets).unwrap()).unwrap()
}

#[test]
fn rp2_model() {
    let k = rp2();
    assert_eq!(k.counts(), vec![6, 15, 10]);
    let h: Vec<String> = space_homology(&k).unwrap().iter().map(ToString::to_string).collect();
    assert_eq!(h, ["Z", "Z/2", "0"]);
}

#[test]
fn constant_homotopy_gives_zero() {
    let f = SimplicialMap::identity(&circle());
    let (prod, h) = constant_homotopy(&f).unwrap();
    let d = prism_homotopy(&prod, &h).unwrap();
    assert!(d.matrices.iter().all(IntegerMatrix::is_zero));
    let report = homotopic_maps_equal_on_homology(&f, &f, &prod, &h).unwrap();
    assert!(report.passed());
}

#[test]
fn horn_contraction() {
    let k = horn(2, 0).unwrap();
    let id = SimplicialMap::identity(&k);
    let c = SimplicialMap::constant(&k, &k, 0).unwrap();
    let (prod, h) = find_homotopy(&c, &id).unwrap().expect("horn contracts to its apex");
    let report = homotopic_maps_equal_on_homology(&c, &id, &prod, &h).unwrap();
    assert!(report.passed(), "{report:?}");
}

#[test]
fn circle_not_contractible() {
    let k = circle();
    let id = SimplicialMap::identity(&k);
    let c = SimplicialMap::constant(&k, &k, 0).unwrap();
    assert!(find_homotopy(&c, &id).unwrap().is_none());
}

#[test]
fn subdivision_of_triangle() {
    let l = OrderedSimplicialComplex::from_facets(3, &[vec![0, 1, 2]]).unwrap();
    let sub = barycentric_subdivide(&l).unwrap();
    assert_eq!(sub.complex.counts(), vec![7, 12, 6]);
    assert_eq!(sub.complex.euler_characteristic(), 1);
    assert!(sub.cone_is_acyclic().unwrap());
    let image = sub.image_of(&[0, 1, 2]);
    assert_eq!(image.len(), 6);
    assert!(image.iter().all(|(_, c)| c == &BigInt::from(1) || c == &BigInt::from(-1)));
}

#[test]
fn aw_ez_on_tori() {
    let ez = EilenbergZilber::new(&circle(), &circle()).unwrap();
    assert!(ez.aw_ez_is_identity());
    let ez = EilenbergZilber::new(&std_simplex(1), &std_simplex(2)).unwrap();
    assert!(ez.aw_ez_is_identity());
}

#[test]
fn kunneth_examples() {
    assert!(kunneth_check(&circle(), &circle(), 2).unwrap().passed());
    let r = kunneth_check(&rp2(), &circle(), 3).unwrap();
    assert!(r.passed(), "{:?}", r.lines());
    assert_eq!(r.direct[1].to_string(), "Z + Z/2");
}

#[test]
fn torus_cup_products() {
    let torus = product(&circle(), &circle()).space;
    let ring = CohomologyRing::new(&torus, 0, 2).unwrap();
    assert_eq!(ring.rank(1), 2);
    let ab = ring.product(1, 0, 1, 1).unwrap();
    let ba = ring.product(1, 1, 1, 0).unwrap();
    assert_eq!(ab.len(), 1);
    assert!(ab[0] == BigInt::from(1) || ab[0] == BigInt::from(-1));
    assert_eq!(ab[0], -&ba[0]);
    assert!(ring.product(1, 0, 1, 0).unwrap()[0].is_zero());
    assert!(ring.is_graded_commutative().unwrap());
    assert!(ring.is_associative().unwrap());
}

#[test]
fn rp2_square_nonzero() {
    let ring = CohomologyRing::new(&rp2(), 2, 2).unwrap();
    assert_eq!(ring.rank(1), 1);
    assert_eq!(ring.product(1, 0, 1, 0).unwrap(), vec![BigInt::from(1)]);
}

#[test]
fn unit_cochain() {
    let k = rp2();
    let ring = CohomologyRing::new(&k, 2, 2).unwrap();
    let x = ring.generator(1, 0);
    assert_eq!(cup_product(&k, &Cochain::unit(&k, 2), &x).unwrap(), x);
}

#[test]
fn relative_les_of_horn_in_simplex() {
    let k = std_simplex(2);
    let ids: BTreeSet<GenId> = [GenId::new(1, 0), GenId::new(1, 1)].into_iter().collect();
    let l = subcomplex(&k, &ids, true).unwrap();
    assert!(pair_les(&k, &l, 2).unwrap().is_exact());
}
