use std::collections::BTreeSet;

use kansets::chain::*;
use kansets::sset::*;
use num_bigint::BigInt;

fn strs(groups: &[AbelianGroup]) -> Vec<String> {
    groups.iter().map(ToString::to_string).collect()
}

fn ids(k: &SimplicialSet, dim: usize, which: &[usize]) -> BTreeSet<GenId> {
    which.iter().map(|&i| GenId::new(dim, i)).filter(|id| k.contains(*id)).collect()
}

#[test]
fn generator_counts() {
    assert_eq!(std_simplex(2).counts(), vec![3, 3, 1]);
    assert_eq!(boundary(3).counts(), vec![4, 6, 4]);
    assert_eq!(horn(2, 0).unwrap().counts(), vec![3, 2]);
    assert_eq!(product(&std_simplex(1), &std_simplex(1)).space.counts(), vec![4, 5, 2]);
    assert_eq!(product(&circle(), &circle()).space.counts(), vec![1, 3, 2]);
    assert_eq!(sphere(2).counts(), vec![1, 0, 1]);
    assert_eq!(circle().counts(), vec![1, 1]);
}

#[test]
fn homology_of_standard_spaces() {
    assert_eq!(strs(&space_homology(&boundary(3)).unwrap()), ["Z", "0", "Z"]);
    assert_eq!(strs(&space_homology(&point()).unwrap()), ["Z"]);
    assert_eq!(strs(&space_homology(&circle()).unwrap()), ["Z", "Z"]);
    let torus = product(&circle(), &circle()).space;
    assert_eq!(strs(&space_homology(&torus).unwrap()), ["Z", "Z^2", "Z"]);
    assert_eq!(strs(&space_homology(&sphere(3)).unwrap()), ["Z", "0", "0", "Z"]);
    assert_eq!(euler_characteristic(&boundary(3)), 2);
    assert_eq!(euler_characteristic(&torus), 0);
}

#[test]
fn unnormalized_point() {
    let c = unnormalized_chains(&point(), 3);
    assert_eq!(c.ranks(), vec![1, 1, 1, 1]);
    assert_eq!(strs(&homology(&c, 2).unwrap()), ["Z", "0", "0"]);
    assert_eq!(unnormalized_chains(&circle(), 2).ranks(), vec![1, 2, 3]);
}

#[test]
fn smith_example() {
    let m = IntegerMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
    let snf = smith_normal_form(&m);
    assert_eq!(snf.diagonal, vec![BigInt::from(2), BigInt::from(4)]);
    assert!(snf.verify(&m));
}

#[test]
fn simplex_pair_les() {
    for p in 1..=3 {
        let k = std_simplex(p);
        let all: BTreeSet<GenId> = k.all_ids().filter(|id| id.dim < p).collect();
        let l = subcomplex(&k, &all, false).unwrap();
        let seq = pair_les(&k, &l, p).unwrap();
        assert!(seq.is_exact(), "{:?}", seq.report_lines());
        for q in 0..=p {
            let want = if q == p { "Z" } else { "0" };
            assert_eq!(seq.group(&format!("H_{q}(K,L)")).unwrap().to_string(), want);
        }
    }
}

#[test]
fn horn_pair_is_acyclic() {
    let k = std_simplex(2);
    let l = subcomplex(&k, &ids(&k, 1, &[0, 1]), true).unwrap();
    assert_eq!(l.space.counts(), vec![3, 2]);
    let seq = pair_les(&k, &l, 2).unwrap();
    assert!(seq.is_exact());
    for q in 0..=2 {
        assert!(seq.group(&format!("H_{q}(K,L)")).unwrap().is_trivial());
    }
}

#[test]
fn mayer_vietoris_triangle() {
    let k = boundary(2);
    let a = subcomplex(&k, &ids(&k, 1, &[0, 1]), true).unwrap();
    let b = subcomplex(&k, &ids(&k, 1, &[2]), true).unwrap();
    let seq = mayer_vietoris(&k, &a, &b, 1).unwrap();
    assert!(seq.is_exact(), "{:?}", seq.report_lines());
    assert_eq!(seq.group("H_1(K)").unwrap().to_string(), "Z");
    assert_eq!(seq.group("H_0(A∩B)").unwrap().to_string(), "Z^2");
}

#[test]
fn coefficients_and_cohomology() {
    let k = boundary(3);
    let c = normalized_chains(&k);
    let z2: AbelianGroup = "Z/2".parse().unwrap();
    assert_eq!(strs(&homology_with_coefficients(&c, 2, &z2).unwrap()), ["Z/2", "0", "Z/2"]);
    assert_eq!(strs(&cohomology_with_coefficients(&c, 2, &AbelianGroup::free(1)).unwrap()), ["Z", "0", "Z"]);
    assert!(homology_with_coefficients(&c, 2, &AbelianGroup::trivial()).unwrap().iter().all(AbelianGroup::is_trivial));
}

#[test]
fn rank_oracles_agree() {
    let torus = product(&circle(), &circle()).space;
    let c = normalized_chains(&torus);
    assert_eq!(rational_betti(&c, 2), vec![1, 2, 1]);
    assert_eq!(mod_p_dimensions(&c, 2, 2), vec![1, 2, 1]);
}

#[test]
fn universal_coefficients() {
    let z2: AbelianGroup = "Z/2".parse().unwrap();
    let rp2_like = rp2_chains();
    let r = uct_check(&rp2_like, 2, &z2).unwrap();
    assert!(r.passed(), "{:?}", r.lines());
    let direct: Vec<String> = r.homology.iter().map(|(d, _)| d.to_string()).collect();
    assert_eq!(direct, ["Z/2", "Z/2", "Z/2"]);
    for pi in ["Z", "Z/4", "Z^2 + Z/6", "0"] {
        let pi: AbelianGroup = pi.parse().unwrap();
        for k in [circle(), boundary(3), product(&circle(), &circle()).space] {
            let r = uct_check(&normalized_chains(&k), 2, &pi).unwrap();
            assert!(r.passed(), "{:?}", r.lines());
        }
        assert!(uct_check(&rp2_like, 2, &pi).unwrap().passed());
    }
}

/// One vertex, one edge `a`, one triangle with faces `(a, s0 v, a)`.
fn rp2_chains() -> ChainComplex {
    let v = Simplex::generator(GenId::new(0, 0));
    let a = Simplex::generator(GenId::new(1, 0));
    let k = SimplicialSet::from_generators(vec![
        vec![Generator::new(vec![])],
        vec![Generator::new(vec![v.clone(), v])],
        vec![Generator::new(vec![a.clone(), Simplex::degenerate_vertex(0, 1), a])],
    ])
    .unwrap();
    normalized_chains(&k)
}
