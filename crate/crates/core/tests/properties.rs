use std::collections::BTreeSet;

use kansets::chain::*;
use kansets::covers::*;
use kansets::io::{catalog, parse_space, print_space};
use kansets::operators::{complex_to_sset, OrderedSimplicialComplex};
use kansets::sset::*;
use num_bigint::BigInt;
use proptest::prelude::*;

const SPACES: [&str; 8] = ["circle", "torus", "rp2", "klein", "delta:3", "boundary:3", "sphere:2", "horn:3:1"];

/// A random simplicial complex on at most five vertices, given by facet
/// bitmasks.
fn complex_from_masks(masks: &[u8]) -> SimplicialSet {
    let facets: Vec<Vec<usize>> =
        masks.iter().map(|m| (0..5).filter(|v| m & (1 << v) != 0).collect()).filter(|f: &Vec<usize>| !f.is_empty()).collect();
    let used: BTreeSet<usize> = facets.iter().flatten().copied().collect();
    let count = used.iter().max().map_or(0, |m| m + 1);
    complex_to_sset(&OrderedSimplicialComplex::from_facets(count, &facets).unwrap()).unwrap()
}

fn masks() -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(1u8..32, 1..6)
}

/// Strict chains of length `n + 1` in the grid `[p] × [q]`.
fn grid_chains(p: usize, q: usize, n: usize) -> usize {
    let cells: Vec<(usize, usize)> = (0..=p).flat_map(|a| (0..=q).map(move |b| (a, b))).collect();
    let mut ways: Vec<usize> = vec![1; cells.len()];
    for _ in 0..n {
        ways = cells
            .iter()
            .map(|&(a, b)| {
                cells
                    .iter()
                    .zip(&ways)
                    .filter(|(&(c, d), _)| c <= a && d <= b && (c, d) != (a, b))
                    .map(|(_, w)| *w)
                    .sum()
            })
            .collect();
    }
    ways.iter().sum()
}

fn monotone_surjection(steps: &[bool]) -> Vec<usize> {
    let mut eta = vec![0];
    for &up in steps {
        let last = *eta.last().unwrap();
        eta.push(if up { last + 1 } else { last });
    }
    eta
}

fn binomial(n: usize, k: usize) -> usize {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn word_and_surjection_are_inverse(steps in prop::collection::vec(any::<bool>(), 0..8)) {
        let eta = monotone_surjection(&steps);
        let word = word_from_surjection(&eta);
        prop_assert!(word.windows(2).all(|w| w[0] > w[1]));
        prop_assert_eq!(surjection_from_word(steps.len(), &word), eta.clone());
        let m = *eta.last().unwrap();
        let s = Simplex::from_surjection(GenId::new(m, 0), &eta);
        prop_assert_eq!(Simplex::new(s.base(), s.word().to_vec()).unwrap(), s.clone());
        prop_assert_eq!(s.surjection(), eta);
    }

    #[test]
    fn simplicial_identities(space in 0..SPACES.len(), n in 1usize..4, pick in any::<prop::sample::Index>()) {
        let k = catalog(SPACES[space]).unwrap();
        let all = k.all_simplices(n);
        let x = pick.get(&all);
        for j in 1..=n {
            for i in 0..j {
                if n >= 2 {
                    let left = k.face(&k.face(x, j).unwrap(), i).unwrap();
                    let right = k.face(&k.face(x, i).unwrap(), j - 1).unwrap();
                    prop_assert_eq!(left, right);
                }
            }
        }
        for j in 0..=n {
            let sx = x.degeneracy(j).unwrap();
            for i in 0..=n + 1 {
                let left = k.face(&sx, i).unwrap();
                let right = if i < j {
                    k.face(x, i).unwrap().degeneracy(j - 1).unwrap()
                } else if i == j || i == j + 1 {
                    x.clone()
                } else {
                    k.face(x, i - 1).unwrap().degeneracy(j).unwrap()
                };
                prop_assert_eq!(left, right);
            }
            for i in 0..=j {
                let a = x.degeneracy(j).unwrap().degeneracy(i).unwrap();
                let b = x.degeneracy(i).unwrap().degeneracy(j + 1).unwrap();
                prop_assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn product_counts_are_grid_chains(p in 0usize..4, q in 0usize..4) {
        let prod = product(&std_simplex(p), &std_simplex(q));
        let counts = prod.space.counts();
        prop_assert_eq!(counts.len(), p + q + 1);
        for (n, &c) in counts.iter().enumerate() {
            prop_assert_eq!(c, grid_chains(p, q, n));
        }
        prop_assert_eq!(counts[p + q], binomial(p + q, p));
        prop_assert!(prod.space.is_valid().is_ok());
    }

    #[test]
    fn boundary_squares_to_zero(a in 0..SPACES.len(), b in 0..3usize) {
        let left = catalog(SPACES[a]).unwrap();
        let right = catalog(["point", "circle", "delta:1"][b]).unwrap();
        let prod = product(&left, &right).space;
        prop_assert!(normalized_chains(&prod).verify().is_ok());
        prop_assert!(unnormalized_chains(&left, 3).verify().is_ok());
    }

    #[test]
    fn smith_form_certificate(rows in 1usize..5, cols in 1usize..5, entries in prop::collection::vec(-6i64..7, 25)) {
        let m = IntegerMatrix::from_fn(rows, cols, |i, j| BigInt::from(entries[i * 5 + j]));
        let snf = smith_normal_form(&m);
        prop_assert!(snf.verify(&m));
        let factors = invariant_factors(&m);
        prop_assert!(factors.windows(2).all(|w| (&w[1] % &w[0]) == BigInt::from(0)));
        prop_assert_eq!(factors.len(), rank_rational(&m));
    }

    #[test]
    fn random_complexes(ms in masks()) {
        let k = complex_from_masks(&ms);
        let top = k.top_dim().unwrap_or(0);
        let c = normalized_chains(&k);
        let h = homology(&c, top).unwrap();
        let betti: Vec<usize> = h.iter().map(|g| g.betti).collect();
        prop_assert_eq!(betti, rational_betti(&c, top));
        prop_assert_eq!(betti_euler(&h), euler_characteristic(&k));
        prop_assert_eq!(parse_space(&print_space(&k)).unwrap(), k.clone());
        if pi0(&k).count() == 1 {
            prop_assert_eq!(abelianization(&pi1_presentation(&k, 0).unwrap()), h.get(1).cloned().unwrap_or_default());
        }
    }

    #[test]
    fn additivity(a in 0..SPACES.len(), b in 0..SPACES.len()) {
        let (k, l) = (catalog(SPACES[a]).unwrap(), catalog(SPACES[b]).unwrap());
        let (sum, _) = coproduct(&[k.clone(), l.clone()]);
        let top = sum.top_dim().unwrap();
        let hs = homology(&normalized_chains(&sum), top).unwrap();
        let hk = homology(&normalized_chains(&k), top).unwrap();
        let hl = homology(&normalized_chains(&l), top).unwrap();
        for n in 0..=top {
            prop_assert_eq!(&hs[n], &hk[n].direct_sum(&hl[n]));
        }
    }

    #[test]
    fn pair_sequences_are_exact(ms in masks(), keep in prop::collection::vec(any::<bool>(), 32)) {
        let k = complex_from_masks(&ms);
        let ids: BTreeSet<GenId> = k.all_ids().enumerate().filter(|(i, _)| keep[i % 32]).map(|(_, id)| id).collect();
        let l = subcomplex(&k, &ids, true).unwrap();
        let top = k.top_dim().unwrap_or(0);
        let seq = pair_les(&k, &l, top).unwrap();
        prop_assert!(seq.is_exact(), "{:?}", seq.report_lines());
    }

    #[test]
    fn mayer_vietoris_is_exact(ms in masks(), side in prop::collection::vec(any::<bool>(), 32)) {
        let k = complex_from_masks(&ms);
        let top = k.top_dim().unwrap_or(0);
        let (mut a, mut b) = (BTreeSet::new(), BTreeSet::new());
        for (i, id) in k.all_ids().enumerate() {
            if side[i % 32] { a.insert(id); } else { b.insert(id); }
        }
        let (a, b) = (subcomplex(&k, &a, true).unwrap(), subcomplex(&k, &b, true).unwrap());
        let seq = mayer_vietoris(&k, &a, &b, top).unwrap();
        prop_assert!(seq.is_exact(), "{:?}", seq.report_lines());
    }

    #[test]
    fn tietze_keeps_abelianization(
        gens in 1usize..4,
        rels in prop::collection::vec(prop::collection::vec((0usize..4, any::<bool>()), 0..6), 0..4),
    ) {
        let relators: Vec<Word> = rels
            .iter()
            .map(|r| r.iter().map(|&(g, pos)| (g % gens, if pos { 1 } else { -1 })).collect())
            .collect();
        let names = (0..gens).map(|g| format!("g{g}")).collect();
        let p = GroupPresentation::new(names, relators).unwrap();
        let s = tietze_simplify(&p, DEFAULT_TIETZE_BUDGET);
        prop_assert!(!s.exhausted);
        prop_assert_eq!(abelianization(&s.presentation), abelianization(&p));
    }

    #[test]
    fn covers_multiply_counts(ms in masks(), order in 2usize..4) {
        let k = complex_from_masks(&ms);
        prop_assume!(pi0(&k).count() == 1);
        let g = FiniteGroup::cyclic(order).unwrap();
        let p = pi1_presentation(&k, 0).unwrap();
        let images = first_nontrivial_hom(&p, &g, 100_000).unwrap_or_else(|| vec![g.identity(); p.generators.len()]);
        let (e, proj) = build_cover(&labeling_from_hom(&k, &p, &g, &images).unwrap()).unwrap();
        let want: Vec<usize> = k.counts().iter().map(|c| c * order).collect();
        prop_assert_eq!(e.counts(), want);
        let report = verify_covering(&proj, order, 2).unwrap();
        prop_assert!(report.passed(), "{:?}", report.lines());
    }

    #[test]
    fn kan_spaces_fill_every_horn(m in 1usize..4, n in 1usize..4) {
        let k = discrete(m);
        prop_assert!(kan_check(&k, n).passed());
        for kk in 0..=n {
            for h in enumerate_horns(&k, n, kk) {
                prop_assert!(!fill_horn(&k, &h).is_empty());
            }
        }
    }
}
