//! One PASS/FAIL line per acceptance criterion. Every comparison is exact;
//! the only tolerances are the wall-clock budgets below.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use kansets::chain::*;
use kansets::covers::*;
use kansets::io::{catalog, CATALOG_EXAMPLES};
use kansets::operators::*;
use kansets::sset::*;
use num_bigint::BigInt;
use num_traits::Zero;

const AXIOM_BUDGET: Duration = Duration::from_secs(60);
const COVER_BUDGET: Duration = Duration::from_secs(30);

type Outcome = Result<String, String>;

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn spaces() -> Vec<(&'static str, SimplicialSet)> {
    CATALOG_EXAMPLES.iter().map(|&n| (n, catalog(n).unwrap())).collect()
}

/// Top generators split in two halves: `A` is the closure of the first
/// half, `B` the closure of everything not strictly inside `A`.
fn split_cover(k: &SimplicialSet) -> (Subcomplex, Subcomplex) {
    let d = k.top_dim().unwrap_or(0);
    let half = k.count(d).div_ceil(2);
    let a: BTreeSet<GenId> = k.ids(d).take(half).collect();
    let closed = face_closure(k, &a).unwrap();
    let b: BTreeSet<GenId> = k.all_ids().filter(|id| !a.contains(id) && (id.dim == d || !closed.contains(id))).collect();
    (subcomplex(k, &a, true).unwrap(), subcomplex(k, &b, true).unwrap())
}

/// Sub-pairs used for exactness: the codimension-one skeleton, a single
/// vertex, and one half of the split cover.
fn pairs(k: &SimplicialSet) -> Vec<Subcomplex> {
    let d = k.top_dim().unwrap_or(0);
    let below: BTreeSet<GenId> = k.all_ids().filter(|id| id.dim < d).collect();
    let vertex: BTreeSet<GenId> = k.ids(0).take(1).collect();
    vec![
        subcomplex(k, &below, false).unwrap(),
        subcomplex(k, &vertex, false).unwrap(),
        split_cover(k).0,
    ]
}

/// Homotopies with known ends: the constant homotopy on every identity,
/// and a contraction of each cone-like space onto a vertex.
fn corpus_homotopies() -> Vec<(String, SimplicialMap, SimplicialMap, Product, SimplicialMap)> {
    let mut out = Vec::new();
    for (name, k) in spaces() {
        let id = SimplicialMap::identity(&k);
        let (prod, h) = constant_homotopy(&id).unwrap();
        out.push((format!("{name} id~id"), id.clone(), id, prod, h));
    }
    for name in ["point", "delta:1", "delta:2", "delta:3", "horn:2:0", "horn:3:0"] {
        let k = catalog(name).unwrap();
        let id = SimplicialMap::identity(&k);
        let c = SimplicialMap::constant(&k, &k, 0).unwrap();
        let (prod, h) = find_homotopy(&c, &id).unwrap().expect("cone-like space contracts to vertex 0");
        out.push((format!("{name} const~id"), c, id, prod, h));
    }
    let f = SimplicialMap::constant(&std_simplex(1), &circle(), 0).unwrap();
    let g = SimplicialMap::new(std_simplex(1), circle(), vec![
        vec![Simplex::generator(GenId::new(0, 0)); 2],
        vec![Simplex::generator(GenId::new(1, 0))],
    ])
    .unwrap();
    let (prod, h) = find_homotopy(&f, &g).unwrap().expect("a path in the circle contracts");
    out.push(("edge→circle const~loop".into(), f, g, prod, h));
    out
}

fn axiom_suite() -> Outcome {
    let start = Instant::now();
    let z = |k: &SimplicialSet| space_homology(k).unwrap();
    check(z(&point()) == vec![AbelianGroup::free(1)], || "H_*(point) is not Z in degree 0".into())?;

    let all = spaces();
    let mut sums = 0;
    for (i, (na, a)) in all.iter().enumerate() {
        for (nb, b) in &all[i..] {
            let (sum, _) = coproduct(&[a.clone(), b.clone()]);
            let top = sum.top_dim().unwrap();
            let (hs, ha, hb) = (
                homology(&normalized_chains(&sum), top).unwrap(),
                homology(&normalized_chains(a), top).unwrap(),
                homology(&normalized_chains(b), top).unwrap(),
            );
            for n in 0..=top {
                check(hs[n] == ha[n].direct_sum(&hb[n]), || format!("additivity fails for {na} ⊔ {nb} in degree {n}"))?;
            }
            sums += 1;
        }
    }

    let mut sequences = 0;
    for (name, k) in &all {
        let top = k.top_dim().unwrap();
        for l in pairs(k) {
            let seq = pair_les(k, &l, top).unwrap();
            check(seq.is_exact(), || format!("pair sequence of {name} not exact: {:?}", seq.report_lines()))?;
            sequences += 1;
        }
        let (a, b) = split_cover(k);
        let seq = mayer_vietoris(k, &a, &b, top).unwrap();
        check(seq.is_exact(), || format!("Mayer-Vietoris of {name} not exact: {:?}", seq.report_lines()))?;
        sequences += 1;
    }

    let homotopies = corpus_homotopies();
    for (name, f, g, prod, h) in &homotopies {
        let r = homotopic_maps_equal_on_homology(f, g, prod, h).unwrap();
        check(r.passed(), || format!("homotopy axiom fails for {name}: {r:?}"))?;
    }
    let elapsed = start.elapsed();
    check(elapsed < AXIOM_BUDGET, || format!("took {elapsed:.1?}, budget {AXIOM_BUDGET:?}"))?;
    Ok(format!(
        "{} spaces, {sums} coproducts, {sequences} exact sequences, {} homotopies in {elapsed:.1?}",
        all.len(),
        homotopies.len()
    ))
}

fn simplex_pairs() -> Outcome {
    for p in 1..=3 {
        let k = std_simplex(p);
        let below: BTreeSet<GenId> = k.all_ids().filter(|id| id.dim < p).collect();
        let l = subcomplex(&k, &below, false).unwrap();
        let seq = pair_les(&k, &l, p).unwrap();
        check(seq.is_exact(), || format!("pair sequence of Δ[{p}] not exact"))?;
        for q in 0..=p + 1 {
            let want = if q == p { AbelianGroup::free(1) } else { AbelianGroup::trivial() };
            let got = seq.group(&format!("H_{q}(K,L)")).unwrap();
            check(got == &want, || format!("H_{q}(Δ[{p}], ∂Δ[{p}]) = {got}"))?;
        }
        // ∂ : H_p(K,L) → H_{p-1}(L). For p = 1 the target is Z² and the
        // map is an isomorphism onto the reduced part, the kernel of
        // H_0(L) → H_0(K); exactness at H_0(L) already certifies that.
        let i = seq.index_of(&format!("H_{p}(K,L)")).unwrap();
        let iso = if p == 1 {
            seq.injective_at(i) && seq.exact_at(i + 1)
        } else {
            seq.isomorphism_at(i)
        };
        check(iso, || format!("connecting map of (Δ[{p}], ∂Δ[{p}]) is not an isomorphism"))?;
    }
    Ok("p = 1, 2, 3: Z in degree p only, connecting map iso".into())
}

fn normalization() -> Outcome {
    let all = spaces();
    for (name, k) in &all {
        let top = k.top_dim().unwrap();
        let norm = homology(&normalized_chains(k), top).unwrap();
        let unnorm = homology(&unnormalized_chains(k, top + 1), top).unwrap();
        check(norm == unnorm, || format!("{name}: normalized {norm:?} vs unnormalized {unnorm:?}"))?;
    }
    Ok(format!("{} catalog spaces agree through their top dimension", all.len()))
}

/// Expected groups as (betti, torsion orders) per degree.
type Table = Vec<(usize, Vec<u64>)>;

fn known_spaces() -> Vec<(String, SimplicialSet, Table)> {
    let z = |b| (b, vec![]);
    let mut out = vec![
        ("circle".to_string(), catalog("circle").unwrap(), vec![z(1), z(1)]),
        ("torus".to_string(), catalog("torus").unwrap(), vec![z(1), z(2), z(1)]),
        ("rp2".to_string(), catalog("rp2").unwrap(), vec![z(1), (0, vec![2]), z(0)]),
        ("klein".to_string(), catalog("klein").unwrap(), vec![z(1), (1, vec![2]), z(0)]),
    ];
    for n in 1..=4 {
        let table = if n == 1 {
            vec![z(2)]
        } else {
            (0..n).map(|q| z(usize::from(q == 0 || q == n - 1))).collect()
        };
        out.push((format!("boundary:{n}"), boundary(n), table));
    }
    out
}

fn known_table() -> Outcome {
    let table = known_spaces();
    for (name, k, want) in &table {
        let top = want.len() - 1;
        let c = normalized_chains(k);
        let got = homology(&c, top).unwrap();
        for (q, (betti, torsion)) in want.iter().enumerate() {
            let mut orders: Vec<BigInt> = torsion.iter().map(|&t| BigInt::from(t)).collect();
            orders.extend(std::iter::repeat(BigInt::zero()).take(*betti));
            let expected = AbelianGroup::from_orders(&orders);
            check(got[q] == expected, || format!("{name}: H_{q} = {} expected {expected}", got[q]))?;
        }
        let betti: Vec<usize> = want.iter().map(|(b, _)| *b).collect();
        check(rational_betti(&c, top) == betti, || format!("{name}: rational ranks disagree"))?;
        let even = |q: usize| want.get(q).map_or(0, |(_, t)| t.iter().filter(|&&o| o % 2 == 0).count());
        let mod2: Vec<usize> = (0..=top).map(|q| betti[q] + even(q) + q.checked_sub(1).map_or(0, even)).collect();
        check(mod_p_dimensions(&c, top, 2) == mod2, || format!("{name}: mod 2 dimensions disagree"))?;
    }
    Ok(format!("{} spaces match SNF, rational and mod 2", table.len()))
}

fn operator_identities() -> Outcome {
    let homotopies = corpus_homotopies();
    for (name, _, _, prod, h) in &homotopies {
        check(prism_homotopy(prod, h).is_ok(), || format!("prism identity fails for {name}"))?;
    }
    let products = [("circle", "circle"), ("delta:1", "delta:2"), ("rp2", "circle"), ("klein", "delta:1")];
    for (a, b) in products {
        let ez = EilenbergZilber::new(&catalog(a).unwrap(), &catalog(b).unwrap()).unwrap();
        check(ez.aw_ez_is_identity(), || format!("AW∘EZ ≠ id on {a} × {b}"))?;
    }
    let complexes = ["delta:1", "delta:2", "delta:3", "boundary:4", "horn:3:1", "rp2", "discrete:2"];
    for name in complexes {
        let l = sset_to_complex(&catalog(name).unwrap()).unwrap();
        let sub = barycentric_subdivide(&l).unwrap();
        check(sub.cone_is_acyclic().unwrap(), || format!("cone(sd) of {name} not acyclic"))?;
        check(sub.complex.euler_characteristic() == l.euler_characteristic(), || format!("χ(Sd {name}) ≠ χ({name})"))?;
    }
    Ok(format!(
        "{} prism identities, {} AW∘EZ, {} subdivisions",
        homotopies.len(),
        products.len(),
        complexes.len()
    ))
}

fn products_and_coefficients() -> Outcome {
    let pairs = [("circle", "circle"), ("rp2", "circle"), ("torus", "delta:1"), ("klein", "circle"), ("sphere:2", "rp2")];
    for (a, b) in pairs {
        let (k, l) = (catalog(a).unwrap(), catalog(b).unwrap());
        let top = k.top_dim().unwrap() + l.top_dim().unwrap();
        let r = kunneth_check(&k, &l, top).unwrap();
        check(r.passed(), || format!("Künneth fails on {a} × {b}: {:?}", r.lines()))?;
    }
    let coefficients = ["Z", "Z/2", "Z/4", "Z^2 + Z/6", "0"];
    let all = spaces();
    for (name, k) in &all {
        for pi in coefficients {
            let r = uct_check(&normalized_chains(k), k.top_dim().unwrap(), &pi.parse().unwrap()).unwrap();
            check(r.passed(), || format!("UCT fails on {name} with {pi}: {:?}", r.lines()))?;
        }
    }
    let ring = CohomologyRing::new(&catalog("torus").unwrap(), 0, 2).unwrap();
    let (ab, ba) = (ring.product(1, 0, 1, 1).unwrap(), ring.product(1, 1, 1, 0).unwrap());
    check(ab.len() == 1 && !ab[0].is_zero() && ab[0] == -&ba[0], || format!("torus: a∪b = {ab:?}, b∪a = {ba:?}"))?;
    check(ring.product(1, 0, 1, 0).unwrap()[0].is_zero(), || "torus: a∪a ≠ 0".into())?;
    let ring = CohomologyRing::new(&catalog("rp2").unwrap(), 2, 2).unwrap();
    let square = ring.product(1, 0, 1, 0).unwrap();
    check(square == vec![BigInt::from(1)], || format!("rp2: x∪x = {square:?} mod 2"))?;
    Ok(format!(
        "{} Künneth pairs, {} UCT checks, torus antisymmetric, rp2 square nonzero",
        pairs.len(),
        all.len() * coefficients.len()
    ))
}

fn kan_checks() -> Outcome {
    for m in 1..=3 {
        let r = kan_check(&discrete(m), 3);
        check(r.passed(), || format!("discrete:{m} not Kan: {:?}", r.lines()))?;
    }
    let r = kan_check(&std_simplex(1), 2);
    check(!r.passed(), || "Δ[1] reported Kan".into())?;
    let witness = "Λ[2]_0 (d1=s0<0>, d2=<01>)";
    check(r.lines().iter().any(|l| l.contains(witness)), || format!("no {witness} witness in {:?}", r.lines()))?;
    let names = ["point", "discrete:2", "delta:1", "circle", "horn:2:0", "boundary:2", "sphere:2"];
    for name in names {
        let k = catalog(name).unwrap();
        let to_point = SimplicialMap::constant(&k, &point(), 0).unwrap();
        let fib = fibration_check(&to_point, 2).unwrap();
        let kan = kan_check(&k, 2);
        check(fib.is_fibration() == kan.passed() && fib.unfillable_count == kan.failure_count, || {
            format!("{name}: fibration {:?} vs Kan {:?}", fib.lines(), kan.lines())
        })?;
    }
    Ok(format!("discrete Kan through dim 3, Δ[1] witness found, {} K→point reports match", names.len()))
}

fn covering_suite() -> Outcome {
    let start = Instant::now();
    let z2 = FiniteGroup::cyclic(2).unwrap();
    let mut rp2_cover_h1 = None;
    for name in ["circle", "rp2", "torus"] {
        let k = catalog(name).unwrap();
        let p = pi1_presentation(&k, 0).unwrap();
        let images = first_nontrivial_hom(&p, &z2, 1_000_000).ok_or(format!("no map π₁({name}) → Z/2"))?;
        let (e, proj) = build_cover(&labeling_from_hom(&k, &p, &z2, &images).unwrap()).unwrap();
        let r = verify_covering(&proj, 2, 2).unwrap();
        check(r.passed(), || format!("{name}: {:?}", r.lines()))?;
        check(r.lifting.lifts_unique() && r.lifting.problems > 0, || format!("{name}: lifts not unique"))?;
        if name == "rp2" {
            rp2_cover_h1 = Some(space_homology(&e).unwrap()[1].clone());
        }
    }
    let h1 = rp2_cover_h1.unwrap();
    check(h1.is_trivial(), || format!("H_1 of the rp2 double cover is {h1}"))?;
    let elapsed = start.elapsed();
    check(elapsed < COVER_BUDGET, || format!("took {elapsed:.1?}, budget {COVER_BUDGET:?}"))?;
    Ok(format!("S¹, RP², T² double covers verified, H_1(S²) = 0, in {elapsed:.1?}"))
}

fn pi1_h1() -> Outcome {
    let mut count = 0;
    for (name, k) in spaces() {
        if pi0(&k).count() != 1 {
            continue;
        }
        let p = pi1_presentation(&k, 0).unwrap();
        let h1 = space_homology(&k).unwrap().get(1).cloned().unwrap_or_default();
        let ab = abelianization(&p);
        check(ab == h1, || format!("{name}: abelianized π₁ = {ab}, H_1 = {h1}"))?;
        let simplified = tietze_simplify(&p, DEFAULT_TIETZE_BUDGET);
        check(abelianization(&simplified.presentation) == h1, || format!("{name}: Tietze changed the abelianization"))?;
        count += 1;
    }
    Ok(format!("{count} connected catalog spaces"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("homology axioms", axiom_suite),
        ("simplex modulo boundary", simplex_pairs),
        ("normalized = unnormalized", normalization),
        ("known-space table", known_table),
        ("operator identities", operator_identities),
        ("products and coefficients", products_and_coefficients),
        ("Kan and fibration checks", kan_checks),
        ("covering suite", covering_suite),
        ("π₁ abelianizes to H₁", pi1_h1),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
