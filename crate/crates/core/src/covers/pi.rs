use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::chain::{invariant_factors, AbelianGroup, IntegerMatrix};
use crate::error::{Error, Result};
use crate::sset::{GenId, Simplex, SimplicialSet};

/// Connected components of the vertex graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    /// Smallest vertex of each component, ascending.
    pub representatives: Vec<usize>,
    /// Component index of each vertex.
    pub component_of: Vec<usize>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }
}

fn endpoints(k: &SimplicialSet, edge: usize) -> (usize, usize) {
    let faces = &k.levels()[1][edge].faces;
    (faces[1].base().idx, faces[0].base().idx)
}

pub fn pi0(k: &SimplicialSet) -> Components {
    let n = k.count(0);
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut c = x;
        while p[c] != r {
            let next = p[c];
            p[c] = r;
            c = next;
        }
        r
    }
    for e in 0..k.count(1) {
        let (a, b) = endpoints(k, e);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let roots: Vec<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
    let mut representatives: Vec<usize> = roots.clone();
    representatives.sort_unstable();
    representatives.dedup();
    let component_of = roots.iter().map(|r| representatives.binary_search(r).expect("root listed")).collect();
    Components { representatives, component_of }
}

/// A letter: generator index and exponent `±1`.
pub type Letter = (usize, i8);
pub type Word = Vec<Letter>;

/// A finite group presentation. Generators of edge-path presentations
/// remember the edge they come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
    /// For each generator, the non-degenerate edge it stands for.
    pub edges: Vec<Option<usize>>,
    /// Non-degenerate edges of the spanning tree.
    pub tree: Vec<usize>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        if let Some(&(g, _)) = relators.iter().flatten().find(|(g, _)| *g >= generators.len()) {
            return Err(Error::InvalidGroup(format!("relator uses unknown generator {g}")));
        }
        let edges = vec![None; generators.len()];
        Ok(Self { generators, relators, edges, tree: Vec::new() })
    }

    pub fn word_string(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = w
            .iter()
            .map(|&(g, e)| if e > 0 { self.generators[g].clone() } else { format!("{}^-1", self.generators[g]) })
            .collect();
        parts.join("*")
    }

    /// Exponent-sum matrix, one row per relator.
    pub fn relation_matrix(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(self.relators.len(), self.generators.len());
        for (r, w) in self.relators.iter().enumerate() {
            for &(g, e) in w {
                m.add_at(r, g, &BigInt::from(e));
            }
        }
        m
    }
}

/// `⟨g1, …, gm | r1, …, rk⟩`.
impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.word_string(r)).collect();
        write!(f, "⟨{} | {}⟩", self.generators.join(", "), rels.join(", "))
    }
}

pub fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        match out.last() {
            Some(&(g, e)) if g == l.0 && e == -l.1 => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

fn cyclic_reduce(w: &[Letter]) -> Word {
    let mut w = free_reduce(w);
    while w.len() >= 2 {
        let (a, b) = (w[0], w[w.len() - 1]);
        if a.0 == b.0 && a.1 == -b.1 {
            w.pop();
            w.remove(0);
        } else {
            break;
        }
    }
    w
}

pub fn invert(w: &[Letter]) -> Word {
    w.iter().rev().map(|&(g, e)| (g, -e)).collect()
}

/// Edge-path presentation of `π_1(K, base)`: breadth-first spanning tree
/// (edges tried in ascending id), one generator `e{id}` per non-tree
/// non-degenerate edge, one relator `d2 · d0 · d1⁻¹` per 2-simplex (freely
/// reduced, trivial ones dropped).
pub fn pi1_presentation(k: &SimplicialSet, base: usize) -> Result<GroupPresentation> {
    if base >= k.count(0) {
        return Err(Error::DanglingId(GenId::new(0, base)));
    }
    let comps = pi0(k);
    if comps.count() != 1 {
        return Err(Error::Disconnected(comps.count()));
    }
    let n_edges = k.count(1);
    let mut visited = vec![false; k.count(0)];
    let mut in_tree = vec![false; n_edges];
    let mut queue = VecDeque::from([base]);
    visited[base] = true;
    while let Some(v) = queue.pop_front() {
        for e in 0..n_edges {
            let (a, b) = endpoints(k, e);
            let other = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if !visited[other] {
                visited[other] = true;
                in_tree[e] = true;
                queue.push_back(other);
            }
        }
    }
    let mut generators = Vec::new();
    let mut edges = Vec::new();
    let mut gen_of = vec![None; n_edges];
    for e in 0..n_edges {
        if !in_tree[e] {
            gen_of[e] = Some(generators.len());
            generators.push(format!("e{e}"));
            edges.push(Some(e));
        }
    }
    let word = |s: &Simplex| -> Word {
        if s.is_degenerate() {
            return Vec::new();
        }
        gen_of[s.base().idx].map(|g| vec![(g, 1)]).unwrap_or_default()
    };
    let mut relators = Vec::new();
    for t in k.ids(2) {
        let faces = &k.generator(t)?.faces;
        let mut w = word(&faces[2]);
        w.extend(word(&faces[0]));
        w.extend(invert(&word(&faces[1])));
        let w = free_reduce(&w);
        if !w.is_empty() {
            relators.push(w);
        }
    }
    let tree = (0..n_edges).filter(|&e| in_tree[e]).collect();
    Ok(GroupPresentation { generators, relators, edges, tree })
}

/// Result of a bounded Tietze simplification.
#[derive(Clone, Debug)]
pub struct Simplified {
    pub presentation: GroupPresentation,
    pub steps: usize,
    /// The budget ran out before no further move applied.
    pub exhausted: bool,
}

impl Simplified {
    /// No generators left: the group is certainly trivial. A non-empty
    /// result decides nothing.
    pub fn certainly_trivial(&self) -> bool {
        self.presentation.generators.is_empty()
    }
}

pub const DEFAULT_TIETZE_BUDGET: usize = 1000;

/// Cyclically reduces relators, drops trivial and repeated ones, and
/// eliminates a generator occurring exactly once in some relator. Every
/// relator rewrite and every elimination costs one step.
pub fn tietze_simplify(p: &GroupPresentation, budget: usize) -> Simplified {
    let mut gens = p.generators.clone();
    let mut edges = p.edges.clone();
    let mut rels: Vec<Word> = p.relators.clone();
    let mut steps = 0;
    loop {
        let mut cleaned: Vec<Word> = Vec::new();
        for r in &rels {
            let c = cyclic_reduce(r);
            if !c.is_empty() && !cleaned.contains(&c) && !cleaned.contains(&invert(&c)) {
                cleaned.push(c);
            }
        }
        rels = cleaned;
        if steps >= budget {
            let presentation = GroupPresentation { generators: gens, relators: rels, edges, tree: p.tree.clone() };
            return Simplified { presentation, steps, exhausted: true };
        }
        let pick = rels.iter().enumerate().find_map(|(ri, r)| {
            (0..gens.len()).find(|&g| r.iter().filter(|l| l.0 == g).count() == 1).map(|g| (ri, g))
        });
        let Some((ri, g)) = pick else {
            let presentation = GroupPresentation { generators: gens, relators: rels, edges, tree: p.tree.clone() };
            return Simplified { presentation, steps, exhausted: false };
        };
        // r = u g^e v  ⇒  g^e = u⁻¹ v⁻¹, so g = (u⁻¹ v⁻¹)^e.
        let r = rels.remove(ri);
        let pos = r.iter().position(|l| l.0 == g).expect("occurs once");
        let e = r[pos].1;
        let mut value = invert(&r[..pos]);
        value.extend(invert(&r[pos + 1..]));
        let value = if e > 0 { value } else { invert(&value) };
        steps += 1;
        for w in rels.iter_mut() {
            if w.iter().any(|l| l.0 == g) {
                let mut out = Vec::new();
                for &(h, f) in w.iter() {
                    if h == g {
                        out.extend(if f > 0 { value.clone() } else { invert(&value) });
                    } else {
                        out.push((h, f));
                    }
                }
                *w = free_reduce(&out);
                steps += 1;
            }
        }
        gens.remove(g);
        edges.remove(g);
        for w in rels.iter_mut() {
            for l in w.iter_mut() {
                if l.0 > g {
                    l.0 -= 1;
                }
            }
        }
    }
}

/// `Z^m` modulo the exponent sums of the relators.
pub fn abelianization(p: &GroupPresentation) -> AbelianGroup {
    let m = p.relation_matrix();
    let factors = invariant_factors(&m);
    let mut orders: Vec<BigInt> = factors.clone();
    orders.extend(std::iter::repeat(BigInt::zero()).take(p.generators.len() - factors.len()));
    AbelianGroup::from_orders(&orders)
}
