use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::sset::{Simplex, SimplicialMap, SimplicialSet};

/// Horn-lifting checks go up to this dimension unless told otherwise.
pub const DEFAULT_KAN_DIM: usize = 3;

/// A map `Λ[n]_k → K`: the faces `y_i` for `i ≠ k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornMap {
    pub n: usize,
    pub k: usize,
    faces: Vec<Option<Simplex>>,
}

impl HornMap {
    /// `faces` lists `y_i` for `i` in `0..=n` skipping `k`, in order.
    pub fn new(target: &SimplicialSet, n: usize, k: usize, faces: Vec<Simplex>) -> Result<Self> {
        if n == 0 || k > n {
            return Err(Error::HornIndex { n, k });
        }
        if faces.len() != n {
            return Err(Error::IncompatibleHorn(format!("{} faces given for Λ[{n}]_{k}", faces.len())));
        }
        let mut slots: Vec<Option<Simplex>> = faces.into_iter().map(Some).collect();
        slots.insert(k, None);
        let h = Self { n, k, faces: slots };
        for (i, y) in h.faces.iter().enumerate().filter_map(|(i, y)| y.as_ref().map(|y| (i, y))) {
            if y.dim() + 1 != n || !target.contains(y.base()) {
                return Err(Error::IncompatibleHorn(format!("face {i} is not an {}-simplex of the target", n - 1)));
            }
        }
        for j in 0..=n {
            for i in 0..j {
                if !compatible(target, &h.faces, i, j)? {
                    return Err(Error::IncompatibleHorn(format!("d_{i} y_{j} differs from d_{} y_{i}", j - 1)));
                }
            }
        }
        Ok(h)
    }

    pub fn face(&self, i: usize) -> Option<&Simplex> {
        self.faces.get(i).and_then(Option::as_ref)
    }

    pub fn describe(&self, target: &SimplicialSet) -> String {
        let parts: Vec<String> = self
            .faces
            .iter()
            .enumerate()
            .filter_map(|(i, y)| y.as_ref().map(|y| format!("d{i}={}", target.describe(y))))
            .collect();
        format!("Λ[{}]_{} ({})", self.n, self.k, parts.join(", "))
    }
}

/// `d_i y_j = d_{j−1} y_i` when both faces are present.
fn compatible(target: &SimplicialSet, faces: &[Option<Simplex>], i: usize, j: usize) -> Result<bool> {
    match (&faces[i], &faces[j]) {
        (Some(yi), Some(yj)) if yi.dim() > 0 => Ok(target.face(yj, i)? == target.face(yi, j - 1)?),
        _ => Ok(true),
    }
}

fn matches_horn(target: &SimplicialSet, x: &Simplex, h: &HornMap) -> bool {
    (0..=h.n).all(|i| match &h.faces[i] {
        Some(y) => target.face(x, i).map_or(false, |f| &f == y),
        None => true,
    })
}

/// All `n`-simplices (degenerate ones included) whose faces agree with the
/// horn away from `k`.
pub fn fill_horn(target: &SimplicialSet, h: &HornMap) -> Vec<Simplex> {
    target.all_simplices(h.n).into_iter().filter(|x| matches_horn(target, x, h)).collect()
}

/// Every horn `Λ[n]_k → K`, in lexicographic order of face choices.
pub fn enumerate_horns(target: &SimplicialSet, n: usize, k: usize) -> Vec<HornMap> {
    let candidates = target.all_simplices(n - 1);
    let positions: Vec<usize> = (0..=n).filter(|&i| i != k).collect();
    let mut slots: Vec<Option<Simplex>> = vec![None; n + 1];
    let mut out = Vec::new();
    fn rec(
        target: &SimplicialSet,
        n: usize,
        k: usize,
        positions: &[usize],
        depth: usize,
        candidates: &[Simplex],
        slots: &mut Vec<Option<Simplex>>,
        out: &mut Vec<HornMap>,
    ) {
        let Some(&j) = positions.get(depth) else {
            out.push(HornMap { n, k, faces: slots.clone() });
            return;
        };
        for c in candidates {
            slots[j] = Some(c.clone());
            let ok = positions[..depth].iter().all(|&i| compatible(target, slots, i, j).unwrap_or(false));
            if ok {
                rec(target, n, k, positions, depth + 1, candidates, slots, out);
            }
        }
        slots[j] = None;
    }
    rec(target, n, k, &positions, 0, &candidates, &mut slots, &mut out);
    out
}

fn problems(up_to: usize) -> Vec<(usize, usize)> {
    (1..=up_to).flat_map(|n| (0..=n).map(move |k| (n, k))).collect()
}

/// Horns counted and unfillable horns found, per `(n, k)`.
#[derive(Clone, Debug)]
pub struct KanReport {
    pub up_to: usize,
    /// `(n, k, horns, unfillable)`.
    pub checked: Vec<(usize, usize, usize, usize)>,
    pub failures: Vec<String>,
    pub failure_count: usize,
}

/// Witnesses kept per report; the total count is always exact.
const WITNESS_LIMIT: usize = 20;

impl KanReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        for n in 1..=self.up_to {
            let horns: usize = self.checked.iter().filter(|c| c.0 == n).map(|c| c.2).sum();
            let bad: usize = self.checked.iter().filter(|c| c.0 == n).map(|c| c.3).sum();
            if bad == 0 {
                out.push(format!("PASS kan dim {n}: {horns} horns, all fillable"));
            } else {
                out.push(format!("FAIL kan dim {n}: {horns} horns, {bad} unfillable"));
            }
        }
        out.extend(self.failures.iter().map(|w| format!("witness {w}")));
        out
    }
}

/// Enumerates all horns through `up_to` and collects the unfillable ones.
pub fn kan_check(k: &SimplicialSet, up_to: usize) -> KanReport {
    let results: Vec<((usize, usize, usize, usize), Vec<String>)> = problems(up_to)
        .into_par_iter()
        .map(|(n, kk)| {
            let horns = enumerate_horns(k, n, kk);
            let simplices = k.all_simplices(n);
            let bad: Vec<&HornMap> =
                horns.iter().filter(|h| !simplices.iter().any(|x| matches_horn(k, x, h))).collect();
            let witnesses = bad.iter().take(WITNESS_LIMIT).map(|h| h.describe(k)).collect();
            ((n, kk, horns.len(), bad.len()), witnesses)
        })
        .collect();
    let mut report = KanReport { up_to, checked: Vec::new(), failures: Vec::new(), failure_count: 0 };
    for (c, w) in results {
        report.checked.push(c);
        report.failure_count += c.3;
        for x in w {
            if report.failures.len() < WITNESS_LIMIT {
                report.failures.push(x);
            }
        }
    }
    report
}

/// Relative lifting problems `(horn in E, simplex b of B over it)` along a
/// map `E → B`, and how many lifts each has.
#[derive(Clone, Debug)]
pub struct FibrationReport {
    pub up_to: usize,
    pub problems: usize,
    pub unfillable: Vec<String>,
    pub unfillable_count: usize,
    pub non_unique: Vec<String>,
    pub non_unique_count: usize,
}

impl FibrationReport {
    /// Every problem has a lift.
    pub fn is_fibration(&self) -> bool {
        self.unfillable_count == 0
    }

    /// Every problem has exactly one lift.
    pub fn lifts_unique(&self) -> bool {
        self.unfillable_count == 0 && self.non_unique_count == 0
    }

    pub fn lines(&self) -> Vec<String> {
        let mut out = vec![format!(
            "{} fibration through dim {}: {} lifting problems, {} without a lift",
            if self.is_fibration() { "PASS" } else { "FAIL" },
            self.up_to,
            self.problems,
            self.unfillable_count
        )];
        out.extend(self.unfillable.iter().map(|w| format!("witness {w}")));
        out
    }
}

/// For each horn `y` in the source and each `b` in the target with
/// `d_i b = f(y_i)` for `i ≠ k`, counts the `x` with `d_i x = y_i` and
/// `f(x) = b`.
pub fn fibration_check(f: &SimplicialMap, up_to: usize) -> Result<FibrationReport> {
    let e = f.source();
    let b = f.target();
    type Part = (usize, Vec<String>, usize, Vec<String>, usize);
    let parts: Vec<Part> = problems(up_to)
        .into_par_iter()
        .map(|(n, k)| -> Result<Part> {
            let base_simplices = b.all_simplices(n);
            let total: Vec<Simplex> = e.all_simplices(n);
            let images: Vec<Simplex> = total.iter().map(|x| f.apply(x)).collect::<Result<_>>()?;
            let mut count = 0;
            let (mut none, mut none_n, mut many, mut many_n) = (Vec::new(), 0, Vec::new(), 0);
            for h in enumerate_horns(e, n, k) {
                let pushed: Vec<Option<Simplex>> =
                    h.faces.iter().map(|y| y.as_ref().map(|y| f.apply(y)).transpose()).collect::<Result<_>>()?;
                for bs in &base_simplices {
                    let over = (0..=n).all(|i| match &pushed[i] {
                        Some(y) => b.face(bs, i).map_or(false, |fb| &fb == y),
                        None => true,
                    });
                    if !over {
                        continue;
                    }
                    count += 1;
                    let lifts = total
                        .iter()
                        .zip(&images)
                        .filter(|(x, img)| *img == bs && matches_horn(e, x, &h))
                        .count();
                    let witness = || format!("{} over {}", h.describe(e), b.describe(bs));
                    if lifts == 0 {
                        none_n += 1;
                        if none.len() < WITNESS_LIMIT {
                            none.push(witness());
                        }
                    } else if lifts > 1 {
                        many_n += 1;
                        if many.len() < WITNESS_LIMIT {
                            many.push(witness());
                        }
                    }
                }
            }
            Ok((count, none, none_n, many, many_n))
        })
        .collect::<Result<_>>()?;
    let mut report = FibrationReport {
        up_to,
        problems: 0,
        unfillable: Vec::new(),
        unfillable_count: 0,
        non_unique: Vec::new(),
        non_unique_count: 0,
    };
    for (count, none, none_n, many, many_n) in parts {
        report.problems += count;
        report.unfillable_count += none_n;
        report.non_unique_count += many_n;
        report.unfillable.extend(none);
        report.non_unique.extend(many);
    }
    report.unfillable.truncate(WITNESS_LIMIT);
    report.non_unique.truncate(WITNESS_LIMIT);
    Ok(report)
}
