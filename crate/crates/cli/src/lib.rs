//! Command-line front end: argument parsing, loading spaces and rendering
//! reports. `main.rs` only wires [`run`] to the process.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use kansets::chain::{
    cohomology_with_coefficients, euler_characteristic, homology, homology_with_coefficients, mayer_vietoris,
    normalized_chains, pair_les, rational_betti, uct_check, AbelianGroup,
};
use kansets::covers::{
    abelianization, build_cover, fill_horn, first_nontrivial_hom, kan_check, labeling_from_hom, pi1_presentation,
    tietze_simplify, verify_covering, FiniteGroup, HornMap, DEFAULT_KAN_DIM, DEFAULT_TIETZE_BUDGET,
};
use kansets::io::{catalog, parse_document, parse_group, parse_simplex, print_document, SpaceDocument, CATALOG};
use kansets::operators::{barycentric_subdivide, kunneth_check, sset_to_complex, CohomologyRing};
use kansets::sset::{subcomplex, GenId, Subcomplex};
use kansets::{Error, SimplicialSet};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Machine,
}

#[derive(Debug, Parser)]
#[command(name = "kansets", version, about = "Homotopy invariants of finitely presented simplicial sets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Accepted for interface stability; every command is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Args)]
pub struct SpaceArg {
    /// Catalog name, e.g. `rp2`, `delta:2`, `horn:3:1` (see `catalog-list`).
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    pub space: Option<String>,
    /// Path to a space document.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Integral homology.
    Homology {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Cohomology with coefficients (default Z).
    Cohomology {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value = "Z")]
        coeff: String,
    },
    /// Homology with coefficients.
    Coeffs {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value = "Z/2")]
        coeff: String,
    },
    /// Universal coefficient check for homology and cohomology.
    Uct {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value = "Z/2")]
        coeff: String,
    },
    /// Long exact sequence of a pair; the subcomplex defaults to the
    /// codimension-one skeleton.
    Les {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long)]
        dim: Option<usize>,
        /// Generators spanning the subcomplex, e.g. `1:0,1:2` (closed under faces).
        #[arg(long)]
        sub: Option<String>,
    },
    /// Mayer–Vietoris sequence of two subcomplexes covering the space.
    Mv {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, requires = "b")]
        a: Option<String>,
        #[arg(long, requires = "a")]
        b: Option<String>,
    },
    /// Cup product table with coefficients Z or Z/m.
    Cup {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value = "Z")]
        coeff: String,
    },
    /// Künneth formula for the product with a second space.
    Kunneth {
        #[command(flatten)]
        space: SpaceArg,
        /// Catalog name of the second factor.
        #[arg(long, conflicts_with = "with_file", required_unless_present = "with_file")]
        with: Option<String>,
        #[arg(long)]
        with_file: Option<PathBuf>,
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Euler characteristic, cross-checked against rational betti numbers.
    Euler {
        #[command(flatten)]
        space: SpaceArg,
    },
    /// Horn filling through a dimension (default 3).
    Kan {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long, default_value_t = DEFAULT_KAN_DIM)]
        dim: usize,
    },
    /// Fillers of horns Λ[dim]_horn: one given by --faces, or all of them.
    Fill {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        horn: usize,
        /// Faces in order skipping `horn`, e.g. `s0[0:0],[1:0]`.
        #[arg(long)]
        faces: Option<String>,
    },
    /// Edge-path presentation of the fundamental group.
    Pi1 {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long, default_value_t = 0)]
        base: usize,
        #[arg(long, default_value_t = DEFAULT_TIETZE_BUDGET)]
        budget: usize,
    },
    /// Finite cover from a homomorphism of the fundamental group.
    Cover {
        #[command(flatten)]
        space: SpaceArg,
        /// Group table file, or `Z/n` or `S3`.
        #[arg(long, default_value = "Z/2")]
        group: String,
        /// Element names for the generators, comma separated. Defaults to the
        /// first non-trivial homomorphism in lexicographic order.
        #[arg(long)]
        images: Option<String>,
        #[arg(long, default_value_t = 0)]
        base: usize,
        /// Lifting checks go through this dimension.
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Print the cover as a space document.
        #[arg(long)]
        emit: bool,
    },
    /// Barycentric subdivision of a space that is an ordered simplicial complex.
    Subdivide {
        #[command(flatten)]
        space: SpaceArg,
    },
    /// Parse and validate a space.
    Validate {
        #[command(flatten)]
        space: SpaceArg,
    },
    /// List catalog names.
    CatalogList,
}

/// Outcome of one command. Text and machine renderings are deterministic;
/// `elapsed` is kept for callers and never rendered.
#[derive(Clone, Debug, Default)]
pub struct RunReport {
    pub command: String,
    pub results: Vec<(String, String)>,
    pub notes: Vec<String>,
    pub checks: Vec<(bool, String)>,
    pub elapsed: Duration,
}

impl RunReport {
    fn new(command: &str) -> Self {
        Self { command: command.to_string(), ..Self::default() }
    }

    fn result(&mut self, key: impl Into<String>, value: impl ToString) {
        self.results.push((key.into(), value.to_string()));
    }

    fn check(&mut self, passed: bool, text: impl Into<String>) {
        self.checks.push((passed, text.into()));
    }

    /// Splits lines of the core reports into checks and notes.
    fn absorb(&mut self, lines: Vec<String>) {
        for l in lines {
            if let Some(rest) = l.strip_prefix("PASS ") {
                self.check(true, rest);
            } else if let Some(rest) = l.strip_prefix("FAIL ") {
                self.check(false, rest);
            } else {
                self.notes.push(l);
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(ok, _)| *ok)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: Format) -> String {
        let mark = |ok: bool| if ok { "PASS" } else { "FAIL" };
        let mut out = String::new();
        match format {
            Format::Text => {
                if !self.results.is_empty() {
                    let parts: Vec<String> = self.results.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    out.push_str(&parts.join(" "));
                    out.push('\n');
                }
                for n in &self.notes {
                    out.push_str(n);
                    out.push('\n');
                }
                for (ok, text) in &self.checks {
                    out.push_str(&format!("{} {text}\n", mark(*ok)));
                }
            }
            Format::Machine => {
                out.push_str(&format!("command={}\n", self.command));
                for (k, v) in &self.results {
                    out.push_str(&format!("{k}={v}\n"));
                }
                for n in &self.notes {
                    out.push_str(&format!("note={n}\n"));
                }
                for (ok, text) in &self.checks {
                    out.push_str(&format!("check={} {text}\n", mark(*ok)));
                }
                out.push_str(&format!("status={}\n", mark(self.passed())));
            }
        }
        out
    }
}

fn read(path: &PathBuf) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Read { path: path.clone(), source })
}

fn load_document(arg: &SpaceArg) -> CliResult<SpaceDocument> {
    match (&arg.space, &arg.file) {
        (Some(name), _) => Ok(SpaceDocument::named(catalog(name)?, name.clone())),
        (None, Some(path)) => Ok(parse_document(&read(path)?)?),
        (None, None) => Err(CliError::Usage("one of --space or --file is required".into())),
    }
}

fn load(arg: &SpaceArg) -> CliResult<SimplicialSet> {
    load_document(arg).map(|d| d.space)
}

fn top(k: &SimplicialSet, dim: Option<usize>) -> usize {
    dim.unwrap_or_else(|| k.top_dim().unwrap_or(0))
}

fn coefficients(spec: &str) -> CliResult<AbelianGroup> {
    Ok(spec.parse()?)
}

fn gen_ids(spec: &str) -> CliResult<BTreeSet<GenId>> {
    spec.split(',')
        .map(|t| {
            let (d, i) = t.trim().split_once(':').ok_or_else(|| CliError::Usage(format!("bad generator id {t:?}")))?;
            let parse = |s: &str| s.parse::<usize>().map_err(|_| CliError::Usage(format!("bad generator id {t:?}")));
            Ok(GenId::new(parse(d)?, parse(i)?))
        })
        .collect()
}

fn closed_sub(k: &SimplicialSet, ids: &BTreeSet<GenId>) -> CliResult<Subcomplex> {
    Ok(subcomplex(k, ids, true)?)
}

fn group_from_spec(spec: &str) -> CliResult<FiniteGroup> {
    let path = PathBuf::from(spec);
    if path.exists() {
        return Ok(parse_group(&read(&path)?)?);
    }
    if spec == "S3" {
        return Ok(FiniteGroup::symmetric3());
    }
    if let Some(n) = spec.strip_prefix("Z/").and_then(|n| n.parse::<usize>().ok()) {
        return Ok(FiniteGroup::cyclic(n)?);
    }
    Err(CliError::Usage(format!("{spec:?} is neither a group file nor Z/n or S3")))
}

fn degree_results(report: &mut RunReport, symbol: &str, groups: &[AbelianGroup]) {
    for (n, g) in groups.iter().enumerate() {
        report.result(format!("{symbol}{n}"), g);
    }
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> CliResult<RunReport> {
    let start = Instant::now();
    let mut report = execute(&cli.command)?;
    report.elapsed = start.elapsed();
    Ok(report)
}

fn execute(command: &Command) -> CliResult<RunReport> {
    match command {
        Command::Homology { space, dim } => {
            let k = load(space)?;
            let mut r = RunReport::new("homology");
            degree_results(&mut r, "H_", &homology(&normalized_chains(&k), top(&k, *dim))?);
            Ok(r)
        }
        Command::Cohomology { space, dim, coeff } => {
            let k = load(space)?;
            let pi = coefficients(coeff)?;
            let mut r = RunReport::new("cohomology");
            degree_results(&mut r, "H^", &cohomology_with_coefficients(&normalized_chains(&k), top(&k, *dim), &pi)?);
            Ok(r)
        }
        Command::Coeffs { space, dim, coeff } => {
            let k = load(space)?;
            let pi = coefficients(coeff)?;
            let mut r = RunReport::new("coeffs");
            degree_results(&mut r, "H_", &homology_with_coefficients(&normalized_chains(&k), top(&k, *dim), &pi)?);
            Ok(r)
        }
        Command::Uct { space, dim, coeff } => {
            let k = load(space)?;
            let report = uct_check(&normalized_chains(&k), top(&k, *dim), &coefficients(coeff)?)?;
            let mut r = RunReport::new("uct");
            r.absorb(report.lines());
            Ok(r)
        }
        Command::Les { space, dim, sub } => {
            let k = load(space)?;
            let up_to = top(&k, *dim);
            let ids = match sub {
                Some(s) => gen_ids(s)?,
                None => k.all_ids().filter(|id| Some(id.dim) < k.top_dim()).collect(),
            };
            let l = closed_sub(&k, &ids)?;
            let seq = pair_les(&k, &l, up_to)?;
            let mut r = RunReport::new("les");
            for q in 0..=up_to {
                r.result(format!("H_{q}(K,L)"), seq.group(&format!("H_{q}(K,L)")).cloned().unwrap_or_default());
            }
            r.absorb(seq.report_lines());
            Ok(r)
        }
        Command::Mv { space, dim, a, b } => {
            let k = load(space)?;
            let up_to = top(&k, *dim);
            let (ia, ib) = match (a, b) {
                (Some(a), Some(b)) => (gen_ids(a)?, gen_ids(b)?),
                _ => default_cover(&k),
            };
            let seq = mayer_vietoris(&k, &closed_sub(&k, &ia)?, &closed_sub(&k, &ib)?, up_to)?;
            let mut r = RunReport::new("mv");
            for q in 0..=up_to {
                r.result(format!("H_{q}(K)"), seq.group(&format!("H_{q}(K)")).cloned().unwrap_or_default());
            }
            r.absorb(seq.report_lines());
            Ok(r)
        }
        Command::Cup { space, dim, coeff } => {
            let k = load(space)?;
            let pi = coefficients(coeff)?;
            let orders = pi.cyclic_orders();
            let [modulus] = &orders[..] else {
                return Err(Error::BadCoefficients(coeff.clone()).into());
            };
            let ring = CohomologyRing::new(&k, modulus.clone(), top(&k, *dim))?;
            let mut r = RunReport::new("cup");
            r.notes.extend(ring.to_string().lines().map(str::to_string));
            r.check(ring.is_graded_commutative()?, "graded commutativity on generators");
            r.check(ring.is_associative()?, "associativity on generators");
            Ok(r)
        }
        Command::Kunneth { space, with, with_file, dim } => {
            let k = load(space)?;
            let l = load(&SpaceArg { space: with.clone(), file: with_file.clone() })?;
            let up_to = dim.unwrap_or(top(&k, None) + top(&l, None));
            let report = kunneth_check(&k, &l, up_to)?;
            let mut r = RunReport::new("kunneth");
            r.absorb(report.lines());
            Ok(r)
        }
        Command::Euler { space } => {
            let k = load(space)?;
            let chi = euler_characteristic(&k);
            let betti = rational_betti(&normalized_chains(&k), top(&k, None));
            let alt: i64 = betti.iter().enumerate().map(|(n, &b)| if n % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
            let mut r = RunReport::new("euler");
            r.result("chi", chi);
            r.check(chi == alt, format!("euler: generator count {chi} = alternating betti sum {alt}"));
            Ok(r)
        }
        Command::Kan { space, dim } => {
            let k = load(space)?;
            let mut r = RunReport::new("kan");
            r.absorb(kan_check(&k, *dim).lines());
            Ok(r)
        }
        Command::Fill { space, dim, horn, faces } => fill(&load(space)?, *dim, *horn, faces.as_deref()),
        Command::Pi1 { space, base, budget } => {
            let k = load(space)?;
            let p = pi1_presentation(&k, *base)?;
            let s = tietze_simplify(&p, *budget);
            let ab = abelianization(&p);
            let h1 = homology(&normalized_chains(&k), 1)?.pop().unwrap_or_default();
            let mut r = RunReport::new("pi1");
            r.result("generators", p.generators.len());
            r.result("relators", p.relators.len());
            r.result("abelianization", &ab);
            r.notes.push(format!("presentation {p}"));
            r.notes.push(format!(
                "simplified {} ({} steps{})",
                s.presentation,
                s.steps,
                if s.exhausted { ", budget exhausted" } else { "" }
            ));
            if s.certainly_trivial() {
                r.notes.push("fundamental group is trivial".into());
            }
            r.check(ab == h1, format!("abelianization {ab} = H_1 {h1}"));
            Ok(r)
        }
        Command::Cover { space, group, images, base, dim, emit } => {
            let doc = load_document(space)?;
            let k = &doc.space;
            let g = group_from_spec(group)?;
            let p = pi1_presentation(k, *base)?;
            let images = match images {
                Some(list) => list
                    .split(',')
                    .map(|n| g.element(n.trim()).ok_or_else(|| CliError::Usage(format!("no element named {n:?}"))))
                    .collect::<CliResult<Vec<_>>>()?,
                None => first_nontrivial_hom(&p, &g, 1_000_000)
                    .ok_or_else(|| CliError::Usage("no non-trivial homomorphism found".into()))?,
            };
            let lab = labeling_from_hom(k, &p, &g, &images)?;
            let (e, proj) = build_cover(&lab)?;
            let mut r = RunReport::new("cover");
            let names: Vec<&str> = images.iter().map(|&x| g.name(x)).collect();
            r.result("images", names.join(","));
            r.result("counts", format!("{:?}", e.counts()));
            let h = homology(&normalized_chains(&e), e.top_dim().unwrap_or(0))?;
            degree_results(&mut r, "H_", &h);
            r.absorb(verify_covering(&proj, g.order(), *dim)?.lines());
            if *emit {
                let name = doc.name.as_deref().unwrap_or("space");
                let out = SpaceDocument::named(e, format!("cover of {name} by {group}"));
                r.notes.extend(print_document(&out).lines().map(str::to_string));
            }
            Ok(r)
        }
        Command::Subdivide { space } => {
            let k = load(space)?;
            let l = sset_to_complex(&k)?;
            let sub = barycentric_subdivide(&l)?;
            let mut r = RunReport::new("subdivide");
            r.result("counts", format!("{:?}", sub.complex.counts()));
            let (a, b) = (l.euler_characteristic(), sub.complex.euler_characteristic());
            r.check(a == b, format!("euler: chi(L) = {a}, chi(Sd L) = {b}"));
            r.check(sub.cone_is_acyclic()?, "mapping cone of sd is acyclic");
            Ok(r)
        }
        Command::Validate { space } => {
            let mut r = RunReport::new("validate");
            match load_document(space) {
                Ok(doc) => {
                    r.result("counts", format!("{:?}", doc.space.counts()));
                    r.check(doc.space.is_valid().is_ok(), "valid simplicial set");
                }
                Err(CliError::Core(e)) => r.check(false, format!("invalid: {e}")),
                Err(e) => return Err(e),
            }
            Ok(r)
        }
        Command::CatalogList => {
            let mut r = RunReport::new("catalog-list");
            let width = CATALOG.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
            r.notes.extend(CATALOG.iter().map(|(n, d)| format!("{n:width$}  {d}")));
            Ok(r)
        }
    }
}

/// First half of the top generators against the rest of the space.
fn default_cover(k: &SimplicialSet) -> (BTreeSet<GenId>, BTreeSet<GenId>) {
    let Some(d) = k.top_dim() else {
        return (BTreeSet::new(), BTreeSet::new());
    };
    let half = k.count(d).div_ceil(2);
    let a: BTreeSet<GenId> = k.ids(d).take(half).collect();
    let closed_a = kansets::sset::face_closure(k, &a).unwrap_or_default();
    let b = k.all_ids().filter(|id| !a.contains(id) && (id.dim == d || !closed_a.contains(id))).collect();
    (a, b)
}

fn fill(k: &SimplicialSet, n: usize, horn: usize, faces: Option<&str>) -> CliResult<RunReport> {
    let mut r = RunReport::new("fill");
    let horns = match faces {
        Some(list) => {
            let faces = list.split(',').map(|f| parse_simplex(f.trim())).collect::<Result<Vec<_>, _>>()?;
            vec![HornMap::new(k, n, horn, faces)?]
        }
        None => {
            if n == 0 || horn > n {
                return Err(Error::HornIndex { n, k: horn }.into());
            }
            kansets::covers::enumerate_horns(k, n, horn)
        }
    };
    let mut unfillable = 0;
    for h in &horns {
        let fillers = fill_horn(k, h);
        if fillers.is_empty() {
            unfillable += 1;
        }
        let shown: Vec<String> = fillers.iter().map(|x| k.describe(x)).collect();
        r.notes.push(format!("{}: {} fillers [{}]", h.describe(k), fillers.len(), shown.join(", ")));
    }
    r.result("horns", horns.len());
    r.result("unfillable", unfillable);
    r.check(unfillable == 0, format!("fill Λ[{n}]_{horn}: {} of {} horns fillable", horns.len() - unfillable, horns.len()));
    Ok(r)
}
