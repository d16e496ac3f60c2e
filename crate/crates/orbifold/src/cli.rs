//! The `ova` command line: argument parsing, input loading, and the text and
//! JSON renderings of each command's report.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

use crate::catalog::{self, ExpectedResults};
use crate::census::{self, CensusOptions, CensusReport, ModuleKind, SplitSummary};
use crate::cocycle::property_scan;
use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::gsigma::TwistedGroup;
use crate::isometry::{parity_equivalence_scan, Frame, Isometry};
use crate::lattice::{discriminant_group, EvenLattice, IntMat, QVec};
use crate::qseries::{self, OrbifoldCharacterReport, QSeries, ThetaFactorizationReport};

#[derive(Debug, Parser)]
#[command(name = "ova", about = "Irreducible modules of order-two lattice orbifolds", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenlattices, Q-bar and the discriminant group.
    Analyze(CommonArgs),
    /// The full list of irreducible modules with branchings.
    Classify(CommonArgs),
    /// Theta series of a coset of the input lattice.
    Theta(CommonArgs),
    /// Runs the sign, character and census checks.
    Verify(CommonArgs),
    /// Lists the built-in lattices, or runs one against its golden counts.
    Catalog(CommonArgs),
}

#[derive(Debug, Clone, clap::Args)]
pub struct CommonArgs {
    /// JSON file `{"name", "gram", "sigma"}`.
    #[arg(long, conflicts_with = "catalog")]
    pub input: Option<PathBuf>,
    /// A built-in entry such as `A2-dynkin`.
    #[arg(long)]
    pub catalog: Option<String>,
    /// Print JSON instead of text
    #[arg(long)]
    pub json: bool,
    /// Truncation order for series.
    #[arg(long, default_value_t = 10)]
    pub order: i64,
    /// Comma-separated rational coordinates of a coset representative.
    #[arg(long)]
    pub coset: Option<String>,
    /// Also list every candidate branching and whether it is realized.
    #[arg(long)]
    pub candidates: bool,
}

/// The input document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputSpec {
    #[serde(default)]
    pub name: Option<String>,
    pub gram: IntMat,
    pub sigma: IntMat,
}

impl InputSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("cannot parse input JSON: {}", e)))
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {}: {}", path.display(), e)))?;
        Self::from_json(&text)
    }

    pub fn from_catalog(name: &str) -> Result<Self> {
        let e = catalog::entry(name)?;
        Ok(InputSpec { name: Some(e.name), gram: e.lattice.gram().clone(), sigma: e.isometry.matrix().clone() })
    }

    pub fn build(&self) -> Result<(EvenLattice, Isometry)> {
        let l = EvenLattice::new(self.gram.clone())?;
        let s = Isometry::new(&l, self.sigma.clone())?;
        Ok((l, s))
    }
}

/// What a command printed and the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

fn resolve(args: &CommonArgs) -> Result<InputSpec> {
    match (&args.input, &args.catalog) {
        (Some(p), _) => InputSpec::load(p),
        (None, Some(n)) => InputSpec::from_catalog(n),
        (None, None) => Err(Error::Input("one of --input or --catalog is required".into())),
    }
}

fn order_of(args: &CommonArgs) -> Result<Rational> {
    if args.order < 0 {
        return Err(Error::Input("--order must be nonnegative".into()));
    }
    Ok(Rational::from_int(args.order))
}

/// Parses `r1,...,rn` into rationals.
pub fn parse_coset(s: &str) -> Result<QVec> {
    s.split(',').map(|t| t.parse()).collect()
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeReport {
    pub name: Option<String>,
    pub rank: usize,
    pub split: SplitSummary,
    pub plus_rank: usize,
    pub minus_rank: usize,
    /// Invariant factors of `Q*/Q`.
    pub discriminant_invariants: Vec<i64>,
    /// Invariant factors of `Q̄*/Q̄`.
    pub q_bar_discriminant_invariants: Vec<i64>,
    /// Classes of `Q/2Q` on which the parity criterion for `Q̄` was checked.
    pub parity_classes_checked: usize,
}

pub fn cmd_analyze(spec: &InputSpec) -> Result<AnalyzeReport> {
    let (l, s) = spec.build()?;
    let frame = Frame::new(&l, &s)?;
    Ok(AnalyzeReport {
        name: spec.name.clone(),
        rank: l.rank(),
        split: census::split_summary(&frame),
        plus_rank: frame.plus_rank(),
        minus_rank: frame.minus_rank(),
        discriminant_invariants: discriminant_group(&l).invariant_factors,
        q_bar_discriminant_invariants: discriminant_group(&frame.lattice).invariant_factors,
        parity_classes_checked: parity_equivalence_scan(&l, &s)?,
    })
}

pub fn cmd_classify(spec: &InputSpec, candidates: bool) -> Result<CensusReport> {
    let (l, s) = spec.build()?;
    let opts = CensusOptions { candidates, name: spec.name.clone(), ..Default::default() };
    census::full_census_with(&l, &s, &opts)
}

/// Theta series of `coset + Q` in the coordinates of `Q`; the zero coset by default.
pub fn cmd_theta(spec: &InputSpec, coset: Option<&[Rational]>, order: &Rational) -> Result<QSeries> {
    let (l, _) = spec.build()?;
    let rep: QVec = match coset {
        Some(c) if c.len() != l.rank() => {
            return Err(Error::Input(format!("coset has {} entries but the lattice has rank {}", c.len(), l.rank())))
        }
        Some(c) => c.to_vec(),
        None => vec![Rational::zero(); l.rank()],
    };
    Ok(qseries::theta(&l, &rep, order))
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub name: Option<String>,
    pub items: Vec<VerifyItem>,
    pub theta_factorization: ThetaFactorizationReport,
    pub orbifold_character: OrbifoldCharacterReport,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }
}

fn item(name: &str, passed: bool, detail: impl Into<String>) -> VerifyItem {
    VerifyItem { name: name.into(), passed, detail: detail.into() }
}

/// Compares census counts with golden values.
pub fn compare_expected(report: &CensusReport, expected: &ExpectedResults) -> Vec<VerifyItem> {
    let c = &report.counts;
    let pairs = [
        ("untwisted-type count", c.untwisted, expected.untwisted),
        ("twisted-type count", c.twisted, expected.twisted),
        ("total count", c.total, expected.total),
        ("N_tw", c.n_tw, expected.n_tw),
    ];
    let mut out: Vec<VerifyItem> = pairs
        .iter()
        .map(|(n, got, want)| item(n, got == want, format!("computed {}, expected {}", got, want)))
        .collect();
    out.push(item(
        "[Q:Q-bar]",
        c.q_bar_index == expected.q_bar_index,
        format!("computed {}, expected {}", c.q_bar_index, expected.q_bar_index),
    ));
    out
}

pub fn cmd_verify(spec: &InputSpec, order: &Rational, expected: Option<&ExpectedResults>) -> Result<VerifyReport> {
    let (l, s) = spec.build()?;
    let frame = Frame::new(&l, &s)?;
    let group = TwistedGroup::new(&frame)?;
    let mut items = Vec::new();

    let mut rng = StdRng::seed_from_u64(0x6f7661);
    let scan = property_scan(&frame.lattice, &frame.sigma, &group.eps, &group.eta, 10_000, 8, &mut rng);
    items.push(item(
        "cocycle and eta identities on Q-bar",
        scan.failures.is_empty(),
        format!(
            "{} random and {} exhaustive pairs{}",
            scan.random_pairs,
            scan.exhaustive_pairs,
            scan.failures.first().map(|f| format!("; first failure: {}", f)).unwrap_or_default()
        ),
    ));
    let classes = parity_equivalence_scan(&l, &s)?;
    items.push(item("(a|sa) even iff |a+|^2 integral", true, format!("{} classes of Q/2Q", classes)));

    let theta = qseries::check_theta_factorization(&frame, order);
    items.push(item(
        "theta factorization over Q-bar/L",
        theta.passed,
        theta.failure.clone().unwrap_or_else(|| format!("{} cosets to order {}", theta.cosets, order)),
    ));
    let orb = qseries::orbifold_character_two_ways(&frame, &group.eta, order)?;
    items.push(item(
        "orbifold character two ways",
        orb.passed,
        orb.failure.clone().unwrap_or_else(|| format!("agree to order {}", order)),
    ));

    let report = cmd_classify(spec, false)?;
    for c in &report.checks {
        items.push(item(&format!("census: {}", c.name), c.passed, c.detail.clone()));
    }
    if let Some(e) = expected {
        items.extend(compare_expected(&report, e).into_iter().map(|mut i| {
            i.name = format!("golden: {}", i.name);
            i
        }));
    }
    Ok(VerifyReport { name: spec.name.clone(), items, theta_factorization: theta, orbifold_character: orb })
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogListing {
    pub name: String,
    pub rank: usize,
    pub expected: ExpectedResults,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogRun {
    pub name: String,
    pub expected: ExpectedResults,
    pub report: CensusReport,
    pub comparison: Vec<VerifyItem>,
    pub seconds: f64,
}

pub fn cmd_catalog_list() -> Result<Vec<CatalogListing>> {
    catalog::names()
        .into_iter()
        .map(|n| {
            let e = catalog::entry(&n)?;
            Ok(CatalogListing { name: e.name, rank: e.rank, expected: e.expected })
        })
        .collect()
}

pub fn cmd_catalog_run(name: &str, candidates: bool) -> Result<CatalogRun> {
    let e = catalog::entry(name)?;
    let opts = CensusOptions { candidates, name: Some(e.name.clone()), ..Default::default() };
    let (report, seconds) = census::timed_census(&e.lattice, &e.isometry, &opts)?;
    let comparison = compare_expected(&report, &e.expected);
    Ok(CatalogRun { name: e.name, expected: e.expected, report, comparison, seconds })
}

fn render_classify(r: &CensusReport) -> String {
    let mut s = String::new();
    let c = &r.counts;
    let name = r.input.name.clone().unwrap_or_else(|| "input".into());
    let _ = writeln!(s, "{}: {} untwisted-type + {} twisted-type = {} irreducible modules", name, c.untwisted, c.twisted, c.total);
    let _ = writeln!(
        s,
        "[Q:Q-bar] = {}, [Q-bar:L] = {}, |Q-bar*/Q-bar| = {}, fixed cosets = {}, N_tw = {}",
        c.q_bar_index, c.l_index, c.discriminant_order, c.fixed_cosets, c.n_tw
    );
    let _ = writeln!(s, "V_Q^sigma = {}", summands(&r.orbifold_decomposition));
    let _ = writeln!(s);
    let _ = writeln!(s, "{:>3}  {:<9}  {:<6}  {:<8}  branching", "#", "kind", "sign", "h");
    for (i, m) in r.modules.iter().enumerate() {
        let kind = match m.kind {
            ModuleKind::Untwisted => "untwisted",
            ModuleKind::Twisted => "twisted",
        };
        let sign = match m.eigen_sign {
            census::EigenSign::Plus => "+",
            census::EigenSign::Minus => "-",
            census::EigenSign::Merged => "merged",
        };
        let _ = writeln!(s, "{:>3}  {:<9}  {:<6}  {:<8}  {}", i + 1, kind, sign, m.lowest_weight.to_string(), m.describe());
    }
    if let Some(cands) = &r.candidates {
        let _ = writeln!(s);
        let _ = writeln!(s, "candidate branchings ({} realized of {}):", cands.iter().filter(|c| c.realized).count(), cands.len());
        for c in cands {
            let _ = writeln!(s, "  [{}] {}", if c.realized { "x" } else { " " }, summands(&c.branching));
        }
    }
    let _ = writeln!(s);
    for c in &r.checks {
        let _ = writeln!(s, "{} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail);
    }
    s
}

fn summands(b: &[census::BranchSummand]) -> String {
    b.iter().map(|x| format!("({})", x.describe())).collect::<Vec<_>>().join(" + ")
}

fn render_analyze(r: &AnalyzeReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}: rank {}", r.name.clone().unwrap_or_else(|| "input".into()), r.rank);
    let _ = writeln!(s, "L+ rank {}, basis {:?}, gram {:?}", r.plus_rank, r.split.l_plus_basis, r.split.l_plus_gram);
    let _ = writeln!(s, "L- rank {}, basis {:?}, gram {:?}", r.minus_rank, r.split.l_minus_basis, r.split.l_minus_gram);
    let _ = writeln!(s, "Q-bar basis {:?}", r.split.q_bar_basis);
    let _ = writeln!(s, "[Q:Q-bar] = {}, [Q-bar:L] = {}", r.split.q_bar_index, r.split.l_index);
    let _ = writeln!(s, "Q*/Q invariants {:?}, Q-bar*/Q-bar invariants {:?}", r.discriminant_invariants, r.q_bar_discriminant_invariants);
    let _ = writeln!(s, "parity criterion checked on {} classes of Q/2Q", r.parity_classes_checked);
    s
}

fn render_verify(r: &VerifyReport) -> String {
    let mut s = String::new();
    for i in &r.items {
        let _ = writeln!(s, "{} {}: {}", if i.passed { "ok  " } else { "FAIL" }, i.name, i.detail);
    }
    let _ = writeln!(s, "char V^sigma = {}", r.orbifold_character.character);
    s
}

fn render_listing(list: &[CatalogListing]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{:<16} {:>4} {:>9} {:>7} {:>5} {:>4}  source", "name", "rank", "untwisted", "twisted", "total", "N_tw");
    for e in list {
        let x = &e.expected;
        let _ = writeln!(
            s,
            "{:<16} {:>4} {:>9} {:>7} {:>5} {:>4}  {:?}",
            e.name, e.rank, x.untwisted, x.twisted, x.total, x.n_tw, x.source
        );
    }
    s
}

fn render_run(r: &CatalogRun) -> String {
    let mut s = render_classify(&r.report);
    let _ = writeln!(s);
    for i in &r.comparison {
        let _ = writeln!(s, "{} {}: {}", if i.passed { "ok  " } else { "FAIL" }, i.name, i.detail);
    }
    let _ = writeln!(s, "{:.3}s", r.seconds);
    s
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let ok = |output: String| Outcome { output, code: 0 };
    let mismatch = |output: String, good: bool| Outcome { output, code: if good { 0 } else { 4 } };
    match &cli.command {
        Command::Analyze(a) => {
            let r = cmd_analyze(&resolve(a)?)?;
            Ok(ok(if a.json { to_json(&r) } else { render_analyze(&r) }))
        }
        Command::Classify(a) => {
            let r = cmd_classify(&resolve(a)?, a.candidates)?;
            let good = r.all_checks_pass();
            Ok(mismatch(if a.json { to_json(&r) } else { render_classify(&r) }, good))
        }
        Command::Theta(a) => {
            let coset = a.coset.as_deref().map(parse_coset).transpose()?;
            let r = cmd_theta(&resolve(a)?, coset.as_deref(), &order_of(a)?)?;
            Ok(ok(if a.json { to_json(&r) } else { r.dump() }))
        }
        Command::Verify(a) => {
            let spec = resolve(a)?;
            let expected = match &a.catalog {
                Some(n) => Some(catalog::entry(n)?.expected),
                None => None,
            };
            let r = cmd_verify(&spec, &order_of(a)?, expected.as_ref())?;
            let good = r.passed();
            Ok(mismatch(if a.json { to_json(&r) } else { render_verify(&r) }, good))
        }
        Command::Catalog(a) => match &a.catalog {
            None => {
                let list = cmd_catalog_list()?;
                Ok(ok(if a.json { to_json(&list) } else { render_listing(&list) }))
            }
            Some(n) => {
                let r = cmd_catalog_run(n, a.candidates)?;
                let good = r.comparison.iter().all(|i| i.passed) && r.report.all_checks_pass();
                Ok(mismatch(if a.json { to_json(&r) } else { render_run(&r) }, good))
            }
        },
    }
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli) -> Outcome {
    dispatch(cli).unwrap_or_else(|e| Outcome { output: format!("error: {}", e), code: e.exit_code() })
}

/// Parses and runs `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            Outcome { output: e.to_string(), code }
        }
    }
}
