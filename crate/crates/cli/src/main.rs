//! `froblab`: command-line front end.
//!
//! Exit codes: 0 success, 1 invariant violation, 2 input error,
//! 3 resource limit.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use froblab_core::io::{self, LatticeJson, QuantaleJson, RelationJson, TightReportJson, WitnessJson};
use froblab_core::lab::{pseudo_affine_witness, sweep_lattice, theorem_sweep, tight_frobenius, SweepRow, SweepSummary};
use froblab_core::lattice::{canonical_code, enumerate_lattices};
use froblab_core::quantale::{
    dualizing_elements, endo_quantale, search_frobenius, verify_frobenius, FrobeniusReport, Quantale,
};
use froblab_core::rel::{
    cyclic_group, group_relation, is_associative_rel, klein_group, search_rel_frobenius, RelWitness, TernaryRel,
};
use froblab_core::{Caps, Error, FamilySpec, Lattice};

#[derive(Parser)]
#[command(name = "froblab", version, about = "Finite sup-lattices, quantales and Frobenius structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Clone)]
struct Opts {
    /// Emit JSON instead of a human-readable report.
    #[arg(long, global = true)]
    json: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Maximum number of sup-maps in a hom-set.
    #[arg(long, global = true, value_name = "N")]
    cap_hom: Option<usize>,
    /// Largest carrier for the unitless Frobenius search.
    #[arg(long, global = true, value_name = "N")]
    cap_search: Option<usize>,
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct Source {
    /// JSON input file.
    input: Option<PathBuf>,
    /// Built-in family, e.g. `chain:4`, `boolean:2`, `m3`, `product(chain:2,n5)`.
    #[arg(long, value_name = "NAME[:ARGS]")]
    family: Option<FamilySpec>,
}

#[derive(Subcommand)]
enum Command {
    /// Check a lattice: distributivity, nuclearity, Frobenius structures.
    LatCheck {
        #[command(flatten)]
        source: Source,
        /// Also write the Hasse diagram as DOT.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Emit a lattice from a built-in family as JSON.
    LatGen {
        #[arg(long, value_name = "NAME[:ARGS]")]
        family: FamilySpec,
        /// Also write the Hasse diagram as DOT.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Enumerate lattices up to isomorphism.
    LatEnum {
        #[arg(long, default_value_t = 5)]
        max_size: usize,
    },
    /// Build the quantale of sup-preserving endomaps of a lattice.
    QuantaleEndo {
        #[command(flatten)]
        source: Source,
    },
    /// Build and verify the tight-map Frobenius quantale of a lattice.
    QuantaleTight {
        #[command(flatten)]
        source: Source,
    },
    /// Search Frobenius structures on a quantale file or on the endo
    /// quantale of a family.
    FrobeniusSearch {
        #[command(flatten)]
        source: Source,
    },
    /// Search relational Frobenius witnesses.
    RelSearch {
        /// Relation JSON file.
        #[arg(required_unless_present = "family", conflicts_with = "family")]
        input: Option<PathBuf>,
        /// `cyclic:N`, `klein`, `empty:N` or `random:N` (seeded).
        #[arg(long, value_name = "NAME[:ARGS]")]
        family: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check the theorem columns on every lattice up to a size.
    Sweep {
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        /// Also write the rows as CSV.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
        /// Worker threads (default: all cores).
        #[arg(long)]
        threads: Option<usize>,
    },
}

enum Failure {
    Core(Error),
    Input(String),
    /// A resource limit reported inside a result row.
    Limit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Limit(_) | Failure::Core(Error::ResourceLimit { .. }) => 3,
            Failure::Core(
                Error::WitnessInvalid(_) | Error::NotTight | Error::NoTranspose(_) | Error::NotADualPairing(_),
            ) => 1,
            Failure::Core(_) => 2,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Input(_) => "input",
            Failure::Limit(_) => "resource_limit",
            Failure::Core(e) => match e {
                Error::NotAPartialOrder(_) => "not_a_partial_order",
                Error::NotALattice(_) => "not_a_lattice",
                Error::InvalidParameter(_) => "invalid_parameter",
                Error::ResourceLimit { .. } => "resource_limit",
                Error::TypeMismatch(_) => "type_mismatch",
                Error::NotSupPreserving(_) => "not_sup_preserving",
                Error::NoTranspose(_) => "no_transpose",
                Error::NotADualPairing(_) => "not_a_dual_pairing",
                Error::NotAssociative(_) => "not_associative",
                Error::NotSupDistributive(_) => "not_sup_distributive",
                Error::NotDualizing(_) => "not_dualizing",
                Error::WitnessInvalid(_) => "witness_invalid",
                Error::NotTight => "not_tight",
                Error::NotAGroup(_) => "not_a_group",
                Error::Schema { .. } => "schema",
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Input(m) | Failure::Limit(m) => m.clone(),
            Failure::Core(e) => e.to_string(),
        }
    }
}

struct Report {
    json: String,
    text: String,
    violation: bool,
}

impl Report {
    fn new<T: Serialize>(value: &T, text: String, violation: bool) -> Report {
        Report {
            json: io::to_json(value),
            text,
            violation,
        }
    }
}

type Outcome = Result<Report, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_lattice(source: &Source) -> Result<Arc<Lattice>, Failure> {
    let l = match (&source.input, &source.family) {
        (Some(path), _) => io::lattice_from_json(&read(path)?)?,
        (None, Some(f)) => f.build()?,
        (None, None) => return Err(Failure::Input("no lattice given".into())),
    };
    Ok(Arc::new(l))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn label(l: &Lattice) -> String {
    l.name().map_or_else(|| format!("lattice of size {}", l.size()), str::to_owned)
}

#[derive(Serialize)]
struct LatCheckReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    #[serde(flatten)]
    row: SweepRow,
    join_irreducibles: Vec<usize>,
    meet_irreducibles: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pseudo_affine_coatom: Option<usize>,
    violations: Vec<&'static str>,
}

fn lat_check(l: &Arc<Lattice>, caps: &Caps) -> Outcome {
    let row = sweep_lattice(l, caps);
    if row.resource_limited {
        return Err(Failure::Limit(row.error.unwrap_or_default()));
    }
    let report = LatCheckReport {
        name: l.name().map(str::to_owned),
        join_irreducibles: l.join_irreducibles(),
        meet_irreducibles: l.meet_irreducibles(),
        pseudo_affine_coatom: pseudo_affine_witness(l).map(|w| w.coatom),
        violations: row.violations(),
        row,
    };
    let r = &report.row;
    let mut text = String::new();
    let _ = writeln!(text, "{} ({} elements, code {})", label(l), r.size, r.code);
    for (k, v) in [
        ("distributive", r.distributive),
        ("completely distributive", r.completely_distributive),
        ("nuclear", r.nuclear),
        ("adjunction unit", r.adjunction_unit_found),
        ("endo Frobenius structure", r.endo_frobenius_found),
        ("tight Frobenius verified", r.tight_frobenius_ok),
        ("pseudo-affine", r.pseudo_affine),
    ] {
        let _ = writeln!(text, "  {k:<26}{}", yes(v));
    }
    if let Some(e) = &r.error {
        let _ = writeln!(text, "  error: {e}");
    }
    for v in &report.violations {
        let _ = writeln!(text, "  VIOLATION: {v}");
    }
    let violation = !report.violations.is_empty();
    Ok(Report::new(&report, text, violation))
}

#[derive(Serialize)]
struct EnumEntry {
    code: String,
    lattice: LatticeJson,
}

fn lat_enum(max_size: usize, caps: &Caps) -> Outcome {
    let entries: Vec<EnumEntry> = enumerate_lattices(max_size, caps)?
        .iter()
        .map(|l| EnumEntry {
            code: hex::encode(canonical_code(l)),
            lattice: LatticeJson::of(l),
        })
        .collect();
    let mut text = String::new();
    for n in 1..=max_size {
        let count = entries.iter().filter(|e| e.lattice.size == n).count();
        let _ = writeln!(text, "size {n}: {count}");
    }
    for e in &entries {
        let covers: Vec<String> = e.lattice.covers.iter().map(|[a, b]| format!("{a}<{b}")).collect();
        let _ = writeln!(text, "{} {} {}", e.lattice.size, e.code, covers.join(" "));
    }
    Ok(Report::new(&entries, text, false))
}

#[derive(Serialize)]
struct DualizingJson {
    element: usize,
    cyclic: bool,
}

#[derive(Serialize)]
struct SearchReport {
    size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    unit: Option<usize>,
    dualizing: Vec<DualizingJson>,
    witnesses: Vec<CheckedWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    quantale: Option<QuantaleJson>,
}

#[derive(Serialize)]
struct CheckedWitness {
    witness: WitnessJson,
    report: FrobeniusReport,
}

fn search_report(q: &Quantale, caps: &Caps, include_table: bool) -> Outcome {
    let witnesses: Vec<CheckedWitness> = search_frobenius(q, caps)?
        .iter()
        .map(|w| CheckedWitness {
            witness: WitnessJson::of(w),
            report: verify_frobenius(q, &w.l, &w.r),
        })
        .collect();
    let report = SearchReport {
        size: q.size(),
        unit: q.unit(),
        dualizing: dualizing_elements(q)
            .into_iter()
            .map(|d| DualizingJson {
                element: d.element,
                cyclic: d.cyclic,
            })
            .collect(),
        quantale: include_table.then(|| QuantaleJson::of(q)),
        witnesses,
    };
    let mut text = String::new();
    let _ = writeln!(text, "quantale with {} elements", report.size);
    let _ = writeln!(text, "  unit: {}", report.unit.map_or("none".into(), |u| u.to_string()));
    let duals: Vec<String> = report.dualizing.iter().map(|d| d.element.to_string()).collect();
    let _ = writeln!(text, "  dualizing elements: [{}]", duals.join(", "));
    let _ = writeln!(text, "  Frobenius witnesses: {}", report.witnesses.len());
    for w in &report.witnesses {
        let status = if w.report.all_pass() { "ok" } else { "FAILED" };
        let _ = writeln!(text, "    {} cyclic={} {status}", w.witness.origin, yes(w.witness.l == w.witness.r));
    }
    let violation = report.witnesses.iter().any(|w| !w.report.all_pass());
    Ok(Report::new(&report, text, violation))
}

fn quantale_tight(l: &Arc<Lattice>, caps: &Caps) -> Outcome {
    let t = tight_frobenius(l, caps)?;
    let report = TightReportJson::of(&t);
    let ok = report.report.as_ref().is_some_and(FrobeniusReport::all_pass);
    let mut text = String::new();
    let _ = writeln!(text, "tight maps of {}: {}", label(l), t.len());
    let _ = writeln!(text, "  unit: {}", yes(t.quantale().unit().is_some()));
    let _ = writeln!(text, "  negation cyclic: {}", yes(t.negation().is_some_and(|w| w.is_cyclic())));
    match &report.report {
        Some(r) => {
            for (name, c) in r.checks() {
                let _ = writeln!(text, "  {name:<22}{}", if c.ok { "ok" } else { "FAILED" });
            }
        }
        None => {
            let _ = writeln!(text, "  negation: none");
        }
    }
    Ok(Report::new(&report, text, !ok))
}

fn rel_family(spec: &str, seed: u64) -> Result<TernaryRel, Failure> {
    let (name, arg) = spec.split_once(':').unwrap_or((spec, ""));
    let n = || {
        arg.parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| Failure::Input(format!("family `{spec}` needs a positive size")))
    };
    Ok(match name {
        "cyclic" | "z" => group_relation(&cyclic_group(n()?), 0)?.rel,
        "klein" => group_relation(&klein_group(), 0)?.rel,
        "empty" => TernaryRel::new(n()?, [])?,
        "random" => random_associative(n()?, seed)?,
        _ => return Err(Failure::Input(format!("unknown relation family `{spec}`"))),
    })
}

/// Rejection sampling with a density drawn per attempt.
fn random_associative(n: usize, seed: u64) -> Result<TernaryRel, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100_000 {
        let p: f64 = rng.random_range(0.0..0.5);
        let triples: Vec<(usize, usize, usize)> = (0..n * n * n)
            .filter(|_| rng.random_bool(p))
            .map(|i| (i / (n * n), i / n % n, i % n))
            .collect();
        let r = TernaryRel::new(n, triples)?;
        if is_associative_rel(&r) {
            return Ok(r);
        }
    }
    Err(Failure::Input(format!("no associative relation found for size {n}")))
}

#[derive(Serialize)]
struct RelReport {
    relation: RelationJson,
    witnesses: Vec<RelWitness>,
}

fn rel_search(r: &TernaryRel, caps: &Caps) -> Outcome {
    let witnesses = search_rel_frobenius(r, caps)?;
    let mut text = String::new();
    let _ = writeln!(text, "relation on {} points with {} triples", r.size(), r.len());
    let _ = writeln!(text, "  witnesses: {}", witnesses.len());
    for w in &witnesses {
        let _ = writeln!(text, "    l = {:?}", w.l);
    }
    let report = RelReport {
        relation: RelationJson::of(r),
        witnesses,
    };
    Ok(Report::new(&report, text, false))
}

fn sweep(max_size: usize, csv_path: Option<&Path>, caps: &Caps) -> Outcome {
    if max_size > caps.enum_size {
        return Err(Failure::Input(format!("--max-size {max_size} exceeds {}", caps.enum_size)));
    }
    let rows = theorem_sweep(max_size, caps)?;
    if let Some(path) = csv_path {
        let mut w = csv::Writer::from_path(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        for row in &rows {
            w.serialize(row).map_err(|e| Failure::Input(e.to_string()))?;
        }
        w.flush().map_err(|e| Failure::Input(e.to_string()))?;
    }
    let summary = SweepSummary::of(&rows);
    let mut text = String::new();
    let _ = writeln!(
        text,
        "{:<4} {:<24} {:>5} {:>5} {:>5} {:>5} {:>5} {:>5} {:>5}",
        "size", "code", "dist", "cdist", "nucl", "endo", "unit", "tight", "aff"
    );
    let b = |v: bool| if v { "1" } else { "0" };
    for r in &rows {
        let _ = writeln!(
            text,
            "{:<4} {:<24} {:>5} {:>5} {:>5} {:>5} {:>5} {:>5} {:>5}{}",
            r.size,
            r.code,
            b(r.distributive),
            b(r.completely_distributive),
            b(r.nuclear),
            b(r.endo_frobenius_found),
            b(r.adjunction_unit_found),
            b(r.tight_frobenius_ok),
            b(r.pseudo_affine),
            r.error.as_ref().map_or(String::new(), |e| format!("  [{e}]")),
        );
    }
    let _ = writeln!(
        text,
        "{} rows, {} violations, {} resource-limited",
        summary.rows, summary.violations, summary.resource_limited
    );
    Ok(Report::new(&rows, text, summary.violations > 0))
}

fn caps(opts: &Opts) -> Caps {
    let mut caps = Caps::default();
    if let Some(n) = opts.cap_hom {
        caps.hom_maps = n;
    }
    if let Some(n) = opts.cap_search {
        caps.search_carrier = n;
    }
    caps
}

#[cfg(feature = "parallel")]
fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match threads {
        None => f(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(f),
    }
}

#[cfg(not(feature = "parallel"))]
fn with_threads<T: Send>(_threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    f()
}

fn run(cli: &Cli) -> Outcome {
    let caps = caps(&cli.opts);
    let single = Some(1);
    match &cli.command {
        Command::LatCheck { source, dot } => {
            let l = load_lattice(source)?;
            if let Some(path) = dot {
                write(path, &l.to_dot())?;
            }
            with_threads(single, || lat_check(&l, &caps))
        }
        Command::LatGen { family, dot } => {
            let l = family.build()?;
            if let Some(path) = dot {
                write(path, &l.to_dot())?;
            }
            let json = io::lattice_to_json(&l);
            Ok(Report {
                text: json.clone(),
                json,
                violation: false,
            })
        }
        Command::LatEnum { max_size } => with_threads(single, || lat_enum(*max_size, &caps)),
        Command::QuantaleEndo { source } => {
            let l = load_lattice(source)?;
            with_threads(single, || {
                let e = endo_quantale(&l, &caps)?;
                search_report(&e.quantale, &caps, true)
            })
        }
        Command::QuantaleTight { source } => {
            let l = load_lattice(source)?;
            with_threads(single, || quantale_tight(&l, &caps))
        }
        Command::FrobeniusSearch { source } => {
            let q = match (&source.input, &source.family) {
                (Some(path), _) => io::quantale_from_json(&read(path)?)?,
                (None, Some(f)) => endo_quantale(&Arc::new(f.build()?), &caps)?.quantale,
                (None, None) => return Err(Failure::Input("no quantale given".into())),
            };
            with_threads(single, || search_report(&q, &caps, false))
        }
        Command::RelSearch { input, family, seed } => {
            let r = match (input, family) {
                (Some(path), _) => io::relation_from_json(&read(path)?)?,
                (None, Some(spec)) => rel_family(spec, *seed)?,
                (None, None) => return Err(Failure::Input("no relation given".into())),
            };
            with_threads(single, || rel_search(&r, &caps))
        }
        Command::Sweep {
            max_size,
            csv,
            threads,
        } => with_threads(*threads, || sweep(*max_size, csv.as_deref(), &caps)),
    }
}

#[derive(Serialize)]
struct ErrorJson {
    error: &'static str,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    path: Option<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = run(&cli).and_then(|report| {
        let body = if cli.opts.json { &report.json } else { &report.text };
        match &cli.opts.out {
            Some(path) => write(path, body)?,
            None => print!("{body}"),
        }
        Ok(report.violation)
    });
    match outcome {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(f) => {
            if cli.opts.json {
                let path = match &f {
                    Failure::Core(Error::Schema { path, .. }) => Some(path.clone()),
                    _ => None,
                };
                eprint!(
                    "{}",
                    io::to_json(&ErrorJson {
                        error: f.kind(),
                        message: f.message(),
                        path,
                    })
                );
            } else {
                eprintln!("error: {}", f.message());
            }
            ExitCode::from(f.code())
        }
    }
}
