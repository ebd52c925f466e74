//! Command-line front end for the `kgroup` calculators.
//!
//! [`run`] parses arguments, dispatches to the core library and writes text
//! or JSON. Exit statuses: 0 on success, 1 on computational failure (cap
//! exceeded, a relator that does not die), 2 on usage errors and invalid
//! surface parameters.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use kgroup::abelian::{cokernel, smith_normal_form, FgAbelianGroup, IntMatrix};
use kgroup::galois::{
    kappa_kernel, structure_report, GroupDescriptor, ProjectiveGalois, ReportOptions, SpecError, StructureReport,
    SurfaceSpec,
};
use kgroup::kernel::{
    k_group_finite, ktilde_structure, recover_quotient, verify_phi_relators, KTildeDescriptor, VerificationReport,
    VerifyOptions,
};
use kgroup::perm::{named, Perm, PermGroup, DEFAULT_ELEMENT_CAP};
use kgroup::words::SigmaRange;
use kgroup::{AbelianError, ConstructionError, GroupError};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Error, Debug)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Failure(_) => EXIT_FAILURE,
        }
    }
}

impl From<SpecError> for CliError {
    fn from(e: SpecError) -> Self {
        match e {
            SpecError::Inconsistent(_) => CliError::Failure(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::CapExceeded { .. } | GroupError::NotNormal | GroupError::NotInGroup => {
                CliError::Failure(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<AbelianError> for CliError {
    fn from(e: AbelianError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::SmallN { .. } | ConstructionError::Relators(_) => CliError::Usage(e.to_string()),
            ConstructionError::Group(g) => g.into(),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "kgroup", version, about = "Kernel groups, S_n(d) relators and Galois-closure group structures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the report to FILE instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    pub out: Option<PathBuf>,
    /// Element cap for permutation-group enumeration.
    #[arg(long, value_name = "N", global = true, default_value_t = DEFAULT_ELEMENT_CAP)]
    pub cap: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Galois-closure group structures for a surface family.
    Surface(SurfaceArgs),
    /// Realize K(G, n) for a finite permutation group G.
    Kgroup(GroupArgs),
    /// Structure of K~(A, n) for an abelian group A.
    Ktilde(KtildeArgs),
    /// Recover G as K(G, n) / [K(G, n), Sym(n-1)].
    Recover(GroupArgs),
    /// Check that every S_n(d) relator dies in the semidirect product.
    VerifySnd(VerifySndArgs),
    /// Smith normal form and cokernel of an integer matrix.
    Snf(SnfArgs),
    /// Kernel of the sum-of-reductions map (Z/d)^m -> Z/t.
    Kappa(KappaArgs),
}

#[derive(Args, Debug)]
pub struct SurfaceArgs {
    #[arg(long, value_parser = ["p2", "quadric", "hirzebruch", "cxp1", "custom"])]
    pub family: String,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub a: Option<u64>,
    #[arg(long)]
    pub b: Option<u64>,
    #[arg(long)]
    pub e: Option<u64>,
    #[arg(long)]
    pub g: Option<u64>,
    #[arg(long)]
    pub d: Option<u64>,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub div: Option<u64>,
    /// Treat C^aff as known to be trivial for this projection.
    #[arg(long)]
    pub known_trivial_caff: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct GroupArgs {
    /// Named group: trivial, z<n>, s<n>, d<m>, v4, q8.
    #[arg(long, conflicts_with = "gens", required_unless_present = "gens")]
    pub group: Option<String>,
    /// Generators in 1-based cycle notation separated by `;`, e.g. "(1 2); (1 2 3)".
    #[arg(long)]
    pub gens: Option<String>,
    /// Degree for --gens; defaults to the largest point mentioned.
    #[arg(long)]
    pub degree: Option<usize>,
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct KtildeArgs {
    /// Torsion coefficients of A, comma separated.
    #[arg(long, default_value = "")]
    pub torsion: String,
    /// Free rank of A.
    #[arg(long, default_value_t = 0)]
    pub rank: usize,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct VerifySndArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
    /// Also run below n = 5, where phi is not claimed to be an isomorphism.
    #[arg(long)]
    pub allow_small_n: bool,
    /// Range sigma over all of Sym(n) even for n > 6.
    #[arg(long, conflicts_with = "sigma_first")]
    pub sigma_full: bool,
    /// Range sigma over the first K permutations in lexicographic order.
    #[arg(long, value_name = "K")]
    pub sigma_first: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct SnfArgs {
    /// Rows separated by `;`, entries by `,`, e.g. "2,4;6,8".
    #[arg(long, allow_hyphen_values = true)]
    pub matrix: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct KappaArgs {
    #[arg(long)]
    pub d: u64,
    #[arg(long)]
    pub t: u64,
    #[arg(long)]
    pub m: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KGroupReport {
    pub base: String,
    pub n: usize,
    pub base_order: usize,
    pub base_abelianization: FgAbelianGroup,
    pub order: usize,
    pub abelianization: FgAbelianGroup,
    pub nilpotency_class: Option<usize>,
    pub degree: usize,
    pub generator_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecoverReport {
    pub base: String,
    pub n: usize,
    pub order: usize,
    pub abelianization: FgAbelianGroup,
    pub exponent: usize,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnfReport {
    #[serde(with = "kgroup::serde_int::vec")]
    pub diagonal: Vec<BigInt>,
    pub cokernel: FgAbelianGroup,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KappaReport {
    pub d: u64,
    pub t: u64,
    pub m: usize,
    pub kernel: FgAbelianGroup,
}

/// Canonical text for an abelian group, e.g. `(Z/5)^23 + Z^10`, `1` when trivial.
pub fn format_abelian(a: &FgAbelianGroup) -> String {
    a.to_string()
}

/// Text for a group descriptor; towers are listed one indented layer per line.
pub fn format_group(g: &ProjectiveGalois) -> String {
    g.to_string()
}

pub fn format_descriptor(g: &GroupDescriptor) -> String {
    g.to_string()
}

pub fn parse_matrix(text: &str) -> Result<IntMatrix, CliError> {
    let bad = |m: String| CliError::Usage(format!("malformed --matrix: {m}"));
    let rows: Vec<Vec<BigInt>> = text
        .split(';')
        .map(|row| {
            row.split(',')
                .map(|x| x.trim().parse::<BigInt>().map_err(|_| bad(format!("`{}` is not an integer", x.trim()))))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let cols = rows[0].len();
    if rows.iter().any(|r| r.len() != cols) {
        return Err(bad("rows have different lengths".into()));
    }
    let r = rows.len();
    IntMatrix::new(r, cols, rows.into_iter().flatten().collect()).map_err(|e| bad(e.to_string()))
}

fn parse_list(text: &str) -> Result<Vec<BigInt>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<BigInt>().map_err(|_| CliError::Usage(format!("`{s}` is not an integer"))))
        .collect()
}

/// Parses `;`-separated cycle-notation generators onto a common degree.
pub fn parse_generators(text: &str, degree: Option<usize>) -> Result<PermGroup, CliError> {
    let parts: Vec<&str> = text.split(';').map(str::trim).filter(|s| !s.is_empty()).collect();
    let degree = match degree {
        Some(d) => d,
        None => parts
            .iter()
            .map(|p| Perm::parse(p, None).map(|q| q.degree()))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .max()
            .unwrap_or(1)
            .max(1),
    };
    let gens = parts
        .iter()
        .map(|p| Perm::parse(p, Some(degree)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PermGroup::new(degree, gens)?)
}

fn base_group(args: &GroupArgs) -> Result<(String, PermGroup), CliError> {
    let cap = args.output.cap;
    if let Some(name) = &args.group {
        let g = named::by_name(name).ok_or_else(|| CliError::Usage(format!("unknown group `{name}`")))?;
        return Ok((name.clone(), g.set_cap(cap)));
    }
    let text = args.gens.as_deref().unwrap_or_default();
    Ok((format!("<{text}>"), parse_generators(text, args.degree)?.set_cap(cap)))
}

fn required(value: Option<u64>, flag: &str, family: &str) -> Result<u64, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("--family {family} requires --{flag}")))
}

pub fn surface_spec(args: &SurfaceArgs) -> Result<SurfaceSpec, CliError> {
    let f = args.family.as_str();
    let allowed: &[&str] = match f {
        "p2" => &["k"],
        "quadric" => &["a", "b"],
        "hirzebruch" => &["e", "a", "b"],
        "cxp1" => &["g", "d", "k"],
        _ => &["n", "div"],
    };
    let given = [
        ("k", args.k),
        ("a", args.a),
        ("b", args.b),
        ("e", args.e),
        ("g", args.g),
        ("d", args.d),
        ("n", args.n),
        ("div", args.div),
    ];
    if let Some((flag, _)) = given.iter().find(|(flag, v)| v.is_some() && !allowed.contains(flag)) {
        return Err(CliError::Usage(format!("--{flag} does not apply to --family {f}")));
    }
    Ok(match f {
        "p2" => SurfaceSpec::ProjectivePlane {
            k: required(args.k, "k", f)?,
        },
        "quadric" => SurfaceSpec::Quadric {
            a: required(args.a, "a", f)?,
            b: required(args.b, "b", f)?,
        },
        "hirzebruch" => SurfaceSpec::Hirzebruch {
            e: required(args.e, "e", f)?,
            a: required(args.a, "a", f)?,
            b: required(args.b, "b", f)?,
        },
        "cxp1" => SurfaceSpec::CurveCrossLine {
            g: required(args.g, "g", f)?,
            d: required(args.d, "d", f)?,
            k: required(args.k, "k", f)?,
        },
        _ => SurfaceSpec::SimplyConnectedCustom {
            n: required(args.n, "n", f)?,
            div: required(args.div, "div", f)?,
        },
    })
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map_err(|e| CliError::Failure(e.to_string()))
}

/// Rendered output plus whether the computation itself reported failure.
struct Output {
    text: String,
    failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, failed: false }
    }
}

fn surface(args: &SurfaceArgs, warn: &mut dyn Write) -> Result<Output, CliError> {
    let spec = surface_spec(args)?;
    let report = structure_report(
        &spec,
        &ReportOptions {
            known_trivial_caff: args.known_trivial_caff,
        },
    )?;
    for w in spec.validate()? {
        let _ = writeln!(warn, "warning: {w}");
    }
    if args.output.json {
        return Ok(Output::ok(to_json(&report)?));
    }
    Ok(Output::ok(surface_text(&report)))
}

pub fn surface_text(r: &StructureReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "surface: {}", r.spec);
    let _ = writeln!(s, "projection degree: {}", r.degree);
    let _ = writeln!(s, "divisibility index: {}", r.divisibility);
    let _ = writeln!(s, "pi1(X^aff): {}", format_descriptor(&r.affine_pi1));
    let _ = writeln!(s, "affine Galois quotient: {}", format_descriptor(&r.affine_galois));
    let _ = writeln!(s, "projective Galois quotient: {}", format_group(&r.projective_galois));
    let _ = writeln!(s, "H1 of the projective quotient: {}", format_abelian(&r.h1_galois));
    let _ = writeln!(s, "H1 of the affine quotient: {}", format_abelian(&r.h1_affine_galois));
    for a in &r.assumptions {
        let _ = writeln!(s, "assumption: {a}");
    }
    for a in &r.annotations {
        let _ = writeln!(s, "note: {a}");
    }
    s
}

fn kgroup_cmd(args: &GroupArgs) -> Result<Output, CliError> {
    let (name, g) = base_group(args)?;
    let k = k_group_finite(&g, args.n)?;
    let report = KGroupReport {
        base: name,
        n: args.n,
        base_order: g.order()?,
        base_abelianization: g.abelianization()?,
        order: k.group().order()?,
        abelianization: k.group().abelianization()?,
        nilpotency_class: k.group().nilpotency_class()?,
        degree: k.group().degree(),
        generator_count: k.group().generators().len(),
    };
    if args.output.json {
        return Ok(Output::ok(to_json(&report)?));
    }
    let mut s = String::new();
    let _ = writeln!(s, "K({}, {}) on {} points", report.base, report.n, report.degree);
    let _ = writeln!(
        s,
        "order: {} = {}^{} / {}",
        report.order,
        report.base_order,
        report.n,
        report.base_abelianization.order().map_or("?".into(), |o| o.to_string())
    );
    let _ = writeln!(s, "abelianization: {}", format_abelian(&report.abelianization));
    let class = report
        .nilpotency_class
        .map_or("not nilpotent".to_string(), |c| c.to_string());
    let _ = writeln!(s, "nilpotency class: {class}");
    Ok(Output::ok(s))
}

fn ktilde_cmd(args: &KtildeArgs) -> Result<Output, CliError> {
    let a = FgAbelianGroup::from_cyclic_factors(parse_list(&args.torsion)?, args.rank);
    let d: KTildeDescriptor = ktilde_structure(&a, args.n)?;
    if args.output.json {
        return Ok(Output::ok(to_json(&d)?));
    }
    let mut s = String::new();
    let _ = writeln!(s, "K~({}, {})", format_abelian(&d.base_group), d.n);
    let _ = writeln!(
        s,
        "central extension 1 -> {} -> K~ -> {} -> 1",
        format_abelian(&d.h2),
        format_abelian(&d.k_part)
    );
    let _ = writeln!(s, "order: {}", d.order);
    let _ = writeln!(s, "abelianization: {}", format_abelian(&d.abelianization));
    match &d.exact_iso {
        Some(x) => {
            let _ = writeln!(s, "isomorphic to: {}", format_abelian(x));
        }
        None => {
            let _ = writeln!(s, "isomorphism type beyond the extension: not determined");
        }
    }
    Ok(Output::ok(s))
}

/// Groups up to this order also get a brute-force isomorphism check.
const ISO_LIMIT: usize = 8;

fn recover_cmd(args: &GroupArgs) -> Result<Output, CliError> {
    let (name, g) = base_group(args)?;
    let r = recover_quotient(&g, args.n)?;
    let report = RecoverReport {
        base: name,
        n: args.n,
        order: r.order,
        abelianization: r.abelianization.clone(),
        exponent: r.exponent,
        matches: r.matches(&g, ISO_LIMIT)?,
    };
    let failed = !report.matches;
    if args.output.json {
        return Ok(Output {
            text: to_json(&report)?,
            failed,
        });
    }
    let mut s = String::new();
    let _ = writeln!(s, "K({0}, {1}) / [K, Sym({1}-1)]", report.base, report.n);
    let _ = writeln!(s, "order: {}", report.order);
    let _ = writeln!(s, "abelianization: {}", format_abelian(&report.abelianization));
    let _ = writeln!(s, "exponent: {}", report.exponent);
    let _ = writeln!(s, "matches {}: {}", report.base, if report.matches { "yes" } else { "no" });
    Ok(Output { text: s, failed })
}

fn verify_cmd(args: &VerifySndArgs) -> Result<Output, CliError> {
    let sigma = match (args.sigma_full, args.sigma_first) {
        (true, _) => SigmaRange::Full,
        (false, Some(k)) => SigmaRange::FirstN(k),
        (false, None) => SigmaRange::Auto,
    };
    let opts = VerifyOptions {
        allow_small_n: args.allow_small_n,
        sigma,
    };
    let report: VerificationReport = verify_phi_relators(args.n, args.d, &opts)?;
    let failed = !report.all_identity;
    if args.output.json {
        return Ok(Output {
            text: to_json(&report)?,
            failed,
        });
    }
    let mut s = String::new();
    for f in &report.failures {
        let _ = writeln!(s, "FAIL {} -> {}", f.relator, f.image);
    }
    let head = if failed { "not all" } else { "all" };
    let _ = writeln!(s, "{head} {} failures / {} relators", report.failures.len(), report.relator_count);
    Ok(Output { text: s, failed })
}

fn snf_cmd(args: &SnfArgs) -> Result<Output, CliError> {
    let m = parse_matrix(&args.matrix)?;
    let f = smith_normal_form(&m);
    let report = SnfReport {
        diagonal: f.diagonal(),
        cokernel: cokernel(&m),
    };
    if args.output.json {
        return Ok(Output::ok(to_json(&report)?));
    }
    let diag: Vec<String> = report.diagonal.iter().map(ToString::to_string).collect();
    Ok(Output::ok(format!(
        "diag({})\ncokernel: {}\n",
        diag.join(","),
        format_abelian(&report.cokernel)
    )))
}

fn kappa_cmd(args: &KappaArgs) -> Result<Output, CliError> {
    if args.d == 0 || args.t == 0 {
        return Err(CliError::Usage("--d and --t must be positive".into()));
    }
    let kernel = kappa_kernel(&BigInt::from(args.d), &BigInt::from(args.t), args.m)?;
    let report = KappaReport {
        d: args.d,
        t: args.t,
        m: args.m,
        kernel,
    };
    if args.output.json {
        return Ok(Output::ok(to_json(&report)?));
    }
    Ok(Output::ok(format!(
        "ker((Z/{})^{} -> Z/{}) = {}\n",
        report.d,
        report.m,
        report.t,
        format_abelian(&report.kernel)
    )))
}

fn dispatch<'a>(cmd: &'a Command, err: &mut dyn Write) -> Result<(Output, &'a OutputArgs), CliError> {
    Ok(match cmd {
        Command::Surface(a) => (surface(a, err)?, &a.output),
        Command::Kgroup(a) => (kgroup_cmd(a)?, &a.output),
        Command::Ktilde(a) => (ktilde_cmd(a)?, &a.output),
        Command::Recover(a) => (recover_cmd(a)?, &a.output),
        Command::VerifySnd(a) => (verify_cmd(a)?, &a.output),
        Command::Snf(a) => (snf_cmd(a)?, &a.output),
        Command::Kappa(a) => (kappa_cmd(a)?, &a.output),
    })
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let (output, opts) = match dispatch(&cli.command, err) {
        Ok(x) => x,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return e.exit_code();
        }
    };
    let mut text = output.text;
    if !text.ends_with('\n') {
        text.push('\n');
    }
    let written = match &opts.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return EXIT_FAILURE;
    }
    if output.failed {
        EXIT_FAILURE
    } else {
        EXIT_OK
    }
}
