use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use figmod::exactla::FieldSpec;
use figmod::group::FiniteGroup;
use figmod::invariants::Invariant;
use figmod::module::{GroupFile, ModuleError, ModuleFile};
use figmod::random::{random_finite_module, random_module, rng_for, RandomParams};
use figmod::report::{analyze, filtration_failure, render_text, AnalyzeError, AnalyzeOptions, InvariantReport};
use figmod::verify::{verify, CheckKind, VerifyParams, VerifyReport};

#[derive(Parser)]
#[command(name = "figmod", version, about = "Invariants of finitely presented FI_G-modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads for parallel work (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report for a module file.
    Analyze(InputArgs),
    /// Hilbert function, fitted polynomial and stable range.
    Hilbert(InputArgs),
    /// Try to build a ♯-filtration.
    Filtration(InputArgs),
    /// Check the structural theorems on seeded random presentations.
    Verify(VerifyArgs),
    /// Print a seeded random presentation as a module file.
    Random(RandomArgs),
}

#[derive(Args)]
struct InputArgs {
    input: PathBuf,
    #[arg(long)]
    truncation: Option<usize>,
    /// Largest truncation chosen automatically.
    #[arg(long, default_value_t = 14)]
    max_truncation: usize,
    /// `Q` or `Fp:<p>`; replaces the field of the file.
    #[arg(long)]
    field: Option<String>,
    /// `trivial`, `Z2`, `Z3`, `S3` or `@file` with a multiplication table; replaces the group of the file.
    #[arg(long)]
    group: Option<String>,
    /// Comma separated: degrees,torsion,depth,dreg,nagpal,reg,hilbert,filtration.
    #[arg(long, value_delimiter = ',')]
    invariants: Option<Vec<String>>,
    /// Largest homological degree to compute.
    #[arg(long)]
    i_max: Option<usize>,
    /// Compute below the certified truncation; results are flagged uncertified.
    #[arg(long)]
    allow_uncertified: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 25)]
    count: usize,
    #[arg(long, default_value_t = 8)]
    truncation: usize,
    /// Comma separated; instances cycle through them.
    #[arg(long, value_delimiter = ',', default_value = "trivial")]
    group: Vec<String>,
    #[arg(long, value_delimiter = ',', default_value = "Fp:2")]
    field: Vec<String>,
    /// Comma separated check names (default: all).
    #[arg(long, value_delimiter = ',')]
    checks: Option<Vec<String>>,
    #[arg(long, default_value_t = 3)]
    i_max: usize,
    /// Only modules of finite degree.
    #[arg(long)]
    finite: bool,
    #[command(flatten)]
    shape: ShapeArgs,
    /// Include every instance in the output, not just failures.
    #[arg(long)]
    all: bool,
}

#[derive(Args)]
struct ShapeArgs {
    #[arg(long, default_value_t = 2)]
    d_max: usize,
    #[arg(long, default_value_t = 3)]
    r_max: usize,
    #[arg(long, default_value_t = 2)]
    max_generators: usize,
    #[arg(long, default_value_t = 3)]
    max_relations: usize,
}

#[derive(Args)]
struct RandomArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Stream index within the seed.
    #[arg(long, default_value_t = 0)]
    index: u64,
    #[arg(long, default_value = "trivial")]
    group: String,
    #[arg(long, default_value = "Q")]
    field: String,
    /// Kill everything from this degree on.
    #[arg(long)]
    vanish_from: Option<usize>,
    #[command(flatten)]
    shape: ShapeArgs,
}

/// An error with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: impl std::fmt::Display) -> Self {
        Failure { code: 2, message: message.to_string() }
    }
}

impl From<ModuleError> for Failure {
    fn from(e: ModuleError) -> Self {
        let code = match e {
            ModuleError::Truncation { .. } | ModuleError::BelowRelationDegree { .. } => 3,
            ModuleError::Invalid(_) | ModuleError::Parse(_) => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<AnalyzeError> for Failure {
    fn from(e: AnalyzeError) -> Self {
        match e {
            AnalyzeError::Module(m) => m.into(),
            AnalyzeError::InsufficientTruncation { required, .. } | AnalyzeError::OverCap { required, .. } => Failure {
                code: 3,
                message: format!("{e}\nrequired truncation: {required}"),
            },
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Analyze(a) => {
            let rep = load_and_analyze(a, None)?;
            emit(cli.format, &rep, || render_text(&rep));
            Ok(if rep.violations.is_empty() { 0 } else { 4 })
        }
        Command::Hilbert(a) => {
            let rep = load_and_analyze(a, Some(vec![Invariant::Hilbert]))?;
            let h = rep.hilbert.as_ref().expect("requested");
            emit(cli.format, h, || {
                let mut s = format!("dim V_n             {}\n", join(&h.values));
                s += &format!("polynomial          {}\n", h.polynomial.as_deref().unwrap_or("-"));
                s += &format!("stable range from   {}\n", h.stable_range_start);
                if let Some(e) = h.earliest_agreement {
                    s += &format!("agrees from         {e}\n");
                }
                s
            });
            Ok(if rep.violations.is_empty() { 0 } else { 4 })
        }
        Command::Filtration(a) => {
            let rep = load_and_analyze(a, Some(vec![Invariant::Filtration]))?;
            let f = rep.sharp_filtered.as_ref().expect("requested");
            emit(cli.format, f, || {
                if f.filtration.constructed {
                    let parts: Vec<String> =
                        f.filtration.cofactors.iter().map(|c| format!("M({})^{}", c.degree, c.dim)).collect();
                    format!("sharp filtered: {}\n", parts.join(", "))
                } else {
                    format!("not sharp filtered: {}\n", filtration_failure(f))
                }
            });
            Ok(if rep.violations.is_empty() { 0 } else { 4 })
        }
        Command::Verify(v) => {
            let params = verify_params(v)?;
            let mut report = verify(&params);
            if !v.all {
                report.instances.retain(|i| !i.passed());
            }
            emit(cli.format, &report, || verify_text(&report));
            Ok(if report.all_passed { 0 } else { 1 })
        }
        Command::Random(r) => {
            let g = parse_group(&r.group)?;
            let field = FieldSpec::parse(&r.field).map_err(Failure::parse)?;
            let mut rng = rng_for(r.seed, r.index);
            let params = random_params(&r.shape);
            let file = match r.vanish_from {
                Some(top) => random_finite_module(&mut rng, &g, field, &params, top),
                None => random_module(&mut rng, &g, field, &params),
            };
            println!("{}", serde_json::to_string_pretty(&file).expect("serializable"));
            Ok(0)
        }
    }
}

fn load_and_analyze(a: &InputArgs, only: Option<Vec<Invariant>>) -> Result<InvariantReport, Failure> {
    let text = std::fs::read_to_string(&a.input).map_err(|e| Failure::parse(format!("{}: {e}", a.input.display())))?;
    let mut file = ModuleFile::parse(&text)?;
    if let Some(f) = &a.field {
        let spec = FieldSpec::parse(f).map_err(Failure::parse)?;
        (file.field, file.p) = match spec {
            FieldSpec::Rationals => ("Q".into(), None),
            FieldSpec::Prime(p) => ("Fp".into(), Some(p)),
        };
    }
    if let Some(g) = &a.group {
        file.group = group_file(g)?;
    }
    let invariants = match (only, &a.invariants) {
        (Some(v), _) => v,
        (None, Some(names)) => names
            .iter()
            .map(|n| Invariant::parse(n).ok_or_else(|| Failure::parse(format!("unknown invariant '{n}'"))))
            .collect::<Result<_, _>>()?,
        (None, None) => Invariant::ALL.to_vec(),
    };
    let opts = AnalyzeOptions {
        truncation: a.truncation,
        max_truncation: a.max_truncation,
        invariants,
        i_max: a.i_max,
        allow_uncertified: a.allow_uncertified,
    };
    Ok(analyze(&file, &opts)?)
}

fn read_table(path: &Path) -> Result<Vec<Vec<usize>>, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}

fn group_file(s: &str) -> Result<GroupFile, Failure> {
    match s.strip_prefix('@') {
        Some(path) => Ok(GroupFile::Table { table: read_table(Path::new(path))? }),
        None => {
            FiniteGroup::preset(s).map_err(Failure::parse)?;
            Ok(GroupFile::Preset(s.to_string()))
        }
    }
}

fn parse_group(s: &str) -> Result<FiniteGroup, Failure> {
    group_file(s)?.build().map_err(Failure::from)
}

fn random_params(s: &ShapeArgs) -> RandomParams {
    RandomParams {
        d_max: s.d_max,
        r_max: s.r_max,
        max_generators: s.max_generators,
        max_relations: s.max_relations,
        ..RandomParams::default()
    }
}

fn verify_params(v: &VerifyArgs) -> Result<VerifyParams, Failure> {
    if v.count == 0 || v.truncation == 0 {
        return Err(Failure::parse("count and truncation must be positive"));
    }
    let checks = match &v.checks {
        None => CheckKind::ALL.to_vec(),
        Some(names) => names
            .iter()
            .map(|n| CheckKind::parse(n).ok_or_else(|| Failure::parse(format!("unknown check '{n}'"))))
            .collect::<Result<_, _>>()?,
    };
    Ok(VerifyParams {
        seed: v.seed,
        count: v.count,
        truncation: v.truncation,
        groups: v.group.iter().map(|g| parse_group(g)).collect::<Result<_, _>>()?,
        fields: v
            .field
            .iter()
            .map(|f| FieldSpec::parse(f).map_err(Failure::parse))
            .collect::<Result<_, _>>()?,
        random: random_params(&v.shape),
        checks,
        i_max: v.i_max,
        finite_degree: v.finite,
    })
}

fn emit<T: serde::Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("serializable")),
        Format::Text => print!("{}", text()),
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn verify_text(r: &VerifyReport) -> String {
    let w = r.summary.keys().map(|k| k.len()).max().unwrap_or(0);
    let mut s = format!("seed {} count {} truncation {}\n", r.seed, r.count, r.truncation);
    for (name, t) in &r.summary {
        s += &format!("{name:<w$}  passed {:>4}  failed {:>4}  uncertified {:>4}\n", t.passed, t.failed, t.uncertified);
    }
    for inst in &r.instances {
        for c in inst.checks.iter().filter(|c| !c.passed) {
            s += &format!("FAIL instance {} ({}, {}) {}: {}\n", inst.index, inst.group, inst.field, c.name, c.detail);
        }
    }
    s += if r.all_passed { "all checks passed\n" } else { "some checks failed\n" };
    s
}
