//! `braidmon`: braid monodromy computations from the command line.
//!
//! Exit codes: 0 success, 1 invalid input, 2 oracle mismatch, 3 resource cap.

mod io;
mod sidecar;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use braidmon::fixtures::{self, Severity};
use braidmon::generify::{arrangement_generify, replace_tangency, split_locally_generic, TangencyKind};
use braidmon::par::Exec;
use braidmon::singular::{real_part_cubic, transform_type0, transform_type1, LocalPointData};
use braidmon::zvk::{
    abelianize, presentation_affine, presentation_fully_horizontal, presentation_generic,
    presentation_projective, tietze_simplify, GroupPresentation,
};
use braidmon::{DiagramSystem, Error, Factorization, HurwitzMove, Letters, LiftSpec};
use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;

use io::{emit, read_json, to_json, BraidSpec, CliError, CliResult};
use sidecar::{ArrangementSpec, FiberSpec, Replacement, Split};

#[derive(Parser)]
#[command(name = "braidmon", version, about = "Braid monodromy factorizations, Kummer lifts and curve complement groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lift a marked factorization along the degree-n Kummer cover.
    Lift {
        /// Cover degree.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "circular")]
        system: SystemArg,
        /// Letters of the output words.
        #[arg(long, value_enum, default_value = "artin")]
        letters: LettersArg,
        /// Forget the fixed strand after lifting.
        #[arg(long)]
        forget: bool,
        /// Marked factorization JSON.
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a sequence of Hurwitz moves, left to right.
    Hurwitz {
        /// Moves such as "h2^-1 h3 h4".
        #[arg(long)]
        moves: String,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Conjugate every entry: a -> g^-1 a g.
    Conjugate {
        /// Conjugating braid in text notation, e.g. "s1 s2^2".
        #[arg(long)]
        by: String,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a generification rule described by a JSON sidecar.
    ///
    /// cusp, node, inflection: a list of {"entry", "band", "conjugator", "order"} applied in order.
    /// local-split: a list of {"entry", "parts"}. arrangement: {"n", "entries", "vertical"}; no --in.
    Generify {
        #[arg(long, value_enum)]
        rule: RuleArg,
        #[arg(long)]
        data: PathBuf,
        /// Factorization JSON (all rules except arrangement).
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Zariski-van Kampen presentation of a complement.
    Zvk {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long = "in")]
        input: PathBuf,
        /// horizontal: comma separated entries whose vertical lines stay removed.
        #[arg(long, value_delimiter = ',')]
        kept: Vec<usize>,
        /// generic: per-entry fiber descriptions {"conjugator", "local", "indices"}.
        #[arg(long)]
        data: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Invariant factors of the abelianization of a presentation (0 for each free factor).
    Abelianize {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Tietze simplification by generator elimination.
    Simplify {
        /// Maximum number of eliminations.
        #[arg(long, default_value_t = 100)]
        budget: usize,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Local singularity data under the cover.
    Singular {
        #[command(subcommand)]
        which: SingularCommand,
    },
    /// Run a built-in worked example and report every check.
    Example {
        /// Pipeline name; `list` prints the registry.
        name: String,
        /// Write the full JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Run oracle comparisons on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Check a factorization.
    Verify {
        factorization: PathBuf,
        /// Require the pseudo-Coxeter element to be the full twist.
        #[arg(long)]
        generic: bool,
        /// Require entrywise equality with another factorization.
        #[arg(long)]
        against: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SingularCommand {
    /// Point on one axis away from the origin.
    Type1 {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        data: PathBuf,
    },
    /// Point at the origin.
    Type0 {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        data: PathBuf,
    },
    /// Cubic whose roots are the pairwise averages of the roots of y^3 - a1 y^2 + a2 y - a3.
    Realcubic {
        #[arg(allow_hyphen_values = true)]
        a1: BigRational,
        #[arg(allow_hyphen_values = true)]
        a2: BigRational,
        #[arg(allow_hyphen_values = true)]
        a3: BigRational,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SystemArg {
    Circular,
    Radial,
    Straight2,
}

impl From<SystemArg> for DiagramSystem {
    fn from(s: SystemArg) -> Self {
        match s {
            SystemArg::Circular => DiagramSystem::Circular,
            SystemArg::Radial => DiagramSystem::Radial,
            SystemArg::Straight2 => DiagramSystem::Straight2,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LettersArg {
    Artin,
    Native,
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    Cusp,
    Node,
    Inflection,
    LocalSplit,
    Arrangement,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Affine,
    Horizontal,
    Projective,
    Generic,
}

fn factorization_out(out: Option<&Path>, f: &Factorization) -> CliResult<()> {
    emit(out, &to_json(f))
}

fn need<'a>(path: &'a Option<PathBuf>, what: &str) -> CliResult<&'a Path> {
    path.as_deref().ok_or_else(|| CliError::Usage(format!("{what} is required here")))
}

fn lift(
    n: usize,
    system: SystemArg,
    letters: LettersArg,
    forget: bool,
    input: &Path,
    out: Option<&Path>,
) -> CliResult<()> {
    let f: Factorization = read_json(input)?;
    if f.strands() < 2 {
        return Err(Error::invalid("a marked factorization needs at least 2 strands").into());
    }
    let spec = LiftSpec::new(n, f.strands() - 1, system.into())?;
    let letters = match letters {
        LettersArg::Artin => Letters::Artin,
        LettersArg::Native => Letters::Native,
    };
    let lifted = if forget { spec.lift_forgetful(&f, letters)? } else { spec.lift_factorization(&f, letters)? };
    factorization_out(out, &lifted)
}

fn generify(rule: RuleArg, data: &Path, input: &Option<PathBuf>, out: Option<&Path>) -> CliResult<()> {
    let result = match rule {
        RuleArg::Arrangement => {
            if input.is_some() {
                return Err(CliError::Usage("the arrangement rule reads everything from --data".into()));
            }
            let spec: ArrangementSpec = read_json(data)?;
            arrangement_generify(&spec.resolve()?)?
        }
        RuleArg::LocalSplit => {
            let mut f: Factorization = read_json(need(input, "--in")?)?;
            let splits: Vec<Split> = read_json(data)?;
            for s in &splits {
                f = split_locally_generic(&f, s.entry, s.parts(f.strands())?)?;
            }
            f
        }
        RuleArg::Cusp | RuleArg::Node | RuleArg::Inflection => {
            let mut f: Factorization = read_json(need(input, "--in")?)?;
            let items: Vec<Replacement> = read_json(data)?;
            for r in &items {
                let kind = match rule {
                    RuleArg::Cusp => TangencyKind::Cusp,
                    RuleArg::Node => TangencyKind::Node,
                    _ => TangencyKind::Inflection(r.inflection_order()?),
                };
                f = replace_tangency(&f, r.entry, &r.model(kind, f.strands())?)?;
            }
            f
        }
    };
    factorization_out(out, &result)
}

fn zvk(variant: VariantArg, input: &Path, kept: &[usize], data: &Option<PathBuf>, out: Option<&Path>) -> CliResult<()> {
    let f: Factorization = read_json(input)?;
    if !kept.is_empty() && !matches!(variant, VariantArg::Horizontal) {
        return Err(CliError::Usage("--kept only applies to the horizontal variant".into()));
    }
    if data.is_some() && !matches!(variant, VariantArg::Generic) {
        return Err(CliError::Usage("--data only applies to the generic variant".into()));
    }
    let p = match variant {
        VariantArg::Affine => presentation_affine(&f)?,
        VariantArg::Horizontal => presentation_fully_horizontal(&f, kept)?,
        VariantArg::Projective => presentation_projective(&f)?,
        VariantArg::Generic => {
            let specs: Vec<FiberSpec> = read_json(need(data, "--data")?)?;
            let fibers = specs.iter().map(|s| s.resolve(f.strands())).collect::<CliResult<Vec<_>>>()?;
            presentation_generic(&f, &fibers)?
        }
    };
    emit(out, &to_json(&p))
}

#[derive(Serialize)]
struct Abelianization {
    invariant_factors: Vec<u64>,
}

#[derive(Serialize)]
struct RealCubic {
    /// `[b1, b2, b3]` of `y^3 - b1 y^2 + b2 y - b3`.
    coefficients: [String; 3],
}

fn singular(which: &SingularCommand) -> CliResult<()> {
    let text = match which {
        SingularCommand::Type1 { n, data } => {
            let d: LocalPointData = read_json(data)?;
            to_json(&transform_type1(*n, &d)?)
        }
        SingularCommand::Type0 { n, data } => {
            let d: LocalPointData = read_json(data)?;
            to_json(&transform_type0(*n, &d)?)
        }
        SingularCommand::Realcubic { a1, a2, a3 } => {
            let (b1, b2, b3) = real_part_cubic(a1, a2, a3);
            to_json(&RealCubic { coefficients: [b1.to_string(), b2.to_string(), b3.to_string()] })
        }
    };
    emit(None, &text)
}

fn example(name: &str, report: Option<&Path>, sequential: bool) -> CliResult<()> {
    if name == "list" {
        return emit(None, &(fixtures::names().join("\n") + "\n"));
    }
    let exec = if sequential { Exec::Sequential } else { Exec::Parallel };
    let outcome = fixtures::execute(name, exec)?;
    let r = &outcome.report;
    let mut text = String::new();
    for step in &r.steps {
        text.push_str(&format!("step  {step}\n"));
    }
    for c in &r.checks {
        let status = if c.passed { "ok" } else { "FAIL" };
        let severity = match c.severity {
            Severity::Hard => "hard",
            Severity::Soft => "soft",
        };
        text.push_str(&format!("{status:<4}  [{severity}] {}", c.name));
        if !c.detail.is_empty() {
            text.push_str(&format!(": {}", c.detail));
        }
        text.push('\n');
    }
    if let Some(f) = r.final_output() {
        text.push_str(&format!("final output ({} entries on {} strands):\n{f}", f.len(), f.strands()));
    }
    emit(None, &text)?;
    if let Some(path) = report {
        emit(Some(path), &to_json(r))?;
    }
    match outcome.error {
        Some(e) => Err(e.into()),
        None => Ok(()),
    }
}

fn verify(path: &Path, generic: bool, against: Option<&Path>) -> CliResult<()> {
    let f: Factorization = read_json(path)?;
    let mut text = format!("{} entries on {} strands\n", f.len(), f.strands());
    if generic {
        let d = f.strands() as i64;
        let e = f.total_exponent();
        if e != d * (d - 1) {
            return Err(Error::mismatch(format!("total exponent {e}, the full twist has {}", d * (d - 1))).into());
        }
        if !f.is_generic()? {
            return Err(Error::mismatch("pseudo-Coxeter element is not the full twist").into());
        }
        text.push_str("pseudo-Coxeter element is the full twist\n");
    }
    if let Some(other) = against {
        let g: Factorization = read_json(other)?;
        if g.strands() != f.strands() || g.len() != f.len() {
            return Err(Error::mismatch(format!(
                "shapes differ: {} entries on {} strands vs {} on {}",
                f.len(),
                f.strands(),
                g.len(),
                g.strands()
            ))
            .into());
        }
        let bad = f.entrywise_mismatches(&g, Exec::Parallel)?;
        if let Some(&i) = bad.first() {
            return Err(Error::mismatch(format!(
                "{} entries differ; first at entry {i}: {} vs {}",
                bad.len(),
                f.entries()[i - 1],
                g.entries()[i - 1]
            ))
            .into());
        }
        text.push_str("entrywise equal\n");
    }
    emit(None, &text)
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Lift { n, system, letters, forget, input, out } => {
            lift(n, system, letters, forget, &input, out.as_deref())
        }
        Command::Hurwitz { moves, input, out } => {
            let f: Factorization = read_json(&input)?;
            factorization_out(out.as_deref(), &f.apply_moves(&HurwitzMove::parse_list(&moves)?)?)
        }
        Command::Conjugate { by, input, out } => {
            let f: Factorization = read_json(&input)?;
            let g = BraidSpec::Text(by).resolve(f.strands())?;
            factorization_out(out.as_deref(), &f.conjugate_all(&g)?)
        }
        Command::Generify { rule, data, input, out } => generify(rule, &data, &input, out.as_deref()),
        Command::Zvk { variant, input, kept, data, out } => zvk(variant, &input, &kept, &data, out.as_deref()),
        Command::Abelianize { input } => {
            let p: GroupPresentation = read_json(&input)?;
            let p = GroupPresentation::new(p.generators, p.relators)?;
            emit(None, &to_json(&Abelianization { invariant_factors: abelianize(&p) }))
        }
        Command::Simplify { budget, input, out } => {
            let p: GroupPresentation = read_json(&input)?;
            let p = GroupPresentation::new(p.generators, p.relators)?;
            emit(out.as_deref(), &to_json(&tietze_simplify(&p, budget)))
        }
        Command::Singular { which } => singular(&which),
        Command::Example { name, report, sequential } => example(&name, report.as_deref(), sequential),
        Command::Verify { factorization, generic, against } => verify(&factorization, generic, against.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
