//! Command-line driver: loads a JSON structure file, runs one construction
//! or verification, and prints a report.
//!
//! Exit status is 0 when every check passes, 1 when a check fails or a
//! construction is refused on mathematical grounds, and 2 on bad input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use hopfpi::comodules::DEFAULT_SEED_CAP;
use hopfpi::induction::Flavor;
use hopfpi::FieldSpec;

use hopfpi_cli::commands::{self, QuotientArgs, SimplicityTarget};
use hopfpi_cli::error::CliError;
use hopfpi_cli::examples::{self, ExampleName, Params};
use hopfpi_cli::model;
use hopfpi_cli::output::{self, Format, Outcome};

/// Environment variable naming the field used when a command does not fix one.
const FIELD_VAR: &str = "HOPFPI_DEFAULT_FIELD";

#[derive(Parser)]
#[command(
    name = "hopfpi",
    version,
    about = "Exact computations with Hopf group-coalgebras"
)]
struct Cli {
    /// Write the primary output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value = "json")]
    report: Format,

    /// Most seeds the simplicity search may try before giving a heuristic verdict.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED_CAP)]
    seed_cap: u64,

    /// Worker threads; results do not depend on this.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SimplicityWhich {
    /// A comodule of the file.
    #[arg(long)]
    comodule: Option<String>,
    /// The comodule induced from a coaction of the file.
    #[arg(long)]
    induced: Option<String>,
    /// The comodule coinduced from a coaction of the file.
    #[arg(long)]
    coinduced: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check every axiom of every structure in the file.
    Verify { file: PathBuf },
    /// Quotient a Hopf family by a coideal family and add the result as a pair.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        hopf: String,
        #[arg(long)]
        coideal: String,
        /// Keep the algebra structure; the family must be a Hopf coideal.
        #[arg(long)]
        hopf_quotient: bool,
        /// Attach the action by multiplication on lifts.
        #[arg(long)]
        with_action: bool,
        #[arg(long, default_value = "C")]
        name: String,
        #[arg(long, default_value = "P")]
        pair: String,
    },
    /// Induce a comodule over the Hopf family from a coaction of the target.
    Induce {
        file: PathBuf,
        #[arg(long)]
        coaction: String,
    },
    /// Coinduce a comodule and check that its coaction ignores the dual basis.
    Coinduce {
        file: PathBuf,
        #[arg(long)]
        coaction: String,
        /// Number of random dual bases to compare against.
        #[arg(long, default_value_t = 3)]
        dual_seeds: u64,
    },
    /// Decide whether a comodule has a proper nonzero subcomodule.
    Simplicity {
        file: PathBuf,
        #[command(flatten)]
        which: SimplicityWhich,
    },
    /// The isomorphism between H and C ⊗ B given by a section.
    IsoCb {
        file: PathBuf,
        #[arg(long)]
        section: String,
    },
    /// The isomorphism between H and C ⊗ G given by a section.
    IsoCg {
        file: PathBuf,
        #[arg(long)]
        section: String,
    },
    /// The isomorphism between an induced comodule and V ⊗ B.
    IsoVb {
        file: PathBuf,
        #[arg(long)]
        section: String,
        #[arg(long)]
        cosection: String,
        #[arg(long)]
        coaction: String,
    },
    /// Build a Hopf family from a Hopf algebra and a group action on it.
    Mirror {
        file: PathBuf,
        #[arg(long)]
        classical: String,
        #[arg(long)]
        action: String,
        #[arg(long, default_value = "H")]
        name: String,
    },
    /// Emit a built-in structure file.
    Example {
        #[arg(value_enum)]
        name: ExampleName,
        /// Defaults to the environment variable, then to the rationals.
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 7)]
        p: u64,
        #[arg(long, default_value_t = 2)]
        q: u64,
    },
    /// Transport a comodule isomorphism to the induced or coinduced comodules.
    Equiv {
        file: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// The isomorphism as a JSON matrix, e.g. "[[3]]".
        #[arg(long)]
        map: String,
        #[arg(long)]
        coinduced: bool,
    },
    /// Induce and coinduce a direct sum of two coactions and split it.
    DirectSum {
        file: PathBuf,
        #[arg(long)]
        first: String,
        #[arg(long)]
        second: String,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Verify { .. } => "verify",
            Command::Quotient { .. } => "quotient",
            Command::Induce { .. } => "induce",
            Command::Coinduce { .. } => "coinduce",
            Command::Simplicity { .. } => "simplicity",
            Command::IsoCb { .. } => "iso-cb",
            Command::IsoCg { .. } => "iso-cg",
            Command::IsoVb { .. } => "iso-vb",
            Command::Mirror { .. } => "mirror",
            Command::Example { .. } => "example",
            Command::Equiv { .. } => "equiv",
            Command::DirectSum { .. } => "direct-sum",
        }
    }
}

fn default_field(explicit: Option<&str>) -> Result<FieldSpec, CliError> {
    let text = match explicit {
        Some(t) => t.to_string(),
        None => std::env::var(FIELD_VAR).unwrap_or_else(|_| "Q".to_string()),
    };
    FieldSpec::parse(&text).map_err(|e| CliError::Usage(e.to_string()))
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let load = |p: &Path| model::load(p).map_err(CliError::from);
    match &cli.command {
        Command::Verify { file } => commands::verify(&load(file)?),
        Command::Quotient {
            file,
            hopf,
            coideal,
            hopf_quotient,
            with_action,
            name,
            pair,
        } => {
            let args = QuotientArgs {
                hopf,
                coideal,
                hopf_quotient: *hopf_quotient,
                with_action: *with_action,
                name,
                pair,
            };
            commands::quotient(&load(file)?, &args)
        }
        Command::Induce { file, coaction } => commands::induce_cmd(&load(file)?, coaction),
        Command::Coinduce {
            file,
            coaction,
            dual_seeds,
        } => commands::coinduce_cmd(&load(file)?, coaction, *dual_seeds),
        Command::Simplicity { file, which } => {
            let target = match (&which.comodule, &which.induced, &which.coinduced) {
                (Some(n), _, _) => SimplicityTarget::Comodule(n),
                (_, Some(n), _) => SimplicityTarget::Induced(n),
                (_, _, Some(n)) => SimplicityTarget::Coinduced(n),
                _ => unreachable!("clap requires exactly one target"),
            };
            commands::simplicity(&load(file)?, target, cli.seed_cap)
        }
        Command::IsoCb { file, section } => commands::iso_hg(&load(file)?, section, Flavor::B),
        Command::IsoCg { file, section } => commands::iso_hg(&load(file)?, section, Flavor::G),
        Command::IsoVb {
            file,
            section,
            cosection,
            coaction,
        } => commands::iso_vb_cmd(&load(file)?, section, cosection, coaction),
        Command::Mirror {
            file,
            classical,
            action,
            name,
        } => commands::mirror_cmd(&load(file)?, classical, action, name),
        Command::Example {
            name,
            field,
            n,
            p,
            q,
        } => {
            let params = Params {
                field: default_field(field.as_deref())?,
                n: *n,
                p: *p,
                q: *q,
            };
            let m = examples::build(*name, &params)?;
            let mut o = commands::verify(&m)?;
            o.structure = Some(model::emit(&m));
            Ok(o)
        }
        Command::Equiv {
            file,
            from,
            to,
            map,
            coinduced,
        } => commands::equiv(&load(file)?, from, to, map, *coinduced),
        Command::DirectSum {
            file,
            first,
            second,
        } => commands::direct_sum_cmd(&load(file)?, first, second, cli.seed_cap),
    }
}

fn write_out(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Write {
        path: path.display().to_string(),
        source,
    })
}

/// The structure file of constructing commands is the primary output; the
/// report then goes to standard output only when the structure went to a file.
fn deliver(cli: &Cli, o: &Outcome) -> Result<(), CliError> {
    let name = cli.command.name();
    let report = output::render(name, o, cli.report);
    match (&o.structure, &cli.out) {
        (Some(s), Some(path)) => {
            write_out(path, &model::to_json_text(s))?;
            print!("{report}");
        }
        (Some(s), None) => print!("{}", model::to_json_text(s)),
        (None, Some(path)) => write_out(path, &report)?,
        (None, None) => print!("{report}"),
    }
    Ok(())
}

fn refusal(e: &CliError) -> Outcome {
    let mut o = Outcome {
        refused: true,
        ..Outcome::default()
    };
    if let CliError::Lib(hopfpi::Error::Precondition { what, residual }) = e {
        o.set("refused", what);
        if let Some(r) = residual {
            o.set("residual", output::matrix(r));
        }
    } else {
        o.set("refused", e.to_string());
    }
    o
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let result = run(&cli);
    eprintln!("{}: {} ms", cli.command.name(), start.elapsed().as_millis());
    let outcome = match result {
        Ok(o) => o,
        Err(e) if e.is_refusal() => refusal(&e),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = deliver(&cli, &outcome) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if outcome.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn refusal_carries_the_residual() {
        let f = FieldSpec::Prime(7);
        let residual = hopfpi::Matrix::from_ints(f, &[&[1, 0]]);
        let e = CliError::Lib(hopfpi::Error::Precondition {
            what: "not a map".into(),
            residual: Some(residual),
        });
        let o = refusal(&e);
        assert!(!o.passed());
        assert_eq!(o.results["residual"], json!([[1, 0]]));
    }

    #[test]
    fn usage_errors_are_not_refusals() {
        assert!(!CliError::Usage("x".into()).is_refusal());
        assert!(CliError::Lib(hopfpi::Error::NotContained { what: "x".into() }).is_refusal());
    }
}
