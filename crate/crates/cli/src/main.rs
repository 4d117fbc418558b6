use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod report;

use report::{CliError, Report};

#[derive(Parser, Debug)]
#[command(
    name = "shiftedq",
    version,
    about = "Shifted tableaux, Schur Q-functions and spin graded multiplicities"
)]
struct Cli {
    /// Print JSON instead of human-readable tables.
    #[arg(long, global = true)]
    json: bool,

    /// Also write the JSON document to this file.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hooks, contents, Frobenius coordinates and doubles of a shape.
    Shape(ShapeArgs),
    /// Enumerate or validate marked and colored shifted tableaux.
    #[command(subcommand)]
    Tableaux(TableauxCmd),
    /// The exchange bijection between marked and colored tableaux.
    Bijection(BijectionArgs),
    /// Schur Q-functions, q-functions and Q-basis expansions.
    #[command(subcommand)]
    Qfun(QfunCmd),
    /// Principal and bi-graded specializations of Q_λ.
    Specialize(SpecializeArgs),
    /// Graded multiplicities of simple supermodules.
    Mult(MultArgs),
    /// Classical graded multiplicities for the symmetric group.
    Classical(ClassicalArgs),
    /// Run every self-check.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("kind").required(true))]
pub struct ShapeArgs {
    /// A strict partition, e.g. 4,2,1.
    #[arg(long, group = "kind", value_name = "PARTS")]
    pub strict: Option<String>,
    /// An ordinary partition, e.g. 3,3,1.
    #[arg(long, group = "kind", value_name = "PARTS")]
    pub partition: Option<String>,
    /// Tables to print; all of them when omitted.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub show: Vec<ShapeView>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ShapeView {
    Hooks,
    Contents,
    Frobenius,
    Double,
}

#[derive(Subcommand, Debug)]
pub enum TableauxCmd {
    /// List every tableau of a shape with letters at most --max-letter.
    Enumerate {
        #[arg(long)]
        shape: String,
        #[arg(long, default_value_t = 2)]
        max_letter: u32,
        #[arg(long, value_enum, default_value_t = Kind::Marked)]
        kind: Kind,
        /// Print only the count.
        #[arg(long)]
        count: bool,
    },
    /// Check a tableau given as text (rows on separate lines, `-` for stdin).
    Validate {
        #[arg(long, value_enum, default_value_t = Kind::Marked)]
        kind: Kind,
        #[arg(default_value = "-")]
        input: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Marked,
    Colored,
}

#[derive(Args, Debug)]
pub struct BijectionArgs {
    /// Marked to colored (the default).
    #[arg(long, conflicts_with = "inverse")]
    pub forward: bool,
    /// Colored to marked.
    #[arg(long)]
    pub inverse: bool,
    /// Print every swap.
    #[arg(long)]
    pub trace: bool,
    /// Print the intermediate colored tableaux T^1, …, T^m.
    #[arg(long, conflicts_with = "inverse")]
    pub stages: bool,
    /// Tableau text file, `-` for stdin.
    #[arg(default_value = "-")]
    pub input: String,
}

#[derive(Subcommand, Debug)]
pub enum QfunCmd {
    /// Q_λ(z_1, …, z_m) from marked shifted tableaux.
    Schur {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        vars: usize,
    },
    /// q_ν(z_1, …, z_m) = q_{ν_1} q_{ν_2} ⋯.
    Qnu {
        #[arg(long)]
        nu: String,
        #[arg(long)]
        vars: usize,
    },
    /// q_ν in the Q-basis.
    Expand {
        #[arg(long)]
        nu: String,
    },
    /// Degree-j part of the graded characteristic of the polynomial algebra.
    Ch {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: usize,
    },
    /// Bidegree-(q, p) part of the characteristic with an exterior factor.
    ChBigraded {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// Q_λ at a rational point, by symmetrization and by tableaux.
    Eval {
        #[arg(long)]
        shape: String,
        /// Comma-separated rationals, e.g. 1,1/2,3.
        #[arg(long)]
        at: String,
    },
    /// Cauchy identity in two alphabets through total degree --n.
    Cauchy {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        vars: usize,
    },
}

#[derive(Args, Debug)]
pub struct SpecializeArgs {
    #[arg(long)]
    pub shape: String,
    #[arg(long, env = "SHIFTEDQ_TRUNC", default_value_t = shiftedq::series::DEFAULT_TRUNC)]
    pub trunc: usize,
    /// Q_λ(t•; st•) instead of the principal specialization.
    #[arg(long)]
    pub bigraded: bool,
}

#[derive(Args, Debug)]
pub struct MultArgs {
    #[arg(long)]
    pub shape: String,
    #[arg(long, value_enum, default_value_t = Module::Sym)]
    pub module: Module,
    #[arg(long, value_enum, default_value_t = AlgebraArg::Hc)]
    pub algebra: AlgebraArg,
    #[arg(long, env = "SHIFTEDQ_TRUNC", default_value_t = shiftedq::series::DEFAULT_TRUNC)]
    pub trunc: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Module {
    /// The polynomial algebra.
    Sym,
    /// The coinvariant algebra.
    Coinv,
    /// The exterior algebra.
    Wedge,
    /// Polynomial ⊗ exterior algebra.
    Bigraded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgebraArg {
    Hc,
    Spin,
}

#[derive(Args, Debug)]
pub struct ClassicalArgs {
    /// An ordinary partition.
    #[arg(long)]
    pub shape: String,
    #[arg(long, env = "SHIFTEDQ_TRUNC", default_value_t = shiftedq::series::DEFAULT_TRUNC)]
    pub trunc: usize,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = LevelArg::Quick)]
    pub level: LevelArg,
    /// Include wall-clock times (makes the output nondeterministic).
    #[arg(long)]
    pub timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LevelArg {
    Quick,
    Full,
}

fn dispatch(cmd: Command) -> Result<Report, CliError> {
    match cmd {
        Command::Shape(a) => commands::shape(&a),
        Command::Tableaux(c) => commands::tableaux(c),
        Command::Bijection(a) => commands::bijection(&a),
        Command::Qfun(c) => commands::qfun(c),
        Command::Specialize(a) => commands::specialize(&a),
        Command::Mult(a) => commands::mult(&a),
        Command::Classical(a) => commands::classical(&a),
        Command::Verify(a) => commands::verify(&a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(report) => {
            if let Err(e) = report.emit(cli.json, cli.out.as_deref()) {
                eprintln!("error: {e:#}");
                return ExitCode::from(1);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
