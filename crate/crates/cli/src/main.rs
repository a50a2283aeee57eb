use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use veldkamp::Pauli;

mod commands;
mod report;

#[derive(Parser)]
#[command(name = "veldkamp", version, about = "Finite geometry of the three-qubit Pauli group")]
struct Cli {
    /// Emit the JSON report envelope instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel enumerations.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    /// Assert that no randomness is used. Every command is already
    /// deterministic.
    #[arg(long, global = true)]
    seedless: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Points, isotropic lines or Lagrangian planes of W(5,2).
    Catalog {
        #[arg(value_enum)]
        what: CatalogKind,
    },
    /// A perp set C_p or quadric H_p.
    Hyperplane {
        #[arg(long, value_enum)]
        kind: HyperplaneArg,
        #[arg(long)]
        label: Pauli,
    },
    /// Veldkamp lines.
    #[command(subcommand)]
    Veldkamp(VeldkampCommand),
    /// Mermin pentagrams.
    #[command(subcommand)]
    Pentagram(PentagramCommand),
    /// The double six attached to the line (H_p, H_q, C_{p+q}).
    Doublesix {
        #[command(flatten)]
        labels: Labels,
        /// Print the conjugacy graph in Graphviz DOT.
        #[arg(long)]
        dot: bool,
    },
    /// Spreads of the core doily and their pentagram pairs.
    Spreads {
        #[command(flatten)]
        labels: Labels,
    },
    /// Searches for a noncontextual value assignment of pentagrams read from
    /// a JSON file.
    KsCheck {
        #[arg(long)]
        input: PathBuf,
    },
    /// Mermin squares obtained by raising a double-six point to an apex.
    Squares(SquaresArgs),
    /// The 20 of A5 and its observable dictionaries.
    #[command(subcommand)]
    Weights(WeightsCommand),
    /// Seven mutually anticommuting observables.
    #[command(subcommand)]
    Clifford(CliffordCommand),
    /// Runs every registered invariant check.
    VerifyAll {
        /// List the registry instead of running it.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CatalogKind {
    Points,
    Lines,
    Lagrangians,
}

#[derive(Clone, Copy, ValueEnum)]
enum HyperplaneArg {
    Perp,
    Quadric,
}

#[derive(Args)]
struct Labels {
    /// Label of the hyperbolic quadric.
    #[arg(long)]
    p: Pauli,
    /// Label of the elliptic quadric.
    #[arg(long)]
    q: Pauli,
}

#[derive(Subcommand)]
enum VeldkampCommand {
    /// All 1008 mixed lines, or every class with --census.
    Enumerate {
        #[arg(long)]
        census: bool,
    },
    /// The four-block partition of (H_a, H_b, C_{a+b}).
    Report {
        #[arg(long)]
        a: Pauli,
        #[arg(long)]
        b: Pauli,
    },
}

#[derive(Subcommand)]
enum PentagramCommand {
    /// All 12096 pentagrams.
    Enumerate {
        /// Only the negative-line census.
        #[arg(long)]
        census: bool,
        /// Also run the clique search and require agreement.
        #[arg(long)]
        slow: bool,
    },
}

#[derive(Args)]
struct SquaresArgs {
    /// Census over all double sixes and apexes.
    #[arg(long, conflicts_with_all = ["from_doublesix", "apex"], required_unless_present = "from_doublesix")]
    count: bool,
    /// Labels p and q of a double six.
    #[arg(long, num_args = 2, value_names = ["P", "Q"], requires = "apex")]
    from_doublesix: Option<Vec<Pauli>>,
    /// A point of the double six raised to the apex.
    #[arg(long, requires = "from_doublesix")]
    apex: Option<Pauli>,
}

#[derive(Subcommand)]
enum WeightsCommand {
    /// The 20 weights with Dynkin and trivector labels.
    Irrep20,
    /// Trivector label to observable.
    Map {
        #[arg(long, default_value = "corres1")]
        context: String,
    },
    /// The 30 zero-sum quadruples and their observables.
    Quadruples {
        #[arg(long, default_value = "canonical")]
        context: String,
    },
    /// Observables of the simple roots.
    Dynkin {
        #[arg(long, default_value = "corres1")]
        context: String,
    },
}

#[derive(Subcommand)]
enum CliffordCommand {
    /// The four blocks cut out by a frame: choice, choicei7 or seven
    /// comma-separated Pauli strings.
    Partition {
        #[arg(long, default_value = "choice")]
        frame: String,
    },
    /// Counts all frames.
    Census,
}

fn run(cli: Cli) -> anyhow::Result<report::Report> {
    use commands as c;
    match cli.command {
        Command::Catalog { what } => match what {
            CatalogKind::Points => c::catalog_points(),
            CatalogKind::Lines => c::catalog_lines(),
            CatalogKind::Lagrangians => c::catalog_lagrangians(),
        },
        Command::Hyperplane { kind, label } => c::hyperplane(matches!(kind, HyperplaneArg::Perp), label),
        Command::Veldkamp(VeldkampCommand::Enumerate { census }) => c::veldkamp_enumerate(census),
        Command::Veldkamp(VeldkampCommand::Report { a, b }) => c::veldkamp_report(a, b),
        Command::Pentagram(PentagramCommand::Enumerate { census, slow }) => c::pentagram_enumerate(census, slow),
        Command::Doublesix { labels, dot } => c::doublesix(labels.p, labels.q, dot),
        Command::Spreads { labels } => c::spreads(labels.p, labels.q),
        Command::KsCheck { input } => c::ks_check(&input),
        Command::Squares(args) => match (args.from_doublesix, args.apex) {
            (Some(pq), Some(apex)) => c::square_from_doublesix(pq[0], pq[1], apex),
            _ => c::squares_count(),
        },
        Command::Weights(WeightsCommand::Irrep20) => c::weights_irrep20(),
        Command::Weights(WeightsCommand::Map { context }) => c::weights_map(&context),
        Command::Weights(WeightsCommand::Quadruples { context }) => c::weights_quadruples(&context),
        Command::Weights(WeightsCommand::Dynkin { context }) => c::weights_dynkin(&context),
        Command::Clifford(CliffordCommand::Partition { frame }) => c::clifford_partition(&frame),
        Command::Clifford(CliffordCommand::Census) => c::clifford_census(),
        Command::VerifyAll { list } => c::verify_all(list),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let json = cli.json;
    let report = match run(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            // bad input is a usage error; broken invariants are failures
            let internal = matches!(e.downcast_ref::<veldkamp::Error>(), Some(veldkamp::Error::Invariant(_)));
            return ExitCode::from(if internal { 1 } else { 2 });
        }
    };
    match report.render(json) {
        Ok(out) => print!("{out}"),
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    }
    match report.failure {
        Some(msg) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        None => ExitCode::SUCCESS,
    }
}
