use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use middle_order::enumeration::{euler_characteristic, CountTable, TableKind};
use middle_order::export::to_dot;
use middle_order::heyting::{pseudocomplement, regular_subposet, relative_pseudocomplement};
use middle_order::involutions::{involution_poset, mobius_involution_ideal};
use middle_order::limits::set_exhaustive_limit;
use middle_order::orders::{join, meet, mobius_middle, order_poset, upper_covers, Order};
use middle_order::parking::parking_poset;
use middle_order::verify::{self, Suite};
use middle_order::{Error, FinitePoset, InversionSequence, Permutation};

const DIAGRAM_LIMIT: usize = 5;

#[derive(Parser)]
#[command(
    name = "middle-order",
    version,
    about = "The middle order on permutations"
)]
struct Cli {
    /// Size limit for exhaustive computations and diagrams
    #[arg(long, global = true)]
    limit: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count tables for rows 1..=n
    Table {
        #[arg(value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// First index of b-file output
        #[arg(long, default_value_t = 1)]
        offset: usize,
    },
    /// Hasse diagram as a DOT digraph
    Hasse {
        #[arg(long, value_enum)]
        order: HasseOrder,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Label::Perm)]
        label: Label,
    },
    /// Evaluate a single expression
    Query {
        #[command(subcommand)]
        expr: Expr,
    },
    /// Run an invariant suite for n = 1..=n-max
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long)]
        n_max: usize,
    },
}

#[derive(Subcommand)]
enum Expr {
    /// Inversion sequence of a permutation
    Invseq {
        #[arg(value_parser = perm)]
        w: Permutation,
    },
    /// Permutation with the given inversion sequence
    Perm {
        #[arg(value_parser = invseq)]
        x: InversionSequence,
    },
    Meet {
        #[arg(value_parser = perm)]
        v: Permutation,
        #[arg(value_parser = perm)]
        w: Permutation,
    },
    Join {
        #[arg(value_parser = perm)]
        v: Permutation,
        #[arg(value_parser = perm)]
        w: Permutation,
    },
    /// Moebius function of the middle order
    Mobius {
        #[arg(value_parser = perm)]
        v: Permutation,
        #[arg(value_parser = perm)]
        w: Permutation,
    },
    /// Moebius function from the identity among involutions
    MobiusInv {
        #[arg(value_parser = perm)]
        w: Permutation,
    },
    /// Relative pseudocomplement v ~> w
    Heyting {
        #[arg(value_parser = perm)]
        v: Permutation,
        #[arg(value_parser = perm)]
        w: Permutation,
    },
    /// Pseudocomplement ~v
    Pseudo {
        #[arg(value_parser = perm)]
        v: Permutation,
    },
    /// Euler characteristic
    Euler {
        #[arg(value_parser = perm)]
        w: Permutation,
    },
    /// Upper covers in the middle order, one per line
    Covers {
        #[arg(value_parser = perm)]
        w: Permutation,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Intervals,
    Boolean,
    Euler,
    Stirling,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Oeis,
}

#[derive(Clone, Copy, ValueEnum)]
enum HasseOrder {
    Middle,
    Bruhat,
    Weak,
    Involutions,
    Parking,
    Regular,
}

#[derive(Clone, Copy, ValueEnum)]
enum Label {
    Perm,
    Invseq,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Bijection,
    Sandwich,
    Mesh,
    Tables,
    Mobius,
    Involutions,
    Heyting,
    Parking,
    All,
}

fn perm(s: &str) -> Result<Permutation, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn invseq(s: &str) -> Result<InversionSequence, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn table(kind: KindArg, n: usize, format: Format, offset: usize) -> middle_order::Result<String> {
    let kind = match kind {
        KindArg::Intervals => TableKind::Intervals,
        KindArg::Boolean => TableKind::Boolean,
        KindArg::Euler => TableKind::Euler,
        KindArg::Stirling => TableKind::Stirling,
    };
    let t = CountTable::build(kind, n)?;
    Ok(match format {
        Format::Csv => t.to_csv(),
        Format::Json => t.to_json(),
        Format::Oeis => t.to_bfile(offset),
    })
}

fn perm_dot(
    poset: FinitePoset<Permutation>,
    name: &str,
    label: Label,
) -> middle_order::Result<String> {
    Ok(match label {
        Label::Perm => to_dot(&poset, name),
        Label::Invseq => to_dot(
            &poset.map_labels(|w| w.inversion_sequence().compact())?,
            name,
        ),
    })
}

fn hasse(order: HasseOrder, n: usize, label: Label, limit: usize) -> middle_order::Result<String> {
    if n > limit {
        return Err(Error::SizeLimit {
            what: "hasse",
            n,
            limit,
        });
    }
    match order {
        HasseOrder::Middle => perm_dot(order_poset(Order::Middle, n)?, "middle", label),
        HasseOrder::Bruhat => perm_dot(order_poset(Order::Bruhat, n)?, "bruhat", label),
        HasseOrder::Weak => perm_dot(order_poset(Order::Weak, n)?, "weak", label),
        HasseOrder::Involutions => perm_dot(involution_poset(n)?, "involutions", label),
        HasseOrder::Regular => perm_dot(regular_subposet(n)?, "regular", label),
        HasseOrder::Parking => Ok(to_dot(&parking_poset(n)?, "parking")),
    }
}

fn query(expr: Expr) -> middle_order::Result<String> {
    Ok(match expr {
        Expr::Invseq { w } => w.inversion_sequence().to_string(),
        Expr::Perm { x } => x.to_permutation().to_string(),
        Expr::Meet { v, w } => meet(&v, &w)?.to_string(),
        Expr::Join { v, w } => join(&v, &w)?.to_string(),
        Expr::Mobius { v, w } => mobius_middle(&v, &w)?.to_string(),
        Expr::MobiusInv { w } => mobius_involution_ideal(&w)?.to_string(),
        Expr::Heyting { v, w } => relative_pseudocomplement(&v, &w)?.to_string(),
        Expr::Pseudo { v } => pseudocomplement(&v).to_string(),
        Expr::Euler { w } => euler_characteristic(&w).to_string(),
        Expr::Covers { w } => {
            let covers: Vec<String> = upper_covers(Order::Middle, &w)
                .iter()
                .map(ToString::to_string)
                .collect();
            return Ok(covers.iter().map(|c| format!("{c}\n")).collect());
        }
    } + "\n")
}

fn suite(s: SuiteArg) -> Suite {
    match s {
        SuiteArg::Bijection => Suite::Bijection,
        SuiteArg::Sandwich => Suite::Sandwich,
        SuiteArg::Mesh => Suite::Mesh,
        SuiteArg::Tables => Suite::Tables,
        SuiteArg::Mobius => Suite::Mobius,
        SuiteArg::Involutions => Suite::Involutions,
        SuiteArg::Heyting => Suite::Heyting,
        SuiteArg::Parking => Suite::Parking,
        SuiteArg::All => Suite::All,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(limit) = cli.limit {
        set_exhaustive_limit(limit);
    }
    let output = match cli.command {
        Command::Table {
            kind,
            n,
            format,
            offset,
        } => table(kind, n, format, offset),
        Command::Hasse { order, n, label } => {
            hasse(order, n, label, cli.limit.unwrap_or(DIAGRAM_LIMIT))
        }
        Command::Query { expr } => query(expr),
        Command::Verify { suite: s, n_max } => match verify::run(suite(s), n_max) {
            Ok(report) => {
                print!("{report}");
                return if report.passed() {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                };
            }
            Err(e) => Err(e),
        },
    };
    match output {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
