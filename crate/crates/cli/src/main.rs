mod diagnose;
mod error;
mod render;

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};
use ssp_core::enumeration::{
    cell_gf_all_with, cell_gf_ss_with, hawkes_sides, orbit_gf_ts_with, DEFAULT_NODE_BUDGET,
};
use ssp_core::{
    bgens_via_psi, borel_closure, ideal_to_partition, lambda_inv, lambda_map, omega, omega_inv,
    partition_to_ideal, qtspp, ss_to_ts_partition, ts_to_ss_partition, Class, CountTable,
    EnumOptions, Enumerator, Error as CoreError, FSet, FSetData, IdealData, Monomial,
    MonomialIdeal, Partition, PartitionData, QPolynomial,
};

use crate::error::CliError;
use crate::render::Style;

/// Largest integer a JSON double represents exactly; larger values are
/// written as decimal strings.
const MAX_SAFE_INTEGER: u64 = (1 << 53) - 1;

#[derive(Parser, Debug)]
#[command(
    name = "ssp",
    version,
    about = "Strongly stable partitions, monomial ideals and the bijection to totally symmetric partitions"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "json")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Predicate {
    Ss,
    Ts,
    All,
}

impl Predicate {
    fn class(self) -> Class {
        match self {
            Predicate::Ss => Class::StronglyStable,
            Predicate::Ts => Class::TotallySymmetric,
            Predicate::All => Class::All,
        }
    }
}

#[derive(Args, Debug)]
struct Input {
    /// JSON input file; standard input when omitted.
    file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Limits {
    /// Worker threads for enumeration.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Maximum number of search nodes.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
}

impl Limits {
    fn options(&self) -> EnumOptions {
        EnumOptions {
            budget: Some(self.budget),
            threads: self.threads.max(1),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a partition and report its statistics.
    CheckPartition {
        #[command(flatten)]
        input: Input,
        /// Fail unless the partition satisfies this predicate.
        #[arg(long, value_enum)]
        predicate: Option<Predicate>,
    },
    /// Validate a monomial ideal and report its properties.
    CheckIdeal {
        #[command(flatten)]
        input: Input,
        /// Fail unless the ideal is strongly stable (ss) or symmetric (ts).
        #[arg(long, value_enum)]
        predicate: Option<Predicate>,
    },
    /// Artinian ideal to the partition of monomials outside it.
    Ideal2partition {
        #[command(flatten)]
        input: Input,
    },
    /// Partition to the ideal of monomials outside it.
    Partition2ideal {
        #[command(flatten)]
        input: Input,
    },
    /// Minimal Borel generators of a strongly stable ideal.
    Bgens {
        #[command(flatten)]
        input: Input,
        /// Compute through prefix sums instead of the generator test.
        #[arg(long)]
        via_psi: bool,
    },
    /// Smallest strongly stable ideal containing the given generators.
    Closure {
        #[command(flatten)]
        input: Input,
    },
    /// Strongly stable partition to its totally symmetric image.
    Ss2ts {
        #[command(flatten)]
        input: Input,
    },
    /// Totally symmetric partition to its strongly stable preimage.
    Ts2ss {
        #[command(flatten)]
        input: Input,
    },
    /// Strongly stable ideal to its F-set; with --inverse, F-set to ideal.
    Lambda {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        inverse: bool,
    },
    /// F-set to its symmetric ideal; with --inverse, symmetric ideal to F-set.
    Omega {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        inverse: bool,
    },
    /// Cumulative counts of strongly stable and totally symmetric partitions.
    Count {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: u32,
        /// Stream the partitions of one class instead, one JSON object per line.
        #[arg(long)]
        list: bool,
        /// Class streamed by --list.
        #[arg(long, value_enum, default_value = "ss")]
        predicate: Predicate,
        #[command(flatten)]
        limits: Limits,
    },
    /// Generating function by cells (ss, all) or orbits (ts) as a coefficient array.
    Gf {
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "ss")]
        predicate: Predicate,
        /// Evaluate the product formula for totally symmetric plane partitions.
        #[arg(long)]
        product: bool,
        #[command(flatten)]
        limits: Limits,
    },
    /// Compare B_d(n) with B_{n-1}(d+1).
    Hawkes {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        limits: Limits,
    },
    /// ASCII picture of a partition.
    Render {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "ferrers")]
        style: Style,
    },
}

/// A result in both output formats.
struct Report {
    json: Value,
    pretty: String,
}

impl Report {
    fn new(json: Value, pretty: impl Into<String>) -> Self {
        Report {
            json,
            pretty: pretty.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ssp: error: {e}");
            e.exit()
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let report = match &cli.command {
        Command::CheckPartition { input, predicate } => check_partition(input, *predicate)?,
        Command::CheckIdeal { input, predicate } => check_ideal(input, *predicate)?,
        Command::Ideal2partition { input } => {
            let ideal = read_ideal(input)?;
            let p = ideal_to_partition(&ideal).map_err(|e| diagnose::for_ideal(e, &ideal))?;
            partition_report(&p)
        }
        Command::Partition2ideal { input } => {
            ideal_report(&partition_to_ideal(&read_partition(input)?))
        }
        Command::Bgens { input, via_psi } => {
            let ideal = read_ideal(input)?;
            let bgens = if *via_psi {
                bgens_via_psi(&ideal)
            } else {
                ideal.bgens()
            }
            .map_err(|e| diagnose::for_ideal(e, &ideal))?;
            monomial_list_report("bgens", bgens)
        }
        Command::Closure { input } => {
            let ideal = read_ideal(input)?;
            ideal_report(&borel_closure(ideal.gens().to_vec())?)
        }
        Command::Ss2ts { input } => {
            let p = read_partition(input)?;
            partition_report(&ss_to_ts_partition(&p).map_err(|e| diagnose::for_partition(e, &p))?)
        }
        Command::Ts2ss { input } => {
            let p = read_partition(input)?;
            partition_report(&ts_to_ss_partition(&p).map_err(|e| diagnose::for_partition(e, &p))?)
        }
        Command::Lambda { input, inverse } => {
            if *inverse {
                ideal_report(&lambda_inv(&read_fset(input)?)?)
            } else {
                let ideal = read_ideal(input)?;
                fset_report(&lambda_map(&ideal).map_err(|e| diagnose::for_ideal(e, &ideal))?)
            }
        }
        Command::Omega { input, inverse } => {
            if *inverse {
                let ideal = read_ideal(input)?;
                fset_report(&omega_inv(&ideal).map_err(|e| diagnose::for_ideal(e, &ideal))?)
            } else {
                ideal_report(&omega(&read_fset(input)?)?)
            }
        }
        Command::Count {
            d,
            n,
            list: true,
            predicate,
            limits,
        } => return stream(*d, *n, *predicate, limits, cli.format),
        Command::Count { d, n, limits, .. } => count(*d, *n, limits)?,
        Command::Gf {
            d,
            n,
            predicate,
            product,
            limits,
        } => gf(*d, *n, *predicate, *product, limits)?,
        Command::Hawkes { d, n, limits } => hawkes(*d, *n, limits)?,
        Command::Render { input, style } => {
            let text = render::render(&read_partition(input)?, *style)?;
            io::stdout().write_all(text.as_bytes())?;
            return Ok(());
        }
    };
    let mut out = io::stdout().lock();
    match cli.format {
        Format::Json => writeln!(out, "{}", report.json)?,
        Format::Pretty => writeln!(out, "{}", report.pretty)?,
    }
    Ok(())
}

fn read_text(input: &Input) -> Result<String, CliError> {
    match &input.file {
        Some(path) => fs::read_to_string(path).map_err(|source| CliError::Read {
            path: path.display().to_string(),
            source,
        }),
        None => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|source| CliError::Read {
                    path: "standard input".into(),
                    source,
                })?;
            Ok(text)
        }
    }
}

/// Parses the unvalidated wire form, then validates through the library so
/// structural problems surface as typed errors.
fn read<D, T>(input: &Input) -> Result<T, CliError>
where
    D: DeserializeOwned,
    T: TryFrom<D, Error = CoreError>,
{
    let data: D = serde_json::from_str(&read_text(input)?)?;
    Ok(T::try_from(data)?)
}

fn read_partition(input: &Input) -> Result<Partition, CliError> {
    read::<PartitionData, _>(input)
}

fn read_ideal(input: &Input) -> Result<MonomialIdeal, CliError> {
    read::<IdealData, _>(input)
}

fn read_fset(input: &Input) -> Result<FSet, CliError> {
    read::<FSetData, _>(input)
}

fn partition_report(p: &Partition) -> Report {
    Report::new(json!(p), p.to_string())
}

fn ideal_report(i: &MonomialIdeal) -> Report {
    Report::new(json!(i), i.pretty(true))
}

fn fset_report(s: &FSet) -> Report {
    let elements: Vec<String> = s.elements().iter().rev().map(|m| m.pretty(true)).collect();
    Report::new(
        json!(s),
        format!("side {}: {{{}}}", s.side(), elements.join(", ")),
    )
}

/// `{"key": [...]}` with the monomials greatest first.
fn monomial_list_report(key: &str, mut ms: Vec<Monomial>) -> Report {
    ms.sort_unstable_by(|a, b| b.cmp(a));
    let pretty: Vec<String> = ms.iter().map(|m| m.pretty(true)).collect();
    let exps: Vec<&[u32]> = ms.iter().map(Monomial::exponents).collect();
    Report::new(json!({ key: exps }), format!("{{{}}}", pretty.join(", ")))
}

fn check_partition(input: &Input, predicate: Option<Predicate>) -> Result<Report, CliError> {
    let p = read_partition(input)?;
    let ss = p.is_strongly_stable();
    let ts = p.is_totally_symmetric();
    match predicate {
        Some(Predicate::Ss) if !ss => {
            return Err(diagnose::for_partition(CoreError::NotStronglyStable, &p))
        }
        Some(Predicate::Ts) if !ts => {
            return Err(diagnose::for_partition(CoreError::NotTotallySymmetric, &p))
        }
        _ => {}
    }
    let json = json!({
        "dim": p.dim(),
        "size": p.len(),
        "orbits": p.orbit_count(),
        "bounding_side": p.bounding_side(),
        "strongly_stable": ss,
        "totally_symmetric": ts,
    });
    let pretty = format!(
        "dimension {}, {} cells, {} orbits, bounding side {}\nstrongly stable: {}\ntotally symmetric: {}",
        p.dim(),
        p.len(),
        p.orbit_count(),
        p.bounding_side(),
        yes_no(ss),
        yes_no(ts)
    );
    Ok(Report::new(json, pretty))
}

fn check_ideal(input: &Input, predicate: Option<Predicate>) -> Result<Report, CliError> {
    let ideal = read_ideal(input)?;
    let ss = ideal.is_strongly_stable();
    let sym = ideal.is_symmetric();
    match predicate {
        Some(Predicate::Ss) if !ss => {
            return Err(diagnose::for_ideal(CoreError::NotStronglyStable, &ideal))
        }
        Some(Predicate::Ts) if !sym => {
            return Err(diagnose::for_ideal(CoreError::NotSymmetric, &ideal))
        }
        _ => {}
    }
    let json = json!({
        "dim": ideal.dim(),
        "generators": ideal.gens().len(),
        "artinian": ideal.is_artinian(),
        "side": ideal.side(),
        "pure_power_degrees": ideal.pure_power_degrees(),
        "strongly_stable": ss,
        "symmetric": sym,
    });
    let side = ideal
        .side()
        .map_or_else(|| "none".to_string(), |n| n.to_string());
    let pretty = format!(
        "{}\nartinian: {}, side {side}\nstrongly stable: {}\nsymmetric: {}",
        ideal.pretty(true),
        yes_no(ideal.is_artinian()),
        yes_no(ss),
        yes_no(sym)
    );
    Ok(Report::new(json, pretty))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn count(d: usize, n: u32, limits: &Limits) -> Result<Report, CliError> {
    let table = CountTable::compute(d, n, &limits.options())?;
    let json = json!({
        "d": d,
        "n": n,
        "B": table.ss.iter().map(big_json).collect::<Vec<_>>(),
        "T": table.ts.iter().map(big_json).collect::<Vec<_>>(),
    });
    let mut pretty = String::from("n\tB\tT");
    for (k, (b, t)) in table.ss.iter().zip(&table.ts).enumerate() {
        pretty.push_str(&format!("\n{k}\t{b}\t{t}"));
    }
    Ok(Report::new(json, pretty))
}

fn stream(
    d: usize,
    n: u32,
    predicate: Predicate,
    limits: &Limits,
    format: Format,
) -> Result<(), CliError> {
    let enumerator = Enumerator::with_options(d, n, predicate.class(), limits.options())?;
    let mut out = BufWriter::new(io::stdout().lock());
    let mut failed: Option<io::Error> = None;
    enumerator.for_each(|p| {
        if failed.is_some() {
            return;
        }
        let line = match format {
            Format::Json => json!(p).to_string(),
            Format::Pretty => p.to_string(),
        };
        if let Err(e) = writeln!(out, "{line}") {
            failed = Some(e);
        }
    })?;
    match failed {
        Some(e) => Err(e.into()),
        None => Ok(out.flush()?),
    }
}

fn gf(
    d: Option<usize>,
    n: u32,
    predicate: Predicate,
    product: bool,
    limits: &Limits,
) -> Result<Report, CliError> {
    let poly = if product {
        if let Some(d) = d.filter(|&d| d != 3) {
            return Err(CliError::Usage(format!(
                "the product formula is for dimension 3, got --d {d}"
            )));
        }
        qtspp(n)?
    } else {
        let d =
            d.ok_or_else(|| CliError::Usage("gf needs --d unless --product is given".into()))?;
        let opts = limits.options();
        match predicate {
            Predicate::Ss => cell_gf_ss_with(d, n, &opts)?,
            Predicate::Ts => orbit_gf_ts_with(d, n, &opts)?,
            Predicate::All => cell_gf_all_with(d, n, &opts)?,
        }
    };
    Ok(Report::new(poly_json(&poly), poly.to_string()))
}

fn hawkes(d: usize, n: u32, limits: &Limits) -> Result<Report, CliError> {
    let (left, right) = hawkes_sides(d, n, &limits.options())?;
    let holds = left == right;
    let json = json!({
        "d": d,
        "n": n,
        "left": big_json(&left),
        "right": big_json(&right),
        "holds": holds,
    });
    let pretty = format!(
        "B_{d}({n}) = {left}, B_{}({}) = {right}: {}",
        n - 1,
        d + 1,
        if holds { "equal" } else { "different" }
    );
    Ok(Report::new(json, pretty))
}

fn big_json(n: &BigUint) -> Value {
    match u64::try_from(n) {
        Ok(v) if v <= MAX_SAFE_INTEGER => json!(v),
        _ => json!(n.to_string()),
    }
}

fn poly_json(p: &QPolynomial) -> Value {
    let coeffs = p
        .coefficients()
        .iter()
        .map(|c: &BigInt| match i64::try_from(c) {
            Ok(v) if v.unsigned_abs() <= MAX_SAFE_INTEGER => json!(v),
            _ => json!(c.to_string()),
        });
    Value::Array(coeffs.collect())
}
