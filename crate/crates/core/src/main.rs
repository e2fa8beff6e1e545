use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qumbral::families::{bernoulli_polys, bernoulli_r, euler_polys, euler_r, EulerOrderPath};
use qumbral::identities::{catalog_ids, verify_with, Comparison, Ranges};
use qumbral::output::{render_reports, Evaluation, Expansion, Format, Table};
use qumbral::qscalar::{format_bigrat, parse_bigrat, BigRat, QRat};
use qumbral::umbral::{expand_in_euler, expand_in_euler_r, reconstruct};
use qumbral::xpoly::parse;
use qumbral::Error;

#[derive(Parser)]
#[command(
    name = "qumbral",
    version,
    about = "Exact q-Euler and q-Bernoulli tables, expansions and identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Numbers and polynomials of a family.
    Table {
        family: Family,
        #[arg(long, default_value_t = 6)]
        n: usize,
        /// Order r of the family.
        #[arg(long, visible_alias = "r", default_value_t = 1)]
        order: usize,
        /// Specialize q to a rational value.
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        at_q: Option<BigRat>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Coefficients of a polynomial in the Euler basis of order 1 or r.
    Expand {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_enum, default_value_t = Basis::Euler)]
        basis: Basis,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run identity checks.
    Verify {
        /// Catalog id, repeatable; "all" runs everything.
        #[arg(long = "id", default_value = "all")]
        ids: Vec<String>,
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Bound for order-r identities (defaults to --n).
        #[arg(long)]
        n_order: Option<usize>,
        /// Bound for the two-variable grid check (defaults to --n).
        #[arg(long)]
        n_bivariate: Option<usize>,
        /// Compare both sides after substituting q.
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        at_q: Option<BigRat>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        jobs: u32,
        /// Include elapsed_ms in the output.
        #[arg(long)]
        timings: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Evaluate a polynomial at rational x and, optionally, rational q.
    Eval {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        x: BigRat,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        q: Option<BigRat>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Euler,
    Bernoulli,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    Euler,
    EulerR,
}

fn rational(s: &str) -> Result<BigRat, String> {
    parse_bigrat(s).ok_or_else(|| format!("expected an integer or p/q, got {s:?}"))
}

enum Failure {
    /// Some identity failed.
    Identity,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Identity) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Table {
            family,
            n,
            order,
            at_q,
            format,
        } => {
            let fam = match (family, order) {
                (Family::Euler, 1) => euler_polys(n),
                (Family::Bernoulli, 1) => bernoulli_polys(n),
                (Family::Euler, r) => euler_r(n, r, EulerOrderPath::Series),
                (Family::Bernoulli, r) => bernoulli_r(n, r),
            };
            let table = Table::build(&fam, at_q.as_ref())
                .map_err(|(n, e)| Failure::Usage(format!("{e} (n = {n})")))?;
            print!("{}", table.render(format));
        }
        Command::Expand {
            poly,
            basis,
            r,
            format,
        } => {
            let p = parse(&poly).map_err(Error::from)?;
            let deg = p.degree().unwrap_or(0);
            let (coeffs, members, name, r) = match basis {
                Basis::Euler => (expand_in_euler(&p), euler_polys(deg), "euler", 1),
                Basis::EulerR => (
                    expand_in_euler_r(&p, r),
                    euler_r(deg, r, EulerOrderPath::Series),
                    "euler-r",
                    r,
                ),
            };
            let ok = reconstruct(&coeffs, members.members()) == p;
            print!(
                "{}",
                Expansion::new(&poly, name, r, coeffs, ok).render(format)
            );
        }
        Command::Verify {
            ids,
            n,
            r,
            n_order,
            n_bivariate,
            at_q,
            jobs,
            timings,
            format,
        } => {
            let ids: Vec<&str> = if ids.iter().any(|id| id == "all") {
                catalog_ids()
            } else {
                ids.iter().map(String::as_str).collect()
            };
            let ranges = Ranges {
                n_single: n,
                n_order: n_order.unwrap_or(n),
                r_max: r,
                n_bivariate: n_bivariate.unwrap_or(n),
            };
            // reject unknown ids before building the context
            if let Some(bad) = ids.iter().find(|id| !catalog_ids().contains(id)) {
                return Err(Error::UnknownIdentity(bad.to_string()).into());
            }
            let cmp = at_q.map_or(Comparison::Exact, Comparison::AtQ);
            let reports = verify_with(&ranges.context(), &ids, &ranges, &cmp, jobs as usize)?;
            print!("{}", render_reports(&reports, format, timings));
            if !reports.iter().all(|r| r.passed()) {
                return Err(Failure::Identity);
            }
        }
        Command::Eval { poly, x, q, format } => {
            let p = parse(&poly).map_err(Error::from)?;
            let mut value = p.eval(&QRat::from_bigrat(x.clone()));
            if let Some(q0) = &q {
                value = value
                    .eval_to_qrat(q0)
                    .map_err(|_| Failure::Usage(format!("pole at q = {}", format_bigrat(q0))))?;
            }
            print!(
                "{}",
                Evaluation::new(&poly, &x, q.as_ref(), value).render(format)
            );
        }
    }
    Ok(())
}
