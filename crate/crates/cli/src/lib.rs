//! Argument parsing and dispatch for the `qtri` executable.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use qtrinomial_core::bosonic::{self, BranchParams, CharParams};
use qtrinomial_core::fermionic::{self, CharFamily, Conjecture, FPolyArgs, KFamily, KSeriesArgs};
use qtrinomial_core::liealg::{algebra, Algebra};
use qtrinomial_core::mnsys::{solve_mn_filtered, LinearCongruence, MNSystem};
use qtrinomial_core::verify::{self, GridSpec, Level, VerificationReport, VerifyOptions};
use qtrinomial_core::{qbinomial, qtrinomial2, qtrinomial_t, refined_t, Error, QExponent, RefinedArgs};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qtri", version, about = "Exact refined q-trinomial coefficients and identity checks")]
pub struct Cli {
    /// Worker threads for grid evaluation (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Also write the result as JSON to this file.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a single object.
    #[command(subcommand)]
    Compute(Compute),
    /// Solve an (m,n)-system; one solution per line.
    MnSolve {
        algebra: Algebra,
        n: i64,
        vertex: usize,
        /// Linear form in n that must be even, e.g. `n1+n3+n7` or `n1+n3+n7=1`.
        #[arg(long)]
        parity: Vec<String>,
        /// Linear form in n that must vanish mod 3, e.g. `n1+n4-n2-n5`.
        #[arg(long)]
        mod3: Vec<String>,
    },
    /// Algebra data.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Check a registered identity, or `all`.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
enum AlgebraCmd {
    /// Incidence, Cartan and inverse Cartan matrices and marked vertices.
    Show { name: Algebra },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Identity name, or `all`.
    #[arg(required_unless_present = "list")]
    name: Option<String>,
    /// Override grid ranges, e.g. `L=0..6,M=0..6`.
    #[arg(long)]
    grid: Option<GridSpec>,
    /// Series truncation order in q-units.
    #[arg(long)]
    order: Option<i64>,
    #[arg(long, default_value = "full")]
    level: Level,
    /// When false, failures of unproved identities are reported without
    /// failing the run.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    strict_conjectures: bool,
    /// List the registry instead of running it.
    #[arg(long)]
    list: bool,
}

#[derive(Args, Debug)]
struct OrderArg {
    #[arg(long, default_value_t = 12)]
    order: i64,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[arg(long)]
    k: Option<i64>,
    #[arg(long = "L", alias = "l")]
    l: i64,
    #[arg(long = "M", alias = "m")]
    m: i64,
}

#[derive(Subcommand, Debug)]
enum Compute {
    /// Gaussian polynomial [N, A].
    Qbin { n: i64, a: i64 },
    /// Round-bracket q-trinomial (L; A)_2.
    Trin {
        l: i64,
        #[arg(allow_hyphen_values = true)]
        a: i64,
    },
    /// q-trinomial T(L, A).
    #[command(name = "T")]
    T {
        l: i64,
        #[arg(allow_hyphen_values = true)]
        a: i64,
    },
    /// Refined coefficient 𝒯(L, M, A, B).
    #[command(name = "rT")]
    RT {
        l: i64,
        m: i64,
        #[arg(allow_hyphen_values = true)]
        a: i64,
        #[arg(allow_hyphen_values = true)]
        b: i64,
    },
    /// F-polynomial F^g_{M;σ} for g in A5, D6, E7.
    #[command(name = "F")]
    F { algebra: Algebra, m: i64, sigma: u8 },
    /// Fermionic side: conj1|conj2|conj3|flower|flower2|monster.
    Rhs {
        name: String,
        #[command(flatten)]
        s: SeriesArgs,
    },
    /// Bosonic side: conj1|conj2|conj3|flower|flower2|monster.
    Lhs {
        name: String,
        #[command(flatten)]
        s: SeriesArgs,
    },
    /// Fermionic character sum: E8, E6, E7:σ, D6:σ, A5:σ.
    Ferm {
        family: String,
        #[command(flatten)]
        o: OrderArg,
    },
    /// Virasoro character χ^{(P,P')}_{R,S}.
    Chi {
        p: i64,
        pp: i64,
        r: i64,
        s: i64,
        #[command(flatten)]
        o: OrderArg,
    },
    /// Branching function B^{(P,P')}_{R,S;σ}.
    #[command(name = "B")]
    B {
        p: i64,
        pp: i64,
        r: i64,
        s: i64,
        sigma: i64,
        #[command(flatten)]
        o: OrderArg,
    },
    /// String function c_σ.
    C {
        sigma: u8,
        #[command(flatten)]
        o: OrderArg,
    },
}

enum Polynomial {
    Conj(Conjecture),
    K(KFamily),
}

fn polynomial_family(name: &str) -> Result<Polynomial, Error> {
    Ok(match name {
        "conj1" => Polynomial::Conj(Conjecture::One),
        "conj2" => Polynomial::Conj(Conjecture::Two),
        "conj3" => Polynomial::Conj(Conjecture::Three),
        other => Polynomial::K(other.parse()?),
    })
}

fn side(name: &str, s: &SeriesArgs, lhs: bool) -> Result<String, Error> {
    Ok(match polynomial_family(name)? {
        Polynomial::Conj(c) => {
            if s.k.is_some() {
                return Err(Error::InvalidArgument(format!("{name} takes no --k")));
            }
            if s.l < 0 || s.m < 0 {
                return Err(Error::InvalidArgument("L and M must be nonnegative".into()));
            }
            if lhs {
                bosonic::conj_lhs(c, s.l, s.m)
            } else {
                fermionic::conj_rhs(c, s.l, s.m)
            }
        }
        Polynomial::K(family) => {
            let k = s.k.ok_or_else(|| Error::InvalidArgument(format!("{name} needs --k")))?;
            let args = KSeriesArgs { family, k, l: s.l, m: s.m };
            if lhs {
                bosonic::kseries_lhs(args)?
            } else {
                fermionic::kseries_rhs(args)?
            }
        }
    }
    .to_string())
}

fn order(o: &OrderArg) -> Result<QExponent, Error> {
    if o.order < 1 {
        return Err(Error::InvalidArgument(format!("order must be positive, got {}", o.order)));
    }
    Ok(QExponent::from_int(o.order))
}

fn compute(c: &Compute) -> Result<String, Error> {
    Ok(match c {
        Compute::Qbin { n, a } => qbinomial(*n, *a).to_string(),
        Compute::Trin { l, a } => qtrinomial2(*l, *a).to_string(),
        Compute::T { l, a } => qtrinomial_t(*l, *a).to_string(),
        Compute::RT { l, m, a, b } => refined_t(RefinedArgs::new(*l, *m, *a, *b)).to_string(),
        Compute::F { algebra, m, sigma } => fermionic::f_poly(FPolyArgs { g: *algebra, m: *m, sigma: *sigma })?.to_string(),
        Compute::Rhs { name, s } => side(name, s, false)?,
        Compute::Lhs { name, s } => side(name, s, true)?,
        Compute::Ferm { family, o } => {
            let f: CharFamily = family.parse()?;
            fermionic::fermionic_char_sum(f, &order(o)?).to_string()
        }
        Compute::Chi { p, pp, r, s, o } => bosonic::virasoro_char(CharParams::new(*p, *pp, *r, *s)?, &order(o)?).to_string(),
        Compute::B { p, pp, r, s, sigma, o } => {
            bosonic::branching_function(BranchParams::new(*p, *pp, *r, *s, *sigma)?, &order(o)?).to_string()
        }
        Compute::C { sigma, o } => {
            if *sigma > 1 {
                return Err(Error::InvalidArgument(format!("sigma must be 0 or 1, got {sigma}")));
            }
            bosonic::string_function(*sigma, &order(o)?)?.to_string()
        }
    })
}

fn mn_solve(alg: Algebra, n: i64, vertex: usize, parity: &[String], mod3: &[String]) -> Result<Vec<String>, Error> {
    let g = algebra(alg);
    let sys = MNSystem::new(g, n, vertex)?;
    let mut filters = Vec::new();
    for e in parity {
        filters.push(LinearCongruence::parse(e, g.rank, 2)?);
    }
    for e in mod3 {
        filters.push(LinearCongruence::parse(e, g.rank, 3)?);
    }
    Ok(solve_mn_filtered(&sys, &filters).iter().map(|s| s.to_string()).collect())
}

fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::UnknownAlgebra(_)
            | Error::UnknownIdentity(_)
            | Error::InvalidArgument(_)
            | Error::Parse(_)
            | Error::InvalidCharLabel(_)
            | Error::InvalidBranchLabel(_)
            | Error::DimensionMismatch { .. }
            | Error::PreconditionViolation(_)
    )
}

fn write_json(path: &Option<PathBuf>, body: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, format!("{body}\n")),
        None => Ok(()),
    }
}

fn text_json(command: &str, lines: &[String]) -> String {
    serde_json::to_string_pretty(&serde_json::json!({ "command": command, "result": lines })).expect("json")
}

fn print_reports(out: &mut dyn Write, reports: &[VerificationReport]) -> std::io::Result<()> {
    for r in reports {
        writeln!(out, "{}", r.summary_line())?;
        if let Some(note) = verify::descriptor(&r.identity).ok().and_then(|d| d.note) {
            writeln!(out, "  note: {note}")?;
        }
        for f in r.failures.iter().take(10) {
            writeln!(out, "  at {}: first difference at q^{}, lhs {} rhs {}", f.params, f.exponent, f.lhs, f.rhs)?;
        }
        if r.failures.len() > 10 {
            writeln!(out, "  ... {} more", r.failures.len() - 10)?;
        }
    }
    Ok(())
}

fn list_registry(out: &mut dyn Write, level: Level) -> std::io::Result<()> {
    for d in verify::registry() {
        let mut grid = d.grid(level).to_string();
        if let Some(o) = d.order(level) {
            grid = if grid.is_empty() { format!("order={o}") } else { format!("{grid},order={o}") };
        }
        writeln!(out, "{:<24} {:<21} {:<17} {:<40} {}", d.name, d.status.as_str(), d.kind.as_str(), grid, d.summary)?;
    }
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Box<dyn std::error::Error>> {
    match &cli.command {
        Command::Compute(c) => {
            let s = compute(c)?;
            writeln!(out, "{s}")?;
            write_json(&cli.json, &text_json("compute", &[s]))?;
        }
        Command::MnSolve { algebra, n, vertex, parity, mod3 } => {
            let lines = mn_solve(*algebra, *n, *vertex, parity, mod3)?;
            for l in &lines {
                writeln!(out, "{l}")?;
            }
            write_json(&cli.json, &text_json("mn-solve", &lines))?;
        }
        Command::Algebra(AlgebraCmd::Show { name }) => {
            let s = algebra(*name).to_string();
            writeln!(out, "{s}")?;
            write_json(&cli.json, &text_json("algebra show", &[s]))?;
        }
        Command::Verify(v) => {
            if v.list {
                list_registry(out, v.level)?;
                return Ok(EXIT_OK);
            }
            let opts = VerifyOptions { level: v.level, grid: v.grid.clone(), order: v.order, ..Default::default() };
            let name = v.name.as_deref().unwrap_or("all");
            let reports = verify::with_threads(cli.threads, || {
                if name == "all" {
                    verify::verify_all_with(&opts)
                } else {
                    verify::verify_identity_with(name, &opts).map(|r| vec![r])
                }
            })??;
            print_reports(out, &reports)?;
            let failed = reports.iter().filter(|r| !r.passed()).count();
            let pass = verify::aggregate_pass(&reports, v.strict_conjectures);
            if failed == 0 {
                writeln!(out, "all {} identities pass", reports.len())?;
            } else {
                let tail = if pass { " (not counted: conjecture checks are non-strict)" } else { "" };
                writeln!(out, "{failed} of {} identities fail{tail}", reports.len())?;
            }
            write_json(&cli.json, &verify::reports_to_json(&reports))?;
            return Ok(if pass { EXIT_OK } else { EXIT_FAILED });
        }
    }
    Ok(EXIT_OK)
}

/// Parses `argv` (program name first), runs the command and returns the exit
/// code. Usage errors print a synopsis to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e.downcast_ref::<Error>() {
                Some(x) if is_usage(x) => {
                    let _ = writeln!(err, "usage: qtri <compute|mn-solve|algebra|verify> ... (see qtri --help)");
                    EXIT_USAGE
                }
                _ => EXIT_FAILED,
            }
        }
    }
}
