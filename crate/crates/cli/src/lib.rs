//! Command-line front end: `dist`, `verify`, `table` and `theorems`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use altruns::enumerate::{Dist, FirstSign, Parity, PolyFamily, SignStat, SignedDistributionRequest};
use altruns::series::SnakeFamily;
use altruns::verify::{self, Report, Status};
use altruns::{ClassA, Engine, EndClass, Error, Group, Step};
use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTEGRITY: i32 = 3;

pub const THREADS_ENV: &str = "ALTRUNS_THREADS";

#[derive(Debug, Parser)]
#[command(name = "altruns", version, about = "Alternating runs over S_n, B_n and D_n")]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = THREADS_ENV)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one distribution polynomial.
    Dist(DistArgs),
    /// Check closed forms against enumeration.
    Verify(VerifyArgs),
    /// Write a coefficient or count table for n = 1..=n-max.
    Table(TableArgs),
    /// List the ids accepted by `verify`.
    Theorems,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SignArg {
    None,
    #[value(name = "invA")]
    InvA,
    #[value(name = "invB")]
    InvB,
    #[value(name = "invD")]
    InvD,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FirstArg {
    Pos,
    Neg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ParityArg {
    All,
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PolyFormat {
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct DistArgs {
    /// A, B, D or B-D.
    #[arg(long)]
    group: Group,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "none")]
    signed: SignArg,
    /// Bivariate in p (peaks) and q (valleys) instead of t (alternating runs).
    #[arg(long)]
    biv: bool,
    /// Final step a or d; in group A also the classes aa, ad, da, dd.
    #[arg(long)]
    end: Option<String>,
    #[arg(long, value_enum)]
    first: Option<FirstArg>,
    #[arg(long, value_enum, default_value = "all")]
    parity: ParityArg,
    #[arg(long, value_enum, default_value = "json")]
    format: PolyFormat,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// A theorem id (see `theorems`) or `all`.
    #[arg(long)]
    theorem: String,
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    /// Defaults to the cap of each id.
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
}

#[derive(Debug, Args)]
struct TableArgs {
    /// R, Rpm, RB, RBpm, RD, RDpm, RBmD, RBmDpm, any single family name
    /// (R+, RB>, ...), E, Epm, EB, EBpm, ED, EDpm, EBmD, EBmDpm, S, Spm, SD,
    /// SDpm, SBmD, SBmDpm.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n_max: usize,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormat,
}

/// Failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Integrity(_) => EXIT_INTEGRITY,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn engine(threads: Option<usize>) -> Result<Engine, Failure> {
    match threads {
        Some(0) => Err(usage("--threads must be at least 1")),
        Some(w) => Ok(Engine::new(w)),
        None => Ok(Engine::default()),
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let io = |e: std::io::Error| usage(format!("write failed: {e}"));
    match cli.command {
        Command::Theorems => {
            for t in verify::REGISTRY {
                writeln!(out, "{:24} n >= {:<2} {}", t.id, t.n_min, t.title).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Dist(args) => {
            let text = dist(&engine(cli.threads)?, &args)?;
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Verify(args) => {
            let (text, ok) = run_verify(&engine(cli.threads)?, &args)?;
            out.write_all(text.as_bytes()).map_err(io)?;
            Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Table(args) => {
            let bytes = table(&engine(cli.threads)?, &args.family, args.n_max, args.format)?;
            std::fs::write(&args.out, bytes)
                .map_err(|e| usage(format!("cannot write {}: {e}", args.out.display())))?;
            Ok(EXIT_OK)
        }
    }
}

// ---------------------------------------------------------------------------
// dist

fn parse_end(group: Group, s: &str) -> Result<EndClass, Failure> {
    match (group, s) {
        (Group::A, _) => s
            .parse::<ClassA>()
            .map(EndClass::A)
            .map_err(|_| usage(format!("group A takes --end aa, ad, da or dd, got `{s}`"))),
        (_, "a") => Ok(EndClass::B(Step::Ascent)),
        (_, "d") => Ok(EndClass::B(Step::Descent)),
        _ => Err(usage(format!("--end must be a or d, got `{s}`"))),
    }
}

fn dist(engine: &Engine, args: &DistArgs) -> Result<String, Failure> {
    let mut req = SignedDistributionRequest::new(args.group, args.n)
        .signed(match args.signed {
            SignArg::None => SignStat::None,
            SignArg::InvA => SignStat::InvA,
            SignArg::InvB => SignStat::InvB,
            SignArg::InvD => SignStat::InvD,
        })
        .parity(match args.parity {
            ParityArg::All => Parity::All,
            ParityArg::Plus => Parity::Plus,
            ParityArg::Minus => Parity::Minus,
        });
    if let Some(end) = &args.end {
        req = req.end(parse_end(args.group, end)?);
    }
    if let Some(first) = args.first {
        req = req.first(match first {
            FirstArg::Pos => FirstSign::Positive,
            FirstArg::Neg => FirstSign::Negative,
        });
    }
    req.validate()?;
    let var = if args.biv { altruns::enumerate::Variable::PQ } else { altruns::enumerate::Variable::T };
    let poly = engine.dist_runs(&req, var)?;
    Ok(render_poly(&poly, args.format))
}

fn render_poly(poly: &Dist, format: PolyFormat) -> String {
    match (poly, format) {
        (Dist::Uni(f), PolyFormat::Json) => format!("{}\n", f.to_json()),
        (Dist::Bi(f), PolyFormat::Json) => format!("{}\n", f.to_json()),
        (Dist::Uni(f), PolyFormat::Latex) => format!("{}\n", f.to_latex()),
        (Dist::Bi(f), PolyFormat::Latex) => format!("{}\n", f.to_latex()),
        (poly, PolyFormat::Csv) => {
            let (json, header) = match poly {
                Dist::Uni(f) => (f.to_json_value(), "t,coef\n"),
                Dist::Bi(f) => (f.to_json_value(), "p,q,coef\n"),
            };
            let mut s = String::from(header);
            for term in json.terms {
                for e in term.exp {
                    let _ = write!(s, "{e},");
                }
                let _ = writeln!(s, "{}", term.coef);
            }
            s
        }
    }
}

// ---------------------------------------------------------------------------
// verify

fn run_verify(engine: &Engine, args: &VerifyArgs) -> Result<(String, bool), Failure> {
    let reports = if args.theorem == "all" {
        let hi = args.n_max.unwrap_or(usize::MAX);
        verify::verify_all(engine, args.n_min..=hi)?
    } else {
        let thm = verify::theorem(&args.theorem)?;
        let hi = args.n_max.unwrap_or_else(|| thm.max_n(engine));
        vec![verify::verify(engine, &args.theorem, args.n_min..=hi)?]
    };
    let ok = reports.iter().all(Report::passed);
    let text = match args.format {
        ReportFormat::Json => {
            let value = serde_json::json!({ "passed": ok, "reports": reports });
            format!("{}\n", serde_json::to_string_pretty(&value).map_err(|e| usage(e.to_string()))?)
        }
        ReportFormat::Text => render_reports(&reports, ok),
    };
    Ok((text, ok))
}

fn render_reports(reports: &[Report], ok: bool) -> String {
    let mut s = String::new();
    let mut totals = [0usize; 4];
    for r in reports {
        for e in &r.entries {
            let slot = match e.status {
                Status::Pass => 0,
                Status::Fail => 1,
                Status::Skipped => 2,
                Status::MismatchDocumented => 3,
            };
            totals[slot] += 1;
            let _ = write!(s, "{} n={} {}", r.id, e.n, e.status);
            let mults: Vec<String> = e
                .checks
                .iter()
                .filter_map(|c| {
                    let m = c.multiplicity?;
                    let tight = if c.tight == Some(true) { ", tight" } else { "" };
                    Some(format!("{}: {m} (claimed {}{tight})", c.label, c.claimed.unwrap_or_default()))
                })
                .collect();
            if !mults.is_empty() {
                let _ = write!(s, " [{}]", mults.join("; "));
            }
            if let Some(note) = &e.note {
                let _ = write!(s, " ({note})");
            }
            s.push('\n');
            if e.status == Status::Fail || e.status == Status::MismatchDocumented {
                for c in e.checks.iter().filter(|c| e.status != Status::Fail || !c.ok) {
                    let _ = writeln!(s, "    {}: expected {}, got {}", c.label, c.expected, c.actual);
                }
            }
        }
    }
    let _ = writeln!(
        s,
        "summary: {} pass, {} fail, {} skipped, {} mismatch-documented: {}",
        totals[0],
        totals[1],
        totals[2],
        totals[3],
        if ok { "ok" } else { "FAILED" }
    );
    s
}

// ---------------------------------------------------------------------------
// table

enum Column {
    Poly(PolyFamily),
    Alt(Group, Parity),
    Snake(SnakeFamily),
}

impl Column {
    fn group(&self) -> Group {
        match self {
            Column::Poly(f) => f.group(),
            Column::Alt(g, _) => *g,
            Column::Snake(SnakeFamily::B | SnakeFamily::BPlus | SnakeFamily::BMinus) => Group::B,
            Column::Snake(_) => Group::D,
        }
    }
}

fn table_columns(family: &str) -> Result<(Vec<&'static str>, Vec<Column>), Failure> {
    use PolyFamily as P;
    use SnakeFamily as S;
    let poly = |fs: &[PolyFamily]| {
        (fs.iter().map(|f| f.name()).collect::<Vec<_>>(), fs.iter().map(|&f| Column::Poly(f)).collect())
    };
    let alt = |g: Group, pm: bool| {
        if pm {
            (vec!["plus", "minus"], vec![Column::Alt(g, Parity::Plus), Column::Alt(g, Parity::Minus)])
        } else {
            (vec!["count"], vec![Column::Alt(g, Parity::All)])
        }
    };
    let snakes = |fs: &[SnakeFamily]| {
        let names = if fs.len() == 2 { vec!["plus", "minus"] } else { vec!["count"] };
        (names, fs.iter().map(|&f| Column::Snake(f)).collect())
    };
    Ok(match family {
        "Rpm" => poly(&[P::RPlus, P::RMinus]),
        "RBpm" => poly(&[P::RBPlus, P::RBMinus]),
        "RDpm" => poly(&[P::RDPlus, P::RDMinus]),
        "RBmDpm" => poly(&[P::RBmDPlus, P::RBmDMinus]),
        "E" => alt(Group::A, false),
        "Epm" => alt(Group::A, true),
        "EB" => alt(Group::B, false),
        "EBpm" => alt(Group::B, true),
        "ED" => alt(Group::D, false),
        "EDpm" => alt(Group::D, true),
        "EBmD" => alt(Group::BminusD, false),
        "EBmDpm" => alt(Group::BminusD, true),
        "S" | "SB" => snakes(&[S::B]),
        "Spm" | "SBpm" => snakes(&[S::BPlus, S::BMinus]),
        "SD" => snakes(&[S::D]),
        "SDpm" => snakes(&[S::DPlus, S::DMinus]),
        "SBmD" => snakes(&[S::BminusD]),
        "SBmDpm" => snakes(&[S::BminusDPlus, S::BminusDMinus]),
        other => match other.parse::<PolyFamily>() {
            Ok(f) => poly(&[f]),
            Err(_) => return Err(usage(format!("unknown table family `{other}`"))),
        },
    })
}

/// Build the table as bytes. Rows are `n,k,<coefficients>` for polynomial
/// families and `n,<counts>` for counting families.
pub fn table_bytes(engine: &Engine, family: &str, n_max: usize, csv: bool) -> Result<Vec<u8>, Failure> {
    table(engine, family, n_max, if csv { TableFormat::Csv } else { TableFormat::Json })
}

fn table(engine: &Engine, family: &str, n_max: usize, format: TableFormat) -> Result<Vec<u8>, Failure> {
    let (names, columns) = table_columns(family)?;
    if let Some(c) = columns.first() {
        engine.check_cap(c.group(), n_max.max(1))?;
    }
    let is_poly = matches!(columns[0], Column::Poly(_));
    let mut header: Vec<String> = vec!["n".into()];
    if is_poly {
        header.push("k".into());
    }
    header.extend(names.iter().map(|s| s.to_string()));

    let mut rows: Vec<Vec<String>> = Vec::new();
    for n in 1..=n_max {
        if is_poly {
            let polys = columns
                .iter()
                .map(|c| match c {
                    Column::Poly(f) => engine.family(*f, n),
                    _ => unreachable!("mixed table"),
                })
                .collect::<Result<Vec<_>, _>>()?;
            for k in 1..=n {
                let mut row = vec![n.to_string(), k.to_string()];
                row.extend(polys.iter().map(|f| f.coeff(k).to_string()));
                rows.push(row);
            }
        } else {
            let mut row = vec![n.to_string()];
            for c in &columns {
                let v = match c {
                    Column::Alt(g, p) => engine.count_alternating(*g, n, *p)?,
                    Column::Snake(f) => engine.count_snakes(*f, n)?,
                    Column::Poly(_) => unreachable!("mixed table"),
                };
                row.push(v.to_string());
            }
            rows.push(row);
        }
    }

    Ok(match format {
        TableFormat::Csv => {
            let mut s = header.join(",");
            s.push('\n');
            for r in rows {
                s.push_str(&r.join(","));
                s.push('\n');
            }
            s.into_bytes()
        }
        TableFormat::Json => {
            let rows: Vec<serde_json::Value> = rows
                .into_iter()
                .map(|r| {
                    let split = if is_poly { 2 } else { 1 };
                    let mut cells: Vec<serde_json::Value> =
                        r[..split].iter().map(|x| serde_json::json!(x.parse::<u64>().unwrap_or(0))).collect();
                    cells.extend(r[split..].iter().map(|x| serde_json::json!(x)));
                    serde_json::Value::Array(cells)
                })
                .collect();
            let value = serde_json::json!({ "family": family, "columns": header, "rows": rows });
            let mut s = serde_json::to_string_pretty(&value).map_err(|e| usage(e.to_string()))?;
            s.push('\n');
            s.into_bytes()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrity_errors_exit_3() {
        assert_eq!(Failure::from(Error::Integrity("x".into())).code, EXIT_INTEGRITY);
        assert_eq!(Failure::from(Error::Domain("x".into())).code, EXIT_USAGE);
    }

    #[test]
    fn run_in_process() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(["altruns", "dist", "--group", "A", "--n", "3", "--threads", "1"], &mut out, &mut err);
        assert_eq!(code, 0);
        assert_eq!(String::from_utf8(out).unwrap(), "{\"vars\":[\"t\"],\"terms\":[{\"exp\":[1],\"coef\":\"2\"},{\"exp\":[2],\"coef\":\"4\"}]}\n");
        let mut out = Vec::new();
        assert_eq!(run(["altruns", "bogus"], &mut out, &mut err), EXIT_USAGE);
    }
}
