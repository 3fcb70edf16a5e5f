use std::fs;
use std::ops::Range;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hopfeq::catalog::{self, Params, Report, ReportLine, Variant};
use hopfeq::formats::{from_json, BialgebraFile, ElementFile, MatrixFile, PresentationFile, SigmaFile};
use hopfeq::frt::{build_br, chi_relations};
use hopfeq::hopfcore::{Bialgebra, SubcoalgebraView};
use hopfeq::pairing::{integral_round_trip, right_integral_space, search_hopf_functions, search_hopf_functions_with};
use hopfeq::tensorlab::{candidate_count, search_endos_range, SEARCH_LIMIT};
use hopfeq::{check_equation, Equation, Error, FieldSpec, Status, Verdict};

#[derive(Parser)]
#[command(name = "hopfeq", version, about = "Exact checks for the Hopf equation R23 R13 R12 = R12 R23")]
struct Cli {
    /// Truncation degree for presented bialgebras (at least 2).
    #[arg(long, global = true, default_value_t = 4)]
    degree: usize,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check an operator identity on a matrix file.
    Check {
        #[arg(value_enum)]
        equation: EquationArg,
        #[arg(long)]
        matrix: PathBuf,
        /// Second operator, for `mixed`.
        #[arg(long)]
        second: Option<PathBuf>,
    },
    /// Build B(R) from a matrix file.
    BuildBr {
        #[arg(long)]
        matrix: PathBuf,
        /// Print every χ relation.
        #[arg(long)]
        emit_relations: bool,
    },
    /// Check a σ table against a bialgebra.
    VerifySigma {
        #[arg(long)]
        bialgebra: PathBuf,
        #[arg(long)]
        sigma: PathBuf,
    },
    /// Run every check of a built-in example.
    VerifyExample {
        name: String,
        #[arg(long)]
        q: Option<String>,
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        variant: Option<String>,
        /// Group order for group_algebra.
        #[arg(long)]
        order: Option<usize>,
        /// Number of points for monoid.
        #[arg(long)]
        points: Option<usize>,
        #[arg(long)]
        alt_coaction: bool,
    },
    /// Exhaustive searches over a prime field.
    Search {
        #[command(subcommand)]
        target: SearchTarget,
    },
    /// Right integrals of a table bialgebra.
    Integrals {
        #[arg(long)]
        bialgebra: PathBuf,
    },
    /// Check a Hopf element in A⊗H.
    HopfElement {
        #[arg(long)]
        bialgebra: PathBuf,
        #[arg(long)]
        element: PathBuf,
        /// Also check (QT1)-(QT5).
        #[arg(long)]
        quasitriangular: bool,
    },
}

#[derive(Subcommand)]
enum SearchTarget {
    /// All R with dim M = n solving an equation.
    Solutions {
        #[arg(long)]
        field: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "hopf")]
        equation: EquationArg,
        /// Candidate index range `i..j`.
        #[arg(long)]
        range: Option<String>,
    },
    /// All σ tables on a subcoalgebra passing well-definedness and (H1)-(H3).
    Sigmas {
        #[arg(long)]
        bialgebra: PathBuf,
        /// Comma-separated basis names spanning C.
        #[arg(long)]
        subcoalgebra: String,
        #[arg(long)]
        range: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EquationArg {
    Hopf,
    Qybe,
    InverseEq,
    Commute13,
    Mixed,
}

impl From<EquationArg> for Equation {
    fn from(e: EquationArg) -> Self {
        match e {
            EquationArg::Hopf => Equation::Hopf,
            EquationArg::Qybe => Equation::Qybe,
            EquationArg::InverseEq => Equation::InverseEq,
            EquationArg::Commute13 => Equation::Commute13,
            EquationArg::Mixed => Equation::Mixed,
        }
    }
}

/// Witnesses printed per check in text mode.
const MAX_WITNESSES: usize = 8;

type CliResult<T> = Result<T, Error>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    if cli.degree < 2 {
        eprintln!("error: --degree must be at least 2");
        return ExitCode::from(3);
    }
    match run(&cli) {
        Ok(status) => ExitCode::from(exit_code(status)),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn exit_code(s: Status) -> u8 {
    match s {
        Status::Pass => 0,
        Status::Fail => 1,
        Status::Inconclusive => 2,
    }
}

fn read<T: for<'de> serde::Deserialize<'de>>(path: &Path) -> CliResult<T> {
    let text = fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    from_json(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn parse_range(text: &str) -> CliResult<Range<u64>> {
    let (a, b) = text.split_once("..").ok_or_else(|| Error::Parse(format!("range `{text}` is not i..j")))?;
    let num = |s: &str| s.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad range bound `{s}`")));
    Ok(num(a)?..num(b)?)
}

fn emit_json<T: Serialize>(value: &T) -> CliResult<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn print_report(report: &Report, json: bool) -> CliResult<Status> {
    if json {
        emit_json(report)?;
    } else {
        println!("{}", report.name);
        for l in &report.lines {
            print_line(l);
        }
    }
    Ok(report.status())
}

fn print_line(l: &ReportLine) {
    let actual = l.verdict.status();
    let mark = if l.matches() { "ok " } else { "!! " };
    if l.expected == Status::Pass {
        println!("{mark}{:<12} {}", actual.to_string(), l.check);
    } else {
        println!("{mark}{:<12} {} (expected {})", actual.to_string(), l.check, l.expected);
    }
    let ws = l.verdict.witnesses();
    for w in ws.iter().take(MAX_WITNESSES) {
        println!("      {w}");
    }
    if ws.len() > MAX_WITNESSES {
        println!("      ... {} more (use --json for all)", ws.len() - MAX_WITNESSES);
    }
}

fn single(name: &str, check: &str, verdict: Verdict) -> Report {
    Report { name: name.to_string(), lines: vec![ReportLine { check: check.to_string(), expected: Status::Pass, verdict }] }
}

fn load_bialgebra(path: &Path, degree: usize) -> CliResult<Arc<Bialgebra>> {
    Ok(Arc::new(read::<BialgebraFile>(path)?.build(degree)?))
}

fn run(cli: &Cli) -> CliResult<Status> {
    let degree = cli.degree;
    match &cli.command {
        Command::Check { equation, matrix, second } => {
            let kind = Equation::from(*equation);
            let r = read::<MatrixFile>(matrix)?.to_endo()?;
            let s = second.as_ref().map(|p| read::<MatrixFile>(p)?.to_endo()).transpose()?;
            let v = check_equation(kind, &r, s.as_ref())?;
            print_report(&single(&format!("check {kind}"), kind.statement(), v), cli.json)
        }
        Command::BuildBr { matrix, emit_relations } => {
            let r = read::<MatrixFile>(matrix)?.to_endo()?;
            let br = build_br(&r, degree)?;
            if cli.json {
                emit_json(&PresentationFile::from_presented(&br))?;
                return Ok(Status::Pass);
            }
            let chi = chi_relations(&r);
            println!(
                "B(R): {} generators, {} relations, truncation degree {degree}",
                br.alphabet().len(),
                chi.polys().len()
            );
            if *emit_relations {
                for (label, p) in chi.labelled() {
                    println!("{label}: {p}");
                }
            }
            let b = Bialgebra::from(br);
            let report = Report {
                name: "B(R) axioms".into(),
                lines: b
                    .axiom_report()
                    .into_iter()
                    .map(|(check, verdict)| ReportLine { check, expected: Status::Pass, verdict })
                    .collect(),
            };
            for l in &report.lines {
                print_line(l);
            }
            Ok(report.status())
        }
        Command::VerifySigma { bialgebra, sigma } => {
            let host = load_bialgebra(bialgebra, degree)?;
            let s = read::<SigmaFile>(sigma)?.build(host)?;
            print_report(&catalog::sigma_report("verify-sigma", &s)?, cli.json)
        }
        Command::VerifyExample { name, q, a, field, variant, order, points, alt_coaction } => {
            let params = Params {
                field: field.as_deref().map(|f| f.parse::<FieldSpec>().and_then(hopfeq::Field::new)).transpose()?,
                q: q.clone(),
                a: a.clone(),
                order: *order,
                points: *points,
                variant: variant.as_deref().map(str::parse::<Variant>).transpose()?,
                alt_coaction: *alt_coaction,
                bound: Some(degree),
            };
            print_report(&catalog::verify_example(name, &params)?, cli.json)
        }
        Command::Search { target } => search(cli, target),
        Command::Integrals { bialgebra } => {
            let b = load_bialgebra(bialgebra, degree)?;
            let h = b.as_table().ok_or_else(|| Error::InvalidInput("integrals need a table bialgebra".into()))?;
            let space = right_integral_space(h);
            let mut all_ok = true;
            let mut rows = Vec::new();
            for t in &space {
                let rt = integral_round_trip(h, t)?;
                all_ok &= rt.matches;
                rows.push(IntegralRow { integral: t.render(h), round_trip: rt.matches });
            }
            if cli.json {
                emit_json(&IntegralsOut { dimension: space.len(), integrals: rows })?;
            } else {
                println!("right integrals: dimension {}", space.len());
                for r in &rows {
                    println!("  T = {}  round trip {}", r.integral, if r.round_trip { "ok" } else { "FAILED" });
                }
            }
            Ok(if all_ok { Status::Pass } else { Status::Fail })
        }
        Command::HopfElement { bialgebra, element, quasitriangular } => {
            let host = load_bialgebra(bialgebra, degree)?;
            let r = read::<ElementFile>(element)?.build(host)?;
            print_report(&catalog::element_report("hopf-element", &r, *quasitriangular)?, cli.json)
        }
    }
}

#[derive(Serialize)]
struct IntegralRow {
    integral: String,
    round_trip: bool,
}

#[derive(Serialize)]
struct IntegralsOut {
    dimension: usize,
    integrals: Vec<IntegralRow>,
}

fn search(cli: &Cli, target: &SearchTarget) -> CliResult<Status> {
    match target {
        SearchTarget::Solutions { field, n, equation, range } => {
            let f = hopfeq::Field::new(field.parse()?)?;
            let kind = Equation::from(*equation);
            let total = candidate_count(f, *n)?;
            let range = match range {
                Some(r) => parse_range(r)?,
                None if total > SEARCH_LIMIT => {
                    return Err(Error::SearchTooLarge { candidates: total as f64 });
                }
                None => 0..total,
            };
            let hits = search_endos_range(f, *n, kind, range.clone())?;
            if cli.json {
                emit_json(&hits.iter().map(MatrixFile::from_endo).collect::<Vec<_>>())?;
            } else {
                println!("{} solutions of {kind} over {f} with n = {n} (candidates {}..{})", hits.len(), range.start, range.end);
                for (k, r) in hits.iter().enumerate() {
                    print!("#{}\n{r}", k + 1);
                }
            }
            Ok(Status::Pass)
        }
        SearchTarget::Sigmas { bialgebra, subcoalgebra, range } => {
            let host = load_bialgebra(bialgebra, cli.degree)?;
            let names: Vec<&str> = subcoalgebra.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            let c = SubcoalgebraView::from_names(host, &names)?;
            let hits = match range {
                Some(r) => search_hopf_functions_with(&c, parse_range(r)?)?,
                None => search_hopf_functions(&c)?,
            };
            if cli.json {
                emit_json(&hits.iter().map(SigmaFile::from_pairing).collect::<Vec<_>>())?;
            } else {
                println!("{} σ tables on C = k{{{}}}", hits.len(), names.join(","));
                for (k, s) in hits.iter().enumerate() {
                    println!("#{}", k + 1);
                    for (ci, row) in s.table().iter().enumerate() {
                        let cells: Vec<String> =
                            row.iter().enumerate().map(|(col, v)| format!("{}={v}", s.column_name(col))).collect();
                        println!("  {}: {}", c.names()[ci], cells.join(" "));
                    }
                }
            }
            Ok(Status::Pass)
        }
    }
}
