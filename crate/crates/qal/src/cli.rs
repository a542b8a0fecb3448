//! Argument parsing and command dispatch.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use qal_core::combinatorics::{lah, stirling1, stirling2};
use qal_core::family::{psi_image_check, AlgebraFamily, FamilyTag};
use qal_core::forests::{
    chain_gang_certificate, enumerate_chain_gangs, enumerate_down, enumerate_up, enumerate_updown, lah_stirling_check,
    updown_report,
};
use qal_core::lex::lex_normal_form;
use qal_core::prune::{confluence_check, coproduct_table_check, multiplicativity_check, prune_normal_form};
use qal_core::pvh::{degree2_report, pvh_report, tilde_delta_report};
use qal_core::quad::koszul_euler_check;
use qal_core::wedge::parse_edges;
use qal_core::{Error, Monomial, Value, VerificationReport, WedgeElement, WedgeMonomial, DEFAULT_BUDGET};

use crate::dot::forests_to_dot;
use crate::io::PresentationSource;
use crate::output::{render_report, Format, Table};

#[derive(Debug, Parser)]
#[command(name = "qal", version, about = "Exact computations for quadratic algebras and the pure virtual braid family")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Largest tensor space (or enumeration) a job may build.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lah numbers L(n, k) for k = 0..=n.
    Lah {
        #[arg(long)]
        n: usize,
    },
    /// Stirling numbers of both kinds for k = 0..=n.
    Stirling {
        #[arg(long)]
        n: usize,
    },
    /// List a graph-indexed basis of the dual algebra in one degree.
    Basis {
        kind: BasisKind,
        #[arg(long)]
        n: usize,
        /// Number of edges.
        #[arg(long)]
        degree: usize,
        /// Also write the forests as a Graphviz file.
        #[arg(long, value_name = "FILE")]
        emit_dot: Option<PathBuf>,
    },
    /// Rewrite a wedge monomial such as "1>2,2>3,3>1" into a basis.
    Reduce {
        mode: ReduceMode,
        /// Comma-separated edges i>j, read left to right.
        input: String,
        /// Number of strands; defaults to the largest vertex in the input.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_name = "FILE")]
        emit_dot: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify {
        check: VerifyKind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_parser = parse_family)]
        family: Option<FamilyTag>,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        trials: Option<usize>,
        /// JSON presentation file, used by `euler` and `degree2`.
        #[arg(long, value_name = "FILE")]
        presentation: Option<PathBuf>,
    },
    /// Graded dimensions of an algebra and its quadratic dual.
    Hilbert {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, value_parser = parse_family, default_value = "pvb")]
        family: FamilyTag,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, value_name = "FILE")]
        presentation: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisKind {
    ChainGangs,
    Updown,
    Down,
    Up,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReduceMode {
    Prune,
    Lex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    Pvh,
    Coproduct,
    Confluence,
    Euler,
    Psi,
    Degree2,
    Lahstirling,
    Defect,
    ChainGangs,
    Updown,
}

fn parse_family(s: &str) -> Result<FamilyTag, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// What a command produced.
pub enum Outcome {
    Table(Table),
    Report(VerificationReport),
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match self {
            Outcome::Table(t) => t.render(format),
            Outcome::Report(r) => render_report(r, format),
        }
    }

    /// 0 when every executed check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Outcome::Table(_) => 0,
            Outcome::Report(r) => i32::from(!r.pass()),
        }
    }
}

fn guard(count: &BigUint, budget: usize) -> Result<(), Error> {
    if *count > BigUint::from(budget) {
        let dimension = u128::try_from(count).unwrap_or(u128::MAX);
        return Err(Error::BudgetExceeded { dimension, budget });
    }
    Ok(())
}

fn strand_count(n: usize) -> Result<usize, Error> {
    if n == 0 || n > u8::MAX as usize {
        return Err(Error::InvalidInput(format!("n = {n} is out of range 1..=255")));
    }
    Ok(n)
}

fn edges_text(m: &Monomial) -> String {
    m.factors().iter().map(|g| format!("{}>{}", g.i, g.j)).collect::<Vec<_>>().join(",")
}

fn monomial_text(m: &Monomial) -> String {
    if m.degree() == 0 {
        "1".into()
    } else {
        m.factors().iter().map(|g| g.to_string()).collect::<Vec<_>>().join("∧")
    }
}

fn write_dot(path: &PathBuf, name: &str, n: usize, forests: &[(String, Monomial)]) -> Result<(), Error> {
    std::fs::write(path, forests_to_dot(name, n, forests))
        .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))
}

fn read_presentation(path: &PathBuf) -> Result<PresentationSource, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    PresentationSource::parse(&text)
}

fn hilbert(p: &qal_core::QuadraticPresentation, max_degree: usize, budget: usize) -> Result<Table, Error> {
    let dual = p.annihilator();
    let mut t = Table::new("hilbert", &["m", "dim A", "dim A!"])
        .param("n", p.n())
        .param("generators", p.dim_v())
        .param("relations", p.relations().len());
    for m in 0..=max_degree {
        t.push(vec![Value::from(m), Value::from(p.graded_dim(m, budget)?), Value::from(dual.graded_dim(m, budget)?)]);
    }
    Ok(t)
}

/// Executes a parsed command line.
pub fn execute(cli: &Cli) -> Result<Outcome, Error> {
    let budget = cli.budget;
    match &cli.command {
        Command::Lah { n } => {
            let mut t = Table::new("lah", &["k", "L(n,k)"]).param("n", *n);
            for k in 0..=*n {
                t.push(vec![Value::from(k), Value::from(lah(*n, k))]);
            }
            Ok(Outcome::Table(t))
        }
        Command::Stirling { n } => {
            let mut t = Table::new("stirling", &["k", "s(n,k)", "S(n,k)"]).param("n", *n);
            for k in 0..=*n {
                t.push(vec![Value::from(k), Value::from(stirling1(*n, k)), Value::from(stirling2(*n, k))]);
            }
            Ok(Outcome::Table(t))
        }
        Command::Basis { kind, n, degree, emit_dot } => {
            let n = strand_count(*n)?;
            let (name, expected) = match kind {
                BasisKind::ChainGangs | BasisKind::Updown => ("chain-gangs", lah(n, n.saturating_sub(*degree))),
                BasisKind::Down => ("down", stirling2(n, n.saturating_sub(*degree))),
                BasisKind::Up => ("up", stirling1(n, n.saturating_sub(*degree))),
            };
            guard(&expected, budget)?;
            let forests = match kind {
                BasisKind::ChainGangs => enumerate_chain_gangs(n, *degree),
                BasisKind::Updown => enumerate_updown(n, *degree),
                BasisKind::Down => enumerate_down(n, *degree),
                BasisKind::Up => enumerate_up(n, *degree),
            };
            let name = if *kind == BasisKind::Updown { "updown" } else { name };
            let mut t = Table::new("basis", &["index", "edges", "monomial"])
                .param("basis", name)
                .param("n", n)
                .param("degree", *degree)
                .param("count", forests.len());
            for (i, m) in forests.iter().enumerate() {
                t.push(vec![Value::from(i), Value::from(edges_text(m)), Value::from(monomial_text(m))]);
            }
            if let Some(path) = emit_dot {
                let labelled: Vec<(String, Monomial)> = forests.iter().map(|m| (edges_text(m), m.clone())).collect();
                write_dot(path, name, n, &labelled)?;
            }
            Ok(Outcome::Table(t))
        }
        Command::Reduce { mode, input, n, emit_dot } => {
            let edges = parse_edges(input)?;
            let largest = edges.iter().map(|g| g.i.max(g.j) as usize).max().unwrap_or(1);
            let n = match n {
                Some(n) if *n < largest => {
                    return Err(Error::InvalidInput(format!("input uses strand {largest} but n = {n}")));
                }
                Some(n) => strand_count(*n)?,
                None => largest,
            };
            let result = match WedgeMonomial::new(edges) {
                None => WedgeElement::zero(),
                Some(w) => match mode {
                    ReduceMode::Prune => prune_normal_form(&w),
                    ReduceMode::Lex => lex_normal_form(&w),
                },
            };
            let mode_name = match mode {
                ReduceMode::Prune => "prune",
                ReduceMode::Lex => "lex",
            };
            let mut t = Table::new("reduce", &["coeff", "edges", "monomial"])
                .param("mode", mode_name)
                .param("input", input.as_str())
                .param("n", n)
                .param("terms", result.len());
            for (m, c) in result.terms() {
                t.push(vec![Value::from(c.to_string()), Value::from(edges_text(m)), Value::from(monomial_text(m))]);
            }
            if let Some(path) = emit_dot {
                let labelled: Vec<(String, Monomial)> = result.terms().map(|(m, c)| (format!("{c}: {}", edges_text(m)), m.clone())).collect();
                write_dot(path, "reduce", n, &labelled)?;
            }
            Ok(Outcome::Table(t))
        }
        Command::Verify { check, n, family, degree, max_degree, seed, trials, presentation } => {
            let report = match check {
                VerifyKind::Pvh => {
                    let fam = AlgebraFamily::new(family.unwrap_or(FamilyTag::PvB), strand_count(n.unwrap_or(4))?);
                    pvh_report(&fam, budget)?
                }
                VerifyKind::Coproduct => coproduct_table_check(strand_count(n.unwrap_or(4))?.max(4)),
                VerifyKind::Confluence => confluence_check(strand_count(n.unwrap_or(5))?, trials.unwrap_or(200), *seed),
                VerifyKind::Defect => multiplicativity_check(trials.unwrap_or(500), strand_count(n.unwrap_or(7))?, *seed),
                VerifyKind::Euler => {
                    let max = max_degree.unwrap_or(4);
                    match presentation {
                        Some(path) => koszul_euler_check(&read_presentation(path)?.presentation()?, max, budget)?,
                        None => {
                            let fam = AlgebraFamily::new(family.unwrap_or(FamilyTag::PvB), strand_count(n.unwrap_or(3))?);
                            let mut r = koszul_euler_check(&fam.presentation(), max, budget)?;
                            r.params.insert(0, ("family".into(), Value::from(fam.tag.as_str())));
                            r
                        }
                    }
                }
                VerifyKind::Psi => psi_image_check(strand_count(n.unwrap_or(4))?),
                VerifyKind::Degree2 => match presentation {
                    Some(path) => match read_presentation(path)? {
                        PresentationSource::Custom { n, generators, relations } => degree2_report(n, &generators, &relations),
                        PresentationSource::Family(f) => family_degree2(f),
                    },
                    None => family_degree2(AlgebraFamily::new(family.unwrap_or(FamilyTag::PvB), strand_count(n.unwrap_or(4))?)),
                },
                VerifyKind::Lahstirling => lah_stirling_check(n.unwrap_or(8)),
                VerifyKind::ChainGangs => chain_gang_certificate(strand_count(n.unwrap_or(4))?, degree.unwrap_or(3), budget)?,
                VerifyKind::Updown => {
                    let n = strand_count(n.unwrap_or(4))?;
                    updown_report(n, degree.unwrap_or(3), n)
                }
            };
            Ok(Outcome::Report(report))
        }
        Command::Hilbert { n, family, max_degree, presentation } => {
            let p = match presentation {
                Some(path) => read_presentation(path)?.presentation()?,
                None => AlgebraFamily::new(*family, strand_count(*n)?).presentation(),
            };
            Ok(Outcome::Table(hilbert(&p, *max_degree, budget)?))
        }
    }
}

fn family_degree2(f: AlgebraFamily) -> VerificationReport {
    if f.tag == FamilyTag::PvB {
        tilde_delta_report(f.n)
    } else {
        let mut r = degree2_report(f.n, &f.generators(), &f.quadratic_relators());
        r.params.insert(0, ("family".into(), Value::from(f.tag.as_str())));
        r
    }
}

/// Parses `args`, runs the command and returns `(exit code, stdout, stderr)`.
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (2, String::new(), text) };
        }
    };
    match execute(&cli) {
        Ok(outcome) => (outcome.exit_code(), outcome.render(cli.format), String::new()),
        Err(e) => (2, String::new(), format!("error: {e}\n")),
    }
}
