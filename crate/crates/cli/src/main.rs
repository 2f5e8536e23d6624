//! `psc`: possibly single-crossing recognition from approval ballots.
//!
//! Exit status: 0 accept or success, 1 reject (a witness is printed),
//! 2 usage or input error, 3 internal failure.

mod dot;
mod input;
mod output;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use psc_core::colorful_graph::{build_colorful_graph, Orientation};
use psc_core::extend::{extend_to_single_crossing, ssc_violation, SscViolation};
use psc_core::formula_graph::{build_formula_graph, complementary_pairs_partition, FormulaGraph};
use psc_core::lemma_lab::{enumerate_lemma_cases, LemmaId, LemmaTemplate, VARIABLES};
use psc_core::nb::{brute_force_solve, extract_nb_constraints, NbInstance};
use psc_core::orient::{fpt_solve, orientation_to_axis};
use psc_core::pipeline::{brute_force_psc, recognize_psc, Rejection};
use psc_core::profile::{generate_cycle_profile, generate_sc_positive, ApprovalProfile};
use psc_core::{Error, DEFAULT_FPT_COLOR_CAP, DEFAULT_NB_BRUTE_CAP, DEFAULT_PSC_BRUTE_CAP};

use output::{axis_ids, format_rankings, join, profile_ids, OutcomeRecord, Witness};

const CAP_VAR: &str = "PSC_BRUTE_CAP";

#[derive(Parser)]
#[command(
    name = "psc",
    version,
    about = "Possibly single-crossing recognition for approval ballots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether an approval matrix is possibly single-crossing.
    Recognize {
        file: PathBuf,
        #[arg(long)]
        emit_axis: bool,
        #[arg(long)]
        emit_profile: bool,
        #[arg(long)]
        json: bool,
    },
    /// Complete the ballots into a single-crossing linear profile along an axis.
    Extend {
        file: PathBuf,
        /// Comma separated voter ids, e.g. 2,1,3.
        #[arg(long)]
        axis: String,
    },
    /// Check the seemingly single-crossing condition along an axis.
    CheckSsc {
        file: PathBuf,
        #[arg(long)]
        axis: String,
    },
    /// Solve a non-betweenness instance.
    SolveNb {
        file: PathBuf,
        /// Try every permutation.
        #[arg(long, conflicts_with = "fpt")]
        brute: bool,
        /// Try every orientation of the colorful graph (default).
        #[arg(long)]
        fpt: bool,
    },
    /// Print a generated approval matrix.
    #[command(subcommand)]
    Generate(Generate),
    /// Compare recognition against the exhaustive axis search.
    OracleCompare { file: PathBuf },
    /// Run one exhaustive case check.
    LemmaCheck {
        lemma: LemmaId,
        /// Also print every consistent assignment.
        #[arg(long)]
        list: bool,
    },
    /// Write the formula graph or the colorful graph in DOT.
    ExportDot {
        file: PathBuf,
        #[arg(long, value_enum)]
        graph: GraphKind,
        /// One 0/1 digit per color, 1 = flip.
        #[arg(long)]
        orientation: Option<String>,
        /// Read a non-betweenness instance instead of an approval matrix.
        #[arg(long)]
        nb: bool,
    },
}

#[derive(Subcommand)]
enum Generate {
    /// Voter v approves candidates v and v-1 (cyclically).
    Cycle { n: usize },
    /// A random profile that is possibly single-crossing by construction.
    ScPositive {
        /// Voters.
        n: usize,
        /// Candidates.
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Formula,
    Colorful,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) | Error::StructureViolation(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<input::ParseError> for Failure {
    fn from(e: input::ParseError) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Printed output plus the exit status it goes with.
struct Report {
    text: String,
    code: u8,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, code: 0 }
    }

    fn reject(text: String) -> Self {
        Report { text, code: 1 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(report.text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(3);
            }
            ExitCode::from(report.code)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Recognize {
            file,
            emit_axis,
            emit_profile,
            json,
        } => {
            let p = read_profile(&file)?;
            let outcome = recognize_psc(&p.to_weak_orders())?;
            let record = OutcomeRecord::new(&outcome, emit_axis, emit_profile);
            let text = if json {
                record.to_json()
            } else {
                record.to_text()
            };
            Ok(Report {
                text,
                code: if outcome.is_accept() { 0 } else { 1 },
            })
        }
        Command::Extend { file, axis } => {
            let p = read_profile(&file)?.to_weak_orders();
            let axis = input::parse_axis(&axis, p.voters())?;
            match extend_to_single_crossing(&p, &axis) {
                Ok(lin) => Ok(Report::ok(format_rankings(&profile_ids(&lin)))),
                Err(Error::NotSsc(w)) => Ok(Report::reject(format!(
                    "not seemingly single-crossing along the axis\nwitness: {}\n",
                    ssc_text(&w)
                ))),
                Err(e) => Err(e.into()),
            }
        }
        Command::CheckSsc { file, axis } => {
            let p = read_profile(&file)?.to_weak_orders();
            let axis = input::parse_axis(&axis, p.voters())?;
            match ssc_violation(&p, &axis)? {
                None => Ok(Report::ok("ssc: yes\n".to_string())),
                Some(w) => Ok(Report::reject(format!(
                    "ssc: no\nwitness: {}\n",
                    ssc_text(&w)
                ))),
            }
        }
        Command::SolveNb {
            file,
            brute,
            fpt: _,
        } => {
            let inst = input::parse_nb_instance(&read_input(&file)?)?;
            if brute {
                solve_nb_brute(&inst)
            } else {
                solve_nb_fpt(&inst)
            }
        }
        Command::Generate(Generate::Cycle { n }) => Ok(Report::ok(input::format_approval_matrix(
            &generate_cycle_profile(n)?,
        ))),
        Command::Generate(Generate::ScPositive { n, m, seed }) => Ok(Report::ok(
            input::format_approval_matrix(&generate_sc_positive(n, m, seed)?),
        )),
        Command::OracleCompare { file } => {
            let p = read_profile(&file)?.to_weak_orders();
            let fast = recognize_psc(&p)?.is_accept();
            let slow = brute_force_psc(&p, cap(DEFAULT_PSC_BRUTE_CAP)?)?.is_some();
            let word = |b: bool| if b { "accept" } else { "reject" };
            if fast == slow {
                Ok(Report::ok(format!("AGREE {}\n", word(fast))))
            } else {
                Ok(Report {
                    text: format!(
                        "DISAGREE recognize={} brute-force={}\n",
                        word(fast),
                        word(slow)
                    ),
                    code: 3,
                })
            }
        }
        Command::LemmaCheck { lemma, list } => Ok(lemma_check(lemma, list)),
        Command::ExportDot {
            file,
            graph,
            orientation,
            nb,
        } => {
            let text = read_input(&file)?;
            let inst = if nb {
                input::parse_nb_instance(&text)?
            } else {
                extract_nb_constraints(&input::parse_approval_matrix(&text)?.to_weak_orders())
            };
            export_dot(&inst, graph, orientation.as_deref())
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("reading standard input: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_profile(path: &Path) -> Result<ApprovalProfile, Failure> {
    let text = read_input(path)?;
    input::parse_approval_matrix(&text)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn cap(default: usize) -> Result<usize, Failure> {
    match std::env::var(CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("{CAP_VAR} must be a number, found '{v}'"))),
        Err(_) => Ok(default),
    }
}

fn ssc_text(w: &SscViolation) -> String {
    let (i, j, k) = w.voters;
    let (a, b) = w.candidates;
    format!(
        "voters {} {} {} rank candidates {} {} as >, <, >",
        i + 1,
        j + 1,
        k + 1,
        a + 1,
        b + 1
    )
}

fn solve_nb_brute(inst: &NbInstance) -> Result<Report, Failure> {
    match brute_force_solve(inst, cap(DEFAULT_NB_BRUTE_CAP)?)? {
        Some(axis) => Ok(Report::ok(format!(
            "satisfiable\naxis: {}\n",
            join(&axis_ids(&axis))
        ))),
        None => Ok(Report::reject("unsatisfiable\n".to_string())),
    }
}

fn solve_nb_fpt(inst: &NbInstance) -> Result<Report, Failure> {
    let fg = build_formula_graph(inst);
    let part = match complementary_pairs_partition(&fg) {
        Ok(part) => part,
        Err(clash) => {
            let w = output::witness(&Rejection::ComplementClash(clash));
            return Ok(Report::reject(format!(
                "unsatisfiable\nwitness: {}\n",
                w.to_text()
            )));
        }
    };
    let cg = build_colorful_graph(&part);
    if let Some((color, cycle)) = cg.has_monochromatic_cycle() {
        let w = output::witness(&Rejection::MonochromaticCycle { color, cycle });
        return Ok(Report::reject(format!(
            "unsatisfiable\nwitness: {}\n",
            w.to_text()
        )));
    }
    match fpt_solve(&cg, DEFAULT_FPT_COLOR_CAP)? {
        Some(o) => {
            let axis = orientation_to_axis(&cg, &o)?;
            Ok(Report::ok(format!(
                "satisfiable\naxis: {}\norientation: {}\n",
                join(&axis_ids(&axis)),
                bits(&o)
            )))
        }
        None => Ok(Report::reject(format!(
            "unsatisfiable\nwitness: none of the {} orientations is acyclic\n",
            1u64 << cg.color_count()
        ))),
    }
}

fn bits(o: &Orientation) -> String {
    o.flips()
        .iter()
        .map(|&f| if f { '1' } else { '0' })
        .collect()
}

fn lemma_check(lemma: LemmaId, list: bool) -> Report {
    let r = enumerate_lemma_cases(&LemmaTemplate::new(lemma));
    let mut text = format!(
        "{}: total={} consistent={} violations={}\n",
        r.lemma, r.total, r.consistent, r.violations
    );
    let assignment = |values: &[u8; 8]| -> String {
        let cells: Vec<String> = VARIABLES
            .iter()
            .zip(values)
            .map(|(name, v)| format!("{name}={v}"))
            .collect();
        cells.join(" ")
    };
    if list {
        for values in &r.consistent_assignments {
            text.push_str(&format!("consistent {}\n", assignment(values)));
        }
    }
    for values in &r.violating_assignments {
        text.push_str(&format!("violation {}\n", assignment(values)));
    }
    Report {
        text,
        code: if r.violations == 0 { 0 } else { 1 },
    }
}

fn export_dot(inst: &NbInstance, graph: GraphKind, bits: Option<&str>) -> Result<Report, Failure> {
    let fg: FormulaGraph = build_formula_graph(inst);
    match graph {
        GraphKind::Formula => {
            if bits.is_some() {
                return Err(Failure::Input(
                    "--orientation only applies to --graph colorful".into(),
                ));
            }
            Ok(Report::ok(dot::formula_dot(&fg)))
        }
        GraphKind::Colorful => {
            let part = match complementary_pairs_partition(&fg) {
                Ok(part) => part,
                Err(clash) => {
                    let w: Witness = output::witness(&Rejection::ComplementClash(clash));
                    return Ok(Report::reject(format!("witness: {}\n", w.to_text())));
                }
            };
            let cg = build_colorful_graph(&part);
            let o = match bits {
                None => Orientation::keep_all(cg.color_count()),
                Some(s) => parse_bits(s, cg.color_count())?,
            };
            Ok(Report::ok(dot::colorful_dot(&cg, &o)))
        }
    }
}

fn parse_bits(s: &str, colors: usize) -> Result<Orientation, Failure> {
    let flips: Option<Vec<bool>> = s
        .chars()
        .map(|c| match c {
            '0' => Some(false),
            '1' => Some(true),
            _ => None,
        })
        .collect();
    match flips {
        Some(f) if f.len() == colors => Ok(Orientation::new(f)),
        _ => Err(Failure::Input(format!(
            "orientation must be {colors} digits of 0 or 1, found '{s}'"
        ))),
    }
}
