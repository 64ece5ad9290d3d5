//! The `qfa` command line.
//!
//! Exit codes: 0 success, 1 usage or spec error, 2 braid equation fails,
//! 3 not rigid, 4 inconclusive within the degree or work budget, 5 the
//! Nichols algebra is not weakly graded-Frobenius, 6 the localization
//! hypothesis fails (the report is still written).

pub mod report;
pub mod spec;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use crate::braiding::{check_braid_equation, check_rigid};
use crate::frt::frt_relations;
use crate::gbasis::DEFAULT_BUDGET;
use crate::ncpoly::{format_monomial, parse_monomial};
use crate::nichols::{detect_top, GradedNichols, TopError, DEFAULT_MAX_DEGREE, DEFAULT_TENSOR_CAP};
use crate::qdet::{assemble, check_companion, Options, QDetError, Verdict};

use report::{
    CheckSection, FrtSection, InputInfo, NicholsSection, OptionsInfo, Outcome, QDetSection, ReportDocument, SetSection,
    ToolInfo, SCHEMA_VERSION,
};
use spec::{parse_spec, BuiltSpec, SpecDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BRAID: i32 = 2;
pub const EXIT_RIGIDITY: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;
pub const EXIT_WGF: i32 = 5;
pub const EXIT_HYPOTHESIS: i32 = 6;

#[derive(Debug, Parser)]
#[command(name = "qfa", version, about = "Quantum function algebras of braided vector spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, clap::Args)]
struct Common {
    /// Braiding spec (TOML).
    spec: PathBuf,
    /// Highest Nichols degree to compute.
    #[arg(long)]
    max_degree: Option<usize>,
    /// Volume monomial, e.g. x1x2x3x2.
    #[arg(long)]
    volume: Option<String>,
    /// Also reduce D·t − 𝔍(t)·D for every generator.
    #[arg(long)]
    certify_normality: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Work budget for Gröbner completion.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Largest tensor power dimension the Nichols stage may use.
    #[arg(long, default_value_t = DEFAULT_TENSOR_CAP)]
    tensor_cap: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Braid equation and rigidity.
    Check(Common),
    /// The FRT relations.
    Frt(Common),
    /// Hilbert function, new relations and top degree of the Nichols algebra.
    Nichols(Common),
    /// Quantum determinant, cofactors, antipode and presentations.
    Qdet(Common),
}

impl Command {
    fn parts(&self) -> (&'static str, &Common) {
        match self {
            Command::Check(c) => ("check", c),
            Command::Frt(c) => ("frt", c),
            Command::Nichols(c) => ("nichols", c),
            Command::Qdet(c) => ("qdet", c),
        }
    }
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let (name, common) = cli.command.parts();
    let bytes = match std::fs::read(&common.spec) {
        Ok(b) => b,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", common.spec.display());
            return EXIT_USAGE;
        }
    };
    let (doc, exit) = match execute(name, common, &bytes) {
        Ok(r) => r,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            return EXIT_USAGE;
        }
    };
    let rendered = match common.format {
        Format::Json => report::to_json(&doc),
        Format::Text => report::to_text(&doc),
        Format::Latex => report::to_latex(&doc),
    };
    let _ = out.write_all(rendered.as_bytes());
    if exit != EXIT_OK {
        if let Some(m) = &doc.outcome.message {
            let _ = writeln!(err, "{}: {m}", doc.outcome.status);
        }
    }
    exit
}

fn outcome(exit_code: i32, message: Option<String>) -> Outcome {
    let status = match exit_code {
        EXIT_OK => "ok",
        EXIT_BRAID => "braid_failure",
        EXIT_RIGIDITY => "rigidity_failure",
        EXIT_INCONCLUSIVE => "inconclusive",
        EXIT_WGF => "not_weakly_graded_frobenius",
        EXIT_HYPOTHESIS => "hypothesis_fails",
        _ => "error",
    };
    Outcome {
        exit_code,
        status: status.into(),
        message,
    }
}

fn load(bytes: &[u8]) -> Result<(SpecDocument, BuiltSpec), String> {
    let text = std::str::from_utf8(bytes).map_err(|e| format!("spec is not UTF-8: {e}"))?;
    let doc = parse_spec(text).map_err(|e| e.to_string())?;
    let built = doc.build().map_err(|e| e.to_string())?;
    Ok((doc, built))
}

/// Builds the report for one command; `Err` is a usage or spec error.
fn execute(command: &str, common: &Common, bytes: &[u8]) -> Result<(ReportDocument, i32), String> {
    let (doc, built) = load(bytes)?;
    let n = built.braiding.dim();
    let volume = match &common.volume {
        Some(v) => Some(parse_monomial(v, n).map_err(|e| format!("--volume: {e}"))?),
        None => built.volume.clone(),
    };
    let max_degree = common.max_degree.or(built.max_degree).unwrap_or(DEFAULT_MAX_DEGREE);
    let kind = serde_json::to_value(doc.kind)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default();
    let mut report = ReportDocument {
        schema_version: SCHEMA_VERSION,
        tool: ToolInfo::default(),
        command: command.into(),
        input: InputInfo {
            sha256: hex::encode(Sha256::digest(bytes)),
            name: doc.name.clone(),
            kind,
            n,
            conductor: built.conductor,
        },
        options: OptionsInfo {
            max_degree,
            tensor_cap: common.tensor_cap,
            budget: common.budget,
            volume: volume.as_deref().map(format_monomial),
            certify_normality: common.certify_normality,
            companion: built.companion.is_some(),
        },
        outcome: outcome(EXIT_OK, None),
        check: None,
        frt: None,
        nichols: None,
        qdet: None,
    };
    let c = &built.braiding;

    let braid = check_braid_equation(c);
    let rigid = braid.is_ok().then(|| check_rigid(c));
    let set_section = built.set_theoretic.as_ref().map(|(sol, cocycle)| {
        let v = sol.validate().and_then(|v| {
            match &built.rack {
                Some(rack) => cocycle.validate_rack(rack)?,
                None => cocycle.validate_solution(sol)?,
            }
            Ok(v)
        });
        SetSection::new(v.map_err(|e| e.to_string()))
    });
    report.check = Some(CheckSection::new(&braid, rigid.as_ref(), c.is_involutive(), set_section));
    if let Err(v) = &braid {
        report.outcome = outcome(EXIT_BRAID, Some(v.to_string()));
        return Ok((report, EXIT_BRAID));
    }
    if let Some(Err(_)) = &rigid {
        report.outcome = outcome(EXIT_RIGIDITY, Some("c-flat is singular".into()));
        return Ok((report, EXIT_RIGIDITY));
    }
    if command == "check" {
        return Ok((report, EXIT_OK));
    }

    let frt = frt_relations(c);
    report.frt = Some(FrtSection::new(&frt));
    if command == "frt" {
        return Ok((report, EXIT_OK));
    }

    if command == "nichols" {
        let source = match &built.companion {
            Some(comp) => {
                if let Err(e) = check_companion(&frt, comp) {
                    let code = companion_exit(&e);
                    report.outcome = outcome(code, Some(e.to_string()));
                    return Ok((report, code));
                }
                comp
            }
            None => c,
        };
        let g = GradedNichols::compute(source, max_degree, common.tensor_cap);
        let top = detect_top(&g, volume.as_deref());
        report.nichols = Some(NicholsSection::new(&g, top.as_ref().ok()));
        let code = match &top {
            Ok(_) => EXIT_OK,
            Err(e) => top_exit(e),
        };
        report.outcome = outcome(code, top.err().map(|e| e.to_string()));
        return Ok((report, code));
    }

    let opts = Options {
        max_degree,
        tensor_cap: common.tensor_cap,
        budget: common.budget,
        volume,
        certify_normality: common.certify_normality,
        companion: built.companion.clone(),
    };
    match assemble(c, &opts) {
        Ok(r) => {
            report.nichols = Some(NicholsSection::from_report(&r));
            let (code, message) = match r.main_hypothesis.verdict {
                Verdict::Holds => (EXIT_OK, None),
                Verdict::Fails => (
                    EXIT_HYPOTHESIS,
                    Some("the localization hypothesis fails; no antipode is emitted".to_string()),
                ),
                Verdict::Inconclusive => (
                    EXIT_INCONCLUSIVE,
                    Some("the localization hypothesis is undecided within the Groebner budget".to_string()),
                ),
            };
            report.qdet = Some(QDetSection::new(&r));
            report.outcome = outcome(code, message);
            Ok((report, code))
        }
        Err(e) => {
            let code = match &e {
                QDetError::Braid(_) => EXIT_BRAID,
                QDetError::Rigidity(_) => EXIT_RIGIDITY,
                QDetError::Top(t) => top_exit(t),
                QDetError::Hayashi(_) => EXIT_HYPOTHESIS,
                QDetError::Gb(_) => EXIT_USAGE,
                other => companion_exit(other),
            };
            report.outcome = outcome(code, Some(e.to_string()));
            Ok((report, code))
        }
    }
}

fn top_exit(e: &TopError) -> i32 {
    match e {
        TopError::Inconclusive { .. } => EXIT_INCONCLUSIVE,
        TopError::VolumeLength { .. } | TopError::VolumeZero { .. } => EXIT_USAGE,
        _ => EXIT_WGF,
    }
}

fn companion_exit(e: &QDetError) -> i32 {
    match e {
        QDetError::CompanionDimension { .. } => EXIT_USAGE,
        _ => EXIT_WGF,
    }
}
