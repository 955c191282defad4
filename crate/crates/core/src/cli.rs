//! The `pyramidion` command line: claim verification, trisection traces,
//! triple generation, and construction-script execution.
//!
//! Exit codes: 0 when every check passed, 1 when checks ran and failed,
//! 2 on usage or input errors. Output carries no timestamps, so any
//! subcommand run twice produces byte-identical bytes.

use crate::bundled;
use crate::classical::{consecutive_leg_triples, trisect_iterative, TrisectionTrace};
use crate::dsl;
use crate::geom::Angle;
use crate::metrology::{claims_from_json, run_suite, Claim, Dataset};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fs;
use std::path::{Path, PathBuf};

#[derive(Debug, Parser)]
#[command(
    name = "pyramidion",
    version,
    about = "Verification toolkit for the classical constructions read into Fourth-Dynasty pyramid geometry"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate metrology claims against a measurement dataset.
    Verify(VerifyArgs),
    /// Run the iterative angle trisection and print its trace.
    Trisect(TrisectArgs),
    /// Generate consecutive-leg Pythagorean triples.
    Triples(TriplesArgs),
    /// Parse, evaluate and optionally render a .geo construction script.
    Run(RunArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Dataset JSON path (defaults to the bundled Lehner/Petrie/Edwards data).
    #[arg(long)]
    pub dataset: Option<PathBuf>,
    /// Claims JSON path (defaults to the bundled registry).
    #[arg(long)]
    pub claims: Option<PathBuf>,
    /// Evaluate only the named claim(s), repeatable.
    #[arg(long = "claim")]
    pub claim_ids: Vec<String>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TrisectArgs {
    /// Angle to trisect: decimal degrees ("54.46222") or d:m:s ("54:27:44").
    #[arg(long)]
    pub angle: String,
    /// Length of the segment AC in construction units.
    #[arg(long, default_value_t = 100.0)]
    pub unit: f64,
    /// Maximum number of iterations after the seed row S.
    #[arg(long, default_value_t = 100)]
    pub iters: usize,
    /// Convergence threshold on successive third-angle estimates, in degrees.
    #[arg(long, default_value_t = 1e-7)]
    pub eps: f64,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write the trace here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TriplesArgs {
    /// How many triples to generate.
    #[arg(long)]
    pub count: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write the list here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Script path; bare bundled names (e.g. "trisection.geo") also work
    /// when no such file exists.
    pub script: PathBuf,
    /// Render the evaluated construction to this SVG file.
    #[arg(long)]
    pub render: Option<PathBuf>,
}

/// Top-level dispatch; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Verify(args) => verify(&args),
        Command::Trisect(args) => trisect(&args),
        Command::Triples(args) => triples(&args),
        Command::Run(args) => run_script(&args),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), String> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_dataset(path: Option<&Path>) -> Result<Dataset, String> {
    match path {
        Some(p) => {
            let text = fs::read_to_string(p)
                .map_err(|e| format!("cannot read dataset {}: {e}", p.display()))?;
            Dataset::from_json(&text).map_err(|e| format!("{}: {e}", p.display()))
        }
        None => Ok(bundled::dataset()),
    }
}

fn load_claims(path: Option<&Path>) -> Result<Vec<Claim>, String> {
    match path {
        Some(p) => {
            let text = fs::read_to_string(p)
                .map_err(|e| format!("cannot read claims {}: {e}", p.display()))?;
            claims_from_json(&text).map_err(|e| format!("{}: {e}", p.display()))
        }
        None => Ok(bundled::claims()),
    }
}

fn verify(args: &VerifyArgs) -> Result<i32, String> {
    let dataset = load_dataset(args.dataset.as_deref())?;
    let mut claims = load_claims(args.claims.as_deref())?;
    if !args.claim_ids.is_empty() {
        for id in &args.claim_ids {
            if !claims.iter().any(|c| &c.id == id) {
                return Err(format!("no claim named `{id}` in the registry"));
            }
        }
        claims.retain(|c| args.claim_ids.contains(&c.id));
    }
    let report = run_suite(&claims, &dataset);
    let text = match args.format {
        Format::Text => report.to_text(),
        Format::Csv => report.to_csv(&claims),
        Format::Json => report.to_json(),
    };
    emit(args.output.as_deref(), &text)?;
    Ok(if report.errored > 0 {
        2
    } else if report.failed > 0 {
        1
    } else {
        0
    })
}

/// Accepts decimal degrees or a d:m:s form with fractional seconds.
pub fn parse_angle(text: &str) -> Result<Angle, String> {
    if text.contains(':') {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("angle `{text}` must be d:m:s or decimal degrees"));
        }
        let d: u32 = parts[0]
            .parse()
            .map_err(|_| format!("bad degrees in `{text}`"))?;
        let m: u32 = parts[1]
            .parse()
            .map_err(|_| format!("bad minutes in `{text}`"))?;
        let s: f64 = parts[2]
            .parse()
            .map_err(|_| format!("bad seconds in `{text}`"))?;
        Angle::from_dms(d, m, s).map_err(|e| e.to_string())
    } else {
        let degrees: f64 = text
            .parse()
            .map_err(|_| format!("angle `{text}` must be d:m:s or decimal degrees"))?;
        if !degrees.is_finite() {
            return Err(format!("angle `{text}` must be finite"));
        }
        Ok(Angle::from_degrees(degrees))
    }
}

fn trisect_summary(trace: &TrisectionTrace) -> String {
    format!(
        "\nfinal third: {:.6} deg   theta/3: {:.6} deg   converged: {} ({} iterations)\n",
        trace.final_third_degrees(),
        trace.theta.degrees() / 3.0,
        if trace.converged { "yes" } else { "no" },
        trace.iterations()
    )
}

fn trisect(args: &TrisectArgs) -> Result<i32, String> {
    let angle = parse_angle(&args.angle)?;
    let trace =
        trisect_iterative(angle, args.unit, args.eps, args.iters).map_err(|e| e.to_string())?;
    let text = match args.format {
        Format::Text => format!("{}{}", trace.table(), trisect_summary(&trace)),
        Format::Csv => trace.to_csv(),
        Format::Json => {
            let mut json = serde_json::to_string_pretty(&trace).expect("trace serializes");
            json.push('\n');
            json
        }
    };
    emit(args.output.as_deref(), &text)?;
    Ok(if trace.converged { 0 } else { 1 })
}

fn triples(args: &TriplesArgs) -> Result<i32, String> {
    let triples = consecutive_leg_triples(args.count).map_err(|e| e.to_string())?;
    let text = match args.format {
        Format::Text => {
            let mut out = String::new();
            for t in &triples {
                out.push_str(&format!("{t}\n"));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("a,b,c\n");
            for t in &triples {
                out.push_str(&format!("{t}\n"));
            }
            out
        }
        Format::Json => {
            let mut json = serde_json::to_string_pretty(&triples).expect("triples serialize");
            json.push('\n');
            json
        }
    };
    emit(args.output.as_deref(), &text)?;
    Ok(0)
}

fn run_script(args: &RunArgs) -> Result<i32, String> {
    let display = args.script.display().to_string();
    let source = if args.script.exists() {
        fs::read_to_string(&args.script).map_err(|e| format!("cannot read {display}: {e}"))?
    } else if let Some(text) = args
        .script
        .to_str()
        .and_then(bundled::script)
    {
        text.to_string()
    } else {
        return Err(format!(
            "cannot read {display}: no such file (and it names no bundled script)"
        ));
    };

    let program = match dsl::parse(&source) {
        Ok(p) => p,
        Err(diag) => {
            eprintln!("{display}:{diag}");
            return Ok(2);
        }
    };
    let evaluation = match dsl::evaluate(&program) {
        Ok(ev) => ev,
        Err(diag) => {
            eprintln!("{display}:{diag}");
            return Ok(2);
        }
    };

    let mut out = String::new();
    for a in &evaluation.assertions {
        out.push_str(&format!(
            "{display}:{}: assert approx({}, {}, {}) ... {}\n",
            a.line,
            a.lhs,
            a.rhs,
            a.tol,
            if a.passed { "pass" } else { "FAIL" }
        ));
    }
    let passed = evaluation.assertions.iter().filter(|a| a.passed).count();
    out.push_str(&format!(
        "{} bindings, {} assertions, {} passed, {} failed\n",
        evaluation.env.len(),
        evaluation.assertions.len(),
        passed,
        evaluation.assertions.len() - passed
    ));
    print!("{out}");

    if let Some(svg_path) = &args.render {
        let viewport = dsl::Viewport::fit(&evaluation.env, 0.08);
        let svg = dsl::render_svg(&evaluation.env, &viewport);
        fs::write(svg_path, svg)
            .map_err(|e| format!("cannot write {}: {e}", svg_path.display()))?;
    }
    Ok(if evaluation.all_passed() { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angle_flag_accepts_both_forms() {
        let a = parse_angle("54:27:44").unwrap();
        assert!((a.degrees() - 54.46222222222222).abs() < 1e-12);
        let b = parse_angle("54.46222").unwrap();
        assert!((b.degrees() - 54.46222).abs() < 1e-12);
        assert!(parse_angle("54:27").is_err());
        assert!(parse_angle("x").is_err());
        assert!(parse_angle("10:99:00").is_err());
    }
}
