use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use uqsl2::basic::{
    commutator_table, expected_commutator_table, expected_mult_table, mult_table, slf_blocks,
    slf_full_algebra,
};
use uqsl2::center::{beta, block_projectors, casimir, expected_casimir_polynomial, minimal_polynomial, multiplicity};
use uqsl2::idempotents::primitive_idempotent;
use uqsl2::linalg::Matrix;
use uqsl2::repr::{check_relations, projective_module, simple_module, Representation};
use uqsl2::verify::{run_verify, Level};
use uqsl2::{Error, Sign};

#[derive(Parser)]
#[command(name = "uqsl2", version, about = "Exact computations in the restricted quantum group U_q sl2 at q = exp(pi i/p)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LevelArg {
    Fast,
    Full,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Mult,
    Commutator,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModuleKind {
    Simple,
    Projective,
}

fn parse_p(s: &str) -> Result<u32, String> {
    let p: u32 = s.parse().map_err(|_| format!("not a positive integer: {s}"))?;
    if p < 2 {
        return Err(format!("p must be at least 2, got {p}"));
    }
    Ok(p)
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suite and print one line per check.
    Verify {
        #[arg(long, value_parser = parse_p)]
        p: u32,
        #[arg(long, value_enum, default_value = "fast")]
        level: LevelArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the primitive idempotent e_s^sign.
    Idempotent {
        #[arg(long, value_parser = parse_p)]
        p: u32,
        #[arg(long)]
        s: u32,
        #[arg(long, value_parser = parse_sign, allow_hyphen_values = true)]
        sign: Sign,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the multiplication (or commutator) table of the block B_s.
    Table {
        #[arg(long, value_parser = parse_p)]
        p: u32,
        #[arg(long)]
        s: u32,
        #[arg(long, value_enum, default_value = "mult")]
        kind: TableKind,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the minimal polynomial of the Casimir element and the block dimensions.
    Casimir {
        #[arg(long, value_parser = parse_p)]
        p: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the dimension of the space of symmetric linear functions.
    Slf {
        #[arg(long, value_parser = parse_p)]
        p: u32,
        /// Also compute it by brute force over the whole algebra.
        #[arg(long)]
        full: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the matrices of E, F, K on a simple or projective module.
    Module {
        #[arg(long, value_parser = parse_p)]
        p: u32,
        #[arg(long)]
        s: u32,
        #[arg(long, value_parser = parse_sign, allow_hyphen_values = true)]
        sign: Sign,
        /// Defaults to projective for s < p and simple for s = p.
        #[arg(long, value_enum)]
        kind: Option<ModuleKind>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Outcome of a subcommand: rendered output and whether all checks passed.
struct Outcome {
    output: String,
    ok: bool,
}

fn print_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json renders");
    s.push('\n');
    s
}

fn run(cmd: Command) -> uqsl2::Result<Outcome> {
    match cmd {
        Command::Verify { p, level, format } => {
            let level = match level {
                LevelArg::Fast => Level::Fast,
                LevelArg::Full => Level::Full,
            };
            let report = run_verify(p, level)?;
            eprintln!("elapsed: {:.3} s", report.elapsed.as_secs_f64());
            let output = match format {
                Format::Text => report.to_string(),
                Format::Json => print_json(&report.to_json()),
            };
            Ok(Outcome { output, ok: report.all_pass() })
        }
        Command::Idempotent { p, s, sign, format } => {
            let e = primitive_idempotent(s, sign, p)?;
            let output = match format {
                Format::Text => format!("{e}\n"),
                Format::Json => print_json(&json!({
                    "p": p, "s": s, "sign": sign.to_string(), "terms": e.to_json(),
                })),
            };
            Ok(Outcome { output, ok: true })
        }
        Command::Table { p, s, kind, format } => {
            let (table, expected) = match kind {
                TableKind::Mult => (mult_table(p, s)?, expected_mult_table(p)?),
                TableKind::Commutator => (commutator_table(p, s)?, expected_commutator_table(p)?),
            };
            let mismatches = table.mismatches(&expected);
            for (i, j) in &mismatches {
                eprintln!("cell ({}, {}) differs from the expected table", uqsl2::basic::LABELS[*i], uqsl2::basic::LABELS[*j]);
            }
            let output = match format {
                Format::Text => table.to_string(),
                Format::Json => print_json(&table.to_json()),
            };
            Ok(Outcome { output, ok: mismatches.is_empty() })
        }
        Command::Casimir { p, format } => casimir_output(p, format),
        Command::Slf { p, full, format } => {
            let blocks = slf_blocks(p)?;
            let total: usize = blocks.iter().sum();
            let brute = if full { Some(slf_full_algebra(p)?) } else { None };
            let ok = brute.is_none_or(|b| b == total);
            let output = match format {
                Format::Text => format!("{total}\n"),
                Format::Json => print_json(&json!({
                    "p": p, "blocks": blocks, "total": total, "full_algebra": brute,
                })),
            };
            if !ok {
                eprintln!("brute-force dimension {} differs from block sum {total}", brute.unwrap_or(0));
            }
            Ok(Outcome { output, ok })
        }
        Command::Module { p, s, sign, kind, format } => {
            let kind = match kind {
                Some(ModuleKind::Projective) if s < p => ModuleKind::Projective,
                None if s < p => ModuleKind::Projective,
                _ => ModuleKind::Simple,
            };
            let rep = match kind {
                ModuleKind::Simple => simple_module(s, sign, p)?,
                ModuleKind::Projective => projective_module(s, sign, p)?,
            };
            let check = check_relations(&rep)?;
            if let Err(v) = &check {
                eprintln!("{v}");
            }
            let output = match format {
                Format::Text => module_text(&rep, kind, s, sign, check.is_ok()),
                Format::Json => print_json(&json!({
                    "p": p, "s": s, "sign": sign.to_string(),
                    "kind": if kind == ModuleKind::Simple { "simple" } else { "projective" },
                    "labels": rep.labels,
                    "E": rep.mat_e.to_strings(), "F": rep.mat_f.to_strings(), "K": rep.mat_k.to_strings(),
                    "relations": if check.is_ok() { "pass" } else { "fail" },
                })),
            };
            Ok(Outcome { output, ok: check.is_ok() })
        }
    }
}

fn matrix_text(name: &str, m: &Matrix, out: &mut String) {
    let cells: Vec<Vec<String>> = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    out.push_str(&format!("{name} =\n"));
    for row in cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(&format!("  [ {} ]\n", line.join("  ")));
    }
}

fn module_text(rep: &Representation, kind: ModuleKind, s: u32, sign: Sign, ok: bool) -> String {
    let name = if kind == ModuleKind::Simple { "X" } else { "P" };
    let mut out = format!(
        "{name}_{s}^{sign} at p = {}, dimension {}\nbasis: {}\n",
        rep.p,
        rep.dim,
        rep.labels.join(", ")
    );
    matrix_text("E", &rep.mat_e, &mut out);
    matrix_text("F", &rep.mat_f, &mut out);
    matrix_text("K", &rep.mat_k, &mut out);
    out.push_str(&format!("relations: {}\n", if ok { "pass" } else { "fail" }));
    out
}

fn casimir_output(p: u32, format: Format) -> uqsl2::Result<Outcome> {
    let c = casimir(p)?;
    let minpoly = minimal_polynomial(&c)?;
    let expected = expected_casimir_polynomial(p)?;
    let ok = minpoly == expected;
    let betas = (0..=p).map(|j| beta(p, j as i64)).collect::<uqsl2::Result<Vec<_>>>()?;
    let bp = block_projectors(p)?;
    let dims = (0..=p).map(|s| bp.dimension(s)).collect::<uqsl2::Result<Vec<_>>>()?;
    let factored: Vec<String> = (0..=p)
        .map(|j| match multiplicity(p, j) {
            1 => format!("(t - b_{j})"),
            m => format!("(t - b_{j})^{m}"),
        })
        .collect();
    let output = match format {
        Format::Text => {
            let mut out = format!("minimal polynomial of C at p = {p}\n");
            out.push_str(&format!("factored: {}\n", factored.join("")));
            for (j, b) in betas.iter().enumerate() {
                out.push_str(&format!("  b_{j} = {b}\n"));
            }
            out.push_str(&format!("expanded: {minpoly}\n"));
            out.push_str(&format!("matches product formula: {}\n", if ok { "yes" } else { "no" }));
            let d: Vec<String> = dims.iter().enumerate().map(|(s, d)| format!("Q_{s} = {d}")).collect();
            out.push_str(&format!("block dimensions: {}\n", d.join(", ")));
            out
        }
        Format::Json => print_json(&json!({
            "p": p,
            "factored": factored.join(""),
            "eigenvalues": betas.iter().map(|b| b.to_strings()).collect::<Vec<_>>(),
            "multiplicities": (0..=p).map(|j| multiplicity(p, j)).collect::<Vec<_>>(),
            "coefficients": minpoly.to_strings(),
            "matches_product_formula": ok,
            "block_dimensions": dims,
        })),
    };
    Ok(Outcome { output, ok })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.output);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Error::Parameter(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
