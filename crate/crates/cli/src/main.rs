use std::fmt::Write as _;
use std::io::{self, Read, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use grassrank::formulas::{
    gr_2n2, gr_conj, gr_kn1, inf_gr2_chart, inf_gr2_rank, inf_kn1_chart, inf_kn1_rank, proj_space,
};
use grassrank::schubert::ingredient_table;
use grassrank::solver::solve;
use grassrank::{Field, RankChart, SignSequence, SolveOptions, SolveStatus};
use grassrank_cli::grid::{ingredients_csv, render_csv, render_grid, render_ingredients};
use grassrank_cli::verify::{self, Check, Ranges};
use grassrank_cli::{exit_code, ChartDocument, Parameters, EXIT_FAILED, EXIT_USAGE};
use serde_json::json;

#[derive(Debug, Parser)]
#[command(
    name = "grassrank",
    version,
    about = "Rank charts of equivariant Grassmannians"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse().map_err(|e: grassrank::Error| e.to_string())
}

fn parse_point(s: &str) -> Result<(i64, i64), String> {
    let (p, q) = s.split_once(',').ok_or("expected P,Q")?;
    let p = p
        .trim()
        .parse()
        .map_err(|_| format!("bad dimension {p:?}"))?;
    let q = q.trim().parse().map_err(|_| format!("bad weight {q:?}"))?;
    Ok((p, q))
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Schubert cell bidegrees of one ordered decomposition.
    Ingredients {
        #[arg(short)]
        k: usize,
        /// Sign string such as "+-+-+".
        #[arg(short, long, allow_hyphen_values = true)]
        signs: String,
        #[arg(long, value_parser = parse_field, default_value = "R")]
        field: Field,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Certify a rank chart by intersecting every construction's outcomes.
    Solve {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: usize,
        /// Number of sign-representation summands; ignored for Cconj.
        #[arg(short, default_value_t = 0)]
        q: usize,
        #[arg(long, value_parser = parse_field, default_value = "R")]
        field: Field,
        #[arg(long)]
        prefix_pruning: bool,
        #[arg(long, default_value_t = 100_000)]
        max_candidates: usize,
        /// Search states one construction may visit before giving up.
        #[arg(long, default_value_t = 100_000)]
        search_budget: u64,
        /// Solve every sign sequence even when tables coincide.
        #[arg(long)]
        no_dedup: bool,
        /// Include per-construction diagnostics in JSON output.
        #[arg(long)]
        diagnostics: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Closed-form charts.
    Formula {
        #[command(subcommand)]
        family: Family,
        #[arg(long, value_enum, default_value_t, global = true)]
        format: Format,
        /// Print only the free rank at P,Q.
        #[arg(long, value_parser = parse_point, global = true, allow_hyphen_values = true)]
        rank_at: Option<(i64, i64)>,
    },
    /// Cross-check the solver, the formulas and the combinatorics.
    Verify {
        #[arg(long)]
        kn1: bool,
        #[arg(long = "2n2")]
        two_n2: bool,
        #[arg(long)]
        weights: bool,
        #[arg(long)]
        duality: bool,
        #[arg(long)]
        appendix: bool,
        #[arg(long)]
        stabilization: bool,
        #[arg(long)]
        conservation: bool,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 12)]
        max_p: usize,
        /// Run every selected check over empty ranges.
        #[arg(long)]
        empty_range: bool,
    },
    /// Re-render a chart document (from a file, or stdin).
    Render {
        path: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Debug, Subcommand)]
enum Family {
    /// Projective space P(R^{p,q}).
    Proj {
        #[arg(short)]
        p: usize,
        #[arg(short)]
        q: usize,
    },
    /// Gr_k(R^{n,1}).
    Kn1 {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: usize,
    },
    /// Gr_2(R^{n,2}).
    #[command(name = "2n2")]
    TwoN2 {
        #[arg(short)]
        n: usize,
    },
    /// Gr_2(R^{inf,2}) through dimension max-p.
    Inf2n2 {
        #[arg(long, default_value_t = 20)]
        max_p: usize,
    },
    /// Gr_k(R^{inf,1}) through dimension max-p.
    Infkn1 {
        #[arg(short)]
        k: usize,
        #[arg(long, default_value_t = 20)]
        max_p: usize,
    },
    /// Gr_k(C^n) with conjugation.
    Conj {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: usize,
    },
    /// Gr_k(C^{n,q}) for q = 1, or k = 2 and q = 2.
    Complex {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: usize,
        #[arg(short, default_value_t = 1)]
        q: usize,
    },
}

fn emit_chart(out: &mut String, doc: &ChartDocument, format: Format, title: &str) -> Result<()> {
    match format {
        Format::Json => write!(out, "{}", doc.to_json()?)?,
        Format::Csv => write!(out, "{}", render_csv(&doc.chart()))?,
        Format::Text => {
            writeln!(out, "{title}")?;
            write!(out, "{}", render_grid(&doc.chart()))?;
        }
    }
    Ok(())
}

fn ingredients(
    out: &mut String,
    k: usize,
    signs: &str,
    field: Field,
    format: Format,
) -> Result<u8> {
    let s: SignSequence = signs
        .parse()
        .with_context(|| format!("bad sign string {signs:?}"))?;
    let table = ingredient_table(k, &s, field)?;
    match format {
        Format::Text => {
            writeln!(out, "I({s}), k = {k}, field {field}")?;
            write!(out, "{}", render_ingredients(&table))?;
        }
        Format::Csv => write!(out, "{}", ingredients_csv(&table))?,
        Format::Json => {
            let cells: Vec<_> = table
                .entries()
                .iter()
                .map(|e| {
                    let jumps = e.label.to_jumps(table.n()).expect("labels fit their box");
                    json!({
                        "partition": e.label.parts(),
                        "jumps": jumps.jumps(),
                        "p": e.bidegree.p,
                        "q": e.bidegree.q,
                    })
                })
                .collect();
            let doc = json!({
                "schema_version": grassrank_cli::document::SCHEMA_VERSION,
                "k": k,
                "signs": s.to_string(),
                "field": field.as_str(),
                "cells": cells,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
    }
    Ok(0)
}

fn space_name(k: usize, n: usize, q: usize, field: Field) -> String {
    match field {
        Field::Real => format!("Gr_{k}(R^{{{n},{q}}})"),
        Field::Complex => format!("Gr_{k}(C^{{{n},{q}}})"),
        Field::ComplexConj => format!("Gr_{k}(C^{n}) with conjugation"),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_solve(
    out: &mut String,
    k: usize,
    n: usize,
    q: usize,
    field: Field,
    options: SolveOptions,
    diagnostics: bool,
    format: Format,
) -> Result<u8> {
    let report = solve(k, n, q, field, &options)?;
    let doc = ChartDocument::from_report(&report, diagnostics);
    let name = space_name(k, n, q, field);
    match (format, report.status) {
        (Format::Json, _) => write!(out, "{}", doc.to_json()?)?,
        (_, SolveStatus::Certified) => {
            emit_chart(out, &doc, format, &format!("{name}: certified"))?
        }
        (Format::Csv, status) => {
            writeln!(out, "candidate,p,q,free_rank")?;
            for (i, chart) in report.candidates.iter().enumerate() {
                for (g, m) in chart.entries() {
                    writeln!(out, "{},{},{},{}", i + 1, g.p, g.q, m)?;
                }
            }
            eprintln!("status: {}", status.as_str());
        }
        (Format::Text, status) => {
            writeln!(out, "{name}: {}", status.as_str())?;
            for (i, chart) in report.candidates.iter().enumerate() {
                writeln!(out, "candidate {}:", i + 1)?;
                write!(out, "{}", render_grid(chart))?;
            }
        }
    }
    if report.unverified() > 0 {
        eprintln!(
            "{} construction(s) exceeded the search budget",
            report.unverified()
        );
    }
    Ok(exit_code(report.status))
}

fn formula(
    out: &mut String,
    family: Family,
    format: Format,
    rank_at: Option<(i64, i64)>,
) -> Result<u8> {
    let (params, title, chart, direct): (Parameters, String, RankChart, Option<u64>) = match family
    {
        Family::Proj { p, q } => {
            let mut params = Parameters::formula("proj", "R");
            (params.p, params.q) = (Some(p), Some(q));
            (params, format!("P(R^{{{p},{q}}})"), proj_space(p, q)?, None)
        }
        Family::Kn1 { k, n } => {
            let mut params = Parameters::formula("kn1", "R");
            (params.k, params.n, params.q) = (Some(k), Some(n), Some(1));
            (
                params,
                space_name(k, n, 1, Field::Real),
                gr_kn1(k, n)?,
                None,
            )
        }
        Family::TwoN2 { n } => {
            let mut params = Parameters::formula("2n2", "R");
            (params.k, params.n, params.q) = (Some(2), Some(n), Some(2));
            (params, space_name(2, n, 2, Field::Real), gr_2n2(n)?, None)
        }
        Family::Inf2n2 { max_p } => {
            let mut params = Parameters::formula("inf2n2", "R");
            (params.k, params.q, params.max_p) = (Some(2), Some(2), Some(max_p));
            let direct = rank_at.map(|(p, q)| match (usize::try_from(p), usize::try_from(q)) {
                (Ok(p), Ok(q)) => inf_gr2_rank(p, q),
                _ => 0,
            });
            let title = format!("Gr_2(R^{{inf,2}}) through dimension {max_p}");
            (params, title, inf_gr2_chart(max_p), direct)
        }
        Family::Infkn1 { k, max_p } => {
            let mut params = Parameters::formula("infkn1", "R");
            (params.k, params.q, params.max_p) = (Some(k), Some(1), Some(max_p));
            let direct = rank_at.map(|(p, q)| match (usize::try_from(p), usize::try_from(q)) {
                (Ok(p), Ok(q)) => inf_kn1_rank(p, q, k),
                _ => 0,
            });
            let title = format!("Gr_{k}(R^{{inf,1}}) through dimension {max_p}");
            (params, title, inf_kn1_chart(k, max_p), direct)
        }
        Family::Conj { k, n } => {
            let mut params = Parameters::formula("conj", "Cconj");
            (params.k, params.n) = (Some(k), Some(n));
            (
                params,
                space_name(k, n, 0, Field::ComplexConj),
                gr_conj(k, n)?,
                None,
            )
        }
        Family::Complex { k, n, q } => {
            let mut params = Parameters::formula("complex", "C");
            (params.k, params.n, params.q) = (Some(k), Some(n), Some(q));
            let real = match (k, q) {
                (_, 1) => gr_kn1(k, n)?,
                (2, 2) => gr_2n2(n)?,
                _ => bail!("complex charts are available for q = 1, or k = 2 and q = 2"),
            };
            (
                params,
                space_name(k, n, q, Field::Complex),
                real.complexify(),
                None,
            )
        }
    };
    if let Some((p, q)) = rank_at {
        let rank = direct.unwrap_or_else(|| chart.free_rank_at(p, q));
        match format {
            Format::Text => writeln!(out, "{rank}")?,
            Format::Csv => write!(out, "p,q,free_rank\n{p},{q},{rank}\n")?,
            Format::Json => writeln!(out, "{}", json!({"p": p, "q": q, "free_rank": rank}))?,
        }
        return Ok(0);
    }
    emit_chart(
        out,
        &ChartDocument::from_formula(params, &chart),
        format,
        &title,
    )?;
    Ok(0)
}

fn cmd_verify(out: &mut String, selected: Vec<Check>, ranges: Ranges) -> Result<u8> {
    let checks = if selected.is_empty() {
        Check::ALL.to_vec()
    } else {
        selected
    };
    let options = SolveOptions::default();
    let mut failed = 0;
    for check in checks {
        let outcome = verify::run(check, &ranges, &options);
        writeln!(
            out,
            "{:<14} {:>8} passed {:>4} failed",
            check.name(),
            outcome.passed,
            outcome.failures.len()
        )?;
        for failure in &outcome.failures {
            writeln!(out, "  FAIL {failure}")?;
        }
        failed += outcome.failures.len();
    }
    Ok(if failed == 0 { 0 } else { EXIT_FAILED })
}

fn render(out: &mut String, path: Option<PathBuf>, format: Format) -> Result<u8> {
    let text = match path {
        Some(path) => {
            std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?
        }
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    let doc = ChartDocument::from_json(&text)?;
    let title = format!("{} chart ({})", doc.parameters.field, doc.certification);
    emit_chart(out, &doc, format, &title)?;
    Ok(0)
}

fn run(out: &mut String, cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Ingredients {
            k,
            signs,
            field,
            format,
        } => ingredients(out, k, &signs, field, format),
        Command::Solve {
            k,
            n,
            q,
            field,
            prefix_pruning,
            max_candidates,
            search_budget,
            no_dedup,
            diagnostics,
            format,
        } => {
            let options = SolveOptions {
                prefix_pruning,
                max_candidates,
                search_budget,
                dedup_tables: !no_dedup,
                ..SolveOptions::default()
            };
            cmd_solve(out, k, n, q, field, options, diagnostics, format)
        }
        Command::Formula {
            family,
            format,
            rank_at,
        } => formula(out, family, format, rank_at),
        Command::Verify {
            kn1,
            two_n2,
            weights,
            duality,
            appendix,
            stabilization,
            conservation,
            max_n,
            max_p,
            empty_range,
        } => {
            let flags = [
                kn1,
                two_n2,
                weights,
                duality,
                appendix,
                stabilization,
                conservation,
            ];
            let selected = Check::ALL
                .into_iter()
                .zip(flags)
                .filter_map(|(check, on)| on.then_some(check))
                .collect();
            let ranges = if empty_range {
                Ranges::empty()
            } else {
                Ranges::up_to(max_n, max_p)
            };
            cmd_verify(out, selected, ranges)
        }
        Command::Render { path, format } => render(out, path, format),
    }
}

fn flush(out: &str) {
    let mut stdout = io::stdout().lock();
    if let Err(err) = stdout
        .write_all(out.as_bytes())
        .and_then(|()| stdout.flush())
    {
        if err.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: {err}");
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let mut out = String::new();
    let result = run(&mut out, cli);
    flush(&out);
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
