//! Text and CSV renderings. Grids put dimension `p` on columns and weight `q`
//! on rows, highest weight first.

use std::collections::BTreeMap;
use std::fmt::Write;

use anyhow::{bail, Context, Result};
use grassrank::{CellTable, RankChart};

const CORNER: &str = "q\\p";
const EMPTY: &str = "(empty chart)";

fn layout<T>(cells: &BTreeMap<(i64, i64), T>, show: impl Fn(&T) -> String) -> String {
    let Some(p_max) = cells.keys().map(|c| c.0).max() else {
        return format!("{EMPTY}\n");
    };
    let p_min = cells.keys().map(|c| c.0).min().unwrap().min(0);
    let q_max = cells.keys().map(|c| c.1).max().unwrap().max(0);
    let q_min = cells.keys().map(|c| c.1).min().unwrap().min(0);

    let texts: BTreeMap<(i64, i64), String> = cells.iter().map(|(&at, v)| (at, show(v))).collect();
    let mut label_width = CORNER.len();
    for q in q_min..=q_max {
        label_width = label_width.max(q.to_string().len());
    }
    let widths: Vec<usize> = (p_min..=p_max)
        .map(|p| {
            (q_min..=q_max)
                .filter_map(|q| texts.get(&(p, q)).map(String::len))
                .fold(p.to_string().len(), usize::max)
        })
        .collect();

    let mut out = String::new();
    write!(out, "{CORNER:>label_width$}").unwrap();
    for (p, width) in (p_min..=p_max).zip(&widths) {
        write!(out, " {p:>width$}").unwrap();
    }
    out.push('\n');
    for q in (q_min..=q_max).rev() {
        write!(out, "{q:>label_width$}").unwrap();
        for (p, width) in (p_min..=p_max).zip(&widths) {
            let cell = texts.get(&(p, q)).map_or(".", String::as_str);
            write!(out, " {cell:>width$}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Multiplicity grid; empty bidegrees show as `.`.
pub fn render_grid(chart: &RankChart) -> String {
    let cells: BTreeMap<(i64, i64), u64> = chart
        .entries()
        .into_iter()
        .map(|(g, m)| ((g.p, g.q), m))
        .collect();
    layout(&cells, u64::to_string)
}

/// Reads a grid produced by [`render_grid`] back into nonzero multiplicities.
/// Lines before the header are skipped.
pub fn parse_grid(text: &str) -> Result<BTreeMap<(i64, i64), u64>> {
    let mut lines = text.lines().skip_while(|l| {
        let first = l.split_whitespace().next();
        first != Some(CORNER) && l.trim() != EMPTY
    });
    let Some(header) = lines.next() else {
        bail!("no grid header found");
    };
    let mut out = BTreeMap::new();
    if header.trim() == EMPTY {
        return Ok(out);
    }
    let columns: Vec<i64> = header
        .split_whitespace()
        .skip(1)
        .map(|t| t.parse().with_context(|| format!("bad column label {t:?}")))
        .collect::<Result<_>>()?;
    for line in lines {
        let mut tokens = line.split_whitespace();
        let Some(label) = tokens.next() else { break };
        let q: i64 = label
            .parse()
            .with_context(|| format!("bad row label {label:?}"))?;
        let row: Vec<&str> = tokens.collect();
        if row.len() != columns.len() {
            bail!(
                "row {q} has {} cells, expected {}",
                row.len(),
                columns.len()
            );
        }
        for (&p, cell) in columns.iter().zip(row) {
            if cell != "." {
                let count: u64 = cell.parse().with_context(|| format!("bad cell {cell:?}"))?;
                out.insert((p, q), count);
            }
        }
    }
    Ok(out)
}

pub fn render_csv(chart: &RankChart) -> String {
    let mut out = String::from("p,q,free_rank\n");
    for (g, m) in chart.entries() {
        writeln!(out, "{},{},{}", g.p, g.q, m).unwrap();
    }
    out
}

fn jumps_label(jumps: &[usize]) -> String {
    let inner: Vec<String> = jumps.iter().map(ToString::to_string).collect();
    format!("[{}]", inner.join(","))
}

/// Cell labels as jump sequences, placed at their bidegrees.
pub fn render_ingredients(table: &CellTable) -> String {
    let mut cells: BTreeMap<(i64, i64), Vec<String>> = BTreeMap::new();
    for entry in table.entries() {
        let jumps = entry
            .label
            .to_jumps(table.n())
            .expect("labels fit their box");
        cells
            .entry((entry.bidegree.p, entry.bidegree.q))
            .or_default()
            .push(jumps_label(jumps.jumps()));
    }
    layout(&cells, |labels| labels.join(" "))
}

pub fn ingredients_csv(table: &CellTable) -> String {
    let mut out = String::from("partition,jumps,p,q\n");
    for entry in table.entries() {
        let jumps = entry
            .label
            .to_jumps(table.n())
            .expect("labels fit their box");
        let parts: Vec<String> = entry
            .label
            .parts()
            .iter()
            .map(ToString::to_string)
            .collect();
        let js: Vec<String> = jumps.jumps().iter().map(ToString::to_string).collect();
        writeln!(
            out,
            "{},{},{},{}",
            parts.join(" "),
            js.join(" "),
            entry.bidegree.p,
            entry.bidegree.q
        )
        .unwrap();
    }
    out
}
