//! Density tables as CSV or JSON.
//!
//! CSV columns, in order: `n,ex,scale,density,certified`. `scale` is `|G| C(n,2)` and
//! `density = ex / scale`; `certified` is `false` when the budget ran out and `ex` is
//! only a lower bound.

use crate::{emit, write_stdout, EngineArgs, Outcome, EXIT_BUDGET, EXIT_CLAIM};
use anyhow::Context;
use clap::{Args, ValueEnum};
use dowling::descriptor::MatroidDescriptor;
use dowling::extremal::{density_table, is_non_increasing, DensityRow};
use dowling::GroupTable;
use serde::{Deserialize, Serialize};
use std::path::PathBuf;

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args)]
pub struct TableArgs {
    #[arg(long, required_unless_present = "check")]
    group: Option<String>,
    #[arg(long, required_unless_present = "check")]
    forbid: Option<MatroidDescriptor>,
    #[arg(long, default_value_t = 4)]
    n_max: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Read a CSV table instead of computing one, and check it.
    #[arg(long, conflicts_with_all = ["group", "forbid"])]
    check: Option<PathBuf>,
    #[command(flatten)]
    engine: EngineArgs,
}

/// One CSV record.
#[derive(Debug, Serialize, Deserialize)]
struct Record {
    n: usize,
    ex: usize,
    scale: usize,
    density: f64,
    certified: bool,
}

impl From<&DensityRow> for Record {
    fn from(r: &DensityRow) -> Self {
        Record { n: r.n, ex: r.ex, scale: r.scale, density: r.density, certified: r.certified }
    }
}

impl From<Record> for DensityRow {
    fn from(r: Record) -> Self {
        DensityRow { n: r.n, ex: r.ex, density: r.density, certified: r.certified, scale: r.scale }
    }
}

fn read_csv(path: &PathBuf) -> anyhow::Result<Vec<DensityRow>> {
    let mut reader = csv::Reader::from_path(path).with_context(|| format!("reading {}", path.display()))?;
    let mut rows = Vec::new();
    for rec in reader.deserialize::<Record>() {
        let rec = rec.context("row does not match the schema n,ex,scale,density,certified")?;
        anyhow::ensure!(rec.scale > 0, "row n = {} has scale 0", rec.n);
        rows.push(DensityRow::from(rec));
    }
    Ok(rows)
}

fn write_csv(rows: &[DensityRow]) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(Record::from(r))?;
    }
    write_stdout(&w.into_inner()?)
}

pub fn run(args: TableArgs) -> Outcome {
    let rows = match &args.check {
        Some(path) => read_csv(path)?,
        None => {
            let group = GroupTable::from_label(args.group.as_deref().expect("required by clap"))?;
            let forbid = args.forbid.clone().expect("required by clap");
            density_table(&group, &forbid, args.n_max, &args.engine.search())?
        }
    };
    match args.format {
        Format::Csv => write_csv(&rows)?,
        Format::Json => emit(&rows)?,
    }
    let monotone = is_non_increasing(&rows);
    let uncertified: Vec<usize> = rows.iter().filter(|r| !r.certified).map(|r| r.n).collect();
    if !monotone {
        eprintln!("densities increase somewhere in the table");
        return Ok(EXIT_CLAIM);
    }
    if !uncertified.is_empty() {
        eprintln!("rows n = {uncertified:?} are lower bounds only");
        return Ok(EXIT_BUDGET);
    }
    Ok(0)
}
