use std::collections::BTreeSet;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use toric_core::arrangement;
use toric_core::classify::{biacyclic_failure, is_king};
use toric_core::cohomology::{cohomology_with_witnesses, euler_char_rr};
use toric_core::{
    cohomology, enumerate_biacyclic, find_sequences, membership, verify_counterexample,
    ClassificationTable, CoeffBox, NamedSurface, Verdict, VerifyOptions,
};

mod input;

use input::{load_fan, parse_divisor, read_fan_file};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Line-bundle cohomology and exceptional sequences on toric surfaces.
///
/// Parallel scans use all cores; set RAYON_NUM_THREADS to change that.
/// Output does not depend on the thread count.
#[derive(Debug, Parser)]
#[command(name = "toric", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fan validation and built-in surfaces.
    #[command(subcommand)]
    Fan(FanCommand),
    /// Dimensions of H^0, H^1, H^2 of a line bundle.
    Cohom {
        #[arg(long)]
        fan: String,
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
        /// Also list the lattice points that contribute.
        #[arg(long)]
        witnesses: bool,
    },
    /// Euler characteristic from the scan and from Riemann-Roch.
    Chi {
        #[arg(long)]
        fan: String,
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
    },
    /// Whether D and -D both have vanishing higher cohomology.
    Acyclic {
        #[arg(long)]
        fan: String,
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
    },
    /// All bi-acyclic classes with |c_i| <= BOX.
    Classify {
        #[arg(long)]
        fan: String,
        #[arg(long = "box", required_unless_present = "table")]
        bound: Option<i64>,
        /// Only classes whose last free coefficient equals this.
        #[arg(long, allow_hyphen_values = true)]
        c5: Option<i64>,
        /// Print the closed-form table instead of scanning (king only).
        #[arg(long)]
        table: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Strongly exceptional sequences containing O with members in the box.
    Search {
        #[arg(long)]
        fan: String,
        /// Sequence length; defaults to the number of rays.
        #[arg(long)]
        length: Option<usize>,
        #[arg(long = "box")]
        bound: i64,
    },
    /// Certificate that the king-counterexample surface has no strongly
    /// exceptional sequence of 7 line bundles.
    VerifyKing {
        /// Validation box bound on |c_1..c_4|.
        #[arg(long = "box", default_value_t = 12)]
        bound: i64,
        /// Validation box bound on |c_5|.
        #[arg(long, default_value_t = 4)]
        c5_box: i64,
        /// Largest k of B_{r,k} used by the enumerations.
        #[arg(long, default_value_t = 10)]
        kmax: i64,
        /// Box bound for the corroborating direct search.
        #[arg(long, default_value_t = 8)]
        search_box: i64,
        /// Claim ids to skip.
        #[arg(long, value_delimiter = ',')]
        skip: Vec<u8>,
    },
    /// Walls and vertices of the arrangement l_i(m) + c_i = 0.
    Arrangement {
        #[arg(long)]
        fan: String,
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
        #[arg(long, value_enum)]
        emit: Emit,
    },
}

#[derive(Debug, Subcommand)]
enum FanCommand {
    /// Check a fan file.
    Validate {
        #[arg(long)]
        file: PathBuf,
    },
    /// Print a built-in fan, optionally blown up.
    Builtin {
        #[arg(long)]
        name: String,
        /// Blow up the cone between rays i and i+1 (1-based); repeatable.
        #[arg(long)]
        blowup: Vec<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Lines,
    Vertices,
}

struct Output {
    format: Format,
}

impl Output {
    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) -> Result<()> {
        let line = match self.format {
            Format::Json => serde_json::to_string(value)?,
            Format::Text => text(),
        };
        writeln!(std::io::stdout().lock(), "{line}")?;
        Ok(())
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|cause| {
        let io = cause.downcast_ref::<io::Error>().or_else(|| {
            match cause.downcast_ref::<csv::Error>()?.kind() {
                csv::ErrorKind::Io(io) => Some(io),
                _ => None,
            }
        });
        io.is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let out = Output { format: cli.format };
    match cli.command {
        Command::Fan(FanCommand::Validate { file }) => match read_fan_file(&file) {
            Ok(fan) => {
                let k = fan.canonical_divisor();
                let k2 = k.intersect(&k)?;
                let report = json!({
                    "valid": true,
                    "rays": fan.len(),
                    "picard_rank": fan.picard_rank(),
                    "k_squared": k2,
                });
                out.emit(&report, || {
                    format!(
                        "valid: {} rays, Picard rank {}, K^2 = {k2}",
                        fan.len(),
                        fan.picard_rank()
                    )
                })?;
                Ok(ExitCode::SUCCESS)
            }
            Err(e) => {
                let msg = format!("{e:#}");
                out.emit(&json!({ "valid": false, "error": msg }), || {
                    format!("invalid: {msg}")
                })?;
                Ok(ExitCode::from(EXIT_FAIL))
            }
        },
        Command::Fan(FanCommand::Builtin { name, blowup }) => {
            let mut fan: toric_core::Fan = name.parse::<NamedSurface>()?.build();
            for i in blowup {
                anyhow::ensure!(
                    (1..=fan.len()).contains(&i),
                    "blowup index {i} is outside 1..={}",
                    fan.len()
                );
                fan = fan.blowup(i - 1);
            }
            out.emit(&fan, || fan.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Cohom {
            fan,
            divisor,
            witnesses,
        } => {
            let fan = load_fan(&fan)?;
            let d = parse_divisor(&fan, &divisor)?;
            if witnesses {
                let (h, ws) = cohomology_with_witnesses(&d);
                out.emit(&json!({ "h": h, "witnesses": ws }), || {
                    let mut s = format!("h0={} h1={} h2={}", h.h0, h.h1, h.h2);
                    for w in &ws {
                        s.push_str(&format!("\n{} {} {}", w.m, w.signature, w.contribution));
                    }
                    s
                })?;
            } else {
                let h = cohomology(&d);
                out.emit(&json!({ "h": h }), || {
                    format!("h0={} h1={} h2={}", h.h0, h.h1, h.h2)
                })?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Chi { fan, divisor } => {
            let fan = load_fan(&fan)?;
            let d = parse_divisor(&fan, &divisor)?;
            let chi = cohomology(&d).euler();
            let rr = euler_char_rr(&d);
            out.emit(&json!({ "chi": chi, "riemann_roch": rr }), || {
                format!("chi = {chi} (Riemann-Roch: {rr})")
            })?;
            Ok(if chi == rr {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            })
        }
        Command::Acyclic { fan, divisor } => {
            let fan = load_fan(&fan)?;
            let d = parse_divisor(&fan, &divisor)?;
            let failure = biacyclic_failure(&d);
            let label = if is_king(&fan) { membership(&d)? } else { None };
            let report = json!({
                "biacyclic": failure.is_none(),
                "label": label.map(|l| l.to_string()),
                "failure": failure,
            });
            out.emit(&report, || match (&failure, label) {
                (None, Some(l)) => format!("bi-acyclic ({l})"),
                (None, None) => "bi-acyclic".to_string(),
                (Some(f), _) => format!(
                    "not bi-acyclic: {} has {} at m = {} ({})",
                    if f.dual { "-D" } else { "D" },
                    f.contribution,
                    f.m,
                    f.signature
                ),
            })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify {
            fan,
            bound,
            c5,
            table,
            csv,
        } => {
            let fan = load_fan(&fan)?;
            if table {
                anyhow::ensure!(
                    is_king(&fan),
                    "--table is only available for the king surface"
                );
                return classify_table(&out, csv);
            }
            let bx = CoeffBox::symmetric(fan.picard_rank(), bound.unwrap_or_default());
            let classes = enumerate_biacyclic(&fan, &bx, c5)?;
            let table = is_king(&fan).then(ClassificationTable::king);
            let rows: Vec<(Option<String>, Vec<i64>)> = classes
                .iter()
                .map(|c| {
                    let label = table
                        .as_ref()
                        .and_then(|t| t.label_of(c.free_coeffs()))
                        .map(|l| l.to_string());
                    (label, c.coeffs().to_vec())
                })
                .collect();
            if csv {
                write_csv(
                    rows.iter()
                        .map(|(l, c)| (l.clone().unwrap_or_default(), c.clone())),
                )?;
            } else {
                let json_rows: Vec<_> = rows
                    .iter()
                    .map(|(l, c)| json!({ "label": l, "coeffs": c }))
                    .collect();
                out.emit(&json_rows, || {
                    rows.iter()
                        .map(|(l, c)| format!("{:<10} {c:?}", l.as_deref().unwrap_or("-")))
                        .collect::<Vec<_>>()
                        .join("\n")
                })?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Search { fan, length, bound } => {
            let fan = load_fan(&fan)?;
            let length = length.unwrap_or(fan.len());
            let bx = CoeffBox::symmetric(fan.picard_rank(), bound);
            let found = find_sequences(&fan, length, &bx)?;
            out.emit(&json!({ "length": length, "sequences": found }), || {
                let mut s = format!("{} sequence(s) of length {length}", found.len());
                for seq in &found {
                    s.push_str(&format!("\n{:?}", seq.classes));
                }
                s
            })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyKing {
            bound,
            c5_box,
            kmax,
            search_box,
            skip,
        } => {
            let opts = VerifyOptions {
                validation_box: CoeffBox::king(bound, c5_box),
                k_bound: kmax,
                search_box: CoeffBox::symmetric(5, search_box),
                skip: skip.into_iter().collect::<BTreeSet<u8>>(),
            };
            let cert = verify_counterexample(&opts).context("certificate run aborted")?;
            out.emit(&cert, || {
                let mut s = String::new();
                for c in &cert.claims {
                    s.push_str(&format!("claim {} {:?}: {}\n", c.id, c.result, c.statement));
                    if let Some(w) = &c.witness {
                        s.push_str(&format!("  witness: {w}\n"));
                    }
                }
                for a in &cert.cited_assumptions {
                    s.push_str(&format!("cited assumption: {a}\n"));
                }
                for g in &cert.gaps {
                    s.push_str(&format!("gap: {g}\n"));
                }
                s.push_str(&format!("verdict: {:?}", cert.verdict));
                s
            })?;
            Ok(if cert.verdict == Verdict::Pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAIL)
            })
        }
        Command::Arrangement { fan, divisor, emit } => {
            let fan = load_fan(&fan)?;
            let d = parse_divisor(&fan, &divisor)?;
            match emit {
                Emit::Lines => {
                    let ls = arrangement::lines(&d);
                    out.emit(&ls, || {
                        ls.iter()
                            .map(|l| format!("{} {} {} {}", l.ray, l.a, l.b, l.c))
                            .collect::<Vec<_>>()
                            .join("\n")
                    })?;
                }
                Emit::Vertices => {
                    let vs = arrangement::vertices(&d);
                    out.emit(&vs, || {
                        vs.iter()
                            .map(|v| format!("{} {} {:?}", v.u.0, v.v.0, v.rays))
                            .collect::<Vec<_>>()
                            .join("\n")
                    })?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn classify_table(out: &Output, csv: bool) -> Result<ExitCode> {
    let rows = ClassificationTable::king().rows();
    if csv {
        let mut w = csv::Writer::from_writer(std::io::stdout());
        w.write_record(["label", "kind", "coeffs", "step", "k_min"])?;
        for row in &rows {
            let value = serde_json::to_value(row)?;
            let join = |key: &str| {
                value[key]
                    .as_array()
                    .map(|a| {
                        a.iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .unwrap_or_default()
            };
            let label = value["label"].as_str().unwrap_or_default().to_string();
            if value.get("base").is_some() {
                w.write_record([
                    label,
                    "series".into(),
                    join("base"),
                    join("step"),
                    value["k_min"].to_string(),
                ])?;
            } else {
                w.write_record([
                    label,
                    "class".into(),
                    join("coeffs"),
                    String::new(),
                    String::new(),
                ])?;
            }
        }
        w.flush()?;
    } else {
        out.emit(&rows, || {
            rows.iter()
                .map(|r| serde_json::to_string(r).unwrap_or_default())
                .collect::<Vec<_>>()
                .join("\n")
        })?;
    }
    Ok(ExitCode::SUCCESS)
}

fn write_csv(rows: impl Iterator<Item = (String, Vec<i64>)>) -> Result<()> {
    let mut w = csv::Writer::from_writer(std::io::stdout());
    let mut header_written = false;
    for (label, coeffs) in rows {
        if !header_written {
            let mut header = vec!["label".to_string()];
            header.extend((1..=coeffs.len()).map(|i| format!("c{i}")));
            w.write_record(&header)?;
            header_written = true;
        }
        let mut record = vec![label];
        record.extend(coeffs.iter().map(i64::to_string));
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}
