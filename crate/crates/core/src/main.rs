use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use leadterms::characters::{borcea_compare, principal_character, vacuum_character, DominantWeight};
use leadterms::conditions::{builtin, candidates_of_length, compare_with_character, count_series, ConditionSet};
use leadterms::echelon::{
    leading_terms, parse_descriptor_lines, reduce_with_certificates, scan, LeadingTermReport,
    MaxPartRule, RelationMatrix, ScanConfig,
};
use leadterms::vertexrel::{generate_relation, DescriptorOptions, RelationDescriptor};
use leadterms::{Error, Partition};

#[derive(Parser)]
#[command(name = "leadterms", version, about = "Leading terms of relations on the level 5 A2(2) module")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Tsv,
    Json,
}

#[derive(Args)]
struct FormatArg {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Expand one relation, e.g. `S(-11)X(-3)`.
    Relation {
        descriptor: String,
        #[arg(long, default_value_t = 6)]
        max_part: u32,
        /// Psi expansion order (default: exactly what the cutoff needs).
        #[arg(long)]
        psi_order: Option<usize>,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Row-reduce relation matrices and report their pivots.
    Scan {
        /// A degree `14` or an inclusive range `12..20`.
        #[arg(long, default_value = "14")]
        degree: String,
        /// Comma separated lengths.
        #[arg(long, default_value = "4", value_delimiter = ',')]
        length: Vec<usize>,
        /// Largest part allowed in the columns (default: no bound).
        #[arg(long)]
        max_part: Option<u32>,
        /// Skip cells with more descriptors than this.
        #[arg(long)]
        budget: Option<usize>,
        /// Smallest p of an R or S factor.
        #[arg(long, default_value_t = 6)]
        min_p: u32,
        /// JSON-lines descriptor file; replaces the enumeration.
        #[arg(long)]
        descriptors: Option<PathBuf>,
        /// Condition set: builtin name or file.
        #[arg(long, default_value = "a22-level5")]
        set: String,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Count admissible partitions and compare with a character.
    Gseries {
        #[arg(long, default_value = "a22-level5")]
        set: String,
        #[arg(long, default_value_t = 48)]
        order: usize,
        /// Weight `m0,m1` whose character (without the Heisenberg factor) is compared.
        #[arg(long, default_value = "5,0")]
        weight: String,
        /// Instead list the admissible partitions of weight `order` with this many parts.
        #[arg(long)]
        candidates: Option<usize>,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Principally specialized character of the weight `m0,m1`.
    Character {
        #[arg(long, default_value = "5,0")]
        weight: String,
        #[arg(long, default_value_t = 50)]
        order: usize,
        /// Drop the Heisenberg factor.
        #[arg(long)]
        vacuum: bool,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Compare the A1(1) level 2 count with the level 5 character.
    Borcea {
        #[arg(long, default_value_t = 50)]
        order: usize,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Run the reproduction checks.
    Verify {
        /// Condition file replacing the builtin `a22-level5`.
        #[arg(long, default_value = "a22-level5")]
        set: String,
    },
}

fn load_set(name: &str) -> Result<ConditionSet, Error> {
    match builtin(name) {
        Ok(cs) => Ok(cs),
        Err(e) => {
            let path = Path::new(name);
            if path.exists() {
                ConditionSet::load(path)
            } else {
                Err(e)
            }
        }
    }
}

fn parse_weight(s: &str) -> Result<DominantWeight, Error> {
    let bad = || Error::Parse(format!("weight `{s}`: expected m0,m1"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    let m0: u32 = a.trim().parse().map_err(|_| bad())?;
    let m1: u32 = b.trim().parse().map_err(|_| bad())?;
    if m0 + 2 * m1 == 0 {
        return Err(Error::Parse("weight of level 0".into()));
    }
    Ok(DominantWeight::new(m0, m1))
}

fn parse_degrees(s: &str) -> Result<std::ops::RangeInclusive<u32>, Error> {
    let bad = || Error::Parse(format!("degree `{s}`: expected N or A..B"));
    match s.split_once("..") {
        Some((a, b)) => {
            let a = a.trim().parse().map_err(|_| bad())?;
            let b = b.trim_start_matches('=').trim().parse().map_err(|_| bad())?;
            Ok(a..=b)
        }
        None => {
            let d = s.trim().parse().map_err(|_| bad())?;
            Ok(d..=d)
        }
    }
}

fn join_parts(ps: &[Partition]) -> String {
    ps.iter().map(Partition::to_string).collect::<Vec<_>>().join(" ")
}

fn render_reports(reports: &[LeadingTermReport], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(reports).expect("reports serialize") + "\n",
        Format::Tsv => {
            let mut s = String::from("degree\tlength\tmax_part\tpivot\tnew\tmatched\n");
            for r in reports {
                if r.budget_exceeded {
                    let _ = writeln!(s, "{}\t{}\t{}\tBUDGET_EXCEEDED\t\t", r.degree, r.length, r.max_part);
                }
                for p in &r.pivots {
                    let matched = r
                        .matched_conditions
                        .iter()
                        .find(|(q, _)| q == p)
                        .map(|(_, ids)| ids.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
                        .unwrap_or_default();
                    let _ = writeln!(
                        s,
                        "{}\t{}\t{}\t{}\t{}\t{}",
                        r.degree,
                        r.length,
                        r.max_part,
                        p,
                        r.new_pivots.contains(p),
                        matched
                    );
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                let _ = write!(
                    s,
                    "degree {} length {} max part {}: {} relations, {} columns",
                    r.degree, r.length, r.max_part, r.relations, r.columns
                );
                if r.budget_exceeded {
                    s.push_str(", budget exceeded\n");
                    continue;
                }
                let _ = writeln!(s, ", rank {}", r.pivots.len());
                let _ = writeln!(s, "  pivots: {}", join_parts(&r.pivots));
                let _ = writeln!(s, "  new:    {}", join_parts(&r.new_pivots));
                for (p, ids) in &r.matched_conditions {
                    let _ = writeln!(s, "  {p} matches {ids:?}");
                }
            }
            s
        }
    }
}

fn replay_descriptors(
    path: &Path,
    max_part: Option<u32>,
    cs: &ConditionSet,
    format: Format,
) -> Result<String, Error> {
    let ds = parse_descriptor_lines(&std::fs::read_to_string(path)?)?;
    let first = ds
        .first()
        .ok_or_else(|| Error::Parse(format!("{}: no descriptors", path.display())))?;
    let degree = first.descriptor.degree();
    let length = first.descriptor.length();
    let mp = max_part.map_or(MaxPartRule::Full, MaxPartRule::Fixed).resolve(degree, length);
    let m = RelationMatrix::from_descriptors(degree, length, mp, &ds)?;
    let reduced = reduce_with_certificates(&m).reduced;
    let report = leading_terms(&m, mp, cs);
    Ok(match format {
        Format::Json => {
            let v = json!({"matrix": m, "reduced": reduced, "report": report});
            serde_json::to_string_pretty(&v)? + "\n"
        }
        Format::Tsv => format!("{}\n{}", m.to_tsv(), reduced.to_tsv()),
        Format::Text => format!(
            "{}\n{}\n{}",
            m.to_tsv(),
            reduced.to_tsv(),
            render_reports(std::slice::from_ref(&report), Format::Text)
        ),
    })
}

fn comparison_table(rows: impl Iterator<Item = (usize, i64, i64)>, left: &str, format: Format) -> String {
    let rows: Vec<(usize, i64, i64)> = rows.collect();
    match format {
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|(n, a, b)| json!({"n": n, left: a, "chi": b, "delta": a - b}))
                .collect();
            serde_json::to_string_pretty(&v).expect("table serializes") + "\n"
        }
        Format::Tsv => {
            let mut s = format!("n\t{left}\tchi\tdelta\n");
            for (n, a, b) in rows {
                let _ = writeln!(s, "{n}\t{a}\t{b}\t{}", a - b);
            }
            s
        }
        Format::Text => {
            let mut s = format!("{:>4} {:>12} {:>12} {:>6}\n", "n", left, "chi", "delta");
            for (n, a, b) in rows {
                let _ = writeln!(s, "{n:>4} {a:>12} {b:>12} {:>6}", a - b);
            }
            s
        }
    }
}

fn run(cli: &Cli) -> Result<(String, bool), Error> {
    let ok = |s: String| Ok((s, true));
    match &cli.command {
        Command::Relation {
            descriptor,
            max_part,
            psi_order,
            fmt,
        } => {
            let d: RelationDescriptor = descriptor.parse()?;
            let order = psi_order.unwrap_or_else(|| d.required_psi_order(*max_part));
            let rel = generate_relation(&d, *max_part, order)?.pruned();
            match fmt.format {
                Format::Text => ok(rel.to_pairs_text()),
                Format::Tsv => {
                    let cols = leadterms::partition::partitions_in_box(
                        rel.degree,
                        rel.length,
                        2,
                        *max_part,
                    );
                    ok(rel.to_tsv(&cols))
                }
                Format::Json => ok(serde_json::to_string_pretty(&rel)? + "\n"),
            }
        }
        Command::Scan {
            degree,
            length,
            max_part,
            budget,
            min_p,
            descriptors,
            set,
            fmt,
        } => {
            let cs = load_set(set)?;
            if let Some(path) = descriptors {
                return ok(replay_descriptors(path, *max_part, &cs, fmt.format)?);
            }
            let config = ScanConfig {
                degrees: parse_degrees(degree)?,
                lengths: length.clone(),
                max_part: max_part.map_or(MaxPartRule::Full, MaxPartRule::Fixed),
                descriptor_budget: *budget,
                descriptors: DescriptorOptions {
                    min_p: *min_p,
                    ..DescriptorOptions::default()
                },
            };
            let reports = scan(&config, &cs)?;
            ok(render_reports(&reports, fmt.format))
        }
        Command::Gseries {
            set,
            order,
            weight,
            candidates,
            fmt,
        } => {
            let cs = load_set(set)?;
            if let Some(len) = candidates {
                let found = candidates_of_length(*order as u32, *len, &cs);
                return ok(match fmt.format {
                    Format::Json => serde_json::to_string_pretty(&found)? + "\n",
                    _ => found.iter().map(|p| format!("{p}\n")).collect(),
                });
            }
            let w = parse_weight(weight)?;
            let chi = vacuum_character(w, *order);
            let rows = compare_with_character(&cs, &chi, *order);
            if matches!(fmt.format, Format::Json) {
                let v = json!({"set": cs.name, "series": count_series(&cs, *order), "comparison": rows});
                return ok(serde_json::to_string_pretty(&v)? + "\n");
            }
            ok(comparison_table(rows.iter().map(|r| (r.n, r.count, r.chi)), "count", fmt.format))
        }
        Command::Character {
            weight,
            order,
            vacuum,
            fmt,
        } => {
            let w = parse_weight(weight)?;
            let s = if *vacuum {
                vacuum_character(w, *order)
            } else {
                principal_character(w, *order)
            };
            match fmt.format {
                Format::Text => ok(format!("{s}\n")),
                Format::Tsv => ok(s.coeffs().iter().enumerate().map(|(n, c)| format!("{n}\t{c}\n")).collect()),
                Format::Json => {
                    let v = json!({
                        "weight": w,
                        "specialization": leadterms::characters::specialization_data(w),
                        "series": s,
                    });
                    ok(serde_json::to_string_pretty(&v)? + "\n")
                }
            }
        }
        Command::Borcea { order, fmt } => {
            let rows = borcea_compare(*order);
            ok(comparison_table(
                rows.iter().map(|r| (r.n, r.a1_count as i64, r.chi as i64)),
                "a1_count",
                fmt.format,
            ))
        }
        Command::Verify { set } => {
            let cs = match load_set(set) {
                Ok(cs) => cs,
                Err(e) => return Ok((format!("FAIL condition set `{set}`: {e}\n"), false)),
            };
            let outcomes = leadterms::verify::run_all(&cs);
            let mut s = String::new();
            for o in &outcomes {
                let _ = writeln!(
                    s,
                    "{} {:>2} {:<24} {:>8} ms  {}",
                    if o.passed { "PASS" } else { "FAIL" },
                    o.id,
                    o.name,
                    o.millis,
                    o.detail
                );
            }
            let all = outcomes.iter().all(|o| o.passed);
            if let Some(dir) = &cli.out {
                std::fs::create_dir_all(dir)?;
                std::fs::write(dir.join("verify.json"), serde_json::to_string_pretty(&outcomes)?)?;
            }
            Ok((s, all))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok((text, passed)) => {
            let written = match (&cli.out, &cli.command) {
                (Some(_), Command::Verify { .. }) | (None, _) => {
                    print!("{text}");
                    Ok(())
                }
                (Some(path), _) => path
                    .parent()
                    .filter(|p| !p.as_os_str().is_empty())
                    .map_or(Ok(()), std::fs::create_dir_all)
                    .and_then(|()| std::fs::write(path, &text)),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
