//! The `pascal-adic` command line: one subcommand per operation, JSON out.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::coding::{self, bits_to_string};
use crate::dyadic::DyadicWord;
use crate::error::Error;
use crate::metrics::{self, CutSemimetric, Dynamics};
use crate::pascal::{self, TowerPoint};

pub const SCHEMA: &str = "pascal-adic/1";

pub(crate) fn ser_display<T: std::fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "pascal-adic", version, about = "Pascal adic automorphism toolkit")]
struct Cli {
    /// RNG seed (overridden by PASCAL_ADIC_SEED)
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Bits per sampled point
    #[arg(long = "truncation", global = true, default_value_t = 256)]
    truncation: usize,
    /// Refinement depth for cylinder enumeration (overridden by PASCAL_ADIC_MAXDEPTH)
    #[arg(long, global = true)]
    max_depth: Option<usize>,
    /// Largest binomial table row
    #[arg(long, global = true, default_value_t = 64)]
    max_binomial: usize,
    /// Longest sequence or supporting word emitted
    #[arg(long, global = true, default_value_t = 1 << 24)]
    max_len: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of standard output
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Successive images under the Pascal automorphism
    Orbit {
        #[arg(long)]
        start: String,
        #[arg(long)]
        steps: u64,
    },
    /// The supporting word O(m, k)
    SupportingWord {
        #[arg(short)]
        m: u64,
        #[arg(short)]
        k: u64,
    },
    /// The time change n(x)
    Jump {
        #[arg(long)]
        point: String,
    },
    /// n(x + t) for |t| <= width
    Substitution {
        #[arg(long)]
        center: String,
        #[arg(long)]
        width: u64,
    },
    /// Steps of the tower with ceiling n(x)
    Tower {
        #[arg(long)]
        start: String,
        #[arg(long)]
        steps: u64,
        #[arg(long, default_value_t = 0)]
        height: u64,
    },
    /// Coded orbit y_j = first bit of P^j x, for from <= j <= to
    Encode {
        #[arg(long)]
        point: String,
        #[arg(long = "from", allow_hyphen_values = true)]
        lo: i64,
        #[arg(long = "to", allow_hyphen_values = true)]
        hi: i64,
    },
    /// Prefix of the exotic sequence
    Exotic {
        #[arg(long)]
        len: usize,
    },
    /// Exact measures of the length-n cylinders
    Cylinders {
        #[arg(long = "n")]
        n: usize,
    },
    /// Number of words of each length up to max
    Complexity {
        #[arg(long)]
        max: usize,
    },
    /// Truncated BH distance to periodic sequences
    BhScan {
        /// exotic, morse, or encode:<word>
        #[arg(long)]
        source: String,
        #[arg(long)]
        max_period: usize,
        #[arg(long)]
        window: usize,
        #[arg(long)]
        subword_periods: bool,
    },
    /// Orbit averages of the first-bit cut semimetric over random pairs
    AvgMetric {
        #[arg(long, default_value = "pascal")]
        dynamics: String,
        #[arg(long)]
        pairs: usize,
        #[arg(long)]
        steps: usize,
    },
    /// Greedy epsilon-net sizes under averaged metrics
    Entropy {
        #[arg(long)]
        epsilon: f64,
        #[arg(long, value_delimiter = ',', required = true)]
        horizons: Vec<usize>,
        #[arg(long, default_value = "pascal")]
        dynamics: String,
        #[arg(long, default_value_t = 64)]
        points: usize,
    },
}

/// Settings shared by all subcommands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub seed: u64,
    pub truncation: usize,
    pub max_binomial: usize,
    pub max_depth: Option<usize>,
    pub max_len: usize,
    pub format: Format,
    pub output: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse(_) => Failure::Usage(e.to_string()),
            e => Failure::Domain(e),
        }
    }
}

type Run<T> = std::result::Result<T, Failure>;

fn env_override<T: std::str::FromStr>(name: &str, current: T) -> Run<T> {
    match std::env::var(name) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{name}={v:?} is not a valid value"))),
        Err(_) => Ok(current),
    }
}

impl RunConfig {
    fn from_cli(cli: &Cli) -> Run<RunConfig> {
        let seed = env_override("PASCAL_ADIC_SEED", cli.seed)?;
        let max_depth = match std::env::var("PASCAL_ADIC_MAXDEPTH") {
            Ok(_) => Some(env_override("PASCAL_ADIC_MAXDEPTH", 0usize)?),
            Err(_) => cli.max_depth,
        };
        let cfg = RunConfig {
            seed,
            truncation: cli.truncation,
            max_binomial: cli.max_binomial,
            max_depth,
            max_len: cli.max_len,
            format: cli.format,
            output: cli.output.clone(),
        };
        if cfg.truncation < 8 {
            return Err(Failure::Usage(format!("--truncation {} is below 8", cfg.truncation)));
        }
        if cfg.max_binomial == 0 || cfg.max_len == 0 || cfg.max_depth == Some(0) {
            return Err(Failure::Usage("size bounds must be positive".into()));
        }
        Ok(cfg)
    }
}

fn parse_word(s: &str) -> Run<DyadicWord> {
    s.parse::<DyadicWord>().map_err(|e| Failure::Usage(format!("bad word {s:?}: {e}")))
}

fn parse_dynamics(s: &str) -> Run<Dynamics> {
    s.parse().map_err(|e: Error| Failure::Usage(e.to_string()))
}

fn record(mut v: Value) -> Value {
    v.as_object_mut().expect("records are objects").insert("schema".into(), json!(SCHEMA));
    v
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

fn json_lines(records: &[Value]) -> Vec<u8> {
    let mut out = Vec::new();
    for r in records {
        serde_json::to_writer(&mut out, r).expect("json");
        out.push(b'\n');
    }
    out
}

fn run(cli: &Cli, cfg: &RunConfig) -> Run<Vec<u8>> {
    if cfg.format == Format::Csv && !matches!(cli.command, Command::Cylinders { .. }) {
        return Err(Failure::Usage("csv output is only available for cylinders".into()));
    }
    let records = match &cli.command {
        Command::Orbit { start, steps } => {
            let mut x = parse_word(start)?;
            let mut recs = Vec::with_capacity(*steps as usize + 1);
            for step in 0..=*steps {
                let j = if step < *steps {
                    Some(pascal::jump(&x)?)
                } else {
                    pascal::jump(&x).ok()
                };
                recs.push(record(json!({
                    "step": step,
                    "word": x.to_string(),
                    "jump": j.map(|j| j.value.to_string()),
                })));
                if step < *steps {
                    pascal::successor_mut(&mut x)?;
                }
            }
            recs
        }
        Command::SupportingWord { m, k } => {
            let w = pascal::supporting_word_bounded(*m, *k, cfg.max_len as u64)?;
            vec![record(json!({"m": m, "k": k, "length": w.len(), "word": w.to_bit_string()}))]
        }
        Command::Jump { point } => {
            let x = parse_word(point)?;
            let j = pascal::jump(&x)?;
            vec![record(json!({
                "step": 0, "word": x.to_string(), "jump": j.value.to_string(), "m": j.m, "k": j.k,
            }))]
        }
        Command::Substitution { center, width } => {
            let x = parse_word(center)?;
            let win = pascal::substitution_window(&x, *width)?;
            win.image
                .iter()
                .map(|(t, n)| {
                    let word = x.add_i64(*t).map(|w| w.to_string());
                    Ok(record(json!({
                        "step": t,
                        "word": word?,
                        "jump": n.to_string(),
                        "successor_offset": win.successor_offset(*t).map(|s| s.to_string()),
                    })))
                })
                .collect::<Run<Vec<_>>>()?
        }
        Command::Tower { start, steps, height } => {
            let mut p = TowerPoint::new(parse_word(start)?, BigUint::from(*height))?;
            let mut recs = Vec::new();
            for step in 0..=*steps {
                let ceiling = pascal::jump(&p.base).ok().map(|j| j.value.to_string());
                recs.push(record(json!({
                    "step": step, "word": p.base.to_string(), "height": p.height.to_string(), "jump": ceiling,
                })));
                if step < *steps {
                    p = pascal::tower_step(&p)?;
                }
            }
            recs
        }
        Command::Encode { point, lo, hi } => {
            let x = parse_word(point)?;
            if (hi - lo) as u128 >= cfg.max_len as u128 {
                return Err(Error::TooLarge(format!("window of {} symbols", hi - lo + 1)).into());
            }
            let w = coding::encode(&x, *lo, *hi)?;
            vec![record(json!({"point": x.to_string(), "lo": w.lo, "hi": w.hi, "symbols": bits_to_string(&w.symbols)}))]
        }
        Command::Exotic { len } => {
            if *len > cfg.max_len {
                return Err(Error::TooLarge(format!("{len} symbols exceeds --max-len {}", cfg.max_len)).into());
            }
            let e = coding::exotic_sequence(*len)?;
            vec![record(json!({"len": len, "word": bits_to_string(&e)}))]
        }
        Command::Cylinders { n } => {
            let depth = cfg.max_depth.unwrap_or(coding::default_max_depth(*n));
            let t = coding::cylinder_table(*n, depth)?;
            if cfg.format == Format::Csv {
                return Ok(cylinders_csv(&t));
            }
            let mut v = to_value(&t);
            v["residual_decimal_rounded"] = json!(t.residual_mass.decimal(9));
            for (g, gv) in t.groups.iter().zip(v["groups"].as_array_mut().unwrap()) {
                gv["total_decimal_rounded"] = json!(g.total.decimal(9));
            }
            vec![record(v)]
        }
        Command::Complexity { max } => {
            let depth = cfg.max_depth.unwrap_or(coding::complexity_depth(*max));
            let c = coding::complexity(*max, depth)?;
            let entries: Vec<Value> = c.entries.iter().map(|(n, p)| json!({"n": n, "p": p})).collect();
            vec![record(json!({"max_depth": depth, "entries": entries}))]
        }
        Command::BhScan { source, max_period, window, subword_periods } => {
            if *window > cfg.max_len {
                return Err(Error::TooLarge(format!("window {window} exceeds --max-len {}", cfg.max_len)).into());
            }
            let seq = match source.as_str() {
                "exotic" => coding::exotic_sequence(*window)?,
                "morse" => metrics::morse_sequence(*window)?,
                s => match s.strip_prefix("encode:") {
                    Some(w) if *window > 0 => coding::encode(&parse_word(w)?, 0, *window as i64 - 1)?.symbols,
                    _ => return Err(Failure::Usage(format!("unknown source {s:?}"))),
                },
            };
            let r = metrics::periodic_scan_named(&seq, *max_period, *subword_periods, source)?;
            vec![record(to_value(&r))]
        }
        Command::AvgMetric { dynamics, pairs, steps } => {
            let d = parse_dynamics(dynamics)?;
            let f = CutSemimetric::first_bit();
            let avs = metrics::averaged_cut_metric(d, &f, *pairs, *steps, cfg.seed, cfg.truncation)?;
            let vals: Vec<f64> = avs.iter().map(|p| metrics::to_f64(&p.average)).collect();
            let (mean, std) = metrics::mean_and_std(&vals);
            vec![record(json!({
                "dynamics": d, "steps": steps, "seed": cfg.seed, "truncation": cfg.truncation,
                "classifier": "first-bit", "pairs": to_value(&avs),
                "mean": mean, "std": std,
            }))]
        }
        Command::Entropy { epsilon, horizons, dynamics, points } => {
            let d = parse_dynamics(dynamics)?;
            let f = CutSemimetric::first_bit();
            let r = metrics::entropy_profile(d, &f, *points, horizons, *epsilon, cfg.seed, cfg.truncation)?;
            let mut v = to_value(&r);
            v["seed"] = json!(cfg.seed);
            v["classifier"] = json!("first-bit");
            vec![record(v)]
        }
    };
    Ok(json_lines(&records))
}

fn cylinders_csv(t: &coding::CylinderTable) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["word", "measure_num", "measure_exp", "group_id"]).expect("csv");
    for e in &t.entries {
        w.write_record([
            bits_to_string(&e.word),
            e.measure.num().to_string(),
            e.measure.exp().to_string(),
            e.group_id.to_string(),
        ])
        .expect("csv");
    }
    w.into_inner().expect("csv buffer")
}

/// Runs the CLI on `args` (program name first) and returns the exit status:
/// 0 on success, 1 on usage errors, 2 on domain errors.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = RunConfig::from_cli(&cli).and_then(|cfg| run(&cli, &cfg).map(|out| (cfg, out)));
    match result {
        Ok((cfg, out)) => {
            let written = match &cfg.output {
                Some(p) => std::fs::write(p, &out),
                None => std::io::stdout().write_all(&out),
            };
            match written {
                Ok(()) => 0,
                Err(e) => {
                    eprintln!("error: cannot write output: {e}");
                    1
                }
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("usage: pascal-adic <COMMAND> [OPTIONS]; see pascal-adic --help");
            1
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            2
        }
    }
}
