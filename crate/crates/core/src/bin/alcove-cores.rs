use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use alcove_cores::abacus::{core, q_set};
use alcove_cores::actions::{apply_word, Action, Word};
use alcove_cores::orbits::{
    anderson_count, containment_chain, descend_to_t_core, enumerate_st_cores, kappa,
};
use alcove_cores::render::{cells, render_svg, Mode, RenderSpec};
use alcove_cores::verify::{run, Suite, VerifyConfig};
use alcove_cores::{Error, Exec, Partition, SPoint, SSet};

/// Core partitions, s-sets and alcoves of the affine symmetric group.
#[derive(Debug, Parser)]
#[command(name = "alcove-cores", version)]
struct Cli {
    /// Print `{"input", "result", "meta"}` JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Pair {
    #[arg(long)]
    s: usize,
    #[arg(long)]
    t: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// s-core of a partition, e.g. `core --s 5 6,6,2,1`.
    Core {
        #[arg(long)]
        s: usize,
        #[arg(allow_hyphen_values = true)]
        partition: String,
    },
    /// s-set of an s-core.
    Qset {
        #[arg(long)]
        s: usize,
        #[arg(allow_hyphen_values = true)]
        partition: String,
    },
    /// Apply a generator word to an s-point, first letter first.
    Act {
        action: Action,
        /// Defaults to the length of the point.
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: usize,
        /// Space-separated generator indices, e.g. "0 2 1 0".
        #[arg(long, default_value = "")]
        word: String,
        #[arg(allow_hyphen_values = true)]
        point: String,
    },
    /// The largest (s,t)-core.
    Kappa(Pair),
    /// Number of (s,t)-cores.
    Count(Pair),
    /// Every (s,t)-core, one per line, by size.
    Enumerate(Pair),
    /// t-core of a given s-core, found by descending its level-t orbit.
    OrbitMin {
        #[command(flatten)]
        pair: Pair,
        /// Print every descent step.
        #[arg(long)]
        trace: bool,
        #[arg(allow_hyphen_values = true)]
        partition: String,
    },
    /// Gallery walk from a rhomboid point to the tip, with growing cores.
    Chain {
        #[command(flatten)]
        pair: Pair,
        #[arg(allow_hyphen_values = true)]
        point: String,
    },
    /// Run the property suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(2..))]
        s_max: u64,
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u64).range(2..))]
        t_max: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// SVG of the dominant alcoves of P^3 labelled by cores.
    Diagram {
        #[arg(long, default_value_t = 3)]
        s: usize,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[arg(long, value_enum, default_value = "cores")]
        mode: Mode,
        /// Write the SVG here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// A domain error, reported with exit code 2.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

/// What a command prints: text lines, and the JSON `result`/`meta`.
struct Outcome {
    text: String,
    input: Value,
    result: Value,
    s: Option<usize>,
    t: Option<usize>,
    /// A verification check failed.
    failed: bool,
}

fn parse<T: std::str::FromStr<Err = Error>>(text: &str) -> Result<T, Failure> {
    Ok(text.parse::<T>()?)
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

fn step_line(n: usize, generator: Option<usize>, sset: &SSet, core: &Partition) -> String {
    let gen = generator.map_or_else(|| "-".to_string(), |g| g.to_string());
    format!("step {n}: gen={gen} sset={sset} core={core}")
}

fn execute(cmd: Command) -> Result<Outcome, Failure> {
    let outcome = |text: String, input: Value, result: Value, s, t| Outcome {
        text,
        input,
        result,
        s,
        t,
        failed: false,
    };
    match cmd {
        Command::Core { s, partition } => {
            let p: Partition = parse(&partition)?;
            if s == 0 {
                return Err(Error::ModulusTooSmall { s, min: 1 }.into());
            }
            let c = core(&p, s);
            Ok(outcome(
                c.to_string(),
                json!({ "partition": p }),
                to_json(&c),
                Some(s),
                None,
            ))
        }
        Command::Qset { s, partition } => {
            let p: Partition = parse(&partition)?;
            let q = q_set(&p, s)?;
            Ok(outcome(
                q.to_string(),
                json!({ "partition": p }),
                to_json(&q),
                Some(s),
                None,
            ))
        }
        Command::Act {
            action,
            s,
            t,
            word,
            point,
        } => {
            let p: SPoint = parse(&point)?;
            if let Some(s) = s {
                if s != p.s() {
                    return Err(Error::DimensionMismatch(p.s(), s).into());
                }
            }
            let w: Word = parse(&word)?;
            let q = apply_word(&w, action, t, &p)?;
            let input = json!({ "action": action, "word": w.letters(), "point": p });
            Ok(outcome(
                q.to_string(),
                input,
                to_json(&q),
                Some(p.s()),
                Some(t),
            ))
        }
        Command::Kappa(Pair { s, t }) => {
            let k = kappa(s, t)?;
            Ok(outcome(
                k.to_string(),
                json!({}),
                to_json(&k),
                Some(s),
                Some(t),
            ))
        }
        Command::Count(Pair { s, t }) => {
            let n = anderson_count(s, t)?;
            // u128 does not fit every JSON reader; counts past 2^64 go out as strings
            let value = u64::try_from(n).map_or_else(|_| json!(n.to_string()), |v| json!(v));
            Ok(outcome(n.to_string(), json!({}), value, Some(s), Some(t)))
        }
        Command::Enumerate(Pair { s, t }) => {
            let cores = enumerate_st_cores(s, t)?;
            let text = cores
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("\n");
            Ok(outcome(text, json!({}), to_json(&cores), Some(s), Some(t)))
        }
        Command::OrbitMin {
            pair: Pair { s, t },
            trace,
            partition,
        } => {
            let p: Partition = parse(&partition)?;
            let (nu, tr) = descend_to_t_core(&p, s, t)?;
            let mut lines = Vec::new();
            if trace {
                let start_core = alcove_cores::abacus::core_from_s_set(&tr.start)?;
                lines.push(step_line(0, None, &tr.start, &start_core));
                for (n, st) in tr.steps.iter().enumerate() {
                    let c = alcove_cores::abacus::core_from_s_set(&st.sset)?;
                    lines.push(step_line(n + 1, Some(st.generator), &st.sset, &c));
                }
            }
            lines.push(nu.to_string());
            let result = if trace { to_json(&tr) } else { to_json(&nu) };
            Ok(outcome(
                lines.join("\n"),
                json!({ "partition": p }),
                result,
                Some(s),
                Some(t),
            ))
        }
        Command::Chain {
            pair: Pair { s, t },
            point,
        } => {
            let p: SPoint = parse(&point)?;
            let chain = containment_chain(&p, s, t)?;
            let mut lines = Vec::new();
            for (n, (pt, c)) in chain.points.iter().zip(&chain.cores).enumerate() {
                let generator = n.checked_sub(1).map(|k| chain.steps[k].generator);
                lines.push(step_line(n, generator, &pt.to_sset(), c));
            }
            Ok(outcome(
                lines.join("\n"),
                json!({ "point": p }),
                to_json(&chain),
                Some(s),
                Some(t),
            ))
        }
        Command::Verify {
            suite,
            s_max,
            t_max,
            seed,
            trials,
            sequential,
        } => {
            let cfg = VerifyConfig {
                s_max: s_max as usize,
                t_max: t_max as usize,
                seed,
                trials,
                exec: if sequential {
                    Exec::Sequential
                } else {
                    Exec::default()
                },
            };
            let report = run(suite, &cfg);
            let input = json!({
                "suite": suite, "s_max": s_max, "t_max": t_max, "seed": seed, "trials": trials
            });
            let mut out = outcome(report.to_string(), input, to_json(&report), None, None);
            out.failed = !report.all_passed();
            Ok(out)
        }
        Command::Diagram {
            s,
            t,
            depth,
            mode,
            output,
        } => {
            let spec = RenderSpec { s, t, depth, mode };
            let svg = render_svg(&spec)?;
            let alcoves = cells(&spec)?;
            let input = json!({ "depth": depth, "mode": mode, "output": output });
            let (text, mut result) = match &output {
                Some(path) => {
                    std::fs::write(path, &svg)
                        .map_err(|e| Failure(format!("cannot write {}: {e}", path.display())))?;
                    (format!("wrote {}", path.display()), json!({ "path": path }))
                }
                None => (svg.trim_end().to_string(), json!({ "svg": svg })),
            };
            result["alcoves"] = to_json(&alcoves);
            let t = (mode == Mode::Tcores).then_some(t);
            Ok(outcome(text, input, result, Some(s), t))
        }
    }
}

fn render_outcome(o: &Outcome, json: bool) -> String {
    if json {
        let doc = json!({
            "input": o.input,
            "result": o.result,
            "meta": { "s": o.s, "t": o.t },
        });
        serde_json::to_string_pretty(&doc).expect("json values serialize")
    } else {
        o.text.clone()
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(cli.command) {
        Ok(o) => {
            println!("{}", render_outcome(&o, cli.json));
            if o.failed {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure(msg)) => {
            if cli.json {
                println!("{}", json!({ "error": msg }));
            }
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
