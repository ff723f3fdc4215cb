use std::fmt::Write as _;
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use tamari::blossoming::{blossoming_to_interval, delta, gamma, interval_to_blossoming};
use tamari::counting::{self, count, count_j, count_self_dual, tally, trivariate_coefficients, Family};
use tamari::intervals::enumerate_intervals;
use tamari::meandering::phi_interval;
use tamari::render::{render_blossoming, render_meandering, render_smooth};
use tamari::sampler::{sample_blossoming, RandomSource};
use tamari::verify::run_all;
use tamari::{MeanderingDiagram, TamariInterval};

#[derive(Parser)]
#[command(name = "tamari", version, about = "Tamari intervals and bicolored blossoming trees")]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of intervals of size n in a family, or J_k(n) with --k.
    Count {
        #[arg(long, default_value = "general", value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        /// Count self-dual intervals only.
        #[arg(long)]
        self_dual: bool,
    },
    /// Brute-force counts of size n by family, self-duality and canopy types.
    Tally {
        #[arg(long)]
        n: usize,
    },
    /// All intervals of size n, one per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_family)]
        family: Option<Family>,
    },
    /// Interval "lower|upper" to its blossoming tree, serialized as a
    /// meandering diagram. Reads lines from stdin without an argument.
    Map { interval: Option<String> },
    /// Inverse of map. Reads lines from stdin without an argument.
    Unmap { diagram: Option<String> },
    /// Family memberships and canopy type counts of an interval.
    Classify { interval: String },
    /// Uniform random intervals or blossoming trees.
    Sample {
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = SampleFormat::Interval)]
        format: SampleFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// SVG drawing of an interval.
    Render {
        interval: String,
        #[arg(long, value_enum, default_value_t = RenderFormat::Meandering)]
        format: RenderFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Coefficients I_(i,j,m) of the trivariate series up to size n.
    Series {
        #[arg(long)]
        n: usize,
    },
    /// Exhaustive cross-checks up to a size.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SampleFormat {
    Interval,
    Blossoming,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Meandering,
    Smooth,
    Blossoming,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: tamari::Error| e.to_string())
}

enum CliError {
    Core(tamari::Error),
    Io(io::Error),
    Usage(String),
    ChecksFailed(usize),
}

impl From<tamari::Error> for CliError {
    fn from(e: tamari::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.kind(),
            CliError::Io(_) => "IoError",
            CliError::Usage(_) => "UsageError",
            CliError::ChecksFailed(_) => "VerificationFailed",
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Core(e) => e.to_string(),
            CliError::Io(e) => e.to_string(),
            CliError::Usage(m) => m.clone(),
            CliError::ChecksFailed(k) => format!("{k} checks failed"),
        }
    }
}

type CliResult = Result<(), CliError>;

fn parse_interval(s: &str) -> Result<TamariInterval, CliError> {
    Ok(s.trim().parse()?)
}

fn parse_diagram(s: &str) -> Result<MeanderingDiagram, CliError> {
    serde_json::from_str(s.trim()).map_err(|e| CliError::Core(tamari::Error::Parse(e.to_string())))
}

/// The argument, or every non-empty line of stdin.
fn inputs(arg: Option<String>) -> Result<Vec<String>, CliError> {
    match arg {
        Some(a) => Ok(vec![a]),
        None => {
            let mut out = Vec::new();
            for line in io::stdin().lock().lines() {
                let line = line?;
                if !line.trim().is_empty() {
                    out.push(line);
                }
            }
            Ok(out)
        }
    }
}

fn write_or_print(out: Option<&Path>, text: &str, stdout: &mut impl Write) -> CliResult {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn indexed_path(p: &Path, k: usize) -> PathBuf {
    let stem = p.file_stem().and_then(|s| s.to_str()).unwrap_or("sample");
    let ext = p.extension().and_then(|s| s.to_str()).unwrap_or("svg");
    p.with_file_name(format!("{stem}-{k}.{ext}"))
}

fn run(cli: Cli) -> CliResult {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let json = cli.json;
    match cli.command {
        Command::Count { family, n, k, self_dual } => {
            let value = match (k, self_dual) {
                (Some(_), true) => return Err(CliError::Usage("--k and --self-dual are exclusive".into())),
                (Some(k), false) => {
                    if family != Family::General {
                        return Err(CliError::Usage("--k applies to the general family only".into()));
                    }
                    count_j(n, k)
                }
                (None, true) => count_self_dual(family, n)?,
                (None, false) => count(family, n)?,
            };
            if json {
                let k = k.map_or("null".to_string(), |k| k.to_string());
                writeln!(
                    out,
                    r#"{{"family":"{family}","n":{n},"k":{k},"self_dual":{self_dual},"count":{value}}}"#
                )?;
            } else {
                writeln!(out, "{value}")?;
            }
        }
        Command::Tally { n } => {
            let t = tally(n)?;
            if json {
                writeln!(out, "{}", serde_json::to_string(&t).expect("serializable"))?;
            } else {
                writeln!(out, "{:<20} {:>12} {:>12} {:>12}", "family", "tally", "formula", "self-dual")?;
                for f in Family::ALL {
                    writeln!(
                        out,
                        "{:<20} {:>12} {:>12} {:>12}",
                        f.name(),
                        t.family(f),
                        count(f, n)?,
                        t.self_dual(f)
                    )?;
                }
                writeln!(out)?;
                writeln!(out, "{:>4} {:>4} {:>4} {:>12}", "S11", "S00", "M10", "count")?;
                for c in &t.canopy {
                    writeln!(out, "{:>4} {:>4} {:>4} {:>12}", c.i, c.j, c.m, c.count)?;
                }
            }
        }
        Command::Enumerate { n, family } => {
            for i in enumerate_intervals(n)? {
                if let Some(f) = family {
                    if !counting::classify(&i)?.is(f) {
                        continue;
                    }
                }
                if json {
                    writeln!(out, "{}", serde_json::to_string(&i).expect("serializable"))?;
                } else {
                    writeln!(out, "{i}")?;
                }
            }
        }
        Command::Map { interval } => {
            for line in inputs(interval)? {
                let i = parse_interval(&line)?;
                writeln!(out, "{}", phi_interval(&i))?;
            }
        }
        Command::Unmap { diagram } => {
            for line in inputs(diagram)? {
                let m = parse_diagram(&line)?;
                let b = gamma(&m)?;
                let i = blossoming_to_interval(&b)?;
                if json {
                    writeln!(out, "{}", serde_json::to_string(&i).expect("serializable"))?;
                } else {
                    writeln!(out, "{i}")?;
                }
            }
        }
        Command::Classify { interval } => {
            let i = parse_interval(&interval)?;
            let c = counting::classify(&i)?;
            if json {
                let value = json!({
                    "interval": i.to_string(),
                    "families": c.families,
                    "self_dual": c.self_dual,
                    "canopy": {"S11": c.canopy.0, "S00": c.canopy.1, "M10": c.canopy.2},
                });
                writeln!(out, "{value}")?;
            } else {
                for f in Family::ALL {
                    writeln!(out, "{:<20} {}", f.name(), u8::from(c.is(f)))?;
                }
                writeln!(out, "{:<20} {}", "self-dual", u8::from(c.self_dual))?;
                writeln!(out, "{:<20} {} {} {}", "canopy S11 S00 M10", c.canopy.0, c.canopy.1, c.canopy.2)?;
            }
        }
        Command::Sample {
            size,
            count,
            seed,
            format,
            out: path,
        } => {
            let mut rng = RandomSource::new(seed);
            let mut text = String::new();
            for k in 0..count {
                let b = sample_blossoming(size, &mut rng)?;
                match format {
                    SampleFormat::Interval => {
                        let i = blossoming_to_interval(&b)?;
                        if json {
                            writeln!(text, "{}", serde_json::to_string(&i).expect("serializable")).unwrap();
                        } else {
                            writeln!(text, "{i}").unwrap();
                        }
                    }
                    SampleFormat::Blossoming => writeln!(text, "{}", delta(&b)?).unwrap(),
                    SampleFormat::Svg => {
                        let svg = render_blossoming(&b)?.svg;
                        match &path {
                            Some(p) if count > 1 => std::fs::write(indexed_path(p, k), svg)?,
                            _ => text.push_str(&svg),
                        }
                    }
                }
            }
            if !text.is_empty() {
                write_or_print(path.as_deref(), &text, &mut out)?;
            }
        }
        Command::Render {
            interval,
            format,
            out: path,
        } => {
            let i = parse_interval(&interval)?;
            let fig = match format {
                RenderFormat::Meandering => render_meandering(&phi_interval(&i)),
                RenderFormat::Smooth => render_smooth(&i),
                RenderFormat::Blossoming => render_blossoming(&interval_to_blossoming(&i))?,
            };
            write_or_print(path.as_deref(), &fig.svg, &mut out)?;
        }
        Command::Series { n } => {
            let f = trivariate_coefficients(n)?;
            let terms: Vec<_> = f
                .terms()
                .filter(|(m, _)| (m[0] + m[1] + m[2]) as usize <= n + 1)
                .collect();
            if json {
                let items: Vec<String> = terms
                    .iter()
                    .map(|(m, c)| format!(r#"{{"i":{},"j":{},"m":{},"count":{c}}}"#, m[0], m[1], m[2]))
                    .collect();
                writeln!(out, "[{}]", items.join(","))?;
            } else {
                writeln!(out, "{:>4} {:>4} {:>4} {:>4} {:>12}", "n", "i", "j", "m", "I_ijm")?;
                for (m, c) in terms {
                    let size = m[0] + m[1] + m[2] - 1;
                    writeln!(out, "{size:>4} {:>4} {:>4} {:>4} {c:>12}", m[0], m[1], m[2])?;
                }
            }
        }
        Command::Verify { max_n } => {
            let outcomes = run_all(max_n);
            if json {
                writeln!(out, "{}", serde_json::to_string(&outcomes).expect("serializable"))?;
            } else {
                for o in &outcomes {
                    let mark = if o.passed { "PASS" } else { "FAIL" };
                    writeln!(out, "{mark} {:<20} n<={} {}", o.name, o.max_n, o.detail)?;
                }
            }
            out.flush()?;
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            if failed > 0 {
                return Err(CliError::ChecksFailed(failed));
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let err = CliError::Usage(e.to_string().trim().to_string());
            eprintln!("{}", json!({"error": err.kind(), "message": err.message()}));
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", json!({"error": e.kind(), "message": e.message()}));
            ExitCode::FAILURE
        }
    }
}
