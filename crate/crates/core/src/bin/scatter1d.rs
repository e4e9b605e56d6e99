use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use scatter1d::config::{load_config, normalize_key};
use scatter1d::export::{self, Format};
use scatter1d::presets;
use scatter1d::scarf::ScarfParams;
use scatter1d::sweep::{sweep, wavefunction_table, Engine, Family, SweepSpec, DEFAULT_ENERGY};
use scatter1d::{Error, Solver};

/// Reflection, transmission and half bound states of 1D well-barrier potentials.
#[derive(Parser)]
#[command(name = "scatter1d", version)]
struct Cli {
    /// `key = value` file; command-line flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scan R and T over one parameter.
    Sweep(SweepArgs),
    /// Write the data of a figure preset as CSV.
    Figure(FigureArgs),
    /// Locate half bound states along one parameter.
    Hbs(HbsArgs),
    /// List bound-state energies.
    Boundstates(BoundArgs),
    /// Sample a Scarf II eigenfunction.
    Wavefunction(WaveArgs),
}

#[derive(Args)]
struct Potential {
    /// dddp, scarf2, square-wb or sin2-wb.
    #[arg(long)]
    family: Option<String>,
    /// Fixed parameter `name=value`; repeatable.
    #[arg(long = "param", value_name = "K=V")]
    params: Vec<String>,
    #[arg(long)]
    n_slabs: Option<usize>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    potential: Potential,
    #[arg(long)]
    vary: Option<String>,
    /// `lo:hi`.
    #[arg(long, allow_hyphen_values = true)]
    range: Option<String>,
    #[arg(long)]
    steps: Option<usize>,
    /// 0 selects the threshold limit.
    #[arg(long)]
    energy: Option<f64>,
    /// analytic or numeric.
    #[arg(long)]
    engine: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv or json.
    #[arg(long)]
    format: Option<String>,
}

#[derive(Args)]
struct FigureArgs {
    preset: Option<String>,
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

#[derive(Args)]
struct HbsArgs {
    #[command(flatten)]
    potential: Potential,
    #[arg(long)]
    vary: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    range: Option<String>,
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct BoundArgs {
    #[command(flatten)]
    potential: Potential,
    /// Lower end of the energy search.
    #[arg(long, allow_hyphen_values = true)]
    e_min: Option<f64>,
}

#[derive(Args)]
struct WaveArgs {
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    s: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<f64>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    x_range: Option<String>,
    #[arg(long)]
    points: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Convergence(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::DirectionMismatch { .. } => Failure::Convergence(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome<T = ()> = std::result::Result<T, Failure>;

/// Config-file values not claimed by a flag of the running command.
struct Settings {
    file: BTreeMap<String, String>,
}

impl Settings {
    fn take(&mut self, key: &str) -> Option<String> {
        self.file.remove(key)
    }

    fn pick<T: std::str::FromStr>(&mut self, flag: Option<T>, key: &str) -> Outcome<Option<T>> {
        let from_file = self.take(key);
        if flag.is_some() {
            return Ok(flag);
        }
        from_file
            .map(|v| {
                v.parse()
                    .map_err(|_| Failure::Usage(format!("config `{key}`: cannot parse `{v}`")))
            })
            .transpose()
    }

    fn need<T: std::str::FromStr>(&mut self, flag: Option<T>, key: &str) -> Outcome<T> {
        self.pick(flag, key)?
            .ok_or_else(|| Failure::Usage(format!("missing --{}", key.replace('_', "-"))))
    }

    /// Remaining keys become potential parameters, overridden by `--param`.
    fn params(&mut self, flags: &[String]) -> Outcome<BTreeMap<String, f64>> {
        let mut out = BTreeMap::new();
        for (k, v) in std::mem::take(&mut self.file) {
            out.insert(k.clone(), parse_f64(&k, &v)?);
        }
        for kv in flags {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Failure::Usage(format!("--param expects name=value, got `{kv}`")))?;
            let k = normalize_key(k);
            out.insert(k.clone(), parse_f64(&k, v.trim())?);
        }
        Ok(out)
    }
}

fn parse_f64(key: &str, v: &str) -> Outcome<f64> {
    v.parse()
        .map_err(|_| Failure::Usage(format!("parameter `{key}`: `{v}` is not a number")))
}

fn parse_range(s: &str) -> Outcome<(f64, f64)> {
    let bad = || Failure::Usage(format!("range `{s}` must look like lo:hi"));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    Ok((
        lo.trim().parse().map_err(|_| bad())?,
        hi.trim().parse().map_err(|_| bad())?,
    ))
}

fn run(cli: Cli) -> Outcome {
    let file = match &cli.config {
        Some(path) => load_config(path)?,
        None => BTreeMap::new(),
    };
    let mut cfg = Settings { file };
    match cli.command {
        Command::Sweep(a) => run_sweep(a, &mut cfg),
        Command::Figure(a) => {
            let preset: String = cfg.need(a.preset, "preset")?;
            let dir: PathBuf = cfg.pick(a.out_dir, "out_dir")?.unwrap_or_else(|| PathBuf::from("."));
            reject_leftovers(&cfg)?;
            for path in presets::write_preset(&preset, &dir)? {
                println!("{}", path.display());
            }
            Ok(())
        }
        Command::Hbs(a) => {
            let family: Family = cfg.need(a.potential.family, "family")?.parse()?;
            let vary: String = cfg.need(a.vary, "vary")?;
            let range = parse_range(&cfg.need::<String>(a.range, "range")?)?;
            let tol = cfg.pick(a.tol, "tol")?.unwrap_or(1e-10);
            let solver = solver(cfg.pick(a.potential.n_slabs, "n_slabs")?);
            let mut spec = SweepSpec::new(family, &vary, range, 2);
            spec.params = cfg.params(&a.potential.params)?;
            spec.potential_at(range.0)?;
            let roots = solver.find_hbs(|theta| spec.potential_at(theta), range, tol)?;
            println!("{vary},nodes,mismatch");
            for r in roots {
                println!(
                    "{},{},{}",
                    export::fmt_float(r.theta),
                    r.nodes,
                    export::fmt_float(r.mismatch)
                );
            }
            Ok(())
        }
        Command::Boundstates(a) => {
            let family: Family = cfg.need(a.potential.family, "family")?.parse()?;
            let e_min = cfg.pick(a.e_min, "e_min")?;
            let solver = solver(cfg.pick(a.potential.n_slabs, "n_slabs")?);
            let p = family.potential(&cfg.params(&a.potential.params)?)?;
            println!("E");
            for e in solver.bound_states(&p, e_min)? {
                println!("{}", export::fmt_float(e));
            }
            Ok(())
        }
        Command::Wavefunction(a) => {
            let family: String = cfg.pick(a.family, "family")?.unwrap_or_else(|| "scarf2".into());
            if family != "scarf2" {
                return Err(Failure::Usage(format!(
                    "eigenfunctions are available for scarf2 only, not `{family}`"
                )));
            }
            let p = ScarfParams::new(cfg.need(a.s, "s")?, cfg.need(a.q, "q")?)?;
            let n = cfg.need(a.n, "n")?;
            let range = match cfg.pick::<String>(a.x_range, "x_range")? {
                Some(r) => parse_range(&r)?,
                None => (-10.0, 10.0),
            };
            let points = cfg.pick(a.points, "points")?.unwrap_or(presets::PRESET_POINTS);
            let out: Option<PathBuf> = cfg.pick(a.out, "out")?;
            reject_leftovers(&cfg)?;
            let table = wavefunction_table(&p, n, range, points)?;
            match out {
                Some(path) => export::write_wavefunction_csv(&table, &path)?,
                None => print!("{}", export::wavefunction_csv_string(&table)),
            }
            eprintln!("n = {}, E = {}, nodes = {}", table.n, table.energy, table.nodes);
            Ok(())
        }
    }
}

fn run_sweep(a: SweepArgs, cfg: &mut Settings) -> Outcome {
    let family: Family = cfg.need(a.potential.family, "family")?.parse()?;
    let vary: String = cfg.need(a.vary, "vary")?;
    let range = parse_range(&cfg.need::<String>(a.range, "range")?)?;
    let steps = cfg.need(a.steps, "steps")?;
    let energy = cfg.pick(a.energy, "energy")?.unwrap_or(DEFAULT_ENERGY);
    let engine: Engine = cfg
        .pick::<String>(a.engine, "engine")?
        .unwrap_or_else(|| "numeric".into())
        .parse()?;
    let format: Format = cfg
        .pick::<String>(a.format, "format")?
        .unwrap_or_else(|| "csv".into())
        .parse()?;
    let out: Option<PathBuf> = cfg.pick(a.out, "out")?;
    let n_slabs = solver(cfg.pick(a.potential.n_slabs, "n_slabs")?).n_slabs;
    let mut spec = SweepSpec::new(family, &vary, range, steps)
        .energy(energy)
        .engine(engine)
        .n_slabs(n_slabs);
    spec.params = cfg.params(&a.potential.params)?;
    let table = sweep(&spec)?;
    match out {
        Some(path) => export::export(&table, &path, format)?,
        None => print!(
            "{}",
            match format {
                Format::Csv => export::csv_string(&table),
                Format::Json => export::json_string(&table),
            }
        ),
    }
    if table.all_converged() {
        Ok(())
    } else {
        let bad = table.records.iter().filter(|r| !r.converged).count();
        Err(Failure::Convergence(format!(
            "{bad} of {} threshold limits did not converge",
            table.records.len()
        )))
    }
}

fn solver(n_slabs: Option<usize>) -> Solver {
    n_slabs.map(Solver::with_slabs).unwrap_or_default()
}

fn reject_leftovers(cfg: &Settings) -> Outcome {
    match cfg.file.keys().next() {
        Some(k) => Err(Failure::Usage(format!(
            "config key `{k}` does not apply to this command"
        ))),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Convergence(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
