//! `horizonq` — evaluate, sweep, plot and verify the quantumness
//! measures of a W state shared near a Schwarzschild horizon.
//!
//! Exit codes: 0 success, 1 verification failure, 2 argument error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use horizonq::sweep::verify_grid;
use horizonq::{eval_point, rows_to_csv, run_sweep, Scenario, SweepConfig, TScale};

#[derive(Parser)]
#[command(name = "horizonq", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate all five measures at a single parameter point.
    Eval {
        /// Mode partition: ABC (all exterior), Abc (Alice + interior), ABc.
        #[arg(long)]
        scenario: ScenarioArg,
        /// Hawking temperature; a real number or `inf`.
        #[arg(long = "T")]
        t: Temperature,
        /// Mode frequency.
        #[arg(long, default_value_t = 1.0)]
        omega: f64,
        /// Amplitude-damping probability in [0, 1]; omit for no channel.
        #[arg(long)]
        gamma: Option<f64>,
    },
    /// Sweep the temperature grid and write CSV or SVG.
    Sweep(SweepArgs),
    /// Emit the data files behind one of the six figures.
    Figure {
        /// fig1 | fig2 | fig3 (undamped ABC/Abc/ABc) or fig4 | fig5 |
        /// fig6 (the same scenarios at gamma = 1/3, 1/2, 2/3).
        figure_id: FigureId,
        /// Directory for the emitted files.
        #[arg(long, default_value = ".")]
        output_dir: PathBuf,
        /// csv (default) or svg.
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Cross-check the numeric pipeline against the closed forms.
    Verify {
        /// Restrict to one scenario (default: all three).
        #[arg(long)]
        scenario: Option<ScenarioArg>,
        /// Restrict to one damping value (default: none, 1/3, 1/2, 2/3).
        #[arg(long)]
        gamma: Option<f64>,
        /// Finite grid points per (scenario, gamma) slice.
        #[arg(long, default_value_t = 50)]
        t_points: usize,
        #[arg(long, default_value_t = 1.0)]
        omega: f64,
        /// Maximum allowed absolute deviation.
        #[arg(long, default_value_t = 1e-10)]
        tolerance: f64,
    },
}

#[derive(Args)]
struct SweepArgs {
    /// JSON file with a sweep config; explicit flags override its values.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    scenario: Option<ScenarioArg>,
    #[arg(long)]
    omega: Option<f64>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long)]
    t_min: Option<f64>,
    #[arg(long)]
    t_max: Option<f64>,
    #[arg(long)]
    t_points: Option<usize>,
    #[arg(long, value_enum)]
    t_scale: Option<ScaleArg>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy)]
struct ScenarioArg(Scenario);

impl FromStr for ScenarioArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Scenario::from_str(s).map(ScenarioArg)
    }
}

#[derive(Clone, Copy)]
struct Temperature(f64);

impl FromStr for Temperature {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("inf") {
            return Ok(Temperature(f64::INFINITY));
        }
        match s.parse::<f64>() {
            Ok(t) if t >= 0.0 => Ok(Temperature(t)),
            _ => Err(format!(
                "invalid temperature {s:?}; expected T >= 0 or `inf`"
            )),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ScaleArg {
    Linear,
    Log,
}

impl From<ScaleArg> for TScale {
    fn from(s: ScaleArg) -> TScale {
        match s {
            ScaleArg::Linear => TScale::Linear,
            ScaleArg::Log => TScale::Log,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Csv,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "lower")]
enum FigureId {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Fig6,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Eval {
            scenario,
            t,
            omega,
            gamma,
        } => cmd_eval(scenario.0, t.0, omega, gamma),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Figure {
            figure_id,
            output_dir,
            format,
        } => cmd_figure(figure_id, &output_dir, format),
        Command::Verify {
            scenario,
            gamma,
            t_points,
            omega,
            tolerance,
        } => cmd_verify(scenario.map(|s| s.0), gamma, t_points, omega, tolerance),
    }
}

/// Format with 12 significant digits.
fn sig12(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let mag = v.abs().log10().floor() as i32;
    let decimals = (11 - mag).max(0) as usize;
    format!("{v:.decimals$}")
}

fn cmd_eval(
    scenario: Scenario,
    t: f64,
    omega: f64,
    gamma: Option<f64>,
) -> Result<ExitCode, String> {
    let (params, r) = eval_point(scenario, t, omega, gamma).map_err(|e| e.to_string())?;
    println!("scenario  = {scenario}");
    println!("T         = {t}");
    println!("omega     = {omega}");
    match gamma {
        Some(g) => println!("gamma     = {g}"),
        None => println!("gamma     = (no channel)"),
    }
    println!("alpha     = {}", sig12(params.alpha));
    println!("beta      = {}", sig12(params.beta));
    println!("c_l1      = {}", sig12(r.c_l1));
    println!("foc       = {}", sig12(r.foc));
    println!("gc        = {}", sig12(r.gc));
    println!(
        "cf        = {}{}",
        sig12(r.cf),
        if r.cf_clamped { "  (clamped)" } else { "" }
    );
    println!("tradeoff  = {}", sig12(r.tradeoff));
    Ok(ExitCode::SUCCESS)
}

fn build_config(args: &SweepArgs) -> Result<SweepConfig, String> {
    let mut config = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            serde_json::from_str::<SweepConfig>(&text)
                .map_err(|e| format!("bad config {}: {e}", path.display()))?
        }
        None => {
            let scenario = args
                .scenario
                .ok_or("either --config or --scenario is required")?;
            SweepConfig::new(scenario.0)
        }
    };
    if let Some(s) = args.scenario {
        config.scenario = s.0;
    }
    if let Some(v) = args.omega {
        config.omega = v;
    }
    if let Some(v) = args.gamma {
        config.gamma = Some(v);
    }
    if let Some(v) = args.t_min {
        config.t_min = v;
    }
    if let Some(v) = args.t_max {
        config.t_max = v;
    }
    if let Some(v) = args.t_points {
        config.t_points = v;
    }
    if let Some(v) = args.t_scale {
        config.t_scale = v.into();
    }
    config.check().map_err(|e| e.to_string())?;
    Ok(config)
}

fn render(config: &SweepConfig, format: Format) -> Result<String, String> {
    let rows = run_sweep(config).map_err(|e| e.to_string())?;
    Ok(match format {
        Format::Csv => rows_to_csv(&rows),
        Format::Svg => {
            let title = match config.gamma {
                Some(g) => format!("{} (gamma = {g})", config.scenario),
                None => config.scenario.to_string(),
            };
            horizonq::svg::render_chart(&rows, &title, config.t_scale)
        }
    })
}

fn cmd_sweep(args: SweepArgs) -> Result<ExitCode, String> {
    let config = build_config(&args)?;
    let text = render(&config, args.format)?;
    match &args.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_figure(id: FigureId, dir: &Path, format: Format) -> Result<ExitCode, String> {
    let (name, scenario, damped) = match id {
        FigureId::Fig1 => ("fig1", Scenario::Abc3, false),
        FigureId::Fig2 => ("fig2", Scenario::AInterior, false),
        FigureId::Fig3 => ("fig3", Scenario::Mixed, false),
        FigureId::Fig4 => ("fig4", Scenario::Abc3, true),
        FigureId::Fig5 => ("fig5", Scenario::AInterior, true),
        FigureId::Fig6 => ("fig6", Scenario::Mixed, true),
    };
    let ext = match format {
        Format::Csv => "csv",
        Format::Svg => "svg",
    };
    let gammas: &[Option<f64>] = if damped {
        &[Some(1.0 / 3.0), Some(0.5), Some(2.0 / 3.0)]
    } else {
        &[None]
    };
    for &gamma in gammas {
        let config = SweepConfig {
            gamma,
            ..SweepConfig::new(scenario)
        };
        let file = match gamma {
            None => format!("{name}.{ext}"),
            Some(g) => format!("{name}_g{g:.3}.{ext}"),
        };
        let path = dir.join(file);
        let text = render(&config, format)?;
        std::fs::write(&path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
        println!("wrote {}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(
    scenario: Option<Scenario>,
    gamma: Option<f64>,
    t_points: usize,
    omega: f64,
    tolerance: f64,
) -> Result<ExitCode, String> {
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err("tolerance must be positive".into());
    }
    let scenarios: Vec<Scenario> = match scenario {
        Some(s) => vec![s],
        None => Scenario::ALL.to_vec(),
    };
    let gammas: Vec<Option<f64>> = match gamma {
        Some(g) => vec![Some(g)],
        None => vec![None, Some(1.0 / 3.0), Some(0.5), Some(2.0 / 3.0)],
    };
    let devs = verify_grid(&scenarios, &gammas, t_points, omega).map_err(|e| e.to_string())?;

    let mut failed = false;
    for &s in &scenarios {
        let worst = devs
            .iter()
            .filter(|d| d.scenario == s)
            .max_by(|a, b| a.max_dev().total_cmp(&b.max_dev()))
            .expect("nonempty grid");
        let mut line = String::new();
        write!(line, "{s}: max deviation {:e}", worst.max_dev()).unwrap();
        if worst.max_dev() >= tolerance {
            failed = true;
            write!(
                line,
                "  FAIL at T={} gamma={:?} ({} / {})",
                worst.temperature, worst.gamma, worst.worst_entry, worst.worst_measure
            )
            .unwrap();
        } else {
            line.push_str("  ok");
        }
        println!("{line}");
    }
    println!(
        "{} points checked at tolerance {tolerance:e}: {}",
        devs.len(),
        if failed { "FAIL" } else { "PASS" }
    );
    Ok(if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}
