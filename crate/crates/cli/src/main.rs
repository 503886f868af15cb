mod commands;
mod numfmt;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fuzzyzoom::fuzzy::{Method, DEFAULT_RESOLUTION};

/// Mamdani fuzzy systems from `.fzs` files.
#[derive(Debug, Parser)]
#[command(name = "fuzzyzoom", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a system file; prints one diagnostic per line.
    Check { path: PathBuf },
    /// Evaluate a system at crisp inputs.
    Eval {
        path: PathBuf,
        /// Input binding `var=value`; repeat for each input.
        #[arg(long = "in", value_name = "VAR=VALUE")]
        inputs: Vec<String>,
        #[arg(long, default_value = "cog")]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: usize,
        /// Also print degrees, rule strengths and the aggregate as CSV.
        #[arg(long)]
        trace: bool,
    },
    /// Evaluate a single-input system over a range of inputs.
    Sweep {
        path: PathBuf,
        /// Input to sweep (defaults to the only input).
        #[arg(long)]
        var: Option<String>,
        /// Defaults to the lower universe bound.
        #[arg(long, allow_hyphen_values = true)]
        from: Option<f64>,
        /// Defaults to the upper universe bound.
        #[arg(long, allow_hyphen_values = true)]
        to: Option<f64>,
        #[arg(long)]
        step: f64,
        #[arg(long, default_value = "cog")]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: usize,
        /// Write CSV here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample every membership function of one variable.
    Mfdump {
        path: PathBuf,
        #[arg(long)]
        var: String,
        #[arg(long, default_value_t = 501)]
        samples: usize,
    },
    /// Estimate a focus trace from a stored trace table.
    Track {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        start_zoom: usize,
        #[arg(long, allow_hyphen_values = true)]
        start_focus: f64,
        /// Ground-truth trace `zoom_pos,focus` to score the estimate against.
        #[arg(long)]
        true_trace: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    let result = match cli.command {
        Command::Check { path } => commands::check(&path),
        Command::Eval {
            path,
            inputs,
            method,
            resolution,
            trace,
        } => commands::eval(&path, &inputs, method, resolution, trace, &mut stdout),
        Command::Sweep {
            path,
            var,
            from,
            to,
            step,
            method,
            resolution,
            out,
        } => commands::sweep(
            &path,
            &commands::SweepArgs {
                var,
                from,
                to,
                step,
                method,
                resolution,
            },
            out.as_deref(),
            &mut stdout,
        ),
        Command::Mfdump { path, var, samples } => commands::mfdump(&path, &var, samples, &mut stdout),
        Command::Track {
            table,
            start_zoom,
            start_focus,
            true_trace,
        } => commands::track(&table, start_zoom, start_focus, true_trace.as_deref(), &mut stdout),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !e.message.is_empty() {
                eprintln!("{}", e.message);
            }
            ExitCode::from(e.status)
        }
    }
}
