//! Command implementations behind the `skeinlab` binary. Each command
//! returns its output as a string so it can be tested without a process.

mod commands;
mod config;
mod error;
mod input;
mod verify;

pub use commands::{
    cmd_bracket, cmd_colored_bracket, cmd_recoupling, cmd_report, cmd_wrt, decimal_parts, parse_colors, parse_mode,
    parse_sign,
};
pub use config::{parse_window, Config, OutputFormat};
pub use error::{CliError, Result};
pub use input::{load_colored, load_presentation, read_link_file, Fixture, Source};
pub use verify::{cmd_verify_paper, CheckRecord, Status, VerifyReport};

/// Environment variable capping the worker threads.
pub const THREADS_VAR: &str = "SKEINLAB_THREADS";

/// Sizes the global thread pool from `SKEINLAB_THREADS`, if set.
pub fn init_threads() -> Result<()> {
    let Ok(v) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("{THREADS_VAR} must be a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))
}
