use std::ops::RangeInclusive;
use std::str::FromStr;

use skeinlab::bracket::{DEFAULT_JW_CAP, DEFAULT_WIDTH_CAP, STATE_SUM_CAP};
use skeinlab::wrt::ArithMode;

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Csv,
    Md,
    Json,
}

impl FromStr for OutputFormat {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "csv" => Ok(OutputFormat::Csv),
            "md" => Ok(OutputFormat::Md),
            "json" => Ok(OutputFormat::Json),
            _ => Err(CliError::Usage(format!("unknown format {s:?} (text, csv, md, json)"))),
        }
    }
}

/// Settings shared by every command.
#[derive(Clone, Debug)]
pub struct Config {
    /// Levels to tabulate or check; `None` lets each check use its own range.
    pub d_window: Option<RangeInclusive<u32>>,
    /// Decimal digits in printed approximations.
    pub precision_digits: u32,
    /// `None` lets each computation pick its natural mode.
    pub mode: Option<ArithMode>,
    /// Largest diagram handed to the exhaustive state sum.
    pub crossing_cap: usize,
    pub width_cap: usize,
    pub jw_cap: usize,
    pub output_format: Option<OutputFormat>,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            d_window: None,
            precision_digits: 30,
            mode: None,
            crossing_cap: STATE_SUM_CAP,
            width_cap: DEFAULT_WIDTH_CAP,
            jw_cap: DEFAULT_JW_CAP,
            output_format: None,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<()> {
        if self.precision_digits < 15 {
            return Err(CliError::Usage(format!(
                "precision must be at least 15 digits, got {}",
                self.precision_digits
            )));
        }
        if self.crossing_cap == 0 || self.width_cap == 0 || self.jw_cap == 0 {
            return Err(CliError::Usage("caps must be positive".into()));
        }
        if let Some(w) = &self.d_window {
            if w.is_empty() || *w.start() == 0 {
                return Err(CliError::Usage(format!(
                    "window {}..{} must be nonempty and start at 1 or above",
                    w.start(),
                    w.end()
                )));
            }
        }
        Ok(())
    }

    /// The window, or `default` when none was given.
    pub fn window_or(&self, default: RangeInclusive<u32>) -> RangeInclusive<u32> {
        self.d_window.clone().unwrap_or(default)
    }

    /// `range` restricted to the window.
    pub fn clip(&self, range: RangeInclusive<u32>) -> RangeInclusive<u32> {
        match &self.d_window {
            None => range,
            Some(w) => (*range.start()).max(*w.start())..=(*range.end()).min(*w.end()),
        }
    }

    pub fn format_or(&self, default: OutputFormat) -> OutputFormat {
        self.output_format.unwrap_or(default)
    }
}

/// Parses `a..b` (inclusive) or `a..=b`.
pub fn parse_window(s: &str) -> Result<RangeInclusive<u32>> {
    let bad = || CliError::Usage(format!("window {s:?} is not of the form a..b"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: u32 = a.trim().parse().map_err(|_| bad())?;
    let b: u32 = b.trim().parse().map_err(|_| bad())?;
    Ok(a..=b)
}
