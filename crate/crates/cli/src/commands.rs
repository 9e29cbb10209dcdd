use std::fmt::Write as _;

use serde::Serialize;
use skeinlab::algebra::precision::{cyclo_to_complex, format_decimal};
use skeinlab::algebra::{delta_color, EvalPoint, Sign};
use skeinlab::bracket::{
    bracket_state_sum, bracket_tangle_sweep_capped, colored_bracket, BracketMode, BracketValue,
};
use skeinlab::recoupling::{meridian_eigenvalue, meridian_series, omega_data};
use skeinlab::wrt::{wrt_invariant, wrt_invariant_hp, ArithMode, InvariantReport, Quantity, Value};

use crate::config::{Config, OutputFormat};
use crate::error::{CliError, Result};
use crate::input::{load_colored, load_presentation, Source};

/// Real and imaginary parts as fixed-point decimals. Exact values are
/// embedded at `digits` places; floats keep the 15 places they carry.
pub fn decimal_parts(v: &Value, digits: u32) -> (String, String) {
    match v {
        Value::Exact(x) => {
            let z = cyclo_to_complex(x, digits);
            (format_decimal(&z.re, digits), format_decimal(&z.im, digits))
        }
        Value::Float(z) => (fixed(z.re), fixed(z.im)),
    }
}

fn fixed(x: f64) -> String {
    // avoid printing -0.000...
    let s = format!("{x:.15}");
    if s.trim_start_matches('-').bytes().all(|b| b == b'0' || b == b'.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn complex_text(re: &str, im: &str) -> String {
    match im.strip_prefix('-') {
        Some(m) => format!("{re} - {m}i"),
        None => format!("{re} + {im}i"),
    }
}

/// The uncolored bracket, normalized so the empty diagram is 1.
pub fn cmd_bracket(source: &Source<'_>, oracle: bool, cfg: &Config) -> Result<String> {
    let link = load_colored(source, None)?;
    let diagram = link.link.diagram();
    let value = bracket_tangle_sweep_capped(diagram, cfg.width_cap)?;
    if oracle {
        let n = diagram.crossing_count();
        if n > cfg.crossing_cap {
            return Err(skeinlab::Error::TooLarge {
                crossings: n,
                cap: cfg.crossing_cap,
            }
            .into());
        }
        let check = bracket_state_sum(diagram)?;
        if check != value {
            return Err(CliError::Usage(format!("sweep gave {value} but the state sum gave {check}")));
        }
    }
    Ok(format!("{value}\n"))
}

/// The colored bracket, generic or at `point`.
pub fn cmd_colored_bracket(
    source: &Source<'_>,
    colors: Option<&[u32]>,
    point: Option<EvalPoint>,
    cfg: &Config,
) -> Result<String> {
    let link = load_colored(source, colors)?;
    if let Some(&c) = link.colors.iter().find(|&&c| c as usize > cfg.jw_cap) {
        return Err(skeinlab::Error::Precondition(format!("color {c} exceeds the projector cap {}", cfg.jw_cap)).into());
    }
    let mode = point.map_or(BracketMode::Generic, BracketMode::At);
    let colors = link.colors.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    Ok(match colored_bracket(&link, mode)? {
        BracketValue::Generic(r) => format!("colors: {colors}\nbracket: {r}\n"),
        BracketValue::At(x) => {
            let v = Value::Exact(x);
            let (re, im) = decimal_parts(&v, cfg.precision_digits);
            format!(
                "colors: {colors}\npoint: {}\nbracket: {v}\ndecimal: {}\n",
                point.unwrap(),
                complex_text(&re, &im)
            )
        }
    })
}

#[derive(Serialize)]
struct WrtRecord {
    presentation: String,
    d: u32,
    sign: &'static str,
    mode: &'static str,
    value: String,
    value_re: String,
    value_im: String,
}

/// One surgery invariant at one point.
pub fn cmd_wrt(source: &Source<'_>, color: u32, p: EvalPoint, cfg: &Config) -> Result<String> {
    let pres = load_presentation(source, color)?;
    let mode = cfg.mode.unwrap_or_default();
    let (value, re, im) = match wrt_invariant(&pres, p, mode)? {
        v @ Value::Exact(_) => {
            let (re, im) = decimal_parts(&v, cfg.precision_digits);
            (v, re, im)
        }
        v @ Value::Float(_) => {
            let z = wrt_invariant_hp(&pres, p, cfg.precision_digits)?;
            let re = format_decimal(&z.re, cfg.precision_digits);
            let im = format_decimal(&z.im, cfg.precision_digits);
            (v, re, im)
        }
    };
    let record = WrtRecord {
        presentation: pres.name.clone(),
        d: p.d,
        sign: p.sign.symbol(),
        mode: value.mode().name(),
        value: match &value {
            Value::Exact(_) => value.to_string(),
            Value::Float(_) => complex_text(&re, &im),
        },
        value_re: re,
        value_im: im,
    };
    Ok(match cfg.format_or(OutputFormat::Text) {
        OutputFormat::Json => serde_json::to_string_pretty(&record).expect("record serializes") + "\n",
        _ => format!(
            "presentation: {}\npoint: {p}\nmode: {}\nvalue: {}\ndecimal: {}\n",
            record.presentation,
            record.mode,
            record.value,
            complex_text(&record.value_re, &record.value_im)
        ),
    })
}

/// The recoupling data at a level: `eta`, the weights `Δ_i`, the meridian
/// eigenvalues for `color`, and their sum.
pub fn cmd_recoupling(p: EvalPoint, color: u32, cfg: &Config) -> Result<String> {
    let max = 2 * p.d - 2;
    if color > max {
        return Err(skeinlab::Error::ColorRange { color, max }.into());
    }
    let omega = omega_data(p.d);
    let mut out = String::new();
    writeln!(out, "point: {p}").unwrap();
    writeln!(out, "eta: {}", omega.eta_decimal(cfg.precision_digits)).unwrap();
    writeln!(out, "sum of squares: {}", omega.sum_squares_at(p.sign)).unwrap();
    writeln!(out, "meridian color: {color}").unwrap();
    writeln!(out).unwrap();
    writeln!(out, "| i | delta | eigenvalue |").unwrap();
    writeln!(out, "|---|---|---|").unwrap();
    for i in 0..p.d {
        writeln!(out, "| {i} | {} | {} |", delta_color(i as usize), meridian_eigenvalue(i, color)).unwrap();
    }
    writeln!(out).unwrap();
    writeln!(out, "sum: {}", Value::Exact(meridian_series(color, p))).unwrap();
    Ok(out)
}

#[derive(Serialize)]
struct ReportRecord {
    quantity: &'static str,
    d: u32,
    sign: &'static str,
    value_re: String,
    value_im: String,
    prediction: String,
    mode: &'static str,
    status: &'static str,
}

const REPORT_HEADER: [&str; 8] = ["quantity", "d", "sign", "value_re", "value_im", "prediction", "mode", "status"];

/// Tables of every quantity over the window against its closed form.
/// Returns the rendered tables and whether every row passed.
pub fn cmd_report(cfg: &Config) -> Result<(String, bool)> {
    let window = cfg.window_or(1..=50);
    let report = InvariantReport::new(&Quantity::ALL, window, cfg.mode.unwrap_or_default())?;
    let records: Vec<ReportRecord> = report
        .rows
        .iter()
        .map(|row| {
            let (value_re, value_im) = match &row.value {
                Some(v) => decimal_parts(v, cfg.precision_digits),
                None => ("NA".into(), "NA".into()),
            };
            ReportRecord {
                quantity: row.quantity.name(),
                d: row.point.d,
                sign: row.point.sign.symbol(),
                value_re,
                value_im,
                prediction: row.prediction.to_string(),
                mode: row.value.as_ref().map_or("none", |v| v.mode().name()),
                status: if row.pass { "PASS" } else { "FAIL" },
            }
        })
        .collect();
    let fields = |r: &ReportRecord| {
        [
            r.quantity.to_string(),
            r.d.to_string(),
            r.sign.to_string(),
            r.value_re.clone(),
            r.value_im.clone(),
            r.prediction.clone(),
            r.mode.to_string(),
            r.status.to_string(),
        ]
    };
    let mut out = String::new();
    match cfg.format_or(OutputFormat::Csv) {
        OutputFormat::Csv | OutputFormat::Text => {
            writeln!(out, "{}", REPORT_HEADER.join(",")).unwrap();
            for r in &records {
                writeln!(out, "{}", fields(r).join(",")).unwrap();
            }
        }
        OutputFormat::Md => {
            writeln!(out, "| {} |", REPORT_HEADER.join(" | ")).unwrap();
            writeln!(out, "|{}", "---|".repeat(REPORT_HEADER.len())).unwrap();
            for r in &records {
                writeln!(out, "| {} |", fields(r).join(" | ")).unwrap();
            }
        }
        OutputFormat::Json => {
            out = serde_json::to_string_pretty(&records).expect("rows serialize") + "\n";
        }
    }
    Ok((out, report.all_pass()))
}

/// Parses `+` or `-`.
pub fn parse_sign(s: &str) -> Result<Sign> {
    match s {
        "+" | "plus" => Ok(Sign::Plus),
        "-" | "minus" => Ok(Sign::Minus),
        _ => Err(CliError::Usage(format!("sign must be + or -, got {s:?}"))),
    }
}

/// Parses a comma-separated color list.
pub fn parse_colors(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|c| {
            c.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad color {c:?} in {s:?}")))
        })
        .collect()
}

pub fn parse_mode(s: &str) -> Result<ArithMode> {
    Ok(s.parse::<ArithMode>()?)
}
