//! Interval-list CSV input and CSV report output.
//!
//! Interval lists are UTF-8 CSV with a header line `a,b`, one support per
//! row, and `#`-prefixed comment lines. Numbers are written with 17
//! significant digits in `%.17g` style so every value round-trips exactly.

use std::path::Path;

use crate::error::{BoundError, Result};
use crate::interval::Interval;
use crate::tail::{IntervalSet, TailBoundReport};

pub const REPORT_HEADER: &str = "n,m_sq,n_sq,sum_a_sq,sum_g_sq,t,form,sidedness,kind,bound,optimal_s";
pub const LEMMA_HEADER: &str = "s,margin";
pub const MONTE_CARLO_HEADER: &str = "estimate,ci_upper_99,bound,pass";

/// Parses an interval list from any reader. Rows are numbered from 1 at the
/// header line, counting comment lines, so messages point at the file line.
pub fn read_intervals<R: std::io::Read>(reader: R) -> Result<IntervalSet> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(reader);
    let mut items = Vec::new();
    let mut saw_header = false;
    for record in rdr.records() {
        let record = record.map_err(|e| BoundError::Parse {
            row: e.position().map_or(0, |p| p.line() as usize),
            message: e.to_string(),
        })?;
        let row = record.position().map_or(0, |p| p.line() as usize);
        if !saw_header {
            let fields: Vec<&str> = record.iter().collect();
            if fields != ["a", "b"] {
                return Err(BoundError::Parse {
                    row,
                    message: format!("expected header 'a,b', found '{}'", fields.join(",")),
                });
            }
            saw_header = true;
            continue;
        }
        if record.len() != 2 {
            return Err(BoundError::Parse {
                row,
                message: format!("expected 2 fields, found {}", record.len()),
            });
        }
        let parse = |field: &str, name: &str| -> Result<f64> {
            field.parse::<f64>().map_err(|_| BoundError::Parse {
                row,
                message: format!("{name} = '{field}' is not a decimal number"),
            })
        };
        let a = parse(&record[0], "a")?;
        let b = parse(&record[1], "b")?;
        let iv = Interval::new(a, b).map_err(|e| BoundError::Parse {
            row,
            message: e.to_string(),
        })?;
        items.push(iv);
    }
    if !saw_header {
        return Err(BoundError::EmptySet);
    }
    IntervalSet::new(items)
}

pub fn read_intervals_file(path: &Path) -> Result<IntervalSet> {
    let file = std::fs::File::open(path)
        .map_err(|e| BoundError::Io(format!("{}: {e}", path.display())))?;
    read_intervals(file)
}

pub fn write_intervals(set: &IntervalSet) -> String {
    let mut out = String::from("a,b\n");
    for iv in set {
        out.push_str(&format!("{},{}\n", fmt_num(iv.a()), fmt_num(iv.b())));
    }
    out
}

/// `%.17g`-style formatting: 17 significant digits, trailing zeros trimmed,
/// exponent notation outside `[1e-5, 1e17)`.
pub fn fmt_num(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..17).contains(&exp) {
        let decimals = (16 - exp) as usize;
        trim_zeros(format!("{:.*}", decimals, x))
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", trim_zeros(mantissa.to_string()), sign, exp.abs())
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// Log-reported values print as `exp(<ln>)`.
pub fn fmt_probability(value: f64, ln_value: f64) -> String {
    if value < crate::tail::LOG_REPORT_THRESHOLD {
        format!("exp({})", fmt_num(ln_value))
    } else {
        fmt_num(value)
    }
}

pub fn report_row(report: &TailBoundReport) -> String {
    let s = &report.scales;
    format!(
        "{},{},{},{},{},{},{},{},{},{},{}",
        s.n,
        fmt_num(s.m_sq),
        fmt_num(s.n_sq),
        fmt_num(s.sum_a_sq),
        fmt_num(s.sum_g_sq),
        fmt_num(report.t),
        report.form.as_str(),
        report.sidedness.as_str(),
        report.kind.as_str(),
        fmt_probability(report.bound, report.ln_bound),
        fmt_num(report.optimal_s),
    )
}
