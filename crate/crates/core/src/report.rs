//! Output formats shared by the reports.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::Error;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Text,
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "text" | "txt" => Ok(OutputFormat::Text),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(Error::InvalidInput(format!("unknown format `{s}`"))),
        }
    }
}

/// Renders rows as an aligned text table or as CSV (header row first).
pub fn render_table(headers: &[&str], rows: &[Vec<String>], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Csv | OutputFormat::Json => {
            out.push_str(&headers.iter().map(|h| csv_field(h)).collect::<Vec<_>>().join(","));
            out.push('\n');
            for r in rows {
                out.push_str(&r.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(","));
                out.push('\n');
            }
        }
        OutputFormat::Text => {
            let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
            for r in rows {
                for (w, c) in widths.iter_mut().zip(r) {
                    *w = (*w).max(c.chars().count());
                }
            }
            let line = |cells: Vec<&str>, out: &mut String| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect();
                let _ = writeln!(out, "{}", padded.join("  ").trim_end());
            };
            line(headers.to_vec(), &mut out);
            let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
            let _ = writeln!(out, "{}", rule.join("  "));
            for r in rows {
                line(r.iter().map(String::as_str).collect(), &mut out);
            }
        }
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Serializes a big integer as a JSON number when it fits in `u128`, else as a string.
pub(crate) mod big {
    use num_bigint::BigUint;
    use num_traits::ToPrimitive;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        match x.to_u64() {
            Some(v) => s.serialize_u64(v),
            None => s.serialize_str(&x.to_string()),
        }
    }
}
