use partis::Rational;
use serde::Serialize;
use serde_json::Value;

use crate::Format;

/// Digits after the point in approximate decimal renderings.
pub const DECIMAL_DIGITS: usize = 6;

/// JSON shape shared by every subcommand.
#[derive(Debug, Serialize)]
pub struct Envelope {
    pub command: &'static str,
    pub inputs: Value,
    pub results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method_agreement: Option<bool>,
}

/// A finished command: its envelope, a human-readable rendering and the
/// process exit status.
#[derive(Debug)]
pub struct Report {
    pub envelope: Envelope,
    pub text: String,
    pub exit_code: u8,
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => report.text.clone(),
        Format::Json => {
            let mut out = serde_json::to_string_pretty(&report.envelope).expect("plain data");
            out.push('\n');
            out
        }
    }
}

pub fn fractions(values: &[Rational]) -> Vec<String> {
    values.iter().map(Rational::to_string).collect()
}

pub fn decimals(values: &[Rational]) -> Vec<String> {
    values.iter().map(decimal).collect()
}

pub fn decimal(value: &Rational) -> String {
    value.to_decimal_string(DECIMAL_DIGITS)
}

/// `11/16 (≈ 0.687500)`
pub fn annotated(value: &Rational) -> String {
    if value.is_integer() {
        value.to_string()
    } else {
        format!("{value} (≈ {})", decimal(value))
    }
}

pub fn join_annotated(values: &[Rational]) -> String {
    values.iter().map(annotated).collect::<Vec<_>>().join(", ")
}
