//! Serialization helpers: exact rationals as `"p/q"` strings, floats with 17
//! significant digits, CSV tables and error reports.

use std::fmt::Write as _;

use serde_json::{json, Number, Value};
use xjacobi::rational::{fmt_rat, Rat};
use xjacobi::{Error, RatPoly};

/// Output encoding of a command result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// One compact JSON object per command.
    Json,
    /// Comma-separated values (Gram matrices and spectra only).
    Csv,
    /// Indented JSON.
    Pretty,
}

/// An exact rational as a JSON string.
pub fn rat(r: &Rat) -> Value {
    Value::String(fmt_rat(r))
}

/// Rationals as a JSON array of strings.
pub fn rats<'a>(rs: impl IntoIterator<Item = &'a Rat>) -> Value {
    Value::Array(rs.into_iter().map(rat).collect())
}

/// Ascending coefficients of a polynomial.
pub fn poly(p: &RatPoly) -> Value {
    Value::Array(p.coeff_strings().into_iter().map(Value::String).collect())
}

/// A float rendered with 17 significant digits; non-finite values become `null`.
pub fn float(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let s = format!("{x:.16e}");
    serde_json::from_str::<Number>(&s).map(Value::Number).unwrap_or(Value::Null)
}

/// Floats as a JSON array.
pub fn floats(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| float(x)).collect())
}

/// A matrix of floats as nested arrays.
pub fn matrix(m: &[Vec<f64>]) -> Value {
    Value::Array(m.iter().map(|row| floats(row)).collect())
}

fn csv_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// CSV rows of a labelled square matrix, header `label,<labels...>`.
pub fn csv_matrix(labels: &[usize], m: &[Vec<f64>]) -> String {
    let mut out = String::from("label");
    for l in labels {
        let _ = write!(out, ",{l}");
    }
    out.push('\n');
    for (l, row) in labels.iter().zip(m) {
        let _ = write!(out, "{l}");
        for &x in row {
            let _ = write!(out, ",{}", csv_float(x));
        }
        out.push('\n');
    }
    out
}

/// CSV of `(η, value)` sample pairs.
pub fn csv_samples(samples: &[(f64, f64)]) -> String {
    let mut out = String::from("eta,value\n");
    for (x, y) in samples {
        let _ = writeln!(out, "{},{}", csv_float(*x), csv_float(*y));
    }
    out
}

/// Machine-readable kind of a library error.
pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::ZeroPolynomial => "ZeroPolynomial",
        Error::DegreeCollapse { .. } => "DegreeCollapse",
        Error::DegreeMismatch { .. } => "DegreeMismatch",
        Error::DivisionByZero(_) => "DivisionByZero",
        Error::SimpleRootViolation { .. } => "SimpleRootViolation",
        Error::RepeatedRoot(_) => "RepeatedRoot",
        Error::RangeViolation(_) => "RangeViolation",
        Error::NoSuchType(_) => "NoSuchType",
        Error::InvalidLambda(_) => "InvalidLambda",
        Error::EmptySpectrum(_) => "EmptySpectrum",
        Error::DivergentIntegral(_) => "DivergentIntegral",
        Error::WeightPoleInInterval => "WeightPoleInInterval",
        Error::AdmissibilityError(_) => "AdmissibilityError",
        Error::PoleInDomain => "PoleInDomain",
        Error::GridTooCoarse(_) => "GridTooCoarse",
        Error::Parse(_) => "Parse",
    }
}

/// JSON error report written to stderr.
pub fn error_json(kind: &str, message: &str) -> Value {
    json!({ "error": kind, "message": message })
}
