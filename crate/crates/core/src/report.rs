//! Deterministic serialization of bound reports.
//!
//! Output is byte-stable across runs and platforms: fields appear in a
//! fixed order, every float is printed with 17 significant digits, and
//! infinities are spelled `inf` (quoted in JSON, bare in CSV). `None`
//! becomes JSON `null`; CSV has no null, so numeric columns fall back to
//! `0.0` and the premise column to `na`.

use crate::bounds::{BoundReport, ProtocolCurve};

/// 17-significant-digit decimal form, enough to round-trip an f64.
pub fn format_float(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else if x == f64::INFINITY {
        "inf".to_string()
    } else if x == f64::NEG_INFINITY {
        "-inf".to_string()
    } else {
        format!("{x:.16e}")
    }
}

fn json_number(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        format!("\"{}\"", format_float(x))
    }
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Ordered JSON object builder. Fields appear exactly in insertion order.
pub struct JsonObject {
    buf: String,
}

impl JsonObject {
    pub fn new() -> Self {
        JsonObject {
            buf: String::from("{"),
        }
    }

    fn key(&mut self, key: &str) {
        if self.buf.len() > 1 {
            self.buf.push(',');
        }
        self.buf.push_str(&json_string(key));
        self.buf.push(':');
    }

    pub fn number(&mut self, key: &str, value: f64) -> &mut Self {
        self.key(key);
        self.buf.push_str(&json_number(value));
        self
    }

    pub fn opt_number(&mut self, key: &str, value: Option<f64>) -> &mut Self {
        self.key(key);
        match value {
            Some(x) => self.buf.push_str(&json_number(x)),
            None => self.buf.push_str("null"),
        }
        self
    }

    pub fn string(&mut self, key: &str, value: &str) -> &mut Self {
        self.key(key);
        self.buf.push_str(&json_string(value));
        self
    }

    pub fn opt_string(&mut self, key: &str, value: Option<&str>) -> &mut Self {
        self.key(key);
        match value {
            Some(s) => self.buf.push_str(&json_string(s)),
            None => self.buf.push_str("null"),
        }
        self
    }

    pub fn boolean(&mut self, key: &str, value: bool) -> &mut Self {
        self.key(key);
        self.buf.push_str(if value { "true" } else { "false" });
        self
    }

    pub fn opt_boolean(&mut self, key: &str, value: Option<bool>) -> &mut Self {
        self.key(key);
        match value {
            Some(true) => self.buf.push_str("true"),
            Some(false) => self.buf.push_str("false"),
            None => self.buf.push_str("null"),
        }
        self
    }

    pub fn integer(&mut self, key: &str, value: u64) -> &mut Self {
        self.key(key);
        self.buf.push_str(&value.to_string());
        self
    }

    /// Insert pre-serialized JSON (a nested object or array) verbatim.
    pub fn raw(&mut self, key: &str, json: &str) -> &mut Self {
        self.key(key);
        self.buf.push_str(json);
        self
    }

    pub fn finish(mut self) -> String {
        self.buf.push('}');
        self.buf
    }
}

impl Default for JsonObject {
    fn default() -> Self {
        Self::new()
    }
}

/// JSON form of a bound report, fields in declaration order.
pub fn bound_report_json(report: &BoundReport) -> String {
    let mut obj = JsonObject::new();
    obj.string("method", report.method.name())
        .number("xi", report.xi)
        .number("w0", report.w0)
        .opt_number("e_threshold", report.e_threshold)
        .opt_number("epsilon_lb", report.epsilon_lb)
        .opt_number("t_prime_lb", report.t_prime_lb)
        .opt_number("t_prime_full", report.t_prime_full)
        .opt_number("t_prime_asymptote", report.t_prime_asymptote)
        .opt_number("exponent", report.exponent)
        .opt_number("slope_target", report.slope_target)
        .opt_number("f_mic", report.f_mic)
        .opt_number("f_can", report.f_can)
        .opt_number("c_can", report.c_can)
        .opt_number("omega", report.omega)
        .boolean("omega_clamped", report.omega_clamped)
        .boolean("omega_widened", report.omega_widened)
        .opt_number("omega_sensitivity", report.omega_sensitivity)
        .boolean("epsilon_clamped", report.epsilon_clamped)
        .opt_boolean("premise_ok", report.premise_ok)
        .opt_string("premise_detail", report.premise_detail.as_deref())
        .boolean("perfect_cooling", report.perfect_cooling)
        .boolean("fallback", report.fallback);
    obj.finish()
}

/// One row of a parameter sweep, already reduced to the CSV columns.
#[derive(Debug, Clone, Copy)]
pub struct ScanRow {
    pub param: f64,
    pub epsilon_lb: Option<f64>,
    pub t_prime_lb: Option<f64>,
    pub e_threshold: Option<f64>,
    pub premise_ok: Option<bool>,
}

impl ScanRow {
    pub fn from_report(param: f64, report: &BoundReport) -> Self {
        ScanRow {
            param,
            epsilon_lb: report.epsilon_lb,
            t_prime_lb: report.t_prime_lb,
            e_threshold: report.e_threshold,
            premise_ok: report.premise_ok,
        }
    }
}

fn csv_number(x: Option<f64>) -> String {
    format_float(x.unwrap_or(0.0))
}

/// CSV for a parameter sweep: header
/// `param,epsilon_lb,T_prime_lb,E_threshold,premise_ok`, one row per
/// sweep point, `\n` line endings.
pub fn scan_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from("param,epsilon_lb,T_prime_lb,E_threshold,premise_ok\n");
    for row in rows {
        let premise = match row.premise_ok {
            Some(true) => "true",
            Some(false) => "false",
            None => "na",
        };
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            format_float(row.param),
            csv_number(row.epsilon_lb),
            csv_number(row.t_prime_lb),
            csv_number(row.e_threshold),
            premise,
        ));
    }
    out
}

/// CSV for a protocol curve: header `t,T_prime,W`.
pub fn protocol_csv(curve: &ProtocolCurve) -> String {
    let mut out = String::from("t,T_prime,W\n");
    for p in &curve.points {
        out.push_str(&format!(
            "{},{},{}\n",
            format_float(p.time),
            format_float(p.t_prime),
            format_float(p.work),
        ));
    }
    out
}
