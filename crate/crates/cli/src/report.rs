use std::fmt;

/// 12 significant digits, plain decimal where readable, scientific outside
pub fn sig12(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let mag = v.abs().log10().floor() as i32;
    if (-4..12).contains(&mag) {
        let dec = (11 - mag).max(0) as usize;
        format!("{v:.dec$}")
    } else {
        format!("{v:.11e}")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Pass,
    Fail,
    Na,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Na => "n/a",
        })
    }
}

/// One verifiable line of output: what ran, what came out, and (when a
/// reference value exists) whether the result landed inside the window.
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<(String, String)>,
    pub outputs: Vec<(String, String)>,
    pub reference: Option<(f64, f64)>,
    pub verdict: Verdict,
}

impl RunReport {
    /// verdict pass ⇔ |value − reference.0| ≤ reference.1
    pub fn checked(name: impl Into<String>, value: f64, reference: (f64, f64)) -> Self {
        let verdict = if (value - reference.0).abs() <= reference.1 {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        RunReport {
            command: name.into(),
            inputs: Vec::new(),
            outputs: vec![("value".into(), sig12(value))],
            reference: Some(reference),
            verdict,
        }
    }

    pub fn predicate(name: impl Into<String>, detail: impl Into<String>, ok: bool) -> Self {
        RunReport {
            command: name.into(),
            inputs: Vec::new(),
            outputs: vec![("detail".into(), detail.into())],
            reference: None,
            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        }
    }

    pub fn info(name: impl Into<String>, detail: impl Into<String>) -> Self {
        RunReport {
            command: name.into(),
            inputs: Vec::new(),
            outputs: vec![("detail".into(), detail.into())],
            reference: None,
            verdict: Verdict::Na,
        }
    }

    pub fn value_str(&self) -> &str {
        self.outputs.first().map(|(_, v)| v.as_str()).unwrap_or("")
    }

    pub fn reference_str(&self) -> String {
        self.reference
            .map(|(v, tol)| format!("{v} ± {tol}"))
            .unwrap_or_default()
    }

    pub fn inputs_str(&self) -> String {
        self.inputs
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

pub fn print_report_table(rows: &[RunReport]) {
    println!(
        "{:<56} {:>24} {:>18} {:>7}",
        "check", "value", "reference", "verdict"
    );
    for r in rows {
        println!(
            "{:<56} {:>24} {:>18} {:>7}",
            r.command,
            r.value_str(),
            r.reference_str(),
            r.verdict.to_string()
        );
    }
    let pass = rows.iter().filter(|r| r.verdict == Verdict::Pass).count();
    let fail = rows.iter().filter(|r| r.verdict == Verdict::Fail).count();
    let na = rows.iter().filter(|r| r.verdict == Verdict::Na).count();
    println!("result: {pass} pass, {fail} fail, {na} n/a");
}
