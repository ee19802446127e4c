//! Verification reports and the line-oriented key/value format shared by
//! reports and configuration files.

use std::fmt;

pub const REPORT_HEADER: &str = "# qtfock-report v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub identity: String,
    pub parameters: Vec<(String, String)>,
    pub status: Status,
    pub checked: usize,
    pub first_discrepancy: Option<String>,
    /// Extra output rows such as series coefficients.
    pub rows: Vec<(String, String)>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(identity: &str) -> Report {
        Report {
            identity: identity.to_string(),
            parameters: Vec::new(),
            status: Status::Inconclusive,
            checked: 0,
            first_discrepancy: None,
            rows: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// A report that only lists rows; it has nothing to check and passes.
    pub fn listing(identity: &str) -> Report {
        Report {
            status: Status::Pass,
            ..Report::new(identity)
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Report {
        self.parameters.push((key.to_string(), value.to_string()));
        self
    }

    /// Counts one checked instance; the first failure's description is kept.
    pub fn check<F: FnOnce() -> String>(&mut self, ok: bool, describe: F) {
        self.checked += 1;
        if ok {
            if self.status == Status::Inconclusive {
                self.status = Status::Pass;
            }
        } else {
            if self.first_discrepancy.is_none() {
                self.first_discrepancy = Some(describe());
            }
            self.status = Status::Fail;
        }
    }

    /// Marks the whole report inconclusive unless it already failed.
    pub fn inconclusive(&mut self, why: &str) {
        if self.status != Status::Fail {
            self.status = Status::Inconclusive;
        }
        self.notes.push(why.to_string());
    }

    pub fn row(&mut self, key: impl fmt::Display, value: impl fmt::Display) {
        self.rows.push((key.to_string(), value.to_string()));
    }

    pub fn note(&mut self, s: impl fmt::Display) {
        self.notes.push(s.to_string());
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Folds another report's checks into this one.
    pub fn absorb(&mut self, o: &Report) {
        for _ in 0..o.checked.saturating_sub(usize::from(o.status == Status::Fail)) {
            self.check(true, String::new);
        }
        if o.status == Status::Fail {
            let d = o.first_discrepancy.clone().unwrap_or_default();
            self.check(false, || format!("{}: {d}", o.identity));
        }
    }

    pub fn to_structured(&self) -> String {
        let mut out = String::new();
        out.push_str(REPORT_HEADER);
        out.push('\n');
        push_kv(&mut out, "identity", &self.identity);
        for (k, v) in &self.parameters {
            push_kv(&mut out, &format!("param.{k}"), v);
        }
        push_kv(&mut out, "status", &self.status.to_string());
        push_kv(&mut out, "checked", &self.checked.to_string());
        push_kv(
            &mut out,
            "first_discrepancy",
            self.first_discrepancy.as_deref().unwrap_or("none"),
        );
        for (k, v) in &self.rows {
            push_kv(&mut out, &format!("row.{k}"), v);
        }
        for n in &self.notes {
            push_kv(&mut out, "note", n);
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {}", self.identity, self.status);
        if !self.parameters.is_empty() {
            let ps: Vec<String> = self
                .parameters
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            out.push_str(&format!(" [{}]", ps.join(", ")));
        }
        if self.checked > 0 {
            out.push_str(&format!(" ({} instances checked)", self.checked));
        }
        out.push('\n');
        for (k, v) in &self.rows {
            out.push_str(&format!("  {k}: {v}\n"));
        }
        if let Some(d) = &self.first_discrepancy {
            out.push_str(&format!("  first discrepancy: {d}\n"));
        }
        for n in &self.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        out
    }
}

fn push_kv(out: &mut String, k: &str, v: &str) {
    // Values stay on one line.
    let v = v.replace('\n', "\\n");
    out.push_str(&format!("{k} = {v}\n"));
}

/// Parses `key = value` lines; blank lines and `#` comments are skipped.
pub fn parse_kv(text: &str) -> Result<Vec<(String, String)>, String> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(format!("line {}: expected `key = value`", n + 1));
        };
        out.push((k.trim().to_string(), v.trim().replace("\\n", "\n")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structured_round_trip() {
        let mut r = Report::new("demo").param("max_degree", 3);
        r.check(true, String::new);
        r.check(false, || "lhs = 1\nrhs = 2".into());
        r.check(false, || "second".into());
        let s = r.to_structured();
        assert!(s.starts_with(REPORT_HEADER));
        let kv = parse_kv(&s).unwrap();
        assert!(kv.contains(&("status".into(), "fail".into())));
        assert!(kv.contains(&("first_discrepancy".into(), "lhs = 1\nrhs = 2".into())));
        assert!(kv.contains(&("param.max_degree".into(), "3".into())));
    }
}
