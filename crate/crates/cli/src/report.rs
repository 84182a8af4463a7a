use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub paper_anchor: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_discrepancy: Option<String>,
}

impl Check {
    /// A check that passes iff `first_discrepancy` is `None`.
    pub fn new(
        name: impl Into<String>,
        anchor: &'static str,
        first_discrepancy: Option<String>,
    ) -> Self {
        Check {
            name: name.into(),
            paper_anchor: anchor,
            status: Status::from_bool(first_discrepancy.is_none()),
            value: None,
            first_discrepancy,
        }
    }

    pub fn with_value(mut self, value: impl Into<String>) -> Self {
        self.value = Some(value.into());
        self
    }
}

#[derive(Debug, Serialize)]
pub struct Report<C: Serialize> {
    pub command: &'static str,
    pub config: C,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<serde_json::Value>,
    pub verdict: Status,
}

impl<C: Serialize> Report<C> {
    pub fn new(
        command: &'static str,
        config: C,
        checks: Vec<Check>,
        data: Option<serde_json::Value>,
    ) -> Self {
        let verdict = Status::from_bool(checks.iter().all(|c| c.status == Status::Pass));
        Report {
            command,
            config,
            checks,
            data,
            verdict,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Status::Pass
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report is plain data");
        out.push('\n');
        out
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "command",
            "name",
            "paper_anchor",
            "status",
            "value",
            "first_discrepancy",
        ])
        .expect("in-memory write");
        for c in &self.checks {
            w.write_record([
                self.command,
                &c.name,
                c.paper_anchor,
                c.status.as_str(),
                c.value.as_deref().unwrap_or(""),
                c.first_discrepancy.as_deref().unwrap_or(""),
            ])
            .expect("in-memory write");
        }
        w.write_record([self.command, "verdict", "", self.verdict.as_str(), "", ""])
            .expect("in-memory write");
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 fields")
    }

    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.command);
        for c in &self.checks {
            let _ = write!(out, "  [{}] {}", c.status.as_str(), c.name);
            if let Some(v) = &c.value {
                let _ = write!(out, " = {v}");
            }
            let _ = writeln!(out, "    ({})", c.paper_anchor);
            if let Some(d) = &c.first_discrepancy {
                let _ = writeln!(out, "      first discrepancy: {d}");
            }
        }
        let _ = writeln!(out, "verdict: {}", self.verdict.as_str());
        out
    }
}
