use std::time::Instant;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    pub witness: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub suite: String,
    pub seed: u64,
    pub version: String,
    pub checks: Vec<CheckRecord>,
    pub status: Status,
}

impl RunReport {
    pub fn new(suite: &str, seed: u64) -> Self {
        RunReport {
            suite: suite.to_string(),
            seed,
            version: env!("CARGO_PKG_VERSION").to_string(),
            checks: Vec::new(),
            status: Status::Pass,
        }
    }

    /// Run one check, turning errors into failures.
    pub fn check(
        &mut self,
        name: impl Into<String>,
        timing: bool,
        f: impl FnOnce() -> ncsphere::Result<(bool, String)>,
    ) {
        let start = Instant::now();
        let (status, witness) = match f() {
            Ok((true, w)) => (Status::Pass, w),
            Ok((false, w)) => (Status::Fail, w),
            Err(e) => (Status::Fail, format!("error: {e}")),
        };
        let elapsed_ms = timing.then(|| start.elapsed().as_millis() as u64);
        self.push(CheckRecord { name: name.into(), status, witness, elapsed_ms });
    }

    pub fn push(&mut self, rec: CheckRecord) {
        if rec.status == Status::Fail {
            self.status = Status::Fail;
        }
        self.checks.push(rec);
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite {} (seed {})\n", self.suite, self.seed);
        for c in &self.checks {
            let t = c.elapsed_ms.map(|ms| format!(" [{ms} ms]")).unwrap_or_default();
            out.push_str(&format!("{} {}{}: {}\n", c.status.label(), c.name, t, c.witness));
        }
        out.push_str(&format!("{}\n", self.status.label()));
        out
    }
}
