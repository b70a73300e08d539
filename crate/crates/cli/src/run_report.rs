use jordan_geom::report::ResidualReport;
use serde::Serialize;
use serde_json::Value;

/// Machine-readable result of one command; `pass` decides the exit code.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub seed: u64,
    pub checks: Vec<ResidualReport>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<Value>,
    /// Seconds; the only field that varies between identical runs.
    pub wall_time: f64,
}

impl RunReport {
    pub fn new(command: String, seed: u64, checks: Vec<ResidualReport>, output: Option<Value>, wall_time: f64) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        RunReport {
            command,
            seed,
            checks,
            pass,
            output,
            wall_time,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }

    /// One line per check for stderr.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            match &c.note {
                Some(n) => s.push_str(&format!("{status} {}: {n}\n", c.name)),
                None => s.push_str(&format!(
                    "{status} {}: max {:.3e} (tol {:.1e}, {} samples)\n",
                    c.name, c.max_abs, c.tol, c.samples
                )),
            }
        }
        s
    }
}
