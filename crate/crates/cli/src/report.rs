//! The machine-readable result record. One report per computed case, emitted
//! as a single JSON line so sweeps stream; big integers travel as decimal
//! strings because e0 outgrows double-precision JSON numbers quickly.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub input: String,
    pub n: u64,
    pub d: Option<u64>,
    pub mu: Option<String>,
    pub s: Option<u64>,
    pub e0_formula: Option<String>,
    pub e0_engine: Option<String>,
    #[serde(rename = "match")]
    pub matched: Option<bool>,
    pub ms: u64,
}

impl Report {
    pub fn new(input: impl Into<String>, n: u64) -> Self {
        Report {
            input: input.into(),
            n,
            d: None,
            mu: None,
            s: None,
            e0_formula: None,
            e0_engine: None,
            matched: None,
            ms: 0,
        }
    }

    pub fn json(&self) -> String {
        serde_json::to_string(self).expect("report has no non-serializable fields")
    }

    pub fn human(&self) -> String {
        let mut parts = vec![self.input.clone(), format!("n={}", self.n)];
        if let Some(d) = self.d {
            parts.push(format!("d={d}"));
        }
        if let Some(mu) = &self.mu {
            parts.push(format!("mu={mu}"));
        }
        if let Some(s) = self.s {
            parts.push(format!("s={s}"));
        }
        if let Some(f) = &self.e0_formula {
            parts.push(format!("e0(formula)={f}"));
        }
        if let Some(e) = &self.e0_engine {
            parts.push(format!("e0(engine)={e}"));
        }
        if let Some(m) = self.matched {
            parts.push(format!("match={}", if m { "yes" } else { "NO" }));
        }
        parts.push(format!("[{} ms]", self.ms));
        parts.join("  ")
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            self.json()
        } else {
            self.human()
        }
    }
}
