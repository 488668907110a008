use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

/// Library and front-end versions recorded in every report.
#[derive(Clone, Debug, Serialize)]
pub struct Versions {
    pub cli: &'static str,
    pub library: &'static str,
}

impl Versions {
    pub fn current() -> Self {
        Self { cli: env!("CARGO_PKG_VERSION"), library: bianchi_deform::VERSION }
    }
}

/// The JSON document written by every command.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub versions: Versions,
    /// Wall-clock seconds per stage; only present with `--timing` so that
    /// reports are otherwise reproducible byte for byte.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<BTreeMap<String, f64>>,
}

/// Collects per-stage wall-clock times when enabled.
pub struct Timer {
    enabled: bool,
    stages: BTreeMap<String, f64>,
}

impl Timer {
    pub fn new(enabled: bool) -> Self {
        Self { enabled, stages: BTreeMap::new() }
    }

    pub fn stage<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.enabled {
            *self.stages.entry(name.to_string()).or_default() += start.elapsed().as_secs_f64();
        }
        out
    }

    pub fn finish(self) -> Option<BTreeMap<String, f64>> {
        self.enabled.then_some(self.stages)
    }
}
