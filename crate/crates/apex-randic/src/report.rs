//! Report envelope shared by the CLI: every JSON report embeds the tool
//! version and the configuration it ran under. Wall time goes to stderr so
//! reports stay byte-identical across runs and parallelism degrees.

use serde::Serialize;

pub const TOOL: &str = "apexrandic";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
pub struct Envelope<T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: String,
    pub report: T,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(config: String, report: T) -> Self {
        Envelope {
            tool: TOOL,
            version: VERSION,
            config,
            report,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}
