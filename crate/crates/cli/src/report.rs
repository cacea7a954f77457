use serde::Serialize;

use vsdo_core::{SzProvider, Vsdo};

/// Machine-readable summary printed by `build`, `verify` and `bench`.
#[derive(Debug, Default, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    pub n: usize,
    pub m: usize,
    pub max_weight: u64,
    /// 1-based, like every vertex on the command line.
    pub source: usize,
    pub eps: f64,
    pub sz_provider: String,
    pub build_seconds: f64,
    pub oracle_bytes: usize,
    pub nodes: usize,
    pub depth: u32,
    pub upd_entries: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub queries: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub query_p50_us: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub query_p99_us: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_ratio: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violations: Option<u64>,
}

impl RunReport {
    pub fn for_oracle(command: &'static str, o: &Vsdo, build_seconds: f64) -> Self {
        let st = o.stats();
        RunReport {
            command,
            n: o.n(),
            m: o.m(),
            max_weight: o.max_weight(),
            source: o.source() + 1,
            eps: o.config().eps,
            sz_provider: provider_name(o.config().sz_provider),
            build_seconds,
            oracle_bytes: o.to_bytes().len(),
            nodes: st.nodes,
            depth: st.depth,
            upd_entries: st.upd_entries,
            ..RunReport::default()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is plain data")
    }
}

fn provider_name(p: SzProvider) -> String {
    p.as_str().to_owned()
}

/// Nearest-rank percentile of an ascending slice.
pub fn percentile(sorted: &[f64], q: f64) -> f64 {
    if sorted.is_empty() {
        return 0.0;
    }
    let rank = (q * sorted.len() as f64).ceil() as usize;
    sorted[rank.clamp(1, sorted.len()) - 1]
}
