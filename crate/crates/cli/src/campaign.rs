//! Verification campaigns from a plain `key=value` file.
//!
//! ```text
//! # worker count, overridden by SPEX_THREADS
//! threads = 4
//! campaign.star-free = thm1.4 t=3 n-max=8
//! campaign.edges = lemma2.2 t=4 n-max=8
//! ```
//!
//! Campaigns run in file order.

use std::path::Path;

use anyhow::{bail, Context, Result};
use spex_core::search::{verify_theorem, TheoremTag, VerifyParams};

use crate::{render_verify, verify_params, Outcome};

#[derive(Debug)]
pub struct Config {
    pub threads: Option<usize>,
    pub campaigns: Vec<(String, TheoremTag, VerifyParams)>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Config::parse(&text).with_context(|| format!("in {}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Config> {
        let mut cfg = Config { threads: None, campaigns: Vec::new() };
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').with_context(|| format!("line {}: expected key = value", i + 1))?;
            let (key, value) = (key.trim(), value.trim());
            if key == "threads" {
                let k = value.parse().ok().filter(|&k: &usize| k > 0);
                cfg.threads = Some(k.with_context(|| format!("line {}: threads must be a positive integer", i + 1))?);
            } else if let Some(name) = key.strip_prefix("campaign.") {
                let mut words = value.split_whitespace();
                let tag: TheoremTag = words.next().with_context(|| format!("line {}: missing theorem tag", i + 1))?.parse()?;
                let pairs = words
                    .map(|w| w.split_once('=').map(|(k, v)| (k.to_string(), v.to_string())))
                    .collect::<Option<Vec<_>>>()
                    .with_context(|| format!("line {}: parameters must look like t=3", i + 1))?;
                let params = verify_params(&pairs).with_context(|| format!("line {}", i + 1))?;
                cfg.campaigns.push((name.to_string(), tag, params));
            } else {
                bail!("line {}: unknown key `{key}`", i + 1);
            }
        }
        if cfg.campaigns.is_empty() {
            bail!("no campaign.* entries");
        }
        Ok(cfg)
    }
}

pub fn run(cfg: &Config) -> Result<Outcome> {
    let mut text = String::new();
    let mut failed = 0;
    for (name, tag, params) in &cfg.campaigns {
        let report = verify_theorem(*tag, params).with_context(|| format!("campaign `{name}`"))?;
        failed += !report.passed as usize;
        text.push_str(&format!("campaign {name}\n"));
        text.push_str(&render_verify(&report));
    }
    text.push_str(&format!("{} of {} campaigns passed\n", cfg.campaigns.len() - failed, cfg.campaigns.len()));
    Ok(Outcome { text, code: if failed == 0 { 0 } else { 1 } })
}
