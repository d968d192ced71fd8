//! Optional `key=value` settings file. Command-line flags take precedence.

use std::path::Path;

use anyhow::{bail, Context, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Config {
    pub workers: Option<usize>,
    pub order_cap: Option<usize>,
    pub search_cap: Option<u128>,
    pub pws_cap: Option<usize>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        Config::parse(&text).with_context(|| format!("in config {}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Config> {
        let mut cfg = Config::default();
        for (no, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                bail!("line {}: expected key=value", no + 1);
            };
            let value = value.trim();
            let bad = || format!("line {}: bad value `{value}` for {}", no + 1, key.trim());
            match key.trim() {
                "workers" => cfg.workers = Some(value.parse().with_context(bad)?),
                "order_cap" => cfg.order_cap = Some(value.parse().with_context(bad)?),
                "search_cap" => cfg.search_cap = Some(value.parse().with_context(bad)?),
                "pws_cap" => cfg.pws_cap = Some(value.parse().with_context(bad)?),
                other => bail!("line {}: unknown key `{other}`", no + 1),
            }
        }
        if cfg.workers == Some(0) {
            bail!("workers must be at least 1");
        }
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_known_keys() {
        let cfg = Config::parse("# caps\nworkers = 2\nsearch_cap=1000\n\npws_cap=10 # small\n").unwrap();
        assert_eq!(cfg, Config { workers: Some(2), order_cap: None, search_cap: Some(1000), pws_cap: Some(10) });
        assert!(Config::parse("threads=2").is_err());
        assert!(Config::parse("workers=0").is_err());
        assert!(Config::parse("workers").is_err());
    }
}
