//! Run configuration: defaults, a `key = value` file, then command-line flags.

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::macdonald::CACHE_ENV;
use crate::report::parse_kv;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Structured,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<OutputFormat> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "structured" => Ok(OutputFormat::Structured),
            _ => Err(config_error(format!("unknown output format `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub max_degree: u32,
    pub m_order: u32,
    pub q_precision: u32,
    pub cache_dir: Option<PathBuf>,
    pub output_format: OutputFormat,
}

impl Default for Config {
    fn default() -> Config {
        Config {
            max_degree: 3,
            m_order: 4,
            q_precision: 10,
            cache_dir: None,
            output_format: OutputFormat::Text,
        }
    }
}

fn config_error(msg: String) -> Error {
    Error::Parse { pos: 0, msg }
}

fn positive(key: &str, v: &str) -> Result<u32> {
    match v.parse::<u32>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(config_error(format!("`{key}` must be a positive integer, got `{v}`"))),
    }
}

impl Config {
    /// Overlays the settings of a configuration file on `self`. Unknown keys
    /// are rejected.
    pub fn merge_text(mut self, text: &str) -> Result<Config> {
        let kv = parse_kv(text).map_err(config_error)?;
        for (k, v) in kv {
            match k.as_str() {
                "max_degree" => self.max_degree = positive(&k, &v)?,
                "m_order" => self.m_order = positive(&k, &v)?,
                "q_precision" => self.q_precision = positive(&k, &v)?,
                "cache_dir" => self.cache_dir = Some(PathBuf::from(v)),
                "output_format" => self.output_format = v.parse()?,
                _ => return Err(config_error(format!("unknown configuration key `{k}`"))),
            }
        }
        Ok(self)
    }

    pub fn merge_file(self, path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path)?;
        self.merge_text(&text)
    }

    /// Fills `cache_dir` from the environment when nothing else set it.
    pub fn with_env(mut self) -> Config {
        if self.cache_dir.is_none() {
            self.cache_dir = std::env::var_os(CACHE_ENV).map(PathBuf::from);
        }
        self
    }

    /// The cache directory if it can be created and written to. An unusable
    /// directory disables caching instead of failing the run.
    pub fn usable_cache_dir(&self) -> Option<PathBuf> {
        let dir = self.cache_dir.as_ref()?;
        std::fs::create_dir_all(dir).ok()?;
        let probe = dir.join(format!(".qtfock-probe-{}", std::process::id()));
        std::fs::write(&probe, b"").ok()?;
        let _ = std::fs::remove_file(&probe);
        Some(dir.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge() {
        let c = Config::default()
            .merge_text("# run\nmax_degree = 5\noutput_format = structured\n")
            .unwrap();
        assert_eq!(c.max_degree, 5);
        assert_eq!(c.m_order, 4);
        assert_eq!(c.output_format, OutputFormat::Structured);
        assert!(Config::default().merge_text("max_degree = 0").is_err());
        assert!(Config::default().merge_text("colour = red").is_err());
        assert!(Config::default().merge_text("no equals sign").is_err());
    }

    #[test]
    fn unwritable_cache_is_dropped() {
        let c = Config {
            cache_dir: Some(PathBuf::from("/proc/qtfock-no-such-dir")),
            ..Config::default()
        };
        assert_eq!(c.usable_cache_dir(), None);
    }
}
