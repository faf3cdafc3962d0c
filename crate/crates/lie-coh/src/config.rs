//! Runtime limits and output plumbing shared by the command-line
//! front end and the acceptance harness.

use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const DEFAULT_MAX_DIM: usize = 12;
pub const MAX_DIM_ENV: &str = "LIE_COH_MAX_DIM";

/// Cap resolution order: explicit flag, then the environment, then the
/// built-in default.
pub fn effective_max_dim(flag: Option<usize>) -> Result<usize> {
    let cap = match flag {
        Some(v) => v,
        None => match std::env::var(MAX_DIM_ENV) {
            Ok(raw) => raw
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Invalid(format!("bad {MAX_DIM_ENV} value {raw:?}")))?,
            Err(_) => DEFAULT_MAX_DIM,
        },
    };
    if cap == 0 {
        return Err(Error::Invalid("dimension cap must be positive".into()));
    }
    Ok(cap)
}

pub fn check_cap(dim: usize, cap: usize) -> Result<()> {
    if dim > cap {
        return Err(Error::CapExceeded(dim, cap));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
    Both,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            "both" => Ok(Format::Both),
            other => Err(Error::Invalid(format!(
                "format must be json, text, or both, not {other:?}"
            ))),
        }
    }
}

/// Where report text goes; stdout when no path is set.
pub struct OutputSink {
    path: Option<PathBuf>,
}

impl OutputSink {
    pub fn new(path: Option<PathBuf>) -> Self {
        OutputSink { path }
    }

    pub fn emit(&self, content: &str) -> Result<()> {
        match &self.path {
            Some(p) => std::fs::write(p, content)?,
            None => print!("{content}"),
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_parses() {
        assert_eq!("json".parse::<Format>().unwrap(), Format::Json);
        assert_eq!("BOTH".parse::<Format>().unwrap(), Format::Both);
        assert!("yaml".parse::<Format>().is_err());
    }

    #[test]
    fn cap_logic() {
        assert_eq!(effective_max_dim(Some(20)).unwrap(), 20);
        assert!(effective_max_dim(Some(0)).is_err());
        assert!(check_cap(8, 12).is_ok());
        assert!(matches!(check_cap(14, 12), Err(Error::CapExceeded(14, 12))));
    }
}
