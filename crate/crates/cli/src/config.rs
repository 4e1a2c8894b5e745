use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::ValueEnum;
use permrecon::{GeneratorKind, Limits};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// Degrees given as `5`, `3..6` (inclusive) or `3,5,7`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(into = "String")]
pub struct Degrees(pub Vec<usize>);

impl FromStr for Degrees {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("invalid degree list {s:?}");
        let mut out = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            if let Some((lo, hi)) = part.split_once("..") {
                let lo: usize = lo.trim().parse().map_err(|_| bad())?;
                let hi: usize = hi.trim_start_matches('=').trim().parse().map_err(|_| bad())?;
                if lo > hi {
                    return Err(bad());
                }
                out.extend(lo..=hi);
            } else {
                out.push(part.parse().map_err(|_| bad())?);
            }
        }
        if out.is_empty() {
            return Err(bad());
        }
        Ok(Degrees(out))
    }
}

impl fmt::Display for Degrees {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|n| n.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl From<Degrees> for String {
    fn from(d: Degrees) -> String {
        d.to_string()
    }
}

impl<'de> Deserialize<'de> for Degrees {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            One(usize),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::One(n) => Ok(Degrees(vec![n])),
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// Generator kinds given as `T`, `t,st` and so on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(into = "String")]
pub struct Kinds(pub Vec<GeneratorKind>);

impl FromStr for Kinds {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let kinds = s
            .split(',')
            .map(|k| k.trim().parse::<GeneratorKind>().map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Kinds(kinds))
    }
}

impl From<Kinds> for String {
    fn from(k: Kinds) -> String {
        k.0.iter().map(|k| k.short_name()).collect::<Vec<_>>().join(",")
    }
}

impl<'de> Deserialize<'de> for Kinds {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Keys accepted in a `--config` TOML file. Flags override them.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct FileConfig {
    pub format: Option<Format>,
    pub workers: Option<usize>,
    pub cache_dir: Option<PathBuf>,
    pub max_ball: Option<usize>,
    pub max_whole_n: Option<usize>,
    pub graph: Option<Kinds>,
    pub n: Option<Degrees>,
    pub r: Option<usize>,
    pub seed: Option<u64>,
    pub trials: Option<u64>,
    pub max_n: Option<usize>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    }
}

/// Settings shared by every command after merging defaults, file and flags.
#[derive(Clone, Debug, Serialize)]
pub struct Settings {
    pub format: Format,
    pub workers: Option<usize>,
    pub cache_dir: Option<PathBuf>,
    pub max_ball: usize,
    pub max_whole_n: usize,
}

impl Settings {
    pub fn limits(&self) -> Limits {
        Limits {
            max_ball: self.max_ball,
            whole_graph_max_n: self.max_whole_n,
            ..Limits::default()
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.max_ball == 0 || self.max_whole_n == 0 || self.workers == Some(0) {
            return Err(CliError::Usage("budgets and worker counts must be positive".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_lists() {
        assert_eq!("5".parse::<Degrees>().unwrap().0, vec![5]);
        assert_eq!("3..6".parse::<Degrees>().unwrap().0, vec![3, 4, 5, 6]);
        assert_eq!("3..=4,7".parse::<Degrees>().unwrap().0, vec![3, 4, 7]);
        assert!("6..3".parse::<Degrees>().is_err());
        assert!("x".parse::<Degrees>().is_err());
    }

    #[test]
    fn file_config_rejects_unknown_keys() {
        let ok: FileConfig = toml::from_str("n = 5\ngraph = \"T,st\"\nmax-ball = 10\n").unwrap();
        assert_eq!(ok.n.unwrap().0, vec![5]);
        assert_eq!(ok.graph.unwrap().0.len(), 2);
        let ranged: FileConfig = toml::from_str("n = \"3..5\"").unwrap();
        assert_eq!(ranged.n.unwrap().0, vec![3, 4, 5]);
        assert!(toml::from_str::<FileConfig>("colour = 1").is_err());
    }
}
