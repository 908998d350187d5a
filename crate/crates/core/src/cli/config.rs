//! Flat `key = value` configuration for the verification batteries.
//!
//! ```text
//! # comments start with '#'
//! systems = A1,A2,B2,G2,A3
//! primes = 2,3,5
//! exponents = 1,2
//! radius = 5
//! suites = bott,orthogonality,demazure,kempf,grr,p1,steinberg
//! ```

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Serialize;

use crate::charring::is_prime;
use crate::error::{Error, Result};
use crate::rootsys::RootSystemSpec;

/// Environment variable naming a config file.
pub const CONFIG_ENV: &str = "STEINBERG_LAB_CONFIG";

/// Verification suites, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Bott,
    Orthogonality,
    Demazure,
    Kempf,
    Grr,
    P1,
    Steinberg,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Bott,
        Suite::Orthogonality,
        Suite::Demazure,
        Suite::Kempf,
        Suite::Grr,
        Suite::P1,
        Suite::Steinberg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bott => "bott",
            Suite::Orthogonality => "orthogonality",
            Suite::Demazure => "demazure",
            Suite::Kempf => "kempf",
            Suite::Grr => "grr",
            Suite::P1 => "p1",
            Suite::Steinberg => "steinberg",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| {
                Error::Invalid(format!(
                    "unknown suite '{s}' (expected one of bott, orthogonality, demazure, kempf, grr, p1, steinberg)"
                ))
            })
    }
}

/// Parameters of a verification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    #[serde(serialize_with = "ser_systems")]
    pub systems: Vec<RootSystemSpec>,
    pub primes: Vec<u64>,
    pub exponents: Vec<u32>,
    /// Box radius for on-wall weights in the orthogonality battery.
    pub radius: i64,
    pub suites: Vec<Suite>,
    /// Box radius for the Bott consistency sweep.
    pub bott_radius: i64,
    /// Coordinate bound for Demazure identity checks.
    pub demazure_radius: i64,
    /// Coordinate bound for dominant weights in the Kempf suite.
    pub kempf_radius: i64,
    /// Only prime powers `q <= kempf_max_q` enter the Kempf suite.
    pub kempf_max_q: u64,
    /// Degree window `[-p1_degree, p1_degree]` for the projective-line suite.
    pub p1_degree: i64,
    /// Suites whose expected values are deliberately perturbed (golden-run fixture).
    pub tamper: Vec<Suite>,
}

fn ser_systems<S: serde::Serializer>(systems: &[RootSystemSpec], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(systems.iter().map(ToString::to_string))
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            systems: ["A1", "A2", "B2", "G2", "A3"]
                .iter()
                .map(|s| s.parse().expect("built-in systems are admissible"))
                .collect(),
            primes: vec![2, 3, 5],
            exponents: vec![1, 2],
            radius: 5,
            suites: Suite::ALL.to_vec(),
            bott_radius: 3,
            demazure_radius: 3,
            kempf_radius: 2,
            kempf_max_q: 4,
            p1_degree: 20,
            tamper: Vec::new(),
        }
    }
}

fn parse_list<T: FromStr>(key: &str, value: &str) -> Result<Vec<T>> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<T>()
                .map_err(|_| Error::Invalid(format!("bad value '{s}' for key '{key}'")))
        })
        .collect()
}

fn parse_scalar<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .trim()
        .parse()
        .map_err(|_| Error::Invalid(format!("bad value '{}' for key '{key}'", value.trim())))
}

impl SuiteConfig {
    /// Parses config text; keys not mentioned keep their defaults.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = SuiteConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Invalid(format!(
                    "config line {}: expected 'key = value', got '{line}'",
                    lineno + 1
                ))
            })?;
            let key = key.trim();
            match key {
                "systems" => {
                    cfg.systems = value
                        .split(',')
                        .map(str::trim)
                        .filter(|s| !s.is_empty())
                        .map(str::parse)
                        .collect::<Result<_>>()?
                }
                "primes" => cfg.primes = parse_list(key, value)?,
                "exponents" => cfg.exponents = parse_list(key, value)?,
                "radius" => cfg.radius = parse_scalar(key, value)?,
                "suites" => {
                    cfg.suites = value
                        .split(',')
                        .map(str::trim)
                        .filter(|s| !s.is_empty())
                        .map(str::parse)
                        .collect::<Result<_>>()?
                }
                "bott_radius" => cfg.bott_radius = parse_scalar(key, value)?,
                "demazure_radius" => cfg.demazure_radius = parse_scalar(key, value)?,
                "kempf_radius" => cfg.kempf_radius = parse_scalar(key, value)?,
                "kempf_max_q" => cfg.kempf_max_q = parse_scalar(key, value)?,
                "p1_degree" => cfg.p1_degree = parse_scalar(key, value)?,
                "tamper" => {
                    cfg.tamper = value
                        .split(',')
                        .map(str::trim)
                        .filter(|s| !s.is_empty())
                        .map(str::parse)
                        .collect::<Result<_>>()?
                }
                other => return Err(Error::Invalid(format!("unknown config key '{other}'"))),
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.suites.is_empty() {
            return Err(Error::Invalid("at least one suite must be selected".into()));
        }
        if let Some(s) = self.tamper.iter().find(|s| !matches!(s, Suite::Steinberg | Suite::P1)) {
            return Err(Error::Invalid(format!(
                "tamper supports only steinberg and p1, not {s}"
            )));
        }
        if let Some(&p) = self.primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::NotPrime(p));
        }
        if self.exponents.contains(&0) {
            return Err(Error::Invalid("exponents must be >= 1".into()));
        }
        for (name, v) in [
            ("radius", self.radius),
            ("bott_radius", self.bott_radius),
            ("demazure_radius", self.demazure_radius),
            ("kempf_radius", self.kempf_radius),
            ("p1_degree", self.p1_degree),
        ] {
            if v < 0 {
                return Err(Error::Invalid(format!("{name} must be >= 0")));
            }
        }
        Ok(())
    }

    /// Reads `path`, or `$STEINBERG_LAB_CONFIG`, falling back to defaults
    /// when neither is given.
    pub fn load(path: Option<&Path>) -> Result<Self> {
        let path: Option<PathBuf> = match path {
            Some(p) => Some(p.to_path_buf()),
            None => std::env::var_os(CONFIG_ENV).map(PathBuf::from),
        };
        match path {
            None => Ok(SuiteConfig::default()),
            Some(p) => {
                let text = std::fs::read_to_string(&p)
                    .map_err(|e| Error::Invalid(format!("cannot read config {}: {e}", p.display())))?;
                SuiteConfig::parse(&text)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_text_gives_defaults() {
        assert_eq!(SuiteConfig::parse("").unwrap(), SuiteConfig::default());
        assert_eq!(SuiteConfig::parse("# nothing\n\n").unwrap(), SuiteConfig::default());
    }

    #[test]
    fn overrides() {
        let cfg =
            SuiteConfig::parse("systems = A2, B3\nprimes=7\nsuites = p1,grr # trailing\ntamper=steinberg").unwrap();
        assert_eq!(cfg.systems.len(), 2);
        assert_eq!(cfg.systems[1].to_string(), "B3");
        assert_eq!(cfg.primes, vec![7]);
        assert_eq!(cfg.suites, vec![Suite::P1, Suite::Grr]);
        assert_eq!(cfg.tamper, vec![Suite::Steinberg]);
        assert_eq!(cfg.radius, 5);
    }

    #[test]
    fn rejects_bad_input() {
        for text in [
            "systems = E8",
            "systems = B1",
            "primes = 4",
            "exponents = 0",
            "suites = ",
            "suites = everything",
            "radius = -1",
            "radius = five",
            "tamper = bott",
            "colour = blue",
            "just some words",
        ] {
            assert!(SuiteConfig::parse(text).is_err(), "{text}");
        }
    }
}
