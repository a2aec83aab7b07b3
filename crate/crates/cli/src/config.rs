//! Flat `key = value` configuration, overridden by command-line flags.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use stieltjes_core::QuadratureSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            _ => Err(format!("unknown output format `{s}` (expected json, csv or text)")),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Text => "text",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_refinements: u32,
    /// None lets each command pick its natural format.
    pub output_format: Option<OutputFormat>,
    pub parallelism: usize,
    pub seed: u64,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            abs_tol: 1e-10,
            rel_tol: 0.0,
            max_refinements: 20,
            output_format: None,
            parallelism: 1,
            seed: 1,
        }
    }
}

/// Values given on the command line; each one beats the file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub abs_tol: Option<f64>,
    pub rel_tol: Option<f64>,
    pub max_refinements: Option<u32>,
    pub output_format: Option<OutputFormat>,
    pub parallelism: Option<usize>,
    pub seed: Option<u64>,
}

fn parse_value<T: FromStr>(key: &str, value: &str, line: usize) -> Result<T, String> {
    value
        .parse()
        .map_err(|_| format!("config line {line}: bad value `{value}` for `{key}`"))
}

impl CliConfig {
    /// Parses the text of a config file on top of the defaults. Blank lines
    /// and lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut cfg = CliConfig::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let n = i + 1;
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("config line {n}: expected key = value"))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "abs_tol" => cfg.abs_tol = parse_value(key, value, n)?,
                "rel_tol" => cfg.rel_tol = parse_value(key, value, n)?,
                "max_refinements" => cfg.max_refinements = parse_value(key, value, n)?,
                "output_format" | "format" => cfg.output_format = Some(value.parse().map_err(|e| format!("config line {n}: {e}"))?),
                "parallelism" => cfg.parallelism = parse_value(key, value, n)?,
                "seed" => cfg.seed = parse_value(key, value, n)?,
                _ => return Err(format!("config line {n}: unknown key `{key}`")),
            }
        }
        Ok(cfg)
    }

    /// The explicit path wins over `STIELTJES_CONFIG`; with neither, the
    /// defaults apply.
    pub fn load(path: Option<&Path>, env: Option<String>) -> Result<Self, String> {
        let path = path.map(Path::to_path_buf).or_else(|| env.filter(|s| !s.is_empty()).map(Into::into));
        match path {
            Some(p) => {
                let text = std::fs::read_to_string(&p).map_err(|e| format!("cannot read config {}: {e}", p.display()))?;
                CliConfig::parse(&text)
            }
            None => Ok(CliConfig::default()),
        }
    }

    pub fn apply(mut self, o: &Overrides) -> Result<Self, String> {
        if let Some(v) = o.abs_tol {
            self.abs_tol = v;
        }
        if let Some(v) = o.rel_tol {
            self.rel_tol = v;
        }
        if let Some(v) = o.max_refinements {
            self.max_refinements = v;
        }
        if let Some(v) = o.output_format {
            self.output_format = Some(v);
        }
        if let Some(v) = o.parallelism {
            self.parallelism = v;
        }
        if let Some(v) = o.seed {
            self.seed = v;
        }
        if self.parallelism < 1 {
            return Err("parallelism must be at least 1".into());
        }
        self.spec()?;
        Ok(self)
    }

    pub fn spec(&self) -> Result<QuadratureSpec, String> {
        QuadratureSpec::new(self.abs_tol, self.rel_tol, self.max_refinements).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let c = CliConfig::default();
        assert_eq!(c.abs_tol, 1e-10);
        assert_eq!(c.rel_tol, 0.0);
        assert_eq!(c.max_refinements, 20);
    }

    #[test]
    fn file_then_flags() {
        let c = CliConfig::parse("# comment\nabs_tol = 1e-8\nseed=7\n\nformat = json\n").unwrap();
        assert_eq!((c.abs_tol, c.seed, c.output_format), (1e-8, 7, Some(OutputFormat::Json)));
        let o = Overrides {
            abs_tol: Some(1e-12),
            ..Overrides::default()
        };
        let c = c.apply(&o).unwrap();
        assert_eq!((c.abs_tol, c.seed), (1e-12, 7));
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(CliConfig::parse("abs_tol").is_err());
        assert!(CliConfig::parse("colour = red").is_err());
        assert!(CliConfig::parse("seed = -1").is_err());
        let o = Overrides {
            abs_tol: Some(0.0),
            ..Overrides::default()
        };
        assert!(CliConfig::default().apply(&o).is_err());
    }
}
