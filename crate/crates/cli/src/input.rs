use std::io::Read;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use bhr_core::{growth_points, Certificate, HamPath, LengthMultiset};
use clap::Args;

/// A realization to operate on: a bare path, or a certificate file.
#[derive(Args, Debug, Clone)]
pub struct Realization {
    /// Path as a JSON array, e.g. "[0,5,1,2,6,3,4]"; every grow point it
    /// has is registered
    #[arg(long, conflicts_with = "cert", required_unless_present = "cert")]
    pub path: Option<String>,
    /// Certificate JSON file ("-" for stdin)
    #[arg(long)]
    pub cert: Option<PathBuf>,
}

/// Input that is well-formed but fails verification.
#[derive(Debug)]
pub struct VerifyFailure(pub String);

impl std::fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for VerifyFailure {}

impl Realization {
    pub fn load(&self) -> Result<Certificate> {
        match (&self.path, &self.cert) {
            (Some(p), _) => {
                let path = parse_path(p)?;
                let points = growth_points(&path);
                Ok(Certificate::from_path(path, points)?)
            }
            (None, Some(file)) => load_certificate(file),
            (None, None) => bail!("give --path or --cert"),
        }
    }
}

pub fn parse_multiset(s: &str) -> Result<LengthMultiset> {
    s.parse().with_context(|| format!("reading multiset `{s}`"))
}

pub fn parse_path(s: &str) -> Result<HamPath> {
    let v: Vec<usize> = serde_json::from_str(s).with_context(|| format!("reading path `{s}` as a JSON array"))?;
    Ok(HamPath::new(v)?)
}

pub fn parse_paths(s: &str) -> Result<Vec<HamPath>> {
    let vs: Vec<Vec<usize>> =
        serde_json::from_str(s).with_context(|| format!("reading `{s}` as a JSON array of paths"))?;
    vs.into_iter().map(|v| Ok(HamPath::new(v)?)).collect()
}

fn read_source(file: &Path) -> Result<String> {
    if file == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))
    }
}

/// Malformed JSON is a usage error; a certificate that parses but does not
/// check out is a [`VerifyFailure`].
pub fn load_certificate(file: &Path) -> Result<Certificate> {
    let text = read_source(file)?;
    serde_json::from_str::<serde_json::Value>(&text).with_context(|| format!("{} is not JSON", file.display()))?;
    Certificate::from_json(&text).map_err(|e| VerifyFailure(e.to_string()).into())
}
