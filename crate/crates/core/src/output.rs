//! File formats shared by the command-line runs.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::mfdfa::{AnalysisConfig, ScalingSpectrum};

/// Fixed conventions of the analysis, echoed next to every spectrum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Conventions {
    pub window_of_level: String,
    pub trend: String,
    pub padding: String,
    pub segments: String,
    pub zero_order: String,
    pub fit: String,
    pub beta: String,
    pub hurst: String,
}

impl Default for Conventions {
    fn default() -> Self {
        Conventions {
            window_of_level: "w = 2^j".into(),
            trend: "periodic DWT to level j, all detail bands zeroed, inverted".into(),
            padding: "half-sample symmetric reflection to a multiple of 2^j, trend truncated"
                .into(),
            segments: "floor(N/w) windows from the front and as many from the back".into(),
            zero_order: "F_0 = exp(sum ln F^2 / (4 M))".into(),
            fit: "ordinary least squares of log2 F_r(w) on log2 w".into(),
            beta: "central differences of tau over the r grid, one-sided at the ends".into(),
            hurst: "h(r) at r = 2".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub analysis: AnalysisConfig,
    pub conventions: Conventions,
}

/// JSON document for one analyzed series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub id: String,
    pub config_hash: String,
    pub config_echo: ConfigEcho,
    /// `[r, h, r^2]`
    pub h: Vec<[f64; 3]>,
    /// `[r, tau]`
    pub tau: Vec<[f64; 2]>,
    /// `[r, beta]`
    pub beta: Vec<[f64; 2]>,
    /// `[beta, f]`
    pub f_beta: Vec<[f64; 2]>,
    pub gamma: f64,
    pub hurst: f64,
    pub warnings: Vec<String>,
}

impl SpectrumReport {
    pub fn new(spectrum: &ScalingSpectrum, config: &AnalysisConfig, config_hash: &str) -> Self {
        let s = spectrum;
        let n = s.r.len();
        SpectrumReport {
            id: s.id.clone(),
            config_hash: config_hash.to_owned(),
            config_echo: ConfigEcho {
                analysis: config.clone(),
                conventions: Conventions::default(),
            },
            h: (0..n).map(|i| [s.r[i], s.h[i], s.fit_r2[i]]).collect(),
            tau: (0..n).map(|i| [s.r[i], s.tau[i]]).collect(),
            beta: (0..n).map(|i| [s.r[i], s.beta[i]]).collect(),
            f_beta: (0..n).map(|i| [s.beta[i], s.f_beta[i]]).collect(),
            gamma: s.gamma,
            hurst: s.hurst,
            warnings: s.warnings.clone(),
        }
    }

    /// Rebuilds the spectrum arrays from the report.
    pub fn to_spectrum(&self) -> ScalingSpectrum {
        ScalingSpectrum {
            id: self.id.clone(),
            r: self.h.iter().map(|p| p[0]).collect(),
            h: self.h.iter().map(|p| p[1]).collect(),
            fit_r2: self.h.iter().map(|p| p[2]).collect(),
            tau: self.tau.iter().map(|p| p[1]).collect(),
            beta: self.beta.iter().map(|p| p[1]).collect(),
            f_beta: self.f_beta.iter().map(|p| p[1]).collect(),
            gamma: self.gamma,
            hurst: self.hurst,
            warnings: self.warnings.clone(),
        }
    }
}

/// First 16 hex digits of the SHA-256 of the value's JSON encoding.
pub fn config_hash<T: Serialize>(value: &T) -> Result<String> {
    let bytes = serde_json::to_vec(value)?;
    let digest = Sha256::digest(&bytes);
    Ok(hex::encode(&digest[..8]))
}

/// Writes `# config_hash=<hash>` followed by whatever `body` produces.
pub fn write_csv_file(
    path: &Path,
    hash: &str,
    body: impl FnOnce(&mut Vec<u8>) -> Result<()>,
) -> Result<()> {
    let mut buf = Vec::new();
    writeln!(buf, "# config_hash={hash}").map_err(|e| Error::io(path, e))?;
    body(&mut buf)?;
    fs::write(path, buf).map_err(|e| Error::io(path, e))
}

pub fn write_json_file<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

pub fn read_json_file<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Ok(serde_json::from_str(&text)?)
}

/// `id,gamma,hurst` rows.
pub fn write_summary_csv<W: Write>(spectra: &[&ScalingSpectrum], writer: W) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(writer);
    wtr.write_record(["id", "gamma", "hurst"])?;
    for s in spectra {
        wtr.write_record([s.id.clone(), s.gamma.to_string(), s.hurst.to_string()])?;
    }
    wtr.flush().map_err(|e| Error::io("<writer>", e))?;
    Ok(())
}

/// File stem for a series id: characters outside `[A-Za-z0-9._-]` become `_`.
pub fn file_stem(id: &str) -> String {
    let stem: String = id
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || matches!(c, '.' | '_' | '-') {
                c
            } else {
                '_'
            }
        })
        .collect();
    if stem.is_empty() || stem.starts_with('.') {
        format!("_{stem}")
    } else {
        stem
    }
}
