//! Singularity-width distance between series and its value distribution.
//!
//! `rho(X, Y) = |gamma_X - gamma_Y|` is a pseudometric on series: two
//! different series with equal spectrum widths are at distance zero and are
//! kept as separate nodes.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mfdfa::ScalingSpectrum;

/// Breakpoints used to segment the equity distances into groups A..F in the
/// original study.
pub const REFERENCE_BREAKPOINTS: [f64; 5] = [1.72, 3.36, 4.77, 5.45, 6.08];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingularityMatrix {
    pub ids: Vec<String>,
    pub gamma: Vec<f64>,
    pub rho: Vec<Vec<f64>>,
}

impl SingularityMatrix {
    pub fn from_gammas(ids: Vec<String>, gamma: Vec<f64>) -> Result<Self> {
        if ids.len() != gamma.len() {
            return Err(Error::InvalidArgument(format!(
                "{} ids for {} widths",
                ids.len(),
                gamma.len()
            )));
        }
        if ids.len() < 2 {
            return Err(Error::InvalidArgument(
                "a distance matrix needs at least two series".into(),
            ));
        }
        if let Some(i) = gamma.iter().position(|g| !g.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "series `{}` has a non-finite spectrum width",
                ids[i]
            )));
        }
        let rho = gamma
            .iter()
            .map(|gi| gamma.iter().map(|gj| (gi - gj).abs()).collect())
            .collect();
        Ok(SingularityMatrix { ids, gamma, rho })
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.rho[i][j]
    }

    /// Entries strictly above the diagonal, row by row.
    pub fn upper_entries(&self) -> Vec<f64> {
        let n = self.len();
        (0..n)
            .flat_map(|i| self.rho[i][i + 1..n].iter().copied())
            .collect()
    }

    pub fn min_max(&self) -> (f64, f64) {
        self.upper_entries()
            .into_iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                (lo.min(v), hi.max(v))
            })
    }

    /// Dense CSV: a header `id,<ids...>` and one row per series.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(writer);
        let mut header = vec!["id"];
        header.extend(self.ids.iter().map(String::as_str));
        wtr.write_record(&header)?;
        for (id, row) in self.ids.iter().zip(&self.rho) {
            let mut record = vec![id.clone()];
            record.extend(row.iter().map(f64::to_string));
            wtr.write_record(&record)?;
        }
        wtr.flush().map_err(|e| Error::io("<writer>", e))?;
        Ok(())
    }

    /// Compact JSON with the upper triangle only: `upper[i]` holds `rho[i][i+1..]`.
    pub fn to_upper_json(&self) -> serde_json::Value {
        let n = self.len();
        let upper: Vec<&[f64]> = (0..n).map(|i| &self.rho[i][i + 1..n]).collect();
        serde_json::json!({
            "ids": self.ids,
            "gamma": self.gamma,
            "upper": upper,
        })
    }
}

/// Pairwise distances from spectrum widths, in input order.
pub fn build_matrix(spectra: &[ScalingSpectrum]) -> Result<SingularityMatrix> {
    SingularityMatrix::from_gammas(
        spectra.iter().map(|s| s.id.clone()).collect(),
        spectra.iter().map(|s| s.gamma).collect(),
    )
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HistogramGroup {
    pub label: String,
    pub lo: f64,
    pub hi: f64,
    pub node_count: usize,
    pub node_pct: f64,
    pub entry_count: usize,
    pub entry_pct: f64,
}

/// Tallies of distances per group.
///
/// Entry counts are over the `N(N-1)/2` distinct pairs. Node counts place each
/// series at its distance from the narrowest-spectrum series, `gamma_i - min gamma`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RhoHistogram {
    pub breakpoints: Vec<f64>,
    pub groups: Vec<HistogramGroup>,
}

impl RhoHistogram {
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(writer);
        wtr.write_record([
            "group",
            "lo",
            "hi",
            "node_count",
            "node_pct",
            "entry_count",
            "entry_pct",
        ])?;
        for g in &self.groups {
            wtr.write_record([
                g.label.clone(),
                g.lo.to_string(),
                g.hi.to_string(),
                g.node_count.to_string(),
                g.node_pct.to_string(),
                g.entry_count.to_string(),
                g.entry_pct.to_string(),
            ])?;
        }
        wtr.flush().map_err(|e| Error::io("<writer>", e))?;
        Ok(())
    }
}

/// `A, B, ..., Z`, then `G27, G28, ...`
pub fn group_label(index: usize) -> String {
    if index < 26 {
        char::from(b'A' + index as u8).to_string()
    } else {
        format!("G{}", index + 1)
    }
}

/// Bins `[0, b1), [b1, b2), ..., [bk, max]`.
pub fn segment_distribution(
    matrix: &SingularityMatrix,
    breakpoints: &[f64],
) -> Result<RhoHistogram> {
    if breakpoints.iter().any(|b| !b.is_finite()) {
        return Err(Error::InvalidArgument("non-finite breakpoint".into()));
    }
    if breakpoints.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument(
            "breakpoints must be strictly increasing".into(),
        ));
    }
    let entries = matrix.upper_entries();
    let (_, hi) = matrix.min_max();
    let min_gamma = matrix.gamma.iter().copied().fold(f64::INFINITY, f64::min);
    let nodes: Vec<f64> = matrix.gamma.iter().map(|g| g - min_gamma).collect();

    let bins = breakpoints.len() + 1;
    let bin_of = |v: f64| breakpoints.partition_point(|&b| b <= v);
    let mut entry_counts = vec![0usize; bins];
    for &v in &entries {
        entry_counts[bin_of(v)] += 1;
    }
    let mut node_counts = vec![0usize; bins];
    for &v in &nodes {
        node_counts[bin_of(v)] += 1;
    }

    let pct = |c: usize, total: usize| 100.0 * c as f64 / total as f64;
    let groups = (0..bins)
        .map(|k| HistogramGroup {
            label: group_label(k),
            lo: if k == 0 { 0.0 } else { breakpoints[k - 1] },
            hi: if k == bins - 1 { hi } else { breakpoints[k] },
            node_count: node_counts[k],
            node_pct: pct(node_counts[k], nodes.len()),
            entry_count: entry_counts[k],
            entry_pct: pct(entry_counts[k], entries.len()),
        })
        .collect();

    Ok(RhoHistogram {
        breakpoints: breakpoints.to_vec(),
        groups,
    })
}

/// Linear-interpolation quantile of sorted data.
fn quantile(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (pos - lo as f64) * (sorted[hi] - sorted[lo])
}

/// Upper bound on exploratory bins.
const MAX_AUTO_BINS: usize = 1000;

/// Equal-width breakpoints with the Freedman-Diaconis width `2 IQR n^(-1/3)`
/// over the distinct-pair distances.
pub fn freedman_diaconis_breakpoints(matrix: &SingularityMatrix) -> Vec<f64> {
    let mut entries = matrix.upper_entries();
    entries.sort_by(f64::total_cmp);
    let (lo, hi) = (entries[0], entries[entries.len() - 1]);
    let iqr = quantile(&entries, 0.75) - quantile(&entries, 0.25);
    let width = 2.0 * iqr / (entries.len() as f64).cbrt();
    if width.is_nan() || width <= 0.0 || hi <= lo {
        return Vec::new();
    }
    let bins = (((hi - lo) / width).ceil() as usize).clamp(1, MAX_AUTO_BINS);
    let width = (hi - lo) / bins as f64;
    (1..bins).map(|k| lo + k as f64 * width).collect()
}

/// [`segment_distribution`] with exploratory Freedman-Diaconis bins.
pub fn segment_auto(matrix: &SingularityMatrix) -> Result<RhoHistogram> {
    segment_distribution(matrix, &freedman_diaconis_breakpoints(matrix))
}
