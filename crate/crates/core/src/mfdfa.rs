//! Wavelet-detrended multifractal fluctuation analysis.
//!
//! For each level `j` the scale-`j` lowpass trend is subtracted from the
//! profile, and the same is done on the reversed profile; the two residuals
//! are averaged. Residuals are cut into `M = floor(N / w)` windows of width
//! `w = 2^j` from the front and `M` from the back, and the order-`r` mean of
//! the window variances gives `F_r(w)`. The log-log slope of `F_r(w)` is
//! `h(r)`, from which `tau(r) = r h(r) - 1`, the Hölder exponents
//! `beta = d tau / d r`, the spectrum `f(beta) = r beta - tau` and its width
//! `gamma = max beta - min beta` follow.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ingest::{to_profile, to_returns, Profile, Series, SeriesBundle, SeriesKind};
use crate::wavelet::{lowpass_trend, WaveletFilter, WaveletName};

/// How the forward and reversed passes are combined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Averaging {
    /// Average the two residual arrays sample by sample, then segment.
    #[default]
    Fluctuations,
    /// Segment both residuals and average the per-window variances.
    SegmentVariances,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct AnalysisConfig {
    /// Moment orders, strictly increasing, containing 2.
    pub r_grid: Vec<f64>,
    /// Finest level used in the fit (window `2^min_level`).
    pub min_level: usize,
    /// Coarsest level; `None` resolves to `floor(log2(N / 4))` per series.
    pub max_level: Option<usize>,
    pub filter: WaveletName,
    /// Windows with variance below this are left out of the `r <= 0` moments.
    pub eps_floor: f64,
    pub averaging: Averaging,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            r_grid: default_r_grid(),
            min_level: 4,
            max_level: None,
            filter: WaveletName::Db4,
            eps_floor: 1e-12,
            averaging: Averaging::Fluctuations,
        }
    }
}

/// `-5.0, -4.5, ..., 5.0`
pub fn default_r_grid() -> Vec<f64> {
    (-10..=10).map(|i| f64::from(i) * 0.5).collect()
}

impl AnalysisConfig {
    pub fn validate(&self) -> Result<()> {
        if self.r_grid.len() < 2 {
            return Err(Error::Config("r_grid needs at least two orders".into()));
        }
        if self.r_grid.iter().any(|r| !r.is_finite()) {
            return Err(Error::Config("r_grid contains a non-finite order".into()));
        }
        if self.r_grid.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Config("r_grid must be strictly increasing".into()));
        }
        if !self.r_grid.contains(&2.0) {
            return Err(Error::Config("r_grid must contain r = 2".into()));
        }
        if self.min_level == 0 {
            return Err(Error::Config("min_level must be at least 1".into()));
        }
        if let Some(max) = self.max_level {
            if max <= self.min_level {
                return Err(Error::Config(format!(
                    "max_level {max} must exceed min_level {}",
                    self.min_level
                )));
            }
        }
        if !self.eps_floor.is_finite() || self.eps_floor < 0.0 {
            return Err(Error::Config(
                "eps_floor must be finite and non-negative".into(),
            ));
        }
        Ok(())
    }

    /// Level range for a profile of length `n`.
    pub fn levels_for(&self, n: usize) -> Result<std::ops::RangeInclusive<usize>> {
        let min_len = (1usize << self.min_level) * 4;
        if n < min_len {
            return Err(Error::SignalTooShort {
                len: n,
                reason: format!(
                    "profile needs at least {min_len} samples for min_level {}",
                    self.min_level
                ),
            });
        }
        let max = match self.max_level {
            Some(m) => m,
            None => (n / 4).ilog2() as usize,
        };
        if max <= self.min_level {
            return Err(Error::Config(format!(
                "profile of length {n} leaves max_level {max} <= min_level {}",
                self.min_level
            )));
        }
        if (1usize << max) > n {
            return Err(Error::Config(format!(
                "max_level {max} exceeds profile length {n}"
            )));
        }
        Ok(self.min_level..=max)
    }
}

/// Residuals of one level, from both directions.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelFluctuation {
    pub level: usize,
    pub window: usize,
    pub forward: Vec<f64>,
    /// Residual of the reversed profile, reversed back into forward time.
    pub backward: Vec<f64>,
    pub averaged: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fluctuations {
    pub id: String,
    pub levels: Vec<LevelFluctuation>,
}

/// Per-level detrended residuals `f_j` of a profile.
pub fn extract_fluctuations(profile: &Profile, config: &AnalysisConfig) -> Result<Fluctuations> {
    config.validate()?;
    let levels = config.levels_for(profile.len())?;
    let filter = WaveletFilter::new(config.filter);
    let y = &profile.values;
    let reversed: Vec<f64> = y.iter().rev().copied().collect();

    let levels = levels
        .map(|level| {
            let trend = lowpass_trend(y, &filter, level)?;
            let forward: Vec<f64> = y.iter().zip(&trend).map(|(a, b)| a - b).collect();
            let trend_rev = lowpass_trend(&reversed, &filter, level)?;
            let backward: Vec<f64> = reversed
                .iter()
                .zip(&trend_rev)
                .map(|(a, b)| a - b)
                .rev()
                .collect();
            let averaged = forward
                .iter()
                .zip(&backward)
                .map(|(a, b)| 0.5 * (a + b))
                .collect();
            Ok(LevelFluctuation {
                level,
                window: 1 << level,
                forward,
                backward,
                averaged,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(Fluctuations {
        id: profile.id.clone(),
        levels,
    })
}

/// `F_r(w)` over the configured orders and windows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FluctuationTable {
    pub id: String,
    pub windows: Vec<usize>,
    pub orders: Vec<f64>,
    /// `values[i][k]` is `F_{orders[i]}(windows[k])`.
    pub values: Vec<Vec<f64>>,
    /// Windows excluded by the variance floor, same indexing as `values`.
    pub dropped_segments: Vec<Vec<usize>>,
}

impl FluctuationTable {
    /// Count of `(r, w)` cells where `F` decreases from one order to the next
    /// by more than `rel_tol` relative.
    pub fn monotonicity_violations(&self, rel_tol: f64) -> usize {
        (0..self.windows.len())
            .map(|k| {
                self.values
                    .windows(2)
                    .filter(|pair| pair[1][k] < pair[0][k] * (1.0 - rel_tol))
                    .count()
            })
            .sum()
    }

    pub fn get(&self, order_index: usize, window_index: usize) -> f64 {
        self.values[order_index][window_index]
    }
}

/// Windows `[m w, (m+1) w)` for `m < M`, then the same count taken from the end.
fn segment_variances(f: &[f64], window: usize) -> Vec<f64> {
    let n = f.len();
    let m = n / window;
    let mean_sq = |s: &[f64]| s.iter().map(|v| v * v).sum::<f64>() / s.len() as f64;
    let front = (0..m).map(|i| mean_sq(&f[i * window..(i + 1) * window]));
    let back = (0..m).map(|i| mean_sq(&f[n - (i + 1) * window..n - i * window]));
    front.chain(back).collect()
}

/// `ln` of the order-`r` generalized mean of `sqrt(F^2)` over the given variances.
fn log_generalized_mean(log_var: &[f64], r: f64) -> f64 {
    let k = log_var.len() as f64;
    if r == 0.0 {
        return log_var.iter().sum::<f64>() / (2.0 * k);
    }
    let scaled: Vec<f64> = log_var.iter().map(|l| 0.5 * r * l).collect();
    let peak = scaled.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let sum: f64 = scaled.iter().map(|s| (s - peak).exp()).sum();
    (peak + sum.ln() - k.ln()) / r
}

pub fn fluctuation_function(
    fluct: &Fluctuations,
    config: &AnalysisConfig,
) -> Result<FluctuationTable> {
    config.validate()?;
    if fluct.levels.is_empty() {
        return Err(Error::SpectrumUndefined(format!(
            "series `{}` has no fluctuation levels",
            fluct.id
        )));
    }
    let orders = config.r_grid.clone();
    let mut values = vec![Vec::with_capacity(fluct.levels.len()); orders.len()];
    let mut dropped = vec![Vec::with_capacity(fluct.levels.len()); orders.len()];
    let mut windows = Vec::with_capacity(fluct.levels.len());

    for lvl in &fluct.levels {
        let w = lvl.window;
        if lvl.averaged.len() < w {
            return Err(Error::SignalTooShort {
                len: lvl.averaged.len(),
                reason: format!("no complete window of width {w}"),
            });
        }
        let variances = match config.averaging {
            Averaging::Fluctuations => segment_variances(&lvl.averaged, w),
            Averaging::SegmentVariances => segment_variances(&lvl.forward, w)
                .iter()
                .zip(segment_variances(&lvl.backward, w))
                .map(|(a, b)| 0.5 * (a + b))
                .collect(),
        };
        let log_all: Vec<f64> = variances.iter().map(|v| v.ln()).collect();
        let log_kept: Vec<f64> = variances
            .iter()
            .filter(|&&v| v >= config.eps_floor && v > 0.0)
            .map(|v| v.ln())
            .collect();
        let n_dropped = variances.len() - log_kept.len();

        for (i, &r) in orders.iter().enumerate() {
            let (logs, drop_count) = if r <= 0.0 {
                (&log_kept, n_dropped)
            } else {
                (&log_all, 0)
            };
            let log_f = if logs.is_empty() {
                f64::NEG_INFINITY
            } else {
                log_generalized_mean(logs, r)
            };
            if !log_f.is_finite() {
                return Err(Error::SpectrumUndefined(format!(
                    "F_r(w) is not positive at r = {r}, w = {w}"
                )));
            }
            values[i].push(log_f.exp());
            dropped[i].push(drop_count);
        }
        windows.push(w);
    }

    Ok(FluctuationTable {
        id: fluct.id.clone(),
        windows,
        orders,
        values,
        dropped_segments: dropped,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScalingFit {
    pub r: f64,
    pub h: f64,
    pub r2: f64,
}

/// Ordinary least squares of `y` on `x`: `(slope, intercept, r^2)`.
pub fn least_squares(x: &[f64], y: &[f64]) -> (f64, f64, f64) {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxx: f64 = x.iter().map(|v| (v - mx).powi(2)).sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_tot: f64 = y.iter().map(|v| (v - my).powi(2)).sum();
    let ss_res: f64 = x
        .iter()
        .zip(y)
        .map(|(a, b)| (b - (intercept + slope * a)).powi(2))
        .sum();
    let r2 = if ss_tot <= f64::EPSILON * n * my.abs().max(1.0) {
        1.0
    } else {
        (1.0 - ss_res / ss_tot).clamp(0.0, 1.0)
    };
    (slope, intercept, r2)
}

/// Slope of `log2 F_r(w)` against `log2 w` for every order.
pub fn fit_scaling(table: &FluctuationTable) -> Result<Vec<ScalingFit>> {
    if table.windows.len() < 3 {
        return Err(Error::SpectrumUndefined(format!(
            "{} window sizes, at least 3 are needed for a fit",
            table.windows.len()
        )));
    }
    let x: Vec<f64> = table.windows.iter().map(|&w| (w as f64).log2()).collect();
    Ok(table
        .orders
        .iter()
        .zip(&table.values)
        .map(|(&r, row)| {
            let y: Vec<f64> = row.iter().map(|f| f.log2()).collect();
            let (h, _, r2) = least_squares(&x, &y);
            ScalingFit { r, h, r2 }
        })
        .collect())
}

/// Scaling and singularity exponents of one series, indexed by the order grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalingSpectrum {
    pub id: String,
    pub r: Vec<f64>,
    pub h: Vec<f64>,
    pub tau: Vec<f64>,
    pub beta: Vec<f64>,
    /// `f(beta[i])`.
    pub f_beta: Vec<f64>,
    pub fit_r2: Vec<f64>,
    pub gamma: f64,
    pub hurst: f64,
    pub warnings: Vec<String>,
}

impl ScalingSpectrum {
    pub fn h_at(&self, r: f64) -> Option<f64> {
        self.r.iter().position(|&x| x == r).map(|i| self.h[i])
    }
}

/// Tolerated rise of `h(r)` between neighbouring orders before a warning.
pub const H_RISE_TOLERANCE: f64 = 0.02;

/// Legendre transform of the scaling exponents.
pub fn singularity_spectrum(id: &str, fits: &[ScalingFit]) -> Result<ScalingSpectrum> {
    let n = fits.len();
    if n < 2 {
        return Err(Error::SpectrumUndefined(
            "at least two orders are needed for the Legendre transform".into(),
        ));
    }
    let r: Vec<f64> = fits.iter().map(|f| f.r).collect();
    if r.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Config("orders must be strictly increasing".into()));
    }
    let hurst_index = r.iter().position(|&x| x == 2.0).ok_or_else(|| {
        Error::Config("the order grid must contain r = 2 for the Hurst exponent".into())
    })?;
    let h: Vec<f64> = fits.iter().map(|f| f.h).collect();
    if h.iter().any(|v| !v.is_finite()) {
        return Err(Error::SpectrumUndefined(
            "non-finite scaling exponent".into(),
        ));
    }
    let tau: Vec<f64> = r.iter().zip(&h).map(|(r, h)| r * h - 1.0).collect();

    let beta: Vec<f64> = (0..n)
        .map(|i| {
            let (lo, hi) = match i {
                0 => (0, 1),
                i if i == n - 1 => (n - 2, n - 1),
                i => (i - 1, i + 1),
            };
            (tau[hi] - tau[lo]) / (r[hi] - r[lo])
        })
        .collect();
    let f_beta: Vec<f64> = (0..n).map(|i| r[i] * beta[i] - tau[i]).collect();

    let (min_b, max_b) = beta
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &b| {
            (lo.min(b), hi.max(b))
        });
    let gamma = (max_b - min_b).max(0.0);

    let mut warnings = Vec::new();
    let folds = beta.windows(2).filter(|w| w[1] > w[0] + 1e-12).count();
    if folds > 0 {
        warnings.push(format!(
            "singularity spectrum folds back: beta increases at {folds} grid step(s)"
        ));
    }
    let rises = h
        .windows(2)
        .filter(|w| w[1] > w[0] + H_RISE_TOLERANCE)
        .count();
    if rises > 0 {
        warnings.push(format!(
            "h(r) increases by more than {H_RISE_TOLERANCE} at {rises} grid step(s)"
        ));
    }

    Ok(ScalingSpectrum {
        id: id.to_owned(),
        r,
        hurst: h[hurst_index],
        h,
        tau,
        beta,
        f_beta,
        fit_r2: fits.iter().map(|f| f.r2).collect(),
        gamma,
        warnings,
    })
}

/// Everything computed for one series.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesAnalysis {
    pub table: FluctuationTable,
    pub spectrum: ScalingSpectrum,
}

pub fn analyze_profile(profile: &Profile, config: &AnalysisConfig) -> Result<SeriesAnalysis> {
    let fluct = extract_fluctuations(profile, config)?;
    let table = fluctuation_function(&fluct, config)?;
    let fits = fit_scaling(&table)?;
    let spectrum = singularity_spectrum(&profile.id, &fits)?;
    Ok(SeriesAnalysis { table, spectrum })
}

/// Full pipeline for one series, with the table kept for inspection.
pub fn analyze_series_detailed(
    series: &Series,
    kind: SeriesKind,
    config: &AnalysisConfig,
) -> Result<SeriesAnalysis> {
    let run = || -> Result<SeriesAnalysis> {
        let returns = to_returns(series, kind)?;
        let profile = to_profile(&returns);
        analyze_profile(&profile, config)
    };
    run().map_err(|e| e.for_series(&series.id))
}

pub fn analyze_series(
    series: &Series,
    kind: SeriesKind,
    config: &AnalysisConfig,
) -> Result<ScalingSpectrum> {
    analyze_series_detailed(series, kind, config).map(|a| a.spectrum)
}

/// Analyzes every series in parallel on the current rayon pool. Keys are ids,
/// so iteration order does not depend on scheduling.
pub fn analyze_bundle(
    bundle: &SeriesBundle,
    config: &AnalysisConfig,
) -> BTreeMap<String, Result<ScalingSpectrum>> {
    bundle
        .entries
        .par_iter()
        .map(|s| (s.id.clone(), analyze_series(s, bundle.kind, config)))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table_from(
        windows: Vec<usize>,
        orders: Vec<f64>,
        f: impl Fn(f64, usize) -> f64,
    ) -> FluctuationTable {
        let values = orders
            .iter()
            .map(|&r| windows.iter().map(|&w| f(r, w)).collect())
            .collect();
        FluctuationTable {
            id: "t".into(),
            dropped_segments: vec![vec![0; windows.len()]; orders.len()],
            windows,
            orders,
            values,
        }
    }

    fn level(window: usize, averaged: Vec<f64>) -> LevelFluctuation {
        LevelFluctuation {
            level: window.trailing_zeros() as usize,
            window,
            forward: averaged.clone(),
            backward: averaged.clone(),
            averaged,
        }
    }

    #[test]
    fn default_config_is_valid() {
        let c = AnalysisConfig::default();
        c.validate().unwrap();
        assert_eq!(c.r_grid.len(), 21);
        assert_eq!(c.r_grid[14], 2.0);
        assert_eq!(c.levels_for(1 << 16).unwrap(), 4..=14);
    }

    #[test]
    fn config_rejects_bad_grids() {
        let mut c = AnalysisConfig {
            r_grid: vec![-1.0, 1.0, 3.0],
            ..Default::default()
        };
        assert!(c.validate().is_err());
        c.r_grid = vec![2.0, 1.0];
        assert!(c.validate().is_err());
        c.r_grid = vec![1.0, 2.0];
        c.max_level = Some(4);
        assert!(c.validate().is_err());
    }

    #[test]
    fn constant_variance_gives_sqrt_c() {
        // Residual with |f| = 3 everywhere: every window variance is 9.
        let f: Vec<f64> = (0..64)
            .map(|i| if i % 2 == 0 { 3.0 } else { -3.0 })
            .collect();
        let fl = Fluctuations {
            id: "c".into(),
            levels: vec![level(16, f)],
        };
        let t = fluctuation_function(&fl, &AnalysisConfig::default()).unwrap();
        for row in &t.values {
            assert!((row[0] - 3.0).abs() < 1e-12, "{row:?}");
        }
    }

    #[test]
    fn two_segment_generalized_means() {
        // Window variances {1, 4} from the front and {4, 1} from the back.
        let f = vec![1.0, 1.0, 2.0, 2.0];
        let fl = Fluctuations {
            id: "p".into(),
            levels: vec![level(2, f)],
        };
        let cfg = AnalysisConfig {
            r_grid: vec![0.0, 2.0],
            ..Default::default()
        };
        let t = fluctuation_function(&fl, &cfg).unwrap();
        assert!((t.values[1][0] - 2.5_f64.sqrt()).abs() < 1e-12);
        assert!((t.values[0][0] - 2.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn floor_drops_only_non_positive_orders() {
        let mut f = vec![0.0; 32];
        f[16..].iter_mut().for_each(|v| *v = 1.0);
        let fl = Fluctuations {
            id: "z".into(),
            levels: vec![level(16, f)],
        };
        let cfg = AnalysisConfig {
            r_grid: vec![-1.0, 0.0, 2.0],
            ..Default::default()
        };
        let t = fluctuation_function(&fl, &cfg).unwrap();
        assert_eq!(t.dropped_segments[0][0], 2);
        assert_eq!(t.dropped_segments[2][0], 0);
        assert!((t.values[0][0] - 1.0).abs() < 1e-12);
        assert!((t.values[2][0] - 0.5_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn all_zero_windows_are_undefined() {
        let fl = Fluctuations {
            id: "z".into(),
            levels: vec![level(16, vec![0.0; 64])],
        };
        assert!(matches!(
            fluctuation_function(&fl, &AnalysisConfig::default()),
            Err(Error::SpectrumUndefined(_))
        ));
    }

    #[test]
    fn exact_power_law_fit() {
        let t = table_from(vec![16, 32, 64, 128], default_r_grid(), |_, w| {
            (w as f64).sqrt()
        });
        for fit in fit_scaling(&t).unwrap() {
            assert!((fit.h - 0.5).abs() < 1e-12);
            assert!((fit.r2 - 1.0).abs() < 1e-12);
        }
        let flat = table_from(vec![16, 32, 64], default_r_grid(), |_, _| 2.0);
        for fit in fit_scaling(&flat).unwrap() {
            assert!(fit.h.abs() < 1e-12);
        }
        let short = table_from(vec![16, 32], default_r_grid(), |_, _| 2.0);
        assert!(fit_scaling(&short).is_err());
    }

    #[test]
    fn monofractal_spectrum() {
        let fits: Vec<ScalingFit> = default_r_grid()
            .into_iter()
            .map(|r| ScalingFit { r, h: 0.7, r2: 1.0 })
            .collect();
        let s = singularity_spectrum("m", &fits).unwrap();
        assert!(s.beta.iter().all(|b| (b - 0.7).abs() < 1e-12));
        assert!(s.f_beta.iter().all(|f| (f - 1.0).abs() < 1e-12));
        assert!(s.gamma < 1e-12);
        assert_eq!(s.hurst, 0.7);
        assert!(s.warnings.is_empty());
    }

    #[test]
    fn linear_tau_gives_constant_beta() {
        // tau = r c - 1 exactly when h = c.
        let fits: Vec<ScalingFit> = [-1.0, 0.0, 1.0, 2.0, 3.5]
            .into_iter()
            .map(|r| ScalingFit { r, h: 0.3, r2: 1.0 })
            .collect();
        let s = singularity_spectrum("l", &fits).unwrap();
        for b in &s.beta[1..s.beta.len() - 1] {
            assert!((b - 0.3).abs() < 1e-12);
        }
    }

    #[test]
    fn legendre_identities() {
        let fits: Vec<ScalingFit> = default_r_grid()
            .into_iter()
            .map(|r| ScalingFit {
                r,
                h: 0.6 + 0.2 * (-0.3 * r).tanh(),
                r2: 0.99,
            })
            .collect();
        let s = singularity_spectrum("x", &fits).unwrap();
        for i in 0..s.r.len() {
            assert!((s.tau[i] - (s.r[i] * s.h[i] - 1.0)).abs() < 1e-12);
            assert!((s.f_beta[i] - (s.r[i] * (s.beta[i] - s.h[i]) + 1.0)).abs() < 1e-9);
        }
        let max = s.beta.iter().copied().fold(f64::MIN, f64::max);
        let min = s.beta.iter().copied().fold(f64::MAX, f64::min);
        assert_eq!(s.gamma, max - min);
    }

    #[test]
    fn folded_spectrum_warns() {
        let fits: Vec<ScalingFit> = default_r_grid()
            .into_iter()
            .map(|r| ScalingFit {
                r,
                h: 0.5 + 0.05 * r * r,
                r2: 1.0,
            })
            .collect();
        let s = singularity_spectrum("fold", &fits).unwrap();
        assert!(s.warnings.iter().any(|w| w.contains("folds back")));
        assert!(s.gamma > 0.0);
    }

    #[test]
    fn constant_profile_has_zero_fluctuations() {
        let p = Profile {
            id: "k".into(),
            values: vec![2.0; 256],
        };
        let fl = extract_fluctuations(&p, &AnalysisConfig::default()).unwrap();
        assert!(fl
            .levels
            .iter()
            .all(|l| l.averaged.iter().all(|v| v.abs() < 1e-12)));
    }

    #[test]
    fn short_profile_rejected() {
        let p = Profile {
            id: "s".into(),
            values: vec![1.0; 63],
        };
        assert!(matches!(
            extract_fluctuations(&p, &AnalysisConfig::default()),
            Err(Error::SignalTooShort { .. })
        ));
    }
}
