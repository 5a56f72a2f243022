//! Orthonormal Daubechies filter banks and the pyramid transform.
//!
//! Analysis at one level, for a periodic signal of even length `M`:
//!
//! ```text
//! a[k] = sum_n h[n] x[(2k + n) mod M]
//! d[k] = sum_n g[n] x[(2k + n) mod M],   g[n] = (-1)^n h[L-1-n]
//! ```
//!
//! Synthesis is the adjoint, which is also the inverse because the periodized
//! bank is orthonormal.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Lowpass taps, obtained by spectral factorization of the Daubechies
/// polynomial (minimum-phase root selection) and normalized to sum to sqrt(2).
#[allow(clippy::excessive_precision)]
const DB4: [f64; 4] = [
    0.482_962_913_144_534_143_37,
    0.836_516_303_737_807_905_58,
    0.224_143_868_042_013_381_03,
    -0.129_409_522_551_260_381_17,
];

#[allow(clippy::excessive_precision)]
const DB6: [f64; 6] = [
    0.332_670_552_950_082_616,
    0.806_891_509_311_092_576_49,
    0.459_877_502_118_491_570_1,
    -0.135_011_020_010_254_588_7,
    -0.085_441_273_882_026_661_693,
    0.035_226_291_885_709_536_603,
];

#[allow(clippy::excessive_precision)]
const DB8: [f64; 8] = [
    0.230_377_813_308_896_500_86,
    0.714_846_570_552_915_647_09,
    0.630_880_767_929_858_907_88,
    -0.027_983_769_416_859_854_211,
    -0.187_034_811_719_093_084_08,
    0.030_841_381_835_560_763_627,
    0.032_883_011_666_885_199_735,
    -0.010_597_401_785_069_032_105,
];

/// Daubechies family member, named by tap count.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize, clap::ValueEnum,
)]
pub enum WaveletName {
    /// 4 taps, 2 vanishing moments.
    #[default]
    Db4,
    /// 6 taps, 3 vanishing moments.
    Db6,
    /// 8 taps, 4 vanishing moments.
    Db8,
}

impl WaveletName {
    pub const ALL: [WaveletName; 3] = [WaveletName::Db4, WaveletName::Db6, WaveletName::Db8];
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WaveletFilter {
    pub name: WaveletName,
    pub lowpass: Vec<f64>,
    pub highpass: Vec<f64>,
    pub vanishing_moments: usize,
}

impl WaveletFilter {
    pub fn new(name: WaveletName) -> Self {
        let lowpass: Vec<f64> = match name {
            WaveletName::Db4 => DB4.to_vec(),
            WaveletName::Db6 => DB6.to_vec(),
            WaveletName::Db8 => DB8.to_vec(),
        };
        let highpass = quadrature_mirror(&lowpass);
        WaveletFilter {
            name,
            vanishing_moments: lowpass.len() / 2,
            lowpass,
            highpass,
        }
    }

    pub fn len(&self) -> usize {
        self.lowpass.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lowpass.is_empty()
    }
}

impl From<WaveletName> for WaveletFilter {
    fn from(name: WaveletName) -> Self {
        WaveletFilter::new(name)
    }
}

/// `g[n] = (-1)^n h[L-1-n]`
pub fn quadrature_mirror(lowpass: &[f64]) -> Vec<f64> {
    let l = lowpass.len();
    (0..l)
        .map(|n| {
            let v = lowpass[l - 1 - n];
            if n % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Boundary {
    /// Circular extension; exact reconstruction and energy preservation.
    #[default]
    Periodic,
    /// The signal is mirrored to twice its length and then treated periodically.
    Symmetric,
}

/// Output of [`dwt_forward`]. `details[0]` is the finest level.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DwtDecomposition {
    pub filter: WaveletFilter,
    pub levels: usize,
    pub approx: Vec<f64>,
    pub details: Vec<Vec<f64>>,
    pub boundary: Boundary,
    pub original_length: usize,
}

impl DwtDecomposition {
    /// Detail coefficients at level `j` (1-based, 1 = finest).
    pub fn detail(&self, level: usize) -> Option<&[f64]> {
        level
            .checked_sub(1)
            .and_then(|i| self.details.get(i))
            .map(Vec::as_slice)
    }

    pub fn coefficient_count(&self) -> usize {
        self.approx.len() + self.details.iter().map(Vec::len).sum::<usize>()
    }

    /// Sum of squares over every coefficient.
    pub fn energy(&self) -> f64 {
        self.approx
            .iter()
            .chain(self.details.iter().flatten())
            .map(|c| c * c)
            .sum()
    }

    /// Writes `level,index,value` rows: `d1..dJ` for details, `aJ` for the approximation.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(writer);
        wtr.write_record(["level", "index", "value"])?;
        for (j, band) in self.details.iter().enumerate() {
            let label = format!("d{}", j + 1);
            for (i, v) in band.iter().enumerate() {
                wtr.write_record([label.as_str(), &i.to_string(), &v.to_string()])?;
            }
        }
        let label = format!("a{}", self.levels);
        for (i, v) in self.approx.iter().enumerate() {
            wtr.write_record([label.as_str(), &i.to_string(), &v.to_string()])?;
        }
        wtr.flush().map_err(|e| Error::io("<writer>", e))?;
        Ok(())
    }
}

fn analysis_step(x: &[f64], filter: &WaveletFilter) -> (Vec<f64>, Vec<f64>) {
    let m = x.len();
    let half = m / 2;
    let mut approx = vec![0.0; half];
    let mut detail = vec![0.0; half];
    for k in 0..half {
        let mut a = 0.0;
        let mut d = 0.0;
        for (n, (h, g)) in filter.lowpass.iter().zip(&filter.highpass).enumerate() {
            let v = x[(2 * k + n) % m];
            a += h * v;
            d += g * v;
        }
        approx[k] = a;
        detail[k] = d;
    }
    (approx, detail)
}

fn synthesis_step(approx: &[f64], detail: Option<&[f64]>, filter: &WaveletFilter) -> Vec<f64> {
    let half = approx.len();
    let m = 2 * half;
    let mut out = vec![0.0; m];
    for k in 0..half {
        let a = approx[k];
        let d = detail.map_or(0.0, |d| d[k]);
        for (n, (h, g)) in filter.lowpass.iter().zip(&filter.highpass).enumerate() {
            out[(2 * k + n) % m] += h * a + g * d;
        }
    }
    out
}

/// Pyramid decomposition of `signal` into `levels` detail bands plus the
/// coarsest approximation.
pub fn dwt_forward(
    signal: &[f64],
    filter: &WaveletFilter,
    levels: usize,
    boundary: Boundary,
) -> Result<DwtDecomposition> {
    if levels == 0 {
        return Err(Error::InvalidLevels(
            "at least one level is required".into(),
        ));
    }
    if signal.len() < filter.len() {
        return Err(Error::SignalTooShort {
            len: signal.len(),
            reason: format!("{:?} needs at least {} samples", filter.name, filter.len()),
        });
    }
    let extended: Vec<f64> = match boundary {
        Boundary::Periodic => signal.to_vec(),
        Boundary::Symmetric => signal.iter().chain(signal.iter().rev()).copied().collect(),
    };
    let block = 1usize
        .checked_shl(levels as u32)
        .filter(|b| *b <= extended.len())
        .ok_or_else(|| {
            Error::InvalidLevels(format!(
                "{levels} levels exceed a working length of {}",
                extended.len()
            ))
        })?;
    if !extended.len().is_multiple_of(block) {
        return Err(Error::InvalidLevels(format!(
            "working length {} is not a multiple of 2^{levels}; pad the signal first",
            extended.len()
        )));
    }

    let mut details = Vec::with_capacity(levels);
    let mut current = extended;
    for _ in 0..levels {
        let (a, d) = analysis_step(&current, filter);
        details.push(d);
        current = a;
    }
    Ok(DwtDecomposition {
        filter: filter.clone(),
        levels,
        approx: current,
        details,
        boundary,
        original_length: signal.len(),
    })
}

/// Inverts [`dwt_forward`].
pub fn dwt_inverse(decomp: &DwtDecomposition) -> Result<Vec<f64>> {
    if decomp.details.len() != decomp.levels || decomp.levels == 0 {
        return Err(Error::InconsistentDecomposition(format!(
            "{} detail bands for {} levels",
            decomp.details.len(),
            decomp.levels
        )));
    }
    let working = match decomp.boundary {
        Boundary::Periodic => decomp.original_length,
        Boundary::Symmetric => 2 * decomp.original_length,
    };
    let mut expected = working;
    for (j, band) in decomp.details.iter().enumerate() {
        expected /= 2;
        if band.len() != expected {
            return Err(Error::InconsistentDecomposition(format!(
                "level {} has {} coefficients, expected {expected}",
                j + 1,
                band.len()
            )));
        }
    }
    if decomp.approx.len() != expected {
        return Err(Error::InconsistentDecomposition(format!(
            "approximation has {} coefficients, expected {expected}",
            decomp.approx.len()
        )));
    }

    let mut current = decomp.approx.clone();
    for band in decomp.details.iter().rev() {
        current = synthesis_step(&current, Some(band), &decomp.filter);
    }
    current.truncate(decomp.original_length);
    Ok(current)
}

/// Reflects `signal` (half-sample symmetric) until its length is a multiple of `block`.
pub fn pad_symmetric(signal: &[f64], block: usize) -> Vec<f64> {
    let n = signal.len();
    let target = n.div_ceil(block) * block;
    let period = 2 * n;
    (0..target)
        .map(|i| {
            let k = i % period;
            if k < n {
                signal[k]
            } else {
                signal[period - 1 - k]
            }
        })
        .collect()
}

/// Scale-`level` trend: decompose to `level`, drop every detail band, invert.
///
/// Lengths that are not a multiple of `2^level` are reflected up to the next
/// multiple and the trend is truncated back to the input length.
pub fn lowpass_trend(signal: &[f64], filter: &WaveletFilter, level: usize) -> Result<Vec<f64>> {
    if level == 0 {
        return Err(Error::InvalidLevels(
            "trend level must be at least 1".into(),
        ));
    }
    if signal.len() < filter.len() {
        return Err(Error::SignalTooShort {
            len: signal.len(),
            reason: format!("{:?} needs at least {} samples", filter.name, filter.len()),
        });
    }
    let block = 1usize
        .checked_shl(level as u32)
        .ok_or_else(|| Error::InvalidLevels(format!("level {level} is too large")))?;
    let padded = pad_symmetric(signal, block);

    let mut approx = padded;
    for _ in 0..level {
        approx = analysis_step(&approx, filter).0;
    }
    for _ in 0..level {
        approx = synthesis_step(&approx, None, filter);
    }
    approx.truncate(signal.len());
    Ok(approx)
}
