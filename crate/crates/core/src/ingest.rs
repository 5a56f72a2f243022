//! Series loading and the return/profile transforms that feed the fluctuation
//! analysis.
//!
//! Prices become log-returns `r(t) = ln x(t+1) - ln x(t)`, which are then
//! standardized with the population standard deviation. Raw signals skip the
//! logarithm and are standardized directly. The profile is the running sum of
//! the standardized series.

use std::collections::{HashMap, HashSet};
use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Shortest series accepted by [`load_bundle`]: four dyadic scales starting at
/// a 16-sample window.
pub const MIN_SERIES_LEN: usize = 64;

/// How the values of a bundle are interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    /// Strictly positive prices; returns are log differences.
    Price,
    /// Values used directly as returns before standardization.
    Signal,
}

/// On-disk layout of a bundle file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum InputFormat {
    /// Header row of ids, one column per series, optional leading `date` column.
    #[default]
    WideCsv,
    /// Two columns `id,value`, samples in row order.
    LongCsv,
    /// Either layout (long when the header is exactly `id,value`), read as raw signals.
    RawSignal,
}

impl InputFormat {
    pub fn kind(self) -> SeriesKind {
        match self {
            InputFormat::WideCsv | InputFormat::LongCsv => SeriesKind::Price,
            InputFormat::RawSignal => SeriesKind::Signal,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Series {
    pub id: String,
    pub values: Vec<f64>,
}

/// Named collection of raw series. Ids are unique and order follows the file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesBundle {
    pub kind: SeriesKind,
    pub entries: Vec<Series>,
    /// Contents of a wide file's `date` column, if present. Not used by the math.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dates: Option<Vec<String>>,
}

impl SeriesBundle {
    /// Builds a bundle, enforcing unique ids, minimum length and positivity of prices.
    pub fn new(kind: SeriesKind, entries: Vec<Series>) -> Result<Self> {
        let bundle = SeriesBundle {
            kind,
            entries,
            dates: None,
        };
        bundle.validate()?;
        Ok(bundle)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|s| s.id.as_str())
    }

    pub fn get(&self, id: &str) -> Option<&Series> {
        self.entries.iter().find(|s| s.id == id)
    }

    fn validate(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for series in &self.entries {
            if !seen.insert(series.id.as_str()) {
                return Err(Error::DuplicateId(series.id.clone()));
            }
            if series.values.len() < MIN_SERIES_LEN {
                return Err(Error::TooShort {
                    id: series.id.clone(),
                    len: series.values.len(),
                    min: MIN_SERIES_LEN,
                });
            }
            if self.kind == SeriesKind::Price {
                check_positive(series)?;
            }
        }
        Ok(())
    }
}

fn check_positive(series: &Series) -> Result<()> {
    match series
        .values
        .iter()
        .enumerate()
        .find(|(_, v)| !v.is_finite() || **v <= 0.0)
    {
        Some((index, &value)) => Err(Error::NonPositive {
            id: series.id.clone(),
            index,
            value,
        }),
        None => Ok(()),
    }
}

/// Loads a bundle from `path`. Lines starting with `#` are skipped.
pub fn load_bundle(path: impl AsRef<Path>, format: InputFormat) -> Result<SeriesBundle> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    read_bundle(file, format)
}

/// Parses a bundle from any reader; see [`load_bundle`].
pub fn read_bundle<R: Read>(reader: R, format: InputFormat) -> Result<SeriesBundle> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .flexible(false)
        .comment(Some(b'#'))
        .from_reader(reader);
    let headers: Vec<String> = rdr.headers()?.iter().map(str::to_owned).collect();

    let long = match format {
        InputFormat::WideCsv => false,
        InputFormat::LongCsv => true,
        InputFormat::RawSignal => is_long_header(&headers),
    };

    let mut bundle = if long {
        if !is_long_header(&headers) {
            return Err(Error::Parse(format!(
                "long layout expects header `id,value`, found `{}`",
                headers.join(",")
            )));
        }
        parse_long(rdr, format.kind())?
    } else {
        parse_wide(rdr, headers, format.kind())?
    };
    bundle.kind = format.kind();
    bundle.validate()?;
    Ok(bundle)
}

fn is_long_header(headers: &[String]) -> bool {
    headers.len() == 2
        && headers[0].eq_ignore_ascii_case("id")
        && headers[1].eq_ignore_ascii_case("value")
}

fn is_missing(field: &str) -> bool {
    field.is_empty()
        || ["na", "nan", "null", "none", "-"]
            .iter()
            .any(|m| field.eq_ignore_ascii_case(m))
}

fn parse_value(field: &str, line: u64) -> Result<Option<f64>> {
    if is_missing(field) {
        return Ok(None);
    }
    field
        .parse::<f64>()
        .map(Some)
        .map_err(|_| Error::Parse(format!("line {line}: `{field}` is not a number")))
}

fn parse_wide<R: Read>(
    mut rdr: csv::Reader<R>,
    headers: Vec<String>,
    kind: SeriesKind,
) -> Result<SeriesBundle> {
    let has_date = headers
        .first()
        .is_some_and(|h| h.eq_ignore_ascii_case("date"));
    let ids: Vec<String> = headers.into_iter().skip(usize::from(has_date)).collect();
    if ids.is_empty() {
        return Err(Error::Parse("wide layout has no series columns".into()));
    }

    let mut entries: Vec<Series> = ids
        .into_iter()
        .map(|id| Series {
            id,
            values: Vec::new(),
        })
        .collect();
    let mut dates = has_date.then(Vec::new);

    for record in rdr.records() {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line());
        let mut fields = record.iter();
        if let Some(dates) = dates.as_mut() {
            dates.push(fields.next().unwrap_or_default().to_owned());
        }
        for (series, field) in entries.iter_mut().zip(fields) {
            if let Some(v) = parse_value(field, line)? {
                series.values.push(v);
            }
        }
    }

    Ok(SeriesBundle {
        kind,
        entries,
        dates,
    })
}

fn parse_long<R: Read>(mut rdr: csv::Reader<R>, kind: SeriesKind) -> Result<SeriesBundle> {
    let mut entries: Vec<Series> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    for record in rdr.records() {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line());
        let id = &record[0];
        if id.is_empty() {
            return Err(Error::Parse(format!("line {line}: empty id")));
        }
        let Some(v) = parse_value(&record[1], line)? else {
            continue;
        };
        match index.get(id) {
            Some(&i) => entries[i].values.push(v),
            None => {
                index.insert(id.to_owned(), entries.len());
                entries.push(Series {
                    id: id.to_owned(),
                    values: vec![v],
                });
            }
        }
    }
    Ok(SeriesBundle {
        kind,
        entries,
        dates: None,
    })
}

/// Writes a bundle in the wide layout. Shorter series leave trailing cells empty.
pub fn write_wide_csv<W: Write>(bundle: &SeriesBundle, writer: W) -> Result<()> {
    let mut wtr = csv::WriterBuilder::new().from_writer(writer);
    let with_dates = bundle.dates.is_some();
    let mut header: Vec<&str> = Vec::with_capacity(bundle.len() + 1);
    if with_dates {
        header.push("date");
    }
    header.extend(bundle.ids());
    wtr.write_record(&header)?;

    let rows = bundle
        .entries
        .iter()
        .map(|s| s.values.len())
        .chain(bundle.dates.iter().map(Vec::len))
        .max()
        .unwrap_or(0);
    for row in 0..rows {
        let mut record: Vec<String> = Vec::with_capacity(header.len());
        if let Some(dates) = &bundle.dates {
            record.push(dates.get(row).cloned().unwrap_or_default());
        }
        for series in &bundle.entries {
            record.push(
                series
                    .values
                    .get(row)
                    .map_or_else(String::new, f64::to_string),
            );
        }
        wtr.write_record(&record)?;
    }
    wtr.flush().map_err(|e| Error::io("<writer>", e))?;
    Ok(())
}

/// Standardized returns of one series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReturnSeries {
    pub id: String,
    pub returns: Vec<f64>,
    /// Population standard deviation of the unstandardized returns.
    pub volatility: f64,
    /// Mean of the unstandardized returns.
    pub raw_mean: f64,
}

/// Converts one series to standardized returns.
///
/// Prices are log-differenced first, so the result is one sample shorter than
/// the input; signals keep their length.
pub fn to_returns(series: &Series, kind: SeriesKind) -> Result<ReturnSeries> {
    if series.values.len() < 2 {
        return Err(Error::TooShort {
            id: series.id.clone(),
            len: series.values.len(),
            min: 2,
        });
    }
    let raw: Vec<f64> = match kind {
        SeriesKind::Price => {
            check_positive(series)?;
            series
                .values
                .windows(2)
                .map(|w| w[1].ln() - w[0].ln())
                .collect()
        }
        SeriesKind::Signal => {
            if let Some(i) = series.values.iter().position(|v| !v.is_finite()) {
                return Err(Error::Parse(format!(
                    "series `{}` has a non-finite value at sample {i}",
                    series.id
                )));
            }
            series.values.clone()
        }
    };

    let n = raw.len() as f64;
    let mean = raw.iter().sum::<f64>() / n;
    let var = raw.iter().map(|r| (r - mean).powi(2)).sum::<f64>() / n;
    let sigma = var.sqrt();
    let scale = raw.iter().fold(0.0_f64, |m, r| m.max(r.abs()));
    if sigma.is_nan() || sigma <= 1e-14 * (1.0 + scale) {
        return Err(Error::Degenerate(series.id.clone()));
    }

    let mut returns: Vec<f64> = raw.iter().map(|r| (r - mean) / sigma).collect();
    // One corrective pass removes the rounding left by the first standardization.
    let m2 = returns.iter().sum::<f64>() / n;
    let s2 = (returns.iter().map(|r| (r - m2).powi(2)).sum::<f64>() / n).sqrt();
    returns.iter_mut().for_each(|r| *r = (*r - m2) / s2);

    Ok(ReturnSeries {
        id: series.id.clone(),
        returns,
        volatility: sigma,
        raw_mean: mean,
    })
}

/// Running sum of the standardized returns.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Profile {
    pub id: String,
    pub values: Vec<f64>,
}

impl Profile {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

pub fn to_profile(returns: &ReturnSeries) -> Profile {
    let values = returns
        .returns
        .iter()
        .scan(0.0, |acc, r| {
            *acc += r;
            Some(*acc)
        })
        .collect();
    Profile {
        id: returns.id.clone(),
        values,
    }
}
