//! Batch command-line front end: `analyze`, `network`, `synth`, `dwt-dump`.
//!
//! Every command writes its resolved configuration next to its outputs, and
//! every CSV starts with a `# config_hash=<hex>` line matching that file.

use std::collections::{BTreeMap, HashSet};
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::cluster::{cut_top_branches, single_linkage, Cluster, Dendrogram};
use crate::error::{Error, Result};
use crate::graph::{build_graph, default_grid, observables, sweep};
use crate::ingest::{
    load_bundle, to_profile, to_returns, write_wide_csv, InputFormat, Series, SeriesBundle,
    SeriesKind,
};
use crate::metric::{freedman_diaconis_breakpoints, segment_distribution, SingularityMatrix};
use crate::mfdfa::{analyze_bundle, AnalysisConfig, Averaging};
use crate::output::{
    config_hash, file_stem, read_json_file, write_csv_file, write_json_file, write_summary_csv,
    SpectrumReport,
};
use crate::synth::{binomial_cascade, gaussian_walk, CascadeSpec};
use crate::wavelet::{dwt_forward, pad_symmetric, Boundary, WaveletFilter, WaveletName};

pub const OUT_DIR_ENV: &str = "WBMFDFA_OUT";
pub const DEFAULT_OUT_DIR: &str = "wbmfdfa-out";

/// Threshold grid for the network sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct XiGrid {
    /// Evenly spaced points between `min` and `max`.
    pub points: usize,
    /// Defaults to the smallest off-diagonal distance.
    pub min: Option<f64>,
    /// Defaults to the largest distance.
    pub max: Option<f64>,
    /// Explicit thresholds; overrides the three fields above.
    pub values: Option<Vec<f64>>,
}

impl Default for XiGrid {
    fn default() -> Self {
        XiGrid {
            points: 200,
            min: None,
            max: None,
            values: None,
        }
    }
}

impl XiGrid {
    pub fn resolve(&self, matrix: &SingularityMatrix) -> Result<Vec<f64>> {
        if let Some(values) = &self.values {
            return Ok(values.clone());
        }
        if self.min.is_none() && self.max.is_none() {
            return Ok(default_grid(matrix, self.points));
        }
        let (lo, hi) = matrix.min_max();
        let lo = self.min.unwrap_or(lo);
        let hi = self.max.unwrap_or(hi);
        if !(lo.is_finite() && hi.is_finite() && hi > lo) || self.points < 2 {
            return Err(Error::Config(format!(
                "threshold grid [{lo}, {hi}] with {} points",
                self.points
            )));
        }
        let step = (hi - lo) / (self.points - 1) as f64;
        Ok((0..self.points).map(|k| lo + step * k as f64).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RunConfig {
    /// Bundle file for `analyze`, analysis directory for `network`.
    pub input: Option<PathBuf>,
    pub format: InputFormat,
    pub analysis: AnalysisConfig,
    /// Histogram breakpoints; Freedman-Diaconis bins when absent.
    pub breakpoints: Option<Vec<f64>>,
    /// Number of clusters cut from the top of the dendrogram.
    pub cut_k: usize,
    pub xi_grid: XiGrid,
    pub output_dir: Option<PathBuf>,
    /// Thread count; `None` uses the available parallelism.
    pub workers: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            input: None,
            format: InputFormat::default(),
            analysis: AnalysisConfig::default(),
            breakpoints: None,
            cut_k: 6,
            xi_grid: XiGrid::default(),
            output_dir: None,
            workers: None,
        }
    }
}

/// The part of a [`RunConfig`] that determines output contents. Worker count
/// and output location are left out so they cannot change any artifact.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResolvedConfig {
    pub input: Option<PathBuf>,
    pub format: InputFormat,
    pub analysis: AnalysisConfig,
    pub breakpoints: Option<Vec<f64>>,
    pub cut_k: usize,
    pub xi_grid: XiGrid,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigRecord<T> {
    pub config_hash: String,
    pub config: T,
}

impl RunConfig {
    pub fn from_json_file(path: &Path) -> Result<Self> {
        read_json_file(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }

    pub fn resolved(&self) -> ResolvedConfig {
        ResolvedConfig {
            input: self.input.clone(),
            format: self.format,
            analysis: self.analysis.clone(),
            breakpoints: self.breakpoints.clone(),
            cut_k: self.cut_k,
            xi_grid: self.xi_grid.clone(),
        }
    }

    pub fn hash(&self) -> Result<String> {
        config_hash(&self.resolved())
    }

    pub fn out_dir(&self) -> PathBuf {
        self.output_dir
            .clone()
            .unwrap_or_else(|| PathBuf::from(DEFAULT_OUT_DIR))
    }

    fn input_path(&self) -> Result<&Path> {
        self.input
            .as_deref()
            .ok_or_else(|| Error::Config("no input given".into()))
    }

    fn write_record(&self, dir: &Path) -> Result<String> {
        let hash = self.hash()?;
        write_json_file(
            &dir.join("config.json"),
            &ConfigRecord {
                config_hash: hash.clone(),
                config: self.resolved(),
            },
        )?;
        Ok(hash)
    }
}

fn with_workers<T: Send>(workers: Option<usize>, job: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.unwrap_or(0))
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    Ok(pool.install(job))
}

fn create_dir(path: &Path) -> Result<()> {
    fs::create_dir_all(path).map_err(|e| Error::io(path, e))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesFailure {
    pub id: String,
    pub error: String,
}

/// `report.json` of an analysis run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub config_hash: String,
    /// Spectrum file of each analyzed id, relative to the output directory.
    pub spectra: BTreeMap<String, PathBuf>,
    pub failures: Vec<SeriesFailure>,
}

/// Analyzes every series of the input bundle. Series that fail are listed in
/// the report and do not stop the run.
pub fn cmd_analyze(config: &RunConfig) -> Result<AnalyzeReport> {
    config.analysis.validate()?;
    let bundle = load_bundle(config.input_path()?, config.format)?;
    let out = config.out_dir();
    create_dir(&out.join("spectra"))?;
    let hash = config.write_record(&out)?;

    let results = with_workers(config.workers, || analyze_bundle(&bundle, &config.analysis))?;

    let mut spectra = BTreeMap::new();
    let mut failures = Vec::new();
    let mut ok = Vec::new();
    let mut used_stems = HashSet::new();
    for (id, result) in &results {
        match result {
            Ok(spectrum) => {
                let mut stem = file_stem(id);
                if !used_stems.insert(stem.clone()) {
                    let base = stem.clone();
                    let mut k = 2;
                    while !used_stems.insert(format!("{base}-{k}")) {
                        k += 1;
                    }
                    stem = format!("{base}-{k}");
                }
                let rel = PathBuf::from("spectra").join(format!("{stem}.json"));
                write_json_file(
                    &out.join(&rel),
                    &SpectrumReport::new(spectrum, &config.analysis, &hash),
                )?;
                spectra.insert(id.clone(), rel);
                ok.push(spectrum);
            }
            Err(e) => failures.push(SeriesFailure {
                id: id.clone(),
                error: e.to_string(),
            }),
        }
    }
    write_csv_file(&out.join("summary.csv"), &hash, |buf| {
        write_summary_csv(&ok, buf)
    })?;
    let report = AnalyzeReport {
        config_hash: hash,
        spectra,
        failures,
    };
    write_json_file(&out.join("report.json"), &report)?;
    Ok(report)
}

/// Loads the spectra listed in an analysis directory's `report.json`, sorted by id.
pub fn load_spectra(dir: &Path) -> Result<Vec<SpectrumReport>> {
    let report_path = dir.join("report.json");
    if !report_path.is_file() {
        return Err(Error::Config(format!(
            "no analysis report at {}",
            report_path.display()
        )));
    }
    let report: AnalyzeReport = read_json_file(&report_path)?;
    report
        .spectra
        .values()
        .map(|rel| read_json_file(&dir.join(rel)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClusterShare {
    pub label: String,
    pub size: usize,
    pub percentage: f64,
}

/// `network.json` of a network run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetworkReport {
    pub config_hash: String,
    pub series: usize,
    pub breakpoints: Vec<f64>,
    pub cut_k: usize,
    pub clusters: Vec<ClusterShare>,
    /// Thresholds at interior local maxima of the clustering coefficient.
    pub critical_candidates: Vec<f64>,
    /// Thresholds at interior local maxima of the average betweenness.
    pub betweenness_maxima: Vec<f64>,
    /// Threshold of the largest average betweenness.
    pub betweenness_peak: Option<f64>,
    /// Threshold at which `edges.csv` and `betweenness.csv` were taken.
    pub graph_xi: Option<f64>,
    pub path_length_convention: String,
    pub efficiency_convention: String,
}

/// Distance matrix, dendrogram, histogram and threshold sweep over the
/// spectra of an earlier `analyze` run.
pub fn cmd_network(config: &RunConfig) -> Result<NetworkReport> {
    let reports = load_spectra(config.input_path()?)?;
    if reports.len() < 2 {
        return Err(Error::Config(format!(
            "network needs at least 2 spectra, found {}",
            reports.len()
        )));
    }
    let matrix = SingularityMatrix::from_gammas(
        reports.iter().map(|r| r.id.clone()).collect(),
        reports.iter().map(|r| r.gamma).collect(),
    )?;
    let out = config.out_dir();
    create_dir(&out)?;
    let hash = config.write_record(&out)?;

    write_csv_file(&out.join("rho.csv"), &hash, |buf| matrix.write_csv(buf))?;
    let mut rho_json = matrix.to_upper_json();
    rho_json["config_hash"] = hash.clone().into();
    write_json_file(&out.join("rho.json"), &rho_json)?;

    let dend = single_linkage(&matrix)?;
    fs::write(
        out.join("dendrogram.nwk"),
        format!("{}\n", dend.to_newick()),
    )
    .map_err(|e| Error::io(out.join("dendrogram.nwk"), e))?;
    write_json_file(
        &out.join("dendrogram.json"),
        &DendrogramRecord::new(&dend, &hash),
    )?;

    let cut_k = config.cut_k.clamp(1, matrix.len());
    let clusters = cut_top_branches(&dend, cut_k)?;
    write_csv_file(&out.join("clusters.csv"), &hash, |buf| {
        write_cluster_shares(&clusters, buf)
    })?;
    write_csv_file(&out.join("membership.csv"), &hash, |buf| {
        Dendrogram::write_cut_csv(&clusters, buf)
    })?;

    let breakpoints = match &config.breakpoints {
        Some(b) => b.clone(),
        None => freedman_diaconis_breakpoints(&matrix),
    };
    let histogram = segment_distribution(&matrix, &breakpoints)?;
    write_csv_file(&out.join("histogram.csv"), &hash, |buf| {
        histogram.write_csv(buf)
    })?;

    let grid = config.xi_grid.resolve(&matrix)?;
    let result = with_workers(config.workers, || sweep(&matrix, &grid))??;
    write_csv_file(&out.join("sweep.csv"), &hash, |buf| result.write_csv(buf))?;

    let graph_xi = result
        .critical_candidates
        .first()
        .copied()
        .or(result.betweenness_peak);
    if let Some(xi) = graph_xi {
        let g = build_graph(&matrix, xi)?;
        let obs = with_workers(config.workers, || observables(&g))??;
        write_csv_file(&out.join("edges.csv"), &hash, |buf| g.write_edge_list(buf))?;
        write_csv_file(&out.join("betweenness.csv"), &hash, |buf| {
            let mut wtr = csv::Writer::from_writer(buf);
            wtr.write_record(["id", "betweenness"])?;
            for (id, b) in matrix.ids.iter().zip(&obs.betweenness) {
                wtr.write_record([id.clone(), b.to_string()])?;
            }
            wtr.flush().map_err(|e| Error::io("<buffer>", e))?;
            Ok(())
        })?;
    }

    let report = NetworkReport {
        config_hash: hash,
        series: matrix.len(),
        breakpoints,
        cut_k,
        clusters: clusters
            .iter()
            .map(|c| ClusterShare {
                label: c.label.clone(),
                size: c.leaves.len(),
                percentage: c.percentage,
            })
            .collect(),
        critical_candidates: result.critical_candidates.clone(),
        betweenness_maxima: result.betweenness_maxima.clone(),
        betweenness_peak: result.betweenness_peak,
        graph_xi,
        path_length_convention: "mean over reachable ordered pairs".into(),
        efficiency_convention: "unreachable pairs contribute 1/inf = 0".into(),
    };
    write_json_file(&out.join("network.json"), &report)?;
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct DendrogramRecord {
    config_hash: String,
    leaf_ids: Vec<String>,
    leaf_order: Vec<usize>,
    merges: Vec<crate::cluster::Merge>,
}

impl DendrogramRecord {
    fn new(dend: &Dendrogram, hash: &str) -> Self {
        DendrogramRecord {
            config_hash: hash.to_owned(),
            leaf_ids: dend.leaf_ids.clone(),
            leaf_order: dend.leaf_order(),
            merges: dend.merges.clone(),
        }
    }
}

/// `cluster_label,size,percentage` rows.
fn write_cluster_shares(clusters: &[Cluster], buf: &mut Vec<u8>) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(buf);
    wtr.write_record(["cluster_label", "size", "percentage"])?;
    for c in clusters {
        wtr.write_record([
            c.label.clone(),
            c.leaves.len().to_string(),
            c.percentage.to_string(),
        ])?;
    }
    wtr.flush().map_err(|e| Error::io("<buffer>", e))?;
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum SynthKind {
    #[default]
    Cascade,
    Walk,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SynthConfig {
    pub kind: SynthKind,
    pub count: usize,
    pub multiplier: f64,
    /// Cascade length is `2^levels`.
    pub levels: u32,
    /// Walk length.
    pub length: usize,
    /// Series `i` uses seed `seed + i`.
    pub seed: u64,
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig {
            kind: SynthKind::Cascade,
            count: 1,
            multiplier: 0.75,
            levels: 16,
            length: 1 << 16,
            seed: 0,
        }
    }
}

pub fn synth_bundle(config: &SynthConfig) -> Result<SeriesBundle> {
    if config.count == 0 {
        return Err(Error::InvalidArgument("count must be positive".into()));
    }
    let entries = (0..config.count)
        .map(|i| {
            let seed = config.seed.wrapping_add(i as u64);
            let (prefix, values) = match config.kind {
                SynthKind::Cascade => (
                    "cascade",
                    binomial_cascade(&CascadeSpec::new(config.multiplier, config.levels, seed))?,
                ),
                SynthKind::Walk => ("walk", gaussian_walk(config.length, seed)?),
            };
            Ok(Series {
                id: format!("{prefix}_{i:03}"),
                values,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    SeriesBundle::new(SeriesKind::Signal, entries)
}

/// Writes a wide raw-signal bundle to `path` and its configuration to
/// `path` with extension `config.json`.
pub fn cmd_synth(config: &SynthConfig, path: &Path) -> Result<()> {
    let bundle = synth_bundle(config)?;
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        create_dir(parent)?;
    }
    let hash = config_hash(config)?;
    write_csv_file(path, &hash, |buf| write_wide_csv(&bundle, buf))?;
    write_json_file(
        &path.with_extension("config.json"),
        &ConfigRecord {
            config_hash: hash,
            config: config.clone(),
        },
    )
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DwtDumpConfig {
    pub input: PathBuf,
    pub format: InputFormat,
    /// Series to transform; the first one when absent.
    pub id: Option<String>,
    pub filter: WaveletName,
    pub levels: usize,
    pub boundary: Boundary,
    /// Transform the standardized profile instead of the raw values.
    pub profile: bool,
}

/// Coefficients as `level,index,value` rows. The signal is padded by
/// symmetric reflection to a multiple of `2^levels` first.
pub fn cmd_dwt_dump(config: &DwtDumpConfig, out: &mut Vec<u8>) -> Result<()> {
    let bundle = load_bundle(&config.input, config.format)?;
    let series = match &config.id {
        Some(id) => bundle
            .get(id)
            .ok_or_else(|| Error::InvalidArgument(format!("no series named {id:?}")))?,
        None => &bundle.entries[0],
    };
    let signal = if config.profile {
        to_profile(&to_returns(series, bundle.kind).map_err(|e| e.for_series(&series.id))?).values
    } else {
        series.values.clone()
    };
    let block = 1usize
        .checked_shl(config.levels as u32)
        .filter(|&b| b > 0 && config.levels > 0)
        .ok_or_else(|| Error::InvalidLevels(format!("{} levels", config.levels)))?;
    let padded = pad_symmetric(&signal, block);
    let decomp = dwt_forward(
        &padded,
        &WaveletFilter::new(config.filter),
        config.levels,
        config.boundary,
    )?;
    let hash = config_hash(config)?;
    out.extend_from_slice(format!("# config_hash={hash}\n").as_bytes());
    decomp.write_csv(out)
}

#[derive(Debug, Parser)]
#[command(
    name = "wbmfdfa",
    version,
    about = "Wavelet-based multifractal analysis of time series"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Singularity spectra for every series of a bundle.
    Analyze(RunArgs),
    /// Distance matrix, dendrogram, histogram and threshold sweep over analyzed spectra.
    Network(RunArgs),
    /// Generate a bundle of synthetic signals.
    Synth(SynthArgs),
    /// Dump the wavelet coefficients of one series.
    DwtDump(DwtDumpArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct RunArgs {
    /// JSON run configuration; flags given here override its fields.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Bundle file (analyze) or analysis directory (network).
    #[arg(long, short)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<InputFormat>,
    #[arg(long, short, env = OUT_DIR_ENV)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub workers: Option<usize>,
    /// Comma-separated moment orders.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub r_grid: Option<Vec<f64>>,
    #[arg(long)]
    pub min_level: Option<usize>,
    #[arg(long)]
    pub max_level: Option<usize>,
    #[arg(long, value_enum)]
    pub filter: Option<WaveletName>,
    #[arg(long)]
    pub eps_floor: Option<f64>,
    #[arg(long, value_enum)]
    pub averaging: Option<Averaging>,
    /// Comma-separated histogram breakpoints.
    #[arg(long, value_delimiter = ',')]
    pub breakpoints: Option<Vec<f64>>,
    #[arg(long)]
    pub cut_k: Option<usize>,
    #[arg(long)]
    pub xi_points: Option<usize>,
    #[arg(long)]
    pub xi_min: Option<f64>,
    #[arg(long)]
    pub xi_max: Option<f64>,
}

impl RunArgs {
    pub fn resolve(&self) -> Result<RunConfig> {
        let mut c = match &self.config {
            Some(path) => RunConfig::from_json_file(path)?,
            None => RunConfig::default(),
        };
        if let Some(v) = &self.input {
            c.input = Some(v.clone());
        }
        if let Some(v) = self.format {
            c.format = v;
        }
        if let Some(v) = &self.out {
            c.output_dir = Some(v.clone());
        }
        if let Some(v) = self.workers {
            c.workers = Some(v);
        }
        let a = &mut c.analysis;
        if let Some(v) = &self.r_grid {
            a.r_grid = v.clone();
        }
        if let Some(v) = self.min_level {
            a.min_level = v;
        }
        if let Some(v) = self.max_level {
            a.max_level = Some(v);
        }
        if let Some(v) = self.filter {
            a.filter = v;
        }
        if let Some(v) = self.eps_floor {
            a.eps_floor = v;
        }
        if let Some(v) = self.averaging {
            a.averaging = v;
        }
        if let Some(v) = &self.breakpoints {
            c.breakpoints = Some(v.clone());
        }
        if let Some(v) = self.cut_k {
            c.cut_k = v;
        }
        if let Some(v) = self.xi_points {
            c.xi_grid.points = v;
        }
        if let Some(v) = self.xi_min {
            c.xi_grid.min = Some(v);
        }
        if let Some(v) = self.xi_max {
            c.xi_grid.max = Some(v);
        }
        c.analysis.validate()?;
        Ok(c)
    }
}

#[derive(Debug, Clone, Args)]
pub struct SynthArgs {
    #[arg(long, value_enum, default_value_t = SynthKind::Cascade)]
    pub kind: SynthKind,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[arg(long, short = 'a', default_value_t = 0.75)]
    pub multiplier: f64,
    /// Cascade length exponent.
    #[arg(long, short = 'n', default_value_t = 16)]
    pub levels: u32,
    /// Walk length.
    #[arg(long, default_value_t = 1 << 16)]
    pub length: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output CSV file.
    #[arg(long, short)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct DwtDumpArgs {
    #[arg(long, short)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::RawSignal)]
    pub format: InputFormat,
    #[arg(long)]
    pub id: Option<String>,
    #[arg(long, value_enum, default_value_t = WaveletName::Db4)]
    pub filter: WaveletName,
    #[arg(long, default_value_t = 4)]
    pub levels: usize,
    #[arg(long, value_enum, default_value_t = Boundary::Periodic)]
    pub boundary: Boundary,
    /// Transform the profile rather than the raw values.
    #[arg(long)]
    pub profile: bool,
    /// Output CSV file; standard output when absent.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

/// Runs one command line. Per-series failures are reported on stderr and do
/// not make this return an error.
pub fn run_from<I, T>(args: I) -> Result<()>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    execute(Cli::try_parse_from(args).map_err(|e| Error::Config(e.to_string()))?)
}

pub fn execute(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Analyze(args) => {
            let report = cmd_analyze(&args.resolve()?)?;
            for f in &report.failures {
                eprintln!("warning: {}: {}", f.id, f.error);
            }
            Ok(())
        }
        Command::Network(args) => cmd_network(&args.resolve()?).map(drop),
        Command::Synth(args) => cmd_synth(
            &SynthConfig {
                kind: args.kind,
                count: args.count,
                multiplier: args.multiplier,
                levels: args.levels,
                length: args.length,
                seed: args.seed,
            },
            &args.out,
        ),
        Command::DwtDump(args) => {
            let config = DwtDumpConfig {
                input: args.input,
                format: args.format,
                id: args.id,
                filter: args.filter,
                levels: args.levels,
                boundary: args.boundary,
                profile: args.profile,
            };
            let mut buf = Vec::new();
            cmd_dwt_dump(&config, &mut buf)?;
            match &args.out {
                Some(path) => fs::write(path, buf).map_err(|e| Error::io(path, e)),
                None => {
                    use std::io::Write;
                    std::io::stdout()
                        .write_all(&buf)
                        .map_err(|e| Error::io("<stdout>", e))
                }
            }
        }
    }
}

/// Entry point of the `wbmfdfa` binary.
pub fn run() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
