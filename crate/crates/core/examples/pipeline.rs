//! End to end through the command layer: synthesize a bundle, analyze it and
//! build the network outputs. Files go under `target/pipeline-example`.

use std::path::PathBuf;

use wbmfdfa::cli::{cmd_analyze, cmd_network, cmd_synth, RunConfig, SynthConfig};
use wbmfdfa::ingest::InputFormat;

fn main() -> wbmfdfa::Result<()> {
    let root = PathBuf::from("target/pipeline-example");
    let bundle = root.join("bundle.csv");
    cmd_synth(
        &SynthConfig {
            count: 12,
            multiplier: 0.7,
            levels: 13,
            seed: 100,
            ..SynthConfig::default()
        },
        &bundle,
    )?;

    let analysis = RunConfig {
        input: Some(bundle),
        format: InputFormat::RawSignal,
        output_dir: Some(root.join("analysis")),
        ..RunConfig::default()
    };
    let report = cmd_analyze(&analysis)?;
    println!(
        "analyzed {} series, {} failures, config {}",
        report.spectra.len(),
        report.failures.len(),
        report.config_hash
    );

    let network = RunConfig {
        input: Some(root.join("analysis")),
        output_dir: Some(root.join("network")),
        cut_k: 3,
        ..RunConfig::default()
    };
    let net = cmd_network(&network)?;
    for c in &net.clusters {
        println!(
            "cluster {}: {} series ({:.1}%)",
            c.label, c.size, c.percentage
        );
    }
    println!("critical thresholds {:?}", net.critical_candidates);
    println!("outputs in {}", root.display());
    Ok(())
}
