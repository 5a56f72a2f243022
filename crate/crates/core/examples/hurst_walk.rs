//! Gaussian noise is monofractal with H close to 1/2; shuffling a cascade
//! destroys its multifractality.

use wbmfdfa::ingest::{Series, SeriesKind};
use wbmfdfa::mfdfa::{analyze_series, AnalysisConfig};
use wbmfdfa::synth::{binomial_cascade, gaussian_walk, shuffled, CascadeSpec};

fn main() -> wbmfdfa::Result<()> {
    let config = AnalysisConfig::default();
    let analyze = |id: &str, values: Vec<f64>| {
        analyze_series(
            &Series {
                id: id.into(),
                values,
            },
            SeriesKind::Signal,
            &config,
        )
    };

    let mut hs = Vec::new();
    for seed in 0..8 {
        let s = analyze("walk", gaussian_walk(1 << 15, seed)?)?;
        println!(
            "walk seed {seed}: H = {:.4}, gamma = {:.4}",
            s.hurst, s.gamma
        );
        hs.push(s.hurst);
    }
    println!("mean H = {:.4}", hs.iter().sum::<f64>() / hs.len() as f64);

    let cascade = binomial_cascade(&CascadeSpec::new(0.75, 15, 9))?;
    let before = analyze("cascade", cascade.clone())?;
    let after = analyze("shuffled", shuffled(&cascade, 9))?;
    println!(
        "cascade gamma {:.4} -> {:.4} after shuffling",
        before.gamma, after.gamma
    );
    Ok(())
}
