//! Generalized Hurst exponents of a binomial cascade against the closed form.

use wbmfdfa::ingest::{Series, SeriesKind};
use wbmfdfa::mfdfa::{analyze_series, AnalysisConfig};
use wbmfdfa::synth::{binomial_cascade, binomial_h, CascadeSpec};

fn main() -> wbmfdfa::Result<()> {
    let a = 0.7;
    let values = binomial_cascade(&CascadeSpec::new(a, 16, 42))?;
    let series = Series {
        id: "cascade".into(),
        values,
    };
    let spectrum = analyze_series(&series, SeriesKind::Signal, &AnalysisConfig::default())?;

    println!("{:>5} {:>8} {:>8} {:>7}", "r", "h", "exact", "R^2");
    for (i, &r) in spectrum.r.iter().enumerate() {
        println!(
            "{r:>5.1} {:>8.4} {:>8.4} {:>7.4}",
            spectrum.h[i],
            binomial_h(a, r),
            spectrum.fit_r2[i]
        );
    }
    println!("gamma = {:.4}, H = {:.4}", spectrum.gamma, spectrum.hurst);
    for w in &spectrum.warnings {
        println!("warning: {w}");
    }
    Ok(())
}
