//! Pyramid DWT with each Daubechies filter: energy is preserved, the inverse
//! reproduces the input, and a low-pass reconstruction gives a smooth trend.

use wbmfdfa::synth::gaussian_walk;
use wbmfdfa::wavelet::{
    dwt_forward, dwt_inverse, lowpass_trend, Boundary, WaveletFilter, WaveletName,
};

fn main() -> wbmfdfa::Result<()> {
    let noise = gaussian_walk(1024, 3)?;
    let signal: Vec<f64> = noise
        .iter()
        .enumerate()
        .map(|(t, e)| (t as f64 / 80.0).sin() * 5.0 + e)
        .collect();
    let energy: f64 = signal.iter().map(|v| v * v).sum();

    for name in WaveletName::ALL {
        let filter = WaveletFilter::new(name);
        let decomp = dwt_forward(&signal, &filter, 5, Boundary::Periodic)?;
        let back = dwt_inverse(&decomp)?;
        let err = signal
            .iter()
            .zip(&back)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        let detail_energy: Vec<String> = (1..=5)
            .map(|j| {
                format!(
                    "{:.1}",
                    decomp.detail(j).unwrap().iter().map(|d| d * d).sum::<f64>()
                )
            })
            .collect();
        println!(
            "{name:?}: energy {energy:.3} -> {:.3}, reconstruction error {err:.1e}, detail energy by level [{}]",
            decomp.energy(),
            detail_energy.join(", ")
        );
    }

    let trend = lowpass_trend(&signal, &WaveletFilter::new(WaveletName::Db8), 6)?;
    let residual: f64 = signal
        .iter()
        .zip(&trend)
        .map(|(s, t)| (s - t).powi(2))
        .sum();
    println!("Db8 level-6 trend leaves residual energy {residual:.1} of {energy:.1}");
    Ok(())
}
