mod common;

use proptest::prelude::*;
use wbmfdfa::ingest::{to_profile, to_returns, Profile, Series, SeriesKind};
use wbmfdfa::mfdfa::{
    analyze_profile, analyze_series, analyze_series_detailed, AnalysisConfig, Averaging,
};
use wbmfdfa::synth::{binomial_cascade, gaussian_walk, CascadeSpec};

fn series(id: &str, values: Vec<f64>) -> Series {
    Series {
        id: id.into(),
        values,
    }
}

fn profile_of(values: Vec<f64>) -> Profile {
    to_profile(&to_returns(&series("p", values), SeriesKind::Signal).unwrap())
}

fn max_rel_diff(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x - y).abs() / x.abs().max(1e-300))
        .fold(0.0, f64::max)
}

#[test]
fn price_amplitude_does_not_matter() {
    let steps = gaussian_walk(4096, 21).unwrap();
    let mut price = 100.0;
    let prices: Vec<f64> = steps
        .iter()
        .map(|e| {
            price *= (0.01 * e).exp();
            price
        })
        .collect();
    let cfg = AnalysisConfig::default();
    let base = analyze_series(&series("x", prices.clone()), SeriesKind::Price, &cfg).unwrap();
    for c in [1e-3, 7.0, 2.5e4] {
        let scaled: Vec<f64> = prices.iter().map(|p| c * p).collect();
        let s = analyze_series(&series("x", scaled), SeriesKind::Price, &cfg).unwrap();
        for (a, b) in base.h.iter().zip(&s.h) {
            assert!((a - b).abs() < 1e-8, "c = {c}: {a} vs {b}");
        }
    }
}

#[test]
fn reversed_and_negated_profiles_give_the_same_table() {
    for averaging in [Averaging::Fluctuations, Averaging::SegmentVariances] {
        let cfg = AnalysisConfig {
            averaging,
            ..AnalysisConfig::default()
        };
        let p = profile_of(gaussian_walk(3000, 4).unwrap());
        let base = analyze_profile(&p, &cfg).unwrap().table;
        let reversed = Profile {
            id: "r".into(),
            values: p.values.iter().rev().copied().collect(),
        };
        let negated = Profile {
            id: "n".into(),
            values: p.values.iter().map(|v| -v).collect(),
        };
        for other in [reversed, negated] {
            let t = analyze_profile(&other, &cfg).unwrap().table;
            assert!(max_rel_diff(&base.values, &t.values) < 1e-10);
        }
    }
}

#[test]
fn zero_order_is_continuous() {
    let cfg = AnalysisConfig {
        r_grid: vec![-0.01, 0.0, 0.01, 2.0],
        ..AnalysisConfig::default()
    };
    for (k, values) in [
        gaussian_walk(8192, 1).unwrap(),
        binomial_cascade(&CascadeSpec::new(0.7, 13, 2)).unwrap(),
    ]
    .into_iter()
    .enumerate()
    {
        let a = analyze_series_detailed(&series(&k.to_string(), values), SeriesKind::Signal, &cfg)
            .unwrap();
        let t = &a.table;
        for w in 0..t.windows.len() {
            let f0 = t.get(1, w);
            for side in [0, 2] {
                assert!((t.get(side, w) - f0).abs() / f0 < 1e-2);
            }
        }
    }
}

#[test]
fn agrees_with_first_order_dfa_on_walks() {
    let cfg = AnalysisConfig::default();
    for seed in 0..4 {
        let noise = gaussian_walk(1 << 14, 300 + seed).unwrap();
        let h = analyze_series(&series("w", noise.clone()), SeriesKind::Signal, &cfg)
            .unwrap()
            .hurst;
        let windows: Vec<usize> = (4..=10).map(|j| 1usize << j).collect();
        let f = common::dfa1(&noise, &windows);
        let x: Vec<f64> = windows.iter().map(|&w| w as f64).collect();
        let h_dfa = common::log_log_slope(&x, &f);
        assert!((h - h_dfa).abs() < 0.05, "seed {seed}: {h} vs {h_dfa}");
    }
}

#[test]
fn agrees_with_first_order_dfa_on_integrated_noise() {
    let noise = gaussian_walk(1 << 14, 77).unwrap();
    let mut acc = 0.0;
    let walk: Vec<f64> = noise
        .iter()
        .map(|e| {
            acc += e;
            acc
        })
        .collect();
    let cfg = AnalysisConfig::default();
    let h = analyze_series(&series("w", walk.clone()), SeriesKind::Signal, &cfg)
        .unwrap()
        .hurst;
    let windows: Vec<usize> = (4..=10).map(|j| 1usize << j).collect();
    let f = common::dfa1(&walk, &windows);
    let x: Vec<f64> = windows.iter().map(|&w| w as f64).collect();
    let h_dfa = common::log_log_slope(&x, &f);
    assert!(h > 1.3, "{h}");
    assert!((h - h_dfa).abs() < 0.1, "{h} vs {h_dfa}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn spectra_satisfy_their_definitions(seed in 0u64..10_000, a in 0.55f64..0.9, cascade in any::<bool>()) {
        let values = if cascade {
            binomial_cascade(&CascadeSpec::new(a, 11, seed)).unwrap()
        } else {
            gaussian_walk(2048, seed).unwrap()
        };
        let cfg = AnalysisConfig::default();
        let an = analyze_series_detailed(&series("s", values), SeriesKind::Signal, &cfg).unwrap();
        let s = &an.spectrum;
        for i in 0..s.r.len() {
            prop_assert!((s.tau[i] - (s.r[i] * s.h[i] - 1.0)).abs() < 1e-9);
            prop_assert!((s.f_beta[i] - (s.r[i] * (s.beta[i] - s.h[i]) + 1.0)).abs() < 1e-9);
        }
        prop_assert_eq!(an.table.monotonicity_violations(1e-12), 0);
        let max = s.beta.iter().copied().fold(f64::MIN, f64::max);
        let min = s.beta.iter().copied().fold(f64::MAX, f64::min);
        prop_assert!((s.gamma - (max - min)).abs() < 1e-12);
    }

    #[test]
    fn signal_scale_and_offset_do_not_matter(seed in 0u64..10_000, c in 0.01f64..100.0, shift in -50.0f64..50.0) {
        let x = gaussian_walk(1024, seed).unwrap();
        let y: Vec<f64> = x.iter().map(|v| c * v + shift).collect();
        let cfg = AnalysisConfig::default();
        let a = analyze_series(&series("x", x), SeriesKind::Signal, &cfg).unwrap();
        let b = analyze_series(&series("x", y), SeriesKind::Signal, &cfg).unwrap();
        for (u, v) in a.h.iter().zip(&b.h) {
            prop_assert!((u - v).abs() < 1e-8);
        }
    }
}
