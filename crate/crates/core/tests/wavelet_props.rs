use proptest::prelude::*;
use wbmfdfa::wavelet::{
    dwt_forward, dwt_inverse, lowpass_trend, Boundary, WaveletFilter, WaveletName,
};

fn filter_strategy() -> impl Strategy<Value = WaveletName> {
    prop_oneof![
        Just(WaveletName::Db4),
        Just(WaveletName::Db6),
        Just(WaveletName::Db8)
    ]
}

fn signal_strategy() -> impl Strategy<Value = Vec<f64>> {
    (4u32..9).prop_flat_map(|p| prop::collection::vec(-100.0f64..100.0, 1usize << p))
}

/// One analysis level written out as the explicit convolution sum.
fn direct_level(x: &[f64], h: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let m = x.len();
    let l = h.len();
    let g: Vec<f64> = (0..l)
        .map(|n| if n % 2 == 0 { 1.0 } else { -1.0 } * h[l - 1 - n])
        .collect();
    let mut a = vec![0.0; m / 2];
    let mut d = vec![0.0; m / 2];
    for k in 0..m / 2 {
        for n in 0..l {
            a[k] += h[n] * x[(2 * k + n) % m];
            d[k] += g[n] * x[(2 * k + n) % m];
        }
    }
    (a, d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reconstruction_and_energy(name in filter_strategy(), x in signal_strategy(), levels in 1usize..4) {
        let f = WaveletFilter::new(name);
        prop_assume!(x.len() >= f.len() << (levels - 1));
        let d = dwt_forward(&x, &f, levels, Boundary::Periodic).unwrap();
        let back = dwt_inverse(&d).unwrap();
        let scale = x.iter().map(|v| v.abs()).fold(1.0, f64::max);
        for (a, b) in x.iter().zip(&back) {
            prop_assert!((a - b).abs() <= 1e-10 * scale);
        }
        let e: f64 = x.iter().map(|v| v * v).sum();
        prop_assert!((d.energy() - e).abs() <= 1e-9 * e.max(1.0));
    }

    #[test]
    fn linear_in_the_signal(name in filter_strategy(), x in signal_strategy(), c in -5.0f64..5.0) {
        let f = WaveletFilter::new(name);
        prop_assume!(x.len() >= 2 * f.len());
        let y: Vec<f64> = x.iter().rev().copied().collect();
        let combo: Vec<f64> = x.iter().zip(&y).map(|(a, b)| c * a + b).collect();
        let dx = dwt_forward(&x, &f, 2, Boundary::Periodic).unwrap();
        let dy = dwt_forward(&y, &f, 2, Boundary::Periodic).unwrap();
        let dc = dwt_forward(&combo, &f, 2, Boundary::Periodic).unwrap();
        for ((a, b), s) in dx.approx.iter().zip(&dy.approx).zip(&dc.approx) {
            prop_assert!((c * a + b - s).abs() < 1e-9);
        }
    }

    #[test]
    fn matches_direct_convolution(name in filter_strategy(), x in signal_strategy()) {
        let f = WaveletFilter::new(name);
        prop_assume!(x.len() >= f.len());
        let d = dwt_forward(&x, &f, 1, Boundary::Periodic).unwrap();
        let (a, det) = direct_level(&x, &f.lowpass);
        for (u, v) in d.approx.iter().zip(&a) {
            prop_assert!((u - v).abs() < 1e-10);
        }
        for (u, v) in d.details[0].iter().zip(&det) {
            prop_assert!((u - v).abs() < 1e-10);
        }
    }

    #[test]
    fn symmetric_boundary_reconstructs(name in filter_strategy(), x in signal_strategy()) {
        let f = WaveletFilter::new(name);
        prop_assume!(x.len() >= f.len());
        let d = dwt_forward(&x, &f, 2, Boundary::Symmetric).unwrap();
        let back = dwt_inverse(&d).unwrap();
        prop_assert_eq!(back.len(), x.len());
        for (a, b) in x.iter().zip(&back) {
            prop_assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn trend_is_linear_and_keeps_length(x in prop::collection::vec(-10.0f64..10.0, 64..300), c in 0.1f64..10.0) {
        let f = WaveletFilter::new(WaveletName::Db4);
        let t = lowpass_trend(&x, &f, 3).unwrap();
        prop_assert_eq!(t.len(), x.len());
        let scaled: Vec<f64> = x.iter().map(|v| c * v).collect();
        let ts = lowpass_trend(&scaled, &f, 3).unwrap();
        for (a, b) in t.iter().zip(&ts) {
            prop_assert!((c * a - b).abs() < 1e-9 * c.max(1.0));
        }
    }
}

#[test]
fn polynomials_below_the_vanishing_order_leave_no_interior_detail() {
    for name in WaveletName::ALL {
        let f = WaveletFilter::new(name);
        let p = f.vanishing_moments;
        let x: Vec<f64> = (0..512)
            .map(|t| {
                let u = t as f64 / 512.0;
                (0..p).map(|k| (k as f64 + 1.0) * u.powi(k as i32)).sum()
            })
            .collect();
        let d = dwt_forward(&x, &f, 1, Boundary::Periodic).unwrap();
        // Coefficients whose support wraps around the end see the jump.
        let interior = 256 - f.len() / 2;
        for v in &d.details[0][..interior] {
            assert!(v.abs() < 1e-8, "{name:?}: {v}");
        }
    }
}
