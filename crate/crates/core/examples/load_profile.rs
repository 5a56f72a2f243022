//! Load a wide price CSV, convert each column to standardized log returns
//! and integrate them into a profile.

use wbmfdfa::ingest::{read_bundle, to_profile, to_returns, InputFormat};

fn main() -> wbmfdfa::Result<()> {
    let mut csv = String::from("date,AAA,BBB\n");
    let mut a = 100.0_f64;
    let mut b = 50.0_f64;
    for day in 0..128 {
        a *= 1.0 + 0.01 * ((day as f64) * 0.7).sin();
        b *= 1.0 + 0.02 * ((day as f64) * 1.3).cos();
        let b_cell = if day % 17 == 5 {
            "NA".to_string()
        } else {
            b.to_string()
        };
        csv.push_str(&format!("2024-{:03},{a},{b_cell}\n", day));
    }

    let bundle = read_bundle(csv.as_bytes(), InputFormat::WideCsv)?;
    for series in &bundle.entries {
        let returns = to_returns(series, bundle.kind)?;
        let profile = to_profile(&returns);
        println!(
            "{}: {} prices, {} returns, volatility {:.5}, profile ends at {:.3e}",
            series.id,
            series.values.len(),
            returns.returns.len(),
            returns.volatility,
            profile.values.last().unwrap()
        );
    }
    Ok(())
}
