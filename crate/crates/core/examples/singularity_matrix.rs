//! Distance matrix between spectrum widths and its grouped distribution.

use wbmfdfa::metric::{segment_auto, segment_distribution, SingularityMatrix};

fn main() -> wbmfdfa::Result<()> {
    let ids: Vec<String> = ["AAA", "BBB", "CCC", "DDD", "EEE", "FFF"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let gamma = vec![0.4, 1.9, 3.1, 4.0, 5.6, 7.2];
    let m = SingularityMatrix::from_gammas(ids, gamma)?;

    let mut out = Vec::new();
    m.write_csv(&mut out)?;
    print!("{}", String::from_utf8_lossy(&out));

    let h = segment_distribution(&m, &[1.72, 3.36, 4.77, 5.45, 6.08])?;
    println!("\nfixed breakpoints");
    for g in &h.groups {
        println!(
            "{}: [{:.2}, {:.2}] nodes {} ({:.1}%), pairs {} ({:.1}%)",
            g.label, g.lo, g.hi, g.node_count, g.node_pct, g.entry_count, g.entry_pct
        );
    }

    let auto = segment_auto(&m)?;
    println!("\nFreedman-Diaconis breakpoints {:?}", auto.breakpoints);
    Ok(())
}
