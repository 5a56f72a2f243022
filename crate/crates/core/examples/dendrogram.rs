//! Single-linkage tree over spectrum widths, printed as Newick and cut into
//! flat clusters.

use wbmfdfa::cluster::{cut_top_branches, single_linkage};
use wbmfdfa::metric::SingularityMatrix;

fn main() -> wbmfdfa::Result<()> {
    let gamma = vec![0.31, 0.35, 0.9, 1.02, 1.05, 2.4, 2.45, 4.0];
    let ids = (0..gamma.len()).map(|i| format!("S{i}")).collect();
    let m = SingularityMatrix::from_gammas(ids, gamma)?;
    let dend = single_linkage(&m)?;

    println!("{}", dend.to_newick());
    for (k, merge) in dend.merges.iter().enumerate() {
        println!(
            "merge {k}: {} + {} at {:.3} (size {})",
            merge.left, merge.right, merge.height, merge.size
        );
    }
    for k in [2, 3, 4] {
        let clusters = cut_top_branches(&dend, k)?;
        let parts: Vec<String> = clusters
            .iter()
            .map(|c| format!("{}={:?} ({:.1}%)", c.label, c.leaf_ids, c.percentage))
            .collect();
        println!("k={k}: {}", parts.join("  "));
    }
    Ok(())
}
