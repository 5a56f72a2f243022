//! Threshold networks over a range of distances: degree, path length,
//! efficiency, clustering and betweenness as functions of the threshold.

use wbmfdfa::graph::{build_graph, default_grid, observables, sweep};
use wbmfdfa::metric::SingularityMatrix;
use wbmfdfa::synth::gaussian_walk;

fn main() -> wbmfdfa::Result<()> {
    let gamma: Vec<f64> = gaussian_walk(64, 5)?
        .iter()
        .map(|v| 1.0 + 0.5 * v.abs())
        .collect();
    let ids = (0..gamma.len()).map(|i| format!("N{i:02}")).collect();
    let m = SingularityMatrix::from_gammas(ids, gamma)?;

    let result = sweep(&m, &default_grid(&m, 25))?;
    println!(
        "{:>7} {:>6} {:>7} {:>6} {:>6} {:>8}",
        "xi", "<k>", "L", "E", "C", "B_avg"
    );
    for p in &result.points {
        let o = &p.observables;
        println!(
            "{:>7.4} {:>6.3} {:>7.3} {:>6.3} {:>6.3} {:>8.2}",
            p.xi, o.avg_degree, o.path_length, o.efficiency, o.clustering, o.betweenness_avg
        );
    }
    println!("clustering peaks at {:?}", result.critical_candidates);
    println!("betweenness peak at {:?}", result.betweenness_peak);

    if let Some(xi) = result.betweenness_peak {
        let g = build_graph(&m, xi)?;
        let obs = observables(&g)?;
        let (hub, b) = obs
            .betweenness
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .unwrap();
        println!(
            "{} edges at xi = {xi:.4}; most central node {} (B = {b:.1})",
            g.edge_count(),
            g.ids[hub]
        );
    }
    Ok(())
}
