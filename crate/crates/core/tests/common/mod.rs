//! Independent reference implementations used by the integration and
//! acceptance tests. None of these call into the library's algorithms.

#![allow(dead_code, clippy::needless_range_loop)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Single linkage by repeated global search: at every step merge the two
/// clusters holding the smallest `(rho, i, j)` cross pair. Returns merge heights.
pub fn naive_single_linkage(rho: &[Vec<f64>]) -> Vec<f64> {
    let n = rho.len();
    let mut cluster: Vec<usize> = (0..n).collect();
    let mut heights = Vec::with_capacity(n.saturating_sub(1));
    for _ in 1..n {
        let mut best: Option<(f64, usize, usize)> = None;
        for i in 0..n {
            for j in i + 1..n {
                if cluster[i] == cluster[j] {
                    continue;
                }
                let cand = (rho[i][j], i, j);
                let better = match best {
                    None => true,
                    Some(b) => cand.0 < b.0 || (cand.0 == b.0 && (cand.1, cand.2) < (b.1, b.2)),
                };
                if better {
                    best = Some(cand);
                }
            }
        }
        let (h, i, j) = best.unwrap();
        let (keep, drop) = (cluster[i], cluster[j]);
        for c in cluster.iter_mut() {
            if *c == drop {
                *c = keep;
            }
        }
        heights.push(h);
    }
    heights
}

/// Minimax path distances (the largest edge on the best path), by a
/// Floyd-Warshall sweep over the complete graph.
pub fn minimax_distances(rho: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = rho.len();
    let mut d = rho.to_vec();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k].max(d[k][j]);
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0.0;
    }
    d
}

/// Observables of a small graph by brute force.
#[derive(Debug, Clone)]
pub struct BruteForce {
    pub avg_degree: f64,
    pub path_length: f64,
    pub efficiency: f64,
    pub clustering: f64,
    pub betweenness: Vec<f64>,
    pub reachable_fraction: f64,
}

fn all_simple_paths(adj: &[Vec<bool>], s: usize, t: usize) -> Vec<Vec<usize>> {
    fn walk(
        adj: &[Vec<bool>],
        t: usize,
        path: &mut Vec<usize>,
        seen: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let u = *path.last().unwrap();
        if u == t {
            out.push(path.clone());
            return;
        }
        for v in 0..adj.len() {
            if adj[u][v] && !seen[v] {
                seen[v] = true;
                path.push(v);
                walk(adj, t, path, seen, out);
                path.pop();
                seen[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut seen = vec![false; adj.len()];
    seen[s] = true;
    walk(adj, t, &mut vec![s], &mut seen, &mut out);
    out
}

/// Enumerates every simple path between every ordered pair; shortest paths
/// are the enumerated ones of minimal length.
pub fn brute_force(adj: &[Vec<bool>]) -> BruteForce {
    let n = adj.len();
    let pairs = (n * (n - 1)) as f64;
    let mut betweenness = vec![0.0; n];
    let (mut dist_sum, mut inv_sum, mut reachable) = (0.0, 0.0, 0usize);
    for s in 0..n {
        for t in 0..n {
            if s == t {
                continue;
            }
            let paths = all_simple_paths(adj, s, t);
            let Some(shortest) = paths.iter().map(Vec::len).min() else {
                continue;
            };
            let geodesics: Vec<&Vec<usize>> =
                paths.iter().filter(|p| p.len() == shortest).collect();
            let d = (shortest - 1) as f64;
            dist_sum += d;
            inv_sum += 1.0 / d;
            reachable += 1;
            for (v, b) in betweenness.iter_mut().enumerate() {
                if v == s || v == t {
                    continue;
                }
                let through = geodesics.iter().filter(|p| p.contains(&v)).count();
                *b += through as f64 / geodesics.len() as f64;
            }
        }
    }
    let mut edges = 0usize;
    let mut clustering = 0.0;
    for i in 0..n {
        let nb: Vec<usize> = (0..n).filter(|&j| adj[i][j]).collect();
        edges += nb.len();
        let k = nb.len();
        if k >= 2 {
            let mut links = 0;
            for a in &nb {
                for b in &nb {
                    if a < b && adj[*a][*b] {
                        links += 1;
                    }
                }
            }
            clustering += links as f64 / (k * (k - 1) / 2) as f64;
        }
    }
    BruteForce {
        avg_degree: edges as f64 / pairs,
        path_length: if reachable == 0 {
            0.0
        } else {
            dist_sum / reachable as f64
        },
        efficiency: inv_sum / pairs,
        clustering: clustering / n as f64,
        betweenness,
        reachable_fraction: reachable as f64 / pairs,
    }
}

pub fn random_adjacency(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let e = rng.random::<f64>() < p;
            adj[i][j] = e;
            adj[j][i] = e;
        }
    }
    adj
}

/// Random symmetric zero-diagonal matrix; with `ties`, entries come from a
/// handful of integers so equal distances are common.
pub fn random_distances(rng: &mut ChaCha8Rng, n: usize, ties: bool) -> Vec<Vec<f64>> {
    let mut rho = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let v = if ties {
                rng.random_range(1..5) as f64
            } else {
                rng.random::<f64>()
            };
            rho[i][j] = v;
            rho[j][i] = v;
        }
    }
    rho
}

/// First-order DFA on non-overlapping windows: least-squares line removed
/// per window, root mean square residual averaged over windows.
pub fn dfa1(increments: &[f64], windows: &[usize]) -> Vec<f64> {
    let mean = increments.iter().sum::<f64>() / increments.len() as f64;
    let mut profile = Vec::with_capacity(increments.len());
    let mut acc = 0.0;
    for x in increments {
        acc += x - mean;
        profile.push(acc);
    }
    windows
        .iter()
        .map(|&w| {
            let segments = profile.len() / w;
            let mut total = 0.0;
            for k in 0..segments {
                let seg = &profile[k * w..(k + 1) * w];
                let xs: Vec<f64> = (0..w).map(|t| t as f64).collect();
                let xm = xs.iter().sum::<f64>() / w as f64;
                let ym = seg.iter().sum::<f64>() / w as f64;
                let sxy: f64 = xs.iter().zip(seg).map(|(x, y)| (x - xm) * (y - ym)).sum();
                let sxx: f64 = xs.iter().map(|x| (x - xm).powi(2)).sum();
                let slope = sxy / sxx;
                let resid: f64 = xs
                    .iter()
                    .zip(seg)
                    .map(|(x, y)| (y - ym - slope * (x - xm)).powi(2))
                    .sum();
                total += resid / w as f64;
            }
            (total / segments as f64).sqrt()
        })
        .collect()
}

/// Slope of `ln y` on `ln x`.
pub fn log_log_slope(x: &[f64], y: &[f64]) -> f64 {
    let lx: Vec<f64> = x.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = y.iter().map(|v| v.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = lx.iter().map(|a| (a - mx).powi(2)).sum();
    sxy / sxx
}
