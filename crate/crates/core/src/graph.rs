//! Threshold graphs over the singularity distance and their observables.
//!
//! Series `i != j` are joined when `rho_ij < xi`. Conventions:
//!
//! * `avg_degree` is the edge density `sum A_ij / (N (N-1))`, in `[0, 1]`.
//! * `path_length` averages geodesics over reachable ordered pairs only; the
//!   share of such pairs is reported as `reachable_pair_fraction`.
//! * `efficiency` averages `1 / d_ij` over all ordered pairs with `1 / inf = 0`.
//! * `clustering` is the mean local coefficient, with `C_i = 0` when `k_i < 2`.
//! * `betweenness[i]` sums, over ordered pairs `(j, k)` with `i` not an
//!   endpoint, the fraction of shortest `j`-`k` paths through `i`. It is not
//!   normalized; `betweenness_avg` is its mean over nodes.

use std::collections::VecDeque;
use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::SingularityMatrix;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdGraph {
    pub xi: f64,
    pub ids: Vec<String>,
    pub adjacency: Vec<Vec<bool>>,
}

impl ThresholdGraph {
    /// Builds a graph from an explicit adjacency matrix, which must be square,
    /// symmetric and free of self loops.
    pub fn from_adjacency(ids: Vec<String>, adjacency: Vec<Vec<bool>>) -> Result<Self> {
        let n = ids.len();
        if adjacency.len() != n || adjacency.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidArgument(format!(
                "adjacency is not {n} x {n}"
            )));
        }
        for (i, row) in adjacency.iter().enumerate() {
            if row[i] {
                return Err(Error::InvalidArgument(format!("self loop at node {i}")));
            }
            for (j, &edge) in row.iter().enumerate().take(i) {
                if edge != adjacency[j][i] {
                    return Err(Error::InvalidArgument(format!(
                        "adjacency is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(ThresholdGraph {
            xi: f64::NAN,
            ids,
            adjacency,
        })
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        self.adjacency
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter_map(|(j, &e)| e.then_some(j))
                    .collect()
            })
            .collect()
    }

    /// Undirected edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| {
                (i + 1..n)
                    .filter(move |&j| self.adjacency[i][j])
                    .map(move |j| (i, j))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// `i,j` rows, one per undirected edge.
    pub fn write_edge_list<W: Write>(&self, writer: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(writer);
        wtr.write_record(["i", "j"])?;
        for (i, j) in self.edges() {
            wtr.write_record([i.to_string(), j.to_string()])?;
        }
        wtr.flush().map_err(|e| Error::io("<writer>", e))?;
        Ok(())
    }

    /// Dense 0/1 matrix with an `id` header row and column.
    pub fn write_adjacency_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(writer);
        let mut header = vec!["id"];
        header.extend(self.ids.iter().map(String::as_str));
        wtr.write_record(&header)?;
        for (id, row) in self.ids.iter().zip(&self.adjacency) {
            let mut record = vec![id.as_str()];
            record.extend(row.iter().map(|&e| if e { "1" } else { "0" }));
            wtr.write_record(&record)?;
        }
        wtr.flush().map_err(|e| Error::io("<writer>", e))?;
        Ok(())
    }
}

/// `A_ij = 1` iff `i != j` and `rho_ij < xi`.
pub fn build_graph(matrix: &SingularityMatrix, xi: f64) -> Result<ThresholdGraph> {
    if xi.is_nan() {
        return Err(Error::InvalidArgument("threshold is NaN".into()));
    }
    let n = matrix.len();
    let adjacency = (0..n)
        .map(|i| (0..n).map(|j| i != j && matrix.rho[i][j] < xi).collect())
        .collect();
    Ok(ThresholdGraph {
        xi,
        ids: matrix.ids.clone(),
        adjacency,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphObservables {
    pub avg_degree: f64,
    pub path_length: f64,
    pub efficiency: f64,
    pub clustering: f64,
    pub betweenness: Vec<f64>,
    pub betweenness_avg: f64,
    pub reachable_pair_fraction: f64,
    pub edge_count: usize,
}

/// Everything one breadth-first pass from `source` contributes.
struct SourcePass {
    dist_sum: f64,
    inv_dist_sum: f64,
    reachable: usize,
    dependency: Vec<f64>,
}

fn source_pass(neighbors: &[Vec<usize>], source: usize) -> SourcePass {
    let n = neighbors.len();
    let mut dist = vec![usize::MAX; n];
    let mut sigma = vec![0.0_f64; n];
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();

    dist[source] = 0;
    sigma[source] = 1.0;
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in &neighbors[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
            if dist[w] == dist[v] + 1 {
                sigma[w] += sigma[v];
                preds[w].push(v);
            }
        }
    }

    let mut dependency = vec![0.0_f64; n];
    for &w in order.iter().rev() {
        for &v in &preds[w] {
            dependency[v] += sigma[v] / sigma[w] * (1.0 + dependency[w]);
        }
    }
    dependency[source] = 0.0;

    let (mut dist_sum, mut inv_dist_sum) = (0.0, 0.0);
    for &v in &order[1..] {
        let d = dist[v] as f64;
        dist_sum += d;
        inv_dist_sum += 1.0 / d;
    }
    SourcePass {
        dist_sum,
        inv_dist_sum,
        reachable: order.len() - 1,
        dependency,
    }
}

fn local_clustering(graph: &ThresholdGraph, neighbors: &[Vec<usize>]) -> Vec<f64> {
    neighbors
        .iter()
        .map(|nb| {
            let k = nb.len();
            if k < 2 {
                return 0.0;
            }
            let links = nb
                .iter()
                .enumerate()
                .map(|(a, &u)| {
                    nb[a + 1..]
                        .iter()
                        .filter(|&&v| graph.has_edge(u, v))
                        .count()
                })
                .sum::<usize>();
            2.0 * links as f64 / (k * (k - 1)) as f64
        })
        .collect()
}

/// Per-source passes may run on any number of threads; their results are
/// reduced in source order so the output does not depend on scheduling.
pub fn observables(graph: &ThresholdGraph) -> Result<GraphObservables> {
    let n = graph.len();
    if n < 2 {
        return Err(Error::InvalidArgument(
            "graph observables need at least two nodes".into(),
        ));
    }
    let neighbors = graph.neighbors();
    let passes: Vec<SourcePass> = (0..n)
        .into_par_iter()
        .map(|s| source_pass(&neighbors, s))
        .collect();

    let mut betweenness = vec![0.0; n];
    let (mut dist_sum, mut inv_dist_sum, mut reachable) = (0.0, 0.0, 0usize);
    for pass in &passes {
        dist_sum += pass.dist_sum;
        inv_dist_sum += pass.inv_dist_sum;
        reachable += pass.reachable;
        for (b, d) in betweenness.iter_mut().zip(&pass.dependency) {
            *b += d;
        }
    }

    let pairs = (n * (n - 1)) as f64;
    let edge_count = neighbors.iter().map(Vec::len).sum::<usize>() / 2;
    let clustering = local_clustering(graph, &neighbors).iter().sum::<f64>() / n as f64;
    Ok(GraphObservables {
        avg_degree: 2.0 * edge_count as f64 / pairs,
        path_length: if reachable == 0 {
            0.0
        } else {
            dist_sum / reachable as f64
        },
        efficiency: inv_dist_sum / pairs,
        clustering,
        betweenness_avg: betweenness.iter().sum::<f64>() / n as f64,
        betweenness,
        reachable_pair_fraction: reachable as f64 / pairs,
        edge_count,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub xi: f64,
    pub observables: GraphObservables,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub points: Vec<SweepPoint>,
    /// Thresholds at interior local maxima of the clustering coefficient.
    pub critical_candidates: Vec<f64>,
    /// Thresholds at interior local maxima of the average betweenness.
    pub betweenness_maxima: Vec<f64>,
    /// Threshold of the global maximum of the average betweenness.
    pub betweenness_peak: Option<f64>,
}

impl SweepResult {
    pub fn xi_grid(&self) -> Vec<f64> {
        self.points.iter().map(|p| p.xi).collect()
    }

    /// `xi,avg_degree,L,E,C,B_avg,reachable_fraction` rows.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(writer);
        wtr.write_record([
            "xi",
            "avg_degree",
            "L",
            "E",
            "C",
            "B_avg",
            "reachable_fraction",
        ])?;
        for p in &self.points {
            let o = &p.observables;
            wtr.write_record(
                [
                    p.xi,
                    o.avg_degree,
                    o.path_length,
                    o.efficiency,
                    o.clustering,
                    o.betweenness_avg,
                    o.reachable_pair_fraction,
                ]
                .map(|v| v.to_string()),
            )?;
        }
        wtr.flush().map_err(|e| Error::io("<writer>", e))?;
        Ok(())
    }
}

/// `points` evenly spaced thresholds from `min rho` to `max rho`.
pub fn default_grid(matrix: &SingularityMatrix, points: usize) -> Vec<f64> {
    let (lo, hi) = matrix.min_max();
    match points {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..points)
            .map(|k| lo + (hi - lo) * k as f64 / (points - 1) as f64)
            .collect(),
    }
}

/// Interior local maxima, treating a run of equal values as one point
/// reported at its first index.
pub fn local_maxima(values: &[f64]) -> Vec<usize> {
    let mut peaks = Vec::new();
    let mut i = 1;
    while i + 1 < values.len() {
        if values[i] > values[i - 1] {
            let mut end = i;
            while end + 1 < values.len() && values[end + 1] == values[i] {
                end += 1;
            }
            if end + 1 < values.len() && values[end + 1] < values[i] {
                peaks.push(i);
            }
            i = end + 1;
        } else {
            i += 1;
        }
    }
    peaks
}

pub fn sweep(matrix: &SingularityMatrix, grid: &[f64]) -> Result<SweepResult> {
    if grid.is_empty() {
        return Err(Error::InvalidArgument("threshold grid is empty".into()));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument(
            "threshold grid must be strictly increasing".into(),
        ));
    }
    let points = grid
        .iter()
        .map(|&xi| {
            let g = build_graph(matrix, xi)?;
            Ok(SweepPoint {
                xi,
                observables: observables(&g)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let clustering: Vec<f64> = points.iter().map(|p| p.observables.clustering).collect();
    let critical_candidates = local_maxima(&clustering)
        .into_iter()
        .map(|i| points[i].xi)
        .collect();
    let betweenness: Vec<f64> = points
        .iter()
        .map(|p| p.observables.betweenness_avg)
        .collect();
    let betweenness_maxima = local_maxima(&betweenness)
        .into_iter()
        .map(|i| points[i].xi)
        .collect();
    let betweenness_peak = points
        .iter()
        .fold(None::<&SweepPoint>, |best, p| match best {
            Some(b) if b.observables.betweenness_avg >= p.observables.betweenness_avg => Some(b),
            _ => Some(p),
        })
        .map(|p| p.xi);

    Ok(SweepResult {
        points,
        critical_candidates,
        betweenness_maxima,
        betweenness_peak,
    })
}
