//! Single-linkage agglomerative clustering.
//!
//! The merge sequence is read off a minimum spanning tree built with Prim's
//! algorithm on the dense matrix. Edges are ordered by `(rho, min index, max
//! index)`, a strict total order, so the tree is unique and equal distances are
//! merged lowest index pair first.

use std::cmp::Ordering;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::{group_label, SingularityMatrix};

/// Node `left` and node `right` joined at `height`. Leaves are `0..N`, the
/// cluster formed by merge `k` is node `N + k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Merge {
    pub left: usize,
    pub right: usize,
    pub height: f64,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dendrogram {
    pub leaf_ids: Vec<String>,
    pub merges: Vec<Merge>,
}

#[derive(Debug, Clone, Copy)]
struct Edge {
    w: f64,
    a: usize,
    b: usize,
}

impl Edge {
    fn new(w: f64, i: usize, j: usize) -> Self {
        Edge {
            w,
            a: i.min(j),
            b: i.max(j),
        }
    }

    fn key_cmp(&self, other: &Edge) -> Ordering {
        self.w
            .total_cmp(&other.w)
            .then(self.a.cmp(&other.a))
            .then(self.b.cmp(&other.b))
    }
}

fn prim_mst(rho: &[Vec<f64>]) -> Vec<Edge> {
    let n = rho.len();
    let mut in_tree = vec![false; n];
    in_tree[0] = true;
    let mut best: Vec<Edge> = (0..n).map(|v| Edge::new(rho[0][v], 0, v)).collect();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for _ in 1..n {
        let v = (0..n)
            .filter(|&v| !in_tree[v])
            .min_by(|&x, &y| best[x].key_cmp(&best[y]))
            .expect("a vertex remains outside the tree");
        in_tree[v] = true;
        edges.push(best[v]);
        for u in 0..n {
            if !in_tree[u] {
                let candidate = Edge::new(rho[v][u], v, u);
                if candidate.key_cmp(&best[u]) == Ordering::Less {
                    best[u] = candidate;
                }
            }
        }
    }
    edges
}

pub(crate) struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSet {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns the surviving root.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> usize {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        ra
    }
}

pub fn single_linkage(matrix: &SingularityMatrix) -> Result<Dendrogram> {
    let n = matrix.len();
    if n < 2 {
        return Err(Error::InvalidArgument(
            "clustering needs at least two series".into(),
        ));
    }
    let mut edges = prim_mst(&matrix.rho);
    edges.sort_by(Edge::key_cmp);

    let mut sets = DisjointSet::new(n);
    let mut node_of_root: Vec<usize> = (0..n).collect();
    let mut size_of_root = vec![1usize; n];
    let merges = edges
        .iter()
        .enumerate()
        .map(|(k, e)| {
            let (ra, rb) = (sets.find(e.a), sets.find(e.b));
            let (na, nb) = (node_of_root[ra], node_of_root[rb]);
            let size = size_of_root[ra] + size_of_root[rb];
            let root = sets.union(ra, rb);
            node_of_root[root] = n + k;
            size_of_root[root] = size;
            Merge {
                left: na.min(nb),
                right: na.max(nb),
                height: e.w,
                size,
            }
        })
        .collect();

    Ok(Dendrogram {
        leaf_ids: matrix.ids.clone(),
        merges,
    })
}

/// A flat cluster from [`cut_top_branches`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cluster {
    pub label: String,
    /// Leaf indices in display order.
    pub leaves: Vec<usize>,
    pub leaf_ids: Vec<String>,
    pub percentage: f64,
}

impl Dendrogram {
    pub fn leaf_count(&self) -> usize {
        self.leaf_ids.len()
    }

    pub fn heights(&self) -> Vec<f64> {
        self.merges.iter().map(|m| m.height).collect()
    }

    fn node_size(&self, node: usize) -> usize {
        let n = self.leaf_count();
        if node < n {
            1
        } else {
            self.merges[node - n].size
        }
    }

    fn node_height(&self, node: usize) -> f64 {
        let n = self.leaf_count();
        if node < n {
            0.0
        } else {
            self.merges[node - n].height
        }
    }

    /// Children of an internal node, smaller subtree first.
    fn ordered_children(&self, node: usize) -> [usize; 2] {
        let m = &self.merges[node - self.leaf_count()];
        if self.node_size(m.right) < self.node_size(m.left) {
            [m.right, m.left]
        } else {
            [m.left, m.right]
        }
    }

    fn collect_leaves(&self, node: usize, out: &mut Vec<usize>) {
        let n = self.leaf_count();
        let mut stack = vec![node];
        while let Some(v) = stack.pop() {
            if v < n {
                out.push(v);
            } else {
                let [first, second] = self.ordered_children(v);
                stack.push(second);
                stack.push(first);
            }
        }
    }

    fn root(&self) -> usize {
        self.leaf_count() + self.merges.len() - 1
    }

    /// Display order of the leaves: at each merge the smaller subtree comes first.
    pub fn leaf_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.leaf_count());
        self.collect_leaves(self.root(), &mut out);
        out
    }

    /// Merge height at which each pair of leaves first shares a cluster.
    pub fn cophenetic(&self) -> Vec<Vec<f64>> {
        let n = self.leaf_count();
        let mut out = vec![vec![0.0; n]; n];
        let mut members: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
        for m in &self.merges {
            let left = std::mem::take(&mut members[m.left]);
            let right = std::mem::take(&mut members[m.right]);
            for &a in &left {
                for &b in &right {
                    out[a][b] = m.height;
                    out[b][a] = m.height;
                }
            }
            let mut joined = left;
            joined.extend(right);
            members.push(joined);
        }
        out
    }

    /// Newick text; branch lengths are height differences, leaves sit at zero.
    pub fn to_newick(&self) -> String {
        let mut out = String::new();
        self.write_newick_node(self.root(), &mut out);
        out.push(';');
        out
    }

    fn write_newick_node(&self, node: usize, out: &mut String) {
        let n = self.leaf_count();
        if node < n {
            out.push_str(&newick_name(&self.leaf_ids[node]));
            return;
        }
        let parent_height = self.node_height(node);
        out.push('(');
        for (i, child) in self.ordered_children(node).into_iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            self.write_newick_node(child, out);
            out.push(':');
            out.push_str(&(parent_height - self.node_height(child)).to_string());
        }
        out.push(')');
    }

    /// `cluster_label,leaf_id` rows.
    pub fn write_cut_csv<W: Write>(clusters: &[Cluster], writer: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(writer);
        wtr.write_record(["cluster_label", "leaf_id"])?;
        for c in clusters {
            for id in &c.leaf_ids {
                wtr.write_record([c.label.as_str(), id.as_str()])?;
            }
        }
        wtr.flush().map_err(|e| Error::io("<writer>", e))?;
        Ok(())
    }
}

fn newick_name(id: &str) -> String {
    let plain = !id.is_empty()
        && !id
            .chars()
            .any(|c| c.is_whitespace() || "()[]':;,".contains(c));
    if plain {
        id.to_owned()
    } else {
        format!("'{}'", id.replace('\'', "''"))
    }
}

/// Undoes the `k - 1` highest merges, leaving `k` clusters ordered by the
/// display position of their first leaf.
pub fn cut_top_branches(dend: &Dendrogram, k: usize) -> Result<Vec<Cluster>> {
    let n = dend.leaf_count();
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!(
            "cannot cut {n} leaves into {k} clusters"
        )));
    }
    let mut sets = DisjointSet::new(n);
    for m in &dend.merges[..n - k] {
        let (mut a, mut b) = (Vec::new(), Vec::new());
        dend.collect_leaves(m.left, &mut a);
        dend.collect_leaves(m.right, &mut b);
        sets.union(a[0], b[0]);
    }

    let mut clusters: Vec<Cluster> = Vec::with_capacity(k);
    let mut cluster_of_root = vec![usize::MAX; n];
    for leaf in dend.leaf_order() {
        let root = sets.find(leaf);
        if cluster_of_root[root] == usize::MAX {
            cluster_of_root[root] = clusters.len();
            clusters.push(Cluster {
                label: group_label(clusters.len()),
                leaves: Vec::new(),
                leaf_ids: Vec::new(),
                percentage: 0.0,
            });
        }
        let c = &mut clusters[cluster_of_root[root]];
        c.leaves.push(leaf);
        c.leaf_ids.push(dend.leaf_ids[leaf].clone());
    }
    for c in &mut clusters {
        c.percentage = 100.0 * c.leaves.len() as f64 / n as f64;
    }
    Ok(clusters)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(rho: Vec<Vec<f64>>) -> SingularityMatrix {
        let n = rho.len();
        SingularityMatrix {
            ids: (1..=n).map(|i| i.to_string()).collect(),
            gamma: vec![0.0; n],
            rho,
        }
    }

    fn three_point() -> SingularityMatrix {
        matrix(vec![
            vec![0.0, 1.0, 5.0],
            vec![1.0, 0.0, 3.0],
            vec![5.0, 3.0, 0.0],
        ])
    }

    #[test]
    fn forced_merges() {
        let d = single_linkage(&three_point()).unwrap();
        assert_eq!(
            d.merges,
            vec![
                Merge {
                    left: 0,
                    right: 1,
                    height: 1.0,
                    size: 2
                },
                Merge {
                    left: 2,
                    right: 3,
                    height: 3.0,
                    size: 3
                },
            ]
        );
        assert_eq!(d.to_newick(), "(3:3,(1:1,2:1):2);");
    }

    #[test]
    fn equal_distances_merge_by_lowest_index() {
        let n = 5;
        let rho = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 0.0 } else { 2.0 }).collect())
            .collect();
        let d = single_linkage(&matrix(rho)).unwrap();
        assert!(d.heights().iter().all(|&h| h == 2.0));
        // Leaf 0 absorbs 1, then the pair absorbs 2, and so on.
        assert_eq!((d.merges[0].left, d.merges[0].right), (0, 1));
        assert_eq!((d.merges[1].left, d.merges[1].right), (2, 5));
        assert_eq!((d.merges[3].left, d.merges[3].right), (4, 7));
    }

    #[test]
    fn cuts() {
        let d = single_linkage(&three_point()).unwrap();
        let one = cut_top_branches(&d, 1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].percentage, 100.0);

        let two = cut_top_branches(&d, 2).unwrap();
        assert_eq!(two.len(), 2);
        let pair = two.iter().find(|c| c.leaves.len() == 2).unwrap();
        let single = two.iter().find(|c| c.leaves.len() == 1).unwrap();
        assert_eq!(pair.leaf_ids, vec!["1", "2"]);
        assert_eq!(single.leaf_ids, vec!["3"]);
        assert!((pair.percentage - 200.0 / 3.0).abs() < 1e-9);
        assert!((single.percentage - 100.0 / 3.0).abs() < 1e-9);

        let all = cut_top_branches(&d, 3).unwrap();
        assert!(all.iter().all(|c| c.leaves.len() == 1));

        assert!(cut_top_branches(&d, 0).is_err());
        assert!(cut_top_branches(&d, 4).is_err());
    }

    #[test]
    fn leaf_order_puts_smaller_subtree_first() {
        let d = single_linkage(&three_point()).unwrap();
        assert_eq!(d.leaf_order(), vec![2, 0, 1]);
    }

    #[test]
    fn cophenetic_heights() {
        let c = single_linkage(&three_point()).unwrap().cophenetic();
        assert_eq!(c[0][1], 1.0);
        assert_eq!(c[0][2], 3.0);
        assert_eq!(c[1][2], 3.0);
    }

    #[test]
    fn newick_quotes_awkward_names() {
        assert_eq!(newick_name("ABC"), "ABC");
        assert_eq!(newick_name("a b"), "'a b'");
        assert_eq!(newick_name("o'k"), "'o''k'");
    }

    #[test]
    fn cut_csv() {
        let d = single_linkage(&three_point()).unwrap();
        let clusters = cut_top_branches(&d, 2).unwrap();
        let mut buf = Vec::new();
        Dendrogram::write_cut_csv(&clusters, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "cluster_label,leaf_id\nA,3\nB,1\nB,2\n"
        );
    }
}
