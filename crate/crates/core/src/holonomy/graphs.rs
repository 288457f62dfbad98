//! Graph arrangements: Kohno series, clique exponents, elimination towers.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::bits::{self, ElemSet};
use crate::error::{Error, Result};
use crate::lie::{series_product, SeriesTruncation};
use crate::matroid::{Graph, GroundSet, SetArrangement};

/// Triangles as increasing vertex triples.
fn triangles(g: &Graph, adj: &[HashSet<usize>]) -> Vec<[usize; 3]> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !adj[a].contains(&b) {
                continue;
            }
            for c in b + 1..n {
                if adj[a].contains(&c) && adj[b].contains(&c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

fn triangle_edges(g: &Graph, t: [usize; 3]) -> ElemSet {
    let [a, b, c] = t;
    [(a, b), (a, c), (b, c)]
        .iter()
        .map(|&(u, v)| bits::singleton(g.edge_between(u, v).expect("triangle edge")))
        .fold(0, |acc, e| acc | e)
}

/// The arrangement on the edge set whose blocks are the triangles.
pub fn graph_arrangement(g: &Graph) -> Result<SetArrangement> {
    let ground = GroundSet::new(g.edge_labels())?;
    let adj = g.adjacency();
    let blocks = triangles(g, &adj)
        .into_iter()
        .map(|t| triangle_edges(g, t))
        .collect();
    SetArrangement::new(ground, blocks)
}

/// Closedness phrased on the graph: every triangle with two edges in the
/// support of the chosen triangles is itself chosen.
pub fn is_closed_graph(g: &Graph, chosen: &[[usize; 3]]) -> bool {
    let adj = g.adjacency();
    let mut chosen_sorted: Vec<[usize; 3]> = chosen
        .iter()
        .map(|t| {
            let mut t = *t;
            t.sort_unstable();
            t
        })
        .collect();
    chosen_sorted.sort_unstable();
    let support = chosen_sorted
        .iter()
        .fold(0, |acc, &t| acc | triangle_edges(g, t));
    triangles(g, &adj).into_iter().all(|t| {
        bits::size(triangle_edges(g, t) & support) < 2 || chosen_sorted.binary_search(&t).is_ok()
    })
}

/// `kappa[s]` = number of complete subgraphs on `s + 1` vertices; trailing
/// zeros dropped.
pub fn clique_counts(g: &Graph) -> Vec<u64> {
    let adj = g.adjacency();
    let n = g.vertex_count();
    let mut kappa = Vec::new();
    // Each clique is grown from its vertices in increasing order.
    fn extend(adj: &[HashSet<usize>], cands: &[usize], size: usize, kappa: &mut Vec<u64>) {
        if kappa.len() < size {
            kappa.resize(size, 0);
        }
        kappa[size - 1] += 1;
        for (k, &v) in cands.iter().enumerate() {
            let next: Vec<usize> = cands[k + 1..]
                .iter()
                .copied()
                .filter(|u| adj[v].contains(u))
                .collect();
            extend(adj, &next, size + 1, kappa);
        }
    }
    for v in 0..n {
        let cands: Vec<usize> = (v + 1..n).filter(|u| adj[v].contains(u)).collect();
        extend(&adj, &cands, 1, &mut kappa);
    }
    kappa
}

fn binomial(n: u64, k: u64) -> i128 {
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// `(j, e_j)` for `1 <= j <= omega - 1`, with
/// `e_j = sum_{s >= j} (-1)^(s-j) C(s, j) kappa_s`.
pub fn lfs_exponents(g: &Graph) -> Vec<(usize, i64)> {
    let kappa = clique_counts(g);
    (1..kappa.len())
        .map(|j| {
            let e: i128 = (j..kappa.len())
                .map(|s| {
                    let sign = if (s - j) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(s as u64, j as u64) * kappa[s] as i128
                })
                .sum();
            (j, e as i64)
        })
        .collect()
}

/// `Π_j (1 - j t)^(-e_j)` truncated at `max_degree`.
pub fn lfs_series(g: &Graph, max_degree: usize) -> SeriesTruncation {
    let factors: Vec<(i128, i128)> = lfs_exponents(g)
        .into_iter()
        .map(|(j, e)| (j as i128, e as i128))
        .collect();
    series_product(&factors, max_degree)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LfsReport {
    /// `clique_counts[s]` counts complete subgraphs on `s + 1` vertices.
    pub clique_counts: Vec<u64>,
    pub exponents: Vec<(usize, i64)>,
    pub series: SeriesTruncation,
}

pub fn lfs_report(g: &Graph, max_degree: usize) -> LfsReport {
    LfsReport {
        clique_counts: clique_counts(g),
        exponents: lfs_exponents(g),
        series: lfs_series(g, max_degree),
    }
}

/// `Π_{i=1}^{n-1} 1/(1 - i t)` truncated at `max_degree`.
pub fn kohno_series(n: usize, max_degree: usize) -> SeriesTruncation {
    let factors: Vec<(i128, i128)> = (1..n).map(|i| (i as i128, 1)).collect();
    series_product(&factors, max_degree)
}

pub fn has_k4(g: &Graph) -> bool {
    clique_counts(g).get(3).is_some_and(|&k| k > 0)
}

/// Ranks of free Lie algebras, outermost first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tower {
    pub ranks: Vec<u64>,
}

/// Removes, at each step, the first vertex (declaration order) whose
/// remaining neighbours form a clique, recording its remaining degree.
/// Degree-0 removals are not recorded.
pub fn elimination_tower(g: &Graph) -> Result<Tower> {
    let adj = g.adjacency();
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut ranks = Vec::new();
    for _ in 0..n {
        let pick = (0..n).find(|&v| {
            if !alive[v] {
                return false;
            }
            let nb: Vec<usize> = adj[v].iter().copied().filter(|&u| alive[u]).collect();
            g.is_clique(&adj, &nb)
        });
        let Some(v) = pick else {
            let left: Vec<&str> = (0..n)
                .filter(|&v| alive[v])
                .map(|v| g.vertices()[v].as_str())
                .collect();
            return Err(Error::NotChordal(format!("{{{}}}", left.join(","))));
        };
        let degree = adj[v].iter().filter(|&&u| alive[u]).count();
        if degree > 0 {
            ranks.push(degree as u64);
        }
        alive[v] = false;
    }
    Ok(Tower { ranks })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentScanEntry {
    pub name: String,
    pub exponents: Vec<(usize, i64)>,
    /// Exponents that are zero or negative.
    pub flagged: Vec<(usize, i64)>,
}

pub fn exponent_scan(graphs: &[(String, Graph)]) -> Vec<ExponentScanEntry> {
    graphs
        .iter()
        .map(|(name, g)| {
            let exponents = lfs_exponents(g);
            let flagged = exponents.iter().copied().filter(|&(_, e)| e <= 0).collect();
            ExponentScanEntry {
                name: name.clone(),
                exponents,
                flagged,
            }
        })
        .collect()
}
