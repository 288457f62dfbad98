use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub label: String,
}

/// A simple graph with labelled vertices and labelled edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph from vertex labels and `(u, v, label)` edges. With
    /// `validate`, loops, repeated edges and repeated labels are rejected.
    pub fn new<V, S>(
        vertices: V,
        edges: Vec<(String, String, String)>,
        validate: bool,
    ) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex `{v}`")));
            }
        }
        let mut out = Vec::with_capacity(edges.len());
        let mut seen_pairs = HashSet::new();
        let mut seen_labels = HashSet::new();
        for (u, v, label) in edges {
            let ui = *index
                .get(&u)
                .ok_or_else(|| Error::InvalidGraph(format!("unknown vertex `{u}`")))?;
            let vi = *index
                .get(&v)
                .ok_or_else(|| Error::InvalidGraph(format!("unknown vertex `{v}`")))?;
            if validate {
                if ui == vi {
                    return Err(Error::InvalidGraph(format!("loop at `{u}`")));
                }
                if !seen_pairs.insert((ui.min(vi), ui.max(vi))) {
                    return Err(Error::InvalidGraph(format!(
                        "multiple edges between `{u}` and `{v}`"
                    )));
                }
                if !seen_labels.insert(label.clone()) {
                    return Err(Error::InvalidGraph(format!(
                        "duplicate edge label `{label}`"
                    )));
                }
            }
            out.push(Edge {
                u: ui,
                v: vi,
                label,
            });
        }
        Ok(Graph {
            vertices,
            edges: out,
        })
    }

    /// Vertices in order of first appearance; edge labels default to `u-v`.
    pub fn from_edges(edges: &[(&str, &str)]) -> Result<Self> {
        let mut vertices: Vec<String> = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if !vertices.iter().any(|y| y == x) {
                    vertices.push(x.to_string());
                }
            }
        }
        let edges = edges
            .iter()
            .map(|(u, v)| (u.to_string(), v.to_string(), format!("{u}-{v}")))
            .collect();
        Graph::new(vertices, edges, true)
    }

    /// Complete graph on vertices `1..=n`.
    pub fn complete(n: usize) -> Self {
        let mut pairs = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                pairs.push((a.to_string(), b.to_string()));
            }
        }
        let edges = pairs
            .into_iter()
            .map(|(a, b)| {
                let label = format!("{a}-{b}");
                (a, b, label)
            })
            .collect();
        Graph::new((1..=n).map(|i| i.to_string()), edges, true).expect("complete graph is simple")
    }

    /// Parses the edge-list format: one `u v [label]` per line, `#` comments.
    pub fn parse_edge_list(text: &str, validate: bool) -> Result<Self> {
        let mut vertices: Vec<String> = Vec::new();
        let mut known = HashSet::new();
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let (u, v, label) = match fields.as_slice() {
                [u, v] => (*u, *v, format!("{u}-{v}")),
                [u, v, l] => (*u, *v, l.to_string()),
                _ => {
                    return Err(Error::Parse(format!(
                        "line {}: expected `u v [label]`, got `{line}`",
                        lineno + 1
                    )))
                }
            };
            for x in [u, v] {
                if known.insert(x.to_string()) {
                    vertices.push(x.to_string());
                }
            }
            edges.push((u.to_string(), v.to_string(), label));
        }
        Graph::new(vertices, edges, validate)
    }

    pub fn to_edge_list(&self) -> String {
        self.edges
            .iter()
            .map(|e| {
                format!(
                    "{} {} {}\n",
                    self.vertices[e.u], self.vertices[e.v], e.label
                )
            })
            .collect()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_labels(&self) -> Vec<String> {
        self.edges.iter().map(|e| e.label.clone()).collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Adjacency sets indexed by vertex.
    pub fn adjacency(&self) -> Vec<HashSet<usize>> {
        let mut adj = vec![HashSet::new(); self.vertices.len()];
        for e in &self.edges {
            adj[e.u].insert(e.v);
            adj[e.v].insert(e.u);
        }
        adj
    }

    /// Edge index of the edge joining `a` and `b`, if any.
    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        self.edges
            .iter()
            .position(|e| (e.u == a && e.v == b) || (e.u == b && e.v == a))
    }

    /// Induced subgraph on the vertices kept by `keep`, preserving order.
    pub fn induced(&self, keep: &[bool]) -> Graph {
        let mut remap = vec![usize::MAX; self.vertices.len()];
        let mut vertices = Vec::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if keep[i] {
                remap[i] = vertices.len();
                vertices.push(v.clone());
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| keep[e.u] && keep[e.v])
            .map(|e| Edge {
                u: remap[e.u],
                v: remap[e.v],
                label: e.label.clone(),
            })
            .collect();
        Graph { vertices, edges }
    }

    /// Whether the given vertices are pairwise adjacent.
    pub fn is_clique(&self, adj: &[HashSet<usize>], vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(k, &a)| vs[k + 1..].iter().all(|b| adj[a].contains(b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_parsing() {
        let g = Graph::parse_edge_list("# triangle\na b\nb c bc\n\nc a  # closing edge\n", true)
            .unwrap();
        assert_eq!(g.vertices(), &["a", "b", "c"]);
        assert_eq!(g.edge_labels(), vec!["a-b", "bc", "c-a"]);
        let again = Graph::parse_edge_list(&g.to_edge_list(), true).unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn rejects_non_simple() {
        assert!(matches!(
            Graph::parse_edge_list("a a\n", true),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            Graph::parse_edge_list("a b\nb a\n", true),
            Err(Error::InvalidGraph(_))
        ));
        assert!(Graph::parse_edge_list("a b\nb a x\n", false).is_ok());
        assert!(matches!(
            Graph::parse_edge_list("a b c d\n", true),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn complete_graph() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.edges().len(), 6);
        let adj = k4.adjacency();
        assert!(k4.is_clique(&adj, &[0, 1, 2, 3]));
    }
}
