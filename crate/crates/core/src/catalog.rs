//! Named arrangements and graphs.

use crate::error::{Error, Result};
use crate::holonomy::graph_arrangement;
use crate::matroid::{Graph, GroundSet, SetArrangement, TwoPartition};

fn numbered_blocks(n: usize, blocks: &[&str]) -> SetArrangement {
    let ground = GroundSet::numbered(n).expect("small ground set");
    let rows: Vec<Vec<String>> = blocks
        .iter()
        .map(|b| b.chars().map(|c| c.to_string()).collect())
        .collect();
    SetArrangement::from_labels(ground, &rows).expect("catalog arrangement is valid")
}

/// Seven lines of the Fano plane on `1..7`.
pub fn fano() -> SetArrangement {
    numbered_blocks(7, &["123", "145", "167", "246", "257", "347", "356"])
}

/// The Fano lines with `(123)` deleted.
pub fn nonfano() -> SetArrangement {
    numbered_blocks(7, &["145", "167", "246", "257", "347", "356"])
}

/// Seven triples on `1..8`.
pub fn roos() -> SetArrangement {
    numbered_blocks(8, &["124", "135", "236", "167", "258", "457", "468"])
}

/// Blocks `{1,2,3,4}, {1,5,6}, {2,5,7}, {3,6,7}` on `1..7`.
pub fn example7() -> SetArrangement {
    numbered_blocks(7, &["1234", "156", "257", "367"])
}

/// The 2-partition of [`example7`], with its 2-element blocks.
pub fn example7_two_partition() -> TwoPartition {
    example7().to_two_partition()
}

pub fn bowtie() -> Graph {
    Graph::from_edges(&[
        ("a", "b"),
        ("b", "c"),
        ("a", "c"),
        ("c", "d"),
        ("d", "e"),
        ("c", "e"),
    ])
    .expect("simple")
}

/// Hub `h` joined to the 4-cycle `1 2 3 4`.
pub fn wheel4() -> Graph {
    Graph::from_edges(&[
        ("1", "2"),
        ("2", "3"),
        ("3", "4"),
        ("4", "1"),
        ("h", "1"),
        ("h", "2"),
        ("h", "3"),
        ("h", "4"),
    ])
    .expect("simple")
}

/// `K_5` minus the edge `4-5`.
pub fn k5_minus_edge() -> Graph {
    let k5 = Graph::complete(5);
    let edges = k5
        .edges()
        .iter()
        .filter(|e| !(e.u == 3 && e.v == 4))
        .map(|e| {
            (
                k5.vertices()[e.u].clone(),
                k5.vertices()[e.v].clone(),
                e.label.clone(),
            )
        })
        .collect();
    Graph::new(k5.vertices().to_vec(), edges, true).expect("simple")
}

pub fn cycle(n: usize) -> Graph {
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let pairs: Vec<(&str, &str)> = (0..n)
        .map(|i| (names[i].as_str(), names[(i + 1) % n].as_str()))
        .collect();
    Graph::from_edges(&pairs).expect("simple for n >= 3")
}

pub fn path(n: usize) -> Graph {
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    if n == 1 {
        return Graph::new(names, Vec::new(), true).expect("one vertex");
    }
    let pairs: Vec<(&str, &str)> = (0..n - 1)
        .map(|i| (names[i].as_str(), names[i + 1].as_str()))
        .collect();
    Graph::from_edges(&pairs).expect("simple")
}

/// The connected simple graphs on at most four vertices, up to isomorphism.
pub fn small_connected_graphs() -> Vec<(String, Graph)> {
    let g = |e: &[(&str, &str)]| Graph::from_edges(e).expect("simple");
    vec![
        ("K1".into(), path(1)),
        ("K2".into(), Graph::complete(2)),
        ("P3".into(), path(3)),
        ("K3".into(), Graph::complete(3)),
        ("P4".into(), path(4)),
        ("star".into(), g(&[("c", "1"), ("c", "2"), ("c", "3")])),
        ("C4".into(), cycle(4)),
        (
            "paw".into(),
            g(&[("1", "2"), ("2", "3"), ("1", "3"), ("3", "4")]),
        ),
        (
            "diamond".into(),
            g(&[("1", "2"), ("2", "3"), ("1", "3"), ("2", "4"), ("3", "4")]),
        ),
        ("K4".into(), Graph::complete(4)),
    ]
}

/// A catalog entry: an arrangement, or a graph standing for its triangle
/// arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Entry {
    Arrangement(SetArrangement),
    Graph(Graph),
}

impl Entry {
    pub fn arrangement(&self) -> Result<SetArrangement> {
        match self {
            Entry::Arrangement(a) => Ok(a.clone()),
            Entry::Graph(g) => graph_arrangement(g),
        }
    }

    pub fn graph(&self) -> Option<&Graph> {
        match self {
            Entry::Graph(g) => Some(g),
            Entry::Arrangement(_) => None,
        }
    }
}

fn suffix_number(name: &str, prefix: &str, min: usize) -> Option<usize> {
    let n: usize = name.strip_prefix(prefix)?.parse().ok()?;
    (min..=11).contains(&n).then_some(n)
}

/// Resolves a catalog name (case-insensitive).
pub fn lookup(name: &str) -> Result<Entry> {
    let key = name.to_ascii_lowercase();
    let entry = match key.as_str() {
        "fano" => Entry::Arrangement(fano()),
        "nonfano" | "non-fano" => Entry::Arrangement(nonfano()),
        "roos" => Entry::Arrangement(roos()),
        "example7" => Entry::Arrangement(example7()),
        "bowtie" => Entry::Graph(bowtie()),
        "wheel4" | "w4" => Entry::Graph(wheel4()),
        "k5-e" => Entry::Graph(k5_minus_edge()),
        k => {
            if let Some(n) = suffix_number(k, "k", 1) {
                Entry::Graph(Graph::complete(n))
            } else if let Some(n) = suffix_number(k, "c", 3) {
                Entry::Graph(cycle(n))
            } else if let Some(n) = suffix_number(k, "p", 1) {
                Entry::Graph(path(n))
            } else {
                return Err(Error::UnknownCatalog(name.to_string()));
            }
        }
    };
    Ok(entry)
}

/// Names and one-line descriptions, in display order.
pub fn list() -> Vec<(&'static str, &'static str)> {
    vec![
        (
            "fano",
            "Fano plane: (123)(145)(167)(246)(257)(347)(356) on 1..7",
        ),
        ("nonfano", "Fano plane with (123) deleted"),
        ("roos", "(124)(135)(236)(167)(258)(457)(468) on 1..8"),
        (
            "example7",
            "blocks {1,2,3,4},{1,5,6},{2,5,7},{3,6,7} on 1..7",
        ),
        (
            "k<n>",
            "complete graph K_n, 1 <= n <= 11 (triangle arrangement)",
        ),
        ("c<n>", "cycle C_n, 3 <= n <= 11"),
        ("p<n>", "path on n vertices, 1 <= n <= 11"),
        ("bowtie", "two triangles sharing a vertex"),
        ("wheel4", "wheel W4: hub joined to a 4-cycle (alias w4)"),
        ("k5-e", "K5 minus one edge"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arrangements() {
        assert_eq!(fano().blocks().len(), 7);
        assert_eq!(fano().ground().len(), 7);
        assert_eq!(nonfano().blocks().len(), 6);
        assert_eq!(roos().blocks().len(), 7);
        assert_eq!(roos().ground().len(), 8);
        assert_eq!(example7().blocks().len(), 4);
        assert_eq!(example7_two_partition().blocks().len(), 10);
    }

    #[test]
    fn lookups() {
        assert!(matches!(lookup("Fano"), Ok(Entry::Arrangement(_))));
        let k5 = lookup("k5").unwrap();
        assert_eq!(k5.arrangement().unwrap().blocks().len(), 10);
        assert_eq!(lookup("w4").unwrap().graph().unwrap().edges().len(), 8);
        assert_eq!(lookup("k5-e").unwrap().graph().unwrap().edges().len(), 9);
        assert!(matches!(lookup("k99"), Err(Error::UnknownCatalog(_))));
        assert!(matches!(lookup("nothing"), Err(Error::UnknownCatalog(_))));
    }

    #[test]
    fn small_graphs_are_connected_and_distinct() {
        let gs = small_connected_graphs();
        assert_eq!(gs.len(), 10);
        let shapes: std::collections::HashSet<(usize, usize)> = gs
            .iter()
            .map(|(_, g)| (g.vertex_count(), g.edges().len()))
            .collect();
        assert_eq!(shapes.len(), 8);
    }
}
