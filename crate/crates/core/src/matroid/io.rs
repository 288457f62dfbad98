//! The matroid input file: `{"type": ..., "elements": [...], <payload>}`.

use serde::{Deserialize, Serialize};

use super::{Encoding, Graph, GroundSet, Matroid, TwoPartition};
use crate::bits::{self, ElemSet};
use crate::error::{Error, Result};

/// An edge row: `[u, v]` or `[u, v, label]`.
pub type EdgeRow = Vec<String>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum MatroidFile {
    Explicit {
        elements: Vec<String>,
        independent: Vec<Vec<String>>,
    },
    Graphic {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        elements: Option<Vec<String>>,
        edges: Vec<EdgeRow>,
    },
    DependentTriples {
        elements: Vec<String>,
        triples: Vec<Vec<String>>,
    },
    /// Blocks of the 2-partition; 2-element blocks may be omitted.
    TwoPartition {
        elements: Vec<String>,
        blocks: Vec<Vec<String>>,
    },
}

fn subsets_of(ground: &GroundSet, rows: &[Vec<String>]) -> Result<Vec<ElemSet>> {
    rows.iter().map(|r| ground.subset(r)).collect()
}

impl MatroidFile {
    /// Builds the matroid. `validate` only affects graphic input; the other
    /// encodings are always checked.
    pub fn into_matroid(self, validate: bool) -> Result<Matroid> {
        match self {
            MatroidFile::Explicit {
                elements,
                independent,
            } => {
                let ground = GroundSet::new(elements)?;
                let family = subsets_of(&ground, &independent)?;
                Matroid::explicit(ground, family)
            }
            MatroidFile::Graphic { elements, edges } => {
                let mut vertices: Vec<String> = Vec::new();
                let mut rows = Vec::with_capacity(edges.len());
                for row in edges {
                    let (u, v, label) = match row.as_slice() {
                        [u, v] => (u.clone(), v.clone(), format!("{u}-{v}")),
                        [u, v, l] => (u.clone(), v.clone(), l.clone()),
                        _ => {
                            return Err(Error::Parse(format!(
                                "edge rows are [u, v] or [u, v, label], got {row:?}"
                            )))
                        }
                    };
                    for x in [&u, &v] {
                        if !vertices.contains(x) {
                            vertices.push(x.clone());
                        }
                    }
                    rows.push((u, v, label));
                }
                if let Some(elements) = elements {
                    let labels: Vec<&String> = rows.iter().map(|r| &r.2).collect();
                    if elements.len() != labels.len()
                        || elements.iter().zip(&labels).any(|(a, b)| a != *b)
                    {
                        return Err(Error::Parse(
                            "graphic `elements` must list the edge labels in edge order".into(),
                        ));
                    }
                }
                Matroid::graphic(Graph::new(vertices, rows, validate)?)
            }
            MatroidFile::DependentTriples { elements, triples } => {
                let ground = GroundSet::new(elements)?;
                let triples = subsets_of(&ground, &triples)?;
                Matroid::dependent_triples(ground, triples)
            }
            MatroidFile::TwoPartition { elements, blocks } => {
                let ground = GroundSet::new(elements)?;
                let blocks = subsets_of(&ground, &blocks)?;
                Ok(Matroid::from_two_partition(&TwoPartition::completing(
                    ground, blocks,
                )?))
            }
        }
    }

    pub fn from_matroid(m: &Matroid) -> Self {
        let g = m.ground();
        let elements = g.labels().to_vec();
        let rows = |sets: &[ElemSet]| sets.iter().map(|&s| g.labels_of(s)).collect::<Vec<_>>();
        match m.encoding() {
            Encoding::Explicit(family) => {
                let mut fam = family.clone();
                fam.sort_by(bits::canonical_cmp);
                MatroidFile::Explicit {
                    elements,
                    independent: rows(&fam),
                }
            }
            Encoding::Graphic(graph) => MatroidFile::Graphic {
                elements: None,
                edges: graph
                    .edges()
                    .iter()
                    .map(|e| {
                        vec![
                            graph.vertices()[e.u].clone(),
                            graph.vertices()[e.v].clone(),
                            e.label.clone(),
                        ]
                    })
                    .collect(),
            },
            Encoding::DependentTriples { triples, .. } => MatroidFile::DependentTriples {
                elements,
                triples: rows(triples),
            },
            Encoding::TwoPartitionRank3(a) => MatroidFile::TwoPartition {
                elements,
                blocks: rows(a.blocks()),
            },
        }
    }
}

/// Parses a matroid file from JSON text.
pub fn parse_matroid(text: &str, validate: bool) -> Result<Matroid> {
    let file: MatroidFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.into_matroid(validate)
}

pub fn to_json(m: &Matroid) -> String {
    serde_json::to_string_pretty(&MatroidFile::from_matroid(m)).expect("matroid file serializes")
}
