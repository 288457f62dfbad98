use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::tensor::{encode_word, TensorVector};
use crate::error::{Error, Result};

/// `coeff · [x_i, x_j]` with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketTerm {
    pub i: usize,
    pub j: usize,
    pub coeff: i64,
}

/// A degree-2 relation: an integer combination of ordered brackets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub terms: Vec<BracketTerm>,
}

impl Relation {
    /// Normalizes arbitrary `(i, j, c)` triples: `[x_j, x_i] = -[x_i, x_j]`,
    /// `[x_i, x_i] = 0`, repeated brackets summed. Returns `None` if nothing
    /// survives.
    pub fn normalized<I>(terms: I) -> Option<Relation>
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        let mut acc: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for (i, j, c) in terms {
            if i == j || c == 0 {
                continue;
            }
            let (key, c) = if i < j { ((i, j), c) } else { ((j, i), -c) };
            *acc.entry(key).or_insert(0) += c;
        }
        let terms: Vec<BracketTerm> = acc
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|((i, j), coeff)| BracketTerm { i, j, coeff })
            .collect();
        (!terms.is_empty()).then_some(Relation { terms })
    }

    pub fn expand(&self, alphabet: usize) -> Result<TensorVector> {
        let mut out = Vec::with_capacity(2 * self.terms.len());
        for t in &self.terms {
            out.push((encode_word(alphabet, &[t.i, t.j]), t.coeff));
            out.push((encode_word(alphabet, &[t.j, t.i]), -t.coeff));
        }
        TensorVector::from_terms(alphabet, 2, out)
    }
}

/// A Lie algebra presented by degree-1 generators and degree-2 relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiePresentation {
    generator_labels: Vec<String>,
    relations: Vec<Relation>,
}

impl LiePresentation {
    /// Relations that vanish after normalization are dropped.
    pub fn new(generator_labels: Vec<String>, relations: Vec<Relation>) -> Result<Self> {
        let n = generator_labels.len();
        let mut kept = Vec::with_capacity(relations.len());
        for r in relations {
            if r.terms.iter().any(|t| t.i >= n || t.j >= n) {
                return Err(Error::InvalidExpression(format!(
                    "relation refers to a generator outside 0..{n}"
                )));
            }
            if let Some(r) = Relation::normalized(r.terms.iter().map(|t| (t.i, t.j, t.coeff))) {
                kept.push(r);
            }
        }
        Ok(LiePresentation {
            generator_labels,
            relations: kept,
        })
    }

    /// Free Lie algebra on `n` generators labelled `x0, x1, ...`.
    pub fn free(n: usize) -> Self {
        LiePresentation {
            generator_labels: (0..n).map(|i| format!("x{i}")).collect(),
            relations: Vec::new(),
        }
    }

    pub fn generator_count(&self) -> usize {
        self.generator_labels.len()
    }

    pub fn generator_labels(&self) -> &[String] {
        &self.generator_labels
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn expanded_relations(&self) -> Result<Vec<TensorVector>> {
        let n = self.generator_count();
        self.relations.iter().map(|r| r.expand(n)).collect()
    }

    /// Renders a relation as `[a,b] - [a,c]`.
    pub fn format_relation(&self, r: &Relation) -> String {
        let mut out = String::new();
        for (k, t) in r.terms.iter().enumerate() {
            let mag = t.coeff.unsigned_abs();
            match (k, t.coeff < 0) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if mag != 1 {
                out.push_str(&mag.to_string());
            }
            out.push_str(&format!(
                "[{},{}]",
                self.generator_labels[t.i], self.generator_labels[t.j]
            ));
        }
        out
    }
}
