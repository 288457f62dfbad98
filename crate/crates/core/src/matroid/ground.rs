use std::collections::HashMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::{self, ElemSet, MAX_ELEMENTS};
use crate::error::{Error, Result};

/// Labelled ground set; iteration order is declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::TooManyElements(labels.len(), MAX_ELEMENTS));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(GroundSet { labels, index })
    }

    /// Ground set `{1, ..., n}`.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn all(&self) -> ElemSet {
        bits::full(self.len())
    }

    pub fn subset<I, S>(&self, labels: I) -> Result<ElemSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut s = 0;
        for l in labels {
            s |= bits::singleton(self.index_of(l.as_ref())?);
        }
        Ok(s)
    }

    pub fn labels_of(&self, s: ElemSet) -> Vec<String> {
        bits::elements(s).map(|i| self.labels[i].clone()).collect()
    }

    /// `{a,b,c}` rendering in declaration order.
    pub fn format_set(&self, s: ElemSet) -> String {
        format!("{{{}}}", self.labels_of(s).join(","))
    }

    /// Restriction to the elements of `s`, keeping declaration order.
    pub fn restrict(&self, s: ElemSet) -> GroundSet {
        GroundSet::new(self.labels_of(s)).expect("subset of a valid ground set")
    }
}

impl Serialize for GroundSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GroundSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let labels = Vec::<String>::deserialize(deserializer)?;
        GroundSet::new(labels).map_err(serde::de::Error::custom)
    }
}
