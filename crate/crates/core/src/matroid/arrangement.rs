use serde::{Deserialize, Serialize};

use super::ground::GroundSet;
use crate::bits::{self, ElemSet};
use crate::error::{Error, Result};

/// Blocks of size at least three, pairwise sharing at most one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetArrangement {
    ground: GroundSet,
    blocks: Vec<ElemSet>,
}

impl SetArrangement {
    pub fn new(ground: GroundSet, blocks: Vec<ElemSet>) -> Result<Self> {
        let all = ground.all();
        for (k, &b) in blocks.iter().enumerate() {
            if !bits::is_subset(b, all) {
                return Err(Error::InvalidArrangement(
                    "block outside the ground set".into(),
                ));
            }
            if bits::size(b) < 3 {
                return Err(Error::InvalidArrangement(format!(
                    "block {} has fewer than three elements",
                    ground.format_set(b)
                )));
            }
            for &other in &blocks[..k] {
                if bits::size(b & other) > 1 {
                    return Err(Error::InvalidArrangement(format!(
                        "blocks {} and {} share more than one element",
                        ground.format_set(other),
                        ground.format_set(b)
                    )));
                }
            }
        }
        Ok(SetArrangement { ground, blocks })
    }

    /// Builds from label lists.
    pub fn from_labels<S: AsRef<str>>(ground: GroundSet, blocks: &[Vec<S>]) -> Result<Self> {
        let blocks = blocks
            .iter()
            .map(|b| ground.subset(b.iter().map(|s| s.as_ref())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ground, blocks)
    }

    pub fn empty(ground: GroundSet) -> Self {
        SetArrangement {
            ground,
            blocks: Vec::new(),
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn blocks(&self) -> &[ElemSet] {
        &self.blocks
    }

    pub fn block_containing_pair(&self, a: usize, b: usize) -> Option<usize> {
        let pair = bits::singleton(a) | bits::singleton(b);
        self.blocks
            .iter()
            .position(|&blk| bits::is_subset(pair, blk))
    }

    /// Union of the chosen blocks.
    pub fn support(&self, chosen: &[usize]) -> ElemSet {
        chosen.iter().fold(0, |acc, &i| acc | self.blocks[i])
    }

    /// The chosen blocks viewed as an arrangement on their support.
    pub fn restricted_to(&self, chosen: &[usize]) -> SetArrangement {
        let support = self.support(chosen);
        let ground = self.ground.restrict(support);
        let positions: Vec<usize> = bits::elements(support).collect();
        let reindex = |b: ElemSet| {
            bits::from_indices(
                bits::elements(b).map(|e| positions.binary_search(&e).expect("inside support")),
            )
        };
        SetArrangement {
            ground,
            blocks: chosen.iter().map(|&i| reindex(self.blocks[i])).collect(),
        }
    }

    /// The 2-partition: the blocks plus every pair lying in no block.
    pub fn to_two_partition(&self) -> TwoPartition {
        let n = self.ground.len();
        let mut blocks = self.blocks.clone();
        for a in 0..n {
            for b in a + 1..n {
                if self.block_containing_pair(a, b).is_none() {
                    blocks.push(bits::singleton(a) | bits::singleton(b));
                }
            }
        }
        TwoPartition {
            ground: self.ground.clone(),
            blocks,
        }
    }

    pub fn block_labels(&self) -> Vec<Vec<String>> {
        self.blocks
            .iter()
            .map(|&b| self.ground.labels_of(b))
            .collect()
    }
}

/// Serialized form: `{"elements": [...], "blocks": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementFile {
    pub elements: Vec<String>,
    pub blocks: Vec<Vec<String>>,
}

impl ArrangementFile {
    pub fn into_arrangement(self) -> Result<SetArrangement> {
        let ground = GroundSet::new(self.elements)?;
        SetArrangement::from_labels(ground, &self.blocks)
    }
}

impl From<&SetArrangement> for ArrangementFile {
    fn from(a: &SetArrangement) -> Self {
        ArrangementFile {
            elements: a.ground.labels().to_vec(),
            blocks: a.block_labels(),
        }
    }
}

impl Serialize for SetArrangement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ArrangementFile::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SetArrangement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        ArrangementFile::deserialize(d)?
            .into_arrangement()
            .map_err(serde::de::Error::custom)
    }
}

/// Blocks covering every 2-subset of the ground set exactly once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoPartition {
    ground: GroundSet,
    blocks: Vec<ElemSet>,
}

impl TwoPartition {
    pub fn new(ground: GroundSet, blocks: Vec<ElemSet>) -> Result<Self> {
        let n = ground.len();
        let mut cover: Vec<Option<usize>> = vec![None; n * n];
        for (k, &b) in blocks.iter().enumerate() {
            if !bits::is_subset(b, ground.all()) {
                return Err(Error::InvalidTwoPartition(
                    "block outside the ground set".into(),
                ));
            }
            if bits::size(b) < 2 {
                return Err(Error::InvalidTwoPartition(format!(
                    "block {} has fewer than two elements",
                    ground.format_set(b)
                )));
            }
            let elems: Vec<usize> = bits::elements(b).collect();
            for (x, &a) in elems.iter().enumerate() {
                for &c in &elems[x + 1..] {
                    if let Some(prev) = cover[a * n + c] {
                        return Err(Error::InvalidTwoPartition(format!(
                            "pair {{{},{}}} is covered by both {} and {}",
                            ground.label(a),
                            ground.label(c),
                            ground.format_set(blocks[prev]),
                            ground.format_set(b)
                        )));
                    }
                    cover[a * n + c] = Some(k);
                }
            }
        }
        for a in 0..n {
            for c in a + 1..n {
                if cover[a * n + c].is_none() {
                    return Err(Error::InvalidTwoPartition(format!(
                        "pair {{{},{}}} is not covered",
                        ground.label(a),
                        ground.label(c)
                    )));
                }
            }
        }
        Ok(TwoPartition { ground, blocks })
    }

    /// Accepts the large blocks only and adds the implied 2-element blocks.
    pub fn completing(ground: GroundSet, blocks: Vec<ElemSet>) -> Result<Self> {
        let n = ground.len();
        let mut all = blocks.clone();
        let mut covered = vec![false; n * n];
        for &b in &blocks {
            let elems: Vec<usize> = bits::elements(b).collect();
            for (x, &a) in elems.iter().enumerate() {
                for &c in &elems[x + 1..] {
                    covered[a * n + c] = true;
                }
            }
        }
        for a in 0..n {
            for c in a + 1..n {
                if !covered[a * n + c] {
                    all.push(bits::singleton(a) | bits::singleton(c));
                }
            }
        }
        Self::new(ground, all)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn blocks(&self) -> &[ElemSet] {
        &self.blocks
    }

    /// Blocks in canonical order, for comparisons.
    pub fn sorted_blocks(&self) -> Vec<ElemSet> {
        let mut b = self.blocks.clone();
        b.sort_by(bits::canonical_cmp);
        b
    }

    pub fn arrangement(&self) -> SetArrangement {
        SetArrangement {
            ground: self.ground.clone(),
            blocks: self
                .blocks
                .iter()
                .copied()
                .filter(|&b| bits::size(b) >= 3)
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground7() -> GroundSet {
        GroundSet::numbered(7).unwrap()
    }

    #[test]
    fn arrangement_validation() {
        let g = ground7();
        assert!(SetArrangement::from_labels(g.clone(), &[vec!["1", "2"]]).is_err());
        assert!(SetArrangement::from_labels(
            g.clone(),
            &[vec!["1", "2", "3"], vec!["2", "3", "4"]]
        )
        .is_err());
        assert!(
            SetArrangement::from_labels(g, &[vec!["1", "2", "3"], vec!["3", "4", "5"]]).is_ok()
        );
    }

    #[test]
    fn two_partition_reports_double_cover() {
        let g = GroundSet::numbered(3).unwrap();
        let blocks = vec![
            g.subset(["1", "2", "3"]).unwrap(),
            g.subset(["1", "2"]).unwrap(),
        ];
        let err = TwoPartition::new(g, blocks).unwrap_err();
        assert!(err.to_string().contains("pair {1,2}"), "{err}");
    }

    #[test]
    fn two_partition_reports_uncovered_pair() {
        let g = GroundSet::numbered(3).unwrap();
        let blocks = vec![g.subset(["1", "2"]).unwrap(), g.subset(["1", "3"]).unwrap()];
        let err = TwoPartition::new(g, blocks).unwrap_err();
        assert!(err.to_string().contains("{2,3} is not covered"), "{err}");
    }

    #[test]
    fn restriction_reindexes() {
        let g = ground7();
        let a = SetArrangement::from_labels(
            g,
            &[
                vec!["1", "2", "3"],
                vec!["3", "6", "7"],
                vec!["1", "5", "6"],
            ],
        )
        .unwrap();
        let r = a.restricted_to(&[1]);
        assert_eq!(r.ground().labels(), &["3", "6", "7"]);
        assert_eq!(r.block_labels(), vec![vec!["3", "6", "7"]]);
    }

    #[test]
    fn serde_round_trip() {
        let a = SetArrangement::from_labels(ground7(), &[vec!["1", "2", "3", "4"]]).unwrap();
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(serde_json::from_str::<SetArrangement>(&text).unwrap(), a);
    }
}
