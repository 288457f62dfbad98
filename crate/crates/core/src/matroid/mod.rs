//! Simple matroids in several encodings, with rank, closure and flats.

mod arrangement;
mod graph;
mod ground;
pub mod io;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

pub use arrangement::{ArrangementFile, SetArrangement, TwoPartition};
pub use graph::{Edge, Graph};
pub use ground::GroundSet;

use crate::bits::{self, ElemSet};
use crate::error::{Error, Result};

/// Explicit encodings store every independent set; larger inputs are refused.
pub const MAX_EXPLICIT_ELEMENTS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Encoding {
    /// The full independent family.
    Explicit(Vec<ElemSet>),
    /// Independence is acyclicity; the ground set is the edge set.
    Graphic(Graph),
    /// Rank at most 3, dependent 3-sets listed. The blocks they induce are
    /// kept alongside.
    DependentTriples {
        triples: Vec<ElemSet>,
        blocks: SetArrangement,
    },
    /// Rank at most 3, dependent 3-sets are the 3-subsets of the blocks.
    TwoPartitionRank3(SetArrangement),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matroid {
    ground: GroundSet,
    encoding: Encoding,
    /// Only used by the explicit encoding.
    family: HashSet<ElemSet>,
}

/// Outcome of checking the two matroid axioms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AxiomReport {
    Ok,
    /// `set` is in the family but its subset `missing` is not.
    DownwardClosure {
        set: Vec<String>,
        missing: Vec<String>,
    },
    /// `|smaller| < |larger|` but no element of `larger` extends `smaller`.
    Exchange {
        smaller: Vec<String>,
        larger: Vec<String>,
    },
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, AxiomReport::Ok)
    }
}

/// Checks subset closure and the exchange property for a family of
/// subsets. Duplicate members are an input error.
pub fn validate_matroid(family: &[ElemSet], ground: &GroundSet) -> Result<AxiomReport> {
    let all = ground.all();
    let mut members = HashSet::with_capacity(family.len());
    for &s in family {
        if !bits::is_subset(s, all) {
            return Err(Error::NotAMatroid(
                "family member outside the ground set".into(),
            ));
        }
        if !members.insert(s) {
            return Err(Error::DuplicateSubset(ground.format_set(s)));
        }
    }
    for &a in family {
        for x in bits::elements(a) {
            let sub = a & !bits::singleton(x);
            if !members.contains(&sub) {
                return Ok(AxiomReport::DownwardClosure {
                    set: ground.labels_of(a),
                    missing: ground.labels_of(sub),
                });
            }
        }
    }
    for &a in family {
        for &b in family {
            if bits::size(a) >= bits::size(b) {
                continue;
            }
            let extends =
                bits::elements(b & !a).any(|x| members.contains(&(a | bits::singleton(x))));
            if !extends {
                return Ok(AxiomReport::Exchange {
                    smaller: ground.labels_of(a),
                    larger: ground.labels_of(b),
                });
            }
        }
    }
    Ok(AxiomReport::Ok)
}

impl Matroid {
    /// Explicit encoding; validates both axioms and simplicity.
    pub fn explicit(ground: GroundSet, family: Vec<ElemSet>) -> Result<Self> {
        if ground.len() > MAX_EXPLICIT_ELEMENTS {
            return Err(Error::TooManyElements(ground.len(), MAX_EXPLICIT_ELEMENTS));
        }
        match validate_matroid(&family, &ground)? {
            AxiomReport::Ok => {}
            AxiomReport::DownwardClosure { set, missing } => {
                return Err(Error::NotAMatroid(format!(
                    "subset closure fails: {{{}}} is independent but {{{}}} is not",
                    set.join(","),
                    missing.join(",")
                )))
            }
            AxiomReport::Exchange { smaller, larger } => {
                return Err(Error::NotAMatroid(format!(
                    "exchange fails for {{{}}} and {{{}}}",
                    smaller.join(","),
                    larger.join(",")
                )))
            }
        }
        let members: HashSet<ElemSet> = family.iter().copied().collect();
        let n = ground.len();
        for a in 0..n {
            for b in a..n {
                let s = bits::singleton(a) | bits::singleton(b);
                if !members.contains(&s) {
                    return Err(Error::NotSimple(format!(
                        "{} is dependent",
                        ground.format_set(s)
                    )));
                }
            }
        }
        if !members.contains(&0) {
            return Err(Error::NotAMatroid(
                "the empty set must be independent".into(),
            ));
        }
        Ok(Matroid {
            ground,
            encoding: Encoding::Explicit(family),
            family: members,
        })
    }

    /// Graphic matroid on the edges of `g`. Simplicity of `g` is checked by
    /// [`Graph::new`] when validation is on.
    pub fn graphic(g: Graph) -> Result<Self> {
        let ground = GroundSet::new(g.edge_labels())?;
        Ok(Matroid {
            ground,
            encoding: Encoding::Graphic(g),
            family: HashSet::new(),
        })
    }

    /// Rank-at-most-3 matroid whose dependent 3-sets are exactly `triples`.
    /// Triples sharing two elements force a common 2-flat; every 3-subset of
    /// such a flat must be listed.
    pub fn dependent_triples(ground: GroundSet, triples: Vec<ElemSet>) -> Result<Self> {
        let mut seen = HashSet::new();
        for &t in &triples {
            if bits::size(t) != 3 || !bits::is_subset(t, ground.all()) {
                return Err(Error::InvalidTriples(format!(
                    "{} is not a 3-subset of the ground set",
                    ground.format_set(t)
                )));
            }
            if !seen.insert(t) {
                return Err(Error::InvalidTriples(format!(
                    "{} listed twice",
                    ground.format_set(t)
                )));
            }
        }
        // Merge triples sharing a pair until stable.
        let mut blocks: Vec<ElemSet> = Vec::new();
        for &t in &triples {
            let mut merged = t;
            loop {
                let before = merged;
                blocks.retain(|&b| {
                    if bits::size(b & merged) >= 2 {
                        merged |= b;
                        false
                    } else {
                        true
                    }
                });
                if merged == before {
                    break;
                }
            }
            blocks.push(merged);
        }
        blocks.sort_by(bits::canonical_cmp);
        for &b in &blocks {
            let elems: Vec<usize> = bits::elements(b).collect();
            for i in 0..elems.len() {
                for j in i + 1..elems.len() {
                    for k in j + 1..elems.len() {
                        let t = bits::from_indices([elems[i], elems[j], elems[k]]);
                        if !seen.contains(&t) {
                            return Err(Error::InvalidTriples(format!(
                                "{} is forced dependent by the 2-flat {} but not listed",
                                ground.format_set(t),
                                ground.format_set(b)
                            )));
                        }
                    }
                }
            }
        }
        let arrangement = SetArrangement::new(ground.clone(), blocks)?;
        Ok(Matroid {
            ground,
            encoding: Encoding::DependentTriples {
                triples,
                blocks: arrangement,
            },
            family: HashSet::new(),
        })
    }

    /// Rank-at-most-3 matroid whose 2-flats are the blocks of `tp`.
    pub fn from_two_partition(tp: &TwoPartition) -> Self {
        let arrangement = tp.arrangement();
        Matroid {
            ground: tp.ground().clone(),
            encoding: Encoding::TwoPartitionRank3(arrangement),
            family: HashSet::new(),
        }
    }

    /// Rank-at-most-3 matroid determined by a set-arrangement.
    pub fn from_arrangement(a: &SetArrangement) -> Self {
        Matroid {
            ground: a.ground().clone(),
            encoding: Encoding::TwoPartitionRank3(a.clone()),
            family: HashSet::new(),
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn encoding(&self) -> &Encoding {
        &self.encoding
    }

    fn check_subset(&self, t: ElemSet) -> Result<()> {
        if bits::is_subset(t, self.ground.all()) {
            Ok(())
        } else {
            Err(Error::UnknownLabel(format!(
                "element index outside 0..{}",
                self.ground.len()
            )))
        }
    }

    /// Rank of a subset given by element indices.
    pub fn rank(&self, t: ElemSet) -> Result<usize> {
        self.check_subset(t)?;
        Ok(self.rank_unchecked(t))
    }

    /// Rank of a subset given by labels.
    pub fn rank_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<usize> {
        let t = self.ground.subset(labels.iter().map(|s| s.as_ref()))?;
        Ok(self.rank_unchecked(t))
    }

    fn rank_unchecked(&self, t: ElemSet) -> usize {
        match &self.encoding {
            Encoding::Explicit(family) => family
                .iter()
                .filter(|&&s| bits::is_subset(s, t))
                .map(|&s| bits::size(s))
                .max()
                .unwrap_or(0),
            Encoding::Graphic(g) => graphic_rank(g, t),
            Encoding::DependentTriples { blocks, .. } => rank3(blocks, t),
            Encoding::TwoPartitionRank3(a) => rank3(a, t),
        }
    }

    pub fn full_rank(&self) -> usize {
        self.rank_unchecked(self.ground.all())
    }

    pub fn is_independent(&self, t: ElemSet) -> Result<bool> {
        Ok(self.rank(t)? == bits::size(t))
    }

    /// Least flat containing `t`: all elements that do not raise its rank.
    pub fn closure(&self, t: ElemSet) -> Result<ElemSet> {
        self.check_subset(t)?;
        Ok(self.closure_unchecked(t))
    }

    pub fn closure_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<String>> {
        let t = self.ground.subset(labels.iter().map(|s| s.as_ref()))?;
        Ok(self.ground.labels_of(self.closure_unchecked(t)))
    }

    fn closure_unchecked(&self, t: ElemSet) -> ElemSet {
        let r = self.rank_unchecked(t);
        let mut out = t;
        for x in bits::elements(self.ground.all() & !t) {
            if self.rank_unchecked(t | bits::singleton(x)) == r {
                out |= bits::singleton(x);
            }
        }
        out
    }

    /// Flats of every rank, each rank in canonical order. A rank-`k+1` flat
    /// is the closure of a rank-`k` flat plus one element.
    pub fn flats_by_rank(&self) -> Vec<Vec<ElemSet>> {
        let top = self.full_rank();
        let mut levels = vec![vec![self.closure_unchecked(0)]];
        for _ in 0..top {
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for &f in levels.last().expect("nonempty") {
                for x in bits::elements(self.ground.all() & !f) {
                    let g = self.closure_unchecked(f | bits::singleton(x));
                    if seen.insert(g) {
                        next.push(g);
                    }
                }
            }
            next.sort_by(bits::canonical_cmp);
            levels.push(next);
        }
        levels
    }

    /// Flats of rank `k`; empty when `k` exceeds the matroid rank.
    pub fn flats(&self, k: usize) -> Vec<ElemSet> {
        if k > self.full_rank() {
            return Vec::new();
        }
        self.flats_by_rank().swap_remove(k)
    }

    /// The 2-flats, validated as a 2-partition.
    pub fn two_partition(&self) -> Result<TwoPartition> {
        TwoPartition::new(self.ground.clone(), self.flats(2))
            .map_err(|e| Error::Invariant(format!("2-flats do not form a 2-partition: {e}")))
    }

    /// The 2-flats of size at least three.
    pub fn arrangement(&self) -> SetArrangement {
        let blocks = self
            .flats(2)
            .into_iter()
            .filter(|&f| bits::size(f) >= 3)
            .collect();
        SetArrangement::new(self.ground.clone(), blocks)
            .expect("2-flats of a simple matroid form a set-arrangement")
    }

    /// Explicit matroid of the independent sets of size at most `k`.
    pub fn truncation(&self, k: usize) -> Result<Matroid> {
        let n = self.ground.len();
        if n > MAX_EXPLICIT_ELEMENTS {
            return Err(Error::TooManyElements(n, MAX_EXPLICIT_ELEMENTS));
        }
        let family: Vec<ElemSet> = (0..=bits::full(n))
            .filter(|&s| bits::size(s) <= k && self.rank_unchecked(s) == bits::size(s))
            .collect();
        Matroid::explicit(self.ground.clone(), family)
    }

    /// Dependent 3-subsets in canonical order.
    pub fn dependent_triples_list(&self) -> Vec<ElemSet> {
        let n = self.ground.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let t = bits::from_indices([a, b, c]);
                    if self.rank_unchecked(t) < 3 {
                        out.push(t);
                    }
                }
            }
        }
        out
    }
}

fn rank3(a: &SetArrangement, t: ElemSet) -> usize {
    let k = bits::size(t);
    if k <= 2 {
        return k;
    }
    if a.blocks().iter().any(|&b| bits::is_subset(t, b)) {
        2
    } else {
        3
    }
}

/// |vertices touched| - |components|, via union-find over the edges of `t`.
fn graphic_rank(g: &Graph, t: ElemSet) -> usize {
    let mut parent: Vec<usize> = (0..g.vertex_count()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut rank = 0;
    for i in bits::elements(t) {
        let e = &g.edges()[i];
        let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
        if a != b {
            parent[a] = b;
            rank += 1;
        }
    }
    rank
}

/// Graphic matroid of `g`.
pub fn graphic_matroid(g: Graph) -> Result<Matroid> {
    Matroid::graphic(g)
}

/// Rank-at-most-3 matroid from a validated 2-partition.
pub fn matroid_from_two_partition(tp: &TwoPartition) -> Matroid {
    Matroid::from_two_partition(tp)
}

/// The set-arrangement of a simple matroid.
pub fn arrangement_of(m: &Matroid) -> SetArrangement {
    m.arrangement()
}
