//! Holonomy Lie algebras of set-arrangements and the ideals of their exact
//! sequences.

pub mod graphs;

use serde::{Deserialize, Serialize};

use crate::bits::{self, ElemSet};
use crate::error::{Error, Result};
use crate::lie::{
    enveloping_series, expand_bracket, graded_dims_with, series_product, witt, EngineConfig,
    GradedDims, IdealTower, LieExpr, LiePresentation, Relation, SeriesTruncation,
};
use crate::matroid::SetArrangement;

pub use graphs::{
    clique_counts, elimination_tower, exponent_scan, graph_arrangement, has_k4, is_closed_graph,
    kohno_series, lfs_exponents, lfs_report, lfs_series, ExponentScanEntry, LfsReport, Tower,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolonomyPresentation {
    arrangement: SetArrangement,
    presentation: LiePresentation,
    /// Relation rows produced by each block, in block order.
    block_index: Vec<Vec<usize>>,
}

impl HolonomyPresentation {
    /// Block relations first (one per element of each block), then the
    /// commutators of pairs lying in no block.
    pub fn new(a: &SetArrangement) -> Self {
        let n = a.ground().len();
        let mut relations = Vec::new();
        let mut block_index = Vec::with_capacity(a.blocks().len());
        for &b in a.blocks() {
            let mut rows = Vec::new();
            for i in bits::elements(b) {
                let r = Relation::normalized(bits::elements(b).map(|j| (i, j, 1)))
                    .expect("block has at least three elements");
                rows.push(relations.len());
                relations.push(r);
            }
            block_index.push(rows);
        }
        for i in 0..n {
            for j in i + 1..n {
                if a.block_containing_pair(i, j).is_none() {
                    relations.push(Relation::normalized([(i, j, 1)]).expect("i < j"));
                }
            }
        }
        let presentation = LiePresentation::new(a.ground().labels().to_vec(), relations)
            .expect("relations refer to ground-set indices");
        HolonomyPresentation {
            arrangement: a.clone(),
            presentation,
            block_index,
        }
    }

    pub fn arrangement(&self) -> &SetArrangement {
        &self.arrangement
    }

    pub fn presentation(&self) -> &LiePresentation {
        &self.presentation
    }

    pub fn block_index(&self) -> &[Vec<usize>] {
        &self.block_index
    }

    pub fn generator_count(&self) -> usize {
        self.presentation.generator_count()
    }

    pub fn graded_dims(&self, max_degree: usize, config: &EngineConfig) -> Result<GradedDims> {
        graded_dims_with(&self.presentation, max_degree, config)
    }

    fn block_sizes(&self) -> Vec<usize> {
        self.arrangement
            .blocks()
            .iter()
            .map(|&b| bits::size(b))
            .collect()
    }
}

/// One relation of a [`PresentationReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationRow {
    /// Index of the producing block; `None` for a commutator.
    pub block: Option<usize>,
    pub text: String,
    pub relation: Relation,
}

/// Serializable view of a holonomy presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationReport {
    pub generators: Vec<String>,
    pub blocks: Vec<Vec<String>>,
    pub relations: Vec<RelationRow>,
}

impl HolonomyPresentation {
    pub fn report(&self) -> PresentationReport {
        let mut owner = vec![None; self.presentation.relations().len()];
        for (b, rows) in self.block_index.iter().enumerate() {
            for &r in rows {
                owner[r] = Some(b);
            }
        }
        PresentationReport {
            generators: self.presentation.generator_labels().to_vec(),
            blocks: self.arrangement.block_labels(),
            relations: self
                .presentation
                .relations()
                .iter()
                .zip(owner)
                .map(|(r, block)| RelationRow {
                    block,
                    text: self.presentation.format_relation(r),
                    relation: r.clone(),
                })
                .collect(),
        }
    }
}

pub fn holonomy_presentation(a: &SetArrangement) -> HolonomyPresentation {
    HolonomyPresentation::new(a)
}

/// Dimensions of the local algebra of a block of `block_size` elements:
/// free on `block_size - 1` generators times a line.
pub fn local_dims(block_size: usize, max_degree: usize) -> GradedDims {
    GradedDims::new(
        (1..=max_degree)
            .map(|d| {
                if d == 1 {
                    block_size as u64
                } else {
                    witt(block_size as u64 - 1, d)
                }
            })
            .collect(),
    )
}

/// Whether every block outside `chosen` meets the support of `chosen` in at
/// most one element.
pub fn is_closed(chosen: &[usize], a: &SetArrangement) -> bool {
    closure_violation(chosen, a).is_none()
}

fn closure_violation(chosen: &[usize], a: &SetArrangement) -> Option<usize> {
    let support = a.support(chosen);
    (0..a.blocks().len()).find(|k| !chosen.contains(k) && bits::size(a.blocks()[*k] & support) > 1)
}

/// A nonvanishing bracket `[x,[y,z]]` with `y, z` in `block` and `x` outside.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub x: String,
    pub y: String,
    pub z: String,
    pub block: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub decomposable: bool,
    pub witnesses: Vec<Witness>,
    /// Dimensions of `I` (or `J` for a block partition); degree 1 is zero.
    pub ideal_dims: GradedDims,
}

/// For each support `s`, the brackets `[x,[y,z]]` with `y < z` in `s` and `x`
/// outside `s` that do not vanish in the algebra.
fn degree3_witnesses(
    h: &HolonomyPresentation,
    tower: &IdealTower,
    supports: &[ElemSet],
) -> Result<Vec<Witness>> {
    let ground = h.arrangement.ground();
    let n = ground.len();
    let mut out = Vec::new();
    for &s in supports {
        let inside: Vec<usize> = bits::elements(s).collect();
        for x in bits::elements(ground.all() & !s) {
            for (k, &y) in inside.iter().enumerate() {
                for &z in &inside[k + 1..] {
                    let e = LieExpr::bracket(
                        LieExpr::gen(x),
                        LieExpr::bracket(LieExpr::gen(y), LieExpr::gen(z)),
                    );
                    let v = expand_bracket(n, &e)?;
                    if !tower.contains(&v)? {
                        out.push(Witness {
                            x: ground.label(x).to_string(),
                            y: ground.label(y).to_string(),
                            z: ground.label(z).to_string(),
                            block: ground.labels_of(s),
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `eta[d] - sum_i parts[i][d]` for `d >= 2`, zero in degree 1.
fn subtract_dims(eta: &GradedDims, parts: &[GradedDims], what: &str) -> Result<GradedDims> {
    let mut dims = vec![0u64];
    for d in 2..=eta.max_degree() {
        let sub: u64 = parts.iter().map(|p| p.get(d)).sum();
        let v = eta.get(d).checked_sub(sub).ok_or_else(|| {
            Error::Invariant(format!(
                "{what} would have negative dimension in degree {d}: {} - {sub}",
                eta.get(d)
            ))
        })?;
        dims.push(v);
    }
    Ok(GradedDims::new(dims))
}

/// Degree-3 decomposability test plus `I` dimensions through degree 3.
pub fn decomposability(h: &HolonomyPresentation) -> Result<DecompositionReport> {
    decomposability_with(h, 3, &EngineConfig::default())
}

/// As [`decomposability`], with `I` dimensions through `max_degree >= 3`.
pub fn decomposability_with(
    h: &HolonomyPresentation,
    max_degree: usize,
    config: &EngineConfig,
) -> Result<DecompositionReport> {
    if max_degree < 3 {
        return Err(Error::DegreeTooSmall {
            min: 3,
            got: max_degree,
        });
    }
    let tower = IdealTower::compute(&h.presentation, max_degree, config)?;
    let witnesses = degree3_witnesses(h, &tower, h.arrangement.blocks())?;
    let eta = crate::lie::quotient_dims(h.generator_count(), &tower.dims());
    let ideal_dims = i_dims_from(h, &eta)?;
    Ok(DecompositionReport {
        decomposable: witnesses.is_empty(),
        witnesses,
        ideal_dims,
    })
}

fn i_dims_from(h: &HolonomyPresentation, eta: &GradedDims) -> Result<GradedDims> {
    let locals: Vec<GradedDims> = h
        .block_sizes()
        .into_iter()
        .map(|s| local_dims(s, eta.max_degree()))
        .collect();
    subtract_dims(eta, &locals, "I")
}

/// Dimensions of the kernel `I` of the map onto the sum of local algebras.
pub fn ideal_i_dims(
    h: &HolonomyPresentation,
    max_degree: usize,
    config: &EngineConfig,
) -> Result<GradedDims> {
    if max_degree < 2 {
        return Err(Error::DegreeTooSmall {
            min: 2,
            got: max_degree,
        });
    }
    i_dims_from(h, &h.graded_dims(max_degree, config)?)
}

/// Result of the partition analysis: `J` dimensions and the degree-3 test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub ideal_dims: GradedDims,
    /// Whether every `[x,[y,z]]` with `y, z` in one part's support and `x`
    /// outside it vanishes.
    pub bracket_test_vanishes: bool,
    pub witnesses: Vec<Witness>,
}

/// Validates a partition of the block indices into closed parts.
pub fn check_partition(a: &SetArrangement, parts: &[Vec<usize>]) -> Result<()> {
    let m = a.blocks().len();
    let mut owner = vec![None; m];
    for (p, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::InvalidPartition(format!("part {p} is empty")));
        }
        for &k in part {
            if k >= m {
                return Err(Error::InvalidPartition(format!(
                    "block index {k} out of range"
                )));
            }
            if let Some(q) = owner[k] {
                return Err(Error::InvalidPartition(format!(
                    "block {} appears in parts {q} and {p}",
                    a.ground().format_set(a.blocks()[k])
                )));
            }
            owner[k] = Some(p);
        }
    }
    if let Some(k) = owner.iter().position(Option::is_none) {
        return Err(Error::InvalidPartition(format!(
            "block {} is in no part",
            a.ground().format_set(a.blocks()[k])
        )));
    }
    for (p, part) in parts.iter().enumerate() {
        if let Some(k) = closure_violation(part, a) {
            return Err(Error::InvalidPartition(format!(
                "part {p} is not closed: block {} meets its support {} in more than one element",
                a.ground().format_set(a.blocks()[k]),
                a.ground().format_set(a.support(part))
            )));
        }
    }
    Ok(())
}

/// Dimensions of the kernel `J` of the map onto the algebras of the parts.
pub fn ideal_j_dims(
    h: &HolonomyPresentation,
    parts: &[Vec<usize>],
    max_degree: usize,
    config: &EngineConfig,
) -> Result<PartitionReport> {
    if max_degree < 3 {
        return Err(Error::DegreeTooSmall {
            min: 3,
            got: max_degree,
        });
    }
    check_partition(&h.arrangement, parts)?;
    let tower = IdealTower::compute(&h.presentation, max_degree, config)?;
    let eta = crate::lie::quotient_dims(h.generator_count(), &tower.dims());
    let part_dims = parts
        .iter()
        .map(|part| {
            HolonomyPresentation::new(&h.arrangement.restricted_to(part))
                .graded_dims(max_degree, config)
        })
        .collect::<Result<Vec<_>>>()?;
    let ideal_dims = subtract_dims(&eta, &part_dims, "J")?;
    let supports: Vec<ElemSet> = parts.iter().map(|p| h.arrangement.support(p)).collect();
    let witnesses = degree3_witnesses(h, &tower, &supports)?;
    Ok(PartitionReport {
        ideal_dims,
        bracket_test_vanishes: witnesses.is_empty(),
        witnesses,
    })
}

/// Dimensions of `I_A`, the kernel of the split surjection onto the local
/// algebra of block `block`, in every degree.
pub fn subalgebra_ideal_dims(
    h: &HolonomyPresentation,
    block: usize,
    max_degree: usize,
    config: &EngineConfig,
) -> Result<GradedDims> {
    let size = h
        .block_sizes()
        .get(block)
        .copied()
        .ok_or_else(|| Error::InvalidPartition(format!("block index {block} out of range")))?;
    let eta = h.graded_dims(max_degree, config)?;
    let local = local_dims(size, max_degree);
    (1..=max_degree)
        .map(|d| {
            eta.get(d).checked_sub(local.get(d)).ok_or_else(|| {
                Error::Invariant(format!("I_A would have negative dimension in degree {d}"))
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(GradedDims::new)
}

/// A computed series against a predicted one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesComparison {
    pub matches: bool,
    pub computed: SeriesTruncation,
    pub predicted: SeriesTruncation,
    /// First degree where the coefficients differ.
    pub first_mismatch: Option<usize>,
}

impl SeriesComparison {
    pub fn new(computed: SeriesTruncation, predicted: SeriesTruncation) -> Self {
        let first_mismatch = computed.first_mismatch(&predicted);
        SeriesComparison {
            matches: first_mismatch.is_none(),
            computed,
            predicted,
            first_mismatch,
        }
    }
}

/// Comparison of an algebra's enveloping series with a tower prediction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerCheck {
    pub ranks: Vec<u64>,
    pub comparison: SeriesComparison,
}

impl TowerCheck {
    pub fn matches(&self) -> bool {
        self.comparison.matches
    }
}

/// Enveloping series of `h` against `predicted`, through the latter's degree.
pub fn compare_enveloping(
    h: &HolonomyPresentation,
    predicted: SeriesTruncation,
    config: &EngineConfig,
) -> Result<SeriesComparison> {
    let d = predicted.max_degree();
    let computed = if d == 0 {
        SeriesTruncation::one(0)
    } else {
        enveloping_series(&h.graded_dims(d, config)?, d)
    };
    Ok(SeriesComparison::new(computed, predicted))
}

/// Compares the enveloping series of `h` with `Π 1/(1 - r t)` over `ranks`.
pub fn verify_tower(
    h: &HolonomyPresentation,
    ranks: &[u64],
    max_degree: usize,
    config: &EngineConfig,
) -> Result<TowerCheck> {
    let total: u64 = ranks.iter().sum();
    if total != h.generator_count() as u64 {
        return Err(Error::InvalidTower(format!(
            "ranks sum to {total} but there are {} generators",
            h.generator_count()
        )));
    }
    if ranks.contains(&0) {
        return Err(Error::InvalidTower("ranks must be positive".into()));
    }
    let factors: Vec<(i128, i128)> = ranks.iter().map(|&r| (r as i128, 1)).collect();
    let predicted = series_product(&factors, max_degree);
    Ok(TowerCheck {
        ranks: ranks.to_vec(),
        comparison: compare_enveloping(h, predicted, config)?,
    })
}
