//! Lattice of flats, Möbius function, Orlik-Solomon Hilbert series.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{self, ElemSet};
use crate::lie::format_poly;
use crate::matroid::Matroid;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatsLattice {
    /// `by_rank[k]` lists the rank-`k` flats in canonical order.
    by_rank: Vec<Vec<ElemSet>>,
    mobius: HashMap<ElemSet, i64>,
}

impl FlatsLattice {
    pub fn new(m: &Matroid) -> Self {
        let by_rank = m.flats_by_rank();
        let mut mobius = HashMap::new();
        let mut below: Vec<(ElemSet, i64)> = Vec::new();
        for level in &by_rank {
            let mut this_level = Vec::with_capacity(level.len());
            for &f in level {
                let mu = if below.is_empty() {
                    1
                } else {
                    -below
                        .iter()
                        .filter(|(g, _)| bits::is_subset(*g, f))
                        .map(|(_, mu)| mu)
                        .sum::<i64>()
                };
                mobius.insert(f, mu);
                this_level.push((f, mu));
            }
            below.extend(this_level);
        }
        FlatsLattice { by_rank, mobius }
    }

    pub fn rank(&self) -> usize {
        self.by_rank.len() - 1
    }

    pub fn flats_by_rank(&self) -> &[Vec<ElemSet>] {
        &self.by_rank
    }

    pub fn flats(&self) -> impl Iterator<Item = ElemSet> + '_ {
        self.by_rank.iter().flatten().copied()
    }

    pub fn bottom(&self) -> ElemSet {
        self.by_rank[0][0]
    }

    pub fn top(&self) -> ElemSet {
        self.by_rank[self.rank()][0]
    }

    /// Möbius value from the bottom; `None` for a non-flat.
    pub fn mobius(&self, f: ElemSet) -> Option<i64> {
        self.mobius.get(&f).copied()
    }

    /// Pairs `(lower, upper)` with `upper` covering `lower`.
    pub fn covers(&self) -> Vec<(ElemSet, ElemSet)> {
        let mut out = Vec::new();
        for k in 1..self.by_rank.len() {
            for &hi in &self.by_rank[k] {
                for &lo in &self.by_rank[k - 1] {
                    if bits::is_subset(lo, hi) {
                        out.push((lo, hi));
                    }
                }
            }
        }
        out
    }

    /// Unsigned Whitney numbers of the first kind, one per rank.
    pub fn whitney_numbers(&self) -> Vec<i64> {
        self.by_rank
            .iter()
            .map(|level| level.iter().map(|f| self.mobius[f].abs()).sum())
            .collect()
    }
}

/// One flat with its Möbius value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatEntry {
    pub rank: usize,
    pub elements: Vec<String>,
    pub mobius: i64,
}

/// Serializable listing of a lattice of flats.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatsSummary {
    pub rank: usize,
    pub flats: Vec<FlatEntry>,
}

impl FlatsLattice {
    pub fn summary(&self, ground: &crate::matroid::GroundSet) -> FlatsSummary {
        let flats = self
            .by_rank
            .iter()
            .enumerate()
            .flat_map(|(rank, level)| {
                level.iter().map(move |&f| FlatEntry {
                    rank,
                    elements: ground.labels_of(f),
                    mobius: self.mobius[&f],
                })
            })
            .collect();
        FlatsSummary {
            rank: self.rank(),
            flats,
        }
    }
}

/// Integer polynomial in `z`, coefficients by degree, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "RawPolynomial")]
pub struct Polynomial {
    coeffs: Vec<i64>,
}

#[derive(Deserialize)]
struct RawPolynomial {
    coeffs: Vec<i64>,
}

impl From<RawPolynomial> for Polynomial {
    fn from(raw: RawPolynomial) -> Self {
        Polynomial::new(raw.coeffs)
    }
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, z: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * z + c)
    }

    pub fn format_in(&self, var: &str) -> String {
        format_poly(self.coeffs.iter().map(|&c| c as i128), var)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_in("z"))
    }
}

pub fn flats_lattice(m: &Matroid) -> FlatsLattice {
    FlatsLattice::new(m)
}

/// Sum of |μ| over the flats of each rank.
pub fn os_hilbert_series(m: &Matroid) -> Polynomial {
    Polynomial::new(FlatsLattice::new(m).whitney_numbers())
}

/// `1 + n z + d z^2 + (d + 1 - n) z^3`, with `d` the sum of `|A| - 1` over
/// the 2-flats.
pub fn rank3_series(n: i64, d: i64) -> Polynomial {
    Polynomial::new(vec![1, n, d, d + 1 - n])
}

/// `d` in [`rank3_series`] for a matroid.
pub fn two_flat_weight(m: &Matroid) -> i64 {
    m.flats(2).iter().map(|&f| bits::size(f) as i64 - 1).sum()
}

/// Number of chambers of a real arrangement realizing `m`.
pub fn region_count(m: &Matroid) -> u64 {
    os_hilbert_series(m).eval(1) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{Graph, GroundSet, TwoPartition};

    fn free(n: usize) -> Matroid {
        let g = GroundSet::numbered(n).unwrap();
        let fam = bits::subsets(g.all()).collect();
        Matroid::explicit(g, fam).unwrap()
    }

    fn line(n: usize) -> Matroid {
        let g = GroundSet::numbered(n).unwrap();
        let all = g.all();
        Matroid::from_two_partition(&TwoPartition::new(g, vec![all]).unwrap())
    }

    #[test]
    fn boolean_lattice() {
        let m = free(2);
        let l = flats_lattice(&m);
        assert_eq!(l.flats().count(), 4);
        let mus: Vec<i64> = l.flats().map(|f| l.mobius(f).unwrap()).collect();
        assert_eq!(mus, vec![1, -1, -1, 1]);
        assert_eq!(l.covers().len(), 4);
        assert_eq!(os_hilbert_series(&free(3)).coeffs(), &[1, 3, 3, 1]);
        assert_eq!(region_count(&free(5)), 32);
    }

    #[test]
    fn rank_two_line() {
        for n in 3..7 {
            let l = flats_lattice(&line(n));
            assert_eq!(l.mobius(l.top()), Some(n as i64 - 1));
            assert_eq!(
                os_hilbert_series(&line(n)).coeffs(),
                &[1, n as i64, n as i64 - 1]
            );
        }
    }

    #[test]
    fn braid_arrangements() {
        let k3 = Matroid::graphic(Graph::complete(3)).unwrap();
        assert_eq!(region_count(&k3), 6);
        let k4 = Matroid::graphic(Graph::complete(4)).unwrap();
        assert_eq!(os_hilbert_series(&k4).coeffs(), &[1, 6, 11, 6]);
        assert_eq!(two_flat_weight(&k4), 11);
        assert_eq!(rank3_series(6, 11), os_hilbert_series(&k4));
        assert_eq!(region_count(&k4), 24);
    }

    #[test]
    fn formatting() {
        assert_eq!(rank3_series(7, 15).to_string(), "1 + 7z + 15z^2 + 9z^3");
        assert_eq!(Polynomial::new(vec![0, 1, -1, 0]).to_string(), "z - z^2");
        assert_eq!(Polynomial::new(vec![]).to_string(), "0");
        let json = serde_json::to_string(&rank3_series(7, 15)).unwrap();
        assert_eq!(json, r#"{"coeffs":[1,7,15,9]}"#);
    }
}
