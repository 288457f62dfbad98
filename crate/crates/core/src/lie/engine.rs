//! Graded dimensions of Lie algebras with degree-2 relations.
//!
//! Lie elements are handled through their expansion in the tensor algebra.
//! The degree-`d` part of the ideal generated by the relations is the span
//! of `S_d`, where `S_2` holds the expanded relations and
//! `S_{d+1} = { [x_g, v] : g a generator, v in an independent basis of S_d }`.
//! Every iterated bracket of a relation reduces to such left-normed ones by
//! the Jacobi identity, so this spans the whole ideal.
//!
//! Before elimination each vector is restricted to its Lyndon-word
//! coordinates. Writing the Lyndon basis of the free Lie algebra as
//! `P_w = w + (lexicographically larger words)`, the restriction is
//! unitriangular on that basis, hence injective on Lie elements: ranks and
//! span membership are unchanged while rows and columns shrink by roughly
//! a factor of the degree.

use rayon::prelude::*;

use super::echelon::AnyEchelon;
use super::presentation::LiePresentation;
use super::series::GradedDims;
use super::tensor::{word_count, TensorVector, Word};
use super::witt::witt;
use crate::error::{Error, Result};

/// Default bound on `n^D`, the number of words in the top degree.
pub const DEFAULT_MAX_WORDS: u64 = 5_000_000;

/// Coordinate system used for elimination.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coordinates {
    /// Lyndon-word coordinates only (default).
    Lyndon,
    /// Every word of the degree.
    AllWords,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    pub max_words: u64,
    pub coordinates: Coordinates,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            max_words: DEFAULT_MAX_WORDS,
            coordinates: Coordinates::Lyndon,
        }
    }
}

impl EngineConfig {
    pub fn check_word_space(&self, alphabet: usize, degree: usize) -> Result<()> {
        let words = word_count(alphabet, degree).unwrap_or(u128::MAX);
        if words > self.max_words as u128 {
            return Err(Error::WordSpaceTooLarge {
                alphabet,
                degree,
                words,
                bound: self.max_words,
            });
        }
        Ok(())
    }
}

/// Marks the Lyndon words of length exactly `d` over `n` letters
/// (Duval's generation in lexicographic order).
pub fn lyndon_mask(n: usize, d: usize) -> Vec<bool> {
    let size = word_count(n, d).expect("word space fits") as usize;
    let mut mask = vec![false; size];
    if n == 0 {
        return mask;
    }
    let mut w: Vec<usize> = vec![0];
    let mut first = true;
    loop {
        if !first {
            *w.last_mut().unwrap() += 1;
        }
        first = false;
        if w.len() == d {
            let code = w.iter().fold(0usize, |acc, &l| acc * n + l);
            mask[code] = true;
        }
        let m = w.len();
        while w.len() < d {
            let c = w[w.len() - m];
            w.push(c);
        }
        while matches!(w.last(), Some(&l) if l == n - 1) {
            w.pop();
        }
        if w.is_empty() {
            break;
        }
    }
    mask
}

struct Level {
    degree: usize,
    /// Independent spanning vectors of the ideal in this degree, unreduced.
    basis: Vec<TensorVector>,
    echelon: AnyEchelon,
    mask: Option<Vec<bool>>,
}

impl Level {
    fn coordinates(&self, v: &TensorVector) -> Vec<(Word, i64)> {
        match &self.mask {
            Some(mask) => v
                .terms()
                .iter()
                .copied()
                .filter(|&(w, _)| mask[w as usize])
                .collect(),
            None => v.terms().to_vec(),
        }
    }
}

/// The ideal generated by a presentation's relations, degree by degree.
pub struct IdealTower {
    alphabet: usize,
    max_degree: usize,
    levels: Vec<Level>,
}

impl IdealTower {
    pub fn compute(p: &LiePresentation, max_degree: usize, config: &EngineConfig) -> Result<Self> {
        if max_degree < 2 {
            return Err(Error::DegreeTooSmall {
                min: 2,
                got: max_degree,
            });
        }
        let n = p.generator_count();
        config.check_word_space(n, max_degree)?;
        let mut levels: Vec<Level> = Vec::with_capacity(max_degree - 1);
        let mut spanning = p.expanded_relations()?;
        for degree in 2..=max_degree {
            if degree > 2 {
                let prev = &levels.last().expect("previous level").basis;
                spanning = prev
                    .par_iter()
                    .flat_map_iter(|v| (0..n).map(move |g| v.ad_generator(g)))
                    .filter(|v| !v.is_zero())
                    .collect();
            }
            let mask = match config.coordinates {
                Coordinates::Lyndon => Some(lyndon_mask(n, degree)),
                Coordinates::AllWords => None,
            };
            let rows: Vec<Vec<(Word, i64)>> = spanning
                .par_iter()
                .map(|v| match &mask {
                    Some(m) => v
                        .terms()
                        .iter()
                        .copied()
                        .filter(|&(w, _)| m[w as usize])
                        .collect(),
                    None => v.terms().to_vec(),
                })
                .collect();
            // Sparsest rows first: cheap pivots, less fill.
            let mut order: Vec<usize> = (0..rows.len()).collect();
            order.sort_by_key(|&i| (rows[i].len(), i));
            let (echelon, chosen) = AnyEchelon::build(&rows, &order);
            let mut chosen_sorted = chosen;
            chosen_sorted.sort_unstable();
            let basis = chosen_sorted
                .into_iter()
                .map(|i| spanning[i].clone())
                .collect();
            levels.push(Level {
                degree,
                basis,
                echelon,
                mask,
            });
        }
        Ok(IdealTower {
            alphabet: n,
            max_degree,
            levels,
        })
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Ideal dimensions; degree 1 is always zero.
    pub fn dims(&self) -> GradedDims {
        let mut dims = vec![0u64];
        dims.extend(self.levels.iter().map(|l| l.echelon.rank() as u64));
        GradedDims::new(dims)
    }

    /// Whether a Lie element (given by its expansion) lies in the ideal,
    /// i.e. vanishes in the quotient.
    pub fn contains(&self, v: &TensorVector) -> Result<bool> {
        if v.alphabet() != self.alphabet {
            return Err(Error::InvalidExpression("alphabet mismatch".into()));
        }
        if v.is_zero() {
            return Ok(true);
        }
        match v.degree() {
            1 => Ok(false),
            d if d <= self.max_degree => {
                let level = &self.levels[d - 2];
                debug_assert_eq!(level.degree, d);
                Ok(level.echelon.contains(&level.coordinates(v)))
            }
            d => Err(Error::DegreeTooSmall {
                min: d,
                got: self.max_degree,
            }),
        }
    }

    /// Total stored entries over all echelon forms.
    pub fn stored_entries(&self) -> usize {
        self.levels.iter().map(|l| l.echelon.stored_entries()).sum()
    }
}

/// Dimensions of the ideal generated by the relations, degrees `1..=D`.
pub fn ideal_dims(p: &LiePresentation, max_degree: usize) -> Result<GradedDims> {
    ideal_dims_with(p, max_degree, &EngineConfig::default())
}

pub fn ideal_dims_with(
    p: &LiePresentation,
    max_degree: usize,
    config: &EngineConfig,
) -> Result<GradedDims> {
    Ok(IdealTower::compute(p, max_degree, config)?.dims())
}

/// Dimensions of the presented Lie algebra, degrees `1..=D`.
pub fn graded_dims(p: &LiePresentation, max_degree: usize) -> Result<GradedDims> {
    graded_dims_with(p, max_degree, &EngineConfig::default())
}

pub fn graded_dims_with(
    p: &LiePresentation,
    max_degree: usize,
    config: &EngineConfig,
) -> Result<GradedDims> {
    if max_degree < 1 {
        return Err(Error::DegreeTooSmall {
            min: 1,
            got: max_degree,
        });
    }
    let n = p.generator_count();
    if max_degree == 1 {
        return Ok(GradedDims::new(vec![n as u64]));
    }
    let ideal = ideal_dims_with(p, max_degree, config)?;
    Ok(quotient_dims(n, &ideal))
}

/// `witt(n, d) - ideal[d]`.
pub fn quotient_dims(n: usize, ideal: &GradedDims) -> GradedDims {
    GradedDims::new(
        (1..=ideal.max_degree())
            .map(|d| witt(n as u64, d) - ideal.get(d))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::presentation::Relation;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("x{i}")).collect()
    }

    fn single_block(n: usize) -> LiePresentation {
        let rels = (0..n)
            .filter_map(|i| Relation::normalized((0..n).map(|j| (i, j, 1))))
            .collect();
        LiePresentation::new(labels(n), rels).unwrap()
    }

    #[test]
    fn lyndon_mask_counts() {
        for n in 1..=4 {
            for d in 1..=6 {
                let count = lyndon_mask(n, d).iter().filter(|&&b| b).count() as u64;
                assert_eq!(count, witt(n as u64, d), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn no_relations() {
        let dims = ideal_dims(&LiePresentation::free(3), 5).unwrap();
        assert_eq!(dims.dims, vec![0, 0, 0, 0, 0]);
    }

    #[test]
    fn abelianization_of_two_generators() {
        let p = LiePresentation::new(labels(2), vec![Relation::normalized([(0, 1, 1)]).unwrap()])
            .unwrap();
        let dims = ideal_dims(&p, 4).unwrap();
        assert_eq!(dims.get(2), 1);
        assert_eq!(dims.get(3), 2);
        assert_eq!(dims.get(4), 3);
    }

    #[test]
    fn single_block_of_three() {
        let p = single_block(3);
        let ideal = ideal_dims(&p, 3).unwrap();
        assert_eq!((ideal.get(2), ideal.get(3)), (2, 6));
        assert_eq!(graded_dims(&p, 6).unwrap().dims, vec![3, 1, 2, 3, 6, 9]);
    }

    #[test]
    fn coordinates_agree() {
        let p = single_block(4);
        let full = EngineConfig {
            coordinates: Coordinates::AllWords,
            ..EngineConfig::default()
        };
        assert_eq!(
            graded_dims_with(&p, 5, &full).unwrap(),
            graded_dims(&p, 5).unwrap()
        );
    }

    #[test]
    fn degree_guards() {
        assert!(matches!(
            ideal_dims(&LiePresentation::free(2), 1),
            Err(Error::DegreeTooSmall { .. })
        ));
        let tight = EngineConfig {
            max_words: 100,
            ..EngineConfig::default()
        };
        assert!(matches!(
            graded_dims_with(&LiePresentation::free(5), 3, &tight),
            Err(Error::WordSpaceTooLarge { .. })
        ));
        assert_eq!(
            graded_dims(&LiePresentation::free(4), 1).unwrap().dims,
            vec![4]
        );
    }

    #[test]
    fn membership_in_ideal() {
        let p = single_block(3);
        let tower = IdealTower::compute(&p, 3, &EngineConfig::default()).unwrap();
        let x = |g| TensorVector::generator(3, g);
        // c = x0 + x1 + x2 is central, so [x0, c] vanishes but [x0, x1] does not.
        let c = x(0)
            .add_scaled(1, &x(1))
            .unwrap()
            .add_scaled(1, &x(2))
            .unwrap();
        assert!(tower.contains(&x(0).bracket(&c).unwrap()).unwrap());
        assert!(!tower.contains(&x(0).bracket(&x(1)).unwrap()).unwrap());
        assert!(!tower.contains(&x(0)).unwrap());
    }
}
