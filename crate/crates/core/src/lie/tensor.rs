//! Homogeneous elements of the tensor algebra over a finite alphabet.
//!
//! A word of length `d` over letters `0..n` is encoded as its base-`n`
//! numeral with the first letter most significant, so numeric order on
//! codes is lexicographic order on words.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Word code, see the module docs.
pub type Word = u64;

/// `n^d` as `u128`, `None` on overflow.
pub fn word_count(n: usize, d: usize) -> Option<u128> {
    (n as u128).checked_pow(d as u32)
}

/// Letters of a word code, first letter first.
pub fn decode_word(n: usize, d: usize, mut code: Word) -> Vec<usize> {
    let mut letters = vec![0usize; d];
    for slot in letters.iter_mut().rev() {
        *slot = (code % n as u64) as usize;
        code /= n as u64;
    }
    letters
}

pub fn encode_word(n: usize, letters: &[usize]) -> Word {
    letters
        .iter()
        .fold(0u64, |acc, &l| acc * n as u64 + l as u64)
}

/// A sparse integer combination of words of one fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TensorVector {
    alphabet: usize,
    degree: usize,
    /// Sorted by word, no zero coefficients.
    terms: Vec<(Word, i64)>,
}

fn overflow() -> Error {
    Error::Invariant("tensor coefficient overflow".into())
}

impl TensorVector {
    pub fn zero(alphabet: usize, degree: usize) -> Self {
        TensorVector {
            alphabet,
            degree,
            terms: Vec::new(),
        }
    }

    pub fn generator(alphabet: usize, g: usize) -> Self {
        assert!(g < alphabet, "generator {g} outside alphabet {alphabet}");
        TensorVector {
            alphabet,
            degree: 1,
            terms: vec![(g as Word, 1)],
        }
    }

    /// Builds a vector from arbitrary (word, coefficient) pairs, summing
    /// repeated words and dropping zeros.
    pub fn from_terms<I>(alphabet: usize, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, i64)>,
    {
        let mut acc: BTreeMap<Word, i64> = BTreeMap::new();
        for (w, c) in terms {
            let slot = acc.entry(w).or_insert(0);
            *slot = slot.checked_add(c).ok_or_else(overflow)?;
        }
        Ok(TensorVector {
            alphabet,
            degree,
            terms: acc.into_iter().filter(|&(_, c)| c != 0).collect(),
        })
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &[(Word, i64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, word: Word) -> i64 {
        self.terms
            .binary_search_by_key(&word, |&(w, _)| w)
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::InvalidExpression(format!(
                "alphabet mismatch ({} vs {})",
                self.alphabet, other.alphabet
            )));
        }
        Ok(())
    }

    /// `self + factor * other`; both must have the same degree.
    pub fn add_scaled(&self, factor: i64, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.degree != other.degree {
            return Err(Error::InvalidExpression(format!(
                "cannot combine degree {} with degree {}",
                self.degree, other.degree
            )));
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_left = j >= other.terms.len()
                || (i < self.terms.len() && self.terms[i].0 < other.terms[j].0);
            let take_right = i >= self.terms.len()
                || (j < other.terms.len() && other.terms[j].0 < self.terms[i].0);
            if take_left {
                out.push(self.terms[i]);
                i += 1;
            } else if take_right {
                let (w, c) = other.terms[j];
                out.push((w, c.checked_mul(factor).ok_or_else(overflow)?));
                j += 1;
            } else {
                let (w, a) = self.terms[i];
                let b = other.terms[j].1;
                let c = b
                    .checked_mul(factor)
                    .and_then(|b| a.checked_add(b))
                    .ok_or_else(overflow)?;
                out.push((w, c));
                i += 1;
                j += 1;
            }
        }
        out.retain(|&(_, c)| c != 0);
        Ok(TensorVector {
            alphabet: self.alphabet,
            degree: self.degree,
            terms: out,
        })
    }

    pub fn scaled(&self, factor: i64) -> Result<Self> {
        if factor == 0 {
            return Ok(Self::zero(self.alphabet, self.degree));
        }
        let terms = self
            .terms
            .iter()
            .map(|&(w, c)| c.checked_mul(factor).map(|c| (w, c)))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(overflow)?;
        Ok(TensorVector {
            terms,
            ..self.clone()
        })
    }

    /// Concatenation product in the tensor algebra.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let shift = word_count(self.alphabet, other.degree)
            .filter(|&s| s <= u64::MAX as u128)
            .ok_or_else(overflow)? as u64;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &(u, a) in &self.terms {
            for &(v, b) in &other.terms {
                let w = u.checked_mul(shift).and_then(|x| x.checked_add(v));
                let c = a.checked_mul(b);
                match (w, c) {
                    (Some(w), Some(c)) => terms.push((w, c)),
                    _ => return Err(overflow()),
                }
            }
        }
        Self::from_terms(self.alphabet, self.degree + other.degree, terms)
    }

    /// Commutator `uv - vu`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        let left = self.concat(other)?;
        let right = other.concat(self)?;
        left.add_scaled(-1, &right)
    }

    /// `[x_g, self]`, specialised for the hot path of ideal generation.
    pub fn ad_generator(&self, g: usize) -> Self {
        let n = self.alphabet as u64;
        let shift = n.pow(self.degree as u32);
        let mut terms = Vec::with_capacity(2 * self.terms.len());
        for &(w, c) in &self.terms {
            terms.push((g as u64 * shift + w, c));
            terms.push((w * n + g as u64, -c));
        }
        terms.sort_unstable_by_key(|&(w, _)| w);
        let mut out: Vec<(Word, i64)> = Vec::with_capacity(terms.len());
        for (w, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == w => last.1 += c,
                _ => out.push((w, c)),
            }
        }
        out.retain(|&(_, c)| c != 0);
        TensorVector {
            alphabet: self.alphabet,
            degree: self.degree + 1,
            terms: out,
        }
    }

    /// Keeps only the coordinates accepted by `keep`.
    pub fn restricted(&self, keep: impl Fn(Word) -> bool) -> Self {
        TensorVector {
            terms: self
                .terms
                .iter()
                .copied()
                .filter(|&(w, _)| keep(w))
                .collect(),
            ..self.clone()
        }
    }

    /// Renders with the given letter names, e.g. `xxy - 2xyx + yxx`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplayVector { v: self, names }
    }
}

struct DisplayVector<'a> {
    v: &'a TensorVector,
    names: &'a [String],
}

impl fmt::Display for DisplayVector<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            return write!(f, "0");
        }
        for (i, &(w, c)) in self.v.terms.iter().enumerate() {
            let word: String = decode_word(self.v.alphabet, self.v.degree, w)
                .into_iter()
                .map(|l| {
                    self.names
                        .get(l)
                        .cloned()
                        .unwrap_or_else(|| format!("x{l}"))
                })
                .collect::<Vec<_>>()
                .join("");
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                (_, false) => write!(f, " + ")?,
                (_, true) => write!(f, " - ")?,
            }
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "{word}")?;
        }
        Ok(())
    }
}

impl fmt::Display for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.alphabet).map(|l| format!("x{l}")).collect();
        let shown = self.display_with(&names).to_string();
        f.write_str(&shown)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_codes_round_trip() {
        let letters = vec![2, 0, 1, 1];
        let code = encode_word(3, &letters);
        assert_eq!(decode_word(3, 4, code), letters);
    }

    #[test]
    fn ad_generator_agrees_with_bracket() {
        let x = TensorVector::generator(3, 0);
        let y = TensorVector::generator(3, 1);
        let z = TensorVector::generator(3, 2);
        let v = y
            .bracket(&z)
            .unwrap()
            .add_scaled(2, &x.bracket(&z).unwrap())
            .unwrap();
        for g in 0..3 {
            let gen = TensorVector::generator(3, g);
            assert_eq!(v.ad_generator(g), gen.bracket(&v).unwrap());
        }
    }

    #[test]
    fn display_uses_names() {
        let x = TensorVector::generator(2, 0);
        let y = TensorVector::generator(2, 1);
        let names = vec!["x".to_string(), "y".to_string()];
        let v = x.bracket(&x.bracket(&y).unwrap()).unwrap();
        assert_eq!(v.display_with(&names).to_string(), "xxy - 2xyx + yxx");
    }
}
