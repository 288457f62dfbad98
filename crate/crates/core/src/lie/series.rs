//! Graded dimension sequences and truncated power series.

use serde::{Deserialize, Serialize};

/// Dimensions indexed by degree `1..=max_degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDims {
    /// `dims[k]` is the dimension in degree `k + 1`.
    pub dims: Vec<u64>,
}

impl GradedDims {
    pub fn new(dims: Vec<u64>) -> Self {
        GradedDims { dims }
    }

    pub fn max_degree(&self) -> usize {
        self.dims.len()
    }

    /// Dimension in degree `d >= 1`; zero beyond the computed range is not
    /// assumed, so this panics when `d` is out of range.
    pub fn get(&self, d: usize) -> u64 {
        assert!(d >= 1 && d <= self.dims.len(), "degree {d} not computed");
        self.dims[d - 1]
    }

    pub fn truncated(&self, max_degree: usize) -> GradedDims {
        GradedDims::new(self.dims[..max_degree.min(self.dims.len())].to_vec())
    }

    pub fn is_all_zero_from(&self, d: usize) -> bool {
        self.dims.iter().skip(d - 1).all(|&x| x == 0)
    }
}

/// Power-series coefficients indexed `0..=max_degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesTruncation {
    pub coeffs: Vec<i128>,
}

impl SeriesTruncation {
    pub fn one(max_degree: usize) -> Self {
        let mut coeffs = vec![0; max_degree + 1];
        coeffs[0] = 1;
        SeriesTruncation { coeffs }
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Multiplies in place by `(1 - r t^step)^(-e)`; `e` may be negative.
    pub fn mul_geometric_power(&mut self, r: i128, step: usize, e: i128) {
        let d = self.max_degree();
        if e == 0 || r == 0 {
            return;
        }
        // factor[k] = coefficient of t^(k*step) in (1 - r t^step)^(-e)
        let terms = d / step;
        let mut factor = Vec::with_capacity(terms + 1);
        let mut c: i128 = 1;
        factor.push(c);
        for k in 1..=terms as i128 {
            c = c * (e + k - 1) * r / k;
            factor.push(c);
        }
        let old = self.coeffs.clone();
        for (deg, slot) in self.coeffs.iter_mut().enumerate() {
            let mut acc = 0i128;
            for (k, f) in factor.iter().enumerate() {
                let shift = k * step;
                if shift > deg {
                    break;
                }
                acc += f * old[deg - shift];
            }
            *slot = acc;
        }
    }

    /// First degree at which the two truncations differ, compared up to the
    /// shorter length.
    pub fn first_mismatch(&self, other: &SeriesTruncation) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }

    /// Renders `1 + 6t + 25t^2 + O(t^3)`.
    pub fn format(&self, var: &str) -> String {
        format!(
            "{} + O({var}^{})",
            format_poly(self.coeffs.iter().copied(), var),
            self.max_degree() + 1
        )
    }
}

/// Renders `1 + 7z - 2z^2`; zero terms are skipped, the zero polynomial is `0`.
pub fn format_poly<I: IntoIterator<Item = i128>>(coeffs: I, var: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.into_iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        let body = match (k, mag) {
            (0, m) => m.to_string(),
            (1, 1) => var.to_string(),
            (1, m) => format!("{m}{var}"),
            (_, 1) => format!("{var}^{k}"),
            (_, m) => format!("{m}{var}^{k}"),
        };
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Truncation of `Π_d (1 - t^d)^(-dims[d])`, the enveloping-algebra series
/// of a graded Lie algebra with the given dimensions.
pub fn enveloping_series(dims: &GradedDims, max_degree: usize) -> SeriesTruncation {
    assert!(
        dims.max_degree() >= max_degree,
        "dimensions known through degree {} only",
        dims.max_degree()
    );
    let mut s = SeriesTruncation::one(max_degree);
    for d in 1..=max_degree {
        s.mul_geometric_power(1, d, dims.get(d) as i128);
    }
    s
}

/// Truncation of `Π (1 - r t)^(-e)` over `(r, e)` factors.
pub fn series_product(factors: &[(i128, i128)], max_degree: usize) -> SeriesTruncation {
    let mut s = SeriesTruncation::one(max_degree);
    for &(r, e) in factors {
        s.mul_geometric_power(r, 1, e);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::witt::witt;

    #[test]
    fn one_generator() {
        let s = enveloping_series(&GradedDims::new(vec![1, 0, 0, 0]), 4);
        assert_eq!(s.coeffs, vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn free_lie_on_two() {
        let dims = GradedDims::new((1..=6).map(|d| witt(2, d)).collect());
        assert_eq!(
            enveloping_series(&dims, 6).coeffs,
            vec![1, 2, 4, 8, 16, 32, 64]
        );
    }

    #[test]
    fn products() {
        assert_eq!(series_product(&[(1, 1)], 4).coeffs, vec![1, 1, 1, 1, 1]);
        assert_eq!(
            series_product(&[(1, 1), (2, 1), (3, 1)], 3).coeffs,
            vec![1, 6, 25, 90]
        );
        assert_eq!(series_product(&[(2, 1)], 3).coeffs, vec![1, 2, 4, 8]);
    }

    #[test]
    fn negative_exponent_is_polynomial() {
        // (1 - 2t)^2 = 1 - 4t + 4t^2
        assert_eq!(series_product(&[(2, -2)], 4).coeffs, vec![1, -4, 4, 0, 0]);
        // cancels exactly against (1 - 2t)^(-2)
        assert_eq!(
            series_product(&[(2, -2), (2, 2)], 4).coeffs,
            vec![1, 0, 0, 0, 0]
        );
    }

    #[test]
    fn mismatch_position() {
        let a = SeriesTruncation {
            coeffs: vec![1, 2, 3],
        };
        let b = SeriesTruncation {
            coeffs: vec![1, 2, 4, 9],
        };
        assert_eq!(a.first_mismatch(&b), Some(2));
        assert_eq!(a.first_mismatch(&a), None);
    }
}
