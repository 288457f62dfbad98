//! Bracket expressions and their tensor-algebra expansion.

use serde::{Deserialize, Serialize};

use super::tensor::TensorVector;
use crate::error::{Error, Result};

/// An iterated bracket over generators `0..n`, or an integer combination
/// of such brackets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LieExpr {
    Gen(usize),
    Bracket(Box<LieExpr>, Box<LieExpr>),
    Sum(Vec<(i64, LieExpr)>),
}

impl LieExpr {
    pub fn gen(g: usize) -> Self {
        LieExpr::Gen(g)
    }

    pub fn bracket(a: LieExpr, b: LieExpr) -> Self {
        LieExpr::Bracket(Box::new(a), Box::new(b))
    }

    /// Bracket weight, `None` when a combination mixes degrees or is empty.
    pub fn weight(&self) -> Option<usize> {
        match self {
            LieExpr::Gen(_) => Some(1),
            LieExpr::Bracket(a, b) => Some(a.weight()? + b.weight()?),
            LieExpr::Sum(items) => {
                let mut weights = items.iter().map(|(_, e)| e.weight());
                let first = weights.next()??;
                for w in weights {
                    if w? != first {
                        return None;
                    }
                }
                Some(first)
            }
        }
    }
}

/// Multilinear expansion `[u, v] -> uv - vu`, applied recursively.
pub fn expand_bracket(alphabet: usize, expr: &LieExpr) -> Result<TensorVector> {
    match expr {
        LieExpr::Gen(g) => {
            if *g >= alphabet {
                return Err(Error::InvalidExpression(format!(
                    "generator {g} outside alphabet of size {alphabet}"
                )));
            }
            Ok(TensorVector::generator(alphabet, *g))
        }
        LieExpr::Bracket(a, b) => {
            let a = expand_bracket(alphabet, a)?;
            let b = expand_bracket(alphabet, b)?;
            a.bracket(&b)
        }
        LieExpr::Sum(items) => {
            let degree = expr.weight().ok_or_else(|| {
                Error::InvalidExpression("combination mixes degrees or is empty".into())
            })?;
            let mut acc = TensorVector::zero(alphabet, degree);
            for (c, e) in items {
                acc = acc.add_scaled(*c, &expand_bracket(alphabet, e)?)?;
            }
            Ok(acc)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::tensor::encode_word;

    fn x() -> LieExpr {
        LieExpr::gen(0)
    }
    fn y() -> LieExpr {
        LieExpr::gen(1)
    }

    #[test]
    fn simple_commutator() {
        let v = expand_bracket(2, &LieExpr::bracket(x(), y())).unwrap();
        assert_eq!(
            v.terms(),
            &[(encode_word(2, &[0, 1]), 1), (encode_word(2, &[1, 0]), -1)]
        );
    }

    #[test]
    fn self_bracket_vanishes() {
        assert!(expand_bracket(2, &LieExpr::bracket(x(), x()))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn nested_bracket() {
        let v = expand_bracket(2, &LieExpr::bracket(x(), LieExpr::bracket(x(), y()))).unwrap();
        assert_eq!(v.coefficient(encode_word(2, &[0, 0, 1])), 1);
        assert_eq!(v.coefficient(encode_word(2, &[0, 1, 0])), -2);
        assert_eq!(v.coefficient(encode_word(2, &[1, 0, 0])), 1);
        assert_eq!(v.nnz(), 3);
    }

    #[test]
    fn mixed_degree_rejected() {
        let e = LieExpr::Sum(vec![(1, x()), (1, LieExpr::bracket(x(), y()))]);
        assert!(matches!(
            expand_bracket(2, &e),
            Err(Error::InvalidExpression(_))
        ));
        assert!(expand_bracket(2, &LieExpr::Sum(vec![])).is_err());
        assert!(expand_bracket(2, &LieExpr::gen(5)).is_err());
    }

    #[test]
    fn jacobi_identity() {
        let z = LieExpr::gen(2);
        let j = LieExpr::Sum(vec![
            (1, LieExpr::bracket(x(), LieExpr::bracket(y(), z.clone()))),
            (1, LieExpr::bracket(y(), LieExpr::bracket(z.clone(), x()))),
            (1, LieExpr::bracket(z, LieExpr::bracket(x(), y()))),
        ]);
        assert!(expand_bracket(3, &j).unwrap().is_zero());
    }
}
