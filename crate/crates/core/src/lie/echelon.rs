//! Exact sparse row echelon forms over the integers.
//!
//! Rows are inserted one at a time. A new row is reduced against the stored
//! pivots by fraction-free elimination on its leading column only; as soon
//! as the leading column has no pivot the row is stored as a new pivot.
//! Stored rows are therefore in echelon form but not back-substituted,
//! which keeps fill low. Rank and span membership only need this much.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::tensor::Word;

/// Raised when machine-integer arithmetic would overflow.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoeffOverflow;

/// Integer coefficient ring used by [`Echelon`].
pub trait Coeff: Clone + Debug + Send + Sync {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn checked_neg(&self) -> Option<Self>;
    fn checked_mul(&self, other: &Self) -> Option<Self>;
    fn checked_sub(&self, other: &Self) -> Option<Self>;
    /// Non-negative gcd.
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
}

impl Coeff for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    // i64::MIN is never produced, so negation and gcd below always fit.
    fn checked_neg(&self) -> Option<Self> {
        i64::checked_neg(*self)
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        i64::checked_mul(*self, *other).filter(|&v| v != i64::MIN)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        i64::checked_sub(*self, *other).filter(|&v| v != i64::MIN)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn checked_neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
}

type Row<C> = Vec<(Word, C)>;

/// Integer row echelon form with lowest-word leading columns.
#[derive(Clone, Debug)]
pub struct Echelon<C> {
    pivots: HashMap<Word, usize>,
    rows: Vec<Row<C>>,
}

impl<C: Coeff> Default for Echelon<C> {
    fn default() -> Self {
        Echelon {
            pivots: HashMap::new(),
            rows: Vec::new(),
        }
    }
}

impl<C: Coeff> Echelon<C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Leading columns of the stored rows, in insertion order.
    pub fn pivot_columns(&self) -> impl Iterator<Item = Word> + '_ {
        self.rows
            .iter()
            .map(|r| r.first().expect("stored rows are nonzero").0)
    }

    /// Stored nonzero count, a proxy for fill.
    pub fn stored_entries(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Reduces `v` until it is zero or its leading column carries no pivot.
    /// Returns the remainder (empty when `v` lies in the span).
    pub fn reduce<I>(&self, v: I) -> Result<Row<C>, CoeffOverflow>
    where
        I: IntoIterator<Item = (Word, C)>,
    {
        let mut acc: BTreeMap<Word, C> = BTreeMap::new();
        for (w, c) in v {
            if !c.is_zero() {
                acc.insert(w, c);
            }
        }
        loop {
            let Some((&lead, _)) = acc.first_key_value() else {
                return Ok(Vec::new());
            };
            let Some(&pivot) = self.pivots.get(&lead) else {
                return Ok(acc.into_iter().collect());
            };
            let row = &self.rows[pivot];
            let a = acc.remove(&lead).expect("leading entry present");
            let p = &row[0].1;
            let g = a.gcd(p);
            let row_factor = a.div_exact(&g);
            let acc_factor = p.div_exact(&g);
            if !acc_factor.is_one() {
                for c in acc.values_mut() {
                    *c = c.checked_mul(&acc_factor).ok_or(CoeffOverflow)?;
                }
            }
            for (w, c) in &row[1..] {
                let delta = c.checked_mul(&row_factor).ok_or(CoeffOverflow)?;
                match acc.entry(*w) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let nv = e.get().checked_sub(&delta).ok_or(CoeffOverflow)?;
                        if nv.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = nv;
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(delta.checked_neg().ok_or(CoeffOverflow)?);
                    }
                }
            }
            if !acc_factor.is_one() {
                make_primitive(&mut acc);
            }
        }
    }

    /// Inserts `v`; returns whether it was independent of the stored rows.
    pub fn insert<I>(&mut self, v: I) -> Result<bool, CoeffOverflow>
    where
        I: IntoIterator<Item = (Word, C)>,
    {
        let mut rem = self.reduce(v)?;
        if rem.is_empty() {
            return Ok(false);
        }
        normalize_row(&mut rem)?;
        self.pivots.insert(rem[0].0, self.rows.len());
        self.rows.push(rem);
        Ok(true)
    }

    pub fn contains<I>(&self, v: I) -> Result<bool, CoeffOverflow>
    where
        I: IntoIterator<Item = (Word, C)>,
    {
        Ok(self.reduce(v)?.is_empty())
    }
}

fn make_primitive<C: Coeff>(acc: &mut BTreeMap<Word, C>) {
    let mut g: Option<C> = None;
    for c in acc.values() {
        let next = match &g {
            None => c.gcd(c),
            Some(g) => g.gcd(c),
        };
        if next.is_one() {
            return;
        }
        g = Some(next);
    }
    if let Some(g) = g {
        if !g.is_zero() {
            for c in acc.values_mut() {
                *c = c.div_exact(&g);
            }
        }
    }
}

/// Divides out the content and makes the leading coefficient positive.
fn normalize_row<C: Coeff>(row: &mut Row<C>) -> Result<(), CoeffOverflow> {
    let mut g = row[0].1.gcd(&row[0].1);
    for (_, c) in row.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(c);
    }
    let flip = row[0].1.is_negative();
    for (_, c) in row.iter_mut() {
        if !g.is_one() {
            *c = c.div_exact(&g);
        }
        if flip {
            *c = c.checked_neg().ok_or(CoeffOverflow)?;
        }
    }
    Ok(())
}

/// Rank of a family of sparse integer rows taken in `order`, together with
/// the indices of an independent subfamily spanning the same space.
pub fn independent_subset(rows: &[Vec<(Word, i64)>], order: &[usize]) -> (usize, Vec<usize>) {
    let (ech, chosen) = AnyEchelon::build(rows, order);
    (ech.rank(), chosen)
}

/// An echelon form in whichever coefficient ring was needed.
#[derive(Clone, Debug)]
pub enum AnyEchelon {
    Machine(Echelon<i64>),
    Big(Echelon<BigInt>),
}

impl AnyEchelon {
    /// Builds the echelon form of `rows` taken in `order`, escalating to
    /// arbitrary precision on overflow. Also returns the chosen independent
    /// row indices.
    pub fn build(rows: &[Vec<(Word, i64)>], order: &[usize]) -> (AnyEchelon, Vec<usize>) {
        fn run<C: Coeff>(
            rows: &[Vec<(Word, i64)>],
            order: &[usize],
        ) -> Result<(Echelon<C>, Vec<usize>), CoeffOverflow> {
            let mut ech = Echelon::<C>::new();
            let mut chosen = Vec::new();
            for &i in order {
                if ech.insert(rows[i].iter().map(|&(w, c)| (w, C::from_i64(c))))? {
                    chosen.push(i);
                }
            }
            Ok((ech, chosen))
        }
        match run::<i64>(rows, order) {
            Ok((e, c)) => (AnyEchelon::Machine(e), c),
            Err(CoeffOverflow) => {
                let (e, c) = run::<BigInt>(rows, order).expect("bigint cannot overflow");
                (AnyEchelon::Big(e), c)
            }
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            AnyEchelon::Machine(e) => e.rank(),
            AnyEchelon::Big(e) => e.rank(),
        }
    }

    pub fn stored_entries(&self) -> usize {
        match self {
            AnyEchelon::Machine(e) => e.stored_entries(),
            AnyEchelon::Big(e) => e.stored_entries(),
        }
    }

    pub fn contains(&self, v: &[(Word, i64)]) -> bool {
        match self {
            AnyEchelon::Machine(e) => match e.contains(v.iter().copied()) {
                Ok(b) => b,
                Err(CoeffOverflow) => {
                    // Rebuilding the stored rows in BigInt is exact: they are
                    // already reduced integer rows.
                    let big = Echelon::<BigInt> {
                        pivots: e.pivots.clone(),
                        rows: e
                            .rows
                            .iter()
                            .map(|r| r.iter().map(|&(w, c)| (w, BigInt::from(c))).collect())
                            .collect(),
                    };
                    big.contains(v.iter().map(|&(w, c)| (w, BigInt::from(c))))
                        .expect("bigint cannot overflow")
                }
            },
            AnyEchelon::Big(e) => e
                .contains(v.iter().map(|&(w, c)| (w, BigInt::from(c))))
                .expect("bigint cannot overflow"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(data: &[&[(u64, i64)]]) -> Vec<Vec<(Word, i64)>> {
        data.iter().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        let m = rows(&[&[(0, 1), (1, 2)], &[(0, 2), (1, 4)], &[(1, 3), (2, 1)]]);
        let (r, chosen) = independent_subset(&m, &[0, 1, 2]);
        assert_eq!(r, 2);
        assert_eq!(chosen, vec![0, 2]);
    }

    #[test]
    fn non_unit_pivots() {
        // 2x + 3y, 3x + 5y are independent (det 1); 4x + 6y depends on the first.
        let m = rows(&[&[(0, 2), (1, 3)], &[(0, 3), (1, 5)], &[(0, 4), (1, 6)]]);
        assert_eq!(independent_subset(&m, &[0, 1, 2]).0, 2);
        assert_eq!(independent_subset(&m, &[0, 2]).0, 1);
    }

    #[test]
    fn membership() {
        let m = rows(&[&[(0, 1), (2, -1)], &[(1, 1), (2, -1)]]);
        let (ech, _) = AnyEchelon::build(&m, &[0, 1]);
        assert!(ech.contains(&[(0, 1), (1, -1)]));
        assert!(!ech.contains(&[(0, 1), (1, 1)]));
        assert!(ech.contains(&[]));
    }

    #[test]
    fn escalates_on_overflow() {
        let big = i64::MAX / 2;
        let m = rows(&[
            &[(0, big), (1, 1)],
            &[(0, big - 1), (1, 3)],
            &[(1, 1), (2, 1)],
        ]);
        let (ech, chosen) = AnyEchelon::build(&m, &[0, 1, 2]);
        assert!(matches!(ech, AnyEchelon::Big(_)));
        assert_eq!(chosen.len(), 3);
    }
}
