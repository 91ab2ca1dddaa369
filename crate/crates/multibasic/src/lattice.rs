//! Integer exponent vectors.
//!
//! A `LatticeVector` is simultaneously a lattice point of `Z^n` and the
//! exponent vector of a Laurent monomial `q^a = q_1^{a_1} ... q_n^{a_n}`.
//! Coordinates are machine integers with checked arithmetic: every value
//! this library produces is a short sum of input coordinates, so an
//! overflow is a usage error and aborts rather than wrapping.
//!
//! The derived order is *graded lexicographic* (total sum first, then
//! lexicographic), which is a translation-invariant total order on `Z^n`.
//! Term maps keyed by `LatticeVector` therefore iterate in the canonical
//! display order for free.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

type Coords = SmallVec<[i64; 8]>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LatticeVector {
    coords: Coords,
}

impl LatticeVector {
    pub fn new(coords: impl IntoIterator<Item = i64>) -> Self {
        LatticeVector {
            coords: coords.into_iter().collect(),
        }
    }

    pub fn zeros(len: usize) -> Self {
        LatticeVector {
            coords: std::iter::repeat_n(0, len).collect(),
        }
    }

    /// Standard basis vector `e_index` in `Z^len`.
    pub fn unit(len: usize, index: usize) -> Self {
        assert!(index < len, "unit index out of range");
        let mut v = Self::zeros(len);
        v.coords[index] = 1;
        v
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> i64 {
        self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "lattice vector length mismatch");
        LatticeVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.checked_add(*b).expect("lattice coordinate overflow"))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LatticeVector {
            coords: self
                .coords
                .iter()
                .map(|&a| a.checked_neg().expect("lattice coordinate overflow"))
                .collect(),
        }
    }

    pub fn scaled(&self, k: i64) -> Self {
        LatticeVector {
            coords: self
                .coords
                .iter()
                .map(|&a| a.checked_mul(k).expect("lattice coordinate overflow"))
                .collect(),
        }
    }

    pub fn dot(&self, other: &Self) -> i64 {
        assert_eq!(self.len(), other.len(), "lattice vector length mismatch");
        let acc: i128 = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| a as i128 * b as i128)
            .sum();
        i64::try_from(acc).expect("lattice dot product overflow")
    }

    /// Sum of coordinates; the grade of the graded-lexicographic order.
    pub fn total(&self) -> i64 {
        self.coords.iter().sum()
    }

    /// Sign of the first nonzero coordinate; 0 for the zero vector.
    ///
    /// This plain lexicographic sign decides the canonical orientation of
    /// binomial denominator factors.
    pub fn lex_sign(&self) -> i64 {
        for &c in &self.coords {
            if c != 0 {
                return c.signum();
            }
        }
        0
    }

    pub fn is_lex_positive(&self) -> bool {
        self.lex_sign() > 0
    }

    /// Append one coordinate (used to pass from `Z^n` to `Z^{n+1}`).
    pub fn extended(&self, value: i64) -> Self {
        let mut coords = self.coords.clone();
        coords.push(value);
        LatticeVector { coords }
    }

    /// Remove coordinate `index`.
    pub fn dropped(&self, index: usize) -> Self {
        assert!(index < self.len());
        let coords = self
            .coords
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != index)
            .map(|(_, &c)| c)
            .collect();
        LatticeVector { coords }
    }
}

impl Ord for LatticeVector {
    fn cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.len(), other.len(), "lattice vector length mismatch");
        self.total()
            .cmp(&other.total())
            .then_with(|| self.coords.cmp(&other.coords))
    }
}

impl PartialOrd for LatticeVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for LatticeVector {
    fn from(coords: Vec<i64>) -> Self {
        LatticeVector::new(coords)
    }
}

impl From<&[i64]> for LatticeVector {
    fn from(coords: &[i64]) -> Self {
        LatticeVector::new(coords.iter().copied())
    }
}

/// Shorthand used pervasively in tests and examples.
pub fn vec_i(coords: &[i64]) -> LatticeVector {
    LatticeVector::from(coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_orders_by_total_first() {
        let a = vec_i(&[2, 0]);
        let b = vec_i(&[0, 3]);
        assert!(a < b);
        let c = vec_i(&[1, 1]);
        // same grade: lexicographic tiebreak
        assert!(c < a);
    }

    #[test]
    fn lex_sign_ignores_grade() {
        assert_eq!(vec_i(&[0, -2, 5]).lex_sign(), -1);
        assert_eq!(vec_i(&[1, -9]).lex_sign(), 1);
        assert_eq!(vec_i(&[0, 0]).lex_sign(), 0);
        assert!(!vec_i(&[0, 0]).is_lex_positive());
    }

    #[test]
    fn arithmetic_round_trips() {
        let a = vec_i(&[3, -1]);
        let b = vec_i(&[-2, 4]);
        assert_eq!(a.add(&b), vec_i(&[1, 3]));
        assert_eq!(a.sub(&b), vec_i(&[5, -5]));
        assert_eq!(a.scaled(-2), vec_i(&[-6, 2]));
        assert_eq!(a.dot(&b), -10);
    }

    #[test]
    fn extend_and_drop() {
        let a = vec_i(&[4, 7]);
        assert_eq!(a.extended(1), vec_i(&[4, 7, 1]));
        assert_eq!(a.extended(1).dropped(2), a);
        assert_eq!(a.dropped(0), vec_i(&[7]));
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_aborts() {
        let big = vec_i(&[i64::MAX]);
        let _ = big.add(&vec_i(&[1]));
    }
}
