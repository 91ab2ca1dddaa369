//! Sparse multivariate Laurent polynomials over `Z`.
//!
//! Terms are held in a `BTreeMap` from exponent vector to nonzero
//! `BigInt` coefficient, keyed by the graded-lexicographic order of
//! [`LatticeVector`]; iteration order is the canonical display and
//! serialization order. The zero polynomial is the empty map. All
//! arithmetic is exact; nothing in this crate ever rounds.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::LatticeVector;

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    arity: usize,
    terms: BTreeMap<LatticeVector, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero(arity: usize) -> Self {
        LaurentPolynomial {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigInt::one())
    }

    pub fn constant(arity: usize, value: BigInt) -> Self {
        Self::monomial(LatticeVector::zeros(arity), value)
    }

    /// The single term `value * q^exponent`.
    pub fn monomial(exponent: LatticeVector, value: BigInt) -> Self {
        let arity = exponent.len();
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(exponent, value);
        }
        LaurentPolynomial { arity, terms }
    }

    /// Integer-point transform of a finite set: `sum over points of q^a`.
    /// Repeated points accumulate with multiplicity.
    pub fn from_points<I>(arity: usize, points: I) -> Self
    where
        I: IntoIterator<Item = LatticeVector>,
    {
        let mut out = Self::zero(arity);
        for p in points {
            assert_eq!(p.len(), arity, "point arity mismatch");
            out.add_term(p, BigInt::one());
        }
        out
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LatticeVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponent: &LatticeVector) -> BigInt {
        self.terms
            .get(exponent)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(e, c)| e.is_zero() && c.is_one())
    }

    fn add_term(&mut self, exponent: LatticeVector, value: BigInt) {
        if value.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exponent) {
            Entry::Vacant(slot) => {
                slot.insert(value);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += value;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scalar_mul(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.arity);
        }
        LaurentPolynomial {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        Ok(out)
    }

    /// Multiply by the monomial `value * q^exponent`.
    pub fn mul_monomial(&self, exponent: &LatticeVector, value: &BigInt) -> Self {
        assert_eq!(exponent.len(), self.arity, "monomial arity mismatch");
        if value.is_zero() {
            return Self::zero(self.arity);
        }
        LaurentPolynomial {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.add(exponent), c * value))
                .collect(),
        }
    }

    /// Multiply by the binomial `1 - q^exponent`.
    pub fn mul_binomial(&self, exponent: &LatticeVector) -> Self {
        let mut out = self.clone();
        for (e, c) in &self.terms {
            out.add_term(e.add(exponent), -c);
        }
        out
    }

    /// Exact division by the binomial `1 - q^exponent`; `None` when the
    /// quotient is not a Laurent polynomial.
    ///
    /// Writing `p = r * (1 - q^a)` and restricting to one line
    /// `{base + k a : k ∈ Z}` of the exponent lattice gives
    /// `p_k = r_k - r_{k-1}`, so `r_k = Σ_{j ≤ k} p_j`. The quotient has
    /// finite support exactly when the coefficients on every line sum to
    /// zero, and then its terms are the running prefix sums between the
    /// line's extreme positions.
    pub fn div_exact_binomial(&self, exponent: &LatticeVector) -> Option<Self> {
        assert!(!exponent.is_zero(), "division by the zero binomial");
        assert_eq!(exponent.len(), self.arity);
        if self.is_zero() {
            return Some(Self::zero(self.arity));
        }
        // Split the support into lines parallel to `a`: a term at `e` sits
        // at position k = e[pivot] div a[pivot] on the line through the
        // residue e - k a, where pivot is the first nonzero slot of `a`.
        let pivot = exponent
            .coords()
            .iter()
            .position(|&x| x != 0)
            .expect("nonzero exponent");
        let step = exponent.get(pivot);
        let mut lines: BTreeMap<LatticeVector, BTreeMap<i64, BigInt>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e.get(pivot).div_euclid(step);
            let residue = e.sub(&exponent.scaled(k));
            lines.entry(residue).or_default().insert(k, c.clone());
        }
        let mut quotient = Self::zero(self.arity);
        for (residue, positions) in &lines {
            let mut running = BigInt::from(0);
            let mut prev: Option<i64> = None;
            for (&k, c) in positions {
                if let Some(p) = prev {
                    // the prefix sum holds steady strictly between support
                    // positions; materialize those quotient terms
                    for j in p..k {
                        quotient.add_term(residue.add(&exponent.scaled(j)), running.clone());
                    }
                }
                running += c;
                prev = Some(k);
            }
            if !running.is_zero() {
                // the series p/(1-q^a) tails off to `running` forever
                return None;
            }
        }
        Some(quotient)
    }

    fn check_var(&self, var: usize) -> Result<()> {
        if var >= self.arity {
            return Err(Error::VariableIndexOutOfRange {
                index: var,
                arity: self.arity,
            });
        }
        Ok(())
    }

    /// Substitute `v -> q^shift * v` for the distinguished variable `v`:
    /// a term `c * q^e * v^k` becomes `c * q^{e + (k + carry) * shift} * v^k`.
    /// `shift` must not involve the distinguished variable itself.
    pub fn substitute_monomial(
        &self,
        var: usize,
        shift: &LatticeVector,
        carry: i64,
    ) -> Result<Self> {
        self.check_var(var)?;
        if shift.len() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: shift.len(),
            });
        }
        assert_eq!(
            shift.get(var),
            0,
            "substitution shift must avoid the distinguished variable"
        );
        let mut out = Self::zero(self.arity);
        for (e, c) in &self.terms {
            let k = e
                .get(var)
                .checked_add(carry)
                .expect("lattice coordinate overflow");
            out.add_term(e.add(&shift.scaled(k)), c.clone());
        }
        Ok(out)
    }

    /// Substitute `q_i -> 1/q_i` for every `i` in `subset`.
    pub fn invert_variables(&self, subset: &[usize]) -> Result<Self> {
        let mask = self.subset_mask(subset)?;
        let mut out = Self::zero(self.arity);
        for (e, c) in &self.terms {
            let flipped =
                LatticeVector::new(
                    e.coords()
                        .iter()
                        .enumerate()
                        .map(|(i, &x)| if mask[i] { -x } else { x }),
                );
            out.add_term(flipped, c.clone());
        }
        Ok(out)
    }

    /// Substitute `q_i = 1` for every `i` in `subset`. The arity is kept;
    /// the affected exponent components collapse to zero and terms merge.
    pub fn specialize_ones(&self, subset: &[usize]) -> Result<Self> {
        let mask = self.subset_mask(subset)?;
        let mut out = Self::zero(self.arity);
        for (e, c) in &self.terms {
            let collapsed =
                LatticeVector::new(
                    e.coords()
                        .iter()
                        .enumerate()
                        .map(|(i, &x)| if mask[i] { 0 } else { x }),
                );
            out.add_term(collapsed, c.clone());
        }
        Ok(out)
    }

    fn subset_mask(&self, subset: &[usize]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.arity];
        for &i in subset {
            if i >= self.arity {
                return Err(Error::VariableIndexOutOfRange {
                    index: i,
                    arity: self.arity,
                });
            }
            mask[i] = true;
        }
        Ok(mask)
    }

    /// The coefficient of `v^power` for variable `v`, as a polynomial in
    /// the remaining `arity - 1` variables.
    pub fn coefficient_of_var_power(&self, var: usize, power: i64) -> Result<Self> {
        self.check_var(var)?;
        let mut out = Self::zero(self.arity - 1);
        for (e, c) in &self.terms {
            if e.get(var) == power {
                out.add_term(e.dropped(var), c.clone());
            }
        }
        Ok(out)
    }

    pub fn max_var_degree(&self, var: usize) -> Result<Option<i64>> {
        self.check_var(var)?;
        Ok(self.terms.keys().map(|e| e.get(var)).max())
    }

    /// Rebuild the polynomial through an exponent map into a new arity,
    /// merging any colliding images. Used for variable collapses such as
    /// `q_i -> q^{a_i}`.
    pub(crate) fn transform_exponents<F>(&self, new_arity: usize, f: F) -> Self
    where
        F: Fn(&LatticeVector) -> LatticeVector,
    {
        let mut out = Self::zero(new_arity);
        for (e, c) in &self.terms {
            let image = f(e);
            assert_eq!(image.len(), new_arity, "exponent image arity mismatch");
            out.add_term(image, c.clone());
        }
        out
    }
}

impl std::fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if i > 0 || c.is_negative() {
                write!(f, "{} ", if c.is_negative() { "-" } else { "+" })?;
            }
            write!(f, "{}·q^{:?}", c.abs(), e)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::vec_i;

    fn mono(e: &[i64], c: i64) -> LaurentPolynomial {
        LaurentPolynomial::monomial(vec_i(e), BigInt::from(c))
    }

    #[test]
    fn addition_cancels_inverse_pairs() {
        let p = mono(&[1, 0], 2);
        let q = mono(&[1, 0], -2);
        assert!(p.add(&q).unwrap().is_zero());
    }

    #[test]
    fn addition_keeps_disjoint_supports() {
        let p = mono(&[1, 0], 1).add(&mono(&[0, 2], 3)).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coefficient(&vec_i(&[0, 2])), BigInt::from(3));
    }

    #[test]
    fn unit_square_transform_two_ways() {
        // (1 + q1)(1 + q2) must equal the term-by-term sum over the four
        // lattice points of the unit square.
        let a = mono(&[0, 0], 1).add(&mono(&[1, 0], 1)).unwrap();
        let b = mono(&[0, 0], 1).add(&mono(&[0, 1], 1)).unwrap();
        let product = a.mul(&b).unwrap();
        let points = [[0, 0], [1, 0], [0, 1], [1, 1]]
            .iter()
            .map(|p| vec_i(&p[..]))
            .collect::<Vec<_>>();
        let direct = LaurentPolynomial::from_points(2, points);
        assert_eq!(product, direct);
    }

    #[test]
    fn multiplication_telescopes() {
        // (1 - q)(1 + q + q^2) = 1 - q^3
        let p = mono(&[0], 1).add(&mono(&[1], -1)).unwrap();
        let q = mono(&[0], 1)
            .add(&mono(&[1], 1))
            .unwrap()
            .add(&mono(&[2], 1))
            .unwrap();
        let expect = mono(&[0], 1).add(&mono(&[3], -1)).unwrap();
        assert_eq!(p.mul(&q).unwrap(), expect);
    }

    #[test]
    fn one_is_multiplicative_identity() {
        let p = mono(&[2, -1], 5).add(&mono(&[0, 3], -4)).unwrap();
        assert_eq!(p.mul(&LaurentPolynomial::one(2)).unwrap(), p);
    }

    #[test]
    fn arity_mismatch_is_rejected() {
        let p = LaurentPolynomial::one(2);
        let q = LaurentPolynomial::one(3);
        assert_eq!(
            p.add(&q).unwrap_err(),
            Error::ArityMismatch { left: 2, right: 3 }
        );
        assert!(p.mul(&q).is_err());
    }

    #[test]
    fn substitute_monomial_shifts_by_distinguished_power() {
        // arity 2 = (q, t), t distinguished: 1 + t  ->  1 + q t
        let p = mono(&[0, 0], 1).add(&mono(&[0, 1], 1)).unwrap();
        let shifted = p.substitute_monomial(1, &vec_i(&[1, 0]), 0).unwrap();
        let expect = mono(&[0, 0], 1).add(&mono(&[1, 1], 1)).unwrap();
        assert_eq!(shifted, expect);
        // zero shift is the identity
        assert_eq!(p.substitute_monomial(1, &vec_i(&[0, 0]), 0).unwrap(), p);
    }

    #[test]
    fn substitute_monomial_carry_offsets_the_power() {
        // with carry 1 the term c q^e t^k shifts by (k+1)·m
        let p = mono(&[0, 1], 1);
        let shifted = p.substitute_monomial(1, &vec_i(&[1, 0]), 1).unwrap();
        assert_eq!(shifted, mono(&[2, 1], 1));
    }

    #[test]
    fn substitute_monomial_bad_var_is_rejected() {
        let p = LaurentPolynomial::one(2);
        assert_eq!(
            p.substitute_monomial(2, &vec_i(&[0, 0]), 0).unwrap_err(),
            Error::VariableIndexOutOfRange { index: 2, arity: 2 }
        );
    }

    #[test]
    fn invert_variables_is_an_involution() {
        let p = mono(&[2, -1], 3).add(&mono(&[-4, 5], 7)).unwrap();
        let inv = p.invert_variables(&[0, 1]).unwrap();
        assert_eq!(inv.invert_variables(&[0, 1]).unwrap(), p);
        // constants are fixed
        let c = LaurentPolynomial::constant(2, BigInt::from(9));
        assert_eq!(c.invert_variables(&[0, 1]).unwrap(), c);
    }

    #[test]
    fn partial_inversion_flips_only_the_subset() {
        let p = mono(&[2, 3], 1);
        assert_eq!(p.invert_variables(&[1]).unwrap(), mono(&[2, -3], 1));
    }

    #[test]
    fn specialize_ones_merges_terms() {
        // q1 + q1^2 q2 at q1 = 1 becomes 1 + q2
        let p = mono(&[1, 0], 1).add(&mono(&[2, 1], 1)).unwrap();
        let s = p.specialize_ones(&[0]).unwrap();
        let expect = mono(&[0, 0], 1).add(&mono(&[0, 1], 1)).unwrap();
        assert_eq!(s, expect);
    }

    #[test]
    fn div_exact_binomial_inverts_multiplication() {
        let p = mono(&[0, 0], 1)
            .add(&mono(&[1, 2], -3))
            .unwrap()
            .add(&mono(&[-2, 1], 5))
            .unwrap();
        for a in [
            vec_i(&[1, 0]),
            vec_i(&[0, 2]),
            vec_i(&[-1, 1]),
            vec_i(&[-2, -1]),
        ] {
            let prod = p.mul_binomial(&a);
            assert_eq!(prod.div_exact_binomial(&a).unwrap(), p, "factor {a:?}");
        }
    }

    #[test]
    fn div_by_total_degree_zero_binomial_terminates() {
        // the divisor exponent (1,-1) moves along a constant-total line;
        // inexact dividends must be detected, not chased forever
        let bad = mono(&[0, 0], 1).add(&mono(&[0, 1], 1)).unwrap();
        assert!(bad.div_exact_binomial(&vec_i(&[1, -1])).is_none());
        let p = mono(&[0, 0], 2).add(&mono(&[-1, 2], 7)).unwrap();
        let prod = p.mul_binomial(&vec_i(&[1, -1]));
        assert_eq!(prod.div_exact_binomial(&vec_i(&[1, -1])).unwrap(), p);
        assert_eq!(
            prod.div_exact_binomial(&vec_i(&[-1, 1]))
                .unwrap()
                .num_terms(),
            2
        );
    }

    #[test]
    fn div_exact_binomial_detects_inexact() {
        // 1 - q^3 is divisible by 1 - q but 1 - 2q^3 is not
        let ok = mono(&[0], 1).add(&mono(&[3], -1)).unwrap();
        assert!(ok.div_exact_binomial(&vec_i(&[1])).is_some());
        let bad = mono(&[0], 1).add(&mono(&[3], -2)).unwrap();
        assert!(bad.div_exact_binomial(&vec_i(&[1])).is_none());
    }

    #[test]
    fn coefficient_extraction_drops_the_variable() {
        // (q,t): q + q^2 t  ->  coefficient of t^1 is q^2 in arity 1
        let p = mono(&[1, 0], 1).add(&mono(&[2, 1], 1)).unwrap();
        let c1 = p.coefficient_of_var_power(1, 1).unwrap();
        assert_eq!(c1, mono(&[2], 1));
        assert_eq!(c1.arity(), 1);
        assert!(p.coefficient_of_var_power(1, 5).unwrap().is_zero());
    }

    // deterministic xorshift for the randomized ring-axiom checks
    struct Rng(u64);
    impl Rng {
        fn next(&mut self) -> u64 {
            let mut x = self.0;
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            self.0 = x;
            x
        }
        fn range(&mut self, lo: i64, hi: i64) -> i64 {
            lo + (self.next() % (hi - lo + 1) as u64) as i64
        }
    }

    fn random_poly(rng: &mut Rng, arity: usize) -> LaurentPolynomial {
        let n_terms = rng.range(0, 5);
        let mut p = LaurentPolynomial::zero(arity);
        for _ in 0..n_terms {
            let e = LatticeVector::new((0..arity).map(|_| rng.range(-3, 3)));
            p = p
                .add(&LaurentPolynomial::monomial(
                    e,
                    BigInt::from(rng.range(-4, 4)),
                ))
                .unwrap();
        }
        p
    }

    #[test]
    fn ring_axioms_hold_on_random_triples() {
        let mut rng = Rng(0x5eed_1234_5678_9abc);
        for _ in 0..60 {
            let a = random_poly(&mut rng, 2);
            let b = random_poly(&mut rng, 2);
            let c = random_poly(&mut rng, 2);
            // commutativity
            assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            // associativity
            assert_eq!(
                a.add(&b).unwrap().add(&c).unwrap(),
                a.add(&b.add(&c).unwrap()).unwrap()
            );
            assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
            // distributivity
            assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn inversion_is_a_ring_homomorphism() {
        let mut rng = Rng(0xfeed_beef_0042_4242);
        let all = [0usize, 1];
        for _ in 0..40 {
            let a = random_poly(&mut rng, 2);
            let b = random_poly(&mut rng, 2);
            let lhs = a.mul(&b).unwrap().invert_variables(&all).unwrap();
            let rhs = a
                .invert_variables(&all)
                .unwrap()
                .mul(&b.invert_variables(&all).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(
                a.add(&b).unwrap().invert_variables(&all).unwrap(),
                a.invert_variables(&all)
                    .unwrap()
                    .add(&b.invert_variables(&all).unwrap())
                    .unwrap()
            );
        }
    }
}
