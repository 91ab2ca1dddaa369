//! Rational functions with binomial denominators, kept factored.
//!
//! A [`FactoredRationalFunction`] is a Laurent-polynomial numerator over a
//! multiset of binomial factors `1 - q^a`. The factor exponents are stored
//! in canonical orientation — lexicographically positive — by rewriting
//! `1/(1 - q^a) = -q^{-a} / (1 - q^{-a})` whenever an exponent arrives
//! lexicographically negative. Denominators are never reduced against the
//! numerator; equality is decided by cross-multiplication, which is exact
//! because the Laurent ring is an integral domain.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use crate::laurent::LaurentPolynomial;

/// One denominator factor `(1 - q^exponent)^multiplicity` with a
/// lexicographically positive exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialFactor {
    pub exponent: LatticeVector,
    pub multiplicity: usize,
}

#[derive(Clone, Debug)]
pub struct FactoredRationalFunction {
    numerator: LaurentPolynomial,
    /// canonical exponent -> multiplicity
    denominator: BTreeMap<LatticeVector, usize>,
}

impl FactoredRationalFunction {
    pub fn from_polynomial(numerator: LaurentPolynomial) -> Self {
        FactoredRationalFunction {
            numerator,
            denominator: BTreeMap::new(),
        }
    }

    pub fn zero(arity: usize) -> Self {
        Self::from_polynomial(LaurentPolynomial::zero(arity))
    }

    pub fn one(arity: usize) -> Self {
        Self::from_polynomial(LaurentPolynomial::one(arity))
    }

    /// Build `numerator / prod (1 - q^a)^m` from raw factors in either
    /// orientation; exponents are canonicalized on the way in.
    pub fn new<I>(numerator: LaurentPolynomial, factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = (LatticeVector, usize)>,
    {
        let mut out = Self::from_polynomial(numerator);
        for (exponent, multiplicity) in factors {
            out.push_factor(exponent, multiplicity)?;
        }
        Ok(out)
    }

    /// Divide by `(1 - q^exponent)^multiplicity`, canonicalizing the
    /// orientation and folding any sign/monomial correction into the
    /// numerator.
    fn push_factor(&mut self, exponent: LatticeVector, multiplicity: usize) -> Result<()> {
        if multiplicity == 0 {
            return Ok(());
        }
        if exponent.len() != self.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: exponent.len(),
            });
        }
        if exponent.is_zero() {
            return Err(Error::ZeroExponentFactor);
        }
        let canonical = if exponent.is_lex_positive() {
            exponent
        } else {
            // 1/(1 - q^a) = -q^{-a}/(1 - q^{-a}) with -a lex-positive
            let flipped = exponent.neg();
            for _ in 0..multiplicity {
                self.numerator = self.numerator.mul_monomial(&flipped, &BigInt::from(-1));
            }
            flipped
        };
        *self.denominator.entry(canonical).or_insert(0) += multiplicity;
        Ok(())
    }

    pub fn arity(&self) -> usize {
        self.numerator.arity()
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> Vec<BinomialFactor> {
        self.denominator
            .iter()
            .map(|(e, &m)| BinomialFactor {
                exponent: e.clone(),
                multiplicity: m,
            })
            .collect()
    }

    /// True when the numerator is identically zero (the denominator never
    /// vanishes as a rational function).
    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: other.arity(),
            });
        }
        Ok(())
    }

    /// The fully expanded denominator `prod (1 - q^a)^m`.
    pub fn denominator_polynomial(&self) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::one(self.arity());
        for (e, &m) in &self.denominator {
            for _ in 0..m {
                out = out.mul_binomial(e);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        // common denominator: multiset union, maximized per exponent
        let mut union: BTreeMap<LatticeVector, usize> = self.denominator.clone();
        for (e, &m) in &other.denominator {
            let slot = union.entry(e.clone()).or_insert(0);
            *slot = (*slot).max(m);
        }
        let scale = |r: &Self| -> LaurentPolynomial {
            let mut num = r.numerator.clone();
            for (e, &m) in &union {
                let have = r.denominator.get(e).copied().unwrap_or(0);
                for _ in have..m {
                    num = num.mul_binomial(e);
                }
            }
            num
        };
        let numerator = scale(self).add(&scale(other))?;
        Ok(FactoredRationalFunction {
            numerator,
            denominator: union,
        })
    }

    pub fn neg(&self) -> Self {
        FactoredRationalFunction {
            numerator: self.numerator.neg(),
            denominator: self.denominator.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut denominator = self.denominator.clone();
        for (e, &m) in &other.denominator {
            *denominator.entry(e.clone()).or_insert(0) += m;
        }
        Ok(FactoredRationalFunction {
            numerator: self.numerator.mul(&other.numerator)?,
            denominator,
        })
    }

    pub fn mul_polynomial(&self, p: &LaurentPolynomial) -> Result<Self> {
        Ok(FactoredRationalFunction {
            numerator: self.numerator.mul(p)?,
            denominator: self.denominator.clone(),
        })
    }

    pub fn mul_monomial(&self, exponent: &LatticeVector, value: &BigInt) -> Self {
        FactoredRationalFunction {
            numerator: self.numerator.mul_monomial(exponent, value),
            denominator: self.denominator.clone(),
        }
    }

    pub fn scalar_mul(&self, k: &BigInt) -> Self {
        FactoredRationalFunction {
            numerator: self.numerator.scalar_mul(k),
            denominator: self.denominator.clone(),
        }
    }

    /// Equality as rational functions: cross-multiplication of numerators
    /// against the opposite denominators. Common factors are cancelled
    /// first and single-sided denominators are handled by exact binomial
    /// division; both shortcuts are valid in an integral domain and are
    /// exercised against the literal expanded product in the tests.
    pub fn equivalent(&self, other: &Self) -> Result<bool> {
        self.check_arity(other)?;
        let mut mine = self.denominator.clone();
        let mut theirs = other.denominator.clone();
        let keys: Vec<LatticeVector> = mine.keys().cloned().collect();
        for e in keys {
            if let Some(&m_other) = theirs.get(&e) {
                let m_self = mine[&e];
                let common = m_self.min(m_other);
                if common == m_self {
                    mine.remove(&e);
                } else {
                    mine.insert(e.clone(), m_self - common);
                }
                if common == m_other {
                    theirs.remove(&e);
                } else {
                    theirs.insert(e.clone(), m_other - common);
                }
            }
        }
        let divide_out = |num: &LaurentPolynomial,
                          den: &BTreeMap<LatticeVector, usize>|
         -> Option<LaurentPolynomial> {
            let mut p = num.clone();
            for (e, &m) in den {
                for _ in 0..m {
                    p = p.div_exact_binomial(e)?;
                }
            }
            Some(p)
        };
        if theirs.is_empty() && !mine.is_empty() {
            // self.num / prod(mine) == other.num
            return Ok(match divide_out(&self.numerator, &mine) {
                Some(q) => q == other.numerator,
                None => false,
            });
        }
        if mine.is_empty() && !theirs.is_empty() {
            return Ok(match divide_out(&other.numerator, &theirs) {
                Some(q) => q == self.numerator,
                None => false,
            });
        }
        let expand = |num: &LaurentPolynomial, den: &BTreeMap<LatticeVector, usize>| {
            let mut p = num.clone();
            for (e, &m) in den {
                for _ in 0..m {
                    p = p.mul_binomial(e);
                }
            }
            p
        };
        Ok(expand(&self.numerator, &theirs) == expand(&other.numerator, &mine))
    }

    /// Substitute `q_i = 1` for every `i` in `subset`. Fails when a
    /// denominator factor is supported entirely inside the subset.
    pub fn specialize_ones(&self, subset: &[usize]) -> Result<Self> {
        let numerator = self.numerator.specialize_ones(subset)?;
        let mut out = Self::from_polynomial(numerator);
        for (e, &m) in &self.denominator {
            let collapsed = LatticeVector::new(e.coords().iter().enumerate().map(|(i, &x)| {
                if subset.contains(&i) {
                    0
                } else {
                    x
                }
            }));
            if collapsed.is_zero() {
                return Err(Error::VanishingDenominatorFactor {
                    exponent: e.clone(),
                });
            }
            out.push_factor(collapsed, m)?;
        }
        Ok(out)
    }

    /// Substitute `q_i -> 1/q_i` for every `i` in `subset`.
    pub fn invert_variables(&self, subset: &[usize]) -> Result<Self> {
        let numerator = self.numerator.invert_variables(subset)?;
        let mut out = Self::from_polynomial(numerator);
        for (e, &m) in &self.denominator {
            let flipped = LatticeVector::new(e.coords().iter().enumerate().map(|(i, &x)| {
                if subset.contains(&i) {
                    -x
                } else {
                    x
                }
            }));
            out.push_factor(flipped, m)?;
        }
        Ok(out)
    }

    /// Substitute `v -> q^shift * v` for variable `v`: numerator terms
    /// shift by their `v`-power, denominator exponents `e` move to
    /// `e + e[v] * shift`.
    pub fn substitute_var_monomial(&self, var: usize, shift: &LatticeVector) -> Result<Self> {
        let numerator = self.numerator.substitute_monomial(var, shift, 0)?;
        let mut out = Self::from_polynomial(numerator);
        for (e, &m) in &self.denominator {
            out.push_factor(e.add(&shift.scaled(e.get(var))), m)?;
        }
        Ok(out)
    }

    /// Rebuild through an exponent map (numerator terms and denominator
    /// factors alike); the map must send no denominator exponent to zero.
    pub(crate) fn transform_exponents<F>(&self, new_arity: usize, f: F) -> Result<Self>
    where
        F: Fn(&LatticeVector) -> LatticeVector,
    {
        let numerator = self.numerator.transform_exponents(new_arity, &f);
        let mut out = Self::from_polynomial(numerator);
        for (e, &m) in &self.denominator {
            out.push_factor(f(e), m)?;
        }
        Ok(out)
    }
}

/// Convenience: `1 / (1 - q^exponent)`.
pub fn geometric(exponent: LatticeVector) -> Result<FactoredRationalFunction> {
    let arity = exponent.len();
    FactoredRationalFunction::new(LaurentPolynomial::one(arity), [(exponent, 1)])
}

impl From<LaurentPolynomial> for FactoredRationalFunction {
    fn from(p: LaurentPolynomial) -> Self {
        Self::from_polynomial(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::vec_i;
    use num_traits::Zero;

    fn mono(e: &[i64], c: i64) -> LaurentPolynomial {
        LaurentPolynomial::monomial(vec_i(e), BigInt::from(c))
    }

    fn one_over(e: &[i64]) -> FactoredRationalFunction {
        geometric(vec_i(e)).unwrap()
    }

    #[test]
    fn telescoping_sum_is_one() {
        // 1/(1-q) + (-q)/(1-q) = 1
        let a = one_over(&[1]);
        let b = FactoredRationalFunction::new(mono(&[1], -1), [(vec_i(&[1]), 1)]).unwrap();
        let sum = a.add(&b).unwrap();
        assert!(sum.equivalent(&FactoredRationalFunction::one(1)).unwrap());
    }

    #[test]
    fn equivalence_sees_through_unreduced_denominators() {
        // 1/(1-q) == (1+q)/(1-q^2)
        let lhs = one_over(&[1]);
        let rhs = FactoredRationalFunction::new(
            mono(&[0], 1).add(&mono(&[1], 1)).unwrap(),
            [(vec_i(&[2]), 1)],
        )
        .unwrap();
        assert!(lhs.equivalent(&rhs).unwrap());
        assert!(!lhs.equivalent(&one_over(&[2])).unwrap());
    }

    #[test]
    fn zero_numerators_are_equal_whatever_the_denominator() {
        let a = FactoredRationalFunction::zero(1);
        let b =
            FactoredRationalFunction::new(LaurentPolynomial::zero(1), [(vec_i(&[1]), 2)]).unwrap();
        assert!(a.equivalent(&b).unwrap());
        assert!(b.is_zero());
    }

    #[test]
    fn orientation_flip_preserves_the_value() {
        // 1/(1-q^{-1}) built raw must equal -q/(1-q)
        let flipped = one_over(&[-1]);
        let direct = FactoredRationalFunction::new(mono(&[1], -1), [(vec_i(&[1]), 1)]).unwrap();
        assert!(flipped.equivalent(&direct).unwrap());
        // and the stored factor is canonical
        assert_eq!(flipped.denominator()[0].exponent, vec_i(&[1]));
    }

    #[test]
    fn zero_exponent_factor_is_rejected() {
        let err = FactoredRationalFunction::new(LaurentPolynomial::one(2), [(vec_i(&[0, 0]), 1)])
            .unwrap_err();
        assert_eq!(err, Error::ZeroExponentFactor);
    }

    #[test]
    fn addition_takes_the_multiset_union() {
        // 1/(1-q)^2 + 1/((1-q)(1-q^2)): union is (1-q)^2 (1-q^2)
        let a =
            FactoredRationalFunction::new(LaurentPolynomial::one(1), [(vec_i(&[1]), 2)]).unwrap();
        let b = FactoredRationalFunction::new(
            LaurentPolynomial::one(1),
            [(vec_i(&[1]), 1), (vec_i(&[2]), 1)],
        )
        .unwrap();
        let sum = a.add(&b).unwrap();
        let factors = sum.denominator();
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0].multiplicity, 2);
        assert_eq!(factors[1].multiplicity, 1);
    }

    #[test]
    fn specialize_ones_collapses_components() {
        // 1/((1-q1 t)(1-q2 t)) at q=1 -> 1/(1-t)^2   [arity kept, (q1,q2,t)]
        let r = FactoredRationalFunction::new(
            LaurentPolynomial::one(3),
            [(vec_i(&[1, 0, 1]), 1), (vec_i(&[0, 1, 1]), 1)],
        )
        .unwrap();
        let s = r.specialize_ones(&[0, 1]).unwrap();
        let expect =
            FactoredRationalFunction::new(LaurentPolynomial::one(3), [(vec_i(&[0, 0, 1]), 2)])
                .unwrap();
        assert!(s.equivalent(&expect).unwrap());
    }

    #[test]
    fn specialize_ones_rejects_vanishing_factors() {
        let r = one_over(&[1]);
        assert_eq!(
            r.specialize_ones(&[0]).unwrap_err(),
            Error::VanishingDenominatorFactor {
                exponent: vec_i(&[1])
            }
        );
    }

    #[test]
    fn inversion_canonicalizes_back() {
        // (1/(1-q)) under q -> 1/q equals -q/(1-q)... check against the
        // geometric identity sigma_{Z>=0}(1/q) = 1/(1-q^{-1})
        let r = one_over(&[1]);
        let inv = r.invert_variables(&[0]).unwrap();
        let expect = FactoredRationalFunction::new(mono(&[1], -1), [(vec_i(&[1]), 1)]).unwrap();
        assert!(inv.equivalent(&expect).unwrap());
    }

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
        let n_terms = rng.range(0, 4);
        let mut p = LaurentPolynomial::zero(arity);
        for _ in 0..n_terms {
            let e = LatticeVector::new((0..arity).map(|_| rng.range(-2, 2)));
            p = p
                .add(&LaurentPolynomial::monomial(
                    e,
                    BigInt::from(rng.range(-3, 3)),
                ))
                .unwrap();
        }
        p
    }

    fn random_factor(rng: &mut Rng, arity: usize) -> LatticeVector {
        loop {
            let e = LatticeVector::new((0..arity).map(|_| rng.range(-2, 2)));
            if !e.is_zero() {
                return e;
            }
        }
    }

    fn random_rational(rng: &mut Rng, arity: usize) -> FactoredRationalFunction {
        let n_factors = rng.range(0, 3);
        let factors: Vec<(LatticeVector, usize)> = (0..n_factors)
            .map(|_| (random_factor(rng, arity), rng.range(1, 2) as usize))
            .collect();
        FactoredRationalFunction::new(random_poly(rng, arity), factors).unwrap()
    }

    /// Literal cross-multiplication, no shortcuts: the reference
    /// semantics for `equivalent`.
    fn equivalent_by_full_expansion(
        a: &FactoredRationalFunction,
        b: &FactoredRationalFunction,
    ) -> bool {
        let lhs = a.numerator().mul(&b.denominator_polynomial()).unwrap();
        let rhs = b.numerator().mul(&a.denominator_polynomial()).unwrap();
        lhs == rhs
    }

    #[test]
    fn equivalent_matches_the_literal_cross_multiplication() {
        let mut rng = Rng(0x00c0_ffee_1111_2222);
        for _ in 0..80 {
            let a = random_rational(&mut rng, 2);
            let b = random_rational(&mut rng, 2);
            assert_eq!(
                a.equivalent(&b).unwrap(),
                equivalent_by_full_expansion(&a, &b)
            );
            // and every function equals itself
            assert!(a.equivalent(&a).unwrap());
        }
    }

    #[test]
    fn equivalence_is_a_congruence_for_add_and_mul() {
        let mut rng = Rng(0xdead_0000_beef_1111);
        for _ in 0..40 {
            let a = random_rational(&mut rng, 2);
            let c = random_rational(&mut rng, 2);
            // a' = a expanded by a junk factor: same value, different shape
            let junk = random_factor(&mut rng, 2);
            let a_prime = FactoredRationalFunction::new(
                a.numerator().mul_binomial(&junk),
                a.denominator()
                    .into_iter()
                    .map(|f| (f.exponent, f.multiplicity))
                    .chain([(junk.clone(), 1)]),
            )
            .unwrap();
            assert!(a.equivalent(&a_prime).unwrap());
            assert!(a
                .add(&c)
                .unwrap()
                .equivalent(&a_prime.add(&c).unwrap())
                .unwrap());
            assert!(a
                .mul(&c)
                .unwrap()
                .equivalent(&a_prime.mul(&c).unwrap())
                .unwrap());
            assert!(a.neg().equivalent(&a_prime.neg()).unwrap());
        }
    }

    #[test]
    fn sub_of_equal_values_is_zero() {
        let r = FactoredRationalFunction::new(
            mono(&[0, 0], 1).add(&mono(&[1, 1], 1)).unwrap(),
            [(vec_i(&[1, 0]), 1), (vec_i(&[0, 1]), 1)],
        )
        .unwrap();
        let d = r.sub(&r).unwrap();
        assert!(d.equivalent(&FactoredRationalFunction::zero(2)).unwrap());
        assert!(d.numerator().coefficient(&vec_i(&[0, 0])).is_zero());
    }
}
