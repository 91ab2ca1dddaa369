//! Multibasic Ehrhart series, δ-vectors, and Ehrhart polynomials.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::cone::{cone_over_generators, vertex_cone_generators};
use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use crate::laurent::LaurentPolynomial;
use crate::oracle;
use crate::polytope::Polytope;
use crate::rational::FactoredRationalFunction;
use crate::transform::sigma_pointed;

/// The q-integer `[n]_q` in variable `var`: for `n >= 0` the sum
/// `1 + q + ... + q^{n-1}`, for negative `n` the Laurent tail
/// `-(q^{-1} + q^{-2} + ... + q^{n})`.
pub fn q_integer(arity: usize, var: usize, n: i64) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::zero(arity);
    if n >= 0 {
        for k in 0..n {
            out = out
                .add(&LaurentPolynomial::monomial(
                    LatticeVector::unit(arity, var).scaled(k),
                    BigInt::from(1),
                ))
                .expect("arity is consistent");
        }
    } else {
        for k in 1..=(-n) {
            out = out
                .add(&LaurentPolynomial::monomial(
                    LatticeVector::unit(arity, var).scaled(-k),
                    BigInt::from(-1),
                ))
                .expect("arity is consistent");
        }
    }
    out
}

/// The multibasic Ehrhart series of a lattice polytope, stored against
/// its canonical denominator `Π_i (1 - q^{v_i} t)`:
///
/// ```text
/// Ehr_P(t; q) = Σ_{n≥0} σ_{nP}(q) t^n = (Σ_k δ_k(q) t^k) / Π_i (1 - q^{v_i} t)
/// ```
///
/// with one factor per vertex and a numerator of `t`-degree below the
/// vertex count. Variables are `q_1, ..., q_N` and then `t` last.
#[derive(Clone, Debug)]
pub struct MultibasicEhrhartSeries {
    polytope: Polytope,
    numerator: LaurentPolynomial,
}

impl MultibasicEhrhartSeries {
    pub fn new(p: &Polytope) -> Result<MultibasicEhrhartSeries> {
        let ambient = p.ambient_dim();
        let arity = ambient + 1;
        let gens = cone_over_generators(p);
        let origin = LatticeVector::zeros(arity);
        let raw = sigma_pointed(arity, &origin, &gens)?;
        // the computed transform sits over the canonicalized factors; the
        // series form wants exactly 1 - q^{v_i} t per vertex, and flipping
        // a factor back costs a -q^{(v_i,1)} in the numerator
        let mut expected: BTreeMap<LatticeVector, usize> = BTreeMap::new();
        let mut numerator = raw.numerator().clone();
        for v in p.vertices() {
            let g = v.extended(1);
            if g.is_lex_positive() {
                *expected.entry(g).or_insert(0) += 1;
            } else {
                numerator = numerator.mul_monomial(&g, &BigInt::from(-1));
                *expected.entry(g.neg()).or_insert(0) += 1;
            }
        }
        let actual: BTreeMap<LatticeVector, usize> = raw
            .denominator()
            .into_iter()
            .map(|f| (f.exponent, f.multiplicity))
            .collect();
        assert_eq!(
            actual, expected,
            "every vertex ray is extreme in the cone over P"
        );
        assert_eq!(
            numerator.coefficient(&LatticeVector::zeros(arity)),
            BigInt::from(1),
            "constant numerator coefficient"
        );
        let m = i64::try_from(p.vertex_count()).expect("vertex count fits");
        let t_degree = numerator
            .max_var_degree(ambient)?
            .expect("numerator is nonzero");
        assert!(
            t_degree < m,
            "numerator t-degree stays below the vertex count"
        );
        assert!(
            numerator.terms().all(|(e, _)| e.get(ambient) >= 0),
            "numerator holds no negative t-powers"
        );
        Ok(MultibasicEhrhartSeries {
            polytope: p.clone(),
            numerator,
        })
    }

    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    /// Number of variables including the dilation variable `t`.
    pub fn arity(&self) -> usize {
        self.polytope.ambient_dim() + 1
    }

    /// Index of the dilation variable.
    pub fn t_var(&self) -> usize {
        self.polytope.ambient_dim()
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.numerator
    }

    /// Denominator exponents `(v_i, 1)`, one per vertex in input order.
    pub fn denominator_exponents(&self) -> Vec<LatticeVector> {
        self.polytope
            .vertices()
            .iter()
            .map(|v| v.extended(1))
            .collect()
    }

    /// The series as a factored rational function.
    pub fn as_rational(&self) -> FactoredRationalFunction {
        FactoredRationalFunction::new(
            self.numerator.clone(),
            self.denominator_exponents().into_iter().map(|g| (g, 1)),
        )
        .expect("vertex rays are nonzero")
    }

    /// The multibasic δ-vector: numerator coefficients by `t`-power, one
    /// entry per vertex (trailing entries may be zero).
    pub fn delta_vector(&self) -> Vec<LaurentPolynomial> {
        (0..self.polytope.vertex_count())
            .map(|k| {
                self.numerator
                    .coefficient_of_var_power(self.t_var(), k as i64)
                    .expect("t is a valid variable")
            })
            .collect()
    }

    /// `σ_{nP}(q)`: the coefficient of `t^n`, extracted from the
    /// truncated expansion.
    pub fn dilate_transform(&self, n: i64) -> Result<LaurentPolynomial> {
        assert!(n >= 0);
        let expanded = oracle::expand_truncated(&self.as_rational(), n)?;
        expanded.coefficient_of_var_power(self.t_var(), n)
    }

    /// What the translation law predicts for the series of `P + shift`:
    /// substitute `t -> q^shift t`.
    pub fn translation_image(&self, shift: &LatticeVector) -> Result<FactoredRationalFunction> {
        assert_eq!(shift.len(), self.polytope.ambient_dim());
        self.as_rational()
            .substitute_var_monomial(self.t_var(), &shift.extended(0))
    }

    /// Classical Ehrhart series: every `q_i` set to 1, leaving a rational
    /// function of `t` alone (still stored at full arity, with the `q`
    /// exponents zeroed).
    pub fn specialize_classical(&self) -> Result<FactoredRationalFunction> {
        let qs: Vec<usize> = (0..self.polytope.ambient_dim()).collect();
        self.as_rational().specialize_ones(&qs)
    }

    /// q-analogue specialization along an integer linear form: substitute
    /// `q_i -> q^{λ_i}`, collapsing to two variables `(q, t)`. The linear
    /// form must separate the vertices — `<λ, v_i>` pairwise distinct —
    /// so that the denominator keeps one honest factor per vertex.
    pub fn specialize_q_ehrhart(&self, lambda: &[i64]) -> Result<FactoredRationalFunction> {
        let vertices = self.polytope.vertices();
        let lam = LatticeVector::new(lambda.iter().copied());
        assert_eq!(lam.len(), self.polytope.ambient_dim());
        let mut seen: BTreeMap<i64, usize> = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            let value = lam.dot(v);
            if let Some(&first) = seen.get(&value) {
                return Err(Error::NonGenericLinearForm { first, second: i });
            }
            seen.insert(value, i);
        }
        substitute_q_powers(&self.as_rational(), lambda)
    }
}

/// Substitute `q_i -> q^{λ_i}` in a rational function whose variables are
/// `q_1, ..., q_N, t`, producing a function of `(q, t)`. No genericity
/// check: exponents are mapped wherever they land.
pub fn substitute_q_powers(
    r: &FactoredRationalFunction,
    lambda: &[i64],
) -> Result<FactoredRationalFunction> {
    let arity = r.arity();
    assert!(
        arity == lambda.len() + 1,
        "lambda must cover every q variable"
    );
    let lam = LatticeVector::new(lambda.iter().copied());
    r.transform_exponents(2, |e| {
        let q_part: i64 = (0..lambda.len())
            .map(|k| {
                lam.get(k)
                    .checked_mul(e.get(k))
                    .expect("lattice coordinate overflow")
            })
            .try_fold(0i64, |a, b| a.checked_add(b))
            .expect("lattice coordinate overflow");
        LatticeVector::new([q_part, e.get(arity - 1)])
    })
}

/// The multibasic Ehrhart polynomial of a polytope inside the
/// nonnegative orthant:
///
/// ```text
/// L_P(x) = Σ_i σ_{C_i}(q) Π_k (1 + q_k x_k - x_k)^{v_{ik}}
/// ```
///
/// summed over vertices, where `C_i` is the cone of feasible directions
/// at `v_i` moved to the origin. Substituting the q-integers
/// `x_k = [n]_{q_k}` returns `σ_{nP}(q)` for every integer `n`.
#[derive(Clone, Debug)]
pub struct MultibasicEhrhartPolynomial {
    polytope: Polytope,
    vertex_terms: Vec<FactoredRationalFunction>,
}

impl MultibasicEhrhartPolynomial {
    pub fn new(p: &Polytope) -> Result<MultibasicEhrhartPolynomial> {
        if let Some(vertex) = p.orthant_violation() {
            return Err(Error::NegativeOrthantViolation { vertex });
        }
        let ambient = p.ambient_dim();
        let origin = LatticeVector::zeros(ambient);
        let mut vertex_terms = Vec::with_capacity(p.vertex_count());
        let mut constant = FactoredRationalFunction::zero(ambient);
        for i in 0..p.vertex_count() {
            let gens = vertex_cone_generators(p, i);
            let sigma = sigma_pointed(ambient, &origin, &gens)?;
            constant = constant.add(&sigma)?;
            vertex_terms.push(sigma);
        }
        assert!(
            constant.equivalent(&FactoredRationalFunction::one(ambient))?,
            "the constant part — the vertex-cone transform sum — is one"
        );
        Ok(MultibasicEhrhartPolynomial {
            polytope: p.clone(),
            vertex_terms,
        })
    }

    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    /// Vertex-cone transforms `σ_{C_i}(q)` in vertex order.
    pub fn vertex_terms(&self) -> &[FactoredRationalFunction] {
        &self.vertex_terms
    }

    /// Total degree in the `x` variables: the largest coordinate sum over
    /// the vertices.
    pub fn total_degree(&self) -> i64 {
        self.polytope
            .vertices()
            .iter()
            .map(LatticeVector::total)
            .max()
            .expect("a polytope has vertices")
    }

    /// Expanded coefficients: for each monomial `x^J` the rational
    /// function `Σ_i σ_{C_i}(q) Π_k C(v_{ik}, J_k) (q_k - 1)^{J_k}`.
    pub fn coefficients(&self) -> Result<BTreeMap<LatticeVector, FactoredRationalFunction>> {
        let ambient = self.polytope.ambient_dim();
        let mut out: BTreeMap<LatticeVector, FactoredRationalFunction> = BTreeMap::new();
        for (v, sigma) in self.polytope.vertices().iter().zip(&self.vertex_terms) {
            for (exp, coeff) in product_expansion(ambient, v)? {
                if coeff.is_zero() {
                    continue;
                }
                let term = sigma.mul_polynomial(&coeff)?;
                match out.remove(&exp) {
                    Some(existing) => {
                        let sum = existing.add(&term)?;
                        out.insert(exp, sum);
                    }
                    None => {
                        out.insert(exp, term);
                    }
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    /// `L_P([n]_{q_1}, ..., [n]_{q_N})` through the power identity
    /// `1 + (q - 1)[n]_q = q^n`: each vertex contributes
    /// `σ_{C_i}(q) q^{n v_i}`. Valid for every integer `n`, negative
    /// included.
    pub fn evaluate_at_q_integers(&self, n: i64) -> Result<FactoredRationalFunction> {
        let ambient = self.polytope.ambient_dim();
        let mut total = FactoredRationalFunction::zero(ambient);
        for (v, sigma) in self.polytope.vertices().iter().zip(&self.vertex_terms) {
            let shift = v.scaled(n);
            total = total.add(&sigma.mul_monomial(&shift, &BigInt::from(1)))?;
        }
        Ok(total)
    }

    /// The same value computed the literal way: substitute the q-integer
    /// Laurent polynomials into the product form, no shortcuts.
    pub fn evaluate_by_substitution(&self, n: i64) -> Result<FactoredRationalFunction> {
        let ambient = self.polytope.ambient_dim();
        let mut bases = Vec::with_capacity(ambient);
        for k in 0..ambient {
            // 1 + (q_k - 1) [n]_{q_k}
            let qk = LaurentPolynomial::monomial(LatticeVector::unit(ambient, k), BigInt::from(1));
            let base = LaurentPolynomial::one(ambient).add(
                &qk.sub(&LaurentPolynomial::one(ambient))?
                    .mul(&q_integer(ambient, k, n))?,
            )?;
            bases.push(base);
        }
        let mut total = FactoredRationalFunction::zero(ambient);
        for (v, sigma) in self.polytope.vertices().iter().zip(&self.vertex_terms) {
            let mut term = sigma.clone();
            for (k, base) in bases.iter().enumerate() {
                for _ in 0..v.get(k) {
                    term = term.mul_polynomial(base)?;
                }
            }
            total = total.add(&term)?;
        }
        Ok(total)
    }
}

/// Binomial expansion of `Π_k (1 + q_k x_k - x_k)^{e_k}` as pairs of an
/// `x`-exponent and its Laurent coefficient `Π_k C(e_k, j_k)(q_k - 1)^{j_k}`.
/// Exponents must be nonnegative.
fn product_expansion(
    ambient: usize,
    exponents: &LatticeVector,
) -> Result<Vec<(LatticeVector, LaurentPolynomial)>> {
    assert!(exponents.coords().iter().all(|&e| e >= 0));
    let mut expansion: Vec<(LatticeVector, LaurentPolynomial)> = vec![(
        LatticeVector::zeros(ambient),
        LaurentPolynomial::one(ambient),
    )];
    for k in 0..ambient {
        let ek = exponents.get(k);
        let q_minus_one =
            LaurentPolynomial::monomial(LatticeVector::unit(ambient, k), BigInt::from(1))
                .sub(&LaurentPolynomial::one(ambient))?;
        let mut binomial = BigInt::from(1);
        let mut power = LaurentPolynomial::one(ambient);
        let mut next = Vec::new();
        for j in 0..=ek {
            let weight = power.scalar_mul(&binomial);
            for (exp, coeff) in &expansion {
                next.push((
                    exp.add(&LatticeVector::unit(ambient, k).scaled(j)),
                    coeff.mul(&weight)?,
                ));
            }
            // C(ek, j+1) = C(ek, j) (ek - j) / (j + 1)
            binomial = binomial * BigInt::from(ek - j) / BigInt::from(j + 1);
            power = power.mul(&q_minus_one)?;
        }
        expansion = next;
    }
    Ok(expansion)
}

/// `σ_{(nP)°}(q)` over the relative interior of the `n`-th dilate, by
/// direct enumeration — the interior series has no closed form here,
/// only truncations.
pub fn interior_dilate_transform(p: &Polytope, n: i64) -> LaurentPolynomial {
    oracle::sigma_of_points(p.ambient_dim(), &oracle::enumerate_dilate_interior(p, n))
}

/// `1 + (q - 1)[n]_q = q^n` for every integer `n` — the identity that
/// collapses the product form at q-integer arguments.
pub fn q_integer_power_identity_holds(n: i64) -> bool {
    let q = LaurentPolynomial::monomial(LatticeVector::new([1]), BigInt::from(1));
    let lhs = LaurentPolynomial::one(1)
        .add(
            &q.sub(&LaurentPolynomial::one(1))
                .unwrap()
                .mul(&q_integer(1, 0, n))
                .unwrap(),
        )
        .unwrap();
    let rhs = LaurentPolynomial::monomial(LatticeVector::new([n]), BigInt::from(1));
    lhs == rhs
}

/// Lemma behind the polynomial's constant term: the vertex-cone
/// transforms of any lattice polytope sum to the constant 1.
pub fn vertex_cone_sum_is_one(p: &Polytope) -> Result<bool> {
    let ambient = p.ambient_dim();
    let origin = LatticeVector::zeros(ambient);
    let mut total = FactoredRationalFunction::zero(ambient);
    for i in 0..p.vertex_count() {
        let gens = vertex_cone_generators(p, i);
        total = total.add(&sigma_pointed(ambient, &origin, &gens)?)?;
    }
    total.equivalent(&FactoredRationalFunction::one(ambient))
}

/// Bilateral cancellation: the two one-sided geometric series of a ray
/// annihilate, `1/(1 - q^{-a}) + q^a/(1 - q^a) = 0`.
pub fn bilateral_cancellation_holds(exponent: &LatticeVector) -> Result<bool> {
    let left = crate::rational::geometric(exponent.neg())?;
    let right =
        crate::rational::geometric(exponent.clone())?.mul_monomial(exponent, &BigInt::from(1));
    left.add(&right)?
        .equivalent(&FactoredRationalFunction::zero(exponent.len()))
}

/// Ehrhart reciprocity at dilation `n`: evaluating the polynomial at the
/// negative q-integers `[-n]_q` recovers the interior transform,
/// `L_P([-n]_q) = (-1)^{dim P} σ_{(nP)°}(1/q)`. The right-hand side is
/// taken from brute-force relative-interior enumeration.
pub fn reciprocity_holds(poly: &MultibasicEhrhartPolynomial, n: i64) -> Result<bool> {
    assert!(n >= 1);
    let p = poly.polytope();
    let ambient = p.ambient_dim();
    let lhs = poly.evaluate_at_q_integers(-n)?;
    let interior = interior_dilate_transform(p, n);
    let all: Vec<usize> = (0..ambient).collect();
    let inverted = interior.invert_variables(&all)?;
    let sign = if p.dim() % 2 == 0 { 1 } else { -1 };
    let rhs = FactoredRationalFunction::from(inverted.scalar_mul(&BigInt::from(sign)));
    lhs.equivalent(&rhs)
}

/// Polytope-level reciprocity check: builds the polynomial and compares
/// both sides at dilation `n`.
pub fn reciprocity_check(p: &Polytope, n: i64) -> Result<bool> {
    reciprocity_holds(&MultibasicEhrhartPolynomial::new(p)?, n)
}

/// The formal identity behind the bilateral series cancellation, one
/// instance per vertex ray `(v_i, 1)`:
/// `1/(1 - q^{-v_i} t^{-1}) + q^{v_i} t/(1 - q^{v_i} t) = 0`.
pub fn bilateral_cancellation_check(p: &Polytope) -> Result<bool> {
    for v in p.vertices() {
        if !bilateral_cancellation_holds(&v.extended(1))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Check the series against dilation-by-dilation brute force up to and
/// including `bound`.
pub fn series_matches_counts(series: &MultibasicEhrhartSeries, bound: i64) -> Result<bool> {
    let p = series.polytope();
    let ambient = p.ambient_dim();
    let expanded = oracle::expand_truncated(&series.as_rational(), bound)?;
    for n in 0..=bound {
        let slice = expanded.coefficient_of_var_power(series.t_var(), n)?;
        let direct = oracle::sigma_of_points(ambient, &oracle::enumerate_dilate(p, n));
        if slice != direct {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Check the classical specialization against plain lattice-point counts
/// up to and including `bound`.
pub fn classical_specialization_matches_counts(
    series: &MultibasicEhrhartSeries,
    bound: i64,
) -> Result<bool> {
    let classical = series.specialize_classical()?;
    let expanded = oracle::expand_truncated(&classical, bound)?;
    for n in 0..=bound {
        let slice = expanded.coefficient_of_var_power(series.t_var(), n)?;
        let count = oracle::enumerate_dilate(series.polytope(), n).len();
        let expect =
            LaurentPolynomial::constant(series.polytope().ambient_dim(), BigInt::from(count));
        if slice != expect {
            return Ok(false);
        }
    }
    Ok(true)
}

/// δ-vector invariants: δ_0 = 1 and δ_1 = σ_P - Σ_i q^{v_i}.
pub fn delta_invariants_hold(series: &MultibasicEhrhartSeries) -> Result<bool> {
    let p = series.polytope();
    let ambient = p.ambient_dim();
    let delta = series.delta_vector();
    if delta[0] != LaurentPolynomial::one(ambient) {
        return Ok(false);
    }
    if p.vertex_count() >= 2 {
        let sigma_p = oracle::sigma_of_points(ambient, &oracle::enumerate_dilate(p, 1));
        let mut corner_sum = LaurentPolynomial::zero(ambient);
        for v in p.vertices() {
            corner_sum =
                corner_sum.add(&LaurentPolynomial::monomial(v.clone(), BigInt::from(1)))?;
        }
        if delta[1] != sigma_p.sub(&corner_sum)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Translation law on the series: `Ehr_{P+w}(t; q) = Ehr_P(q^w t; q)`.
pub fn translation_series_law_holds(
    series: &MultibasicEhrhartSeries,
    shift: &LatticeVector,
) -> Result<bool> {
    let translated = MultibasicEhrhartSeries::new(&series.polytope().translate(shift))?;
    translated
        .as_rational()
        .equivalent(&series.translation_image(shift)?)
}

/// Translation law on the δ-vector: `δ_k` picks up `q^{k w}`.
pub fn translation_delta_law_holds(
    series: &MultibasicEhrhartSeries,
    shift: &LatticeVector,
) -> Result<bool> {
    let translated = MultibasicEhrhartSeries::new(&series.polytope().translate(shift))?;
    let before = series.delta_vector();
    let after = translated.delta_vector();
    for (k, (b, a)) in before.iter().zip(&after).enumerate() {
        let moved = b.mul_monomial(&shift.scaled(k as i64), &BigInt::from(1));
        if moved != *a {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Translation law on the polynomial:
/// `L_{P+w}(x) = L_P(x) Π_k (1 + q_k x_k - x_k)^{w_k}` for a nonnegative
/// shift keeping the polytope in the orthant, compared coefficient by
/// coefficient.
pub fn translation_polynomial_law_holds(p: &Polytope, shift: &LatticeVector) -> Result<bool> {
    assert!(
        shift.coords().iter().all(|&w| w >= 0),
        "shift must stay in the orthant"
    );
    let ambient = p.ambient_dim();
    let lhs = MultibasicEhrhartPolynomial::new(&p.translate(shift))?.coefficients()?;
    let base = MultibasicEhrhartPolynomial::new(p)?.coefficients()?;
    let expansion = product_expansion(ambient, shift)?;
    let mut rhs: BTreeMap<LatticeVector, FactoredRationalFunction> = BTreeMap::new();
    for (j, c) in &base {
        for (k, w) in &expansion {
            let exp = j.add(k);
            let term = c.mul_polynomial(w)?;
            match rhs.remove(&exp) {
                Some(existing) => {
                    rhs.insert(exp, existing.add(&term)?);
                }
                None => {
                    rhs.insert(exp, term);
                }
            }
        }
    }
    rhs.retain(|_, c| !c.is_zero());
    if lhs.len() != rhs.len() {
        return Ok(false);
    }
    for (exp, c) in &lhs {
        match rhs.get(exp) {
            Some(other) if c.equivalent(other)? => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// `[n]_q = (1 - q^n)/(1 - q)` as a rational-function identity, negative
/// `n` included.
pub fn q_integer_fraction_identity_holds(n: i64) -> Result<bool> {
    let as_laurent = FactoredRationalFunction::from(q_integer(1, 0, n));
    let one_minus_qn = LaurentPolynomial::one(1).sub(&LaurentPolynomial::monomial(
        LatticeVector::new([n]),
        BigInt::from(1),
    ))?;
    let fraction = FactoredRationalFunction::new(one_minus_qn, [(LatticeVector::new([1]), 1)])?;
    as_laurent.equivalent(&fraction)
}
