//! Command execution: turns a polytope plus command parameters into a
//! rendered document (canonical JSON or pretty text) and a success flag.
//! This is the whole CLI except argument parsing, kept in the library so
//! the battery and the documents are callable and testable directly.

use num_bigint::BigInt;

use crate::cone::vertex_cone_generators;
use crate::ehrhart::{
    bilateral_cancellation_check, classical_specialization_matches_counts, delta_invariants_hold,
    interior_dilate_transform, q_integer_fraction_identity_holds, q_integer_power_identity_holds,
    reciprocity_holds, series_matches_counts, translation_delta_law_holds,
    translation_polynomial_law_holds, translation_series_law_holds, vertex_cone_sum_is_one,
    MultibasicEhrhartPolynomial, MultibasicEhrhartSeries,
};
use crate::error::Result;
use crate::json::{
    CheckDoc, DeltaDoc, EvalDoc, LaurentDoc, PolynomialDoc, RationalDoc, ReciprocityDoc, SeriesDoc,
    SpecializeDoc, VerifyDoc, VertexTermDoc,
};
use crate::lattice::LatticeVector;
use crate::oracle;
use crate::polytope::Polytope;
use crate::pretty;
use crate::rational::FactoredRationalFunction;
use crate::transform::{brion_sum, stanley_reciprocity_holds};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Pretty,
}

/// Rendered output plus the process-level verdict (false means the run
/// completed but a checked identity failed, and the exit code should be
/// nonzero).
pub struct JobOutput {
    pub text: String,
    pub success: bool,
}

fn json_text<T: serde::Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("documents serialize");
    text.push('\n');
    text
}

pub fn series_document(p: &Polytope) -> Result<SeriesDoc> {
    let series = MultibasicEhrhartSeries::new(p)?;
    Ok(SeriesDoc {
        ambient_dim: p.ambient_dim(),
        vertices: p.vertices().iter().map(|v| v.coords().to_vec()).collect(),
        numerator: LaurentDoc::of(series.numerator()),
        denominator_exponents: series
            .denominator_exponents()
            .iter()
            .map(|e| e.coords().to_vec())
            .collect(),
    })
}

pub fn run_series(p: &Polytope, format: OutputFormat) -> Result<JobOutput> {
    let doc = series_document(p)?;
    let text = match format {
        OutputFormat::Json => json_text(&doc),
        OutputFormat::Pretty => {
            let series = MultibasicEhrhartSeries::new(p)?;
            let names = pretty::qt_names(p.ambient_dim());
            let vertices: Vec<String> = p.vertices().iter().map(|v| format!("{v:?}")).collect();
            format!(
                "multibasic Ehrhart series Ehr_P(t; q)\n  vertices: {}\n  Ehr = {}\n",
                vertices.join(" "),
                pretty::rational(&series.as_rational(), &names),
            )
        }
    };
    Ok(JobOutput {
        text,
        success: true,
    })
}

pub fn delta_document(p: &Polytope) -> Result<DeltaDoc> {
    let series = MultibasicEhrhartSeries::new(p)?;
    assert!(
        delta_invariants_hold(&series)?,
        "delta-vector invariants: delta_0 = 1 and delta_1 = sigma_P - sum of q^v"
    );
    Ok(DeltaDoc {
        ambient_dim: p.ambient_dim(),
        entries: series.delta_vector().iter().map(LaurentDoc::of).collect(),
    })
}

pub fn run_delta(p: &Polytope, format: OutputFormat) -> Result<JobOutput> {
    let doc = delta_document(p)?;
    let text = match format {
        OutputFormat::Json => json_text(&doc),
        OutputFormat::Pretty => {
            let series = MultibasicEhrhartSeries::new(p)?;
            let names = pretty::q_names(p.ambient_dim());
            let mut out = String::from("multibasic delta-vector\n");
            for (k, entry) in series.delta_vector().iter().enumerate() {
                out.push_str(&format!(
                    "  delta_{k} = {}\n",
                    pretty::laurent(entry, &names)
                ));
            }
            out
        }
    };
    Ok(JobOutput {
        text,
        success: true,
    })
}

pub fn polynomial_document(p: &Polytope) -> Result<PolynomialDoc> {
    let poly = MultibasicEhrhartPolynomial::new(p)?;
    Ok(PolynomialDoc {
        ambient_dim: p.ambient_dim(),
        total_degree: poly.total_degree(),
        vertex_terms: p
            .vertices()
            .iter()
            .zip(poly.vertex_terms())
            .map(|(v, sigma)| VertexTermDoc {
                vertex: v.coords().to_vec(),
                sigma: RationalDoc::of(sigma),
            })
            .collect(),
        coefficients: poly
            .coefficients()?
            .iter()
            .map(|(e, c)| (e.coords().to_vec(), RationalDoc::of(c)))
            .collect(),
    })
}

pub fn run_poly(p: &Polytope, format: OutputFormat) -> Result<JobOutput> {
    let doc = polynomial_document(p)?;
    let text = match format {
        OutputFormat::Json => json_text(&doc),
        OutputFormat::Pretty => {
            let poly = MultibasicEhrhartPolynomial::new(p)?;
            let q = pretty::q_names(p.ambient_dim());
            let x = pretty::x_names(p.ambient_dim());
            let mut out = format!(
                "multibasic Ehrhart polynomial L_P(x), total degree {}\n\
                 L_P = sum over vertices v of sigma_v(q) * prod_k (1 + q_k*x_k - x_k)^(v_k)\n",
                poly.total_degree()
            );
            for (v, sigma) in p.vertices().iter().zip(poly.vertex_terms()) {
                out.push_str(&format!(
                    "  vertex {v:?}: sigma = {}\n",
                    pretty::rational(sigma, &q)
                ));
            }
            out.push_str("expanded coefficients:\n");
            for (e, c) in poly.coefficients()? {
                let monomial = pretty::power_product(&e, &x);
                let label = if monomial.is_empty() {
                    "1".to_string()
                } else {
                    monomial
                };
                out.push_str(&format!("  {label}: {}\n", pretty::rational(&c, &q)));
            }
            out
        }
    };
    Ok(JobOutput {
        text,
        success: true,
    })
}

/// `σ_{nP}(q)` (or its relative-interior variant), with an independent
/// brute-force comparison when one exists. The closed value comes from
/// the Ehrhart polynomial when the polytope sits in the nonnegative
/// orthant and from the truncated series expansion otherwise; for the
/// interior the enumeration itself is the value and the cross-check is
/// the reciprocity prediction `(-1)^d L_P([-n]_q)` at `q -> 1/q`.
pub fn eval_document(p: &Polytope, n: i64, interior: bool) -> Result<EvalDoc> {
    let ambient = p.ambient_dim();
    let in_orthant = p.orthant_violation().is_none();
    if interior {
        assert!(n >= 1, "interior evaluation needs n >= 1");
        let value = FactoredRationalFunction::from(interior_dilate_transform(p, n));
        let oracle_agrees = if in_orthant {
            let poly = MultibasicEhrhartPolynomial::new(p)?;
            let all: Vec<usize> = (0..ambient).collect();
            let lhs = poly.evaluate_at_q_integers(-n)?.invert_variables(&all)?;
            let sign = if p.dim() % 2 == 0 { 1 } else { -1 };
            Some(lhs.scalar_mul(&BigInt::from(sign)).equivalent(&value)?)
        } else {
            None
        };
        return Ok(EvalDoc {
            n,
            interior,
            value: RationalDoc::of(&value),
            oracle_agrees,
        });
    }
    assert!(n >= 0, "dilation must be nonnegative");
    let value = if in_orthant {
        MultibasicEhrhartPolynomial::new(p)?.evaluate_at_q_integers(n)?
    } else {
        let series = MultibasicEhrhartSeries::new(p)?;
        FactoredRationalFunction::from(series.dilate_transform(n)?)
    };
    let oracle_agrees = if n >= 1 {
        let brute = oracle::sigma_of_points(ambient, &oracle::enumerate_dilate(p, n));
        Some(value.equivalent(&FactoredRationalFunction::from(brute))?)
    } else {
        None
    };
    Ok(EvalDoc {
        n,
        interior,
        value: RationalDoc::of(&value),
        oracle_agrees,
    })
}

pub fn run_eval(p: &Polytope, n: i64, interior: bool, format: OutputFormat) -> Result<JobOutput> {
    let doc = eval_document(p, n, interior)?;
    let success = doc.oracle_agrees != Some(false);
    let text = match format {
        OutputFormat::Json => json_text(&doc),
        OutputFormat::Pretty => {
            let names = pretty::q_names(p.ambient_dim());
            let value = rational_from_doc(&doc.value);
            let label = if interior {
                format!("interior transform sigma_(({n}P)°)(q)")
            } else {
                format!("sigma_({n}P)(q)")
            };
            let agreement = match doc.oracle_agrees {
                Some(true) => "yes",
                Some(false) => "NO",
                None => "not checked",
            };
            format!(
                "{label}\n  value = {}\n  brute-force agreement: {agreement}\n",
                pretty::rational(&value, &names)
            )
        }
    };
    Ok(JobOutput { text, success })
}

pub fn reciprocity_document(p: &Polytope, n: i64) -> Result<ReciprocityDoc> {
    assert!(n >= 1, "reciprocity is checked at positive dilations");
    let ambient = p.ambient_dim();
    let poly = MultibasicEhrhartPolynomial::new(p)?;
    let lhs = poly.evaluate_at_q_integers(-n)?;
    let interior = interior_dilate_transform(p, n);
    let all: Vec<usize> = (0..ambient).collect();
    let sign = if p.dim() % 2 == 0 { 1 } else { -1 };
    let rhs = FactoredRationalFunction::from(
        interior
            .invert_variables(&all)?
            .scalar_mul(&BigInt::from(sign)),
    );
    let holds = lhs.equivalent(&rhs)?;
    Ok(ReciprocityDoc {
        n,
        lhs: RationalDoc::of(&lhs),
        rhs: RationalDoc::of(&rhs),
        holds,
    })
}

pub fn run_reciprocity(p: &Polytope, n: i64, format: OutputFormat) -> Result<JobOutput> {
    let doc = reciprocity_document(p, n)?;
    let text = match format {
        OutputFormat::Json => json_text(&doc),
        OutputFormat::Pretty => {
            let names = pretty::q_names(p.ambient_dim());
            format!(
                "reciprocity at n = {n}: L_P([-n]_q) = (-1)^d sigma_((nP)°)(1/q)\n  \
                 lhs = {}\n  rhs = {}\n  holds: {}\n",
                pretty::rational(&rational_from_doc(&doc.lhs), &names),
                pretty::rational(&rational_from_doc(&doc.rhs), &names),
                if doc.holds { "yes" } else { "NO" },
            )
        }
    };
    let success = doc.holds;
    Ok(JobOutput { text, success })
}

pub fn specialize_document(p: &Polytope, lambda: Option<&[i64]>) -> Result<SpecializeDoc> {
    let series = MultibasicEhrhartSeries::new(p)?;
    match lambda {
        None => Ok(SpecializeDoc {
            kind: "classical".to_string(),
            lambda: None,
            series: RationalDoc::of(&series.specialize_classical()?),
        }),
        Some(lam) => Ok(SpecializeDoc {
            kind: "q-ehrhart".to_string(),
            lambda: Some(lam.to_vec()),
            series: RationalDoc::of(&series.specialize_q_ehrhart(lam)?),
        }),
    }
}

pub fn run_specialize(
    p: &Polytope,
    lambda: Option<&[i64]>,
    format: OutputFormat,
) -> Result<JobOutput> {
    let doc = specialize_document(p, lambda)?;
    let text = match format {
        OutputFormat::Json => json_text(&doc),
        OutputFormat::Pretty => {
            let value = rational_from_doc(&doc.series);
            match lambda {
                None => {
                    let names = pretty::qt_names(p.ambient_dim());
                    format!(
                        "classical specialization (every q_i -> 1)\n  Ehr_P(t) = {}\n",
                        pretty::rational(&value, &names)
                    )
                }
                Some(lam) => {
                    let names = vec!["q".to_string(), "t".to_string()];
                    format!(
                        "q-analogue specialization with lambda = {lam:?}\n  Ehr_(P,lambda)(t, q) = {}\n",
                        pretty::rational(&value, &names)
                    )
                }
            }
        }
    };
    Ok(JobOutput {
        text,
        success: true,
    })
}

/// Reconstruct a rational function from its document — used only to
/// render pretty output from the same data the JSON carries.
fn rational_from_doc(doc: &RationalDoc) -> FactoredRationalFunction {
    let mut numerator = crate::laurent::LaurentPolynomial::zero(doc.numerator.arity);
    for (e, c) in &doc.numerator.terms {
        let coeff: BigInt = c.parse().expect("documents carry decimal integers");
        numerator = numerator
            .add(&crate::laurent::LaurentPolynomial::monomial(
                LatticeVector::new(e.iter().copied()),
                coeff,
            ))
            .expect("document arity is consistent");
    }
    FactoredRationalFunction::new(
        numerator,
        doc.denominator
            .iter()
            .map(|(e, m)| (LatticeVector::new(e.iter().copied()), *m)),
    )
    .expect("document factors are nonzero")
}

/// Smallest nonnegative shift taking the polytope into the nonnegative
/// orthant — the polynomial-side checks run on the translated copy.
fn orthant_shift(p: &Polytope) -> LatticeVector {
    let mut shift = vec![0i64; p.ambient_dim()];
    for v in p.vertices() {
        for (k, s) in shift.iter_mut().enumerate() {
            *s = (*s).max(-v.get(k));
        }
    }
    LatticeVector::new(shift)
}

const CHECKS: &[(&str, &str)] = &[
    (
        "series-truncation",
        "series coefficients match brute-force counts",
    ),
    (
        "delta-invariants",
        "delta_0 = 1 and delta_1 = sigma_P - sum of q^(v_i)",
    ),
    (
        "brion-decomposition",
        "sigma_P equals the sum of vertex-cone transforms",
    ),
    (
        "vertex-cone-sum",
        "origin-based vertex-cone transforms sum to one",
    ),
    (
        "stanley-reciprocity",
        "Stanley reciprocity on every vertex cone",
    ),
    (
        "translation-series",
        "Ehr_(P+w)(t; q) = Ehr_P(q^w t; q) and delta_k -> delta_k q^(kw)",
    ),
    (
        "translation-polynomial",
        "L_(P+w)(x) = L_P(x) prod (1 + q_k x_k - x_k)^(w_k)",
    ),
    (
        "eval-oracle",
        "L_P([n]_q) = sigma_(nP)(q), both evaluation routes",
    ),
    ("reciprocity", "L_P([-n]_q) = (-1)^d sigma_((nP)°)(1/q)"),
    (
        "classical-specialization",
        "q = 1 collapse matches classical counts and degree",
    ),
    (
        "q-integer-identity",
        "1 + (q-1)[n]_q = q^n and [n]_q = (1-q^n)/(1-q)",
    ),
    (
        "bilateral-cancellation",
        "the two one-sided geometric series of each vertex cancel",
    ),
];

fn check_series_truncation(p: &Polytope, bound: i64) -> Result<bool> {
    series_matches_counts(&MultibasicEhrhartSeries::new(p)?, bound)
}

fn check_delta_invariants(p: &Polytope) -> Result<bool> {
    delta_invariants_hold(&MultibasicEhrhartSeries::new(p)?)
}

fn check_brion(p: &Polytope) -> Result<bool> {
    let direct = oracle::sigma_of_points(p.ambient_dim(), &oracle::enumerate_dilate(p, 1));
    brion_sum(p)?.equivalent(&FactoredRationalFunction::from(direct))
}

fn check_stanley(p: &Polytope) -> Result<bool> {
    for i in 0..p.vertex_count() {
        let gens = vertex_cone_generators(p, i);
        if !stanley_reciprocity_holds(p.ambient_dim(), &gens)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_translation_series(p: &Polytope) -> Result<bool> {
    let series = MultibasicEhrhartSeries::new(p)?;
    let shift = LatticeVector::new((0..p.ambient_dim()).map(|k| {
        let k = k as i64;
        if k % 2 == 0 {
            k + 1
        } else {
            -(k + 1)
        }
    }));
    Ok(translation_series_law_holds(&series, &shift)?
        && translation_delta_law_holds(&series, &shift)?)
}

fn check_translation_polynomial(p: &Polytope) -> Result<bool> {
    let base = p.translate(&orthant_shift(p));
    let shift = LatticeVector::new(std::iter::repeat_n(1i64, p.ambient_dim()));
    translation_polynomial_law_holds(&base, &shift)
}

fn check_eval_oracle(p: &Polytope, bound: i64) -> Result<bool> {
    let base = p.translate(&orthant_shift(p));
    let poly = MultibasicEhrhartPolynomial::new(&base)?;
    let at_zero = poly.evaluate_at_q_integers(0)?;
    if !at_zero.equivalent(&FactoredRationalFunction::one(p.ambient_dim()))? {
        return Ok(false);
    }
    for n in 1..=bound {
        let value = poly.evaluate_at_q_integers(n)?;
        let brute = oracle::sigma_of_points(p.ambient_dim(), &oracle::enumerate_dilate(&base, n));
        if !value.equivalent(&FactoredRationalFunction::from(brute))? {
            return Ok(false);
        }
    }
    for n in [2, -1] {
        let fast = poly.evaluate_at_q_integers(n)?;
        let slow = poly.evaluate_by_substitution(n)?;
        if !fast.equivalent(&slow)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_reciprocity(p: &Polytope, bound: i64) -> Result<bool> {
    let base = p.translate(&orthant_shift(p));
    let poly = MultibasicEhrhartPolynomial::new(&base)?;
    for n in 1..=bound.min(3) {
        if !reciprocity_holds(&poly, n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_classical(p: &Polytope, bound: i64) -> Result<bool> {
    let series = MultibasicEhrhartSeries::new(p)?;
    if !classical_specialization_matches_counts(&series, bound)? {
        return Ok(false);
    }
    // counts grow as a polynomial of degree dim P: the (d+1)-st finite
    // difference of n -> |nP| vanishes
    let d = p.dim();
    let counts: Vec<BigInt> = (0..=(d as i64) + 1)
        .map(|n| BigInt::from(oracle::enumerate_dilate(p, n).len()))
        .collect();
    let mut difference = BigInt::from(0);
    let mut binomial = BigInt::from(1);
    for (j, count) in counts.iter().enumerate() {
        let signed = if (counts.len() - 1 - j) % 2 == 0 {
            count * &binomial
        } else {
            -(count * &binomial)
        };
        difference += signed;
        binomial = binomial * BigInt::from(counts.len() - 1 - j) / BigInt::from(j + 1);
    }
    Ok(difference == BigInt::from(0))
}

fn check_q_integer_identities() -> Result<bool> {
    for n in -4..=4 {
        if !q_integer_power_identity_holds(n) || !q_integer_fraction_identity_holds(n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Run every identity check against the brute-force oracle. Checks whose
/// statements require the nonnegative orthant run on the translated copy
/// of the polytope (the translation laws themselves are among the
/// checks).
pub fn verify_report(p: &Polytope, bound: i64) -> Result<VerifyDoc> {
    assert!(bound >= 1, "truncation bound must be positive");
    let mut checks = Vec::new();
    for &(name, _) in CHECKS {
        let passed = match name {
            "series-truncation" => check_series_truncation(p, bound)?,
            "delta-invariants" => check_delta_invariants(p)?,
            "brion-decomposition" => check_brion(p)?,
            "vertex-cone-sum" => vertex_cone_sum_is_one(p)?,
            "stanley-reciprocity" => check_stanley(p)?,
            "translation-series" => check_translation_series(p)?,
            "translation-polynomial" => check_translation_polynomial(p)?,
            "eval-oracle" => check_eval_oracle(p, bound)?,
            "reciprocity" => check_reciprocity(p, bound)?,
            "classical-specialization" => check_classical(p, bound)?,
            "q-integer-identity" => check_q_integer_identities()?,
            "bilateral-cancellation" => bilateral_cancellation_check(p)?,
            _ => unreachable!("every check is dispatched"),
        };
        checks.push(CheckDoc {
            name: name.to_string(),
            passed,
        });
    }
    let all_passed = checks.iter().all(|c| c.passed);
    Ok(VerifyDoc {
        bound,
        checks,
        all_passed,
    })
}

pub fn run_verify(p: &Polytope, bound: i64, format: OutputFormat) -> Result<JobOutput> {
    let doc = verify_report(p, bound)?;
    let text = match format {
        OutputFormat::Json => json_text(&doc),
        OutputFormat::Pretty => {
            let mut out = format!("verification report (truncation bound {})\n", doc.bound);
            for check in &doc.checks {
                let description = CHECKS
                    .iter()
                    .find(|(name, _)| *name == check.name)
                    .map(|(_, d)| *d)
                    .unwrap_or("");
                let mark = if check.passed { "  ok  " } else { " FAIL " };
                out.push_str(&format!("[{mark}] {:<26} {description}\n", check.name));
            }
            out.push_str(if doc.all_passed {
                "all checks passed\n"
            } else {
                "SOME CHECKS FAILED\n"
            });
            out
        }
    };
    let success = doc.all_passed;
    Ok(JobOutput { text, success })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::vec_i;

    fn square() -> Polytope {
        Polytope::new([
            vec_i(&[0, 0]),
            vec_i(&[1, 0]),
            vec_i(&[0, 1]),
            vec_i(&[1, 1]),
        ])
        .unwrap()
    }

    #[test]
    fn verify_battery_passes_on_the_unit_square() {
        let report = verify_report(&square(), 3).unwrap();
        assert!(report.all_passed, "{report:?}");
        assert_eq!(report.checks.len(), CHECKS.len());
    }

    #[test]
    fn verify_battery_passes_on_a_mixed_sign_triangle() {
        let p = Polytope::new([vec_i(&[-1, -1]), vec_i(&[1, 0]), vec_i(&[0, 1])]).unwrap();
        let report = verify_report(&p, 3).unwrap();
        assert!(report.all_passed, "{report:?}");
    }

    #[test]
    fn series_pretty_output_is_the_hand_formula() {
        let p = Polytope::new([vec_i(&[1]), vec_i(&[3])]).unwrap();
        let out = run_series(&p, OutputFormat::Pretty).unwrap();
        assert!(
            out.text
                .contains("(1 + q1^2*t) / ((1 - q1*t)*(1 - q1^3*t))"),
            "{}",
            out.text
        );
    }

    #[test]
    fn eval_agrees_with_the_oracle_both_ways() {
        let doc = eval_document(&square(), 2, false).unwrap();
        assert_eq!(doc.oracle_agrees, Some(true));
        let interior = eval_document(&square(), 2, true).unwrap();
        assert_eq!(interior.oracle_agrees, Some(true));
        assert_eq!(
            interior.value.numerator.terms,
            vec![(vec![1, 1], "1".to_string())]
        );
        // mixed-sign polytopes take the series route
        let p = Polytope::new([vec_i(&[-2]), vec_i(&[1])]).unwrap();
        let doc = eval_document(&p, 3, false).unwrap();
        assert_eq!(doc.oracle_agrees, Some(true));
    }

    #[test]
    fn eval_at_zero_is_constant_one() {
        let doc = eval_document(&square(), 0, false).unwrap();
        assert_eq!(doc.oracle_agrees, None);
        let value = rational_from_doc(&doc.value);
        assert!(value.equivalent(&FactoredRationalFunction::one(2)).unwrap());
    }

    #[test]
    fn reciprocity_document_round_trip() {
        let p = Polytope::new([vec_i(&[0]), vec_i(&[2])]).unwrap();
        let doc = reciprocity_document(&p, 1).unwrap();
        assert!(doc.holds);
        // rhs is -q^{-1}
        assert_eq!(doc.rhs.numerator.terms, vec![(vec![-1], "-1".to_string())]);
    }

    #[test]
    fn specialize_documents() {
        let classical = specialize_document(&square(), None).unwrap();
        assert_eq!(classical.kind, "classical");
        let q = specialize_document(&square(), Some(&[1, 2])).unwrap();
        assert_eq!(q.kind, "q-ehrhart");
        assert_eq!(q.series.numerator.arity, 2);
        let collision = specialize_document(&square(), Some(&[1, 1]));
        assert!(collision.is_err());
    }

    #[test]
    fn json_output_is_deterministic() {
        let a = run_verify(&square(), 2, OutputFormat::Json).unwrap();
        let b = run_verify(&square(), 2, OutputFormat::Json).unwrap();
        assert_eq!(a.text, b.text);
        assert!(a.success);
    }
}
