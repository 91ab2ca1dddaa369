//! Canonical JSON forms: polytope input, polynomial/rational-function
//! documents, and machine-readable errors.
//!
//! Terms serialize as `[exponent array, coefficient string]` pairs in
//! graded-lexicographic order (the storage order), denominators as
//! `[exponent array, multiplicity]` pairs. Coefficients travel as decimal
//! strings so arbitrary-precision values survive the trip.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::lattice::LatticeVector;
use crate::laurent::LaurentPolynomial;
use crate::polytope::Polytope;
use crate::rational::FactoredRationalFunction;

#[derive(Debug, Serialize, Deserialize)]
pub struct PolytopeInput {
    pub vertices: Vec<Vec<i64>>,
}

impl PolytopeInput {
    pub fn to_polytope(&self) -> crate::error::Result<Polytope> {
        Polytope::new(
            self.vertices
                .iter()
                .map(|v| LatticeVector::new(v.iter().copied())),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentDoc {
    pub arity: usize,
    pub terms: Vec<(Vec<i64>, String)>,
}

impl LaurentDoc {
    pub fn of(p: &LaurentPolynomial) -> LaurentDoc {
        LaurentDoc {
            arity: p.arity(),
            terms: p
                .terms()
                .map(|(e, c)| (e.coords().to_vec(), c.to_string()))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalDoc {
    pub numerator: LaurentDoc,
    pub denominator: Vec<(Vec<i64>, usize)>,
}

impl RationalDoc {
    pub fn of(r: &FactoredRationalFunction) -> RationalDoc {
        RationalDoc {
            numerator: LaurentDoc::of(r.numerator()),
            denominator: r
                .denominator()
                .into_iter()
                .map(|f| (f.exponent.coords().to_vec(), f.multiplicity))
                .collect(),
        }
    }
}

/// Series document: numerator over the vertex factors `1 - q^{v_i} t`,
/// presented in input vertex order.
#[derive(Debug, Serialize, Deserialize)]
pub struct SeriesDoc {
    pub ambient_dim: usize,
    pub vertices: Vec<Vec<i64>>,
    pub numerator: LaurentDoc,
    pub denominator_exponents: Vec<Vec<i64>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DeltaDoc {
    pub ambient_dim: usize,
    pub entries: Vec<LaurentDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VertexTermDoc {
    pub vertex: Vec<i64>,
    pub sigma: RationalDoc,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PolynomialDoc {
    pub ambient_dim: usize,
    pub total_degree: i64,
    pub vertex_terms: Vec<VertexTermDoc>,
    pub coefficients: Vec<(Vec<i64>, RationalDoc)>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EvalDoc {
    pub n: i64,
    pub interior: bool,
    pub value: RationalDoc,
    /// Comparison against brute-force enumeration; absent for n = 0.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ReciprocityDoc {
    pub n: i64,
    pub lhs: RationalDoc,
    pub rhs: RationalDoc,
    pub holds: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SpecializeDoc {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<i64>>,
    pub series: RationalDoc,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CheckDoc {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub bound: i64,
    pub checks: Vec<CheckDoc>,
    pub all_passed: bool,
}

/// Machine-readable error: a stable kebab-case code, the display
/// message, and the offending datum where one exists.
#[derive(Debug, Serialize, Deserialize)]
pub struct ErrorDoc {
    pub code: String,
    pub message: String,
    pub datum: serde_json::Value,
}

impl ErrorDoc {
    pub fn of(e: &Error) -> ErrorDoc {
        use serde_json::json;
        let (code, datum) = match e {
            Error::ArityMismatch { left, right } => {
                ("arity-mismatch", json!({ "left": left, "right": right }))
            }
            Error::VariableIndexOutOfRange { index, arity } => (
                "variable-index-out-of-range",
                json!({ "index": index, "arity": arity }),
            ),
            Error::ZeroExponentFactor => ("zero-exponent-factor", serde_json::Value::Null),
            Error::VanishingDenominatorFactor { exponent } => {
                ("vanishing-denominator-factor", json!(exponent.coords()))
            }
            Error::ZeroHeightDenominatorFactor { exponent } => {
                ("zero-height-denominator-factor", json!(exponent.coords()))
            }
            Error::EmptyInput => ("empty-input", serde_json::Value::Null),
            Error::DimensionMismatch {
                index,
                expected,
                got,
            } => (
                "dimension-mismatch",
                json!({ "index": index, "expected": expected, "got": got }),
            ),
            Error::NotAVertex { index } => ("not-a-vertex", json!({ "index": index })),
            Error::NotPointed => ("not-pointed", serde_json::Value::Null),
            Error::DependentGenerators => ("dependent-generators", serde_json::Value::Null),
            Error::NegativeOrthantViolation { vertex } => {
                ("negative-orthant-violation", json!({ "vertex": vertex }))
            }
            Error::NonGenericLinearForm { first, second } => (
                "non-generic-linear-form",
                json!({ "first": first, "second": second }),
            ),
        };
        ErrorDoc {
            code: code.to_string(),
            message: e.to_string(),
            datum,
        }
    }

    /// For failures that happen before the library is reached (unreadable
    /// file, malformed JSON).
    pub fn input(message: String) -> ErrorDoc {
        ErrorDoc {
            code: "invalid-input".to_string(),
            message,
            datum: serde_json::Value::Null,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::vec_i;
    use num_bigint::BigInt;

    #[test]
    fn polytope_round_trip() {
        let input: PolytopeInput =
            serde_json::from_str(r#"{ "vertices": [[0,0],[1,0],[0,1]] }"#).unwrap();
        let p = input.to_polytope().unwrap();
        assert_eq!(p.vertex_count(), 3);
        assert_eq!(p.ambient_dim(), 2);
    }

    #[test]
    fn laurent_doc_is_sorted_pairs() {
        let p = LaurentPolynomial::monomial(vec_i(&[1, 1]), BigInt::from(-3))
            .add(&LaurentPolynomial::one(2))
            .unwrap();
        let doc = LaurentDoc::of(&p);
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(text, r#"{"arity":2,"terms":[[[0,0],"1"],[[1,1],"-3"]]}"#);
    }

    #[test]
    fn error_docs_carry_codes_and_data() {
        let doc = ErrorDoc::of(&Error::NotAVertex { index: 2 });
        assert_eq!(doc.code, "not-a-vertex");
        assert_eq!(doc.datum, serde_json::json!({ "index": 2 }));
        assert!(doc.message.contains('2'));
    }
}
