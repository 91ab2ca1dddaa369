//! Exact multibasic Ehrhart theory for lattice polytopes.
//!
//! Every lattice point `a` of a set `S ⊂ Z^N` is recorded as a monomial
//! `q^a = q_1^{a_1} ... q_N^{a_N}`; summing them gives the integer-point
//! transform `σ_S(q)`. For an integral convex polytope `P` the transform of
//! the cone over `P` — graded by a final dilation variable `t` — is the
//! multibasic Ehrhart series
//!
//! ```text
//! Ehr_P(t; q) = Σ_{n ≥ 0} σ_{nP}(q) t^n
//!             = (δ_0 + δ_1 t + ... ) / Π_i (1 - q^{v_i} t),
//! ```
//!
//! a rational function whose denominator runs over the vertices `v_i` of
//! `P` and whose numerator coefficients `δ_k(q)` form the multibasic
//! δ-vector. Specializing `q_i = 1` for all `i` recovers the classical
//! Ehrhart series; substituting `q_i = q^{λ_i}` recovers the q-analogue
//! built from a generic linear form `λ`. Polytopes inside the nonnegative
//! orthant further admit a multibasic Ehrhart *polynomial* `L_P(x)` with
//! `L_P([n]_{q_1}, ..., [n]_{q_N}) = σ_{nP}(q)` at every q-integer
//! argument, satisfying the reciprocity law
//! `L_P([-n]_q) = (-1)^{dim P} σ_{nP°}(1/q)`.
//!
//! All arithmetic is exact: coefficients are arbitrary-precision integers
//! (or rationals inside the linear algebra), and no floating point is used
//! anywhere. The geometric side — vertex cones, placing triangulations,
//! half-open decompositions, fundamental parallelepipeds — feeds a small
//! rational-function calculus (`1/(1 - q^a)` factors kept in factored
//! form), and everything is cross-checked against brute-force lattice-point
//! enumeration in the test suite.

pub mod cone;
pub mod ehrhart;
pub mod error;
pub mod job;
pub mod json;
pub mod lattice;
pub mod laurent;
pub mod linalg;
pub mod oracle;
pub mod polytope;
pub mod pretty;
pub mod rational;
pub mod transform;
pub mod triangulate;

pub use ehrhart::{MultibasicEhrhartPolynomial, MultibasicEhrhartSeries};
pub use error::{Error, Result};
pub use lattice::{vec_i, LatticeVector};
pub use laurent::LaurentPolynomial;
pub use polytope::Polytope;
pub use rational::{geometric, BinomialFactor, FactoredRationalFunction};
