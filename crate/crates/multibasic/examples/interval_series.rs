//! Multibasic Ehrhart series of lattice intervals [a, b].
//!
//! For P = [a, b] the series has the closed form
//!
//!   Ehr_P(t; q) = (1 + (q^(a+1) + ... + q^(b-1)) t) / ((1 - q^a t)(1 - q^b t)),
//!
//! so the delta-vector is (1, q^(a+1) + ... + q^(b-1)). The program
//! computes the series from the vertex description alone and matches it
//! against that formula, then shows how a translation only twists the
//! q-powers.

use multibasic::{vec_i, FactoredRationalFunction, LatticeVector, LaurentPolynomial, Polytope};
use num_bigint::BigInt;

fn closed_form(a: i64, b: i64) -> FactoredRationalFunction {
    // numerator 1 + (sum of interior points) t, denominator from the two vertices
    let mut numerator = LaurentPolynomial::one(2);
    for k in (a + 1)..b {
        numerator = numerator
            .add(&LaurentPolynomial::monomial(
                vec_i(&[k, 1]),
                BigInt::from(1),
            ))
            .unwrap();
    }
    FactoredRationalFunction::new(numerator, [(vec_i(&[a, 1]), 1), (vec_i(&[b, 1]), 1)]).unwrap()
}

fn main() {
    for (a, b) in [(0, 1), (0, 2), (1, 3), (2, 5), (-2, 1)] {
        let p = Polytope::new([vec_i(&[a]), vec_i(&[b])]).unwrap();
        let series = multibasic::MultibasicEhrhartSeries::new(&p).unwrap();
        println!("P = [{a}, {b}]");
        println!("  numerator      {:?}", series.numerator());
        println!("  denominator    {:?}", series.denominator_exponents());
        assert!(series.as_rational().equivalent(&closed_form(a, b)).unwrap());
        println!("  matches the closed form (1 + sum q^k t) / ((1 - q^{a} t)(1 - q^{b} t))");
    }

    // Translating [0, 3] by -2 multiplies the k-th delta-entry by q^(-2k).
    let base = Polytope::new([vec_i(&[0]), vec_i(&[3])]).unwrap();
    let series = multibasic::MultibasicEhrhartSeries::new(&base).unwrap();
    let shifted = multibasic::MultibasicEhrhartSeries::new(&base.translate(&vec_i(&[-2]))).unwrap();
    let twisted: Vec<LaurentPolynomial> = series
        .delta_vector()
        .iter()
        .enumerate()
        .map(|(k, d)| d.mul_monomial(&LatticeVector::new([-2 * k as i64]), &BigInt::from(1)))
        .collect();
    assert_eq!(shifted.delta_vector(), twisted);
    println!("\ndelta([0,3]) = {:?}", series.delta_vector());
    println!(
        "delta([-2,1]) = {:?}  (each entry twisted by q^(-2k))",
        shifted.delta_vector()
    );
}
