//! Translation laws: multibasic invariants refine the classical ones
//! exactly enough to see a lattice translation. Moving P by w twists
//!
//!   series:      Ehr_(P+w)(t; q) = Ehr_P(q^w t; q)
//!   delta:       delta_k -> delta_k * q^(kw)
//!   polynomial:  L_(P+w)(x) = L_P(x) * prod_k (1 + q_k x_k - x_k)^(w_k)
//!
//! (the classical specializations are translation-invariant, so all of
//! this collapses at q = 1).

use multibasic::{
    vec_i, LatticeVector, MultibasicEhrhartPolynomial, MultibasicEhrhartSeries, Polytope,
};
use num_bigint::BigInt;

fn main() {
    let p = Polytope::new([vec_i(&[0, 0]), vec_i(&[2, 0]), vec_i(&[0, 1])]).unwrap();
    let series = MultibasicEhrhartSeries::new(&p).unwrap();
    let w = vec_i(&[3, -1]);
    let shifted = MultibasicEhrhartSeries::new(&p.translate(&w)).unwrap();

    // substituting t -> q^w t in the base series reproduces the shifted one
    let substituted = series.translation_image(&w).unwrap();
    assert!(shifted.as_rational().equivalent(&substituted).unwrap());
    println!("series law holds for w = {w:?}");

    for (k, (base, moved)) in series
        .delta_vector()
        .iter()
        .zip(shifted.delta_vector())
        .enumerate()
    {
        let twisted = base.mul_monomial(&w.scaled(k as i64), &BigInt::from(1));
        assert_eq!(twisted, moved);
    }
    println!("delta_k picks up exactly q^(kw)");

    // polynomial law, with a nonnegative shift to stay in the orthant
    let shift = vec_i(&[1, 2]);
    let base_poly = MultibasicEhrhartPolynomial::new(&p).unwrap();
    let moved_poly = MultibasicEhrhartPolynomial::new(&p.translate(&shift)).unwrap();
    for n in 0..=3 {
        let factor: LatticeVector = shift.scaled(n);
        let predicted = base_poly
            .evaluate_at_q_integers(n)
            .unwrap()
            .mul_monomial(&factor, &BigInt::from(1));
        assert!(predicted
            .equivalent(&moved_poly.evaluate_at_q_integers(n).unwrap())
            .unwrap());
    }
    println!("L_(P+w)([n]_q) = q^(nw) L_P([n]_q) for n = 0..3, w = {shift:?}");
}
