//! The multibasic Ehrhart polynomial L_P of a polytope in the
//! nonnegative orthant: a polynomial in x_1, ..., x_N over the field of
//! rational functions in q_1, ..., q_N, built from the vertex cones as
//!
//!   L_P(x) = sum_i sigma_(C_i)(q) * prod_k (1 + q_k x_k - x_k)^(v_ik).
//!
//! Substituting the q-integers x_k = [n]_(q_k) turns the bracket into
//! q_k^n, so L_P([n]_q) = sum_i sigma_(C_i) q^(n v_i) = sigma_(nP)(q)
//! for every n >= 0 — a Laurent polynomial identity that we check
//! against direct lattice-point enumeration, at negative n included
//! (where enumeration no longer makes sense but the rational function
//! still does).

use multibasic::oracle::{enumerate_dilate, sigma_of_points};
use multibasic::{vec_i, FactoredRationalFunction, MultibasicEhrhartPolynomial, Polytope};

fn main() {
    let p = Polytope::new([
        vec_i(&[0, 0]),
        vec_i(&[2, 0]),
        vec_i(&[0, 1]),
        vec_i(&[2, 1]),
    ])
    .unwrap();
    let poly = MultibasicEhrhartPolynomial::new(&p).unwrap();
    let names = multibasic::pretty::q_names(2);
    println!("P = [0,2] x [0,1], total degree {}", poly.total_degree());
    for (v, sigma) in p.vertices().iter().zip(poly.vertex_terms()) {
        println!(
            "  sigma at {v:?} = {}",
            multibasic::pretty::rational(sigma, &names)
        );
    }

    for n in 0..=4 {
        let value = poly.evaluate_at_q_integers(n).unwrap();
        let brute = sigma_of_points(2, &enumerate_dilate(&p, n));
        assert!(value
            .equivalent(&FactoredRationalFunction::from(brute.clone()))
            .unwrap());
        println!(
            "n = {n}: L_P([n]_q) = sigma over nP, {} lattice points",
            brute.num_terms()
        );
    }

    // the substitution route expands prod (1 + q_k x_k - x_k)^(v_ik)
    // literally; it must agree with the monomial shortcut everywhere
    for n in -3..=3 {
        let fast = poly.evaluate_at_q_integers(n).unwrap();
        let slow = poly.evaluate_by_substitution(n).unwrap();
        assert!(fast.equivalent(&slow).unwrap());
    }
    println!("both evaluation routes agree for n = -3..3");
}
