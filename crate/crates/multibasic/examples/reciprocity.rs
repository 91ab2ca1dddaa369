//! Two reciprocity laws, both checked exactly.
//!
//! Stanley reciprocity, for a pointed full-dimensional cone K with
//! transform sigma_K: substituting q -> 1/q recovers the transform of
//! the interior, up to sign:
//!
//!   sigma_K(1/q) = (-1)^(dim K) sigma_(K°)(q).
//!
//! Ehrhart reciprocity for the multibasic polynomial: evaluating at the
//! negative q-integers [-n]_q = -(q^-1 + ... + q^-n) counts interior
//! points of the dilate,
//!
//!   L_P([-n]_q) = (-1)^(dim P) sigma_((nP)°)(1/q),
//!
//! with the relative interior when P is not full-dimensional.

use multibasic::ehrhart::{interior_dilate_transform, reciprocity_holds};
use multibasic::transform::stanley_reciprocity_holds;
use multibasic::{vec_i, MultibasicEhrhartPolynomial, Polytope};

fn main() {
    // Stanley reciprocity on three cones at the origin
    let cones: [(&str, Vec<multibasic::LatticeVector>); 3] = [
        ("coordinate ray", vec![vec_i(&[1])]),
        ("first quadrant", vec![vec_i(&[1, 0]), vec_i(&[0, 1])]),
        (
            "cone over the unit square",
            vec![
                vec_i(&[0, 0, 1]),
                vec_i(&[1, 0, 1]),
                vec_i(&[0, 1, 1]),
                vec_i(&[1, 1, 1]),
            ],
        ),
    ];
    for (label, generators) in &cones {
        let arity = generators[0].len();
        assert!(stanley_reciprocity_holds(arity, generators).unwrap());
        println!("Stanley reciprocity holds on the {label}");
    }

    // Ehrhart reciprocity on the unit square and on a segment embedded
    // in the plane (relative interior!)
    let square = Polytope::new([
        vec_i(&[0, 0]),
        vec_i(&[1, 0]),
        vec_i(&[0, 1]),
        vec_i(&[1, 1]),
    ])
    .unwrap();
    let segment = Polytope::new([vec_i(&[0, 1]), vec_i(&[2, 1])]).unwrap();
    for p in [&square, &segment] {
        let poly = MultibasicEhrhartPolynomial::new(p).unwrap();
        for n in 1..=3 {
            assert!(reciprocity_holds(&poly, n).unwrap());
        }
        println!(
            "L_P([-n]_q) = (-1)^{} sigma_((nP)°)(1/q) for n = 1..3 on {:?}",
            p.dim(),
            p.vertices()
        );
    }

    // the interior transform itself, by direct enumeration
    let names = multibasic::pretty::q_names(2);
    for n in 1..=3 {
        let interior = interior_dilate_transform(&square, n);
        println!(
            "  sigma over ({n}P)° = {}",
            multibasic::pretty::laurent(&interior, &names)
        );
    }
}
