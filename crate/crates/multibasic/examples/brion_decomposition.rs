//! Brion's theorem: for an integral polytope P, the (finite) generating
//! function sigma_P(q) = sum of q^a over lattice points a in P equals
//! the sum over the vertices of the (infinite, but rational) transforms
//! of the vertex cones:
//!
//!   sigma_P(q) = sum_i sigma_(v_i + K_i)(q).
//!
//! The massive cancellation happens inside the rational-function
//! arithmetic. Two companion identities make it tangible: the transforms
//! of the cones K_i alone (apexes moved to the origin) sum to 1, and for
//! each vertex ray the two one-sided geometric series cancel exactly:
//! 1/(1 - q^(-a)) + q^a/(1 - q^a) = 0.

use multibasic::oracle::{enumerate_dilate, sigma_of_points};
use multibasic::transform::{brion_sum, sigma_pointed};
use multibasic::{vec_i, FactoredRationalFunction, LatticeVector, Polytope};

fn main() {
    let triangle = Polytope::new([vec_i(&[0, 0]), vec_i(&[3, 1]), vec_i(&[1, 2])]).unwrap();
    let direct = sigma_of_points(2, &enumerate_dilate(&triangle, 1));
    println!("sigma over the triangle conv((0,0),(3,1),(1,2)): {direct:?}");

    let sum = brion_sum(&triangle).unwrap();
    assert!(sum
        .equivalent(&FactoredRationalFunction::from(direct))
        .unwrap());
    println!("Brion sum of the three vertex-cone transforms agrees");

    // apexes at the origin: the same cones sum to the constant 1
    let mut total = FactoredRationalFunction::zero(2);
    for i in 0..triangle.vertex_count() {
        let generators = multibasic::cone::vertex_cone_generators(&triangle, i);
        let cone = sigma_pointed(2, &LatticeVector::zeros(2), &generators).unwrap();
        println!(
            "  cone at vertex {i}: {}",
            multibasic::pretty::rational(&cone, &multibasic::pretty::q_names(2))
        );
        total = total.add(&cone).unwrap();
    }
    assert!(total.equivalent(&FactoredRationalFunction::one(2)).unwrap());
    println!("the three cone transforms sum to 1");

    // per-ray cancellation on a vertex ray a = (v, 1) of the cone over P
    let a = vec_i(&[3, 1, 1]);
    let left = multibasic::geometric(a.neg()).unwrap();
    let right = multibasic::geometric(a.clone())
        .unwrap()
        .mul_monomial(&a, &num_bigint::BigInt::from(1));
    assert!(left.add(&right).unwrap().is_zero());
    println!("both one-sided series along {a:?} cancel to 0");
}
