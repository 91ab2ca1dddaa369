//! The unit cube [0, 1]^d has the multibasic Ehrhart polynomial
//!
//!   L(x_1, ..., x_d) = prod_i (q_i x_i + 1):
//!
//! the coefficient of x_J is the monomial prod_{i in J} q_i. Substituting
//! the q-integers x_i = [n]_(q_i) gives sigma over the cube's n-th dilate
//! because 1 + q_i [n]_(q_i) - [n]_(q_i) + ... telescopes — concretely
//! each factor becomes 1 + q_i [n]_(q_i) = [n+1]_(q_i).

use multibasic::{FactoredRationalFunction, LatticeVector, MultibasicEhrhartPolynomial, Polytope};
use num_bigint::BigInt;

fn cube(d: usize) -> Polytope {
    let vertices =
        (0..1u32 << d).map(|mask| LatticeVector::new((0..d).map(|i| i64::from(mask >> i & 1))));
    Polytope::new(vertices).unwrap()
}

fn main() {
    for d in 1..=3 {
        let p = cube(d);
        let poly = MultibasicEhrhartPolynomial::new(&p).unwrap();
        assert_eq!(poly.total_degree(), d as i64);
        println!("[0,1]^{d}: total degree {}", poly.total_degree());
        for (exponent, coefficient) in poly.coefficients().unwrap() {
            // x_J has coefficient q_J: the same 0/1 vector moved from x to q
            let expected = FactoredRationalFunction::from(multibasic::LaurentPolynomial::monomial(
                exponent.clone(),
                BigInt::from(1),
            ));
            assert!(coefficient.equivalent(&expected).unwrap());
            println!("  coefficient of x^{:?} = q^{:?}", exponent, exponent);
        }
    }
}
