//! Two ways to forget the fine grading of the multibasic series.
//!
//! Setting every q_i -> 1 turns sigma_(nP) into the plain lattice-point
//! count, so the series collapses to the classical Ehrhart series
//! sum L_P(n) t^n. Setting q_i -> q^(lambda_i) for a linear form lambda
//! that separates the vertices of P collapses to the two-variable
//! q-analogue series in (q, t); lambda must be generic, otherwise
//! denominator factors merge and the construction refuses.

use multibasic::{vec_i, Error, MultibasicEhrhartSeries, Polytope};
use num_bigint::BigInt;

fn main() {
    let square = Polytope::new([
        vec_i(&[0, 0]),
        vec_i(&[1, 0]),
        vec_i(&[0, 1]),
        vec_i(&[1, 1]),
    ])
    .unwrap();
    let series = MultibasicEhrhartSeries::new(&square).unwrap();

    let classical = series.specialize_classical().unwrap();
    let names = multibasic::pretty::qt_names(2);
    println!("classical Ehrhart series of the unit square:");
    println!("  {}", multibasic::pretty::rational(&classical, &names));
    // its coefficients are the square counts (n+1)^2
    let expansion = multibasic::oracle::expand_truncated(&classical, 5).unwrap();
    for n in 0..=5i64 {
        let count = expansion.coefficient(&vec_i(&[0, 0, n]));
        assert_eq!(count, BigInt::from((n + 1) * (n + 1)));
        println!("  t^{n} coefficient {count} = ({n}+1)^2");
    }

    // a generic linear form: lambda = (1, 2) separates the four vertices
    let q_analogue = series.specialize_q_ehrhart(&[1, 2]).unwrap();
    let qt = vec!["q".to_string(), "t".to_string()];
    println!("q-analogue with lambda = (1, 2):");
    println!("  {}", multibasic::pretty::rational(&q_analogue, &qt));

    // lambda = (1, 1) takes the same value on (1, 0) and (0, 1)
    match series.specialize_q_ehrhart(&[1, 1]) {
        Err(Error::NonGenericLinearForm { first, second }) => {
            println!("lambda = (1, 1) rejected: vertices {first} and {second} collide");
        }
        other => panic!("expected a genericity failure, got {other:?}"),
    }
}
