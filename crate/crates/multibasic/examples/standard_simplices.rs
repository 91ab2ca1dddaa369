//! The standard simplex conv{e_1, ..., e_(d+1)} in Z^(d+1) has the
//! simplest possible multibasic Ehrhart series:
//!
//!   Ehr(t; q) = 1 / ((1 - q_1 t)(1 - q_2 t) ... (1 - q_(d+1) t)),
//!
//! i.e. numerator 1 and delta-vector (1, 0, ..., 0) — the dilates nP
//! tile by the lattice points of weight n with multiplicity one. The
//! lower-dimensional conv{0, e_1, ..., e_d} in Z^d keeps numerator 1
//! with the factor (1 - t) taking the place of (1 - q_(d+1) t).

use multibasic::{LatticeVector, MultibasicEhrhartSeries, Polytope};

fn main() {
    for d in 1..=4 {
        let p = Polytope::new((0..=d).map(|i| LatticeVector::unit(d + 1, i))).unwrap();
        let series = MultibasicEhrhartSeries::new(&p).unwrap();
        assert!(series.numerator().is_one());
        assert!(series.delta_vector().iter().skip(1).all(|c| c.is_zero()));
        println!(
            "conv(e_1..e_{}) in Z^{}: numerator 1, denominator {:?}",
            d + 1,
            d + 1,
            series.denominator_exponents()
        );
    }

    for d in 1..=4 {
        let p = Polytope::new(
            std::iter::once(LatticeVector::zeros(d))
                .chain((0..d).map(|i| LatticeVector::unit(d, i))),
        )
        .unwrap();
        let series = MultibasicEhrhartSeries::new(&p).unwrap();
        assert!(series.numerator().is_one());
        println!(
            "conv(0, e_1..e_{d}) in Z^{d}: numerator 1, denominator {:?}",
            series.denominator_exponents()
        );
    }
}
