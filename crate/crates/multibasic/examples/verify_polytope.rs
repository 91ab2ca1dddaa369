//! Run the full identity battery — series truncation, delta invariants,
//! Brion decomposition, vertex-cone sum, Stanley reciprocity, the
//! translation laws, evaluation against enumeration, Ehrhart
//! reciprocity, the classical specialization, the q-integer identities
//! and bilateral cancellation — on a polytope with mixed-sign vertices.
//! The same report backs `multibasic verify`.

use multibasic::job::{run_verify, OutputFormat};
use multibasic::{vec_i, Polytope};

fn main() {
    let p = Polytope::new([
        vec_i(&[-1, -1]),
        vec_i(&[2, 0]),
        vec_i(&[0, 1]),
        vec_i(&[1, 1]),
    ])
    .unwrap();
    let out = run_verify(&p, 3, OutputFormat::Pretty).unwrap();
    print!("{}", out.text);
    assert!(out.success);
}
