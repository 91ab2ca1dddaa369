//! Integer-point transforms of cones as factored rational functions.
//!
//! The workhorse identity: for a simplicial cone with independent
//! generators `w_1, ..., w_d` and half-open fundamental parallelepiped
//! `Γ`, the transform is `σ = σ_Γ / Π_i (1 - q^{w_i})` — every cone point
//! splits uniquely as a parallelepiped point plus a nonnegative integer
//! combination of the generators. Pointed cones reduce to half-open
//! simplicial pieces; polytopes reduce to their vertex cones through
//! Brion's decomposition.

use num_bigint::BigInt;

use crate::cone::{vertex_cone_generators, SimplicialCone};
use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use crate::laurent::LaurentPolynomial;
use crate::linalg::{positive_functional, rank_of};
use crate::polytope::Polytope;
use crate::rational::FactoredRationalFunction;
use crate::triangulate::half_open_decompose;

/// Transform of one half-open simplicial cone with apex at the origin.
pub fn sigma_simplicial(arity: usize, cone: &SimplicialCone) -> Result<FactoredRationalFunction> {
    if cone.dim() == 0 {
        return Ok(FactoredRationalFunction::one(arity));
    }
    assert_eq!(cone.generators()[0].len(), arity);
    let numerator = LaurentPolynomial::from_points(arity, cone.parallelepiped_points());
    FactoredRationalFunction::new(numerator, cone.generators().iter().map(|w| (w.clone(), 1)))
}

fn sigma_from_pieces(
    arity: usize,
    apex: &LatticeVector,
    pieces: &[SimplicialCone],
    complemented: bool,
) -> Result<FactoredRationalFunction> {
    let mut total = FactoredRationalFunction::zero(arity);
    for piece in pieces {
        let piece = if complemented {
            piece.complemented()
        } else {
            piece.clone()
        };
        total = total.add(&sigma_simplicial(arity, &piece)?)?;
    }
    if apex.is_zero() {
        Ok(total)
    } else {
        Ok(total.mul_monomial(apex, &BigInt::from(1)))
    }
}

/// Transform of `apex + cone(generators)` for a pointed cone.
pub fn sigma_pointed(
    arity: usize,
    apex: &LatticeVector,
    generators: &[LatticeVector],
) -> Result<FactoredRationalFunction> {
    if positive_functional(generators).is_none() {
        return Err(Error::NotPointed);
    }
    let pieces = half_open_decompose(generators)?;
    sigma_from_pieces(arity, apex, &pieces, false)
}

/// Transform of the relative interior of `apex + cone(generators)`:
/// the same half-open pieces with every flag complemented.
pub fn sigma_pointed_interior(
    arity: usize,
    apex: &LatticeVector,
    generators: &[LatticeVector],
) -> Result<FactoredRationalFunction> {
    if positive_functional(generators).is_none() {
        return Err(Error::NotPointed);
    }
    let pieces = half_open_decompose(generators)?;
    sigma_from_pieces(arity, apex, &pieces, true)
}

/// Both closed and relative-interior transforms from one decomposition.
pub fn sigma_pointed_pair(
    arity: usize,
    apex: &LatticeVector,
    generators: &[LatticeVector],
) -> Result<(FactoredRationalFunction, FactoredRationalFunction)> {
    if positive_functional(generators).is_none() {
        return Err(Error::NotPointed);
    }
    let pieces = half_open_decompose(generators)?;
    Ok((
        sigma_from_pieces(arity, apex, &pieces, false)?,
        sigma_from_pieces(arity, apex, &pieces, true)?,
    ))
}

/// Brion's decomposition: the finite transform of a polytope equals the
/// sum of the transforms of its shifted vertex cones.
pub fn brion_sum(p: &Polytope) -> Result<FactoredRationalFunction> {
    let arity = p.ambient_dim();
    let mut total = FactoredRationalFunction::zero(arity);
    for i in 0..p.vertex_count() {
        let gens = vertex_cone_generators(p, i);
        total = total.add(&sigma_pointed(arity, &p.vertices()[i], &gens)?)?;
    }
    Ok(total)
}

/// Stanley reciprocity for a pointed cone with apex at the origin:
/// `σ_K(1/q) = (-1)^{dim K} σ_{K°}(q)`, with `K°` the relative interior.
pub fn stanley_reciprocity_holds(arity: usize, generators: &[LatticeVector]) -> Result<bool> {
    let origin = LatticeVector::zeros(arity);
    let (closed, interior) = sigma_pointed_pair(arity, &origin, generators)?;
    let all: Vec<usize> = (0..arity).collect();
    let lhs = closed.invert_variables(&all)?;
    let sign = if rank_of(generators) % 2 == 0 { 1 } else { -1 };
    let rhs = interior.scalar_mul(&BigInt::from(sign));
    lhs.equivalent(&rhs)
}
