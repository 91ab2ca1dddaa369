//! Integral convex polytopes presented by their vertex sets.

use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use crate::linalg::{nonneg_combination, rank_of};

/// A lattice polytope, stored as a validated, irredundant vertex list.
///
/// Construction checks that every listed point really is a vertex of the
/// convex hull (no duplicates, no interior or mid-edge points), so the
/// rest of the crate can identify "vertex `i`" with "input point `i`".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    vertices: Vec<LatticeVector>,
    ambient: usize,
    dim: usize,
}

impl Polytope {
    pub fn new<I>(points: I) -> Result<Polytope>
    where
        I: IntoIterator<Item = LatticeVector>,
    {
        let vertices: Vec<LatticeVector> = points.into_iter().collect();
        let Some(first) = vertices.first() else {
            return Err(Error::EmptyInput);
        };
        let ambient = first.len();
        for (index, v) in vertices.iter().enumerate() {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    index,
                    expected: ambient,
                    got: v.len(),
                });
            }
        }
        // v_i is a vertex of the hull exactly when it is not a convex
        // combination of the other points; homogenize with a trailing 1 so
        // nonnegative coefficients are forced to sum to one
        for index in 0..vertices.len() {
            let others: Vec<LatticeVector> = vertices
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != index)
                .map(|(_, v)| v.extended(1))
                .collect();
            if !others.is_empty()
                && nonneg_combination(&others, &vertices[index].extended(1)).is_some()
            {
                return Err(Error::NotAVertex { index });
            }
        }
        let first = vertices[0].clone();
        let directions: Vec<LatticeVector> = vertices[1..].iter().map(|v| v.sub(&first)).collect();
        let dim = rank_of(&directions);
        Ok(Polytope {
            vertices,
            ambient,
            dim,
        })
    }

    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Intrinsic (affine-hull) dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Translate by an integer vector; vertexness is translation-invariant
    /// so no revalidation happens.
    pub fn translate(&self, shift: &LatticeVector) -> Polytope {
        assert_eq!(shift.len(), self.ambient);
        Polytope {
            vertices: self.vertices.iter().map(|v| v.add(shift)).collect(),
            ambient: self.ambient,
            dim: self.dim,
        }
    }

    /// First vertex violating the nonnegative-orthant requirement of the
    /// Ehrhart-polynomial construction, if any.
    pub fn orthant_violation(&self) -> Option<usize> {
        self.vertices
            .iter()
            .position(|v| v.coords().iter().any(|&x| x < 0))
    }

    /// A basis of the direction space of the affine hull, drawn greedily
    /// from the vertex differences.
    pub fn direction_basis(&self) -> Vec<LatticeVector> {
        let first = &self.vertices[0];
        let mut basis: Vec<LatticeVector> = Vec::with_capacity(self.dim);
        for v in &self.vertices[1..] {
            let candidate = v.sub(first);
            basis.push(candidate);
            if rank_of(&basis) < basis.len() {
                basis.pop();
            }
            if basis.len() == self.dim {
                break;
            }
        }
        basis
    }
}
