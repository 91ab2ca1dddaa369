//! Simplicial cones, fundamental parallelepipeds, and vertex cones.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use crate::linalg::{
    diagonalize_columns, maximal_minor_gcd, nonneg_combination, primitive, rank_of, solve_columns,
};
use crate::polytope::Polytope;

/// A simplicial cone spanned by linearly independent integer generators,
/// with a half-open flag per generator: flagged coordinates range over
/// `(0, 1]` in the fundamental parallelepiped instead of `[0, 1)`, which
/// is the same as removing the facet spanned by the other generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialCone {
    generators: Vec<LatticeVector>,
    open: Vec<bool>,
}

impl SimplicialCone {
    pub fn new<I>(generators: I) -> Result<SimplicialCone>
    where
        I: IntoIterator<Item = LatticeVector>,
    {
        let generators: Vec<LatticeVector> = generators.into_iter().collect();
        let open = vec![false; generators.len()];
        Self::with_open_flags(generators, open)
    }

    pub fn with_open_flags(
        generators: Vec<LatticeVector>,
        open: Vec<bool>,
    ) -> Result<SimplicialCone> {
        assert_eq!(generators.len(), open.len());
        if rank_of(&generators) < generators.len() {
            return Err(Error::DependentGenerators);
        }
        Ok(SimplicialCone { generators, open })
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    pub fn open_flags(&self) -> &[bool] {
        &self.open
    }

    /// The same cone with every half-open flag complemented — the shape
    /// Stanley reciprocity produces from the relative interior.
    pub fn complemented(&self) -> SimplicialCone {
        SimplicialCone {
            generators: self.generators.clone(),
            open: self.open.iter().map(|f| !f).collect(),
        }
    }

    /// Number of lattice points of the fundamental parallelepiped: the
    /// index of the generator lattice inside the lattice points of its
    /// span. Computed from maximal minors, independently of the
    /// enumeration route.
    pub fn lattice_index(&self) -> BigInt {
        maximal_minor_gcd(&self.generators)
    }

    /// Lattice points of the half-open fundamental parallelepiped
    /// `{ Σ r_i w_i }` with `r_i ∈ [0,1)` (or `(0,1]` where flagged).
    ///
    /// One point per coset of the generator lattice inside the lattice
    /// points of the span: coset representatives come from the integer
    /// diagonalization, and each is snapped into the box by shifting with
    /// integer multiples of the generators.
    pub fn parallelepiped_points(&self) -> Vec<LatticeVector> {
        let d = self.generators.len();
        if d == 0 {
            return vec![LatticeVector::zeros(0)];
        }
        let ambient = self.generators[0].len();
        let (diag, carriers) = diagonalize_columns(&self.generators);
        let mut points = Vec::new();
        let mut y = vec![0i64; d];
        loop {
            let mut rep = LatticeVector::zeros(ambient);
            for (i, &yi) in y.iter().enumerate() {
                rep = rep.add(&carriers[i].scaled(yi));
            }
            let r =
                solve_columns(&self.generators, &rep).expect("coset representative left the span");
            let mut point = rep;
            for (i, ri) in r.iter().enumerate() {
                // snap r_i into [0,1) or (0,1] by an integer shift
                let shift = if self.open[i] {
                    ri.ceil().to_integer() - 1
                } else {
                    ri.floor().to_integer()
                };
                let shift = i64::try_from(&shift).expect("lattice coordinate overflow");
                point = point.sub(&self.generators[i].scaled(shift));
            }
            points.push(point);
            // odometer over the diagonal moduli
            let mut pos = d;
            let advanced = loop {
                if pos == 0 {
                    break false;
                }
                pos -= 1;
                if y[pos] + 1 < diag[pos] {
                    y[pos] += 1;
                    for later in &mut y[pos + 1..] {
                        *later = 0;
                    }
                    break true;
                }
            };
            if !advanced {
                break;
            }
        }
        points.sort();
        points
    }
}

/// Generators of the cone of feasible directions at vertex `index`:
/// primitive representatives of the extreme rays among the difference
/// vectors toward the other vertices.
pub fn vertex_cone_generators(p: &Polytope, index: usize) -> Vec<LatticeVector> {
    let vertices = p.vertices();
    assert!(index < vertices.len());
    let v = &vertices[index];
    let mut rays = std::collections::BTreeSet::new();
    for (j, w) in vertices.iter().enumerate() {
        if j != index {
            rays.insert(primitive(&w.sub(v)));
        }
    }
    let rays: Vec<LatticeVector> = rays.into_iter().collect();
    rays.iter()
        .enumerate()
        .filter(|&(k, ray)| {
            let others: Vec<LatticeVector> = rays
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, r)| r.clone())
                .collect();
            nonneg_combination(&others, ray).is_none()
        })
        .map(|(_, ray)| ray.clone())
        .collect()
}

/// Generators `(v_i, 1)` of the cone over the polytope, one per vertex,
/// deliberately not primitivized: the dilation grading lives in the last
/// coordinate.
pub fn cone_over_generators(p: &Polytope) -> Vec<LatticeVector> {
    p.vertices().iter().map(|v| v.extended(1)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::vec_i;

    fn cone(gens: &[&[i64]]) -> SimplicialCone {
        SimplicialCone::new(gens.iter().map(|g| vec_i(g))).unwrap()
    }

    #[test]
    fn dependent_generators_are_rejected() {
        assert_eq!(
            SimplicialCone::new([vec_i(&[1, 1]), vec_i(&[2, 2])]).unwrap_err(),
            Error::DependentGenerators
        );
        assert_eq!(
            SimplicialCone::new([vec_i(&[0, 0])]).unwrap_err(),
            Error::DependentGenerators
        );
    }

    #[test]
    fn unimodular_parallelepipeds_hold_one_point() {
        let c = cone(&[&[1, 0], &[0, 1]]);
        assert_eq!(c.parallelepiped_points(), vec![vec_i(&[0, 0])]);
        assert_eq!(c.lattice_index(), BigInt::from(1));
        // opening both facets slides the box to the far corner
        let open =
            SimplicialCone::with_open_flags(vec![vec_i(&[1, 0]), vec_i(&[0, 1])], vec![true, true])
                .unwrap();
        assert_eq!(open.parallelepiped_points(), vec![vec_i(&[1, 1])]);
        let mixed = SimplicialCone::with_open_flags(
            vec![vec_i(&[1, 0]), vec_i(&[0, 1])],
            vec![true, false],
        )
        .unwrap();
        assert_eq!(mixed.parallelepiped_points(), vec![vec_i(&[1, 0])]);
    }

    #[test]
    fn index_two_cone_has_two_points() {
        let c = cone(&[&[1, 1], &[1, -1]]);
        assert_eq!(c.lattice_index(), BigInt::from(2));
        assert_eq!(
            c.parallelepiped_points(),
            vec![vec_i(&[0, 0]), vec_i(&[1, 0])]
        );
    }

    #[test]
    fn lower_dimensional_boxes_live_in_their_span() {
        // a single generator with content 2: two residues along the ray
        let c = cone(&[&[2, 4, 6]]);
        assert_eq!(c.lattice_index(), BigInt::from(2));
        assert_eq!(
            c.parallelepiped_points(),
            vec![vec_i(&[0, 0, 0]), vec_i(&[1, 2, 3])]
        );
        let primitive_ray = cone(&[&[1, 2, 3]]);
        assert_eq!(
            primitive_ray.parallelepiped_points(),
            vec![vec_i(&[0, 0, 0])]
        );
    }

    #[test]
    fn zero_dimensional_cone_is_the_origin() {
        let c = SimplicialCone::new([]).unwrap();
        assert_eq!(c.parallelepiped_points(), vec![LatticeVector::zeros(0)]);
        assert_eq!(c.lattice_index(), BigInt::from(1));
    }

    /// Literal definition of the half-open parallelepiped, by scanning a
    /// box and solving for the coefficients.
    fn parallelepiped_by_scan(c: &SimplicialCone) -> Vec<LatticeVector> {
        let d = c.dim();
        if d == 0 {
            return vec![LatticeVector::zeros(0)];
        }
        let ambient = c.generators()[0].len();
        let mut lo = vec![0i64; ambient];
        let mut hi = vec![0i64; ambient];
        for g in c.generators() {
            for i in 0..ambient {
                if g.get(i) > 0 {
                    hi[i] += g.get(i);
                } else {
                    lo[i] += g.get(i);
                }
            }
        }
        let mut out = Vec::new();
        let mut cursor = lo.clone();
        'scan: loop {
            let x = LatticeVector::new(cursor.iter().copied());
            if let Some(r) = solve_columns(c.generators(), &x) {
                let zero = num_rational::BigRational::from_integer(0.into());
                let one = num_rational::BigRational::from_integer(1.into());
                let inside = r.iter().zip(c.open_flags()).all(|(ri, &open)| {
                    if open {
                        *ri > zero && *ri <= one
                    } else {
                        *ri >= zero && *ri < one
                    }
                });
                if inside {
                    out.push(x);
                }
            }
            for i in (0..ambient).rev() {
                if cursor[i] < hi[i] {
                    cursor[i] += 1;
                    cursor[(i + 1)..ambient].copy_from_slice(&lo[(i + 1)..ambient]);
                    continue 'scan;
                }
            }
            break;
        }
        out.sort();
        out
    }

    #[test]
    fn enumeration_matches_the_scan_and_the_index() {
        struct Rng(u64);
        impl Rng {
            fn next(&mut self) -> u64 {
                let mut x = self.0;
                x ^= x << 13;
                x ^= x >> 7;
                x ^= x << 17;
                self.0 = x;
                x
            }
            fn range(&mut self, lo: i64, hi: i64) -> i64 {
                lo + (self.next() % (hi - lo + 1) as u64) as i64
            }
        }
        let mut rng = Rng(0x0dd_ba11_2468_ace0);
        let mut done = 0;
        while done < 30 {
            let ambient = rng.range(1, 3) as usize;
            let d = rng.range(1, ambient as i64) as usize;
            let gens: Vec<LatticeVector> = (0..d)
                .map(|_| LatticeVector::new((0..ambient).map(|_| rng.range(-3, 3))))
                .collect();
            if rank_of(&gens) < d {
                continue;
            }
            done += 1;
            let open: Vec<bool> = (0..d).map(|_| rng.range(0, 1) == 1).collect();
            let c = SimplicialCone::with_open_flags(gens, open).unwrap();
            let fast = c.parallelepiped_points();
            let slow = parallelepiped_by_scan(&c);
            assert_eq!(fast, slow, "cone {c:?}");
            assert_eq!(
                BigInt::from(fast.len()),
                c.lattice_index(),
                "count vs index for {c:?}"
            );
        }
    }

    #[test]
    fn square_vertex_cones_drop_the_diagonal() {
        let p = Polytope::new([
            vec_i(&[0, 0]),
            vec_i(&[1, 0]),
            vec_i(&[0, 1]),
            vec_i(&[1, 1]),
        ])
        .unwrap();
        let gens = vertex_cone_generators(&p, 0);
        assert_eq!(gens, vec![vec_i(&[0, 1]), vec_i(&[1, 0])]);
        // at the far corner everything points back
        let far = vertex_cone_generators(&p, 3);
        assert_eq!(far, vec![vec_i(&[-1, 0]), vec_i(&[0, -1])]);
    }

    #[test]
    fn difference_vectors_are_primitivized_but_cone_over_is_not() {
        let p = Polytope::new([vec_i(&[0]), vec_i(&[2])]).unwrap();
        assert_eq!(vertex_cone_generators(&p, 0), vec![vec_i(&[1])]);
        assert_eq!(vertex_cone_generators(&p, 1), vec![vec_i(&[-1])]);
        assert_eq!(
            cone_over_generators(&p),
            vec![vec_i(&[0, 1]), vec_i(&[2, 1])]
        );
    }

    #[test]
    fn simplex_vertex_cone_in_three_dimensions() {
        let p = Polytope::new([
            vec_i(&[0, 0, 0]),
            vec_i(&[1, 0, 0]),
            vec_i(&[0, 1, 0]),
            vec_i(&[0, 0, 1]),
        ])
        .unwrap();
        let gens = vertex_cone_generators(&p, 3);
        assert_eq!(gens.len(), 3);
        for g in &gens {
            assert_eq!(g.get(2), -1);
        }
    }
}
