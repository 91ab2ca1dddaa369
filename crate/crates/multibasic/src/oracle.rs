//! Brute-force reference implementations.
//!
//! Everything here is deliberately naive: facet systems found by trying
//! every candidate hyperplane through vertices, lattice points found by
//! scanning bounding boxes, series expansions done term by term. The
//! clever machinery elsewhere in the crate is required to agree with
//! these routines on every input the test suites can afford.

use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use crate::laurent::LaurentPolynomial;
use crate::linalg::{normal_in_span, nullspace_integer, rank_of};
use crate::polytope::Polytope;
use crate::rational::FactoredRationalFunction;

/// A finite system `<a, x> = b` / `<a, x> >= b` cutting out a polyhedron.
/// Dilating by `n` scales every right-hand side.
///
/// The constraint list may contain supporting hyperplanes that are not
/// facets; those are satisfied with slack by every relative-interior
/// point and with equality by no full set, so membership and strict
/// membership both come out right anyway.
#[derive(Clone, Debug)]
pub struct FacetSystem {
    pub equations: Vec<(LatticeVector, i64)>,
    pub inequalities: Vec<(LatticeVector, i64)>,
}

impl FacetSystem {
    /// Supporting-hyperplane description of a polytope, found by brute
    /// force: every `dim`-subset of vertices proposes a hyperplane inside
    /// the affine hull, kept when all vertices fall on one side.
    pub fn of_polytope(p: &Polytope) -> FacetSystem {
        let vertices = p.vertices();
        let first = &vertices[0];
        let directions: Vec<LatticeVector> = vertices[1..].iter().map(|v| v.sub(first)).collect();
        let ambient = p.ambient_dim();
        let mut equations = Vec::new();
        for n in nullspace_integer(&directions, ambient) {
            let b = n.dot(first);
            equations.push((n, b));
        }
        let basis = p.direction_basis();
        let mut seen = std::collections::BTreeSet::new();
        let mut inequalities = Vec::new();
        let d = p.dim();
        if d > 0 {
            for subset in subsets_of_size(vertices.len(), d) {
                let anchor = &vertices[subset[0]];
                let spanning: Vec<LatticeVector> = subset[1..]
                    .iter()
                    .map(|&j| vertices[j].sub(anchor))
                    .collect();
                let Some(normal) = normal_in_span(&basis, &spanning) else {
                    continue;
                };
                let values: Vec<i64> = vertices.iter().map(|v| normal.dot(v)).collect();
                let pivot = normal.dot(anchor);
                let lo = *values.iter().min().unwrap();
                let hi = *values.iter().max().unwrap();
                let (oriented, bound) = if pivot == lo && pivot < hi {
                    (normal, lo)
                } else if pivot == hi && pivot > lo {
                    (normal.neg(), -hi)
                } else {
                    continue;
                };
                if seen.insert((oriented.clone(), bound)) {
                    inequalities.push((oriented, bound));
                }
            }
        }
        FacetSystem {
            equations,
            inequalities,
        }
    }

    /// Supporting-hyperplane description of `apex + cone(generators)`.
    /// Hyperplanes pass through the apex; candidates come from
    /// `(rank-1)`-subsets of the generators.
    pub fn of_shifted_cone(apex: &LatticeVector, generators: &[LatticeVector]) -> FacetSystem {
        let ambient = apex.len();
        let mut equations = Vec::new();
        for n in nullspace_integer(generators, ambient) {
            let b = n.dot(apex);
            equations.push((n, b));
        }
        let d = rank_of(generators);
        let mut basis: Vec<LatticeVector> = Vec::new();
        for g in generators {
            basis.push(g.clone());
            if rank_of(&basis) < basis.len() {
                basis.pop();
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut inequalities = Vec::new();
        if d > 0 {
            for subset in subsets_of_size(generators.len(), d - 1) {
                let spanning: Vec<LatticeVector> =
                    subset.iter().map(|&j| generators[j].clone()).collect();
                let Some(normal) = normal_in_span(&basis, &spanning) else {
                    continue;
                };
                let values: Vec<i64> = generators.iter().map(|g| normal.dot(g)).collect();
                let oriented = if values.iter().all(|&v| v >= 0) && values.iter().any(|&v| v > 0) {
                    normal
                } else if values.iter().all(|&v| v <= 0) && values.iter().any(|&v| v < 0) {
                    normal.neg()
                } else {
                    continue;
                };
                let b = oriented.dot(apex);
                if seen.insert((oriented.clone(), b)) {
                    inequalities.push((oriented, b));
                }
            }
        }
        FacetSystem {
            equations,
            inequalities,
        }
    }

    pub fn contains_dilate(&self, x: &LatticeVector, n: i64) -> bool {
        let rhs = |b: i64| b.checked_mul(n).expect("lattice coordinate overflow");
        self.equations.iter().all(|(a, b)| a.dot(x) == rhs(*b))
            && self.inequalities.iter().all(|(a, b)| a.dot(x) >= rhs(*b))
    }

    /// Relative interior of the `n`-th dilate: equations tight, every
    /// inequality strict.
    pub fn strictly_contains_dilate(&self, x: &LatticeVector, n: i64) -> bool {
        let rhs = |b: i64| b.checked_mul(n).expect("lattice coordinate overflow");
        self.equations.iter().all(|(a, b)| a.dot(x) == rhs(*b))
            && self.inequalities.iter().all(|(a, b)| a.dot(x) > rhs(*b))
    }

    pub fn contains(&self, x: &LatticeVector) -> bool {
        self.contains_dilate(x, 1)
    }

    pub fn strictly_contains(&self, x: &LatticeVector) -> bool {
        self.strictly_contains_dilate(x, 1)
    }
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if current[pos] + 1 <= n - (k - pos) {
                current[pos] += 1;
                for later in (pos + 1)..k {
                    current[later] = current[later - 1] + 1;
                }
                break;
            }
        }
    }
}

fn box_scan<F>(lo: &[i64], hi: &[i64], mut accept: F) -> Vec<LatticeVector>
where
    F: FnMut(&LatticeVector) -> bool,
{
    let dim = lo.len();
    let mut out = Vec::new();
    let mut cursor: Vec<i64> = lo.to_vec();
    if dim == 0 {
        let origin = LatticeVector::zeros(0);
        if accept(&origin) {
            out.push(origin);
        }
        return out;
    }
    'scan: loop {
        let point = LatticeVector::new(cursor.iter().copied());
        if accept(&point) {
            out.push(point);
        }
        for i in (0..dim).rev() {
            if cursor[i] < hi[i] {
                cursor[i] += 1;
                cursor[(i + 1)..dim].copy_from_slice(&lo[(i + 1)..dim]);
                continue 'scan;
            }
        }
        return out;
    }
}

/// All lattice points of the `n`-th dilate, by scanning the scaled
/// bounding box of the vertices. Points come out in lexicographic order.
pub fn enumerate_dilate(p: &Polytope, n: i64) -> Vec<LatticeVector> {
    assert!(n >= 0);
    let fs = FacetSystem::of_polytope(p);
    let (lo, hi) = dilated_box(p, n);
    box_scan(&lo, &hi, |x| fs.contains_dilate(x, n))
}

/// Lattice points of the relative interior of the `n`-th dilate.
pub fn enumerate_dilate_interior(p: &Polytope, n: i64) -> Vec<LatticeVector> {
    assert!(n >= 0);
    let fs = FacetSystem::of_polytope(p);
    let (lo, hi) = dilated_box(p, n);
    box_scan(&lo, &hi, |x| fs.strictly_contains_dilate(x, n))
}

fn dilated_box(p: &Polytope, n: i64) -> (Vec<i64>, Vec<i64>) {
    let ambient = p.ambient_dim();
    let mut lo = vec![i64::MAX; ambient];
    let mut hi = vec![i64::MIN; ambient];
    for v in p.vertices() {
        for (i, &x) in v.coords().iter().enumerate() {
            let scaled = x.checked_mul(n).expect("lattice coordinate overflow");
            lo[i] = lo[i].min(scaled);
            hi[i] = hi[i].max(scaled);
        }
    }
    (lo, hi)
}

/// Integer-point transform of a finite point set.
pub fn sigma_of_points(arity: usize, points: &[LatticeVector]) -> LaurentPolynomial {
    LaurentPolynomial::from_points(arity, points.iter().cloned())
}

/// Lattice points of `apex + cone(generators)` with `<grading, x>` at most
/// `bound` (every generator must have positive grading height, so the
/// slice is finite). `interior` restricts to the relative interior.
pub fn cone_points_graded(
    apex: &LatticeVector,
    generators: &[LatticeVector],
    grading: &LatticeVector,
    bound: i64,
    interior: bool,
) -> Vec<LatticeVector> {
    let ambient = apex.len();
    for g in generators {
        assert!(
            grading.dot(g) >= 1,
            "grading must be positive on the generators"
        );
    }
    let base = grading.dot(apex);
    let Some(budget) = bound.checked_sub(base) else {
        panic!("lattice coordinate overflow");
    };
    if budget < 0 {
        return Vec::new();
    }
    let fs = FacetSystem::of_shifted_cone(apex, generators);
    let mut lo = vec![0i64; ambient];
    let mut hi = vec![0i64; ambient];
    for i in 0..ambient {
        let reach = generators
            .iter()
            .map(|g| g.get(i).abs())
            .max()
            .unwrap_or(0)
            .checked_mul(budget)
            .expect("lattice coordinate overflow");
        lo[i] = apex.get(i) - reach;
        hi[i] = apex.get(i) + reach;
    }
    box_scan(&lo, &hi, |x| {
        grading.dot(x) <= bound
            && if interior {
                fs.strictly_contains(x)
            } else {
                fs.contains(x)
            }
    })
}

/// Truncated expansion of a factored rational function in the completion
/// picked out by `grading`: all terms whose grading value is at most
/// `bound`. A factor `1 - q^a` with positive height expands as
/// `1 + q^a + q^{2a} + ...`; negative height first rewrites through
/// `1/(1 - q^a) = -q^{-a}/(1 - q^{-a})`. Height zero admits no expansion
/// in this completion at all.
pub fn expand_truncated_graded(
    r: &FactoredRationalFunction,
    grading: &LatticeVector,
    bound: i64,
) -> Result<LaurentPolynomial> {
    let arity = r.arity();
    assert_eq!(grading.len(), arity);
    let truncate = |p: &LaurentPolynomial| -> Result<LaurentPolynomial> {
        let mut out = LaurentPolynomial::zero(arity);
        for (e, c) in p.terms() {
            if grading.dot(e) <= bound {
                out = out.add(&LaurentPolynomial::monomial(e.clone(), c.clone()))?;
            }
        }
        Ok(out)
    };
    let mut acc = truncate(r.numerator())?;
    for factor in r.denominator() {
        let height = factor.exponent.dot(grading);
        if height == 0 {
            return Err(Error::ZeroHeightDenominatorFactor {
                exponent: factor.exponent.clone(),
            });
        }
        let direction = if height > 0 {
            factor.exponent.clone()
        } else {
            factor.exponent.neg()
        };
        let step = height.abs();
        for _ in 0..factor.multiplicity {
            if height < 0 {
                acc = truncate(&acc.mul_monomial(&direction, &num_bigint::BigInt::from(-1)))?;
            }
            let mut next = LaurentPolynomial::zero(arity);
            for (e, c) in acc.terms() {
                let room = bound - e.dot(grading);
                if room < 0 {
                    continue;
                }
                let kmax = room / step;
                for k in 0..=kmax {
                    next = next.add(&LaurentPolynomial::monomial(
                        e.add(&direction.scaled(k)),
                        c.clone(),
                    ))?;
                }
            }
            acc = next;
        }
    }
    Ok(acc)
}

/// Truncated expansion graded by the last variable (the dilation variable
/// of an Ehrhart series).
pub fn expand_truncated(r: &FactoredRationalFunction, bound: i64) -> Result<LaurentPolynomial> {
    let arity = r.arity();
    assert!(arity > 0);
    expand_truncated_graded(r, &LatticeVector::unit(arity, arity - 1), bound)
}
