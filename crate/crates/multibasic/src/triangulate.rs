//! Placing triangulations and half-open decompositions of pointed cones.

use crate::cone::SimplicialCone;
use crate::error::Result;
use crate::lattice::LatticeVector;
use crate::linalg::{normal_in_span, rank_of};

/// Triangulate `cone(generators)` into simplicial pieces by placing the
/// generators one at a time. Each piece is a list of indices into the
/// generator list; all pieces have full rank, their union is the whole
/// cone, and their interiors are disjoint. Generators that fall inside
/// the cone built so far contribute nothing and appear in no piece.
pub fn triangulate(generators: &[LatticeVector]) -> Vec<Vec<usize>> {
    for g in generators {
        assert!(!g.is_zero(), "zero generator");
    }
    let mut pieces: Vec<Vec<usize>> = Vec::new();
    let mut basis: Vec<LatticeVector> = Vec::new();
    for (t, g) in generators.iter().enumerate() {
        basis.push(g.clone());
        let grows = rank_of(&basis) == basis.len();
        if !grows {
            basis.pop();
        }
        if grows {
            // cone over the old complex from the new generator
            if pieces.is_empty() {
                pieces.push(vec![t]);
            } else {
                for p in &mut pieces {
                    p.push(t);
                }
            }
            continue;
        }
        // find boundary facets (shared by exactly one piece) visible from g
        let mut additions: Vec<Vec<usize>> = Vec::new();
        let facet_count = {
            let mut count: std::collections::BTreeMap<Vec<usize>, usize> =
                std::collections::BTreeMap::new();
            for p in &pieces {
                for &off in p {
                    let facet: Vec<usize> = p.iter().copied().filter(|&j| j != off).collect();
                    *count.entry(facet).or_insert(0) += 1;
                }
            }
            count
        };
        for p in &pieces {
            for &off in p {
                let facet: Vec<usize> = p.iter().copied().filter(|&j| j != off).collect();
                if facet_count[&facet] != 1 {
                    continue;
                }
                let spanning: Vec<LatticeVector> =
                    facet.iter().map(|&j| generators[j].clone()).collect();
                let normal = normal_in_span(&basis, &spanning)
                    .expect("facet of a simplicial piece has a unique normal");
                // point the normal away from the piece
                let outward = if normal.dot(&generators[off]) < 0 {
                    normal
                } else {
                    normal.neg()
                };
                if outward.dot(g) > 0 {
                    let mut fresh = facet.clone();
                    fresh.push(t);
                    additions.push(fresh);
                }
            }
        }
        pieces.extend(additions);
    }
    pieces
}

/// Facets of one simplicial piece: for each generator, the inward normal
/// of the facet spanned by the others.
fn inward_normals(piece_gens: &[LatticeVector]) -> Vec<LatticeVector> {
    (0..piece_gens.len())
        .map(|i| {
            let others: Vec<LatticeVector> = piece_gens
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let n = normal_in_span(piece_gens, &others)
                .expect("facet of a simplicial piece has a unique normal");
            if n.dot(&piece_gens[i]) > 0 {
                n
            } else {
                n.neg()
            }
        })
        .collect()
}

/// Decompose `cone(generators)` into half-open simplicial cones whose
/// lattice points partition the cone's — every point lands in exactly one
/// piece, boundaries included.
///
/// A generic point `α` in the interior of the first piece decides every
/// flag: a facet is kept open exactly when `α` lies strictly on its far
/// side, which makes the pieces pairwise disjoint and leaves no gaps.
/// `α = Σ p^{r-1-j} w_j` over the first piece's generators stays interior
/// for every integer `p ≥ 2`, and `<n, α>` is a nonzero polynomial in `p`
/// for each facet normal `n`, so scanning small `p` always finds a
/// generic one.
pub fn half_open_decompose(generators: &[LatticeVector]) -> Result<Vec<SimplicialCone>> {
    if generators.is_empty() {
        return Ok(vec![SimplicialCone::new([])?]);
    }
    let pieces = triangulate(generators);
    if pieces.is_empty() {
        return Ok(vec![SimplicialCone::new([])?]);
    }
    let rank = pieces[0].len();
    let piece_gens: Vec<Vec<LatticeVector>> = pieces
        .iter()
        .map(|p| p.iter().map(|&j| generators[j].clone()).collect())
        .collect();
    let normals: Vec<Vec<LatticeVector>> = piece_gens.iter().map(|g| inward_normals(g)).collect();
    let first = &piece_gens[0];
    let mut scale = 2i64;
    let alpha = loop {
        let mut weight = 1i64;
        let mut candidate = LatticeVector::zeros(generators[0].len());
        for j in (0..rank).rev() {
            candidate = candidate.add(&first[j].scaled(weight));
            weight = weight
                .checked_mul(scale)
                .expect("lattice coordinate overflow");
        }
        if normals.iter().flatten().all(|n| n.dot(&candidate) != 0) {
            break candidate;
        }
        scale += 1;
        assert!(scale < 1_000, "no generic interior point found");
    };
    let mut out = Vec::with_capacity(pieces.len());
    for (gens, ns) in piece_gens.into_iter().zip(&normals) {
        let open: Vec<bool> = ns.iter().map(|n| n.dot(&alpha) < 0).collect();
        out.push(SimplicialCone::with_open_flags(gens, open)?);
    }
    Ok(out)
}
