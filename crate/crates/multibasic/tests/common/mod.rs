#![allow(dead_code)]

//! Shared across integration tests: a tiny deterministic generator and
//! a fixed corpus of small lattice polytopes in the nonnegative orthant
//! (ambient dimension up to 3, coordinates up to 4, at most 8 vertices).

use multibasic::{Error, LatticeVector, Polytope};

pub struct XorShift64 {
    state: u64,
}

impl XorShift64 {
    pub fn new(seed: u64) -> Self {
        XorShift64 { state: seed.max(1) }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.state = x;
        x
    }

    /// uniform-ish draw from 0..n
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    pub fn coordinate(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// Sample points with coordinates in 0..=4 and peel off non-vertices
/// until the hull description is tight; resample when the result
/// degenerates to a single point.
pub fn random_polytope(rng: &mut XorShift64, ambient: usize) -> Polytope {
    loop {
        let count = 3 + rng.below(4) as usize;
        let mut points: Vec<LatticeVector> = (0..count)
            .map(|_| LatticeVector::new((0..ambient).map(|_| rng.coordinate(0, 4))))
            .collect();
        points.sort();
        points.dedup();
        while points.len() >= 2 {
            match Polytope::new(points.clone()) {
                Ok(p) => {
                    if p.dim() >= 1 {
                        return p;
                    }
                    break;
                }
                Err(Error::NotAVertex { index }) => {
                    points.remove(index);
                }
                Err(_) => break,
            }
        }
    }
}

/// The fixed test corpus: 22 polytopes (4 intervals, 9 polygons, 9
/// three-dimensional ambient), deterministic because the seed is.
pub fn corpus() -> Vec<Polytope> {
    let mut rng = XorShift64::new(0x9e3779b97f4a7c15);
    let mut out = Vec::new();
    for _ in 0..4 {
        out.push(random_polytope(&mut rng, 1));
    }
    for _ in 0..9 {
        out.push(random_polytope(&mut rng, 2));
    }
    for _ in 0..9 {
        out.push(random_polytope(&mut rng, 3));
    }
    out
}

/// A small random lattice shift with coordinates in the given range.
pub fn random_shift(rng: &mut XorShift64, ambient: usize, lo: i64, hi: i64) -> LatticeVector {
    LatticeVector::new((0..ambient).map(|_| rng.coordinate(lo, hi)))
}
