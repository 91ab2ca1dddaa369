//! Exact linear algebra over the rationals and the integers.
//!
//! Everything downstream of the polytope geometry funnels through the
//! primitives here: rank and nullspace computations for facet normals,
//! a Phase-I simplex (Bland's rule, so termination is unconditional) for
//! cone-membership and vertex tests, an integer diagonalization used to
//! enumerate fundamental parallelepipeds coset by coset, and fraction-free
//! Bareiss determinants as an independent route to lattice indices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::lattice::LatticeVector;

fn big(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn vector_row(v: &LatticeVector) -> Vec<BigRational> {
    v.coords().iter().map(|&x| big(x)).collect()
}

/// Row-reduce in place; returns the pivot column of each nonzero row.
fn reduce(rows: &mut [Vec<BigRational>]) -> Vec<usize> {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..width {
        let Some(src) = (row..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(row, src);
        let lead = rows[row][col].clone();
        for x in &mut rows[row] {
            *x /= &lead;
        }
        for i in 0..rows.len() {
            if i != row && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                for c in 0..width {
                    let delta = &factor * &rows[row][c];
                    rows[i][c] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank_of(vectors: &[LatticeVector]) -> usize {
    let mut rows: Vec<Vec<BigRational>> = vectors.iter().map(vector_row).collect();
    reduce(&mut rows).len()
}

/// Clear denominators and common integer content; panics if a coordinate
/// leaves the machine range (geometry in this crate never gets close).
pub fn integer_scaled(row: &[BigRational]) -> LatticeVector {
    let mut lcm = BigInt::one();
    for x in row {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = row.iter().map(|x| (x * &lcm).to_integer()).collect();
    let mut content = BigInt::zero();
    for x in &ints {
        content = content.gcd(x);
    }
    if !content.is_zero() && !content.is_one() {
        for x in &mut ints {
            *x /= &content;
        }
    }
    LatticeVector::new(
        ints.iter()
            .map(|x| x.to_i64().expect("lattice coordinate overflow")),
    )
}

/// Strip the common content from a nonzero integer vector.
pub fn primitive(v: &LatticeVector) -> LatticeVector {
    let mut g: i64 = 0;
    for &x in v.coords() {
        g = g.gcd(&x);
    }
    if g <= 1 {
        return v.clone();
    }
    LatticeVector::new(v.coords().iter().map(|&x| x / g))
}

/// Primitive integer basis of `{x : <row, x> = 0 for every row}`.
pub fn nullspace_integer(rows_in: &[LatticeVector], width: usize) -> Vec<LatticeVector> {
    let mut rows: Vec<Vec<BigRational>> = rows_in.iter().map(vector_row).collect();
    for r in &rows {
        assert_eq!(r.len(), width);
    }
    let pivots = reduce(&mut rows);
    let mut basis = Vec::new();
    for free in 0..width {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![BigRational::zero(); width];
        v[free] = BigRational::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -rows[r][free].clone();
        }
        basis.push(integer_scaled(&v));
    }
    basis
}

/// Solve `W r = target` for independent columns `W`; `None` when the
/// target leaves their span.
pub fn solve_columns(
    columns: &[LatticeVector],
    target: &LatticeVector,
) -> Option<Vec<BigRational>> {
    let height = target.len();
    let d = columns.len();
    let mut rows: Vec<Vec<BigRational>> = (0..height)
        .map(|i| {
            let mut r: Vec<BigRational> = columns.iter().map(|c| big(c.get(i))).collect();
            r.push(big(target.get(i)));
            r
        })
        .collect();
    let pivots = reduce(&mut rows);
    if pivots.contains(&d) {
        return None;
    }
    assert_eq!(pivots.len(), d, "dependent columns passed to solve_columns");
    let mut out = vec![BigRational::zero(); d];
    for (r, &p) in pivots.iter().enumerate() {
        out[p] = rows[r][d].clone();
    }
    Some(out)
}

/// A nonnegative rational solution of `columns * x = target`, or `None`
/// when the target lies outside the cone spanned by the columns.
///
/// Phase-I simplex on `[columns | I]` with artificial costs, entering and
/// leaving variables both chosen by Bland's least-index rule.
pub fn nonneg_combination(
    columns: &[LatticeVector],
    target: &LatticeVector,
) -> Option<Vec<BigRational>> {
    let m = target.len();
    let n = columns.len();
    for c in columns {
        assert_eq!(c.len(), m);
    }
    let total = n + m;
    let mut tableau: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row: Vec<BigRational> = columns.iter().map(|c| big(c.get(i))).collect();
            row.extend((0..m).map(|j| if j == i { big(1) } else { big(0) }));
            row
        })
        .collect();
    let mut rhs: Vec<BigRational> = (0..m).map(|i| big(target.get(i))).collect();
    for i in 0..m {
        if rhs[i].is_negative() {
            rhs[i] = -rhs[i].clone();
            for x in &mut tableau[i] {
                *x = -x.clone();
            }
            tableau[i][n + i] = big(1);
        }
    }
    let mut basis: Vec<usize> = (n..total).collect();
    let cost = |j: usize| -> BigRational {
        if j >= n {
            big(1)
        } else {
            big(0)
        }
    };
    loop {
        // Bland: first column with negative reduced cost enters
        let mut entering = None;
        for j in 0..total {
            if basis.contains(&j) {
                continue;
            }
            let mut z = BigRational::zero();
            for i in 0..m {
                if !tableau[i][j].is_zero() {
                    z += cost(basis[i]) * &tableau[i][j];
                }
            }
            if cost(j) < z {
                entering = Some(j);
                break;
            }
        }
        let Some(enter) = entering else { break };
        // ratio test, ties to the smallest basic index
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if tableau[i][enter].is_positive() {
                let better = match leave {
                    None => true,
                    Some(l) => {
                        let cur = &rhs[i] / &tableau[i][enter];
                        let best = &rhs[l] / &tableau[l][enter];
                        cur < best || (cur == best && basis[i] < basis[l])
                    }
                };
                if better {
                    leave = Some(i);
                }
            }
        }
        let row = leave.expect("phase-one objective is bounded below");
        let lead = tableau[row][enter].clone();
        for x in &mut tableau[row] {
            *x /= &lead;
        }
        rhs[row] /= &lead;
        for i in 0..m {
            if i != row && !tableau[i][enter].is_zero() {
                let factor = tableau[i][enter].clone();
                for c in 0..total {
                    let delta = &factor * &tableau[row][c];
                    tableau[i][c] -= delta;
                }
                let delta = &factor * &rhs[row];
                rhs[i] -= delta;
            }
        }
        basis[row] = enter;
    }
    let mut residual = BigRational::zero();
    for i in 0..m {
        if basis[i] >= n {
            residual += &rhs[i];
        }
    }
    if !residual.is_zero() {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for i in 0..m {
        if basis[i] < n {
            x[basis[i]] = rhs[i].clone();
        }
    }
    Some(x)
}

/// An integer linear form `g` with `<g, w> >= 1` for every generator, or
/// `None` when no such form exists (the cone is not pointed). Doubles as
/// the grading used to truncate series expansions.
pub fn positive_functional(generators: &[LatticeVector]) -> Option<LatticeVector> {
    let m = generators.len();
    if m == 0 {
        return Some(LatticeVector::zeros(0));
    }
    let width = generators[0].len();
    // feasibility of G y >= 1: columns of [G, -G, -I] against all-ones,
    // with y split into nonnegative halves
    let mut columns = Vec::with_capacity(2 * width + m);
    for j in 0..width {
        columns.push(LatticeVector::new(generators.iter().map(|g| g.get(j))));
    }
    for j in 0..width {
        columns.push(LatticeVector::new(generators.iter().map(|g| -g.get(j))));
    }
    for i in 0..m {
        columns.push(LatticeVector::new(
            (0..m).map(|k| if k == i { -1 } else { 0 }),
        ));
    }
    let ones = LatticeVector::new((0..m).map(|_| 1));
    let x = nonneg_combination(&columns, &ones)?;
    let y: Vec<BigRational> = (0..width).map(|j| &x[j] - &x[width + j]).collect();
    let mut lcm = BigInt::one();
    for v in &y {
        lcm = lcm.lcm(v.denom());
    }
    let g = LatticeVector::new(y.iter().map(|v| {
        (v * BigRational::from_integer(lcm.clone()))
            .to_integer()
            .to_i64()
            .expect("lattice coordinate overflow")
    }));
    for w in generators {
        debug_assert!(g.dot(w) >= 1);
    }
    Some(g)
}

/// Integer diagonalization `U W V = D` of independent integer columns.
///
/// Returns the positive diagonal entries of `D` and the first `d` columns
/// of `U^{-1}`; only row operations touch `U^{-1}`, and `V` is discarded.
/// The products `U^{-1} e_i` are exactly what coset enumeration over
/// `Z^N ∩ span(W) / (W Z^d)` needs: the cosets are
/// `Σ y_i U^{-1} e_i + W Z^d` with `y_i` ranging over `Z / D_ii`.
pub fn diagonalize_columns(columns: &[LatticeVector]) -> (Vec<i64>, Vec<LatticeVector>) {
    let d = columns.len();
    if d == 0 {
        return (Vec::new(), Vec::new());
    }
    let height = columns[0].len();
    assert!(d <= height, "more columns than ambient dimension");
    let mut a: Vec<Vec<BigInt>> = (0..height)
        .map(|i| columns.iter().map(|c| BigInt::from(c.get(i))).collect())
        .collect();
    // u_inv starts as the identity; row ops on `a` become column ops here
    let mut u_inv: Vec<Vec<BigInt>> = (0..height)
        .map(|i| {
            (0..height)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    let swap_rows = |a: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, i: usize, j: usize| {
        a.swap(i, j);
        for row in u.iter_mut() {
            row.swap(i, j);
        }
    };
    // a_i -= f * a_j  =>  column j of u_inv += f * column i
    let add_row =
        |a: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, i: usize, j: usize, f: &BigInt| {
            for c in 0..a[0].len() {
                let delta = f * &a[j][c];
                a[i][c] -= delta;
            }
            for row in u.iter_mut() {
                let delta = f * &row[i];
                row[j] += delta;
            }
        };
    let negate_row = |a: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, i: usize| {
        for x in &mut a[i] {
            *x = -x.clone();
        }
        for row in u.iter_mut() {
            row[i] = -row[i].clone();
        }
    };
    let mut diag = Vec::with_capacity(d);
    for k in 0..d {
        // move some nonzero of the working block into the pivot slot
        let (pi, pj) = (k..height)
            .flat_map(|i| (k..d).map(move |j| (i, j)))
            .find(|&(i, j)| !a[i][j].is_zero())
            .expect("columns are dependent");
        swap_rows(&mut a, &mut u_inv, k, pi);
        if pj != k {
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
        }
        loop {
            // clear column k below the pivot by euclidean steps
            let mut dirty = false;
            for i in (k + 1)..height {
                while !a[i][k].is_zero() {
                    let f = a[i][k].clone() / a[k][k].clone();
                    add_row(&mut a, &mut u_inv, i, k, &f);
                    if !a[i][k].is_zero() {
                        swap_rows(&mut a, &mut u_inv, i, k);
                        dirty = true;
                    }
                }
            }
            // clear row k right of the pivot (column ops, u_inv untouched)
            for j in (k + 1)..d {
                while !a[k][j].is_zero() {
                    let f = a[k][j].clone() / a[k][k].clone();
                    for row in a.iter_mut() {
                        let delta = &f * &row[k];
                        row[j] -= delta;
                    }
                    if !a[k][j].is_zero() {
                        for row in a.iter_mut() {
                            row.swap(k, j);
                        }
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }
        if a[k][k].is_negative() {
            negate_row(&mut a, &mut u_inv, k);
        }
        diag.push(a[k][k].to_i64().expect("lattice index overflow"));
    }
    let carriers = (0..d)
        .map(|j| {
            LatticeVector::new(
                (0..height).map(|i| u_inv[i][j].to_i64().expect("lattice coordinate overflow")),
            )
        })
        .collect();
    (diag, carriers)
}

/// Fraction-free determinant of a square integer matrix (Bareiss).
fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = ((k + 1)..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = &t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Gcd of the absolute maximal minors of the column matrix: the index of
/// the sublattice the columns span inside the lattice points of their
/// rational span. Computed independently of `diagonalize_columns` so the
/// two can be played against each other.
pub fn maximal_minor_gcd(columns: &[LatticeVector]) -> BigInt {
    let d = columns.len();
    if d == 0 {
        return BigInt::one();
    }
    let height = columns[0].len();
    assert!(d <= height);
    let mut subset: Vec<usize> = (0..d).collect();
    let mut g = BigInt::zero();
    loop {
        let m: Vec<Vec<BigInt>> = subset
            .iter()
            .map(|&i| columns.iter().map(|c| BigInt::from(c.get(i))).collect())
            .collect();
        g = g.gcd(&determinant(m));
        // next d-subset of {0..height} in lexicographic order
        let mut pos = d;
        loop {
            if pos == 0 {
                return g;
            }
            pos -= 1;
            if subset[pos] + 1 <= height - (d - pos) {
                subset[pos] += 1;
                for later in (pos + 1)..d {
                    subset[later] = subset[later - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Integer normal, inside the span of `basis`, that kills every vector in
/// `orthogonal_to`; `None` when the solution is not one-dimensional.
pub fn normal_in_span(
    basis: &[LatticeVector],
    orthogonal_to: &[LatticeVector],
) -> Option<LatticeVector> {
    let rows: Vec<LatticeVector> = orthogonal_to
        .iter()
        .map(|w| LatticeVector::new(basis.iter().map(|b| w.dot(b))))
        .collect();
    let kernel = nullspace_integer(&rows, basis.len());
    if kernel.len() != 1 {
        return None;
    }
    let c = &kernel[0];
    let mut n = LatticeVector::zeros(basis[0].len());
    for (j, b) in basis.iter().enumerate() {
        n = n.add(&b.scaled(c.get(j)));
    }
    Some(primitive(&n))
}
