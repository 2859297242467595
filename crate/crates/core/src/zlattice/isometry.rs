//! Isometry testing by backtracking over short-vector images.
//!
//! To decide whether (L, G_L) ≅ (M, G_M), each basis vector of L must map
//! to a vector of M of the same norm, compatible with all inner products
//! fixed so far. The search is exhaustive, so a `None` answer is a proof of
//! non-isometry. Stops at the first isometry found.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::matrix::RatMat;
use crate::rat::Rational;

use super::reduce::lll_gram;
use super::ZLattice;

/// Integer matrix U with Uᵗ·G_M·U = G_L, if the lattices are isometric.
pub fn isometry(l: &ZLattice, m: &ZLattice) -> Option<Vec<Vec<BigInt>>> {
    if l.rank() != m.rank() {
        return None;
    }
    let n = l.rank();
    if n == 0 {
        return Some(Vec::new());
    }
    if l.det() != m.det() {
        return None;
    }

    // Search against an LLL-reduced source Gram (smaller diagonal entries,
    // hence fewer candidate images), then undo the reduction.
    let red = lll_gram(l.gram());
    let target = red.gram.clone();

    let max_diag = (0..n).map(|i| target[(i, i)].clone()).max().unwrap();
    let sv = m.short_vectors(&max_diag).ok()?;
    // Candidate images, both signs.
    let mut candidates: Vec<(Vec<BigInt>, Rational)> = Vec::with_capacity(2 * sv.len());
    for (v, norm) in sv.iter() {
        candidates.push((v.clone(), norm.clone()));
        candidates.push((v.iter().map(|c| -c).collect(), norm.clone()));
    }

    let mut chosen: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    let mut gw: Vec<Vec<Rational>> = Vec::with_capacity(n); // G_M · w for chosen w
    let found = backtrack(&target, m.gram(), &candidates, &mut chosen, &mut gw);
    if !found {
        return None;
    }

    // Columns of U' are the chosen images (for the reduced source basis).
    let u_red: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| chosen[j][i].clone()).collect())
        .collect();
    // U = U' · T⁻¹ where T is the reduction transform.
    let t = RatMat::from_fn(n, n, |i, j| Rational::from_integer(red.transform[i][j].clone()));
    let t_inv = t.inverse().expect("unimodular transform is invertible");
    let u = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = Rational::zero();
                    for k in 0..n {
                        acc += Rational::from_integer(u_red[i][k].clone()) * &t_inv[(k, j)];
                    }
                    debug_assert!(acc.is_integer());
                    acc.to_integer()
                })
                .collect::<Vec<BigInt>>()
        })
        .collect::<Vec<_>>();

    // Exact verification: Uᵗ G_M U = G_L.
    let um = RatMat::from_fn(n, n, |i, j| Rational::from_integer(u[i][j].clone()));
    debug_assert_eq!(um.transpose().mul(m.gram()).mul(&um), *l.gram());
    Some(u)
}

fn backtrack(
    target: &RatMat,
    gram_m: &RatMat,
    candidates: &[(Vec<BigInt>, Rational)],
    chosen: &mut Vec<Vec<BigInt>>,
    gw: &mut Vec<Vec<Rational>>,
) -> bool {
    let k = chosen.len();
    let n = target.nrows();
    if k == n {
        return true;
    }
    'cand: for (v, norm) in candidates {
        if *norm != target[(k, k)] {
            continue;
        }
        for j in 0..k {
            let ip: Rational = v
                .iter()
                .zip(gw[j].iter())
                .map(|(c, g)| Rational::from_integer(c.clone()) * g)
                .sum();
            if ip != target[(k, j)] {
                continue 'cand;
            }
        }
        let gv: Vec<Rational> = (0..n)
            .map(|i| {
                let mut acc = Rational::zero();
                for (jj, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        acc += &gram_m[(i, jj)] * Rational::from_integer(c.clone());
                    }
                }
                acc
            })
            .collect();
        chosen.push(v.clone());
        gw.push(gv);
        if backtrack(target, gram_m, candidates, chosen, gw) {
            return true;
        }
        chosen.pop();
        gw.pop();
    }
    false
}

/// Deterministic pseudo-random element of GL_n(ℤ) built from shear and
/// permutation moves; used by tests for basis-change invariance checks.
pub fn unimodular_sample(n: usize, seed: u64) -> Vec<Vec<BigInt>> {
    let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    if n < 2 {
        return u;
    }
    for _ in 0..3 * n {
        let a = (next() as usize) % n;
        let mut b = (next() as usize) % n;
        if a == b {
            b = (b + 1) % n;
        }
        let c = BigInt::from((next() % 5) as i64 - 2);
        // column op: col_a += c · col_b
        for row in u.iter_mut() {
            let add = &c * &row[b];
            row[a] = &row[a] + add;
        }
        if next() % 4 == 0 {
            for row in u.iter_mut() {
                row.swap(a, b);
            }
        }
    }
    u
}
