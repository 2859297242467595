//! Exact LLL reduction operating on Gram matrices.
//!
//! Works directly on the Gram matrix (no ambient coordinates needed) and
//! tracks the unimodular change of basis. All Gram-Schmidt data is exact
//! rational, so the Lovász condition is decided without rounding error.
//! Reduction is a preprocessing step for enumeration; correctness of the
//! callers never depends on its quality.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::matrix::RatMat;
use crate::rat::{self, Rational};

pub struct GramReduction {
    /// Reduced Gram matrix Uᵗ·G·U.
    pub gram: RatMat,
    /// Columns are the coordinates of the reduced basis in the input basis.
    pub transform: Vec<Vec<BigInt>>,
}

/// LLL with δ = 99/100 on a positive definite rational Gram matrix.
pub fn lll_gram(gram: &RatMat) -> GramReduction {
    lll_gram_delta(gram, &rat::ratio(99, 100))
}

pub fn lll_gram_delta(gram: &RatMat, delta: &Rational) -> GramReduction {
    let n = gram.nrows();
    let mut g = gram.clone();
    // transform[i][j]: coordinate i of current basis vector j.
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    if n <= 1 {
        return GramReduction { gram: g, transform: u };
    }

    let mut mu = vec![vec![Rational::zero(); n]; n];
    let mut b = vec![Rational::zero(); n];
    let mut kmax = 0usize;
    compute_gs_row(&g, &mut mu, &mut b, 0);

    let mut k = 1usize;
    while k < n {
        if k > kmax {
            kmax = k;
            compute_gs_row(&g, &mut mu, &mut b, k);
        }
        size_reduce(&mut g, &mut u, &mut mu, k, k - 1);
        let lhs = &b[k] + &mu[k][k - 1] * &mu[k][k - 1] * &b[k - 1];
        if lhs >= delta * &b[k - 1] {
            for l in (0..k.saturating_sub(1)).rev() {
                size_reduce(&mut g, &mut u, &mut mu, k, l);
            }
            k += 1;
        } else {
            swap_step(&mut g, &mut u, &mut mu, &mut b, k, kmax);
            k = k.max(2) - 1;
        }
    }

    GramReduction { gram: g, transform: u }
}

/// Gram-Schmidt data for row k from the Gram matrix:
/// mu[k][j] = (b_k·b*_j)/B_j and B_k = ‖b*_k‖².
fn compute_gs_row(g: &RatMat, mu: &mut [Vec<Rational>], b: &mut [Rational], k: usize) {
    for j in 0..k {
        let mut s = g[(k, j)].clone();
        for i in 0..j {
            s -= &mu[k][i] * &mu[j][i] * &b[i];
        }
        mu[k][j] = s / &b[j];
    }
    let mut s = g[(k, k)].clone();
    for i in 0..k {
        s -= &mu[k][i] * &mu[k][i] * &b[i];
    }
    b[k] = s;
}

/// b_k ← b_k − q·b_l with q = round(mu[k][l]), updating Gram, transform, mu.
fn size_reduce(
    g: &mut RatMat,
    u: &mut [Vec<BigInt>],
    mu: &mut [Vec<Rational>],
    k: usize,
    l: usize,
) {
    let q = rat::round_nearest(&mu[k][l]);
    if q.is_zero() {
        return;
    }
    let qr = Rational::from_integer(q.clone());
    // Gram update: row/column k.
    let n = g.nrows();
    let gkk = g[(k, k)].clone() - rat::rat(2) * &qr * &g[(k, l)] + &qr * &qr * &g[(l, l)];
    for j in 0..n {
        if j == k {
            continue;
        }
        let v = g[(k, j)].clone() - &qr * &g[(l, j)];
        g[(k, j)] = v.clone();
        g[(j, k)] = v;
    }
    g[(k, k)] = gkk;
    for row in u.iter_mut() {
        let sub = &q * &row[l];
        row[k] = &row[k] - sub;
    }
    for j in 0..l {
        let sub = &qr * &mu[l][j];
        mu[k][j] -= sub;
    }
    mu[k][l] -= qr;
}

/// Swap basis vectors k−1 and k, updating all Gram-Schmidt data in place.
fn swap_step(
    g: &mut RatMat,
    u: &mut [Vec<BigInt>],
    mu: &mut [Vec<Rational>],
    b: &mut [Rational],
    k: usize,
    kmax: usize,
) {
    let n = g.nrows();
    // Swap rows/columns k−1, k of the Gram matrix and transform columns.
    for j in 0..n {
        let a = g[(k - 1, j)].clone();
        let c = g[(k, j)].clone();
        g[(k - 1, j)] = c;
        g[(k, j)] = a;
    }
    for i in 0..n {
        let a = g[(i, k - 1)].clone();
        let c = g[(i, k)].clone();
        g[(i, k - 1)] = c;
        g[(i, k)] = a;
    }
    for row in u.iter_mut() {
        row.swap(k - 1, k);
    }
    for j in 0..k.saturating_sub(1) {
        let tmp = mu[k][j].clone();
        mu[k][j] = mu[k - 1][j].clone();
        mu[k - 1][j] = tmp;
    }
    let m = mu[k][k - 1].clone();
    let b_new = &b[k] + &m * &m * &b[k - 1];
    mu[k][k - 1] = &m * &b[k - 1] / &b_new;
    b[k] = &b[k - 1] * &b[k] / &b_new;
    b[k - 1] = b_new;
    for i in k + 1..=kmax {
        let t = mu[i][k].clone();
        mu[i][k] = &mu[i][k - 1] - &m * &t;
        mu[i][k - 1] = &t + &mu[k][k - 1] * &mu[i][k];
    }
}
