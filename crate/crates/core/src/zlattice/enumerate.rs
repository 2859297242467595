//! Complete short-vector enumeration.
//!
//! Strategy: exact LLL preprocessing, exact rational computation of the
//! Fincke-Pohst quadratic-form coefficients, then a floating-point
//! depth-first search whose radius is inflated so no true vector can be
//! pruned, and finally exact rational re-verification of every surviving
//! candidate. A candidate that fails the exact check is discarded; the
//! inflation margin (1e-6 relative) exceeds the accumulated f64 error by
//! many orders of magnitude at the dimensions handled here.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::matrix::RatMat;
use crate::rat::{self, Rational};

use super::reduce::lll_gram;

/// All lattice vectors x ≠ 0 with xᵗ·G·x ≤ bound, one representative per
/// ± pair (first nonzero coordinate positive), in the canonical order
/// (norm ascending, then coordinates lexicographically).
pub fn enumerate_up_to(gram: &RatMat, bound: &Rational) -> Vec<(Vec<BigInt>, Rational)> {
    let n = gram.nrows();
    if n == 0 || !bound.is_positive() {
        return Vec::new();
    }
    let red = lll_gram(gram);
    let coeffs = fincke_pohst_coeffs(&red.gram);

    let qf: Vec<Vec<f64>> = coeffs
        .iter()
        .map(|row| row.iter().map(rat::to_f64).collect())
        .collect();
    let bound_f = rat::to_f64(bound) * (1.0 + 1e-6) + 1e-9;

    let mut search = Search {
        n,
        qf: &qf,
        bound_f,
        x: vec![0i64; n],
        partial: vec![0.0; n + 1],
        candidates: Vec::new(),
    };
    search.descend(n - 1);
    let candidates = search.candidates;

    // Exact verification in integer arithmetic on the original coordinates.
    let den = rat::denominator_lcm(gram.row_iter_all());
    let gz: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| (&gram[(i, j)] * Rational::from_integer(den.clone())).to_integer()).collect())
        .collect();
    let mut out = Vec::new();
    for x in candidates {
        // Original coordinates y = U·x.
        let y: Vec<BigInt> = (0..n)
            .map(|i| (0..n).map(|j| &red.transform[i][j] * BigInt::from(x[j])).sum())
            .collect();
        if y.iter().all(|c| c.is_zero()) {
            continue;
        }
        let norm_num = quadratic_form_int(&gz, &y);
        let norm = Rational::new(norm_num, den.clone());
        if &norm <= bound {
            out.push((normalize_sign(y), norm));
        }
    }
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    out.dedup();
    out
}

/// Flips the sign so the first nonzero coordinate is positive.
pub fn normalize_sign(y: Vec<BigInt>) -> Vec<BigInt> {
    match y.iter().find(|c| !c.is_zero()) {
        Some(c) if c.is_negative() => y.into_iter().map(|c| -c).collect(),
        _ => y,
    }
}

/// xᵗ·G·x for an integer matrix and integer vector.
pub fn quadratic_form_int(g: &[Vec<BigInt>], x: &[BigInt]) -> BigInt {
    let n = x.len();
    // i64/i128 fast path covers every desk-scale lattice in this crate.
    let small = x.iter().all(|c| c.to_i64().map_or(false, |v| v.abs() < 1 << 20))
        && g.iter().flatten().all(|c| c.to_i64().map_or(false, |v| v.abs() < (1 << 40)));
    if small {
        let xi: Vec<i128> = x.iter().map(|c| c.to_i64().unwrap() as i128).collect();
        let mut acc: i128 = 0;
        for i in 0..n {
            if xi[i] == 0 {
                continue;
            }
            let mut row = 0i128;
            for j in 0..n {
                if xi[j] != 0 {
                    row += g[i][j].to_i64().unwrap() as i128 * xi[j];
                }
            }
            acc += xi[i] * row;
        }
        return BigInt::from(acc);
    }
    let mut acc = BigInt::zero();
    for i in 0..n {
        if x[i].is_zero() {
            continue;
        }
        let mut row = BigInt::zero();
        for j in 0..n {
            row += &g[i][j] * &x[j];
        }
        acc += &x[i] * row;
    }
    acc
}

/// Exact Fincke-Pohst coefficients: Q(x) = Σ_i A[i][i]·(x_i + Σ_{j>i} A[i][j]·x_j)².
fn fincke_pohst_coeffs(gram: &RatMat) -> Vec<Vec<Rational>> {
    let n = gram.nrows();
    let mut a: Vec<Vec<Rational>> = (0..n).map(|i| gram.row(i).to_vec()).collect();
    for i in 0..n {
        assert!(a[i][i].is_positive(), "Gram matrix is not positive definite");
        for j in i + 1..n {
            let saved = a[i][j].clone();
            a[j][i] = saved.clone(); // saved original for the Schur update
            a[i][j] = &saved / &a[i][i];
        }
        for k in i + 1..n {
            for l in k..n {
                let sub = &a[k][i] * &a[i][l];
                a[k][l] -= sub;
            }
        }
    }
    a
}

struct Search<'a> {
    n: usize,
    qf: &'a [Vec<f64>],
    bound_f: f64,
    x: Vec<i64>,
    partial: Vec<f64>, // partial[i] = contribution of levels > i
    candidates: Vec<Vec<i64>>,
}

impl Search<'_> {
    fn descend(&mut self, level: usize) {
        // Center from already-fixed coordinates above this level.
        let mut c = 0.0;
        for j in level + 1..self.n {
            c += self.qf[level][j] * self.x[j] as f64;
        }
        let remaining = self.bound_f - self.partial[level + 1];
        if remaining < 0.0 {
            return;
        }
        let radius = (remaining / self.qf[level][level]).max(0.0).sqrt() * (1.0 + 1e-9) + 1e-9;
        assert!(radius.is_finite(), "degenerate quadratic form in enumeration");
        let lo = (-c - radius).ceil() as i64;
        let hi = (-c + radius).floor() as i64;
        for xi in lo..=hi {
            let t = xi as f64 + c;
            let contrib = self.qf[level][level] * t * t;
            let total = self.partial[level + 1] + contrib;
            if total > self.bound_f {
                continue;
            }
            self.x[level] = xi;
            if level == 0 {
                if self.x.iter().any(|&v| v != 0) {
                    self.candidates.push(self.x.clone());
                }
            } else {
                self.partial[level] = total;
                self.descend(level - 1);
            }
        }
        self.x[level] = 0;
    }
}

impl RatMat {
    /// All entries, for denominator scans.
    pub(crate) fn row_iter_all(&self) -> impl Iterator<Item = &Rational> {
        (0..self.nrows()).flat_map(move |i| self.row(i).iter())
    }
}

/// Naive complete scan over the coordinate box |x_i| ≤ ⌊√(bound·(G⁻¹)_ii)⌋,
/// entirely in exact arithmetic. Exponential and only suitable for tiny
/// ranks; kept as an independent cross-check for the pruned enumerator.
pub fn naive_box_scan(gram: &RatMat, bound: &Rational) -> Vec<(Vec<BigInt>, Rational)> {
    let n = gram.nrows();
    if n == 0 || !bound.is_positive() {
        return Vec::new();
    }
    let inv = gram.inverse().expect("positive definite Gram is invertible");
    let limits: Vec<i64> = (0..n)
        .map(|i| {
            let b = bound * &inv[(i, i)];
            rat::floor_sqrt(&b).to_i64().expect("box limit fits in i64")
        })
        .collect();
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    scan_rec(gram, bound, &limits, &mut x, 0, &mut out);
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    out
}

fn scan_rec(
    gram: &RatMat,
    bound: &Rational,
    limits: &[i64],
    x: &mut Vec<i64>,
    level: usize,
    out: &mut Vec<(Vec<BigInt>, Rational)>,
) {
    if level == x.len() {
        if x.iter().all(|&v| v == 0) {
            return;
        }
        let xv: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
        let mut norm = BigRational::zero();
        for i in 0..x.len() {
            for j in 0..x.len() {
                norm += &gram[(i, j)] * Rational::from_integer(&xv[i] * &xv[j]);
            }
        }
        if &norm <= bound {
            let normed = normalize_sign(xv);
            let pair = (normed, norm);
            if !out.contains(&pair) {
                out.push(pair);
            }
        }
        return;
    }
    for v in -limits[level]..=limits[level] {
        x[level] = v;
        scan_rec(gram, bound, limits, x, level + 1, out);
    }
    x[level] = 0;
}
